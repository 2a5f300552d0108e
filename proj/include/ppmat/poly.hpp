#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ppmat {

using BigInt = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/// Ordered variable families, e.g. x[1..n], z[1..m], q, t. A variable's flat
/// index is fixed by the order families were added.
class VarTable {
public:
    struct Family {
        std::string name;
        int arity = 1;
        bool indexed = true;  // false: a single scalar variable printed without subscript
        int offset = 0;

        friend bool operator==(const Family&, const Family&) = default;
    };

    VarTable() = default;

    VarTable& indexed(std::string name, int arity) { return push(std::move(name), arity, true); }
    VarTable& scalar(std::string name) { return push(std::move(name), 1, false); }

    std::shared_ptr<const VarTable> share() const { return std::make_shared<const VarTable>(*this); }

    int size() const noexcept { return size_; }
    const std::vector<Family>& families() const noexcept { return families_; }

    bool has_family(std::string_view name) const noexcept { return find(name) != nullptr; }

    const Family& family(std::string_view name) const {
        const Family* f = find(name);
        detail::require(f != nullptr, "unknown variable family: " + std::string(name));
        return *f;
    }

    /// Flat index of name_i (1-based i; scalars take i = 1).
    int index(std::string_view name, int i = 1) const {
        const Family& f = family(name);
        detail::require(i >= 1 && i <= f.arity, "variable index out of range for family " + f.name);
        return f.offset + i - 1;
    }

    std::string variable_name(int flat) const {
        for (const auto& f : families_)
            if (flat >= f.offset && flat < f.offset + f.arity)
                return f.indexed ? f.name + std::to_string(flat - f.offset + 1) : f.name;
        throw InvalidArgument("variable index out of range");
    }

    std::vector<std::string> variable_names() const {
        std::vector<std::string> out;
        for (int v = 0; v < size_; ++v) out.push_back(variable_name(v));
        return out;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.families_ == b.families_; }

private:
    VarTable& push(std::string name, int arity, bool indexed) {
        detail::require(arity >= 0, "family arity must be nonnegative");
        detail::require(!has_family(name), "duplicate variable family: " + name);
        families_.push_back({std::move(name), arity, indexed, size_});
        size_ += arity;
        return *this;
    }

    const Family* find(std::string_view name) const noexcept {
        for (const auto& f : families_)
            if (f.name == name) return &f;
        return nullptr;
    }

    std::vector<Family> families_;
    int size_ = 0;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Sparse polynomial with exact integer coefficients over a VarTable.
/// No zero coefficient is ever stored; terms iterate in ascending graded-lex order.
class MultiPoly {
public:
    using Terms = std::map<Exponent, BigInt, GradedLex>;

    explicit MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {
        detail::require(vars_ != nullptr, "polynomial needs a variable table");
    }

    static MultiPoly constant(VarTablePtr vars, const BigInt& c) {
        MultiPoly p(std::move(vars));
        p.add_term(p.one_exponent(), c);
        return p;
    }

    static MultiPoly one(VarTablePtr vars) { return constant(std::move(vars), 1); }

    static MultiPoly monomial(VarTablePtr vars, Exponent e, const BigInt& c = 1) {
        MultiPoly p(std::move(vars));
        detail::require(static_cast<int>(e.size()) == p.vars_->size(), "exponent length does not match variable table");
        for (int x : e) detail::require(x >= 0, "exponents must be nonnegative");
        p.add_term(e, c);
        return p;
    }

    static MultiPoly variable(VarTablePtr vars, std::string_view family, int i = 1) {
        Exponent e(static_cast<std::size_t>(vars->size()), 0);
        e[static_cast<std::size_t>(vars->index(family, i))] = 1;
        return monomial(std::move(vars), std::move(e));
    }

    const VarTable& vars() const noexcept { return *vars_; }
    const VarTablePtr& vars_ptr() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t num_terms() const noexcept { return terms_.size(); }

    Exponent one_exponent() const { return Exponent(static_cast<std::size_t>(vars_->size()), 0); }

    BigInt coefficient(const Exponent& e) const {
        const auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Highest total degree present; -1 for the zero polynomial.
    int degree() const noexcept { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

    BigInt sum_of_coefficients() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    void add_term(const Exponent& e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    MultiPoly operator-() const {
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const BigInt& s) {
        MultiPoly out(a.vars_);
        if (s == 0) return out;
        for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, c * s);
        return out;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return *a.vars_ == *b.vars_ && a.terms_ == b.terms_;
    }

    void require_same_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
            throw InvalidArgument("polynomials live over different variable tables");
    }

    /// e.g. "1 + 2*x1*z1 + q^3"; "0" for the zero polynomial.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first)
                s += c < 0 ? "-" : "";
            else
                s += c < 0 ? " - " : " + ";
            first = false;
            const std::string mono = monomial_string(e);
            if (mono.empty()) {
                s += mag.str();
            } else {
                if (mag != 1) s += mag.str() + "*";
                s += mono;
            }
        }
        return s;
    }

    /// "x1*z2^2"; empty for the constant monomial.
    std::string monomial_string(const Exponent& e) const {
        std::string s;
        for (int v = 0; v < static_cast<int>(e.size()); ++v) {
            const int x = e[static_cast<std::size_t>(v)];
            if (x == 0) continue;
            if (!s.empty()) s += '*';
            s += vars_->variable_name(v);
            if (x > 1) s += '^' + std::to_string(x);
        }
        return s;
    }

private:
    VarTablePtr vars_;
    Terms terms_;
};

// ---------------------------------------------------------------------------
// Truncation
// ---------------------------------------------------------------------------

/// Finite window into a power series: keep monomials with total degree
/// <= max_total_degree (if set) and per-family degree <= each family cap.
struct Truncation {
    std::optional<int> max_total_degree;
    std::map<std::string, int> family_caps;

    static Truncation total(int n) {
        detail::require(n >= 0, "truncation degree must be nonnegative");
        return Truncation{n, {}};
    }

    static Truncation family(std::string name, int n) {
        detail::require(n >= 0, "truncation degree must be nonnegative");
        Truncation t;
        t.family_caps.emplace(std::move(name), n);
        return t;
    }

    bool admits(const Exponent& e, const VarTable& vars) const {
        if (max_total_degree && total_degree(e) > *max_total_degree) return false;
        for (const auto& [name, cap] : family_caps) {
            const auto& f = vars.family(name);
            int d = 0;
            for (int i = 0; i < f.arity; ++i) d += e[static_cast<std::size_t>(f.offset + i)];
            if (d > cap) return false;
        }
        return true;
    }

    /// True if powers of the monomial eventually leave the window.
    bool bounds_powers_of(const Exponent& e, const VarTable& vars) const {
        if (max_total_degree && total_degree(e) > 0) return true;
        for (const auto& [name, cap] : family_caps) {
            const auto& f = vars.family(name);
            for (int i = 0; i < f.arity; ++i)
                if (e[static_cast<std::size_t>(f.offset + i)] > 0) return true;
        }
        return false;
    }
};

inline MultiPoly truncate(const MultiPoly& p, const Truncation& t) {
    MultiPoly out(p.vars_ptr());
    for (const auto& [e, c] : p.terms())
        if (t.admits(e, p.vars())) out.add_term(e, c);
    return out;
}

inline MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }

namespace detail {

inline MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const Truncation* t) {
    a.require_same_vars(b);
    MultiPoly out(a.vars_ptr());
    Exponent e(static_cast<std::size_t>(a.vars().size()), 0);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            if (t && !t->admits(e, a.vars())) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

}  // namespace detail

inline MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return detail::multiply(a, b, nullptr); }

inline MultiPoly poly_mul_truncated(const MultiPoly& a, const MultiPoly& b, const Truncation& t) {
    return detail::multiply(a, b, &t);
}

inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return poly_mul(a, b); }

/// 1 / (1 - mono) = sum_j mono^j, kept inside the truncation window.
inline MultiPoly geometric_factor(const VarTablePtr& vars, const Exponent& mono, const Truncation& t) {
    detail::require(static_cast<int>(mono.size()) == vars->size(), "exponent length does not match variable table");
    if (total_degree(mono) == 0 || !t.bounds_powers_of(mono, *vars)) throw DomainError("non-invertible truncation");
    MultiPoly out(vars);
    Exponent power(mono.size(), 0);
    while (t.admits(power, *vars)) {
        out.add_term(power, 1);
        for (std::size_t v = 0; v < power.size(); ++v) power[v] += mono[v];
    }
    return out;
}

/// A factor 1/(1 - mono)^multiplicity of a product series.
struct SeriesFactor {
    Exponent mono;
    int multiplicity = 1;
};

/// prod_f 1/(1 - f.mono)^{f.multiplicity}, truncated.
inline MultiPoly product_series(const VarTablePtr& vars, const std::vector<SeriesFactor>& factors, const Truncation& t) {
    MultiPoly out = truncate(MultiPoly::one(vars), t);
    for (const auto& f : factors) {
        detail::require(f.multiplicity >= 0, "factor multiplicity must be nonnegative");
        if (f.multiplicity == 0) continue;
        const MultiPoly g = geometric_factor(vars, f.mono, t);
        for (int r = 0; r < f.multiplicity; ++r) out = poly_mul_truncated(out, g, t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact division and determinants
// ---------------------------------------------------------------------------

/// a / b when b divides a exactly (graded-lex leading-term reduction).
/// Throws std::domain_error if the division is not exact.
inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    detail::require_domain(!b.is_zero(), "division by the zero polynomial");
    const auto& [lead_b, lead_cb] = *b.terms().rbegin();
    MultiPoly quotient(a.vars_ptr());
    MultiPoly rest = a;
    while (!rest.is_zero()) {
        const auto [lead_r, lead_cr] = *rest.terms().rbegin();
        Exponent shift(lead_r.size(), 0);
        for (std::size_t v = 0; v < shift.size(); ++v) {
            shift[v] = lead_r[v] - lead_b[v];
            if (shift[v] < 0) throw DomainError("polynomial division is not exact");
        }
        if (lead_cr % lead_cb != 0) throw DomainError("polynomial division is not exact");
        const MultiPoly step = MultiPoly::monomial(a.vars_ptr(), shift, lead_cr / lead_cb);
        quotient += step;
        rest -= step * b;
    }
    return quotient;
}

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

namespace detail {

inline void require_square(const PolyMatrix& m) {
    for (const auto& row : m) require(row.size() == m.size(), "determinant needs a square matrix");
}

inline MultiPoly laplace(const PolyMatrix& m, std::vector<int>& cols, std::size_t row, const VarTablePtr& vars) {
    if (row == m.size()) return MultiPoly::one(vars);
    MultiPoly out(vars);
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const int c = cols[k];
        const MultiPoly& entry = m[row][static_cast<std::size_t>(c)];
        if (!entry.is_zero()) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
            MultiPoly minor = laplace(m, cols, row + 1, vars);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
            if (sign > 0)
                out += entry * minor;
            else
                out -= entry * minor;
        }
        sign = -sign;
    }
    return out;
}

}  // namespace detail

/// Cofactor expansion along rows.
inline MultiPoly determinant_laplace(const PolyMatrix& m, const VarTablePtr& vars) {
    detail::require_square(m);
    std::vector<int> cols(m.size());
    std::iota(cols.begin(), cols.end(), 0);
    return detail::laplace(m, cols, 0, vars);
}

/// Fraction-free (Bareiss) elimination with row pivoting.
inline MultiPoly determinant_bareiss(PolyMatrix m, const VarTablePtr& vars) {
    detail::require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return MultiPoly::one(vars);
    MultiPoly prev = MultiPoly::one(vars);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return MultiPoly(vars);
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

/// Exact determinant: cofactor expansion up to 4x4, Bareiss above.
inline MultiPoly determinant(const PolyMatrix& m, const VarTablePtr& vars) {
    return m.size() <= 4 ? determinant_laplace(m, vars) : determinant_bareiss(m, vars);
}

// ---------------------------------------------------------------------------
// Family-level transforms
// ---------------------------------------------------------------------------

/// Sets every variable of `family` to 1 and drops the family from the table.
inline MultiPoly set_family_to_one(const MultiPoly& p, std::string_view family) {
    const auto& f = p.vars().family(family);
    VarTable reduced;
    for (const auto& g : p.vars().families()) {
        if (g.name == f.name) continue;
        if (g.indexed)
            reduced.indexed(g.name, g.arity);
        else
            reduced.scalar(g.name);
    }
    MultiPoly out(reduced.share());
    for (const auto& [e, c] : p.terms()) {
        Exponent r;
        r.reserve(e.size());
        for (int v = 0; v < static_cast<int>(e.size()); ++v)
            if (v < f.offset || v >= f.offset + f.arity) r.push_back(e[static_cast<std::size_t>(v)]);
        out.add_term(r, c);
    }
    return out;
}

/// Re-expresses p over a larger table; every family of p must exist in the
/// target with at least the same arity.
inline MultiPoly embed(const MultiPoly& p, const VarTablePtr& target) {
    MultiPoly out(target);
    for (const auto& [e, c] : p.terms()) {
        Exponent r(static_cast<std::size_t>(target->size()), 0);
        for (const auto& f : p.vars().families()) {
            const auto& g = target->family(f.name);
            detail::require(g.arity >= f.arity, "target family too small for embedding");
            for (int i = 0; i < f.arity; ++i)
                r[static_cast<std::size_t>(g.offset + i)] = e[static_cast<std::size_t>(f.offset + i)];
        }
        out.add_term(r, c);
    }
    return out;
}

/// Applies a permutation to the variables of one family: name_i -> name_{perm[i-1]}.
inline MultiPoly permute_family(const MultiPoly& p, std::string_view family, const std::vector<int>& perm) {
    const auto& f = p.vars().family(family);
    detail::require(static_cast<int>(perm.size()) == f.arity, "permutation length must equal family arity");
    MultiPoly out(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) {
        Exponent r = e;
        for (int i = 0; i < f.arity; ++i)
            r[static_cast<std::size_t>(f.offset + perm[static_cast<std::size_t>(i)] - 1)] =
                e[static_cast<std::size_t>(f.offset + i)];
        out.add_term(r, c);
    }
    return out;
}

/// Terms of total degree exactly d.
inline MultiPoly homogeneous_component(const MultiPoly& p, int d) {
    MultiPoly out(p.vars_ptr());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == d) out.add_term(e, c);
    return out;
}

/// Total degree restricted to one family.
inline int family_degree(const Exponent& e, const VarTable& vars, std::string_view family) {
    const auto& f = vars.family(family);
    int d = 0;
    for (int i = 0; i < f.arity; ++i) d += e[static_cast<std::size_t>(f.offset + i)];
    return d;
}

/// First monomial (graded-lex) where a and b disagree, with both coefficients.
struct PolyDiff {
    Exponent monomial;
    BigInt lhs;
    BigInt rhs;
};

inline std::optional<PolyDiff> first_difference(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b);
    const MultiPoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    const Exponent& e = d.terms().begin()->first;
    return PolyDiff{e, a.coefficient(e), b.coefficient(e)};
}

}  // namespace ppmat
