#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "plane_partition.hpp"
#include "poly.hpp"

namespace ppmat {

/// A finite multiset of evaluation points, each a monomial over a VarTable:
/// the constant 1, a power q^a, or a formal variable z_j.
class ValueList {
public:
    explicit ValueList(VarTablePtr vars) : vars_(std::move(vars)) {}

    /// Appends `count` copies of the constant 1.
    ValueList& ones(int count) {
        detail::require(count >= 0, "ones() needs a nonnegative count");
        for (int r = 0; r < count; ++r) values_.emplace_back(static_cast<std::size_t>(vars_->size()), 0);
        return *this;
    }

    /// Appends var^from, var^{from+1}, ..., var^to.
    ValueList& powers(std::string_view var, int from, int to) {
        detail::require(from >= 0, "powers() needs nonnegative exponents");
        const int idx = vars_->index(var);
        for (int a = from; a <= to; ++a) {
            Exponent e(static_cast<std::size_t>(vars_->size()), 0);
            e[static_cast<std::size_t>(idx)] = a;
            values_.push_back(std::move(e));
        }
        return *this;
    }

    /// Appends every variable of an indexed family.
    ValueList& variables(std::string_view family) {
        const auto& f = vars_->family(family);
        for (int i = 1; i <= f.arity; ++i) {
            Exponent e(static_cast<std::size_t>(vars_->size()), 0);
            e[static_cast<std::size_t>(f.offset + i - 1)] = 1;
            values_.push_back(std::move(e));
        }
        return *this;
    }

    const VarTablePtr& vars() const noexcept { return vars_; }
    const std::vector<Exponent>& values() const noexcept { return values_; }
    int size() const noexcept { return static_cast<int>(values_.size()); }

private:
    VarTablePtr vars_;
    std::vector<Exponent> values_;
};

/// e_0, ..., e_max evaluated at the value list.
inline std::vector<MultiPoly> elementary_all(int max_k, const ValueList& vals) {
    detail::require(max_k >= 0, "elementary degree must be nonnegative");
    std::vector<MultiPoly> e(static_cast<std::size_t>(max_k) + 1, MultiPoly(vals.vars()));
    e[0] = MultiPoly::one(vals.vars());
    int seen = 0;
    for (const auto& v : vals.values()) {
        ++seen;
        const MultiPoly mono = MultiPoly::monomial(vals.vars(), v);
        for (int k = std::min(seen, max_k); k >= 1; --k)
            e[static_cast<std::size_t>(k)] += mono * e[static_cast<std::size_t>(k - 1)];
    }
    return e;
}

/// e_k(vals); zero for k < 0 or k > |vals|.
inline MultiPoly elementary_eval(int k, const ValueList& vals) {
    if (k < 0) return MultiPoly(vals.vars());
    return elementary_all(k, vals)[static_cast<std::size_t>(k)];
}

inline VarTablePtr single_family(std::string_view family, int arity) {
    return VarTable().indexed(std::string(family), arity).share();
}

/// s_lambda(x_1..x_m) as a sum over column-strict fillings of lambda.
inline MultiPoly schur_combinatorial(const Partition& lambda, int m, std::string_view family = "z") {
    const auto vars = single_family(family, m);
    MultiPoly out(vars);
    for (const auto& p : gen_column_strict(lambda, m)) {
        Exponent e(static_cast<std::size_t>(m), 0);
        for (const auto& row : p.rows())
            for (int v : row) ++e[static_cast<std::size_t>(v - 1)];
        out.add_term(e, 1);
    }
    return out;
}

/// s_lambda(vals) by the dual Jacobi-Trudi determinant det[e_{lambda'_i - i + j}].
inline MultiPoly schur_specialized(const Partition& lambda, const ValueList& vals) {
    const Partition conj = lambda.conjugate();
    const int size = lambda.first();
    const int top = conj.first() + size;
    const auto e = elementary_all(std::max(top, 0), vals);
    auto e_at = [&](int k) { return (k < 0 || k > top) ? MultiPoly(vals.vars()) : e[static_cast<std::size_t>(k)]; };
    PolyMatrix m(static_cast<std::size_t>(size));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) m[static_cast<std::size_t>(i - 1)].push_back(e_at(conj.part(i) - i + j));
    return determinant(m, vals.vars());
}

/// Dual Grothendieck g_lambda(z_1..z_m): sum over plane partitions of shape
/// lambda with entries <= m of prod_v z_v^{c_v(pi)}.
inline MultiPoly g_combinatorial(const Partition& lambda, int m, std::string_view family = "z") {
    const auto vars = single_family(family, m);
    MultiPoly out(vars);
    for (const auto& p : gen_pp_shape(lambda, m)) out.add_term(column_counts(p, m), 1);
    return out;
}

/// g_lambda(x; z) over x_1..x_n, z_1..z_m: each descent cell (i,j)
/// contributes x_i z_{pi_ij}.
inline MultiPoly g_refined(const Partition& lambda, int n, int m) {
    const auto vars = VarTable().indexed("x", n).indexed("z", m).share();
    MultiPoly out(vars);
    if (lambda.length() > n) return out;
    for (const auto& p : gen_pp_shape(lambda, m)) {
        Exponent e(static_cast<std::size_t>(n + m), 0);
        for (const Cell& c : descent_set(p)) {
            ++e[static_cast<std::size_t>(c.i - 1)];
            ++e[static_cast<std::size_t>(n + p.at(c) - 1)];
        }
        out.add_term(e, 1);
    }
    return out;
}

/// g_lambda(z) = det[e_{lambda'_i - i + j}(1^{lambda'_i - 1}, z)], one
/// specialization per row.
inline MultiPoly g_jacobi_trudi(const Partition& lambda, int m, std::string_view family = "z") {
    const auto vars = single_family(family, m);
    const Partition conj = lambda.conjugate();
    const int size = lambda.first();
    PolyMatrix mat(static_cast<std::size_t>(size));
    for (int i = 1; i <= size; ++i) {
        const int col = conj.part(i);
        ValueList vals(vars);
        vals.ones(col - 1).variables(family);
        const int top = col - i + size;
        const auto e = elementary_all(std::max(top, 0), vals);
        for (int j = 1; j <= size; ++j) {
            const int k = col - i + j;
            mat[static_cast<std::size_t>(i - 1)].push_back(k < 0 ? MultiPoly(vars) : e[static_cast<std::size_t>(k)]);
        }
    }
    return determinant(mat, vars);
}

/// [x_1 x_2 ... x_n] p for the family's full arity n, every other variable at exponent 0.
inline BigInt square_free_coefficient(const MultiPoly& p, std::string_view family) {
    const auto& f = p.vars().family(family);
    Exponent e = p.one_exponent();
    for (int i = 0; i < f.arity; ++i) e[static_cast<std::size_t>(f.offset + i)] = 1;
    return p.coefficient(e);
}

}  // namespace ppmat
