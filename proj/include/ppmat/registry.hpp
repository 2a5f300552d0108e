#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "verify.hpp"

namespace ppmat {

/// Parameters of a named check; unset fields fall back to the check's defaults.
struct CheckArgs {
    std::optional<int> k, n, m, N;
    std::optional<Partition> shape;
    std::optional<std::string> mode;  // uh_restricted: rows | entries
    std::optional<int> bound;         // uh_restricted
    PPStatistic uh = &up_hook_volume;
};

struct NamedCheck {
    std::string name;
    std::string summary;
    std::function<CheckResult(const CheckArgs&)> run;
};

namespace detail {

inline int arg(const std::optional<int>& v, int fallback) { return v.value_or(fallback); }

inline RestrictMode restrict_mode(const CheckArgs& a) {
    const std::string mode = a.mode.value_or("entries");
    require(mode == "rows" || mode == "entries", "mode must be rows or entries");
    return mode == "rows" ? RestrictMode::Rows : RestrictMode::Entries;
}

}  // namespace detail

/// Every named check in declaration order.
inline const std::vector<NamedCheck>& check_registry() {
    using detail::arg;
    static const std::vector<NamedCheck> registry = {
        {"macmahon_box", "boxed volume generating function and count",
         [](const CheckArgs& a) { return check_macmahon_box(arg(a.k, 2), arg(a.n, 2), arg(a.m, 2)); }},
        {"infinite_volume", "volume generating function of all plane partitions",
         [](const CheckArgs& a) { return check_infinite_volume(arg(a.N, 6)); }},
        {"qschur", "boxed volume as a principally specialized Schur polynomial",
         [](const CheckArgs& a) { return check_qschur(arg(a.k, 2), arg(a.n, 2), arg(a.m, 2)); }},
        {"multivariate", "descent-weighted sum over PP(inf,n,m)",
         [](const CheckArgs& a) { return check_multivariate(arg(a.n, 2), arg(a.m, 2), arg(a.N, 4)); }},
        {"cauchy_type", "Cauchy-type identity for refined dual Grothendieck polynomials",
         [](const CheckArgs& a) { return check_cauchy_type(arg(a.n, 2), arg(a.m, 2), arg(a.N, 4)); }},
        {"gl", "sum of dual Grothendieck polynomials with at most n rows",
         [](const CheckArgs& a) { return check_gl(arg(a.n, 2), arg(a.m, 2), arg(a.N, 3)); }},
        {"uh_des", "(des, up-hook volume) generating function",
         [](const CheckArgs& a) { return check_uh_des(arg(a.n, 2), arg(a.m, 2), arg(a.N, 5), a.uh); }},
        {"equidistribution", "(des, uh) and (trace, volume) share a distribution",
         [](const CheckArgs& a) { return check_equidistribution(arg(a.N, 4), a.uh); }},
        {"uh_restricted", "up-hook volume with bounded rows or entries",
         [](const CheckArgs& a) {
             return check_uh_restricted(detail::restrict_mode(a), arg(a.bound, 2), arg(a.N, 5), a.uh);
         }},
        {"corner_volume", "corner volume generating functions",
         [](const CheckArgs& a) { return check_corner_volume(arg(a.k, 2), arg(a.n, 2), arg(a.m, 2), arg(a.N, 5)); }},
        {"gjt", "dual Grothendieck Jacobi-Trudi determinant",
         [](const CheckArgs& a) { return check_gjt(arg(a.k, 3), arg(a.n, 3), arg(a.m, 3)); }},
        {"schur_jt", "Schur polynomials by dual Jacobi-Trudi",
         [](const CheckArgs& a) { return check_schur_jt(arg(a.k, 3), arg(a.n, 3), arg(a.m, 3)); }},
        {"rectangle", "rectangular g as a Schur polynomial and the branching sum",
         [](const CheckArgs& a) { return check_rectangle(arg(a.k, 2), arg(a.n, 2), arg(a.m, 2)); }},
        {"g_refined", "degree balance, top component and symmetry of g(x;z)",
         [](const CheckArgs& a) { return check_g_refined(arg(a.k, 2), arg(a.n, 2), arg(a.m, 2)); }},
        {"frobenius", "strict tableaux counted by words",
         [](const CheckArgs& a) { return check_frobenius(arg(a.n, 2), arg(a.m, 2)); }},
        {"gexp", "square-free coefficients of g count strict tableaux",
         [](const CheckArgs& a) { return check_gexp(a.shape.value_or(Partition{2, 1}), arg(a.n, 4)); }},
        {"greene", "shape of the strict tableau of a word",
         [](const CheckArgs& a) { return check_greene(arg(a.n, 4), arg(a.m, 3)); }},
        {"dalpha", "descent enumeration D_alpha(k,n,m)",
         [](const CheckArgs& a) { return check_dalpha(arg(a.k, 3), arg(a.n, 2), arg(a.m, 3), arg(a.N, 4)); }},
        {"dalpha_infinite", "product formula for D_alpha(inf,n,m)",
         [](const CheckArgs& a) { return check_dalpha_infinite(arg(a.n, 2), arg(a.m, 2), arg(a.N, 4)); }},
        {"superadditivity", "superadditivity and scaling of uh and corner volume",
         [](const CheckArgs& a) { return check_superadditivity(arg(a.k, 2), arg(a.n, 2), arg(a.m, 2), arg(a.bound, 3)); }},
    };
    return registry;
}

inline const NamedCheck* find_check(const std::string& name) {
    const auto& reg = check_registry();
    const auto it = std::find_if(reg.begin(), reg.end(), [&](const NamedCheck& c) { return c.name == name; });
    return it == reg.end() ? nullptr : &*it;
}

/// Runs a check, turning an escaping exception into a failed result.
inline CheckResult run_check(const NamedCheck& check, const CheckArgs& args) {
    try {
        return check.run(args);
    } catch (const std::exception& e) {
        CheckResult r;
        r.check_name = check.name;
        r.pass = false;
        r.first_diff = Mismatch{"exception", e.what(), ""};
        return r;
    }
}

/// Throws InvalidArgument for an unknown name.
inline CheckResult run_named(const std::string& name, const CheckArgs& args = {}) {
    const NamedCheck* check = find_check(name);
    detail::require(check != nullptr, "unknown check: " + name);
    return run_check(*check, args);
}

struct GridEntry {
    std::string name;
    CheckArgs args;
};

/// Runs the entries on up to `workers` threads; results come back in entry order.
inline std::vector<CheckResult> run_grid(const std::vector<GridEntry>& grid, int workers) {
    std::vector<CheckResult> results(grid.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) results[i] = run_named(grid[i].name, grid[i].args);
    };
    const int threads = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(grid.size(), 1)));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace ppmat
