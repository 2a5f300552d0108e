#pragma once

#include <string>
#include <vector>

#include "registry.hpp"

// Parameter grids for `verify all`. Bump the version whenever a grid changes.

namespace ppmat {

inline constexpr int kGridVersion = 1;

enum class Level { Small, Full };

namespace detail {

inline CheckArgs kn_m(int k, int n, int m) {
    CheckArgs a;
    a.k = k;
    a.n = n;
    a.m = m;
    return a;
}

inline CheckArgs nm_N(int n, int m, int N) {
    CheckArgs a;
    a.n = n;
    a.m = m;
    a.N = N;
    return a;
}

inline CheckArgs only_N(int N) {
    CheckArgs a;
    a.N = N;
    return a;
}

inline void push_boxes(std::vector<GridEntry>& g, const std::string& name, int limit, int N = -1) {
    for (int k = 1; k <= limit; ++k)
        for (int n = 1; n <= limit; ++n)
            for (int m = 1; m <= limit; ++m) {
                CheckArgs a = kn_m(k, n, m);
                if (N >= 0) a.N = N;
                g.push_back({name, a});
            }
}

}  // namespace detail

inline std::vector<GridEntry> verification_grid(Level level) {
    using namespace detail;
    const bool full = level == Level::Full;
    const int box = full ? 4 : 3;
    std::vector<GridEntry> g;

    push_boxes(g, "macmahon_box", box);
    g.push_back({"infinite_volume", only_N(full ? 10 : 6)});
    push_boxes(g, "qschur", box);

    for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) g.push_back({"multivariate", nm_N(n, m, 4)});
    if (full) g.push_back({"multivariate", nm_N(2, 3, 6)});
    g.push_back({"cauchy_type", nm_N(1, 1, 6)});
    g.push_back({"cauchy_type", nm_N(1, 2, 4)});
    g.push_back({"cauchy_type", nm_N(2, 2, 4)});
    if (full) g.push_back({"cauchy_type", nm_N(2, 2, 6)});
    g.push_back({"gl", nm_N(1, 1, 3)});
    g.push_back({"gl", nm_N(2, 1, 3)});
    g.push_back({"gl", nm_N(2, 2, 3)});
    if (full) g.push_back({"gl", nm_N(3, 2, 5)});

    g.push_back({"uh_des", nm_N(1, 1, 3)});
    g.push_back({"uh_des", nm_N(2, 2, 5)});
    g.push_back({"uh_des", nm_N(3, 2, 5)});
    if (full) g.push_back({"uh_des", nm_N(3, 3, 7)});
    g.push_back({"equidistribution", only_N(0)});
    g.push_back({"equidistribution", only_N(full ? 6 : 4)});
    for (const char* mode : {"rows", "entries"})
        for (int bound = 1; bound <= 3; ++bound) {
            CheckArgs a = only_N(full ? 7 : 5);
            a.mode = mode;
            a.bound = bound;
            g.push_back({"uh_restricted", a});
        }

    push_boxes(g, "corner_volume", box, 5);

    for (int m = 1; m <= 3; ++m) g.push_back({"gjt", kn_m(3, 3, m)});
    for (int m = 1; m <= 3; ++m) g.push_back({"schur_jt", kn_m(3, 3, m)});
    push_boxes(g, "rectangle", 3);
    g.push_back({"g_refined", kn_m(2, 2, 2)});
    g.push_back({"g_refined", kn_m(3, 2, 3)});

    for (int n = 1; n <= (full ? 5 : 4); ++n)
        for (int m = 1; m <= 4; ++m) {
            CheckArgs a;
            a.n = n;
            a.m = m;
            g.push_back({"frobenius", a});
        }
    for (const Partition& lambda : {Partition{1}, Partition{1, 1}, Partition{2, 1}, Partition{2, 2}, Partition{3, 1},
                                    Partition{2, 1, 1}}) {
        CheckArgs a;
        a.shape = lambda;
        a.n = full ? 6 : 5;
        g.push_back({"gexp", a});
    }
    for (auto [n, m] : {std::pair{1, 1}, {4, 3}, {5, 3}, {6, 4}}) {
        CheckArgs a;
        a.n = n;
        a.m = m;
        g.push_back({"greene", a});
    }
    if (full) {
        CheckArgs a;
        a.n = 7;
        a.m = 4;
        g.push_back({"greene", a});
    }

    {
        CheckArgs a = kn_m(3, 2, 3);
        a.N = 4;
        g.push_back({"dalpha", a});
        if (full) {
            CheckArgs b = kn_m(3, 3, 3);
            b.N = 5;
            g.push_back({"dalpha", b});
        }
    }
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) g.push_back({"dalpha_infinite", nm_N(n, m, 4)});

    {
        CheckArgs a = kn_m(2, 2, 2);
        a.bound = 3;
        g.push_back({"superadditivity", a});
    }
    return g;
}

inline std::vector<CheckResult> run_all(Level level, int workers = 1, PPStatistic uh = &up_hook_volume) {
    auto grid = verification_grid(level);
    for (auto& e : grid) e.args.uh = uh;
    return run_grid(grid, workers);
}

}  // namespace ppmat
