// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any is red.
// Usage: ppmat_acceptance <path-to-ppmat-cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <ppmat/bijection.hpp>
#include <ppmat/enumerate.hpp>
#include <ppmat/registry.hpp>
#include <ppmat/verify.hpp>
#include <ppmat/verify_grids.hpp>

#include "../oracles.hpp"

using namespace ppmat;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
    std::string info;

    void require(bool cond, const std::string& why) {
        if (!cond && ok) {
            ok = false;
            detail = why;
        }
    }
    void require(const CheckResult& r) {
        if (r.pass || !ok) return;
        ok = false;
        detail = r.check_name + " " + r.parameter_string() + ": " +
                 (r.first_diff ? r.first_diff->where + " lhs=" + r.first_diff->lhs + " rhs=" + r.first_diff->rhs : "");
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_ms, const std::function<Verdict()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = body();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (limit_ms > 0 && ms > limit_ms) v.require(false, "runtime " + std::to_string(ms) + " ms over limit");
    if (!v.ok) ++failures;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    std::cout << (v.ok ? "PASS" : "FAIL") << "  C" << (id < 10 ? "0" : "") << id << "  " << title << "  (" << buf << ")";
    if (!v.ok) std::cout << "\n      " << v.detail;
    if (v.ok && !v.info.empty()) std::cout << "\n      " << v.info;
    std::cout << std::endl;
}

std::int64_t uh_without_row_offset(const PlanePartition& p) {
    std::int64_t total = 0;
    for (const Cell& c : descent_set(p)) total += p.at(c);
    return total;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli_path = argc > 1 ? argv[1] : "";

    // Timed on its own; the Verdict bookkeeping is negligible.
    criterion(1, "Phi golden example and its inverse", 1.0, [] {
        Verdict v;
        const PlanePartition pi{{4, 4, 2}, {4, 2, 1}, {2, 2}};
        const NMatrix d = NMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 0, 1}, {0, 2, 0, 0}});
        v.require(phi(pi, 3, 4) == d, "phi gives " + phi(pi, 3, 4).to_string());
        v.require(phi_inverse(d) == pi, "phi_inverse gives " + phi_inverse(d).to_string());
        return v;
    });

    criterion(2, "Roundtrips over PP(3,3,3) and 3x3 matrices with sum <= 5", 5000.0, [] {
        Verdict v;
        std::size_t pps = 0, mats = 0;
        for (const auto& a : oracle::pp_box(3, 3, 3)) {
            const PlanePartition p(a);
            v.require(phi_inverse(phi(p, 3, 3)) == p, "phi_inverse(phi(pi)) != pi for " + p.to_string());
            ++pps;
        }
        for_each_matrix(3, 3, MatrixBound::total_at_most(5), [&](const NMatrix& d) {
            v.require(phi(phi_inverse(d), 3, 3) == d, "phi(phi_inverse(D)) != D for " + d.to_string());
            ++mats;
        });
        v.require(pps == 980, "PP(3,3,3) oracle size " + std::to_string(pps));
        v.require(mats == 2002, "matrix count " + std::to_string(mats));
        return v;
    });

    criterion(3, "MacMahon count and q-series for k,n,m <= 3", 10000.0, [] {
        Verdict v;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n)
                for (int m = 1; m <= 3; ++m) {
                    v.require(oracle::Big(gen_pp_box(k, n, m).size()) == oracle::macmahon_hooks(k, n, m),
                              "count mismatch at " + std::to_string(k) + std::to_string(n) + std::to_string(m));
                    v.require(check_macmahon_box(k, n, m));
                }
        v.require(gen_pp_box(2, 2, 2).size() == 20, "|PP(2,2,2)| != 20");
        return v;
    });

    criterion(4, "Multivariate descent identity, (n,m) in {(1,1),(2,1),(2,2)}, N = 4", 30000.0, [] {
        Verdict v;
        for (auto [n, m] : {std::pair{1, 1}, {2, 1}, {2, 2}}) v.require(check_multivariate(n, m, 4));
        return v;
    });

    criterion(5, "Cauchy-type (2,2,4) and gl (2,2,3)", 30000.0, [] {
        Verdict v;
        v.require(check_cauchy_type(2, 2, 4));
        v.require(check_gl(2, 2, 3));
        return v;
    });

    criterion(6, "(des,uh) tables to q^5 for (2,2); equidistribution to N = 4; t = 1 slice", 30000.0, [] {
        Verdict v;
        v.require(check_uh_des(2, 2, 5));
        const CheckResult eq = check_equidistribution(4);
        v.require(eq);
        const auto counts = oracle::pp_volume_counts(4);
        v.require(counts == oracle::Series{1, 1, 3, 6, 13}, "volume oracle disagrees with 1,1,3,6,13");
        v.require(eq.lhs_summary.find("t=1 slice: 1 + q + 3*q^2 + 6*q^3 + 13*q^4") != std::string::npos,
                  "t=1 slice is not 1 + q + 3q^2 + 6q^3 + 13q^4: " + eq.lhs_summary);
        return v;
    });

    criterion(7, "Up-hook golden example: uh = 20, volume = 22", 0, [] {
        Verdict v;
        const PlanePartition pi{{4, 4, 2}, {4, 2, 2}, {2, 2}};
        v.require(up_hook_volume(pi) == 20, "uh = " + std::to_string(up_hook_volume(pi)));
        v.require(volume(pi) == 22, "volume = " + std::to_string(volume(pi)));
        return v;
    });

    criterion(8, "Corner volume (q1), (q2), q = 1 slice, (q3) at N = 5 for k,n,m <= 3", 0, [] {
        Verdict v;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n)
                for (int m = 1; m <= 3; ++m) v.require(check_corner_volume(k, n, m, 5));
        return v;
    });

    criterion(9, "g_rho = s_rho(1^{n-1},z), sum g_lambda = s_rho(1^n,z), Jacobi-Trudi for g", 0, [] {
        Verdict v;
        for (int k = 1; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n)
                for (int m = 1; m <= 3; ++m) v.require(check_rectangle(k, n, m));
        for (int m = 1; m <= 3; ++m) v.require(check_gjt(3, 3, m));
        return v;
    });

    criterion(10, "Sum of f_lambda(n) = m^n and word bijection for n,m <= 4", 0, [] {
        Verdict v;
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 4; ++m) v.require(check_frobenius(n, m));
        std::int64_t f22 = 0;
        for (const auto& lambda : gen_partitions_in_box(2, 2)) f22 += count_strict_tableaux(lambda, 2);
        v.require(f22 == 4, "n=m=2 gives " + std::to_string(f22));
        return v;
    });

    criterion(11, "Greene shape over W_{4,3}, W_{5,3}, W_{6,4}; 132434 -> (4,3,3,2)", 60000.0, [] {
        Verdict v;
        for (auto [n, m] : {std::pair{4, 3}, {5, 3}, {6, 4}}) v.require(check_greene(n, m));
        const Word w = Word::parse("132434", 4);
        v.require(shape(word_to_strict_tableau(w)) == Partition({4, 3, 3, 2}), "example shape differs");
        v.require(greene_shape(w) == Partition({4, 3, 3, 2}), "example L statistics differ");
        return v;
    });

    criterion(12, "D_alpha symmetry, dominance monotonicity, Kostka, product formula, chain", 0, [] {
        Verdict v;
        const int k = 3, n = 2, m = 3, N_max = 4;
        // everything except raw dominance is asserted inside these checks
        v.require(check_dalpha(k, n, m, N_max));
        for (int nn = 1; nn <= 3; ++nn)
            for (int mm = 1; mm <= 3; ++mm) v.require(check_dalpha_infinite(nn, mm, N_max));
        // dominance monotonicity as stated: beta >= alpha in prefix order on N^m
        // with |alpha| = |beta| implies D_alpha >= D_beta
        const auto table = d_alpha_table(k, n, m);
        auto D = [&](const Composition& a) {
            const auto it = table.find(a);
            return it == table.end() ? std::int64_t{0} : it->second;
        };
        const auto alphas = compositions_up_to(N_max, m);
        std::int64_t violations = 0;
        std::string example;
        for (const auto& a : alphas)
            for (const auto& b : alphas) {
                if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0)) continue;
                if (!dominates(b, a) || D(a) >= D(b)) continue;
                if (violations++ == 0) {
                    std::ostringstream s;
                    s << "beta=" << detail::composition_string(b) << " dominates alpha=" << detail::composition_string(a)
                      << " but D_beta=" << D(b) << " > D_alpha=" << D(a);
                    example = s.str();
                }
            }
        v.require(violations == 0, std::to_string(violations) + " dominance violations on unsorted compositions, e.g. " +
                                       example + "; holds after sorting alpha, beta into partitions");
        return v;
    });

    criterion(13, "Superadditivity and scaling over all pairs in PP(2,2,2), k <= 3: zero violations", 0, [] {
        Verdict v;
        v.require(check_superadditivity(2, 2, 2, 3));
        const auto corner = superadditivity_violations(&corner_volume, 2, 2, 2);
        v.require(corner.empty(), std::to_string(corner.size()) + " corner-volume violations");
        const auto uh = superadditivity_violations(&up_hook_volume, 2, 2, 2);
        if (!uh.empty()) {
            const auto& [p, q] = uh.front();
            v.require(false, std::to_string(uh.size()) + " up-hook violations, e.g. |" + p.to_string() + " + " +
                                 q.to_string() + "|_uh = " + std::to_string(up_hook_volume(add(p, q))) + " < " +
                                 std::to_string(up_hook_volume(p) + up_hook_volume(q)) +
                                 "; the scaling law |2pi|_uh = |pi|_uh + |pi|_c forces this");
        }
        return v;
    });

    criterion(14, "Off-by-one up-hook volume is caught with a diff monomial", 0, [] {
        Verdict v;
        const auto results = run_all(Level::Small, 1, &uh_without_row_offset);
        std::string first;
        for (const auto& r : results)
            if (!r.pass && r.first_diff && r.first_diff->where.find(" @ ") != std::string::npos) {
                first = r.check_name + ": " + r.first_diff->where;
                break;
            }
        v.require(!first.empty(), "no check failed with a monomial diff");
        v.info = "caught by " + first;
        return v;
    });

    criterion(15, "CLI verify all --level small exits 0 within 5 minutes", 300000.0, [&] {
        Verdict v;
        if (cli_path.empty()) {
            v.require(false, "no CLI path given");
            return v;
        }
        const std::string cmd = "\"" + cli_path + "\" verify all --level small --workers 1 > /dev/null";
        const int status = std::system(cmd.c_str());
        v.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
                  "exit status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));
        return v;
    });

    std::cout << (15 - failures) << " of 15 criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
