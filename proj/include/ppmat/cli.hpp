#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bijection.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "plane_partition.hpp"
#include "serialize.hpp"
#include "verify_grids.hpp"

// Command-line front end. run_cli() is the whole program; tools/ppmat.cpp
// only forwards the process streams.
//
// Exit codes: 0 success, 1 check failure or domain error, 2 usage error.

namespace ppmat::cli {

using nlohmann::json;

/// Bad flags, bad input or a cap violation: exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Caps {
    int box = 5;
    int N = 12;
    int word = 10;
};

namespace detail {

struct Common {
    bool json = false;
    bool unsafe = false;
    int workers = 1;
    Caps caps;

    void box(const char* what, std::optional<int> v) const {
        if (v && !unsafe && *v > caps.box)
            throw UsageError(std::string(what) + "=" + std::to_string(*v) + " exceeds the cap " +
                             std::to_string(caps.box) + " (use --unsafe-no-caps)");
    }
    void degree(std::optional<int> v) const {
        if (v && !unsafe && *v > caps.N)
            throw UsageError("N=" + std::to_string(*v) + " exceeds the cap " + std::to_string(caps.N) +
                             " (use --unsafe-no-caps)");
    }
    void word(int length) const {
        if (!unsafe && length > caps.word)
            throw UsageError("word length " + std::to_string(length) + " exceeds the cap " +
                             std::to_string(caps.word) + " (use --unsafe-no-caps)");
    }
};

struct Input {
    std::optional<std::string> inline_text;
    std::optional<std::string> path;

    void attach(CLI::App* sub) {
        sub->add_option("--input", inline_text, "inline JSON input");
        sub->add_option("--file", path, "read JSON input from a file");
    }

    json read(std::istream& in) const {
        if (inline_text && path) throw UsageError("give --input or --file, not both");
        std::string text;
        if (inline_text) {
            text = *inline_text;
        } else if (path) {
            std::ifstream f(*path);
            if (!f) throw UsageError("cannot read " + *path);
            text.assign(std::istreambuf_iterator<char>(f), {});
        } else {
            text.assign(std::istreambuf_iterator<char>(in), {});
        }
        return io::parse(text);
    }
};

inline std::vector<int> parse_ints(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError(std::string(what) + " must be a comma-separated list of integers");
        }
        if (used != tok.size()) throw UsageError(std::string(what) + " must be a comma-separated list of integers");
        out.push_back(v);
    }
    return out;
}

inline int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
}

inline std::int64_t stat_value(const std::string& stat, const PlanePartition& p) {
    if (stat == "volume") return volume(p);
    if (stat == "trace") return trace(p);
    if (stat == "des") return des(p);
    if (stat == "uh") return up_hook_volume(p);
    if (stat == "corner") return corner_volume(p);
    throw UsageError("unknown statistic: " + stat + " (volume, trace, des, uh, corner)");
}

inline json stats_json(const PlanePartition& p) {
    const int m = p.max_entry();
    return json{{"shape", shape(p).parts()},
                {"volume", volume(p)},
                {"trace", trace(p)},
                {"des", des(p)},
                {"uh", up_hook_volume(p)},
                {"corner", corner_volume(p)},
                {"column_counts", p.empty() ? std::vector<int>{} : column_counts(p, m)},
                {"row_descent_counts", row_descent_counts(p)}};
}

inline std::string ints_string(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// ----------------------------------------------------------------- map

struct MapCmd {
    std::string direction;
    std::optional<int> n, m;
    std::optional<std::string> w;
    Input input;

    int run(const Common& c, std::istream& in, std::ostream& out) const {
        if (direction == "phi") {
            const PlanePartition p = io::plane_partition_from_json(input.read(in));
            const NMatrix d = phi(p, n.value_or(p.num_rows()), m.value_or(p.max_entry()));
            out << (c.json ? io::to_json(d).dump() : d.to_string()) << '\n';
        } else if (direction == "inv") {
            const NMatrix d = io::nmatrix_from_json(input.read(in));
            const PlanePartition p = phi_inverse(d);
            out << (c.json ? io::to_json(p).dump() : p.to_string()) << '\n';
        } else {
            const Word word = w ? Word::parse(*w, need(m, "--m")) : io::word_from_json(input.read(in));
            c.word(word.length());
            const PlanePartition t = word_to_strict_tableau(word);
            out << (c.json ? io::to_json(t).dump() : t.to_string()) << '\n';
        }
        return 0;
    }
};

// --------------------------------------------------------------- stats

struct StatsCmd {
    Input input;

    int run(const Common& c, std::istream& in, std::ostream& out) const {
        const PlanePartition p = io::plane_partition_from_json(input.read(in));
        const json s = stats_json(p);
        if (c.json) {
            out << s.dump() << '\n';
            return 0;
        }
        for (const char* key : {"shape", "volume", "trace", "des", "uh", "corner", "column_counts", "row_descent_counts"}) {
            std::string value = s[key].is_array() ? ints_string(s[key].get<std::vector<int>>()) : s[key].dump();
            out << std::left << std::setw(20) << key << value << '\n';
        }
        return 0;
    }
};

// ----------------------------------------------------------- enumerate

struct EnumerateCmd {
    std::string family;
    std::vector<int> positional;
    std::optional<int> k, n, m, N;
    std::optional<std::string> shape_text;
    std::optional<std::string> stat;
    std::optional<std::string> gf;
    bool list = false;

    // positional parameters fill k n m (or the family's own order) when flags are absent
    std::optional<int> pos(std::size_t i) const {
        return i < positional.size() ? std::optional<int>(positional[i]) : std::nullopt;
    }

    Partition shape_arg() const {
        if (!shape_text) throw UsageError("missing --shape");
        try {
            return Partition(parse_ints(*shape_text, "--shape"));
        } catch (const InvalidArgument& e) {
            throw UsageError(e.what());
        }
    }

    int run(const Common& c, std::ostream& out) const {
        if (gf && *gf != "q") throw UsageError("--gf supports the variable q only");
        if (gf && !stat) throw UsageError("--gf needs --stat");
        if (stat && !gf) throw UsageError("--stat needs --gf q");

        std::vector<PlanePartition> pps;
        json items = json::array();
        std::string count;
        json params = json::object();
        bool pp_family = true;

        auto box3 = [&](int& kk, int& nn, int& mm) {
            kk = need(k ? k : pos(0), "k");
            nn = need(n ? n : pos(1), "n");
            mm = need(m ? m : pos(2), "m");
            c.box("k", kk);
            c.box("n", nn);
            c.box("m", mm);
            params = {{"k", kk}, {"n", nn}, {"m", mm}};
        };

        if (family == "box" || family == "exact") {
            int kk, nn, mm;
            box3(kk, nn, mm);
            pps = family == "box" ? gen_pp_box(kk, nn, mm) : gen_pp_exact(kk, nn, mm);
        } else if (family == "shape" || family == "column-strict") {
            const Partition lambda = shape_arg();
            const int mm = need(m ? m : pos(0), "--m");
            c.box("shape length", lambda.length());
            c.box("shape width", lambda.first());
            c.box("m", mm);
            params = {{"shape", lambda.parts()}, {"m", mm}};
            pps = family == "shape" ? gen_pp_shape(lambda, mm) : gen_column_strict(lambda, mm);
        } else if (family == "st") {
            const Partition lambda = shape_arg();
            const int nn = need(n ? n : pos(0), "--n");
            c.box("shape length", lambda.length());
            c.word(nn);
            params = {{"shape", lambda.parts()}, {"n", nn}};
            pps = gen_strict_tableaux(lambda, nn);
        } else if (family == "words") {
            pp_family = false;
            const int nn = need(n ? n : pos(0), "--n");
            const int mm = need(m ? m : pos(1), "--m");
            c.word(nn);
            c.box("m", mm);
            params = {{"n", nn}, {"m", mm}};
            std::int64_t total = 0;
            for_each_word(nn, mm, [&](const Word& w) {
                ++total;
                if (list) items.push_back(w.to_string());
            });
            count = std::to_string(total);
        } else if (family == "partitions") {
            pp_family = false;
            const int kk = need(k ? k : pos(0), "--k");
            const int nn = need(n ? n : pos(1), "--n");
            c.box("k", kk);
            c.box("n", nn);
            params = {{"k", kk}, {"n", nn}};
            const auto parts = gen_partitions_in_box(kk, nn);
            for (const auto& p : parts)
                if (list) items.push_back(p.parts());
            count = std::to_string(parts.size());
        } else if (family == "matrices") {
            pp_family = false;
            const int nn = need(n ? n : pos(0), "--n");
            const int mm = need(m ? m : pos(1), "--m");
            const int total = need(N ? N : pos(2), "--N");
            c.box("n", nn);
            c.box("m", mm);
            c.degree(total);
            params = {{"n", nn}, {"m", mm}, {"N", total}};
            std::int64_t seen = 0;
            for_each_matrix(nn, mm, MatrixBound::total_at_most(total), [&](const NMatrix& d) {
                ++seen;
                if (list) items.push_back(d.to_rows());
            });
            count = std::to_string(seen);
        } else {
            throw UsageError("unknown family: " + family);
        }

        if (!pp_family && gf) throw UsageError("--gf applies to plane partition families only");
        std::optional<MultiPoly> series;
        if (pp_family) {
            count = std::to_string(pps.size());
            if (list)
                for (const auto& p : pps) items.push_back(io::to_json(p));
            if (gf) {
                const auto vars = VarTable().scalar("q").share();
                MultiPoly s(vars);
                for (const auto& p : pps) s.add_term(Exponent{static_cast<int>(stat_value(*stat, p))}, 1);
                series = s;
            }
        }

        if (c.json) {
            json j{{"family", family}, {"params", params}, {"count", count}};
            if (list) j["items"] = items;
            if (series) {
                j["stat"] = *stat;
                j["gf"] = io::to_json(*series);
            }
            out << j.dump() << '\n';
            return 0;
        }
        if (list)
            for (const auto& it : items) out << (it.is_string() ? it.get<std::string>() : it.dump()) << '\n';
        if (series)
            out << series->to_string() << '\n';
        else if (!list)
            out << count << '\n';
        return 0;
    }
};

// -------------------------------------------------------------- dalpha

struct DalphaCmd {
    std::optional<int> k, n, m, N;
    std::optional<std::string> alpha;

    int run(const Common& c, std::ostream& out) const {
        const int nn = need(n, "--n");
        const int mm = need(m, "--m");
        c.box("k", k);
        c.box("n", nn);
        c.box("m", mm);
        const BoxSpec box = k ? BoxSpec::bounded(*k, nn, mm) : BoxSpec::unbounded(nn, mm);

        std::vector<Composition> alphas;
        if (alpha) {
            alphas.push_back(parse_ints(*alpha, "--alpha"));
            if (static_cast<int>(alphas.front().size()) != mm)
                throw UsageError("--alpha needs exactly m entries");
            for (int a : alphas.front())
                if (a < 0) throw UsageError("--alpha entries must be nonnegative");
        } else {
            const int total = need(N, "--alpha or --N");
            c.degree(total);
            alphas = compositions_up_to(total, mm);
        }
        if (!k && !c.unsafe)
            for (const auto& a : alphas) c.degree(static_cast<int>(weight(a)));

        json rows = json::array();
        for (const auto& a : alphas) {
            const auto value = count_D_alpha(box, a);
            if (c.json)
                rows.push_back(json{{"alpha", a}, {"count", value}});
            else
                out << std::left << std::setw(3 * mm + 4) << ints_string(a) << value << '\n';
        }
        if (c.json) {
            json params{{"k", k ? json(*k) : json("inf")}, {"n", nn}, {"m", mm}};
            out << json{{"params", params}, {"table", rows}}.dump() << '\n';
        }
        return 0;
    }
};

// -------------------------------------------------------------- greene

struct GreeneCmd {
    std::optional<std::string> w;
    std::optional<int> m;
    Input input;

    int run(const Common& c, std::istream& in, std::ostream& out) const {
        const Word word = w ? Word::parse(*w, need(m, "--m")) : io::word_from_json(input.read(in));
        c.word(word.length());
        std::vector<int> L;
        for (int i = word.alphabet_size(); i >= 1; --i) L.push_back(lis_tail(word, i));
        const PlanePartition t = word_to_strict_tableau(word);
        const Partition sh = shape(t);
        if (c.json) {
            out << json{{"word", io::to_json(word)},
                        {"L", L},
                        {"shape", sh.parts()},
                        {"tableau", io::to_json(t)},
                        {"agrees", greene_shape(word) == sh}}
                       .dump()
                << '\n';
            return 0;
        }
        out << "L (m..1)  " << ints_string(L) << '\n';
        out << "shape     " << sh.to_string() << '\n';
        out << "tableau   " << t.to_string() << '\n';
        return 0;
    }
};

// -------------------------------------------------------------- verify

struct VerifyCmd {
    std::string name;
    std::string level = "small";
    std::optional<int> k, n, m, N, bound;
    std::optional<std::string> shape_text, mode;
    bool timing = false;

    int run(const Common& c, std::ostream& out) const {
        std::vector<CheckResult> results;
        if (name == "all") {
            if (level != "small" && level != "full") throw UsageError("--level must be small or full");
            results = run_all(level == "small" ? Level::Small : Level::Full, c.workers);
        } else {
            if (!find_check(name)) throw UsageError("unknown check: " + name);
            c.box("k", k);
            c.box("n", n);
            c.box("m", m);
            c.degree(N);
            CheckArgs args;
            args.k = k;
            args.n = n;
            args.m = m;
            args.N = N;
            args.bound = bound;
            args.mode = mode;
            if (shape_text) args.shape = Partition(parse_ints(*shape_text, "--shape"));
            if (mode && *mode != "rows" && *mode != "entries") throw UsageError("--mode must be rows or entries");
            results.push_back(run_named(name, args));
        }

        bool all_pass = true;
        for (const auto& r : results) all_pass = all_pass && r.pass;

        if (c.json) {
            json arr = json::array();
            for (const auto& r : results) {
                json j = to_json(r);
                if (!timing) j.erase("elapsed_ms");
                arr.push_back(j);
            }
            out << arr.dump(2) << '\n';
            return all_pass ? 0 : 1;
        }

        std::size_t failed = 0;
        for (const auto& r : results) {
            out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(18) << r.check_name << r.parameter_string();
            if (timing) out << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)";
            out << '\n';
            if (r.first_diff)
                out << "      first diff: " << r.first_diff->where << ": lhs " << r.first_diff->lhs << ", rhs "
                    << r.first_diff->rhs << '\n';
            for (const auto& note : r.notes) out << "      note: " << note << '\n';
            failed += !r.pass;
        }
        out << results.size() << " checks, " << failed << " failed\n";
        return all_pass ? 0 : 1;
    }
};

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
    using namespace detail;
    CLI::App app{"Plane partitions, descent matrices and dual Grothendieck identities", "ppmat"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    Common common;
    app.add_flag("--json", common.json, "JSON output");
    app.add_flag("--unsafe-no-caps", common.unsafe, "lift the parameter caps");
    app.add_option("--workers", common.workers, "worker threads for verify")->check(CLI::PositiveNumber);

    MapCmd map;
    auto* map_cmd = app.add_subcommand("map", "apply Phi, its inverse, or the word map");
    map_cmd->add_option("direction", map.direction, "phi | inv | word")
        ->required()
        ->check(CLI::IsMember({"phi", "inv", "word"}));
    map_cmd->add_option("--n", map.n);
    map_cmd->add_option("--m", map.m);
    map_cmd->add_option("--w", map.w, "word, e.g. 132434");
    map.input.attach(map_cmd);

    StatsCmd stats;
    auto* stats_cmd = app.add_subcommand("stats", "statistics of a plane partition");
    stats.input.attach(stats_cmd);

    EnumerateCmd en;
    auto* en_cmd = app.add_subcommand("enumerate", "count, list or build generating functions");
    en_cmd->add_option("family", en.family, "box | exact | shape | column-strict | st | words | partitions | matrices")
        ->required();
    en_cmd->add_option("params", en.positional, "positional parameters (k n m)");
    en_cmd->add_option("--k", en.k);
    en_cmd->add_option("--n", en.n);
    en_cmd->add_option("--m", en.m);
    en_cmd->add_option("--N", en.N);
    en_cmd->add_option("--shape", en.shape_text, "partition, e.g. 2,1");
    en_cmd->add_option("--stat", en.stat, "volume | trace | des | uh | corner");
    en_cmd->add_option("--gf", en.gf, "generating function variable (q)");
    en_cmd->add_flag("--list", en.list, "list the objects");

    DalphaCmd da;
    auto* da_cmd = app.add_subcommand("dalpha", "descent enumeration D_alpha(k,n,m)");
    da_cmd->add_option("--k", da.k, "row length bound (omit for unbounded)");
    da_cmd->add_option("--n", da.n);
    da_cmd->add_option("--m", da.m);
    da_cmd->add_option("--N", da.N, "tabulate all alpha with |alpha| <= N");
    da_cmd->add_option("--alpha", da.alpha, "composition, e.g. 1,0,2");

    GreeneCmd gr;
    auto* gr_cmd = app.add_subcommand("greene", "strict tableau of a word and its L statistics");
    gr_cmd->add_option("--w", gr.w);
    gr_cmd->add_option("--m", gr.m);
    gr.input.attach(gr_cmd);

    VerifyCmd ve;
    auto* ve_cmd = app.add_subcommand("verify", "run a named identity check, or all of them");
    ve_cmd->add_option("name", ve.name, "check name or all")->required();
    ve_cmd->add_option("--level", ve.level, "small | full");
    ve_cmd->add_option("--k", ve.k);
    ve_cmd->add_option("--n", ve.n);
    ve_cmd->add_option("--m", ve.m);
    ve_cmd->add_option("--N", ve.N);
    ve_cmd->add_option("--shape", ve.shape_text);
    ve_cmd->add_option("--mode", ve.mode, "rows | entries");
    ve_cmd->add_option("--bound", ve.bound);
    ve_cmd->add_flag("--timing", ve.timing, "report elapsed time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (map_cmd->parsed()) return map.run(common, in, out);
        if (stats_cmd->parsed()) return stats.run(common, in, out);
        if (en_cmd->parsed()) return en.run(common, out);
        if (da_cmd->parsed()) return da.run(common, out);
        if (gr_cmd->parsed()) return gr.run(common, in, out);
        if (ve_cmd->parsed()) return ve.run(common, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace ppmat::cli
