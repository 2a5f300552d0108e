#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "poly.hpp"

namespace ppmat {

/// Where two sides of an identity first disagree. `where` names the
/// sub-identity and, for polynomial comparisons, the monomial.
struct Mismatch {
    std::string where;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one named identity check. pass <=> first_diff is empty.
struct CheckResult {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = true;
    std::string lhs_summary;
    std::string rhs_summary;
    std::optional<Mismatch> first_diff;
    std::vector<std::string> notes;  // informational, never affects pass
    double elapsed_ms = 0.0;

    std::string parameter_string() const {
        std::string s;
        for (const auto& [k, v] : parameters) {
            if (!s.empty()) s += ' ';
            s += k + "=" + v;
        }
        return s;
    }
};

inline nlohmann::json to_json(const CheckResult& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    nlohmann::json diff = nullptr;
    if (r.first_diff) diff = {{"where", r.first_diff->where}, {"lhs", r.first_diff->lhs}, {"rhs", r.first_diff->rhs}};
    return {{"check", r.check_name}, {"parameters", params},   {"pass", r.pass},
            {"lhs", r.lhs_summary},  {"rhs", r.rhs_summary},   {"first_diff", diff},
            {"notes", r.notes},      {"elapsed_ms", r.elapsed_ms}};
}

/// Accumulates the sub-comparisons of one check.
class CheckRecorder {
public:
    CheckRecorder(std::string name, std::vector<std::pair<std::string, std::string>> params)
        : start_(std::chrono::steady_clock::now()) {
        result_.check_name = std::move(name);
        result_.parameters = std::move(params);
    }

    void compare(const std::string& label, const MultiPoly& lhs, const MultiPoly& rhs) {
        summarize(label, summary(lhs), summary(rhs));
        if (result_.first_diff) return;
        if (const auto d = first_difference(lhs, rhs)) {
            const std::string mono = lhs.monomial_string(d->monomial);
            fail(label + " @ " + (mono.empty() ? "1" : mono), d->lhs.str(), d->rhs.str());
        }
    }

    void compare(const std::string& label, const BigInt& lhs, const BigInt& rhs) {
        summarize(label, lhs.str(), rhs.str());
        if (lhs != rhs) fail(label, lhs.str(), rhs.str());
    }

    /// Records a violated relation that is not an equality (an inequality,
    /// a roundtrip, ...). Nothing is summarized on success.
    void expect(bool ok, const std::string& where, const std::string& lhs, const std::string& rhs) {
        if (!ok) fail(where, lhs, rhs);
    }

    void note(std::string text) { result_.notes.push_back(std::move(text)); }

    bool failed() const noexcept { return result_.first_diff.has_value(); }

    CheckResult finish() {
        result_.pass = !result_.first_diff;
        result_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return std::move(result_);
    }

private:
    static std::string summary(const MultiPoly& p) {
        std::string s = p.to_string();
        if (s.size() <= 72) return s;
        return std::to_string(p.num_terms()) + " terms, degree " + std::to_string(p.degree());
    }

    void summarize(const std::string& label, const std::string& l, const std::string& r) {
        append(result_.lhs_summary, label + ": " + l);
        append(result_.rhs_summary, label + ": " + r);
    }

    static void append(std::string& into, const std::string& part) {
        if (!into.empty()) into += "; ";
        into += part;
    }

    void fail(const std::string& where, const std::string& lhs, const std::string& rhs) {
        if (!result_.first_diff) result_.first_diff = Mismatch{where, lhs, rhs};
    }

    std::chrono::steady_clock::time_point start_;
    CheckResult result_;
};

}  // namespace ppmat
