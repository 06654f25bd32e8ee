#pragma once

#include <whq/linmap.hpp>

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

// vendored nlohmann/json
#include <json.hpp>

namespace whq {

struct Counterexample {
    std::vector<std::uint32_t> dom_index; // multi-index over the domain factors
    std::vector<std::uint32_t> cod_index;
    std::string lhs, rhs; // scalar values at the first disagreement
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::optional<Counterexample> witness; // present iff pass is false and a basis witness exists
    std::string note;
};

class Report {
public:
    explicit Report(std::string title = "") : title_(std::move(title)) {}

    CheckResult& add(CheckResult r) {
        checks_.push_back(std::move(r));
        return checks_.back();
    }
    void add_flag(const std::string& name, bool pass, const std::string& note = "") {
        checks_.push_back(CheckResult{name, pass, std::nullopt, note});
    }
    void merge(const Report& other) {
        for (const auto& c : other.checks_) checks_.push_back(c);
    }

    const std::string& title() const { return title_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }
    const CheckResult* first_failure() const {
        for (const auto& c : checks_)
            if (!c.pass) return &c;
        return nullptr;
    }

    void print(std::ostream& os) const;
    nlohmann::ordered_json to_json() const;

private:
    std::string title_;
    std::vector<CheckResult> checks_;
};

// Exact comparison with a lexicographically-first counterexample on failure.
CheckResult compare_maps(const std::string& name, const LinMap& lhs, const LinMap& rhs);

} // namespace whq
