#pragma once

// Structured check reports. Identity checks return the witnessing numbers,
// not bare booleans, so certificates and CI logs can show what was compared.

#include <string>
#include <utility>
#include <vector>

namespace imprim {

struct Check {
    enum class Status { Pass, Fail, Skip };

    std::string id;
    Status status = Status::Pass;
    std::string lhs;
    std::string rhs;
    std::string note;

    bool passed() const { return status != Status::Fail; }
};

inline const char* to_string(Check::Status s) {
    switch (s) {
        case Check::Status::Pass: return "pass";
        case Check::Status::Fail: return "fail";
        case Check::Status::Skip: return "skip";
    }
    return "?";
}

struct Report {
    std::vector<Check> checks;

    bool all_passed() const {
        for (const Check& c : checks)
            if (!c.passed()) return false;
        return true;
    }

    template <typename L, typename R>
    bool check_eq(std::string id, const L& lhs, const R& rhs, std::string note = {}) {
        using std::to_string;
        using imprim::to_string;
        const bool ok = lhs == rhs;
        checks.push_back({std::move(id), ok ? Check::Status::Pass : Check::Status::Fail,
                          to_string(lhs), to_string(rhs), std::move(note)});
        return ok;
    }

    bool check_true(std::string id, bool ok, std::string note = {}) {
        checks.push_back({std::move(id), ok ? Check::Status::Pass : Check::Status::Fail,
                          ok ? "true" : "false", "true", std::move(note)});
        return ok;
    }

    void skip(std::string id, std::string note) {
        checks.push_back({std::move(id), Check::Status::Skip, "", "", std::move(note)});
    }

    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const Check& c : checks)
            if (!c.passed()) out.push_back(c.id + ": " + c.lhs + " != " + c.rhs);
        return out;
    }
};

struct VerificationError : std::runtime_error {
    Report report;
    explicit VerificationError(std::string what, Report rep)
        : std::runtime_error(std::move(what)), report(std::move(rep)) {}
};

}  // namespace imprim
