#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rlab {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* to_label(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

// One per-window verification result (e.g. one Somos-4 window).
struct WindowCheck {
    std::size_t index = 0;
    CheckStatus status = CheckStatus::Pass;
    std::string note;
};

// One named claim inside a conjecture verification.
struct ClaimResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::vector<WindowCheck> windows;
    std::optional<std::size_t> first_failure;

    bool failed() const { return status == CheckStatus::Fail; }
};

// Structured evidence from a conjecture run: failures are data, never
// exceptions.
struct ConjectureReport {
    std::string family;
    std::string params;
    std::vector<ClaimResult> claims;

    bool all_passed() const {
        for (const auto& c : claims)
            if (c.failed()) return false;
        return true;
    }

    std::string summary() const {
        std::ostringstream out;
        out << family << "(" << params << "): ";
        std::size_t pass = 0, fail = 0, skip = 0;
        for (const auto& c : claims) {
            if (c.status == CheckStatus::Pass) ++pass;
            else if (c.status == CheckStatus::Fail) ++fail;
            else ++skip;
        }
        out << pass << " pass, " << fail << " fail, " << skip << " skipped";
        return out.str();
    }
};

inline std::string format_report(const ConjectureReport& r) {
    std::ostringstream out;
    out << r.summary() << '\n';
    for (const auto& c : r.claims) {
        out << "  [" << to_label(c.status) << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        if (c.first_failure) out << " (first failure at index " << *c.first_failure << ")";
        out << '\n';
    }
    return out.str();
}

inline std::string format_report_records(const ConjectureReport& r) {
    std::ostringstream out;
    for (const auto& c : r.claims) {
        out << "family=" << r.family << " params=\"" << r.params << "\" claim="
            << c.name << " status=" << to_label(c.status);
        if (c.first_failure) out << " first_failure=" << *c.first_failure;
        if (!c.detail.empty()) out << " detail=\"" << c.detail << "\"";
        out << '\n';
    }
    return out.str();
}

}  // namespace rlab
