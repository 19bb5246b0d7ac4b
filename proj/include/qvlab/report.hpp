#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qvlab {

struct CheckVerdict {
    std::string name;
    bool passed = true;
    std::string method; // "exact" or "sampled"
    std::size_t checked = 0;
    std::string witness; // empty when passed
    std::string note;
};

/// Structured text report: a header followed by one line per check.
struct Report {
    std::string title;
    std::vector<std::string> header;
    std::vector<CheckVerdict> checks;

    bool passed() const
    {
        for (auto const& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    CheckVerdict const* find(std::string const& name) const
    {
        for (auto const& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    std::string to_text() const
    {
        std::string out = title + "\n";
        for (auto const& h : header)
            out += "  " + h + "\n";
        for (auto const& c : checks) {
            out += "  [" + std::string(c.passed ? "PASS" : "FAIL") + "] " + c.name + " (" + c.method + ", "
                   + std::to_string(c.checked) + " checked)";
            if (!c.note.empty())
                out += " " + c.note;
            if (!c.witness.empty())
                out += "\n      witness: " + c.witness;
            out += "\n";
        }
        out += "  verdict: " + std::string(passed() ? "PASS" : "FAIL") + "\n";
        return out;
    }
};

} // namespace qvlab
