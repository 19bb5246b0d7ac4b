#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qvlab/algebra.hpp"
#include "qvlab/basedomain.hpp"
#include "qvlab/ratfunc.hpp"
#include "qvlab/rational.hpp"

namespace qvlab {

/// A problem file (JSON, "format": 1): field and valuation, base domain,
/// algebra by structure constants, named bases and named ideals.
template <ExactField F>
struct Problem {
    StructureAlgebra<F> algebra;
    BaseDomain<F> domain;
    std::vector<std::pair<std::string, std::vector<Vec<F>>>> bases;
    std::vector<std::pair<std::string, std::vector<Vec<F>>>> ideals;

    std::vector<Vec<F>> const& basis(std::string const& name) const { return lookup(bases, name, "basis"); }
    std::vector<Vec<F>> const& ideal(std::string const& name) const { return lookup(ideals, name, "ideal"); }

private:
    static std::vector<Vec<F>> const& lookup(std::vector<std::pair<std::string, std::vector<Vec<F>>>> const& list,
                                             std::string const& name, char const* what)
    {
        for (auto const& [n, v] : list)
            if (n == name)
                return v;
        throw parse_error(std::string("no ") + what + " named '" + name + "' in problem file");
    }
};

using AnyProblem = std::variant<Problem<Rational>, Problem<RatFunc>>;

AnyProblem parse_problem(nlohmann::json const& doc);
AnyProblem load_problem(std::string const& path);

// Field values: rationals as "a/b" strings; elements of Q(t) as rational
// strings or {"num": [...], "den": [...]} coefficient lists, lowest degree
// first.
Rational rational_from_json(nlohmann::json const& j);
RatFunc ratfunc_from_json(nlohmann::json const& j);
nlohmann::json to_json(Rational const& q);
nlohmann::json to_json(RatFunc const& f);

template <ExactField F>
nlohmann::json to_json(std::vector<Vec<F>> const& vectors)
{
    auto out = nlohmann::json::array();
    for (auto const& v : vectors) {
        auto row = nlohmann::json::array();
        for (auto const& c : v)
            row.push_back(to_json(c));
        out.push_back(std::move(row));
    }
    return out;
}

// Comma-separated coordinates ("1/2,0,0,4"), or a JSON array of field values.
Vec<Rational> parse_rational_coords(std::string_view text);
Vec<RatFunc> parse_ratfunc_coords(std::string_view text);

} // namespace qvlab
