#include "qvlab/problem.hpp"

#include <fstream>
#include <sstream>

#include "qvlab/errors.hpp"
#include "qvlab/text.hpp"

namespace qvlab {

using nlohmann::json;

namespace {

std::vector<Rational> rational_list(json const& j)
{
    if (!j.is_array())
        throw parse_error("expected a coefficient list");
    std::vector<Rational> out;
    for (auto const& c : j)
        out.push_back(rational_from_json(c));
    return out;
}

template <class F>
F field_from_json(json const& j);

template <>
Rational field_from_json<Rational>(json const& j)
{
    return rational_from_json(j);
}

template <>
RatFunc field_from_json<RatFunc>(json const& j)
{
    return ratfunc_from_json(j);
}

template <class F>
Vec<F> vector_from_json(json const& j, std::size_t dim)
{
    if (!j.is_array() || j.size() != dim)
        throw parse_error("expected " + std::to_string(dim) + " coordinates, got " + j.dump());
    Vec<F> out;
    for (auto const& c : j)
        out.push_back(field_from_json<F>(c));
    return out;
}

template <class F>
std::vector<std::pair<std::string, std::vector<Vec<F>>>> named_sets(json const& doc, char const* key, std::size_t dim)
{
    std::vector<std::pair<std::string, std::vector<Vec<F>>>> out;
    if (!doc.contains(key))
        return out;
    for (auto const& [name, rows] : doc.at(key).items()) {
        std::vector<Vec<F>> vs;
        for (auto const& r : rows)
            vs.push_back(vector_from_json<F>(r, dim));
        out.emplace_back(name, std::move(vs));
    }
    return out;
}

template <class F>
StructureAlgebra<F> algebra_from_json(json const& a)
{
    std::vector<std::string> names = a.at("basis").get<std::vector<std::string>>();
    if (a.contains("dimension") && a.at("dimension").get<std::size_t>() != names.size())
        throw parse_error("algebra dimension does not match the number of basis names");
    auto index = [&](std::string const& n) {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n)
                return i;
        throw parse_error("unknown basis element '" + n + "'");
    };
    std::vector<typename StructureAlgebra<F>::Term> table;
    for (auto const& p : a.at("products")) {
        auto i = index(p.at("left").get<std::string>());
        auto jj = index(p.at("right").get<std::string>());
        for (auto const& [name, c] : p.at("result").items())
            table.push_back({i, jj, index(name), field_from_json<F>(c)});
    }
    return StructureAlgebra<F>(names, table, vector_from_json<F>(a.at("unit"), names.size()));
}

template <class F>
Problem<F> build(json const& doc, BaseDomain<F> domain)
{
    auto alg = algebra_from_json<F>(doc.at("algebra"));
    auto n = alg.dim();
    return Problem<F>{std::move(alg), std::move(domain), named_sets<F>(doc, "bases", n), named_sets<F>(doc, "ideals", n)};
}

Integer prime_of(json const& j)
{
    if (!j.contains("p"))
        throw parse_error("descriptor " + j.dump() + " needs a prime \"p\"");
    return Integer(j.at("p").get<long>());
}

} // namespace

Rational rational_from_json(json const& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    throw parse_error("rationals must be strings \"a/b\" (got " + j.dump() + ")");
}

RatFunc ratfunc_from_json(json const& j)
{
    if (j.is_object()) {
        QPoly num(rational_list(j.at("num")));
        QPoly den = j.contains("den") ? QPoly(rational_list(j.at("den"))) : QPoly(Rational(1));
        return RatFunc(num, den);
    }
    return RatFunc(rational_from_json(j));
}

json to_json(Rational const& q)
{
    return to_string(q);
}

json to_json(RatFunc const& f)
{
    if (f.is_constant() || f.is_zero())
        return to_string(f.is_zero() ? Rational(0) : f.num().coeffs()[0]);
    json num = json::array(), den = json::array();
    for (auto const& c : f.num().coeffs())
        num.push_back(to_string(c));
    for (auto const& c : f.den().coeffs())
        den.push_back(to_string(c));
    return json{{"num", num}, {"den", den}};
}

AnyProblem parse_problem(json const& doc)
{
    if (!doc.contains("format") || doc.at("format").get<int>() != 1)
        throw parse_error("problem file must declare \"format\": 1");
    auto field = doc.at("field").at("kind").get<std::string>();
    auto const& dom = doc.at("domain");
    auto kind = dom.at("kind").get<std::string>();
    if (field == "Q") {
        if (kind == "Z")
            return build<Rational>(doc, BaseDomain<Rational>::integers());
        if (kind == "Zp")
            return build<Rational>(doc, BaseDomain<Rational>::local(prime_of(dom)));
        if (kind == "Ov") {
            auto const& v = doc.at("valuation");
            if (v.at("kind").get<std::string>() != "padic")
                throw config_error("valuation on Q must be \"padic\"");
            return build<Rational>(doc, BaseDomain<Rational>::valuation_ring(PadicValuation(prime_of(v))));
        }
        throw parse_error("unknown domain kind '" + kind + "'");
    }
    if (field == "Qt") {
        if (kind != "Ov")
            throw config_error("over Q(t) the only supported domain is the valuation ring \"Ov\"");
        auto const& v = doc.at("valuation");
        if (v.at("kind").get<std::string>() != "composite")
            throw config_error("valuation on Q(t) must be \"composite\"");
        return build<RatFunc>(doc, BaseDomain<RatFunc>::valuation_ring(CompositeValuation(prime_of(v))));
    }
    throw parse_error("unknown field kind '" + field + "'");
}

AnyProblem load_problem(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open problem file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (json::exception const& e) {
        throw parse_error("invalid JSON in '" + path + "': " + e.what());
    }
    try {
        return parse_problem(doc);
    } catch (json::exception const& e) {
        throw parse_error("malformed problem file '" + path + "': " + e.what());
    }
}

Vec<Rational> parse_rational_coords(std::string_view text)
{
    auto t = strip(text);
    if (!t.empty() && t.front() == '[') {
        Vec<Rational> out;
        for (auto const& c : json::parse(t))
            out.push_back(rational_from_json(c));
        return out;
    }
    Vec<Rational> out;
    for (auto part : split(t, ','))
        out.push_back(parse_rational(part));
    return out;
}

Vec<RatFunc> parse_ratfunc_coords(std::string_view text)
{
    auto t = strip(text);
    Vec<RatFunc> out;
    if (!t.empty() && t.front() == '[') {
        for (auto const& c : json::parse(t))
            out.push_back(ratfunc_from_json(c));
        return out;
    }
    for (auto part : split(t, ','))
        out.push_back(RatFunc(parse_rational(part)));
    return out;
}

} // namespace qvlab
