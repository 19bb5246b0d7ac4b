#include "qvlab/ordgroup.hpp"

#include <sstream>

#include "qvlab/errors.hpp"
#include "qvlab/text.hpp"

namespace qvlab {

GroupElement::GroupElement(std::vector<Integer> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        throw structural_error("group element must have rank >= 1");
}

GroupElement::GroupElement(std::initializer_list<long> coords)
{
    coords_.reserve(coords.size());
    for (long c : coords)
        coords_.emplace_back(c);
    if (coords_.empty())
        throw structural_error("group element must have rank >= 1");
}

GroupElement GroupElement::zero(std::size_t rank)
{
    return GroupElement(std::vector<Integer>(rank, Integer(0)));
}

GroupElement GroupElement::truncated(std::size_t drop) const
{
    if (drop >= rank())
        throw structural_error("cannot quotient away every coordinate");
    return GroupElement(std::vector<Integer>(coords_.begin(), coords_.end() - static_cast<std::ptrdiff_t>(drop)));
}

bool GroupElement::is_zero() const
{
    for (auto const& c : coords_)
        if (c != 0)
            return false;
    return true;
}

void require_same_rank(GroupElement const& a, GroupElement const& b)
{
    if (a.rank() != b.rank())
        throw structural_error("rank mismatch: " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank()));
}

GroupElement GroupElement::operator-() const
{
    std::vector<Integer> out(coords_.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = -coords_[i];
    return GroupElement(std::move(out));
}

GroupElement operator+(GroupElement const& a, GroupElement const& b)
{
    require_same_rank(a, b);
    std::vector<Integer> out(a.rank());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coords_[i] + b.coords_[i];
    return GroupElement(std::move(out));
}

GroupElement operator-(GroupElement const& a, GroupElement const& b)
{
    require_same_rank(a, b);
    std::vector<Integer> out(a.rank());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = a.coords_[i] - b.coords_[i];
    return GroupElement(std::move(out));
}

GroupElement operator*(Integer const& n, GroupElement const& a)
{
    std::vector<Integer> out(a.rank());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = n * a.coords_[i];
    return GroupElement(std::move(out));
}

bool operator==(GroupElement const& a, GroupElement const& b)
{
    return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(GroupElement const& a, GroupElement const& b)
{
    return lex_compare(a, b);
}

std::strong_ordering lex_compare(GroupElement const& a, GroupElement const& b)
{
    require_same_rank(a, b);
    for (std::size_t i = 0; i < a.rank(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c < 0)
            return std::strong_ordering::less;
        if (c > 0)
            return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string to_string(GroupElement const& g)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i)
            os << ',';
        os << g[i].get_str();
    }
    os << ')';
    return os.str();
}

GroupElement parse_group_element(std::string_view text)
{
    auto body = strip(text);
    if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw parse_error("group element must be parenthesised: '" + std::string(text) + "'");
    std::vector<Integer> coords;
    for (auto part : split(body.substr(1, body.size() - 2), ','))
        coords.push_back(parse_integer(part));
    if (coords.empty())
        throw parse_error("empty group element");
    return GroupElement(std::move(coords));
}

} // namespace qvlab
