#include "qvlab/cuts.hpp"

#include <algorithm>

#include "qvlab/errors.hpp"
#include "qvlab/text.hpp"

namespace qvlab {

namespace {

void require_rank(std::size_t a, std::size_t b)
{
    if (a != b)
        throw structural_error("cut rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

// Bound of an at_most cut projected down to `level` >= its own level.
GroupElement bound_at(Cut const& c, std::size_t level)
{
    return c.bound().truncated(level - c.level());
}

} // namespace

Cut Cut::bottom(std::size_t rank)
{
    if (rank == 0)
        throw structural_error("rank must be >= 1");
    return Cut(Kind::bottom, rank, 0, std::nullopt);
}

Cut Cut::top(std::size_t rank)
{
    if (rank == 0)
        throw structural_error("rank must be >= 1");
    return Cut(Kind::top, rank, 0, std::nullopt);
}

Cut Cut::at_most(std::size_t level, GroupElement bound)
{
    std::size_t rank = level + bound.rank();
    return Cut(Kind::at_most, rank, level, std::move(bound));
}

bool Cut::contains(GroupElement const& g) const
{
    require_rank(rank_, g.rank());
    switch (kind_) {
    case Kind::bottom:
        return false;
    case Kind::top:
        return true;
    case Kind::at_most:
        return lex_compare(g.truncated(level_), *bound_) <= 0;
    }
    return false;
}

bool operator==(Cut const& a, Cut const& b)
{
    if (a.kind_ != b.kind_ || a.rank_ != b.rank_)
        return false;
    if (a.kind_ != Cut::Kind::at_most)
        return true;
    return a.level_ == b.level_ && *a.bound_ == *b.bound_;
}

Cut embed(GroupElement const& alpha)
{
    return Cut::at_most(0, alpha);
}

Cut zero_cut(std::size_t rank)
{
    return embed(GroupElement::zero(rank));
}

// L + L' is invariant under the larger of the two invariance subgroups, and
// its image in the quotient is the sum of two principal initial sets.
Cut operator+(Cut const& a, Cut const& b)
{
    require_rank(a.rank(), b.rank());
    if (a.is_bottom() || b.is_bottom())
        return Cut::bottom(a.rank());
    if (a.is_top() || b.is_top())
        return Cut::top(a.rank());
    std::size_t level = std::max(a.level(), b.level());
    return Cut::at_most(level, bound_at(a, level) + bound_at(b, level));
}

Cut scale(Integer const& n, Cut const& a)
{
    if (n <= 0)
        throw domain_error("cut multiple requires n >= 1");
    if (a.kind() != Cut::Kind::at_most)
        return a;
    return Cut::at_most(a.level(), n * a.bound());
}

Cut translate(Cut const& a, GroupElement const& alpha)
{
    require_rank(a.rank(), alpha.rank());
    if (a.kind() != Cut::Kind::at_most)
        return a;
    return Cut::at_most(a.level(), a.bound() - alpha.truncated(a.level()));
}

std::strong_ordering compare(Cut const& a, Cut const& b)
{
    require_rank(a.rank(), b.rank());
    auto rank_of = [](Cut const& c) {
        switch (c.kind()) {
        case Cut::Kind::bottom: return 0;
        case Cut::Kind::at_most: return 1;
        case Cut::Kind::top: return 2;
        }
        return 0;
    };
    if (a.kind() != Cut::Kind::at_most || b.kind() != Cut::Kind::at_most)
        return rank_of(a) <=> rank_of(b);
    std::size_t level = std::max(a.level(), b.level());
    auto c = lex_compare(bound_at(a, level), bound_at(b, level));
    if (c != 0)
        return c;
    // Equal images in the coarser quotient: the cut invariant under the
    // larger subgroup contains the other one.
    return a.level() <=> b.level();
}

bool operator==(Value const& a, Value const& b)
{
    if (a.is_infinite() || b.is_infinite())
        return a.is_infinite() == b.is_infinite() && a.rank() == b.rank();
    return a.cut() == b.cut();
}

Value operator+(Value const& a, Value const& b)
{
    require_rank(a.rank(), b.rank());
    if (a.is_infinite() || b.is_infinite())
        return Value::infinity(a.rank());
    return a.cut() + b.cut();
}

Value translate(Value const& a, GroupElement const& alpha)
{
    require_rank(a.rank(), alpha.rank());
    if (a.is_infinite())
        return a;
    return translate(a.cut(), alpha);
}

std::strong_ordering compare(Value const& a, Value const& b)
{
    require_rank(a.rank(), b.rank());
    if (a.is_infinite() || b.is_infinite())
        return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    return compare(a.cut(), b.cut());
}

std::string to_string(Cut const& c)
{
    switch (c.kind()) {
    case Cut::Kind::bottom:
        return "BOT";
    case Cut::Kind::top:
        return "TOP";
    case Cut::Kind::at_most: {
        std::string out = "AM(" + std::to_string(c.level()) + ";";
        auto const& b = c.bound();
        for (std::size_t i = 0; i < b.rank(); ++i) {
            if (i)
                out += ',';
            out += b[i].get_str();
        }
        return out + ")";
    }
    }
    return {};
}

std::string to_string(Value const& v)
{
    return v.is_infinite() ? "INF" : to_string(v.cut());
}

std::optional<std::size_t> implied_rank(std::string_view text)
{
    text = strip(text);
    if (text.substr(0, 3) != "AM(")
        return std::nullopt;
    auto semi = text.find(';');
    if (semi == std::string_view::npos || text.back() != ')')
        throw parse_error("malformed cut '" + std::string(text) + "'");
    auto level = parse_integer(text.substr(3, semi - 3));
    auto parts = split(text.substr(semi + 1, text.size() - semi - 2), ',');
    return level.get_ui() + parts.size();
}

Cut parse_cut(std::string_view text, std::size_t rank)
{
    auto t = strip(text);
    if (t == "BOT")
        return Cut::bottom(rank);
    if (t == "TOP")
        return Cut::top(rank);
    if (t.substr(0, 3) != "AM(" || t.back() != ')')
        throw parse_error("unrecognised cut '" + std::string(text) + "'");
    auto semi = t.find(';');
    if (semi == std::string_view::npos)
        throw parse_error("cut is missing ';': '" + std::string(text) + "'");
    auto level = parse_integer(t.substr(3, semi - 3));
    if (level < 0)
        throw parse_error("negative cut level");
    std::vector<Integer> coords;
    for (auto part : split(t.substr(semi + 1, t.size() - semi - 2), ','))
        coords.push_back(parse_integer(part));
    if (coords.empty())
        throw parse_error("cut bound is empty");
    auto cut = Cut::at_most(level.get_ui(), GroupElement(std::move(coords)));
    if (cut.rank() != rank)
        throw structural_error("cut '" + std::string(t) + "' has rank " + std::to_string(cut.rank()) + ", expected "
                               + std::to_string(rank));
    return cut;
}

Value parse_value(std::string_view text, std::size_t rank)
{
    if (strip(text) == "INF")
        return Value::infinity(rank);
    return parse_cut(text, rank);
}

} // namespace qvlab
