#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "qvlab/ordgroup.hpp"

namespace qvlab {

/// A cut (L, R) of Z^k under the lexicographic order, stored by its
/// canonical descriptor.
///
/// Every initial subset L of Z^k-lex is one of
///   - empty (Bottom),
///   - everything (Top),
///   - { g : pi_j(g) <= b } for a level 0 <= j < k and b in Z^(k-j),
/// where pi_j forgets the j least-significant coordinates. To see this, let
/// j be the rank of the largest convex subgroup H = 0 x Z^j with L + H = L.
/// The image of L in Z^k/H = Z^(k-j) is initial and not invariant under any
/// nontrivial convex subgroup, so it is bounded above; a bounded-above
/// nonempty initial subset of a lex product of Z's that is not invariant
/// under the last coordinate has a maximum. Strict bounds never occur since
/// { x < b } = { x <= b - (0,...,0,1) } in a discrete quotient.
class Cut {
public:
    enum class Kind { bottom, at_most, top };

    static Cut bottom(std::size_t rank);
    static Cut top(std::size_t rank);
    static Cut at_most(std::size_t level, GroupElement bound);

    Kind kind() const { return kind_; }
    std::size_t rank() const { return rank_; }
    // Only meaningful for at_most.
    std::size_t level() const { return level_; }
    GroupElement const& bound() const { return *bound_; }

    bool is_bottom() const { return kind_ == Kind::bottom; }
    bool is_top() const { return kind_ == Kind::top; }

    // Membership of g in the left set.
    bool contains(GroupElement const& g) const;

    friend bool operator==(Cut const& a, Cut const& b);

private:
    Cut(Kind kind, std::size_t rank, std::size_t level, std::optional<GroupElement> bound)
        : kind_(kind), rank_(rank), level_(level), bound_(std::move(bound)) {}

    Kind kind_;
    std::size_t rank_;
    std::size_t level_ = 0;
    std::optional<GroupElement> bound_;
};

// phi(a) = ((-inf, a], (a, inf))
Cut embed(GroupElement const& alpha);
Cut zero_cut(std::size_t rank);

// Left-set sum.
Cut operator+(Cut const& a, Cut const& b);
// n * A with left set { s_1 + ... + s_n }; n >= 1.
Cut scale(Integer const& n, Cut const& a);
// Left set A^L - alpha.
Cut translate(Cut const& a, GroupElement const& alpha);
// Left-set inclusion, which is a total order on cuts.
std::strong_ordering compare(Cut const& a, Cut const& b);
inline bool operator<(Cut const& a, Cut const& b) { return compare(a, b) < 0; }
inline bool operator<=(Cut const& a, Cut const& b) { return compare(a, b) <= 0; }

/// A cut or the adjoined element INF, which is strictly above every cut
/// (including Top), absorbing for addition and fixed by translation.
class Value {
public:
    Value(Cut cut) : cut_(std::move(cut)) {} // NOLINT(google-explicit-constructor)
    static Value infinity(std::size_t rank) { return Value(rank); }

    bool is_infinite() const { return !cut_.has_value(); }
    Cut const& cut() const { return *cut_; }
    std::size_t rank() const { return cut_ ? cut_->rank() : rank_; }

    friend bool operator==(Value const& a, Value const& b);

private:
    explicit Value(std::size_t rank) : rank_(rank) {}

    std::optional<Cut> cut_;
    std::size_t rank_ = 0;
};

Value operator+(Value const& a, Value const& b);
Value translate(Value const& a, GroupElement const& alpha);
std::strong_ordering compare(Value const& a, Value const& b);
inline bool operator<(Value const& a, Value const& b) { return compare(a, b) < 0; }
inline bool operator<=(Value const& a, Value const& b) { return compare(a, b) <= 0; }

// Text forms: "BOT", "TOP", "AM(j;b1,...,bm)", "INF". BOT, TOP and INF carry
// no rank, so parsing them needs the ambient rank.
std::string to_string(Cut const& c);
std::string to_string(Value const& v);
Cut parse_cut(std::string_view text, std::size_t rank);
Value parse_value(std::string_view text, std::size_t rank);
// Rank implied by an AM(...) token, if the text is one.
std::optional<std::size_t> implied_rank(std::string_view text);

} // namespace qvlab
