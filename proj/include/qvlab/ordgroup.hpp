#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qvlab {

using Integer = mpz_class;

/// Element of Z^k under the lexicographic order, first coordinate most
/// significant. The rank is fixed at construction and is at least one.
class GroupElement {
public:
    explicit GroupElement(std::vector<Integer> coords);
    GroupElement(std::initializer_list<long> coords);

    static GroupElement zero(std::size_t rank);

    std::size_t rank() const { return coords_.size(); }
    std::span<const Integer> coords() const { return coords_; }
    Integer const& operator[](std::size_t i) const { return coords_[i]; }

    // Drops the `drop` least-significant coordinates (the quotient map onto
    // Z^(k-drop)). Requires drop < rank.
    GroupElement truncated(std::size_t drop) const;
    bool is_zero() const;

    GroupElement operator-() const;
    friend GroupElement operator+(GroupElement const& a, GroupElement const& b);
    friend GroupElement operator-(GroupElement const& a, GroupElement const& b);
    friend GroupElement operator*(Integer const& n, GroupElement const& a);

    friend bool operator==(GroupElement const& a, GroupElement const& b);
    friend std::strong_ordering operator<=>(GroupElement const& a, GroupElement const& b);

private:
    std::vector<Integer> coords_;
};

/// Lexicographic comparison; throws structural_error on rank mismatch.
std::strong_ordering lex_compare(GroupElement const& a, GroupElement const& b);

void require_same_rank(GroupElement const& a, GroupElement const& b);

// "(3,-1)"
std::string to_string(GroupElement const& g);
GroupElement parse_group_element(std::string_view text);

} // namespace qvlab
