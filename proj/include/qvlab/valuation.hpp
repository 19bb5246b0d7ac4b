#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qvlab/ordgroup.hpp"
#include "qvlab/ratfunc.hpp"
#include "qvlab/rational.hpp"

namespace qvlab {

/// v_p on Q with value group Z. v(0) is reported as nullopt (the infinity
/// marker); it is never a GroupElement.
class PadicValuation {
public:
    explicit PadicValuation(Integer p);

    Integer const& prime() const { return p_; }
    static constexpr std::size_t rank() { return 1; }

    std::optional<GroupElement> operator()(Rational const& q) const;
    // p^g, an element of value g.
    Rational element_with_value(GroupElement const& g) const;
    std::string name() const { return "v_" + p_.get_str(); }

    friend bool operator==(PadicValuation const& a, PadicValuation const& b) { return a.p_ == b.p_; }

private:
    Integer p_;
};

/// Rank-two valuation on Q(t): f -> (ord_t f, v_p(c)) where c is the
/// coefficient of the lowest term of the Laurent expansion of f at t = 0.
/// Value group Z^2 with the lexicographic order.
class CompositeValuation {
public:
    explicit CompositeValuation(Integer p);

    Integer const& prime() const { return p_; }
    static constexpr std::size_t rank() { return 2; }

    std::optional<GroupElement> operator()(RatFunc const& f) const;
    // p^b t^a for g = (a, b).
    RatFunc element_with_value(GroupElement const& g) const;
    std::string name() const { return "(ord_t, v_" + p_.get_str() + ")"; }

    friend bool operator==(CompositeValuation const& a, CompositeValuation const& b) { return a.p_ == b.p_; }

private:
    Integer p_;
};

/// v_p(q) as a rank-one element; nullopt for q = 0. Throws config_error for
/// non-prime p.
std::optional<GroupElement> vp(Integer const& p, Rational const& q);
std::optional<GroupElement> composite_valuation(Integer const& p, RatFunc const& f);

} // namespace qvlab
