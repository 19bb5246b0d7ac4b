#pragma once

#include <optional>
#include <span>
#include <string>

#include "qvlab/ratfunc.hpp"
#include "qvlab/rational.hpp"
#include "qvlab/valuation.hpp"

namespace qvlab {

enum class DomainKind { integers, local, valuation_ring };

template <class F>
class BaseDomain;

/// Subrings S of Q that are not fields: Z, Z localised at p, and the
/// valuation ring of v_p (the same set as Z_(p), kept apart for reporting).
template <>
class BaseDomain<Rational> {
public:
    using field_type = Rational;

    static BaseDomain integers() { return BaseDomain(DomainKind::integers, Integer(0)); }
    static BaseDomain local(Integer p);
    static BaseDomain valuation_ring(PadicValuation const& v);

    DomainKind kind() const { return kind_; }
    Integer const& prime() const { return p_; }
    std::string name() const;

    bool contains(Rational const& f) const;
    bool is_unit(Rational const& f) const;
    // Canonical minimal nonzero s in S with s*f in S: the denominator over
    // Z, the p-part of the denominator otherwise; 1 for f in S.
    Rational clear_to_domain(Rational const& f) const;
    // Minimal s with s*f in S for every f in fs.
    Rational common_denominator(std::span<const Rational> fs) const;
    // 2 for Z, p otherwise.
    Rational noninvertible() const;

    // Z_(p) and O_v admit min-valuation elimination; Z does not.
    bool valuation_like() const { return kind_ != DomainKind::integers; }
    std::size_t value_rank() const { return 1; }
    std::optional<GroupElement> value(Rational const& f) const;
    Rational element_with_value(GroupElement const& g) const;

    bool subset_of(BaseDomain const& other) const;

    // Decides whether { a in Q : a*c in S for all c in cs } equals S. Returns
    // nullopt when it does, otherwise an element of the symmetric difference.
    std::optional<Rational> scalar_fiber_witness(std::span<const Rational> cs) const;

    friend bool operator==(BaseDomain const& a, BaseDomain const& b) { return a.kind_ == b.kind_ && a.p_ == b.p_; }

private:
    BaseDomain(DomainKind kind, Integer p) : kind_(kind), p_(std::move(p)) {}

    DomainKind kind_;
    Integer p_;
};

/// The valuation ring O_v of the composite valuation on Q(t).
template <>
class BaseDomain<RatFunc> {
public:
    using field_type = RatFunc;

    static BaseDomain valuation_ring(CompositeValuation const& v) { return BaseDomain(v); }

    DomainKind kind() const { return DomainKind::valuation_ring; }
    Integer const& prime() const { return v_.prime(); }
    CompositeValuation const& valuation() const { return v_; }
    std::string name() const { return "O_v[" + v_.name() + "]"; }

    bool contains(RatFunc const& f) const;
    bool is_unit(RatFunc const& f) const;
    // p^b t^a with (a, b) = -v(f) when v(f) < 0, else 1.
    RatFunc clear_to_domain(RatFunc const& f) const;
    RatFunc common_denominator(std::span<const RatFunc> fs) const;
    // t, of value (1, 0).
    RatFunc noninvertible() const { return RatFunc::t(); }

    bool valuation_like() const { return true; }
    std::size_t value_rank() const { return 2; }
    std::optional<GroupElement> value(RatFunc const& f) const { return v_(f); }
    RatFunc element_with_value(GroupElement const& g) const { return v_.element_with_value(g); }

    bool subset_of(BaseDomain const& other) const { return v_ == other.v_; }
    std::optional<RatFunc> scalar_fiber_witness(std::span<const RatFunc> cs) const;

    friend bool operator==(BaseDomain const& a, BaseDomain const& b) { return a.v_ == b.v_; }

private:
    explicit BaseDomain(CompositeValuation v) : v_(std::move(v)) {}

    CompositeValuation v_;
};

} // namespace qvlab
