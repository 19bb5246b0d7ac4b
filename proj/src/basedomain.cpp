#include "qvlab/basedomain.hpp"

#include "qvlab/errors.hpp"

namespace qvlab {

namespace {

// Shared by both valuation-ring instances: the fiber { a : v(a) + v(c) >= 0 }
// equals { v(a) >= 0 } exactly when min v(c) = 0.
template <class F, class D>
std::optional<F> valuation_fiber_witness(D const& dom, std::span<const F> cs)
{
    std::optional<GroupElement> m;
    for (auto const& c : cs) {
        auto vc = dom.value(c);
        if (vc && (!m || *vc < *m))
            m = vc;
    }
    if (!m)
        return F(1) / dom.noninvertible();
    if (m->is_zero())
        return std::nullopt;
    if (*m > GroupElement::zero(m->rank()))
        return dom.element_with_value(-*m);
    return F(1);
}

} // namespace

BaseDomain<Rational> BaseDomain<Rational>::local(Integer p)
{
    if (!is_prime(p))
        throw config_error("Z_(p) needs a prime p, got " + p.get_str());
    return BaseDomain(DomainKind::local, std::move(p));
}

BaseDomain<Rational> BaseDomain<Rational>::valuation_ring(PadicValuation const& v)
{
    return BaseDomain(DomainKind::valuation_ring, v.prime());
}

std::string BaseDomain<Rational>::name() const
{
    switch (kind_) {
    case DomainKind::integers: return "Z";
    case DomainKind::local: return "Z_(" + p_.get_str() + ")";
    case DomainKind::valuation_ring: return "O_v[v_" + p_.get_str() + "]";
    }
    return {};
}

bool BaseDomain<Rational>::contains(Rational const& f) const
{
    if (kind_ == DomainKind::integers)
        return f.is_integer();
    return f.is_zero() || !mpz_divisible_p(f.den().get_mpz_t(), p_.get_mpz_t());
}

bool BaseDomain<Rational>::is_unit(Rational const& f) const
{
    return !f.is_zero() && contains(f) && contains(Rational(1) / f);
}

Rational BaseDomain<Rational>::clear_to_domain(Rational const& f) const
{
    if (f.is_zero())
        return Rational(1);
    if (kind_ == DomainKind::integers)
        return Rational(f.den());
    long v = padic_order(p_, f);
    return v >= 0 ? Rational(1) : Rational(ipow(p_, static_cast<unsigned long>(-v)));
}

Rational BaseDomain<Rational>::common_denominator(std::span<const Rational> fs) const
{
    if (kind_ == DomainKind::integers) {
        Integer l = 1;
        for (auto const& f : fs)
            l = lcm(l, f.den());
        return Rational(l);
    }
    long m = 0;
    for (auto const& f : fs)
        if (!f.is_zero())
            m = std::min(m, padic_order(p_, f));
    return Rational(ipow(p_, static_cast<unsigned long>(-m)));
}

Rational BaseDomain<Rational>::noninvertible() const
{
    return kind_ == DomainKind::integers ? Rational(2) : Rational(p_);
}

std::optional<GroupElement> BaseDomain<Rational>::value(Rational const& f) const
{
    if (!valuation_like())
        throw config_error("Z carries no valuation in this setting");
    return vp(p_, f);
}

Rational BaseDomain<Rational>::element_with_value(GroupElement const& g) const
{
    if (!valuation_like())
        throw config_error("Z carries no valuation in this setting");
    return PadicValuation(p_).element_with_value(g);
}

bool BaseDomain<Rational>::subset_of(BaseDomain const& other) const
{
    if (kind_ == DomainKind::integers)
        return true;
    return other.kind_ != DomainKind::integers && p_ == other.p_;
}

std::optional<Rational> BaseDomain<Rational>::scalar_fiber_witness(std::span<const Rational> cs) const
{
    if (valuation_like())
        return valuation_fiber_witness<Rational>(*this, cs);
    // { a : a*c in Z } = (b/a')Z for c = a'/b in lowest terms; the
    // intersection is generated by lcm(b)/gcd(a').
    Integer l = 1;
    Integer g = 0;
    bool any = false;
    for (auto const& c : cs) {
        if (c.is_zero())
            continue;
        any = true;
        l = lcm(l, c.den());
        g = gcd(g, abs(c.num()));
    }
    if (!any)
        return Rational(1, 2);
    Rational gen(l, g);
    if (gen == Rational(1))
        return std::nullopt;
    if (gen.is_integer())
        return Rational(1);
    return gen;
}

bool BaseDomain<RatFunc>::contains(RatFunc const& f) const
{
    auto v = v_(f);
    return !v || *v >= GroupElement::zero(2);
}

bool BaseDomain<RatFunc>::is_unit(RatFunc const& f) const
{
    auto v = v_(f);
    return v && v->is_zero();
}

RatFunc BaseDomain<RatFunc>::clear_to_domain(RatFunc const& f) const
{
    auto v = v_(f);
    if (!v || *v >= GroupElement::zero(2))
        return RatFunc(1);
    return v_.element_with_value(-*v);
}

RatFunc BaseDomain<RatFunc>::common_denominator(std::span<const RatFunc> fs) const
{
    std::optional<GroupElement> m;
    for (auto const& f : fs) {
        auto v = v_(f);
        if (v && (!m || *v < *m))
            m = v;
    }
    if (!m || *m >= GroupElement::zero(2))
        return RatFunc(1);
    return v_.element_with_value(-*m);
}

std::optional<RatFunc> BaseDomain<RatFunc>::scalar_fiber_witness(std::span<const RatFunc> cs) const
{
    return valuation_fiber_witness<RatFunc>(*this, cs);
}

} // namespace qvlab
