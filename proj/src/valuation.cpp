#include "qvlab/valuation.hpp"

#include "qvlab/errors.hpp"

namespace qvlab {

PadicValuation::PadicValuation(Integer p) : p_(std::move(p))
{
    if (!is_prime(p_))
        throw config_error("valuation prime must be prime, got " + p_.get_str());
}

std::optional<GroupElement> PadicValuation::operator()(Rational const& q) const
{
    if (q.is_zero())
        return std::nullopt;
    return GroupElement({padic_order(p_, q)});
}

Rational PadicValuation::element_with_value(GroupElement const& g) const
{
    if (g.rank() != 1)
        throw structural_error("p-adic value group has rank 1");
    return rpow(Rational(p_), g[0].get_si());
}

CompositeValuation::CompositeValuation(Integer p) : p_(std::move(p))
{
    if (!is_prime(p_))
        throw config_error("valuation prime must be prime, got " + p_.get_str());
}

std::optional<GroupElement> CompositeValuation::operator()(RatFunc const& f) const
{
    if (f.is_zero())
        return std::nullopt;
    auto ln = f.num().low_degree();
    auto ld = f.den().low_degree();
    Rational c = f.num().coeffs()[ln] / f.den().coeffs()[ld];
    long ord = static_cast<long>(ln) - static_cast<long>(ld);
    return GroupElement({ord, padic_order(p_, c)});
}

RatFunc CompositeValuation::element_with_value(GroupElement const& g) const
{
    if (g.rank() != 2)
        throw structural_error("composite value group has rank 2");
    long a = g[0].get_si();
    RatFunc pb(rpow(Rational(p_), g[1].get_si()));
    RatFunc ta = a >= 0 ? RatFunc(QPoly::monomial(Rational(1), static_cast<std::size_t>(a)))
                        : RatFunc(QPoly(Rational(1)), QPoly::monomial(Rational(1), static_cast<std::size_t>(-a)));
    return pb * ta;
}

std::optional<GroupElement> vp(Integer const& p, Rational const& q)
{
    return PadicValuation(p)(q);
}

std::optional<GroupElement> composite_valuation(Integer const& p, RatFunc const& f)
{
    return CompositeValuation(p)(f);
}

} // namespace qvlab
