#include "qvlab/ratfunc.hpp"

#include <algorithm>

#include "qvlab/errors.hpp"

namespace qvlab {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

QPoly::QPoly(Rational const& c)
{
    if (!c.is_zero())
        c_.push_back(c);
}

QPoly QPoly::monomial(Rational const& c, std::size_t degree)
{
    if (c.is_zero())
        return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

std::size_t QPoly::low_degree() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return i;
    throw domain_error("t-adic order of the zero polynomial");
}

QPoly QPoly::operator-() const
{
    return scaled(Rational(-1));
}

QPoly QPoly::scaled(Rational const& s) const
{
    std::vector<Rational> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i] * s;
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const
{
    if (is_zero())
        return {};
    return scaled(Rational(1) / leading());
}

QPoly operator+(QPoly const& a, QPoly const& b)
{
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        v[i] += b.c_[i];
    return QPoly(std::move(v));
}

QPoly operator-(QPoly const& a, QPoly const& b)
{
    return a + (-b);
}

QPoly operator*(QPoly const& a, QPoly const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(QPoly const& a, QPoly const& b)
{
    if (b.is_zero())
        throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {QPoly(), a};
    std::vector<Rational> r = a.coeffs();
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    auto const& bc = b.coeffs();
    Rational inv_lead = Rational(1) / b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        auto top = static_cast<std::size_t>(k + b.degree());
        Rational f = r[top] * inv_lead;
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero())
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            r[static_cast<std::size_t>(k) + j] -= f * bc[j];
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RatFunc::RatFunc(QPoly num, QPoly den)
{
    if (den.is_zero())
        throw domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Rational lead = den.leading();
    num_ = num.scaled(Rational(1) / lead);
    den_ = den.scaled(Rational(1) / lead);
}

RatFunc RatFunc::operator-() const
{
    RatFunc out = *this;
    out.num_ = -num_;
    return out;
}

RatFunc operator+(RatFunc const& a, RatFunc const& b)
{
    if (a.den_ == b.den_)
        return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(RatFunc const& a, RatFunc const& b)
{
    return a + (-b);
}

RatFunc operator*(RatFunc const& a, RatFunc const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.den_.degree() == 0 && b.den_.degree() == 0) {
        RatFunc out;
        out.num_ = a.num_ * b.num_;
        return out;
    }
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(RatFunc const& a, RatFunc const& b)
{
    if (b.is_zero())
        throw domain_error("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(QPoly const& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i)
            out += ',';
        out += to_string(p.coeffs()[i]);
    }
    return out + ")";
}

std::string to_string(RatFunc const& f)
{
    if (f.is_zero())
        return "0";
    if (f.is_constant())
        return to_string(f.num().coeffs()[0]);
    if (f.den().degree() == 0)
        return to_string(f.num());
    return to_string(f.num()) + "/" + to_string(f.den());
}

} // namespace qvlab
