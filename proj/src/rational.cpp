#include "qvlab/rational.hpp"

#include "qvlab/errors.hpp"
#include "qvlab/text.hpp"

namespace qvlab {

Rational::Rational(Integer const& n, Integer const& d)
{
    if (d == 0)
        throw domain_error("zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational& Rational::operator/=(Rational const& o)
{
    if (o.is_zero())
        throw domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string to_string(Rational const& q)
{
    if (q.is_integer())
        return q.num().get_str();
    return q.num().get_str() + "/" + q.den().get_str();
}

Rational parse_rational(std::string_view text)
{
    auto parts = split(text, '/');
    if (parts.size() == 1)
        return Rational(parse_integer(parts[0]));
    if (parts.size() == 2) {
        auto d = parse_integer(parts[1]);
        if (d == 0)
            throw parse_error("zero denominator in '" + std::string(text) + "'");
        return Rational(parse_integer(parts[0]), d);
    }
    throw parse_error("malformed rational '" + std::string(text) + "'");
}

long padic_order(Integer const& p, Integer const& n)
{
    if (n == 0)
        throw domain_error("p-adic order of zero");
    Integer m = abs(n);
    long k = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++k;
    }
    return k;
}

long padic_order(Integer const& p, Rational const& q)
{
    return padic_order(p, q.num()) - padic_order(p, q.den());
}

bool is_prime(Integer const& p)
{
    return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

Integer ipow(Integer const& base, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Rational rpow(Rational const& base, long e)
{
    if (e >= 0)
        return Rational(ipow(base.num(), static_cast<unsigned long>(e)), ipow(base.den(), static_cast<unsigned long>(e)));
    return Rational(1) / rpow(base, -e);
}

} // namespace qvlab
