#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qvlab/rational.hpp"

namespace qvlab {

/// Polynomial in t over Q, coefficients lowest degree first, no trailing
/// zeros (the zero polynomial has no coefficients).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(Rational const& c); // NOLINT(google-explicit-constructor)

    static QPoly monomial(Rational const& c, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::vector<Rational> const& coeffs() const { return c_; }
    Rational const& leading() const { return c_.back(); }
    // Index of the lowest nonzero coefficient (the t-adic order).
    std::size_t low_degree() const;

    QPoly operator-() const;
    friend QPoly operator+(QPoly const& a, QPoly const& b);
    friend QPoly operator-(QPoly const& a, QPoly const& b);
    friend QPoly operator*(QPoly const& a, QPoly const& b);
    friend bool operator==(QPoly const& a, QPoly const& b) { return a.c_ == b.c_; }

    QPoly scaled(Rational const& s) const;
    QPoly monic() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Euclidean division a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(QPoly const& a, QPoly const& b);
// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

/// Element of Q(t) as num/den with den monic and gcd(num, den) = 1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(long n) : RatFunc(QPoly(Rational(n))) {} // NOLINT(google-explicit-constructor)
    RatFunc(Rational const& c) : RatFunc(QPoly(c)) {} // NOLINT(google-explicit-constructor)
    RatFunc(QPoly const& p) : num_(p), den_(Rational(1)) {} // NOLINT(google-explicit-constructor)
    RatFunc(QPoly num, QPoly den);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc t() { return RatFunc(QPoly::monomial(Rational(1), 1)); }

    QPoly const& num() const { return num_; }
    QPoly const& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator-() const;
    RatFunc& operator+=(RatFunc const& o) { return *this = *this + o; }
    RatFunc& operator-=(RatFunc const& o) { return *this = *this - o; }
    RatFunc& operator*=(RatFunc const& o) { return *this = *this * o; }
    RatFunc& operator/=(RatFunc const& o) { return *this = *this / o; }

    friend RatFunc operator+(RatFunc const& a, RatFunc const& b);
    friend RatFunc operator-(RatFunc const& a, RatFunc const& b);
    friend RatFunc operator*(RatFunc const& a, RatFunc const& b);
    friend RatFunc operator/(RatFunc const& a, RatFunc const& b);
    friend bool operator==(RatFunc const& a, RatFunc const& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    // Constant term as a rational, if the function is constant.
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

private:
    QPoly num_;
    QPoly den_;
};

// "(c0,c1,...)/(d0,d1,...)" with coefficient lists lowest degree first;
// constants print as plain rationals.
std::string to_string(QPoly const& p);
std::string to_string(RatFunc const& f);

} // namespace qvlab
