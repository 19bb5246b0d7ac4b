#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qvlab/ordgroup.hpp"

namespace qvlab {

/// Element of Q in lowest terms with positive denominator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(Integer const& n) : q_(n) {} // NOLINT(google-explicit-constructor)
    Rational(Integer const& n, Integer const& d);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(Rational const& o) { q_ += o.q_; return *this; }
    Rational& operator-=(Rational const& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(Rational const& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(Rational const& o);

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }
    friend bool operator==(Rational const& a, Rational const& b) { return a.q_ == b.q_; }
    friend bool operator<(Rational const& a, Rational const& b) { return a.q_ < b.q_; }

    mpq_class const& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    mpq_class q_;
};

// "a/b", with "/b" omitted when b = 1.
std::string to_string(Rational const& q);
Rational parse_rational(std::string_view text);

// Exponent of p in q (q != 0).
long padic_order(Integer const& p, Rational const& q);
long padic_order(Integer const& p, Integer const& n);
bool is_prime(Integer const& p);

Integer ipow(Integer const& base, unsigned long e);
Rational rpow(Rational const& base, long e);

} // namespace qvlab
