#pragma once

#include <cstdint>
#include <string>

#include "qvlab/basedomain.hpp"
#include "qvlab/ratfunc.hpp"
#include "qvlab/rational.hpp"

namespace qvlab {

/// SplitMix64. Recurrence, for ports that must reproduce streams:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Integers in [lo, hi] are lo + next() % (hi - lo + 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    long uniform(long lo, long hi)
    {
        auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    bool coin(unsigned percent) { return next() % 100 < percent; }

private:
    std::uint64_t state_;
};

/// Reproducibility record carried by every sampled report.
struct SampleSpec {
    std::size_t count = 200;
    std::uint64_t seed = 42;
    long coeff_bound = 9;   // numerators and unit parts in [-bound, bound]
    long max_p_power = 3;   // denominators/numerators mix p^a, |a| <= this

    std::string describe() const
    {
        return "count=" + std::to_string(count) + " seed=" + std::to_string(seed) + " coeff_bound="
               + std::to_string(coeff_bound) + " max_p_power=" + std::to_string(max_p_power);
    }
};

template <class F>
struct Sampler;

template <>
struct Sampler<Rational> {
    // A field element: (+-u) * p^a / w with u, w small and a in
    // [-max_p_power, max_p_power]; p is the noninvertible generator of S.
    static Rational field(SplitMix64& rng, BaseDomain<Rational> const& S, SampleSpec const& spec)
    {
        if (rng.coin(5))
            return Rational(0);
        Integer p = S.noninvertible().num();
        long u = rng.uniform(-spec.coeff_bound, spec.coeff_bound);
        if (u == 0)
            u = 1;
        long w = rng.uniform(1, spec.coeff_bound);
        long a = rng.uniform(-spec.max_p_power, spec.max_p_power);
        return Rational(u) * rpow(Rational(p), a) / Rational(w);
    }

    static Rational domain(SplitMix64& rng, BaseDomain<Rational> const& S, SampleSpec const& spec)
    {
        if (rng.coin(5))
            return Rational(0);
        long u = rng.uniform(-spec.coeff_bound, spec.coeff_bound);
        if (S.kind() == DomainKind::integers)
            return Rational(u) * rpow(Rational(2), rng.uniform(0, spec.max_p_power));
        Integer p = S.prime();
        long w = rng.uniform(1, spec.coeff_bound);
        while (mpz_divisible_p(Integer(w).get_mpz_t(), p.get_mpz_t()))
            ++w;
        return Rational(u) * rpow(Rational(p), rng.uniform(0, spec.max_p_power)) / Rational(w);
    }

    static Rational nonzero_domain(SplitMix64& rng, BaseDomain<Rational> const& S, SampleSpec const& spec)
    {
        for (;;) {
            auto x = domain(rng, S, spec);
            if (!x.is_zero())
                return x;
        }
    }
};

template <>
struct Sampler<RatFunc> {
    // p-unit: small integer not divisible by p.
    static Rational unit(SplitMix64& rng, Integer const& p, long bound)
    {
        for (;;) {
            long u = rng.uniform(-bound, bound);
            if (u != 0 && !mpz_divisible_p(Integer(u).get_mpz_t(), p.get_mpz_t()))
                return Rational(u);
        }
    }

    // A unit g of O_v: (u0 + c1 t + c2 t^2) / (w0 + d1 t) with u0, w0 p-units.
    static RatFunc unit_function(SplitMix64& rng, Integer const& p, SampleSpec const& spec)
    {
        std::vector<Rational> num{unit(rng, p, spec.coeff_bound)};
        std::vector<Rational> den{unit(rng, p, spec.coeff_bound)};
        long extra = rng.uniform(0, 2);
        for (long i = 0; i < extra; ++i)
            num.push_back(Rational(rng.uniform(-spec.coeff_bound, spec.coeff_bound))
                          * rpow(Rational(p), rng.uniform(-spec.max_p_power, spec.max_p_power)));
        if (rng.coin(50))
            den.push_back(Rational(rng.uniform(-spec.coeff_bound, spec.coeff_bound)));
        return RatFunc(QPoly(std::move(num)), QPoly(std::move(den)));
    }

    static RatFunc with_value(long a, long b, Integer const& p, SplitMix64& rng, SampleSpec const& spec)
    {
        CompositeValuation v(p);
        return v.element_with_value(GroupElement({a, b})) * unit_function(rng, p, spec);
    }

    static RatFunc field(SplitMix64& rng, BaseDomain<RatFunc> const& S, SampleSpec const& spec)
    {
        if (rng.coin(5))
            return RatFunc(0);
        long a = rng.uniform(-2, 2);
        long b = rng.uniform(-spec.max_p_power, spec.max_p_power);
        return with_value(a, b, S.prime(), rng, spec);
    }

    static RatFunc domain(SplitMix64& rng, BaseDomain<RatFunc> const& S, SampleSpec const& spec)
    {
        if (rng.coin(5))
            return RatFunc(0);
        long a = rng.uniform(0, 2);
        long b = a == 0 ? rng.uniform(0, spec.max_p_power) : rng.uniform(-spec.max_p_power, spec.max_p_power);
        return with_value(a, b, S.prime(), rng, spec);
    }

    static RatFunc nonzero_domain(SplitMix64& rng, BaseDomain<RatFunc> const& S, SampleSpec const& spec)
    {
        for (;;) {
            auto x = domain(rng, S, spec);
            if (!x.is_zero())
                return x;
        }
    }
};

} // namespace qvlab
