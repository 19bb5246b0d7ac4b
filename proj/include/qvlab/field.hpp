#pragma once

#include <concepts>
#include <string>
#include <vector>

#include "qvlab/ratfunc.hpp"
#include "qvlab/rational.hpp"

namespace qvlab {

template <class F>
concept ExactField = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
    { to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<RatFunc>);

template <class F>
using Vec = std::vector<F>;

template <ExactField F>
bool is_zero(Vec<F> const& v)
{
    for (auto const& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

template <ExactField F>
Vec<F> add(Vec<F> const& a, Vec<F> const& b)
{
    Vec<F> out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

template <ExactField F>
Vec<F> sub(Vec<F> const& a, Vec<F> const& b)
{
    Vec<F> out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

template <ExactField F>
Vec<F> scale(F const& s, Vec<F> const& a)
{
    Vec<F> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = s * a[i];
    return out;
}

template <ExactField F>
std::string to_string(Vec<F> const& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

} // namespace qvlab
