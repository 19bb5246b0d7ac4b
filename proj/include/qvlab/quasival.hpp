#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvlab/algebra.hpp"
#include "qvlab/basedomain.hpp"
#include "qvlab/cuts.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/exec.hpp"
#include "qvlab/orders.hpp"
#include "qvlab/report.hpp"
#include "qvlab/sampling.hpp"

namespace qvlab {

/// Filter quasi-valuation induced by an order R = sum S r_j over a valuation
/// ring S = O_v.
///
/// For x in A put mu(x) = min_{i,j} v(coordinate i of x*r_j in {r}). Then
/// a in S_x = { a in O_v : xR subset aR } iff v(a) <= mu(x), so the left
/// set v(S_x) is { g <= mu(x) } and w(x) = phi(mu(x)). The same formula
/// evaluates the localisation W on all of A (w(cx) = v(c) + w(x)).
/// W(0) = INF, W never returns BOT, and W(1) = phi(0) because 1 lies in R
/// with coordinates read off a basis of R.
template <ExactField F>
class FilterQV {
public:
    FilterQV(StructureAlgebra<F> alg, BaseDomain<F> S, std::vector<Vec<F>> order_basis)
        : alg_(std::make_shared<const StructureAlgebra<F>>(std::move(alg))), S_(std::move(S)),
          frame_(std::make_shared<const BasisFrame<F>>(std::move(order_basis)))
    {
        if (!S_.valuation_like())
            throw config_error("filter quasi-valuations need a valuation ring, not " + S_.name());
        if (frame_->size() != alg_->dim())
            throw structural_error("order basis is not a basis of A");
    }

    static FilterQV from_order(StructureAlgebra<F> const& alg, SubringOracle<F> const& R)
    {
        if (!R.domain().valuation_like())
            throw config_error("filter quasi-valuations need a valuation ring, not " + R.domain().name());
        if (!R.lattice_basis())
            throw config_error("order has no lattice basis (" + R.provenance() + ")");
        return FilterQV(alg, R.domain(), *R.lattice_basis());
    }

    StructureAlgebra<F> const& algebra() const { return *alg_; }
    BaseDomain<F> const& domain() const { return S_; }
    std::vector<Vec<F>> const& order_basis() const { return frame_->basis(); }
    std::size_t value_rank() const { return S_.value_rank(); }

    /// nullopt iff x = 0.
    std::optional<GroupElement> support_mu(Vec<F> const& x) const
    {
        alg_->require_element(x);
        std::optional<GroupElement> mu;
        for (auto const& r : frame_->basis())
            for (auto const& c : frame_->coords(alg_->multiply(x, r))) {
                auto v = S_.value(c);
                if (v && (!mu || *v < *mu))
                    mu = std::move(v);
            }
        return mu;
    }

    Value eval(Vec<F> const& x) const
    {
        auto mu = support_mu(x);
        if (!mu)
            return Value::infinity(value_rank());
        return embed(*mu);
    }

    // Coordinates of x in the order basis; used by the clearing route.
    Vec<F> order_coords(Vec<F> const& x) const { return frame_->coords(x); }

private:
    std::shared_ptr<const StructureAlgebra<F>> alg_;
    BaseDomain<F> S_;
    std::shared_ptr<const BasisFrame<F>> frame_;
};

/// Filter quasi-valuation of the monomial lattice in F[y] (the Gauss
/// valuation). mu(x) is the minimum over shifts j <= bound of the
/// coefficient valuations of x*y^j in the monomial basis.
template <ExactField F>
class GaussQV {
public:
    using P = PolynomialAlgebra<F>;
    using Element = typename P::Element;

    explicit GaussQV(BaseDomain<F> S, std::size_t shift_bound = 4) : S_(std::move(S)), shifts_(shift_bound)
    {
        if (!S_.valuation_like())
            throw config_error("Gauss quasi-valuation needs a valuation ring");
    }

    BaseDomain<F> const& domain() const { return S_; }

    std::optional<GroupElement> support_mu(Element const& x) const
    {
        std::optional<GroupElement> mu;
        for (std::size_t j = 0; j <= shifts_; ++j)
            for (auto const& [n, c] : P::multiply(x, P::monomial(F::one(), j))) {
                auto v = S_.value(c);
                if (v && (!mu || *v < *mu))
                    mu = std::move(v);
            }
        return mu;
    }

    Value eval(Element const& x) const
    {
        auto mu = support_mu(x);
        return mu ? Value(embed(*mu)) : Value::infinity(S_.value_rank());
    }

private:
    BaseDomain<F> S_;
    std::size_t shifts_;
};

/// Sample sizes for one audit run.
struct AuditSpec {
    std::size_t pairs = 500;   // B2 and B3
    std::size_t triples = 300; // scalar law (c, x, cx)
    std::size_t scalars = 200; // extension W(a*1) = phi(v(a))
    std::size_t mixed = 500;   // O_W = R
    std::uint64_t seed = 42;
    SampleSpec shape{};

    static AuditSpec uniform(std::size_t n, std::uint64_t seed)
    {
        AuditSpec a{n, n, n, n, seed, {}};
        a.shape.seed = seed;
        return a;
    }

    std::string describe() const
    {
        return "seed=" + std::to_string(seed) + " pairs=" + std::to_string(pairs) + " triples=" + std::to_string(triples)
               + " scalars=" + std::to_string(scalars) + " mixed=" + std::to_string(mixed)
               + " coeff_bound=" + std::to_string(shape.coeff_bound) + " max_p_power=" + std::to_string(shape.max_p_power);
    }
};

namespace detail {

inline void record(CheckVerdict& v, std::vector<std::optional<std::string>> const& fails)
{
    v.checked = fails.size();
    for (auto const& f : fails)
        if (f) {
            v.passed = false;
            v.witness = *f;
            return;
        }
}

template <ExactField F>
Vec<F> random_element(StructureAlgebra<F> const& alg, BaseDomain<F> const& S, SplitMix64& rng, SampleSpec const& spec)
{
    Vec<F> x(alg.dim(), F::zero());
    for (auto& c : x)
        if (rng.coin(75))
            c = Sampler<F>::field(rng, S, spec);
    return x;
}

template <ExactField F>
Vec<F> random_member(std::vector<Vec<F>> const& basis, BaseDomain<F> const& S, SplitMix64& rng, SampleSpec const& spec)
{
    Vec<F> x(basis.front().size(), F::zero());
    for (auto const& b : basis)
        x = add(x, scale(Sampler<F>::domain(rng, S, spec), b));
    return x;
}

} // namespace detail

/// Runs the quasi-valuation axiom battery on sampled inputs:
///   B1 W(0) = INF; B2 W(xy) >= W(x) + W(y); B3 W(x+y) >= min;
///   scalar law W(cx) = v(c) + W(x), c in O_v nonzero;
///   extension W(a*1) = phi(v(a)); O_W = R (W(x) >= 0 iff x in R);
///   BOT never in the image; and the clearing route W(x) = W(sx) - v(s)
///   with s clearing the order coordinates of x.
/// `extra_pairs` are prepended to the B2/B3 samples. Counterexamples are
/// reported verbatim.
template <ExactField F>
Report qv_audit(FilterQV<F> const& Q, SubringOracle<F> const& R, AuditSpec const& spec,
                std::vector<std::pair<Vec<F>, Vec<F>>> const& extra_pairs = {}, Exec exec = Exec::serial)
{
    auto const& alg = Q.algebra();
    auto const& S = Q.domain();
    auto rank = Q.value_rank();
    SplitMix64 rng(spec.seed);
    auto const& shape = spec.shape;
    auto show = [](Value const& v) { return to_string(v); };

    Report rep;
    rep.title = "filter quasi-valuation audit over " + S.name();
    rep.header = {"order: " + R.provenance(), "samples: " + spec.describe()};

    std::vector<Value> seen;
    {
        CheckVerdict v{"B1 w(0) = INF", true, "exact", 1, "", ""};
        auto w0 = Q.eval(alg.zero());
        if (!w0.is_infinite()) {
            v.passed = false;
            v.witness = "w(0) = " + show(w0);
        }
        rep.checks.push_back(std::move(v));
    }

    std::vector<std::pair<Vec<F>, Vec<F>>> pairs = extra_pairs;
    for (std::size_t i = 0; i < spec.pairs; ++i) {
        auto pick = [&]() {
            auto roll = rng.uniform(0, 9);
            if (roll == 0)
                return alg.zero();
            if (roll < 5)
                return detail::random_member(Q.order_basis(), S, rng, shape);
            return detail::random_element(alg, S, rng, shape);
        };
        auto x = pick();
        auto y = pick();
        pairs.emplace_back(std::move(x), std::move(y));
    }
    std::vector<std::optional<std::string>> bottom_hits(pairs.size());
    {
        CheckVerdict v{"B2 w(xy) >= w(x) + w(y)", true, "sampled", 0, "", ""};
        std::vector<int> strict(pairs.size(), 0);
        auto fails = run_checks(exec, pairs.size(), [&](std::size_t i) -> std::optional<std::string> {
            auto const& [x, y] = pairs[i];
            auto wx = Q.eval(x), wy = Q.eval(y), wxy = Q.eval(alg.multiply(x, y));
            for (auto const* w : {&wx, &wy, &wxy})
                if (!w->is_infinite() && w->cut().is_bottom())
                    bottom_hits[i] = "BOT produced at pair " + std::to_string(i);
            if (!(wx + wy <= wxy))
                return "x = " + to_string(x) + ", y = " + to_string(y) + ": w(xy) = " + show(wxy)
                       + " < w(x) + w(y) = " + show(wx + wy);
            strict[i] = (wx + wy < wxy) ? 1 : 0;
            return std::nullopt;
        });
        detail::record(v, fails);
        std::size_t nstrict = 0;
        for (int s : strict)
            nstrict += static_cast<std::size_t>(s);
        v.note = "strict in " + std::to_string(nstrict) + " pairs";
        rep.checks.push_back(std::move(v));
    }
    {
        CheckVerdict v{"B3 w(x+y) >= min(w(x), w(y))", true, "sampled", 0, "", ""};
        auto fails = run_checks(exec, pairs.size(), [&](std::size_t i) -> std::optional<std::string> {
            auto const& [x, y] = pairs[i];
            auto wx = Q.eval(x), wy = Q.eval(y), ws = Q.eval(add(x, y));
            auto lo = wx <= wy ? wx : wy;
            if (!(lo <= ws))
                return "x = " + to_string(x) + ", y = " + to_string(y) + ": w(x+y) = " + show(ws) + " < " + show(lo);
            return std::nullopt;
        });
        detail::record(v, fails);
        rep.checks.push_back(std::move(v));
    }
    {
        std::vector<std::pair<F, Vec<F>>> triples;
        for (std::size_t i = 0; i < spec.triples; ++i) {
            auto c = Sampler<F>::nonzero_domain(rng, S, shape);
            auto x = rng.coin(50) ? detail::random_member(Q.order_basis(), S, rng, shape)
                                  : detail::random_element(alg, S, rng, shape);
            triples.emplace_back(std::move(c), std::move(x));
        }
        CheckVerdict v{"scalar law w(cx) = v(c) + w(x)", true, "sampled", 0, "", ""};
        auto fails = run_checks(exec, triples.size(), [&](std::size_t i) -> std::optional<std::string> {
            auto const& [c, x] = triples[i];
            auto lhs = Q.eval(scale(c, x));
            auto rhs = Value(embed(*S.value(c))) + Q.eval(x);
            if (!(lhs == rhs))
                return "c = " + to_string(c) + ", x = " + to_string(x) + ": " + show(lhs) + " != " + show(rhs);
            return std::nullopt;
        });
        detail::record(v, fails);
        rep.checks.push_back(std::move(v));
    }
    {
        std::vector<F> alphas;
        for (std::size_t i = 0; i < spec.scalars; ++i)
            alphas.push_back(Sampler<F>::field(rng, S, shape));
        CheckVerdict v{"extension W(a*1) = phi(v(a))", true, "sampled", 0, "", ""};
        auto fails = run_checks(exec, alphas.size(), [&](std::size_t i) -> std::optional<std::string> {
            auto const& a = alphas[i];
            auto lhs = Q.eval(alg.scalar(a));
            auto va = S.value(a);
            Value rhs = va ? Value(embed(*va)) : Value::infinity(rank);
            if (!(lhs == rhs))
                return "a = " + to_string(a) + ": W(a*1) = " + show(lhs) + ", phi(v(a)) = " + show(rhs);
            return std::nullopt;
        });
        detail::record(v, fails);
        rep.checks.push_back(std::move(v));
    }
    std::vector<Vec<F>> mixed;
    for (std::size_t i = 0; i < spec.mixed; ++i)
        mixed.push_back(i % 2 ? detail::random_member(Q.order_basis(), S, rng, shape)
                              : detail::random_element(alg, S, rng, shape));
    {
        CheckVerdict v{"O_W = R", true, "sampled", 0, "", ""};
        auto zero = Value(zero_cut(rank));
        auto fails = run_checks(exec, mixed.size(), [&](std::size_t i) -> std::optional<std::string> {
            auto w = Q.eval(mixed[i]);
            if (!w.is_infinite() && w.cut().is_bottom())
                return "BOT produced at " + to_string(mixed[i]);
            bool in_ow = zero <= w;
            if (in_ow != R.contains(mixed[i]))
                return "x = " + to_string(mixed[i]) + ": W(x) = " + show(w) + " but membership in R is "
                       + (in_ow ? "false" : "true");
            return std::nullopt;
        });
        detail::record(v, fails);
        rep.checks.push_back(std::move(v));
    }
    {
        CheckVerdict v{"clearing route W(x) = W(sx) - v(s)", true, "sampled", 0, "", ""};
        auto fails = run_checks(exec, mixed.size(), [&](std::size_t i) -> std::optional<std::string> {
            auto const& x = mixed[i];
            F s = F::one();
            for (auto const& c : Q.order_coords(x))
                s = s * S.clear_to_domain(c);
            auto sx = scale(s, x);
            if (!R.contains(sx))
                return "cleared element not in R: " + to_string(sx);
            auto lhs = translate(Q.eval(sx), *S.value(s));
            auto rhs = Q.eval(x);
            if (!(lhs == rhs))
                return "x = " + to_string(x) + ": " + show(lhs) + " != " + show(rhs);
            return std::nullopt;
        });
        detail::record(v, fails);
        rep.checks.push_back(std::move(v));
    }
    {
        CheckVerdict v{"BOT never in image", true, "sampled", bottom_hits.size() + mixed.size(), "", ""};
        for (auto const& b : bottom_hits)
            if (b) {
                v.passed = false;
                v.witness = *b;
                break;
            }
        if (v.passed)
            for (auto const& x : mixed) {
                auto w = Q.eval(x);
                if (!w.is_infinite() && w.cut().is_bottom()) {
                    v.passed = false;
                    v.witness = "BOT produced at " + to_string(x);
                    break;
                }
            }
        rep.checks.push_back(std::move(v));
    }
    return rep;
}

enum class QVOrder { equal_on_samples, less_eq, greater_eq, incomparable_on_samples };

inline std::string to_string(QVOrder o)
{
    switch (o) {
    case QVOrder::equal_on_samples: return "equal-on-samples";
    case QVOrder::less_eq: return "<='";
    case QVOrder::greater_eq: return ">='";
    case QVOrder::incomparable_on_samples: return "incomparable-on-samples";
    }
    return {};
}

template <ExactField F>
struct QVComparison {
    QVOrder verdict = QVOrder::equal_on_samples;
    // Elements with w1(x) < w2(x), resp. w1(x) > w2(x).
    std::vector<Vec<F>> below;
    std::vector<Vec<F>> above;
};

/// Pointwise comparison of two evaluators on the given elements (the
/// "<='" order: w1 <=' w2 iff w1(x) <= w2(x) for every x).
template <ExactField F>
QVComparison<F> qv_compare(FilterQV<F> const& w1, FilterQV<F> const& w2, std::vector<Vec<F>> const& samples)
{
    if (w1.value_rank() != w2.value_rank())
        throw config_error("quasi-valuations have value groups of different rank");
    if (!(w1.algebra() == w2.algebra()))
        throw config_error("quasi-valuations live on different algebras");
    if (!(w1.domain() == w2.domain()))
        throw config_error("quasi-valuations extend different valuations");
    QVComparison<F> out;
    for (auto const& x : samples) {
        auto c = compare(w1.eval(x), w2.eval(x));
        if (c < 0)
            out.below.push_back(x);
        else if (c > 0)
            out.above.push_back(x);
    }
    if (out.below.empty() && out.above.empty())
        out.verdict = QVOrder::equal_on_samples;
    else if (out.above.empty())
        out.verdict = QVOrder::less_eq;
    else if (out.below.empty())
        out.verdict = QVOrder::greater_eq;
    else
        out.verdict = QVOrder::incomparable_on_samples;
    return out;
}

/// Value at x of the intersection of a chain of quasi-valuations: the left
/// sets form a chain, so their intersection is the least of them.
inline Value qv_chain_values(std::vector<Value> const& values)
{
    if (values.empty())
        throw domain_error("chain of values is empty");
    Value best = values.front();
    for (auto const& v : values)
        if (v < best)
            best = v;
    return best;
}

} // namespace qvlab
