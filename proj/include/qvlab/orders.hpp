#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qvlab/algebra.hpp"
#include "qvlab/basedomain.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/exec.hpp"
#include "qvlab/linalg.hpp"
#include "qvlab/report.hpp"
#include "qvlab/sampling.hpp"
#include "qvlab/stability.hpp"

namespace qvlab {

/// M = sum_{b in B} S b for a basis B of A. Membership is coordinatewise
/// membership in S.
template <ExactField F>
class LatticeModule {
public:
    LatticeModule(BaseDomain<F> S, std::vector<Vec<F>> basis) : S_(std::move(S)), frame_(std::move(basis)) {}

    BaseDomain<F> const& domain() const { return S_; }
    std::vector<Vec<F>> const& basis() const { return frame_.basis(); }
    BasisFrame<F> const& frame() const { return frame_; }

    bool contains(Vec<F> const& x) const
    {
        for (auto const& c : frame_.coords(x))
            if (!S_.contains(c))
                return false;
        return true;
    }

private:
    BaseDomain<F> S_;
    BasisFrame<F> frame_;
};

/// alpha*1 lies in the oracle's ring iff alpha*coefficient lies in domain,
/// for every constraint of the oracle.
template <ExactField F>
struct ScalarConstraint {
    BaseDomain<F> domain;
    F coefficient;
};

/// A subring of A known through a membership predicate, with the data the
/// constructions below can certify exactly: an F-basis of A inside the ring,
/// a clearing map x -> s with s*x in the ring, optionally a lattice basis
/// (over valuation-like S) and a description of the ring's scalars.
template <ExactField F>
class SubringOracle {
public:
    using Element = Vec<F>;

    struct Parts {
        BaseDomain<F> domain;
        std::function<bool(Element const&)> member;
        std::function<F(Element const&)> clear;
        std::vector<Element> contained_basis;
        std::optional<std::vector<Element>> lattice;
        std::optional<std::vector<ScalarConstraint<F>>> scalars;
        std::string provenance;
    };

    explicit SubringOracle(Parts parts) : p_(std::make_shared<const Parts>(std::move(parts)))
    {
        if (p_->lattice)
            frame_ = std::make_shared<const BasisFrame<F>>(*p_->lattice);
    }

    BaseDomain<F> const& domain() const { return p_->domain; }
    std::string const& provenance() const { return p_->provenance; }
    std::vector<Element> const& contained_basis() const { return p_->contained_basis; }
    std::optional<std::vector<Element>> const& lattice_basis() const { return p_->lattice; }
    std::optional<std::vector<ScalarConstraint<F>>> const& scalar_constraints() const { return p_->scalars; }

    bool contains(Element const& x) const { return p_->member(x); }
    // Nonzero s in S with s*x in the ring.
    F clear(Element const& x) const { return p_->clear(x); }

    // Membership read off the lattice coordinates; needs a lattice basis.
    bool contains_by_lattice(Element const& x) const
    {
        if (!frame_)
            throw config_error("oracle has no lattice representation");
        for (auto const& c : frame_->coords(x))
            if (!domain().contains(c))
                return false;
        return true;
    }
    BasisFrame<F> const& lattice_frame() const
    {
        if (!frame_)
            throw config_error("oracle has no lattice representation");
        return *frame_;
    }

private:
    std::shared_ptr<const Parts> p_;
    std::shared_ptr<const BasisFrame<F>> frame_;
};

/// Basis of { a in F^n : sum_i a_i images[i] in S^m } for an injective linear
/// map given by the images of the standard basis, S valuation-like.
///
/// Column elimination with pivot of minimal valuation among the remaining
/// columns and unused rows (ties: lowest row, then lowest column). After
/// scaling the pivot to 1 every remaining entry in unused rows is integral,
/// and clearing the pivot row from all other columns keeps finished columns
/// integral, so the finished columns are an S-basis of the image meet S^m.
template <ExactField F>
std::vector<Vec<F>> lattice_preimage(BaseDomain<F> const& S, std::vector<Vec<F>> const& images)
{
    if (!S.valuation_like())
        throw config_error("lattice bases are computed only over valuation-like domains, not " + S.name());
    std::size_t n = images.size();
    if (n == 0)
        return {};
    std::size_t m = images.front().size();
    std::vector<Vec<F>> image = images;
    std::vector<Vec<F>> pre(n, Vec<F>(n, F::zero()));
    for (std::size_t i = 0; i < n; ++i)
        pre[i][i] = F::one();

    std::vector<bool> row_used(m, false), col_done(n, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::pair<std::size_t, std::size_t>> best; // (row, col)
        std::optional<GroupElement> best_v;
        for (std::size_t r = 0; r < m; ++r) {
            if (row_used[r])
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (col_done[c] || image[c][r].is_zero())
                    continue;
                auto v = *S.value(image[c][r]);
                if (!best_v || v < *best_v) {
                    best_v = v;
                    best = {r, c};
                }
            }
        }
        if (!best)
            throw structural_error("linear map is not injective; no lattice preimage");
        auto [r, c] = *best;
        F inv = F::one() / image[c][r];
        image[c] = scale(inv, image[c]);
        pre[c] = scale(inv, pre[c]);
        for (std::size_t o = 0; o < n; ++o) {
            if (o == c || image[o][r].is_zero())
                continue;
            F f = image[o][r];
            image[o] = sub(image[o], scale(f, image[c]));
            pre[o] = sub(pre[o], scale(f, pre[c]));
        }
        row_used[r] = true;
        col_done[c] = true;
        order.push_back(c);
    }
    std::vector<Vec<F>> out;
    for (auto c : order)
        out.push_back(pre[c]);
    return out;
}

namespace detail {

template <ExactField F>
std::vector<ScalarConstraint<F>> constraints_from(BaseDomain<F> const& S, std::vector<F> const& coeffs)
{
    std::vector<ScalarConstraint<F>> out;
    for (auto const& c : coeffs)
        if (!c.is_zero())
            out.push_back({S, c});
    return out;
}

} // namespace detail

/// R = { x in A : x M subset M }. The predicate route tests the coordinates
/// of x*b for every b in B; over valuation-like S a lattice basis of R is
/// also computed from the map x -> (coords of x*b_1, ..., x*b_n).
template <ExactField F>
SubringOracle<F> left_order(StructureAlgebra<F> const& alg, LatticeModule<F> const& M)
{
    if (M.basis().size() != alg.dim())
        throw structural_error("lattice basis is not a basis of A");
    for (auto const& b : M.basis())
        alg.require_element(b);
    auto S = M.domain();
    auto mod = std::make_shared<const LatticeModule<F>>(M);
    auto A = std::make_shared<const StructureAlgebra<F>>(alg);

    auto member = [A, mod](Vec<F> const& x) {
        for (auto const& b : mod->basis())
            if (!mod->contains(A->multiply(x, b)))
                return false;
        return true;
    };
    auto clear = [A, mod](Vec<F> const& x) {
        std::vector<F> all;
        for (auto const& b : mod->basis())
            for (auto const& c : mod->frame().coords(A->multiply(x, b)))
                all.push_back(c);
        return mod->domain().common_denominator(all);
    };

    std::vector<F> unit_coeffs;
    for (auto const& b : M.basis())
        for (auto const& c : M.frame().coords(alg.multiply(alg.unit(), b)))
            unit_coeffs.push_back(c);

    std::optional<std::vector<Vec<F>>> lattice;
    std::vector<Vec<F>> contained;
    if (S.valuation_like()) {
        std::vector<Vec<F>> images;
        for (std::size_t k = 0; k < alg.dim(); ++k) {
            Vec<F> img;
            for (auto const& b : M.basis())
                for (auto const& c : M.frame().coords(alg.multiply(alg.basis_element(k), b)))
                    img.push_back(c);
            images.push_back(std::move(img));
        }
        lattice = lattice_preimage(S, images);
        contained = *lattice;
    } else {
        contained = stabilizer_finite(alg, M.basis(), S).stabilizer;
    }
    return SubringOracle<F>({S, member, clear, contained, lattice, detail::constraints_from(S, unit_coeffs),
                             "left-order of " + S.name() + "-lattice"});
}

/// The lattice M itself presented as an oracle (not necessarily a ring);
/// used to exhibit failures of the ring and lying-over audits.
template <ExactField F>
SubringOracle<F> lattice_as_oracle(StructureAlgebra<F> const& alg, LatticeModule<F> const& M)
{
    auto mod = std::make_shared<const LatticeModule<F>>(M);
    auto member = [mod](Vec<F> const& x) { return mod->contains(x); };
    auto clear = [mod](Vec<F> const& x) { return mod->domain().common_denominator(mod->frame().coords(x)); };
    auto unit_coeffs = M.frame().coords(alg.unit());
    std::optional<std::vector<Vec<F>>> lattice;
    if (M.domain().valuation_like())
        lattice = M.basis();
    return SubringOracle<F>({M.domain(), member, clear, M.basis(), lattice,
                             detail::constraints_from(M.domain(), unit_coeffs), "lattice " + M.domain().name()});
}

/// Conjunction of finitely many oracles. The domain is that of the first
/// entry; list the smallest domain first.
template <ExactField F>
SubringOracle<F> intersect_oracles(std::vector<SubringOracle<F>> const& parts, std::string provenance = "intersection")
{
    if (parts.empty())
        throw domain_error("intersection of an empty list of oracles");
    if (parts.size() == 1)
        return parts.front();
    auto list = std::make_shared<const std::vector<SubringOracle<F>>>(parts);
    auto member = [list](Vec<F> const& x) {
        for (auto const& r : *list)
            if (!r.contains(x))
                return false;
        return true;
    };
    auto clear = [list](Vec<F> const& x) {
        F s = F::one();
        Vec<F> y = x;
        for (auto const& r : *list) {
            F t = r.clear(y);
            s = s * t;
            y = scale(t, y);
        }
        return s;
    };
    std::vector<Vec<F>> contained;
    for (auto const& c : parts.front().contained_basis())
        contained.push_back(scale(clear(c), c));

    auto const& S = parts.front().domain();
    std::optional<std::vector<Vec<F>>> lattice;
    bool latticeable = S.valuation_like();
    std::optional<std::vector<ScalarConstraint<F>>> scalars = std::vector<ScalarConstraint<F>>{};
    for (auto const& r : parts) {
        latticeable = latticeable && r.lattice_basis() && r.domain() == S;
        if (r.scalar_constraints() && scalars)
            scalars->insert(scalars->end(), r.scalar_constraints()->begin(), r.scalar_constraints()->end());
        else
            scalars.reset();
    }
    if (latticeable) {
        std::size_t n = contained.size();
        std::vector<Vec<F>> images(n);
        for (auto const& r : parts)
            for (std::size_t k = 0; k < n; ++k) {
                Vec<F> e(n, F::zero());
                e[k] = F::one();
                for (auto const& c : r.lattice_frame().coords(e))
                    images[k].push_back(c);
            }
        lattice = lattice_preimage(S, images);
    }
    return SubringOracle<F>({S, member, clear, contained, lattice, scalars, std::move(provenance)});
}

/// Exact decision of R meet F = S from the scalar constraints, when every
/// constraint over a domain other than S is implied by membership in S.
/// Returns nullopt when undecidable this way; otherwise (equal?, witness).
template <ExactField F>
std::optional<std::pair<bool, std::string>> exact_lying_over(SubringOracle<F> const& R)
{
    auto const& cons = R.scalar_constraints();
    if (!cons)
        return std::nullopt;
    auto const& S = R.domain();
    std::vector<F> own;
    for (auto const& c : *cons) {
        if (c.domain == S) {
            own.push_back(c.coefficient);
            continue;
        }
        if (!(S.subset_of(c.domain) && c.domain.contains(c.coefficient)))
            return std::nullopt;
    }
    if (own.empty())
        return std::nullopt;
    auto w = S.scalar_fiber_witness(std::span<const F>(own));
    if (!w)
        return std::pair{true, std::string()};
    std::string side = S.contains(*w) ? " is in S but alpha*1 is not in R" : " is not in S but alpha*1 is in R";
    return std::pair{false, "alpha = " + to_string(*w) + side};
}

/// Audits that R is an S-nice subalgebra: RF = A (exact, by a contained
/// basis), R meet F = S (exact from scalar constraints where available,
/// otherwise sampled), closure under + and * and the lattice/predicate
/// agreement (sampled).
template <ExactField F>
Report verify_nice(StructureAlgebra<F> const& alg, SubringOracle<F> const& R, SampleSpec const& spec,
                   Exec exec = Exec::serial)
{
    using Samp = Sampler<F>;
    auto const& S = R.domain();
    Report rep;
    rep.title = "nice-subalgebra audit over " + S.name();
    rep.header = {"provenance: " + R.provenance(), "samples: " + spec.describe()};

    {
        CheckVerdict v{"RF = A", true, "exact", 0, "", "via contained basis"};
        auto const& basis = R.contained_basis();
        v.checked = basis.size();
        if (basis.size() != alg.dim() || !independent<F>(basis)) {
            v.passed = false;
            v.witness = "contained set is not a basis of A";
        } else {
            for (auto const& b : basis)
                if (!R.contains(b)) {
                    v.passed = false;
                    v.witness = "basis element " + to_string(b) + " is not in R";
                    break;
                }
        }
        rep.checks.push_back(std::move(v));
    }

    SplitMix64 rng(spec.seed);
    {
        CheckVerdict v{"R meet F = S", true, "exact", 1, "", ""};
        auto exact = exact_lying_over(R);
        if (exact) {
            v.passed = exact->first;
            v.witness = exact->second;
            v.note = "via scalar constraints";
        } else {
            v.method = "sampled";
            std::vector<F> alphas{F::one() / S.noninvertible(), F::one() / (S.noninvertible() * S.noninvertible()),
                                  F::one(), S.noninvertible()};
            for (std::size_t i = 0; i < spec.count; ++i)
                alphas.push_back(i % 2 ? Samp::domain(rng, S, spec) : Samp::field(rng, S, spec));
            auto fails = run_checks(exec, alphas.size(), [&](std::size_t i) -> std::optional<std::string> {
                bool in_r = R.contains(alg.scalar(alphas[i]));
                if (in_r != S.contains(alphas[i]))
                    return "alpha = " + to_string(alphas[i]) + (in_r ? " is not in S but alpha*1 is in R"
                                                                        : " is in S but alpha*1 is not in R");
                return std::nullopt;
            });
            v.checked = alphas.size();
            for (auto const& f : fails)
                if (f) {
                    v.passed = false;
                    v.witness = *f;
                    break;
                }
        }
        rep.checks.push_back(std::move(v));
    }

    // Members: the contained basis first, then random S-combinations of it.
    std::vector<Vec<F>> members = R.contained_basis();
    for (std::size_t i = 0; i < spec.count; ++i) {
        Vec<F> x = alg.zero();
        for (auto const& b : R.contained_basis())
            x = add(x, scale(Samp::domain(rng, S, spec), b));
        members.push_back(std::move(x));
    }
    {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::size_t nb = R.contained_basis().size();
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t j = 0; j < nb; ++j)
                pairs.emplace_back(i, j);
        for (std::size_t i = 0; i < spec.count; ++i)
            pairs.emplace_back(static_cast<std::size_t>(rng.uniform(0, static_cast<long>(members.size()) - 1)),
                               static_cast<std::size_t>(rng.uniform(0, static_cast<long>(members.size()) - 1)));
        CheckVerdict v{"ring closure", true, "sampled", pairs.size(), "", ""};
        auto fails = run_checks(exec, pairs.size(), [&](std::size_t k) -> std::optional<std::string> {
            auto const& x = members[pairs[k].first];
            auto const& y = members[pairs[k].second];
            if (!R.contains(x) || !R.contains(y))
                return "sampled member " + to_string(R.contains(x) ? y : x) + " is not in R";
            if (!R.contains(add(x, y)))
                return "x + y not in R for x = " + to_string(x) + ", y = " + to_string(y);
            auto xy = alg.multiply(x, y);
            if (!R.contains(xy))
                return "x*y = " + to_string(xy) + " not in R for x = " + to_string(x) + ", y = " + to_string(y);
            return std::nullopt;
        });
        for (auto const& f : fails)
            if (f) {
                v.passed = false;
                v.witness = *f;
                break;
            }
        rep.checks.push_back(std::move(v));
    }
    {
        CheckVerdict v{"contains S*1", true, "sampled", 0, "", ""};
        std::vector<F> scalars{F::one(), S.noninvertible()};
        for (std::size_t i = 0; i < spec.count / 4 + 1; ++i)
            scalars.push_back(Samp::domain(rng, S, spec));
        v.checked = scalars.size();
        for (auto const& s : scalars)
            if (!R.contains(alg.scalar(s))) {
                v.passed = false;
                v.witness = to_string(s) + "*1 is not in R";
                break;
            }
        rep.checks.push_back(std::move(v));
    }
    if (R.lattice_basis()) {
        std::vector<Vec<F>> xs = members;
        for (std::size_t i = 0; i < spec.count; ++i) {
            Vec<F> x(alg.dim(), F::zero());
            for (auto& c : x)
                c = Samp::field(rng, S, spec);
            xs.push_back(std::move(x));
        }
        CheckVerdict v{"lattice agrees with predicate", true, "sampled", xs.size(), "", ""};
        auto fails = run_checks(exec, xs.size(), [&](std::size_t i) -> std::optional<std::string> {
            if (R.contains(xs[i]) != R.contains_by_lattice(xs[i]))
                return "disagreement at " + to_string(xs[i]);
            return std::nullopt;
        });
        for (auto const& f : fails)
            if (f) {
                v.passed = false;
                v.witness = *f;
                break;
            }
        rep.checks.push_back(std::move(v));
    }
    return rep;
}

/// The basis B of A used by the ideal variant: the ideal basis followed by
/// the unit and ambient basis vectors that extend it.
template <ExactField F>
std::vector<Vec<F>> extend_ideal_basis(StructureAlgebra<F> const& alg, std::vector<Vec<F>> const& ideal)
{
    std::vector<Vec<F>> basis = ideal;
    std::vector<Vec<F>> candidates{alg.unit()};
    for (std::size_t i = 0; i < alg.dim(); ++i)
        candidates.push_back(alg.basis_element(i));
    for (auto const& c : candidates) {
        if (basis.size() == alg.dim())
            break;
        basis.push_back(c);
        if (!independent<F>(basis))
            basis.pop_back();
    }
    return basis;
}

/// Checks that span(ideal) is a proper two-sided ideal; throws domain_error.
template <ExactField F>
void require_proper_ideal(StructureAlgebra<F> const& alg, std::vector<Vec<F>> const& ideal)
{
    for (auto const& b : ideal)
        alg.require_element(b);
    if (!independent<F>(ideal))
        throw domain_error("ideal basis is linearly dependent");
    if (ideal.size() >= alg.dim())
        throw domain_error("ideal is not proper");
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (auto const& b : ideal)
            for (auto const& prod : {alg.multiply(alg.basis_element(i), b), alg.multiply(b, alg.basis_element(i))}) {
                auto ext = ideal;
                ext.push_back(prod);
                if (independent<F>(ext))
                    throw domain_error("span is not a two-sided ideal: " + alg.names()[i] + " times "
                                       + to_string(b) + " leaves it");
            }
}

/// R = { x : xN subset N } for N = I + sum_{b in B \ B1} S b. Since
/// x I subset I, membership only constrains the (B \ B1)-coordinates of x*b
/// for b in B \ B1.
template <ExactField F>
SubringOracle<F> nice_with_ideal(StructureAlgebra<F> const& alg, std::vector<Vec<F>> const& ideal,
                                 BaseDomain<F> const& S)
{
    require_proper_ideal(alg, ideal);
    auto basis = extend_ideal_basis(alg, ideal);
    std::size_t t = ideal.size();
    auto frame = std::make_shared<const BasisFrame<F>>(basis);
    auto A = std::make_shared<const StructureAlgebra<F>>(alg);

    auto constrained = [A, frame, t](Vec<F> const& x) {
        std::vector<F> out;
        for (std::size_t j = t; j < frame->size(); ++j) {
            auto c = frame->coords(A->multiply(x, (*frame)[j]));
            out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(t), c.end());
        }
        return out;
    };
    auto member = [S, constrained](Vec<F> const& x) {
        for (auto const& c : constrained(x))
            if (!S.contains(c))
                return false;
        return true;
    };
    auto clear = [S, constrained](Vec<F> const& x) { return S.common_denominator(constrained(x)); };

    std::vector<Vec<F>> contained = ideal;
    for (std::size_t j = t; j < basis.size(); ++j)
        contained.push_back(scale(clear(basis[j]), basis[j]));
    return SubringOracle<F>({S, member, clear, contained, std::nullopt,
                             detail::constraints_from(S, constrained(alg.unit())), "ideal-variant over " + S.name()});
}

/// An S1-nice subalgebra inside R2: the conjunction of R2 with the left
/// order of the S1-lattice on B.
template <ExactField F>
SubringOracle<F> going_down(StructureAlgebra<F> const& alg, SubringOracle<F> const& R2, BaseDomain<F> const& S1,
                            std::vector<Vec<F>> const& basis)
{
    if (!S1.subset_of(R2.domain()))
        throw domain_error(S1.name() + " is not contained in " + R2.domain().name());
    auto R1 = left_order(alg, LatticeModule<F>(S1, basis));
    return intersect_oracles<F>({R1, R2}, "going-down " + S1.name() + " inside " + R2.domain().name());
}

template <ExactField F>
struct DescendingChain {
    std::vector<SubringOracle<F>> terms;
    // witnesses[i] lies in terms[i] but not in terms[i + 1].
    std::vector<Vec<F>> witnesses;
    // Stable basis containing {1, s0*y} used at each step.
    std::vector<StableBasisCertificate<F>> certificates;
};

/// Strictly descending chain of S-nice subalgebras starting at the left
/// order of the certificate's lattice. At each step y is the candidate
/// (default: first stabilizer element outside F*1) scaled into the current
/// term; the next term meets it with the left order of a stable basis
/// containing {1, s0*y}, which excludes y.
template <ExactField F>
DescendingChain<F> descend_chain(StructureAlgebra<F> const& alg, StableBasisCertificate<F> const& cert,
                                 BaseDomain<F> const& S, std::size_t steps,
                                 std::optional<Vec<F>> candidate = std::nullopt)
{
    if (steps < 1)
        throw domain_error("descend_chain needs at least one step");
    if (!candidate) {
        for (auto const& c : cert.stabilizer)
            if (!alg.is_scalar(c)) {
                candidate = c;
                break;
            }
        if (!candidate)
            throw domain_error("no element of R outside S: A = F");
    }
    if (alg.is_scalar(*candidate))
        throw domain_error("chain candidate lies in F*1");

    DescendingChain<F> chain;
    chain.terms.push_back(left_order(alg, LatticeModule<F>(S, cert.basis)));
    F s0 = S.noninvertible();
    for (std::size_t step = 0; step < steps; ++step) {
        auto const& current = chain.terms.back();
        Vec<F> y = scale(current.clear(*candidate), *candidate);
        auto stable = extend_stable_basis(alg, cert, {alg.unit(), scale(s0, y)}, S);
        auto Ri = left_order(alg, LatticeModule<F>(S, stable.basis));
        auto next = intersect_oracles<F>({current, Ri}, "descending chain term " + std::to_string(step + 1));
        if (!current.contains(y) || next.contains(y))
            throw std::logic_error("chain step " + std::to_string(step + 1) + " lost its strictness witness");
        chain.witnesses.push_back(std::move(y));
        chain.certificates.push_back(std::move(stable));
        chain.terms.push_back(std::move(next));
    }
    return chain;
}

template <ExactField F>
struct MatrixChain {
    std::vector<SubringOracle<F>> terms;
    // witnesses[k] lies in terms[k + 1] but not in terms[k].
    std::vector<Vec<F>> witnesses;
};

/// Ascending chain in M_n(F): term k is the set of matrices with entries in
/// C whose last column above the diagonal lies in g_k C. Generators must
/// satisfy g_{k+1} | g_k strictly.
template <ExactField F>
MatrixChain<F> matrix_nice_chain(BaseDomain<F> const& C, std::vector<F> const& gens, std::size_t n)
{
    if (n < 2)
        throw domain_error("matrix chain needs n >= 2");
    if (gens.empty())
        throw domain_error("matrix chain needs at least one ideal");
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (gens[k].is_zero() || !C.contains(gens[k]))
            throw domain_error("ideal generator " + to_string(gens[k]) + " is not a nonzero element of " + C.name());
        if (k + 1 < gens.size()) {
            F ratio = gens[k] / gens[k + 1];
            if (!C.contains(ratio) || C.is_unit(ratio))
                throw domain_error("ideals are not strictly ascending at (" + to_string(gens[k]) + ") subset ("
                                   + to_string(gens[k + 1]) + ")");
        }
    }
    auto alg = matrix_algebra<F>(n);
    MatrixChain<F> chain;
    auto in_column = [n](std::size_t idx) { return idx % n == n - 1 && idx / n < n - 1; };
    for (auto const& g : gens) {
        auto normalized = [g, in_column](Vec<F> const& x) {
            Vec<F> out = x;
            for (std::size_t i = 0; i < out.size(); ++i)
                if (in_column(i))
                    out[i] = out[i] / g;
            return out;
        };
        auto member = [C, normalized](Vec<F> const& x) {
            for (auto const& c : normalized(x))
                if (!C.contains(c))
                    return false;
            return true;
        };
        auto clear = [C, normalized](Vec<F> const& x) { return C.common_denominator(normalized(x)); };
        std::vector<Vec<F>> contained;
        for (std::size_t i = 0; i < n * n; ++i)
            contained.push_back(scale(in_column(i) ? g : F::one(), alg.basis_element(i)));
        std::vector<ScalarConstraint<F>> scalars{{C, F::one()}};
        chain.terms.push_back(SubringOracle<F>({C, member, clear, contained, std::nullopt, scalars,
                                                "matrix chain, column ideal (" + to_string(g) + ")"}));
    }
    for (std::size_t k = 0; k + 1 < gens.size(); ++k)
        chain.witnesses.push_back(scale(gens[k + 1], alg.basis_element(n - 1)));
    return chain;
}

/// F[y] with the S-lattice spanned by the monomials. The left order is the
/// ring of polynomials with coefficients in S.
template <ExactField F>
class PolynomialOrder {
public:
    using P = PolynomialAlgebra<F>;
    using Element = typename P::Element;

    explicit PolynomialOrder(BaseDomain<F> S, std::size_t shift_bound = 16) : S_(std::move(S)), shifts_(shift_bound) {}

    BaseDomain<F> const& domain() const { return S_; }

    // Lattice membership: every coefficient in S.
    bool lattice_contains(Element const& x) const
    {
        for (auto const& [n, c] : x)
            if (!S_.contains(c))
                return false;
        return true;
    }

    // Left-order predicate: x * y^j stays in the lattice for j <= shift bound.
    bool contains(Element const& x) const
    {
        for (std::size_t j = 0; j <= shifts_; ++j)
            if (!lattice_contains(P::multiply(x, P::monomial(F::one(), j))))
                return false;
        return true;
    }

private:
    BaseDomain<F> S_;
    std::size_t shifts_;
};

} // namespace qvlab
