#include <gtest/gtest.h>

#include "fuzz.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/orders.hpp"

using namespace qvlab;
using Q = Rational;
using QD = BaseDomain<Q>;

namespace {

Vec<Q> v(std::initializer_list<char const*> xs)
{
    Vec<Q> out;
    for (auto const* s : xs)
        out.push_back(parse_rational(s));
    return out;
}

std::vector<Vec<Q>> units(StructureAlgebra<Q> const& alg)
{
    std::vector<Vec<Q>> out;
    for (std::size_t i = 0; i < alg.dim(); ++i)
        out.push_back(alg.basis_element(i));
    return out;
}

// Two bases span the same S-module iff each one's coordinates in the other
// lie in S.
template <ExactField F>
bool same_module(BaseDomain<F> const& S, std::vector<Vec<F>> const& a, std::vector<Vec<F>> const& b)
{
    BasisFrame<F> fa(a), fb(b);
    for (auto const& x : a)
        for (auto const& c : fb.coords(x))
            if (!S.contains(c))
                return false;
    for (auto const& x : b)
        for (auto const& c : fa.coords(x))
            if (!S.contains(c))
                return false;
    return true;
}

bool entries_in(std::vector<QD> const& domains, Vec<Q> const& x)
{
    for (auto const& c : x)
        for (auto const& S : domains)
            if (!S.contains(c))
                return false;
    return true;
}

std::vector<Vec<Q>> samples(std::size_t dim, QD const& S, std::uint64_t seed, std::size_t n)
{
    SplitMix64 rng(seed);
    SampleSpec spec;
    std::vector<Vec<Q>> out;
    for (std::size_t i = 0; i < n; ++i) {
        Vec<Q> x(dim);
        for (auto& c : x)
            c = rng.coin(50) ? Sampler<Q>::domain(rng, S, spec) : Sampler<Q>::field(rng, S, spec);
        out.push_back(std::move(x));
    }
    return out;
}

SubringOracle<Q> m2_z2()
{
    auto m2 = matrix_algebra<Q>(2);
    return left_order(m2, LatticeModule<Q>(QD::local(2), units(m2)));
}

} // namespace

TEST(Orders, LatticeMembershipExamples)
{
    auto m2 = matrix_algebra<Q>(2);
    LatticeModule<Q> M(QD::local(2), units(m2));
    EXPECT_TRUE(M.contains(v({"3/5", "0", "0", "1"})));
    EXPECT_FALSE(M.contains(v({"1/2", "0", "0", "0"})));

    using P = PolynomialAlgebra<Q>;
    PolynomialOrder<Q> poly(QD::local(2));
    auto x = P::add(P::monomial(Q(2), 0), P::monomial(parse_rational("1/3"), 1));
    EXPECT_TRUE(poly.lattice_contains(x));
    EXPECT_TRUE(poly.contains(x));
    EXPECT_FALSE(poly.contains(P::monomial(parse_rational("1/2"), 3)));
}

TEST(Orders, LeftOrderSqrt2)
{
    auto sq = quadratic_algebra<Q>(Q(2), "r");
    auto S = QD::local(2);
    auto R = left_order(sq, LatticeModule<Q>(S, {v({"1", "0"}), v({"0", "1/2"})}));
    ASSERT_TRUE(R.lattice_basis().has_value());
    EXPECT_TRUE(same_module(S, *R.lattice_basis(), {v({"1", "0"}), v({"0", "1"})}));
    // Hand derivation: a + b r in R iff a, b in Z_(2).
    for (auto const& x : samples(2, S, 3, 200)) {
        EXPECT_EQ(R.contains(x), entries_in({S}, x)) << to_string(x);
        EXPECT_EQ(R.contains(x), R.contains_by_lattice(x));
    }
}

TEST(Orders, LeftOrderOfSelfStableLatticeIsItself)
{
    auto m2 = matrix_algebra<Q>(2);
    auto S = QD::local(2);
    auto R = m2_z2();
    EXPECT_TRUE(same_module(S, *R.lattice_basis(), units(m2)));
    LatticeModule<Q> M(S, units(m2));
    for (auto const& x : samples(4, S, 5, 300))
        EXPECT_EQ(R.contains(x), M.contains(x));
}

TEST(Orders, LeftOrderPolynomialBackend)
{
    using P = PolynomialAlgebra<Q>;
    auto S = QD::local(2);
    PolynomialOrder<Q> R(S);
    SplitMix64 rng(8);
    SampleSpec spec;
    for (int i = 0; i < 200; ++i) {
        P::Element x;
        bool all_in = true;
        for (std::size_t n = 0; n < 4; ++n) {
            auto c = Sampler<Q>::field(rng, S, spec);
            all_in = all_in && S.contains(c);
            x = P::add(x, P::monomial(c, n));
        }
        EXPECT_EQ(R.contains(x), all_in);
    }
}

TEST(Orders, LeftOrderRejectsNonBasis)
{
    auto sq = quadratic_algebra<Q>(Q(2), "r");
    EXPECT_THROW(left_order(sq, LatticeModule<Q>(QD::local(2), {v({"1", "0"})})), structural_error);
    EXPECT_THROW(left_order(sq, LatticeModule<Q>(QD::local(2), {v({"1", "1"}), v({"2", "2"})})), structural_error);
}

TEST(Orders, LeftOrderLatticeAgreesFuzzed)
{
    auto m2 = matrix_algebra<Q>(2);
    auto sq = quadratic_algebra<Q>(Q(2), "r");
    SplitMix64 rng(12);
    SampleSpec spec;
    spec.coeff_bound = 5;
    for (auto const* alg : {&m2, &sq})
        for (auto const& S : {QD::local(2), QD::local(3)})
            for (int i = 0; i < 6; ++i) {
                auto B = fuzz::random_basis<Q>(rng, units(*alg), spec, S);
                auto R = left_order(*alg, LatticeModule<Q>(S, B));
                for (auto const& x : samples(alg->dim(), S, 100 + static_cast<std::uint64_t>(i), 60))
                    ASSERT_EQ(R.contains(x), R.contains_by_lattice(x)) << to_string(x);
                for (auto const& r : *R.lattice_basis())
                    EXPECT_TRUE(R.contains(r));
            }
}

TEST(Orders, VerifyNiceExamples)
{
    auto m2 = matrix_algebra<Q>(2);
    auto rep = verify_nice(m2, m2_z2(), SampleSpec{});
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_EQ(rep.find("R meet F = S")->method, "exact");

    auto sq = quadratic_algebra<Q>(Q(2), "r");
    auto L = lattice_as_oracle(sq, LatticeModule<Q>(QD::local(2), {v({"1", "0"}), v({"0", "1/2"})}));
    auto bad = verify_nice(sq, L, SampleSpec{});
    EXPECT_FALSE(bad.passed());
    auto const* closure = bad.find("ring closure");
    ASSERT_NE(closure, nullptr);
    EXPECT_FALSE(closure->passed);
    EXPECT_NE(closure->witness.find("[1/2, 0]"), std::string::npos) << closure->witness;

    // Q*1 + M2(Z_(2)): off-diagonal entries and x11 - x22 in Z_(2).
    auto S = QD::local(2);
    auto member = [S](Vec<Q> const& x) { return S.contains(x[1]) && S.contains(x[2]) && S.contains(x[0] - x[3]); };
    auto clear = [S](Vec<Q> const& x) {
        std::vector<Q> cs{x[1], x[2], x[0] - x[3]};
        return S.common_denominator(std::span<const Q>(cs));
    };
    SubringOracle<Q> corrupted({S, member, clear, units(m2), std::nullopt, std::nullopt, "Q*1 + M2(Z_(2))"});
    auto lo = verify_nice(m2, corrupted, SampleSpec{});
    auto const* lying = lo.find("R meet F = S");
    EXPECT_FALSE(lying->passed);
    EXPECT_EQ(lying->method, "sampled");
    EXPECT_NE(lying->witness.find("alpha = 1/2"), std::string::npos) << lying->witness;
}

TEST(Orders, IdealVariant)
{
    auto dual = quadratic_algebra<Q>(Q(0));
    std::vector<Vec<Q>> I{v({"0", "1"})};
    for (auto const& S : {QD::local(2), QD::integers()}) {
        auto R = nice_with_ideal(dual, I, S);
        for (auto const& x : samples(2, S, 17, 300))
            EXPECT_EQ(R.contains(x), S.contains(x[0])) << to_string(x);
        EXPECT_TRUE(R.contains(v({"0", "1/1000"})));
        auto rep = verify_nice(dual, R, SampleSpec{});
        EXPECT_TRUE(rep.passed()) << rep.to_text();
        EXPECT_EQ(rep.find("R meet F = S")->method, "exact");
    }
    auto m2 = matrix_algebra<Q>(2);
    EXPECT_THROW(nice_with_ideal(m2, {m2.basis_element(0)}, QD::integers()), domain_error);
    EXPECT_THROW(nice_with_ideal(dual, {v({"1", "0"})}, QD::integers()), domain_error);
}

TEST(Orders, GoingDown)
{
    auto m2 = matrix_algebra<Q>(2);
    auto R2 = m2_z2();
    auto G = going_down(m2, R2, QD::integers(), units(m2));
    EXPECT_FALSE(G.contains(v({"1/3", "0", "0", "1"})));
    EXPECT_TRUE(R2.contains(v({"1/3", "0", "0", "1"})));
    EXPECT_TRUE(G.contains(v({"7", "1", "0", "2"})));
    for (auto const& x : samples(4, QD::integers(), 23, 300)) {
        EXPECT_EQ(G.contains(x), entries_in({QD::integers()}, x));
        if (G.contains(x))
            EXPECT_TRUE(R2.contains(x));
    }
    auto rep = verify_nice(m2, G, SampleSpec{});
    EXPECT_TRUE(rep.passed()) << rep.to_text();
    EXPECT_THROW(going_down(m2, left_order(m2, LatticeModule<Q>(QD::integers(), units(m2))), QD::local(2), units(m2)),
                 domain_error);
}

TEST(Orders, Intersections)
{
    auto m2 = matrix_algebra<Q>(2);
    auto R2 = m2_z2();
    auto R3 = left_order(m2, LatticeModule<Q>(QD::local(3), units(m2)));
    auto both = intersect_oracles<Q>({R2, R3});
    for (auto const& x : samples(4, QD::integers(), 29, 300))
        EXPECT_EQ(both.contains(x), entries_in({QD::local(2), QD::local(3)}, x));
    auto single = intersect_oracles<Q>({R2});
    for (auto const& x : samples(4, QD::local(2), 30, 100))
        EXPECT_EQ(single.contains(x), R2.contains(x));
    EXPECT_THROW(intersect_oracles<Q>({}), domain_error);
}

TEST(Orders, DescendChainMatrixWitnessE12)
{
    auto m2 = matrix_algebra<Q>(2);
    auto S = QD::local(2);
    StableBasisCertificate<Q> cert{units(m2), units(m2)};
    auto chain = descend_chain(m2, cert, S, 2, std::optional<Vec<Q>>(m2.basis_element(1)));
    ASSERT_EQ(chain.terms.size(), 3u);
    EXPECT_EQ(chain.witnesses[0], m2.basis_element(1));
    // The step-1 basis contains 2e12; e12 then has coordinate 1/2 on it.
    auto const& B1 = chain.certificates[0].basis;
    auto pos = std::find(B1.begin(), B1.end(), v({"0", "2", "0", "0"}));
    ASSERT_NE(pos, B1.end());
    auto coords = BasisFrame<Q>(B1).coords(m2.basis_element(1));
    EXPECT_EQ(coords[static_cast<std::size_t>(pos - B1.begin())], parse_rational("1/2"));
    for (std::size_t i = 0; i < chain.witnesses.size(); ++i) {
        EXPECT_TRUE(chain.terms[i].contains(chain.witnesses[i]));
        EXPECT_FALSE(chain.terms[i + 1].contains(chain.witnesses[i]));
    }
    for (auto const& t : chain.terms)
        EXPECT_TRUE(verify_nice(m2, t, SampleSpec{}).passed());
}

TEST(Orders, DescendChainDefaultsAndSqrt2)
{
    auto m2 = matrix_algebra<Q>(2);
    auto S = QD::local(2);
    StableBasisCertificate<Q> cert{units(m2), units(m2)};
    auto chain = descend_chain(m2, cert, S, 3);
    EXPECT_EQ(chain.witnesses[0], m2.basis_element(0));
    // Inclusions never increase on samples.
    for (auto const& x : samples(4, S, 41, 300))
        for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i)
            if (chain.terms[i + 1].contains(x))
                EXPECT_TRUE(chain.terms[i].contains(x));

    auto sq = quadratic_algebra<Q>(Q(2), "r");
    std::vector<Vec<Q>> B{v({"1", "0"}), v({"0", "1"})};
    auto sc = descend_chain(sq, stabilizer_finite(sq, B, S), S, 1);
    EXPECT_EQ(sc.witnesses[0], v({"0", "1"}));
    EXPECT_TRUE(sc.terms[0].contains(v({"0", "1"})));
    EXPECT_FALSE(sc.terms[1].contains(v({"0", "1"})));
    EXPECT_TRUE(verify_nice(sq, sc.terms[1], SampleSpec{}).passed());

    EXPECT_THROW(descend_chain(m2, cert, S, 0), domain_error);
    EXPECT_THROW(descend_chain(m2, cert, S, 1, std::optional<Vec<Q>>(m2.unit())), domain_error);
}

TEST(Orders, MatrixChain)
{
    auto chain = matrix_nice_chain(QD::integers(), {Q(4), Q(2)}, 2);
    ASSERT_EQ(chain.terms.size(), 2u);
    EXPECT_TRUE(chain.terms[0].contains(v({"1", "4", "5", "7"})));
    EXPECT_FALSE(chain.terms[0].contains(v({"0", "2", "0", "0"})));
    EXPECT_TRUE(chain.terms[1].contains(v({"0", "2", "0", "0"})));
    EXPECT_EQ(chain.witnesses[0], v({"0", "2", "0", "0"}));
    auto m2 = matrix_algebra<Q>(2);
    for (auto const& t : chain.terms)
        EXPECT_TRUE(verify_nice(m2, t, SampleSpec{}).passed());
    EXPECT_THROW(matrix_nice_chain(QD::integers(), {Q(2), Q(4)}, 2), domain_error);
    EXPECT_THROW(matrix_nice_chain(QD::integers(), {Q(2), Q(-2)}, 2), domain_error);
    EXPECT_THROW(matrix_nice_chain(QD::integers(), {Q(4)}, 1), domain_error);
}

TEST(Orders, CompositeLeftOrder)
{
    using T = RatFunc;
    auto m2 = matrix_algebra<T>(2);
    auto S = BaseDomain<T>::valuation_ring(CompositeValuation(2));
    std::vector<Vec<T>> U;
    for (std::size_t i = 0; i < 4; ++i)
        U.push_back(m2.basis_element(i));
    auto R = left_order(m2, LatticeModule<T>(S, U));
    EXPECT_TRUE(same_module(S, *R.lattice_basis(), U));
    auto rep = verify_nice(m2, R, SampleSpec{50, 3});
    EXPECT_TRUE(rep.passed()) << rep.to_text();
}
