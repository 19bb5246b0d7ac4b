#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qvlab/algebra.hpp"
#include "qvlab/basedomain.hpp"
#include "qvlab/errors.hpp"
#include "qvlab/linalg.hpp"

namespace qvlab {

/// A basis B of A together with a basis C stabilising it: every coordinate
/// of c*b in B lies in S.
template <ExactField F>
struct StableBasisCertificate {
    std::vector<Vec<F>> basis;
    std::vector<Vec<F>> stabilizer;
};

struct StabilityViolation {
    std::size_t stabilizer_index;
    std::size_t basis_index;
    std::size_t coordinate;
    std::string value;
};

struct StabilityReport {
    bool ok = true;
    std::size_t products_checked = 0;
    std::vector<StabilityViolation> violations;
};

template <ExactField F>
StabilityReport is_stable(StructureAlgebra<F> const& alg, std::vector<Vec<F>> const& basis,
                          std::vector<Vec<F>> const& stabilizer, BaseDomain<F> const& S)
{
    for (auto const& x : basis)
        alg.require_element(x);
    for (auto const& x : stabilizer)
        alg.require_element(x);
    if (stabilizer.size() != basis.size() || !independent<F>(stabilizer))
        throw structural_error("stabilizer must be a basis of A");
    BasisFrame<F> frame(basis);
    StabilityReport report;
    for (std::size_t ci = 0; ci < stabilizer.size(); ++ci)
        for (std::size_t bi = 0; bi < basis.size(); ++bi) {
            auto coords = frame.coords(alg.multiply(stabilizer[ci], basis[bi]));
            ++report.products_checked;
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (!S.contains(coords[k]))
                    report.violations.push_back({ci, bi, k, to_string(coords[k])});
        }
    report.ok = report.violations.empty();
    return report;
}

template <ExactField F>
StabilityReport is_stable(StructureAlgebra<F> const& alg, StableBasisCertificate<F> const& cert, BaseDomain<F> const& S)
{
    return is_stable(alg, cert.basis, cert.stabilizer, S);
}

/// Every basis of a finite-dimensional algebra is S-stable. With gamma_ij the
/// product of the cleared denominators of the coordinates of x_i x_j and
/// delta_i = prod_j gamma_ij, the set { delta_i x_i } stabilises B.
template <ExactField F>
StableBasisCertificate<F> stabilizer_finite(StructureAlgebra<F> const& alg, std::vector<Vec<F>> const& basis,
                                            BaseDomain<F> const& S)
{
    BasisFrame<F> frame(basis);
    std::size_t n = basis.size();
    if (n != alg.dim())
        throw structural_error("a basis of A needs exactly dim(A) elements");
    StableBasisCertificate<F> cert{basis, {}};
    for (std::size_t i = 0; i < n; ++i) {
        F delta = F::one();
        for (std::size_t j = 0; j < n; ++j) {
            F gamma = F::one();
            for (auto const& c : frame.coords(alg.multiply(basis[i], basis[j])))
                gamma = gamma * S.clear_to_domain(c);
            delta = delta * gamma;
        }
        cert.stabilizer.push_back(scale(delta, basis[i]));
    }
    return cert;
}

template <ExactField F>
struct InsertionResult {
    // Stable basis containing x0 in place of b0.
    StableBasisCertificate<F> certificate;
    // { s0*b0 } u B \ { b0 } with stabilizer { s0*c }.
    StableBasisCertificate<F> scaled;
    std::size_t replaced_index;
    F s0;
};

/// Exchanges x0 into a stable basis. b0 is the first basis element, outside
/// `fixed`, whose coefficient in the expansion of x0 is nonzero; x0 takes
/// its position.
template <ExactField F>
InsertionResult<F> insert_into_basis(StructureAlgebra<F> const& alg, StableBasisCertificate<F> const& cert,
                                     Vec<F> const& x0, BaseDomain<F> const& S,
                                     std::set<std::size_t> const& fixed = {})
{
    alg.require_element(x0);
    if (is_zero(x0))
        throw domain_error("cannot insert the zero element into a basis");
    for (auto const& b : cert.basis)
        if (b == x0)
            throw domain_error("element is already a basis element");

    BasisFrame<F> frame(cert.basis);
    auto a = frame.coords(x0);
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i < a.size() && !pos; ++i)
        if (!a[i].is_zero() && !fixed.contains(i))
            pos = i;
    if (!pos)
        throw domain_error("element lies in the span of the fixed basis elements");

    auto b0 = cert.basis[*pos];
    std::vector<Vec<F>> next = cert.basis;
    next[*pos] = x0;
    BasisFrame<F> next_frame(next);

    F s0 = S.common_denominator(next_frame.coords(b0));
    InsertionResult<F> out{{next, {}}, {cert.basis, {}}, *pos, s0};
    out.scaled.basis[*pos] = scale(s0, b0);
    for (auto const& c : cert.stabilizer) {
        auto sc = scale(s0, c);
        out.scaled.stabilizer.push_back(sc);
        F s_c = S.common_denominator(next_frame.coords(alg.multiply(sc, x0)));
        out.certificate.stabilizer.push_back(scale(s_c, sc));
    }
    return out;
}

/// Stable basis containing every element of the independent set `elements`,
/// obtained by inserting them one at a time. Elements already in the basis
/// are kept in place.
template <ExactField F>
StableBasisCertificate<F> extend_stable_basis(StructureAlgebra<F> const& alg, StableBasisCertificate<F> cert,
                                              std::vector<Vec<F>> const& elements, BaseDomain<F> const& S)
{
    if (!independent<F>(elements))
        throw domain_error("elements to insert must be linearly independent");
    std::set<std::size_t> fixed;
    for (auto const& x : elements) {
        std::optional<std::size_t> present;
        for (std::size_t i = 0; i < cert.basis.size(); ++i)
            if (cert.basis[i] == x)
                present = i;
        if (present) {
            fixed.insert(*present);
            continue;
        }
        auto r = insert_into_basis(alg, cert, x, S, fixed);
        fixed.insert(r.replaced_index);
        cert = std::move(r.certificate);
    }
    return cert;
}

/// Spot check for F[y] with the monomial basis: every coefficient of
/// y^i * y^j, i, j <= degree, lies in S. The basis is closed under
/// multiplication, so this never fails; it is a truncated check, not a proof.
template <ExactField F>
StabilityReport monomial_basis_stable(BaseDomain<F> const& S, std::size_t degree = 16)
{
    using P = PolynomialAlgebra<F>;
    StabilityReport report;
    for (std::size_t i = 0; i <= degree; ++i)
        for (std::size_t j = 0; j <= degree; ++j) {
            ++report.products_checked;
            for (auto const& [k, c] : P::multiply(P::monomial(F::one(), i), P::monomial(F::one(), j)))
                if (!S.contains(c))
                    report.violations.push_back({i, j, k, to_string(c)});
        }
    report.ok = report.violations.empty();
    return report;
}

} // namespace qvlab
