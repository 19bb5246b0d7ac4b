#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvlab/errors.hpp"
#include "qvlab/field.hpp"
#include "qvlab/linalg.hpp"

namespace qvlab {

/// Finite-dimensional F-algebra given by structure constants
/// e_i * e_j = sum_k c_ijk e_k and unit coordinates. Elements are coordinate
/// vectors in the ambient basis e_1..e_n.
template <ExactField F>
class StructureAlgebra {
public:
    using field_type = F;
    using Element = Vec<F>;

    struct Term {
        std::size_t i, j, k;
        F c;
    };

    struct Report {
        bool ok = true;
        std::string message;
        // (i, j, k) of the first failing associativity triple, or (i, i, i)
        // for a failing unit law at e_i.
        std::optional<std::array<std::size_t, 3>> witness;
    };

    StructureAlgebra(std::vector<std::string> names, std::vector<Term> const& table, Element unit)
        : names_(std::move(names)), unit_(std::move(unit))
    {
        std::size_t n = names_.size();
        if (n == 0)
            throw structural_error("algebra must have dimension >= 1");
        if (unit_.size() != n)
            throw structural_error("unit has the wrong number of coordinates");
        products_.assign(n * n, {});
        for (auto const& t : table) {
            if (t.i >= n || t.j >= n || t.k >= n)
                throw structural_error("structure constant index out of range");
            if (t.c.is_zero())
                continue;
            auto& slot = products_[t.i * n + t.j];
            bool merged = false;
            for (auto& [k, c] : slot)
                if (k == t.k) {
                    c += t.c;
                    merged = true;
                }
            if (!merged)
                slot.emplace_back(t.k, t.c);
        }
    }

    std::size_t dim() const { return names_.size(); }
    std::vector<std::string> const& names() const { return names_; }
    Element const& unit() const { return unit_; }

    Element zero() const { return Element(dim(), F::zero()); }
    Element basis_element(std::size_t i) const
    {
        Element e = zero();
        e.at(i) = F::one();
        return e;
    }
    Element scalar(F const& a) const { return scale(a, unit_); }

    std::optional<std::size_t> index_of(std::string const& name) const
    {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name)
                return i;
        return std::nullopt;
    }

    void require_element(Element const& x) const
    {
        if (x.size() != dim())
            throw structural_error("element does not belong to this algebra (dimension "
                                   + std::to_string(x.size()) + " vs " + std::to_string(dim()) + ")");
    }

    Element multiply(Element const& x, Element const& y) const
    {
        require_element(x);
        require_element(y);
        std::size_t n = dim();
        Element out = zero();
        for (std::size_t i = 0; i < n; ++i) {
            if (x[i].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (y[j].is_zero())
                    continue;
                auto const& slot = products_[i * n + j];
                if (slot.empty())
                    continue;
                F xy = x[i] * y[j];
                for (auto const& [k, c] : slot)
                    out[k] += xy * c;
            }
        }
        return out;
    }

    // True iff x lies in F*1.
    bool is_scalar(Element const& x) const
    {
        std::vector<Element> v{unit_, x};
        return !independent<F>(v);
    }

    /// Exhaustive scan of the n^3 associativity triples and both unit laws.
    Report check_associative_unital() const
    {
        std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i) {
            auto e = basis_element(i);
            if (multiply(unit_, e) != e || multiply(e, unit_) != e)
                return {false, "unit law fails at " + names_[i], std::array<std::size_t, 3>{i, i, i}};
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto eij = multiply(basis_element(i), basis_element(j));
                for (std::size_t k = 0; k < n; ++k) {
                    auto ek = basis_element(k);
                    auto left = multiply(eij, ek);
                    auto right = multiply(basis_element(i), multiply(basis_element(j), ek));
                    if (left != right)
                        return {false,
                                "associativity fails at (" + names_[i] + "," + names_[j] + "," + names_[k] + ")",
                                std::array<std::size_t, 3>{i, j, k}};
                }
            }
        return {true, "associative, unital (n=" + std::to_string(n) + ")", std::nullopt};
    }

    friend bool operator==(StructureAlgebra const& a, StructureAlgebra const& b)
    {
        if (a.names_ != b.names_ || a.unit_ != b.unit_)
            return false;
        std::size_t n = a.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a.multiply(a.basis_element(i), a.basis_element(j)) != b.multiply(b.basis_element(i), b.basis_element(j)))
                    return false;
        return true;
    }

private:
    std::vector<std::string> names_;
    Element unit_;
    std::vector<std::vector<std::pair<std::size_t, F>>> products_;
};

/// Coordinates of x in the basis `basis` (throws structural_error when the
/// basis is dependent or of the wrong size).
template <ExactField F>
Vec<F> coords_in_basis(StructureAlgebra<F> const& alg, Vec<F> const& x, std::vector<Vec<F>> const& basis)
{
    alg.require_element(x);
    if (basis.size() != alg.dim())
        throw structural_error("a basis of A needs exactly dim(A) elements");
    return BasisFrame<F>(basis).coords(x);
}

/// M_n(F) on the matrix units e_ij (row-major order e_11, e_12, ...).
template <ExactField F>
StructureAlgebra<F> matrix_algebra(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<typename StructureAlgebra<F>::Term> table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    // e_ij e_jl = e_il
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                table.push_back({i * n + j, j * n + l, i * n + l, F::one()});
    Vec<F> unit(n * n, F::zero());
    for (std::size_t i = 0; i < n; ++i)
        unit[i * n + i] = F::one();
    return StructureAlgebra<F>(std::move(names), table, std::move(unit));
}

/// F[x]/(x^2 - d) on the basis {1, x}; d = 0 gives the dual numbers and a
/// non-square d gives F(sqrt d).
template <ExactField F>
StructureAlgebra<F> quadratic_algebra(F const& d, std::string const& gen = "x")
{
    std::vector<typename StructureAlgebra<F>::Term> table{
        {0, 0, 0, F::one()}, {0, 1, 1, F::one()}, {1, 0, 1, F::one()}, {1, 1, 0, d}};
    return StructureAlgebra<F>({"1", gen}, table, Vec<F>{F::one(), F::zero()});
}

/// Marker for A = F[y] with basis {y^n : n >= 0}. Elements are finitely
/// supported exponent -> coefficient maps without explicit zeros.
template <ExactField F>
class PolynomialAlgebra {
public:
    using field_type = F;
    using Element = std::map<std::size_t, F>;

    static Element monomial(F const& c, std::size_t n)
    {
        Element out;
        if (!c.is_zero())
            out.emplace(n, c);
        return out;
    }
    static Element one() { return monomial(F::one(), 0); }

    static Element add(Element const& a, Element const& b)
    {
        Element out = a;
        for (auto const& [n, c] : b) {
            auto [it, fresh] = out.emplace(n, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
        return out;
    }

    static Element scale(F const& s, Element const& a)
    {
        Element out;
        if (s.is_zero())
            return out;
        for (auto const& [n, c] : a)
            out.emplace(n, s * c);
        return out;
    }

    static Element multiply(Element const& a, Element const& b)
    {
        Element out;
        for (auto const& [i, x] : a)
            for (auto const& [j, y] : b)
                out = add(out, monomial(x * y, i + j));
        return out;
    }
};

} // namespace qvlab
