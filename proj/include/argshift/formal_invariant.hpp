#ifndef ARGSHIFT_FORMAL_INVARIANT_HPP
#define ARGSHIFT_FORMAL_INVARIANT_HPP

#include <optional>
#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"

namespace argshift {

// Truncation of a formal Ad*-invariant at base_point: homogeneous terms
// f^(1)..f^(N) with f^(1) in Ann(a) and, for k = 2..N,
//   ad*_{df^(k)(x)} a + ad*_{df^(k-1)(x)} x = 0
// as an identity of covector-valued polynomials.
struct TruncatedFormalInvariant {
    DualPoint base_point;
    int order = 0;
    std::vector<Poly> terms; // terms[k-1] is homogeneous of degree k (or zero)

    const Poly& term(int k) const { return terms[static_cast<size_t>(k) - 1]; }
};

// The s = ind g truncated invariants whose linear terms are the canonical
// echelon basis of Ann(a).
struct InvariantBasis {
    DualPoint base_point;
    int order = 0;
    Mat ann_basis; // echelon rows xi_1..xi_s
    std::vector<TruncatedFormalInvariant> members;

    int size() const { return static_cast<int>(members.size()); }
};

// Solves the degree-k step of the recursion for a homogeneous prev of degree
// k-1.  The solution is made unique by the normalization: in coordinates
// adapted to the splitting g = Ann(a) + C (C spanned by the standard basis
// vectors away from the echelon pivots), f^(k) contains no monomial purely in
// the Ann(a) coordinates.  Throws RecursionBrokenError when the linear system
// is inconsistent (prev did not satisfy its own level, or a is not regular),
// InternalError if the normalization fails to pin the solution.
Poly next_term(const LieAlgebra& alg, const DualPoint& a, const Poly& prev, int k);

// Builds the basis F_1..F_s up to order N.  Requires a regular (checked
// against ind); propagating RecursionBrokenError from inside would contradict
// the existence theorem and is re-reported as InternalError.
InvariantBasis build_basis(const LieAlgebra& alg, const DualPoint& a, int order, int ind);

// Exact residual check of every level; nullopt when all vanish, otherwise the
// first failing level.
std::optional<int> check_formal_invariant(const LieAlgebra& alg, const DualPoint& a,
                                          const TruncatedFormalInvariant& inv);

// Lemma-style term killing: returns p^(1)..p^(N) (polynomials in s symbols,
// one per basis member) such that F - sum_m p^(m)(F_1..F_s) has no term of
// degree <= N.  Throws RecursionBrokenError when some residual's lowest term
// is not a polynomial in the Ann(a) linear forms (input was not an invariant).
std::vector<Poly> express_in_basis(const LieAlgebra& alg, const TruncatedFormalInvariant& F,
                                   const InvariantBasis& basis);

// Dimension of the space of homogeneous degree-k solutions g of
// ad*_{dg(x)} a = 0.  (Equals the number of degree-k monomials in the s
// Ann(a) symbols; exposed so tests can assert exactly that.)
int invariant_equation_kernel_dim(const LieAlgebra& alg, const DualPoint& a, int k);

// Truncated product of invariants: both factors and the result live at the
// same base point; degrees above `order` are dropped.
TruncatedFormalInvariant truncated_product(const TruncatedFormalInvariant& f,
                                           const TruncatedFormalInvariant& g, int order);
TruncatedFormalInvariant truncated_sum(const TruncatedFormalInvariant& f,
                                       const TruncatedFormalInvariant& g, int order);

} // namespace argshift

#endif
