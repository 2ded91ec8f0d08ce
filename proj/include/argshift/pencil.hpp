#ifndef ARGSHIFT_PENCIL_HPP
#define ARGSHIFT_PENCIL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/poly.hpp"

namespace argshift {

// Exact Pfaffian of an even-size skew matrix, by recursive expansion along
// the first active row (memoized over index subsets).  Pf^2 = det.
Rat pfaffian(const Mat& skew);

// Max over lambda in {0..n} of rank A_{x+lambda a}.  Rank can drop on a line
// only at roots of a nonzero minor polynomial (degree <= n/2), so n+1
// distinct samples always witness the line maximum.
int pencil_rank_on_line(const LieAlgebra& alg, const DualPoint& x, const DualPoint& a);

// Pfaffians of all r x r principal minors of A_{x+lambda a} as polynomials in
// lambda, enumerated in lexicographic order of the index subsets.
std::vector<UniPoly> minor_pfaffians_along_line(const LieAlgebra& alg, const DualPoint& x,
                                                const DualPoint& a, int r);

struct LineGcdReport {
    UniPoly gcd;     // monic
    int degree = 0;  // deg gcd
    int minor_count = 0;
    int rank = 0;    // r = dim g - ind g used for the minors
    std::vector<Rat> sampled_lambdas;
};

// Monic gcd of the nonzero r x r minor Pfaffians along the line x + lambda a,
// r = dim g - ind g.  Throws LineInsideSingError if every minor vanishes
// identically (the whole line is singular) and InputError when a = 0.
LineGcdReport line_gcd(const LieAlgebra& alg, int ind, const DualPoint& x, const DualPoint& a);

// Echelon basis of sum_lambda ker A_{x+lambda a} over admissible lambdas
// (those where x + lambda a is regular).  Candidates are lambda = 1, 2, ...
// until n admissible values are found or 10n candidates are exhausted.
// Throws LineInsideSingError when no candidate is admissible.  When
// used_lambdas is non-null it receives the admitted values.
Mat kernel_sum(const LieAlgebra& alg, int ind, const DualPoint& x, const DualPoint& a,
               std::vector<Rat>* used_lambdas = nullptr);

// dim dF_a(x) = (dim g + ind g)/2 - deg p_{x,a}, cross-checked against the
// independently computed dim kernel_sum; a mismatch is an InternalError.
int dim_dFa(const LieAlgebra& alg, int ind, const DualPoint& x, const DualPoint& a);

struct DegreeEstimate {
    int degree = 0;
    int samples = 0;
    std::uint64_t seed = kDefaultSeed;
};

// deg p_g as the minimum line_gcd degree over 8 random lines through random
// regular points (coordinates in {-10^4..10^4}); probabilistic, seedable.
DegreeEstimate semiinvariant_degree(const LieAlgebra& alg, int ind,
                                    std::uint64_t seed = kDefaultSeed);

// Completeness criterion for F_a(g): deg p_g == 0.
bool completeness_test(const LieAlgebra& alg, int ind, std::uint64_t seed = kDefaultSeed);

struct Sing1Result {
    bool in_sing1 = false;                       // probabilistic when true
    std::optional<DualPoint> certificate;        // direction x with deg p_{a,x} = deg p_g
    int samples = 0;
    std::uint64_t seed = kDefaultSeed;
};

// One-sided Monte Carlo membership test for Sing_1: a line a + lambda x with
// gcd degree equal to deg p_g certifies a not in Sing_1; if no sampled
// direction works the point is reported inside Sing_1 (probable).
Sing1Result sing1_test(const LieAlgebra& alg, int ind, const DualPoint& a, int semiinv_deg,
                       std::uint64_t seed = kDefaultSeed);

} // namespace argshift

#endif
