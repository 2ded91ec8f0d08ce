#ifndef ARGSHIFT_LIE_ALGEBRA_HPP
#define ARGSHIFT_LIE_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argshift/matrix.hpp"
#include "argshift/rng.hpp"

namespace argshift {

// A point of the dual space g*, i.e. the values of the coordinates x_1..x_n.
struct DualPoint {
    std::vector<Rat> coords;

    int size() const { return static_cast<int>(coords.size()); }
    bool is_zero() const;

    friend bool operator==(const DualPoint& a, const DualPoint& b) = default;
};

// A finite-dimensional Lie algebra given by structure constants over Q.
// Brackets are stored sparsely for i < j only; antisymmetry is implicit.
class LieAlgebra {
  public:
    // key = {i, j, k}, 0-based, i < j, meaning [e_i, e_j] contains c * e_k.
    using StructureMap = std::map<std::array<int, 3>, Rat>;

    LieAlgebra(int dim, std::vector<std::string> labels, StructureMap structure);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const StructureMap& brackets() const { return structure_; }

    // Expanded tensor: c(i,j,k) = -c(j,i,k), c(i,i,k) = 0.
    Rat c(int i, int j, int k) const;

    // Index of a basis label, or -1.
    int label_index(std::string_view label) const;

  private:
    int dim_;
    std::vector<std::string> labels_;
    StructureMap structure_;
};

struct JacobiViolation {
    int i, j, k, m; // 0-based triple and target coordinate
    Rat residual;

    std::string describe(const LieAlgebra& alg) const;
};

// Exact Jacobi check over all i<j<k and all m.  Empty result means valid.
// (Antisymmetry holds by construction of the storage.)
std::vector<JacobiViolation> validate(const LieAlgebra& alg);

// The Poisson tensor at y: A_y[i][j] = sum_k c_ijk y_k.  Exactly skew.
Mat poisson_matrix(const LieAlgebra& alg, const DualPoint& y);

// Coadjoint action, convention (ad*_xi y)(eta) = <y,[xi,eta]>, so that
// component j = sum_{i,k} xi_i c_ijk y_k.
std::vector<Rat> coadjoint(const LieAlgebra& alg, std::span<const Rat> xi, const DualPoint& y);

// Canonical echelon basis (rows) of Ann(a) = ker A_a.
Mat annihilator(const LieAlgebra& alg, const DualPoint& a);

struct IndexEstimate {
    int index = 0;
    DualPoint witness;  // a sampled point of maximal rank
    int samples = 0;
    std::uint64_t seed = kDefaultSeed;
};

// Monte Carlo index: n - max rank A_y over max(20, 2n) sampled points with
// coordinates in {-10^4..10^4}.  An upper bound on ind g, correct with
// overwhelming probability; deterministic for a fixed seed.
IndexEstimate estimate_index(const LieAlgebra& alg, std::uint64_t seed = kDefaultSeed);

// dim ker A_a == ind, with ind from estimate_index.
bool is_regular(const LieAlgebra& alg, const DualPoint& a, int ind);

} // namespace argshift

#endif
