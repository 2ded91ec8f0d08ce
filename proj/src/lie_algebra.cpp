#include "argshift/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "argshift/errors.hpp"

namespace argshift {

bool DualPoint::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c == 0; });
}

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels, StructureMap structure)
    : dim_(dim), labels_(std::move(labels)), structure_(std::move(structure)) {
    if (dim_ < 1) throw InputError("algebra dimension must be at least 1");
    if (labels_.empty()) {
        labels_.reserve(static_cast<size_t>(dim_));
        for (int i = 1; i <= dim_; ++i) labels_.push_back("x" + std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != dim_) throw InputError("label count does not match dimension");
    for (const auto& [key, value] : structure_) {
        const auto [i, j, k] = key;
        if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
            throw InputError("structure constant index out of range");
        if (i >= j) throw InputError("structure constants must be stored with i < j");
        (void)value;
    }
}

Rat LieAlgebra::c(int i, int j, int k) const {
    if (i == j) return Rat(0);
    if (i < j) {
        auto it = structure_.find({i, j, k});
        return it == structure_.end() ? Rat(0) : it->second;
    }
    auto it = structure_.find({j, i, k});
    return it == structure_.end() ? Rat(0) : -it->second;
}

int LieAlgebra::label_index(std::string_view label) const {
    for (int i = 0; i < dim_; ++i)
        if (labels_[static_cast<size_t>(i)] == label) return i;
    return -1;
}

std::string JacobiViolation::describe(const LieAlgebra& alg) const {
    std::ostringstream os;
    os << "jacobi(" << alg.labels()[static_cast<size_t>(i)] << "," << alg.labels()[static_cast<size_t>(j)] << ","
       << alg.labels()[static_cast<size_t>(k)] << ") component " << alg.labels()[static_cast<size_t>(m)]
       << " residual " << format_rational(residual);
    return os.str();
}

std::vector<JacobiViolation> validate(const LieAlgebra& alg) {
    const int n = alg.dim();
    std::vector<JacobiViolation> violations;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    Rat sum = 0;
                    for (int l = 0; l < n; ++l) {
                        sum += alg.c(i, j, l) * alg.c(l, k, m);
                        sum += alg.c(j, k, l) * alg.c(l, i, m);
                        sum += alg.c(k, i, l) * alg.c(l, j, m);
                    }
                    if (sum != 0) violations.push_back({i, j, k, m, sum});
                }
    return violations;
}

Mat poisson_matrix(const LieAlgebra& alg, const DualPoint& y) {
    if (y.size() != alg.dim()) throw InputError("point dimension mismatch");
    Mat m(alg.dim(), alg.dim());
    for (const auto& [key, value] : alg.brackets()) {
        const auto [i, j, k] = key;
        const Rat term = value * y.coords[static_cast<size_t>(k)];
        m.at(i, j) += term;
        m.at(j, i) -= term;
    }
    return m;
}

std::vector<Rat> coadjoint(const LieAlgebra& alg, std::span<const Rat> xi, const DualPoint& y) {
    if (static_cast<int>(xi.size()) != alg.dim() || y.size() != alg.dim())
        throw InputError("coadjoint: dimension mismatch");
    // (ad*_xi y)_j = sum_{i,k} xi_i c_ijk y_k = (xi^T A_y)_j
    const Mat a = poisson_matrix(alg, y);
    std::vector<Rat> out(static_cast<size_t>(alg.dim()), Rat(0));
    for (int j = 0; j < alg.dim(); ++j)
        for (int i = 0; i < alg.dim(); ++i)
            if (xi[static_cast<size_t>(i)] != 0) out[static_cast<size_t>(j)] += xi[static_cast<size_t>(i)] * a.at(i, j);
    return out;
}

Mat annihilator(const LieAlgebra& alg, const DualPoint& a) {
    return kernel_basis(poisson_matrix(alg, a));
}

IndexEstimate estimate_index(const LieAlgebra& alg, std::uint64_t seed) {
    const int n = alg.dim();
    const int samples = std::max(20, 2 * n);
    Rng rng(seed);
    int best_rank = -1;
    DualPoint witness;
    for (int s = 0; s < samples; ++s) {
        DualPoint y;
        y.coords.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) y.coords.push_back(rng.coordinate(10000));
        const int r = rank(poisson_matrix(alg, y));
        if (r > best_rank) {
            best_rank = r;
            witness = y;
        }
    }
    return {n - best_rank, std::move(witness), samples, seed};
}

bool is_regular(const LieAlgebra& alg, const DualPoint& a, int ind) {
    return alg.dim() - rank(poisson_matrix(alg, a)) == ind;
}

} // namespace argshift
