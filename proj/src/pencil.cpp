#include "argshift/pencil.hpp"

#include <bit>
#include <map>
#include <string>

#include "argshift/errors.hpp"

namespace argshift {

namespace {

// Shared-subset Pfaffian evaluator: Pf over any index subset of one fixed
// matrix, memoized by bitmask so the C(n,r) minors reuse each other's work.
template <typename T>
class PfaffianTable {
  public:
    PfaffianTable(std::vector<std::vector<T>> entries, T one)
        : entries_(std::move(entries)), one_(std::move(one)) {}

    const T& pf(unsigned mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        T value{};
        if (mask == 0) {
            value = one_;
        } else if (std::popcount(mask) % 2 == 1) {
            value = T{}; // odd subsets never arise from the recursion
        } else {
            const int i0 = std::countr_zero(mask);
            const unsigned rest = mask & (mask - 1);
            // Pf(S) = sum over j in S\{s1} of alternating-sign a[s1][j] Pf(S\{s1,j})
            int position = 0;
            for (unsigned bits = rest; bits != 0; bits &= bits - 1) {
                const int j = std::countr_zero(bits);
                ++position;
                T term = entries_[static_cast<size_t>(i0)][static_cast<size_t>(j)] * pf(rest & ~(1u << j));
                if (position % 2 == 0) term = -term;
                value = value + term;
            }
        }
        return memo_.emplace(mask, std::move(value)).first->second;
    }

  private:
    std::vector<std::vector<T>> entries_;
    T one_;
    std::map<unsigned, T> memo_;
};

DualPoint point_on_line(const DualPoint& x, const DualPoint& a, const Rat& lambda) {
    DualPoint y;
    y.coords.reserve(x.coords.size());
    for (size_t i = 0; i < x.coords.size(); ++i) y.coords.push_back(x.coords[i] + lambda * a.coords[i]);
    return y;
}

DualPoint sample_regular_point(const LieAlgebra& alg, int ind, Rng& rng, long long bound) {
    for (int tries = 0; tries < 1000; ++tries) {
        DualPoint p;
        p.coords.reserve(static_cast<size_t>(alg.dim()));
        for (int i = 0; i < alg.dim(); ++i) p.coords.push_back(rng.coordinate(bound));
        if (!p.is_zero() && is_regular(alg, p, ind)) return p;
    }
    throw InternalError("failed to sample a regular point; is the index estimate correct?");
}

} // namespace

Rat pfaffian(const Mat& skew) {
    if (skew.rows() != skew.cols()) throw InputError("pfaffian: matrix not square");
    if (skew.rows() % 2 != 0) throw InputError("pfaffian: odd size");
    if (!skew.is_skew()) throw InputError("pfaffian: matrix not skew-symmetric");
    if (skew.rows() > 30) throw InputError("pfaffian: matrix too large");
    std::vector<std::vector<Rat>> entries(static_cast<size_t>(skew.rows()),
                                          std::vector<Rat>(static_cast<size_t>(skew.cols())));
    for (int i = 0; i < skew.rows(); ++i)
        for (int j = 0; j < skew.cols(); ++j) entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = skew.at(i, j);
    PfaffianTable<Rat> table(std::move(entries), Rat(1));
    return table.pf(skew.rows() == 0 ? 0u : (1u << skew.rows()) - 1u);
}

int pencil_rank_on_line(const LieAlgebra& alg, const DualPoint& x, const DualPoint& a) {
    int best = 0;
    for (int l = 0; l <= alg.dim(); ++l)
        best = std::max(best, rank(poisson_matrix(alg, point_on_line(x, a, Rat(l)))));
    return best;
}

std::vector<UniPoly> minor_pfaffians_along_line(const LieAlgebra& alg, const DualPoint& x,
                                                const DualPoint& a, int r) {
    const int n = alg.dim();
    if (r < 0 || r > n) throw InputError("minor size out of range");
    if (r % 2 != 0) throw InputError("minor size must be even");
    if (n > 30) throw InputError("algebra too large for subset enumeration");

    const Mat ax = poisson_matrix(alg, x);
    const Mat aa = poisson_matrix(alg, a);
    std::vector<std::vector<UniPoly>> entries(static_cast<size_t>(n), std::vector<UniPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = UniPoly({ax.at(i, j), aa.at(i, j)});
    PfaffianTable<UniPoly> table(std::move(entries), UniPoly::constant(Rat(1)));

    std::vector<UniPoly> out;
    std::vector<int> subset(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) subset[static_cast<size_t>(i)] = i;
    while (true) {
        unsigned mask = 0;
        for (int i : subset) mask |= 1u << i;
        out.push_back(table.pf(mask));
        // next lexicographic r-subset of {0..n-1}
        int pos = r - 1;
        while (pos >= 0 && subset[static_cast<size_t>(pos)] == n - r + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < r; ++i) subset[static_cast<size_t>(i)] = subset[static_cast<size_t>(i) - 1] + 1;
    }
    return out;
}

LineGcdReport line_gcd(const LieAlgebra& alg, int ind, const DualPoint& x, const DualPoint& a) {
    if (a.is_zero()) throw InputError("shift point a = 0 degenerates the pencil");
    const int n = alg.dim();
    const int r = n - ind;
    if (r % 2 != 0) throw InputError("dim g - ind g must be even; wrong index?");

    LineGcdReport report;
    report.rank = r;
    const auto minors = minor_pfaffians_along_line(alg, x, a, r);
    report.minor_count = static_cast<int>(minors.size());
    for (int l = 0; l <= n; ++l) report.sampled_lambdas.push_back(Rat(l));

    UniPoly gcd;
    bool any = false;
    for (const auto& m : minors) {
        if (m.is_zero()) continue;
        gcd = any ? unipoly_gcd(gcd, m) : m.monic();
        any = true;
    }
    if (!any) throw LineInsideSingError("every minor Pfaffian vanishes along the line; line lies inside Sing");
    report.gcd = gcd;
    report.degree = gcd.degree();
    return report;
}

Mat kernel_sum(const LieAlgebra& alg, int ind, const DualPoint& x, const DualPoint& a,
               std::vector<Rat>* used_lambdas) {
    if (a.is_zero()) throw InputError("shift point a = 0 degenerates the pencil");
    const int n = alg.dim();
    Mat acc(0, n);
    int admitted = 0;
    for (int j = 1; j <= 10 * n && admitted < n; ++j) {
        const Rat lambda(j);
        const Mat ay = poisson_matrix(alg, point_on_line(x, a, lambda));
        const Mat kern = kernel_basis(ay);
        if (kern.rows() != ind) continue; // x + lambda a is singular, skip
        acc = stack_rows(acc, kern);
        if (used_lambdas) used_lambdas->push_back(lambda);
        ++admitted;
    }
    if (admitted == 0) throw LineInsideSingError("no regular point found on the line");
    return row_space_basis(acc);
}

int dim_dFa(const LieAlgebra& alg, int ind, const DualPoint& x, const DualPoint& a) {
    const LineGcdReport report = line_gcd(alg, ind, x, a);
    const int by_formula = (alg.dim() + ind) / 2 - report.degree;
    const int by_kernels = kernel_sum(alg, ind, x, a).rows();
    if (by_formula != by_kernels)
        throw InternalError("kernel-sum dimension " + std::to_string(by_kernels) +
                            " disagrees with the pencil formula " + std::to_string(by_formula));
    return by_formula;
}

DegreeEstimate semiinvariant_degree(const LieAlgebra& alg, int ind, std::uint64_t seed) {
    constexpr int kLines = 8;
    Rng rng(seed);
    int best = -1;
    for (int t = 0; t < kLines; ++t) {
        const DualPoint x = sample_regular_point(alg, ind, rng, 10000);
        const DualPoint a = sample_regular_point(alg, ind, rng, 10000);
        const int deg = line_gcd(alg, ind, x, a).degree;
        if (best < 0 || deg < best) best = deg;
    }
    return {best, kLines, seed};
}

bool completeness_test(const LieAlgebra& alg, int ind, std::uint64_t seed) {
    return semiinvariant_degree(alg, ind, seed).degree == 0;
}

Sing1Result sing1_test(const LieAlgebra& alg, int ind, const DualPoint& a, int semiinv_deg,
                       std::uint64_t seed) {
    constexpr int kSamples = 8;
    Rng rng(seed);
    Sing1Result result;
    result.seed = seed;
    result.samples = kSamples;
    for (int t = 0; t < kSamples; ++t) {
        DualPoint x;
        x.coords.reserve(static_cast<size_t>(alg.dim()));
        for (int i = 0; i < alg.dim(); ++i) x.coords.push_back(rng.coordinate(10000));
        if (x.is_zero()) continue;
        try {
            // the line a + lambda x; a certificate needs deg p_{a,x} = deg p_g
            if (line_gcd(alg, ind, a, x).degree == semiinv_deg) {
                result.in_sing1 = false;
                result.certificate = x;
                result.samples = t + 1;
                return result;
            }
        } catch (const LineInsideSingError&) {
            continue;
        }
    }
    result.in_sing1 = true;
    return result;
}

} // namespace argshift
