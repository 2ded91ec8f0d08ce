#include "argshift/formal_invariant.hpp"

#include <map>
#include <string>

#include "argshift/errors.hpp"

namespace argshift {

namespace {

// A_x entries as linear polynomials: entry[i][j] = sum_k c_ijk x_k.
std::vector<std::vector<Poly>> poisson_entry_polys(const LieAlgebra& alg) {
    const int n = alg.dim();
    std::vector<std::vector<Poly>> entries(static_cast<size_t>(n),
                                           std::vector<Poly>(static_cast<size_t>(n), Poly(n)));
    for (const auto& [key, c] : alg.brackets()) {
        const auto [i, j, k] = key;
        const Poly xk = Poly::variable(n, k).scaled(c);
        entries[static_cast<size_t>(i)][static_cast<size_t>(j)] += xk;
        entries[static_cast<size_t>(j)][static_cast<size_t>(i)] -= xk;
    }
    return entries;
}

// Coefficient matrix of the level-k operator f -> A_a df on the monomial
// bases of degrees k and k-1.  Row (j, beta), column alpha.
Mat level_operator(const LieAlgebra& alg, const Mat& a_mat, const std::vector<Monomial>& mons_k,
                   const std::vector<Monomial>& mons_km1) {
    const int n = alg.dim();
    std::map<Monomial, int, GrlexLess> beta_index;
    for (size_t b = 0; b < mons_km1.size(); ++b) beta_index.emplace(mons_km1[b], static_cast<int>(b));

    const int eqs = n * static_cast<int>(mons_km1.size());
    Mat m(eqs, static_cast<int>(mons_k.size()));
    for (size_t ai = 0; ai < mons_k.size(); ++ai) {
        const Monomial& alpha = mons_k[ai];
        for (int var = 0; var < n; ++var) {
            const auto e = alpha.exp[static_cast<size_t>(var)];
            if (e == 0) continue;
            Monomial beta = alpha;
            beta.exp[static_cast<size_t>(var)] = e - 1;
            const int bi = beta_index.at(beta);
            for (int j = 0; j < n; ++j) {
                const Rat& w = a_mat.at(j, var);
                if (w == 0) continue;
                m.at(j * static_cast<int>(mons_km1.size()) + bi, static_cast<int>(ai)) +=
                    w * static_cast<long>(e);
            }
        }
    }
    return m;
}

bool rows_are_standard_basis(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i) {
        int nonzero = 0;
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

// Normalization rows: the coefficients of f^(k), rewritten in coordinates
// adapted to Ann(a) + C, on monomials purely in the Ann(a) coordinates must
// vanish.  When the echelon basis consists of standard basis vectors this is
// one unit row per monomial supported on the pivot variables.
Mat normalization_rows(const LieAlgebra& alg, const Mat& ann, const std::vector<Monomial>& mons_k, int k) {
    const int n = alg.dim();
    const int s = ann.rows();
    if (s == 0) return Mat(0, static_cast<int>(mons_k.size()));

    std::vector<int> pivots;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j)
            if (ann.at(i, j) != 0) {
                pivots.push_back(j);
                break;
            }

    if (rows_are_standard_basis(ann)) {
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        std::vector<int> pure;
        for (size_t ai = 0; ai < mons_k.size(); ++ai) {
            bool ok = true;
            for (int v = 0; v < n; ++v)
                if (mons_k[ai].exp[static_cast<size_t>(v)] > 0 && !is_pivot[static_cast<size_t>(v)]) {
                    ok = false;
                    break;
                }
            if (ok) pure.push_back(static_cast<int>(ai));
        }
        Mat rows(static_cast<int>(pure.size()), static_cast<int>(mons_k.size()));
        for (size_t r = 0; r < pure.size(); ++r) rows.at(static_cast<int>(r), pure[r]) = 1;
        return rows;
    }

    // General splitting: z = T x with T = [xi_1..xi_s; e_j, j not a pivot];
    // expand each unknown monomial in z and read off the pure-z coefficients.
    Mat t(n, n);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < n; ++j) t.at(i, j) = ann.at(i, j);
    {
        int r = s;
        std::vector<bool> is_pivot(static_cast<size_t>(n), false);
        for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
        for (int j = 0; j < n; ++j)
            if (!is_pivot[static_cast<size_t>(j)]) t.at(r++, j) = 1;
    }
    const Mat tinv = inverse(t);
    std::vector<Poly> x_in_z;
    x_in_z.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) x_in_z.push_back(Poly::linear_form(tinv.row(i)));

    const auto pure_mons = homogeneous_monomials(s, k);
    std::map<Monomial, int, GrlexLess> pure_index;
    for (size_t r = 0; r < pure_mons.size(); ++r) {
        Monomial padded{std::vector<std::uint32_t>(static_cast<size_t>(n), 0)};
        for (int i = 0; i < s; ++i) padded.exp[static_cast<size_t>(i)] = pure_mons[r].exp[static_cast<size_t>(i)];
        pure_index.emplace(padded, static_cast<int>(r));
    }

    Mat rows(static_cast<int>(pure_mons.size()), static_cast<int>(mons_k.size()));
    for (size_t ai = 0; ai < mons_k.size(); ++ai) {
        Poly expanded = Poly::constant(n, Rat(1));
        for (int v = 0; v < n; ++v)
            for (std::uint32_t e = 0; e < mons_k[ai].exp[static_cast<size_t>(v)]; ++e)
                expanded = expanded * x_in_z[static_cast<size_t>(v)];
        for (const auto& [mon, coeff] : expanded.terms()) {
            auto it = pure_index.find(mon);
            if (it != pure_index.end()) rows.at(it->second, static_cast<int>(ai)) = coeff;
        }
    }
    return rows;
}

std::vector<Rat> rhs_vector(const LieAlgebra& alg, const Poly& prev,
                            const std::vector<std::vector<Poly>>& ax,
                            const std::vector<Monomial>& mons_km1) {
    const int n = alg.dim();
    std::map<Monomial, int, GrlexLess> beta_index;
    for (size_t b = 0; b < mons_km1.size(); ++b) beta_index.emplace(mons_km1[b], static_cast<int>(b));

    const auto dprev = prev.differential();
    std::vector<Rat> b(static_cast<size_t>(n) * mons_km1.size(), Rat(0));
    for (int j = 0; j < n; ++j) {
        Poly r(n);
        for (int m = 0; m < n; ++m) {
            if (dprev[static_cast<size_t>(m)].is_zero() || ax[static_cast<size_t>(j)][static_cast<size_t>(m)].is_zero())
                continue;
            r += ax[static_cast<size_t>(j)][static_cast<size_t>(m)] * dprev[static_cast<size_t>(m)];
        }
        for (const auto& [mon, coeff] : r.terms())
            b[static_cast<size_t>(j) * mons_km1.size() + static_cast<size_t>(beta_index.at(mon))] = -coeff;
    }
    return b;
}

using Series = std::vector<Poly>; // slot d = homogeneous degree-d component

Series to_series(const TruncatedFormalInvariant& f, int order) {
    Series s(static_cast<size_t>(order) + 1, Poly(f.terms.empty() ? f.base_point.size() : f.terms[0].nvars()));
    for (int k = 1; k <= std::min(order, f.order); ++k) s[static_cast<size_t>(k)] = f.term(k);
    return s;
}

Series series_product(const Series& a, const Series& b, int order) {
    const int n = a[0].nvars();
    Series out(static_cast<size_t>(order) + 1, Poly(n));
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j) {
            if (a[static_cast<size_t>(i)].is_zero() || b[static_cast<size_t>(j)].is_zero()) continue;
            out[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
    return out;
}

} // namespace

Poly next_term(const LieAlgebra& alg, const DualPoint& a, const Poly& prev, int k) {
    const int n = alg.dim();
    if (a.size() != n || prev.nvars() != n) throw InputError("next_term: dimension mismatch");
    if (k < 2) throw InputError("next_term: level must be at least 2");
    if (!prev.is_zero() && (!prev.is_homogeneous() || prev.degree() != k - 1))
        throw InputError("next_term: prev must be homogeneous of degree k-1");

    const Mat ann = annihilator(alg, a);
    const auto mons_k = homogeneous_monomials(n, k);
    if (prev.is_zero()) return Poly(n); // zero right-hand side, normalization kills the kernel

    const auto mons_km1 = homogeneous_monomials(n, k - 1);
    const Mat a_mat = poisson_matrix(alg, a);
    const Mat m = level_operator(alg, a_mat, mons_k, mons_km1);
    const std::vector<Rat> b = rhs_vector(alg, prev, poisson_entry_polys(alg), mons_km1);
    const Mat norm = normalization_rows(alg, ann, mons_k, k);

    Mat stacked = stack_rows(m, norm);
    std::vector<Rat> rhs = b;
    rhs.resize(b.size() + static_cast<size_t>(norm.rows()), Rat(0));
    const LinearSolution sol = solve_linear(std::move(stacked), std::move(rhs));
    if (!sol.consistent) {
        if (!solve_linear(m, b).consistent)
            throw RecursionBrokenError("recursion broken at level " + std::to_string(k));
        throw InternalError("normalization incompatible with the solution set at level " + std::to_string(k));
    }
    if (sol.kernel_dim > 0)
        throw InternalError("normalization left " + std::to_string(sol.kernel_dim) +
                            " degrees of freedom at level " + std::to_string(k));

    Poly f(n);
    for (size_t i = 0; i < mons_k.size(); ++i) f.add_term(mons_k[i], sol.particular[i]);
    return f;
}

InvariantBasis build_basis(const LieAlgebra& alg, const DualPoint& a, int order, int ind) {
    if (order < 1) throw InputError("order must be at least 1");
    const Mat ann = annihilator(alg, a);
    if (ann.rows() != ind)
        throw SingularPointError("base point is singular (dim Ann = " + std::to_string(ann.rows()) +
                                 ", ind = " + std::to_string(ind) + ")");

    InvariantBasis basis;
    basis.base_point = a;
    basis.order = order;
    basis.ann_basis = ann;
    for (int i = 0; i < ann.rows(); ++i) {
        TruncatedFormalInvariant inv;
        inv.base_point = a;
        inv.order = order;
        inv.terms.push_back(Poly::linear_form(ann.row(i)));
        for (int k = 2; k <= order; ++k) {
            try {
                inv.terms.push_back(next_term(alg, a, inv.terms.back(), k));
            } catch (const RecursionBrokenError&) {
                throw InternalError("recursion broke while extending a valid invariant; this contradicts solvability");
            }
        }
        basis.members.push_back(std::move(inv));
    }
    return basis;
}

std::optional<int> check_formal_invariant(const LieAlgebra& alg, const DualPoint& a,
                                          const TruncatedFormalInvariant& inv) {
    const int n = alg.dim();
    const Mat a_mat = poisson_matrix(alg, a);
    const auto ax = poisson_entry_polys(alg);
    for (int k = 1; k <= inv.order; ++k) {
        const Poly& fk = inv.term(k);
        if (!fk.is_zero() && (!fk.is_homogeneous() || fk.degree() != k)) return k;
        const auto dfk = fk.differential();
        const std::vector<Poly>* dprev = nullptr;
        std::vector<Poly> dprev_storage;
        if (k >= 2) {
            dprev_storage = inv.term(k - 1).differential();
            dprev = &dprev_storage;
        }
        for (int j = 0; j < n; ++j) {
            // residual_j = (ad*_{df^(k)} a)_j + (ad*_{df^(k-1)} x)_j
            Poly residual(n);
            for (int i = 0; i < n; ++i) {
                if (!dfk[static_cast<size_t>(i)].is_zero() && a_mat.at(i, j) != 0)
                    residual += dfk[static_cast<size_t>(i)].scaled(a_mat.at(i, j));
                if (dprev && !(*dprev)[static_cast<size_t>(i)].is_zero() &&
                    !ax[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
                    residual += (*dprev)[static_cast<size_t>(i)] * ax[static_cast<size_t>(i)][static_cast<size_t>(j)];
            }
            if (!residual.is_zero()) return k;
        }
    }
    return std::nullopt;
}

std::vector<Poly> express_in_basis(const LieAlgebra& alg, const TruncatedFormalInvariant& F,
                                   const InvariantBasis& basis) {
    const int n = alg.dim();
    if (!(F.base_point == basis.base_point)) throw InputError("express_in_basis: base points differ");
    if (basis.order < F.order) throw InputError("express_in_basis: basis order too small");
    const int s = basis.size();
    const int order = F.order;

    std::vector<Poly> xi_polys;
    for (int i = 0; i < s; ++i) xi_polys.push_back(Poly::linear_form(basis.ann_basis.row(i)));
    std::vector<Series> member_series;
    for (const auto& m : basis.members) member_series.push_back(to_series(m, order));

    Series g(static_cast<size_t>(order) + 1, Poly(n));
    for (int k = 1; k <= F.order; ++k) g[static_cast<size_t>(k)] = F.term(k);

    std::vector<Poly> result(static_cast<size_t>(order), Poly(s));
    for (int m = 1; m <= order; ++m) {
        const Poly& gm = g[static_cast<size_t>(m)];
        if (gm.is_zero()) continue;

        const auto sym_mons = homogeneous_monomials(s, m);
        const auto x_mons = homogeneous_monomials(n, m);
        std::map<Monomial, int, GrlexLess> x_index;
        for (size_t r = 0; r < x_mons.size(); ++r) x_index.emplace(x_mons[r], static_cast<int>(r));

        Mat mat(static_cast<int>(x_mons.size()), static_cast<int>(sym_mons.size()));
        for (size_t cidx = 0; cidx < sym_mons.size(); ++cidx) {
            Poly expanded = Poly::constant(n, Rat(1));
            for (int i = 0; i < s; ++i)
                for (std::uint32_t e = 0; e < sym_mons[cidx].exp[static_cast<size_t>(i)]; ++e)
                    expanded = expanded * xi_polys[static_cast<size_t>(i)];
            for (const auto& [mon, coeff] : expanded.terms()) mat.at(x_index.at(mon), static_cast<int>(cidx)) = coeff;
        }
        std::vector<Rat> b(x_mons.size(), Rat(0));
        for (const auto& [mon, coeff] : gm.terms()) b[static_cast<size_t>(x_index.at(mon))] = coeff;

        const LinearSolution sol = solve_linear(mat, b);
        if (!sol.consistent)
            throw RecursionBrokenError("degree-" + std::to_string(m) +
                                       " term is not a polynomial in the annihilator forms; input is not a formal invariant");
        if (sol.kernel_dim > 0) throw InternalError("annihilator forms are dependent");

        Poly pm(s);
        for (size_t cidx = 0; cidx < sym_mons.size(); ++cidx) pm.add_term(sym_mons[cidx], sol.particular[cidx]);
        result[static_cast<size_t>(m) - 1] = pm;

        // subtract p^(m)(F_1..F_s) from the running series
        for (const auto& [mon, coeff] : pm.terms()) {
            Series prod(static_cast<size_t>(order) + 1, Poly(n));
            prod[0] = Poly::constant(n, Rat(1));
            for (int i = 0; i < s; ++i)
                for (std::uint32_t e = 0; e < mon.exp[static_cast<size_t>(i)]; ++e)
                    prod = series_product(prod, member_series[static_cast<size_t>(i)], order);
            for (int d = 0; d <= order; ++d)
                if (!prod[static_cast<size_t>(d)].is_zero())
                    g[static_cast<size_t>(d)] -= prod[static_cast<size_t>(d)].scaled(coeff);
        }
        if (!g[static_cast<size_t>(m)].is_zero()) throw InternalError("term killing failed at degree " + std::to_string(m));
    }
    return result;
}

int invariant_equation_kernel_dim(const LieAlgebra& alg, const DualPoint& a, int k) {
    const int n = alg.dim();
    const auto mons_k = homogeneous_monomials(n, k);
    const auto mons_km1 = homogeneous_monomials(n, k - 1);
    const Mat m = level_operator(alg, poisson_matrix(alg, a), mons_k, mons_km1);
    return static_cast<int>(mons_k.size()) - rank(m);
}

TruncatedFormalInvariant truncated_product(const TruncatedFormalInvariant& f,
                                           const TruncatedFormalInvariant& g, int order) {
    if (!(f.base_point == g.base_point)) throw InputError("truncated_product: base points differ");
    const Series prod = series_product(to_series(f, order), to_series(g, order), order);
    TruncatedFormalInvariant out;
    out.base_point = f.base_point;
    out.order = order;
    for (int k = 1; k <= order; ++k) out.terms.push_back(prod[static_cast<size_t>(k)]);
    return out;
}

TruncatedFormalInvariant truncated_sum(const TruncatedFormalInvariant& f,
                                       const TruncatedFormalInvariant& g, int order) {
    if (!(f.base_point == g.base_point)) throw InputError("truncated_sum: base points differ");
    const Series fs = to_series(f, order), gs = to_series(g, order);
    TruncatedFormalInvariant out;
    out.base_point = f.base_point;
    out.order = order;
    for (int k = 1; k <= order; ++k)
        out.terms.push_back(fs[static_cast<size_t>(k)] + gs[static_cast<size_t>(k)]);
    return out;
}

} // namespace argshift
