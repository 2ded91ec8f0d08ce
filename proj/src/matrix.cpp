#include "argshift/matrix.hpp"

#include "argshift/errors.hpp"

namespace argshift {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

bool Mat::is_skew() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Mat Mat::transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < m.cols(); ++c) swap(m.at(pivot, c), m.at(row, c));
        const Rat inv = 1 / Rat(m.at(row, col));
        for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rat factor = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

Mat kernel_basis(const Mat& m) {
    Mat red = m;
    const std::vector<int> pivots = rref(red);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    Mat basis(m.cols() - static_cast<int>(pivots.size()), m.cols());
    int out = 0;
    for (int col = 0; col < m.cols(); ++col) {
        if (is_pivot[col]) continue;
        basis.at(out, col) = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr) basis.at(out, pivots[pr]) = -red.at(static_cast<int>(pr), col);
        ++out;
    }
    rref(basis); // canonicalize
    return basis;
}

Mat row_space_basis(Mat m) {
    const std::vector<int> pivots = rref(m);
    Mat basis(static_cast<int>(pivots.size()), m.cols());
    for (int i = 0; i < basis.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) basis.at(i, j) = m.at(i, j);
    return basis;
}

bool in_row_space(const Mat& echelon, std::span<const Rat> v) {
    if (static_cast<int>(v.size()) != echelon.cols()) throw InputError("in_row_space: size mismatch");
    std::vector<Rat> work(v.begin(), v.end());
    for (int r = 0; r < echelon.rows(); ++r) {
        int lead = -1;
        for (int c = 0; c < echelon.cols(); ++c)
            if (echelon.at(r, c) != 0) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        if (work[lead] == 0) continue;
        const Rat factor = work[lead] / echelon.at(r, lead);
        for (int c = lead; c < echelon.cols(); ++c) work[c] -= factor * echelon.at(r, c);
    }
    for (const auto& w : work)
        if (w != 0) return false;
    return true;
}

Mat stack_rows(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
        throw InputError("stack_rows: column mismatch");
    const int cols = a.rows() != 0 ? a.cols() : b.cols();
    Mat out(a.rows() + b.rows(), cols);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < cols; ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

LinearSolution solve_linear(Mat a, std::vector<Rat> b) {
    if (static_cast<int>(b.size()) != a.rows()) throw InputError("solve_linear: rhs size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
    }
    const std::vector<int> pivots = rref(aug);

    LinearSolution sol;
    for (int p : pivots)
        if (p == a.cols()) return sol; // pivot in the rhs column: inconsistent
    sol.consistent = true;
    sol.kernel_dim = a.cols() - static_cast<int>(pivots.size());
    sol.particular.assign(static_cast<size_t>(a.cols()), Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) sol.particular[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
    return sol;
}

Rat determinant(Mat m) {
    if (m.rows() != m.cols()) throw InputError("determinant: matrix not square");
    const int n = m.rows();
    Rat det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        const Rat inv = 1 / Rat(m.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            const Rat factor = m.at(r, col) * inv;
            for (int c = col; c < n; ++c) m.at(r, c) -= factor * m.at(col, c);
        }
    }
    return det;
}

Mat inverse(Mat m) {
    if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
    const int n = m.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw InternalError("inverse: singular matrix");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

} // namespace argshift
