#ifndef ARGSHIFT_MATRIX_HPP
#define ARGSHIFT_MATRIX_HPP

#include <span>
#include <vector>

#include "argshift/rational.hpp"

namespace argshift {

// Dense matrix over Q.  Small and exact; everything in this project is desk
// scale (at most a few thousand rows), so no sparsity tricks.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const Rat> row(int i) const { return {&data_[static_cast<size_t>(i) * cols_], static_cast<size_t>(cols_)}; }

    bool is_zero() const;
    bool is_skew() const;
    Mat transposed() const;

    friend bool operator==(const Mat& a, const Mat& b) = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

// Reduced row echelon form in place (pivots 1, zeros above and below).
// Returns the pivot column indices in order.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// Canonical basis of {v : m v = 0} as the rows of an RREF matrix.
Mat kernel_basis(const Mat& m);

// Canonical basis of the row space: the nonzero rows of the RREF.
Mat row_space_basis(Mat m);

// True iff v lies in the row space spanned by an RREF basis.
bool in_row_space(const Mat& echelon, std::span<const Rat> v);

// Stacks the rows of b under a (same column count).
Mat stack_rows(const Mat& a, const Mat& b);

struct LinearSolution {
    bool consistent = false;
    std::vector<Rat> particular; // one solution when consistent
    int kernel_dim = 0;
};

// Exact solution of a x = b via Gauss-Jordan on the augmented matrix.
LinearSolution solve_linear(Mat a, std::vector<Rat> b);

// Exact determinant (Gaussian elimination over Q).
Rat determinant(Mat m);

// Inverse of a square nonsingular matrix; throws InternalError if singular.
Mat inverse(Mat m);

} // namespace argshift

#endif
