#pragma once

#include <optional>
#include <vector>

#include "tetra/rat.hpp"

namespace tetra {

/// Dense row-major matrix over exact rationals. Zero-row/zero-column shapes
/// are legal everywhere; products skip zero entries, so the sparse matrices
/// this library produces multiply fast without a sparse format.
class Mat {
  public:
    Mat() = default;
    Mat(long rows, long cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(long n);
    static Mat zero(long rows, long cols) { return Mat(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rat& at(long i, long j) { return e_[i * cols_ + j]; }
    const Rat& at(long i, long j) const { return e_[i * cols_ + j]; }

    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Rat& c) const;
    Mat transpose() const;

    /// Horizontal / vertical block concatenation.
    static Mat hcat(const std::vector<Mat>& blocks);
    static Mat vcat(const std::vector<Mat>& blocks);
    Mat block(long row0, long col0, long nrows, long ncols) const;

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

/// Kronecker product, left factor most significant in the row-major index.
Mat kron(const Mat& a, const Mat& b);

/// Commutation matrix K : X ⊗ Y -> Y ⊗ X for dim X = m, dim Y = n.
Mat commutation(long m, long n);

/// m ∘ (I_left ⊗ a ⊗ I_right); m must have left*a.rows()*right columns.
Mat apply_on_cols(const Mat& m, const Mat& a, long left, long right);

/// (I_left ⊗ a ⊗ I_right) ∘ m; m must have left*a.cols()*right rows.
Mat apply_on_rows(const Mat& m, const Mat& a, long left, long right);

/// Reindexes tensor-product columns. `dims` are the current factor sizes and
/// `sel[j]` names which current factor sits at position j afterwards, so the
/// result satisfies result ∘ (v_{sel[0]} ⊗ ...) = m ∘ (v_0 ⊗ v_1 ⊗ ...).
Mat reorder_tensor_cols(const Mat& m, const std::vector<long>& dims, const std::vector<int>& sel);
Mat reorder_tensor_rows(const Mat& m, const std::vector<long>& dims, const std::vector<int>& sel);

/// Permutation matrix q with q·(v_0 ⊗ v_1 ⊗ ...) = v_{src_of_new[0]} ⊗ ... .
Mat tensor_perm(const std::vector<long>& dims, const std::vector<int>& src_of_new);

long rank(Mat a);

/// Exact null-space basis (column vectors); empty when injective.
std::vector<Mat> kernel_basis(const Mat& a);

struct CokerProjection {
    Mat proj;     // U -> U/im(a), rows = codim
    Mat section;  // right inverse of proj
};

/// Projection onto a complement of im(a) in the row space K^rows(a).
/// The complement keeps the non-pivot standard basis vectors of the column
/// echelon form of a, in ascending index order.
CokerProjection coker_projection(const Mat& a);

std::optional<Mat> inverse(const Mat& a);

struct AffineSolutions {
    bool consistent = false;
    Mat particular;           // one solution of A x = b
    std::vector<Mat> kernel;  // basis of A x = 0
};

/// Exact solution set of A x = b (b a column vector).
AffineSolutions solve_linear(const Mat& a, const Mat& b);

}  // namespace tetra
