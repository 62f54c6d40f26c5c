#include "tetra/mat.hpp"

#include <numeric>

namespace tetra {

Mat Mat::identity(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

bool Mat::is_zero() const {
    for (const Rat& q : e_)
        if (!tetra::is_zero(q)) return false;
    return true;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product dimension mismatch");
    Mat r(rows_, o.cols_);
    mpq_t tmp;
    mpq_init(tmp);
    for (long i = 0; i < rows_; ++i) {
        for (long k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (tetra::is_zero(aik)) continue;
            for (long j = 0; j < o.cols_; ++j) {
                const Rat& bkj = o.at(k, j);
                if (tetra::is_zero(bkj)) continue;
                mpq_mul(tmp, aik.get_mpq_t(), bkj.get_mpq_t());
                Rat& dst = r.at(i, j);
                mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp);
            }
        }
    }
    mpq_clear(tmp);
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference dimension mismatch");
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

Mat Mat::operator-() const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * c;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::hcat(const std::vector<Mat>& blocks) {
    long rows = blocks.empty() ? 0 : blocks[0].rows();
    long cols = 0;
    for (const Mat& b : blocks) {
        if (b.rows() != rows) throw InputError("hcat row mismatch");
        cols += b.cols();
    }
    Mat r(rows, cols);
    long off = 0;
    for (const Mat& b : blocks) {
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < b.cols(); ++j) r.at(i, off + j) = b.at(i, j);
        off += b.cols();
    }
    return r;
}

Mat Mat::vcat(const std::vector<Mat>& blocks) {
    long cols = blocks.empty() ? 0 : blocks[0].cols();
    long rows = 0;
    for (const Mat& b : blocks) {
        if (b.cols() != cols) throw InputError("vcat column mismatch");
        rows += b.rows();
    }
    Mat r(rows, cols);
    long off = 0;
    for (const Mat& b : blocks) {
        for (long i = 0; i < b.rows(); ++i)
            for (long j = 0; j < cols; ++j) r.at(off + i, j) = b.at(i, j);
        off += b.rows();
    }
    return r;
}

Mat Mat::block(long row0, long col0, long nrows, long ncols) const {
    Mat r(nrows, ncols);
    for (long i = 0; i < nrows; ++i)
        for (long j = 0; j < ncols; ++j) r.at(i, j) = at(row0 + i, col0 + j);
    return r;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long ia = 0; ia < a.rows(); ++ia)
        for (long ja = 0; ja < a.cols(); ++ja) {
            const Rat& v = a.at(ia, ja);
            if (is_zero(v)) continue;
            for (long ib = 0; ib < b.rows(); ++ib)
                for (long jb = 0; jb < b.cols(); ++jb) {
                    const Rat& w = b.at(ib, jb);
                    if (is_zero(w)) continue;
                    r.at(ia * b.rows() + ib, ja * b.cols() + jb) = v * w;
                }
        }
    return r;
}

Mat commutation(long m, long n) {
    Mat r(m * n, m * n);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < n; ++j) r.at(j * m + i, i * n + j) = 1;
    return r;
}

Mat apply_on_cols(const Mat& m, const Mat& a, long left, long right) {
    if (m.cols() != left * a.rows() * right) throw InputError("apply_on_cols shape mismatch");
    Mat r(m.rows(), left * a.cols() * right);
    mpq_t tmp;
    mpq_init(tmp);
    for (long i = 0; i < m.rows(); ++i)
        for (long l = 0; l < left; ++l)
            for (long k = 0; k < a.rows(); ++k)
                for (long rr = 0; rr < right; ++rr) {
                    const Rat& mv = m.at(i, (l * a.rows() + k) * right + rr);
                    if (is_zero(mv)) continue;
                    for (long j = 0; j < a.cols(); ++j) {
                        const Rat& av = a.at(k, j);
                        if (is_zero(av)) continue;
                        mpq_mul(tmp, mv.get_mpq_t(), av.get_mpq_t());
                        Rat& dst = r.at(i, (l * a.cols() + j) * right + rr);
                        mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp);
                    }
                }
    mpq_clear(tmp);
    return r;
}

Mat apply_on_rows(const Mat& m, const Mat& a, long left, long right) {
    if (m.rows() != left * a.cols() * right) throw InputError("apply_on_rows shape mismatch");
    Mat r(left * a.rows() * right, m.cols());
    mpq_t tmp;
    mpq_init(tmp);
    for (long l = 0; l < left; ++l)
        for (long i = 0; i < a.rows(); ++i)
            for (long k = 0; k < a.cols(); ++k) {
                const Rat& av = a.at(i, k);
                if (is_zero(av)) continue;
                for (long rr = 0; rr < right; ++rr)
                    for (long j = 0; j < m.cols(); ++j) {
                        const Rat& mv = m.at((l * a.cols() + k) * right + rr, j);
                        if (is_zero(mv)) continue;
                        mpq_mul(tmp, av.get_mpq_t(), mv.get_mpq_t());
                        Rat& dst = r.at((l * a.rows() + i) * right + rr, j);
                        mpq_add(dst.get_mpq_t(), dst.get_mpq_t(), tmp);
                    }
            }
    mpq_clear(tmp);
    return r;
}

namespace {

std::vector<long> strides_for(const std::vector<long>& dims) {
    std::vector<long> s(dims.size(), 1);
    for (int i = int(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
    return s;
}

// For each flat index over `dims`, the flat index over (dims[sel[0]], ...)
// obtained by reordering the tuple.
std::vector<long> reorder_map(const std::vector<long>& dims, const std::vector<int>& sel) {
    if (sel.size() != dims.size()) throw InputError("tensor reorder arity mismatch");
    std::vector<long> new_dims(sel.size());
    for (size_t j = 0; j < sel.size(); ++j) new_dims[j] = dims[sel[j]];
    auto old_strides = strides_for(dims);
    auto new_strides = strides_for(new_dims);
    long total = 1;
    for (long d : dims) total *= d;
    std::vector<long> map(total);
    std::vector<long> tuple(dims.size(), 0);
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (size_t f = 0; f < dims.size(); ++f) {
            tuple[f] = rem / old_strides[f];
            rem %= old_strides[f];
        }
        long nidx = 0;
        for (size_t j = 0; j < sel.size(); ++j) nidx += tuple[sel[j]] * new_strides[j];
        map[idx] = nidx;
    }
    return map;
}

}  // namespace

Mat reorder_tensor_cols(const Mat& m, const std::vector<long>& dims, const std::vector<int>& sel) {
    auto map = reorder_map(dims, sel);
    if (long(map.size()) != m.cols()) throw InputError("tensor reorder column count mismatch");
    Mat r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            const Rat& v = m.at(i, j);
            if (!is_zero(v)) r.at(i, map[j]) = v;
        }
    return r;
}

Mat reorder_tensor_rows(const Mat& m, const std::vector<long>& dims, const std::vector<int>& sel) {
    auto map = reorder_map(dims, sel);
    if (long(map.size()) != m.rows()) throw InputError("tensor reorder row count mismatch");
    Mat r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            const Rat& v = m.at(i, j);
            if (!is_zero(v)) r.at(map[i], j) = v;
        }
    return r;
}

Mat tensor_perm(const std::vector<long>& dims, const std::vector<int>& src_of_new) {
    long total = 1;
    for (long d : dims) total *= d;
    std::vector<long> out_dims(src_of_new.size());
    for (size_t j = 0; j < src_of_new.size(); ++j) out_dims[j] = dims[src_of_new[j]];
    auto in_strides = strides_for(dims);
    auto out_strides = strides_for(out_dims);
    Mat q(total, total);
    std::vector<long> tuple(dims.size());
    for (long idx = 0; idx < total; ++idx) {
        long rem = idx;
        for (size_t f = 0; f < dims.size(); ++f) {
            tuple[f] = rem / in_strides[f];
            rem %= in_strides[f];
        }
        long out = 0;
        for (size_t j = 0; j < src_of_new.size(); ++j) out += tuple[src_of_new[j]] * out_strides[j];
        q.at(out, idx) = 1;
    }
    return q;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<long> rref(Mat& a) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < a.cols() && row < a.rows(); ++col) {
        long p = -1;
        for (long i = row; i < a.rows(); ++i)
            if (!is_zero(a.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (long j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
        Rat inv = 1 / a.at(row, col);
        for (long j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
        for (long i = 0; i < a.rows(); ++i) {
            if (i == row || is_zero(a.at(i, col))) continue;
            Rat f = a.at(i, col);
            for (long j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

long rank(Mat a) { return long(rref(a).size()); }

std::vector<Mat> kernel_basis(const Mat& a) {
    Mat r = a;
    std::vector<long> pivots = rref(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (long p : pivots) is_pivot[p] = true;
    std::vector<Mat> basis;
    for (long free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Mat v(a.cols(), 1);
        v.at(free, 0) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v.at(pivots[i], 0) = -r.at(long(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

CokerProjection coker_projection(const Mat& a) {
    // Column echelon form of a = row echelon form of a^T. Pivot coordinates
    // of im(a) get eliminated; the rest index the complement.
    Mat at = a.transpose();
    std::vector<long> pivots = rref(at);
    std::vector<bool> is_pivot(a.rows(), false);
    for (long p : pivots) is_pivot[p] = true;
    long q = a.rows() - long(pivots.size());
    Mat proj(q, a.rows());
    Mat section(a.rows(), q);
    long k = 0;
    for (long j = 0; j < a.rows(); ++j) {
        if (is_pivot[j]) continue;
        section.at(j, k) = 1;
        proj.at(k, j) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) proj.at(k, pivots[i]) = -at.at(long(i), j);
        ++k;
    }
    return {proj, section};
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    Mat aug = Mat::hcat({a, Mat::identity(a.rows())});
    std::vector<long> pivots = rref(aug);
    if (long(pivots.size()) != a.rows()) return std::nullopt;
    for (long i = 0; i < a.rows(); ++i)
        if (pivots[i] != i) return std::nullopt;
    return aug.block(0, a.cols(), a.rows(), a.cols());
}

AffineSolutions solve_linear(const Mat& a, const Mat& b) {
    if (b.cols() != 1 || b.rows() != a.rows()) throw InputError("solve_linear expects a matching column vector");
    Mat aug = Mat::hcat({a, b});
    std::vector<long> pivots = rref(aug);
    AffineSolutions out;
    for (long p : pivots)
        if (p == a.cols()) return out;  // inconsistent
    out.consistent = true;
    out.particular = Mat(a.cols(), 1);
    for (size_t i = 0; i < pivots.size(); ++i) out.particular.at(pivots[i], 0) = aug.at(long(i), a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (long p : pivots) is_pivot[p] = true;
    for (long free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Mat v(a.cols(), 1);
        v.at(free, 0) = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v.at(pivots[i], 0) = -aug.at(long(i), free);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

}  // namespace tetra
