#include "spv/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace spv {

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint16_t v) { return v == 0; });
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Matrix::has_zero_diagonal() const {
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        if ((*this)(i, i) != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(*spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::scaled(std::uint16_t c) const {
    Matrix m(*spec_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = spec_->mul(e_[i], c);
    return m;
}

void Matrix::require_same_field(const Matrix& other) const {
    if (!spec_->same(*other.spec_))
        throw FieldMismatch("matrix operands live in different fields");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw ShapeError("matrix addition shape mismatch");
    Matrix m(*a.spec_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] ^ b.e_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    const FieldSpec& f = *a.spec_;
    Matrix m(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint16_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                m(i, j) ^= f.mul(aik, b(k, j));
            }
        }
    }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.spec_->same(*b.spec_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.e_ == b.e_;
}

void Matrix::add_scaled(const Matrix& other, std::uint16_t c) {
    require_same_field(other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ShapeError("add_scaled shape mismatch");
    if (c == 0) return;
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] ^= spec_->mul(other.e_[i], c);
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw ShapeError("block out of range");
    Matrix m(*spec_, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
    if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < m.rows_; ++i)
        for (std::size_t j = 0; j < m.cols_; ++j) (*this)(i0 + i, j0 + j) = m(i, j);
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    Matrix m(*a.spec_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, a.cols_, b);
    return m;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix m(*spec_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, j);
    return m;
}

std::uint16_t Matrix::trace() const {
    std::uint16_t t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t ^= (*this)(i, i);
    return t;
}

Matrix Matrix::pow(std::uint64_t e) const {
    if (!is_square()) throw ShapeError("pow of non-square matrix");
    Matrix r = identity(*spec_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

Matrix Matrix::mapped(const FieldSpec& to, const std::vector<std::uint16_t>& table) const {
    Matrix m(to, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = table[e_[i]];
    return m;
}

namespace {

// Reduced row echelon form of a working copy.  Returns pivot column list.
// aug = number of trailing columns excluded from pivoting (augmented part).
std::vector<std::size_t> rref_inplace(Matrix& m, std::size_t aug = 0) {
    const FieldSpec& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols() - aug;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        const std::uint16_t inv = f.inv(m(r, c));
        if (inv != 1)
            for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const std::uint16_t fac = m(i, c);
            if (fac == 0) continue;
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) ^= f.mul(fac, m(r, j));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank_packed_f2(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> w(rows * words, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (m(i, j)) w[i * words + j / 64] |= std::uint64_t(1) << (j % 64);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const std::size_t wc = c / 64;
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (w[i * words + wc] & bit) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t k = 0; k < words; ++k)
                std::swap(w[r * words + k], w[piv * words + k]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (w[i * words + wc] & bit)
                for (std::size_t k = wc; k < words; ++k) w[i * words + k] ^= w[r * words + k];
        }
        ++r;
    }
    return r;
}

} // namespace

std::size_t Matrix::rank() const {
    if (e_.empty()) return 0;
    if (spec_->degree() == 1) return rank_packed_f2(*this);
    Matrix work = *this;
    return rref_inplace(work).size();
}

Matrix Matrix::kernel_basis() const {
    Matrix work = *this;
    const std::vector<std::size_t> pivots = rref_inplace(work);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    Matrix basis(*spec_, cols_, cols_ - pivots.size());
    std::size_t out = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        basis(c, out) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], out) = work(r, c);
        ++out;
    }
#ifndef NDEBUG
    // Every kernel vector is verified by multiplication.
    for (std::size_t j = 0; j < basis.cols(); ++j)
        assert(((*this) * basis.col(j)).is_zero());
#endif
    return basis;
}

Matrix Matrix::inverse() const {
    if (!is_square()) throw ShapeError("inverse of non-square matrix");
    Matrix work(*spec_, rows_, 2 * cols_);
    work.set_block(0, 0, *this);
    work.set_block(0, cols_, identity(*spec_, rows_));
    const std::vector<std::size_t> pivots = rref_inplace(work, cols_);
    if (pivots.size() != cols_) throw SingularMatrix("matrix is singular");
    return work.block(0, cols_, rows_, cols_);
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    require_same_field(b);
    if (b.rows() != rows_ || b.cols() != 1) throw ShapeError("solve expects rows x 1 rhs");
    Matrix work(*spec_, rows_, cols_ + 1);
    work.set_block(0, 0, *this);
    work.set_block(0, cols_, b);
    const std::vector<std::size_t> pivots = rref_inplace(work, 1);
    for (std::size_t i = pivots.size(); i < rows_; ++i)
        if (work(i, cols_) != 0) return std::nullopt;
    Matrix x(*spec_, cols_, 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x(pivots[r], 0) = work(r, cols_);
    return x;
}

bool is_nilpotent(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("is_nilpotent expects a square matrix");
    if (m.rows() == 0) return true;
    Matrix p = m;
    std::size_t covered = 1;
    while (true) {
        if (p.is_zero()) return true;
        if (covered >= m.rows()) return false;
        p = p * p;
        covered *= 2;
    }
}

std::size_t nilpotency_index(const Matrix& m) {
    if (!is_nilpotent(m)) throw NotNilpotent("matrix is not nilpotent");
    Matrix p = Matrix::identity(m.field(), m.rows());
    for (std::size_t e = 1; e <= m.rows() + 1; ++e) {
        p = p * m;
        if (p.is_zero()) return e;
    }
    throw NotNilpotent("matrix is not nilpotent");
}

std::size_t rank_inplace(std::uint16_t* data, std::size_t rows, std::size_t cols,
                         const FieldSpec& spec) {
    if (rows == 0 || cols == 0) return 0;
    if (spec.degree() == 1 && cols <= 64) {
        // Pack rows into single words; elimination is word-parallel.
        std::uint64_t w[64];
        if (rows <= 64) {
            for (std::size_t i = 0; i < rows; ++i) {
                std::uint64_t v = 0;
                const std::uint16_t* row = data + i * cols;
                for (std::size_t j = 0; j < cols; ++j)
                    if (row[j]) v |= std::uint64_t(1) << j;
                w[i] = v;
            }
            std::size_t r = 0;
            for (std::size_t c = 0; c < cols && r < rows; ++c) {
                const std::uint64_t bit = std::uint64_t(1) << c;
                std::size_t piv = rows;
                for (std::size_t i = r; i < rows; ++i) {
                    if (w[i] & bit) {
                        piv = i;
                        break;
                    }
                }
                if (piv == rows) continue;
                std::swap(w[r], w[piv]);
                for (std::size_t i = r + 1; i < rows; ++i)
                    if (w[i] & bit) w[i] ^= w[r];
                ++r;
            }
            return r;
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (data[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(data[r * cols + j], data[piv * cols + j]);
        const std::uint16_t inv = spec.inv(data[r * cols + c]);
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j)
                data[r * cols + j] = spec.mul(data[r * cols + j], inv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint16_t fac = data[i * cols + c];
            if (fac == 0) continue;
            for (std::size_t j = c; j < cols; ++j)
                data[i * cols + j] ^= spec.mul(fac, data[r * cols + j]);
        }
        ++r;
    }
    return r;
}

} // namespace spv
