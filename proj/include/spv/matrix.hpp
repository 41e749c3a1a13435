#pragma once

#include "spv/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace spv {

/// Dense exact matrix over one GF(2^k).  Entries are raw residues in
/// row-major order; no floating point anywhere.  Values are immutable in
/// spirit: operations return fresh matrices and never alias.
class Matrix {
  public:
    Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
        : spec_(&spec), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(const FieldSpec& spec, std::size_t n);
    static Matrix zero(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
        return Matrix(spec, rows, cols);
    }

    const FieldSpec& field() const { return *spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint16_t operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    std::uint16_t& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const std::uint16_t* data() const { return e_.data(); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool has_zero_diagonal() const;

    Matrix transpose() const;
    Matrix scaled(std::uint16_t c) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    /// this + c * other, in one pass.
    void add_scaled(const Matrix& other, std::uint16_t c);

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& m);

    /// Orthogonal-direct-sum style diagonal stacking.
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    Matrix col(std::size_t j) const;

    std::uint16_t trace() const;

    Matrix pow(std::uint64_t e) const;

    /// Entry-wise image under a field embedding (see embedding_table).
    Matrix mapped(const FieldSpec& to, const std::vector<std::uint16_t>& table) const;

    // Exact linear algebra (Gaussian elimination with partial pivoting by
    // first nonzero entry; k = 1 uses word-packed row operations).
    std::size_t rank() const;
    std::size_t nullity() const { return cols_ - rank(); }
    /// Columns span {v : M v = 0}; shape cols x nullity.
    Matrix kernel_basis() const;
    /// Square M only; throws SingularMatrix.
    Matrix inverse() const;
    /// One solution of M x = b (b is rows x 1), or nullopt when inconsistent.
    std::optional<Matrix> solve(const Matrix& b) const;

  private:
    void require_same_field(const Matrix& other) const;

    const FieldSpec* spec_;
    std::size_t rows_, cols_;
    std::vector<std::uint16_t> e_;
};

/// M^(2^ceil(log2 m)) == 0, by repeated squaring.
bool is_nilpotent(const Matrix& m);

/// Least e >= 1 with M^e = 0; throws NotNilpotent.
std::size_t nilpotency_index(const Matrix& m);

/// In-place rank of a rows x cols row-major scratch buffer.  The hot path
/// for the enumeration kernels; no allocation beyond the caller's buffer.
std::size_t rank_inplace(std::uint16_t* data, std::size_t rows, std::size_t cols,
                         const FieldSpec& spec);

} // namespace spv
