#pragma once

#include "spv/errors.hpp"

#include <cstdint>
#include <vector>

namespace spv {

/// Arithmetic in GF(2^k), 1 <= k <= 16, under a fixed irreducible modulus.
///
/// Elements are k-bit residues stored in a uint16_t; addition is XOR.
/// For k <= 12 multiplication goes through log/antilog tables, above that
/// through shift-and-reduce carry-less multiplication.  The per-degree
/// default moduli are the lexicographically smallest irreducible
/// polynomials, fixed as constants so element encodings are stable across
/// runs and machines.
class FieldSpec {
  public:
    static constexpr unsigned kMaxDegree = 16;
    static constexpr unsigned kTableDegreeLimit = 12;

    /// Standard modulus for the given degree.
    explicit FieldSpec(unsigned degree);
    /// Custom modulus; bit i is the coefficient of x^i, degree must match.
    FieldSpec(unsigned degree, std::uint32_t modulus);

    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

    /// Shared immutable instance with the standard modulus.
    static const FieldSpec& get(unsigned degree);

    unsigned degree() const { return k_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return 1u << k_; }

    bool same(const FieldSpec& other) const {
        return k_ == other.k_ && modulus_ == other.modulus_;
    }

    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return a ^ b; }

    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
        if (k_ == 1) return a & b;
        if (use_tables_) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_slow(a, b);
    }

    std::uint16_t inv(std::uint16_t a) const;
    std::uint16_t pow(std::uint16_t a, std::uint64_t e) const;

    /// The unique square root (Frobenius is bijective): a^(2^(k-1)).
    std::uint16_t sqrt(std::uint16_t a) const;

    /// True if `modulus` (bit i = coeff of x^i) of degree `degree` is
    /// irreducible over GF(2), decided by trial division against every
    /// polynomial of degree <= degree/2.
    static bool is_irreducible_gf2(std::uint32_t modulus, unsigned degree);

    /// Lexicographically smallest irreducible modulus of the degree
    /// (degree 1 is x+1, matching plain-bit GF(2)).
    static std::uint32_t standard_modulus(unsigned degree);

  private:
    std::uint16_t mul_slow(std::uint16_t a, std::uint16_t b) const;
    void build_tables();

    unsigned k_;
    std::uint32_t modulus_;
    bool use_tables_ = false;
    std::vector<std::uint16_t> log_;
    std::vector<std::uint16_t> exp_;
};

/// A field element tagged with its field; convenience wrapper over the
/// raw uint16_t residues that FieldSpec operates on.
struct Scalar {
    const FieldSpec* spec = nullptr;
    std::uint16_t bits = 0;

    Scalar() = default;
    Scalar(const FieldSpec& s, std::uint16_t b) : spec(&s), bits(b) {
        if (b >= s.order()) throw InvariantViolation("scalar bits out of field range");
    }

    bool is_zero() const { return bits == 0; }

    friend Scalar operator+(Scalar a, Scalar b) {
        require_same(a, b);
        return Scalar(*a.spec, a.spec->add(a.bits, b.bits));
    }
    friend Scalar operator*(Scalar a, Scalar b) {
        require_same(a, b);
        return Scalar(*a.spec, a.spec->mul(a.bits, b.bits));
    }
    friend bool operator==(Scalar a, Scalar b) {
        return a.spec->same(*b.spec) && a.bits == b.bits;
    }

    Scalar inverse() const { return Scalar(*spec, spec->inv(bits)); }

  private:
    static void require_same(Scalar a, Scalar b) {
        if (!a.spec || !b.spec || !a.spec->same(*b.spec))
            throw FieldMismatch("scalar operands live in different fields");
    }
};

/// b with b*b = a; total over GF(2^k).
Scalar sqrt(Scalar a);

/// Element-image table of the embedding GF(2^j) -> GF(2^k) for j | k,
/// built on the smallest root of the source modulus in the target field.
/// image[b] is the image of residue b.
std::vector<std::uint16_t> embedding_table(const FieldSpec& from, const FieldSpec& to);

} // namespace spv
