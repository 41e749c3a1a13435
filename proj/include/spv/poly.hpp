#pragma once

#include "spv/field.hpp"
#include "spv/matrix.hpp"

#include <cstdint>
#include <vector>

namespace spv {

/// Univariate polynomial over GF(2^k), coefficients ascending, normalized
/// (no trailing zeros; the zero polynomial has no coefficients).
class Poly {
  public:
    explicit Poly(const FieldSpec& spec) : spec_(&spec) {}
    Poly(const FieldSpec& spec, std::vector<std::uint16_t> coeffs)
        : spec_(&spec), c_(std::move(coeffs)) {
        normalize();
    }

    static Poly zero(const FieldSpec& spec) { return Poly(spec); }
    static Poly one(const FieldSpec& spec) { return Poly(spec, {1}); }
    static Poly x(const FieldSpec& spec) { return Poly(spec, {0, 1}); }
    /// x^e
    static Poly monomial(const FieldSpec& spec, std::size_t e);

    const FieldSpec& field() const { return *spec_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::uint16_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    std::uint16_t leading() const { return c_.empty() ? 0 : c_.back(); }

    Poly monic() const;
    Poly derivative() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    std::uint16_t eval(std::uint16_t x) const;
    Matrix eval(const Matrix& m) const;

    /// Coefficient-wise image under a field embedding.
    Poly mapped(const FieldSpec& to, const std::vector<std::uint16_t>& table) const;

  private:
    void normalize();

    const FieldSpec* spec_;
    std::vector<std::uint16_t> c_;
};

Poly gcd(Poly a, Poly b);

/// g = gcd(a,b) monic plus u, v with u*a + v*b = g.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

/// Product of the distinct irreducible factors.  Handles even
/// multiplicities via the perfect-field square-root of the even part
/// (plain f / gcd(f, f') misses them in characteristic 2).
Poly radical(const Poly& f);

/// Degrees d of irreducible factors (distinct-degree factorization on the
/// radical); the splitting field of f over GF(2^k) is GF(2^(k*lcm)).
std::vector<unsigned> irreducible_factor_degrees(const Poly& f);

/// Degree over GF(2) of the splitting field of f.
unsigned splitting_degree_absolute(const Poly& f);

} // namespace spv
