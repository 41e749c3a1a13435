#pragma once

#include "spv/matrix.hpp"
#include "spv/poly.hpp"

#include <vector>

namespace spv {

/// Minimal polynomial of v under A (monic generator of {f : f(A)v = 0}).
Poly minpoly_of_vector(const Matrix& a, const Matrix& v);

/// Minimal polynomial of A (lcm of the vector minimal polynomials over a basis).
Poly minpoly(const Matrix& a);

/// Companion matrix of a monic polynomial: ones on the subdiagonal,
/// coefficients down the last column.
Matrix companion(const Poly& p);

/// Rational canonical form: P^{-1} A P = diag(companion(f_1), ...) with
/// f_{i+1} | f_i (invariant factors, largest first).
struct RcfResult {
    Matrix transform;                  // P, columns are the cyclic chains
    std::vector<Poly> invariant_factors;
};
RcfResult rational_canonical_form(const Matrix& a);

/// Product of the invariant factors.
Poly charpoly(const Matrix& a);

/// lcm(f, g) = F * G with F | f, G | g, gcd(F, G) = 1, computed without
/// factoring.
std::pair<Poly, Poly> coprime_split(const Poly& f, const Poly& g);

} // namespace spv
