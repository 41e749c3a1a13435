#include "spv/canonical.hpp"

#include <cassert>

namespace spv {

namespace {

Matrix std_basis_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
    Matrix v(f, n, 1);
    v(i, 0) = 1;
    return v;
}

bool divides(const Poly& a, const Poly& b) { // a | b
    if (a.is_zero()) return b.is_zero();
    return (b % a).is_zero();
}

} // namespace

Poly minpoly_of_vector(const Matrix& a, const Matrix& v) {
    if (!a.is_square() || v.cols() != 1 || v.rows() != a.rows())
        throw ShapeError("minpoly_of_vector expects square A and column v");
    const FieldSpec& f = a.field();
    const std::size_t n = a.rows();
    if (v.is_zero()) return Poly::one(f);
    Matrix krylov(f, n, 0);
    Matrix w = v;
    for (std::size_t m = 0; m <= n; ++m) {
        if (m > 0) w = a * w;
        if (m == 0) {
            krylov = v;
            continue;
        }
        if (auto c = krylov.solve(w)) {
            std::vector<std::uint16_t> coeffs(m + 1, 0);
            for (std::size_t i = 0; i < m; ++i) coeffs[i] = (*c)(i, 0);
            coeffs[m] = 1;
            return Poly(f, std::move(coeffs));
        }
        Matrix next(f, n, krylov.cols() + 1);
        next.set_block(0, 0, krylov);
        next.set_block(0, krylov.cols(), w);
        krylov = std::move(next);
    }
    throw InvariantViolation("Krylov chain exceeded the space dimension");
}

Poly minpoly(const Matrix& a) {
    const FieldSpec& f = a.field();
    const std::size_t n = a.rows();
    Poly mu = Poly::one(f);
    for (std::size_t i = 0; i < n; ++i) {
        Poly g = minpoly_of_vector(a, std_basis_vector(f, n, i));
        mu = ((mu * g) / gcd(mu, g)).monic();
        if (mu.degree() == static_cast<int>(n)) break;
    }
    return mu;
}

Matrix companion(const Poly& p) {
    if (p.degree() < 1 || p.leading() != 1)
        throw ShapeError("companion expects a monic polynomial of degree >= 1");
    const std::size_t m = static_cast<std::size_t>(p.degree());
    Matrix c(p.field(), m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) c(i + 1, i) = 1;
    for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = p.coeff(i); // -c = c in char 2
    return c;
}

std::pair<Poly, Poly> coprime_split(const Poly& f_in, const Poly& g_in) {
    Poly f = f_in.monic(), g = g_in.monic();
    Poly d = gcd(f, g);
    Poly lcm = ((f * g) / d).monic();
    Poly big = (f / d).monic();
    while (true) {
        Poly e = gcd(big, d);
        if (e.is_one()) break;
        big = (big * e).monic();
        d = (d / e).monic();
    }
    Poly rest = (lcm / big).monic();
    assert(gcd(big, rest).is_one());
    return {big, rest};
}

namespace {

// Vector whose minimal polynomial equals minpoly(A), built by combining
// basis vectors along a coprime split of their orders.
std::pair<Matrix, Poly> max_order_vector(const Matrix& a) {
    const FieldSpec& fs = a.field();
    const std::size_t n = a.rows();
    Matrix v = std_basis_vector(fs, n, 0);
    Poly f = minpoly_of_vector(a, v);
    for (std::size_t i = 1; i < n; ++i) {
        if (f.degree() == static_cast<int>(n)) break;
        Matrix w = std_basis_vector(fs, n, i);
        Poly g = minpoly_of_vector(a, w);
        if (divides(g, f)) continue;
        auto [big_f, big_g] = coprime_split(f, g);
        // (f/big_f)(A) v has order big_f; (g/big_g)(A) w has order big_g.
        v = (f / big_f).eval(a) * v + (g / big_g).eval(a) * w;
        f = (big_f * big_g).monic();
        assert(minpoly_of_vector(a, v) == f);
    }
    return {v, f};
}

} // namespace

RcfResult rational_canonical_form(const Matrix& a) {
    if (!a.is_square()) throw ShapeError("rcf expects a square matrix");
    const FieldSpec& fs = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return {Matrix(fs, 0, 0), {}};

    auto [v, mu] = max_order_vector(a);
    const std::size_t d = static_cast<std::size_t>(mu.degree());

    Matrix chain(fs, n, d);
    Matrix w = v;
    for (std::size_t j = 0; j < d; ++j) {
        if (j > 0) w = a * w;
        chain.set_block(0, j, w);
    }
    if (d == n) {
        RcfResult res{chain, {mu}};
        return res;
    }

    // Functional phi that reads off the top Krylov coordinate; the largest
    // A^t-stable subspace of ker(phi) is an A-invariant complement of the
    // chain span.
    Matrix rhs(fs, d, 1);
    rhs(d - 1, 0) = 1;
    auto phi = chain.transpose().solve(rhs);
    if (!phi) throw InvariantViolation("cyclic chain is rank-deficient");
    Matrix constraints(fs, n, n);
    Matrix row = phi->transpose(); // 1 x n
    for (std::size_t j = 0; j < n; ++j) {
        if (j > 0) row = row * a;
        constraints.set_block(j, 0, row);
    }
    Matrix complement = constraints.kernel_basis(); // n x (n - d)
    if (complement.cols() != n - d)
        throw InvariantViolation("invariant complement has unexpected dimension");

    // Restrict A to the complement and recurse.
    Matrix au = a * complement;
    Matrix restricted(fs, n - d, n - d);
    for (std::size_t j = 0; j < n - d; ++j) {
        auto x = complement.solve(au.col(j));
        if (!x) throw InvariantViolation("complement is not A-invariant");
        restricted.set_block(0, j, *x);
    }
    RcfResult sub = rational_canonical_form(restricted);

    Matrix p(fs, n, n);
    p.set_block(0, 0, chain);
    p.set_block(0, d, complement * sub.transform);
    RcfResult res{p, {mu}};
    for (auto& f : sub.invariant_factors) {
        assert(divides(f, res.invariant_factors.back()));
        res.invariant_factors.push_back(f);
    }
#ifndef NDEBUG
    {
        Matrix check = p.inverse() * a * p;
        std::size_t off = 0;
        for (const Poly& f : res.invariant_factors) {
            const std::size_t m = static_cast<std::size_t>(f.degree());
            assert(check.block(off, off, m, m) == companion(f));
            off += m;
        }
        assert(off == n);
    }
#endif
    return res;
}

Poly charpoly(const Matrix& a) {
    RcfResult rcf = rational_canonical_form(a);
    Poly c = Poly::one(a.field());
    for (const Poly& f : rcf.invariant_factors) c = c * f;
    assert(c.degree() == static_cast<int>(a.rows()));
    return c;
}

} // namespace spv
