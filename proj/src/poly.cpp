#include "spv/poly.hpp"

#include <cassert>
#include <numeric>

namespace spv {

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const FieldSpec& spec, std::size_t e) {
    std::vector<std::uint16_t> c(e + 1, 0);
    c[e] = 1;
    return Poly(spec, std::move(c));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const std::uint16_t inv = spec_->inv(c_.back());
    if (inv == 1) return *this;
    std::vector<std::uint16_t> c(c_);
    for (auto& v : c) v = spec_->mul(v, inv);
    return Poly(*spec_, std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(*spec_);
    std::vector<std::uint16_t> d(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // i * c_i in characteristic 2: survives only for odd i.
        if (i & 1u) d[i - 1] = c_[i];
    }
    return Poly(*spec_, std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    if (!a.spec_->same(*b.spec_)) throw FieldMismatch("poly operands in different fields");
    std::vector<std::uint16_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) ^ b.coeff(i);
    return Poly(*a.spec_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!a.spec_->same(*b.spec_)) throw FieldMismatch("poly operands in different fields");
    if (a.is_zero() || b.is_zero()) return Poly(*a.spec_);
    std::vector<std::uint16_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] ^= a.spec_->mul(a.c_[i], b.c_[j]);
    }
    return Poly(*a.spec_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    return a.spec_->same(*b.spec_) && a.c_ == b.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw SingularMatrix("polynomial division by zero");
    if (degree() < divisor.degree()) return {Poly(*spec_), *this};
    const std::uint16_t lead_inv = spec_->inv(divisor.leading());
    std::vector<std::uint16_t> rem(c_);
    std::vector<std::uint16_t> quot(degree() - divisor.degree() + 1, 0);
    for (int i = degree(); i >= divisor.degree(); --i) {
        const std::uint16_t f = spec_->mul(rem[i], lead_inv);
        if (f == 0) continue;
        quot[i - divisor.degree()] = f;
        for (int j = 0; j <= divisor.degree(); ++j)
            rem[i - divisor.degree() + j] ^= spec_->mul(f, divisor.c_[j]);
    }
    return {Poly(*spec_, std::move(quot)), Poly(*spec_, std::move(rem))};
}

std::uint16_t Poly::eval(std::uint16_t x) const {
    std::uint16_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = spec_->add(spec_->mul(acc, x), c_[i]);
    return acc;
}

Matrix Poly::eval(const Matrix& m) const {
    if (!m.is_square()) throw ShapeError("polynomial evaluation expects a square matrix");
    Matrix acc = Matrix::zero(*spec_, m.rows(), m.cols());
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * m;
        for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) ^= c_[i];
    }
    return acc;
}

Poly Poly::mapped(const FieldSpec& to, const std::vector<std::uint16_t>& table) const {
    std::vector<std::uint16_t> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = table[c_[i]];
    return Poly(to, std::move(c));
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    const FieldSpec& f = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(f), u1 = Poly::zero(f);
    Poly v0 = Poly::zero(f), v1 = Poly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly u2 = u0 + q * u1;
        Poly v2 = v0 + q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    // normalize to monic gcd
    if (!r0.is_zero() && r0.leading() != 1) {
        const std::uint16_t inv = f.inv(r0.leading());
        Poly s(f, {inv});
        r0 = r0 * s;
        u0 = u0 * s;
        v0 = v0 * s;
    }
    return {r0, u0, v0};
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = Poly::one(base.field());
    base = base % mod;
    while (e) {
        if (e & 1u) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

namespace {

// c is a square of a polynomial (all exponents even, coefficients squares);
// return its square root via the field Frobenius inverse.
Poly poly_sqrt(const Poly& c) {
    const FieldSpec& f = c.field();
    std::vector<std::uint16_t> out(c.degree() / 2 + 1, 0);
    for (int i = 0; i <= c.degree(); ++i) {
        if (c.coeff(i) == 0) continue;
        if (i & 1) throw InvariantViolation("poly_sqrt on a non-square polynomial");
        out[i / 2] = f.sqrt(c.coeff(i));
    }
    return Poly(f, std::move(out));
}

} // namespace

Poly radical(const Poly& f_in) {
    const FieldSpec& fs = f_in.field();
    Poly f = f_in.monic();
    if (f.degree() <= 0) return Poly::one(fs);
    Poly d = gcd(f, f.derivative());
    if (d.is_one()) return f;
    Poly w = (f / d).monic(); // product of odd-multiplicity irreducibles
    // strip the w-primes out of d; what is left is a perfect square
    Poly c = d;
    while (true) {
        Poly g = gcd(c, w);
        if (g.is_one()) break;
        c = (c / g).monic();
    }
    if (c.is_one()) return w;
    return (w * radical(poly_sqrt(c))).monic();
}

std::vector<unsigned> irreducible_factor_degrees(const Poly& f_in) {
    const FieldSpec& fs = f_in.field();
    Poly f = radical(f_in);
    if (f.degree() <= 0) return {};
    std::vector<unsigned> degrees;
    Poly h = Poly::x(fs);
    const std::uint64_t q = fs.order();
    for (unsigned d = 1; f.degree() > 0; ++d) {
        if (static_cast<int>(2 * d) > f.degree()) {
            // what's left is irreducible
            degrees.push_back(static_cast<unsigned>(f.degree()));
            break;
        }
        h = powmod(h, q, f);
        Poly g = gcd(f, h + Poly::x(fs));
        if (g.degree() > 0) {
            for (int i = 0; i < g.degree() / static_cast<int>(d); ++i) degrees.push_back(d);
            f = (f / g).monic();
            h = h % f;
        }
    }
    return degrees;
}

unsigned splitting_degree_absolute(const Poly& f) {
    const unsigned k = f.field().degree();
    std::uint64_t l = 1;
    for (unsigned d : irreducible_factor_degrees(f)) l = std::lcm<std::uint64_t>(l, d);
    return static_cast<unsigned>(k * l);
}

} // namespace spv
