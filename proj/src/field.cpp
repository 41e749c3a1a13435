#include "spv/field.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace spv {

namespace {

// Lexicographically smallest irreducible polynomial of each degree over
// GF(2); index = degree, bit i = coefficient of x^i.  Degree 1 is x+1 so
// that GF(2) residues are plain bits.
constexpr std::array<std::uint32_t, FieldSpec::kMaxDegree + 1> kStandardModuli = {
    0,       0x3,     0x7,     0xb,    0x13,   0x25,   0x43,    0x83,
    0x11b,   0x203,   0x409,   0x805,  0x1009, 0x201b, 0x4021,  0x8003,
    0x1002b,
};

unsigned gf2_poly_degree(std::uint32_t p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

std::uint32_t gf2_poly_mod(std::uint32_t a, std::uint32_t m) {
    const unsigned dm = gf2_poly_degree(m);
    while (a >> dm) {
        const unsigned da = gf2_poly_degree(a);
        a ^= m << (da - dm);
    }
    return a;
}

} // namespace

bool FieldSpec::is_irreducible_gf2(std::uint32_t modulus, unsigned degree) {
    if (degree == 0 || gf2_poly_degree(modulus) != degree) return false;
    if ((modulus & 1u) == 0) return degree == 1; // divisible by x
    for (unsigned d = 1; d <= degree / 2; ++d) {
        for (std::uint32_t p = 1u << d; p < (2u << d); ++p) {
            if (gf2_poly_mod(modulus, p) == 0) return false;
        }
    }
    return true;
}

std::uint32_t FieldSpec::standard_modulus(unsigned degree) {
    if (degree == 0 || degree > kMaxDegree)
        throw InvariantViolation("field degree must be in 1..16");
    return kStandardModuli[degree];
}

FieldSpec::FieldSpec(unsigned degree) : FieldSpec(degree, standard_modulus(degree)) {}

FieldSpec::FieldSpec(unsigned degree, std::uint32_t modulus)
    : k_(degree), modulus_(modulus) {
    if (degree == 0 || degree > kMaxDegree)
        throw InvariantViolation("field degree must be in 1..16");
    if (!is_irreducible_gf2(modulus, degree))
        throw InvariantViolation("field modulus is not irreducible of the stated degree");
    if (k_ >= 2 && k_ <= kTableDegreeLimit) {
        use_tables_ = true;
        build_tables();
    }
}

const FieldSpec& FieldSpec::get(unsigned degree) {
    static std::array<std::unique_ptr<FieldSpec>, kMaxDegree + 1> cache;
    static std::mutex mu;
    if (degree == 0 || degree > kMaxDegree)
        throw InvariantViolation("field degree must be in 1..16");
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[degree]) cache[degree] = std::make_unique<FieldSpec>(degree);
    return *cache[degree];
}

std::uint16_t FieldSpec::mul_slow(std::uint16_t a, std::uint16_t b) const {
    // Carry-less multiply, reducing on the fly so intermediates stay in k+1 bits.
    std::uint32_t acc = 0;
    std::uint32_t aa = a;
    std::uint16_t bb = b;
    while (bb) {
        if (bb & 1u) acc ^= aa;
        bb >>= 1;
        aa <<= 1;
        if (aa >> k_ & 1u) aa ^= modulus_;
    }
    return static_cast<std::uint16_t>(acc);
}

void FieldSpec::build_tables() {
    const std::uint32_t q = order();
    const std::uint32_t group = q - 1;
    // Find a multiplicative generator by order testing.
    std::vector<std::uint32_t> prime_factors;
    {
        std::uint32_t m = group;
        for (std::uint32_t p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                prime_factors.push_back(p);
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) prime_factors.push_back(m);
    }
    auto pow_slow = [&](std::uint16_t a, std::uint32_t e) {
        std::uint16_t r = 1;
        while (e) {
            if (e & 1u) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint16_t gen = 0;
    for (std::uint32_t c = 2; c < q; ++c) {
        bool ok = true;
        for (std::uint32_t p : prime_factors) {
            if (pow_slow(static_cast<std::uint16_t>(c), group / p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = static_cast<std::uint16_t>(c);
            break;
        }
    }
    log_.assign(q, 0);
    exp_.assign(2 * group, 0);
    std::uint16_t v = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = v;
        exp_[i + group] = v;
        log_[v] = static_cast<std::uint16_t>(i);
        v = mul_slow(v, gen);
    }
}

std::uint16_t FieldSpec::inv(std::uint16_t a) const {
    if (a == 0) throw SingularMatrix("inverse of zero field element");
    if (k_ == 1) return 1;
    if (use_tables_) return exp_[(order() - 1) - log_[a]];
    return pow(a, order() - 2);
}

std::uint16_t FieldSpec::pow(std::uint16_t a, std::uint64_t e) const {
    std::uint16_t r = 1;
    while (e) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint16_t FieldSpec::sqrt(std::uint16_t a) const {
    // Inverse of Frobenius: square k-1 times.
    std::uint16_t r = a;
    for (unsigned i = 0; i + 1 < k_; ++i) r = mul(r, r);
    return r;
}

Scalar sqrt(Scalar a) { return Scalar(*a.spec, a.spec->sqrt(a.bits)); }

std::vector<std::uint16_t> embedding_table(const FieldSpec& from, const FieldSpec& to) {
    if (to.degree() % from.degree() != 0)
        throw FieldMismatch("no embedding: source degree does not divide target degree");
    const std::uint32_t qf = from.order();
    std::vector<std::uint16_t> image(qf, 0);
    if (from.same(to)) {
        for (std::uint32_t b = 0; b < qf; ++b) image[b] = static_cast<std::uint16_t>(b);
        return image;
    }
    // Smallest root of the source modulus in the target field.
    std::uint16_t root = 0;
    bool found = false;
    for (std::uint32_t c = 0; c < to.order(); ++c) {
        std::uint16_t acc = 0;
        std::uint16_t p = 1;
        for (unsigned i = 0; i <= from.degree(); ++i) {
            if (from.modulus() >> i & 1u) acc = to.add(acc, p);
            p = to.mul(p, static_cast<std::uint16_t>(c));
        }
        if (acc == 0) {
            root = static_cast<std::uint16_t>(c);
            found = true;
            break;
        }
    }
    if (!found) throw FieldMismatch("source modulus has no root in target field");
    std::vector<std::uint16_t> powers(from.degree(), 1);
    for (unsigned i = 1; i < from.degree(); ++i) powers[i] = to.mul(powers[i - 1], root);
    for (std::uint32_t b = 0; b < qf; ++b) {
        std::uint16_t acc = 0;
        for (unsigned i = 0; i < from.degree(); ++i)
            if (b >> i & 1u) acc = to.add(acc, powers[i]);
        image[b] = acc;
    }
    return image;
}

} // namespace spv
