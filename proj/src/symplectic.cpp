#include "spv/symplectic.hpp"

#include "spv/canonical.hpp"

#include <cassert>

namespace spv {

SymplecticSpace SymplecticSpace::antidiagonal(const FieldSpec& spec, std::size_t n) {
    Matrix g(spec, 2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) g(i, 2 * n - 1 - i) = 1;
    return SymplecticSpace(std::move(g), GramKind::Antidiagonal, n);
}

SymplecticSpace SymplecticSpace::block_split(const FieldSpec& spec, std::size_t n) {
    Matrix g(spec, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, n + i) = 1;
        g(n + i, i) = 1;
    }
    return SymplecticSpace(std::move(g), GramKind::BlockSplit, n);
}

SymplecticSpace SymplecticSpace::from_gram(Matrix gram) {
    if (!gram.is_square() || gram.rows() % 2 != 0)
        throw ShapeError("Gram matrix must be square of even size");
    if (!gram.is_symmetric() || !gram.has_zero_diagonal())
        throw InvariantViolation("Gram matrix must be alternating (symmetric, zero diagonal)");
    if (gram.rank() != gram.rows())
        throw InvariantViolation("Gram matrix must be invertible");
    const std::size_t n = gram.rows() / 2;
    return SymplecticSpace(std::move(gram), GramKind::Custom, n);
}

std::uint16_t SymplecticSpace::form(const Matrix& v, const Matrix& w) const {
    Matrix r = v.transpose() * gram_ * w;
    return r(0, 0);
}

SymplecticSpace SymplecticSpace::orthogonal_sum(const SymplecticSpace& a,
                                                const SymplecticSpace& b) {
    Matrix g = Matrix::direct_sum(a.gram_, b.gram_);
    return SymplecticSpace(std::move(g), GramKind::Custom, a.n_ + b.n_);
}

SymplecticSpace SymplecticSpace::mapped(const FieldSpec& to,
                                        const std::vector<std::uint16_t>& table) const {
    return SymplecticSpace(gram_.mapped(to, table), kind_, n_);
}

LieElement::LieElement(SymplecticSpace s, Matrix m) : space(std::move(s)), mat(std::move(m)) {
    if (mat.rows() != space.dim() || mat.cols() != space.dim())
        throw ShapeError("LieElement matrix size does not match the space");
    if (!in_sp(mat, space))
        throw InvariantViolation("matrix does not satisfy the symplectic condition");
}

bool in_sp(const Matrix& m, const SymplecticSpace& space) {
    if (!m.is_square() || m.rows() != space.dim())
        throw ShapeError("in_sp expects a 2n x 2n matrix over the space's field");
    return (m.transpose() * space.gram() + space.gram() * m).is_zero();
}

bool in_so_image(const Matrix& z, const SymplecticSpace& space) {
    if (!z.is_square() || z.rows() != space.dim())
        throw ShapeError("in_so_image expects a 2n x 2n matrix");
    if (!in_sp(z, space)) return false;
    Matrix oz = space.gram() * z;
    return oz.has_zero_diagonal();
}

Matrix bracket(const Matrix& x, const Matrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols() || !x.is_square())
        throw ShapeError("bracket expects same-size square matrices");
    return x * y + y * x;
}

Matrix bracket(const LieElement& x, const LieElement& y) {
    if (!(x.space.gram() == y.space.gram()))
        throw ShapeError("bracket operands live in different spaces");
    return bracket(x.mat, y.mat);
}

Matrix adjoint_star(const Matrix& b, const SymplecticSpace& u, const SymplecticSpace& w) {
    if (b.rows() != u.dim() || b.cols() != w.dim())
        throw ShapeError("adjoint_star expects B : W -> U (dim U rows, dim W cols)");
    return w.gram().inverse() * b.transpose() * u.gram();
}

std::pair<Matrix, Matrix> jordan_chevalley(const Matrix& x) {
    if (!x.is_square()) throw ShapeError("jordan_chevalley expects a square matrix");
    const FieldSpec& f = x.field();
    const Poly mu = minpoly(x);
    const Poly g = radical(mu);
    Matrix z = x;
    if (!(g == mu)) {
        // v * g' = 1 mod g; the radical is separable over a perfect field.
        ExtGcd e = ext_gcd(g, g.derivative());
        if (e.g.degree() != 0)
            throw InvariantViolation("radical is not separable");
        const std::uint16_t c = f.inv(e.g.coeff(0));
        Poly v = e.v * Poly(f, {c});
        for (std::size_t it = 0; it <= x.rows() + 2; ++it) {
            Matrix gz = g.eval(z);
            if (gz.is_zero()) break;
            z = z + gz * v.eval(z);
        }
    }
    Matrix xs = z;
    Matrix xn = x + xs;
    if (!g.eval(xs).is_zero() || !is_nilpotent(xn) || !bracket(xs, xn).is_zero())
        throw InvariantViolation("Jordan-Chevalley iteration did not converge");
    return {xs, xn};
}

bool eigenspace_orthogonality_check(const LieElement& xs) {
    const SymplecticSpace& space = xs.space;
    const FieldSpec& f = space.field();
    const std::size_t dim = space.dim();
    const Poly chi = charpoly(xs.mat);
    std::vector<Matrix> eigenspaces;
    std::size_t total = 0;
    for (std::uint32_t lam = 0; lam < f.order(); ++lam) {
        if (chi.eval(static_cast<std::uint16_t>(lam)) != 0) continue;
        Matrix shifted = xs.mat;
        for (std::size_t i = 0; i < dim; ++i)
            shifted(i, i) = f.add(shifted(i, i), static_cast<std::uint16_t>(lam));
        Matrix basis = shifted.kernel_basis();
        if (basis.cols() == 0) continue;
        total += basis.cols();
        eigenspaces.push_back(std::move(basis));
    }
    if (total != dim)
        throw NotSplit("element is not diagonalizable over the working field");
    for (std::size_t a = 0; a < eigenspaces.size(); ++a) {
        // nondegeneracy of the form on each eigenspace
        Matrix gaa = eigenspaces[a].transpose() * space.gram() * eigenspaces[a];
        if (gaa.rank() != eigenspaces[a].cols()) return false;
        for (std::size_t b = a + 1; b < eigenspaces.size(); ++b) {
            Matrix gab = eigenspaces[a].transpose() * space.gram() * eigenspaces[b];
            if (!gab.is_zero()) return false;
        }
    }
    return true;
}

std::vector<Matrix> sp_basis(const SymplecticSpace& space) {
    const FieldSpec& f = space.field();
    const std::size_t dim = space.dim();
    const std::size_t n = space.n();
    std::vector<Matrix> basis;
    basis.reserve(2 * n * n + n);
    if (space.kind() == GramKind::BlockSplit) {
        // [[A, B],[C, A^t]] with B, C symmetric: explicit basis.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Matrix e(f, dim, dim);
                e(i, j) = 1;
                e(n + j, n + i) = 1;
                basis.push_back(std::move(e));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Matrix e(f, dim, dim);
                e(i, n + j) = 1;
                e(j, n + i) = 1;
                basis.push_back(std::move(e));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Matrix e(f, dim, dim);
                e(n + i, j) = 1;
                e(n + j, i) = 1;
                basis.push_back(std::move(e));
            }
        }
        return basis;
    }
    // Generic Gram: kernel of y -> y^t Omega + Omega y over the matrix space.
    Matrix constraints(f, dim * dim, dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Matrix e(f, dim, dim);
            e(r, c) = 1;
            Matrix img = e.transpose() * space.gram() + space.gram() * e;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    constraints(i * dim + j, r * dim + c) = img(i, j);
        }
    }
    Matrix ker = constraints.kernel_basis();
    for (std::size_t t = 0; t < ker.cols(); ++t) {
        Matrix e(f, dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) e(i, j) = ker(i * dim + j, t);
        basis.push_back(std::move(e));
    }
    assert(basis.size() == 2 * n * n + n);
    return basis;
}

Matrix symplectic_basis_transform(const SymplecticSpace& space) {
    const FieldSpec& f = space.field();
    const std::size_t dim = space.dim();
    const Matrix& omega = space.gram();
    // Greedy hyperbolic pair extraction from the standard basis.
    std::vector<Matrix> pool;
    for (std::size_t i = 0; i < dim; ++i) {
        Matrix v(f, dim, 1);
        v(i, 0) = 1;
        pool.push_back(std::move(v));
    }
    std::vector<Matrix> es, fs;
    while (!pool.empty()) {
        Matrix v = pool.front();
        std::size_t wi = pool.size();
        std::uint16_t pairing = 0;
        for (std::size_t i = 1; i < pool.size(); ++i) {
            pairing = space.form(v, pool[i]);
            if (pairing != 0) {
                wi = i;
                break;
            }
        }
        if (wi == pool.size())
            throw InvariantViolation("degenerate form during hyperbolic extraction");
        Matrix w = pool[wi].scaled(f.inv(pairing));
        std::vector<Matrix> next;
        for (std::size_t i = 1; i < pool.size(); ++i) {
            if (i == wi) continue;
            Matrix u = pool[i];
            u.add_scaled(v, space.form(u, w));
            u.add_scaled(w, space.form(u, v));
            next.push_back(std::move(u));
        }
        // keep an independent subset of the projected vectors
        std::vector<Matrix> kept;
        Matrix stack(f, dim, 0);
        for (auto& u : next) {
            Matrix trial(f, dim, stack.cols() + 1);
            trial.set_block(0, 0, stack);
            trial.set_block(0, stack.cols(), u);
            if (trial.rank() == trial.cols()) {
                kept.push_back(u);
                stack = std::move(trial);
            }
        }
        es.push_back(std::move(v));
        fs.push_back(std::move(w));
        pool = std::move(kept);
    }
    Matrix p(f, dim, dim);
    for (std::size_t i = 0; i < es.size(); ++i) {
        p.set_block(0, i, es[i]);
        p.set_block(0, es.size() + i, fs[i]);
    }
    Matrix check = p.transpose() * omega * p;
    assert(check == SymplecticSpace::block_split(f, space.n()).gram());
    (void)check;
    return p;
}

std::uint16_t random_scalar(const FieldSpec& spec, std::mt19937_64& rng) {
    return static_cast<std::uint16_t>(rng() & (spec.order() - 1));
}

Matrix random_matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng) {
    Matrix m(spec, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(spec, rng);
    return m;
}

Matrix random_invertible(const FieldSpec& spec, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Matrix m = random_matrix(spec, n, n, rng);
        if (m.rank() == n) return m;
    }
}

Matrix random_symmetric(const FieldSpec& spec, std::size_t n, std::mt19937_64& rng) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = random_scalar(spec, rng);
    return m;
}

Matrix random_symplectic(const SymplecticSpace& space, std::mt19937_64& rng) {
    const FieldSpec& f = space.field();
    const std::size_t n = space.n();
    const std::size_t dim = space.dim();
    Matrix g = Matrix::identity(f, dim);
    for (int rounds = 0; rounds < 3; ++rounds) {
        Matrix upper = Matrix::identity(f, dim);
        Matrix s = random_symmetric(f, n, rng);
        upper.set_block(0, n, s);
        Matrix lower = Matrix::identity(f, dim);
        Matrix t = random_symmetric(f, n, rng);
        lower.set_block(n, 0, t);
        Matrix a = random_invertible(f, n, rng);
        Matrix levi(f, dim, dim);
        levi.set_block(0, 0, a);
        levi.set_block(n, n, a.transpose().inverse());
        g = g * upper * lower * levi;
    }
    if (space.kind() == GramKind::BlockSplit) return g;
    Matrix p = symplectic_basis_transform(space);
    return p * g * p.inverse();
}

Matrix random_sp_element(const SymplecticSpace& space, std::mt19937_64& rng) {
    const std::vector<Matrix> basis = sp_basis(space);
    Matrix x(space.field(), space.dim(), space.dim());
    for (const Matrix& e : basis) x.add_scaled(e, random_scalar(space.field(), rng));
    return x;
}

std::pair<SymplecticSpace, Matrix> enlarge_to_splitting_field(const SymplecticSpace& space,
                                                              const Matrix& x) {
    const FieldSpec& f = space.field();
    const unsigned target = splitting_degree_absolute(charpoly(x));
    if (target > FieldSpec::kMaxDegree)
        throw NotSplit("splitting field exceeds GF(2^16)");
    if (target == f.degree()) return {space, x};
    const FieldSpec& to = FieldSpec::get(target);
    const auto table = embedding_table(f, to);
    return {space.mapped(to, table), x.mapped(to, table)};
}

} // namespace spv
