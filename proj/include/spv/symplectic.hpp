#pragma once

#include "spv/matrix.hpp"
#include "spv/poly.hpp"

#include <cstdint>
#include <random>
#include <utility>

namespace spv {

enum class GramKind { Antidiagonal, BlockSplit, Custom };

/// A 2n-dimensional space with an invertible alternating Gram matrix
/// (symmetric with zero diagonal in characteristic 2).  The two named
/// conventions are the antidiagonal form <e_i, e_j> = delta_{i+j,2n+1}
/// and the split form [[0,I],[I,0]]; orthogonal direct sums of those
/// arise from assembling indecomposables.
class SymplecticSpace {
  public:
    static SymplecticSpace antidiagonal(const FieldSpec& spec, std::size_t n);
    static SymplecticSpace block_split(const FieldSpec& spec, std::size_t n);
    static SymplecticSpace from_gram(Matrix gram);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return 2 * n_; }
    const Matrix& gram() const { return gram_; }
    const FieldSpec& field() const { return gram_.field(); }
    GramKind kind() const { return kind_; }

    /// <v, w> = v^t Gram w for column vectors.
    std::uint16_t form(const Matrix& v, const Matrix& w) const;

    static SymplecticSpace orthogonal_sum(const SymplecticSpace& a, const SymplecticSpace& b);

    SymplecticSpace mapped(const FieldSpec& to, const std::vector<std::uint16_t>& table) const;

  private:
    SymplecticSpace(Matrix gram, GramKind kind, std::size_t n)
        : gram_(std::move(gram)), kind_(kind), n_(n) {}

    Matrix gram_;
    GramKind kind_;
    std::size_t n_;
};

/// Element of sp(V): mat^t Gram + Gram mat = 0, checked at construction.
struct LieElement {
    SymplecticSpace space;
    Matrix mat;

    LieElement(SymplecticSpace s, Matrix m);
};

/// M^t Omega + Omega M == 0.
bool in_sp(const Matrix& m, const SymplecticSpace& space);

/// Skew-adjointness <zv, v> = 0 for all v: z in sp and diag(Omega z) = 0.
/// Commutators of sp elements always land here in characteristic 2.
bool in_so_image(const Matrix& z, const SymplecticSpace& space);

/// x y + y x (minus is plus in characteristic 2).
Matrix bracket(const LieElement& x, const LieElement& y);
Matrix bracket(const Matrix& x, const Matrix& y);

/// Adjoint B* of B : W -> U, defined by <B w, u>_U = <w, B* u>_W;
/// concretely Omega_W^{-1} B^t Omega_U.
Matrix adjoint_star(const Matrix& b, const SymplecticSpace& u, const SymplecticSpace& w);

/// x = x_s + x_n with x_s semisimple, x_n nilpotent, both polynomials in x
/// (Newton iteration against the separable radical of the minimal polynomial).
std::pair<Matrix, Matrix> jordan_chevalley(const Matrix& x);

/// For semisimple x_s split over its field: distinct eigenspaces pairwise
/// orthogonal and the form nondegenerate on each.  Throws NotSplit when the
/// eigenspaces do not fill the space.
bool eigenspace_orthogonality_check(const LieElement& xs);

/// Basis of sp(V) for the space's Gram matrix, in a deterministic order.
std::vector<Matrix> sp_basis(const SymplecticSpace& space);

/// P with P^t Omega P = [[0,I],[I,0]] (hyperbolic-pair extraction); the
/// change of basis between Gram conventions.
Matrix symplectic_basis_transform(const SymplecticSpace& space);

/// Random element of Sp(V): product of elementary symplectic factors in the
/// split basis, conjugated back through the basis transform.
Matrix random_symplectic(const SymplecticSpace& space, std::mt19937_64& rng);

/// Random element of sp(V): random coefficients over sp_basis.
Matrix random_sp_element(const SymplecticSpace& space, std::mt19937_64& rng);

std::uint16_t random_scalar(const FieldSpec& spec, std::mt19937_64& rng);
Matrix random_matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols,
                     std::mt19937_64& rng);
Matrix random_invertible(const FieldSpec& spec, std::size_t n, std::mt19937_64& rng);
Matrix random_symmetric(const FieldSpec& spec, std::size_t n, std::mt19937_64& rng);

/// Smallest-degree field over which charpoly(x) splits; throws NotSplit when
/// it would exceed degree 16.  Returns the enlarged space and element.
std::pair<SymplecticSpace, Matrix> enlarge_to_splitting_field(const SymplecticSpace& space,
                                                              const Matrix& x);

} // namespace spv
