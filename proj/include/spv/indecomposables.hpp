#pragma once

#include "spv/symplectic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spv {

/// The three orthogonally indecomposable nilpotent kinds in characteristic 2.
/// Size parameter m: V has one Jordan block of size 2m, W and Wl have two
/// blocks of size m (Wl glued by a symmetric block B, with 0 < ell < m/2).
enum class IndecompKind { V, W, Wl };

struct IndecompLabel {
    IndecompKind kind;
    std::size_t m = 1;
    std::size_t ell = 0; // only meaningful for Wl

    std::size_t module_dim() const { return 2 * m; }
    std::size_t block_size() const { return kind == IndecompKind::V ? 2 * m : m; }
    std::size_t block_count() const { return kind == IndecompKind::V ? 1 : 2; }

    /// Paper-style name: V(2m), W(m), Wl(m):ell.
    std::string to_string() const;

    friend bool operator==(const IndecompLabel&, const IndecompLabel&) = default;
};

/// Canonical ordering: kind, then m descending, then ell.
bool canonical_less(const IndecompLabel& a, const IndecompLabel& b);

/// Multiset of labels; total dimension 2n.
struct OrthogonalType {
    std::vector<IndecompLabel> labels; // kept canonically sorted

    explicit OrthogonalType(std::vector<IndecompLabel> ls);

    std::size_t total_dim() const;
    bool all_v_kind() const;
    std::string to_string() const;

    /// Syntax: labels joined by '+', each "V<t>", "W<m>" or "Wl<m>:<ell>",
    /// where the numeral is the paper parameter (V4 = one block of 4,
    /// W3 = two blocks of 3).
    static OrthogonalType parse(const std::string& text);
};

/// Weakly decreasing partition of block sizes.
struct JordanType {
    std::vector<std::size_t> parts;

    std::size_t total() const;
    std::string to_string() const;
    friend bool operator==(const JordanType&, const JordanType&) = default;
};

struct BuiltElement {
    SymplecticSpace space;
    Matrix x;
};

/// Single Jordan block J_{2m} with the antidiagonal form.
BuiltElement build_V(const FieldSpec& spec, std::size_t m);

/// Two blocks diag(J_m, J_m^t) with the split form (B = 0 case of Wl).
BuiltElement build_W(const FieldSpec& spec, std::size_t m);

/// [[J_m, B],[0, J_m^t]] with B symmetric, split form.  When B is given the
/// Jordan type must come out (m, m) (else BadJordanType) and the realized
/// ell, measured from group point counts, must land in (0, m/2) (else
/// EllOutOfRange).  Without B, picks the first search candidate realizing
/// the requested ell.
BuiltElement build_Wl(const FieldSpec& spec, std::size_t m, std::size_t ell,
                      const std::optional<Matrix>& b = std::nullopt,
                      std::uint64_t budget = std::uint64_t(1) << 26);

/// Block-diagonal element over the orthogonal direct sum of the labels.
BuiltElement assemble(const FieldSpec& spec, const OrthogonalType& type,
                      std::uint64_t budget = std::uint64_t(1) << 26);

/// Partition from ranks of powers: #{parts >= j} = rank(x^{j-1}) - rank(x^j).
JordanType jordan_type_of(const Matrix& x);

/// dim Hom_x(J_a, J_b) = min(a, b): the closed form and the kernel
/// computation of M J_a + J_b M on b x a matrices, which must agree.
std::size_t hom_dim(std::size_t a, std::size_t b);
std::size_t hom_dim_computed(std::size_t a, std::size_t b, const FieldSpec& spec);

/// Group-centralizer dimension by peeling the smallest indecomposable:
/// cross term (r-1) t_r for a V label, 2 (r-2) t_r for W/Wl, with base
/// values m / 3m / 3m - 2 ell.
std::size_t group_dim_from_type(const OrthogonalType& type);

/// One candidate of the default-B search for Wl(m): B has a single
/// symmetric entry pattern; classification is measured, not assumed.
struct WlCandidate {
    Matrix b;
    std::size_t row, col;
    JordanType jordan;
    bool two_blocks = false;            // Jordan type == (m, m)
    std::size_t lie_dim = 0;
    std::map<std::uint64_t, std::uint64_t> group_counts;
    std::size_t group_dim = 0;
    bool ambiguous = false;
    std::size_t ell_realized = 0;       // (3m - group_dim) / 2 when two_blocks
};

std::vector<WlCandidate> wl_search(const FieldSpec& spec, std::size_t m,
                                   const std::vector<std::uint64_t>& fields,
                                   std::uint64_t budget = std::uint64_t(1) << 26);

/// Every orthogonal type of total dimension <= max_dim, using Wl labels
/// only for (m, ell) pairs realized by the search data.
std::vector<OrthogonalType> enumerate_orthogonal_types(
    std::size_t max_dim, const std::vector<std::pair<std::size_t, std::size_t>>& wl_realized);

} // namespace spv
