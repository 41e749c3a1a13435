#pragma once

#include "spv/indecomposables.hpp"
#include "spv/symplectic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spv {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t(1) << 26;

/// q^exponent <= budget, overflow-safe.
bool within_budget(std::uint64_t q, std::size_t exponent, std::uint64_t budget);

/// Basis of {y in sp : x y + y x = 0}, from the stacked linear system on
/// the full matrix space.  Every returned element satisfies both defining
/// equations exactly.
std::vector<LieElement> lie_centralizer_basis(const LieElement& x);

/// Dimension only: 2n^2 + n minus the rank of ad_x restricted to sp.
std::size_t lie_centralizer_dim(const LieElement& x);

/// Basis of the gl commutant {y : x y = y x}.
std::vector<Matrix> gl_commutant_basis(const Matrix& x);

/// Exact number of g over F_q with g x = x g and g^t Omega g = Omega.
/// Enumerates the commutant; for nilpotent x the enumeration covers only a
/// complement of (commutant * x^ceil(nu/2)), whose coordinates enter the
/// symplectic condition linearly and are solved for instead of enumerated.
/// x = 0 falls back to the classical |Sp_2n(F_q)| product when the full
/// commutant is over budget.
std::uint64_t group_centralizer_count(const LieElement& x, std::uint64_t q,
                                      std::uint64_t budget = kDefaultBudget);

/// q^{n^2} * prod_{i=1..n} (q^{2i} - 1); throws on uint64 overflow.
std::uint64_t sp_group_order(std::size_t n, std::uint64_t q);

struct DimEstimate {
    std::size_t dim = 0;
    double residual = 0.0;
    bool ambiguous = false; // residual above the 0.3 acceptance threshold
    bool exact_fit = false; // all count ratios are exact integer powers
};

/// Growth exponent from point counts over at least two field sizes:
/// round(log(N(q2)/N(q1)) / log(q2/q1)) over the largest pair.
DimEstimate group_dim_estimate(const std::map<std::uint64_t, std::uint64_t>& counts);

struct CentralizerReport {
    JordanType jordan_type;
    std::optional<OrthogonalType> orthogonal_type; // nullopt = "unknown"
    std::size_t lie_dim = 0;
    std::map<std::uint64_t, std::uint64_t> group_counts;
    std::size_t group_dim_est = 0;
    bool ambiguous = false;
    long discrepancy = 0;

    std::string to_json() const;
};

/// Delta(x) = dim C_sp(x) - dim C_Sp(x) for nilpotent x, group dimension
/// estimated from counts over the given fields.
CentralizerReport discrepancy(const LieElement& x,
                              const std::vector<std::uint64_t>& fields = {2, 4},
                              std::uint64_t budget = kDefaultBudget);

/// Same report for an assembled orthogonal type; the group dimension comes
/// from the peeling formula (exact), with point-count cross-checks over
/// every field whose enumeration fits the budget.
CentralizerReport discrepancy_of_type(const FieldSpec& spec, const OrthogonalType& type,
                                      const std::vector<std::uint64_t>& fields = {2, 4},
                                      std::uint64_t budget = kDefaultBudget);

struct AdditivityCheck {
    OrthogonalType combined;
    std::size_t dim_u = 0, dim_w = 0, cross = 0;
    std::size_t expected = 0; // dim_u + dim_w + cross
    std::size_t computed = 0; // kernel on the assembled element
    bool pass = false;
};

/// Lie-algebra additivity: dim C_sp(assembled) = dim C_sp(U) + dim C_sp(W)
/// + (r-1) t_r (single-block W) or 2 (r-2) t_r (two-block W).  W must carry
/// the smallest Jordan block of the combined type.
AdditivityCheck verify_lemma_2_1(const FieldSpec& spec, const OrthogonalType& u_type,
                                 const IndecompLabel& w_label,
                                 std::uint64_t budget = kDefaultBudget);

struct DiscrepancyTableRow {
    std::string label;
    std::size_t lie_dim = 0;
    std::size_t group_dim = 0;
    long delta = 0;
    std::string paper_lie, paper_group, paper_delta;
    bool match = false;
    bool ambiguous = false;
    std::size_t ell_realized = 0; // Wl rows
};

/// The discrepancy table: V(2m) -> (2m, m, m) and W(m) -> (3m, 3m, 0) for
/// m = 1..m_max, plus the measured classification of every two-block Wl
/// search candidate for 3 <= m <= m_max.
std::vector<DiscrepancyTableRow> verify_lemma_2_3_table(
    const FieldSpec& spec, std::size_t m_max,
    const std::vector<std::uint64_t>& fields = {2, 4},
    std::uint64_t budget = kDefaultBudget);

} // namespace spv
