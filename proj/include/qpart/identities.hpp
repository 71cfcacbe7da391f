#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qpart/partitions.hpp"
#include "qpart/series.hpp"

namespace qpart {

enum class CaseId { I, II, III, IV, V, VI };

std::optional<CaseId> parse_case(std::string_view name); // "i".."vi"
std::string case_name(CaseId id);
const std::vector<CaseId>& all_cases();

/// One row of the verified identity family
///   Σ_N [∏_∞ b_j - ∏_N b_j] = ∏_∞ b_j · Σ_d c_d + G,
/// together with the combinatorial readings of both sides.
struct CaseSpec {
    CaseId id;
    std::function<TruncatedSeries(int j, int order)> factor;  // b_j
    std::function<int(int)> factor_valuation;                 // valuation of b_j - 1
    std::function<TruncatedSeries(int d, int order)> summand; // c_d
    std::function<int(int)> summand_valuation;
    std::function<TruncatedSeries(int order)> correction;     // G
    /// Weighted partition sums equal to the left side and to ∏·Σ, computed by
    /// exhaustive enumeration — the independent routes.
    std::function<TruncatedSeries(int order)> comb_lhs;
    std::function<TruncatedSeries(int order)> comb_prod_sum;
};

CaseSpec theorem_case(CaseId id);

/// Σ_{N=0}^{∞} [∏_∞ b_j - ∏_N b_j] truncated. The tail for N with
/// valuation(N+1) > order vanishes mod q^{order+1}, so the sum is finite.
TruncatedSeries lhs_tail_sum(const CaseSpec& spec, int order);

/// The same series via the rearrangement Σ_n n·a_n·∏_{j<n}(1+a_j), a_n = b_n - 1.
TruncatedSeries lhs_lemma_form(const CaseSpec& spec, int order);

/// ∏_∞ b_j · Σ_d c_d + G.
TruncatedSeries rhs(const CaseSpec& spec, int order);

struct RouteValue {
    std::string route;
    std::int64_t value;
};

struct VerificationReport {
    std::string case_id;
    int order = 0;
    std::vector<std::string> routes;
    bool equal = false;
    std::optional<int> first_mismatch;
    std::vector<RouteValue> mismatch_values; // coefficients at first_mismatch, per route
    std::string g_variant;                   // which printed form of G matched, when relevant

    std::string to_text() const;
};

/// Computes the left side by the tail-sum, rearranged, and enumeration routes
/// and the right side by the series and enumeration routes, and compares all
/// five coefficientwise.
VerificationReport verify(CaseId id, int order);

VerificationReport compare_routes(const std::string& case_id,
                                  const std::vector<std::string>& names,
                                  const std::vector<TruncatedSeries>& routes,
                                  std::string g_variant = {});

// Sparse closed forms recovered by the pairings.
TruncatedSeries pentagonal_series(int order);        // 1 + Σ(-1)^r [q^{r(3r-1)/2} + q^{r(3r+1)/2}]
TruncatedSeries theta_square_series(int order);      // 1 + 2Σ(-1)^r q^{r²}
TruncatedSeries theta_triangular_series(int order);  // Σ_{r>=0} q^{r(r+1)/2}
TruncatedSeries triangular_weighted_series(int order); // Σ_{r>=1} r q^{r(r+1)/2}
TruncatedSeries g_series(CaseId id, int order);

// Common weights of the combinatorial routes.
std::int64_t sign_pow(int n);   // (-1)^n
std::int64_t two_pow(int d);    // 2^d, d in [0, 62]

} // namespace qpart
