#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bentcert/funcs.hpp"

namespace bentcert {

/// How the double sum over basis differences is indexed.
///
/// corrected: offsets b_i = sum_{j<i} k_j g_j and inner shifts j g_i for
///            j = 0..k_i-1. This is what telescoping f(x+a) - f(x) yields.
/// printed:   inner shifts j g_i for j = 1..k_i and offsets
///            b_i = sum_{j<i} k_j (k_j g_j). Kept as a negative control; it
///            already fails for a single basis step.
enum class IndexConvention { corrected, printed };

/// The d*ell difference tables of f along a fixed basis.
class BaseDeltaSet {
 public:
  /// Throws NotABasis if the basis belongs to another space.
  BaseDeltaSet(const FnTable& f, SpaceBasis basis);

  const SpaceBasis& basis() const noexcept { return basis_; }
  const std::vector<FnTable>& tables() const noexcept { return tables_; }
  const Space& space() const noexcept { return basis_.space(); }

 private:
  SpaceBasis basis_;
  std::vector<FnTable> tables_;
};

BaseDeltaSet base_deltas(const FnTable& f, const SpaceBasis& basis);

/// The digits of a target shift and the running offsets b_i.
struct DecompPlan {
  std::vector<std::uint32_t> digits;   // k_i
  std::vector<Space::Point> offsets;   // b_i
};

DecompPlan plan_shift(const SpaceBasis& basis, Space::Point a,
                      IndexConvention convention = IndexConvention::corrected);

/// Delta_{f,a} assembled from shifted copies of the base tables only.
FnTable reconstruct_delta(const BaseDeltaSet& base, Space::Point a,
                          IndexConvention convention = IndexConvention::corrected);

enum class Identity {
  combine,  // Delta_{b+c}(x) = Delta_c(x+b) + Delta_b(x)
  kbeq,     // Delta_{kb}(x) = sum_i Delta_b(x + i b)
  allbut,   // Delta_c(x) = sum_i Delta_{c_i}(x + b_i), c = sum c_i
};

struct IdentityTrial {
  Identity identity = Identity::combine;
  /// combine: {b, c}; kbeq: {b}; allbut: {c_1, ..., c_n}.
  std::vector<Space::Point> shifts;
  std::uint32_t k = 1;  // kbeq only
  IndexConvention convention = IndexConvention::corrected;
};

struct IdentityResult {
  bool pass = false;
  std::optional<Space::Point> counterexample;  // least failing x
};

/// Checks the identity pointwise over every x, comparing against
/// delta_table computed from f directly.
IdentityResult identity_suite(const FnTable& f, const IdentityTrial& trial);

struct DecompCertificate {
  std::uint64_t shifts_checked = 0;
  bool pass = false;
  std::optional<Space::Point> failing_shift;  // least failing a
};

/// For every a != 0, reconstruct_delta(base, a) == delta_table(f, a).
DecompCertificate verify_decomposition(const FnTable& f, const SpaceBasis& basis,
                                       const Workers& workers = {},
                                       IndexConvention convention = IndexConvention::corrected);

}  // namespace bentcert
