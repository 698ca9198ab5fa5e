#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bentcert/cyclotomic.hpp"
#include "bentcert/funcs.hpp"
#include "bentcert/spectrum.hpp"

namespace bentcert {

/// A subset E of F_q^d as a membership bitmap.
class PointSet {
 public:
  PointSet(Space space, std::vector<bool> members);
  static PointSet from_points(const Space& space, const std::vector<Space::Point>& points);

  const Space& space() const noexcept { return space_; }
  bool contains(Space::Point x) const noexcept { return members_[x]; }
  std::uint64_t cardinality() const noexcept { return cardinality_; }
  std::vector<Space::Point> points() const;

 private:
  Space space_;
  std::vector<bool> members_;
  std::uint64_t cardinality_ = 0;
};

/// {(x, f(x))} in F_q^(d+1) for f on F_q^d; the last coordinate is f(x).
PointSet graph_of(const FnTable& f);

/// |S(m)|^2 with S(m) = sum_{x in E} zeta^Tr(-x.m), i.e. the unnormalized
/// indicator transform under the canonical character u = 1.
CycInt indicator_ft_abs_sq(const PointSet& set, Space::Point m);
/// Same quantity for a different character parameter u.
CycInt indicator_ft_abs_sq(const PointSet& set, Space::Point m, Field::Elem u);
/// All m at once (index = m), exact.
std::vector<CycInt> indicator_spectrum(const PointSet& set, Field::Elem u = 1,
                                       const Workers& workers = {});

struct SalemConstant {
  double constant = 0.0;  // max_{m != 0} |S(m)| / |E|^(1/2)
  Space::Point argmax = 0;
  /// max |S(m)|^2 over m != 0, when every |S(m)|^2 is a rational integer;
  /// the constant squared is then exactly max_abs_sq / |E|.
  std::optional<BigInt> max_abs_sq;
  std::uint64_t cardinality = 0;
};

/// Throws EmptySet when |E| = 0.
SalemConstant salem_constant(const PointSet& set, const Workers& workers = {});
SalemConstant salem_constant(const PointSet& set, const std::vector<CycInt>& spectrum);

enum class Theorem1Case { origin, vertical, graph };  // m = 0 | m_d = 0 | m_d != 0

std::string_view to_string(Theorem1Case c);

struct SalemEntry {
  Space::Point m = 0;
  Theorem1Case tag = Theorem1Case::origin;
  CycInt abs_sq;
  BigInt expected;  // |E|^2, 0 or q^(d-1) by case
  bool matches = false;
};

struct SalemReport {
  std::uint32_t q = 0;
  std::uint32_t d = 0;  // dimension of the ambient space of the graph
  std::uint64_t cardinality = 0;
  std::vector<SalemEntry> entries;  // indexed by m
  SalemConstant constant;
  bool constant_is_one = false;  // max |S|^2 == |E| as integers
  bool theorem1_pass = false;
};

/// Graph of a bent f: checks |S(m)|^2 = 0 when m_d = 0 and q^(d-1) when
/// m_d != 0 for every m != 0, and a Salem constant of exactly 1. Throws
/// HypothesisFailed when f is not bent.
SalemReport verify_theorem1(const FnTable& f, const Workers& workers = {});
/// The same tabulation without the bentness precondition; case expectations
/// are still reported but theorem1_pass only means every entry matched.
SalemReport salem_report(const FnTable& f, const Workers& workers = {});

/// Columns m_index, m_coords, case_tag, abs_sq_exact, magnitude_float,
/// bound_ratio (|S(m)| / |E|^(1/2)).
void write_salem_csv(std::ostream& out, const Space& space, const SalemReport& report);

}  // namespace bentcert
