#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bentcert/cyclotomic.hpp"
#include "bentcert/funcs.hpp"

namespace bentcert {

/// The additive character chi_u(y) = zeta_p^Tr(u y); nontrivial iff u != 0.
/// Letting u range over F_q^* enumerates every nontrivial character once.
class Character {
 public:
  /// Throws TrivialCharacter for u = 0.
  Character(Field field, Field::Elem u);

  Field::Elem u() const noexcept { return u_; }
  /// Exponent of zeta_p in chi_u(y).
  std::uint32_t exponent(Field::Elem y) const noexcept { return field_.trace(field_.mul(u_, y)); }

 private:
  Field field_;
  Field::Elem u_;
};

/// S(u, m) = sum_x zeta^Tr(u (f(x) - x.m)), from a p-bin histogram of the
/// exponents.
CycInt walsh_exact(const FnTable& f, Field::Elem u, Space::Point m);
CycInt walsh_exact(const FnTable& f, const FieldElement& u, const PointVector& m);

/// S(u, m) for every m at once, computed exactly in Z[zeta_p] by a size-p
/// butterfly along each of the d*ell F_p-axes (rotations and additions
/// only).
class ExactSpectrum {
 public:
  ExactSpectrum(std::uint32_t p, std::uint32_t size, std::vector<std::int64_t> coeffs)
      : p_(p), size_(size), coeffs_(std::move(coeffs)) {}

  std::uint32_t size() const noexcept { return size_; }
  CycInt sum(Space::Point m) const;
  CycInt abs_sq(Space::Point m) const;
  /// |S(m)|^2 when it is a rational integer.
  std::optional<std::int64_t> abs_sq_integer(Space::Point m) const;
  /// |S(m)| in double precision from the exact |S(m)|^2.
  double magnitude(Space::Point m) const;

 private:
  std::uint32_t p_;
  std::uint32_t size_;
  std::vector<std::int64_t> coeffs_;  // size_ * p_, unreduced
};

ExactSpectrum walsh_exact_all(const FnTable& f, Field::Elem u);

/// The same butterfly for any Z[zeta_p]-valued input: data holds p unreduced
/// coefficients per point x, and entry m of the result is
/// sum_x data(x) zeta^(-Tr(u x.m)).
ExactSpectrum exact_transform(const Space& space, Field::Elem u, std::vector<std::int64_t> data);

/// |S(u, m)| for every m by the floating-point size-p transform; for p = 2
/// this is the integer Walsh-Hadamard transform and the result is exact.
std::vector<double> walsh_fast_all(const FnTable& f, Field::Elem u);

struct BentWitness {
  Field::Elem u = 0;
  Space::Point m = 0;
  CycInt abs_sq;
};

struct BentVerdict {
  bool bent = false;
  std::optional<BentWitness> witness;  // least (u, m)
};

enum class ExactRoute {
  automatic,  // histogram for small (q-1) q^(2d), transform above
  histogram,
  transform,
};

/// Bent iff |S(u, m)|^2 == q^d exactly for all u != 0 and all m.
BentVerdict is_bent_exact(const FnTable& f, const Workers& workers = {},
                          ExactRoute route = ExactRoute::automatic);

struct CrossCheck {
  PnVerdict pn;
  BentVerdict bent;
  bool agree = false;
};

/// Runs is_pn and is_bent_exact independently; odd p only.
CrossCheck crosscheck_pn_bent(const FnTable& f, const Workers& workers = {},
                              ExactRoute route = ExactRoute::automatic);

struct SpectrumEntry {
  Space::Point m = 0;
  std::optional<CycInt> abs_sq;  // absent for unsampled entries of a fast run
  double magnitude = 0.0;
};

struct SpectrumReport {
  Field::Elem u = 0;
  std::vector<SpectrumEntry> entries;  // indexed by m
  double max_magnitude = 0.0;
  double min_magnitude = 0.0;
  bool flat = false;  // every |S|^2 checked equals q^d
  std::optional<Space::Point> witness_m;
  std::uint64_t spot_checks = 0;
  std::uint64_t spot_check_failures = 0;  // exact/float disagreements
};

enum class SpectrumMode { exact, fast };

/// exact: every entry carries its exact |S|^2 and a float magnitude, and the
/// two are checked against each other. fast: float magnitudes, with about
/// 1% of entries (at least one, deterministic choice) recomputed by
/// walsh_exact and checked.
SpectrumReport spectrum_report(const FnTable& f, Field::Elem u, SpectrumMode mode);

/// Columns m_index, m_coords, abs_sq_exact, magnitude_float.
void write_spectrum_csv(std::ostream& out, const FnTable& f, const SpectrumReport& report);

}  // namespace bentcert
