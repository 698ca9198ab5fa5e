#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bentcert/digits.hpp"

namespace bentcert {

/// Largest field (and largest point space) the library will materialize.
inline constexpr std::uint32_t kMaxTableSize = 1u << 20;

bool is_prime(std::uint64_t n);

/// Polynomial helpers over F_p; coefficient lists are little-endian.
namespace poly {
std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                               std::uint32_t p);
/// Exhaustive trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
/// Least monic irreducible of degree ell, ordered by sum_{j<ell} c_j p^j.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t ell);
}  // namespace poly

class FieldElement;

/// F_q = F_p[t]/(modulus), q = p^ell. Elements are handled as their index,
/// the little-endian base-p digits of their polynomial-basis coordinates.
///
/// Field is an immutable shared handle; copies are cheap and compare equal
/// iff (p, ell, modulus) agree.
class Field {
 public:
  using Elem = std::uint32_t;

  /// Without a modulus, the built-in choice (least monic irreducible) is
  /// used. p <= 251 and q <= 2^20 either way.
  static Field make(std::uint32_t p, std::uint32_t ell,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const noexcept { return impl_->p; }
  std::uint32_t ell() const noexcept { return impl_->ell; }
  std::uint32_t q() const noexcept { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }
  const DigitVectors& digits() const noexcept { return impl_->digits; }
  /// Generator of F_q^* used for the log tables.
  Elem primitive() const noexcept { return impl_->primitive; }

  Elem add(Elem a, Elem b) const noexcept { return impl_->digits.add(a, b); }
  Elem sub(Elem a, Elem b) const noexcept { return impl_->digits.sub(a, b); }
  Elem neg(Elem a) const noexcept { return impl_->digits.neg(a); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return impl_->exp[impl_->log[a] + impl_->log[b]];
  }
  /// Schoolbook product with reduction by the modulus; the reference the
  /// log tables are built from.
  Elem mul_reference(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// a^(q-2); throws ZeroInverse for a = 0.
  Elem inv(Elem a) const;
  Elem frobenius(Elem a) const noexcept { return pow(a, impl_->p); }

  /// Absolute trace to F_p, returned as an integer in [0, p). Table lookup.
  std::uint32_t trace(Elem a) const noexcept { return impl_->trace[a]; }
  /// a + a^p + ... + a^(p^(ell-1)) evaluated directly.
  std::uint32_t trace_by_frobenius(Elem a) const noexcept;

  FieldElement element(Elem index) const;
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const { return impl_->digits.digits(a); }

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ ||
           (a.p() == b.p() && a.ell() == b.ell() && a.modulus() == b.modulus());
  }

 private:
  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t ell = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    DigitVectors digits;
    Elem primitive = 1;
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;  // doubled so log a + log b never wraps
    std::vector<std::uint8_t> trace;
  };
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// A field element bound to its field. Arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field field, Field::Elem index);

  const Field& field() const noexcept { return field_; }
  Field::Elem index() const noexcept { return index_; }
  std::vector<std::uint32_t> coeffs() const { return field_.coeffs(index_); }
  bool is_zero() const noexcept { return index_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(index_)}; }
  FieldElement inv() const { return {field_, field_.inv(index_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(index_, e)}; }
  /// Trace as an element of the prime subfield (index in [0, p)).
  FieldElement trace() const { return {field_, field_.trace(index_)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

 private:
  void check_same(const FieldElement& o) const;

  Field field_;
  Field::Elem index_;
};

}  // namespace bentcert
