#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "bentcert/field.hpp"

namespace bentcert {

/// Coordinates (element indices) of a point of F_q^d.
struct PointVector {
  std::vector<Field::Elem> coords;

  friend bool operator==(const PointVector&, const PointVector&) = default;
};

/// F_q^d with points packed as index = sum_i index(x_i) q^i. Since element
/// indices are themselves base-p digit strings, a point index is the base-p
/// packing of its d*ell coordinates over F_p, and point addition is
/// digit-wise.
class Space {
 public:
  using Point = std::uint32_t;

  Space(Field field, std::uint32_t d);

  const Field& field() const noexcept { return impl_->field; }
  std::uint32_t d() const noexcept { return impl_->d; }
  std::uint32_t size() const noexcept { return impl_->digits.size(); }
  /// d * ell, the dimension over F_p.
  std::uint32_t fp_dim() const noexcept { return impl_->digits.ndigits(); }
  const DigitVectors& digits() const noexcept { return impl_->digits; }

  Point add(Point a, Point b) const noexcept { return impl_->digits.add(a, b); }
  Point sub(Point a, Point b) const noexcept { return impl_->digits.sub(a, b); }
  Point neg(Point a) const noexcept { return impl_->digits.neg(a); }
  /// k*a for k in F_p.
  Point scale_fp(std::uint32_t k, Point a) const noexcept { return impl_->digits.scale(k, a); }
  /// c*a coordinate-wise for c in F_q.
  Point scale(Field::Elem c, Point a) const noexcept;

  Field::Elem coord(Point x, std::uint32_t i) const noexcept {
    return (x / impl_->qpow[i]) % field().q();
  }
  /// The point c * e_i.
  Point axis_point(std::uint32_t i, Field::Elem c) const noexcept { return c * impl_->qpow[i]; }
  Field::Elem dot(Point x, Point m) const noexcept;

  PointVector vector(Point x) const;
  /// Throws DimensionMismatch or IndexOutOfRange.
  Point index(const PointVector& v) const;
  FieldElement dot(const PointVector& x, const PointVector& m) const;

  friend bool operator==(const Space& a, const Space& b) noexcept {
    return a.d() == b.d() && a.field() == b.field();
  }

 private:
  struct Impl {
    Field field;
    std::uint32_t d;
    DigitVectors digits;
    std::vector<std::uint32_t> qpow;
  };
  std::shared_ptr<const Impl> impl_;
};

/// An F_p-basis g_1..g_{d*ell} of F_q^d, with the decomposition of every
/// point tabulated at construction (which is also the validity check).
class SpaceBasis {
 public:
  /// beta_i e_j with beta_i = t^i; order j outer, i inner. These are the
  /// points whose index is p^k.
  static SpaceBasis standard(const Space& space);
  /// Throws NotABasis when the points are not an F_p-basis.
  static SpaceBasis from_points(const Space& space, std::vector<Space::Point> vectors);

  const Space& space() const noexcept { return space_; }
  const std::vector<Space::Point>& vectors() const noexcept { return vectors_; }
  std::size_t size() const noexcept { return vectors_.size(); }

  /// Digits k_i in [0, p) with a = sum k_i g_i.
  std::vector<std::uint32_t> decompose(Space::Point a) const;
  Space::Point compose(const std::vector<std::uint32_t>& digits) const;

 private:
  SpaceBasis(Space space, std::vector<Space::Point> vectors) : space_(std::move(space)), vectors_(std::move(vectors)) {}

  Space space_;
  std::vector<Space::Point> vectors_;
  std::shared_ptr<const std::vector<std::uint32_t>> coordinates_;  // point -> packed digits
};

}  // namespace bentcert
