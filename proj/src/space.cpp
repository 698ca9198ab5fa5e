#include "bentcert/space.hpp"

#include <string>

#include "bentcert/error.hpp"

namespace bentcert {

Space::Space(Field field, std::uint32_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "dimension d must be at least 1");
  std::uint64_t size = 1;
  std::vector<std::uint32_t> qpow{1};
  for (std::uint32_t i = 0; i < d; ++i) {
    size *= field.q();
    if (size > kMaxTableSize)
      throw Error(ErrorCode::UnsupportedSize,
                  "q^d = " + std::to_string(field.q()) + "^" + std::to_string(d) + " exceeds 2^20");
    qpow.push_back(static_cast<std::uint32_t>(size));
  }
  const std::uint32_t p = field.p();
  const std::uint32_t ndigits = d * field.ell();
  impl_ = std::make_shared<Impl>(Impl{std::move(field), d, DigitVectors(p, ndigits), std::move(qpow)});
}

Space::Point Space::scale(Field::Elem c, Point a) const noexcept {
  const Field& f = field();
  Point out = 0;
  for (std::uint32_t i = 0; i < d(); ++i) out += f.mul(c, coord(a, i)) * impl_->qpow[i];
  return out;
}

Field::Elem Space::dot(Point x, Point m) const noexcept {
  const Field& f = field();
  const std::uint32_t q = f.q();
  Field::Elem acc = 0;
  for (std::uint32_t i = 0; i < d(); ++i, x /= q, m /= q) acc = f.add(acc, f.mul(x % q, m % q));
  return acc;
}

PointVector Space::vector(Point x) const {
  PointVector v;
  v.coords.reserve(d());
  for (std::uint32_t i = 0; i < d(); ++i) v.coords.push_back(coord(x, i));
  return v;
}

Space::Point Space::index(const PointVector& v) const {
  if (v.coords.size() != d())
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(v.coords.size()) +
                                                  " coordinates, expected " + std::to_string(d()));
  Point x = 0;
  for (std::uint32_t i = 0; i < d(); ++i) {
    if (v.coords[i] >= field().q())
      throw Error(ErrorCode::IndexOutOfRange, "coordinate index outside [0, q)");
    x += v.coords[i] * impl_->qpow[i];
  }
  return x;
}

FieldElement Space::dot(const PointVector& x, const PointVector& m) const {
  if (x.coords.size() != m.coords.size())
    throw Error(ErrorCode::DimensionMismatch, "dot of vectors with different lengths");
  return field().element(dot(index(x), index(m)));
}

SpaceBasis SpaceBasis::standard(const Space& space) {
  std::vector<Space::Point> vectors;
  for (std::uint32_t k = 0; k < space.fp_dim(); ++k) vectors.push_back(space.digits().unit(k));
  return from_points(space, std::move(vectors));
}

SpaceBasis SpaceBasis::from_points(const Space& space, std::vector<Space::Point> vectors) {
  if (vectors.size() != space.fp_dim())
    throw Error(ErrorCode::NotABasis, "expected " + std::to_string(space.fp_dim()) +
                                          " vectors, got " + std::to_string(vectors.size()));
  for (auto v : vectors)
    if (v >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "basis vector index out of range");

  // Enumerate every digit combination once, in counting order; each point
  // must be reached exactly once.
  constexpr std::uint32_t kUnseen = 0xffffffffu;
  auto table = std::make_shared<std::vector<std::uint32_t>>(space.size(), kUnseen);
  bool ok = true;
  for_each_linear_image(space.digits(), space.digits(), vectors,
                        [&](std::uint32_t combo, std::uint32_t point) {
                          if ((*table)[point] != kUnseen) ok = false;
                          (*table)[point] = combo;
                        });
  if (!ok) throw Error(ErrorCode::NotABasis, "vectors are linearly dependent over F_p");
  SpaceBasis basis(space, std::move(vectors));
  basis.coordinates_ = std::move(table);
  return basis;
}

std::vector<std::uint32_t> SpaceBasis::decompose(Space::Point a) const {
  if (a >= space_.size()) throw Error(ErrorCode::IndexOutOfRange, "point index out of range");
  return space_.digits().digits((*coordinates_)[a]);
}

Space::Point SpaceBasis::compose(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() != vectors_.size())
    throw Error(ErrorCode::DimensionMismatch, "digit count does not match basis size");
  Space::Point a = 0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    a = space_.add(a, space_.scale_fp(digits[i], vectors_[i]));
  return a;
}

}  // namespace bentcert
