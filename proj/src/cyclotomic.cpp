#include "bentcert/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "bentcert/error.hpp"
#include "bentcert/field.hpp"

namespace bentcert {

namespace {

std::complex<double> root_of_unity(std::uint32_t p, std::uint32_t j) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(j % p) / static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

CycInt::CycInt(std::uint32_t p, BigInt n) : p_(p), c_(p, 0) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "cyclotomic ring needs prime p");
  c_[0] = std::move(n);
}

CycInt CycInt::zeta_power(std::uint32_t p, std::uint32_t j) {
  CycInt z(p, 0);
  z.c_[j % p] = 1;
  z.reduce();
  return z;
}

CycInt CycInt::from_coeffs(std::uint32_t p, std::vector<BigInt> coeffs) {
  if (coeffs.size() != p)
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(p) + " coefficients");
  CycInt z(p, 0);
  z.c_ = std::move(coeffs);
  z.reduce();
  return z;
}

CycInt CycInt::from_histogram(std::span<const std::uint64_t> counts) {
  const auto p = static_cast<std::uint32_t>(counts.size());
  CycInt z(p, 0);
  for (std::uint32_t j = 0; j < p; ++j) z.c_[j] = counts[j];
  z.reduce();
  return z;
}

void CycInt::reduce() {
  const BigInt last = c_[p_ - 1];
  if (last == 0) return;
  for (auto& c : c_) c -= last;
}

void CycInt::check_same(const CycInt& o) const {
  if (p_ != o.p_) throw Error(ErrorCode::PrimeMismatch, "operands over different cyclotomic rings");
}

CycInt CycInt::operator+(const CycInt& o) const {
  CycInt r = *this;
  r += o;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::uint32_t j = 0; j < p_; ++j) c_[j] += o.c_[j];
  reduce();
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same(o);
  CycInt r = *this;
  for (std::uint32_t j = 0; j < p_; ++j) r.c_[j] -= o.c_[j];
  r.reduce();
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same(o);
  CycInt r(p_, 0);
  for (std::uint32_t i = 0; i < p_; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < p_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  r.reduce();
  return r;
}

CycInt CycInt::conjugate() const {
  CycInt r(p_, 0);
  for (std::uint32_t j = 0; j < p_; ++j) r.c_[(p_ - j) % p_] = c_[j];
  r.reduce();
  return r;
}

CycInt CycInt::abs_sq() const { return *this * conjugate(); }

std::optional<BigInt> CycInt::as_integer() const {
  for (std::uint32_t j = 1; j < p_; ++j)
    if (c_[j] != 0) return std::nullopt;
  return c_[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> sum = 0.0;
  for (std::uint32_t j = 0; j < p_; ++j)
    if (c_[j] != 0) sum += c_[j].convert_to<double>() * root_of_unity(p_, j);
  return sum;
}

std::string CycInt::to_string() const {
  if (auto n = as_integer()) return n->str();
  std::ostringstream out;
  out << '[';
  for (std::uint32_t j = 0; j + 1 < p_; ++j) out << (j ? " " : "") << c_[j];
  out << ']';
  return out.str();
}

namespace cyc64 {

void abs_sq(std::span<const std::int64_t> s, std::span<std::int64_t> out) {
  const std::size_t p = s.size();
  for (std::size_t r = 0; r < p; ++r) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < p; ++j) acc += s[j] * s[(j + p - r) % p];
    out[r] = acc;
  }
}

std::optional<std::int64_t> as_integer(std::span<const std::int64_t> s) {
  for (std::size_t j = 2; j < s.size(); ++j)
    if (s[j] != s[1]) return std::nullopt;
  return s.size() > 1 ? s[0] - s[1] : s[0];
}

double real_value(std::span<const std::int64_t> s) {
  if (auto n = as_integer(s)) return static_cast<double>(*n);
  const auto p = static_cast<std::uint32_t>(s.size());
  double sum = 0.0;
  for (std::uint32_t j = 0; j < p; ++j)
    sum += static_cast<double>(s[j] - s[p - 1]) * root_of_unity(p, j).real();
  return sum;
}

CycInt to_cycint(std::span<const std::int64_t> s) {
  std::vector<BigInt> c(s.begin(), s.end());
  return CycInt::from_coeffs(static_cast<std::uint32_t>(s.size()), std::move(c));
}

}  // namespace cyc64

}  // namespace bentcert
