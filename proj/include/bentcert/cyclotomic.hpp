#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bentcert {

using BigInt = boost::multiprecision::cpp_int;

/// An element of Z[zeta_p], zeta_p = exp(2 pi i / p).
///
/// Stored as p coefficients of zeta^0..zeta^(p-1) in canonical form: the
/// zeta^(p-1) coefficient is subtracted from every coefficient (using
/// 1 + zeta + ... + zeta^(p-1) = 0), so the last coefficient is always 0 and
/// equality is coefficient-wise.
class CycInt {
 public:
  CycInt() = default;
  /// n * 1.
  CycInt(std::uint32_t p, BigInt n);
  static CycInt zero(std::uint32_t p) { return {p, 0}; }
  static CycInt zeta_power(std::uint32_t p, std::uint32_t j);
  /// Any length-p coefficient list; reduced on construction.
  static CycInt from_coeffs(std::uint32_t p, std::vector<BigInt> coeffs);
  /// sum_j counts[j] zeta^j.
  static CycInt from_histogram(std::span<const std::uint64_t> counts);

  std::uint32_t p() const noexcept { return p_; }
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator*(const CycInt& o) const;
  CycInt& operator+=(const CycInt& o);
  /// zeta^j -> zeta^(p-j), i.e. complex conjugation.
  CycInt conjugate() const;
  /// S * conj(S) = |S|^2; lies in the real subfield, rational only sometimes.
  CycInt abs_sq() const;
  /// n when the value is the rational integer n.
  std::optional<BigInt> as_integer() const;
  std::complex<double> to_complex() const;
  /// Integer as decimal, otherwise "[c0 c1 ... c_{p-2}]".
  std::string to_string() const;

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

 private:
  void reduce();
  void check_same(const CycInt& o) const;

  std::uint32_t p_ = 2;
  std::vector<BigInt> c_ = {0, 0};
};

/// Fixed-width kernels over unreduced length-p int64 coefficient vectors,
/// for the hot loops. Callers keep magnitudes well inside int64.
namespace cyc64 {
/// |S|^2 of S = sum_j s[j] zeta^j, written as the length-p vector
/// out[r] = sum_j s[j] s[j-r], not reduced.
void abs_sq(std::span<const std::int64_t> s, std::span<std::int64_t> out);
/// Integer value if the unreduced vector is rational (all non-constant
/// coefficients equal).
std::optional<std::int64_t> as_integer(std::span<const std::int64_t> s);
double real_value(std::span<const std::int64_t> s);
CycInt to_cycint(std::span<const std::int64_t> s);
}  // namespace cyc64

}  // namespace bentcert
