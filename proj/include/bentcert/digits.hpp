#pragma once

#include <cstdint>
#include <vector>

namespace bentcert {

/// Vectors of F_p^n packed as little-endian base-p integers in [0, p^n).
///
/// Both field elements (n = ell) and points of F_q^d (n = d*ell) use this
/// packing, so their additive structure is the same digit-wise addition.
/// Addition runs through per-chunk lookup tables (at most 256 values per
/// chunk) so that the hot loops never do per-digit division.
class DigitVectors {
 public:
  DigitVectors() = default;
  DigitVectors(std::uint32_t p, std::uint32_t ndigits);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t ndigits() const noexcept { return ndigits_; }
  std::uint32_t size() const noexcept { return size_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (nchunks_ == 1) return add_[0][a * chunk_size_[0] + b];
    return add_chunked(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept {
    if (p_ == 2) return a;
    if (nchunks_ == 1) return neg_[0][a];
    return neg_chunked(a);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  /// k*a for an integer k, taken mod p.
  std::uint32_t scale(std::uint32_t k, std::uint32_t a) const noexcept;

  std::uint32_t digit(std::uint32_t a, std::uint32_t j) const noexcept {
    return (a / pow_[j]) % p_;
  }
  std::uint32_t unit(std::uint32_t j) const noexcept { return pow_[j]; }
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t pack(const std::vector<std::uint32_t>& digits) const;

  /// Number of trailing (p-1) digits of a, i.e. the index of the digit that
  /// increments when stepping from a to a+1 in counting order.
  std::uint32_t carry_position(std::uint32_t a) const noexcept;

 private:
  std::uint32_t add_chunked(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg_chunked(std::uint32_t a) const noexcept;

  std::uint32_t p_ = 0;
  std::uint32_t ndigits_ = 0;
  std::uint32_t size_ = 1;
  std::vector<std::uint32_t> pow_;
  std::uint32_t nchunks_ = 0;
  std::vector<std::uint32_t> chunk_size_;
  std::vector<std::vector<std::uint8_t>> add_;
  std::vector<std::vector<std::uint8_t>> neg_;
};

/// Visits f(x) for every x in counting order, where f is the F_p-linear map
/// (into a DigitVectors codomain) sending the j-th unit vector to images[j].
/// Each step costs one codomain addition.
template <class Visit>
void for_each_linear_image(const DigitVectors& domain, const DigitVectors& codomain,
                           const std::vector<std::uint32_t>& images, Visit&& visit) {
  // Stepping x -> x+1 with c trailing (p-1) digits changes f by
  // sum_{k<c} (1-p) images[k] + images[c] == sum_{k<=c} images[k] (mod p).
  std::vector<std::uint32_t> prefix(images.size());
  std::uint32_t acc = 0;
  for (std::size_t k = 0; k < images.size(); ++k) {
    acc = codomain.add(acc, images[k]);
    prefix[k] = acc;
  }
  std::uint32_t value = 0;
  const std::uint32_t n = domain.size();
  for (std::uint32_t x = 0; x < n; ++x) {
    visit(x, value);
    if (x + 1 < n) value = codomain.add(value, prefix[domain.carry_position(x)]);
  }
}

}  // namespace bentcert
