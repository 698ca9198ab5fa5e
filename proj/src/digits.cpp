#include "bentcert/digits.hpp"

#include <algorithm>
#include <bit>

namespace bentcert {

DigitVectors::DigitVectors(std::uint32_t p, std::uint32_t ndigits) : p_(p), ndigits_(ndigits) {
  pow_.resize(ndigits + 1);
  pow_[0] = 1;
  for (std::uint32_t j = 0; j < ndigits; ++j) pow_[j + 1] = pow_[j] * p;
  size_ = pow_[ndigits];
  if (p == 2) return;

  std::uint32_t width = 0;
  for (std::uint32_t c = 1; c * p <= 256; c *= p) ++width;
  if (width == 0) width = 1;
  for (std::uint32_t done = 0; done < ndigits || nchunks_ == 0; done += width) {
    const std::uint32_t w = ndigits == 0 ? 0 : std::min(width, ndigits - done);
    const std::uint32_t c = pow_[w];
    chunk_size_.push_back(c);
    std::vector<std::uint8_t> add(static_cast<std::size_t>(c) * c);
    std::vector<std::uint8_t> neg(c);
    for (std::uint32_t a = 0; a < c; ++a) {
      std::uint32_t na = 0;
      for (std::uint32_t j = 0; j < w; ++j) na += ((p - (a / pow_[j]) % p) % p) * pow_[j];
      neg[a] = static_cast<std::uint8_t>(na);
      for (std::uint32_t b = 0; b < c; ++b) {
        std::uint32_t s = 0;
        for (std::uint32_t j = 0; j < w; ++j)
          s += (((a / pow_[j]) % p + (b / pow_[j]) % p) % p) * pow_[j];
        add[static_cast<std::size_t>(a) * c + b] = static_cast<std::uint8_t>(s);
      }
    }
    add_.push_back(std::move(add));
    neg_.push_back(std::move(neg));
    ++nchunks_;
    if (ndigits == 0) break;
  }
}

std::uint32_t DigitVectors::add_chunked(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t k = 0; k < nchunks_; ++k) {
    const std::uint32_t c = chunk_size_[k];
    const std::uint32_t ca = a % c;
    const std::uint32_t cb = b % c;
    a /= c;
    b /= c;
    result += place * add_[k][ca * c + cb];
    place *= c;
  }
  return result;
}

std::uint32_t DigitVectors::neg_chunked(std::uint32_t a) const noexcept {
  std::uint32_t result = 0;
  std::uint32_t place = 1;
  for (std::uint32_t k = 0; k < nchunks_; ++k) {
    const std::uint32_t c = chunk_size_[k];
    result += place * neg_[k][a % c];
    a /= c;
    place *= c;
  }
  return result;
}

std::uint32_t DigitVectors::scale(std::uint32_t k, std::uint32_t a) const noexcept {
  k %= p_;
  if (k == 0) return 0;
  if (p_ == 2) return a;
  std::uint32_t result = 0;
  for (std::uint32_t j = 0; j < ndigits_; ++j)
    result += ((a / pow_[j]) % p_ * k % p_) * pow_[j];
  return result;
}

std::vector<std::uint32_t> DigitVectors::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> out(ndigits_);
  for (std::uint32_t j = 0; j < ndigits_; ++j) {
    out[j] = a % p_;
    a /= p_;
  }
  return out;
}

std::uint32_t DigitVectors::pack(const std::vector<std::uint32_t>& digits) const {
  std::uint32_t a = 0;
  for (std::size_t j = digits.size(); j-- > 0;) a = a * p_ + digits[j];
  return a;
}

std::uint32_t DigitVectors::carry_position(std::uint32_t a) const noexcept {
  if (p_ == 2) return static_cast<std::uint32_t>(std::countr_one(a));
  std::uint32_t c = 0;
  while (c < ndigits_ && a % p_ == p_ - 1) {
    a /= p_;
    ++c;
  }
  return c;
}

}  // namespace bentcert
