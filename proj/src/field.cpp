#include "bentcert/field.hpp"

#include <sstream>

#include "bentcert/error.hpp"

namespace bentcert {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace poly {

namespace {

void trim(std::vector<std::uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::vector<std::uint32_t> mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                               std::uint32_t p) {
  std::vector<std::uint32_t> mm = m;
  trim(mm);
  trim(a);
  const std::size_t dm = mm.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(mm.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j)
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * mm[j]) % p);
    trim(a);
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  std::vector<std::uint32_t> g = f;
  trim(g);
  const std::size_t deg = g.size() - 1;
  if (deg == 0) return false;
  for (std::size_t k = 1; 2 * k <= deg; ++k) {
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < k; ++j) count *= p;
    std::vector<std::uint32_t> divisor(k + 1, 0);
    divisor[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t j = 0; j < k; ++j, v /= p) divisor[j] = static_cast<std::uint32_t>(v % p);
      if (mod(g, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t ell) {
  std::uint64_t count = 1;
  for (std::uint32_t j = 0; j < ell; ++j) count *= p;
  std::vector<std::uint32_t> f(ell + 1, 0);
  f[ell] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t j = 0; j < ell; ++j, v /= p) f[j] = static_cast<std::uint32_t>(v % p);
    if (is_irreducible(f, p)) return f;
  }
  throw Error(ErrorCode::UnsupportedSize, "no irreducible polynomial found");
}

}  // namespace poly

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t ell,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (p > 251) throw Error(ErrorCode::UnsupportedSize, "characteristic above 251 is not supported");
  if (ell == 0) throw Error(ErrorCode::InvalidInput, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t j = 0; j < ell; ++j) {
    q *= p;
    if (q > kMaxTableSize)
      throw Error(ErrorCode::UnsupportedSize, "q = " + std::to_string(p) + "^" +
                                                  std::to_string(ell) + " exceeds 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->ell = ell;
  impl->q = static_cast<std::uint32_t>(q);
  if (modulus) {
    if (modulus->size() != ell + 1 || modulus->back() != 1)
      throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree ell");
    for (auto c : *modulus)
      if (c >= p) throw Error(ErrorCode::InvalidInput, "modulus coefficients must lie in [0, p)");
    impl->modulus = *modulus;
  } else {
    impl->modulus = poly::least_irreducible(p, ell);
  }
  if (!poly::is_irreducible(impl->modulus, p))
    throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
  impl->digits = DigitVectors(p, ell);

  Field field(impl);

  // Primitive element and log tables, from the schoolbook product.
  const std::uint32_t order = impl->q - 1;
  const auto factors = prime_factors(order);
  auto pow_ref = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    for (; e > 0; e >>= 1, a = field.mul_reference(a, a))
      if (e & 1) r = field.mul_reference(r, a);
    return r;
  };
  Elem g = 1;
  for (Elem cand = 1; cand < impl->q; ++cand) {
    bool ok = true;
    for (auto r : factors)
      if (pow_ref(cand, order / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  impl->primitive = g;
  impl->log.assign(impl->q, 0);
  impl->exp.assign(2 * static_cast<std::size_t>(order) + 1, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    impl->exp[i] = x;
    impl->exp[i + order] = x;
    impl->log[x] = i;
    x = field.mul_reference(x, g);
  }

  // Trace is F_p-linear: tabulate it from the traces of 1, t, ..., t^(ell-1).
  std::vector<std::uint32_t> basis_trace(ell);
  for (std::uint32_t j = 0; j < ell; ++j)
    basis_trace[j] = field.trace_by_frobenius(impl->digits.unit(j));
  impl->trace.assign(impl->q, 0);
  for (Elem a = 0; a < impl->q; ++a) {
    std::uint32_t t = 0;
    Elem v = a;
    for (std::uint32_t j = 0; j < ell; ++j, v /= p) t += (v % p) * basis_trace[j];
    impl->trace[a] = static_cast<std::uint8_t>(t % p);
  }
  return field;
}

Field::Elem Field::mul_reference(Elem a, Elem b) const {
  const std::uint32_t p = impl_->p;
  const std::uint32_t ell = impl_->ell;
  std::vector<std::uint32_t> prod(2 * ell, 0);
  const auto da = impl_->digits.digits(a);
  const auto db = impl_->digits.digits(b);
  for (std::uint32_t i = 0; i < ell; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < ell; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  auto rem = poly::mod(std::move(prod), impl_->modulus, p);
  rem.resize(ell, 0);
  return impl_->digits.pack(rem);
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem r = 1;
  for (; e > 0; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "0 has no inverse");
  return pow(a, impl_->q - 2);
}

std::uint32_t Field::trace_by_frobenius(Elem a) const noexcept {
  Elem sum = 0;
  Elem power = a;
  for (std::uint32_t j = 0; j < impl_->ell; ++j) {
    sum = add(sum, power);
    power = pow(power, impl_->p);
  }
  return sum;
}

FieldElement Field::element(Elem index) const {
  if (index >= q())
    throw Error(ErrorCode::IndexOutOfRange,
                "element index " + std::to_string(index) + " not in [0, " + std::to_string(q()) + ")");
  return {*this, index};
}

FieldElement Field::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() != ell())
    throw Error(ErrorCode::InvalidInput, "expected " + std::to_string(ell()) + " coefficients");
  for (auto c : coeffs)
    if (c >= p()) throw Error(ErrorCode::InvalidInput, "coefficient outside [0, p)");
  return {*this, impl_->digits.pack(coeffs)};
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "F_" << q() << " = F_" << p() << "[t]/(";
  bool first = true;
  for (std::size_t j = impl_->modulus.size(); j-- > 0;) {
    const auto c = impl_->modulus[j];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (j == 0 || c != 1) out << c;
    if (j >= 1) out << "t";
    if (j >= 2) out << "^" << j;
  }
  out << ")";
  return out.str();
}

FieldElement::FieldElement(Field field, Field::Elem index)
    : field_(std::move(field)), index_(index) {}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "operands from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(index_, o.index_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(index_, o.index_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(index_, o.index_)};
}

}  // namespace bentcert
