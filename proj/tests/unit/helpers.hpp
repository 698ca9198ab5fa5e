#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "bentcert/catalog.hpp"
#include "bentcert/funcs.hpp"

namespace bentcert::testing {

inline FnTable univariate(const Field& field, std::vector<Field::Elem> coeffs) {
  return build_function(FnSpec{FnSpec::Univariate{std::move(coeffs)}}, field, 1);
}

inline FnTable table(const Field& field, std::uint32_t d, std::vector<Field::Elem> values) {
  return FnTable(Space(field, d), std::move(values));
}

inline FnTable catalog(const std::string& name, const Field& field, std::uint32_t d, CatalogParams params = {}) {
  return get_function({name, field, d, std::move(params)}).table;
}

/// sum_x exp(2 pi i Tr(u (f(x) - x.m)) / p), straight from the definition.
inline std::complex<double> walsh_complex(const FnTable& f, Field::Elem u, Space::Point m) {
  const Field& field = f.field();
  std::complex<double> s = 0;
  for (Space::Point x = 0; x < f.size(); ++x) {
    const auto arg = field.mul(u, field.sub(f[x], f.space().dot(x, m)));
    const double angle = 2 * std::numbers::pi * field.trace_by_frobenius(arg) / field.p();
    s += std::polar(1.0, angle);
  }
  return s;
}

/// Built-in fields with q at most `limit`.
inline std::vector<Field> small_fields(std::uint32_t limit) {
  std::vector<Field> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t ell = 1, q = p; q <= limit; ++ell, q *= p) out.push_back(Field::make(p, ell));
  return out;
}

}  // namespace bentcert::testing
