#include "bentcert/catalog.hpp"

#include "bentcert/error.hpp"
#include "bentcert/spectrum.hpp"

namespace bentcert {

namespace {

/// Largest q^d at which claims are re-verified on load.
constexpr std::uint32_t kVerifyLimit = 4096;

std::int64_t param(const CatalogParams& params, const std::string& key, std::int64_t fallback) {
  const auto it = params.ints.find(key);
  return it == params.ints.end() ? fallback : it->second;
}

Field::Elem element_param(const CatalogRequest& r, const std::string& key, std::int64_t fallback) {
  const auto v = param(r.params, key, fallback);
  if (v < 0 || v >= static_cast<std::int64_t>(r.field.q()))
    throw Error(ErrorCode::InvalidInput, key + " must be an element index in [0, q)");
  return static_cast<Field::Elem>(v);
}

void require_d(const CatalogRequest& r, std::uint32_t d) {
  if (r.d != d)
    throw Error(ErrorCode::SpecDimensionMismatch,
                r.name + " is defined for d = " + std::to_string(d) + ", got d = " + std::to_string(r.d));
}

std::vector<Field::Elem> tabulate(const Space& space, auto&& fn) {
  std::vector<Field::Elem> values(space.size());
  for (Space::Point x = 0; x < space.size(); ++x) values[x] = fn(x);
  return values;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

FnTable random_function(const Field& field, std::uint32_t d, std::uint64_t seed) {
  Space space(field, d);
  return FnTable(space, tabulate(space, [&](Space::Point x) {
                   return static_cast<Field::Elem>(
                       splitmix64(seed + (static_cast<std::uint64_t>(x) + 1) * 0x9e3779b97f4a7c15ull) % field.q());
                 }));
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"square", "sum of squares x_1^2 + ... + x_d^2 (odd p)", {}},
      {"power", "monomial x^e on F_q (d = 1); properties measured, not claimed", {"e"}},
      {"bilinear", "f(x, y) = x*y on F_q^2", {}},
      {"bool_quadratic", "x1*x2 + x3*x4 + ... on F_2^d, d even", {}},
      {"random", "seeded uniform table (splitmix64)", {"seed"}},
      {"affine", "c*x + b on F_q (d = 1)", {"c", "b"}},
  };
  return entries;
}

CatalogFunction get_function(const CatalogRequest& r, const Workers& workers) {
  const Field& field = r.field;
  Space space(field, r.d);
  std::optional<FnTable> table;
  Expectations expected;

  if (r.name == "square") {
    if (field.p() == 2) throw Error(ErrorCode::InvalidInput, "square needs odd characteristic");
    table.emplace(space, tabulate(space, [&](Space::Point x) {
                    Field::Elem acc = 0;
                    for (std::uint32_t i = 0; i < r.d; ++i) {
                      const auto c = space.coord(x, i);
                      acc = field.add(acc, field.mul(c, c));
                    }
                    return acc;
                  }));
    expected = {true, true};
  } else if (r.name == "power") {
    require_d(r, 1);
    const auto e = param(r.params, "e", 3);
    if (e < 0) throw Error(ErrorCode::InvalidInput, "exponent must be nonnegative");
    table.emplace(space, tabulate(space, [&](Space::Point x) { return field.pow(x, static_cast<std::uint64_t>(e)); }));
  } else if (r.name == "bilinear") {
    require_d(r, 2);
    table.emplace(space, tabulate(space, [&](Space::Point x) { return field.mul(space.coord(x, 0), space.coord(x, 1)); }));
    expected = {true, true};
  } else if (r.name == "bool_quadratic") {
    if (field.q() != 2) throw Error(ErrorCode::InvalidInput, "bool_quadratic lives over F_2");
    if (r.d % 2 != 0) throw Error(ErrorCode::SpecDimensionMismatch, "bool_quadratic needs even d");
    table.emplace(space, tabulate(space, [&](Space::Point x) {
                    Field::Elem acc = 0;
                    for (std::uint32_t i = 0; i + 1 < r.d; i += 2) acc ^= ((x >> i) & (x >> (i + 1)) & 1u);
                    return acc;
                  }));
    expected = {true, true};
  } else if (r.name == "random") {
    table.emplace(random_function(field, r.d, r.params.seed));
  } else if (r.name == "affine") {
    require_d(r, 1);
    const auto c = element_param(r, "c", 1);
    const auto b = element_param(r, "b", 0);
    table.emplace(space, tabulate(space, [&](Space::Point x) { return field.add(field.mul(c, x), b); }));
    expected = {false, false};
  } else {
    throw Error(ErrorCode::UnknownCatalogEntry, "no catalog entry named '" + r.name + "'");
  }

  CatalogFunction out{std::move(*table), expected, false};
  if (out.table.size() <= kVerifyLimit) {
    if (expected.pn && is_pn(out.table, workers).pn != *expected.pn)
      throw Error(ErrorCode::PropertyMismatch, r.name + ": PN claim failed verification");
    if (expected.bent && is_bent_exact(out.table, workers).bent != *expected.bent)
      throw Error(ErrorCode::PropertyMismatch, r.name + ": bent claim failed verification");
    out.verified = true;
  }
  return out;
}

}  // namespace bentcert
