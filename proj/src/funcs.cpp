#include "bentcert/funcs.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bentcert/catalog.hpp"
#include "bentcert/error.hpp"

namespace bentcert {

FnTable::FnTable(Space space, std::vector<Field::Elem> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_.size())
    throw Error(ErrorCode::InvalidInput, "table has " + std::to_string(values_.size()) +
                                             " entries, expected " + std::to_string(space_.size()));
  const auto q = space_.field().q();
  for (auto v : values_)
    if (v >= q) throw Error(ErrorCode::InvalidInput, "table entry " + std::to_string(v) + " outside [0, q)");
}

namespace {

std::vector<Field::Elem> eval_univariate_horner(const Field& field,
                                                const std::vector<Field::Elem>& coeffs) {
  std::vector<Field::Elem> out(field.q());
  for (Field::Elem x = 0; x < field.q(); ++x) {
    Field::Elem acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = field.add(field.mul(acc, x), coeffs[k]);
    out[x] = acc;
  }
  return out;
}

Field::Elem eval_monomials(const Space& space, const std::vector<Monomial>& terms, Space::Point x) {
  const Field& field = space.field();
  Field::Elem acc = 0;
  for (const auto& term : terms) {
    Field::Elem t = term.coeff;
    for (std::uint32_t i = 0; i < space.d(); ++i) t = field.mul(t, field.pow(space.coord(x, i), term.exponents[i]));
    acc = field.add(acc, t);
  }
  return acc;
}

std::vector<Field::Elem> eval_monomials_incremental(const Space& space,
                                                    const std::vector<Monomial>& terms) {
  // Per-coordinate power tables, then products; a different route from
  // eval_monomials' repeated squaring.
  const Field& field = space.field();
  const std::uint32_t q = field.q();
  std::vector<Field::Elem> out(space.size(), 0);
  for (const auto& term : terms) {
    std::vector<std::vector<Field::Elem>> powers(space.d(), std::vector<Field::Elem>(q));
    for (std::uint32_t i = 0; i < space.d(); ++i) {
      for (Field::Elem y = 0; y < q; ++y) {
        if (term.exponents[i] == 0) {
          powers[i][y] = 1;
        } else if (y == 0) {
          powers[i][y] = 0;
        } else {
          // y^e = g^(e log y), reduced through the multiplicative order.
          const std::uint64_t order = q - 1;
          Field::Elem r = 1;
          const std::uint64_t e = term.exponents[i] % order;
          Field::Elem base = y;
          for (std::uint64_t k = e == 0 ? order : e; k > 0; k >>= 1, base = field.mul(base, base))
            if (k & 1) r = field.mul(r, base);
          powers[i][y] = r;
        }
      }
    }
    for (Space::Point x = 0; x < space.size(); ++x) {
      Field::Elem t = term.coeff;
      for (std::uint32_t i = 0; i < space.d(); ++i) t = field.mul(t, powers[i][space.coord(x, i)]);
      out[x] = field.add(out[x], t);
    }
  }
  return out;
}

}  // namespace

FnTable build_function(const FnSpec& spec, const Field& field, std::uint32_t d) {
  Space space(field, d);
  const std::uint32_t q = field.q();
  return std::visit(
      [&](const auto& src) -> FnTable {
        using T = std::decay_t<decltype(src)>;
        if constexpr (std::is_same_v<T, FnSpec::Table>) {
          return FnTable(space, src.values);
        } else if constexpr (std::is_same_v<T, FnSpec::Univariate>) {
          if (d != 1) throw Error(ErrorCode::SpecDimensionMismatch, "univariate polynomial needs d = 1");
          for (auto c : src.coeffs)
            if (c >= q) throw Error(ErrorCode::InvalidInput, "coefficient outside [0, q)");
          auto values = eval_univariate_horner(field, src.coeffs);
          std::vector<Monomial> terms;
          for (std::size_t k = 0; k < src.coeffs.size(); ++k)
            if (src.coeffs[k] != 0) terms.push_back({src.coeffs[k], {k}});
          if (eval_monomials_incremental(space, terms) != values)
            throw Error(ErrorCode::InvalidInput, "polynomial evaluation routes disagree");
          return FnTable(space, std::move(values));
        } else if constexpr (std::is_same_v<T, FnSpec::Sparse>) {
          for (const auto& term : src.terms) {
            if (term.exponents.size() != d)
              throw Error(ErrorCode::SpecDimensionMismatch,
                          "monomial has " + std::to_string(term.exponents.size()) + " exponents, d = " +
                              std::to_string(d));
            if (term.coeff >= q) throw Error(ErrorCode::InvalidInput, "coefficient outside [0, q)");
          }
          auto values = eval_monomials_incremental(space, src.terms);
          for (Space::Point x = 0; x < space.size(); ++x)
            if (eval_monomials(space, src.terms, x) != values[x])
              throw Error(ErrorCode::InvalidInput, "polynomial evaluation routes disagree");
          return FnTable(space, std::move(values));
        } else {
          CatalogRequest request{src.name, field, d, src.params};
          return get_function(request).table;
        }
      },
      spec.source);
}

FnTable delta_table(const FnTable& f, Space::Point a) {
  const Space& space = f.space();
  if (a >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "shift index out of range");
  const Field& field = f.field();
  std::vector<Field::Elem> out(space.size());
  for (Space::Point x = 0; x < space.size(); ++x) out[x] = field.sub(f[space.add(x, a)], f[x]);
  return FnTable(space, std::move(out));
}

FnTable delta_table(const FnTable& f, const PointVector& a) {
  return delta_table(f, f.space().index(a));
}

std::optional<PnWitness> pn_failure_at(const FnTable& f, Space::Point a) {
  const Space& space = f.space();
  const Field& field = f.field();
  const std::uint64_t expected = space.size() / field.q();
  std::vector<std::uint64_t> counts(field.q(), 0);
  for (Space::Point x = 0; x < space.size(); ++x) ++counts[field.sub(f[space.add(x, a)], f[x])];
  for (Field::Elem v = 0; v < field.q(); ++v)
    if (counts[v] > expected) return PnWitness{a, v, counts[v]};
  return std::nullopt;
}

PnVerdict is_pn(const FnTable& f, const Workers& workers) {
  const std::uint32_t n = f.size();
  // Shifts a = 1..n-1; the zero shift never counts.
  auto hit = find_first(n - 1, workers, [&](std::size_t i) {
    return pn_failure_at(f, static_cast<Space::Point>(i + 1)).has_value();
  });
  if (!hit) return {true, std::nullopt};
  return {false, pn_failure_at(f, static_cast<Space::Point>(*hit + 1))};
}

std::uint64_t hamming_distance(const FnTable& f, const FnTable& g) {
  if (!(f.space() == g.space()))
    throw Error(ErrorCode::FieldMismatch, "functions live on different spaces");
  std::uint64_t n = 0;
  for (Space::Point x = 0; x < f.size(); ++x) n += f[x] != g[x];
  return n;
}

std::uint64_t image_size(const FnTable& f) {
  std::vector<bool> seen(f.field().q(), false);
  std::uint64_t n = 0;
  for (auto v : f.values())
    if (!seen[v]) {
      seen[v] = true;
      ++n;
    }
  return n;
}

FnTable translate(const FnTable& f, Space::Point s, Field::Elem t) {
  const Space& space = f.space();
  if (s >= space.size() || t >= f.field().q())
    throw Error(ErrorCode::IndexOutOfRange, "translation outside the space");
  std::vector<Field::Elem> out(space.size());
  for (Space::Point x = 0; x < space.size(); ++x) out[x] = f.field().add(f[space.add(x, s)], t);
  return FnTable(space, std::move(out));
}

void write_table(std::ostream& out, const FnTable& f) {
  const Field& field = f.field();
  out << field.p() << ' ' << field.ell() << ' ' << f.d() << '\n';
  const auto& m = field.modulus();
  for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << m[j];
  out << '\n';
  for (std::uint32_t x = 0; x < f.size(); ++x) out << (x ? " " : "") << f[x];
  out << '\n';
}

std::string format_table(const FnTable& f) {
  std::ostringstream out;
  write_table(out, f);
  return out.str();
}

FnTable read_table(std::istream& in) {
  std::uint32_t p = 0, ell = 0, d = 0;
  if (!(in >> p >> ell >> d)) throw Error(ErrorCode::InvalidInput, "table header must be 'p ell d'");
  if (ell == 0 || ell > 32) throw Error(ErrorCode::InvalidInput, "bad extension degree in table header");
  std::vector<std::uint32_t> modulus(ell + 1);
  for (auto& c : modulus)
    if (!(in >> c)) throw Error(ErrorCode::InvalidInput, "truncated modulus line");
  Field field = Field::make(p, ell, modulus);
  Space space(field, d);
  std::vector<Field::Elem> values(space.size());
  for (auto& v : values)
    if (!(in >> v)) throw Error(ErrorCode::InvalidInput, "table has fewer than q^d entries");
  std::string extra;
  if (in >> extra) throw Error(ErrorCode::InvalidInput, "trailing data after q^d entries");
  return FnTable(space, std::move(values));
}

FnTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return read_table(in);
}

}  // namespace bentcert
