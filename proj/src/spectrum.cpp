#include "bentcert/spectrum.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "bentcert/error.hpp"
#include "bentcert/format.hpp"

namespace bentcert {

namespace {

void require_nontrivial(const Field& field, Field::Elem u) {
  if (u == 0) throw Error(ErrorCode::TrivialCharacter, "u = 0 gives the trivial character");
  if (u >= field.q()) throw Error(ErrorCode::IndexOutOfRange, "character parameter outside F_q");
}

/// Tr(u f(x)) for every x.
std::vector<std::uint8_t> outer_exponents(const FnTable& f, Field::Elem u) {
  const Field& field = f.field();
  std::vector<std::uint8_t> a(f.size());
  for (Space::Point x = 0; x < f.size(); ++x)
    a[x] = static_cast<std::uint8_t>(field.trace(field.mul(u, f[x])));
  return a;
}

std::vector<std::uint8_t> carry_positions(const Space& space) {
  std::vector<std::uint8_t> c(space.size());
  for (Space::Point x = 0; x < space.size(); ++x)
    c[x] = static_cast<std::uint8_t>(space.digits().carry_position(x));
  return c;
}

/// Per-(u, m) histogram of exponents Tr(u f(x)) - Tr(u x.m). The inner
/// trace is F_p-linear in the digits of x, so it is carried along the
/// counting order with one addition per step.
class HistogramKernel {
 public:
  HistogramKernel(const FnTable& f, Field::Elem u)
      : f_(f), u_(u), outer_(outer_exponents(f, u)), carry_(carry_positions(f.space())) {}

  void histogram(Space::Point m, std::vector<std::uint64_t>& counts) const {
    const Space& space = f_.space();
    const Field& field = f_.field();
    const std::uint32_t p = field.p();
    const std::uint32_t ell = field.ell();
    const std::uint32_t dims = space.fp_dim();
    std::uint32_t prefix[64];
    std::uint32_t acc = 0;
    for (std::uint32_t k = 0; k < dims; ++k) {
      const Field::Elem beta = field.digits().unit(k % ell);
      const Field::Elem mj = space.coord(m, k / ell);
      acc = (acc + field.trace(field.mul(u_, field.mul(beta, mj)))) % p;
      prefix[k] = acc;
    }
    counts.assign(p, 0);
    std::uint32_t inner = 0;
    const std::uint32_t n = space.size();
    for (std::uint32_t x = 0; x < n; ++x) {
      std::uint32_t e = outer_[x] + p - inner;
      if (e >= p) e -= p;
      ++counts[e];
      if (x + 1 < n) {
        inner += prefix[carry_[x]];
        if (inner >= p) inner -= p;
      }
    }
  }

 private:
  const FnTable& f_;
  Field::Elem u_;
  std::vector<std::uint8_t> outer_;
  std::vector<std::uint8_t> carry_;
};

/// Index y(m) at which the F_p-transform holds S(u, m): digit (j, i) of
/// y(m) is Tr(u beta_i m_j).
std::vector<std::uint32_t> frequency_map(const Space& space, Field::Elem u) {
  const Field& field = space.field();
  const std::uint32_t ell = field.ell();
  std::vector<std::uint32_t> images(space.fp_dim());
  for (std::uint32_t k = 0; k < space.fp_dim(); ++k) {
    const std::uint32_t j = k / ell;
    const Field::Elem beta_k = field.digits().unit(k % ell);
    std::uint32_t y = 0;
    for (std::uint32_t i = 0; i < ell; ++i) {
      const Field::Elem beta_i = field.digits().unit(i);
      y += field.trace(field.mul(u, field.mul(beta_i, beta_k))) * space.digits().unit(j * ell + i);
    }
    images[k] = y;
  }
  std::vector<std::uint32_t> map(space.size());
  for_each_linear_image(space.digits(), space.digits(), images,
                        [&](std::uint32_t m, std::uint32_t y) { map[m] = y; });
  return map;
}

void wht_int(std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = v[j];
        const std::int64_t b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
}

std::vector<std::int64_t> signs_p2(const std::vector<std::uint8_t>& outer) {
  std::vector<std::int64_t> v(outer.size());
  for (std::size_t x = 0; x < outer.size(); ++x) v[x] = outer[x] ? -1 : 1;
  return v;
}

}  // namespace

Character::Character(Field field, Field::Elem u) : field_(std::move(field)), u_(u) {
  require_nontrivial(field_, u_);
}

CycInt walsh_exact(const FnTable& f, Field::Elem u, Space::Point m) {
  require_nontrivial(f.field(), u);
  if (m >= f.size()) throw Error(ErrorCode::IndexOutOfRange, "frequency outside the space");
  HistogramKernel kernel(f, u);
  std::vector<std::uint64_t> counts;
  kernel.histogram(m, counts);
  return CycInt::from_histogram(counts);
}

CycInt walsh_exact(const FnTable& f, const FieldElement& u, const PointVector& m) {
  if (!(u.field() == f.field())) throw Error(ErrorCode::FieldMismatch, "character over another field");
  return walsh_exact(f, u.index(), f.space().index(m));
}

CycInt ExactSpectrum::sum(Space::Point m) const {
  return cyc64::to_cycint({coeffs_.data() + static_cast<std::size_t>(m) * p_, p_});
}

CycInt ExactSpectrum::abs_sq(Space::Point m) const {
  std::vector<std::int64_t> out(p_);
  cyc64::abs_sq({coeffs_.data() + static_cast<std::size_t>(m) * p_, p_}, {out.data(), p_});
  return cyc64::to_cycint({out.data(), p_});
}

std::optional<std::int64_t> ExactSpectrum::abs_sq_integer(Space::Point m) const {
  std::vector<std::int64_t> out(p_);
  cyc64::abs_sq({coeffs_.data() + static_cast<std::size_t>(m) * p_, p_}, {out.data(), p_});
  return cyc64::as_integer({out.data(), p_});
}

double ExactSpectrum::magnitude(Space::Point m) const {
  std::vector<std::int64_t> out(p_);
  cyc64::abs_sq({coeffs_.data() + static_cast<std::size_t>(m) * p_, p_}, {out.data(), p_});
  return std::sqrt(std::max(0.0, cyc64::real_value({out.data(), p_})));
}

ExactSpectrum exact_transform(const Space& space, Field::Elem u, std::vector<std::int64_t> data) {
  const Field& field = space.field();
  require_nontrivial(field, u);
  const std::uint32_t p = field.p();
  const std::uint32_t n = space.size();
  if (data.size() != static_cast<std::size_t>(n) * p)
    throw Error(ErrorCode::InvalidInput, "transform input needs p coefficients per point");
  const auto freq = frequency_map(space, u);

  std::vector<std::int64_t> result(static_cast<std::size_t>(n) * p, 0);
  if (p == 2) {
    std::vector<std::int64_t> v(n);
    for (std::uint32_t x = 0; x < n; ++x) v[x] = data[2 * static_cast<std::size_t>(x)] - data[2 * static_cast<std::size_t>(x) + 1];
    wht_int(v);
    for (std::uint32_t m = 0; m < n; ++m) result[2 * static_cast<std::size_t>(m)] = v[freq[m]];
    return {p, n, std::move(result)};
  }

  // out_r = sum_j zeta^(-j r) v_j: multiplying by zeta^s rotates the
  // coefficient vector by s places.
  std::vector<std::int64_t> in(static_cast<std::size_t>(p) * p);
  std::vector<std::int64_t> out(static_cast<std::size_t>(p) * p);
  for (std::uint32_t stride = 1; stride < n; stride *= p) {
    for (std::uint32_t block = 0; block < n; block += stride * p) {
      for (std::uint32_t lo = 0; lo < stride; ++lo) {
        const std::uint32_t base = block + lo;
        for (std::uint32_t j = 0; j < p; ++j)
          std::copy_n(&data[static_cast<std::size_t>(base + j * stride) * p], p, &in[j * p]);
        std::fill(out.begin(), out.end(), 0);
        for (std::uint32_t r = 0; r < p; ++r) {
          std::int64_t* o = &out[r * p];
          for (std::uint32_t j = 0; j < p; ++j) {
            const std::uint32_t shift = (p - (j * r) % p) % p;
            const std::int64_t* v = &in[j * p];
            for (std::uint32_t t = 0; t < p; ++t) {
              std::uint32_t dst = t + shift;
              if (dst >= p) dst -= p;
              o[dst] += v[t];
            }
          }
        }
        for (std::uint32_t r = 0; r < p; ++r)
          std::copy_n(&out[r * p], p, &data[static_cast<std::size_t>(base + r * stride) * p]);
      }
    }
  }
  for (std::uint32_t m = 0; m < n; ++m)
    std::copy_n(&data[static_cast<std::size_t>(freq[m]) * p], p, &result[static_cast<std::size_t>(m) * p]);
  return {p, n, std::move(result)};
}

ExactSpectrum walsh_exact_all(const FnTable& f, Field::Elem u) {
  const Field& field = f.field();
  require_nontrivial(field, u);
  const std::uint32_t p = field.p();
  const auto outer = outer_exponents(f, u);
  std::vector<std::int64_t> data(static_cast<std::size_t>(f.size()) * p, 0);
  for (std::uint32_t x = 0; x < f.size(); ++x) data[static_cast<std::size_t>(x) * p + outer[x]] = 1;
  return exact_transform(f.space(), u, std::move(data));
}

std::vector<double> walsh_fast_all(const FnTable& f, Field::Elem u) {
  const Field& field = f.field();
  require_nontrivial(field, u);
  const Space& space = f.space();
  const std::uint32_t p = field.p();
  const std::uint32_t n = space.size();
  const auto outer = outer_exponents(f, u);
  const auto freq = frequency_map(space, u);
  std::vector<double> mags(n);

  if (p == 2) {
    auto v = signs_p2(outer);
    wht_int(v);
    for (std::uint32_t m = 0; m < n; ++m) mags[m] = static_cast<double>(std::llabs(v[freq[m]]));
    return mags;
  }

  std::vector<std::complex<double>> root(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / p;
    root[k] = {std::cos(angle), std::sin(angle)};
  }
  std::vector<std::complex<double>> data(n);
  for (std::uint32_t x = 0; x < n; ++x) data[x] = root[outer[x]];

  std::vector<std::complex<double>> in(p);
  for (std::uint32_t stride = 1; stride < n; stride *= p) {
    for (std::uint32_t block = 0; block < n; block += stride * p) {
      for (std::uint32_t lo = 0; lo < stride; ++lo) {
        const std::uint32_t base = block + lo;
        for (std::uint32_t j = 0; j < p; ++j) in[j] = data[base + j * stride];
        for (std::uint32_t r = 0; r < p; ++r) {
          std::complex<double> acc = in[0];
          for (std::uint32_t j = 1; j < p; ++j) acc += in[j] * root[(p - (j * r) % p) % p];
          data[base + r * stride] = acc;
        }
      }
    }
  }
  for (std::uint32_t m = 0; m < n; ++m) mags[m] = std::abs(data[freq[m]]);
  return mags;
}

namespace {

BentVerdict bent_by_histogram(const FnTable& f, const Workers& workers) {
  const Field& field = f.field();
  const std::uint32_t p = field.p();
  const std::int64_t target = f.size();
  for (Field::Elem u = 1; u < field.q(); ++u) {
    HistogramKernel kernel(f, u);
    auto fails = [&](std::size_t m) {
      std::vector<std::uint64_t> counts;
      kernel.histogram(static_cast<Space::Point>(m), counts);
      std::vector<std::int64_t> s(p), sq(p);
      for (std::uint32_t j = 0; j < p; ++j) s[j] = static_cast<std::int64_t>(counts[j]);
      cyc64::abs_sq(s, sq);
      const auto value = cyc64::as_integer(sq);
      return !value || *value != target;
    };
    if (auto m = find_first(f.size(), workers, fails)) {
      const auto point = static_cast<Space::Point>(*m);
      return {false, BentWitness{u, point, walsh_exact(f, u, point).abs_sq()}};
    }
  }
  return {true, std::nullopt};
}

BentVerdict bent_by_transform(const FnTable& f, const Workers& workers) {
  const Field& field = f.field();
  const std::int64_t target = f.size();
  auto first_bad_m = [&](Field::Elem u) -> std::optional<Space::Point> {
    const auto spectrum = walsh_exact_all(f, u);
    for (Space::Point m = 0; m < f.size(); ++m) {
      const auto value = spectrum.abs_sq_integer(m);
      if (!value || *value != target) return m;
    }
    return std::nullopt;
  };
  auto hit = find_first(field.q() - 1, workers,
                        [&](std::size_t i) { return first_bad_m(static_cast<Field::Elem>(i + 1)).has_value(); },
                        std::max(1u, workers.count));
  if (!hit) return {true, std::nullopt};
  const auto u = static_cast<Field::Elem>(*hit + 1);
  const auto m = *first_bad_m(u);
  return {false, BentWitness{u, m, walsh_exact(f, u, m).abs_sq()}};
}

}  // namespace

BentVerdict is_bent_exact(const FnTable& f, const Workers& workers, ExactRoute route) {
  if (route == ExactRoute::automatic) {
    const double cost = static_cast<double>(f.field().q() - 1) * f.size() * f.size();
    route = cost <= static_cast<double>(1u << 27) ? ExactRoute::histogram : ExactRoute::transform;
  }
  return route == ExactRoute::histogram ? bent_by_histogram(f, workers) : bent_by_transform(f, workers);
}

CrossCheck crosscheck_pn_bent(const FnTable& f, const Workers& workers, ExactRoute route) {
  if (f.field().p() == 2)
    throw Error(ErrorCode::EvenCharacteristic, "PN/bent equivalence is only claimed for odd p");
  CrossCheck c;
  c.pn = is_pn(f, workers);
  c.bent = is_bent_exact(f, workers, route);
  c.agree = c.pn.pn == c.bent.bent;
  return c;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

bool close(double fast, double exact, double rel) {
  return std::abs(fast - exact) <= rel * std::max(1.0, std::abs(exact));
}

}  // namespace

SpectrumReport spectrum_report(const FnTable& f, Field::Elem u, SpectrumMode mode) {
  SpectrumReport report;
  report.u = u;
  const std::uint32_t n = f.size();
  const double flat_mag = std::sqrt(static_cast<double>(n));
  const auto mags = walsh_fast_all(f, u);
  report.entries.resize(n);
  report.flat = true;

  if (mode == SpectrumMode::exact) {
    const auto exact = walsh_exact_all(f, u);
    for (Space::Point m = 0; m < n; ++m) {
      auto& e = report.entries[m];
      e.m = m;
      e.abs_sq = exact.abs_sq(m);
      e.magnitude = mags[m];
      const auto value = e.abs_sq->as_integer();
      if (!value || *value != n) {
        report.flat = false;
        if (!report.witness_m) report.witness_m = m;
      }
      if (!close(mags[m], exact.magnitude(m), 1e-9)) ++report.spot_check_failures;
    }
  } else {
    for (Space::Point m = 0; m < n; ++m) {
      auto& e = report.entries[m];
      e.m = m;
      e.magnitude = mags[m];
      if (!close(mags[m], flat_mag, 1e-9)) {
        report.flat = false;
        if (!report.witness_m) report.witness_m = m;
      }
      if (m == 0 || mix64((static_cast<std::uint64_t>(u) << 32) | m) % 100 == 0) {
        e.abs_sq = walsh_exact(f, u, m).abs_sq();
        ++report.spot_checks;
        const double exact_mag = std::sqrt(std::max(0.0, e.abs_sq->to_complex().real()));
        if (!close(mags[m], exact_mag, 1e-9)) ++report.spot_check_failures;
      }
    }
  }
  report.max_magnitude = report.min_magnitude = n ? mags[0] : 0.0;
  for (double v : mags) {
    report.max_magnitude = std::max(report.max_magnitude, v);
    report.min_magnitude = std::min(report.min_magnitude, v);
  }
  return report;
}

void write_spectrum_csv(std::ostream& out, const FnTable& f, const SpectrumReport& report) {
  out << "m_index,m_coords,abs_sq_exact,magnitude_float\n";
  for (const auto& e : report.entries) {
    out << e.m << ',' << format_coords(f.space(), e.m) << ',';
    if (e.abs_sq) out << e.abs_sq->to_string();
    out << ',' << format_double(e.magnitude) << '\n';
  }
}

}  // namespace bentcert
