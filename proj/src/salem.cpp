#include "bentcert/salem.hpp"

#include <cmath>
#include <ostream>

#include "bentcert/error.hpp"
#include "bentcert/format.hpp"

namespace bentcert {

PointSet::PointSet(Space space, std::vector<bool> members)
    : space_(std::move(space)), members_(std::move(members)) {
  if (members_.size() != space_.size())
    throw Error(ErrorCode::InvalidInput, "membership bitmap must have q^d entries");
  for (bool b : members_) cardinality_ += b;
}

PointSet PointSet::from_points(const Space& space, const std::vector<Space::Point>& points) {
  std::vector<bool> members(space.size(), false);
  for (auto x : points) {
    if (x >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "point outside the space");
    members[x] = true;
  }
  return {space, std::move(members)};
}

std::vector<Space::Point> PointSet::points() const {
  std::vector<Space::Point> out;
  out.reserve(cardinality_);
  for (Space::Point x = 0; x < members_.size(); ++x)
    if (members_[x]) out.push_back(x);
  return out;
}

PointSet graph_of(const FnTable& f) {
  Space ambient(f.field(), f.d() + 1);
  const std::uint32_t shift = f.size();  // q^d, the place value of the last coordinate
  std::vector<bool> members(ambient.size(), false);
  for (Space::Point x = 0; x < f.size(); ++x) members[x + f[x] * shift] = true;
  return {ambient, std::move(members)};
}

namespace {

/// Exponent sums for one character over the points of E.
class IndicatorKernel {
 public:
  IndicatorKernel(const PointSet& set, Field::Elem u) : set_(set), u_(u) {
    const Space& space = set.space();
    points_ = set.points();
    digits_.reserve(points_.size() * space.fp_dim());
    for (auto x : points_)
      for (std::uint32_t k = 0; k < space.fp_dim(); ++k)
        digits_.push_back(static_cast<std::uint8_t>(space.digits().digit(x, k)));
  }

  CycInt sum(Space::Point m) const {
    const Space& space = set_.space();
    const Field& field = space.field();
    const std::uint32_t p = field.p();
    const std::uint32_t ell = field.ell();
    const std::uint32_t dims = space.fp_dim();
    // Tr(u (x.m)) = sum_k x_k Tr(u beta_i m_j) over the F_p-digits x_k of x.
    std::vector<std::uint32_t> form(dims);
    for (std::uint32_t k = 0; k < dims; ++k)
      form[k] = field.trace(field.mul(u_, field.mul(field.digits().unit(k % ell), space.coord(m, k / ell))));
    std::vector<std::uint64_t> counts(p, 0);
    for (std::size_t n = 0; n < points_.size(); ++n) {
      std::uint32_t t = 0;
      const std::uint8_t* dx = &digits_[n * dims];
      for (std::uint32_t k = 0; k < dims; ++k) t += dx[k] * form[k];
      ++counts[(p - t % p) % p];
    }
    return CycInt::from_histogram(counts);
  }

 private:
  const PointSet& set_;
  Field::Elem u_;
  std::vector<Space::Point> points_;
  std::vector<std::uint8_t> digits_;
};

}  // namespace

CycInt indicator_ft_abs_sq(const PointSet& set, Space::Point m) { return indicator_ft_abs_sq(set, m, 1); }

CycInt indicator_ft_abs_sq(const PointSet& set, Space::Point m, Field::Elem u) {
  if (m >= set.space().size()) throw Error(ErrorCode::IndexOutOfRange, "frequency outside the space");
  (void)Character(set.space().field(), u);
  return IndicatorKernel(set, u).sum(m).abs_sq();
}

std::vector<CycInt> indicator_spectrum(const PointSet& set, Field::Elem u, const Workers& workers) {
  const Space& space = set.space();
  const std::uint32_t p = space.field().p();
  std::vector<std::int64_t> data(static_cast<std::size_t>(space.size()) * p, 0);
  for (Space::Point x = 0; x < space.size(); ++x) data[static_cast<std::size_t>(x) * p] = set.contains(x);
  const auto transform = exact_transform(space, u, std::move(data));
  std::vector<CycInt> out(space.size());
  parallel_for(out.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t m = b; m < e; ++m) out[m] = transform.abs_sq(static_cast<Space::Point>(m));
  });
  return out;
}

SalemConstant salem_constant(const PointSet& set, const std::vector<CycInt>& spectrum) {
  if (set.cardinality() == 0) throw Error(ErrorCode::EmptySet, "Salem constant of the empty set");
  SalemConstant c;
  c.cardinality = set.cardinality();
  bool all_integer = true;
  for (std::size_t m = 1; m < spectrum.size(); ++m) all_integer = all_integer && spectrum[m].as_integer();

  if (all_integer) {
    BigInt best = -1;
    for (std::size_t m = 1; m < spectrum.size(); ++m) {
      const BigInt v = *spectrum[m].as_integer();
      if (v > best) {
        best = v;
        c.argmax = static_cast<Space::Point>(m);
      }
    }
    c.max_abs_sq = best;
    c.constant = std::sqrt(best.convert_to<double>() / static_cast<double>(c.cardinality));
  } else {
    double best = -1.0;
    for (std::size_t m = 1; m < spectrum.size(); ++m) {
      const double v = spectrum[m].to_complex().real();
      if (v > best) {
        best = v;
        c.argmax = static_cast<Space::Point>(m);
      }
    }
    c.constant = std::sqrt(std::max(0.0, best) / static_cast<double>(c.cardinality));
  }
  return c;
}

SalemConstant salem_constant(const PointSet& set, const Workers& workers) {
  if (set.cardinality() == 0) throw Error(ErrorCode::EmptySet, "Salem constant of the empty set");
  return salem_constant(set, indicator_spectrum(set, 1, workers));
}

std::string_view to_string(Theorem1Case c) {
  switch (c) {
    case Theorem1Case::origin: return "m0";
    case Theorem1Case::vertical: return "case1";
    case Theorem1Case::graph: return "case2";
  }
  return "?";
}

SalemReport salem_report(const FnTable& f, const Workers& workers) {
  const PointSet graph = graph_of(f);
  const Space& space = graph.space();
  const std::uint32_t last = space.d() - 1;

  SalemReport report;
  report.q = f.field().q();
  report.d = space.d();
  report.cardinality = graph.cardinality();
  const auto spectrum = indicator_spectrum(graph, 1, workers);
  const BigInt card = graph.cardinality();

  bool all_match = true;
  report.entries.resize(space.size());
  for (Space::Point m = 0; m < space.size(); ++m) {
    auto& e = report.entries[m];
    e.m = m;
    e.abs_sq = spectrum[m];
    if (m == 0) {
      e.tag = Theorem1Case::origin;
      e.expected = card * card;
    } else if (space.coord(m, last) == 0) {
      e.tag = Theorem1Case::vertical;
      e.expected = 0;
    } else {
      e.tag = Theorem1Case::graph;
      e.expected = card;  // q^(d-1)
    }
    const auto value = e.abs_sq.as_integer();
    e.matches = value && *value == e.expected;
    all_match = all_match && e.matches;
  }
  report.constant = salem_constant(graph, spectrum);
  report.constant_is_one = report.constant.max_abs_sq && *report.constant.max_abs_sq == card;
  report.theorem1_pass = all_match && report.constant_is_one;
  return report;
}

SalemReport verify_theorem1(const FnTable& f, const Workers& workers) {
  const auto bent = is_bent_exact(f, workers);
  if (!bent.bent) {
    const auto& w = *bent.witness;
    throw Error(ErrorCode::HypothesisFailed,
                "function is not bent: |S(u=" + std::to_string(w.u) + ", m=" + std::to_string(w.m) +
                    ")|^2 = " + w.abs_sq.to_string() + " != " + std::to_string(f.size()));
  }
  return salem_report(f, workers);
}

void write_salem_csv(std::ostream& out, const Space& space, const SalemReport& report) {
  out << "m_index,m_coords,case_tag,abs_sq_exact,magnitude_float,bound_ratio\n";
  const double root_card = std::sqrt(static_cast<double>(report.cardinality));
  for (const auto& e : report.entries) {
    const double mag = std::sqrt(std::max(0.0, e.abs_sq.to_complex().real()));
    out << e.m << ',' << format_coords(space, e.m) << ',' << to_string(e.tag) << ','
        << e.abs_sq.to_string() << ',' << format_double(mag) << ',' << format_double(mag / root_card)
        << '\n';
  }
}

}  // namespace bentcert
