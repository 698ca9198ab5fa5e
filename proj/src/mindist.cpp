#include "bentcert/mindist.hpp"

#include "bentcert/error.hpp"

namespace bentcert {

namespace {

void require_univariate(const FnTable& f) {
  if (f.d() != 1) throw Error(ErrorCode::SpecDimensionMismatch, "planar functions live on F_q (d = 1)");
}

/// First non-bijective difference of the table "f with f(w) replaced by v".
std::optional<PnWitness> edited_witness(const FnTable& f, Space::Point w, Field::Elem v,
                                        std::vector<std::uint32_t>& counts) {
  const Field& field = f.field();
  const std::uint32_t q = field.q();
  auto value = [&](Space::Point x) { return x == w ? v : f[x]; };
  for (Space::Point a = 1; a < q; ++a) {
    counts.assign(q, 0);
    for (Space::Point x = 0; x < q; ++x) ++counts[field.sub(value(field.add(x, a)), value(x))];
    for (Field::Elem val = 0; val < q; ++val)
      if (counts[val] > 1) return PnWitness{a, val, counts[val]};
  }
  return std::nullopt;
}

}  // namespace

FnTable perturb(const FnTable& f, Space::Point w, Field::Elem v) {
  require_univariate(f);
  if (w >= f.size() || v >= f.field().q()) throw Error(ErrorCode::IndexOutOfRange, "perturbation outside F_q");
  if (f[w] == v) throw Error(ErrorCode::NoOpPerturbation, "new value equals f(w)");
  auto values = f.values();
  values[w] = v;
  return FnTable(f.space(), std::move(values));
}

std::optional<PnWitness> planarity_witness(const FnTable& g, const Workers& workers) {
  require_univariate(g);
  return is_pn(g, workers).witness;
}

PerturbationReport perturbation_sweep(const FnTable& f, const std::string& base_fn, const Workers& workers) {
  require_univariate(f);
  if (auto w = planarity_witness(f, workers))
    throw Error(ErrorCode::NotPlanarBase, "base function is not planar (a = " + std::to_string(w->shift) +
                                              ", value = " + std::to_string(w->value) + ")");
  const std::uint32_t q = f.field().q();
  PerturbationReport report;
  report.base_fn = base_fn;
  report.q = q;
  report.within_theorem_scope = f.field().p() > 3;
  report.entries.resize(static_cast<std::size_t>(q) * (q - 1));
  parallel_for(report.entries.size(), workers, [&](std::size_t b, std::size_t e) {
    std::vector<std::uint32_t> counts;
    for (std::size_t i = b; i < e; ++i) {
      auto& entry = report.entries[i];
      entry.w = static_cast<Space::Point>(i / (q - 1));
      // the q - 1 values other than f(w), ascending
      const auto r = static_cast<Field::Elem>(i % (q - 1));
      entry.v = r < f[entry.w] ? r : r + 1;
      entry.witness = edited_witness(f, entry.w, entry.v, counts);
    }
  });
  for (const auto& entry : report.entries) report.planar_found += !entry.witness;
  return report;
}

DistanceMatrix pairwise_min_distance(const std::vector<FnTable>& fns, const std::vector<std::string>& ids,
                                     const Workers& workers) {
  DistanceMatrix out;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    require_univariate(fns[i]);
    if (i > 0 && !(fns[i].space() == fns[0].space()))
      throw Error(ErrorCode::FieldMismatch, "entry " + std::to_string(i) + " lives over a different field");
    if (is_pn(fns[i], workers).witness)
      throw Error(ErrorCode::NotPlanarEntry, "entry " + std::to_string(i) + " is not planar");
    out.ids.push_back(i < ids.size() ? ids[i] : std::to_string(i));
  }
  const std::size_t n = fns.size();
  out.distances.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto dist = hamming_distance(fns[i], fns[j]);
      out.distances[i][j] = out.distances[j][i] = dist;
      if (dist == 0) {
        out.duplicates.emplace_back(i, j);
      } else if (!out.min_distance || dist < *out.min_distance) {
        out.min_distance = dist;
      }
    }
  return out;
}

}  // namespace bentcert
