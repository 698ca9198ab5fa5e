#include "bentcert/decomp.hpp"

#include "bentcert/error.hpp"

namespace bentcert {

BaseDeltaSet::BaseDeltaSet(const FnTable& f, SpaceBasis basis) : basis_(std::move(basis)) {
  if (!(basis_.space() == f.space()))
    throw Error(ErrorCode::NotABasis, "basis belongs to a different space");
  tables_.reserve(basis_.size());
  for (auto g : basis_.vectors()) tables_.push_back(delta_table(f, g));
}

BaseDeltaSet base_deltas(const FnTable& f, const SpaceBasis& basis) { return BaseDeltaSet(f, basis); }

DecompPlan plan_shift(const SpaceBasis& basis, Space::Point a, IndexConvention convention) {
  const Space& space = basis.space();
  DecompPlan plan;
  plan.digits = basis.decompose(a);
  plan.offsets.resize(plan.digits.size());
  Space::Point b = 0;
  for (std::size_t i = 0; i < plan.digits.size(); ++i) {
    plan.offsets[i] = b;
    const std::uint32_t k = plan.digits[i];
    const std::uint32_t weight = convention == IndexConvention::corrected ? k : k * k;
    b = space.add(b, space.scale_fp(weight, basis.vectors()[i]));
  }
  return plan;
}

namespace {

/// out(x) += table(x + shift) for every x.
void accumulate_shifted(const Space& space, const FnTable& table, Space::Point shift,
                        std::vector<Field::Elem>& out) {
  const Field& field = space.field();
  for (Space::Point x = 0; x < space.size(); ++x) out[x] = field.add(out[x], table[space.add(x, shift)]);
}

}  // namespace

FnTable reconstruct_delta(const BaseDeltaSet& base, Space::Point a, IndexConvention convention) {
  const Space& space = base.space();
  const auto plan = plan_shift(base.basis(), a, convention);
  std::vector<Field::Elem> out(space.size(), 0);
  for (std::size_t i = 0; i < plan.digits.size(); ++i) {
    const Space::Point g = base.basis().vectors()[i];
    const std::uint32_t first = convention == IndexConvention::corrected ? 0 : 1;
    for (std::uint32_t j = first; j < first + plan.digits[i]; ++j)
      accumulate_shifted(space, base.tables()[i], space.add(plan.offsets[i], space.scale_fp(j, g)), out);
  }
  return FnTable(space, std::move(out));
}

IdentityResult identity_suite(const FnTable& f, const IdentityTrial& trial) {
  const Space& space = f.space();
  for (auto s : trial.shifts)
    if (s >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "shift outside the space");

  std::vector<Field::Elem> lhs;
  std::vector<Field::Elem> rhs(space.size(), 0);
  switch (trial.identity) {
    case Identity::combine: {
      if (trial.shifts.size() != 2) throw Error(ErrorCode::InvalidInput, "combine takes shifts {b, c}");
      const auto b = trial.shifts[0];
      const auto c = trial.shifts[1];
      lhs = delta_table(f, space.add(b, c)).values();
      accumulate_shifted(space, delta_table(f, c), b, rhs);
      accumulate_shifted(space, delta_table(f, b), 0, rhs);
      break;
    }
    case Identity::kbeq: {
      if (trial.shifts.size() != 1) throw Error(ErrorCode::InvalidInput, "kbeq takes shift {b}");
      const auto b = trial.shifts[0];
      lhs = delta_table(f, space.scale_fp(trial.k, b)).values();
      const auto db = delta_table(f, b);
      const std::uint32_t first = trial.convention == IndexConvention::corrected ? 0 : 1;
      for (std::uint32_t i = first; i < first + trial.k; ++i)
        accumulate_shifted(space, db, space.scale_fp(i, b), rhs);
      break;
    }
    case Identity::allbut: {
      if (trial.shifts.empty()) throw Error(ErrorCode::InvalidInput, "allbut takes at least one shift");
      Space::Point c = 0;
      for (auto ci : trial.shifts) c = space.add(c, ci);
      lhs = delta_table(f, c).values();
      // corrected: b_i = c_1 + ... + c_{i-1}; printed: b_i = c_1 + ... + c_i
      // for i >= 2, b_1 = 0.
      Space::Point running = 0;
      for (std::size_t i = 0; i < trial.shifts.size(); ++i) {
        Space::Point offset = running;
        if (trial.convention == IndexConvention::printed && i > 0) offset = space.add(running, trial.shifts[i]);
        accumulate_shifted(space, delta_table(f, trial.shifts[i]), offset, rhs);
        running = space.add(running, trial.shifts[i]);
      }
      break;
    }
  }
  for (Space::Point x = 0; x < space.size(); ++x)
    if (lhs[x] != rhs[x]) return {false, x};
  return {true, std::nullopt};
}

DecompCertificate verify_decomposition(const FnTable& f, const SpaceBasis& basis, const Workers& workers,
                                       IndexConvention convention) {
  const BaseDeltaSet base(f, basis);
  const Space& space = f.space();
  const Field& field = space.field();
  const std::uint32_t n = f.size();
  const std::uint32_t p = field.p();
  const std::uint32_t first = convention == IndexConvention::corrected ? 0 : 1;

  // runs[i][k](x) = sum over the k inner shifts of the i-th base table, so each
  // candidate shift costs one lookup per basis vector instead of one per step.
  std::vector<std::vector<std::vector<Field::Elem>>> runs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Space::Point g = basis.vectors()[i];
    runs[i].assign(p, std::vector<Field::Elem>(n, 0));
    for (std::uint32_t k = 1; k < p; ++k) {
      runs[i][k] = runs[i][k - 1];
      accumulate_shifted(space, base.tables()[i], space.scale_fp(first + k - 1, g), runs[i][k]);
    }
  }

  auto fails = [&](std::size_t idx) {
    const auto a = static_cast<Space::Point>(idx + 1);
    const auto plan = plan_shift(basis, a, convention);
    for (Space::Point x = 0; x < n; ++x) {
      Field::Elem sum = 0;
      for (std::size_t i = 0; i < plan.digits.size(); ++i)
        if (plan.digits[i]) sum = field.add(sum, runs[i][plan.digits[i]][space.add(x, plan.offsets[i])]);
      if (sum != field.sub(f[space.add(x, a)], f[x])) return true;
    }
    return false;
  };
  DecompCertificate cert;
  const auto hit = find_first(n - 1, workers, fails);
  cert.pass = !hit;
  // Shifts examined: all of them on success, up to the failure otherwise.
  cert.shifts_checked = hit ? *hit + 1 : n - 1;
  if (hit) cert.failing_shift = static_cast<Space::Point>(*hit + 1);
  return cert;
}

}  // namespace bentcert
