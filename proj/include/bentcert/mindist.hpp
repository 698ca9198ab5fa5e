#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentcert/funcs.hpp"

namespace bentcert {

/// g with g(w) = v and g = f elsewhere. d = 1 only; throws NoOpPerturbation
/// when v = f(w).
FnTable perturb(const FnTable& f, Space::Point w, Field::Elem v);

/// Least (a, value) at which Delta_{g,a} fails to be a bijection: value is
/// the least element with more than one preimage. Empty iff g is planar.
std::optional<PnWitness> planarity_witness(const FnTable& g, const Workers& workers = {});

struct PerturbationEntry {
  Space::Point w = 0;
  Field::Elem v = 0;
  std::optional<PnWitness> witness;  // empty means the neighbour is planar
};

struct PerturbationReport {
  std::string base_fn;
  std::uint32_t q = 0;
  bool within_theorem_scope = false;  // p > 3
  std::vector<PerturbationEntry> entries;  // ordered by (w, v), q (q - 1) of them
  std::uint64_t planar_found = 0;
};

/// Tests every distance-1 neighbour of a planar f. The edited value is carried
/// alongside the shared base table instead of materializing each neighbour.
/// Throws NotPlanarBase if f itself is not planar.
PerturbationReport perturbation_sweep(const FnTable& f, const std::string& base_fn = "",
                                      const Workers& workers = {});

struct DistanceMatrix {
  std::vector<std::string> ids;
  std::vector<std::vector<std::uint64_t>> distances;
  /// Minimum over pairs of distinct functions; empty when there is none.
  std::optional<std::uint64_t> min_distance;
  /// Index pairs (i < j) of identical inputs.
  std::vector<std::pair<std::size_t, std::size_t>> duplicates;
};

/// Throws NotPlanarEntry (naming the index) unless every input is planar.
DistanceMatrix pairwise_min_distance(const std::vector<FnTable>& fns,
                                     const std::vector<std::string>& ids = {},
                                     const Workers& workers = {});

}  // namespace bentcert
