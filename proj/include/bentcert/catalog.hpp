#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentcert/funcs.hpp"

namespace bentcert {

/// Properties a catalog entry claims; empty means "not claimed, measured only".
struct Expectations {
  std::optional<bool> pn;
  std::optional<bool> bent;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> params;  // accepted integer parameters
};

const std::vector<CatalogEntry>& catalog_entries();

struct CatalogRequest {
  std::string name;
  Field field;
  std::uint32_t d = 1;
  CatalogParams params;
};

struct CatalogFunction {
  FnTable table;
  Expectations expected;
  /// Every claim was re-checked against is_pn / is_bent_exact.
  bool verified = false;
};

/// Materializes an entry and verifies its claims (PropertyMismatch if one
/// fails). Entries:
///   square          sum_i x_i^2, p odd, any d            claims pn, bent
///   power e         x^e, d = 1                            no claims
///   bilinear        x*y on F_q^2                          claims pn, bent
///   bool_quadratic  x1 x2 + x3 x4 + ... on F_2^d, d even  claims pn, bent
///   random          seeded uniform table                  no claims
///   affine c b      c*x + b, d = 1                        claims not pn, not bent
CatalogFunction get_function(const CatalogRequest& request, const Workers& workers = {});

/// Seeded uniform table: entry x is splitmix64(seed + (x + 1) * 0x9e3779b97f4a7c15) mod q,
/// where splitmix64 is the standard finalizer (shift 30/27/31 with the two
/// usual multipliers). Bit-exact on every platform.
FnTable random_function(const Field& field, std::uint32_t d, std::uint64_t seed);

/// splitmix64 finalizer applied to z; exposed for golden tests.
std::uint64_t splitmix64(std::uint64_t z);

}  // namespace bentcert
