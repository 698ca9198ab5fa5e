#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bentcert/parallel.hpp"
#include "bentcert/space.hpp"

namespace bentcert {

/// A function F_q^d -> F_q as a dense table indexed by point index. Every
/// property in the library is decided from the table alone.
class FnTable {
 public:
  /// Throws InvalidInput unless values has q^d entries, each in [0, q).
  FnTable(Space space, std::vector<Field::Elem> values);

  const Space& space() const noexcept { return space_; }
  const Field& field() const noexcept { return space_.field(); }
  std::uint32_t d() const noexcept { return space_.d(); }
  std::uint32_t size() const noexcept { return space_.size(); }
  const std::vector<Field::Elem>& values() const noexcept { return values_; }
  Field::Elem operator[](Space::Point x) const noexcept { return values_[x]; }

  friend bool operator==(const FnTable& a, const FnTable& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  Space space_;
  std::vector<Field::Elem> values_;
};

struct Monomial {
  Field::Elem coeff = 0;
  std::vector<std::uint64_t> exponents;  // one per variable
};

/// Parameters for a catalog entry: named integers plus a seed.
struct CatalogParams {
  std::map<std::string, std::int64_t> ints;
  std::uint64_t seed = 0;
};

/// Ways to describe a function before it is tabulated.
struct FnSpec {
  struct Table {
    std::vector<Field::Elem> values;
  };
  struct Univariate {
    std::vector<Field::Elem> coeffs;  // coeffs[k] multiplies x^k
  };
  struct Sparse {
    std::vector<Monomial> terms;
  };
  struct Catalog {
    std::string name;
    CatalogParams params;
  };
  std::variant<Table, Univariate, Sparse, Catalog> source;
};

/// Tabulates a spec over F_q^d. Polynomial specs are evaluated twice by
/// independent routes (Horner and term-wise powers) and must agree.
FnTable build_function(const FnSpec& spec, const Field& field, std::uint32_t d);

/// x -> f(x + a) - f(x). a = 0 is allowed and yields the zero table.
FnTable delta_table(const FnTable& f, Space::Point a);
FnTable delta_table(const FnTable& f, const PointVector& a);

struct PnWitness {
  Space::Point shift = 0;
  Field::Elem value = 0;
  std::uint64_t count = 0;

  friend bool operator==(const PnWitness&, const PnWitness&) = default;
};

/// pn, or the least shift a (by index) whose difference is not
/// equidistributed, with the least value hit more than q^(d-1) times.
struct PnVerdict {
  bool pn = false;
  std::optional<PnWitness> witness;
};

PnVerdict is_pn(const FnTable& f, const Workers& workers = {});
/// Witness for a single shift, empty when Delta_{f,a} is equidistributed.
std::optional<PnWitness> pn_failure_at(const FnTable& f, Space::Point a);

std::uint64_t hamming_distance(const FnTable& f, const FnTable& g);
std::uint64_t image_size(const FnTable& f);
/// x -> f(x + s) + t.
FnTable translate(const FnTable& f, Space::Point s, Field::Elem t);

/// Text table format: "p ell d", the ell+1 modulus coefficients, then the
/// q^d element indices in point order; single spaces, newline-terminated.
void write_table(std::ostream& out, const FnTable& f);
std::string format_table(const FnTable& f);
FnTable read_table(std::istream& in);
FnTable load_table(const std::string& path);

}  // namespace bentcert
