#include "bentcert/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bentcert/catalog.hpp"
#include "bentcert/decomp.hpp"
#include "bentcert/error.hpp"
#include "bentcert/format.hpp"
#include "bentcert/mindist.hpp"
#include "bentcert/salem.hpp"
#include "bentcert/spectrum.hpp"

namespace bentcert {

namespace {

using Json = nlohmann::ordered_json;

/// Everything a run depends on. Output paths and the worker count are kept
/// out of the serialized form: they may change without changing the report.
struct RunConfig {
  std::string command;
  std::optional<std::uint32_t> p;
  std::uint32_t ell = 1;
  std::string modulus;
  std::optional<std::uint32_t> d;
  std::vector<std::string> catalogs;
  std::string params;
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  bool fast = false;
  std::string format = "json";
  std::string basis;
  std::string convention = "corrected";
  std::string family;
  bool timing = false;

  std::string emit;
  unsigned threads = 0;

  Json to_json() const {
    Json j;
    j["command"] = command;
    if (p) j["p"] = *p;
    j["ell"] = ell;
    if (!modulus.empty()) j["modulus"] = modulus;
    if (d) j["d"] = *d;
    if (!catalogs.empty()) j["catalog"] = catalogs;
    if (!params.empty()) j["params"] = params;
    if (!inputs.empty()) j["input"] = inputs;
    j["seed"] = seed;
    j["mode"] = fast ? "fast" : "exact";
    j["format"] = format;
    if (!basis.empty()) j["basis"] = basis;
    if (command == "decomp verify") j["convention"] = convention;
    if (!family.empty()) j["family"] = family;
    return j;
  }
};

/// Failures that are mathematical outcomes rather than bad input.
bool is_check_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::HypothesisFailed:
    case ErrorCode::NotPlanarBase:
    case ErrorCode::NotPlanarEntry:
    case ErrorCode::PropertyMismatch:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 0);
    if (used != s.size() || s.starts_with('-')) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidInput, "bad " + what + ": '" + s + "'");
  }
}

CatalogParams parse_params(const std::string& text, std::uint64_t seed) {
  CatalogParams params;
  params.seed = seed;
  for (const auto& kv : split(text, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::InvalidInput, "params entries look like key=value");
    const auto key = kv.substr(0, eq);
    const auto value = kv.substr(eq + 1);
    if (key == "seed") {
      params.seed = parse_uint(value, "seed");
    } else {
      try {
        std::size_t used = 0;
        params.ints[key] = std::stoll(value, &used, 0);
        if (used != value.size()) throw std::invalid_argument(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidInput, "bad value for " + key + ": '" + value + "'");
      }
    }
  }
  return params;
}

Field make_field(const RunConfig& cfg, std::uint32_t p, std::uint32_t ell) {
  std::optional<std::vector<std::uint32_t>> modulus;
  if (!cfg.modulus.empty()) {
    modulus.emplace();
    for (const auto& c : split(cfg.modulus, ','))
      modulus->push_back(static_cast<std::uint32_t>(parse_uint(c, "modulus coefficient")));
  }
  return Field::make(p, ell, modulus);
}

Field config_field(const RunConfig& cfg) {
  if (!cfg.p) throw Error(ErrorCode::InvalidInput, "--p is required");
  return make_field(cfg, *cfg.p, cfg.ell);
}

/// Entries defined only in one dimension get it as their default.
std::uint32_t default_d(const std::string& name) {
  if (name == "bilinear") return 2;
  if (name == "bool_quadratic") return 4;
  return 1;
}

struct Source {
  std::string id;
  FnTable table;
};

/// One catalog source is "name" or "name:key=value,...".
Source catalog_source(const RunConfig& cfg, const std::string& spec, const Field& field, const Workers& workers) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto text = colon == std::string::npos ? cfg.params : spec.substr(colon + 1);
  CatalogRequest request{name, field, cfg.d.value_or(default_d(name)), parse_params(text, cfg.seed)};
  auto fn = get_function(request, workers);
  std::string id = name;
  if (!text.empty()) id += "(" + text + ")";
  if (name == "random") id += "[seed=" + std::to_string(request.params.seed) + "]";
  return {id, std::move(fn.table)};
}

std::vector<Source> load_sources(const RunConfig& cfg, const Workers& workers) {
  std::vector<Source> out;
  if (!cfg.catalogs.empty()) {
    const Field field = config_field(cfg);
    for (const auto& spec : cfg.catalogs) out.push_back(catalog_source(cfg, spec, field, workers));
  }
  for (const auto& path : cfg.inputs) out.push_back({path, load_table(path)});
  return out;
}

Source single_source(const RunConfig& cfg, const Workers& workers) {
  if (cfg.catalogs.size() + cfg.inputs.size() != 1)
    throw Error(ErrorCode::InvalidInput, "give exactly one of --catalog or --input");
  return std::move(load_sources(cfg, workers).front());
}

Json field_json(const Field& field) {
  Json j;
  j["p"] = field.p();
  j["ell"] = field.ell();
  j["q"] = field.q();
  j["modulus"] = field.modulus();
  return j;
}

/// Integers as JSON numbers, anything else in the coefficient notation.
Json cyc_json(const CycInt& v) {
  if (const auto n = v.as_integer(); n && *n >= 0 && *n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(*n);
  return v.to_string();
}

Json pn_json(const FnTable& f, const PnVerdict& v) {
  Json j;
  j["verdict"] = v.pn ? "pn" : "not_pn";
  if (v.witness) {
    j["witness"] = {{"a", v.witness->shift},
                    {"a_coords", f.space().vector(v.witness->shift).coords},
                    {"value", v.witness->value},
                    {"count", v.witness->count},
                    {"expected_count", f.size() / f.field().q()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json bent_json(const FnTable& f, const BentVerdict& v) {
  Json j;
  j["verdict"] = v.bent ? "bent" : "not_bent";
  if (v.witness) {
    j["witness"] = {{"u", v.witness->u},
                    {"m", v.witness->m},
                    {"m_coords", f.space().vector(v.witness->m).coords},
                    {"abs_sq", cyc_json(v.witness->abs_sq)},
                    {"expected_abs_sq", f.size()}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json header(const RunConfig& cfg, const Source& src) {
  Json j;
  j["command"] = cfg.command;
  j["config"] = cfg.to_json();
  j["field"] = field_json(src.table.field());
  j["d"] = src.table.d();
  j["function"] = src.id;
  return j;
}

/// Writes to --emit when given, otherwise to the report stream.
void emit_text(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.emit.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.emit, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + cfg.emit);
  file << text;
}

void emit_json(const RunConfig& cfg, std::ostream& out, const Json& j) { emit_text(cfg, out, j.dump(2) + "\n"); }

int status(bool pass) { return pass ? kExitPass : kExitCheckFailed; }

// ---- commands ----

int cmd_test_pn(const RunConfig& cfg, const Workers& workers, std::ostream& out) {
  const auto src = single_source(cfg, workers);
  const auto verdict = is_pn(src.table, workers);
  auto j = header(cfg, src);
  j.update(pn_json(src.table, verdict));
  emit_json(cfg, out, j);
  return status(verdict.pn);
}

int cmd_test_bent(const RunConfig& cfg, const Workers& workers, std::ostream& out) {
  const auto src = single_source(cfg, workers);
  const FnTable& f = src.table;
  auto j = header(cfg, src);
  bool pass = true;

  const bool want_csv = cfg.format == "csv";
  if (want_csv && cfg.emit.empty())
    throw Error(ErrorCode::InvalidInput, "--format csv needs --emit DIR for the per-u spectrum files");

  if (!cfg.fast && !want_csv) {
    const auto verdict = is_bent_exact(f, workers);
    j.update(bent_json(f, verdict));
    pass = verdict.bent;
  } else {
    // One spectrum per character parameter; u ranges over F_q^* in index order.
    const std::uint32_t q = f.field().q();
    std::vector<SpectrumReport> reports(q - 1);
    const auto mode = cfg.fast ? SpectrumMode::fast : SpectrumMode::exact;
    parallel_for(q - 1, workers, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) reports[i] = spectrum_report(f, static_cast<Field::Elem>(i + 1), mode);
    });
    bool flat = true;
    std::uint64_t failures = 0;
    Json per_u = Json::array();
    std::optional<std::pair<Field::Elem, Space::Point>> witness;
    for (const auto& r : reports) {
      flat = flat && r.flat;
      failures += r.spot_check_failures;
      if (!witness && r.witness_m) witness.emplace(r.u, *r.witness_m);
      per_u.push_back({{"u", r.u},
                       {"max_magnitude", r.max_magnitude},
                       {"min_magnitude", r.min_magnitude},
                       {"flat", r.flat},
                       {"spot_checks", r.spot_checks},
                       {"spot_check_failures", r.spot_check_failures}});
    }
    j["verdict"] = flat ? "bent" : "not_bent";
    if (witness) {
      const auto& entry = reports[witness->first - 1].entries[witness->second];
      Json w = {{"u", witness->first},
                {"m", witness->second},
                {"m_coords", f.space().vector(witness->second).coords},
                {"magnitude", entry.magnitude}};
      if (entry.abs_sq) w["abs_sq"] = cyc_json(*entry.abs_sq);
      j["witness"] = w;
    } else {
      j["witness"] = nullptr;
    }
    j["spot_check_failures"] = failures;
    j["spectra"] = per_u;
    pass = flat && failures == 0;

    if (want_csv) {
      std::filesystem::create_directories(cfg.emit);
      Json files = Json::array();
      for (const auto& r : reports) {
        const auto name = "spectrum_u" + std::to_string(r.u) + ".csv";
        std::ofstream file(std::filesystem::path(cfg.emit) / name, std::ios::binary);
        if (!file) throw Error(ErrorCode::InvalidInput, "cannot write into " + cfg.emit);
        write_spectrum_csv(file, f, r);
        files.push_back(name);
      }
      j["files"] = files;
      out << j.dump(2) << "\n";
      return status(pass);
    }
  }
  emit_json(cfg, out, j);
  return status(pass);
}

int cmd_crosscheck(const RunConfig& cfg, const Workers& workers, std::ostream& out) {
  const auto src = single_source(cfg, workers);
  const auto check = crosscheck_pn_bent(src.table, workers);
  auto j = header(cfg, src);
  j["pn"] = pn_json(src.table, check.pn);
  j["bent"] = bent_json(src.table, check.bent);
  j["agree"] = check.agree;
  emit_json(cfg, out, j);
  return status(check.agree);
}

Json salem_summary(const SalemReport& r, const Space& graph_space) {
  Json j;
  j["q"] = r.q;
  j["d"] = r.d;
  j["cardinality"] = r.cardinality;
  j["salem_constant"] = r.constant.constant;
  if (r.constant.max_abs_sq) {
    j["salem_constant_sq"] = {{"num", r.constant.max_abs_sq->str()}, {"den", r.cardinality}};
  } else {
    j["salem_constant_sq"] = nullptr;
  }
  j["constant_is_one"] = r.constant_is_one;
  j["argmax_m"] = r.constant.argmax;
  j["argmax_coords"] = graph_space.vector(r.constant.argmax).coords;

  Json cases = Json::object();
  for (auto c : {Theorem1Case::origin, Theorem1Case::vertical, Theorem1Case::graph}) {
    std::uint64_t n = 0, matched = 0;
    std::optional<Space::Point> first_mismatch;
    std::string expected;
    for (const auto& e : r.entries) {
      if (e.tag != c) continue;
      ++n;
      matched += e.matches;
      expected = e.expected.str();
      if (!e.matches && !first_mismatch) first_mismatch = e.m;
    }
    Json cj = {{"entries", n}, {"matches", matched}, {"expected_abs_sq", expected}};
    cj["first_mismatch_m"] = first_mismatch ? Json(*first_mismatch) : Json(nullptr);
    cases[std::string(to_string(c))] = cj;
  }
  j["cases"] = cases;
  j["theorem1_pass"] = r.theorem1_pass;
  return j;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p) continue;
    std::uint32_t ell = 0;
    while (q % p == 0) q /= p, ++ell;
    if (q != 1) break;
    return {p, ell};
  }
  throw Error(ErrorCode::InvalidInput, "family entries must be prime powers");
}

int cmd_salem(const RunConfig& cfg, const Workers& workers, std::ostream& out, bool verify) {
  if (!cfg.family.empty()) {
    if (cfg.catalogs.size() != 1 || !cfg.inputs.empty())
      throw Error(ErrorCode::InvalidInput, "--family needs exactly one --catalog source");
    if (cfg.format != "json") throw Error(ErrorCode::InvalidInput, "--family reports are JSON only");
    Json j;
    j["command"] = cfg.command;
    j["config"] = cfg.to_json();
    j["function"] = cfg.catalogs.front();
    Json members = Json::array();
    bool pass = true;
    for (const auto& item : split(cfg.family, ',')) {
      const auto [p, ell] = split_prime_power(parse_uint(item, "family entry"));
      RunConfig member = cfg;
      member.modulus.clear();
      const auto src = catalog_source(member, cfg.catalogs.front(), make_field(member, p, ell), workers);
      const auto report = verify ? verify_theorem1(src.table, workers) : salem_report(src.table, workers);
      Space graph_space(src.table.field(), src.table.d() + 1);
      members.push_back(salem_summary(report, graph_space));
      pass = pass && (!verify || report.theorem1_pass);
    }
    j["family"] = members;
    emit_json(cfg, out, j);
    return status(pass);
  }

  const auto src = single_source(cfg, workers);
  const auto report = verify ? verify_theorem1(src.table, workers) : salem_report(src.table, workers);
  Space graph_space(src.table.field(), src.table.d() + 1);
  if (cfg.format == "csv") {
    std::ostringstream text;
    write_salem_csv(text, graph_space, report);
    emit_text(cfg, out, text.str());
  } else {
    auto j = header(cfg, src);
    j.update(salem_summary(report, graph_space));
    emit_json(cfg, out, j);
  }
  return status(!verify || report.theorem1_pass);
}

int cmd_decomp_verify(const RunConfig& cfg, const Workers& workers, std::ostream& out) {
  const auto src = single_source(cfg, workers);
  const Space& space = src.table.space();
  std::optional<SpaceBasis> basis;
  if (cfg.basis.empty()) {
    basis.emplace(SpaceBasis::standard(space));
  } else {
    std::vector<Space::Point> points;
    for (const auto& s : split(cfg.basis, ',')) {
      const auto v = parse_uint(s, "basis point");
      if (v >= space.size()) throw Error(ErrorCode::IndexOutOfRange, "basis point " + s + " outside F_q^d");
      points.push_back(static_cast<Space::Point>(v));
    }
    basis.emplace(SpaceBasis::from_points(space, std::move(points)));
  }
  IndexConvention convention;
  if (cfg.convention == "corrected") {
    convention = IndexConvention::corrected;
  } else if (cfg.convention == "printed") {
    convention = IndexConvention::printed;
  } else {
    throw Error(ErrorCode::InvalidInput, "--convention is corrected or printed");
  }
  const auto cert = verify_decomposition(src.table, *basis, workers, convention);
  auto j = header(cfg, src);
  j["basis"] = basis->vectors();
  j["convention"] = cfg.convention;
  j["shifts_checked"] = cert.shifts_checked;
  j["pass"] = cert.pass;
  j["failing_a"] = cert.failing_shift ? Json(*cert.failing_shift) : Json(nullptr);
  emit_json(cfg, out, j);
  return status(cert.pass);
}

int cmd_mindist_sweep(const RunConfig& cfg, const Workers& workers, std::ostream& out) {
  const auto src = single_source(cfg, workers);
  const auto start = std::chrono::steady_clock::now();
  const auto report = perturbation_sweep(src.table, src.id, workers);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  auto j = header(cfg, src);
  j["base_fn"] = report.base_fn;
  j["within_theorem_scope"] = report.within_theorem_scope;
  j["pairs_tested"] = report.entries.size();
  j["planar_found"] = report.planar_found;
  const auto img = image_size(src.table);
  j["image_size"] = img;
  j["image_bound"] = (report.q + 1) / 2;
  j["image_bound_ok"] = 2 * img >= report.q + 1;
  Json samples = Json::array();
  Json planar = Json::array();
  for (const auto& e : report.entries) {
    if (!e.witness) {
      planar.push_back({{"w", e.w}, {"v", e.v}});
    } else if (samples.size() < 10) {
      samples.push_back(
          {{"w", e.w}, {"v", e.v}, {"a", e.witness->shift}, {"value", e.witness->value}, {"count", e.witness->count}});
    }
  }
  j["sample_witnesses"] = samples;
  j["planar_neighbours"] = planar;
  if (cfg.timing) j["wall_time"] = elapsed.count();
  emit_json(cfg, out, j);
  return status(report.planar_found == 0 || !report.within_theorem_scope);
}

int cmd_mindist_pairwise(const RunConfig& cfg, const Workers& workers, std::ostream& out) {
  auto sources = load_sources(cfg, workers);
  if (sources.size() < 2) throw Error(ErrorCode::InvalidInput, "pairwise needs at least two functions");
  std::vector<FnTable> fns;
  std::vector<std::string> ids;
  for (auto& s : sources) {
    fns.push_back(s.table);
    ids.push_back(s.id);
  }
  const auto matrix = pairwise_min_distance(fns, ids, workers);
  Json j;
  j["command"] = cfg.command;
  j["config"] = cfg.to_json();
  j["field"] = field_json(fns.front().field());
  j["ids"] = matrix.ids;
  j["distances"] = matrix.distances;
  j["min_distance"] = matrix.min_distance ? Json(*matrix.min_distance) : Json(nullptr);
  Json dups = Json::array();
  for (const auto& [a, b] : matrix.duplicates) dups.push_back({a, b});
  j["duplicates"] = dups;
  const bool pass = !matrix.min_distance || *matrix.min_distance >= 2;
  j["pass"] = pass;
  emit_json(cfg, out, j);
  return status(pass);
}

int cmd_catalog_list(const RunConfig& cfg, std::ostream& out) {
  Json entries = Json::array();
  for (const auto& e : catalog_entries())
    entries.push_back({{"name", e.name}, {"description", e.description}, {"params", e.params}});
  emit_json(cfg, out, Json{{"command", cfg.command}, {"entries", entries}});
  return kExitPass;
}

int cmd_field_info(const RunConfig& cfg, std::ostream& out) {
  const Field field = config_field(cfg);
  Json j;
  j["command"] = cfg.command;
  j["config"] = cfg.to_json();
  j.update(field_json(field));
  j["describe"] = field.describe();
  j["primitive"] = field.primitive();
  j["primitive_coeffs"] = field.coeffs(field.primitive());
  emit_json(cfg, out, j);
  return kExitPass;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact character sums, bentness and planarity certificates over finite fields", "bentcert"};
  app.require_subcommand(1);

  enum class Which { none, test_pn, test_bent, crosscheck, salem, salem_verify, decomp, sweep, pairwise, catalog, field };
  Which which = Which::none;

  auto add_field_opts = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic");
    sub->add_option("--ell", cfg.ell, "extension degree")->capture_default_str();
    sub->add_option("--modulus", cfg.modulus, "monic modulus, comma-separated little-endian coefficients");
  };
  auto add_fn_opts = [&](CLI::App* sub, bool many) {
    add_field_opts(sub);
    sub->add_option("--d", cfg.d, "dimension (default 1, or the entry's own)");
    auto* cat = sub->add_option("--catalog", cfg.catalogs, "catalog entry, optionally name:key=value,...");
    auto* in = sub->add_option("--input", cfg.inputs, "function table file");
    if (!many) {
      cat->expected(1);
      in->expected(1);
    }
    sub->add_option("--params", cfg.params, "entry parameters key=value,...");
    sub->add_option("--seed", cfg.seed, "seed for random entries");
  };
  auto add_run_opts = [&](CLI::App* sub) {
    sub->add_option("--emit", cfg.emit, "output path (a directory for per-u spectrum CSVs)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker count (default: BENTCERT_THREADS or 1)");
    auto* fast = sub->add_flag("--fast", cfg.fast, "floating transform with exact spot checks");
    sub->add_flag("--exact{false}", cfg.fast, "exact arithmetic throughout (default)")->excludes(fast);
    sub->add_flag("--timing", cfg.timing, "include wall-clock timing in reports");
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Which w, bool fn = true,
                  bool many = false) {
    auto* sub = parent->add_subcommand(name, help);
    if (fn) add_fn_opts(sub, many);
    add_run_opts(sub);
    sub->callback([&which, w] { which = w; });
    return sub;
  };

  auto* test = app.add_subcommand("test", "property tests")->require_subcommand(1);
  leaf(test, "pn", "perfect nonlinearity by exhaustive difference counts", Which::test_pn);
  leaf(test, "bent", "bentness from exact character sums", Which::test_bent);
  leaf(&app, "crosscheck", "PN and bent verdicts computed independently", Which::crosscheck);

  auto* salem = leaf(&app, "salem", "Fourier transform of the graph and its Salem constant", Which::salem);
  salem->add_option("--family", cfg.family, "comma-separated prime powers q, same catalog entry for each");
  salem->require_subcommand(0, 1);
  auto* verify = leaf(salem, "verify-thm1", "graph spectrum of a bent function against its closed form",
                      Which::salem_verify);
  verify->add_option("--family", cfg.family, "comma-separated prime powers q, same catalog entry for each");

  auto* decomp = app.add_subcommand("decomp", "difference operators from a basis")->require_subcommand(1);
  auto* dv = leaf(decomp, "verify", "reconstruct every difference table from the basis differences", Which::decomp);
  dv->add_option("--basis", cfg.basis, "basis point indices, comma-separated (default: standard)");
  dv->add_option("--convention", cfg.convention, "corrected or printed")->check(CLI::IsMember({"corrected", "printed"}));

  auto* mindist = app.add_subcommand("mindist", "distances between planar functions")->require_subcommand(1);
  leaf(mindist, "sweep", "every distance-1 neighbour of a planar function", Which::sweep);
  leaf(mindist, "pairwise", "Hamming distances among planar functions", Which::pairwise, true, true);

  auto* catalog = app.add_subcommand("catalog", "built-in functions")->require_subcommand(1);
  leaf(catalog, "list", "list catalog entries", Which::catalog, false);
  auto* field = app.add_subcommand("field", "finite field details")->require_subcommand(1);
  auto* info = leaf(field, "info", "modulus, primitive element", Which::field, false);
  add_field_opts(info);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "bentcert: " << e.what() << "\n";
    return kExitUsage;
  }

  static const std::map<Which, std::string> names = {
      {Which::test_pn, "test pn"},       {Which::test_bent, "test bent"},     {Which::crosscheck, "crosscheck"},
      {Which::salem, "salem"},           {Which::salem_verify, "salem verify-thm1"},
      {Which::decomp, "decomp verify"},  {Which::sweep, "mindist sweep"},    {Which::pairwise, "mindist pairwise"},
      {Which::catalog, "catalog list"},  {Which::field, "field info"}};
  if (verify->parsed()) which = Which::salem_verify;
  if (which == Which::none) {
    err << "bentcert: no command given\n";
    return kExitUsage;
  }
  cfg.command = names.at(which);
  const Workers workers = cfg.threads ? Workers{cfg.threads} : Workers::from_env();

  try {
    switch (which) {
      case Which::test_pn: return cmd_test_pn(cfg, workers, out);
      case Which::test_bent: return cmd_test_bent(cfg, workers, out);
      case Which::crosscheck: return cmd_crosscheck(cfg, workers, out);
      case Which::salem: return cmd_salem(cfg, workers, out, false);
      case Which::salem_verify: return cmd_salem(cfg, workers, out, true);
      case Which::decomp: return cmd_decomp_verify(cfg, workers, out);
      case Which::sweep: return cmd_mindist_sweep(cfg, workers, out);
      case Which::pairwise: return cmd_mindist_pairwise(cfg, workers, out);
      case Which::catalog: return cmd_catalog_list(cfg, out);
      case Which::field: return cmd_field_info(cfg, out);
      case Which::none: break;
    }
  } catch (const Error& e) {
    if (is_check_failure(e.code())) {
      Json j;
      j["command"] = cfg.command;
      j["config"] = cfg.to_json();
      j["error"] = std::string(to_string(e.code()));
      j["message"] = e.what();
      try {
        emit_json(cfg, out, j);
      } catch (const Error&) {
        out << j.dump(2) << "\n";
      }
      return kExitCheckFailed;
    }
    err << "bentcert: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "bentcert: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bentcert
