// isospec: spectra of the three line-bundle Laplacians over the
// isoparametric foliation of S^4, swept over the leaf parameter b, with
// geometric verifiers and a formula-vs-oracle reconciliation report.

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "isospec/foliation.hpp"
#include "isospec/foliation_oracle.hpp"
#include "isospec/polynomials.hpp"
#include "isospec/rep_spectra.hpp"
#include "isospec/sweep.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

// --- config files: plain key=value lines mirroring the flags; explicit ---
// --- flags take precedence over file values. ------------------------------

using ConfigSetters = std::map<std::string, std::function<void(const std::string&)>>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

void apply_config_file(const std::string& path, const CLI::App* sub,
                       const ConfigSetters& setters) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key=value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": unknown config key '" + key + "'");
    }
    if (sub->count("--" + key) > 0) continue;  // flag wins
    it->second(value);
  }
}

double config_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': expected a number, got '" +
                                value + "'");
  }
}

int config_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': expected an integer, got '" +
                                value + "'");
  }
}

bool config_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" +
                              value + "'");
}

isospec::Bundle bundle_from_int(int b) {
  switch (b) {
    case 1: return isospec::Bundle::eta1;
    case 2: return isospec::Bundle::eta2;
    case 3: return isospec::Bundle::eta3;
  }
  throw std::invalid_argument("bundle must be 1, 2 or 3");
}

isospec::OmegaVariant variant_from_string(const std::string& s) {
  if (s == "published") return isospec::OmegaVariant::published;
  if (s == "corrected") return isospec::OmegaVariant::corrected;
  throw std::invalid_argument("variant must be 'published' or 'corrected'");
}

const char* variant_name(isospec::OmegaVariant v) {
  return v == isospec::OmegaVariant::published ? "published" : "corrected";
}

// ---------------------------------------------------------------- sweep ---

struct SweepCli {
  std::string config;
  std::string bundle = "1";
  int m_max = 1;
  std::optional<double> b_min;
  std::optional<double> b_max;
  std::optional<int> steps;
  double r = 1.0;
  std::string format = "csv";
  std::string out;
  std::string omega1_variant = "corrected";
  std::string omega2_variant = "published";
  bool limits = false;
  bool no_continuity = false;
  int threads = 0;
};

int run_sweep_command(SweepCli& cli, const CLI::App* sub) {
  if (!cli.config.empty()) {
    const ConfigSetters setters{
        {"bundle", [&](const std::string& v) { cli.bundle = v; }},
        {"m-max", [&](const std::string& v) { cli.m_max = config_int("m-max", v); }},
        {"b-min", [&](const std::string& v) { cli.b_min = config_double("b-min", v); }},
        {"b-max", [&](const std::string& v) { cli.b_max = config_double("b-max", v); }},
        {"steps", [&](const std::string& v) { cli.steps = config_int("steps", v); }},
        {"r", [&](const std::string& v) { cli.r = config_double("r", v); }},
        {"format", [&](const std::string& v) { cli.format = v; }},
        {"out", [&](const std::string& v) { cli.out = v; }},
        {"omega1-variant", [&](const std::string& v) { cli.omega1_variant = v; }},
        {"omega2-variant", [&](const std::string& v) { cli.omega2_variant = v; }},
        {"limits", [&](const std::string& v) { cli.limits = config_bool("limits", v); }},
        {"no-continuity",
         [&](const std::string& v) { cli.no_continuity = config_bool("no-continuity", v); }},
        {"threads", [&](const std::string& v) { cli.threads = config_int("threads", v); }},
    };
    apply_config_file(cli.config, sub, setters);
  }

  isospec::SweepConfig config;
  config.bundles.clear();
  if (cli.bundle == "all") {
    config.bundles = {isospec::Bundle::eta1, isospec::Bundle::eta2,
                      isospec::Bundle::eta3};
  } else if (cli.bundle == "1" || cli.bundle == "2" || cli.bundle == "3") {
    config.bundles = {bundle_from_int(std::stoi(cli.bundle))};
  } else {
    throw std::invalid_argument("--bundle must be 1, 2, 3 or all");
  }
  config.m_max = cli.m_max;
  config.b_min = cli.b_min;
  config.b_max = cli.b_max;
  config.steps = cli.steps;
  config.r = cli.r;
  if (cli.format == "csv") {
    config.format = isospec::OutputFormat::csv;
  } else if (cli.format == "json") {
    config.format = isospec::OutputFormat::json;
  } else {
    throw std::invalid_argument("--format must be csv or json");
  }
  config.omega.omega1 = variant_from_string(cli.omega1_variant);
  config.omega.omega2 = variant_from_string(cli.omega2_variant);
  config.with_limit_diagnostics = cli.limits;
  config.with_continuity_check = !cli.no_continuity;
  config.max_threads = cli.threads;
  config.validate();

  const std::vector<isospec::BranchTrace> traces = isospec::run_sweep(config);

  std::vector<isospec::ContinuityFinding> continuity;
  if (config.with_continuity_check) {
    continuity = isospec::check_branch_continuity(traces);
  }

  isospec::LimitDiagnostics limits_storage;
  const isospec::LimitDiagnostics* limits_ptr = nullptr;
  if (config.with_limit_diagnostics) {
    std::vector<int> odd_ms;
    for (int m = 1; m <= config.m_max; m += 2) odd_ms.push_back(m);
    for (isospec::Bundle b : config.bundles) {
      if (b == isospec::Bundle::eta1 || b == isospec::Bundle::eta3) {
        limits_storage = isospec::limit_diagnostics(b, odd_ms, config.r, config.omega);
        limits_ptr = &limits_storage;
        break;  // one focal report; bundle 3 mirrors bundle 1
      }
    }
  }

  std::ostringstream body;
  if (config.format == isospec::OutputFormat::csv) {
    isospec::emit_csv(body, traces);
    // Keep the CSV byte-exact: diagnostics go to stderr.
    for (const auto& f : continuity) {
      std::cerr << "continuity: bundle " << static_cast<int>(f.bundle) << " m=" << f.m
                << " l=" << f.l << " jump " << f.jump << " over [" << f.b_lo << ", "
                << f.b_hi << "] exceeds bound " << f.bound << "\n";
    }
    if (limits_ptr) {
      for (const auto& flow : limits_ptr->flows) {
        std::cerr << "limit: m=" << flow.m << " extrapolated " << flow.extrapolated
                  << " vs " << flow.reference << " ("
                  << (flow.pass ? "pass" : "FAIL") << ")\n";
      }
    }
  } else {
    isospec::emit_json(body, config, traces, continuity, limits_ptr);
  }
  write_output(cli.out, body.str());
  return kExitOk;
}

// ------------------------------------------------------------ reconcile ---

struct ReconcileCli {
  std::string config;
  int m_max = 8;
  std::vector<double> bs;
  double r = 1.0;
  std::string format = "text";
  std::string out;
  std::string omega1_variant = "corrected";
  std::string omega2_variant = "published";
};

int run_reconcile_command(ReconcileCli& cli, const CLI::App* sub) {
  if (!cli.config.empty()) {
    const ConfigSetters setters{
        {"m-max", [&](const std::string& v) { cli.m_max = config_int("m-max", v); }},
        {"b",
         [&](const std::string& v) {
           cli.bs.clear();
           std::istringstream parts(v);
           std::string item;
           while (std::getline(parts, item, ',')) {
             cli.bs.push_back(config_double("b", trim(item)));
           }
         }},
        {"r", [&](const std::string& v) { cli.r = config_double("r", v); }},
        {"format", [&](const std::string& v) { cli.format = v; }},
        {"out", [&](const std::string& v) { cli.out = v; }},
        {"omega1-variant", [&](const std::string& v) { cli.omega1_variant = v; }},
        {"omega2-variant", [&](const std::string& v) { cli.omega2_variant = v; }},
    };
    apply_config_file(cli.config, sub, setters);
  }

  if (cli.m_max < 0) throw std::invalid_argument("--m-max must be non-negative");
  std::vector<double> bs = cli.bs;
  if (bs.empty()) bs = {0.25, 0.5, 0.75};
  for (double b : bs) {
    if (!(b > 0.0 && b < 1.0)) {
      throw std::invalid_argument("--b values must lie strictly inside (0,1)");
    }
  }
  isospec::OmegaOptions options;
  options.omega1 = variant_from_string(cli.omega1_variant);
  options.omega2 = variant_from_string(cli.omega2_variant);

  const isospec::Bundle bundles[] = {isospec::Bundle::eta1, isospec::Bundle::eta2,
                                     isospec::Bundle::eta3};

  std::vector<isospec::ReconciliationReport> reports;
  for (int m = 0; m <= cli.m_max; ++m) {
    for (double b : bs) {
      for (isospec::Bundle bundle : bundles) {
        reports.push_back(isospec::reconcile(m, b, cli.r, bundle, options));
      }
    }
  }

  // Variant discrepancies: bundle-1 even-m b=1/2 eigenvalues under both entry
  // sets against the closed forms, and bundle-2 b <-> 1-b symmetry deviation.
  ordered_json omega1_notes = ordered_json::array();
  ordered_json omega2_notes = ordered_json::array();
  for (int m = 2; m <= std::max(cli.m_max, 2); m += 2) {
    const auto published = isospec::eigvals_tridiagonal(
        isospec::omega1(m, 0.5, cli.r, isospec::OmegaVariant::published).matrix);
    const auto corrected = isospec::eigvals_tridiagonal(
        isospec::omega1(m, 0.5, cli.r, isospec::OmegaVariant::corrected).matrix);
    omega1_notes.push_back({{"m", m},
                            {"published", published},
                            {"corrected", corrected},
                            {"closed_form", isospec::closed_form_half(
                                                isospec::Bundle::eta1, m)}});
    for (double b : bs) {
      if (b == 0.5) continue;
      auto deviation = [&](isospec::OmegaVariant v) {
        const auto at_b =
            isospec::eigvals_tridiagonal(isospec::omega2(m, b, cli.r, v).matrix);
        const auto mirrored = isospec::eigvals_tridiagonal(
            isospec::omega2(m, 1.0 - b, cli.r, v).matrix);
        double dev = 0.0;
        for (std::size_t i = 0; i < at_b.size(); ++i) {
          dev = std::max(dev, std::abs(at_b[i] - mirrored[i]));
        }
        return dev;
      };
      omega2_notes.push_back(
          {{"m", m},
           {"b", b},
           {"published_max_dev", deviation(isospec::OmegaVariant::published)},
           {"corrected_max_dev", deviation(isospec::OmegaVariant::corrected)}});
    }
  }

  if (cli.format == "json") {
    ordered_json j;
    j["r"] = cli.r;
    j["omega1_variant"] = variant_name(options.omega1);
    j["omega2_variant"] = variant_name(options.omega2);
    ordered_json entries = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json e;
      e["m"] = rep.m;
      e["b"] = rep.b;
      e["bundle"] = static_cast<int>(rep.bundle);
      e["formula_dimension"] = rep.formula_eigenvalues.size();
      e["isotypic_dimension"] = rep.isotypic_dimension;
      e["formula_eigenvalues"] = rep.formula_eigenvalues;
      e["oracle_eigenvalues"] = rep.oracle_eigenvalues;
      if (std::isnan(rep.max_abs_difference)) {
        e["max_abs_difference"] = nullptr;
      } else {
        e["max_abs_difference"] = rep.max_abs_difference;
      }
      e["verdict"] = isospec::to_string(rep.verdict);
      entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["variant_notes"] = {{"omega1_even_m_half_vs_closed_form", omega1_notes},
                          {"omega2_even_m_mirror_symmetry", omega2_notes}};
    write_output(cli.out, j.dump(2) + "\n");
    return kExitOk;
  }
  if (cli.format != "text") {
    throw std::invalid_argument("--format must be text or json");
  }

  std::ostringstream body;
  body << "reconcile: tabulated Casimir blocks vs isotypic oracle (r=" << cli.r
       << ", omega1=" << variant_name(options.omega1)
       << ", omega2=" << variant_name(options.omega2) << ")\n";
  body << "  m   b      bundle  dim(formula)  dim(oracle)  max|diff|   verdict\n";
  auto list = [](const std::vector<double>& v) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s << ", ";
      s << v[i];
    }
    s << "]";
    return s.str();
  };
  for (const auto& rep : reports) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-3d %-6.4g %-7d %-13zu %-12d ", rep.m,
                  rep.b, static_cast<int>(rep.bundle),
                  rep.formula_eigenvalues.size(), rep.isotypic_dimension);
    body << line;
    if (std::isnan(rep.max_abs_difference)) {
      body << "-          ";
    } else {
      char diff[32];
      std::snprintf(diff, sizeof(diff), "%-10.3g ", rep.max_abs_difference);
      body << diff;
    }
    body << isospec::to_string(rep.verdict) << "\n";
    body << "        formula " << list(rep.formula_eigenvalues) << "  oracle "
         << list(rep.oracle_eigenvalues) << "\n";
  }
  body << "\nvariant notes (bundle 1, even m, b=1/2 vs closed forms):\n";
  for (const auto& note : omega1_notes) {
    body << "  m=" << note["m"] << " published " << note["published"].dump()
         << " corrected " << note["corrected"].dump() << " closed-form "
         << note["closed_form"].dump() << "\n";
  }
  if (!omega2_notes.empty()) {
    body << "variant notes (bundle 2, even m, eigenvalue deviation under b -> 1-b):\n";
    for (const auto& note : omega2_notes) {
      body << "  m=" << note["m"] << " b=" << note["b"] << " published "
           << note["published_max_dev"] << " corrected "
           << note["corrected_max_dev"] << "\n";
    }
  }
  write_output(cli.out, body.str());
  return kExitOk;
}

// ------------------------------------------------------------- geometry ---

struct GeometryCli {
  std::string config;
  double b = 0.5;
  double r0 = 1.0;
  std::string format = "text";
  std::string out;
};

int run_geometry_command(GeometryCli& cli, const CLI::App* sub) {
  if (!cli.config.empty()) {
    const ConfigSetters setters{
        {"b", [&](const std::string& v) { cli.b = config_double("b", v); }},
        {"r0", [&](const std::string& v) { cli.r0 = config_double("r0", v); }},
        {"format", [&](const std::string& v) { cli.format = v; }},
        {"out", [&](const std::string& v) { cli.out = v; }},
    };
    apply_config_file(cli.config, sub, setters);
  }

  if (!(cli.b > 0.0 && cli.b < 1.0)) {
    throw std::invalid_argument("--b must lie strictly inside (0,1)");
  }
  if (!(cli.r0 > 0.0)) throw std::invalid_argument("--r0 must be positive");

  const isospec::CurvatureReport closed =
      isospec::closed_form_curvature_report(cli.b, cli.r0);
  const std::array<double, 3> x{0.3, 0.2, 0.4};
  const isospec::CurvatureReport numeric =
      isospec::numeric_shape_operator(cli.b, x, cli.r0);
  const double max_dev =
      std::max({std::abs(closed.k1 - numeric.k1), std::abs(closed.k2 - numeric.k2),
                std::abs(closed.k3 - numeric.k3)});
  const isospec::SectionalCurvatures sec = isospec::sectional_curvatures(cli.b, cli.r0);
  const isospec::GeodesicSliceReport geodesic =
      isospec::check_totally_geodesic_leaf({cli.b}, cli.r0);

  if (cli.format == "json") {
    ordered_json j;
    j["b"] = cli.b;
    j["r0"] = cli.r0;
    j["principal_curvatures"] = {closed.k1, closed.k2, closed.k3};
    j["mean_curvature"] = closed.h;
    j["scalar_curvature"] = closed.scal;
    j["sectional_curvatures"] = {sec.k1, sec.k2, sec.k3};
    j["leaf_volume"] = isospec::leaf_volume(cli.b, cli.r0);
    j["latitude"] = isospec::leaf_circle_latitude(cli.b);
    j["focal_gaussian_curvature"] = isospec::focal_gaussian_curvature(cli.r0);
    j["numeric_shape_operator"] = {{"k", {numeric.k1, numeric.k2, numeric.k3}},
                                   {"x", {x[0], x[1], x[2]}},
                                   {"max_deviation", max_dev}};
    j["geodesic_slice"] = {{"max_abs_christoffel", geodesic.max_abs_christoffel},
                           {"tolerance", geodesic.tolerance},
                           {"totally_geodesic", geodesic.totally_geodesic}};
    write_output(cli.out, j.dump(2) + "\n");
    return kExitOk;
  }
  if (cli.format != "text") {
    throw std::invalid_argument("--format must be text or json");
  }

  std::ostringstream body;
  body << "leaf F(b) in S^4(r0), b=" << cli.b << ", r0=" << cli.r0 << "\n"
       << "  principal curvatures   " << closed.k1 << "  " << closed.k2 << "  "
       << closed.k3 << "\n"
       << "  mean curvature         " << closed.h << "\n"
       << "  scalar curvature       " << closed.scal << "\n"
       << "  sectional curvatures   " << sec.k1 << "  " << sec.k2 << "  " << sec.k3
       << "\n"
       << "  volume                 " << isospec::leaf_volume(cli.b, cli.r0) << "\n"
       << "  circle latitude        " << isospec::leaf_circle_latitude(cli.b)
       << " rad\n"
       << "  focal Gauss curvature  " << isospec::focal_gaussian_curvature(cli.r0)
       << "\n"
       << "  numeric shape operator " << numeric.k1 << "  " << numeric.k2 << "  "
       << numeric.k3 << "  (max deviation " << max_dev << ")\n"
       << "  geodesic slice         max |Christoffel| "
       << geodesic.max_abs_christoffel << " (tolerance " << geodesic.tolerance
       << ", " << (geodesic.totally_geodesic ? "pass" : "FAIL") << ")\n";
  write_output(cli.out, body.str());
  return kExitOk;
}

// ---------------------------------------------------------- closed-forms ---

struct ClosedFormsCli {
  std::string config;
  int m_max = 8;
  int n_max = 7;
  std::string format = "text";
  std::string out;
};

int run_closed_forms_command(ClosedFormsCli& cli, const CLI::App* sub) {
  if (!cli.config.empty()) {
    const ConfigSetters setters{
        {"m-max", [&](const std::string& v) { cli.m_max = config_int("m-max", v); }},
        {"n-max", [&](const std::string& v) { cli.n_max = config_int("n-max", v); }},
        {"format", [&](const std::string& v) { cli.format = v; }},
        {"out", [&](const std::string& v) { cli.out = v; }},
    };
    apply_config_file(cli.config, sub, setters);
  }

  if (cli.m_max < 1) throw std::invalid_argument("--m-max must be at least 1");
  if (cli.n_max < 1) throw std::invalid_argument("--n-max must be at least 1");

  ordered_json bundles_json = ordered_json::array();
  for (int bundle = 1; bundle <= 2; ++bundle) {
    ordered_json rows = ordered_json::array();
    for (int m = 1; m <= cli.m_max; ++m) {
      const auto exact =
          isospec::closed_form_half_rational(bundle_from_int(bundle), m);
      ordered_json vals = ordered_json::array();
      for (const auto& q : exact) {
        vals.push_back({{"exact", q.get_str()}, {"value", q.get_d()}});
      }
      rows.push_back({{"m", m}, {"multiplicity", m + 1}, {"eigenvalues", vals}});
    }
    bundles_json.push_back({{"bundle", bundle}, {"rows", rows}});
  }

  ordered_json projective = ordered_json::array();
  for (const auto& entry : isospec::projective_spectrum(2 * cli.n_max - 1, 1.0)) {
    projective.push_back(
        {{"eigenvalue", entry.eigenvalue}, {"multiplicity", entry.multiplicity}});
  }

  // The two multiplicity routes side by side: the integer-division closed
  // form and the harmonic-dimension formula re-indexed by n = m - 1.
  ordered_json constant = ordered_json::array();
  const auto cc = isospec::constant_curvature_spectrum(cli.n_max, 1.0);
  for (int n = 0; n <= cli.n_max; ++n) {
    constant.push_back(
        {{"n", n},
         {"eigenvalue", cc[n].eigenvalue},
         {"multiplicity", cc[n].multiplicity},
         {"harmonic_dim_reindexed",
          isospec::equivariant_harmonic_dim_formula(2 * (n + 1))}});
  }

  if (cli.format == "json") {
    ordered_json j;
    j["half_leaf"] = {{"b", 0.5}, {"r", 1.0}, {"bundles", bundles_json},
                      {"note", "bundle 3 equals bundle 1"}};
    j["projective"] = {{"r0", 1.0}, {"entries", projective}};
    j["constant_curvature"] = {{"r", 1.0}, {"entries", constant}};
    write_output(cli.out, j.dump(2) + "\n");
    return kExitOk;
  }
  if (cli.format != "text") {
    throw std::invalid_argument("--format must be text or json");
  }

  std::ostringstream body;
  body << "closed-form eigenvalues at b=1/2, r=1 (bundle 3 equals bundle 1):\n";
  for (const auto& bj : bundles_json) {
    body << "  bundle " << bj["bundle"] << ":\n";
    for (const auto& row : bj["rows"]) {
      body << "    m=" << row["m"] << " (multiplicity " << row["multiplicity"]
           << "): ";
      bool first = true;
      for (const auto& v : row["eigenvalues"]) {
        if (!first) body << ", ";
        body << v["exact"].get<std::string>();
        first = false;
      }
      body << "\n";
    }
  }
  body << "focal projective-plane spectrum (r0=1): lambda = n(n+1)/3, odd n:\n";
  for (const auto& e : projective) {
    body << "  " << e["eigenvalue"] << " (multiplicity " << e["multiplicity"]
         << ")\n";
  }
  body << "constant-curvature spectrum (r=1), multiplicity via both routes:\n";
  for (const auto& e : constant) {
    body << "  n=" << e["n"] << "  lambda=" << e["eigenvalue"] << "  mult "
         << e["multiplicity"] << "  harmonic-dim re-index "
         << e["harmonic_dim_reindexed"] << "\n";
  }
  write_output(cli.out, body.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "isospec: pseudorotational spectra of orbital triplets as connection-"
      "Laplacian eigenvalues over the isoparametric foliation of S^4"};
  app.require_subcommand(1);

  SweepCli sweep_cli;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep Casimir-block eigenvalues over a grid of leaf parameters b");
  sweep->add_option("--config", sweep_cli.config,
                    "Config file with key=value lines; flags win");
  sweep->add_option("--bundle", sweep_cli.bundle, "Bundle: 1, 2, 3 or all")
      ->capture_default_str();
  sweep->add_option("--m-max", sweep_cli.m_max, "Largest representation index m")
      ->capture_default_str();
  sweep->add_option("--b-min", sweep_cli.b_min, "Grid start (in (0,1))");
  sweep->add_option("--b-max", sweep_cli.b_max, "Grid end (in (0,1))");
  sweep->add_option("--steps", sweep_cli.steps, "Number of uniform grid points");
  sweep->add_option("--r", sweep_cli.r, "Leaf radius")->capture_default_str();
  sweep->add_option("--format", sweep_cli.format, "csv or json")
      ->capture_default_str();
  sweep->add_option("--out", sweep_cli.out, "Output path (default: stdout)");
  sweep->add_option("--omega1-variant", sweep_cli.omega1_variant,
                    "Bundle 1/3 entry set: published or corrected")
      ->capture_default_str();
  sweep->add_option("--omega2-variant", sweep_cli.omega2_variant,
                    "Bundle 2 entry set: published or corrected")
      ->capture_default_str();
  sweep->add_flag("--limits", sweep_cli.limits,
                  "Append focal-limit diagnostics (odd m, bundles 1/3)");
  sweep->add_flag("--no-continuity", sweep_cli.no_continuity,
                  "Skip the branch-continuity check");
  sweep->add_option("--threads", sweep_cli.threads,
                    "Worker cap (0 = machine parallelism; ISOSPEC_THREADS also caps)");

  ReconcileCli reconcile_cli;
  CLI::App* reconcile = app.add_subcommand(
      "reconcile", "Compare tabulated Casimir blocks with the isotypic oracle");
  reconcile->add_option("--config", reconcile_cli.config,
                        "Config file with key=value lines; flags win");
  reconcile->add_option("--m-max", reconcile_cli.m_max, "Largest m")
      ->capture_default_str();
  reconcile->add_option("--b", reconcile_cli.bs,
                        "Leaf parameter; repeatable (default: 1/4, 1/2, 3/4)");
  reconcile->add_option("--r", reconcile_cli.r, "Leaf radius")->capture_default_str();
  reconcile->add_option("--format", reconcile_cli.format, "text or json")
      ->capture_default_str();
  reconcile->add_option("--out", reconcile_cli.out, "Output path (default: stdout)");
  reconcile->add_option("--omega1-variant", reconcile_cli.omega1_variant,
                        "Bundle 1/3 entry set")
      ->capture_default_str();
  reconcile->add_option("--omega2-variant", reconcile_cli.omega2_variant,
                        "Bundle 2 entry set")
      ->capture_default_str();

  GeometryCli geometry_cli;
  CLI::App* geometry = app.add_subcommand(
      "geometry", "Closed-form leaf geometry with the finite-difference oracle");
  geometry->add_option("--config", geometry_cli.config,
                       "Config file with key=value lines; flags win");
  geometry->add_option("--b", geometry_cli.b, "Leaf parameter in (0,1)")
      ->capture_default_str();
  geometry->add_option("--r0", geometry_cli.r0, "Ambient sphere radius")
      ->capture_default_str();
  geometry->add_option("--format", geometry_cli.format, "text or json")
      ->capture_default_str();
  geometry->add_option("--out", geometry_cli.out, "Output path (default: stdout)");

  ClosedFormsCli closed_cli;
  CLI::App* closed = app.add_subcommand(
      "closed-forms", "Exact b=1/2 eigenvalues and the focal/constant-curvature tables");
  closed->add_option("--config", closed_cli.config,
                     "Config file with key=value lines; flags win");
  closed->add_option("--m-max", closed_cli.m_max, "Largest m")->capture_default_str();
  closed->add_option("--n-max", closed_cli.n_max, "Largest n for the tables")
      ->capture_default_str();
  closed->add_option("--format", closed_cli.format, "text or json")
      ->capture_default_str();
  closed->add_option("--out", closed_cli.out, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (sweep->parsed()) return run_sweep_command(sweep_cli, sweep);
    if (reconcile->parsed()) return run_reconcile_command(reconcile_cli, reconcile);
    if (geometry->parsed()) return run_geometry_command(geometry_cli, geometry);
    if (closed->parsed()) return run_closed_forms_command(closed_cli, closed);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
