#include "isospec/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace isospec {

namespace {

const double kRefinement[] = {1e-1, 1e-2, 1e-3, 1e-4};

int resolve_threads(int requested) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  int cap = static_cast<int>(hw);
  if (const char* env = std::getenv("ISOSPEC_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0) {
      cap = std::min<long>(cap, parsed);
    }
  }
  if (requested > 0) cap = std::min(cap, requested);
  return std::max(1, cap);
}

// Runs fn(i) for i in [0, count) on up to max_threads workers; the first
// exception wins and is rethrown after join.
void parallel_for(std::size_t count, int max_threads,
                  const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<std::size_t>(std::max(1, max_threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

int bundle_index(Bundle b) { return static_cast<int>(b); }

}  // namespace

void SweepConfig::validate() const {
  if (bundles.empty()) {
    throw std::invalid_argument("no bundle selected; pass --bundle 1|2|3|all");
  }
  if (m_max < 1) {
    throw std::invalid_argument("m-max must be at least 1");
  }
  if (!(r > 0.0)) {
    throw std::invalid_argument("r must be positive");
  }
  const bool any = b_min || b_max || steps;
  const bool all = b_min && b_max && steps;
  if (any && !all) {
    throw std::invalid_argument(
        "b-min, b-max and steps must be given together (or all omitted for the "
        "default grid)");
  }
  if (all) {
    if (!(*b_min > 0.0 && *b_min < 1.0) || !(*b_max > 0.0 && *b_max < 1.0)) {
      throw std::invalid_argument("b-min and b-max must lie strictly inside (0,1)");
    }
    if (!(*b_min < *b_max)) {
      throw std::invalid_argument("b-min must be smaller than b-max");
    }
    if (*steps < 2) {
      throw std::invalid_argument("steps must be at least 2");
    }
  }
}

std::vector<double> SweepConfig::b_grid() const {
  std::vector<double> grid;
  if (steps) {
    grid.reserve(*steps);
    for (int k = 0; k < *steps; ++k) {
      grid.push_back(*b_min + (*b_max - *b_min) * k / (*steps - 1));
    }
  } else {
    for (int k = 1; k <= 199; ++k) grid.push_back(k / 200.0);
    for (double b : kRefinement) {
      grid.push_back(b);
      grid.push_back(1.0 - b);
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<BranchTrace> run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> grid = config.b_grid();

  struct Task {
    Bundle bundle;
    int m;
    std::size_t b_index;
  };
  std::vector<Task> tasks;
  for (Bundle bundle : config.bundles) {
    for (int m = 1; m <= config.m_max; ++m) {
      for (std::size_t k = 0; k < grid.size(); ++k) tasks.push_back({bundle, m, k});
    }
  }

  std::vector<std::vector<double>> eigenvalues(tasks.size());
  parallel_for(tasks.size(), resolve_threads(config.max_threads),
               [&](std::size_t idx) {
                 const Task& task = tasks[idx];
                 const CasimirMatrix block = omega(task.bundle, task.m,
                                                   grid[task.b_index], config.r,
                                                   config.omega);
                 eigenvalues[idx] = eigvals_tridiagonal(block.matrix);
               });

  // Deterministic merge keyed by (bundle, m, l, b).
  std::vector<BranchTrace> traces;
  std::size_t idx = 0;
  for (Bundle bundle : config.bundles) {
    for (int m = 1; m <= config.m_max; ++m) {
      const std::size_t first_task = idx;
      const std::size_t branch_count = eigenvalues[first_task].size();
      std::vector<BranchTrace> per_m(branch_count);
      for (std::size_t l = 0; l < branch_count; ++l) {
        per_m[l] = {bundle, m, static_cast<int>(l), m + 1, {}};
        per_m[l].samples.reserve(grid.size());
      }
      for (std::size_t k = 0; k < grid.size(); ++k, ++idx) {
        for (std::size_t l = 0; l < branch_count; ++l) {
          per_m[l].samples.emplace_back(grid[k], eigenvalues[first_task + k][l]);
        }
      }
      for (auto& trace : per_m) traces.push_back(std::move(trace));
    }
  }
  std::sort(traces.begin(), traces.end(),
            [](const BranchTrace& a, const BranchTrace& b) {
              if (a.bundle != b.bundle) return bundle_index(a.bundle) < bundle_index(b.bundle);
              if (a.m != b.m) return a.m < b.m;
              return a.l < b.l;
            });
  return traces;
}

std::vector<ContinuityFinding> check_branch_continuity(
    const std::vector<BranchTrace>& traces) {
  // Scoped to 0.1 <= b <= 0.9: outside that window every branch blows up
  // like a power of the distance to the focal ends and no Lipschitz bound
  // is meaningful. Inside it, a jump far above the neighbouring slopes
  // flags a suspected eigenvalue crossing (relabelled by the ascending-
  // order convention); findings are reported, never reordered.
  std::vector<ContinuityFinding> findings;
  for (const BranchTrace& trace : traces) {
    struct Segment {
      double b_lo, b_hi, slope;
    };
    std::vector<Segment> segments;
    for (std::size_t k = 0; k + 1 < trace.samples.size(); ++k) {
      const double b_lo = trace.samples[k].first;
      const double b_hi = trace.samples[k + 1].first;
      if (b_lo < 0.1 - 1e-12 || b_hi > 0.9 + 1e-12) continue;
      const double slope =
          std::abs(trace.samples[k + 1].second - trace.samples[k].second) /
          (b_hi - b_lo);
      segments.push_back({b_lo, b_hi, slope});
    }
    if (segments.size() < 2) continue;
    for (std::size_t k = 0; k < segments.size(); ++k) {
      double neighbour = 0.0;
      if (k > 0) neighbour = std::max(neighbour, segments[k - 1].slope);
      if (k + 1 < segments.size()) neighbour = std::max(neighbour, segments[k + 1].slope);
      const double bound_slope = 8.0 * neighbour + 1e-9;
      if (segments[k].slope > bound_slope) {
        const double db = segments[k].b_hi - segments[k].b_lo;
        findings.push_back({trace.bundle, trace.m, trace.l, segments[k].b_lo,
                            segments[k].b_hi, segments[k].slope * db,
                            bound_slope * db});
      }
    }
  }
  return findings;
}

LimitDiagnostics limit_diagnostics(Bundle bundle, const std::vector<int>& m_list,
                                   double r, const OmegaOptions& options) {
  if (bundle == Bundle::eta2) {
    throw std::invalid_argument(
        "limit diagnostics apply to bundles 1 and 3 only (bundle 2 blows up at "
        "both ends)");
  }
  LimitDiagnostics diag;
  diag.bundle = bundle;
  diag.r = r;
  auto toward_focal = [bundle](double b) {
    return bundle == Bundle::eta1 ? b : 1.0 - b;
  };

  for (int m : m_list) {
    if (m < 1 || m % 2 == 0) {
      throw std::invalid_argument(
          "limit diagnostics need odd m (even-m branches all blow up)");
    }
    LimitDiagnostics::Flow flow;
    flow.m = m;
    std::vector<double> lowest;
    for (double b : kRefinement) {
      const double bb = toward_focal(b);
      const std::vector<double> vals =
          eigvals_tridiagonal(omega(bundle, m, bb, r, options).matrix);
      flow.samples.emplace_back(bb, vals.front());
      lowest.push_back(vals.front());
    }
    // Aitken delta-squared on the last three samples of the geometric
    // sequence; falls back to the innermost sample when the differences
    // have already collapsed.
    const std::size_t n = lowest.size();
    const double d1 = lowest[n - 1] - lowest[n - 2];
    const double d0 = lowest[n - 2] - lowest[n - 3];
    double extrapolated = lowest[n - 1];
    if (std::abs(d1 - d0) > 1e-300) {
      extrapolated = lowest[n - 1] - d1 * d1 / (d1 - d0);
    }
    flow.extrapolated = extrapolated;
    flow.reference = static_cast<double>(m) * (m + 1) / (3.0 * r * r);
    flow.rel_error = std::abs(flow.extrapolated - flow.reference) / flow.reference;
    flow.pass = flow.rel_error < 0.005;
    diag.flows.push_back(std::move(flow));

    const std::vector<double> at_half =
        eigvals_tridiagonal(omega(bundle, m, 0.5, r, options).matrix);
    const std::vector<double> near =
        eigvals_tridiagonal(omega(bundle, m, toward_focal(1e-3), r, options).matrix);
    for (std::size_t l = 1; l < at_half.size(); ++l) {
      LimitDiagnostics::Divergence branch;
      branch.m = m;
      branch.l = static_cast<int>(l);
      branch.value_at_half = at_half[l];
      branch.value_near_focal = near[l];
      branch.growth_ratio = near[l] / at_half[l];
      bool monotone = true;
      double prev = -std::numeric_limits<double>::infinity();
      for (double b : kRefinement) {
        const std::vector<double> vals =
            eigvals_tridiagonal(omega(bundle, m, toward_focal(b), r, options).matrix);
        if (vals[l] < prev) monotone = false;
        prev = vals[l];
      }
      branch.divergent = branch.growth_ratio > 10.0 && monotone;
      diag.branches.push_back(branch);
    }
  }
  return diag;
}

std::string format_double17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void emit_csv(std::ostream& out, const std::vector<BranchTrace>& traces) {
  out << "bundle,m,l,b,eigenvalue,multiplicity\n";
  for (const BranchTrace& trace : traces) {
    for (const auto& [b, eigenvalue] : trace.samples) {
      out << bundle_index(trace.bundle) << ',' << trace.m << ',' << trace.l << ','
          << format_double17(b) << ',' << format_double17(eigenvalue) << ','
          << trace.multiplicity << '\n';
    }
  }
}

namespace {

const char* variant_name(OmegaVariant v) {
  return v == OmegaVariant::published ? "published" : "corrected";
}

nlohmann::ordered_json config_json(const SweepConfig& config) {
  nlohmann::ordered_json j;
  std::vector<int> bundles;
  for (Bundle b : config.bundles) bundles.push_back(bundle_index(b));
  j["bundles"] = bundles;
  j["m_max"] = config.m_max;
  if (config.steps) {
    j["b_min"] = *config.b_min;
    j["b_max"] = *config.b_max;
    j["steps"] = *config.steps;
  } else {
    j["grid"] = "default";
  }
  j["r"] = config.r;
  j["omega1_variant"] = variant_name(config.omega.omega1);
  j["omega2_variant"] = variant_name(config.omega.omega2);
  return j;
}

}  // namespace

void emit_json(std::ostream& out, const SweepConfig& config,
               const std::vector<BranchTrace>& traces,
               const std::vector<ContinuityFinding>& continuity,
               const LimitDiagnostics* limits) {
  nlohmann::ordered_json j;
  j["config"] = config_json(config);
  nlohmann::ordered_json traces_json = nlohmann::ordered_json::array();
  for (const BranchTrace& trace : traces) {
    nlohmann::ordered_json t;
    t["bundle"] = bundle_index(trace.bundle);
    t["m"] = trace.m;
    t["l"] = trace.l;
    t["multiplicity"] = trace.multiplicity;
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& [b, eigenvalue] : trace.samples) {
      samples.push_back({{"b", b}, {"eigenvalue", eigenvalue}});
    }
    t["samples"] = std::move(samples);
    traces_json.push_back(std::move(t));
  }
  j["traces"] = std::move(traces_json);

  nlohmann::ordered_json diagnostics;
  if (!continuity.empty()) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ContinuityFinding& f : continuity) {
      arr.push_back({{"bundle", bundle_index(f.bundle)},
                     {"m", f.m},
                     {"l", f.l},
                     {"b_lo", f.b_lo},
                     {"b_hi", f.b_hi},
                     {"jump", f.jump},
                     {"bound", f.bound}});
    }
    diagnostics["continuity_findings"] = std::move(arr);
  }
  if (limits != nullptr) {
    nlohmann::ordered_json lim;
    lim["bundle"] = bundle_index(limits->bundle);
    lim["r"] = limits->r;
    nlohmann::ordered_json flows = nlohmann::ordered_json::array();
    for (const auto& flow : limits->flows) {
      nlohmann::ordered_json f;
      f["m"] = flow.m;
      nlohmann::ordered_json samples = nlohmann::ordered_json::array();
      for (const auto& [b, val] : flow.samples) {
        samples.push_back({{"b", b}, {"eigenvalue", val}});
      }
      f["samples"] = std::move(samples);
      f["extrapolated"] = flow.extrapolated;
      f["reference"] = flow.reference;
      f["rel_error"] = flow.rel_error;
      f["pass"] = flow.pass;
      flows.push_back(std::move(f));
    }
    lim["flows"] = std::move(flows);
    nlohmann::ordered_json branches = nlohmann::ordered_json::array();
    for (const auto& branch : limits->branches) {
      branches.push_back({{"m", branch.m},
                          {"l", branch.l},
                          {"value_at_half", branch.value_at_half},
                          {"value_near_focal", branch.value_near_focal},
                          {"growth_ratio", branch.growth_ratio},
                          {"divergent", branch.divergent}});
    }
    lim["divergent_branches"] = std::move(branches);
    diagnostics["limits"] = std::move(lim);
  }
  if (!diagnostics.empty()) {
    j["diagnostics"] = std::move(diagnostics);
  }
  out << j.dump(2) << '\n';
}

void emit_to_file(const std::string& path, const SweepConfig& config,
                  const std::vector<BranchTrace>& traces,
                  const std::vector<ContinuityFinding>& continuity,
                  const LimitDiagnostics* limits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  if (config.format == OutputFormat::csv) {
    emit_csv(out, traces);
  } else {
    emit_json(out, config, traces, continuity, limits);
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

}  // namespace isospec
