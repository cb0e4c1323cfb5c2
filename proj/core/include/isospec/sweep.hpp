#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "isospec/rep_spectra.hpp"

namespace isospec {

enum class OutputFormat { csv, json };

/// Parameters of one spectral-flow sweep over the leaf parameter b.
/// When b_min/b_max/steps are unset, the grid defaults to 199 uniform
/// interior points plus geometric refinement 10^-1..10^-4 near both ends.
struct SweepConfig {
  std::vector<Bundle> bundles = {Bundle::eta1};
  int m_max = 1;
  std::optional<double> b_min;
  std::optional<double> b_max;
  std::optional<int> steps;
  double r = 1.0;
  OutputFormat format = OutputFormat::csv;
  OmegaOptions omega;
  bool with_limit_diagnostics = false;
  bool with_continuity_check = true;
  int max_threads = 0;  // 0: hardware concurrency, capped by ISOSPEC_THREADS

  void validate() const;           // throws std::invalid_argument
  std::vector<double> b_grid() const;
};

/// One eigenvalue branch: the l-th (ascending) eigenvalue of the bundle's
/// m-th Casimir block, sampled over the b grid.
struct BranchTrace {
  Bundle bundle;
  int m;
  int l;
  int multiplicity;
  std::vector<std::pair<double, double>> samples;  // (b, eigenvalue)
};

/// Deterministic for a fixed config regardless of thread count: grid points
/// are evaluated concurrently and merged by (bundle, m, l, b).
std::vector<BranchTrace> run_sweep(const SweepConfig& config);

/// A jump between consecutive grid samples exceeding the per-branch bound;
/// reported, never reordered (a large jump usually flags an eigenvalue
/// crossing relabelled by the ascending-order convention).
struct ContinuityFinding {
  Bundle bundle;
  int m, l;
  double b_lo, b_hi;
  double jump;
  double bound;
};

std::vector<ContinuityFinding> check_branch_continuity(
    const std::vector<BranchTrace>& traces);

/// Focal-limit diagnostics for bundle 1 (b -> 0) or bundle 3 (b -> 1):
/// Aitken-extrapolated limits of the lowest branch for odd m against
/// m(m+1)/(3r^2), and divergence classification of every other branch.
struct LimitDiagnostics {
  struct Flow {
    int m;
    std::vector<std::pair<double, double>> samples;  // (b, lowest eigenvalue)
    double extrapolated;
    double reference;
    double rel_error;
    bool pass;  // within 0.5%
  };
  struct Divergence {
    int m, l;
    double value_at_half;
    double value_near_focal;  // at b = 1e-3 from the focal end
    double growth_ratio;
    bool divergent;  // ratio > 10 and monotone growth toward the end
  };

  Bundle bundle = Bundle::eta1;
  double r = 1.0;
  std::vector<Flow> flows;
  std::vector<Divergence> branches;
};

LimitDiagnostics limit_diagnostics(Bundle bundle, const std::vector<int>& m_list,
                                   double r, const OmegaOptions& options = {});

/// 17-significant-digit, locale-independent decimal formatting.
std::string format_double17(double x);

/// CSV: header `bundle,m,l,b,eigenvalue,multiplicity`, LF endings, rows
/// sorted by (bundle, m, l, b); byte-identical across runs for one config.
void emit_csv(std::ostream& out, const std::vector<BranchTrace>& traces);

/// JSON: config echo plus the traces; diagnostics sections are omitted
/// when empty.
void emit_json(std::ostream& out, const SweepConfig& config,
               const std::vector<BranchTrace>& traces,
               const std::vector<ContinuityFinding>& continuity,
               const LimitDiagnostics* limits);

/// Writes in the configured format; wraps I/O failures in
/// std::runtime_error carrying the path.
void emit_to_file(const std::string& path, const SweepConfig& config,
                  const std::vector<BranchTrace>& traces,
                  const std::vector<ContinuityFinding>& continuity,
                  const LimitDiagnostics* limits);

}  // namespace isospec
