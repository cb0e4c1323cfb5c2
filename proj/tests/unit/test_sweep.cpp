#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "isospec/sweep.hpp"

using namespace isospec;

namespace {

SweepConfig explicit_grid_config() {
  SweepConfig config;
  config.bundles = {Bundle::eta1};
  config.m_max = 1;
  config.b_min = 0.3;
  config.b_max = 0.7;
  config.steps = 3;
  return config;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("config validation messages") {
  SweepConfig config;
  config.bundles = {};
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = SweepConfig{};
  config.m_max = 0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = SweepConfig{};
  config.b_min = 0.2;  // missing b_max and steps
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = explicit_grid_config();
  config.steps = 1;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = explicit_grid_config();
  config.b_min = 0.8;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = explicit_grid_config();
  config.b_max = 1.2;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  config = explicit_grid_config();
  config.r = -1.0;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);

  CHECK_NOTHROW(explicit_grid_config().validate());
}

TEST_CASE("default grid is refined near the focal ends") {
  const SweepConfig config;
  const std::vector<double> grid = config.b_grid();
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());
  for (double b : {1e-4, 1e-3, 1e-2, 1e-1, 0.5}) {
    CHECK(std::count(grid.begin(), grid.end(), b) == 1);
    CHECK(std::count(grid.begin(), grid.end(), 1.0 - b) == 1);
  }
  CHECK(grid.size() >= 199);
  CHECK(grid.front() == 1e-4);
  CHECK(grid.back() == 1.0 - 1e-4);
}

TEST_CASE("single-branch sweep passes through the closed-form point") {
  const auto traces = run_sweep(explicit_grid_config());
  REQUIRE(traces.size() == 1);
  const BranchTrace& trace = traces.front();
  CHECK(trace.bundle == Bundle::eta1);
  CHECK(trace.m == 1);
  CHECK(trace.l == 0);
  CHECK(trace.multiplicity == 2);
  REQUIRE(trace.samples.size() == 3);
  CHECK(trace.samples[1].first == doctest::Approx(0.5));
  CHECK(trace.samples[1].second == doctest::Approx(1.25).epsilon(1e-13));
}

TEST_CASE("branch counts match the block sizes") {
  SweepConfig config = explicit_grid_config();
  config.bundles = {Bundle::eta1, Bundle::eta2, Bundle::eta3};
  config.m_max = 6;
  const auto traces = run_sweep(config);
  for (Bundle bundle : config.bundles) {
    for (int m = 1; m <= config.m_max; ++m) {
      const auto count = std::count_if(
          traces.begin(), traces.end(), [&](const BranchTrace& t) {
            return t.bundle == bundle && t.m == m;
          });
      CHECK(count == (m % 2 == 1 ? (m + 1) / 2 : m / 2));
      // Eigenvalue count with multiplicity per m.
      CHECK(count * (m + 1) == (m % 2 == 1 ? (m + 1) / 2 : m / 2) * (m + 1));
    }
  }
}

TEST_CASE("bundle 3 sweep is bundle 1 reflected") {
  SweepConfig config = explicit_grid_config();
  config.m_max = 4;
  config.bundles = {Bundle::eta1, Bundle::eta3};
  const auto traces = run_sweep(config);
  for (const BranchTrace& trace : traces) {
    if (trace.bundle != Bundle::eta3) continue;
    const auto partner = std::find_if(
        traces.begin(), traces.end(), [&](const BranchTrace& t) {
          return t.bundle == Bundle::eta1 && t.m == trace.m && t.l == trace.l;
        });
    REQUIRE(partner != traces.end());
    for (const auto& [b, val] : trace.samples) {
      const auto mirrored = std::find_if(
          partner->samples.begin(), partner->samples.end(),
          [&](const auto& s) { return std::abs(s.first - (1.0 - b)) < 1e-12; });
      REQUIRE(mirrored != partner->samples.end());
      CHECK(val == doctest::Approx(mirrored->second).epsilon(1e-12));
    }
  }
}

TEST_CASE("bundle 2 mirror symmetry depends on the entry variant") {
  SweepConfig config = explicit_grid_config();
  config.bundles = {Bundle::eta2};
  config.m_max = 4;
  config.omega.omega2 = OmegaVariant::corrected;
  const auto corrected = run_sweep(config);
  for (const BranchTrace& trace : corrected) {
    const double front = trace.samples.front().second;   // b = 0.3
    const double back = trace.samples.back().second;     // b = 0.7
    CHECK(front == doctest::Approx(back).epsilon(1e-11));
  }

  config.omega.omega2 = OmegaVariant::published;
  const auto published = run_sweep(config);
  double max_asymmetry = 0.0;
  for (const BranchTrace& trace : published) {
    max_asymmetry = std::max(max_asymmetry,
                             std::abs(trace.samples.front().second -
                                      trace.samples.back().second));
  }
  CHECK(max_asymmetry > 1e-3);  // the published even-m entries break the mirror
}

TEST_CASE("CSV emission is exact and deterministic") {
  const auto traces = run_sweep(explicit_grid_config());
  std::ostringstream first, second;
  emit_csv(first, traces);
  emit_csv(second, run_sweep(explicit_grid_config()));
  CHECK(first.str() == second.str());

  std::istringstream lines(first.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "bundle,m,l,b,eigenvalue,multiplicity");
  std::getline(lines, line);  // b = 0.3
  std::getline(lines, line);  // b = 0.5
  CHECK(line == "1,1,0,0.5,1.25,2");
}

TEST_CASE("17-digit formatting") {
  CHECK(format_double17(0.5) == "0.5");
  CHECK(format_double17(1.25) == "1.25");
  CHECK(format_double17(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("JSON omits empty diagnostics") {
  const SweepConfig config = explicit_grid_config();
  const auto traces = run_sweep(config);
  std::ostringstream out;
  emit_json(out, config, traces, {}, nullptr);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(!j.contains("diagnostics"));
  CHECK(j["config"]["m_max"] == 1);
  CHECK(j["config"]["r"] == 1.0);
  REQUIRE(j["traces"].size() == 1);
  CHECK(j["traces"][0]["bundle"] == 1);
  CHECK(j["traces"][0]["multiplicity"] == 2);
  REQUIRE(j["traces"][0]["samples"].size() == 3);

  // With findings attached the section appears.
  std::vector<ContinuityFinding> findings{{Bundle::eta1, 1, 0, 0.3, 0.5, 1.0, 0.1}};
  std::ostringstream out2;
  emit_json(out2, config, traces, findings, nullptr);
  const auto j2 = nlohmann::json::parse(out2.str());
  CHECK(j2["diagnostics"]["continuity_findings"].size() == 1);
}

TEST_CASE("continuity check flags an artificial jump") {
  BranchTrace trace{Bundle::eta1, 1, 0, 2, {}};
  for (int k = 0; k <= 40; ++k) {
    const double b = 0.2 + 0.01 * k;
    double value = 1.0 + 0.1 * b;
    if (b > 0.4) value += 5.0;  // sudden step
    trace.samples.emplace_back(b, value);
  }
  const auto findings = check_branch_continuity({trace});
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].b_lo == doctest::Approx(0.4));
  CHECK(findings[0].jump == doctest::Approx(5.0 + 0.001).epsilon(1e-6));

  // A smooth branch yields no findings.
  BranchTrace smooth{Bundle::eta1, 1, 0, 2, {}};
  for (int k = 0; k <= 40; ++k) {
    const double b = 0.2 + 0.01 * k;
    smooth.samples.emplace_back(b, 1.0 + 0.1 * b * b);
  }
  CHECK(check_branch_continuity({smooth}).empty());
}

TEST_CASE("limit diagnostics flow to the focal spectrum") {
  const LimitDiagnostics diag = limit_diagnostics(Bundle::eta1, {1, 3}, 1.0);
  REQUIRE(diag.flows.size() == 2);
  CHECK(diag.flows[0].m == 1);
  CHECK(diag.flows[0].reference == doctest::Approx(2.0 / 3.0));
  CHECK(diag.flows[0].pass);
  CHECK(diag.flows[1].m == 3);
  CHECK(diag.flows[1].reference == doctest::Approx(4.0));
  CHECK(diag.flows[1].pass);
  REQUIRE(diag.branches.size() == 1);  // m=3, l=1
  CHECK(diag.branches[0].divergent);

  // Bundle 3 mirrors toward b -> 1.
  const LimitDiagnostics diag3 = limit_diagnostics(Bundle::eta3, {1}, 1.0);
  CHECK(diag3.flows[0].samples.front().first == doctest::Approx(0.9));
  CHECK(diag3.flows[0].pass);

  CHECK_THROWS_AS(limit_diagnostics(Bundle::eta2, {1}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(limit_diagnostics(Bundle::eta1, {2}, 1.0), std::invalid_argument);
}

}  // TEST_SUITE
