#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dwell/sweep.hpp"

using namespace dwell;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() /
             ("dwell-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

SweepSpec small_spec() {
  SweepSpec spec;
  spec.alpha_values = {1.0};
  spec.beta_grid = {0.0, 2.0, 0.5};
  spec.states = {0};
  spec.measures = {"fisher"};
  spec.basis_size = 40;
  return spec;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("grid shape and canonical header") {
  auto dir = scratch_dir();
  SweepSpec spec;
  spec.alpha_values = {1.0};
  spec.beta_grid = {0.0, 10.0, 0.25};
  spec.states = {0, 1};
  spec.measures = {"shannon"};
  spec.basis_size = 60;
  spec.output_path = (dir / "grid.csv").string();
  SweepResult res = run_sweep(spec);

  CHECK(res.rows.size() == 82);  // 41 beta points x 2 states
  REQUIRE(res.columns.size() == 3);
  CHECK(res.columns[0] == "shannon_x");
  CHECK(res.columns[1] == "shannon_p");
  CHECK(res.columns[2] == "shannon_total");

  auto text = lines_of(slurp(dir / "grid.csv"));
  REQUIRE(text.size() == 83);
  CHECK(text[0] == "alpha,beta,state,shannon_x,shannon_p,shannon_total");
  fs::remove_all(dir);
}

TEST_CASE("column families follow the canonical order regardless of request") {
  SweepSpec spec = small_spec();
  spec.measures = {"sigma", "fisher", "os"};
  SweepResult res = run_sweep(spec);
  REQUIRE(res.columns.size() == 8);
  const char* want[] = {"fisher_x", "fisher_p", "fisher_net", "os_x",
                        "os_p",     "os_net",   "sigma_x",    "sigma_p"};
  for (size_t i = 0; i < 8; ++i) CHECK(res.columns[i] == want[i]);
}

TEST_CASE("rows come back sorted even from unsorted requests") {
  SweepSpec spec = small_spec();
  spec.alpha_values = {2.0, 1.0};
  spec.states = {1, 0};
  SweepResult res = run_sweep(spec);
  REQUIRE(res.rows.size() == 2 * 5 * 2);
  for (size_t i = 1; i < res.rows.size(); ++i) {
    const auto& a = res.rows[i - 1];
    const auto& b = res.rows[i];
    bool ordered = a.alpha < b.alpha ||
                   (a.alpha == b.alpha &&
                    (a.beta < b.beta ||
                     (a.beta == b.beta && a.state < b.state)));
    CHECK(ordered);
  }
}

TEST_CASE("csv output is byte-stable across runs and thread counts") {
  auto dir = scratch_dir();
  SweepSpec spec = small_spec();
  spec.beta_grid = {0.0, 3.0, 0.25};
  spec.measures = {"shannon", "tunneling"};
  spec.output_path = (dir / "a.csv").string();
  spec.threads = 1;
  run_sweep(spec);
  spec.output_path = (dir / "b.csv").string();
  spec.threads = 4;
  run_sweep(spec);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  fs::remove_all(dir);
}

TEST_CASE("json rows carry the same tokens as csv") {
  auto dir = scratch_dir();
  SweepSpec spec = small_spec();
  spec.output_path = (dir / "rows.csv").string();
  run_sweep(spec);
  spec.output_path = (dir / "rows.json").string();
  spec.format = SweepFormat::JSON;
  run_sweep(spec);

  auto csv = lines_of(slurp(dir / "rows.csv"));
  std::string json = slurp(dir / "rows.json");
  REQUIRE(csv.size() > 1);
  for (size_t i = 1; i < csv.size(); ++i) {
    std::istringstream row(csv[i]);
    std::string alpha, beta, state, token;
    std::getline(row, alpha, ',');
    std::getline(row, beta, ',');
    std::getline(row, state, ',');
    CHECK(json.find("\"beta\":" + beta) != std::string::npos);
    int col = 0;
    const char* names[] = {"fisher_x", "fisher_p", "fisher_net"};
    while (std::getline(row, token, ',')) {
      CHECK(json.find("\"" + std::string(names[col]) + "\":" + token) !=
            std::string::npos);
      ++col;
    }
    CHECK(col == 3);
  }
  fs::remove_all(dir);
}

TEST_CASE("validation failures") {
  SweepSpec spec = small_spec();
  spec.measures = {"nonsense"};
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
  spec = small_spec();
  spec.measures = {};
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
  spec = small_spec();
  spec.states = {};
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
  spec = small_spec();
  spec.beta_grid.step = 0.0;
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
  spec = small_spec();
  spec.beta_grid.stop = -1.0;
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
  spec = small_spec();
  spec.states = {40};  // >= basis_size
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
  spec = small_spec();
  spec.alpha_values = {};
  CHECK_THROWS_AS(run_sweep(spec), InvalidSpecError);
}

TEST_CASE("failed writes leave no partial file") {
  SweepSpec spec = small_spec();
  auto dir = scratch_dir();
  spec.output_path = (dir / "missing-subdir" / "out.csv").string();
  CHECK_THROWS_AS(run_sweep(spec), Error);
  CHECK_FALSE(fs::exists(dir / "missing-subdir"));
  CHECK(fs::is_empty(dir));
  fs::remove_all(dir);
}

TEST_CASE("synthetic extremum detection") {
  std::vector<double> betas;
  for (int i = 0; i <= 20; ++i) betas.push_back(0.25 * i);

  SUBCASE("single valley") {
    std::vector<double> v;
    for (double b : betas) v.push_back((b - 2.5) * (b - 2.5));
    auto ex = find_extrema(betas, v, 1e-6, Curve::X, 0);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].beta == 2.5);
    CHECK(ex[0].kind == ExtremumKind::Minimum);
    CHECK(ex[0].curve == Curve::X);
    CHECK(ex[0].order == 0);
  }

  SUBCASE("flat-bottomed valley reports the plateau midpoint") {
    std::vector<double> v;
    for (double b : betas)
      v.push_back(b < 2.0 ? 2.0 - b : (b > 3.0 ? b - 3.0 : 0.0));
    auto ex = find_extrema(betas, v, 1e-6, Curve::P, 0);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].beta == 2.5);
    CHECK(ex[0].kind == ExtremumKind::Minimum);
  }

  SUBCASE("min then max then min") {
    std::vector<double> v;
    for (double b : betas) v.push_back(std::cos(2.0 * b));
    auto ex = find_extrema(betas, v, 1e-6, Curve::X, 0);
    REQUIRE(ex.size() == 3);
    CHECK(ex[0].kind == ExtremumKind::Minimum);
    CHECK(ex[1].kind == ExtremumKind::Maximum);
    CHECK(ex[2].kind == ExtremumKind::Minimum);
    CHECK(ex[0].beta == doctest::Approx(M_PI / 2.0).epsilon(0.15));
    CHECK(ex[1].beta == doctest::Approx(M_PI).epsilon(0.15));
  }

  SUBCASE("wiggles below the noise floor are ignored") {
    std::vector<double> v;
    for (size_t i = 0; i < betas.size(); ++i)
      v.push_back(betas[i] + ((i % 2) ? 1e-8 : -1e-8));
    CHECK(find_extrema(betas, v, 1e-6, Curve::X, 0).empty());
  }

  SUBCASE("length mismatch is rejected") {
    std::vector<double> v(3, 0.0);
    CHECK_THROWS_AS(find_extrema(betas, v, 1e-6, Curve::X, 0),
                    InvalidSpecError);
  }
}

TEST_CASE("synthetic merge points") {
  std::vector<double> betas, a, b;
  for (int i = 0; i <= 10; ++i) {
    betas.push_back(static_cast<double>(i));
    a.push_back(1.0);
  }
  b = a;
  // diffs: large until index 4, tiny from 5 on
  for (int i = 0; i <= 4; ++i) b[i] += 0.5;
  for (int i = 5; i <= 10; ++i) b[i] += 1e-5;
  auto m = merge_point(betas, a, b, 1e-3, 3);
  REQUIRE(m.has_value());
  CHECK(*m == 5.0);

  // an interrupted run postpones the merge
  b[6] = a[6] + 0.5;
  m = merge_point(betas, a, b, 1e-3, 3);
  REQUIRE(m.has_value());
  CHECK(*m == 7.0);

  // no run long enough
  b = a;
  for (int i = 0; i <= 10; ++i) b[i] += (i % 3 == 0) ? 0.5 : 0.0;
  CHECK_FALSE(merge_point(betas, a, b, 1e-3, 3).has_value());

  CHECK_THROWS_AS(merge_point({1.0, 2.0}, a, b, 1e-3, 3), InvalidSpecError);
}

TEST_CASE("derivative report needs a workable grid") {
  SweepSpec spec = small_spec();
  spec.measures = {"shannon"};
  spec.beta_grid = {0.0, 1.0, 0.5};  // 3 points < 5
  CHECK_THROWS_AS(run_derivatives(spec, "shannon"), GridTooCoarseError);
  spec.beta_grid = {0.0, 10.0, 0.25};
  spec.states = {0, 1};  // derivative wants exactly one state
  CHECK_THROWS_AS(run_derivatives(spec, "shannon"), InvalidSpecError);
  spec.states = {0};
  CHECK_THROWS_AS(run_derivatives(spec, "sigma"), InvalidSpecError);
}

TEST_CASE("derivatives of the ground shannon family around the onset") {
  SweepSpec spec;
  spec.alpha_values = {1.0};
  spec.beta_grid = {0.0, 6.0, 0.25};
  spec.states = {0};
  spec.basis_size = 100;
  spec.measures = {"shannon"};
  DerivativeReport rep = run_derivatives(spec, "shannon");
  REQUIRE(rep.beta_grid.size() == 25);
  REQUIRE(rep.d_x.size() == 25);

  // S_x rises fastest near the onset of trapping
  double best_beta = 0.0, best = -1.0;
  for (size_t i = 0; i < rep.beta_grid.size(); ++i)
    if (rep.d_x[i] > best) { best = rep.d_x[i]; best_beta = rep.beta_grid[i]; }
  CHECK(best_beta > 1.9);
  CHECK(best_beta < 2.6);

  // that peak shows up as an order-1 maximum on the X curve
  bool seen = false;
  for (const auto& e : rep.extrema)
    if (e.order == 1 && e.curve == Curve::X &&
        e.kind == ExtremumKind::Maximum && std::abs(e.beta - best_beta) <= 0.5)
      seen = true;
  CHECK(seen);
}

TEST_CASE("shannon pair merge on the real well family") {
  SweepSpec spec;
  spec.alpha_values = {1.0};
  spec.beta_grid = {0.0, 10.0, 0.25};
  spec.states = {0, 1};
  spec.basis_size = 120;
  spec.measures = {"shannon"};
  SweepResult res = run_sweep(spec);

  std::vector<double> betas, s0, s1;
  for (const auto& row : res.rows) {
    double total = row.values[2];
    if (row.state == 0) {
      betas.push_back(row.beta);
      s0.push_back(total);
    } else {
      s1.push_back(total);
    }
  }
  REQUIRE(betas.size() == 41);

  // by beta = 10 the doublet is entropically indistinguishable
  CHECK(std::abs(s0.back() - s1.back()) < 1e-4);

  // the default tolerance and a figure-reading tolerance bracket the merge;
  // the curves cross near beta = 6, so the tight run only survives once the
  // post-crossing bump has decayed
  auto tight = merge_point(betas, s0, s1);
  auto loose = merge_point(betas, s0, s1, 0.02, 3);
  REQUIRE(tight.has_value());
  REQUIRE(loose.has_value());
  CHECK(*loose <= *tight);
  CHECK(*loose >= 4.75);
  CHECK(*loose <= 5.5);
  CHECK(*tight >= 6.5);
  CHECK(*tight <= 8.5);
}

}  // TEST_SUITE
