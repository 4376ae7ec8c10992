#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "radonsvm/dataset_io.hpp"
#include "radonsvm/json_report.hpp"
#include "radonsvm/radon_analysis.hpp"
#include "radonsvm/rng.hpp"
#include "radonsvm/svg_plot.hpp"

using namespace radonsvm;

TEST_CASE("csv parsing accepts all label spellings") {
  std::istringstream in("y,x1,x2\n+1,1.5,2\n-1,0,0\n1,3,4\n");
  LabeledPointSet d = read_labeled_csv(in);
  REQUIRE(d.size() == 3);
  CHECK(d.dim == 2);
  CHECK(d.labels == std::vector<int>{1, -1, 1});
  CHECK(d.points[0] == Vec{1.5, 2.0});
}

TEST_CASE("csv errors carry line numbers") {
  std::istringstream bad_label("y,x1\n2,1\n");
  CHECK_THROWS_WITH_AS(read_labeled_csv(bad_label),
                       "line 2: label must be -1, +1 or 1, got '2'", CsvError);

  std::istringstream short_row("y,x1,x2\n+1,1\n");
  CHECK_THROWS_WITH_AS(read_labeled_csv(short_row), "line 2: expected 3 fields, got 2", CsvError);

  std::istringstream bad_number("y,x1\n+1,abc\n");
  CHECK_THROWS_WITH_AS(read_labeled_csv(bad_number), "line 2: cannot parse x1 'abc'", CsvError);

  std::istringstream bad_header("x1,y\n");
  CHECK_THROWS_AS(read_labeled_csv(bad_header), CsvError);

  std::istringstream nonfinite("y,x1\n+1,inf\n");
  CHECK_THROWS_AS(read_labeled_csv(nonfinite), CsvError);
}

TEST_CASE("csv round trip is exact") {
  SplitMix64 rng(13);
  LabeledPointSet d;
  d.dim = 3;
  for (int i = 0; i < 25; ++i) {
    Vec p(3);
    for (double& v : p) v = rng.next_gaussian() * 1e3;
    d.points.push_back(std::move(p));
    d.labels.push_back(rng.next_unit() < 0.5 ? -1 : 1);
  }
  std::ostringstream out;
  write_labeled_csv(out, d);
  std::istringstream in(out.str());
  LabeledPointSet back = read_labeled_csv(in);
  REQUIRE(back.size() == d.size());
  CHECK(back.dim == d.dim);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(back.labels[i] == d.labels[i]);
    for (std::size_t j = 0; j < d.dim; ++j) CHECK(back.points[i][j] == d.points[i][j]);
  }
}

TEST_CASE("json reports are schema stable") {
  LabeledPointSet d{2, {{0, 1}, {0, -1}, {2, 0}}, {-1, -1, 1}};
  SvmSolution s = train_hard_margin(d);
  SupportSets sets = support_vectors(s, d);

  nlohmann::json j = solution_to_json(s, sets);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "svm_solution");
  for (const char* key : {"w", "b", "margin", "alphas", "support_indices",
                          "dual_support_indices", "degenerate_support_set", "solver"})
    CHECK(j.contains(key));
  CHECK(j["w"].size() == 2);
  CHECK(std::isfinite(j["b"].get<double>()));

  nlohmann::json cfg = configuration_to_json(classify_configuration(s, d));
  CHECK(cfg["schema"] == 1);
  CHECK(cfg["n_pos_sv"] == 1);
  CHECK(cfg["n_neg_sv"] == 2);

  RadonCertificate cert = radon_partition(PointSet{2, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}});
  nlohmann::json cj = certificate_to_json(cert);
  CHECK(cj["schema"] == 1);
  CHECK(cj["part_one"].size() + cj["part_two"].size() == 4);

  ExperimentConfig ecfg;
  ecfg.trials = 5;
  ecfg.a = 20.0;
  ecfg.seed = 2;
  nlohmann::json censj = census_to_json(census(ecfg));
  CHECK(censj["schema"] == 1);
  CHECK(censj["config"]["a"] == 20.0);
  CHECK(censj["two_sv_fraction"].is_number());

  PrecisionAuditRecord rec = precision_audit(s, d);
  nlohmann::json aj = audit_to_json(rec);
  CHECK(aj["cause"] == "none");
}

TEST_CASE("svg plot draws the decision geometry") {
  LabeledPointSet d{2, {{0, 1}, {0, -1}, {2, 0}}, {-1, -1, 1}};
  SvmSolution s = train_hard_margin(d);
  Vec rp = radon_point_from_duals(s, d);
  std::ostringstream out;
  plot_svg(out, d, &s, &rp);
  std::string svg = out.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);   // margin lines
  CHECK(svg.find("<rect") != std::string::npos);              // negative glyphs
  CHECK(svg.find("<circle") != std::string::npos);            // positive + rings
  CHECK(svg.find("<path") != std::string::npos);              // radon marker

  LabeledPointSet d3{3, {{0, 0, 0}, {1, 1, 1}}, {-1, 1}};
  std::ostringstream dummy;
  CHECK_THROWS_WITH_AS(plot_svg(dummy, d3, nullptr, nullptr), "plotting is 2-D only",
                       std::invalid_argument);
}
