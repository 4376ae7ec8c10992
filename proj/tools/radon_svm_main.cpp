// Command-line front end: train hard-margin SVMs, inspect their
// support-vector configurations, test shattering, and run the random census.
// Exit codes: 0 success, 1 domain error (non-separable or degenerate input),
// 2 usage or parse error.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "radonsvm/dataset_io.hpp"
#include "radonsvm/experiments.hpp"
#include "radonsvm/json_report.hpp"
#include "radonsvm/radon_analysis.hpp"
#include "radonsvm/svg_plot.hpp"

namespace {

using namespace radonsvm;

struct Options {
  std::string input_path;
  std::string format = "json";
  std::string plot_path;
  double tol = kDefaultTrainTol;
  double tau = kDefaultSupportTau;
  std::size_t max_iter = kDefaultMaxIter;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  double a = 5.0;
  std::size_t points_per_class = 20;
  std::size_t dim = 2;
};

void emit_flat_csv(const nlohmann::json& j) {
  for (const auto& [key, value] : j.items()) std::cout << key << "," << value.dump() << "\n";
}

void emit(const nlohmann::json& j, const std::string& format) {
  if (format == "csv")
    emit_flat_csv(j);
  else
    std::cout << j.dump(2) << "\n";
}

PointSet as_point_set(const LabeledPointSet& d) { return PointSet{d.dim, d.points}; }

void maybe_plot(const Options& opt, const LabeledPointSet& d, const SvmSolution* sol,
                const Vec* radon) {
  if (!opt.plot_path.empty()) plot_svg_file(opt.plot_path, d, sol, radon);
}

int cmd_train(const Options& opt) {
  LabeledPointSet d = read_labeled_csv_file(opt.input_path);
  SvmSolution sol = train_hard_margin(d, opt.tol, opt.max_iter);
  SupportSets sets = support_vectors(sol, d, opt.tau);
  emit(solution_to_json(sol, sets), opt.format);
  maybe_plot(opt, d, &sol, nullptr);
  return 0;
}

int cmd_radon(const Options& opt) {
  LabeledPointSet d = read_labeled_csv_file(opt.input_path);
  RadonCertificate cert = radon_partition(as_point_set(d));
  emit(certificate_to_json(cert), opt.format);
  if (!opt.plot_path.empty()) {
    // Color the plot by the partition rather than the file labels.
    LabeledPointSet parts{d.dim, {}, {}};
    for (std::size_t i = 0; i < cert.coefficients.size(); ++i) {
      parts.points.push_back(d.points[i]);
      parts.labels.push_back(cert.coefficients[i] > 0.0 ? 1 : -1);
    }
    plot_svg_file(opt.plot_path, parts, nullptr, &cert.radon_point);
  }
  return 0;
}

int cmd_analyze(const Options& opt) {
  LabeledPointSet d = read_labeled_csv_file(opt.input_path);
  SvmSolution sol = train_hard_margin(d, opt.tol, opt.max_iter);
  ConfigurationReport rep = classify_configuration(sol, d, opt.tau);
  emit(configuration_to_json(rep), opt.format);
  maybe_plot(opt, d, &sol, rep.radon_point.empty() ? nullptr : &rep.radon_point);
  return 0;
}

int cmd_shatter(const Options& opt) {
  LabeledPointSet d = read_labeled_csv_file(opt.input_path);
  ShatterReport rep = shatter_check(as_point_set(d));
  emit(shatter_to_json(rep), opt.format);
  if (!opt.plot_path.empty()) {
    LabeledPointSet shown = d;
    if (!rep.shatterable) shown.labels = rep.witness_labels;
    plot_svg_file(opt.plot_path, shown, nullptr, nullptr);
  }
  return 0;
}

int cmd_audit(const Options& opt) {
  LabeledPointSet d = read_labeled_csv_file(opt.input_path);
  SvmSolution sol = train_hard_margin(d, opt.tol, opt.max_iter);
  PrecisionAuditRecord rec = precision_audit(sol, d, opt.tau);
  emit(audit_to_json(rec), opt.format);
  maybe_plot(opt, d, &sol, nullptr);
  return 0;
}

int cmd_census(const Options& opt) {
  ExperimentConfig cfg;
  cfg.a = opt.a;
  cfg.points_per_class = opt.points_per_class;
  cfg.dim = opt.dim;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.train_tol = opt.tol;
  cfg.train_max_iter = opt.max_iter;
  cfg.tau = opt.tau;
  CensusResult res = census(cfg);
  if (opt.format == "csv") {
    std::cout << "trial,n_pos_sv,n_neg_sv,margin,flags\n";
    for (const auto& rec : res.per_trial)
      std::cout << rec.trial << "," << rec.n_pos_sv << "," << rec.n_neg_sv << "," << rec.margin
                << ",\"" << rec.flags << "\"\n";
  } else {
    std::cout << census_to_json(res).dump(2) << "\n";
  }
  if (!opt.plot_path.empty() && opt.dim == 2) {
    LabeledPointSet sample = generate_trial(cfg, 0);
    SvmSolution sol = train_hard_margin(sample, cfg.train_tol, cfg.train_max_iter);
    plot_svg_file(opt.plot_path, sample, &sol, nullptr);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hard-margin SVM trainer and support-vector configuration analyzer"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("input", opt.input_path, "CSV dataset (header y,x1,...,xn)")->required();
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--plot", opt.plot_path, "Write an SVG figure (2-D data only)");
    sub->add_option("--tol", opt.tol, "Trainer KKT tolerance")->capture_default_str();
    sub->add_option("--tau", opt.tau, "Margin-membership tolerance")->capture_default_str();
    sub->add_option("--max-iter", opt.max_iter, "Trainer pair-update budget")
        ->capture_default_str();
  };

  CLI::App* train = app.add_subcommand("train", "Train and print the solution");
  add_common(train, true);
  CLI::App* radon = app.add_subcommand("radon", "Radon partition of the points (labels ignored)");
  add_common(radon, true);
  CLI::App* analyze = app.add_subcommand("analyze", "Train and classify the configuration");
  add_common(analyze, true);
  CLI::App* shatter = app.add_subcommand("shatter", "Shattering check (labels ignored)");
  add_common(shatter, true);
  CLI::App* audit = app.add_subcommand("audit", "Support-vector count precision audit");
  add_common(audit, true);
  CLI::App* census_cmd = app.add_subcommand("census", "Monte Carlo configuration census");
  add_common(census_cmd, false);
  census_cmd->add_option("--a", opt.a, "Half-width of the center square")->capture_default_str();
  census_cmd->add_option("--trials", opt.trials, "Number of trials")->capture_default_str();
  census_cmd->add_option("--seed", opt.seed, "Census seed")->capture_default_str();
  census_cmd->add_option("--points-per-class", opt.points_per_class, "Points per class")
      ->capture_default_str();
  census_cmd->add_option("--dim", opt.dim, "Ambient dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (train->parsed()) return cmd_train(opt);
    if (radon->parsed()) return cmd_radon(opt);
    if (analyze->parsed()) return cmd_analyze(opt);
    if (shatter->parsed()) return cmd_shatter(opt);
    if (audit->parsed()) return cmd_audit(opt);
    if (census_cmd->parsed()) return cmd_census(opt);
  } catch (const CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
