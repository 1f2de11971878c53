// Command-line front end: every experiment is reachable with a reproducible
// config, and file-writing commands echo the resolved config into --out.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "multclt/core.hpp"
#include "multclt/counting.hpp"
#include "multclt/experiments.hpp"
#include "multclt/parallel.hpp"
#include "multclt/report.hpp"
#include "multclt/tessellation.hpp"
#include "multclt/transforms.hpp"
#include "multclt/volumes.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

fs::path prepare_out_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string());
  return dir;
}

json config_json(const multclt::ExperimentConfig& cfg) {
  json j;
  j["a"] = cfg.params.a;
  j["b"] = cfg.params.b;
  j["c"] = cfg.params.c;
  j["T"] = cfg.params.T;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["sigma_variant"] = multclt::variant_name(cfg.sigma_variant);
  j["T_grid"] = cfg.T_grid;
  return j;
}

multclt::ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  multclt::ExperimentConfig cfg;
  try {
    if (j.contains("a")) cfg.params.a = j.at("a").get<double>();
    if (j.contains("b")) cfg.params.b = j.at("b").get<double>();
    if (j.contains("c")) cfg.params.c = j.at("c").get<double>();
    if (j.contains("T")) cfg.params.T = j.at("T").get<double>();
    if (j.contains("samples")) cfg.samples = j.at("samples").get<std::int64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("sigma_variant")) {
      cfg.sigma_variant = multclt::variant_from_name(j.at("sigma_variant").get<std::string>());
    }
    if (j.contains("T_grid")) cfg.T_grid = j.at("T_grid").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config field error: ") + e.what());
  }
  return cfg;
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for multiplicative counting statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "cap worker threads (results unchanged)")
      ->envname("MULTCLT_THREADS");

  // count
  auto* count_cmd = app.add_subcommand("count", "evaluate the solution count at one x");
  double x1 = 0.0, x2 = 0.0;
  multclt::DomainParams params;
  bool with_lattice = false;
  count_cmd->add_option("--x1", x1)->required();
  count_cmd->add_option("--x2", x2)->required();
  count_cmd->add_option("--a", params.a)->required();
  count_cmd->add_option("--b", params.b)->required();
  count_cmd->add_option("--c", params.c)->required();
  count_cmd->add_option("--T", params.T)->required();
  count_cmd->add_flag("--lattice", with_lattice, "cross-check via lattice enumeration (T <= 1e5)");

  // volume
  auto* volume_cmd = app.add_subcommand("volume", "exact and main-term volumes");
  volume_cmd->add_option("--a", params.a)->required();
  volume_cmd->add_option("--b", params.b)->required();
  volume_cmd->add_option("--c", params.c)->required();
  volume_cmd->add_option("--T", params.T)->required();

  // variance
  auto* variance_cmd = app.add_subcommand("variance", "variance series value and tail bound");
  int pq_cutoff = 200, m_cutoff = 10;
  std::string variant_str = "all_pairs";
  std::string out_dir;
  variance_cmd->add_option("--pq-cutoff", pq_cutoff);
  variance_cmd->add_option("--m-cutoff", m_cutoff);
  variance_cmd->add_option("--variant", variant_str, "all_pairs | zeta_weighted | coprime");
  variance_cmd->add_option("--out", out_dir, "directory for the per-term CSV dump");

  // clt
  auto* clt_cmd = app.add_subcommand("clt", "Monte Carlo distribution experiment");
  std::string config_path;
  std::string clt_out = "out";
  int hist_bins = 0;
  clt_cmd->add_option("--config", config_path, "JSON config path");
  clt_cmd->add_option("--out", clt_out, "output directory");
  clt_cmd->add_option("--bins", hist_bins, "histogram bins (0 = Freedman-Diaconis)");
  double opt_a = -1.0, opt_b = -1.0, opt_c = -1.0, opt_T = -1.0;
  std::int64_t opt_samples = -1;
  std::int64_t opt_seed = -1;
  std::string opt_variant;
  clt_cmd->add_option("--a", opt_a, "override a");
  clt_cmd->add_option("--b", opt_b, "override b");
  clt_cmd->add_option("--c", opt_c, "override c");
  clt_cmd->add_option("--T", opt_T, "override T");
  clt_cmd->add_option("--samples", opt_samples, "override samples");
  clt_cmd->add_option("--seed", opt_seed, "override seed");
  clt_cmd->add_option("--variant", opt_variant, "override sigma variant");

  // heights
  auto* heights_cmd = app.add_subcommand("heights", "height tail fractions on the flowed family");
  double n1 = 6.0, n2 = 6.0;
  std::int64_t h_samples = 100000;
  std::uint64_t h_seed = 1;
  std::vector<double> L_grid = {2.0, 4.0, 8.0, 16.0};
  std::string h_out;
  heights_cmd->add_option("--n1", n1);
  heights_cmd->add_option("--n2", n2);
  heights_cmd->add_option("--samples", h_samples);
  heights_cmd->add_option("--seed", h_seed);
  heights_cmd->add_option("--L", L_grid, "increasing grid of thresholds > 1");
  heights_cmd->add_option("--out", h_out, "directory for the CSV");

  // probe
  auto* probe_cmd = app.add_subcommand("probe", "covariance of box counts at two flow times");
  std::vector<double> box_arg = {-0.4, 0.4, -0.4, 0.4, 0.5, 20.5};
  double ta1 = 0.0, ta2 = 0.0, tb1 = 1.0, tb2 = 1.0;
  std::int64_t p_samples = 100000;
  std::uint64_t p_seed = 1;
  std::string p_out;
  probe_cmd->add_option("--box", box_arg, "x1lo x1hi x2lo x2hi ylo yhi")->expected(6);
  probe_cmd->add_option("--ta1", ta1);
  probe_cmd->add_option("--ta2", ta2);
  probe_cmd->add_option("--tb1", tb1);
  probe_cmd->add_option("--tb2", tb2);
  probe_cmd->add_option("--samples", p_samples);
  probe_cmd->add_option("--seed", p_seed);
  probe_cmd->add_option("--out", p_out, "directory for the CSV");

  // smallprod
  auto* small_cmd = app.add_subcommand("smallprod", "small-product counts across a T grid");
  double K = 4.0, sp_c = 0.5;
  std::vector<double> sp_grid = {1e5, 1e6};
  std::int64_t sp_samples = 1000;
  std::uint64_t sp_seed = 1;
  std::string sp_out;
  small_cmd->add_option("--K", K)->required();
  small_cmd->add_option("--c", sp_c);
  small_cmd->add_option("--T", sp_grid, "T grid");
  small_cmd->add_option("--samples", sp_samples);
  small_cmd->add_option("--seed", sp_seed);
  small_cmd->add_option("--out", sp_out, "directory for the CSV");

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) multclt::set_max_threads(threads);

  try {
    if (*count_cmd) {
      const std::int64_t n = multclt::count_products(x1, x2, params, multclt::max_threads());
      std::cout << n << "\n";
      if (with_lattice) {
        const std::int64_t m = multclt::count_via_lattice(x1, x2, params);
        std::cout << m << "\n" << (n == m ? "MATCH" : "MISMATCH") << "\n";
        if (n != m) return 1;
      }
      return kExitOk;
    }

    if (*volume_cmd) {
      params.validate_allow_degenerate();
      std::cout << multclt::format_double(multclt::vol_omega_exact(params)) << "\n";
      std::cout << "main_terms "
                << multclt::format_double(multclt::vol_omega_main_terms(params)) << "\n";
      return kExitOk;
    }

    if (*variance_cmd) {
      multclt::SeriesConfig sc;
      sc.pq_cutoff = pq_cutoff;
      sc.m_cutoff = m_cutoff;
      sc.variant = multclt::variant_from_name(variant_str);
      const multclt::SigmaSeries s = multclt::sigma_squared(sc);
      std::cout << "value " << multclt::format_double(s.value) << " partial_sum "
                << multclt::format_double(s.partial_sum) << " tail_bound "
                << multclt::format_double(s.tail_bound) << "\n";
      if (!out_dir.empty()) {
        const fs::path dir = prepare_out_dir(out_dir);
        write_file(dir / "series_terms.csv",
                   multclt::series_terms_csv(multclt::series_terms(sc)));
        json j;
        j["pq_cutoff"] = sc.pq_cutoff;
        j["m_cutoff"] = sc.m_cutoff;
        j["variant"] = variant_str;
        write_file(dir / "config.json", j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*clt_cmd) {
      multclt::ExperimentConfig cfg;
      if (!config_path.empty()) cfg = load_config(config_path);
      if (opt_a >= 0.0) cfg.params.a = opt_a;
      if (opt_b >= 0.0) cfg.params.b = opt_b;
      if (opt_c >= 0.0) cfg.params.c = opt_c;
      if (opt_T >= 0.0) cfg.params.T = opt_T;
      if (opt_samples >= 0) cfg.samples = opt_samples;
      if (opt_seed >= 0) cfg.seed = static_cast<std::uint64_t>(opt_seed);
      if (!opt_variant.empty()) cfg.sigma_variant = multclt::variant_from_name(opt_variant);

      const fs::path dir = prepare_out_dir(clt_out);
      const multclt::CltRun run = multclt::run_clt(cfg);
      print_warnings(run.warnings);
      write_file(dir / "config.json", config_json(cfg).dump(2) + "\n");
      write_file(dir / "records.jsonl", multclt::records_jsonl(run.records));
      write_file(dir / "summary.csv", multclt::summary_csv(run, cfg));
      std::vector<double> ds(run.records.size());
      for (std::size_t i = 0; i < run.records.size(); ++i) ds[i] = run.records[i].discrepancy;
      const int cfg_idx = cfg.sigma_variant == multclt::SeriesVariant::kAllPairs ? 0
                          : cfg.sigma_variant == multclt::SeriesVariant::kZetaWeighted
                              ? 1
                              : 2;
      write_file(dir / "hist.svg", multclt::histogram_svg(ds, run.sigma2[cfg_idx], hist_bins));
      if (cfg.T_grid.size() >= 3) {
        write_file(dir / "trend.csv", multclt::trend_csv(multclt::cumulant_trend(cfg)));
      }
      std::cout << "n " << run.summary.n << " mean " << multclt::format_double(run.summary.mean)
                << " var_ratio " << multclt::format_double(run.var_ratio) << " closest "
                << multclt::variant_name(run.closest_variant) << " ks "
                << multclt::format_double(run.summary.ks_distance) << "\n";
      return kExitOk;
    }

    if (*heights_cmd) {
      const multclt::FlowExponent n{n1, n2};
      const auto rows = multclt::height_tail(n, L_grid, h_samples, h_seed);
      for (const auto& r : rows) {
        std::cout << r.L << ' ' << multclt::format_double(r.fraction) << "\n";
      }
      if (!h_out.empty()) {
        const fs::path dir = prepare_out_dir(h_out);
        write_file(dir / "height_tail.csv", multclt::height_tail_csv(rows));
        json j;
        j["n1"] = n1;
        j["n2"] = n2;
        j["samples"] = h_samples;
        j["seed"] = h_seed;
        j["L_grid"] = L_grid;
        write_file(dir / "config.json", j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*probe_cmd) {
      multclt::BoxRegion box{{box_arg[0], box_arg[2], box_arg[4]},
                             {box_arg[1], box_arg[3], box_arg[5]}};
      const auto est = multclt::decorrelation_probe(box, {ta1, ta2}, {tb1, tb2},
                                                    p_samples, p_seed);
      std::cout << "covariance " << multclt::format_double(est.covariance) << " stderr "
                << multclt::format_double(est.stderr_) << "\n";
      if (!p_out.empty()) {
        const fs::path dir = prepare_out_dir(p_out);
        std::ostringstream csv;
        csv << "ta1,ta2,tb1,tb2,covariance,stderr\n"
            << ta1 << ',' << ta2 << ',' << tb1 << ',' << tb2 << ','
            << multclt::format_double(est.covariance) << ','
            << multclt::format_double(est.stderr_) << '\n';
        write_file(dir / "probe.csv", csv.str());
        json j;
        j["box"] = box_arg;
        j["ta"] = {ta1, ta2};
        j["tb"] = {tb1, tb2};
        j["samples"] = p_samples;
        j["seed"] = p_seed;
        write_file(dir / "config.json", j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (*small_cmd) {
      const auto rows = multclt::small_products_study(K, sp_grid, sp_samples, sp_seed, sp_c);
      for (const auto& r : rows) {
        std::cout << r.T << " mean " << multclt::format_double(r.mean) << " max " << r.max
                  << "\n";
      }
      if (!sp_out.empty()) {
        const fs::path dir = prepare_out_dir(sp_out);
        write_file(dir / "small_products.csv", multclt::small_products_csv(rows));
        json j;
        j["K"] = K;
        j["c"] = sp_c;
        j["T_grid"] = sp_grid;
        j["samples"] = sp_samples;
        j["seed"] = sp_seed;
        write_file(dir / "config.json", j.dump(2) + "\n");
      }
      return kExitOk;
    }
  } catch (const multclt::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
