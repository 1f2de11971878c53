#include "multclt/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace multclt {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string variant_name(SeriesVariant v) {
  switch (v) {
    case SeriesVariant::kAllPairs: return "all_pairs";
    case SeriesVariant::kZetaWeighted: return "zeta_weighted";
    case SeriesVariant::kCoprimePairs: return "coprime";
  }
  return "all_pairs";
}

SeriesVariant variant_from_name(const std::string& name) {
  if (name == "all_pairs") return SeriesVariant::kAllPairs;
  if (name == "zeta_weighted") return SeriesVariant::kZetaWeighted;
  if (name == "coprime") return SeriesVariant::kCoprimePairs;
  throw std::invalid_argument("unknown sigma variant: " + name);
}

std::string records_jsonl(const std::vector<SampleRecord>& records) {
  std::ostringstream out;
  for (const SampleRecord& r : records) {
    out << "{\"x1\":" << format_double(r.x1) << ",\"x2\":" << format_double(r.x2)
        << ",\"count\":" << r.count << ",\"discrepancy\":" << format_double(r.discrepancy)
        << ",\"seed_index\":" << r.seed_index << "}\n";
  }
  return out.str();
}

std::string summary_csv(const CltRun& run, const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "a,b,c,T,samples,seed,vol,mean,variance,skewness,excess_kurtosis,"
         "var_ratio,sigma2_all_pairs,sigma2_zeta_weighted,sigma2_coprime,"
         "ks_all_pairs,ks_zeta_weighted,ks_coprime,closest_variant,"
         "configured_variant,ks_configured\n";
  out << format_double(cfg.params.a) << ',' << format_double(cfg.params.b) << ','
      << format_double(cfg.params.c) << ',' << format_double(cfg.params.T) << ','
      << cfg.samples << ',' << cfg.seed << ',' << format_double(run.vol) << ','
      << format_double(run.summary.mean) << ',' << format_double(run.summary.variance)
      << ',' << format_double(run.summary.skewness) << ','
      << format_double(run.summary.excess_kurtosis) << ','
      << format_double(run.var_ratio) << ',' << format_double(run.sigma2[0]) << ','
      << format_double(run.sigma2[1]) << ',' << format_double(run.sigma2[2]) << ','
      << format_double(run.ks[0]) << ',' << format_double(run.ks[1]) << ','
      << format_double(run.ks[2]) << ',' << variant_name(run.closest_variant) << ','
      << variant_name(cfg.sigma_variant) << ','
      << format_double(run.summary.ks_distance) << '\n';
  return out.str();
}

std::string trend_csv(const std::vector<CumulantTrendRow>& rows) {
  std::ostringstream out;
  out << "T,skewness,skewness_stderr,excess_kurtosis,vol,var_ratio,ks_best\n";
  for (const CumulantTrendRow& r : rows) {
    out << format_double(r.T) << ',' << format_double(r.skewness) << ','
        << format_double(r.skewness_stderr) << ',' << format_double(r.excess_kurtosis)
        << ',' << format_double(r.vol) << ',' << format_double(r.var_ratio) << ','
        << format_double(r.ks_best) << '\n';
  }
  return out.str();
}

std::string small_products_csv(const std::vector<SmallProductsRow>& rows) {
  std::ostringstream out;
  out << "T,mean,max\n";
  for (const SmallProductsRow& r : rows) {
    out << format_double(r.T) << ',' << format_double(r.mean) << ',' << r.max << '\n';
  }
  return out.str();
}

std::string height_tail_csv(const std::vector<TailPoint>& rows) {
  std::ostringstream out;
  out << "L,fraction\n";
  for (const TailPoint& r : rows) {
    out << format_double(r.L) << ',' << format_double(r.fraction) << '\n';
  }
  return out.str();
}

std::string series_terms_csv(const std::vector<SeriesTerm>& terms) {
  std::ostringstream out;
  out << "p,q,m1,m2,value\n";
  for (const SeriesTerm& t : terms) {
    out << t.p << ',' << t.q << ',' << t.m1 << ',' << t.m2 << ','
        << format_double(t.value) << '\n';
  }
  return out.str();
}

std::string histogram_svg(const std::vector<double>& values, double sigma2, int bins) {
  if (values.empty()) throw std::invalid_argument("histogram_svg: empty sample");
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double lo = sorted.front();
  const double hi = sorted.back();
  const double span = std::max(hi - lo, 1e-12);

  if (bins <= 0) {
    // Freedman-Diaconis: width = 2 IQR / n^(1/3).
    const double q1 = sorted[n / 4];
    const double q3 = sorted[(3 * n) / 4];
    const double iqr = std::max(q3 - q1, 1e-12);
    const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
    bins = std::clamp(static_cast<int>(std::ceil(span / width)), 1, 400);
  }

  std::vector<double> counts(bins, 0.0);
  for (double v : values) {
    int b = static_cast<int>((v - lo) / span * bins);
    b = std::clamp(b, 0, bins - 1);
    counts[b] += 1.0;
  }
  const double bin_width = span / bins;
  double peak = 0.0;
  for (double c : counts) peak = std::max(peak, c);
  // Normal density scaled to expected bin counts.
  auto density_count = [&](double x) {
    const double pdf =
        std::exp(-x * x / (2.0 * sigma2)) / std::sqrt(2.0 * 3.14159265358979323846 * sigma2);
    return pdf * static_cast<double>(n) * bin_width;
  };
  for (int i = 0; i <= 200; ++i) {
    peak = std::max(peak, density_count(lo + span * i / 200.0));
  }

  const double w = 640.0, h = 400.0, mx = 50.0, my = 30.0;
  const double plot_w = w - 2.0 * mx, plot_h = h - 2.0 * my;
  auto X = [&](double x) { return mx + (x - lo) / span * plot_w; };
  auto Y = [&](double c) { return h - my - c / peak * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int b = 0; b < bins; ++b) {
    if (counts[b] <= 0.0) continue;
    const double x0 = X(lo + b * bin_width);
    const double y0 = Y(counts[b]);
    svg << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << (plot_w / bins)
        << "\" height=\"" << (h - my - y0) << "\" fill=\"#7aa6c2\" stroke=\"#2e5f7f\" "
        << "stroke-width=\"0.5\"/>\n";
  }
  svg << "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i <= 200; ++i) {
    const double x = lo + span * i / 200.0;
    svg << X(x) << ',' << Y(density_count(x)) << ' ';
  }
  svg << "\"/>\n";
  svg << "<line x1=\"" << mx << "\" y1=\"" << (h - my) << "\" x2=\"" << (w - mx)
      << "\" y2=\"" << (h - my) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 8)
      << "\" font-size=\"12\" text-anchor=\"middle\">discrepancy</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace multclt
