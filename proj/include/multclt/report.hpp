#pragma once

#include <string>
#include <vector>

#include "multclt/experiments.hpp"
#include "multclt/transforms.hpp"
#include "multclt/volumes.hpp"

namespace multclt {

// Shortest round-trippable decimal form of a double; stable across runs.
std::string format_double(double v);

std::string variant_name(SeriesVariant v);
SeriesVariant variant_from_name(const std::string& name);

// One record per line: {"x1":...,"x2":...,"count":...,"discrepancy":...,
// "seed_index":...}.
std::string records_jsonl(const std::vector<SampleRecord>& records);

// Fixed-header CSV with the run summary plus per-variant sigma^2 and KS.
std::string summary_csv(const CltRun& run, const ExperimentConfig& cfg);

std::string trend_csv(const std::vector<CumulantTrendRow>& rows);

std::string small_products_csv(const std::vector<SmallProductsRow>& rows);

std::string height_tail_csv(const std::vector<TailPoint>& rows);

std::string series_terms_csv(const std::vector<SeriesTerm>& terms);

// Self-contained SVG: discrepancy histogram with the Normal(0, sigma2)
// density overlaid. bins <= 0 picks the Freedman-Diaconis count.
std::string histogram_svg(const std::vector<double>& values, double sigma2, int bins);

}  // namespace multclt
