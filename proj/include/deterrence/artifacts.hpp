#pragma once

// File artifacts: CSV tables, ROC point dumps and standalone SVG plots.
// Numbers are written with std::to_chars so output is locale-independent.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "deterrence/roc.hpp"

namespace deterrence {

// 9 significant digits, used for probabilities, AUC and J values.
std::string format_value(double value);
// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);
// Shortest representation that round-trips (thresholds).
std::string format_exact(double value);

struct RocPointsRow {
  std::string scheme;
  std::string env_id;
  double tau = 0.0;
  double fpr = 0.0;
  double tpr = 0.0;
};

struct LabeledCurve {
  std::string scheme;
  std::string env_id;
  RocCurve curve;
};

// Header `scheme,env_id,tau,fpr,tpr`; rows in the given curve order, each
// curve by descending tau.
std::string roc_points_csv(std::span<const LabeledCurve> curves);
std::vector<RocPointsRow> parse_roc_points_csv(const std::string& text);
std::vector<RocPointsRow> read_roc_points_csv(const std::filesystem::path& path);

std::string auc_table_csv(std::span<const AucStats> rows);
std::string j_table_csv(std::span<const JStats> rows);

// Unit-square ROC plot: FPR/TPR axes, dashed chance diagonal, one polyline
// per curve, legend entries "<label> (AUC 0.879)" using auc_trapezoid.
struct SvgCurve {
  std::string label;
  RocCurve curve;
};
std::string render_svg(std::span<const SvgCurve> curves, const std::string& title = {});
void emit_svg(std::span<const SvgCurve> curves, const std::filesystem::path& path,
              const std::string& title = {});

// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& contents);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace deterrence
