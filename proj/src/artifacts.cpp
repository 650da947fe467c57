#include "deterrence/artifacts.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <locale>
#include <sstream>
#include <system_error>

#include "deterrence/errors.hpp"

namespace deterrence {
namespace {

constexpr std::string_view kRocHeader = "scheme,env_id,tau,fpr,tpr";

std::string to_chars_string(double value, std::chars_format fmt, int precision) {
  std::array<char, 64> buf{};
  const auto res = precision < 0 ? std::to_chars(buf.data(), buf.data() + buf.size(), value)
                                 : std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                                 fmt, precision);
  return {buf.data(), res.ptr};
}

double parse_double(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ValidationError("roc-points line " + std::to_string(line) + ": bad number '" +
                          std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fixed2(double v) { return to_chars_string(v, std::chars_format::fixed, 2); }

}  // namespace

std::string format_value(double value) {
  if (value == 0.0) return "0";  // also folds -0
  return to_chars_string(value, std::chars_format::general, 9);
}

std::string format_fixed(double value, int decimals) {
  if (value == 0.0) value = 0.0;
  return to_chars_string(value, std::chars_format::fixed, decimals);
}

std::string format_exact(double value) {
  if (value == 0.0) return "0";
  return to_chars_string(value, std::chars_format::general, -1);
}

std::string roc_points_csv(std::span<const LabeledCurve> curves) {
  std::string out(kRocHeader);
  out += '\n';
  for (const auto& lc : curves) {
    std::vector<RocPoint> pts = lc.curve.points;
    std::stable_sort(pts.begin(), pts.end(),
                     [](const RocPoint& a, const RocPoint& b) { return a.tau > b.tau; });
    for (const auto& pt : pts) {
      out += lc.scheme + ',' + lc.env_id + ',' + format_exact(pt.tau) + ',' +
             format_value(pt.fpr) + ',' + format_value(pt.tpr) + '\n';
    }
  }
  return out;
}

std::vector<RocPointsRow> parse_roc_points_csv(const std::string& text) {
  std::vector<RocPointsRow> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (number == 1) {
      if (line != kRocHeader) throw ValidationError("roc-points: unexpected header '" + line + "'");
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 5) {
      throw ValidationError("roc-points line " + std::to_string(number) + ": expected 5 fields");
    }
    rows.push_back({std::string(fields[0]), std::string(fields[1]),
                    parse_double(fields[2], number), parse_double(fields[3], number),
                    parse_double(fields[4], number)});
  }
  if (number == 0) throw ValidationError("roc-points: empty file");
  return rows;
}

std::vector<RocPointsRow> read_roc_points_csv(const std::filesystem::path& path) {
  return parse_roc_points_csv(read_text_file(path));
}

std::string auc_table_csv(std::span<const AucStats> rows) {
  std::string out = "scheme,mean,min,max\n";
  for (const auto& r : rows) {
    out += r.scheme + ',' + format_value(r.mean) + ',' + format_value(r.min) + ',' +
           format_value(r.max) + '\n';
  }
  return out;
}

std::string j_table_csv(std::span<const JStats> rows) {
  std::string out = "scheme,mean_j,min_j,max_j,mean_tau_star\n";
  for (const auto& r : rows) {
    out += r.scheme + ',' + format_value(r.mean_j) + ',' + format_value(r.min_j) + ',' +
           format_value(r.max_j) + ',' + format_value(r.mean_tau_star) + '\n';
  }
  return out;
}

std::string render_svg(std::span<const SvgCurve> curves, const std::string& title) {
  if (curves.empty()) throw ValidationError("an ROC plot needs at least one curve");

  constexpr double kLeft = 60.0, kTop = 40.0, kSide = 400.0;
  constexpr double kWidth = 720.0, kHeight = 500.0;
  constexpr std::array<std::string_view, 10> kPalette = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  const auto px = [&](double fpr) { return kLeft + fpr * kSide; };
  const auto py = [&](double tpr) { return kTop + (1.0 - tpr) * kSide; };

  std::ostringstream svg;
  svg.imbue(std::locale::classic());
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  if (!title.empty()) {
    svg << "<text x=\"" << fixed2(kLeft + kSide / 2) << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"15\">" << xml_escape(title) << "</text>\n";
  }

  // Frame and ticks.
  svg << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<rect x=\"" << fixed2(kLeft) << "\" y=\"" << fixed2(kTop) << "\" width=\""
      << fixed2(kSide) << "\" height=\"" << fixed2(kSide) << "\"/>\n";
  for (int i = 0; i <= 10; ++i) {
    const double t = i / 10.0;
    svg << "<line x1=\"" << fixed2(px(t)) << "\" y1=\"" << fixed2(py(0)) << "\" x2=\""
        << fixed2(px(t)) << "\" y2=\"" << fixed2(py(0) + 5) << "\"/>\n"
        << "<line x1=\"" << fixed2(px(0) - 5) << "\" y1=\"" << fixed2(py(t)) << "\" x2=\""
        << fixed2(px(0)) << "\" y2=\"" << fixed2(py(t)) << "\"/>\n";
  }
  svg << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (int i = 0; i <= 10; i += 2) {
    const double t = i / 10.0;
    const std::string label = to_chars_string(t, std::chars_format::fixed, 1);
    svg << "<text x=\"" << fixed2(px(t)) << "\" y=\"" << fixed2(py(0) + 18)
        << "\" text-anchor=\"middle\">" << label << "</text>\n"
        << "<text x=\"" << fixed2(px(0) - 8) << "\" y=\"" << fixed2(py(t) + 4)
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  svg << "<text x=\"" << fixed2(kLeft + kSide / 2) << "\" y=\"" << fixed2(py(0) + 38)
      << "\" text-anchor=\"middle\" font-size=\"13\">FPR</text>\n"
      << "<text x=\"18\" y=\"" << fixed2(kTop + kSide / 2)
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
      << fixed2(kTop + kSide / 2) << ")\">TPR</text>\n</g>\n";

  svg << "<line id=\"diagonal\" x1=\"" << fixed2(px(0)) << "\" y1=\"" << fixed2(py(0))
      << "\" x2=\"" << fixed2(px(1)) << "\" y2=\"" << fixed2(py(1))
      << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto colour = kPalette[c % kPalette.size()];
    svg << "<polyline class=\"roc\" fill=\"none\" stroke=\"" << colour
        << "\" stroke-width=\"1.8\" points=\"";
    for (std::size_t i = 0; i < curves[c].curve.points.size(); ++i) {
      const auto& pt = curves[c].curve.points[i];
      svg << (i ? " " : "") << fixed2(px(pt.fpr)) << ',' << fixed2(py(pt.tpr));
    }
    svg << "\"/>\n";
  }

  svg << "<g id=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const double y = kTop + 10.0 + 20.0 * static_cast<double>(c);
    const double auc = auc_trapezoid(curves[c].curve);
    svg << "<line x1=\"480\" y1=\"" << fixed2(y) << "\" x2=\"505\" y2=\"" << fixed2(y)
        << "\" stroke=\"" << kPalette[c % kPalette.size()] << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"512\" y=\"" << fixed2(y + 4) << "\">" << xml_escape(curves[c].label)
        << " (AUC " << to_chars_string(auc, std::chars_format::fixed, 3) << ")</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_svg(std::span<const SvgCurve> curves, const std::filesystem::path& path,
              const std::string& title) {
  write_text_file(path, render_svg(curves, title));
}

void write_text_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace deterrence
