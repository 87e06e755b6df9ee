#include "galab/io.hpp"

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <sstream>

namespace galab {

std::string format_value(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string format_value(std::size_t x) { return std::to_string(x); }

std::string CsvTable::render() const {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out.push_back(',');
      out += cells[i];
    }
    out.push_back('\n');
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return out;
}

void write_text_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());

  const fs::path tmp =
      dir / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

CsvTable trace_csv(const RunTrace& trace) {
  CsvTable csv;
  csv.header = {"generation", "best", "mean", "min", "fixed_zero_count", "diversity",
                "evaluations"};
  for (const TraceRow& row : trace.rows) {
    csv.rows.push_back({format_value(row.generation), format_value(row.best),
                        format_value(row.mean), format_value(row.min),
                        format_value(row.fixed_zero_count), format_value(row.diversity),
                        format_value(row.evaluations)});
  }
  return csv;
}

CsvTable histogram_csv(const Histogram& hist) {
  CsvTable csv;
  csv.header = {"bin_lower", "count"};
  for (const auto& [k, count] : hist.bins) {
    csv.rows.push_back({format_value(hist.lower_edge(k)), format_value(count)});
  }
  return csv;
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 400;
constexpr int kMargin = 48;

std::string svg_open(std::string_view title) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
      << title << "</text>\n";
  return out.str();
}

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

}  // namespace

std::string svg_histogram(const Histogram& hist, std::string_view title) {
  double max_count = 1.0;
  long long k_min = 0, k_max = 0;
  bool first = true;
  for (const auto& [k, count] : hist.bins) {
    max_count = std::max(max_count, static_cast<double>(count));
    if (first) {
      k_min = k_max = k;
      first = false;
    } else {
      k_min = std::min(k_min, k);
      k_max = std::max(k_max, k);
    }
  }
  const double span = static_cast<double>(k_max - k_min + 1);
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  std::ostringstream out;
  out << svg_open(title);
  for (const auto& [k, count] : hist.bins) {
    const double x = kMargin + (static_cast<double>(k - k_min) / span) * plot_w;
    const double h = (static_cast<double>(count) / max_count) * plot_h;
    out << "<rect x=\"" << x << "\" y=\"" << kHeight - kMargin - h << "\" width=\""
        << std::max(1.0, plot_w / span - 1.0) << "\" height=\"" << h << "\" fill=\"#1f77b4\"/>\n";
  }
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 12 << "\" font-size=\"11\">"
      << format_value(hist.lower_edge(k_min)) << "</text>\n"
      << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_value(hist.lower_edge(k_max + 1))
      << "</text>\n</svg>\n";
  return out.str();
}

std::string svg_line_chart(std::span<const double> xs,
                           const std::vector<std::pair<std::string, std::vector<double>>>& series,
                           std::string_view title) {
  double x_min = xs.front(), x_max = xs.back();
  double y_min = 0.0, y_max = 1.0;
  bool first = true;
  for (const auto& [name, ys] : series) {
    for (double y : ys) {
      if (first) {
        y_min = y_max = y;
        first = false;
      } else {
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
      }
    }
  }
  if (y_max == y_min) y_max = y_min + 1.0;
  if (x_max == x_min) x_max = x_min + 1.0;
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  std::ostringstream out;
  out << svg_open(title);
  std::size_t color = 0;
  for (const auto& [name, ys] : series) {
    out << "<polyline fill=\"none\" stroke=\"" << kSeriesColors[color % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < ys.size() && i < xs.size(); ++i) {
      const double px = kMargin + (xs[i] - x_min) / (x_max - x_min) * plot_w;
      const double py = kHeight - kMargin - (ys[i] - y_min) / (y_max - y_min) * plot_h;
      out << px << "," << py << " ";
    }
    out << "\"/>\n"
        << "<text x=\"" << kMargin + 8 << "\" y=\"" << 36 + 14 * color << "\" font-size=\"11\" fill=\""
        << kSeriesColors[color % 4] << "\">" << name << "</text>\n";
    ++color;
  }
  out << "<text x=\"" << kMargin << "\" y=\"" << kHeight - 12 << "\" font-size=\"11\">"
      << format_value(x_min) << "</text>\n"
      << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"end\" font-size=\"11\">" << format_value(x_max) << "</text>\n"
      << "<text x=\"4\" y=\"" << kMargin << "\" font-size=\"11\">" << format_value(y_max)
      << "</text>\n"
      << "<text x=\"4\" y=\"" << kHeight - kMargin << "\" font-size=\"11\">" << format_value(y_min)
      << "</text>\n</svg>\n";
  return out.str();
}

}  // namespace galab
