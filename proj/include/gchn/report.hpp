#pragma once
// Experiment results as tabular reports plus the CSV/SVG emitters.

#include <functional>
#include <string>
#include <vector>

namespace gchn {

struct ExperimentReport {
    std::string id;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows; // pre-formatted cells
    bool pass = true;
    std::vector<std::string> notes;
};

// Scientific notation, 13 significant digits, '.' decimal; the one formatter
// used everywhere so identical configs yield byte-identical CSV.
std::string fmt(double v);
std::string fmt(int v);

// RFC-4180: header row, CRLF line endings, fields quoted when needed.
void write_csv(const ExperimentReport& rep, const std::string& path);

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

// Self-contained line plot; log10 scaling per axis when requested (points with
// non-positive coordinates are dropped on a log axis).
void write_svg(const std::string& path, const std::string& title,
               const std::string& x_label, const std::string& y_label,
               const std::vector<SvgSeries>& series, bool log_x, bool log_y);

// Runs fn(i) for i in [0, count) on up to BESOV_WITNESS_THREADS workers
// (default: hardware concurrency). Exceptions are rethrown in the caller.
void parallel_for(int count, const std::function<void(int)>& fn);

} // namespace gchn
