#include "sempriv/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sempriv/errors.hpp"
#include "sempriv/frl.hpp"

namespace sempriv {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> parse_sweep_spec(const std::string& spec) {
  double start = 0.0, step = 0.0, end = 0.0;
  char tail = '\0';
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &step, &end, &tail) != 3) {
    throw validation_error("sweep spec '" + spec + "' is not start:step:end");
  }
  if (!(step > 0.0) || end < start || !(start >= 0.0)) {
    throw validation_error("sweep spec '" + spec + "': need start >= 0, step > 0, end >= start");
  }
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    double eps = start + double(i) * step;
    if (eps > end + 1e-12) break;
    grid.push_back(eps);
  }
  return grid;
}

std::vector<SweepRow> bounds_sweep(const JointTable& joint, const std::string& s_axis,
                                   const std::string& f_axis,
                                   const std::optional<std::string>& h_axis,
                                   const std::vector<double>& eps_grid, bool with_mechanism) {
  if (with_mechanism && !h_axis) {
    throw validation_error("bounds_sweep: mechanism columns need a task axis");
  }
  for (std::size_t i = 1; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > eps_grid[i - 1])) {
      throw validation_error("bounds_sweep: epsilon grid must be strictly increasing");
    }
  }

  std::optional<FrlOutput> frl;
  std::optional<JointTable> j2;
  if (with_mechanism) {
    j2 = marginalize(joint, {s_axis, f_axis});
    frl = construct_frl(*j2, s_axis, f_axis);
  }

  std::vector<SweepRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    BoundsReport b = h_axis ? utility_bounds(joint, s_axis, f_axis, *h_axis, eps)
                            : theorem1_bounds(joint, s_axis, f_axis, eps);
    SweepRow row;
    row.epsilon = eps;
    row.L_h1 = b.L_h1;
    row.L_h2_clamped = b.L_h2_clamped;
    row.upper_h_eps = b.upper_h_eps;
    row.util_L1 = b.util_L1;
    row.util_L2_clamped = b.util_L2_clamped;
    row.util_upper = b.util_upper;
    row.gap = b.gap;
    if (with_mechanism) {
      Mechanism m = tune_leakage(*j2, *frl, eps, s_axis, f_axis);
      auto [i_uf, i_uh] = mechanism_utilities(joint, m, f_axis, *h_axis);
      (void)i_uf;
      row.mechanism_leakage = m.leakage;
      row.mechanism_utility_task = i_uh;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

}  // namespace

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out =
      "epsilon,L_h1,L_h2_clamped,upper_h_eps,util_L1,util_L2_clamped,util_upper,gap,"
      "mechanism_leakage,mechanism_utility_task\n";
  for (const auto& r : rows) {
    out += format_double(r.epsilon);
    out += ',';
    out += format_double(r.L_h1);
    out += ',';
    out += cell(r.L_h2_clamped);
    out += ',';
    out += format_double(r.upper_h_eps);
    out += ',';
    out += cell(r.util_L1);
    out += ',';
    out += cell(r.util_L2_clamped);
    out += ',';
    out += cell(r.util_upper);
    out += ',';
    out += cell(r.gap);
    out += ',';
    out += cell(r.mechanism_leakage);
    out += ',';
    out += cell(r.mechanism_utility_task);
    out += '\n';
  }
  return out;
}

std::string sweep_to_svg(const std::vector<SweepRow>& rows) {
  if (rows.empty()) {
    throw validation_error("sweep_to_svg: no rows");
  }
  const bool utility = rows.front().util_upper.has_value();
  auto low1 = [&](const SweepRow& r) { return utility ? *r.util_L1 : r.L_h1; };
  auto low2 = [&](const SweepRow& r) {
    const auto& v = utility ? r.util_L2_clamped : r.L_h2_clamped;
    return v.value_or(0.0);
  };
  auto up = [&](const SweepRow& r) { return utility ? *r.util_upper : r.upper_h_eps; };

  double x_min = rows.front().epsilon, x_max = rows.back().epsilon;
  double y_min = 0.0, y_max = 0.0;
  for (const auto& r : rows) {
    y_min = std::min({y_min, low1(r), low2(r), up(r)});
    y_max = std::max({y_max, low1(r), low2(r), up(r)});
  }
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;

  const double w = 720.0, h = 480.0, ml = 70.0, mr = 20.0, mt = 20.0, mb = 50.0;
  auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (w - ml - mr); };
  auto py = [&](double y) { return h - mb - (y - y_min) / (y_max - y_min) * (h - mt - mb); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(w) +
                    "\" height=\"" + format_double(h) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // axes
  svg += "<line x1=\"" + format_double(ml) + "\" y1=\"" + format_double(h - mb) + "\" x2=\"" +
         format_double(w - mr) + "\" y2=\"" + format_double(h - mb) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + format_double(ml) + "\" y1=\"" + format_double(mt) + "\" x2=\"" +
         format_double(ml) + "\" y2=\"" + format_double(h - mb) + "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    double xv = x_min + (x_max - x_min) * t / 4.0;
    double yv = y_min + (y_max - y_min) * t / 4.0;
    svg += "<text x=\"" + format_double(px(xv)) + "\" y=\"" + format_double(h - mb + 18.0) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + format_double(xv) + "</text>\n";
    svg += "<text x=\"" + format_double(ml - 8.0) + "\" y=\"" + format_double(py(yv) + 4.0) +
           "\" font-size=\"11\" text-anchor=\"end\">" + format_double(yv) + "</text>\n";
  }
  svg += "<text x=\"" + format_double((ml + w - mr) / 2.0) + "\" y=\"" +
         format_double(h - 12.0) +
         "\" font-size=\"12\" text-anchor=\"middle\">leakage budget (nats)</text>\n";

  const char* colors[3] = {"#1f77b4", "#d62728", "#2ca02c"};
  const char* labels[3] = {"lower bound 1", "lower bound 2 (clamped)", "upper bound"};
  for (int c = 0; c < 3; ++c) {
    std::string pts;
    for (const auto& r : rows) {
      double y = c == 0 ? low1(r) : c == 1 ? low2(r) : up(r);
      pts += format_double(px(r.epsilon)) + "," + format_double(py(y)) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(colors[c]) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    double ly = mt + 16.0 * (c + 1);
    svg += "<line x1=\"" + format_double(ml + 10.0) + "\" y1=\"" + format_double(ly) +
           "\" x2=\"" + format_double(ml + 34.0) + "\" y2=\"" + format_double(ly) +
           "\" stroke=\"" + colors[c] + "\" stroke-width=\"1.5\"/>\n";
    svg += "<text x=\"" + format_double(ml + 40.0) + "\" y=\"" + format_double(ly + 4.0) +
           "\" font-size=\"11\">" + labels[c] + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace sempriv
