#include "sempriv/frl.hpp"

#include <algorithm>
#include <cmath>

#include "sempriv/errors.hpp"
#include "sempriv/info.hpp"

namespace sempriv {

namespace {

// Joint over (s,f) as an s-major matrix plus the two axes.
struct SfView {
  Axis s;
  Axis f;
  std::vector<double> cells;  // cells[is * |F| + if]
};

SfView sf_view(const JointTable& joint, const std::string& s_axis, const std::string& f_axis) {
  JointTable m = marginalize(joint, {s_axis, f_axis});
  const std::size_t si = m.axis_index(s_axis);
  const std::size_t fi = m.axis_index(f_axis);
  const std::size_t ns = m.axes()[si].alphabet.size();
  const std::size_t nf = m.axes()[fi].alphabet.size();
  SfView v{m.axes()[si], m.axes()[fi], std::vector<double>(ns * nf)};
  for (std::size_t is = 0; is < ns; ++is) {
    for (std::size_t iy = 0; iy < nf; ++iy) {
      std::size_t flat = (si < fi) ? is * m.stride(si) + iy * m.stride(fi)
                                   : iy * m.stride(fi) + is * m.stride(si);
      v.cells[is * nf + iy] = m.cells()[flat];
    }
  }
  return v;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

}  // namespace

FrlOutput construct_frl(const JointTable& joint, const std::string& s_axis,
                        const std::string& f_axis) {
  SfView v = sf_view(joint, s_axis, f_axis);
  const std::size_t ns = v.s.alphabet.size();
  const std::size_t nf = v.f.alphabet.size();

  std::vector<double> p_s(ns, 0.0);
  for (std::size_t is = 0; is < ns; ++is)
    for (std::size_t iy = 0; iy < nf; ++iy) p_s[is] += v.cells[is * nf + iy];

  // Conditional CDF prefix[is][iy] = P(F <= f_iy | S = s_is); the last entry is
  // pinned to 1 so interval ends always meet.
  std::vector<std::vector<double>> prefix(ns, std::vector<double>(nf, 0.0));
  std::vector<double> breakpoints;
  for (std::size_t is = 0; is < ns; ++is) {
    if (p_s[is] <= 0.0) {
      // Unreachable s: decoded arbitrarily, contributes no breakpoints.
      for (std::size_t iy = 0; iy < nf; ++iy) prefix[is][iy] = (iy + 1 == nf) ? 1.0 : 0.0;
      continue;
    }
    double acc = 0.0;
    for (std::size_t iy = 0; iy + 1 < nf; ++iy) {
      acc += v.cells[is * nf + iy] / p_s[is];
      prefix[is][iy] = acc;
      if (acc > 0.0 && acc < 1.0) breakpoints.push_back(acc);
    }
    prefix[is][nf - 1] = 1.0;
  }

  // Coinciding breakpoints (exact float equality) merge into one boundary.
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  std::vector<double> bounds;
  bounds.reserve(breakpoints.size() + 2);
  bounds.push_back(0.0);
  bounds.insert(bounds.end(), breakpoints.begin(), breakpoints.end());
  bounds.push_back(1.0);
  const std::size_t n_cells = bounds.size() - 1;

  std::vector<std::string> u_alphabet;
  std::vector<double> cell_lengths;
  u_alphabet.reserve(n_cells);
  cell_lengths.reserve(n_cells);
  for (std::size_t k = 0; k < n_cells; ++k) {
    u_alphabet.push_back("u" + std::to_string(k));
    cell_lengths.push_back(bounds[k + 1] - bounds[k]);
  }

  // decoder: cell k under s belongs to the first f-interval whose right end
  // lies strictly past the cell start.
  std::vector<std::size_t> decoder(n_cells * ns, 0);
  for (std::size_t k = 0; k < n_cells; ++k) {
    const double start = bounds[k];
    for (std::size_t is = 0; is < ns; ++is) {
      std::size_t iy = 0;
      while (iy + 1 < nf && !(prefix[is][iy] > start)) ++iy;
      decoder[k * ns + is] = iy;
    }
  }

  // Every f with positive mass must own at least one cell, or the channel
  // below cannot reproduce F from (U0, S).
  for (std::size_t is = 0; is < ns; ++is) {
    for (std::size_t iy = 0; iy < nf; ++iy) {
      if (v.cells[is * nf + iy] <= 0.0) continue;
      bool owned = false;
      for (std::size_t k = 0; k < n_cells && !owned; ++k) {
        owned = decoder[k * ns + is] == iy;
      }
      if (!owned) {
        throw internal_error("construct_frl: symbol '" + v.f.alphabet[iy] + "' given '" +
                             v.s.alphabet[is] +
                             "' has positive probability but an empty refinement interval");
      }
    }
  }

  // P(U0 = k | S = s, F = y) = len(k) / P(F = y | S = s) on the cells decoding
  // to y; rows for zero-probability (s,y) are uniform and never observed.
  std::vector<double> rows(ns * nf * n_cells, 0.0);
  for (std::size_t is = 0; is < ns; ++is) {
    for (std::size_t iy = 0; iy < nf; ++iy) {
      double* row = rows.data() + (is * nf + iy) * n_cells;
      if (p_s[is] <= 0.0 || v.cells[is * nf + iy] <= 0.0) {
        for (std::size_t k = 0; k < n_cells; ++k) row[k] = 1.0 / double(n_cells);
        continue;
      }
      double mass = 0.0;
      for (std::size_t k = 0; k < n_cells; ++k) {
        if (decoder[k * ns + is] == iy) {
          row[k] = cell_lengths[k];
          mass += row[k];
        }
      }
      for (std::size_t k = 0; k < n_cells; ++k) row[k] /= mass;
    }
  }
  Channel channel({v.s, v.f}, Axis{"U0", u_alphabet}, std::move(rows));
  return FrlOutput{std::move(u_alphabet), std::move(cell_lengths), std::move(channel),
                   std::move(decoder), ns, nf};
}

Channel randomized_response(const Axis& s_axis, double p, const std::string& output_name) {
  const std::size_t k = s_axis.alphabet.size();
  if (k == 0) throw validation_error("randomized_response: empty alphabet");
  const double p_min = 1.0 / double(k);
  if (!(p >= p_min && p <= 1.0)) {
    throw validation_error("randomized_response: p=" + std::to_string(p) +
                           " outside [1/" + std::to_string(k) + ", 1]");
  }
  const double off = (k > 1) ? (1.0 - p) / double(k - 1) : 0.0;
  std::vector<double> rows(k * k, off);
  for (std::size_t i = 0; i < k; ++i) rows[i * k + i] = p;
  return Channel({s_axis}, Axis{output_name, s_axis.alphabet}, std::move(rows));
}

namespace {

// U = (U0, W) with W | S a randomized response and W independent of (U0, F)
// given S. Output symbol index = cell * |S| + w.
Channel compose_disclosure(const FrlOutput& frl, const Channel& rr) {
  const std::size_t n_cells = frl.u_alphabet.size();
  const std::size_t ns = frl.s_size;
  const std::size_t nf = frl.f_size;
  const Axis& s = frl.channel.input_axes()[0];
  const Axis& f = frl.channel.input_axes()[1];

  std::vector<std::string> labels;
  labels.reserve(n_cells * ns);
  for (std::size_t k = 0; k < n_cells; ++k)
    for (std::size_t w = 0; w < ns; ++w)
      labels.push_back(pair_label(frl.u_alphabet[k], s.alphabet[w]));

  std::vector<double> rows(ns * nf * n_cells * ns);
  for (std::size_t is = 0; is < ns; ++is) {
    auto rr_row = rr.row(is);
    for (std::size_t iy = 0; iy < nf; ++iy) {
      auto frl_row = frl.channel.row(is * nf + iy);
      double* row = rows.data() + (is * nf + iy) * (n_cells * ns);
      for (std::size_t k = 0; k < n_cells; ++k)
        for (std::size_t w = 0; w < ns; ++w) row[k * ns + w] = frl_row[k] * rr_row[w];
    }
  }
  return Channel({s, f}, Axis{"U", std::move(labels)}, std::move(rows));
}

struct LeakagePoint {
  double p;
  double leakage;
};

}  // namespace

Mechanism tune_leakage(const JointTable& joint, const FrlOutput& frl, double epsilon,
                       const std::string& s_axis, const std::string& f_axis) {
  if (!(epsilon >= 0.0)) {
    throw validation_error("tune_leakage: epsilon must be non-negative");
  }
  JointTable j2 = marginalize(joint, {s_axis, f_axis});
  const double h_s = entropy(marginal_pmf(j2, s_axis));

  if (h_s <= kClampTol) {
    // Constant private data: the randomized response carries nothing, return U0.
    Channel ch(frl.channel.input_axes(), Axis{"U", frl.u_alphabet}, frl.channel.rows());
    JointTable ext = extend_with_channel(j2, ch);
    Mechanism m{std::move(ch),
                mutual_information(ext, {"U"}, {s_axis}),
                mutual_information(ext, {"U"}, {f_axis}),
                1.0,
                epsilon > h_s,
                true};
    return m;
  }

  double target = epsilon;
  bool clamped = false;
  if (epsilon > h_s) {
    target = h_s;
    clamped = true;
  }

  const std::size_t ns = frl.s_size;
  const double p_min = 1.0 / double(ns);
  std::vector<LeakagePoint> trace;

  auto measure = [&](double p) {
    Channel rr = randomized_response(frl.channel.input_axes()[0], p);
    Channel u = compose_disclosure(frl, rr);
    JointTable ext = extend_with_channel(j2, u);
    double leak = mutual_information(ext, {"U"}, {s_axis});
    trace.push_back({p, leak});
    return std::tuple<double, double, Channel>(leak, mutual_information(ext, {"U"}, {f_axis}),
                                               std::move(u));
  };

  auto [leak_lo, util_lo, ch_lo] = measure(p_min);
  auto [leak_hi, util_hi, ch_hi] = measure(1.0);

  double p_star, leak_star, util_star;
  Channel ch_star = ch_lo;
  if (target <= leak_lo) {
    p_star = p_min, leak_star = leak_lo, util_star = util_lo;
  } else if (target >= leak_hi) {
    p_star = 1.0, leak_star = leak_hi, util_star = util_hi;
    ch_star = std::move(ch_hi);
  } else {
    double lo = p_min, hi = 1.0;
    p_star = hi, leak_star = leak_hi, util_star = util_hi;
    ch_star = std::move(ch_hi);
    for (int iter = 0; iter < 200 && hi - lo > 1e-15; ++iter) {
      double mid = 0.5 * (lo + hi);
      auto [leak, util, ch] = measure(mid);
      if (std::abs(leak - target) < std::abs(leak_star - target)) {
        p_star = mid, leak_star = leak, util_star = util;
        ch_star = std::move(ch);
      }
      if (std::abs(leak - target) <= 1e-12) break;
      (leak < target ? lo : hi) = mid;
    }
  }

  // The leakage must be non-decreasing in p; a violation means the composed
  // channel is wrong and the result cannot be trusted.
  std::sort(trace.begin(), trace.end(),
            [](const LeakagePoint& a, const LeakagePoint& b) { return a.p < b.p; });
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].leakage < trace[i - 1].leakage - 1e-12) {
      throw internal_error("tune_leakage: leakage not monotone in p (p=" +
                           std::to_string(trace[i].p) + ")");
    }
  }
  if (std::abs(leak_star - target) > 1e-9) {
    throw internal_error("tune_leakage: bisection missed target leakage by " +
                         std::to_string(std::abs(leak_star - target)));
  }

  return Mechanism{std::move(ch_star), leak_star, util_star, p_star, clamped, false};
}

std::pair<double, double> mechanism_utilities(const JointTable& joint3, const Mechanism& m,
                                              const std::string& f_axis,
                                              const std::string& h_axis) {
  JointTable ext = extend_with_channel(joint3, m.channel);
  const std::string& u = m.channel.output_axis().name;
  return {mutual_information(ext, {u}, {f_axis}), mutual_information(ext, {u}, {h_axis})};
}

}  // namespace sempriv
