#include "sempriv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sempriv/bounds.hpp"
#include "sempriv/errors.hpp"
#include "sempriv/frl.hpp"
#include "sempriv/info.hpp"

namespace sempriv {

namespace {

constexpr std::size_t kAlphabetGuard = 16;
constexpr std::size_t kUSizeGuard = 64;
constexpr double kFeasSlack = 1e-12;
constexpr double kPassTol = 1e-10;
constexpr double kTiny = 1e-300;

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;  // [0,1)
}

// Euclidean projection onto the probability simplex.
void project_simplex(std::vector<double>& v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, tau = 0.0;
  std::size_t rho = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double t = (css - 1.0) / double(i + 1);
    if (u[i] - t > 0.0) {
      rho = i;
      tau = t;
    }
  }
  (void)rho;
  double sum = 0.0;
  for (double& x : v) {
    x = std::max(x - tau, 0.0);
    sum += x;
  }
  if (sum > 0.0) {
    for (double& x : v) x /= sum;
  } else {
    std::fill(v.begin(), v.end(), 1.0 / double(v.size()));
  }
}

// Channel matrix over inputs (s,f), s-major, and the measures the search needs.
class SearchProblem {
 public:
  SearchProblem(std::vector<double> p_sf, std::size_t ns, std::size_t nf, std::size_t nu)
      : p_sf_(std::move(p_sf)), ns_(ns), nf_(nf), nu_(nu) {}

  std::size_t n_inputs() const { return ns_ * nf_; }
  std::size_t nu() const { return nu_; }
  double input_mass(std::size_t x) const { return p_sf_[x]; }

  struct Eval {
    double utility = 0.0;  // I(U;F)
    double leakage = 0.0;  // I(U;S)
  };

  Eval evaluate(const std::vector<double>& q) const {
    std::vector<double> j_uf(nu_ * nf_, 0.0), m_us(nu_ * ns_, 0.0);
    for (std::size_t is = 0; is < ns_; ++is) {
      for (std::size_t iy = 0; iy < nf_; ++iy) {
        const double mass = p_sf_[is * nf_ + iy];
        if (mass <= 0.0) continue;
        const double* row = q.data() + (is * nf_ + iy) * nu_;
        for (std::size_t u = 0; u < nu_; ++u) {
          j_uf[u * nf_ + iy] += mass * row[u];
          m_us[u * ns_ + is] += mass * row[u];
        }
      }
    }
    return Eval{pair_mi(j_uf, nu_, nf_), pair_mi(m_us, nu_, ns_)};
  }

  // d I(U;F) / d q[x][u] = p(x) ln P(f|u);  d I(U;S) / d q[x][u] = p(x) ln P(s|u).
  void gradients(const std::vector<double>& q, std::vector<double>& g_util,
                 std::vector<double>& g_leak) const {
    std::vector<double> j_uf(nu_ * nf_, 0.0), m_us(nu_ * ns_, 0.0), p_u(nu_, 0.0);
    for (std::size_t is = 0; is < ns_; ++is) {
      for (std::size_t iy = 0; iy < nf_; ++iy) {
        const double mass = p_sf_[is * nf_ + iy];
        if (mass <= 0.0) continue;
        const double* row = q.data() + (is * nf_ + iy) * nu_;
        for (std::size_t u = 0; u < nu_; ++u) {
          j_uf[u * nf_ + iy] += mass * row[u];
          m_us[u * ns_ + is] += mass * row[u];
        }
      }
    }
    for (std::size_t u = 0; u < nu_; ++u)
      for (std::size_t iy = 0; iy < nf_; ++iy) p_u[u] += j_uf[u * nf_ + iy];

    g_util.assign(n_inputs() * nu_, 0.0);
    g_leak.assign(n_inputs() * nu_, 0.0);
    for (std::size_t is = 0; is < ns_; ++is) {
      for (std::size_t iy = 0; iy < nf_; ++iy) {
        const std::size_t x = is * nf_ + iy;
        const double mass = p_sf_[x];
        if (mass <= 0.0) continue;
        for (std::size_t u = 0; u < nu_; ++u) {
          const double pu = std::max(p_u[u], kTiny);
          g_util[x * nu_ + u] = mass * std::log(std::max(j_uf[u * nf_ + iy], kTiny) / pu);
          g_leak[x * nu_ + u] = mass * std::log(std::max(m_us[u * ns_ + is], kTiny) / pu);
        }
      }
    }
  }

 private:
  static double pair_mi(const std::vector<double>& joint, std::size_t na, std::size_t nb) {
    std::vector<double> pa(na, 0.0), pb(nb, 0.0);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        pa[a] += joint[a * nb + b];
        pb[b] += joint[a * nb + b];
      }
    double mi = 0.0;
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < nb; ++b) {
        const double p = joint[a * nb + b];
        if (p > 0.0) mi += p * std::log(p / (pa[a] * pb[b]));
      }
    return (mi < 0.0 && mi > -kClampTol) ? 0.0 : mi;
  }

  std::vector<double> p_sf_;
  std::size_t ns_, nf_, nu_;
};

struct BestPoint {
  double value = -1.0;
  double leakage = 0.0;
  std::vector<double> q;
};

void consider(const SearchProblem& prob, const std::vector<double>& q, double eps,
              BestPoint& best) {
  auto ev = prob.evaluate(q);
  if (ev.leakage <= eps + kFeasSlack && ev.utility > best.value) {
    best = BestPoint{ev.utility, ev.leakage, q};
  }
}

// Mix toward the constant channel until the leakage constraint holds.
std::vector<double> restore_feasibility(const SearchProblem& prob, std::vector<double> q,
                                        double eps) {
  if (prob.evaluate(q).leakage <= eps + kFeasSlack) return q;
  const std::size_t nu = prob.nu();
  std::vector<double> constant(q.size(), 0.0);
  for (std::size_t x = 0; x < prob.n_inputs(); ++x) constant[x * nu] = 1.0;

  auto blend = [&](double t) {
    std::vector<double> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = (1.0 - t) * q[i] + t * constant[i];
    return out;
  };
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 60; ++iter) {
    double mid = 0.5 * (lo + hi);
    (prob.evaluate(blend(mid)).leakage <= eps + kFeasSlack ? hi : lo) = mid;
  }
  return blend(hi);
}

// Penalized block-coordinate ascent from one starting point.
void local_search(const SearchProblem& prob, std::vector<double> q, double eps, int max_iters,
                  BestPoint& best) {
  consider(prob, q, eps, best);
  {
    auto restored = restore_feasibility(prob, q, eps);
    consider(prob, restored, eps, best);
    q = std::move(restored);
  }

  const std::size_t nu = prob.nu();
  std::vector<double> g_util, g_leak, row(nu), cand;
  int iters = 0;
  for (double mu : {4.0, 16.0, 64.0, 256.0, 1024.0}) {
    auto phi = [&](const std::vector<double>& point) {
      auto ev = prob.evaluate(point);
      return ev.utility - mu * std::max(0.0, ev.leakage - eps);
    };
    double cur = phi(q);
    bool improving = true;
    while (improving && iters < max_iters) {
      improving = false;
      double pass_gain = 0.0;
      for (std::size_t x = 0; x < prob.n_inputs() && iters < max_iters; ++x) {
        if (prob.input_mass(x) <= 0.0) continue;
        ++iters;
        prob.gradients(q, g_util, g_leak);
        const bool active = prob.evaluate(q).leakage > eps;
        double gmax = 0.0;
        for (std::size_t u = 0; u < nu; ++u) {
          row[u] = g_util[x * nu + u] - (active ? mu * g_leak[x * nu + u] : 0.0);
          gmax = std::max(gmax, std::abs(row[u]));
        }
        if (gmax < 1e-14) continue;
        for (double step = 1.0; step >= 1.0 / 64.0; step *= 0.5) {
          cand = q;
          for (std::size_t u = 0; u < nu; ++u)
            cand[x * nu + u] = q[x * nu + u] + (step / gmax) * row[u];
          std::vector<double> r(cand.begin() + x * nu, cand.begin() + (x + 1) * nu);
          project_simplex(r);
          std::copy(r.begin(), r.end(), cand.begin() + x * nu);
          double val = phi(cand);
          if (val > cur + 1e-12) {
            pass_gain += val - cur;
            cur = val;
            q = std::move(cand);
            consider(prob, q, eps, best);
            break;
          }
        }
      }
      improving = pass_gain > kPassTol;
    }
  }
  consider(prob, restore_feasibility(prob, std::move(q), eps), eps, best);
}

}  // namespace

OracleResult estimate_h_eps(const JointTable& joint, const std::string& s_axis,
                            const std::string& f_axis, double epsilon,
                            const OracleOptions& opts) {
  if (!(epsilon >= 0.0)) {
    throw validation_error("estimate_h_eps: epsilon must be non-negative");
  }
  JointTable j2 = marginalize(joint, {s_axis, f_axis});
  const std::size_t si = j2.axis_index(s_axis);
  const std::size_t fi = j2.axis_index(f_axis);
  const Axis s_ax = j2.axes()[si];
  const Axis f_ax = j2.axes()[fi];
  const std::size_t ns = s_ax.alphabet.size();
  const std::size_t nf = f_ax.alphabet.size();
  if (ns * nf > kAlphabetGuard) {
    throw validation_error("estimate_h_eps: |S|*|F| = " + std::to_string(ns * nf) +
                           " exceeds the desk-scale guard of 16");
  }
  const std::size_t nu = opts.u_size == 0 ? ns * nf + 1 : opts.u_size;
  if (nu < 1 || nu > kUSizeGuard) {
    throw validation_error("estimate_h_eps: u_size " + std::to_string(nu) +
                           " outside [1, 64]");
  }

  // s-major view of the joint.
  std::vector<double> p_sf(ns * nf);
  for (std::size_t is = 0; is < ns; ++is)
    for (std::size_t iy = 0; iy < nf; ++iy)
      p_sf[is * nf + iy] = j2.cells()[is * j2.stride(si) + iy * j2.stride(fi)];
  SearchProblem prob(std::move(p_sf), ns, nf, nu);

  BestPoint best;
  int starts = 0;
  auto run_start = [&](std::vector<double> q) {
    local_search(prob, std::move(q), epsilon, opts.max_iters, best);
    ++starts;
  };

  // Constant channel: always feasible, anchors the search.
  {
    std::vector<double> q(ns * nf * nu, 0.0);
    for (std::size_t x = 0; x < ns * nf; ++x) q[x * nu] = 1.0;
    run_start(std::move(q));
  }
  // Copy of F.
  if (nu >= nf) {
    std::vector<double> q(ns * nf * nu, 0.0);
    for (std::size_t is = 0; is < ns; ++is)
      for (std::size_t iy = 0; iy < nf; ++iy) q[(is * nf + iy) * nu + iy] = 1.0;
    run_start(std::move(q));
  }
  // Tuned EFRL channel: certifies the constructive lower bound when it fits.
  if (opts.include_efrl_seed) {
    FrlOutput frl = construct_frl(j2, s_axis, f_axis);
    if (frl.u_alphabet.size() * ns <= nu) {
      const double h_s = entropy(marginal_pmf(j2, s_axis));
      Mechanism m = tune_leakage(j2, frl, std::min(epsilon, h_s), s_axis, f_axis);
      const std::size_t m_out = m.channel.output_size();
      std::vector<double> q(ns * nf * nu, 0.0);
      for (std::size_t x = 0; x < ns * nf; ++x) {
        auto row = m.channel.row(x);
        for (std::size_t u = 0; u < m_out; ++u) q[x * nu + u] = row[u];
      }
      run_start(std::move(q));
    }
  }
  // Caller-provided warm start (e.g. the previous grid point's channel).
  if (opts.warm_start) {
    const Channel& w = *opts.warm_start;
    if (w.input_axes().size() != 2 || w.input_axes()[0] != s_ax || w.input_axes()[1] != f_ax) {
      throw validation_error("estimate_h_eps: warm start input axes do not match the joint");
    }
    if (w.output_size() > nu) {
      throw validation_error("estimate_h_eps: warm start output larger than u_size");
    }
    std::vector<double> q(ns * nf * nu, 0.0);
    for (std::size_t x = 0; x < ns * nf; ++x) {
      auto row = w.row(x);
      for (std::size_t u = 0; u < w.output_size(); ++u) q[x * nu + u] = row[u];
    }
    run_start(std::move(q));
  }
  // Random restarts, one stream per index.
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 rng(mix64(opts.seed * 0x100000001B3ULL + std::uint64_t(r)));
    std::vector<double> q(ns * nf * nu);
    for (std::size_t x = 0; x < ns * nf; ++x) {
      double sum = 0.0;
      for (std::size_t u = 0; u < nu; ++u) {
        double e = -std::log(1.0 - uniform01(rng));
        q[x * nu + u] = e;
        sum += e;
      }
      for (std::size_t u = 0; u < nu; ++u) {
        q[x * nu + u] = sum > 0.0 ? q[x * nu + u] / sum : 1.0 / double(nu);
      }
    }
    run_start(std::move(q));
  }

  if (best.value < 0.0) {
    throw internal_error("estimate_h_eps: no feasible channel found");
  }

  std::vector<std::string> u_labels;
  u_labels.reserve(nu);
  for (std::size_t u = 0; u < nu; ++u) u_labels.push_back("u" + std::to_string(u));
  Channel ch({s_ax, f_ax}, Axis{"U", std::move(u_labels)}, std::move(best.q));
  return OracleResult{best.value, std::move(ch), best.leakage, starts, opts.seed, nu};
}

SandwichReport verify_sandwich(const JointTable& joint, const std::string& s_axis,
                               const std::string& f_axis, std::vector<double> eps_grid,
                               const OracleOptions& opts) {
  std::sort(eps_grid.begin(), eps_grid.end());
  SandwichReport rep;
  rep.passed = true;
  OracleOptions local = opts;
  for (double eps : eps_grid) {
    BoundsReport b = theorem1_bounds(joint, s_axis, f_axis, eps);
    OracleResult res = estimate_h_eps(joint, s_axis, f_axis, eps, local);
    local.warm_start = res.channel;

    // The constructive lower bounds require a leakage budget no larger than
    // H(S); past that only feasibility and the upper bound are meaningful.
    double lower = 0.0;
    if (eps <= b.H_S + 1e-9) {
      lower = std::max(b.L_h1, b.L_h2_clamped.value_or(0.0));
      lower = std::max(lower, 0.0);
    }
    SandwichRow row;
    row.epsilon = eps;
    row.lower = lower;
    row.estimate = res.value;
    row.upper = b.upper_h_eps;
    row.leakage = res.leakage;
    row.lower_margin = res.value - (lower - 1e-6);
    row.upper_margin = (b.upper_h_eps + 1e-9) - res.value;
    row.ok = row.lower_margin >= 0.0 && row.upper_margin >= 0.0 && res.leakage <= eps + 1e-9;
    rep.passed = rep.passed && row.ok;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace sempriv
