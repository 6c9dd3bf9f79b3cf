#include "kempner/divisor_product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "kempner/arith.hpp"
#include "kempner/prime_table.hpp"

namespace kempner {

std::vector<std::pair<u64, u64>> divisor_product_exponents(const FactoredNat& m) {
  u64 t = tau(m);
  std::vector<std::pair<u64, u64>> out;
  for (const auto& pp : m.parts())
    out.emplace_back(pp.prime, checked_mul(pp.exp, t));
  return out;
}

bool divides_divisor_product(const FactoredNat& n, const FactoredNat& m) {
  u64 t = tau(m);
  for (const auto& pp : n.parts())
    if (checked_mul(2, pp.exp) > checked_mul(m.exponent_of(pp.prime), t))
      return false;
  return true;
}

ThetaProblem::ThetaProblem(const FactoredNat& nat) : n(nat) {
  for (const auto& pp : nat.parts()) {
    primes.push_back(pp.prime);
    alphas.push_back(pp.exp);
  }
}

double ThetaProblem::g(std::size_t i, const std::vector<double>& x) const {
  double prod = 1;
  for (double xj : x) prod *= xj + 1;
  return x[i] * prod - 2.0 * static_cast<double>(alphas[i]);
}

ThetaSolution theta_paper(const FactoredNat& n) {
  if (n.is_one()) throw std::domain_error("theta_paper: n = 1 (every m works)");
  ThetaProblem prob(n);
  std::size_t t = prob.primes.size();

  ThetaSolution best;
  best.mode = ThetaMode::PaperIp;
  bool have = false;

  std::vector<u64> x(t, 0);
  // odometer over the box, most significant coordinate last, so candidates
  // arrive in ascending lexicographic order of the exponent vector
  for (;;) {
    u64 tau_x = 1;
    for (std::size_t i = 0; i < t; ++i) tau_x = checked_mul(tau_x, x[i] + 1);
    bool feasible = true;
    for (std::size_t i = 0; i < t; ++i)
      if (checked_mul(x[i], tau_x) < 2 * prob.alphas[i]) {
        feasible = false;
        break;
      }
    if (feasible) {
      BigInt value = 1;
      for (std::size_t i = 0; i < t; ++i) value *= big_pow(prob.primes[i], x[i]);
      if (!have || value < best.objective) {
        have = true;
        best.objective = value;
        best.exponents = x;
      }
    }
    std::size_t i = t;
    while (i-- > 0) {
      if (x[i] < 2 * prob.alphas[i]) {
        ++x[i];
        std::fill(x.begin() + static_cast<std::ptrdiff_t>(i) + 1, x.end(), 0);
        break;
      }
      if (i == 0) {
        std::vector<PrimePower> parts;
        for (std::size_t j = 0; j < t; ++j)
          if (best.exponents[j] > 0)
            parts.push_back({prob.primes[j], static_cast<u32>(best.exponents[j])});
        best.m = FactoredNat::from_parts(std::move(parts));
        return best;
      }
    }
  }
}

ThetaSolution theta_exact(const FactoredNat& n) {
  ThetaSolution sol;
  sol.mode = ThetaMode::Exact;
  if (n.is_one()) {
    sol.m = FactoredNat::one();
    sol.objective = 1;
    return sol;
  }
  for (u64 m = 1;; ++m) {
    FactoredNat fm = factorize(m);
    if (divides_divisor_product(n, fm)) {
      sol.m = fm;
      sol.objective = m;
      for (const auto& pp : fm.parts()) sol.exponents.push_back(pp.exp);
      return sol;
    }
  }
}

namespace {

// lex order: ascending-lex odometer above guarantees the first minimum kept
// is the lexicographically smallest, matching the documented tie-break

struct Workspace {
  std::vector<double> logp;
  std::vector<double> alphas;
  std::size_t t;
};

double product_term(const Workspace& w, const std::vector<double>& x) {
  double s = 0;
  for (std::size_t i = 0; i < w.t; ++i) s += x[i] * w.logp[i];
  return std::exp(s);
}

double tau_cont(const std::vector<double>& x) {
  double prod = 1;
  for (double xi : x) prod *= xi + 1;
  return prod;
}

std::vector<double> constraint_values(const Workspace& w,
                                      const std::vector<double>& x) {
  double T = tau_cont(x);
  std::vector<double> g(w.t);
  for (std::size_t i = 0; i < w.t; ++i) g[i] = x[i] * T - 2 * w.alphas[i];
  return g;
}

// dg_i/dx_j with T = prod (x_k + 1)
double constraint_grad(const std::vector<double>& x, double T, std::size_t i,
                       std::size_t j) {
  if (i == j) return T * (2 * x[i] + 1) / (x[i] + 1);
  return x[i] * T / (x[j] + 1);
}

// solves A d = b in place, partial pivoting; false when singular
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b,
                 std::vector<double>& out) {
  std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
    if (std::fabs(a[piv][k]) < 1e-300) return false;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  out.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * out[j];
    out[i] = s / a[i][i];
  }
  return true;
}

double barrier_value(const Workspace& w, const std::vector<double>& x, double r) {
  auto g = constraint_values(w, x);
  double v = product_term(w, x);
  for (double gi : g) {
    if (gi <= 0) return std::numeric_limits<double>::infinity();
    v -= r * std::log(gi);
  }
  return v;
}

// one damped-Newton descent of U(., r); returns iterations used
int minimize_barrier(const Workspace& w, std::vector<double>& x, double r,
                     bool& converged) {
  const int cap = 200;
  int it = 0;
  for (; it < cap; ++it) {
    double T = tau_cont(x);
    double f = product_term(w, x);
    auto g = constraint_values(w, x);

    std::vector<double> grad(w.t);
    for (std::size_t j = 0; j < w.t; ++j) {
      grad[j] = f * w.logp[j];
      for (std::size_t i = 0; i < w.t; ++i)
        grad[j] -= r * constraint_grad(x, T, i, j) / g[i];
    }
    double gnorm = 0;
    for (double v : grad) gnorm = std::max(gnorm, std::fabs(v));
    if (gnorm <= 1e-9 * std::max(1.0, f)) {
      converged = true;
      return it;
    }

    std::vector<std::vector<double>> hess(w.t, std::vector<double>(w.t, 0));
    for (std::size_t a = 0; a < w.t; ++a)
      for (std::size_t b = 0; b < w.t; ++b) {
        double h = f * w.logp[a] * w.logp[b];
        for (std::size_t i = 0; i < w.t; ++i) {
          double da = constraint_grad(x, T, i, a);
          double db = constraint_grad(x, T, i, b);
          // second derivative of g_i
          double d2;
          if (a == i && b == i)
            d2 = 2 * T / (x[i] + 1);
          else if (a == i)
            d2 = T * (2 * x[i] + 1) / ((x[i] + 1) * (x[b] + 1));
          else if (b == i)
            d2 = T * (2 * x[i] + 1) / ((x[i] + 1) * (x[a] + 1));
          else if (a == b)
            d2 = 0;
          else
            d2 = x[i] * T / ((x[a] + 1) * (x[b] + 1));
          h += r * (da * db / (g[i] * g[i]) - d2 / g[i]);
        }
        hess[a][b] = h;
      }

    std::vector<double> step;
    double ridge = 0;
    std::vector<double> negg(w.t);
    for (std::size_t j = 0; j < w.t; ++j) negg[j] = -grad[j];
    for (;;) {
      auto h = hess;
      for (std::size_t j = 0; j < w.t; ++j) h[j][j] += ridge;
      double descent = 0;
      if (solve_dense(h, negg, step)) {
        for (std::size_t j = 0; j < w.t; ++j) descent += step[j] * grad[j];
        if (descent < 0) break;
      }
      ridge = ridge == 0 ? 1e-6 * std::max(1.0, f) : ridge * 10;
      if (ridge > 1e12 * std::max(1.0, f)) {
        // steepest descent fallback
        step.assign(w.t, 0);
        for (std::size_t j = 0; j < w.t; ++j) step[j] = -grad[j] / (1 + gnorm);
        break;
      }
    }

    double u0 = barrier_value(w, x, r);
    double lam = 1;
    std::vector<double> trial(w.t);
    bool moved = false;
    for (int back = 0; back < 60; ++back) {
      for (std::size_t j = 0; j < w.t; ++j) trial[j] = x[j] + lam * step[j];
      bool inside = true;
      for (double v : trial)
        if (v <= -0.999) inside = false;
      if (inside && barrier_value(w, trial, r) < u0) {
        x = trial;
        moved = true;
        break;
      }
      lam /= 2;
    }
    if (!moved) {
      converged = true;  // no further progress representable
      return it;
    }
  }
  converged = false;
  return it;
}

// Newton on the square system g_i(x) = 0
bool solve_active_system(const Workspace& w, std::vector<double>& x, int& iters) {
  for (int it = 0; it < 200; ++it) {
    ++iters;
    double T = tau_cont(x);
    auto g = constraint_values(w, x);
    double resid = 0;
    for (double gi : g) resid = std::max(resid, std::fabs(gi));
    double scale = 1;
    for (double ai : w.alphas) scale = std::max(scale, 2 * ai);
    if (resid <= 1e-12 * scale) return true;

    std::vector<std::vector<double>> jac(w.t, std::vector<double>(w.t));
    for (std::size_t i = 0; i < w.t; ++i)
      for (std::size_t j = 0; j < w.t; ++j)
        jac[i][j] = constraint_grad(x, T, i, j);
    std::vector<double> rhs(w.t);
    for (std::size_t i = 0; i < w.t; ++i) rhs[i] = -g[i];
    std::vector<double> step;
    if (!solve_dense(jac, rhs, step)) return false;

    double lam = 1;
    for (int back = 0; back < 50; ++back) {
      std::vector<double> trial(w.t);
      bool ok = true;
      for (std::size_t j = 0; j < w.t; ++j) {
        trial[j] = x[j] + lam * step[j];
        if (trial[j] <= -0.999) ok = false;
      }
      if (ok) {
        auto gt = constraint_values(w, trial);
        double rt = 0;
        for (double gi : gt) rt = std::max(rt, std::fabs(gi));
        if (rt < resid) {
          x = trial;
          break;
        }
      }
      lam /= 2;
      if (back == 49) return false;
    }
  }
  return false;
}

}  // namespace

ThetaSolution theta_sumt(const FactoredNat& n, std::vector<double> r_schedule,
                         double tol) {
  if (n.is_one()) throw std::domain_error("theta_sumt: n = 1");
  ThetaProblem prob(n);
  Workspace w;
  w.t = prob.primes.size();
  for (std::size_t i = 0; i < w.t; ++i) {
    w.logp.push_back(std::log(static_cast<double>(prob.primes[i])));
    w.alphas.push_back(static_cast<double>(prob.alphas[i]));
  }
  if (r_schedule.empty()) {
    double scale = product_term(w, std::vector<double>(w.t, 1.0));
    for (double r = scale; r > 1e-9 * scale; r /= 4) r_schedule.push_back(r);
  }

  ThetaSolution sol;
  sol.mode = ThetaMode::Continuous;
  sol.converged = true;

  // interior start
  std::vector<double> x(w.t);
  for (std::size_t i = 0; i < w.t; ++i) x[i] = 2 * w.alphas[i];

  for (double r : r_schedule) {
    bool ok = false;
    sol.iterations += minimize_barrier(w, x, r, ok);
    if (!ok) sol.converged = false;
  }
  sol.barrier_x = x;

  int active_iters = 0;
  if (!solve_active_system(w, x, active_iters)) sol.converged = false;
  sol.iterations += active_iters;
  sol.x = x;
  sol.objective_real = product_term(w, x);

  if (w.t == 2) {
    CubicRoots cubic = two_prime_cubic(prob.alphas[0], prob.alphas[1]);
    double best = std::numeric_limits<double>::infinity();
    for (double root : cubic.real_roots)
      best = std::min(best, std::fabs(root - x[1]));
    double ratio = w.alphas[0] / w.alphas[1];
    if (best > tol || std::fabs(x[0] - ratio * x[1]) > tol)
      sol.converged = false;
  }
  return sol;
}

CubicRoots two_prime_cubic(u64 a1, u64 a2) {
  if (a1 == 0 || a2 == 0)
    throw std::invalid_argument("two_prime_cubic: exponents must be >= 1");
  CubicRoots out;
  i64 s1 = static_cast<i64>(a1), s2 = static_cast<i64>(a2);
  out.coeffs = {s1, s1 + s2, s2, -2 * s2 * s2};

  double c3 = static_cast<double>(out.coeffs[0]);
  double c2 = static_cast<double>(out.coeffs[1]);
  double c1 = static_cast<double>(out.coeffs[2]);
  double c0 = static_cast<double>(out.coeffs[3]);

  // monic x^3 + a x^2 + b x + c, depressed with x = y - a/3
  double a = c2 / c3, b = c1 / c3, c = c0 / c3;
  double p = b - a * a / 3;
  double q = 2 * a * a * a / 27 - a * b / 3 + c;
  double disc = q * q / 4 + p * p * p / 27;

  std::vector<double> roots;
  if (disc > 0) {
    double s = std::sqrt(disc);
    double y = std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s);
    roots.push_back(y - a / 3);
  } else if (disc == 0) {
    double y = std::cbrt(-q / 2);
    roots.push_back(2 * y - a / 3);
    roots.push_back(-y - a / 3);
  } else {
    double rho = 2 * std::sqrt(-p / 3);
    double theta = std::acos(std::clamp(3 * q / (p * rho), -1.0, 1.0)) / 3;
    constexpr double kTwoPi = 2 * std::numbers::pi_v<double>;
    for (int k = 0; k < 3; ++k)
      roots.push_back(rho * std::cos(theta - kTwoPi * k / 3) - a / 3);
  }

  auto poly = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
  auto dpoly = [&](double x) { return (3 * c3 * x + 2 * c2) * x + c1; };
  for (double& root : roots) {
    double d = dpoly(root);
    if (std::fabs(d) > 1e-12) root -= poly(root) / d;  // one Newton step
  }
  std::sort(roots.begin(), roots.end());
  out.real_roots = std::move(roots);
  return out;
}

}  // namespace kempner
