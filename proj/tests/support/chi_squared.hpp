#pragma once

// Chi-squared goodness-of-fit helpers for the statistical tests. The
// p-value comes from the regularized incomplete gamma function
// Q(dof/2, chi2/2), evaluated by series / continued fraction.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace testsupport {

namespace detail {

inline double gamma_p_series(double a, double x) {
  double sum = 1.0 / a;
  double term = sum;
  for (int n = 1; n < 10000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-15) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace detail

// Regularized upper incomplete gamma Q(a, x).
inline double gamma_q(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
  return detail::gamma_q_contfrac(a, x);
}

inline double chi_squared_pvalue(double chi2, int dof) {
  if (dof < 1) throw std::invalid_argument("chi_squared_pvalue: dof must be >= 1");
  return gamma_q(dof / 2.0, chi2 / 2.0);
}

// Goodness of fit of observed counts against cell probabilities.
inline double chi_squared_gof_pvalue(std::span<const std::uint64_t> counts,
                                     std::span<const double> probs) {
  if (counts.size() != probs.size() || counts.size() < 2)
    throw std::invalid_argument("chi_squared_gof_pvalue: bad cell layout");
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  double chi2 = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = total * probs[i];
    if (expected <= 0.0) throw std::invalid_argument("chi_squared_gof_pvalue: zero expected cell");
    const double diff = static_cast<double>(counts[i]) - expected;
    chi2 += diff * diff / expected;
  }
  return chi_squared_pvalue(chi2, static_cast<int>(counts.size()) - 1);
}

inline double chi_squared_uniform_pvalue(std::span<const std::uint64_t> counts) {
  const std::vector<double> probs(counts.size(), 1.0 / static_cast<double>(counts.size()));
  return chi_squared_gof_pvalue(counts, probs);
}

// Two-sample homogeneity test: do two observed count vectors come from the
// same cell distribution?
inline double chi_squared_two_sample_pvalue(std::span<const std::uint64_t> a,
                                            std::span<const std::uint64_t> b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("chi_squared_two_sample_pvalue: bad cell layout");
  double na = 0.0, nb = 0.0;
  for (auto c : a) na += static_cast<double>(c);
  for (auto c : b) nb += static_cast<double>(c);
  double chi2 = 0.0;
  int used_cells = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double row = static_cast<double>(a[i]) + static_cast<double>(b[i]);
    if (row == 0.0) continue;
    ++used_cells;
    const double ea = row * na / (na + nb);
    const double eb = row * nb / (na + nb);
    const double da = static_cast<double>(a[i]) - ea;
    const double db = static_cast<double>(b[i]) - eb;
    chi2 += da * da / ea + db * db / eb;
  }
  if (used_cells < 2) throw std::invalid_argument("chi_squared_two_sample_pvalue: fewer than 2 cells");
  return chi_squared_pvalue(chi2, used_cells - 1);
}

}  // namespace testsupport
