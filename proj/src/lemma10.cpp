#include "rainbow/lemma10.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {
namespace {

MarginReport report(double lhs_log, double rhs_log) { return {lhs_log, rhs_log, rhs_log - lhs_log}; }

double log_sum_exp(const std::vector<double>& terms) {
  const double top = *std::max_element(terms.begin(), terms.end());
  if (!std::isfinite(top)) return top;
  double acc = 0;
  for (double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

}  // namespace

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

Lemma10Report check_lemma10(double n, int k, int j) {
  if (k < 1) throw RangeViolation("lemma10: k must be positive");
  if (!(n > 1)) throw RangeViolation("lemma10: n must exceed 1");
  const double s = std::sqrt(n * std::log(n));
  if (j < 100 * k || j > 4 * s) {
    throw RangeViolation("lemma10: j = " + std::to_string(j) + " outside [100k, 4 sqrt(n ln n)]");
  }
  Lemma10Report out{n, double(k), double(j), s, {}, {}, {}};
  const double log_n = std::log(n);

  out.ratio = report(log_binomial(n + 2 * s, j) - log_binomial(n - 2 * s, j), 20 * log_n);

  const double target = log_binomial(n / 2 - 2 * s, j - 22) - std::log(s);
  const double pool = k * std::cbrt(n) * j;
  std::vector<double> terms;
  for (int i = (j + k - 1) / k; i <= j; ++i) {
    terms.push_back(log_binomial(pool, i) + log_binomial(n / 2 + 2 * s, j - i));
  }
  out.sum = report(log_sum_exp(terms), target);

  out.single = report(log_binomial(std::pow(n, 2.0 / 3.0) + pool, j), target);
  return out;
}

}  // namespace rainbow
