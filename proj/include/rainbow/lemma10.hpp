#pragma once

// Log-space evaluation of three binomial estimates used when embedding crowns
// in dense band families. n is astronomically large here, so everything is
// done with log-gamma in double precision; nothing is shared with the exact
// rational code.

namespace rainbow {

// ln C(n, k) for real n >= k >= 0.
double log_binomial(double n, double k);

struct MarginReport {
  double lhs_log;     // log of the left-hand side
  double rhs_log;     // log of the bound it must not exceed
  double margin;      // rhs_log - lhs_log; positive means the inequality holds
  bool holds() const { return margin > 0; }
};

struct Lemma10Report {
  double n, k, j;
  double spread;  // sqrt(n ln n)
  // C(n + 2s, j) / C(n - 2s, j) <= n^20
  MarginReport ratio;
  // sum_{i = ceil(j/k)}^{j} C(k n^{1/3} j, i) C(n/2 + 2s, j - i)
  //   <= C(n/2 - 2s, j - 22) / s
  MarginReport sum;
  // C(n^{2/3} + k n^{1/3} j, j) <= C(n/2 - 2s, j - 22) / s
  MarginReport single;
  bool all_hold() const { return ratio.holds() && sum.holds() && single.holds(); }
};

// Requires k >= 1 and 100k <= j <= 4 sqrt(n ln n); throws RangeViolation.
Lemma10Report check_lemma10(double n, int k, int j);

}  // namespace rainbow
