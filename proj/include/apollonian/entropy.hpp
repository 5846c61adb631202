#ifndef APOLLONIAN_ENTROPY_HPP
#define APOLLONIAN_ENTROPY_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "apollonian/exact_count.hpp"
#include "apollonian/real.hpp"

namespace apollonian {

/// One row of the spanning-tree entropy table: z_n = ln(s_n) / V_n.
struct EntropyRow {
  int n;
  mpz_class v;    // V_n
  Real ln_s;      // ln s_n, from the factored count
  Real z;         // ln s_n / V_n
  Real residual;  // |z_n - ln(15)/2|
};

struct EntropyTable {
  int precision_digits;
  std::vector<EntropyRow> rows;   // n = 0 .. n_max
  Real limit;                     // ln(15)/2
  Real final_residual;            // |z_{n_max} - limit|
};

/// Rows for n = 0..n_max at the requested precision (>= 15 digits).
///
/// Every z_n is computed twice: from the factored count as
/// (e3 ln3 + e5 ln5 + 2 ln m)/V_n, and from the explicit expression
///   z_n = (-8 ln2 + ln(27/5) + 3^n ln15 - 2n ln135 + 8 ln(3^n+5^n))
///         / (2 (5 + 3^n)).
/// The two independent routes must agree to the requested precision;
/// disagreement throws consistency_error. s_n itself is never expanded.
EntropyTable entropy_table(int n_max, int precision_digits);

/// CSV with fixed header "n,V_n,ln_s,z_n,residual", one row per n, then
/// the limit and final residual as '#' comment lines. Byte-stable.
std::string entropy_csv(const EntropyTable& table);

struct EntropyComparisonRow {
  std::string graph;
  double entropy;
};

/// Spanning-tree entropies of graphs with the same average degree:
/// this family (ln 15 / 2), the 3-dimensional Sierpinski graph and the
/// 3-dimensional hypercubic lattice.
std::vector<EntropyComparisonRow> entropy_comparison();

/// ln(3^e3 * 5^e5 * m^2) without expanding the integer.
Real ln_factored(const FactoredCount& f, mpfr_prec_t bits);

/// log10 of the factored value, at a precision that makes its floor exact.
Real log10_factored(const FactoredCount& f);

/// Number of decimal digits of the factored value.
mpz_class decimal_digit_count(const FactoredCount& f);

}  // namespace apollonian

#endif  // APOLLONIAN_ENTROPY_HPP
