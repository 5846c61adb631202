#include "apollonian/entropy.hpp"

#include <sstream>

#include "apollonian/errors.hpp"
#include "apollonian/graph.hpp"

namespace apollonian {

namespace {

Real ln_of(unsigned long v, mpfr_prec_t bits) { return Real::of(v, bits).ln(); }

// Explicit z_n expression; independent of the factored-count route.
Real z_explicit(int n, mpfr_prec_t bits) {
  const mpz_class p3 = pow_ui(3, n);
  const mpz_class p5 = pow_ui(5, n);
  const Real ln2 = ln_of(2, bits);
  Real numerator = ln_of(27, bits) - ln_of(5, bits)    // ln(27/5)
                   - ln2 * mpz_class(8)                //
                   + ln_of(15, bits) * p3              //
                   - ln_of(135, bits) * mpz_class(2 * n)
                   + Real::of(mpz_class(p3 + p5), bits).ln() * mpz_class(8);
  return numerator / mpz_class(2 * (5 + p3));
}

}  // namespace

Real ln_factored(const FactoredCount& f, mpfr_prec_t bits) {
  return ln_of(3, bits) * f.e3 + ln_of(5, bits) * f.e5 + Real::of(f.m, bits).ln() * mpz_class(2);
}

EntropyTable entropy_table(int n_max, int precision_digits) {
  if (n_max < 0) throw usage_error("n_max must be non-negative");
  if (precision_digits < 15) {
    throw usage_error("precision must be at least 15 digits, got " +
                      std::to_string(precision_digits));
  }
  const mpfr_prec_t bits = Real::bits_for_digits(precision_digits);
  const Real limit = ln_of(15, bits) / mpz_class(2);
  const Real one = Real::of(1ul, bits);
  const Real tolerance = Real::pow10(-precision_digits, bits);

  std::vector<EntropyRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const FactoredCount f = closed_s(n);
    const mpz_class v = order_size(n).first;
    Real ln_s = ln_factored(f, bits);
    Real z = ln_s / v;

    const Real z2 = z_explicit(n, bits);
    const Real scale = z.abs() < one ? one : z.abs();
    if (tolerance * scale < (z - z2).abs()) {
      throw consistency_error("the two z_n routes disagree at n = " + std::to_string(n) + ": " +
                              z.str(precision_digits) + " vs " + z2.str(precision_digits));
    }
    Real residual = (z - limit).abs();
    rows.push_back(EntropyRow{n, v, std::move(ln_s), std::move(z), std::move(residual)});
  }

  Real final_residual = rows.back().residual;
  return EntropyTable{precision_digits, std::move(rows), limit, std::move(final_residual)};
}

std::string entropy_csv(const EntropyTable& table) {
  const int d = table.precision_digits;
  std::ostringstream out;
  out << "n,V_n,ln_s,z_n,residual\n";
  for (const EntropyRow& row : table.rows) {
    out << row.n << ',' << row.v.get_str() << ',' << row.ln_s.str(d) << ',' << row.z.str(d) << ','
        << row.residual.str(d) << '\n';
  }
  out << "# limit = " << table.limit.str(d) << '\n';
  out << "# final_residual = " << table.final_residual.str(d) << '\n';
  return out.str();
}

std::vector<EntropyComparisonRow> entropy_comparison() {
  const double apollonian = Real::of(15ul, 64).ln().to_double() / 2.0;
  return {
      {"apollonian", apollonian},
      {"sierpinski-3d", 1.5694},
      {"hypercubic-lattice-3d", 1.6734},
  };
}

Real log10_factored(const FactoredCount& f) {
  // Enough precision that floor(log10) is exact for the digit count.
  const mpfr_prec_t bits =
      static_cast<mpfr_prec_t>(96 + mpz_sizeinbase(f.e3.get_mpz_t(), 2) +
                               mpz_sizeinbase(f.e5.get_mpz_t(), 2));
  return ln_factored(f, bits) / ln_of(10, bits);
}

mpz_class decimal_digit_count(const FactoredCount& f) { return log10_factored(f).floor() + 1; }

}  // namespace apollonian
