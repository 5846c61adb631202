#ifndef APOLLONIAN_REAL_HPP
#define APOLLONIAN_REAL_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace apollonian {

/// Thin RAII wrapper over an mpfr_t. Just enough arithmetic for the
/// entropy computations: exact-integer ingestion, logarithms, the four
/// basic operations and deterministic decimal formatting. All operations
/// round to nearest at the precision of the left operand.
class Real {
 public:
  explicit Real(mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real of(unsigned long value, mpfr_prec_t bits);
  static Real of(const mpz_class& value, mpfr_prec_t bits);

  /// Working precision for `digits` significant decimal digits plus a
  /// few guard digits.
  static mpfr_prec_t bits_for_digits(int digits);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  Real ln() const;
  Real abs() const;
  Real operator-() const;

  friend Real operator+(const Real& x, const Real& y);
  friend Real operator-(const Real& x, const Real& y);
  friend Real operator*(const Real& x, const Real& y);
  friend Real operator/(const Real& x, const Real& y);
  Real operator*(const mpz_class& k) const;
  Real operator/(const mpz_class& k) const;

  friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.value_, y.value_); }
  friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.value_, y.value_); }
  friend bool operator<=(const Real& x, const Real& y) {
    return mpfr_lessequal_p(x.value_, y.value_);
  }

  bool is_zero() const { return mpfr_zero_p(value_); }

  /// 10^e at this value's precision.
  static Real pow10(long e, mpfr_prec_t bits);

  /// Nearest-rounded decimal with `digits` significant digits (printf %g
  /// semantics); byte-stable across runs.
  std::string str(int digits) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Largest integer <= value.
  mpz_class floor() const;

 private:
  mpfr_t value_;
};

}  // namespace apollonian

#endif  // APOLLONIAN_REAL_HPP
