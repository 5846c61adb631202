#include "apollonian/real.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace apollonian {

Real::Real(mpfr_prec_t bits) { mpfr_init2(value_, bits); }

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::of(unsigned long value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui(r.value_, value, MPFR_RNDN);
  return r;
}

Real Real::of(const mpz_class& value, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_z(r.value_, value.get_mpz_t(), MPFR_RNDN);
  return r;
}

mpfr_prec_t Real::bits_for_digits(int digits) {
  // 8 guard digits; log2(10) ~ 3.322
  return static_cast<mpfr_prec_t>(std::ceil((digits + 8) * 3.3220)) + 4;
}

Real Real::ln() const {
  Real r(precision());
  mpfr_log(r.value_, value_, MPFR_RNDN);
  return r;
}

Real Real::abs() const {
  Real r(precision());
  mpfr_abs(r.value_, value_, MPFR_RNDN);
  return r;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& x, const Real& y) {
  Real r(x.precision());
  mpfr_add(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real operator-(const Real& x, const Real& y) {
  Real r(x.precision());
  mpfr_sub(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& x, const Real& y) {
  Real r(x.precision());
  mpfr_mul(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real operator/(const Real& x, const Real& y) {
  Real r(x.precision());
  mpfr_div(r.value_, x.value_, y.value_, MPFR_RNDN);
  return r;
}

Real Real::operator*(const mpz_class& k) const {
  Real r(precision());
  mpfr_mul_z(r.value_, value_, k.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::operator/(const mpz_class& k) const {
  Real r(precision());
  mpfr_div_z(r.value_, value_, k.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real Real::pow10(long e, mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_ui(r.value_, 10, MPFR_RNDN);
  mpfr_pow_si(r.value_, r.value_, e, MPFR_RNDN);
  return r;
}

std::string Real::str(int digits) const {
  const int size = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, value_);
  std::vector<char> buf(static_cast<std::size_t>(size) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

mpz_class Real::floor() const {
  Real f(precision());
  mpfr_floor(f.value_, value_);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), f.value_, MPFR_RNDZ);
  return z;
}

}  // namespace apollonian
