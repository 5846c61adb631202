#include "apollonian/exact_count.hpp"

#include <string>

#include "apollonian/errors.hpp"

namespace apollonian {

namespace {

void require_step(int n) {
  if (n < 0) throw usage_error("step index must be non-negative, got " + std::to_string(n));
}

mpz_class pow_int(unsigned long base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace

mpz_class pow_ui(unsigned long base, const mpz_class& exp) {
  if (exp < 0) throw consistency_error("negative exponent in integer power");
  if (!exp.fits_ulong_p()) {
    throw size_guard_error("exponent " + exp.get_str() + " too large to expand");
  }
  return pow_int(base, exp.get_ui());
}

mpz_class exact_quarter(const mpz_class& x) {
  if (!mpz_divisible_ui_p(x.get_mpz_t(), 4)) {
    throw consistency_error("expected a multiple of 4, got " + x.get_str());
  }
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 4);
  return r;
}

mpz_class exact_half(const mpz_class& x) {
  if (mpz_odd_p(x.get_mpz_t())) {
    throw consistency_error("expected an even value, got " + x.get_str());
  }
  mpz_class r;
  mpz_divexact_ui(r.get_mpz_t(), x.get_mpz_t(), 2);
  return r;
}

ClassCensus census_seed() { return ClassCensus{0, 1, 0, 0, 3}; }

ClassCensus census_step(const ClassCensus& prev) {
  const mpz_class& a = prev.a;
  const mpz_class& b = prev.b;
  const mpz_class& c = prev.c;
  const mpz_class a2 = a * a;
  const mpz_class a3 = a2 * a;
  const mpz_class b2 = b * b;
  const mpz_class b3 = b2 * b;

  ClassCensus next;
  next.n = prev.n + 1;
  next.a = 3 * a3 + 6 * a2 * b;
  next.b = a3 + 7 * a2 * b + 7 * a * b2 + a2 * c;
  next.c = a3 + 12 * a2 * b + 36 * a * b2 + 14 * b3 + 3 * a2 * c + 12 * a * b * c;
  next.s = 16 * a3 + 72 * a2 * b + 78 * a * b2 + 14 * b3 + 9 * a2 * c + 12 * a * b * c;

  if (next.a * next.c != 3 * next.b * next.b) {
    throw consistency_error("census invariant ac = 3b^2 broken at n = " + std::to_string(next.n));
  }
  return next;
}

ClassCensus census_at(int n) {
  require_step(n);
  ClassCensus census = census_seed();
  while (census.n < n) census = census_step(census);
  return census;
}

namespace {

mpz_class pow3z(int n) { return pow_int(3, static_cast<unsigned long>(n)); }
mpz_class pow5z(int n) { return pow_int(5, static_cast<unsigned long>(n)); }

}  // namespace

mpz_class closed_a(int n) {
  require_step(n);
  const mpz_class p3 = pow3z(n);
  const mpz_class e3 = exact_quarter(p3 + 2 * n - 1);
  const mpz_class e5 = exact_quarter(p3 - 2 * n - 1);
  return pow_ui(3, e3) * pow_ui(5, e5);
}

mpz_class closed_b(int n) {
  require_step(n);
  const mpz_class e15 = exact_quarter(pow3z(n) - 2 * n - 1);
  const mpz_class half_diff = exact_half(pow5z(n) - pow3z(n));
  return pow_ui(15, e15) * half_diff;
}

mpz_class closed_c(int n) {
  require_step(n);
  const mpz_class p3 = pow3z(n);
  const mpz_class e3 = exact_quarter(p3 - 6 * n + 3);
  const mpz_class e5 = exact_quarter(p3 - 2 * n - 1);
  // (3^n - 5^n)^2 / 4 == ((5^n - 3^n)/2)^2
  const mpz_class half_diff = exact_half(pow5z(n) - p3);
  return pow_ui(3, e3) * pow_ui(5, e5) * half_diff * half_diff;
}

FactoredCount closed_s(int n) {
  require_step(n);
  FactoredCount f;
  f.n = n;
  if (n == 0) {
    f.e3 = 1;
    f.e5 = 0;
    f.m = 1;
    return f;
  }
  const mpz_class p3_prev = pow3z(n - 1);
  f.e3 = exact_quarter(3 * (p3_prev - 2 * (n - 1) - 1));
  f.e5 = exact_quarter(3 * p3_prev - 2 * (n - 1) - 3);
  f.m = exact_half(3 * p3_prev + pow5z(n));
  return f;
}

mpz_class expand(const FactoredCount& f) {
  return pow_ui(3, f.e3) * pow_ui(5, f.e5) * f.m * f.m;
}

std::string to_string(const FactoredCount& f) {
  return "3^" + f.e3.get_str() + " * 5^" + f.e5.get_str() + " * " + f.m.get_str() + "^2";
}

CountMethod parse_count_method(std::string_view name) {
  if (name == "recursion") return CountMethod::recursion;
  if (name == "closed-form") return CountMethod::closed_form;
  throw usage_error("unknown method '" + std::string(name) + "' (choose recursion or closed-form)");
}

mpz_class spanning_tree_count(int n, CountMethod method, int expand_threshold) {
  require_step(n);
  if (n > expand_threshold) {
    throw size_guard_error("full expansion refused for n = " + std::to_string(n) +
                           " (threshold " + std::to_string(expand_threshold) +
                           "); use the factored or log form instead");
  }
  switch (method) {
    case CountMethod::recursion: return census_at(n).s;
    case CountMethod::closed_form: return expand(closed_s(n));
  }
  throw usage_error("unhandled count method");
}

}  // namespace apollonian
