#ifndef APOLLONIAN_EXACT_COUNT_HPP
#define APOLLONIAN_EXACT_COUNT_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace apollonian {

/// Exact census of the spanning-subgraph classes of A(n):
///   a — spanning 3-forests separating the three hubs,
///   b — spanning 2-forests without hub edges isolating one hub
///       (the three symmetric classes share this value),
///   c — hub-edge-free spanning trees,
///   s — all spanning trees.
struct ClassCensus {
  int n = 0;
  mpz_class a, b, c, s;
};

/// Census of A(0): a = 1, b = c = 0, s = 3.
ClassCensus census_seed();

/// One step of the coupled polynomial recursion
///   a' = 3a^3 + 6a^2 b
///   b' = a^3 + 7a^2 b + 7a b^2 + a^2 c
///   c' = a^3 + 12a^2 b + 36a b^2 + 14b^3 + 3a^2 c + 12a b c
///   s' = 16a^3 + 72a^2 b + 78a b^2 + 14b^3 + 9a^2 c + 12a b c
/// The output must satisfy a'c' = 3b'^2; a violation throws
/// consistency_error since it can only come from an arithmetic bug.
ClassCensus census_step(const ClassCensus& prev);

/// Census at step n by iterating census_step from the seed.
ClassCensus census_at(int n);

/// Closed forms. Each rational exponent is checked to be an integer
/// (consistency_error otherwise) and evaluated by pure integer
/// exponentiation; no real-valued powers anywhere.
mpz_class closed_a(int n);  // 3^{(3^n+2n-1)/4} 5^{(3^n-2n-1)/4}
mpz_class closed_b(int n);  // 15^{(3^n-2n-1)/4} (5^n-3^n)/2
mpz_class closed_c(int n);  // 3^{(3^n-6n+3)/4} 5^{(3^n-2n-1)/4} ((5^n-3^n)/2)^2

/// s_n kept as 3^e3 * 5^e5 * m^2 with m = (3^n + 5^n)/2; exact at any n
/// without expanding the decimal value.
struct FactoredCount {
  int n = 0;
  mpz_class e3, e5, m;
};

FactoredCount closed_s(int n);

/// Full integer value 3^e3 * 5^e5 * m^2. Unbounded arithmetic; callers
/// enforce an expansion threshold on n. Throws size_guard_error if an
/// exponent cannot even be represented for exponentiation.
mpz_class expand(const FactoredCount& f);

/// "3^{e3} * 5^{e5} * {m}^2", e.g. "3^0 * 5^1 * 17^2".
std::string to_string(const FactoredCount& f);

/// Largest n whose full decimal expansion is produced by default
/// (s_12 has 156260 digits; everything stays instant up to here).
inline constexpr int kDefaultExpandThreshold = 12;

enum class CountMethod { recursion, closed_form };

CountMethod parse_count_method(std::string_view name);

/// s_n as a full integer, by the requested method. Both methods agree
/// exactly wherever both run. Refuses n above the expansion threshold.
mpz_class spanning_tree_count(int n, CountMethod method,
                              int expand_threshold = kDefaultExpandThreshold);

// Integer helpers shared by the closed forms and the oracle tests.

mpz_class pow_ui(unsigned long base, const mpz_class& exp);

/// x/4, throwing consistency_error unless 4 | x.
mpz_class exact_quarter(const mpz_class& x);

/// x/2, throwing consistency_error unless x is even.
mpz_class exact_half(const mpz_class& x);

}  // namespace apollonian

#endif  // APOLLONIAN_EXACT_COUNT_HPP
