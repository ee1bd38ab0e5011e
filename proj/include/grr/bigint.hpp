#ifndef GRR_BIGINT_HPP
#define GRR_BIGINT_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace grr {

using Int = mpz_class;

// gcd/lcm follow the ideal-theoretic conventions: gcd(S) generates the ideal
// generated by S, lcm(S) generates the intersection of the ideals (a)
// for a in S.  Hence gcd(0,n) = |n|, lcm(0,n) = 0, gcd({}) = 0, lcm({}) = 1.
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int gcd_all(const std::vector<Int>& xs);
Int lcm_all(const std::vector<Int>& xs);

// Floor division (mpz_class's operator/ truncates toward zero).
Int floor_div(const Int& a, const Int& b);

// v_p(n) for n != 0.
unsigned long valuation(Int n, const Int& p);

bool fits_uint64(const Int& n);

// Prime factorization of n >= 1, primes ascending.  n must fit in 64 bits;
// larger inputs are rejected with DiagnosticTooLarge so every computation
// that enumerates divisors stays terminating at desk scale.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

// All positive divisors of n >= 1, ascending.  Same 64-bit guard.
std::vector<Int> divisors(const Int& n);

} // namespace grr

#endif
