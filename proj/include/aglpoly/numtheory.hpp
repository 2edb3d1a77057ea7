// Elementary number theory for odd prime powers q = p^l.
//
// Everything here is exact integer arithmetic at desk scale (q <= ~10^6):
// trial-division primality and factoring, 2-adic bookkeeping for q - 1,
// and the closed-form gcd/order shift rules used to predict orders of
// -x^{-1} from orders of x in a cyclic group of order q - 1.

#pragma once

#include <cstdint>
#include <vector>

#include "aglpoly/errors.hpp"

namespace aglpoly {

// Largest supported field size; keeps every derived quantity in comfortable
// 64-bit range and matches the desk scale this library targets.
inline constexpr std::uint64_t kMaxQ = 1u << 20;

bool is_prime(std::uint64_t n);

// Prime factorization by trial division, as (prime, multiplicity) pairs in
// increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// All divisors of n, sorted increasing.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Largest k with 2^k | m.  m must be positive.
unsigned two_adic_valuation(std::uint64_t m);

// An odd prime power q = p^l with the 2-adic split q - 1 = 2^e * qprime
// (qprime odd) and half value r = (q-1)/2 = 2^{e-1} * qprime.
struct PrimePower {
    std::uint64_t p;
    std::uint64_t l;
    std::uint64_t q;
    unsigned e;
    std::uint64_t qprime;
    std::uint64_t r;

    // Validates p (odd prime), l >= 1, and p^l <= kMaxQ.
    static PrimePower make(std::uint64_t p, std::uint64_t l);
};

// gcd(2u, u+v) for odd u, computed by the parity rule:
// 2*gcd(2u,v) when v is odd, gcd(2u,v)/2 when v is even.
std::uint64_t shifted_gcd_odd(std::uint64_t u, std::uint64_t v);

// gcd(q-1, r+m) for 1 <= m <= q-1, computed by the case rule on t = v2(m):
//   gcd(q-1, m)    if e >= 2 and t <= e-2,
//   2*gcd(q-1, m)  if t == e-1,
//   gcd(q-1, m)/2  if t >= e.
std::uint64_t shifted_gcd(const PrimePower& pp, std::uint64_t m);

// Order of -g^{-m} in a cyclic group <g> of order q-1, for 1 <= m <= q-1,
// derived from o(g^m) = (q-1)/gcd(q-1,m) by the same case split:
// equal when e >= 2 and v2(m) <= e-2, halved when v2(m) == e-1,
// doubled when v2(m) >= e.
std::uint64_t neg_inverse_order(const PrimePower& pp, std::uint64_t m);

// All odd prime powers 3 <= q <= limit, sorted by q.
std::vector<PrimePower> odd_prime_powers_up_to(std::uint64_t limit);

// Smallest k >= 0 with p^k >= x (i.e. ceil(log_p(x)) for x >= 1).
unsigned ceil_log(std::uint64_t p, std::uint64_t x);

}  // namespace aglpoly
