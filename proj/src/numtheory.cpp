#include "aglpoly/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace aglpoly {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::overflow: return "Overflow";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::mixed_contexts: return "MixedContexts";
        case errc::zero_element: return "ZeroElement";
        case errc::non_positive: return "NonPositive";
        case errc::out_of_range: return "OutOfRange";
        case errc::q_too_small: return "QTooSmall";
        case errc::degenerate_a: return "DegenerateA";
        case errc::intersection_violation: return "IntersectionViolation";
        case errc::odd_extension_degree: return "OddExtensionDegree";
        case errc::cutoff_exceeded: return "CutoffExceeded";
        case errc::not_a_divisor: return "NotADivisor";
        case errc::n_too_small: return "NTooSmall";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::inconsistent_table: return "InconsistentTable";
        case errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    require(n >= 1, errc::non_positive, "factorize requires n >= 1");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        unsigned mult = 0;
        while (n % d == 0) {
            n /= d;
            ++mult;
        }
        out.emplace_back(d, mult);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [prime, mult] : factorize(n)) {
        const std::size_t base = out.size();
        std::uint64_t pk = 1;
        for (unsigned k = 1; k <= mult; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

unsigned two_adic_valuation(std::uint64_t m) {
    require(m >= 1, errc::non_positive, "2-adic valuation of a non-positive integer");
    unsigned k = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++k;
    }
    return k;
}

PrimePower PrimePower::make(std::uint64_t p, std::uint64_t l) {
    require(p != 2, errc::even_characteristic, "characteristic 2 is not supported");
    require(is_prime(p), errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    require(l >= 1, errc::non_positive, "exponent l must be positive");

    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < l; ++i) {
        require(q <= kMaxQ / p, errc::overflow,
                "p^l exceeds the supported limit " + std::to_string(kMaxQ));
        q *= p;
    }

    PrimePower pp;
    pp.p = p;
    pp.l = l;
    pp.q = q;
    pp.e = two_adic_valuation(q - 1);
    pp.qprime = (q - 1) >> pp.e;
    pp.r = (q - 1) / 2;
    return pp;
}

std::uint64_t shifted_gcd_odd(std::uint64_t u, std::uint64_t v) {
    require(u >= 1 && u % 2 == 1, errc::invalid_argument, "u must be a positive odd integer");
    require(v >= 1, errc::non_positive, "v must be positive");
    const std::uint64_t g = std::gcd(2 * u, v);
    return (v % 2 == 1) ? 2 * g : g / 2;
}

std::uint64_t shifted_gcd(const PrimePower& pp, std::uint64_t m) {
    require(m >= 1 && m <= pp.q - 1, errc::out_of_range, "m must lie in [1, q-1]");
    const std::uint64_t g = std::gcd(pp.q - 1, m);
    const unsigned t = two_adic_valuation(m);
    if (pp.e >= 2 && t + 2 <= pp.e) return g;
    if (t + 1 == pp.e) return 2 * g;
    return g / 2;  // t >= e
}

std::uint64_t neg_inverse_order(const PrimePower& pp, std::uint64_t m) {
    require(m >= 1 && m <= pp.q - 1, errc::out_of_range, "m must lie in [1, q-1]");
    const std::uint64_t ord = (pp.q - 1) / std::gcd(pp.q - 1, m);
    const unsigned t = two_adic_valuation(m);
    if (pp.e >= 2 && t + 2 <= pp.e) return ord;
    if (t + 1 == pp.e) return ord / 2;
    return 2 * ord;  // t >= e
}

std::vector<PrimePower> odd_prime_powers_up_to(std::uint64_t limit) {
    std::vector<PrimePower> out;
    for (std::uint64_t p = 3; p <= limit; p += 2) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        for (std::uint64_t l = 1; q <= limit; ++l, q *= p) {
            out.push_back(PrimePower::make(p, l));
            if (q > limit / p) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.q < y.q; });
    return out;
}

unsigned ceil_log(std::uint64_t p, std::uint64_t x) {
    require(p >= 2, errc::invalid_argument, "base must be >= 2");
    require(x >= 1, errc::non_positive, "ceil_log of a non-positive integer");
    unsigned k = 0;
    std::uint64_t pk = 1;
    while (pk < x) {
        pk *= p;
        ++k;
    }
    return k;
}

}  // namespace aglpoly
