#include "aglpoly/field.hpp"

#include <algorithm>
#include <cmath>

namespace aglpoly {

namespace {

constexpr std::size_t kMaxDegree = 24;  // p >= 3 and q <= 2^20 give l <= 12

// Remainder of a mod b over F_p; coefficients constant-term first, b monic.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b, std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back() % p;
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                const std::uint64_t sub = lead * (b[i] % p) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool poly_is_zero(const std::vector<std::uint32_t>& a, std::uint64_t p) {
    return std::all_of(a.begin(), a.end(), [p](std::uint32_t c) { return c % p == 0; });
}

// Irreducibility over F_p by trial division with every monic polynomial of
// degree 1..deg/2.  Degree-1 polynomials are irreducible outright.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint64_t p) {
    const std::size_t deg = poly.size() - 1;
    if (deg == 1) return true;
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        std::vector<std::uint32_t> cand(d + 1, 0);
        cand[d] = 1;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::uint64_t rest = n;
            for (std::size_t i = 0; i < d; ++i) {
                cand[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (poly_is_zero(poly_rem(poly, cand, p), p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(std::uint64_t p, std::uint64_t l) : pp_(PrimePower::make(p, l)) {
    // Lexicographically smallest coefficient tuple (c_{l-1}, ..., c_0) that
    // yields an irreducible monic polynomial; scanning encodings in numeric
    // order visits tuples in exactly that order.
    modulus_.assign(l + 1, 0);
    modulus_[l] = 1;
    bool found = false;
    for (std::uint64_t n = 0; n < pp_.q; ++n) {
        std::uint64_t rest = n;
        for (std::uint64_t i = 0; i < l; ++i) {
            modulus_[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_irreducible(modulus_, p)) {
            found = true;
            break;
        }
    }
    require(found, errc::internal_error, "no irreducible modulus found");  // cannot happen
    init();
}

Field::Field(std::uint64_t p, std::uint64_t l, const std::vector<std::uint64_t>& modulus)
    : pp_(PrimePower::make(p, l)) {
    require(modulus.size() == l + 1, errc::invalid_argument,
            "modulus must list l+1 coefficients, constant term first");
    modulus_.resize(l + 1);
    for (std::size_t i = 0; i <= l; ++i)
        modulus_[i] = static_cast<std::uint32_t>(modulus[i] % p);
    require(modulus_[l] == 1, errc::invalid_argument, "modulus must be monic of degree l");
    require(is_irreducible(modulus_, p), errc::invalid_argument,
            "modulus is reducible over F_p");
    init();
}

void Field::init() {
    const std::uint64_t p = pp_.p, l = pp_.l, q = pp_.q;
    modulus_u64_.assign(modulus_.begin(), modulus_.end());

    // Reductions of x^l .. x^{2l-2} modulo the modulus, each as l digits.
    if (l >= 2) {
        xpow_red_.assign((l - 1) * l, 0);
        std::vector<std::uint32_t> cur(modulus_.begin(), modulus_.end() - 1);
        for (auto& c : cur) c = static_cast<std::uint32_t>((p - c) % p);  // x^l = -lower part
        for (std::uint64_t i = 0; i + 1 < l; ++i) {
            std::copy(cur.begin(), cur.end(), xpow_red_.begin() + i * l);
            if (i + 2 < l) {
                // multiply by x and reduce once
                std::uint32_t top = cur[l - 1];
                for (std::uint64_t j = l - 1; j > 0; --j) cur[j] = cur[j - 1];
                cur[0] = 0;
                if (top != 0) {
                    for (std::uint64_t j = 0; j < l; ++j) {
                        const std::uint64_t sub =
                            static_cast<std::uint64_t>(top) * modulus_[j] % p;
                        cur[j] = static_cast<std::uint32_t>((cur[j] + p - sub) % p);
                    }
                }
            }
        }
    }

    q1_factors_ = factorize(q - 1);
    order_cache_ = std::make_unique<std::atomic<std::uint32_t>[]>(q);

    // gamma: least encoding with full multiplicative order.
    for (std::uint64_t n = 2; n < q; ++n) {
        if (order(Fq(this, static_cast<std::uint32_t>(n))) == q - 1) {
            gamma_ = static_cast<std::uint32_t>(n);
            break;
        }
    }
    require(gamma_ != 0, errc::internal_error, "no generator found");

    // Baby-step table for discrete logs.
    bsgs_step_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(q - 1))));
    if (bsgs_step_ == 0) bsgs_step_ = 1;
    bsgs_baby_.reserve(bsgs_step_);
    std::uint32_t cur = 1;
    for (std::uint64_t j = 0; j < bsgs_step_; ++j) {
        bsgs_baby_.emplace(cur, static_cast<std::uint32_t>(j));
        cur = mul_enc(cur, gamma_);
    }
    bsgs_giant_ = pow_enc(gamma_, q - 1 - bsgs_step_ % (q - 1));
}

void Field::decode(std::uint32_t enc, std::uint32_t* digits) const {
    const std::uint64_t p = pp_.p;
    std::uint64_t rest = enc;
    for (std::uint64_t i = 0; i < pp_.l; ++i) {
        digits[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
    }
}

std::uint32_t Field::encode(const std::uint32_t* digits) const {
    std::uint64_t enc = 0;
    for (std::uint64_t i = pp_.l; i-- > 0;) enc = enc * pp_.p + digits[i];
    return static_cast<std::uint32_t>(enc);
}

void Field::check_ctx(Fq x) const {
    require(&x.field() == this, errc::mixed_contexts,
            "operands belong to different field contexts");
}

Fq Field::elem(std::uint64_t enc) const {
    require(enc < pp_.q, errc::out_of_range,
            "encoding " + std::to_string(enc) + " outside [0, q)");
    return Fq(this, static_cast<std::uint32_t>(enc));
}

Fq Field::from_int(std::int64_t v) const {
    const std::int64_t p = static_cast<std::int64_t>(pp_.p);
    return Fq(this, static_cast<std::uint32_t>(((v % p) + p) % p));
}

Fq Field::add(Fq x, Fq y) const {
    check_ctx(x);
    check_ctx(y);
    std::uint32_t dx[kMaxDegree], dy[kMaxDegree];
    decode(x.enc_, dx);
    decode(y.enc_, dy);
    for (std::uint64_t i = 0; i < pp_.l; ++i)
        dx[i] = static_cast<std::uint32_t>((dx[i] + dy[i]) % pp_.p);
    return Fq(this, encode(dx));
}

Fq Field::sub(Fq x, Fq y) const {
    check_ctx(x);
    check_ctx(y);
    std::uint32_t dx[kMaxDegree], dy[kMaxDegree];
    decode(x.enc_, dx);
    decode(y.enc_, dy);
    for (std::uint64_t i = 0; i < pp_.l; ++i)
        dx[i] = static_cast<std::uint32_t>((dx[i] + pp_.p - dy[i]) % pp_.p);
    return Fq(this, encode(dx));
}

Fq Field::neg(Fq x) const {
    check_ctx(x);
    std::uint32_t dx[kMaxDegree];
    decode(x.enc_, dx);
    for (std::uint64_t i = 0; i < pp_.l; ++i)
        dx[i] = static_cast<std::uint32_t>((pp_.p - dx[i]) % pp_.p);
    return Fq(this, encode(dx));
}

std::uint32_t Field::mul_enc(std::uint32_t x, std::uint32_t y) const {
    const std::uint64_t p = pp_.p, l = pp_.l;
    if (l == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * y % p);

    std::uint32_t dx[kMaxDegree], dy[kMaxDegree];
    decode(x, dx);
    decode(y, dy);
    std::uint64_t buf[2 * kMaxDegree] = {};
    for (std::uint64_t i = 0; i < l; ++i) {
        if (dx[i] == 0) continue;
        for (std::uint64_t j = 0; j < l; ++j)
            buf[i + j] += static_cast<std::uint64_t>(dx[i]) * dy[j];
    }
    for (std::uint64_t i = 2 * l - 2; i >= l; --i) {
        const std::uint64_t c = buf[i] % p;
        if (c != 0) {
            const std::uint32_t* row = &xpow_red_[(i - l) * l];
            for (std::uint64_t j = 0; j < l; ++j) buf[i - l + j] += c * row[j];
        }
        if (i == l) break;
    }
    std::uint32_t out[kMaxDegree];
    for (std::uint64_t i = 0; i < l; ++i) out[i] = static_cast<std::uint32_t>(buf[i] % p);
    return encode(out);
}

Fq Field::mul(Fq x, Fq y) const {
    check_ctx(x);
    check_ctx(y);
    return Fq(this, mul_enc(x.enc_, y.enc_));
}

std::uint32_t Field::pow_enc(std::uint32_t x, std::uint64_t k) const {
    if (x == 0) return k == 0 ? 1 : 0;
    k %= pp_.q - 1;
    std::uint32_t result = 1, base = x;
    while (k > 0) {
        if (k & 1) result = mul_enc(result, base);
        base = mul_enc(base, base);
        k >>= 1;
    }
    return result;
}

Fq Field::pow(Fq x, std::uint64_t k) const {
    check_ctx(x);
    return Fq(this, pow_enc(x.enc_, k));
}

Fq Field::inv(Fq x) const {
    check_ctx(x);
    require(!x.is_zero(), errc::division_by_zero, "inverse of zero");
    return Fq(this, pow_enc(x.enc_, pp_.q - 2));
}

Fq Field::frobenius(Fq x, std::uint64_t j) const {
    check_ctx(x);
    j %= pp_.l;
    std::uint64_t pj = 1;
    for (std::uint64_t i = 0; i < j; ++i) pj *= pp_.p;
    return Fq(this, pow_enc(x.enc_, pj));
}

Fq Fq::bar() const {
    const auto& pp = field_->pp();
    require(pp.l % 2 == 0, errc::odd_extension_degree,
            "the involutory field automorphism needs even extension degree");
    return field_->frobenius(*this, pp.l / 2);
}

std::uint64_t Field::order(Fq x) const {
    check_ctx(x);
    require(!x.is_zero(), errc::zero_element, "multiplicative order of zero");
    const std::uint32_t cached = order_cache_[x.enc_].load(std::memory_order_relaxed);
    if (cached != 0) return cached;

    std::uint64_t ord = pp_.q - 1;
    for (const auto& [prime, mult] : q1_factors_) {
        for (unsigned i = 0; i < mult; ++i) {
            if (ord % prime == 0 && pow_enc(x.enc_, ord / prime) == 1)
                ord /= prime;
            else
                break;
        }
    }
    order_cache_[x.enc_].store(static_cast<std::uint32_t>(ord), std::memory_order_relaxed);
    return ord;
}

std::uint64_t Field::dlog(Fq x) const {
    check_ctx(x);
    require(!x.is_zero(), errc::zero_element, "discrete log of zero");
    std::uint32_t cur = x.enc_;
    const std::uint64_t giants = (pp_.q - 2) / bsgs_step_ + 1;
    for (std::uint64_t i = 0; i <= giants; ++i) {
        const auto it = bsgs_baby_.find(cur);
        if (it != bsgs_baby_.end()) return (i * bsgs_step_ + it->second) % (pp_.q - 1);
        cur = mul_enc(cur, bsgs_giant_);
    }
    fail(errc::internal_error, "discrete log not found; gamma is not a generator");
}

}  // namespace aglpoly
