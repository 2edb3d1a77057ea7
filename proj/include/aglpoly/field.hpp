// Exact arithmetic in GF(p^l) for odd p.
//
// Elements are polynomials over F_p reduced modulo a monic irreducible
// modulus of degree l, carried around as their integer encoding
// c_0 + c_1*p + ... + c_{l-1}*p^{l-1}.  The modulus is chosen
// deterministically (lexicographically smallest coefficient tuple that is
// irreducible) so encodings are reproducible across runs, and gamma is the
// least encoding generating the multiplicative group.
//
// A Field is immutable after construction and safe to share across threads;
// the multiplicative-order cache uses atomics.  Fq values hold a pointer to
// their Field, so a Field must outlive its elements.

#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "aglpoly/numtheory.hpp"

namespace aglpoly {

class Field;

// An element of GF(p^l).  Cheap value type: (field pointer, encoding).
class Fq {
public:
    std::uint64_t enc() const noexcept { return enc_; }
    const Field& field() const noexcept { return *field_; }

    bool is_zero() const noexcept { return enc_ == 0; }

    Fq operator-() const;
    Fq inv() const;
    Fq pow(std::uint64_t k) const;
    Fq frobenius(std::uint64_t j) const;  // x^{p^j}, j taken mod l
    Fq bar() const;                       // x^{p^{l/2}}; requires even l
    std::uint64_t order() const;

    friend Fq operator+(Fq x, Fq y);
    friend Fq operator-(Fq x, Fq y);
    friend Fq operator*(Fq x, Fq y);
    friend Fq operator/(Fq x, Fq y);

    // Elements of distinct Field instances are never equal.
    friend bool operator==(Fq x, Fq y) noexcept {
        return x.field_ == y.field_ && x.enc_ == y.enc_;
    }
    friend bool operator!=(Fq x, Fq y) noexcept { return !(x == y); }

private:
    friend class Field;
    Fq(const Field* field, std::uint32_t enc) : field_(field), enc_(enc) {}

    const Field* field_;
    std::uint32_t enc_;
};

class Field {
public:
    // Modulus chosen by the deterministic lex-smallest scan.
    Field(std::uint64_t p, std::uint64_t l = 1);

    // Caller-supplied modulus: coefficients c_0..c_l (constant term first),
    // must be monic of degree l and irreducible over F_p.
    Field(std::uint64_t p, std::uint64_t l, const std::vector<std::uint64_t>& modulus);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    const PrimePower& pp() const noexcept { return pp_; }
    std::uint64_t p() const noexcept { return pp_.p; }
    std::uint64_t l() const noexcept { return pp_.l; }
    std::uint64_t q() const noexcept { return pp_.q; }

    // Modulus coefficients c_0..c_l, constant term first (c_l == 1).
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_u64_; }

    Fq elem(std::uint64_t enc) const;
    Fq zero() const noexcept { return Fq(this, 0); }
    Fq one() const noexcept { return Fq(this, 1); }
    Fq gamma() const noexcept { return Fq(this, gamma_); }
    Fq from_int(std::int64_t v) const;  // embedding of v mod p

    Fq add(Fq x, Fq y) const;
    Fq sub(Fq x, Fq y) const;
    Fq mul(Fq x, Fq y) const;
    Fq neg(Fq x) const;
    Fq inv(Fq x) const;  // error on zero
    Fq pow(Fq x, std::uint64_t k) const;
    Fq frobenius(Fq x, std::uint64_t j) const;

    // Multiplicative order, by descent over the divisor lattice of q-1,
    // memoized per element.  Error on zero.
    std::uint64_t order(Fq x) const;

    // Discrete log base gamma by baby-step/giant-step.  Error on zero.
    std::uint64_t dlog(Fq x) const;

private:
    void init();  // shared tail of both constructors

    void decode(std::uint32_t enc, std::uint32_t* digits) const;
    std::uint32_t encode(const std::uint32_t* digits) const;
    std::uint32_t mul_enc(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t pow_enc(std::uint32_t x, std::uint64_t k) const;
    void check_ctx(Fq x) const;

    PrimePower pp_;
    std::vector<std::uint32_t> modulus_;      // c_0..c_l
    std::vector<std::uint64_t> modulus_u64_;  // same, for the public accessor
    std::vector<std::uint32_t> xpow_red_;     // reductions of x^l..x^{2l-2}, l digits each
    std::vector<std::pair<std::uint64_t, unsigned>> q1_factors_;
    std::uint32_t gamma_ = 0;
    mutable std::unique_ptr<std::atomic<std::uint32_t>[]> order_cache_;
    std::unordered_map<std::uint32_t, std::uint32_t> bsgs_baby_;  // gamma^j -> j
    std::uint64_t bsgs_step_ = 0;
    std::uint32_t bsgs_giant_ = 0;  // gamma^{-step}
};

inline Fq operator+(Fq x, Fq y) { return x.field().add(x, y); }
inline Fq operator-(Fq x, Fq y) { return x.field().sub(x, y); }
inline Fq operator*(Fq x, Fq y) { return x.field().mul(x, y); }
inline Fq operator/(Fq x, Fq y) { return x.field().mul(x, y.field().inv(y)); }
inline Fq Fq::operator-() const { return field_->neg(*this); }
inline Fq Fq::inv() const { return field_->inv(*this); }
inline Fq Fq::pow(std::uint64_t k) const { return field_->pow(*this, k); }
inline Fq Fq::frobenius(std::uint64_t j) const { return field_->frobenius(*this, j); }
inline std::uint64_t Fq::order() const { return field_->order(*this); }

}  // namespace aglpoly
