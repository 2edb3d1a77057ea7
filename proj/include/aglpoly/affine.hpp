// Element algebra for AGL(1,q) and its semi-affine extension.
//
// An AffineMap alpha(a,b) is the permutation x -> a*x + b of GF(q), a != 0.
// Composition follows the convention alpha(a,b) * alpha(a',b') =
// alpha(a*a', a*b' + b): the left factor is applied last.  Key facts used
// throughout:
//   alpha(a,b)^{-1} = alpha(a^{-1}, -a^{-1} b)
//   alpha(a,b)^k    = alpha(a^k, (a^k-1)/(a-1) * b)   for a != 1
//   order(alpha(a,b)) = order(a) for a != 1, p for nontrivial translations
//   alpha(a,b) is an involution iff a = -1
//
// A SemiAffineMap x -> a * x^{p^j} + b adjoins the Frobenius automorphisms;
// these maps realize the group automorphisms of AGL(1,q).

#pragma once

#include <cstdint>
#include <vector>

#include "aglpoly/field.hpp"

namespace aglpoly {

class AffineMap {
public:
    AffineMap(Fq a, Fq b);

    static AffineMap identity(const Field& f) { return AffineMap(f.one(), f.zero()); }
    static AffineMap translation(Fq b) { return AffineMap(b.field().one(), b); }

    Fq a() const noexcept { return a_; }
    Fq b() const noexcept { return b_; }
    const Field& field() const noexcept { return a_.field(); }

    Fq operator()(Fq x) const { return a_ * x + b_; }

    friend AffineMap operator*(const AffineMap& f, const AffineMap& g);

    AffineMap inverse() const;
    AffineMap pow(std::uint64_t k) const;
    std::uint64_t order() const;

    bool is_identity() const { return a_ == field().one() && b_.is_zero(); }
    bool is_translation() const { return a_ == field().one(); }
    bool is_involution() const { return a_ == -field().one(); }

    // Canonical key enc(a) * q + enc(b); orders maps lexicographically by
    // (enc(a), enc(b)) and doubles as the wire encoding.
    std::uint64_t key() const { return a_.enc() * field().q() + b_.enc(); }

    friend bool operator==(const AffineMap& f, const AffineMap& g) {
        return f.a_ == g.a_ && f.b_ == g.b_;
    }
    friend bool operator!=(const AffineMap& f, const AffineMap& g) { return !(f == g); }

private:
    Fq a_, b_;
};

// x -> a * x^{p^j} + b with a != 0 and 0 <= j < l.
class SemiAffineMap {
public:
    SemiAffineMap(Fq a, Fq b, std::uint64_t frob_exponent);

    static SemiAffineMap from_affine(const AffineMap& f) {
        return SemiAffineMap(f.a(), f.b(), 0);
    }

    Fq a() const noexcept { return a_; }
    Fq b() const noexcept { return b_; }
    std::uint64_t frob_exponent() const noexcept { return j_; }
    const Field& field() const noexcept { return a_.field(); }

    Fq operator()(Fq x) const { return a_ * x.frobenius(j_) + b_; }

    friend SemiAffineMap operator*(const SemiAffineMap& f, const SemiAffineMap& g);

    SemiAffineMap inverse() const;

    bool is_affine() const noexcept { return j_ == 0; }
    AffineMap affine_part() const;  // requires j == 0
    bool is_identity() const {
        return j_ == 0 && a_ == field().one() && b_.is_zero();
    }

    // True iff the map composed with itself is the identity permutation
    // (so the identity map itself qualifies).  Closed form: for j = 0 this
    // needs a^2 = 1 and (a+1)b = 0; for j != 0 it needs j = l/2,
    // a * a^{p^j} = 1 and a * b^{p^j} + b = 0.
    bool is_involutory() const;

    friend bool operator==(const SemiAffineMap& f, const SemiAffineMap& g) {
        return f.a_ == g.a_ && f.b_ == g.b_ && f.j_ == g.j_;
    }
    friend bool operator!=(const SemiAffineMap& f, const SemiAffineMap& g) {
        return !(f == g);
    }

private:
    Fq a_, b_;
    std::uint64_t j_;
};

// rho * f * rho^{-1}; the result must again be affine (it always is when
// rho normalizes AGL(1,q), in particular for every semi-affine rho).
AffineMap conjugate(const SemiAffineMap& rho, const AffineMap& f);

// Enumeration helpers, in canonical key order.
std::vector<AffineMap> all_affine_maps(const Field& f);
std::vector<AffineMap> translations(const Field& f);   // x -> x + b
std::vector<AffineMap> involutions(const Field& f);    // x -> -x + c

}  // namespace aglpoly
