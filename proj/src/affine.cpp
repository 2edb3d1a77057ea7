#include "aglpoly/affine.hpp"

namespace aglpoly {

AffineMap::AffineMap(Fq a, Fq b) : a_(a), b_(b) {
    require(&a.field() == &b.field(), errc::mixed_contexts,
            "affine map coefficients from different fields");
    require(!a.is_zero(), errc::zero_element, "affine map needs a != 0");
}

AffineMap operator*(const AffineMap& f, const AffineMap& g) {
    require(&f.field() == &g.field(), errc::mixed_contexts,
            "composing affine maps over different fields");
    return AffineMap(f.a_ * g.a_, f.a_ * g.b_ + f.b_);
}

AffineMap AffineMap::inverse() const {
    const Fq ai = a_.inv();
    return AffineMap(ai, -(ai * b_));
}

AffineMap AffineMap::pow(std::uint64_t k) const {
    const Field& f = field();
    if (a_ == f.one()) return AffineMap(f.one(), f.from_int(static_cast<std::int64_t>(k % f.p())) * b_);
    const Fq ak = a_.pow(k);
    return AffineMap(ak, (ak - f.one()) / (a_ - f.one()) * b_);
}

std::uint64_t AffineMap::order() const {
    if (is_identity()) return 1;
    if (is_translation()) return field().p();
    return a_.order();
}

SemiAffineMap::SemiAffineMap(Fq a, Fq b, std::uint64_t frob_exponent)
    : a_(a), b_(b), j_(frob_exponent % a.field().l()) {
    require(&a.field() == &b.field(), errc::mixed_contexts,
            "semi-affine map coefficients from different fields");
    require(!a.is_zero(), errc::zero_element, "semi-affine map needs a != 0");
}

SemiAffineMap operator*(const SemiAffineMap& f, const SemiAffineMap& g) {
    require(&f.field() == &g.field(), errc::mixed_contexts,
            "composing semi-affine maps over different fields");
    // f(g(x)) = a_f * (a_g x^{p^{j_g}} + b_g)^{p^{j_f}} + b_f
    return SemiAffineMap(f.a_ * g.a_.frobenius(f.j_),
                         f.a_ * g.b_.frobenius(f.j_) + f.b_, f.j_ + g.j_);
}

SemiAffineMap SemiAffineMap::inverse() const {
    const std::uint64_t l = field().l();
    const std::uint64_t jinv = (l - j_) % l;
    const Fq ai = a_.inv();
    return SemiAffineMap(ai.frobenius(jinv), (-(ai * b_)).frobenius(jinv), jinv);
}

AffineMap SemiAffineMap::affine_part() const {
    require(j_ == 0, errc::internal_error, "map has a nontrivial field automorphism part");
    return AffineMap(a_, b_);
}

bool SemiAffineMap::is_involutory() const {
    const Field& f = field();
    if (j_ == 0) {
        // alpha(a,b)^2 = alpha(a^2, (a+1)b)
        return a_ * a_ == f.one() && ((a_ + f.one()) * b_).is_zero();
    }
    if ((2 * j_) % f.l() != 0) return false;
    return a_ * a_.frobenius(j_) == f.one() &&
           (a_ * b_.frobenius(j_) + b_).is_zero();
}

AffineMap conjugate(const SemiAffineMap& rho, const AffineMap& f) {
    const SemiAffineMap res = rho * SemiAffineMap::from_affine(f) * rho.inverse();
    return res.affine_part();
}

std::vector<AffineMap> all_affine_maps(const Field& f) {
    std::vector<AffineMap> out;
    out.reserve(f.q() * (f.q() - 1));
    for (std::uint64_t a = 1; a < f.q(); ++a)
        for (std::uint64_t b = 0; b < f.q(); ++b)
            out.emplace_back(f.elem(a), f.elem(b));
    return out;
}

std::vector<AffineMap> translations(const Field& f) {
    std::vector<AffineMap> out;
    out.reserve(f.q());
    for (std::uint64_t b = 0; b < f.q(); ++b) out.push_back(AffineMap::translation(f.elem(b)));
    return out;
}

std::vector<AffineMap> involutions(const Field& f) {
    std::vector<AffineMap> out;
    out.reserve(f.q());
    const Fq minus_one = -f.one();
    for (std::uint64_t c = 0; c < f.q(); ++c) out.emplace_back(minus_one, f.elem(c));
    return out;
}

}  // namespace aglpoly
