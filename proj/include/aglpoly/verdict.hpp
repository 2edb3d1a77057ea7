// Chirality verdicts and their witnesses.
//
// A polyhedron built from a rotation pair (sigma1, sigma2) is regular
// exactly when the group admits an involutory automorphism rho with
// rho(sigma2) = sigma2^{-1} and rho(tau) = tau; otherwise it is chiral.
// A verdict records which decision route produced it and, for regular
// verdicts, the witnessing automorphism.

#pragma once

#include <optional>
#include <variant>

#include "aglpoly/affine.hpp"

namespace aglpoly {

enum class Chirality { chiral, regular, undetermined };

enum class VerdictMethod {
    full_group_criterion,  // the group is all of AGL(1,q), which admits no witness
    semi_affine_witness,   // explicit semi-affine conjugator from the linear system
    exhaustive_oracle,     // generator-image search over the multiplication table
    none,                  // undetermined: group exceeded the oracle cutoff
};

// A witness found by the oracle, recorded as the images of the generating
// pair (sigma2, tau); the full automorphism is determined by these.
struct GeneratorImageWitness {
    AffineMap sigma2_image;
    AffineMap tau_image;
};

using Witness = std::variant<SemiAffineMap, GeneratorImageWitness>;

struct ChiralityVerdict {
    Chirality status;
    VerdictMethod method;
    std::optional<Witness> witness;  // present exactly for regular verdicts
};

const char* to_string(Chirality c) noexcept;
const char* to_string(VerdictMethod m) noexcept;

}  // namespace aglpoly
