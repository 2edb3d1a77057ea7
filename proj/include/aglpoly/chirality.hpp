// Deciding chiral vs regular.
//
// Two routes:
//
// 1. Analytic.  When Gamma is all of AGL(1,q) the polyhedron is chiral:
//    a conjugating involution would have to be semi-affine with
//    a^{p^{l/2}+1} = 1, impossible for the generator orders that force the
//    full group.  When l is even and a^{p^{l/2}+1} = 1, the polyhedron is
//    regular: writing xbar for x^{p^{l/2}}, the involutory semi-affine map
//    rho = (g, h, l/2) with
//        D = 2*bbar - cbar*(1 - abar),   g = -abar * Dbar/D,
//        h = (bbar*c + abar*b*cbar) / D
//    solves  bbar g + (1-abar) h = -abar b,  cbar g + 2 h = c,  and
//    conjugates sigma2 to sigma2^{-1} while fixing tau.  D != 0 is exactly
//    the admissibility condition c != 2b/(1-a).
//
// 2. Oracle.  An exhaustive search over the multiplication table for an
//    abstract involutory automorphism with rho(sigma2) = sigma2^{-1} and
//    rho(tau) = tau.  Since an automorphism is determined by generator
//    images, the required images pin down a single candidate map, which is
//    verified as a bijective homomorphism on every pair of elements.  The
//    oracle never trusts the analytic route and is the only decision
//    procedure for proper subgroups outside the analytic cases.

#pragma once

#include <cstdint>
#include <optional>

#include "aglpoly/polyhedron.hpp"

namespace aglpoly {

// Solution of the conjugation system for the semi-affine candidate.
struct RhoSolution {
    Fq g, h;
    Fq determinant;     // D = 2*bbar - cbar*(1 - abar), nonzero for valid specs
    SemiAffineMap rho;  // x -> g * x^{p^{l/2}} + h
};

// Solves the linear system for (g, h) and checks the involution conditions
// g*gbar = 1 and g*hbar + h = 0 together with both equations of the system.
// Returns nullopt when the checks fail (the candidate exists only when
// a^{p^{l/2}+1} = 1).  Throws odd_extension_degree when l is odd.
std::optional<RhoSolution> solve_rho_system(const PolyhedronSpec& spec);

// The distinguished reflection generators of the full automorphism group of
// a regular polyhedron with rotation pair (sigma1, sigma2) and semi-affine
// witness rho: rho0 = tau*rho, rho1 = sigma2*rho, rho2 = rho.
struct ReflectionTriple {
    SemiAffineMap rho0, rho1, rho2;
};
ReflectionTriple reflection_generators(const GeneratorTriple& triple,
                                       const SemiAffineMap& rho);

// Analytic classification; nullopt when neither analytic criterion applies.
// Regular verdicts carry the verified semi-affine witness.
std::optional<ChiralityVerdict> analytic_classify(const PolyhedronSpec& spec,
                                                  const StructureReport& structure);

struct OracleResult {
    // Image of each table index under the witness automorphism, or nullopt
    // when the exhaustive check ruled a witness out.
    std::optional<std::vector<std::uint32_t>> images;

    bool witness_found() const noexcept { return images.has_value(); }
};

inline constexpr std::uint64_t kDefaultOracleCutoff = 5000;

// Exhaustive search for the conjugating involution over the multiplication
// table.  Throws cutoff_exceeded when the group is larger than the cutoff.
OracleResult brute_force_automorphism(const GroupTable& table,
                                      std::uint64_t cutoff = kDefaultOracleCutoff);

// Attempts to extend from.generators -> images to a group isomorphism
// between two tables; returns the full image list or nullopt.  The map is
// determined by the generator images; the extension is validated as a
// bijective homomorphism on all pairs.
std::optional<std::vector<std::uint32_t>> extend_generator_map(
    const GroupTable& from, std::size_t gen1, std::size_t gen2, const GroupTable& to,
    std::size_t img1, std::size_t img2);

struct ClassifyOptions {
    std::uint64_t oracle_cutoff = kDefaultOracleCutoff;
    // Run the oracle even when the analytic route already decided, and
    // require agreement (internal error otherwise).
    bool cross_check = false;
};

// Full decision: analytic route when applicable, otherwise the oracle,
// otherwise undetermined (never guessed).
ChiralityVerdict classify(const PolyhedronSpec& spec, const GroupTable& table,
                          const StructureReport& structure, const ClassifyOptions& opts = {});
ChiralityVerdict classify(const PolyhedronSpec& spec, const ClassifyOptions& opts = {});

// Non-existence checks: the structural facts that rule out regular
// polyhedra (and higher-rank polytopes) inside AGL(1,q).
struct NoregsReport {
    std::uint64_t q;

    // (a) the involutions are exactly the maps x -> -x + c, and the product
    // of any two distinct ones is a nontrivial translation, so no triple of
    // reflection generators can close into a polyhedron group.
    bool reflections_impossible;
    std::uint64_t involution_count;
    std::uint64_t involution_pairs;

    // (b) replay of the rank-4 obstruction on every triple of involutions
    // (t12, t23, t123): sigma3 = t12*t123 and sigma1 = t123*t23 land in the
    // translation subgroup, forcing sigma2 = sigma1^{-1}*t123*sigma3^{-1}
    // to be an involution.
    bool rank4_obstruction;
    std::uint64_t involution_triples;

    // (c) for every admissible (a, b, c), the generator orders s and t
    // divide q - 1.
    bool orders_divide;
    std::uint64_t specs_checked;

    bool all_ok() const noexcept {
        return reflections_impossible && rank4_obstruction && orders_divide;
    }
};

NoregsReport verify_noregs(const Field& field, std::uint64_t q_cutoff = 250);

}  // namespace aglpoly
