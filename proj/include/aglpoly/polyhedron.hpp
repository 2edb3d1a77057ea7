// Polyhedra from parameter triples (a, b, c) over GF(q).
//
// For odd q >= 5, a not in {0, 1, -1} and c != 2b/(1-a), the pair
//   sigma2 = alpha(a, b),  tau = alpha(-1, c),  sigma1 = tau * sigma2^{-1}
// generates a subgroup Gamma of AGL(1,q) with (sigma1 sigma2)^2 = 1 and the
// intersection property <sigma1> n <sigma2> = {1}, so Gamma is the rotation
// group of a polyhedron of type {s, t} with s = o(-a^{-1}) and t = o(a).
// The excluded value c = 2b/(1-a) is exactly where the intersection
// property fails.
//
// This module realizes Gamma explicitly by closure, decomposes it relative
// to the translation subgroup T and the index-2 overgroup H of T generated
// by the involutions, builds the face poset from cosets of the three
// distinguished cyclic subgroups, and computes the type, f-vector, Euler
// characteristic and genus.

#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "aglpoly/affine.hpp"
#include "aglpoly/verdict.hpp"

namespace aglpoly {

struct PolyhedronSpec {
    Fq a, b, c;

    const Field& field() const noexcept { return a.field(); }

    // g = c - 2b/(1-a); nonzero exactly when the spec is admissible, and the
    // seed of the translation subgroup reached by commutators of tau.
    Fq translation_seed() const;
};

// Throws q_too_small / degenerate_a / intersection_violation.
void validate(const PolyhedronSpec& spec);

// Parameters of the dual polyhedron: (-a, b + a*c, c).  The dual swaps the
// roles of sigma1^{-1} and sigma2^{-1}, reversing the type to {t, s}.
PolyhedronSpec dual(const PolyhedronSpec& spec);

struct GeneratorTriple {
    AffineMap sigma1, sigma2, tau;

    const Field& field() const noexcept { return sigma1.field(); }
};

// Builds (sigma1, sigma2, tau) from a validated spec.
GeneratorTriple make_generators(const PolyhedronSpec& spec);

// Testing-only: builds the triple without validating the spec, so the
// degenerate c = 2b/(1-a) case can be exercised.  Still requires a != 0, 1.
GeneratorTriple make_generators_unchecked(const PolyhedronSpec& spec);

// True iff <sigma1> n <sigma2> = {1}, by enumerating both cyclic subgroups.
bool check_intersection_property(const GeneratorTriple& triple);

// An explicit finite subgroup of AGL(1,q): element list sorted by canonical
// key, with multiplication resolved through an index.
class GroupTable {
public:
    // Breadth-first closure of <sigma1, sigma2> under composition.
    static GroupTable closure(const GeneratorTriple& triple);

    std::size_t size() const noexcept { return elems_.size(); }
    const AffineMap& operator[](std::size_t i) const { return elems_[i]; }
    const Field& field() const noexcept { return elems_.front().field(); }

    std::optional<std::size_t> find(const AffineMap& f) const;
    std::size_t index_of(const AffineMap& f) const;  // internal error if absent

    std::size_t mul(std::size_t i, std::size_t j) const;
    std::size_t inverse(std::size_t i) const;
    std::size_t identity() const noexcept { return identity_; }
    std::size_t sigma1() const noexcept { return sigma1_; }
    std::size_t sigma2() const noexcept { return sigma2_; }
    std::size_t tau() const noexcept { return tau_; }

    std::uint64_t element_order(std::size_t i) const { return elems_[i].order(); }

    // Indices of <elems_[i]>, in cyclic generation order starting at identity.
    std::vector<std::uint32_t> cyclic_subgroup(std::size_t i) const;

private:
    GroupTable() = default;

    std::vector<AffineMap> elems_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::size_t identity_ = 0, sigma1_ = 0, sigma2_ = 0, tau_ = 0;
};

enum class Decomposition {
    translation_semidirect,  // Gamma = (T n Gamma) x| <sigma2>, when gcd(q-1,m) | r
    involution_semidirect,   // Gamma = (H n Gamma) |x <sigma2>, when gcd(q-1,m) does not divide r
};

const char* to_string(Decomposition d) noexcept;

struct StructureReport {
    std::uint64_t translation_subgroup_size;  // |T n Gamma|
    std::uint64_t involution_subgroup_size;   // |H n Gamma| = 2 |T n Gamma|
    std::uint64_t tau_normal_closure_size;    // |N(tau)|, equals |H n Gamma|
    std::uint64_t translation_span_rank;      // F_p-rank of M = <(a^k - 1) g>
    Decomposition decomposition;
    bool is_full_group;                       // Gamma = AGL(1,q)
    std::uint64_t a_exponent;                 // m with a = gamma^m
};

// Decomposes the closure relative to T and H, computes the normal closure
// of tau by conjugation, the F_p-span of the reachable translations, and
// the full-group criterion (gcd(q-1,m) = 1, or q = 3 mod 4 and gcd = 2),
// cross-checked against |Gamma| = q(q-1).  Violations of the expected
// bookkeeping raise inconsistent_table.
StructureReport analyze_structure(const GroupTable& table, const PolyhedronSpec& spec);

// Rank-3 face poset realized from cosets: vertices are cosets of <sigma2>,
// edges of <tau>, faces of <sigma1>; two faces are incident iff the cosets
// intersect.  Faces store sorted lists of group-element indices.
struct FacePoset {
    std::vector<std::vector<std::uint32_t>> vertices, edges, faces;
    std::vector<std::vector<std::uint32_t>> edge_vertices;  // per edge, incident vertices
    std::vector<std::vector<std::uint32_t>> edge_faces;     // per edge, incident faces
    std::vector<std::vector<std::uint32_t>> vertex_edges;   // per vertex, incident edges
    std::vector<std::vector<std::uint32_t>> face_edges;     // per face, incident edges
    std::vector<std::vector<std::uint32_t>> vertex_faces;   // per vertex, incident faces

    bool vertex_face_incident(std::uint32_t v, std::uint32_t f) const;

    // Flags (v, e, f) of mutually incident faces.
    struct Flag {
        std::uint32_t v, e, f;
    };
    std::vector<Flag> flags() const;
};

FacePoset build_poset(const GroupTable& table);

// Diamond condition at every rank: each edge lies on exactly two vertices
// and two faces, and each incident (vertex, face) pair shares exactly two
// edges.
bool check_diamond_property(const FacePoset& poset);

// The flag graph under 0-, 1- and 2-adjacency is connected.
bool check_flag_connectivity(const FacePoset& poset);

struct PolyhedronReport {
    PolyhedronSpec spec;
    std::uint64_t s, t;           // type {s, t}
    std::uint64_t f0, f1, f2;     // vertices, edges, faces
    std::int64_t euler;           // f0 - f1 + f2, always even
    std::uint64_t genus;          // 1 - euler/2
    std::uint64_t group_order;
    StructureReport structure;
    std::optional<ChiralityVerdict> chirality;  // filled by the chirality module
};

// Type, f-vector (coset counts |G|/t, |G|/2, |G|/s), Euler characteristic
// and genus.  For full-group specs the genus is cross-checked against the
// closed forms 1 + q(q-5)/4 (q = 1 mod 4) and 1 + q(q-7)/4 (q = 3 mod 4).
PolyhedronReport schlafli_and_genus(const GroupTable& table, const PolyhedronSpec& spec);

struct SchlafliType {
    std::uint64_t s, t;

    friend bool operator==(const SchlafliType&, const SchlafliType&) = default;
};

// Predicted type {s, n} for the polyhedra with t = o(a) = n, where n > 2
// divides q-1 and a = gamma^{(q-1)/n}: s is the order of -a^{-1} given by
// the shift rule on m = (q-1)/n.
SchlafliType survey_type(const PrimePower& pp, std::uint64_t n);

}  // namespace aglpoly
