#include "aglpoly/chirality.hpp"

#include <algorithm>

namespace aglpoly {

const char* to_string(Chirality c) noexcept {
    switch (c) {
        case Chirality::chiral: return "chiral";
        case Chirality::regular: return "regular";
        case Chirality::undetermined: return "undetermined";
    }
    return "?";
}

const char* to_string(VerdictMethod m) noexcept {
    switch (m) {
        case VerdictMethod::full_group_criterion: return "full_group_criterion";
        case VerdictMethod::semi_affine_witness: return "semi_affine_witness";
        case VerdictMethod::exhaustive_oracle: return "exhaustive_oracle";
        case VerdictMethod::none: return "none";
    }
    return "?";
}

std::optional<RhoSolution> solve_rho_system(const PolyhedronSpec& spec) {
    const Field& f = spec.field();
    require(f.l() % 2 == 0, errc::odd_extension_degree,
            "no involutory field automorphism: extension degree is odd");
    validate(spec);

    const Fq one = f.one();
    const Fq abar = spec.a.bar(), bbar = spec.b.bar(), cbar = spec.c.bar();
    const Fq det = bbar + bbar - cbar * (one - abar);
    require(!det.is_zero(), errc::internal_error,
            "conjugation system is singular for a valid spec");

    const Fq g = -(abar * (det.bar() / det));
    const Fq h = (bbar * spec.c + abar * spec.b * cbar) / det;

    // involution conditions plus both equations of the linear system
    if (g * g.bar() != one) return std::nullopt;
    if (!(g * h.bar() + h).is_zero()) return std::nullopt;
    if (bbar * g + (one - abar) * h != -(abar * spec.b)) return std::nullopt;
    if (cbar * g + h + h != spec.c) return std::nullopt;

    return RhoSolution{g, h, det, SemiAffineMap(g, h, f.l() / 2)};
}

ReflectionTriple reflection_generators(const GeneratorTriple& triple,
                                       const SemiAffineMap& rho) {
    const SemiAffineMap rho0 = SemiAffineMap::from_affine(triple.tau) * rho;
    const SemiAffineMap rho1 = SemiAffineMap::from_affine(triple.sigma2) * rho;
    const SemiAffineMap& rho2 = rho;

    require(rho0.is_involutory() && rho1.is_involutory() && rho2.is_involutory(),
            errc::internal_error, "reflection generators are not involutory");
    require(rho0 * rho1 == SemiAffineMap::from_affine(triple.sigma1) &&
                rho1 * rho2 == SemiAffineMap::from_affine(triple.sigma2) &&
                rho0 * rho2 == SemiAffineMap::from_affine(triple.tau),
            errc::internal_error, "reflection products do not recover the rotations");
    return ReflectionTriple{rho0, rho1, rho2};
}

std::optional<ChiralityVerdict> analytic_classify(const PolyhedronSpec& spec,
                                                  const StructureReport& structure) {
    if (structure.is_full_group)
        return ChiralityVerdict{Chirality::chiral, VerdictMethod::full_group_criterion,
                                std::nullopt};

    const Field& f = spec.field();
    if (f.l() % 2 != 0 || spec.a * spec.a.bar() != f.one()) return std::nullopt;

    const auto sol = solve_rho_system(spec);
    require(sol.has_value(), errc::internal_error,
            "conjugation system has no valid solution although a*abar = 1");

    const GeneratorTriple triple = make_generators(spec);
    require(conjugate(sol->rho, triple.sigma2) == triple.sigma2.inverse() &&
                conjugate(sol->rho, triple.tau) == triple.tau,
            errc::internal_error, "semi-affine witness fails to conjugate the generators");
    require(sol->rho.is_involutory() && !sol->rho.is_identity(), errc::internal_error,
            "semi-affine witness is not an involution");
    reflection_generators(triple, sol->rho);  // validates the reflection system

    return ChiralityVerdict{Chirality::regular, VerdictMethod::semi_affine_witness,
                            Witness{sol->rho}};
}

std::optional<std::vector<std::uint32_t>> extend_generator_map(
    const GroupTable& from, std::size_t gen1, std::size_t gen2, const GroupTable& to,
    std::size_t img1, std::size_t img2) {
    if (from.size() != to.size()) return std::nullopt;
    if (from.element_order(gen1) != to.element_order(img1) ||
        from.element_order(gen2) != to.element_order(img2))
        return std::nullopt;

    constexpr std::uint32_t kUnset = UINT32_MAX;
    std::vector<std::uint32_t> img(from.size(), kUnset);
    img[from.identity()] = static_cast<std::uint32_t>(to.identity());

    // Determine the candidate map by factoring each element as a word in the
    // generators (breadth-first), checking phi(x*g) = phi(x)*phi(g) on every
    // (element, generator) edge of the Cayley graph.  That consistency
    // suffices for phi to be a homomorphism: by induction on the word length
    // of y, phi(x*(y*g)) = phi((x*y)*g) = phi(x*y)*phi(g) = phi(x)*phi(y)*
    // phi(g) = phi(x)*phi(y*g).
    std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(from.identity())};
    const std::pair<std::size_t, std::size_t> gens[2] = {{gen1, img1}, {gen2, img2}};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t x = queue[head];
        for (const auto& [g, ig] : gens) {
            const std::uint32_t y = static_cast<std::uint32_t>(from.mul(x, g));
            const std::uint32_t iy = static_cast<std::uint32_t>(to.mul(img[x], ig));
            if (img[y] == kUnset) {
                img[y] = iy;
                queue.push_back(y);
            } else if (img[y] != iy) {
                return std::nullopt;
            }
        }
    }
    require(queue.size() == from.size(), errc::internal_error,
            "generator pair does not generate the group");

    // Bijectivity.
    std::vector<bool> hit(to.size(), false);
    for (const std::uint32_t v : img) {
        if (hit[v]) return std::nullopt;
        hit[v] = true;
    }
    return img;
}

OracleResult brute_force_automorphism(const GroupTable& table, std::uint64_t cutoff) {
    require(table.size() <= cutoff, errc::cutoff_exceeded,
            "group order " + std::to_string(table.size()) + " exceeds the oracle cutoff " +
                std::to_string(cutoff));

    // The required images rho(sigma2) = sigma2^{-1} and rho(tau) = tau pin
    // down the only candidate; everything else is forced by the relations.
    auto images = extend_generator_map(table, table.sigma2(), table.tau(), table,
                                       table.inverse(table.sigma2()), table.tau());
    if (!images) return OracleResult{std::nullopt};

    // rho^2 fixes both generators, so it must be the identity.
    for (std::size_t i = 0; i < images->size(); ++i)
        require((*images)[(*images)[i]] == i, errc::internal_error,
                "witness automorphism is not involutory");
    return OracleResult{std::move(images)};
}

ChiralityVerdict classify(const PolyhedronSpec& spec, const GroupTable& table,
                          const StructureReport& structure, const ClassifyOptions& opts) {
    const auto analytic = analytic_classify(spec, structure);
    const bool oracle_in_range = table.size() <= opts.oracle_cutoff;

    if (analytic.has_value()) {
        if (opts.cross_check && oracle_in_range) {
            const OracleResult oracle = brute_force_automorphism(table, opts.oracle_cutoff);
            require(oracle.witness_found() == (analytic->status == Chirality::regular),
                    errc::inconsistent_table, "oracle disagrees with the analytic verdict");
        }
        return *analytic;
    }

    if (oracle_in_range) {
        const OracleResult oracle = brute_force_automorphism(table, opts.oracle_cutoff);
        if (oracle.witness_found()) {
            const GeneratorImageWitness w{table[table.inverse(table.sigma2())],
                                          table[table.tau()]};
            return ChiralityVerdict{Chirality::regular, VerdictMethod::exhaustive_oracle,
                                    Witness{w}};
        }
        return ChiralityVerdict{Chirality::chiral, VerdictMethod::exhaustive_oracle,
                                std::nullopt};
    }

    return ChiralityVerdict{Chirality::undetermined, VerdictMethod::none, std::nullopt};
}

ChiralityVerdict classify(const PolyhedronSpec& spec, const ClassifyOptions& opts) {
    const GeneratorTriple triple = make_generators(spec);
    const GroupTable table = GroupTable::closure(triple);
    const StructureReport structure = analyze_structure(table, spec);
    return classify(spec, table, structure, opts);
}

NoregsReport verify_noregs(const Field& field, std::uint64_t q_cutoff) {
    const std::uint64_t q = field.q();
    require(q <= q_cutoff, errc::cutoff_exceeded,
            "q = " + std::to_string(q) + " exceeds the exhaustive-check cutoff");

    NoregsReport rep{};
    rep.q = q;

    const Fq minus_one = -field.one();
    const std::vector<AffineMap> invs = involutions(field);

    // (a) involutions are exactly the a = -1 maps...
    bool refl_ok = true;
    for (const AffineMap& m : all_affine_maps(field)) {
        const bool actual = (m * m).is_identity() && !m.is_identity();
        if (actual != (m.a() == minus_one)) refl_ok = false;
    }
    rep.involution_count = invs.size();

    // ...and any two distinct ones multiply to a nontrivial translation.
    for (const AffineMap& x : invs)
        for (const AffineMap& y : invs) {
            if (x == y) continue;
            const AffineMap prod = x * y;
            if (!prod.is_translation() || prod.is_identity() ||
                prod.order() != field.p())
                refl_ok = false;
            ++rep.involution_pairs;
        }
    rep.reflections_impossible = refl_ok;

    // (b) rank-4 obstruction replayed on all involution triples.
    bool rank4_ok = true;
    for (const AffineMap& t12 : invs)
        for (const AffineMap& t23 : invs)
            for (const AffineMap& t123 : invs) {
                const AffineMap s3 = t12 * t123;
                const AffineMap s1 = t123 * t23;
                if (!s3.is_translation() || !s1.is_translation()) rank4_ok = false;
                const AffineMap s2 = s1.inverse() * t123 * s3.inverse();
                if (!s2.is_involution()) rank4_ok = false;
                ++rep.involution_triples;
            }
    rep.rank4_obstruction = rank4_ok;

    // (c) generator orders divide q - 1 across the full parameter sweep.
    bool orders_ok = true;
    for (std::uint64_t ae = 2; ae < q; ++ae) {
        const Fq a = field.elem(ae);
        if (a == minus_one) continue;
        for (std::uint64_t be = 0; be < q; ++be)
            for (std::uint64_t ce = 0; ce < q; ++ce) {
                const PolyhedronSpec spec{a, field.elem(be), field.elem(ce)};
                if (spec.translation_seed().is_zero()) continue;
                const GeneratorTriple triple = make_generators(spec);
                const std::uint64_t s = triple.sigma1.order();
                const std::uint64_t t = triple.sigma2.order();
                if ((q - 1) % s != 0 || (q - 1) % t != 0) orders_ok = false;
                ++rep.specs_checked;
            }
    }
    rep.orders_divide = orders_ok;
    return rep;
}

}  // namespace aglpoly
