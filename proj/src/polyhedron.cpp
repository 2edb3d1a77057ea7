#include "aglpoly/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace aglpoly {

Fq PolyhedronSpec::translation_seed() const {
    const Field& f = field();
    return c - (b + b) / (f.one() - a);
}

void validate(const PolyhedronSpec& spec) {
    const Field& f = spec.field();
    require(f.q() >= 5, errc::q_too_small,
            "q = " + std::to_string(f.q()) + " is too small; need q >= 5");
    require(!spec.a.is_zero() && spec.a != f.one() && spec.a != -f.one(),
            errc::degenerate_a, "a must avoid 0, 1 and -1");
    require(!spec.translation_seed().is_zero(), errc::intersection_violation,
            "c = 2b/(1-a) breaks the intersection property");
}

PolyhedronSpec dual(const PolyhedronSpec& spec) {
    validate(spec);
    const PolyhedronSpec d{-spec.a, spec.b + spec.a * spec.c, spec.c};
    validate(d);  // always passes: the dual generators are sigma2^{-1}, sigma1^{-1}
    return d;
}

static GeneratorTriple build_triple(const PolyhedronSpec& spec) {
    const Field& f = spec.field();
    const AffineMap sigma2(spec.a, spec.b);
    const AffineMap tau(-f.one(), spec.c);
    const AffineMap sigma1 = tau * sigma2.inverse();

    // sigma1 = alpha(-a^{-1}, a^{-1} b + c), tau = sigma1 * sigma2 an involution
    const Fq ai = spec.a.inv();
    require(sigma1 == AffineMap(-ai, ai * spec.b + spec.c), errc::internal_error,
            "sigma1 does not match its closed form");
    require(sigma1 * sigma2 == tau && (tau * tau).is_identity(), errc::internal_error,
            "generator relations violated");
    return GeneratorTriple{sigma1, sigma2, tau};
}

GeneratorTriple make_generators(const PolyhedronSpec& spec) {
    validate(spec);
    return build_triple(spec);
}

GeneratorTriple make_generators_unchecked(const PolyhedronSpec& spec) {
    const Field& f = spec.field();
    require(f.q() >= 5, errc::q_too_small, "q must be at least 5");
    require(!spec.a.is_zero() && spec.a != f.one() && spec.a != -f.one(),
            errc::degenerate_a, "a must avoid 0, 1 and -1");
    return build_triple(spec);
}

static std::vector<std::uint64_t> cyclic_keys(const AffineMap& g) {
    std::vector<std::uint64_t> keys;
    AffineMap cur = AffineMap::identity(g.field());
    do {
        keys.push_back(cur.key());
        cur = cur * g;
    } while (!cur.is_identity());
    return keys;
}

bool check_intersection_property(const GeneratorTriple& triple) {
    const std::uint64_t id_key = AffineMap::identity(triple.field()).key();
    std::vector<std::uint64_t> k1 = cyclic_keys(triple.sigma1);
    std::vector<std::uint64_t> k2 = cyclic_keys(triple.sigma2);
    std::sort(k1.begin(), k1.end());
    std::sort(k2.begin(), k2.end());
    std::vector<std::uint64_t> common;
    std::set_intersection(k1.begin(), k1.end(), k2.begin(), k2.end(),
                          std::back_inserter(common));
    return common.size() == 1 && common.front() == id_key;
}

GroupTable GroupTable::closure(const GeneratorTriple& triple) {
    const Field& f = triple.field();
    GroupTable table;

    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    std::vector<AffineMap> elems;
    const auto push = [&](const AffineMap& m) {
        if (seen.emplace(m.key(), static_cast<std::uint32_t>(elems.size())).second)
            elems.push_back(m);
    };

    push(AffineMap::identity(f));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const AffineMap cur = elems[i];
        push(cur * triple.sigma1);
        push(cur * triple.sigma2);
    }

    const std::uint64_t agl_order = f.q() * (f.q() - 1);
    require(agl_order % elems.size() == 0, errc::internal_error,
            "closure size does not divide |AGL(1,q)|");

    std::sort(elems.begin(), elems.end(),
              [](const AffineMap& x, const AffineMap& y) { return x.key() < y.key(); });
    table.elems_ = std::move(elems);
    table.index_.reserve(table.elems_.size());
    for (std::uint32_t i = 0; i < table.elems_.size(); ++i)
        table.index_.emplace(table.elems_[i].key(), i);

    table.identity_ = table.index_of(AffineMap::identity(f));
    table.sigma1_ = table.index_of(triple.sigma1);
    table.sigma2_ = table.index_of(triple.sigma2);
    table.tau_ = table.index_of(triple.tau);
    return table;
}

std::optional<std::size_t> GroupTable::find(const AffineMap& f) const {
    const auto it = index_.find(f.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GroupTable::index_of(const AffineMap& f) const {
    const auto idx = find(f);
    require(idx.has_value(), errc::internal_error, "element missing from group table");
    return *idx;
}

std::size_t GroupTable::mul(std::size_t i, std::size_t j) const {
    return index_of(elems_[i] * elems_[j]);
}

std::size_t GroupTable::inverse(std::size_t i) const { return index_of(elems_[i].inverse()); }

std::vector<std::uint32_t> GroupTable::cyclic_subgroup(std::size_t i) const {
    std::vector<std::uint32_t> out{static_cast<std::uint32_t>(identity_)};
    std::size_t cur = identity_;
    while ((cur = mul(cur, i)) != identity_) out.push_back(static_cast<std::uint32_t>(cur));
    return out;
}

const char* to_string(Decomposition d) noexcept {
    return d == Decomposition::translation_semidirect ? "T_semidirect" : "H_semidirect";
}

// Closure of a subset (given as indices) under multiplication, as a sorted
// index list.  Seeds must be closed under inverse or generate a finite
// group anyway (always true here).
static std::vector<std::uint32_t> subgroup_closure(const GroupTable& table,
                                                   const std::vector<std::uint32_t>& seeds) {
    std::vector<bool> in(table.size(), false);
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(table.identity())};
    in[table.identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (const std::uint32_t s : seeds) {
            const std::uint32_t nxt = static_cast<std::uint32_t>(table.mul(members[i], s));
            if (!in[nxt]) {
                in[nxt] = true;
                members.push_back(nxt);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

StructureReport analyze_structure(const GroupTable& table, const PolyhedronSpec& spec) {
    const Field& f = spec.field();
    const std::uint64_t q = f.q();
    const Fq one = f.one(), minus_one = -one;

    StructureReport rep{};
    rep.a_exponent = f.dlog(spec.a);
    const std::uint64_t gcd_qm = std::gcd(q - 1, rep.a_exponent);

    std::uint64_t t_size = 0, h_size = 0;
    for (std::size_t i = 0; i < table.size(); ++i) {
        const Fq apart = table[i].a();
        if (apart == one) ++t_size;
        if (apart == one || apart == minus_one) ++h_size;
    }
    rep.translation_subgroup_size = t_size;
    rep.involution_subgroup_size = h_size;
    require(h_size == 2 * t_size, errc::inconsistent_table,
            "involution overgroup is not twice the translation part");

    // Normal closure of tau: conjugates by every group element, closed
    // under multiplication.
    std::vector<std::uint32_t> conjugates;
    {
        std::unordered_set<std::uint32_t> set;
        for (std::size_t g = 0; g < table.size(); ++g) {
            const std::size_t c = table.mul(table.mul(g, table.tau()), table.inverse(g));
            set.insert(static_cast<std::uint32_t>(c));
        }
        conjugates.assign(set.begin(), set.end());
    }
    rep.tau_normal_closure_size = subgroup_closure(table, conjugates).size();
    require(rep.tau_normal_closure_size == h_size, errc::inconsistent_table,
            "normal closure of tau differs from H n Gamma");

    // F_p-span of {(a^k - 1) g : k >= 0}: Gaussian elimination on the
    // coefficient vectors.
    const Fq seed = spec.translation_seed();
    const std::uint64_t t_order = spec.a.order();
    Fq ak = one;
    std::vector<std::vector<std::uint32_t>> rows;  // reduced echelon rows, digits
    std::vector<std::size_t> pivots;
    const std::uint64_t p = f.p(), l = f.l();
    const auto digits_of = [&](Fq v) {
        std::vector<std::uint32_t> d(l);
        std::uint64_t rest = v.enc();
        for (std::uint64_t i = 0; i < l; ++i) {
            d[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        return d;
    };
    for (std::uint64_t k = 0; k < t_order; ++k, ak = ak * spec.a) {
        const Fq v = (ak - one) * seed;
        if (v.is_zero()) continue;
        auto d = digits_of(v);
        // reduce against existing rows
        for (std::size_t ri = 0; ri < rows.size(); ++ri) {
            const std::uint64_t coef = d[pivots[ri]];
            if (coef == 0) continue;
            for (std::uint64_t i = 0; i < l; ++i)
                d[i] = static_cast<std::uint32_t>((d[i] + (p - coef) * rows[ri][i]) % p);
        }
        std::size_t pivot = l;
        for (std::size_t i = 0; i < l; ++i)
            if (d[i] != 0) {
                pivot = i;
                break;
            }
        if (pivot == l) continue;  // dependent
        // normalize pivot digit to 1
        const std::uint64_t pinv = [&] {
            std::uint64_t x = d[pivot], r = 1;
            // inverse mod p by Fermat
            std::uint64_t e = p - 2, base = x;
            while (e) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            return r;
        }();
        for (std::uint64_t i = 0; i < l; ++i)
            d[i] = static_cast<std::uint32_t>(d[i] * pinv % p);
        rows.push_back(std::move(d));
        pivots.push_back(pivot);
    }
    rep.translation_span_rank = rows.size();

    const std::uint64_t reachable = (q - 1) / gcd_qm;  // order of a
    require(rep.translation_span_rank >= ceil_log(p, reachable), errc::inconsistent_table,
            "translation span rank below its guaranteed bound");

    // Every element of the span must occur in Gamma as a translation.
    {
        std::vector<std::uint32_t> span_encs{0};
        for (const auto& row : rows) {
            std::uint64_t renc = 0;
            for (std::uint64_t i = l; i-- > 0;) renc = renc * p + row[i];
            const std::size_t base = span_encs.size();
            for (std::uint64_t cc = 1; cc < p; ++cc) {
                const Fq scaled = f.from_int(static_cast<std::int64_t>(cc)) * f.elem(renc);
                for (std::size_t i = 0; i < base; ++i) {
                    const Fq sum = f.elem(span_encs[i]) + scaled;
                    span_encs.push_back(static_cast<std::uint32_t>(sum.enc()));
                }
            }
        }
        for (const std::uint32_t enc : span_encs) {
            const AffineMap tr = AffineMap::translation(f.elem(enc));
            require(table.find(tr).has_value(), errc::inconsistent_table,
                    "translation span leaves the group");
        }
    }

    rep.decomposition = (f.pp().r % gcd_qm == 0) ? Decomposition::translation_semidirect
                                                 : Decomposition::involution_semidirect;
    const std::uint64_t sigma2_order = table.element_order(table.sigma2());
    const std::uint64_t complement =
        rep.decomposition == Decomposition::translation_semidirect ? t_size : h_size;
    require(table.size() == complement * sigma2_order, errc::inconsistent_table,
            "group order does not factor through the semidirect decomposition");

    rep.is_full_group = gcd_qm == 1 || (q % 4 == 3 && gcd_qm == 2);
    require(rep.is_full_group == (table.size() == q * (q - 1)), errc::inconsistent_table,
            "full-group criterion disagrees with the closure size");
    return rep;
}

bool FacePoset::vertex_face_incident(std::uint32_t v, std::uint32_t f) const {
    const auto& vf = vertex_faces[v];
    return std::binary_search(vf.begin(), vf.end(), f);
}

std::vector<FacePoset::Flag> FacePoset::flags() const {
    std::vector<Flag> out;
    for (std::uint32_t e = 0; e < edges.size(); ++e)
        for (const std::uint32_t v : edge_vertices[e])
            for (const std::uint32_t f : edge_faces[e])
                if (vertex_face_incident(v, f)) out.push_back({v, e, f});
    return out;
}

FacePoset build_poset(const GroupTable& table) {
    const GeneratorTriple triple{table[table.sigma1()], table[table.sigma2()],
                                 table[table.tau()]};
    require(check_intersection_property(triple), errc::intersection_violation,
            "cannot build a poset without the intersection property");

    const std::size_t n = table.size();
    FacePoset poset;

    // Partition the group into left cosets of a cyclic subgroup.
    const auto partition = [&](std::size_t gen, std::vector<std::uint32_t>& coset_of,
                               std::vector<std::vector<std::uint32_t>>& cosets) {
        const std::vector<std::uint32_t> sub = table.cyclic_subgroup(gen);
        coset_of.assign(n, UINT32_MAX);
        for (std::size_t g = 0; g < n; ++g) {
            if (coset_of[g] != UINT32_MAX) continue;
            const std::uint32_t id = static_cast<std::uint32_t>(cosets.size());
            std::vector<std::uint32_t> members;
            members.reserve(sub.size());
            for (const std::uint32_t s : sub) {
                const std::uint32_t m = static_cast<std::uint32_t>(table.mul(g, s));
                coset_of[m] = id;
                members.push_back(m);
            }
            std::sort(members.begin(), members.end());
            cosets.push_back(std::move(members));
        }
    };

    std::vector<std::uint32_t> v_of, e_of, f_of;
    partition(table.sigma2(), v_of, poset.vertices);
    partition(table.tau(), e_of, poset.edges);
    partition(table.sigma1(), f_of, poset.faces);

    const auto collect = [&](const std::vector<std::uint32_t>& left,
                             const std::vector<std::uint32_t>& right, std::size_t nleft,
                             std::vector<std::vector<std::uint32_t>>& out) {
        std::vector<std::unordered_set<std::uint32_t>> sets(nleft);
        for (std::size_t g = 0; g < n; ++g) sets[left[g]].insert(right[g]);
        out.resize(nleft);
        for (std::size_t i = 0; i < nleft; ++i) {
            out[i].assign(sets[i].begin(), sets[i].end());
            std::sort(out[i].begin(), out[i].end());
        }
    };

    collect(e_of, v_of, poset.edges.size(), poset.edge_vertices);
    collect(e_of, f_of, poset.edges.size(), poset.edge_faces);
    collect(v_of, e_of, poset.vertices.size(), poset.vertex_edges);
    collect(f_of, e_of, poset.faces.size(), poset.face_edges);
    collect(v_of, f_of, poset.vertices.size(), poset.vertex_faces);
    return poset;
}

bool check_diamond_property(const FacePoset& poset) {
    for (std::size_t e = 0; e < poset.edges.size(); ++e)
        if (poset.edge_vertices[e].size() != 2 || poset.edge_faces[e].size() != 2)
            return false;

    // Each incident (vertex, face) pair must share exactly two edges.
    for (std::uint32_t v = 0; v < poset.vertices.size(); ++v) {
        for (const std::uint32_t f : poset.vertex_faces[v]) {
            std::size_t shared = 0;
            for (const std::uint32_t e : poset.vertex_edges[v]) {
                const auto& ef = poset.edge_faces[e];
                if (std::find(ef.begin(), ef.end(), f) != ef.end()) ++shared;
            }
            if (shared != 2) return false;
        }
    }
    return true;
}

bool check_flag_connectivity(const FacePoset& poset) {
    const std::vector<FacePoset::Flag> flags = poset.flags();
    if (flags.empty()) return false;

    const std::uint64_t ne = poset.edges.size(), nf = poset.faces.size();
    std::unordered_map<std::uint64_t, std::uint32_t> flag_index;
    const auto fkey = [&](std::uint32_t v, std::uint32_t e, std::uint32_t f) {
        return (static_cast<std::uint64_t>(v) * ne + e) * nf + f;
    };
    flag_index.reserve(flags.size());
    for (std::uint32_t i = 0; i < flags.size(); ++i)
        flag_index.emplace(fkey(flags[i].v, flags[i].e, flags[i].f), i);

    std::vector<bool> seen(flags.size(), false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const FacePoset::Flag fl = flags[stack.back()];
        stack.pop_back();
        const auto visit = [&](std::uint32_t v, std::uint32_t e, std::uint32_t f) {
            const auto it = flag_index.find(fkey(v, e, f));
            if (it != flag_index.end() && !seen[it->second]) {
                seen[it->second] = true;
                ++visited;
                stack.push_back(it->second);
            }
        };
        for (const std::uint32_t v : poset.edge_vertices[fl.e])
            if (v != fl.v) visit(v, fl.e, fl.f);
        for (const std::uint32_t f : poset.edge_faces[fl.e])
            if (f != fl.f) visit(fl.v, fl.e, f);
        const auto& ve = poset.vertex_edges[fl.v];
        for (const std::uint32_t e : poset.face_edges[fl.f])
            if (e != fl.e && std::binary_search(ve.begin(), ve.end(), e))
                visit(fl.v, e, fl.f);
    }
    return visited == flags.size();
}

PolyhedronReport schlafli_and_genus(const GroupTable& table, const PolyhedronSpec& spec) {
    const GeneratorTriple triple{table[table.sigma1()], table[table.sigma2()],
                                 table[table.tau()]};
    require(check_intersection_property(triple), errc::intersection_violation,
            "type and genus are undefined without the intersection property");

    PolyhedronReport rep{spec,
                         table.element_order(table.sigma1()),
                         table.element_order(table.sigma2()),
                         0,
                         0,
                         0,
                         0,
                         0,
                         static_cast<std::uint64_t>(table.size()),
                         analyze_structure(table, spec),
                         std::nullopt};

    const std::uint64_t n = table.size();
    require(n % rep.t == 0 && n % 2 == 0 && n % rep.s == 0, errc::internal_error,
            "coset counts do not divide the group order");
    rep.f0 = n / rep.t;
    rep.f1 = n / 2;
    rep.f2 = n / rep.s;
    rep.euler = static_cast<std::int64_t>(rep.f0) - static_cast<std::int64_t>(rep.f1) +
                static_cast<std::int64_t>(rep.f2);
    require(rep.euler % 2 == 0, errc::inconsistent_table,
            "odd Euler characteristic on an orientable map");
    const std::int64_t genus = 1 - rep.euler / 2;
    require(genus >= 0, errc::inconsistent_table, "negative genus");
    rep.genus = static_cast<std::uint64_t>(genus);

    if (rep.structure.is_full_group) {
        const std::uint64_t q = spec.field().q();
        const std::uint64_t expected =
            q % 4 == 1 ? 1 + q * (q - 5) / 4 : 1 + q * (q - 7) / 4;
        require(rep.genus == expected, errc::inconsistent_table,
                "full-group genus does not match its closed form");
    }
    return rep;
}

SchlafliType survey_type(const PrimePower& pp, std::uint64_t n) {
    require(n >= 1 && (pp.q - 1) % n == 0, errc::not_a_divisor,
            "n must divide q - 1");
    require(n > 2, errc::n_too_small, "n must exceed 2");
    const std::uint64_t m = (pp.q - 1) / n;
    return SchlafliType{neg_inverse_order(pp, m), n};
}

}  // namespace aglpoly
