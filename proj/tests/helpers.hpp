// Shared test-only utilities: independent brute-force oracles and a small
// parallel sweep helper.  Everything here deliberately avoids the library's
// closed-form code paths so tests compare two separate routes.

#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <thread>
#include <tuple>
#include <vector>

#include "aglpoly/chirality.hpp"

namespace aglpoly::testing {

// Smallest k >= 1 with x^k = 1, by repeated multiplication.
inline std::uint64_t brute_force_order(Fq x) {
    const Fq one = x.field().one();
    std::uint64_t k = 1;
    Fq cur = x;
    while (cur != one) {
        cur = cur * x;
        ++k;
    }
    return k;
}

// Smallest k >= 1 with f^k = id, by repeated composition.
inline std::uint64_t brute_force_order(const AffineMap& f) {
    std::uint64_t k = 1;
    AffineMap cur = f;
    while (!cur.is_identity()) {
        cur = cur * f;
        ++k;
    }
    return k;
}

// Order of the group generated by semi-affine maps, by closure.
inline std::size_t semi_affine_closure_size(const std::vector<SemiAffineMap>& gens) {
    const Field& f = gens.front().field();
    const auto key = [&](const SemiAffineMap& m) {
        return std::tuple(m.a().enc(), m.b().enc(), m.frob_exponent());
    };
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::uint32_t> seen;
    std::vector<SemiAffineMap> elems{SemiAffineMap(f.one(), f.zero(), 0)};
    seen.emplace(key(elems.front()), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const SemiAffineMap& g : gens) {
            const SemiAffineMap next = elems[i] * g;
            if (seen.emplace(key(next), static_cast<std::uint32_t>(elems.size())).second)
                elems.push_back(next);
        }
    return elems.size();
}

// Full multiplication-table check that an image vector really is a group
// homomorphism (quadratic; independent of the Cayley-edge argument used by
// the implementation).
inline bool images_form_homomorphism(const GroupTable& table,
                                     const std::vector<std::uint32_t>& img) {
    for (std::size_t x = 0; x < table.size(); ++x)
        for (std::size_t y = 0; y < table.size(); ++y)
            if (img[table.mul(x, y)] != table.mul(img[x], img[y])) return false;
    return true;
}

inline void parallel_for_index(std::size_t count,
                               const std::function<void(std::size_t)>& body) {
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

// All canonical specs (b = 0, c = 1) over a field, one per admissible a.
inline std::vector<PolyhedronSpec> canonical_specs(const Field& f) {
    std::vector<PolyhedronSpec> out;
    const std::uint64_t minus_one = (-f.one()).enc();
    for (std::uint64_t a = 2; a < f.q(); ++a)
        if (a != minus_one) out.push_back({f.elem(a), f.zero(), f.one()});
    return out;
}

}  // namespace aglpoly::testing
