#pragma once

// Shared fixtures for the test suites: gallery loading, seeded random
// instances, and oracles that recompute expected values without going
// through the library's own constructions.

#include "catgr/error.hpp"
#include "catgr/fincat.hpp"
#include "catgr/groth.hpp"
#include "catgr/lincat.hpp"
#include "catgr/rep.hpp"
#include "catgr/rmod.hpp"

#include "instance.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using namespace catgr;

inline std::filesystem::path gallery(const std::string& name) {
    return std::filesystem::path(CATGR_GALLERY_DIR) / name;
}

inline cli::Instance load(const std::string& name) { return cli::load_instance(gallery(name)); }

inline RepresentationPtr load_rep(const std::string& name) { return cli::build_representation(load(name)); }

/// Gallery files whose representation is coherent.
inline const std::vector<std::string>& valid_gallery() {
    static const std::vector<std::string> names = {"a2_constant.json", "a3_constant.json",  "a4_constant.json",
                                                   "z2_trivial.json",  "z2_twisted.json",   "z2_swap_skew.json",
                                                   "point.json",       "empty.json"};
    return names;
}

inline GroundRing Q() { return GroundRing::rationals(); }

inline FiniteCategory a_n(std::size_t n) {
    static const std::vector<std::string> greek = {"α", "β", "γ", "δ", "ε"};
    std::vector<std::string> names(greek.begin(), greek.begin() + static_cast<std::ptrdiff_t>(n - 1));
    return path_category(linear_quiver(n, names));
}

inline RepresentationPtr share(Representation r) { return std::make_shared<const Representation>(std::move(r)); }

// ------------------------------------------------------------- random data

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen); }
    bool coin(double p) { return std::bernoulli_distribution(p)(gen); }

    /// Nonzero rational from a small pool, so entries stay readable.
    Scalar unit_q() {
        static const std::vector<Scalar> pool = {1, -1, 2, -2, Scalar(1, 2), Scalar(-1, 3), 3, Scalar(2, 5)};
        return pool[below(pool.size())];
    }
    Scalar entry() {
        static const std::vector<Scalar> pool = {0, 0, 1, -1, 2, Scalar(1, 2), -3};
        return pool[below(pool.size())];
    }
};

/// Acyclic quiver on up to `max_vertices` vertices; arrows only go i → j for i < j.
inline Quiver random_quiver(Rng& rng, std::size_t max_vertices = 5) {
    Quiver q;
    const std::size_t n = 1 + rng.below(max_vertices);
    for (std::size_t v = 0; v < n; ++v) q.vertices.push_back("v" + std::to_string(v));
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t arrows = rng.coin(0.45) ? 1 : 0;
            if (arrows && j == i + 1 && rng.coin(0.15)) arrows = 2;
            for (std::size_t k = 0; k < arrows; ++k)
                q.arrows.push_back({"x" + std::to_string(count++), q.vertices[i], q.vertices[j]});
        }
    return q;
}

/// Coboundary twist of the constant representation with fiber `fiber`.
inline Representation random_twisted(Rng& rng, const FiniteCategory& c, const LinearCategoryPtr& fiber) {
    std::vector<Scalar> lambda;
    for (std::size_t a = 0; a < c.morphism_count(); ++a) lambda.push_back(rng.unit_q());
    return twisted_constant_representation(c, fiber, coboundary(c, fiber->ring(), lambda));
}

/// Small multi-object fiber, or the ground field.
inline LinearCategoryPtr random_fiber(Rng& rng) {
    if (rng.coin(0.5)) return ground_category(Q());
    Quiver q = random_quiver(rng, 3);
    return linearize(path_category(q), Q());
}

/// Random module of ranks ≤ 2 over a twisted constant representation with
/// one-object fibers K, built from a strict module N by M(a) = λ-rescaling.
/// Only arrows are chosen; composites follow from completion.
inline RModule random_module(Rng& rng, const RepresentationPtr& r) {
    const auto& c = r->base();
    std::vector<FiberModule> values;
    std::vector<std::size_t> ranks;
    for (std::size_t i = 0; i < c.object_count(); ++i) {
        const std::size_t rk = rng.below(3);
        ranks.push_back(rk);
        std::vector<std::vector<Matrix>> acts{{Matrix::identity(rk)}};
        values.emplace_back(r->fiber_ptr(i), std::vector<FreeModule>{FreeModule::of_rank(r->ring(), rk, "m")}, acts);
    }
    std::vector<std::optional<std::vector<Matrix>>> action(c.morphism_count());
    // arrows of a path category are the length-one paths: no '∘' in their id
    for (std::size_t a = 0; a < c.morphism_count(); ++a) {
        if (c.is_identity(a) || c.id(a).find("∘") != std::string::npos) continue;
        Matrix m(ranks[c.dom(a)], ranks[c.cod(a)]);
        for (std::size_t x = 0; x < m.rows(); ++x)
            for (std::size_t y = 0; y < m.cols(); ++y) m(x, y) = rng.entry();
        action[a] = std::vector<Matrix>{m};
    }
    return complete_module(r, std::move(values), std::move(action));
}

// ------------------------------------------------------------------ oracles

/// Paths of the linear quiver 1 → … → n, as arrow sequences in traversal order,
/// found by depth-first search from every vertex.
struct Path {
    std::size_t start, end;
    std::vector<std::string> arrows;

    std::string name() const {
        if (arrows.empty()) return "1_" + std::to_string(start + 1);
        std::string out;
        for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) out += (out.empty() ? "" : "∘") + *it;
        return out;
    }
};

inline std::vector<Path> linear_paths(std::size_t n, const std::vector<std::string>& arrow_names) {
    std::vector<Path> out;
    for (std::size_t s = 0; s < n; ++s) {
        Path p{s, s, {}};
        out.push_back(p);
        while (p.end + 1 < n) {
            p.arrows.push_back(arrow_names[p.end]);
            ++p.end;
            out.push_back(p);
        }
    }
    return out;
}

/// q ∗ p for the path algebra: concatenation when p ends where q starts.
inline std::optional<Path> concat(const Path& q, const Path& p) {
    if (p.end != q.start) return std::nullopt;
    Path out{p.start, q.end, p.arrows};
    out.arrows.insert(out.arrows.end(), q.arrows.begin(), q.arrows.end());
    return out;
}

/// Morphism id of an R[C] basis label "a|i:x|j:y|f".
inline std::string morphism_of(const std::string& label) { return label.substr(0, label.find('|')); }

/// Independent cocycle test: σ(b,a)σ(c,ba) = σ(c,b)σ(cb,a) on every composable triple.
inline bool cocycle_oracle(const FiniteCategory& c, const GroundRing& ring, const Cocycle& s) {
    auto at = [&](std::size_t b, std::size_t a) {
        auto it = s.find({b, a});
        return it == s.end() ? Scalar(1) : it->second;
    };
    for (std::size_t a = 0; a < c.morphism_count(); ++a)
        for (std::size_t b = 0; b < c.morphism_count(); ++b)
            for (std::size_t k = 0; k < c.morphism_count(); ++k) {
                if (c.dom(b) != c.cod(a) || c.dom(k) != c.cod(b)) continue;
                if (ring.mul(at(b, a), at(k, c.compose(b, a))) != ring.mul(at(k, b), at(c.compose(k, b), a)))
                    return false;
            }
    return true;
}

}  // namespace fixtures
