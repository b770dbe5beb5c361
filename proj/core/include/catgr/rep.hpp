#pragma once

/**
 * @file rep.hpp
 * @brief Pseudofunctors C → Add with explicit 2-isomorphisms.
 *
 * For each object i the representation stores η_i : R(1_i) ⇒ Id together
 * with its inverse δ_i, and for each composable pair (b, a) it stores
 * θ_{b,a} : R(ba) ⇒ R(b)R(a) with inverse μ_{b,a}. The coherence laws are
 * checked in the (δ, μ) direction:
 *
 *   Rep.1  μ_{c,ba} ∘ R(c)μ_{b,a} = μ_{cb,a} ∘ μ_{c,b}R(a)
 *   Rep.2  μ_{a,1} ∘ R(a)δ_i = id_{R(a)} = μ_{1,a} ∘ δ_j R(a)
 */

#include "catgr/fincat.hpp"
#include "catgr/lincat.hpp"
#include "catgr/report.hpp"

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace catgr {

class Representation {
public:
    Representation() = default;
    /// `theta[b * m + a]` is set exactly for composable pairs. Throws
    /// InvalidRepresentation on count mismatches or mixed rings; typing of
    /// the individual functors and transformations is left to validation.
    Representation(FiniteCategory base, std::vector<LinearCategoryPtr> fibers, std::vector<AdditiveFunctor> act,
                   std::vector<NatIso> eta, std::vector<std::optional<NatIso>> theta);

    const FiniteCategory& base() const noexcept { return base_; }
    const GroundRing& ring() const noexcept { return ring_; }

    const LinearCategory& fiber(std::size_t i) const { return *fibers_.at(i); }
    const LinearCategoryPtr& fiber_ptr(std::size_t i) const { return fibers_.at(i); }
    const AdditiveFunctor& act(std::size_t a) const { return act_.at(a); }
    const NatIso& eta(std::size_t i) const { return eta_.at(i); }
    /// Throws InvalidArgument for a non-composable pair.
    const NatIso& theta(std::size_t b, std::size_t a) const;

    /// θ_{b,a} and μ_{b,a} shorthands.
    const NatTransform& theta_fwd(std::size_t b, std::size_t a) const { return theta(b, a).forward; }
    const NatTransform& mu(std::size_t b, std::size_t a) const { return theta(b, a).backward; }
    const NatTransform& delta(std::size_t i) const { return eta(i).backward; }

private:
    FiniteCategory base_;
    GroundRing ring_;
    std::vector<LinearCategoryPtr> fibers_;
    std::vector<AdditiveFunctor> act_;
    std::vector<NatIso> eta_;
    std::vector<std::optional<NatIso>> theta_;
};

using RepresentationPtr = std::shared_ptr<const Representation>;

/// Category axioms, fiber axioms, functor laws, typing and invertibility of
/// every η/θ pair, then Rep.1 on every composable triple and Rep.2 on every
/// morphism, each at every fiber object. Findings carry both evaluated legs.
ValidationReport validate_representation(const Representation& r);

/// The two legs of Rep.1 at (c, b, a) and fiber object x ∈ R(dom a).
std::pair<HomElem, HomElem> rep1_legs(const Representation& r, std::size_t c, std::size_t b, std::size_t a,
                                      std::size_t x);
/// The two composites of Rep.2 at a and x ∈ R(dom a); both should be id.
std::pair<HomElem, HomElem> rep2_legs(const Representation& r, std::size_t a, std::size_t x);

/// Functor on the nose: R(1_i) = Id, R(ba) = R(b)R(a), every η/θ component an identity.
bool is_strict(const Representation& r);

/// Scalar twist table: missing pairs default to 1.
using Cocycle = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

/// Every fiber is the ground ring, every R(a) the identity, all 2-cells identities.
Representation constant_representation(const FiniteCategory& c, const GroundRing& ring);

/// Every fiber is `fiber`, every R(a) the identity functor,
/// θ_{b,a} = σ(b,a)·id and η_i = σ(1_i,1_i)^{-1}·id. Coherent iff σ is a
/// 2-cocycle on the composable pairs. Throws NotAUnit.
Representation twisted_constant_representation(const FiniteCategory& c, const LinearCategoryPtr& fiber,
                                               const Cocycle& sigma);

/// One-object fibers equal to the ground ring, twisted by σ.
Representation twisted_group_representation(const FiniteCategory& g, const GroundRing& ring, const Cocycle& sigma);

/// σ(b,a) = λ(b)λ(a)/λ(ba) for a unit-valued λ on morphisms; always a cocycle.
Cocycle coboundary(const FiniteCategory& c, const GroundRing& ring, const std::vector<Scalar>& lambda);

/// True iff σ(b,a)σ(c,ba) = σ(c,b)σ(cb,a) on every composable triple.
bool is_cocycle(const FiniteCategory& c, const GroundRing& ring, const Cocycle& sigma);

/// Right module over a linear category: a contravariant additive functor
/// N : A^op → free modules. `actions[x*n + y][p]` is N(basis p of hom(x,y)),
/// a matrix N(y) → N(x).
class FiberModule {
public:
    FiberModule() = default;
    FiberModule(LinearCategoryPtr cat, std::vector<FreeModule> values, std::vector<std::vector<Matrix>> actions);

    const LinearCategoryPtr& cat() const noexcept { return cat_; }
    const FreeModule& value(std::size_t x) const { return values_.at(x); }
    const std::vector<FreeModule>& values() const noexcept { return values_; }
    const Matrix& basis_action(std::size_t x, std::size_t y, std::size_t p) const {
        return actions_.at(x * cat_->object_count() + y).at(p);
    }
    const std::vector<std::vector<Matrix>>& actions() const noexcept { return actions_; }

    /// N(g) : N(g.dst) → N(g.src), by linearity.
    Matrix apply(const HomElem& g) const;

    friend bool operator==(const FiberModule& a, const FiberModule& b) {
        return same_category(a.cat_, b.cat_) && a.values_ == b.values_ && a.actions_ == b.actions_;
    }

private:
    LinearCategoryPtr cat_;
    std::vector<FreeModule> values_;
    std::vector<std::vector<Matrix>> actions_;
};

/// N(id) = id and N(g∘f) = N(f)∘N(g) on basis pairs.
ValidationReport validate_fiber_module(const FiberModule& n);

/// a*N for a : i → j: (a*N)(x) = N(R(a)x), (a*N)(g) = N(R(a)g).
/// Throws CategoryMismatch unless N is a module over R(j).
FiberModule restrict_module(const Representation& r, std::size_t a, const FiberModule& n);

}  // namespace catgr
