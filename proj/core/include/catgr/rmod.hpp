#pragma once

/**
 * @file rmod.hpp
 * @brief Right modules over a representation, contravariant functors on
 *        Gr(R), the two constructions between them, and the projective
 *        generator of functors on Gr(R) together with its endomorphism algebra.
 *
 * A right R-module M has a right R(i)-module M_i for every object i and, for
 * every a : i → j, maps M(a)_x : M_j(R(a)x) → M_i(x) natural in x, subject to
 *
 *   M(a)_x ∘ M(b)_{R(a)x} = M(ba)_x ∘ M_k(θ_{b,a} x)
 *   M(1_i)_x = M_i((η_i x)^{-1})
 *
 * A functor on Gr(R)^op is stored as a FiberModule over the linear category
 * Gr(R), so F(g ∘ f) = F(f) ∘ F(g).
 */

#include "catgr/groth.hpp"
#include "catgr/report.hpp"
#include "catgr/rep.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace catgr {

class RModule {
public:
    RModule() = default;
    /// `values[i]` is a module over R(i); `action[a][x]` is the matrix of
    /// M(a)_x. Throws InvalidModule on count mismatches; shapes and laws are
    /// left to validate_module().
    RModule(RepresentationPtr rep, std::vector<FiberModule> values, std::vector<std::vector<Matrix>> action);

    const Representation& rep() const noexcept { return *rep_; }
    const RepresentationPtr& rep_ptr() const noexcept { return rep_; }
    const FiberModule& value(std::size_t i) const { return values_.at(i); }
    const std::vector<FiberModule>& values() const noexcept { return values_; }
    const Matrix& action(std::size_t a, std::size_t x) const { return action_.at(a).at(x); }
    const std::vector<std::vector<Matrix>>& actions() const noexcept { return action_; }

    friend bool operator==(const RModule& a, const RModule& b) {
        return a.values_ == b.values_ && a.action_ == b.action_;
    }

private:
    RepresentationPtr rep_;
    std::vector<FiberModule> values_;
    std::vector<std::vector<Matrix>> action_;
};

/// Typing, functoriality of each M_i, naturality of each M(a), then the two
/// module laws at every composable pair and fiber object.
ValidationReport validate_module(const RModule& m);

/// All values zero-rank.
RModule zero_module(const RepresentationPtr& r);

/// Fills in the actions left unset: identity morphisms get M_i(δ_i x), and a
/// composite c = ba with both factors known gets
/// M(a)_x ∘ M(b)_{R(a)x} ∘ M_k(μ_{b,a} x). Throws InvalidModule when some
/// action cannot be determined.
RModule complete_module(const RepresentationPtr& r, std::vector<FiberModule> values,
                        std::vector<std::optional<std::vector<Matrix>>> action);

/// Contravariant additive functor Gr(R)^op → free modules.
struct GrFunctor {
    GrothendieckPtr gr;
    FiberModule functor;

    const FreeModule& value(std::size_t k) const { return functor.value(k); }
    Matrix apply(const HomElem& f) const { return functor.apply(f); }

    friend bool operator==(const GrFunctor& a, const GrFunctor& b) { return a.functor == b.functor; }
};

/// F(id) = id and F(g∘f) = F(f)∘F(g) on all basis pairs.
ValidationReport validate_gr_functor(const GrFunctor& f);

/// F_M: objects (i,x) ↦ M_i(x); the basis morphism with part f at a ↦
/// M(a)_x ∘ M_j(f). Throws InvalidModule.
GrFunctor module_to_functor(const GrothendieckPtr& gr, const RModule& m);

/// M_F: M_i(g) = F(g ∘ η_i x at 1_i), M(a)_x = F(1_{R(a)x} at a).
/// Throws InvalidFunctor.
RModule functor_to_module(const GrFunctor& f);

/// Strict comparisons of M_{F_M} with M, and of F_{M_F} with F.
ValidationReport roundtrip_module(const GrothendieckPtr& gr, const RModule& m);
ValidationReport roundtrip_functor(const GrFunctor& f);

/// Hom_{Gr(R)}(-, t) acting by precomposition.
GrFunctor representable_functor(const GrothendieckPtr& gr, std::size_t t);

/// G = ⊕_t Hom_{Gr(R)}(-, t). The summand for t is tagged with t's label.
GrFunctor projective_generator(const GrothendieckPtr& gr);

/// Builds τ_f = f ∘ - : G → G for every basis element f of R[C], checks
/// naturality, composes every pair, reads composites back through their
/// values at identities, and compares unit and products with R[C].
ValidationReport endomorphism_algebra_check(const GrothendieckPtr& gr);

/// A right module over R[C]: `action[u]` is the matrix of m ↦ m·u, so
/// action[g∗f] = action[f] · action[g].
struct AlgebraModule {
    FreeModule module;
    std::vector<Matrix> action;
};

/// ⊕_k F(k), with a basis element f : s → d mapping the d-block into the
/// s-block by F(f). Throws InvalidFunctor.
AlgebraModule module_over_algebra(const PseudoskewAlgebra& alg, const GrFunctor& f);

/// Unit acts as the identity, and m·(u∗v) = (m·u)·v on all basis pairs.
ValidationReport check_algebra_module(const StructAlgebra& a, const AlgebraModule& m);

}  // namespace catgr
