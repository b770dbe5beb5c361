#pragma once

/**
 * @file lincat.hpp
 * @brief Finite preadditive categories with free hom-modules, additive
 *        functors, and natural transformations between them.
 *
 * A LinearCategory stores one FreeModule per ordered object pair and
 * composition as structure constants on basis pairs; composition of general
 * elements is the bilinear extension. Functors carry one matrix per hom
 * module. Equality everywhere is strict equality of the encoded data.
 */

#include "catgr/fincat.hpp"
#include "catgr/ground.hpp"
#include "catgr/report.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace catgr {

/// An element of hom(src, dst), as coordinates in that module's basis.
struct HomElem {
    std::size_t src = 0;
    std::size_t dst = 0;
    Vec coeffs;

    friend bool operator==(const HomElem&, const HomElem&) = default;
};

class LinearCategory {
public:
    /// Structure constant for basis q of hom(y,z) after basis p of hom(x,y),
    /// as a vector in hom(x,z).
    using StructureFn = std::function<Vec(std::size_t x, std::size_t y, std::size_t z, std::size_t q, std::size_t p)>;

    LinearCategory() = default;
    /// `homs` is indexed x * n + y, `identities[x]` lives in hom(x,x).
    /// Throws DimensionMismatch / RingMismatch on inconsistent shapes.
    LinearCategory(GroundRing ring, std::vector<std::string> objects, std::vector<FreeModule> homs,
                   std::vector<Vec> identities, const StructureFn& structure);

    const GroundRing& ring() const noexcept { return ring_; }
    std::size_t object_count() const noexcept { return objects_.size(); }
    const std::string& object(std::size_t x) const { return objects_.at(x); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    std::size_t find_object(std::string_view name) const;

    const FreeModule& hom(std::size_t x, std::size_t y) const { return homs_.at(x * objects_.size() + y); }
    std::size_t hom_rank(std::size_t x, std::size_t y) const { return hom(x, y).rank(); }

    HomElem identity(std::size_t x) const { return {x, x, identities_.at(x)}; }
    HomElem zero(std::size_t x, std::size_t y) const { return {x, y, zero_vector(hom_rank(x, y))}; }
    HomElem basis(std::size_t x, std::size_t y, std::size_t p) const {
        return {x, y, unit_vector(hom_rank(x, y), p)};
    }

    const Vec& structure(std::size_t x, std::size_t y, std::size_t z, std::size_t q, std::size_t p) const;

    /// g ∘ f; throws ObjectMismatch unless f.dst == g.src.
    HomElem compose(const HomElem& g, const HomElem& f) const;
    HomElem add(const HomElem& a, const HomElem& b) const;
    HomElem scale(const Scalar& c, const HomElem& a) const;

    /// "2*e1 + e2"-style rendering using basis labels; "0" for zero.
    std::string format(const HomElem& e) const;

    friend bool operator==(const LinearCategory&, const LinearCategory&) = default;

private:
    GroundRing ring_;
    std::vector<std::string> objects_;
    std::vector<FreeModule> homs_;
    std::vector<Vec> identities_;
    std::vector<std::vector<Vec>> structure_;  // (x*n + y)*n + z -> q * rank(x,y) + p
};

using LinearCategoryPtr = std::shared_ptr<const LinearCategory>;

/// Pointer identity or structural equality.
bool same_category(const LinearCategoryPtr& a, const LinearCategoryPtr& b);

/// Unit and associativity laws on all basis elements and basis triples.
ValidationReport validate_linear_category(const LinearCategory& a, bool check_associativity = true);

/// Free K-linearization; hom(x,y) has the morphism ids of C(x,y) as basis.
/// Throws InvalidArgument if C's table is missing or mistyped.
LinearCategoryPtr linearize(const FiniteCategory& c, const GroundRing& ring);

/// One-object category "*" whose endomorphism ring has the given basis.
/// `products(q, p)` is basis q times basis p (q after p).
LinearCategoryPtr one_object_category(const GroundRing& ring, std::vector<std::string> basis, Vec unit,
                                      const std::function<Vec(std::size_t q, std::size_t p)>& products);

/// The ground ring itself as a one-object category: object "*", basis "1".
LinearCategoryPtr ground_category(const GroundRing& ring);

/// Additive functor between LinearCategories; hom matrices are indexed by
/// the domain pair x * n + y and map hom(x,y) to hom(F x, F y).
class AdditiveFunctor {
public:
    AdditiveFunctor() = default;
    AdditiveFunctor(LinearCategoryPtr dom, LinearCategoryPtr cod, std::vector<std::size_t> obj_map,
                    std::vector<Matrix> hom_map);

    const LinearCategoryPtr& dom() const noexcept { return dom_; }
    const LinearCategoryPtr& cod() const noexcept { return cod_; }
    std::size_t obj(std::size_t x) const { return obj_map_.at(x); }
    const std::vector<std::size_t>& obj_map() const noexcept { return obj_map_; }
    const Matrix& hom_matrix(std::size_t x, std::size_t y) const { return hom_map_.at(x * dom_->object_count() + y); }
    const std::vector<Matrix>& hom_map() const noexcept { return hom_map_; }

    HomElem operator()(const HomElem& e) const;

    friend bool operator==(const AdditiveFunctor& a, const AdditiveFunctor& b) {
        return same_category(a.dom_, b.dom_) && same_category(a.cod_, b.cod_) && a.obj_map_ == b.obj_map_ &&
               a.hom_map_ == b.hom_map_;
    }

private:
    LinearCategoryPtr dom_;
    LinearCategoryPtr cod_;
    std::vector<std::size_t> obj_map_;
    std::vector<Matrix> hom_map_;
};

AdditiveFunctor identity_functor(const LinearCategoryPtr& a);
/// G ∘ F; throws CategoryMismatch unless cod(F) = dom(G).
AdditiveFunctor compose_functors(const AdditiveFunctor& g, const AdditiveFunctor& f);
inline HomElem apply_functor(const AdditiveFunctor& f, const HomElem& e) { return f(e); }
bool is_identity_functor(const AdditiveFunctor& f);

/// Preservation of identities, and of composition on all basis pairs.
ValidationReport validate_functor(const AdditiveFunctor& f);

/// Natural transformation source ⇒ target; components[x] lies in
/// hom_cod(source(x), target(x)).
class NatTransform {
public:
    NatTransform() = default;
    /// Throws CategoryMismatch or ObjectMismatch on typing errors.
    NatTransform(AdditiveFunctor source, AdditiveFunctor target, std::vector<HomElem> components);

    const AdditiveFunctor& source() const noexcept { return source_; }
    const AdditiveFunctor& target() const noexcept { return target_; }
    const HomElem& at(std::size_t x) const { return components_.at(x); }
    const std::vector<HomElem>& components() const noexcept { return components_; }

    friend bool operator==(const NatTransform&, const NatTransform&) = default;

private:
    AdditiveFunctor source_;
    AdditiveFunctor target_;
    std::vector<HomElem> components_;
};

NatTransform identity_transform(const AdditiveFunctor& f);
/// Vertical composite beta ∘ alpha.
NatTransform vcompose(const NatTransform& beta, const NatTransform& alpha);
/// F·α: components F(α_x).
NatTransform whisker(const AdditiveFunctor& f, const NatTransform& alpha);
/// α·F: components α_{F z}.
NatTransform whisker(const NatTransform& alpha, const AdditiveFunctor& f);
bool is_identity_transform(const NatTransform& alpha);

struct NatIso {
    NatTransform forward;
    NatTransform backward;

    friend bool operator==(const NatIso&, const NatIso&) = default;
};

NatIso identity_iso(const AdditiveFunctor& f);
ValidationReport check_naturality(const NatTransform& alpha);
/// Naturality of both directions and both inverse equations, componentwise.
ValidationReport check_nat_iso(const NatIso& iso);

/// Two-sided inverse of f: x → y in A, if one exists.
std::optional<HomElem> invert_hom(const LinearCategory& a, const HomElem& f);
/// Builds the backward direction by inverting every component; throws NotInvertible.
NatIso nat_iso_from_forward(const NatTransform& forward);

}  // namespace catgr
