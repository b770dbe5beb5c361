#pragma once

/**
 * @file groth.hpp
 * @brief The linear Grothendieck construction Gr(R) and the pseudoskew
 *        category algebra R[C].
 *
 * Gr(R) has objects (i, x) with x ∈ R(i), and
 *
 *   Gr(R)((i,x), (j,y)) = ⊕_{a ∈ C(i,j)} R(j)(R(a)x, y).
 *
 * A morphism is a family of parts f_a. Composition sums, over all
 * factorizations c = ba, the composite
 *
 *   R(ba)x --θ_{b,a}x--> R(b)R(a)x --R(b)f_a--> R(b)y --g_b--> z
 *
 * and the identity at (i, x) has the single part η_i x at index 1_i.
 *
 * R[C] is spanned by all hom bases of Gr(R) at once, with g ∗ f = g ∘ f when
 * the objects chain and 0 otherwise. Its basis is ordered by source object,
 * then target object, then the hom basis of Gr(R).
 */

#include "catgr/lincat.hpp"
#include "catgr/report.hpp"
#include "catgr/rep.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catgr {

struct GrObject {
    std::size_t base = 0;       ///< i ∈ Ob C
    std::size_t fiber_obj = 0;  ///< x ∈ Ob R(i)

    friend bool operator==(const GrObject&, const GrObject&) = default;
    friend auto operator<=>(const GrObject&, const GrObject&) = default;
};

/// (f_a)_a with zero parts omitted; parts[a] ∈ R(j)(R(a)x, y).
struct GrMorphism {
    GrObject src;
    GrObject dst;
    std::map<std::size_t, HomElem> parts;

    friend bool operator==(const GrMorphism&, const GrMorphism&) = default;
};

/// g ∘ f in Gr(R); throws ObjectMismatch unless f.dst == g.src.
GrMorphism gr_compose(const Representation& r, const GrMorphism& g, const GrMorphism& f);
/// Single part η_i x at index 1_i.
GrMorphism gr_identity(const Representation& r, const GrObject& obj);

class GrothendieckCategory {
public:
    /// Position of a Gr hom basis vector inside the direct sum.
    struct BasisRef {
        std::size_t morphism;  ///< a ∈ C(i,j)
        std::size_t local;     ///< basis index in R(j)(R(a)x, y)
    };

    /// Builds Gr(R) without checking coherence.
    explicit GrothendieckCategory(RepresentationPtr r);

    const Representation& rep() const noexcept { return *rep_; }
    const RepresentationPtr& rep_ptr() const noexcept { return rep_; }
    const LinearCategory& category() const noexcept { return *category_; }
    const LinearCategoryPtr& category_ptr() const noexcept { return category_; }

    std::size_t object_count() const noexcept { return objects_.size(); }
    const GrObject& object(std::size_t k) const { return objects_.at(k); }
    const std::vector<GrObject>& objects() const noexcept { return objects_; }
    /// Throws UnknownObject.
    std::size_t index_of(const GrObject& obj) const;
    /// "i:x"
    std::string object_label(std::size_t k) const;

    BasisRef basis_ref(std::size_t s, std::size_t d, std::size_t global) const;
    /// Throws InvalidArgument when a ∉ C(i,j).
    std::size_t global_index(std::size_t s, std::size_t d, std::size_t morphism, std::size_t local) const;

    GrMorphism to_morphism(const HomElem& e) const;
    HomElem to_element(const GrMorphism& f) const;
    GrMorphism basis_morphism(std::size_t s, std::size_t d, std::size_t global) const {
        return to_morphism(category_->basis(s, d, global));
    }

private:
    struct HomLayout {
        std::vector<std::size_t> morphisms;  // C(i,j), in order
        DirectSum sum;
    };
    const HomLayout& layout(std::size_t s, std::size_t d) const { return layouts_.at(s * objects_.size() + d); }

    RepresentationPtr rep_;
    std::vector<GrObject> objects_;
    std::map<GrObject, std::size_t> index_;
    std::vector<HomLayout> layouts_;
    LinearCategoryPtr category_;
};

using GrothendieckPtr = std::shared_ptr<const GrothendieckCategory>;

/// Throws InvalidRepresentation when `require_valid` and R fails validation.
GrothendieckPtr grothendieck_construction(RepresentationPtr r, bool require_valid = true);

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

/// Finite-rank algebra given by structure constants on a basis.
class StructAlgebra {
public:
    StructAlgebra() = default;
    /// `mult[u * dim + v]` is the sparse product u ∗ v.
    StructAlgebra(GroundRing ring, std::vector<std::string> basis, std::vector<SparseVec> mult, Vec unit);

    const GroundRing& ring() const noexcept { return ring_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<std::string>& basis() const noexcept { return basis_; }
    const std::string& label(std::size_t k) const { return basis_.at(k); }
    const Vec& unit() const noexcept { return unit_; }

    const SparseVec& product(std::size_t u, std::size_t v) const { return mult_.at(u * basis_.size() + v); }
    Vec product_dense(std::size_t u, std::size_t v) const;
    Vec multiply(const Vec& x, const Vec& y) const;

    friend bool operator==(const StructAlgebra&, const StructAlgebra&) = default;

private:
    GroundRing ring_;
    std::vector<std::string> basis_;
    std::vector<SparseVec> mult_;
    Vec unit_;
};

/// Two-sided unit on every basis element, and associativity on every basis
/// triple when `check_associativity`.
ValidationReport check_algebra_laws(const StructAlgebra& a, bool check_associativity = true);

struct PseudoskewAlgebra {
    StructAlgebra algebra;
    GrothendieckPtr gr;
    std::vector<std::size_t> block_offsets;  ///< (s * N + d) → first basis index of Gr(s, d)

    std::size_t index(std::size_t s, std::size_t d, std::size_t global) const {
        return block_offsets.at(s * gr->object_count() + d) + global;
    }
};

/// R[C] built from Gr(R)'s structure constants. Basis labels are
/// "a|i:x|j:y|f" for the fiber basis vector f ∈ R(j)(R(a)x, y).
PseudoskewAlgebra pseudoskew_algebra(const GrothendieckPtr& gr);
/// Validates R first; throws InvalidRepresentation.
PseudoskewAlgebra pseudoskew_algebra(const RepresentationPtr& r);

/// For strict R with one-object fibers, recomputes every product as the skew
/// category algebra rule r_b ∗ r'_a = (r · R(b)(r'))_{ba} and reports each
/// basis pair where it differs from `alg`. Throws NotStrict, NotRingValued.
ValidationReport skew_specialization_oracle(const PseudoskewAlgebra& alg);

struct AlgebraSummary {
    std::size_t dimension = 0;
    Vec unit;
    bool associativity_checked = false;
    ValidationReport laws;
    bool commutative = true;
    /// Rank of the center, computed over the fraction field.
    std::size_t center_dimension = 0;
};

AlgebraSummary algebra_report(const StructAlgebra& a, bool exhaustive = true);

}  // namespace catgr
