#pragma once

#include "catgr/report.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace catgr {

struct Morphism {
    std::string id;
    std::size_t dom;
    std::size_t cod;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// A finite category given by a total composition table.
///
/// Objects and morphisms are referred to by their position in declaration
/// order. `compose(b, a)` is b ∘ a (first a, then b) and is only meaningful
/// when cod(a) = dom(b). Construction checks only that indices are in range;
/// the category axioms are checked by validate_category().
class FiniteCategory {
public:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    FiniteCategory() = default;
    /// `table[b * m + a]` holds the index of b ∘ a, or npos when undefined.
    FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                   std::vector<std::size_t> identities, std::vector<std::size_t> table);

    std::size_t object_count() const noexcept { return objects_.size(); }
    std::size_t morphism_count() const noexcept { return morphisms_.size(); }

    const std::string& object(std::size_t i) const { return objects_.at(i); }
    const std::vector<std::string>& objects() const noexcept { return objects_; }
    const Morphism& morphism(std::size_t a) const { return morphisms_.at(a); }
    const std::vector<Morphism>& morphisms() const noexcept { return morphisms_; }
    const std::string& id(std::size_t a) const { return morphisms_.at(a).id; }
    std::size_t dom(std::size_t a) const { return morphisms_.at(a).dom; }
    std::size_t cod(std::size_t a) const { return morphisms_.at(a).cod; }

    std::size_t identity(std::size_t i) const { return identities_.at(i); }
    bool is_identity(std::size_t a) const { return identities_.at(dom(a)) == a; }

    bool composable(std::size_t b, std::size_t a) const { return cod(a) == dom(b); }
    /// b ∘ a, or npos.
    std::size_t compose(std::size_t b, std::size_t a) const { return table_.at(b * morphisms_.size() + a); }
    const std::vector<std::size_t>& table() const noexcept { return table_; }

    /// Morphisms i → j in declaration order.
    std::span<const std::size_t> hom(std::size_t i, std::size_t j) const;

    /// Throw UnknownObject / UnknownMorphism.
    std::size_t find_object(std::string_view name) const;
    std::size_t find_morphism(std::string_view id) const;

    friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) {
        return a.objects_ == b.objects_ && a.morphisms_ == b.morphisms_ && a.identities_ == b.identities_ &&
               a.table_ == b.table_;
    }

private:
    std::vector<std::string> objects_;
    std::vector<Morphism> morphisms_;
    std::vector<std::size_t> identities_;
    std::vector<std::size_t> table_;
    std::vector<std::vector<std::size_t>> homs_;
    std::unordered_map<std::string, std::size_t> object_index_;
    std::unordered_map<std::string, std::size_t> morphism_index_;
};

/// Lists every missing composite, mistyped composite, broken identity law and
/// non-associative triple. Empty report means C is a category.
ValidationReport validate_category(const FiniteCategory& c);

/// hom_set by object name, returning morphism ids; throws UnknownObject.
std::vector<std::string> hom_set(const FiniteCategory& c, std::string_view i, std::string_view j);

struct QuiverArrow {
    std::string id;
    std::string source;
    std::string target;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
};

/// Free category on an acyclic quiver.
///
/// Morphisms are ordered: identities "1_v" in vertex order, then paths by
/// length, ties broken lexicographically by the arrow sequence read from the
/// first arrow traversed. A path a1 then a2 ... then an is named "an∘...∘a1".
/// Throws CyclicQuiver, UnknownObject for dangling arrow endpoints.
FiniteCategory path_category(const Quiver& q);

/// The linear quiver 1 → 2 → ... → n with arrows named by `arrow_names`
/// (defaults to "a1", "a2", ...).
Quiver linear_quiver(std::size_t n, std::vector<std::string> arrow_names = {});

/// Z/n as a one-object category with elements "e", "g", "g^2", ...
FiniteCategory cyclic_group(std::size_t n, std::vector<std::string> names = {});

}  // namespace catgr
