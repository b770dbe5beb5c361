#pragma once

// Declarative instance files: a ground ring, a finite category, a
// representation over it, and optionally a module and a functor on Gr(R).
// See docs/instance-format.md for the schema.

#include "catgr/fincat.hpp"
#include "catgr/groth.hpp"
#include "catgr/rep.hpp"
#include "catgr/rmod.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace catgr::cli {

struct Instance {
    std::string name;  ///< file basename, used in reports
    nlohmann::json doc;
    GroundRing ring;
    FiniteCategory category;
};

/// Throws Error(ParseError) with a line/column or JSON-pointer diagnostic.
Instance parse_instance(std::string_view text, std::string name, const std::optional<std::string>& ring = {});
Instance load_instance(const std::filesystem::path& file, const std::optional<std::string>& ring = {});

/// Requires a valid base category.
RepresentationPtr build_representation(const Instance& inst);

bool has_module(const Instance& inst);
bool has_functor(const Instance& inst);

/// Unset actions are completed from identities and composites.
RModule build_module(const Instance& inst, const RepresentationPtr& rep);
/// `module` is only consulted for the "from_module" kind.
GrFunctor build_functor(const Instance& inst, const GrothendieckPtr& gr, const RModule* module);

nlohmann::ordered_json module_to_json(const RModule& m);
nlohmann::ordered_json functor_to_json(const GrFunctor& f);

/// Basis labels of Gr(R) homs, qualified by source and target: "a|i:x|j:y|f".
std::string qualified_label(const GrothendieckCategory& gr, std::size_t s, std::size_t d, std::size_t k);

nlohmann::ordered_json matrix_to_json(const GroundRing& ring, const Matrix& m);

}  // namespace catgr::cli
