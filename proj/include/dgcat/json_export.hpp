#pragma once

#include <json.hpp>

#include "dgcat/dsl.hpp"

namespace dgcat {

// Field-for-field JSON mirror of a Workspace. Paths are listed outermost
// letter first, the same order as `g*f` in the text format; coefficients are
// strings "p" or "p/q".
nlohmann::ordered_json term_to_json(const Term& term);
nlohmann::ordered_json category_to_json(std::string_view name, const DgCategory& cat);
nlohmann::ordered_json workspace_to_json(const Workspace& ws);

}  // namespace dgcat
