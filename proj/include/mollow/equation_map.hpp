#ifndef MOLLOW_EQUATION_MAP_HPP
#define MOLLOW_EQUATION_MAP_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mollow {

/// One row of the reference map: a derivation tag from the source analysis
/// and the code symbol (or scope note) realizing it.
struct EquationMapping {
  std::string_view tag;
  std::string_view target;
};

/// Registry binding every implemented derivation tag to module.operation.
const std::vector<EquationMapping>& equation_map();

/// Markdown table rendering of the registry (the `docs` build target).
std::string render_equation_map();

}  // namespace mollow

#endif
