#pragma once

#include <string>

#include "h8mp/actions.hpp"

namespace h8mp {

// Symbolic rendering of a scalar over the basis {1, sqrt(-1), sqrt(2)},
// e.g. "(1-sqrt(-1))/2" or "sqrt(2)/2".
std::string pretty_scalar(const FieldElement& f);

// Renders an element, abbreviating M z^3 patterns ("z3", "gz3", ...).
std::string pretty_elt(const HopfData& H, const Elt& e);

// Fixed-width text table of an action, one row per acting basis element.
std::string render_action_table(const HopfData& H, const ActionTable& a,
                                const std::string& title);

}  // namespace h8mp
