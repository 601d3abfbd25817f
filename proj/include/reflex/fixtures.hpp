#pragma once

#include <string>
#include <vector>

#include "reflex/problem.hpp"

namespace reflex {

// Shipped desk-scale problems: pattern spaces whose bilattices enumerate
// exactly, the scalars space (sampling only), and the non-reflexive
// span{I, E12} with its hand-verified complete lattices.
const std::vector<std::string>& fixture_names();
ProblemFile fixture(const std::string& name);

}  // namespace reflex
