#pragma once

#include <string>

#include "argrank/af.hpp"

namespace argrank {

// Graphviz rendering of a framework. Node identifiers are content hashes
// of the labels, so the output diffs cleanly across runs and KB edits.
// Self-attacks come out as self-loops.
std::string to_dot(const AbstractAF& af);

}  // namespace argrank
