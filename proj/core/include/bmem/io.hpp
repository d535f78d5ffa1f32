#pragma once

#include <istream>
#include <string>

#include "bmem/errors.hpp"
#include "bmem/model.hpp"
#include "bmem/proximity.hpp"

namespace bmem {

// Memories file: one memory per line, whitespace-separated tokens
// "1" / "+1" / "-1". Lines starting with '#' and blank lines are skipped.
// Throws ParseError with a line number on malformed input. The returned set
// may be empty (training rejects that later).
MemorySet parse_memories(std::istream& in);
MemorySet parse_memories_file(const std::string& path);

// Proximity file: comma-separated numeric rows, '#' comment lines allowed.
// Ragged rows are ParseErrors; structural problems (non-square, negative
// entry, nonzero diagonal) surface as ValidationErrors.
ProximityMatrix parse_proximity(std::istream& in);
ProximityMatrix parse_proximity_file(const std::string& path);

}  // namespace bmem
