#pragma once

#include "repat/ast.hpp"

#include <string>
#include <vector>

namespace repat {

/// Parses one `.mj` source file (possibly several declarations) into a
/// program fragment. Comments are discarded. Throws Error(SyntaxError).
Program parse(const std::string& sourceText, const std::string& filename = "<input>");

/// Merges fragments; duplicate type names are a well-formedness error.
Program mergePrograms(const std::vector<Program>& fragments);

/// Parses every `*.mj` file under dir (sorted by filename) and merges them.
Program parseDirectory(const std::string& dir);

} // namespace repat
