#pragma once

#include "repat/catalog.hpp"

#include <string>
#include <vector>

namespace repat {

/// Parses the line-oriented operation-script format
/// (`OpName(arg1, [a;b], ...)`, one operation per line or separated by `;`).
/// Operation spellings are matched case-insensitively, with the historical
/// aliases (PullupConcreteDelegator, SafeDeleteDelegatorWithOverridden,
/// UseSuperType, InlineMethod, ...). Signature list items written as
/// "Type name" keep only the type.
std::vector<CatalogOp> parseScript(const std::string& text);

/// Serializes ops back into the script format (one per line).
std::string renderScript(const std::vector<CatalogOp>& ops);

} // namespace repat
