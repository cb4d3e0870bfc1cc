#pragma once

#include "repat/ast.hpp"

#include <string>

namespace repat {

/// Canonical form under the policy: members sorted by name+signature,
/// `this.x` and bare `x` unified, optional visibility erasure.
Program normalizeProgram(const Program& p, const NormalizationPolicy& policy);

bool structurallyEqual(const Program& a, const Program& b, const NormalizationPolicy& policy);

/// Unified diff-style description of the first few differences (for reports).
std::string structuralDiff(const Program& a, const Program& b,
                           const NormalizationPolicy& policy);

/// Body equality up to consistent renaming of parameters and locals.
bool alphaEquivalentBodies(const MethodDecl& a, const MethodDecl& b);

} // namespace repat
