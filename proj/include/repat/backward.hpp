#pragma once

#include "repat/formula.hpp"

#include <set>

namespace repat {

/// One backward rewrite rule: post-state facts matching `lhs` hold iff the
/// pre-state formula `rhs` (over the same metavariables) holds. `conditioned`
/// rows apply only when every metavariable binds to an entity distinct from
/// the operation's own arguments.
struct RewriteRule {
    FactPattern lhs;
    Formula rhs;
    bool conditioned = false;
};

struct BackwardDescription {
    std::vector<RewriteRule> rules;           // tried in order, first match wins
    std::set<std::string> opArgumentValues;   // for conditioned rows

    /// Rewrites one ground atom to its pre-state formula; identity if no rule
    /// matches or the matched rhs still contains unbound metavariables.
    Formula rewriteAtom(const FactPattern& atom) const;
};

/// Replaces every atom of φ by the rhs of the first matching rule; unmatched
/// atoms pass through unchanged; the result is re-simplified.
Formula backwardSubstitute(const Formula& phi, const BackwardDescription& bd);

} // namespace repat
