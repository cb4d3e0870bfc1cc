#pragma once

#include "repat/facts.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repat {

//===----------------------------------------------------------------------===//
// Patterns
//===----------------------------------------------------------------------===//

/// A pattern term: constant atom, metavariable, or list of either.
struct PTerm {
    enum class Kind { Const, Var, List };
    Kind kind = Kind::Const;
    std::string text;         // Const value or Var name
    std::vector<PTerm> items; // List (Const/Var elements only)

    static PTerm constant(std::string s) { return {Kind::Const, std::move(s), {}}; }
    static PTerm var(std::string s) { return {Kind::Var, std::move(s), {}}; }
    static PTerm list(std::vector<PTerm> xs) { return {Kind::List, "", std::move(xs)}; }

    bool operator==(const PTerm& o) const {
        return kind == o.kind && text == o.text && items == o.items;
    }
    std::string str() const;
};

struct FactPattern {
    Predicate pred = Predicate::ExistsClass;
    std::vector<PTerm> args;

    bool ground() const;
    Fact toFact() const; // requires ground()
    std::string str() const;
    bool operator==(const FactPattern& o) const { return pred == o.pred && args == o.args; }
};

using Binding = std::map<std::string, Term>;

/// Most-general matching of a ground fact against a pattern; nullopt on
/// mismatch. Repeated metavariables must bind consistently.
std::optional<Binding> matchPattern(const FactPattern& pat, const Fact& fact);

/// Substitutes bound metavariables; unbound ones stay as variables.
FactPattern substitute(const FactPattern& pat, const Binding& b);

//===----------------------------------------------------------------------===//
// Formulas
//===----------------------------------------------------------------------===//

enum class FKind { True, False, Atom, Not, And, Or };

struct Formula {
    FKind kind = FKind::True;
    FactPattern atom;              // Atom
    std::vector<Formula> children; // Not (1), And, Or (>=1)

    static Formula top() { return Formula{FKind::True, {}, {}}; }
    static Formula bottom() { return Formula{FKind::False, {}, {}}; }
    static Formula mkAtom(FactPattern f) { return Formula{FKind::Atom, std::move(f), {}}; }
    static Formula mkNot(Formula f);
    static Formula mkAnd(std::vector<Formula> fs);
    static Formula mkOr(std::vector<Formula> fs);

    bool operator==(const Formula& o) const;
    std::string str() const;
};

/// Purely propositional simplification: absorption, flattening, duplicate
/// removal, double negation, complementary literals. Semantics-preserving.
Formula simplify(const Formula& f);

/// Semantic atom rewrites used by the composition pipeline (IsSubType(x,x),
/// IsSubType(x,java.lang.Object) are tautologies). Ground atoms only.
Formula normalizeAtoms(const Formula& f);

/// Signed ground literal.
struct Literal {
    bool positive = true;
    Fact fact;

    bool operator<(const Literal& o) const {
        if (fact < o.fact) return true;
        if (o.fact < fact) return false;
        return positive < o.positive;
    }
    bool operator==(const Literal& o) const {
        return positive == o.positive && fact == o.fact;
    }
    std::string str() const { return (positive ? "" : "!") + fact.str(); }
};

/// Flat-conjunction view. Negated conjunctions are strengthened to the
/// conjunction of negated literals (sufficiency-preserving); negated
/// disjunctions expand exactly. Returns nullopt when a positive disjunction
/// remains (the formula has no flat sufficient literal form).
std::optional<std::set<Literal>> literalSet(const Formula& f);

/// Evaluation over a program: each ground atom via evaluate_fact.
struct HoldsResult {
    bool holds = true;
    std::optional<Literal> witness; // first failing literal
};
HoldsResult checkHolds(const FactContext& ctx, const Formula& f);

/// Truth-table equivalence treating distinct atoms as propositional variables
/// (atom count must stay small; used by the simplifier oracle).
bool truthTableEquivalent(const Formula& a, const Formula& b, int maxAtoms = 16);

//===----------------------------------------------------------------------===//
// Parsing
//===----------------------------------------------------------------------===//

/// Parses a formula over fact atoms:
///   ExistsClass(c) & !ExistsType(X) | (A(x) & B(y)); constants true/false.
/// Tokens found in `binding` are substituted; otherwise tokens that start
/// with an uppercase letter are metavariables when allowVars is set, and
/// constants otherwise. Lists are written [a;b], [] for empty.
Formula parseFormula(const std::string& text, const Binding* binding = nullptr,
                     bool allowVars = false);

/// Parses a single atom (same conventions).
FactPattern parseAtomPattern(const std::string& text, const Binding* binding = nullptr,
                             bool allowVars = false);

} // namespace repat
