#pragma once

#include "repat/resolve.hpp"

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace repat {

/// One argument of a ground fact: an entity name or an ordered name list.
struct Term {
    std::variant<std::string, std::vector<std::string>> v;

    Term() : v(std::string()) {}
    Term(std::string s) : v(std::move(s)) {}
    Term(const char* s) : v(std::string(s)) {}
    Term(std::vector<std::string> l) : v(std::move(l)) {}

    bool isList() const { return std::holds_alternative<std::vector<std::string>>(v); }
    const std::string& atom() const { return std::get<std::string>(v); }
    const std::vector<std::string>& list() const {
        return std::get<std::vector<std::string>>(v);
    }
    bool operator==(const Term& o) const { return v == o.v; }
    bool operator!=(const Term& o) const { return !(*this == o); }
    bool operator<(const Term& o) const { return v < o.v; }

    std::string str() const;
};

enum class Predicate {
    ExistsClass,
    ExistsType,
    IsAbstractClass,
    IsInterface,
    ImplementsDirectly,
    ExtendsDirectly,
    IsSubType,
    AllSubclasses,
    ExistsMethodDefinition,
    ExistsMethodDefinitionWithParams,
    ExistsAbstractMethod,
    IsInheritedMethod,
    IsInheritedMethodWithParams,
    IsOverridingMethod,
    IsOverriding,
    IsOverridden,
    IsOverloaded,
    HasReturnType,
    MethodHasParameterType,
    HasParameterType,
    ExistsParameterWithName,
    ExistsParameterWithType,
    ExistsField,
    IsInheritedField,
    ExistsFieldInMethodScope,
    ExistsLocalVariable,
    BoundVariableInMethodBody,
    ExistsMethodInvocation,
    IsRecursiveMethod,
    IsIndirectlyRecursive,
    IsDelegator,
    IsInverter,
    IsDuplicate,
    HasSameBody,
    IsUsedMethod,
    IsUsedMethodIn,
    MethodIsUsedWithType,
    IsUsedAttributeInMethodBody,
    IsUsedConstructorAsMethodParameter,
    IsUsedConstructorAsInitializer,
    IsUsedConstructorAsObjectReceiver,
    IsVisible,
    IsVisibleMethod,
    IsPublic,
    IsProtected,
    IsPrivate,
    IsPrimitiveType,
    IsGenericsSubtype,
    ExtendsFromParametricClass,
    AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC,
    AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded,
};

const char* predicateName(Predicate p);
int predicateArity(Predicate p);
/// Which argument positions carry lists (0-based).
const std::vector<int>& predicateListPositions(Predicate p);

/// Canonical predicate for a paper spelling (ExistsMethod, existsType, ...).
/// Throws Error(UnknownSpelling) when the name is unknown.
Predicate canonicalPredicate(const std::string& spelling);

struct Fact {
    Predicate pred;
    std::vector<Term> args;

    bool operator==(const Fact& o) const { return pred == o.pred && args == o.args; }
    bool operator<(const Fact& o) const {
        if (pred != o.pred) return pred < o.pred;
        return args < o.args;
    }
    std::string str() const;
};

/// Parses `Pred(a, b, [x;y])` in the paper's notation, canonicalizing the
/// predicate spelling. Signature list items of the form "Type name" keep only
/// the type; name-position items keep only the trailing identifier.
Fact parseFact(const std::string& text);

/// Per-program fact evaluation context; builds the static analysis once.
class FactContext {
public:
    explicit FactContext(const Program& p);

    const Program& program() const { return *prog_; }
    const Analysis& analysis() const { return an_; }

    bool evaluate(const Fact& f) const;

    /// Every true ground fact over entities of the program (optionally
    /// restricted to a predicate set).
    std::set<Fact> extractAll(const std::set<Predicate>* filter = nullptr) const;

private:
    const Program* prog_;
    Analysis an_;

    // override-closed call graph node = "cls::method"
    std::map<std::string, std::set<std::string>> callGraph_;

    void buildCallGraph();
    std::set<std::pair<std::string, std::string>> siteTargets(const CallSite& s) const;

    bool evalImpl(const Fact& f) const;
    friend class FactEval;
};

bool evaluateFact(const Program& p, const Fact& f);
std::set<Fact> extractAllFacts(const Program& p,
                               const std::set<Predicate>* filter = nullptr);

/// Signature of a method as fact-notation type names.
std::vector<std::string> sigNames(const MethodDecl& m);

} // namespace repat
