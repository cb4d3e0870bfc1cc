#pragma once

#include "repat/ast.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace repat {

/// A statically resolved method reference: the most-derived declaration on the
/// receiver's static chain, with class/method type parameters substituted.
struct ResolvedMethod {
    std::string cls; // declaring class or interface
    const MethodDecl* decl = nullptr;
    TypeRef returnType;              // after substitution
    std::vector<TypeRef> paramTypes; // after substitution
};

enum class NewUsage { Argument, Initializer, Receiver, Standalone };

struct CallSite {
    std::string inClass;
    std::string inMethod;       // "<init>" for constructor bodies
    const Expr* call = nullptr; // Invoke node
    ResolvedMethod target;
    std::vector<TypeRef> argTypes;
    TypeRef receiverType;
    bool receiverIsThis = false; // explicit or implicit this
    bool receiverIsNew = false;
    std::string receiverName;        // identifier receiver, "" otherwise ("this" for this)
    std::vector<std::string> argIdents; // bare-identifier arguments, "" for non-identifiers
};

struct NewSite {
    std::string inClass;
    std::string inMethod;
    std::string type;
    NewUsage usage = NewUsage::Standalone;
};

struct FieldUse {
    std::string inClass;
    std::string inMethod;
    std::string field;
};

/// Whole-program static analysis: well-formedness, static resolution of every
/// expression, and the fact-extraction feeds (call sites, allocation sites,
/// referenced identifiers). Construction throws on an ill-formed Program.
class Analysis {
public:
    explicit Analysis(const Program& p);

    const Program& program() const { return *prog_; }
    const std::vector<CallSite>& callSites() const { return calls_; }
    const std::vector<NewSite>& newSites() const { return news_; }
    const std::vector<FieldUse>& fieldUses() const { return fieldUses_; }

    /// Identifiers read or written inside the body of cls::method.
    const std::set<std::string>& boundIdents(const std::string& cls,
                                             const std::string& method) const;

    /// Static resolution used by the analyses and the interpreter.
    ResolvedMethod resolveInvoke(const TypeRef& receiverType, const std::string& name,
                                 const std::vector<TypeRef>& argTypes,
                                 const std::string& fromClass) const;

    /// true when `from` is assignable to `to` (subtyping + int/Integer boxing + null).
    bool assignable(const TypeRef& from, const TypeRef& to) const;

    /// Views `t` as an instantiation of base class/interface `baseName`
    /// (e.g. PerimeterVisitor as Visitor -> Visitor<Integer>); empty name if not.
    TypeRef viewAs(const TypeRef& t, const std::string& baseName) const;

private:
    friend class BodyWalker;
    const Program* prog_;
    std::vector<CallSite> calls_;
    std::vector<NewSite> news_;
    std::vector<FieldUse> fieldUses_;
    std::map<std::pair<std::string, std::string>, std::set<std::string>> bound_;

    void checkDeclarations() const;
    void walkBodies();
};

/// Looks up a field along the superclass chain; returns owning class or "".
std::pair<std::string, const FieldDecl*> findFieldInHierarchy(const Program& p,
                                                              const std::string& cls,
                                                              const std::string& field);

/// All method declarations named `m` visible from `cls` (own + inherited,
/// most-derived first, deduplicated by erased signature).
std::vector<std::pair<std::string, const MethodDecl*>>
visibleMethods(const Program& p, const std::string& cls, const std::string& m);

/// Erased parameter types: method/class type parameters replaced by their
/// raw bound (java.lang.Object) and generic arguments dropped.
std::vector<TypeRef> erasedParamTypes(const Program& p, const ClassDecl* owner,
                                      const MethodDecl& m);

} // namespace repat
