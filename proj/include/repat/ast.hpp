#pragma once

#include "repat/diagnostics.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace repat {

//===----------------------------------------------------------------------===//
// Types
//===----------------------------------------------------------------------===//

/// A possibly-generic type reference: `Graphic`, `List<Graphic>`, `Visitor<T>`.
/// Base names may be dotted (java.lang.Object, Point2D.Double).
struct TypeRef {
    std::string name;
    std::vector<TypeRef> args;

    TypeRef() = default;
    explicit TypeRef(std::string n, std::vector<TypeRef> a = {})
        : name(std::move(n)), args(std::move(a)) {}

    bool operator==(const TypeRef& o) const { return name == o.name && args == o.args; }
    bool operator!=(const TypeRef& o) const { return !(*this == o); }
    bool operator<(const TypeRef& o) const {
        if (name != o.name) return name < o.name;
        return args < o.args;
    }

    std::string str() const;

    static const TypeRef& voidType();
    static const TypeRef& objectType();
};

bool isPrimitiveTypeName(const std::string& name);
bool isBuiltinTypeName(const std::string& name);
bool isListTypeName(const std::string& name);

//===----------------------------------------------------------------------===//
// Expressions
//===----------------------------------------------------------------------===//

enum class ExprKind {
    This,
    Name,        // unqualified identifier (local, param, or field of this)
    FieldAccess, // expr.field
    Invoke,      // [receiver.]method(args); receiver null means implicit this
    New,         // new T(args)
    StringLit,
    IntLit,
    BoolLit,
    NullLit,
    Concat, // lhs + rhs (string concatenation or integer addition)
    Print,  // System.out.print / println
};

struct Expr;
using ExprPtr = std::shared_ptr<Expr>;

struct Expr {
    ExprKind kind;
    SourceLoc loc;

    // Name / FieldAccess / Invoke
    std::string name;
    ExprPtr receiver; // FieldAccess base, Invoke receiver (may be null)
    std::vector<ExprPtr> args;

    TypeRef newType; // New
    std::string strValue;
    long intValue = 0;
    bool boolValue = false;
    ExprPtr lhs, rhs; // Concat
    bool newline = false; // Print

    static ExprPtr makeThis(SourceLoc loc = {});
    static ExprPtr makeName(std::string n, SourceLoc loc = {});
    static ExprPtr makeField(ExprPtr base, std::string f, SourceLoc loc = {});
    static ExprPtr makeInvoke(ExprPtr recv, std::string m, std::vector<ExprPtr> args,
                              SourceLoc loc = {});
    static ExprPtr makeNew(TypeRef t, std::vector<ExprPtr> args, SourceLoc loc = {});
    static ExprPtr makeString(std::string s, SourceLoc loc = {});
    static ExprPtr makeInt(long v, SourceLoc loc = {});
    static ExprPtr makeBool(bool v, SourceLoc loc = {});
    static ExprPtr makeNull(SourceLoc loc = {});
    static ExprPtr makeConcat(ExprPtr l, ExprPtr r, SourceLoc loc = {});
    static ExprPtr makePrint(ExprPtr arg, bool newline, SourceLoc loc = {});
};

ExprPtr cloneExpr(const ExprPtr& e);

//===----------------------------------------------------------------------===//
// Statements
//===----------------------------------------------------------------------===//

enum class StmtKind {
    LocalDecl, // T x [= init];
    Assign,    // lvalue = expr;
    ExprStmt,
    ForEach, // for (T x : listExpr) body
    Return,  // return [expr];
};

struct Stmt;
using StmtPtr = std::shared_ptr<Stmt>;

struct Block {
    std::vector<StmtPtr> stmts;
};

struct Stmt {
    StmtKind kind;
    SourceLoc loc;

    TypeRef declType;  // LocalDecl / ForEach element type
    std::string name;  // LocalDecl / ForEach variable
    ExprPtr expr;      // init / rhs / ExprStmt / Return value / ForEach list
    ExprPtr target;    // Assign lvalue (Name or FieldAccess)
    Block body;        // ForEach

    static StmtPtr makeLocal(TypeRef t, std::string n, ExprPtr init, SourceLoc loc = {});
    static StmtPtr makeAssign(ExprPtr lv, ExprPtr rhs, SourceLoc loc = {});
    static StmtPtr makeExpr(ExprPtr e, SourceLoc loc = {});
    static StmtPtr makeForEach(TypeRef t, std::string n, ExprPtr list, Block body,
                               SourceLoc loc = {});
    static StmtPtr makeReturn(ExprPtr e, SourceLoc loc = {});
};

StmtPtr cloneStmt(const StmtPtr& s);
Block cloneBlock(const Block& b);

//===----------------------------------------------------------------------===//
// Declarations
//===----------------------------------------------------------------------===//

enum class Visibility { Package, Public, Protected, Private };

const char* visibilityKeyword(Visibility v); // "" for package

struct Param {
    TypeRef type;
    std::string name;
    bool operator==(const Param& o) const { return type == o.type && name == o.name; }
};

struct FieldDecl {
    Visibility visibility = Visibility::Package;
    TypeRef type;
    std::string name;
    ExprPtr init; // optional
};

struct MethodDecl {
    Visibility visibility = Visibility::Package;
    bool isAbstract = false;
    bool isStatic = false;                // only the entry main may be static
    std::vector<std::string> typeParams; // method-level generics: <T> T accept(Visitor<T> v)
    TypeRef returnType;
    std::string name;
    std::vector<Param> params;
    std::optional<Block> body; // absent iff abstract (or interface signature)

    std::vector<TypeRef> paramTypes() const {
        std::vector<TypeRef> ts;
        ts.reserve(params.size());
        for (auto& p : params) ts.push_back(p.type);
        return ts;
    }
};

struct ClassDecl {
    std::string name;
    bool isAbstract = false;
    std::vector<std::string> typeParams;
    std::optional<TypeRef> superclass; // absent means java.lang.Object
    std::vector<TypeRef> interfaces;
    std::vector<FieldDecl> fields;
    std::vector<MethodDecl> methods;
    std::vector<MethodDecl> constructors; // name == class name, no return type
    SourceLoc loc;

    const MethodDecl* findMethod(const std::string& m,
                                 const std::vector<TypeRef>& sig) const;
    bool declaresMethod(const std::string& m) const;
};

struct InterfaceDecl {
    std::string name;
    std::vector<TypeRef> extends; // super-interfaces (unused by the corpus, kept for shape)
    std::vector<MethodDecl> methods; // all implicitly abstract
    SourceLoc loc;
};

/// Immutable snapshot of a MiniJ codebase. Operations take a Program by value
/// (cheap: declaration maps are copied, bodies shared until mutated by a
/// transformation, which always deep-clones what it edits).
struct Program {
    std::map<std::string, ClassDecl> classes;        // ordered by name
    std::map<std::string, InterfaceDecl> interfaces; // ordered by name
    std::vector<std::string> externTypes;            // opaque external types
    std::vector<std::string> declOrder;              // source declaration order
    std::optional<std::pair<std::string, std::string>> entry; // (class, method)

    bool hasClass(const std::string& n) const { return classes.count(n) != 0; }
    bool hasInterface(const std::string& n) const { return interfaces.count(n) != 0; }
    bool hasExtern(const std::string& n) const;
    /// Any declared class/interface/extern, builtin, or java.lang.Object.
    bool typeExists(const std::string& n) const;

    const ClassDecl* findClass(const std::string& n) const;
    ClassDecl* findClass(const std::string& n);
    const InterfaceDecl* findInterface(const std::string& n) const;

    /// Direct superclass name (java.lang.Object when unspecified/absent).
    std::string superOf(const std::string& cls) const;
    /// Transitive strict subclasses of cls, sorted by name.
    std::vector<std::string> subclassesOf(const std::string& cls) const;
    /// x <: y over extends+implements, reflexive, everything <: java.lang.Object.
    bool isSubtype(const std::string& x, const std::string& y) const;

    void addClass(ClassDecl c);
    void removeClass(const std::string& n);
};

/// Member-order and visibility normalization used by structural comparison.
struct NormalizationPolicy {
    bool sortMembers = true;
    bool ignoreFieldVisibility = false;
    bool ignoreMethodVisibility = false;
    bool ignoreParamNames = false;
};

} // namespace repat
