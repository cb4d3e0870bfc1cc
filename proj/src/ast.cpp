#include "repat/ast.hpp"

#include <algorithm>

namespace repat {

const char* errorKindName(ErrorKind k) {
    switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NameResolutionError: return "NameResolutionError";
    case ErrorKind::WellFormednessError: return "WellFormednessError";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::DynamicDispatchFailure: return "DynamicDispatchFailure";
    case ErrorKind::EvalError: return "EvalError";
    case ErrorKind::UnknownPredicate: return "UnknownPredicate";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::UnknownSpelling: return "UnknownSpelling";
    case ErrorKind::NonLinearPatternUnsupported: return "NonLinearPatternUnsupported";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoSuchInvocation: return "NoSuchInvocation";
    case ErrorKind::AmbiguousReuseValue: return "AmbiguousReuseValue";
    case ErrorKind::ResolutionChanged: return "ResolutionChanged";
    case ErrorKind::ScriptParseError: return "ScriptParseError";
    case ErrorKind::ConfigInvalid: return "ConfigInvalid";
    case ErrorKind::NotSupported: return "NotSupported";
    case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

std::string TypeRef::str() const {
    if (args.empty()) return name;
    std::string s = name + "<";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ", ";
        s += args[i].str();
    }
    return s + ">";
}

const TypeRef& TypeRef::voidType() {
    static const TypeRef t("void");
    return t;
}

const TypeRef& TypeRef::objectType() {
    static const TypeRef t("java.lang.Object");
    return t;
}

bool isPrimitiveTypeName(const std::string& name) {
    return name == "int" || name == "boolean" || name == "void" || name == "char" ||
           name == "long" || name == "double" || name == "float";
}

bool isBuiltinTypeName(const std::string& name) {
    return isPrimitiveTypeName(name) || name == "Void" || name == "Boolean" ||
           name == "Integer" || name == "String" || name == "Object" ||
           name == "java.lang.Object" || isListTypeName(name);
}

bool isListTypeName(const std::string& name) {
    return name == "List" || name == "ArrayList";
}

//===----------------------------------------------------------------------===//
// Node constructors / cloning
//===----------------------------------------------------------------------===//

ExprPtr Expr::makeThis(SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::This;
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeName(std::string n, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Name;
    e->name = std::move(n);
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeField(ExprPtr base, std::string f, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::FieldAccess;
    e->receiver = std::move(base);
    e->name = std::move(f);
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeInvoke(ExprPtr recv, std::string m, std::vector<ExprPtr> args,
                         SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Invoke;
    e->receiver = std::move(recv);
    e->name = std::move(m);
    e->args = std::move(args);
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeNew(TypeRef t, std::vector<ExprPtr> args, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::New;
    e->newType = std::move(t);
    e->args = std::move(args);
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeString(std::string s, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::StringLit;
    e->strValue = std::move(s);
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeInt(long v, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::IntLit;
    e->intValue = v;
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeBool(bool v, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::BoolLit;
    e->boolValue = v;
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeNull(SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::NullLit;
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makeConcat(ExprPtr l, ExprPtr r, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Concat;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    e->loc = std::move(loc);
    return e;
}

ExprPtr Expr::makePrint(ExprPtr arg, bool newline, SourceLoc loc) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Print;
    e->args.push_back(std::move(arg));
    e->newline = newline;
    e->loc = std::move(loc);
    return e;
}

ExprPtr cloneExpr(const ExprPtr& e) {
    if (!e) return nullptr;
    auto c = std::make_shared<Expr>(*e);
    c->receiver = cloneExpr(e->receiver);
    c->lhs = cloneExpr(e->lhs);
    c->rhs = cloneExpr(e->rhs);
    c->args.clear();
    for (auto& a : e->args) c->args.push_back(cloneExpr(a));
    return c;
}

StmtPtr Stmt::makeLocal(TypeRef t, std::string n, ExprPtr init, SourceLoc loc) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::LocalDecl;
    s->declType = std::move(t);
    s->name = std::move(n);
    s->expr = std::move(init);
    s->loc = std::move(loc);
    return s;
}

StmtPtr Stmt::makeAssign(ExprPtr lv, ExprPtr rhs, SourceLoc loc) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::Assign;
    s->target = std::move(lv);
    s->expr = std::move(rhs);
    s->loc = std::move(loc);
    return s;
}

StmtPtr Stmt::makeExpr(ExprPtr e, SourceLoc loc) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::ExprStmt;
    s->expr = std::move(e);
    s->loc = std::move(loc);
    return s;
}

StmtPtr Stmt::makeForEach(TypeRef t, std::string n, ExprPtr list, Block body, SourceLoc loc) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::ForEach;
    s->declType = std::move(t);
    s->name = std::move(n);
    s->expr = std::move(list);
    s->body = std::move(body);
    s->loc = std::move(loc);
    return s;
}

StmtPtr Stmt::makeReturn(ExprPtr e, SourceLoc loc) {
    auto s = std::make_shared<Stmt>();
    s->kind = StmtKind::Return;
    s->expr = std::move(e);
    s->loc = std::move(loc);
    return s;
}

StmtPtr cloneStmt(const StmtPtr& s) {
    if (!s) return nullptr;
    auto c = std::make_shared<Stmt>(*s);
    c->expr = cloneExpr(s->expr);
    c->target = cloneExpr(s->target);
    c->body = cloneBlock(s->body);
    return c;
}

Block cloneBlock(const Block& b) {
    Block c;
    c.stmts.reserve(b.stmts.size());
    for (auto& s : b.stmts) c.stmts.push_back(cloneStmt(s));
    return c;
}

//===----------------------------------------------------------------------===//
// Declarations / Program
//===----------------------------------------------------------------------===//

const MethodDecl* ClassDecl::findMethod(const std::string& m,
                                        const std::vector<TypeRef>& sig) const {
    for (auto& md : methods)
        if (md.name == m && md.paramTypes() == sig) return &md;
    return nullptr;
}

bool ClassDecl::declaresMethod(const std::string& m) const {
    return std::any_of(methods.begin(), methods.end(),
                       [&](const MethodDecl& md) { return md.name == m; });
}

bool Program::hasExtern(const std::string& n) const {
    return std::find(externTypes.begin(), externTypes.end(), n) != externTypes.end();
}

bool Program::typeExists(const std::string& n) const {
    return hasClass(n) || hasInterface(n) || hasExtern(n) || isBuiltinTypeName(n);
}

const ClassDecl* Program::findClass(const std::string& n) const {
    auto it = classes.find(n);
    return it == classes.end() ? nullptr : &it->second;
}

ClassDecl* Program::findClass(const std::string& n) {
    auto it = classes.find(n);
    return it == classes.end() ? nullptr : &it->second;
}

const InterfaceDecl* Program::findInterface(const std::string& n) const {
    auto it = interfaces.find(n);
    return it == interfaces.end() ? nullptr : &it->second;
}

std::string Program::superOf(const std::string& cls) const {
    const ClassDecl* c = findClass(cls);
    if (!c || !c->superclass) return TypeRef::objectType().name;
    return c->superclass->name;
}

std::vector<std::string> Program::subclassesOf(const std::string& cls) const {
    std::vector<std::string> out;
    for (auto& [name, c] : classes) {
        if (name == cls) continue;
        std::string cur = name;
        while (true) {
            const ClassDecl* cd = findClass(cur);
            if (!cd || !cd->superclass) break;
            cur = cd->superclass->name;
            if (cur == cls) {
                out.push_back(name);
                break;
            }
        }
    }
    return out;
}

bool Program::isSubtype(const std::string& x, const std::string& y) const {
    if (x == y) return true;
    if (y == TypeRef::objectType().name || y == "Object") return true;
    // walk extends + implements upward from x
    std::vector<std::string> work{x};
    std::vector<std::string> seen;
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        if (std::find(seen.begin(), seen.end(), cur) != seen.end()) continue;
        seen.push_back(cur);
        if (cur == y) return true;
        if (const ClassDecl* c = findClass(cur)) {
            work.push_back(c->superclass ? c->superclass->name : TypeRef::objectType().name);
            for (auto& i : c->interfaces) work.push_back(i.name);
        } else if (const InterfaceDecl* i = findInterface(cur)) {
            for (auto& e : i->extends) work.push_back(e.name);
        }
    }
    return false;
}

void Program::addClass(ClassDecl c) {
    std::string n = c.name;
    classes.emplace(n, std::move(c));
    if (std::find(declOrder.begin(), declOrder.end(), n) == declOrder.end())
        declOrder.push_back(n);
}

void Program::removeClass(const std::string& n) {
    classes.erase(n);
    declOrder.erase(std::remove(declOrder.begin(), declOrder.end(), n), declOrder.end());
}

const char* visibilityKeyword(Visibility v) {
    switch (v) {
    case Visibility::Public: return "public";
    case Visibility::Protected: return "protected";
    case Visibility::Private: return "private";
    case Visibility::Package: return "";
    }
    return "";
}

} // namespace repat
