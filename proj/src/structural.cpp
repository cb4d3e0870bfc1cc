#include "repat/structural.hpp"

#include "repat/printer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace repat {
namespace {

/// Rewrites `this.f` -> `f` and `this.m(...)` -> `m(...)` wherever no local
/// binding shadows the name, so that moved-and-inlined code compares equal to
/// the original source.
class Canonicalizer {
public:
    ExprPtr expr(const ExprPtr& e) {
        if (!e) return nullptr;
        ExprPtr c = cloneExpr(e);
        rewrite(c);
        return c;
    }

    void block(Block& b) {
        scopes_.emplace_back();
        for (auto& s : b.stmts) stmt(s);
        scopes_.pop_back();
    }

    void pushParams(const std::vector<Param>& ps) {
        scopes_.emplace_back();
        for (auto& p : ps) scopes_.back().insert(p.name);
    }

private:
    void stmt(StmtPtr& s) {
        switch (s->kind) {
        case StmtKind::LocalDecl:
            rewrite(s->expr);
            scopes_.back().insert(s->name);
            break;
        case StmtKind::Assign:
            rewrite(s->target);
            rewrite(s->expr);
            break;
        case StmtKind::ExprStmt:
        case StmtKind::Return:
            rewrite(s->expr);
            break;
        case StmtKind::ForEach:
            rewrite(s->expr);
            scopes_.emplace_back();
            scopes_.back().insert(s->name);
            for (auto& st : s->body.stmts) stmt(st);
            scopes_.pop_back();
            break;
        }
    }

    bool shadowed(const std::string& n) const {
        for (auto& sc : scopes_)
            if (sc.count(n)) return true;
        return false;
    }

    void rewrite(ExprPtr& e) {
        if (!e) return;
        rewrite(e->receiver);
        rewrite(e->lhs);
        rewrite(e->rhs);
        for (auto& a : e->args) rewrite(a);
        if (e->kind == ExprKind::FieldAccess && e->receiver &&
            e->receiver->kind == ExprKind::This && !shadowed(e->name)) {
            ExprPtr n = Expr::makeName(e->name, e->loc);
            e = n;
        } else if (e->kind == ExprKind::Invoke && e->receiver &&
                   e->receiver->kind == ExprKind::This) {
            e->receiver = nullptr;
        }
    }

    std::vector<std::set<std::string>> scopes_;
};

void canonicalizeMethod(MethodDecl& m) {
    if (!m.body) return;
    Canonicalizer c;
    c.pushParams(m.params);
    c.block(*m.body);
}

std::string sigKey(const MethodDecl& m) {
    std::string k = m.name + "(";
    for (auto& p : m.params) k += p.type.str() + ",";
    return k + ")";
}

} // namespace

Program normalizeProgram(const Program& p, const NormalizationPolicy& policy) {
    Program out = p;
    out.declOrder.clear();
    for (auto& [n, c] : out.classes) out.declOrder.push_back(n);
    for (auto& [n, i] : out.interfaces) out.declOrder.push_back(n);
    for (auto& e : out.externTypes) out.declOrder.push_back(e);
    std::sort(out.declOrder.begin(), out.declOrder.end());

    for (auto& [name, c] : out.classes) {
        for (auto& f : c.fields) {
            if (policy.ignoreFieldVisibility) f.visibility = Visibility::Package;
            if (f.init) {
                Canonicalizer cz;
                f.init = cz.expr(f.init);
            }
        }
        for (auto& m : c.methods) {
            if (policy.ignoreMethodVisibility) m.visibility = Visibility::Package;
            if (policy.ignoreParamNames) {
                // positional parameter names; bodies keep their own names, so
                // this is only safe with sorted comparison of signatures.
                for (size_t i = 0; i < m.params.size(); ++i)
                    m.params[i].name = "p" + std::to_string(i);
            }
            canonicalizeMethod(m);
        }
        for (auto& ct : c.constructors) canonicalizeMethod(ct);
        if (policy.sortMembers) {
            std::sort(c.fields.begin(), c.fields.end(),
                      [](const FieldDecl& a, const FieldDecl& b) { return a.name < b.name; });
            std::sort(c.methods.begin(), c.methods.end(),
                      [](const MethodDecl& a, const MethodDecl& b) {
                          return sigKey(a) < sigKey(b);
                      });
            std::sort(c.constructors.begin(), c.constructors.end(),
                      [](const MethodDecl& a, const MethodDecl& b) {
                          return a.params.size() < b.params.size();
                      });
            std::sort(c.interfaces.begin(), c.interfaces.end());
        }
    }
    for (auto& [name, i] : out.interfaces) {
        if (policy.sortMembers)
            std::sort(i.methods.begin(), i.methods.end(),
                      [](const MethodDecl& a, const MethodDecl& b) {
                          return sigKey(a) < sigKey(b);
                      });
    }
    std::sort(out.externTypes.begin(), out.externTypes.end());
    return out;
}

bool structurallyEqual(const Program& a, const Program& b, const NormalizationPolicy& policy) {
    return prettyPrint(normalizeProgram(a, policy)) == prettyPrint(normalizeProgram(b, policy));
}

std::string structuralDiff(const Program& a, const Program& b,
                           const NormalizationPolicy& policy) {
    std::string sa = prettyPrint(normalizeProgram(a, policy));
    std::string sb = prettyPrint(normalizeProgram(b, policy));
    if (sa == sb) return "";
    std::istringstream ia(sa), ib(sb);
    std::string la, lb, out;
    int shown = 0, lineNo = 0;
    while (shown < 12) {
        bool ga = static_cast<bool>(std::getline(ia, la));
        bool gb = static_cast<bool>(std::getline(ib, lb));
        ++lineNo;
        if (!ga && !gb) break;
        if (!ga) la.clear();
        if (!gb) lb.clear();
        if (la != lb) {
            out += "line " + std::to_string(lineNo) + ":\n  - " + la + "\n  + " + lb + "\n";
            ++shown;
        }
    }
    return out;
}

namespace {

bool alphaExpr(const ExprPtr& a, const ExprPtr& b,
               std::map<std::string, std::string>& renames);

bool alphaExprs(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b,
                std::map<std::string, std::string>& renames) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!alphaExpr(a[i], b[i], renames)) return false;
    return true;
}

bool alphaName(const std::string& a, const std::string& b,
               const std::map<std::string, std::string>& renames) {
    auto it = renames.find(a);
    if (it != renames.end()) return it->second == b;
    return a == b;
}

bool alphaExpr(const ExprPtr& a, const ExprPtr& b,
               std::map<std::string, std::string>& renames) {
    if (!a || !b) return !a && !b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case ExprKind::This: return true;
    case ExprKind::Name: return alphaName(a->name, b->name, renames);
    case ExprKind::FieldAccess:
        return a->name == b->name && alphaExpr(a->receiver, b->receiver, renames);
    case ExprKind::Invoke:
        return a->name == b->name && alphaExpr(a->receiver, b->receiver, renames) &&
               alphaExprs(a->args, b->args, renames);
    case ExprKind::New:
        return a->newType == b->newType && alphaExprs(a->args, b->args, renames);
    case ExprKind::StringLit: return a->strValue == b->strValue;
    case ExprKind::IntLit: return a->intValue == b->intValue;
    case ExprKind::BoolLit: return a->boolValue == b->boolValue;
    case ExprKind::NullLit: return true;
    case ExprKind::Concat:
        return alphaExpr(a->lhs, b->lhs, renames) && alphaExpr(a->rhs, b->rhs, renames);
    case ExprKind::Print:
        return a->newline == b->newline && alphaExprs(a->args, b->args, renames);
    }
    return false;
}

bool alphaBlock(const Block& a, const Block& b, std::map<std::string, std::string> renames) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (size_t i = 0; i < a.stmts.size(); ++i) {
        const Stmt& sa = *a.stmts[i];
        const Stmt& sb = *b.stmts[i];
        if (sa.kind != sb.kind) return false;
        switch (sa.kind) {
        case StmtKind::LocalDecl:
            if (sa.declType != sb.declType) return false;
            if (!alphaExpr(sa.expr, sb.expr, renames)) return false;
            renames[sa.name] = sb.name;
            break;
        case StmtKind::Assign:
            if (!alphaExpr(sa.target, sb.target, renames) ||
                !alphaExpr(sa.expr, sb.expr, renames))
                return false;
            break;
        case StmtKind::ExprStmt:
        case StmtKind::Return:
            if (!alphaExpr(sa.expr, sb.expr, renames)) return false;
            break;
        case StmtKind::ForEach: {
            if (sa.declType != sb.declType) return false;
            if (!alphaExpr(sa.expr, sb.expr, renames)) return false;
            auto inner = renames;
            inner[sa.name] = sb.name;
            if (!alphaBlock(sa.body, sb.body, inner)) return false;
            break;
        }
        }
    }
    return true;
}

} // namespace

bool alphaEquivalentBodies(const MethodDecl& a, const MethodDecl& b) {
    if (static_cast<bool>(a.body) != static_cast<bool>(b.body)) return false;
    if (!a.body) return true;
    if (a.params.size() != b.params.size()) return false;
    std::map<std::string, std::string> renames;
    for (size_t i = 0; i < a.params.size(); ++i) renames[a.params[i].name] = b.params[i].name;
    return alphaBlock(*a.body, *b.body, renames);
}

} // namespace repat
