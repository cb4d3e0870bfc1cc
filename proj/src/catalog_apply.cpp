#include "repat/catalog.hpp"

#include "repat/printer.hpp"
#include "repat/resolve.hpp"
#include "repat/structural.hpp"

#include <algorithm>
#include <functional>

namespace repat {
namespace {

Program cloneProgram(const Program& p) {
    Program out = p;
    for (auto& [name, c] : out.classes) {
        for (auto& f : c.fields) f.init = cloneExpr(f.init);
        for (auto& m : c.methods)
            if (m.body) m.body = cloneBlock(*m.body);
        for (auto& ct : c.constructors)
            if (ct.body) ct.body = cloneBlock(*ct.body);
    }
    return out;
}

ClassDecl& classOf(Program& p, const std::string& name) {
    ClassDecl* c = p.findClass(name);
    if (!c) fail(ErrorKind::PreconditionFailed, "no class " + name);
    return *c;
}

TypeRef parseTypeText(const std::string& text) {
    // Name or Name<Arg,...> (one level is all the corpus needs)
    size_t lt = text.find('<');
    if (lt == std::string::npos) return TypeRef(text);
    TypeRef t(text.substr(0, lt));
    std::string inner = text.substr(lt + 1, text.rfind('>') - lt - 1);
    std::string cur;
    for (char ch : inner) {
        if (ch == ',') {
            if (!cur.empty()) t.args.push_back(parseTypeText(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) t.args.push_back(parseTypeText(cur));
    return t;
}

std::vector<TypeRef> sigTypes(const std::vector<std::string>& names) {
    std::vector<TypeRef> out;
    for (auto& n : names) out.push_back(parseTypeText(n));
    return out;
}

bool sigMatches(const MethodDecl& m, const std::vector<std::string>& sig) {
    return sigNames(m) == sig;
}

/// Applies fn to every statement list in the program (methods, ctors).
void forEachBody(Program& p, const std::function<void(const std::string&, const std::string&,
                                                      MethodDecl&)>& fn) {
    for (auto& [name, c] : p.classes) {
        for (auto& m : c.methods)
            if (m.body) fn(name, m.name, m);
        for (auto& ct : c.constructors)
            if (ct.body) fn(name, ct.name, ct);
    }
}

void rewriteExprsInBlock(Block& b, const std::function<void(ExprPtr&)>& fn);

void rewriteExpr(ExprPtr& e, const std::function<void(ExprPtr&)>& fn) {
    if (!e) return;
    rewriteExpr(e->receiver, fn);
    rewriteExpr(e->lhs, fn);
    rewriteExpr(e->rhs, fn);
    for (auto& a : e->args) rewriteExpr(a, fn);
    fn(e);
}

void rewriteStmt(StmtPtr& s, const std::function<void(ExprPtr&)>& fn) {
    rewriteExpr(s->expr, fn);
    rewriteExpr(s->target, fn);
    rewriteExprsInBlock(s->body, fn);
}

void rewriteExprsInBlock(Block& b, const std::function<void(ExprPtr&)>& fn) {
    for (auto& s : b.stmts) rewriteStmt(s, fn);
}

/// Renames invocation expressions matching a predicate on the resolved target.
/// Rebuilds the analysis first so the Expr pointers are the clone's own.
int renameCallSites(Program& p, const std::string& oldName, const std::string& newName,
                    const std::function<bool(const CallSite&)>& match) {
    Analysis an(p);
    std::set<const Expr*> toRename;
    for (auto& s : an.callSites())
        if (s.call->name == oldName && match(s)) toRename.insert(s.call);
    int count = 0;
    forEachBody(p, [&](const std::string&, const std::string&, MethodDecl& m) {
        rewriteExprsInBlock(*m.body, [&](ExprPtr& e) {
            if (e->kind == ExprKind::Invoke && toRename.count(e.get())) {
                e->name = newName;
                ++count;
            }
        });
    });
    return count;
}

/// this -> replacement, param names -> argument expressions. Names bound by
/// locals/foreach inside the body are left alone.
class BodyAdapter {
public:
    BodyAdapter(ExprPtr thisReplacement, std::map<std::string, ExprPtr> paramSubst)
        : thisRepl_(std::move(thisReplacement)), params_(std::move(paramSubst)) {}

    Block adapt(const Block& b) {
        Block c = cloneBlock(b);
        shadowed_.clear();
        adaptBlock(c);
        return c;
    }

    ExprPtr adaptExpr(const ExprPtr& e) {
        ExprPtr c = cloneExpr(e);
        shadowed_.clear();
        rewrite(c);
        return c;
    }

private:
    void adaptBlock(Block& b) {
        for (auto& s : b.stmts) {
            rewrite(s->expr);
            rewrite(s->target);
            if (s->kind == StmtKind::LocalDecl) shadowed_.insert(s->name);
            if (s->kind == StmtKind::ForEach) {
                shadowed_.insert(s->name);
                adaptBlock(s->body);
                shadowed_.erase(s->name);
            }
        }
    }

    void rewrite(ExprPtr& e) {
        if (!e) return;
        rewrite(e->receiver);
        rewrite(e->lhs);
        rewrite(e->rhs);
        for (auto& a : e->args) rewrite(a);
        if (e->kind == ExprKind::This && thisRepl_) {
            e = cloneExpr(thisRepl_);
        } else if (e->kind == ExprKind::Name && !shadowed_.count(e->name)) {
            auto it = params_.find(e->name);
            if (it != params_.end()) e = cloneExpr(it->second);
        } else if (e->kind == ExprKind::Invoke && !e->receiver && thisRepl_) {
            e->receiver = cloneExpr(thisRepl_);
        }
    }

    ExprPtr thisRepl_;
    std::map<std::string, ExprPtr> params_;
    std::set<std::string> shadowed_;
};

MethodDecl* findDecl(ClassDecl& c, const std::string& m, const std::vector<std::string>* sig) {
    for (auto& md : c.methods)
        if (md.name == m && (!sig || sigMatches(md, *sig))) return &md;
    return nullptr;
}

void removeDecl(ClassDecl& c, const std::string& m, const std::vector<std::string>* sig) {
    c.methods.erase(std::remove_if(c.methods.begin(), c.methods.end(),
                                   [&](const MethodDecl& md) {
                                       return md.name == m && (!sig || sigMatches(md, *sig));
                                   }),
                    c.methods.end());
}

bool returnsValue(const TypeRef& r) { return r.name != "void"; }

StmtPtr callStatement(const TypeRef& ret, ExprPtr call) {
    if (returnsValue(ret)) return Stmt::makeReturn(std::move(call));
    return Stmt::makeExpr(std::move(call));
}


//===----------------------------------------------------------------------===//
// Individual transformations
//===----------------------------------------------------------------------===//

void opCreateEmptyClass(Program& p, const CatalogOp& op, OpReport& rep) {
    ClassDecl c;
    c.name = op.args.scalar("c");
    p.addClass(std::move(c));
    rep.created.push_back("class " + op.args.scalar("c"));
}

void opCreateIndirection(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string n = op.args.scalar("n");
    auto sig = op.args.listArg("sig");
    for (auto& subName : op.args.group("subs")) {
        MethodDecl* md = findDecl(classOf(p, subName), m, &sig);
        if (!md) fail(ErrorKind::PreconditionFailed, subName + " does not define " + m);
        md->name = n;
    }
    ClassDecl& sc = classOf(p, s);
    MethodDecl* absM = findDecl(sc, m, &sig);
    if (!absM || !absM->isAbstract)
        fail(ErrorKind::PreconditionFailed, s + "::" + m + " is not abstract");
    MethodDecl delegator = *absM;
    delegator.isAbstract = false;
    std::vector<ExprPtr> args;
    for (auto& prm : delegator.params) args.push_back(Expr::makeName(prm.name));
    ExprPtr call = Expr::makeInvoke(nullptr, n, std::move(args));
    delegator.body = Block{};
    delegator.body->stmts.push_back(callStatement(delegator.returnType, std::move(call)));
    MethodDecl abstractN = *absM;
    abstractN.name = n;
    removeDecl(sc, m, &sig);
    sc.methods.push_back(std::move(delegator));
    sc.methods.push_back(std::move(abstractN));
    rep.created.push_back(s + "::" + n);
}

void opInlineMethodInvocations(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string host = op.args.scalar("c");
    std::string hostM = op.args.scalar("m");
    std::string calleeCls = op.args.scalar("a");
    std::string calleeM = op.args.scalar("n");
    Analysis an(p);
    std::set<const Expr*> sites;
    const MethodDecl* callee = nullptr;
    for (auto& site : an.callSites()) {
        if (site.inClass != host || site.inMethod != hostM) continue;
        if (site.target.cls != calleeCls || !site.target.decl ||
            site.target.decl->name != calleeM)
            continue;
        sites.insert(site.call);
        callee = site.target.decl;
    }
    if (sites.empty())
        fail(ErrorKind::NoSuchInvocation,
             "no invocation of " + calleeCls + "::" + calleeM + " in " + host + "::" + hostM);
    if (!callee->body || callee->body->stmts.size() != 1)
        fail(ErrorKind::NotSupported, "inlined method body is not a single statement");
    const Stmt& st = *callee->body->stmts[0];
    if (!(st.kind == StmtKind::ExprStmt || st.kind == StmtKind::Return) || !st.expr)
        fail(ErrorKind::NotSupported, "inlined method body shape");
    MethodDecl* hostDecl = findDecl(classOf(p, host), hostM, nullptr);
    rewriteExprsInBlock(*hostDecl->body, [&](ExprPtr& e) {
        if (e->kind != ExprKind::Invoke || !sites.count(e.get())) return;
        std::map<std::string, ExprPtr> paramSubst;
        for (size_t i = 0; i < callee->params.size(); ++i)
            paramSubst[callee->params[i].name] = e->args[i];
        ExprPtr receiver = e->receiver; // may be null (implicit this)
        BodyAdapter adapter(receiver, std::move(paramSubst));
        e = adapter.adaptExpr(st.expr);
    });
    rep.warnings.push_back("inlined " + std::to_string(sites.size()) + " invocation(s)");
}

void opAddParameterWithReuse(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string t = op.args.scalar("t");
    std::string pn = op.args.scalar("p");
    std::vector<std::string> empty;
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(s);

    Analysis an(p);
    std::set<const Expr*> sites;
    for (auto& site : an.callSites()) {
        if (!site.target.decl || site.target.decl->name != m) continue;
        if (!site.target.decl->params.empty()) continue;
        if (std::find(hierarchy.begin(), hierarchy.end(), site.target.cls) == hierarchy.end())
            continue;
        sites.insert(site.call);
    }
    // extend declarations
    for (auto& cls : hierarchy) {
        if (MethodDecl* md = findDecl(classOf(p, cls), m, &empty))
            md->params.push_back(Param{TypeRef(t), pn});
    }
    // rewrite call sites: pass the unique in-scope value of type t, else new t()
    forEachBody(p, [&](const std::string& cls, const std::string& inM, MethodDecl& body) {
        rewriteExprsInBlock(*body.body, [&](ExprPtr& e) {
            if (e->kind != ExprKind::Invoke || !sites.count(e.get())) return;
            std::vector<std::string> candidates;
            for (auto& prm : body.params)
                if (prm.type.name == t) candidates.push_back(prm.name);
            std::function<void(const Block&)> scanLocals = [&](const Block& b) {
                for (auto& st : b.stmts) {
                    if (st->kind == StmtKind::LocalDecl && st->declType.name == t)
                        candidates.push_back(st->name);
                    if (st->kind == StmtKind::ForEach) {
                        if (st->declType.name == t) candidates.push_back(st->name);
                        scanLocals(st->body);
                    }
                }
            };
            scanLocals(*body.body);
            if (candidates.size() > 1)
                fail(ErrorKind::AmbiguousReuseValue,
                     "several " + t + " values in scope at " + cls + "::" + inM);
            if (candidates.size() == 1) {
                e->args.push_back(Expr::makeName(candidates[0]));
            } else {
                e->args.push_back(Expr::makeNew(TypeRef(t), {}));
            }
        });
    });
    rep.warnings.push_back("extended " + m + " with (" + t + " " + pn + ")");
}

void opMoveMethodWithDelegate(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string src = op.args.scalar("src");
    std::string dst = op.args.scalar("dst");
    std::string m = op.args.scalar("m");
    std::string n = op.args.scalar("n");
    std::string o = op.args.scalar("o");
    std::string o2 = op.args.scalar("o2");
    auto osig = op.args.listArg("osig");
    ClassDecl& srcCls = classOf(p, src);
    MethodDecl* md = findDecl(srcCls, m, &osig);
    if (!md || !md->body) fail(ErrorKind::PreconditionFailed, src + "::" + m + " not movable");

    MethodDecl moved;
    moved.visibility = md->visibility;
    moved.returnType = md->returnType;
    moved.name = n;
    std::vector<ExprPtr> delegateArgs;
    for (auto& prm : md->params) {
        if (prm.name == o && prm.type.name == dst) continue;
        moved.params.push_back(prm);
        delegateArgs.push_back(Expr::makeName(prm.name));
    }
    moved.params.push_back(Param{TypeRef(src), o2});
    delegateArgs.push_back(Expr::makeThis());

    // adapt the body: this -> o2, o -> this, implicit receivers -> o2
    std::map<std::string, ExprPtr> subst;
    subst[o] = Expr::makeThis();
    BodyAdapter adapter(Expr::makeName(o2), std::move(subst));
    // bare field reads of src fields must go through o2 as well; BodyAdapter
    // already redirects implicit-this invocations, so handle Name-fields here
    Block adapted = adapter.adapt(*md->body);
    std::function<void(Block&, std::set<std::string>)> fixFields =
        [&](Block& b, std::set<std::string> shadow) {
            for (auto& st : b.stmts) {
                auto fix = [&](ExprPtr& e) {
                    if (!e) return;
                    if (e->kind == ExprKind::Name && !shadow.count(e->name)) {
                        auto [owner, fd] = findFieldInHierarchy(p, src, e->name);
                        if (fd) e = Expr::makeField(Expr::makeName(o2), e->name);
                    }
                };
                rewriteStmt(st, fix);
                if (st->kind == StmtKind::LocalDecl) shadow.insert(st->name);
                if (st->kind == StmtKind::ForEach) {
                    auto inner = shadow;
                    inner.insert(st->name);
                    fixFields(st->body, inner);
                }
            }
        };
    std::set<std::string> initialShadow;
    for (auto& prm : moved.params) initialShadow.insert(prm.name);
    fixFields(adapted, initialShadow);
    moved.body = std::move(adapted);
    classOf(p, dst).methods.push_back(std::move(moved));

    // src::m becomes the delegator o.n(others..., this)
    ExprPtr call = Expr::makeInvoke(Expr::makeName(o), n, std::move(delegateArgs));
    md->body = Block{};
    md->body->stmts.push_back(callStatement(md->returnType, std::move(call)));
    rep.created.push_back(dst + "::" + n);
}

void opExtractSuperClass(Program& p, const CatalogOp& op, OpReport& rep, bool withPullUp) {
    std::string s = op.args.scalar("s");
    auto subs = op.args.group("subs");
    ClassDecl sup;
    sup.name = s;
    sup.isAbstract = true;
    // interfaces implemented by every subclass move to the new superclass
    std::vector<TypeRef> common;
    if (!subs.empty()) {
        common = classOf(p, subs[0]).interfaces;
        for (auto& subName : subs) {
            auto& ifaces = classOf(p, subName).interfaces;
            common.erase(std::remove_if(common.begin(), common.end(),
                                        [&](const TypeRef& i) {
                                            return std::find(ifaces.begin(), ifaces.end(), i) ==
                                                   ifaces.end();
                                        }),
                         common.end());
        }
    }
    sup.interfaces = common;
    if (withPullUp) {
        for (auto& pm : op.args.group("pms")) {
            std::set<std::string> seen;
            for (auto& subName : subs) {
                for (auto& md : classOf(p, subName).methods) {
                    if (md.name != pm) continue;
                    std::string key = pm;
                    for (auto& x : sigNames(md)) key += "," + x;
                    if (!seen.insert(key).second) continue;
                    MethodDecl decl = md;
                    decl.isAbstract = true;
                    decl.body.reset();
                    sup.methods.push_back(std::move(decl));
                }
            }
        }
    }
    for (auto& subName : subs) {
        ClassDecl& sub = classOf(p, subName);
        sub.superclass = TypeRef(s);
        sub.interfaces.erase(std::remove_if(sub.interfaces.begin(), sub.interfaces.end(),
                                            [&](const TypeRef& i) {
                                                return std::find(common.begin(), common.end(),
                                                                 i) != common.end();
                                            }),
                             sub.interfaces.end());
    }
    p.addClass(std::move(sup));
    rep.created.push_back("class " + s);
}

void opPullUpWithGenerics(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string a = op.args.scalar("a");
    std::string m = op.args.scalar("m");
    std::string r = op.args.scalar("r");
    std::string tp = op.args.scalar("tp");
    ClassDecl& sup = classOf(p, s);
    if (sup.typeParams.empty()) sup.typeParams.push_back(tp);
    ClassDecl& sub = classOf(p, a);
    for (auto& md : sub.methods) {
        if (md.name != m) continue;
        // abstract declaration with the return type generalized to tp
        bool exists = false;
        for (auto& sm : sup.methods)
            if (sm.name == m && sm.params.size() == md.params.size() &&
                sigNames(sm) == sigNames(md))
                exists = true;
        if (exists) continue;
        MethodDecl decl = md;
        decl.isAbstract = true;
        decl.body.reset();
        decl.returnType = TypeRef(tp);
        sup.methods.push_back(std::move(decl));
    }
    sub.superclass = TypeRef(s, {TypeRef(r)});
    rep.warnings.push_back(a + " extends " + s + "<" + r + ">");
}

void opGeneraliseParameter(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string m = op.args.scalar("m");
    std::string pn = op.args.scalar("p");
    std::string t = op.args.scalar("t");
    TypeRef st = parseTypeText(op.args.scalar("st"));
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(op.args.scalar("s"));
    for (auto& cls : hierarchy) {
        for (auto& md : classOf(p, cls).methods) {
            if (md.name != m) continue;
            for (auto& prm : md.params)
                if (prm.name == pn && prm.type.name == t) prm.type = st;
        }
    }
    rep.renamed.push_back(m + " parameter " + pn + ": " + t + " -> " + st.str());
}

void opReplaceMethodcodeDuplicates(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string c = op.args.scalar("c");
    std::string keep = op.args.scalar("m");
    ClassDecl& cls = classOf(p, c);
    MethodDecl* keeper = findDecl(cls, keep, nullptr);
    if (!keeper) fail(ErrorKind::PreconditionFailed, "no " + c + "::" + keep);
    for (auto& copyName : op.args.group("copies")) {
        MethodDecl* copy = findDecl(cls, copyName, nullptr);
        if (!copy) fail(ErrorKind::PreconditionFailed, "no " + c + "::" + copyName);
        if (!alphaEquivalentBodies(*keeper, *copy))
            fail(ErrorKind::PreconditionFailed,
                 c + "::" + copyName + " body differs from " + keep);
        std::vector<ExprPtr> args;
        for (auto& prm : copy->params) args.push_back(Expr::makeName(prm.name));
        ExprPtr call = Expr::makeInvoke(nullptr, keep, std::move(args));
        copy->body = Block{};
        copy->body->stmts.push_back(callStatement(copy->returnType, std::move(call)));
        rep.renamed.push_back(c + "::" + copyName + " now delegates to " + keep);
    }
}

void opSafeDeleteDelegator(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string c = op.args.scalar("c");
    std::string m = op.args.scalar("m");
    removeDecl(classOf(p, c), m, nullptr);
    rep.deleted.push_back(c + "::" + m);
}

void opPullUpImplementation(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string c = op.args.scalar("c");
    std::string m = op.args.scalar("m");
    std::string s = op.args.scalar("s");
    ClassDecl& sub = classOf(p, c);
    MethodDecl* def = findDecl(sub, m, nullptr);
    if (!def || !def->body) fail(ErrorKind::PreconditionFailed, "no body " + c + "::" + m);
    ClassDecl& sup = classOf(p, s);
    for (auto& sm : sup.methods) {
        if (sm.name == m && sm.isAbstract && sigNames(sm) == sigNames(*def)) {
            sm.isAbstract = false;
            sm.body = cloneBlock(*def->body);
            sm.params = def->params;
            removeDecl(sub, m, nullptr);
            rep.renamed.push_back(m + " pulled up to " + s);
            return;
        }
    }
    fail(ErrorKind::PreconditionFailed, s + " has no abstract " + m);
}

void opPullUpAbstract(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string c = op.args.scalar("c");
    std::string m = op.args.scalar("m");
    std::string s = op.args.scalar("s");
    MethodDecl* def = findDecl(classOf(p, c), m, nullptr);
    if (!def) fail(ErrorKind::PreconditionFailed, "no " + c + "::" + m);
    MethodDecl decl = *def;
    decl.isAbstract = true;
    decl.body.reset();
    if (ClassDecl* sup = p.findClass(s)) {
        sup->methods.push_back(std::move(decl));
    } else if (p.findInterface(s)) {
        auto& iface = p.interfaces.at(s);
        decl.isAbstract = true;
        iface.methods.push_back(std::move(decl));
    } else {
        fail(ErrorKind::PreconditionFailed, "no supertype " + s);
    }
    rep.created.push_back(s + "::" + m + " (abstract)");
}

void opInlineAndDelete(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    ClassDecl& cls = classOf(p, s);
    MethodDecl* callee = findDecl(cls, m, nullptr);
    if (!callee || !callee->body) fail(ErrorKind::PreconditionFailed, "no body " + s + "::" + m);

    Analysis an(p);
    std::set<const Expr*> sites;
    for (auto& site : an.callSites())
        if (site.target.cls == s && site.target.decl && site.target.decl->name == m)
            sites.insert(site.call);

    bool singleExpr = callee->body->stmts.size() == 1 &&
                      (callee->body->stmts[0]->kind == StmtKind::ExprStmt ||
                       callee->body->stmts[0]->kind == StmtKind::Return) &&
                      callee->body->stmts[0]->expr;
    forEachBody(p, [&](const std::string&, const std::string&, MethodDecl& host) {
        if (&host == callee) return;
        // statement-position splice for multi-statement bodies
        std::function<void(Block&)> spliceBlock = [&](Block& b) {
            std::vector<StmtPtr> out;
            for (auto& st : b.stmts) {
                if (st->kind == StmtKind::ForEach) spliceBlock(st->body);
                bool replaced = false;
                if (st->kind == StmtKind::ExprStmt && st->expr->kind == ExprKind::Invoke &&
                    sites.count(st->expr.get()) && !singleExpr) {
                    std::map<std::string, ExprPtr> subst;
                    for (size_t i = 0; i < callee->params.size(); ++i)
                        subst[callee->params[i].name] = st->expr->args[i];
                    BodyAdapter adapter(st->expr->receiver, std::move(subst));
                    Block adapted = adapter.adapt(*callee->body);
                    for (auto& as : adapted.stmts) out.push_back(as);
                    replaced = true;
                }
                if (!replaced) out.push_back(st);
            }
            b.stmts = std::move(out);
        };
        spliceBlock(*host.body);
        if (singleExpr) {
            const Stmt& st = *callee->body->stmts[0];
            rewriteExprsInBlock(*host.body, [&](ExprPtr& e) {
                if (e->kind != ExprKind::Invoke || !sites.count(e.get())) return;
                std::map<std::string, ExprPtr> subst;
                for (size_t i = 0; i < callee->params.size(); ++i)
                    subst[callee->params[i].name] = e->args[i];
                BodyAdapter adapter(e->receiver, std::move(subst));
                e = adapter.adaptExpr(st.expr);
            });
        }
    });
    removeDecl(cls, m, nullptr);
    rep.deleted.push_back(s + "::" + m);
}

void opDuplicateMethod(Program& p, const CatalogOp& op, OpReport& rep, bool generic) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string n = op.args.scalar("n");
    auto sig = op.args.listArg("sig");
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(s);
    std::string ret;
    if (generic) {
        auto rets = op.args.group("rets");
        if (rets.empty()) fail(ErrorKind::ConfigInvalid, "generic duplicate needs return types");
        ret = rets[0];
    }
    for (auto& clsName : hierarchy) {
        ClassDecl& cls = classOf(p, clsName);
        std::vector<MethodDecl> copies;
        for (auto& md : cls.methods) {
            if (md.name != m) continue;
            if (!sig.empty() && !generic && !sigMatches(md, sig)) continue;
            MethodDecl copy = md;
            copy.name = n;
            if (md.body) copy.body = cloneBlock(*md.body);
            if (generic && !md.typeParams.empty()) {
                // fix the concrete return/parameter types for this duplicate
                std::string tv = md.typeParams[0];
                copy.typeParams.clear();
                if (copy.returnType.name == tv) copy.returnType = TypeRef(ret);
                for (auto& prm : copy.params)
                    for (auto& a : prm.type.args)
                        if (a.name == tv) a = TypeRef(ret);
            }
            copies.push_back(std::move(copy));
        }
        for (auto& c : copies) cls.methods.push_back(std::move(c));
    }
    rep.created.push_back(n);
}

void opSpecialiseParameter(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string m = op.args.scalar("m");
    std::string t = op.args.scalar("t");
    std::string nt = op.args.scalar("nt");
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(op.args.scalar("s"));
    for (auto& clsName : hierarchy) {
        for (auto& md : classOf(p, clsName).methods) {
            if (md.name != m) continue;
            for (auto& prm : md.params)
                if (prm.type.name == t) prm.type = TypeRef(nt);
        }
    }
    rep.renamed.push_back(m + " parameter: " + t + " -> " + nt);
}

void opRename(Program& p, const CatalogOp& op, OpReport& rep, bool delegatorOverload) {
    std::string root = op.args.scalars.count("c") ? op.args.scalar("c") : op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string n = op.args.scalar("n");
    std::vector<std::string> sig = op.args.listArg("sig");
    if (sig.empty() && op.args.scalars.count("t")) sig = {op.args.scalar("t")};
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(root);

    // remember sites resolving to the overload left in place (resolution check)
    Analysis before(p);
    struct OldSite {
        std::string inClass, inMethod;
        size_t indexInMethod;
        std::string targetCls;
    };
    std::vector<OldSite> oldOverloadSites;
    if (delegatorOverload) {
        std::map<std::pair<std::string, std::string>, size_t> counters;
        for (auto& site : before.callSites()) {
            auto key = std::make_pair(site.inClass, site.inMethod);
            size_t idx = counters[key]++;
            if (site.target.decl && site.target.decl->name == n)
                oldOverloadSites.push_back({site.inClass, site.inMethod, idx, site.target.cls});
        }
    }

    renameCallSites(p, m, n, [&](const CallSite& site) {
        if (!site.target.decl) return false;
        if (!sig.empty() && sigNames(*site.target.decl) != sig) return false;
        return std::find(hierarchy.begin(), hierarchy.end(), site.target.cls) !=
               hierarchy.end();
    });
    for (auto& clsName : hierarchy) {
        ClassDecl& cls = classOf(p, clsName);
        for (auto& md : cls.methods)
            if (md.name == m && (sig.empty() || sigMatches(md, sig))) md.name = n;
    }

    if (delegatorOverload) {
        // a site may now bind to the renamed overload; accept only when the
        // two targets have alpha-equivalent bodies (behavior preserved)
        Analysis after(p);
        std::map<std::pair<std::string, std::string>, size_t> counters;
        std::map<std::tuple<std::string, std::string, size_t>, const CallSite*> newSites;
        for (auto& site : after.callSites()) {
            auto key = std::make_pair(site.inClass, site.inMethod);
            size_t idx = counters[key]++;
            newSites[{site.inClass, site.inMethod, idx}] = &site;
        }
        for (auto& old : oldOverloadSites) {
            auto it = newSites.find({old.inClass, old.inMethod, old.indexInMethod});
            if (it == newSites.end()) continue;
            const CallSite& now = *it->second;
            if (!now.target.decl || now.target.decl->name != n) continue;
            if (sigNames(*now.target.decl) == sig) {
                // rebound to the new overload: compare bodies
                const ClassDecl* newOwner = p.findClass(now.target.cls);
                const MethodDecl* newDecl = now.target.decl;
                const MethodDecl* oldDecl = nullptr;
                if (const ClassDecl* oldOwner = p.findClass(old.targetCls))
                    for (auto& md : oldOwner->methods)
                        if (md.name == n && sigNames(md) != sig) oldDecl = &md;
                (void)newOwner;
                if (oldDecl && newDecl && oldDecl->body && newDecl->body &&
                    !alphaEquivalentBodies(*oldDecl, *newDecl))
                    fail(ErrorKind::ResolutionChanged,
                         "call in " + old.inClass + "::" + old.inMethod +
                             " rebinds to a different body of " + n);
            }
        }
    }
    rep.renamed.push_back(m + " -> " + n);
}

void opDeleteMethodInHierarchy(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::vector<std::string> sig = {op.args.scalar("t")};
    if (op.args.scalar("t").empty()) sig.clear();
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(s);
    for (auto& clsName : hierarchy) removeDecl(classOf(p, clsName), m, &sig);
    rep.deleted.push_back(m + "(" + op.args.scalar("t") + ")");
}

void opPushDown(Program& p, const CatalogOp& op, OpReport& rep, bool keepAbstract) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    auto sig = op.args.listArg("sig");
    ClassDecl& sup = classOf(p, s);
    MethodDecl* def = findDecl(sup, m, sig.empty() ? nullptr : &sig);
    if (!def) fail(ErrorKind::PreconditionFailed, "no " + s + "::" + m);
    for (auto& subName : op.args.group("subs")) {
        ClassDecl& sub = classOf(p, subName);
        auto defSig = sigNames(*def);
        if (findDecl(sub, m, &defSig)) continue; // already overridden
        if (!def->body) continue;                 // abstract: nothing to copy
        MethodDecl copy = *def;
        copy.body = cloneBlock(*def->body);
        sub.methods.push_back(std::move(copy));
    }
    if (keepAbstract) {
        def->isAbstract = true;
        def->body.reset();
    } else {
        auto defSig = sigNames(*def);
        removeDecl(sup, m, &defSig);
    }
    rep.renamed.push_back(m + " pushed down from " + s);
}

void opPushDownNotRedefined(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string c = op.args.scalar("c");
    for (auto& m : op.args.group("methods")) {
        // copy the visible definition from the nearest ancestor providing it
        std::string cur = p.superOf(c);
        const MethodDecl* def = nullptr;
        while (!cur.empty() && cur != TypeRef::objectType().name) {
            const ClassDecl* cd = p.findClass(cur);
            if (!cd) break;
            for (auto& md : cd->methods)
                if (md.name == m && md.body) def = &md;
            if (def) break;
            cur = p.superOf(cur);
        }
        if (!def) fail(ErrorKind::PreconditionFailed, "no inherited " + m + " above " + c);
        MethodDecl copy = *def;
        copy.body = cloneBlock(*def->body);
        classOf(p, c).methods.push_back(std::move(copy));
        rep.created.push_back(c + "::" + m);
    }
}

void opReplaceMethodDuplication(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string d = op.args.scalar("d");
    std::string tgt = op.args.scalar("tgt");
    ClassDecl& sup = classOf(p, s);
    MethodDecl* delegator = findDecl(sup, d, nullptr);
    if (!delegator || !delegator->body || delegator->body->stmts.size() != 1)
        fail(ErrorKind::PreconditionFailed, s + "::" + d + " is not a delegator");
    const Stmt& ds = *delegator->body->stmts[0];
    if (!ds.expr || ds.expr->kind != ExprKind::Invoke || ds.expr->name != tgt)
        fail(ErrorKind::PreconditionFailed, s + "::" + d + " does not delegate to " + tgt);
    size_t argCount = ds.expr->args.size();

    int replaced = 0;
    forEachBody(p, [&](const std::string&, const std::string&, MethodDecl& host) {
        if (host.name == d) return; // not inside the delegator's own definitions
        rewriteExprsInBlock(*host.body, [&](ExprPtr& e) {
            if (e->kind != ExprKind::Invoke || e->name != tgt) return;
            if (e->args.size() != argCount) return;
            e->name = d;
            ++replaced;
        });
    });
    rep.warnings.push_back("folded " + std::to_string(replaced) + " duplicate call(s)");
}

void opRemoveParameter(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string pn = op.args.scalar("p");
    auto sig = op.args.listArg("sig");
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(s);

    // position of the removed parameter
    int pos = -1;
    for (auto& cls : hierarchy) {
        if (MethodDecl* md = findDecl(classOf(p, cls), m, &sig)) {
            for (size_t i = 0; i < md->params.size(); ++i)
                if (md->params[i].name == pn) pos = static_cast<int>(i);
        }
    }
    if (pos < 0) fail(ErrorKind::PreconditionFailed, "no parameter " + pn + " on " + m);

    // the parameter may only be used as a pass-through argument of the same
    // method (those sites lose the argument together with the parameter)
    Analysis an(p);
    std::set<const Expr*> sites;
    for (auto& site : an.callSites())
        if (site.target.decl && site.target.decl->name == m &&
            sigNames(*site.target.decl) == sig)
            sites.insert(site.call);
    for (auto& cls : hierarchy) {
        MethodDecl* md = findDecl(classOf(p, cls), m, &sig);
        if (!md || !md->body) continue;
        bool bad = false;
        std::function<void(const ExprPtr&, bool)> scan = [&](const ExprPtr& e, bool argOfSelf) {
            if (!e) return;
            if (e->kind == ExprKind::Name && e->name == pn && !argOfSelf) bad = true;
            bool selfCall = e->kind == ExprKind::Invoke && sites.count(e.get()) != 0;
            scan(e->receiver, false);
            scan(e->lhs, false);
            scan(e->rhs, false);
            for (auto& a : e->args) scan(a, selfCall && a->kind == ExprKind::Name);
        };
        std::function<void(const Block&)> scanBlock = [&](const Block& b) {
            for (auto& st : b.stmts) {
                scan(st->expr, false);
                scan(st->target, false);
                scanBlock(st->body);
            }
        };
        scanBlock(*md->body);
        if (bad)
            fail(ErrorKind::PreconditionFailed,
                 "BoundVariableInMethodBody(" + cls + "," + m + "," + pn + ")");
    }

    for (auto& cls : hierarchy) {
        if (MethodDecl* md = findDecl(classOf(p, cls), m, &sig))
            md->params.erase(md->params.begin() + pos);
    }
    forEachBody(p, [&](const std::string&, const std::string&, MethodDecl& host) {
        rewriteExprsInBlock(*host.body, [&](ExprPtr& e) {
            if (e->kind == ExprKind::Invoke && sites.count(e.get()) &&
                static_cast<size_t>(pos) < e->args.size())
                e->args.erase(e->args.begin() + pos);
        });
    });
    rep.renamed.push_back(m + " lost parameter " + pn);
}

void opDeleteClass(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string a = op.args.scalar("a");
    if (!p.hasClass(a)) fail(ErrorKind::PreconditionFailed, "no class " + a);
    p.removeClass(a);
    rep.deleted.push_back("class " + a);
}

void opDeleteMethod(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string c = op.args.scalar("c");
    std::string m = op.args.scalar("m");
    auto sig = op.args.listArg("sig");
    removeDecl(classOf(p, c), m, sig.empty() ? nullptr : &sig);
    rep.deleted.push_back(c + "::" + m);
}

void opIntroduceParameterObject(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string t = op.args.scalar("t");
    std::string n = op.args.scalar("n");
    auto osig = op.args.listArg("osig");
    auto pnames = op.args.group("pnames");
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(s);

    // the parameter-object class: private fields, constructor, getters
    ClassDecl po;
    po.name = t;
    MethodDecl ctor;
    ctor.name = t;
    ctor.returnType = TypeRef(t);
    ctor.body = Block{};
    for (size_t i = 0; i < pnames.size(); ++i) {
        FieldDecl f;
        f.visibility = Visibility::Private;
        f.type = parseTypeText(osig[i]);
        f.name = pnames[i];
        po.fields.push_back(f);
        ctor.params.push_back(Param{parseTypeText(osig[i]), pnames[i]});
        ctor.body->stmts.push_back(Stmt::makeAssign(
            Expr::makeField(Expr::makeThis(), pnames[i]), Expr::makeName(pnames[i])));
        MethodDecl getter;
        getter.returnType = parseTypeText(osig[i]);
        getter.name = "get" + pnames[i];
        getter.body = Block{};
        getter.body->stmts.push_back(Stmt::makeReturn(Expr::makeName(pnames[i])));
        po.methods.push_back(std::move(getter));
    }
    po.constructors.push_back(std::move(ctor));
    p.addClass(std::move(po));

    Analysis an(p);
    std::set<const Expr*> sites;
    for (auto& site : an.callSites())
        if (site.target.decl && site.target.decl->name == m &&
            sigNames(*site.target.decl) == osig &&
            std::find(hierarchy.begin(), hierarchy.end(), site.target.cls) != hierarchy.end())
            sites.insert(site.call);

    // rewrite signatures and bodies
    for (auto& clsName : hierarchy) {
        ClassDecl& cls = classOf(p, clsName);
        for (auto& md : cls.methods) {
            if (md.name != m || !sigMatches(md, osig)) continue;
            std::vector<std::string> oldNames;
            for (auto& prm : md.params) oldNames.push_back(prm.name);
            md.params.clear();
            md.params.push_back(Param{TypeRef(t), n});
            if (!md.body) continue;
            // recursive pass-through first: m(p1..pk) -> m(n)
            rewriteExprsInBlock(*md.body, [&](ExprPtr& e) {
                if (e->kind != ExprKind::Invoke || !sites.count(e.get())) return;
                bool passThrough = e->args.size() == oldNames.size();
                for (size_t i = 0; i < e->args.size() && passThrough; ++i)
                    if (e->args[i]->kind != ExprKind::Name || e->args[i]->name != oldNames[i])
                        passThrough = false;
                if (passThrough) {
                    e->args.clear();
                    e->args.push_back(Expr::makeName(n));
                    sites.erase(e.get());
                }
            });
            // remaining reads go through the accessor
            rewriteExprsInBlock(*md.body, [&](ExprPtr& e) {
                if (e->kind != ExprKind::Name) return;
                auto it = std::find(oldNames.begin(), oldNames.end(), e->name);
                if (it == oldNames.end()) return;
                std::string getter = "get" + *it;
                e = Expr::makeInvoke(Expr::makeName(n), getter, {});
            });
        }
    }
    // external call sites wrap their arguments
    forEachBody(p, [&](const std::string&, const std::string&, MethodDecl& host) {
        rewriteExprsInBlock(*host.body, [&](ExprPtr& e) {
            if (e->kind != ExprKind::Invoke || !sites.count(e.get())) return;
            std::vector<ExprPtr> wrapped = e->args;
            e->args.clear();
            e->args.push_back(Expr::makeNew(TypeRef(t), std::move(wrapped)));
        });
    });
    rep.created.push_back("class " + t);
}

void opInlineConstructor(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string c = op.args.scalar("c");
    auto fields = op.args.group("fields");
    auto getters = op.args.group("getters");
    ClassDecl& poCls = classOf(p, c);
    MethodDecl* md = findDecl(classOf(p, s), m, nullptr);
    if (!md || !md->body) fail(ErrorKind::PreconditionFailed, "no body " + s + "::" + m);

    // new c(args).getF() -> new c(fvar...).f with locals binding the args
    std::vector<StmtPtr> prologue;
    std::map<std::string, std::string> fieldLocal; // field -> local name
    rewriteExprsInBlock(*md->body, [&](ExprPtr& e) {
        if (e->kind != ExprKind::Invoke || !e->receiver ||
            e->receiver->kind != ExprKind::New || e->receiver->newType.name != c)
            return;
        auto git = std::find(getters.begin(), getters.end(), e->name);
        if (git == getters.end()) return;
        size_t idx = static_cast<size_t>(git - getters.begin());
        if (idx >= fields.size()) return;
        // bind constructor arguments to locals named after the fields
        ExprPtr recv = e->receiver;
        const MethodDecl* ctor = poCls.constructors.empty() ? nullptr : &poCls.constructors[0];
        for (size_t i = 0; i < recv->args.size() && ctor; ++i) {
            const std::string& fname = ctor->params[i].name;
            if (fieldLocal.count(fname)) continue;
            std::string local = fname + "var";
            fieldLocal[fname] = local;
            prologue.push_back(
                Stmt::makeLocal(ctor->params[i].type, local, cloneExpr(recv->args[i])));
            recv->args[i] = Expr::makeName(local);
        }
        e = Expr::makeField(recv, fields[idx]);
    });
    md->body->stmts.insert(md->body->stmts.begin(), prologue.begin(), prologue.end());
    rep.warnings.push_back("inlined constructor " + c + " in " + s + "::" + m);
}

void opInlineLocalField(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string f = op.args.scalar("f");
    MethodDecl* md = findDecl(classOf(p, s), m, nullptr);
    if (!md || !md->body) fail(ErrorKind::PreconditionFailed, "no body " + s + "::" + m);
    // new C(x...).f collapses to the constructor argument bound to f
    rewriteExprsInBlock(*md->body, [&](ExprPtr& e) {
        if (e->kind != ExprKind::FieldAccess || e->name != f || !e->receiver ||
            e->receiver->kind != ExprKind::New)
            return;
        const ClassDecl* po = p.findClass(e->receiver->newType.name);
        if (!po || po->constructors.empty()) return;
        const MethodDecl& ctor = po->constructors[0];
        for (size_t i = 0; i < ctor.params.size(); ++i)
            if (ctor.params[i].name == f && i < e->receiver->args.size()) {
                e = e->receiver->args[i];
                return;
            }
    });
    rep.warnings.push_back("inlined field " + f);
}

void opInlineLocalVariable(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string s = op.args.scalar("s");
    std::string m = op.args.scalar("m");
    std::string v = op.args.scalar("v");
    MethodDecl* md = findDecl(classOf(p, s), m, nullptr);
    if (!md || !md->body) fail(ErrorKind::PreconditionFailed, "no body " + s + "::" + m);
    ExprPtr init;
    std::function<void(Block&)> strip = [&](Block& b) {
        std::vector<StmtPtr> out;
        for (auto& st : b.stmts) {
            if (st->kind == StmtKind::LocalDecl && st->name == v) {
                init = st->expr;
                continue;
            }
            if (st->kind == StmtKind::ForEach) strip(st->body);
            out.push_back(st);
        }
        b.stmts = std::move(out);
    };
    strip(*md->body);
    if (!init) fail(ErrorKind::PreconditionFailed, "no local " + v + " in " + s + "::" + m);
    forEachBody(p, [&](const std::string& cls, const std::string&, MethodDecl& host) {
        if (cls != s || host.name != md->name) return;
        rewriteExprsInBlock(*host.body, [&](ExprPtr& e) {
            if (e->kind == ExprKind::Name && e->name == v) e = cloneExpr(init);
        });
    });
    rep.warnings.push_back("inlined local " + v);
}

void opWidenFieldVisibility(Program& p, const CatalogOp& op, OpReport& rep) {
    ClassDecl& c = classOf(p, op.args.scalar("c"));
    for (auto& f : c.fields)
        if (f.name == op.args.scalar("f") && f.visibility != Visibility::Public) {
            f.visibility = Visibility::Public;
            rep.warnings.push_back("field " + f.name + " widened to public");
        }
}

void opBoxReturnTypes(Program& p, const CatalogOp& op, OpReport& rep) {
    std::string m = op.args.scalar("m");
    std::string from = op.args.scalar("from");
    std::string to = op.args.scalar("to");
    std::vector<std::string> hierarchy = op.args.group("subs");
    hierarchy.push_back(op.args.scalar("s"));
    for (auto& clsName : hierarchy) {
        for (auto& md : classOf(p, clsName).methods) {
            if (md.name != m || md.returnType.name != from) continue;
            md.returnType = TypeRef(to);
            if (from == "void" && md.body) md.body->stmts.push_back(Stmt::makeReturn(
                Expr::makeNull()));
        }
    }
    rep.renamed.push_back(m + " return " + from + " -> " + to);
}

} // namespace

std::pair<Program, OpReport> applyOp(const Program& p, const CatalogOp& op, bool checkGuard) {
    OpReport rep;
    rep.op = op.display();
    rep.provenance = op.provenance;
    if (op.kind == OpKind::IntroduceDownCast || op.kind == OpKind::DeleteDownCast)
        fail(ErrorKind::NotSupported, std::string(opKindName(op.kind)) +
                                          " is not automated (practical mode omits it)");
    if (checkGuard) {
        FactContext ctx(p);
        HoldsResult r = checkHolds(ctx, op.guard);
        rep.preconditionHeld = r.holds;
        if (!r.holds)
            fail(ErrorKind::PreconditionFailed,
                 op.display() + " violates " +
                     (r.witness ? r.witness->str() : std::string("precondition")));
    }
    Program out = cloneProgram(p);
    switch (op.kind) {
    case OpKind::CreateEmptyClass: opCreateEmptyClass(out, op, rep); break;
    case OpKind::CreateIndirectionInSuperClass: opCreateIndirection(out, op, rep); break;
    case OpKind::InlineMethodInvocations: opInlineMethodInvocations(out, op, rep); break;
    case OpKind::AddParameterWithReuse: opAddParameterWithReuse(out, op, rep); break;
    case OpKind::MoveMethodWithDelegate: opMoveMethodWithDelegate(out, op, rep); break;
    case OpKind::ExtractSuperClass: opExtractSuperClass(out, op, rep, true); break;
    case OpKind::ExtractSuperClassWithoutPullUp: opExtractSuperClass(out, op, rep, false); break;
    case OpKind::PullUpWithGenerics: opPullUpWithGenerics(out, op, rep); break;
    case OpKind::GeneraliseParameter: opGeneraliseParameter(out, op, rep); break;
    case OpKind::ReplaceMethodcodeDuplicatesInverter:
        opReplaceMethodcodeDuplicates(out, op, rep);
        break;
    case OpKind::SafeDeleteDelegatorOverriding: opSafeDeleteDelegator(out, op, rep); break;
    case OpKind::PullUpAbstract: opPullUpAbstract(out, op, rep); break;
    case OpKind::PullUpImplementation: opPullUpImplementation(out, op, rep); break;
    case OpKind::InlineAndDelete: opInlineAndDelete(out, op, rep); break;
    case OpKind::DuplicateMethodInHierarchy: opDuplicateMethod(out, op, rep, false); break;
    case OpKind::DuplicateMethodInHierarchyGen: opDuplicateMethod(out, op, rep, true); break;
    case OpKind::SpecialiseParameter: opSpecialiseParameter(out, op, rep); break;
    case OpKind::RenameInHierarchyNoOverloading: opRename(out, op, rep, false); break;
    case OpKind::RenameOverloadedMethodInHierarchy: opRename(out, op, rep, false); break;
    case OpKind::RenameDelegatorWithOverloading: opRename(out, op, rep, true); break;
    case OpKind::DeleteMethodInHierarchy: opDeleteMethodInHierarchy(out, op, rep); break;
    case OpKind::PushDownAll: opPushDown(out, op, rep, false); break;
    case OpKind::PushDownImplementation: opPushDown(out, op, rep, true); break;
    case OpKind::PushDownNotRedefinedMethod: opPushDownNotRedefined(out, op, rep); break;
    case OpKind::ReplaceMethodDuplication: opReplaceMethodDuplication(out, op, rep); break;
    case OpKind::RemoveParameter: opRemoveParameter(out, op, rep); break;
    case OpKind::DeleteClass: opDeleteClass(out, op, rep); break;
    case OpKind::DeleteMethod: opDeleteMethod(out, op, rep); break;
    case OpKind::IntroduceParameterObject: opIntroduceParameterObject(out, op, rep); break;
    case OpKind::InlineConstructor: opInlineConstructor(out, op, rep); break;
    case OpKind::InlineLocalField: opInlineLocalField(out, op, rep); break;
    case OpKind::InlineLocalVariable: opInlineLocalVariable(out, op, rep); break;
    case OpKind::WidenFieldVisibility: opWidenFieldVisibility(out, op, rep); break;
    case OpKind::BoxReturnTypes: opBoxReturnTypes(out, op, rep); break;
    case OpKind::IntroduceDownCast:
    case OpKind::DeleteDownCast:
        break;
    }
    Analysis validate(out); // well-formedness of the result
    (void)validate;
    return {std::move(out), std::move(rep)};
}

} // namespace repat
