#include "repat/resolve.hpp"

#include <algorithm>
#include <cassert>

namespace repat {

namespace {

const std::string kNullType = "null";

bool isReferenceName(const std::string& n) { return !isPrimitiveTypeName(n) && n != kNullType; }

} // namespace

std::pair<std::string, const FieldDecl*> findFieldInHierarchy(const Program& p,
                                                              const std::string& cls,
                                                              const std::string& field) {
    std::string cur = cls;
    while (true) {
        const ClassDecl* c = p.findClass(cur);
        if (!c) return {"", nullptr};
        for (auto& f : c->fields)
            if (f.name == field) return {cur, &f};
        if (!c->superclass) return {"", nullptr};
        cur = c->superclass->name;
    }
}

std::vector<TypeRef> erasedParamTypes(const Program& p, const ClassDecl* owner,
                                      const MethodDecl& m) {
    std::vector<TypeRef> out;
    for (auto& prm : m.params) {
        TypeRef t = prm.type;
        bool isTypeParam =
            std::find(m.typeParams.begin(), m.typeParams.end(), t.name) != m.typeParams.end() ||
            (owner && std::find(owner->typeParams.begin(), owner->typeParams.end(), t.name) !=
                          owner->typeParams.end());
        if (isTypeParam) t = TypeRef::objectType();
        t.args.clear();
        (void)p;
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<std::pair<std::string, const MethodDecl*>>
visibleMethods(const Program& p, const std::string& cls, const std::string& m) {
    std::vector<std::pair<std::string, const MethodDecl*>> out;
    auto seenSig = [&](const ClassDecl* owner, const MethodDecl& cand) {
        auto sig = erasedParamTypes(p, owner, cand);
        for (auto& [ocls, om] : out) {
            const ClassDecl* oc = p.findClass(ocls);
            if (erasedParamTypes(p, oc, *om) == sig) return true;
        }
        return false;
    };
    std::vector<std::string> pendingInterfaces;
    std::string cur = cls;
    while (true) {
        const ClassDecl* c = p.findClass(cur);
        if (!c) break;
        for (auto& md : c->methods)
            if (md.name == m && md.visibility != Visibility::Private && !seenSig(c, md))
                out.emplace_back(cur, &md);
        for (auto& i : c->interfaces) pendingInterfaces.push_back(i.name);
        if (!c->superclass) break;
        cur = c->superclass->name;
    }
    if (const ClassDecl* self = p.findClass(cls)) {
        // private methods are visible within the declaring class itself
        for (auto& md : self->methods)
            if (md.name == m && md.visibility == Visibility::Private && !seenSig(self, md))
                out.emplace_back(cls, &md);
    }
    // interface chain (also when cls itself is an interface)
    if (p.findInterface(cls)) pendingInterfaces.push_back(cls);
    std::vector<std::string> seenIfaces;
    while (!pendingInterfaces.empty()) {
        std::string iname = pendingInterfaces.back();
        pendingInterfaces.pop_back();
        if (std::find(seenIfaces.begin(), seenIfaces.end(), iname) != seenIfaces.end()) continue;
        seenIfaces.push_back(iname);
        const InterfaceDecl* i = p.findInterface(iname);
        if (!i) continue;
        for (auto& md : i->methods)
            if (md.name == m && !seenSig(nullptr, md)) out.emplace_back(iname, &md);
        for (auto& e : i->extends) pendingInterfaces.push_back(e.name);
    }
    return out;
}

//===----------------------------------------------------------------------===//
// Analysis
//===----------------------------------------------------------------------===//

Analysis::Analysis(const Program& p) : prog_(&p) {
    checkDeclarations();
    walkBodies();
}

void Analysis::checkDeclarations() const {
    const Program& p = *prog_;
    auto knownType = [&](const TypeRef& t, const ClassDecl* ctx,
                         const MethodDecl* m) -> bool {
        if (p.typeExists(t.name)) return true;
        if (ctx && std::find(ctx->typeParams.begin(), ctx->typeParams.end(), t.name) !=
                       ctx->typeParams.end())
            return true;
        if (m && std::find(m->typeParams.begin(), m->typeParams.end(), t.name) !=
                     m->typeParams.end())
            return true;
        return false;
    };
    for (auto& [name, c] : p.classes) {
        if (c.superclass) {
            const std::string& s = c.superclass->name;
            if (!p.hasClass(s) && s != TypeRef::objectType().name && s != "Object")
                fail(ErrorKind::NameResolutionError, "unknown superclass " + s + " of " + name,
                     c.loc);
        }
        for (auto& i : c.interfaces)
            if (!p.hasInterface(i.name))
                fail(ErrorKind::NameResolutionError,
                     "unknown interface " + i.name + " implemented by " + name, c.loc);
        // acyclic extends chain
        std::vector<std::string> chain;
        std::string cur = name;
        while (true) {
            if (std::find(chain.begin(), chain.end(), cur) != chain.end())
                fail(ErrorKind::WellFormednessError, "inheritance cycle through " + cur, c.loc);
            chain.push_back(cur);
            const ClassDecl* cd = p.findClass(cur);
            if (!cd || !cd->superclass) break;
            cur = cd->superclass->name;
        }
        // duplicate signatures / abstract rules
        for (size_t i = 0; i < c.methods.size(); ++i) {
            const MethodDecl& m = c.methods[i];
            for (size_t j = i + 1; j < c.methods.size(); ++j)
                if (c.methods[j].name == m.name &&
                    erasedParamTypes(p, &c, c.methods[j]) == erasedParamTypes(p, &c, m))
                    fail(ErrorKind::WellFormednessError,
                         "duplicate method " + name + "::" + m.name, c.loc);
            if (m.isAbstract && m.body)
                fail(ErrorKind::WellFormednessError,
                     "abstract method with body: " + name + "::" + m.name, c.loc);
            if (!m.isAbstract && !m.body)
                fail(ErrorKind::WellFormednessError,
                     "concrete method without body: " + name + "::" + m.name, c.loc);
            if (m.isAbstract && !c.isAbstract)
                fail(ErrorKind::WellFormednessError,
                     "abstract method in concrete class: " + name + "::" + m.name, c.loc);
            if (!knownType(m.returnType, &c, &m))
                fail(ErrorKind::NameResolutionError,
                     "unknown return type " + m.returnType.str() + " in " + name +
                         "::" + m.name,
                     c.loc);
            std::set<std::string> pnames;
            for (auto& prm : m.params) {
                if (!pnames.insert(prm.name).second)
                    fail(ErrorKind::WellFormednessError,
                         "duplicate parameter " + prm.name + " in " + name + "::" + m.name,
                         c.loc);
                if (!knownType(prm.type, &c, &m))
                    fail(ErrorKind::NameResolutionError,
                         "unknown parameter type " + prm.type.str() + " in " + name +
                             "::" + m.name,
                         c.loc);
            }
        }
        for (auto& f : c.fields)
            if (!knownType(f.type, &c, nullptr))
                fail(ErrorKind::NameResolutionError,
                     "unknown field type " + f.type.str() + " in " + name, c.loc);
        // concrete classes implement every inherited abstract / interface method
        if (!c.isAbstract) {
            std::vector<std::pair<std::string, const MethodDecl*>> required;
            std::string cur2 = name;
            while (true) {
                const ClassDecl* cd = p.findClass(cur2);
                if (!cd) break;
                for (auto& m : cd->methods)
                    if (m.isAbstract) required.emplace_back(cur2, &m);
                for (auto& i : cd->interfaces) {
                    const InterfaceDecl* id = p.findInterface(i.name);
                    if (!id) continue;
                    for (auto& m : id->methods) required.emplace_back(i.name, &m);
                }
                if (!cd->superclass) break;
                cur2 = cd->superclass->name;
            }
            for (auto& [owner, m] : required) {
                bool found = false;
                for (auto& [vcls, vm] : visibleMethods(p, name, m->name)) {
                    const ClassDecl* vc = p.findClass(vcls);
                    if (!vm->isAbstract && vc &&
                        erasedParamTypes(p, vc, *vm) ==
                            erasedParamTypes(p, p.findClass(owner), *m)) {
                        found = true;
                        break;
                    }
                }
                if (!found)
                    fail(ErrorKind::WellFormednessError,
                         "concrete class " + name + " does not implement " + owner +
                             "::" + m->name,
                         c.loc);
            }
        }
    }
    if (p.entry) {
        const ClassDecl* c = p.findClass(p.entry->first);
        if (!c)
            fail(ErrorKind::ConfigInvalid, "entry class " + p.entry->first + " not found");
    }
}

//===----------------------------------------------------------------------===//
// Subtyping / generics
//===----------------------------------------------------------------------===//

TypeRef Analysis::viewAs(const TypeRef& t, const std::string& baseName) const {
    const Program& p = *prog_;
    if (t.name == baseName) return t;
    // walk the extends/implements chain substituting type arguments
    struct Entry {
        TypeRef type;
    };
    std::vector<TypeRef> work{t};
    std::vector<std::string> seen;
    while (!work.empty()) {
        TypeRef cur = work.back();
        work.pop_back();
        if (cur.name == baseName) return cur;
        if (std::find(seen.begin(), seen.end(), cur.name) != seen.end()) continue;
        seen.push_back(cur.name);
        auto substInto = [&](const TypeRef& parent, const std::vector<std::string>& tps) {
            TypeRef out = parent;
            for (auto& a : out.args) {
                auto it = std::find(tps.begin(), tps.end(), a.name);
                if (it != tps.end()) {
                    size_t idx = static_cast<size_t>(it - tps.begin());
                    if (idx < cur.args.size()) a = cur.args[idx];
                }
            }
            return out;
        };
        if (const ClassDecl* c = p.findClass(cur.name)) {
            if (c->superclass) work.push_back(substInto(*c->superclass, c->typeParams));
            for (auto& i : c->interfaces) work.push_back(substInto(i, c->typeParams));
        } else if (const InterfaceDecl* i = p.findInterface(cur.name)) {
            for (auto& e : i->extends) work.push_back(e);
        }
    }
    return TypeRef("");
}

bool Analysis::assignable(const TypeRef& from, const TypeRef& to) const {
    if (from == to) return true;
    if (from.name == kNullType) return isReferenceName(to.name);
    if ((from.name == "int" && to.name == "Integer") ||
        (from.name == "Integer" && to.name == "int"))
        return true;
    if ((from.name == "boolean" && to.name == "Boolean") ||
        (from.name == "Boolean" && to.name == "boolean"))
        return true;
    if (isPrimitiveTypeName(from.name) || isPrimitiveTypeName(to.name))
        return from.name == to.name;
    if (to.name == TypeRef::objectType().name || to.name == "Object") return true;
    if (!prog_->isSubtype(from.name, to.name)) return false;
    if (to.args.empty()) return true;
    TypeRef viewed = viewAs(from, to.name);
    return viewed.name == to.name && viewed.args == to.args;
}

ResolvedMethod Analysis::resolveInvoke(const TypeRef& receiverType, const std::string& name,
                                       const std::vector<TypeRef>& argTypes,
                                       const std::string& fromClass) const {
    const Program& p = *prog_;
    struct Candidate {
        std::string cls;
        const MethodDecl* decl;
        std::vector<TypeRef> params; // class-substituted
        TypeRef ret;                 // class-substituted
    };
    std::vector<Candidate> cands;
    auto addFrom = [&](const std::string& cls, const std::vector<TypeRef>& typeArgs) {
        const ClassDecl* c = p.findClass(cls);
        const InterfaceDecl* i = c ? nullptr : p.findInterface(cls);
        auto subst = [&](const TypeRef& t, const std::vector<std::string>& tps) {
            TypeRef out = t;
            auto it = std::find(tps.begin(), tps.end(), t.name);
            if (it != tps.end()) {
                size_t idx = static_cast<size_t>(it - tps.begin());
                if (idx < typeArgs.size()) return typeArgs[idx];
            }
            for (auto& a : out.args) {
                auto it2 = std::find(tps.begin(), tps.end(), a.name);
                if (it2 != tps.end()) {
                    size_t idx = static_cast<size_t>(it2 - tps.begin());
                    if (idx < typeArgs.size()) a = typeArgs[idx];
                }
            }
            return out;
        };
        auto tryAdd = [&](const MethodDecl& md, const std::vector<std::string>& tps,
                          const ClassDecl* owner) {
            if (md.name != name || md.params.size() != argTypes.size()) return;
            if (md.visibility == Visibility::Private && cls != fromClass) return;
            // skip if an equally-erased signature is already present (override)
            auto sig = erasedParamTypes(p, owner, md);
            for (auto& cd : cands) {
                const ClassDecl* oc = p.findClass(cd.cls);
                if (erasedParamTypes(p, oc, *cd.decl) == sig) return;
            }
            Candidate cand;
            cand.cls = cls;
            cand.decl = &md;
            for (auto& prm : md.params) cand.params.push_back(subst(prm.type, tps));
            cand.ret = subst(md.returnType, tps);
            cands.push_back(std::move(cand));
        };
        if (c)
            for (auto& md : c->methods) tryAdd(md, c->typeParams, c);
        if (i)
            for (auto& md : i->methods) tryAdd(md, {}, nullptr);
    };

    // walk: receiver class chain (with substitutions), then interfaces
    std::vector<std::pair<std::string, std::vector<TypeRef>>> chain;
    {
        TypeRef cur = receiverType;
        std::vector<std::string> pendingIfaces;
        while (true) {
            chain.emplace_back(cur.name, cur.args);
            const ClassDecl* c = p.findClass(cur.name);
            if (!c) break;
            for (auto& i : c->interfaces) pendingIfaces.push_back(i.name);
            if (!c->superclass) break;
            // substitute cur's args into the superclass reference
            TypeRef sup = *c->superclass;
            for (auto& a : sup.args) {
                auto it = std::find(c->typeParams.begin(), c->typeParams.end(), a.name);
                if (it != c->typeParams.end()) {
                    size_t idx = static_cast<size_t>(it - c->typeParams.begin());
                    if (idx < cur.args.size()) a = cur.args[idx];
                }
            }
            cur = sup;
        }
        if (p.findInterface(receiverType.name)) pendingIfaces.push_back(receiverType.name);
        std::vector<std::string> seen;
        while (!pendingIfaces.empty()) {
            std::string iname = pendingIfaces.back();
            pendingIfaces.pop_back();
            if (std::find(seen.begin(), seen.end(), iname) != seen.end()) continue;
            seen.push_back(iname);
            bool already = std::any_of(chain.begin(), chain.end(),
                                       [&](auto& pr) { return pr.first == iname; });
            if (!already) chain.emplace_back(iname, std::vector<TypeRef>{});
            if (const InterfaceDecl* i = p.findInterface(iname))
                for (auto& e : i->extends) pendingIfaces.push_back(e.name);
        }
    }
    for (auto& [cls, args] : chain) addFrom(cls, args);

    // applicability with method-level type parameter unification
    struct Applicable {
        Candidate cand;
        TypeRef ret;
    };
    std::vector<Applicable> apps;
    for (auto& cand : cands) {
        std::map<std::string, TypeRef> binding;
        auto& mtps = cand.decl->typeParams;
        bool ok = true;
        for (size_t i = 0; i < argTypes.size() && ok; ++i) {
            const TypeRef& a = argTypes[i];
            TypeRef prm = cand.params[i];
            bool isMtp = std::find(mtps.begin(), mtps.end(), prm.name) != mtps.end();
            if (isMtp) {
                if (a.name == kNullType) continue;
                auto it = binding.find(prm.name);
                if (it == binding.end()) binding[prm.name] = a;
                else if (!(assignable(a, it->second) || assignable(it->second, a))) ok = false;
                continue;
            }
            if (!prm.args.empty()) {
                // unify generic parameter args against the arg viewed as prm.name
                bool hasMtpArg = std::any_of(prm.args.begin(), prm.args.end(), [&](auto& x) {
                    return std::find(mtps.begin(), mtps.end(), x.name) != mtps.end();
                });
                if (hasMtpArg) {
                    if (a.name == kNullType) continue;
                    TypeRef viewed = viewAs(a, prm.name);
                    if (viewed.name.empty() || viewed.args.size() != prm.args.size()) {
                        ok = false;
                        continue;
                    }
                    for (size_t k = 0; k < prm.args.size(); ++k) {
                        const std::string& tp = prm.args[k].name;
                        if (std::find(mtps.begin(), mtps.end(), tp) != mtps.end()) {
                            auto it = binding.find(tp);
                            if (it == binding.end()) binding[tp] = viewed.args[k];
                            else if (it->second != viewed.args[k]) ok = false;
                        } else if (prm.args[k] != viewed.args[k]) {
                            ok = false;
                        }
                    }
                    continue;
                }
            }
            if (!assignable(a, prm)) ok = false;
        }
        if (!ok) continue;
        TypeRef ret = cand.ret;
        auto it = binding.find(ret.name);
        if (it != binding.end()) ret = it->second;
        for (auto& ra : ret.args) {
            auto it2 = binding.find(ra.name);
            if (it2 != binding.end()) ra = it2->second;
        }
        apps.push_back({cand, ret});
    }
    if (apps.empty())
        fail(ErrorKind::NameResolutionError,
             "no applicable method " + receiverType.str() + "." + name + "/" +
                 std::to_string(argTypes.size()));

    // most specific: minimal by pointwise assignability of raw parameter types
    auto moreSpecific = [&](const Applicable& x, const Applicable& y) {
        for (size_t i = 0; i < x.cand.params.size(); ++i) {
            TypeRef xa = x.cand.params[i];
            TypeRef ya = y.cand.params[i];
            xa.args.clear();
            ya.args.clear();
            if (!assignable(xa, ya)) return false;
        }
        return true;
    };
    std::vector<const Applicable*> minimal;
    for (auto& a : apps) {
        bool dominated = false;
        for (auto& b : apps) {
            if (&a == &b) continue;
            if (moreSpecific(b, a) && !moreSpecific(a, b)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(&a);
    }
    // equal-specificity duplicates can only be the same erased signature from
    // different classes; the walk order already deduplicated those.
    if (minimal.size() != 1) {
        // tie-break: prefer most-derived declaring class
        std::vector<const Applicable*> best;
        for (auto* a : minimal) {
            bool below = true;
            for (auto* b : minimal)
                if (a != b && !prog_->isSubtype(a->cand.cls, b->cand.cls)) below = false;
            if (below) best.push_back(a);
        }
        if (best.size() == 1) minimal = best;
    }
    if (minimal.size() != 1)
        fail(ErrorKind::NameResolutionError,
             "ambiguous overload " + receiverType.str() + "." + name);

    ResolvedMethod r;
    r.cls = minimal[0]->cand.cls;
    r.decl = minimal[0]->cand.decl;
    r.returnType = minimal[0]->ret;
    r.paramTypes = minimal[0]->cand.params;
    return r;
}

//===----------------------------------------------------------------------===//
// Body walking
//===----------------------------------------------------------------------===//

class BodyWalker {
public:
    BodyWalker(Analysis& an, const std::string& cls, const std::string& method,
               const ClassDecl* classDecl, const MethodDecl* methodDecl)
        : an_(an), p_(an.program()), cls_(cls), method_(method), classDecl_(classDecl) {
        scopes_.emplace_back();
        if (methodDecl)
            for (auto& prm : methodDecl->params) scopes_.back()[prm.name] = prm.type;
    }

    void walkBlock(const Block& b) {
        scopes_.emplace_back();
        for (auto& s : b.stmts) walkStmt(*s);
        scopes_.pop_back();
    }

    void walkStmt(const Stmt& s) {
        switch (s.kind) {
        case StmtKind::LocalDecl:
            if (s.expr) typeOf(*s.expr, NewUsage::Initializer);
            scopes_.back()[s.name] = s.declType;
            break;
        case StmtKind::Assign: {
            typeOf(*s.target, NewUsage::Standalone);
            typeOf(*s.expr, NewUsage::Initializer);
            break;
        }
        case StmtKind::ExprStmt:
            typeOf(*s.expr, NewUsage::Standalone);
            break;
        case StmtKind::ForEach: {
            TypeRef listT = typeOf(*s.expr, NewUsage::Standalone);
            if (!isListTypeName(listT.name))
                fail(ErrorKind::WellFormednessError,
                     "for-each over non-list type " + listT.str() + " in " + cls_ +
                         "::" + method_,
                     s.loc);
            scopes_.emplace_back();
            scopes_.back()[s.name] = s.declType;
            for (auto& st : s.body.stmts) walkStmt(*st);
            scopes_.pop_back();
            break;
        }
        case StmtKind::Return:
            if (s.expr) typeOf(*s.expr, NewUsage::Standalone);
            break;
        }
    }

    TypeRef typeOf(const Expr& e, NewUsage usage) {
        switch (e.kind) {
        case ExprKind::This:
            return selfType();
        case ExprKind::Name: {
            bind(e.name);
            for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
                auto f = it->find(e.name);
                if (f != it->end()) return f->second;
            }
            auto [owner, fd] = findFieldInHierarchy(p_, cls_, e.name);
            if (fd) {
                an_.fieldUses_.push_back({cls_, method_, e.name});
                return fd->type;
            }
            fail(ErrorKind::NameResolutionError,
                 "unresolved identifier '" + e.name + "' in " + cls_ + "::" + method_, e.loc);
        }
        case ExprKind::FieldAccess: {
            TypeRef base = typeOf(*e.receiver, NewUsage::Standalone);
            if (e.receiver->kind == ExprKind::This) bind(e.name);
            auto [owner, fd] = findFieldInHierarchy(p_, base.name, e.name);
            if (!fd)
                fail(ErrorKind::NameResolutionError,
                     "no field '" + e.name + "' on " + base.str() + " in " + cls_ +
                         "::" + method_,
                     e.loc);
            an_.fieldUses_.push_back({cls_, method_, e.name});
            return fd->type;
        }
        case ExprKind::Invoke: {
            TypeRef recvT;
            bool isThis = !e.receiver || e.receiver->kind == ExprKind::This;
            bool isNew = e.receiver && e.receiver->kind == ExprKind::New;
            std::string recvName = isThis ? "this" : "";
            if (e.receiver) {
                recvT = typeOf(*e.receiver, NewUsage::Receiver);
                if (e.receiver->kind == ExprKind::Name) recvName = e.receiver->name;
            } else {
                recvT = selfType();
            }
            std::vector<TypeRef> argTs;
            std::vector<std::string> argIdents;
            for (auto& a : e.args) {
                argTs.push_back(typeOf(*a, NewUsage::Argument));
                argIdents.push_back(a->kind == ExprKind::Name ? a->name
                                    : a->kind == ExprKind::This ? "this" : "");
            }
            // list builtins
            if (isListTypeName(recvT.name)) {
                if (e.name == "add" && argTs.size() == 1) return TypeRef("void");
                if (e.name == "size" && argTs.empty()) return TypeRef("int");
                fail(ErrorKind::NameResolutionError, "unknown list method " + e.name, e.loc);
            }
            ResolvedMethod rm = an_.resolveInvoke(recvT, e.name, argTs, cls_);
            CallSite site;
            site.inClass = cls_;
            site.inMethod = method_;
            site.call = &e;
            site.target = rm;
            site.argTypes = argTs;
            site.receiverType = recvT;
            site.receiverIsThis = isThis;
            site.receiverIsNew = isNew;
            site.receiverName = recvName;
            site.argIdents = argIdents;
            an_.calls_.push_back(std::move(site));
            return rm.returnType;
        }
        case ExprKind::New: {
            for (auto& a : e.args) typeOf(*a, NewUsage::Argument);
            const std::string& tn = e.newType.name;
            if (!p_.hasClass(tn) && !isListTypeName(tn) && !p_.hasExtern(tn))
                fail(ErrorKind::NameResolutionError, "cannot instantiate " + tn, e.loc);
            if (const ClassDecl* c = p_.findClass(tn)) {
                if (c->isAbstract)
                    fail(ErrorKind::WellFormednessError, "cannot instantiate abstract " + tn,
                         e.loc);
                bool ctorOk = c->constructors.empty() ? e.args.empty() : false;
                for (auto& ct : c->constructors)
                    if (ct.params.size() == e.args.size()) ctorOk = true;
                if (!ctorOk)
                    fail(ErrorKind::NameResolutionError, "no matching constructor for " + tn,
                         e.loc);
            }
            an_.news_.push_back({cls_, method_, tn, usage});
            return e.newType;
        }
        case ExprKind::StringLit: return TypeRef("String");
        case ExprKind::IntLit: return TypeRef("int");
        case ExprKind::BoolLit: return TypeRef("boolean");
        case ExprKind::NullLit: return TypeRef(kNullType);
        case ExprKind::Concat: {
            TypeRef l = typeOf(*e.lhs, NewUsage::Standalone);
            TypeRef r = typeOf(*e.rhs, NewUsage::Standalone);
            if (l.name == "String" || r.name == "String") return TypeRef("String");
            return TypeRef("int");
        }
        case ExprKind::Print:
            typeOf(*e.args[0], NewUsage::Standalone);
            return TypeRef("void");
        }
        return TypeRef("void");
    }

private:
    TypeRef selfType() const {
        TypeRef t(cls_);
        if (classDecl_)
            for (auto& tp : classDecl_->typeParams) t.args.emplace_back(tp);
        return t;
    }

    void bind(const std::string& n) { an_.bound_[{cls_, method_}].insert(n); }

    Analysis& an_;
    const Program& p_;
    std::string cls_;
    std::string method_;
    const ClassDecl* classDecl_;
    std::vector<std::map<std::string, TypeRef>> scopes_;
};

void Analysis::walkBodies() {
    const Program& p = *prog_;
    for (auto& [name, c] : p.classes) {
        for (auto& f : c.fields) {
            if (f.init) {
                BodyWalker w(*this, name, "<field>", &c, nullptr);
                w.typeOf(*f.init, NewUsage::Initializer);
            }
        }
        for (auto& ctor : c.constructors) {
            BodyWalker w(*this, name, ctor.name, &c, &ctor);
            if (ctor.body) w.walkBlock(*ctor.body);
        }
        for (auto& m : c.methods) {
            if (!m.body) continue;
            BodyWalker w(*this, name, m.name, &c, &m);
            w.walkBlock(*m.body);
        }
    }
}

const std::set<std::string>& Analysis::boundIdents(const std::string& cls,
                                                   const std::string& method) const {
    static const std::set<std::string> empty;
    auto it = bound_.find({cls, method});
    return it == bound_.end() ? empty : it->second;
}

} // namespace repat
