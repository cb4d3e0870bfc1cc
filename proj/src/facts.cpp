#include "repat/facts.hpp"

#include "repat/structural.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace repat {

namespace {

struct PredInfo {
    Predicate pred;
    const char* name;
    int arity;
    std::vector<int> listPositions;
};

const std::vector<PredInfo>& predTable() {
    static const std::vector<PredInfo> table = {
        {Predicate::ExistsClass, "ExistsClass", 1, {}},
        {Predicate::ExistsType, "ExistsType", 1, {}},
        {Predicate::IsAbstractClass, "IsAbstractClass", 1, {}},
        {Predicate::IsInterface, "IsInterface", 1, {}},
        {Predicate::ImplementsDirectly, "ImplementsDirectly", 2, {}},
        {Predicate::ExtendsDirectly, "ExtendsDirectly", 2, {}},
        {Predicate::IsSubType, "IsSubType", 2, {}},
        {Predicate::AllSubclasses, "AllSubclasses", 2, {1}},
        {Predicate::ExistsMethodDefinition, "ExistsMethodDefinition", 2, {}},
        {Predicate::ExistsMethodDefinitionWithParams, "ExistsMethodDefinitionWithParams", 3, {2}},
        {Predicate::ExistsAbstractMethod, "ExistsAbstractMethod", 2, {}},
        {Predicate::IsInheritedMethod, "IsInheritedMethod", 2, {}},
        {Predicate::IsInheritedMethodWithParams, "IsInheritedMethodWithParams", 3, {2}},
        {Predicate::IsOverridingMethod, "IsOverridingMethod", 3, {2}},
        {Predicate::IsOverriding, "IsOverriding", 2, {}},
        {Predicate::IsOverridden, "IsOverridden", 2, {}},
        {Predicate::IsOverloaded, "IsOverloaded", 2, {}},
        {Predicate::HasReturnType, "HasReturnType", 3, {}},
        {Predicate::MethodHasParameterType, "MethodHasParameterType", 3, {}},
        {Predicate::HasParameterType, "HasParameterType", 2, {}},
        {Predicate::ExistsParameterWithName, "ExistsParameterWithName", 4, {2}},
        {Predicate::ExistsParameterWithType, "ExistsParameterWithType", 4, {2}},
        {Predicate::ExistsField, "ExistsField", 2, {}},
        {Predicate::IsInheritedField, "IsInheritedField", 2, {}},
        {Predicate::ExistsFieldInMethodScope, "ExistsFieldInMethodScope", 3, {}},
        {Predicate::ExistsLocalVariable, "ExistsLocalVariable", 3, {}},
        {Predicate::BoundVariableInMethodBody, "BoundVariableInMethodBody", 3, {}},
        {Predicate::ExistsMethodInvocation, "ExistsMethodInvocation", 4, {}},
        {Predicate::IsRecursiveMethod, "IsRecursiveMethod", 2, {}},
        {Predicate::IsIndirectlyRecursive, "IsIndirectlyRecursive", 2, {}},
        {Predicate::IsDelegator, "IsDelegator", 3, {}},
        {Predicate::IsInverter, "IsInverter", 4, {}},
        {Predicate::IsDuplicate, "IsDuplicate", 4, {}},
        {Predicate::HasSameBody, "HasSameBody", 4, {}},
        {Predicate::IsUsedMethod, "IsUsedMethod", 3, {2}},
        {Predicate::IsUsedMethodIn, "IsUsedMethodIn", 3, {}},
        {Predicate::MethodIsUsedWithType, "MethodIsUsedWithType", 4, {2, 3}},
        {Predicate::IsUsedAttributeInMethodBody, "IsUsedAttributeInMethodBody", 3, {}},
        {Predicate::IsUsedConstructorAsMethodParameter, "IsUsedConstructorAsMethodParameter", 3, {}},
        {Predicate::IsUsedConstructorAsInitializer, "IsUsedConstructorAsInitializer", 3, {}},
        {Predicate::IsUsedConstructorAsObjectReceiver, "IsUsedConstructorAsObjectReceiver", 3, {}},
        {Predicate::IsVisible, "IsVisible", 3, {}},
        {Predicate::IsVisibleMethod, "IsVisibleMethod", 4, {2}},
        {Predicate::IsPublic, "IsPublic", 2, {}},
        {Predicate::IsProtected, "IsProtected", 2, {}},
        {Predicate::IsPrivate, "IsPrivate", 2, {}},
        {Predicate::IsPrimitiveType, "IsPrimitiveType", 1, {}},
        {Predicate::IsGenericsSubtype, "IsGenericsSubtype", 4, {1, 3}},
        {Predicate::ExtendsFromParametricClass, "ExtendsFromParametricClass", 3, {}},
        {Predicate::AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC,
         "AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC", 4, {}},
        {Predicate::AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded,
         "AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded", 3, {}},
    };
    return table;
}

const PredInfo& info(Predicate p) {
    for (auto& pi : predTable())
        if (pi.pred == p) return pi;
    fail(ErrorKind::UnknownPredicate, "bad predicate enum");
}

std::string lowered(const std::string& s) {
    std::string o = s;
    std::transform(o.begin(), o.end(), o.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return o;
}

} // namespace

const char* predicateName(Predicate p) { return info(p).name; }
int predicateArity(Predicate p) { return info(p).arity; }
const std::vector<int>& predicateListPositions(Predicate p) { return info(p).listPositions; }

Predicate canonicalPredicate(const std::string& spelling) {
    static const std::map<std::string, const char*> aliases = {
        {"existsmethod", "ExistsMethodDefinition"},
        {"existsmethodwithparams", "ExistsMethodDefinitionWithParams"},
        {"existsmethoddefinitionwithparams", "ExistsMethodDefinitionWithParams"},
        {"extendsfromprametricclass", "ExtendsFromParametricClass"},
        {"existslocalvariable", "ExistsLocalVariable"},
        {"existsfieldinmethodscope", "ExistsFieldInMethodScope"},
    };
    std::string low = lowered(spelling);
    auto it = aliases.find(low);
    if (it != aliases.end()) low = lowered(it->second);
    for (auto& pi : predTable())
        if (lowered(pi.name) == low) return pi.pred;
    fail(ErrorKind::UnknownSpelling, "unknown predicate spelling: " + spelling);
}

std::string Term::str() const {
    if (!isList()) return atom();
    std::string s = "[";
    const auto& l = list();
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) s += ";";
        s += l[i];
    }
    return s + "]";
}

std::string Fact::str() const {
    std::string s = predicateName(pred);
    s += "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i].str();
    }
    return s + ")";
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

/// "Point2D.Double p" -> type "Point2D.Double"; plain atoms unchanged.
std::string typeOnly(const std::string& item) {
    std::string t = trimmed(item);
    size_t sp = t.find(' ');
    if (sp != std::string::npos) {
        std::string head = t.substr(0, sp);
        std::string tail = trimmed(t.substr(sp + 1));
        // keep "type name" items' type, but leave multi-word non-decl text alone
        if (!head.empty() && !tail.empty() && tail.find(' ') == std::string::npos) return head;
    }
    return t;
}

std::vector<std::string> parseListBody(const std::string& body) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : body) {
        if (c == ';') {
            std::string it = typeOnly(cur);
            if (!it.empty()) items.push_back(it);
            cur.clear();
        } else {
            cur += c;
        }
    }
    std::string it = typeOnly(cur);
    if (!it.empty()) items.push_back(it);
    return items;
}

} // namespace

Fact parseFact(const std::string& text) {
    std::string s = trimmed(text);
    size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        fail(ErrorKind::SyntaxError, "bad fact syntax: " + text);
    Fact f;
    f.pred = canonicalPredicate(trimmed(s.substr(0, open)));
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<Term> args;
    std::string cur;
    int depth = 0;
    auto flush = [&]() {
        std::string t = trimmed(cur);
        cur.clear();
        if (t.empty() && args.empty() && body.find_first_not_of(" \t") == std::string::npos)
            return;
        if (!t.empty() && t.front() == '[') {
            if (t.back() != ']') fail(ErrorKind::SyntaxError, "bad list in fact: " + text);
            args.emplace_back(parseListBody(t.substr(1, t.size() - 2)));
        } else {
            // name-position "int c" style items keep the trailing identifier
            args.emplace_back(t);
        }
    };
    for (char c : body) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            flush();
        } else {
            cur += c;
        }
    }
    if (!trimmed(cur).empty() || !args.empty()) flush();
    f.args = std::move(args);
    if (static_cast<int>(f.args.size()) != predicateArity(f.pred))
        fail(ErrorKind::ArityMismatch,
             std::string(predicateName(f.pred)) + " expects " +
                 std::to_string(predicateArity(f.pred)) + " args: " + text);
    return f;
}

std::vector<std::string> sigNames(const MethodDecl& m) {
    std::vector<std::string> out;
    for (auto& p : m.params) out.push_back(p.type.name);
    return out;
}

//===----------------------------------------------------------------------===//
// FactContext
//===----------------------------------------------------------------------===//

FactContext::FactContext(const Program& p) : prog_(&p), an_(p) { buildCallGraph(); }

namespace {
std::string nodeKey(const std::string& c, const std::string& m) { return c + "::" + m; }
} // namespace

std::set<std::pair<std::string, std::string>>
FactContext::siteTargets(const CallSite& s) const {
    std::set<std::pair<std::string, std::string>> out;
    if (!s.target.decl) return out;
    const Program& p = *prog_;
    const std::string& name = s.target.decl->name;
    out.insert({s.target.cls, name});
    const ClassDecl* ownerCls = p.findClass(s.target.cls);
    auto sig = erasedParamTypes(p, ownerCls, *s.target.decl);
    // override closure: subclasses (and implementing classes) redefining it
    for (auto& [cname, c] : p.classes) {
        if (cname == s.target.cls) continue;
        if (!p.isSubtype(cname, s.target.cls)) continue;
        for (auto& md : c.methods)
            if (md.name == name && erasedParamTypes(p, &c, md) == sig)
                out.insert({cname, name});
    }
    return out;
}

void FactContext::buildCallGraph() {
    for (auto& s : an_.callSites()) {
        auto& edges = callGraph_[nodeKey(s.inClass, s.inMethod)];
        for (auto& [cls, m] : siteTargets(s)) edges.insert(nodeKey(cls, m));
    }
}

bool evaluateFact(const Program& p, const Fact& f) { return FactContext(p).evaluate(f); }

std::set<Fact> extractAllFacts(const Program& p, const std::set<Predicate>* filter) {
    return FactContext(p).extractAll(filter);
}

//===----------------------------------------------------------------------===//
// Evaluation
//===----------------------------------------------------------------------===//

namespace {

bool isObjectName(const std::string& n) {
    return n == "java.lang.Object" || n == "Object";
}

} // namespace

class FactEval {
public:
    FactEval(const FactContext& ctx) : ctx_(ctx), p_(ctx.program()), an_(ctx.an_) {}

    bool eval(const Fact& f) const {
        if (static_cast<int>(f.args.size()) != predicateArity(f.pred))
            fail(ErrorKind::ArityMismatch, f.str());
        switch (f.pred) {
        case Predicate::ExistsClass:
            return p_.hasClass(atom(f, 0));
        case Predicate::ExistsType:
            return p_.typeExists(atom(f, 0));
        case Predicate::IsAbstractClass: {
            const ClassDecl* c = p_.findClass(atom(f, 0));
            return c && c->isAbstract;
        }
        case Predicate::IsInterface:
            return p_.hasInterface(atom(f, 0));
        case Predicate::ImplementsDirectly: {
            const ClassDecl* c = p_.findClass(atom(f, 0));
            if (!c) return false;
            for (auto& i : c->interfaces)
                if (i.name == atom(f, 1)) return true;
            return false;
        }
        case Predicate::ExtendsDirectly: {
            const ClassDecl* c = p_.findClass(atom(f, 0));
            if (!c) return false;
            if (!c->superclass) return isObjectName(atom(f, 1));
            return c->superclass->name == atom(f, 1);
        }
        case Predicate::IsSubType: {
            const std::string& x = atom(f, 0);
            const std::string& y = atom(f, 1);
            if (!p_.typeExists(x) && !isObjectName(x)) return false;
            if (isObjectName(y)) return true;
            return p_.isSubtype(x, y);
        }
        case Predicate::AllSubclasses: {
            if (!p_.hasClass(atom(f, 0))) return false;
            auto subs = p_.subclassesOf(atom(f, 0));
            std::set<std::string> have(subs.begin(), subs.end());
            std::set<std::string> want(f.args[1].list().begin(), f.args[1].list().end());
            return have == want;
        }
        case Predicate::ExistsMethodDefinition:
            return declares(atom(f, 0), atom(f, 1));
        case Predicate::ExistsMethodDefinitionWithParams:
            return findDecl(atom(f, 0), atom(f, 1), f.args[2].list()) != nullptr;
        case Predicate::ExistsAbstractMethod: {
            if (const ClassDecl* c = p_.findClass(atom(f, 0))) {
                for (auto& m : c->methods)
                    if (m.name == atom(f, 1) && m.isAbstract) return true;
            }
            if (const InterfaceDecl* i = p_.findInterface(atom(f, 0))) {
                for (auto& m : i->methods)
                    if (m.name == atom(f, 1)) return true;
            }
            return false;
        }
        case Predicate::IsInheritedMethod:
            return inheritedDecl(atom(f, 0), atom(f, 1), nullptr);
        case Predicate::IsInheritedMethodWithParams: {
            auto sig = f.args[2].list();
            return inheritedDecl(atom(f, 0), atom(f, 1), &sig);
        }
        case Predicate::IsOverridingMethod: {
            auto sig = f.args[2].list();
            return findDecl(atom(f, 0), atom(f, 1), sig) &&
                   inheritedDecl(atom(f, 0), atom(f, 1), &sig);
        }
        case Predicate::IsOverriding:
            return declares(atom(f, 0), atom(f, 1)) &&
                   inheritedDecl(atom(f, 0), atom(f, 1), nullptr);
        case Predicate::IsOverridden: {
            if (!declares(atom(f, 0), atom(f, 1))) return false;
            for (auto& [n, c] : p_.classes) {
                if (n == atom(f, 0) || !p_.isSubtype(n, atom(f, 0))) continue;
                if (c.declaresMethod(atom(f, 1))) return true;
            }
            return false;
        }
        case Predicate::IsOverloaded: {
            auto vis = visibleMethods(p_, atom(f, 0), atom(f, 1));
            std::set<std::vector<TypeRef>> sigs;
            for (auto& [cls, md] : vis)
                sigs.insert(erasedParamTypes(p_, p_.findClass(cls), *md));
            return sigs.size() > 1;
        }
        case Predicate::HasReturnType: {
            bool any = false;
            forEachDecl(atom(f, 0), atom(f, 1), [&](const MethodDecl& m) {
                any = true;
                (void)m;
            });
            if (!any) return false;
            bool all = true;
            forEachDecl(atom(f, 0), atom(f, 1), [&](const MethodDecl& m) {
                if (m.returnType.name != atom(f, 2)) all = false;
            });
            return all;
        }
        case Predicate::MethodHasParameterType: {
            bool found = false;
            forEachDecl(atom(f, 0), atom(f, 1), [&](const MethodDecl& m) {
                for (auto& prm : m.params)
                    if (prm.type.name == atom(f, 2)) found = true;
            });
            return found;
        }
        case Predicate::HasParameterType: {
            const ClassDecl* c = p_.findClass(atom(f, 0));
            if (!c) return false;
            return std::find(c->typeParams.begin(), c->typeParams.end(), atom(f, 1)) !=
                   c->typeParams.end();
        }
        case Predicate::ExistsParameterWithName: {
            const MethodDecl* m = findDecl(atom(f, 0), atom(f, 1), f.args[2].list());
            if (!m) return false;
            for (auto& prm : m->params)
                if (prm.name == atom(f, 3)) return true;
            return false;
        }
        case Predicate::ExistsParameterWithType: {
            const MethodDecl* m = findDecl(atom(f, 0), atom(f, 1), f.args[2].list());
            if (!m) return false;
            for (auto& prm : m->params)
                if (prm.type.name == atom(f, 3)) return true;
            return false;
        }
        case Predicate::ExistsField: {
            const ClassDecl* c = p_.findClass(atom(f, 0));
            if (!c) return false;
            for (auto& fd : c->fields)
                if (fd.name == atom(f, 1)) return true;
            return false;
        }
        case Predicate::IsInheritedField: {
            const ClassDecl* c = p_.findClass(atom(f, 0));
            if (!c || !c->superclass) return false;
            return findFieldInHierarchy(p_, c->superclass->name, atom(f, 1)).second != nullptr;
        }
        case Predicate::ExistsFieldInMethodScope: {
            for (auto& u : an_.fieldUses())
                if (u.inClass == atom(f, 0) && u.inMethod == atom(f, 1) &&
                    u.field == atom(f, 2))
                    return true;
            return false;
        }
        case Predicate::ExistsLocalVariable: {
            bool found = false;
            forEachDecl(atom(f, 0), atom(f, 1), [&](const MethodDecl& m) {
                if (m.body && blockDeclares(*m.body, atom(f, 2))) found = true;
            });
            return found;
        }
        case Predicate::BoundVariableInMethodBody:
            return an_.boundIdents(atom(f, 0), atom(f, 1)).count(atom(f, 2)) != 0;
        case Predicate::ExistsMethodInvocation: {
            for (auto& s : an_.callSites()) {
                if (s.inClass != atom(f, 0) || s.inMethod != atom(f, 1)) continue;
                auto targets = ctx_.siteTargets(s);
                if (targets.count({atom(f, 2), atom(f, 3)})) return true;
            }
            return false;
        }
        case Predicate::IsRecursiveMethod: {
            for (auto& s : an_.callSites())
                if (s.inClass == atom(f, 0) && s.inMethod == atom(f, 1) &&
                    s.target.decl && s.target.decl->name == atom(f, 1))
                    return true;
            return false;
        }
        case Predicate::IsIndirectlyRecursive:
            return indirectlyRecursive(atom(f, 0), atom(f, 1));
        case Predicate::IsDelegator: {
            bool found = false;
            forEachDecl(atom(f, 0), atom(f, 1), [&](const MethodDecl& m) {
                if (delegatorTarget(m) == atom(f, 2)) found = true;
            });
            return found;
        }
        case Predicate::IsInverter: {
            bool found = false;
            forEachDecl(atom(f, 0), atom(f, 1), [&](const MethodDecl& m) {
                if (isInverter(m, atom(f, 2), atom(f, 3))) found = true;
            });
            return found;
        }
        case Predicate::IsDuplicate:
        case Predicate::HasSameBody: {
            const ClassDecl* ca = p_.findClass(atom(f, 0));
            const ClassDecl* cb = p_.findClass(atom(f, 2));
            if (!ca || !cb) return false;
            for (auto& ma : ca->methods) {
                if (ma.name != atom(f, 1)) continue;
                for (auto& mb : cb->methods)
                    if (mb.name == atom(f, 3) && alphaEquivalentBodies(ma, mb)) return true;
            }
            return false;
        }
        case Predicate::IsUsedMethod: {
            for (auto& s : an_.callSites()) {
                if (!s.target.decl || s.target.decl->name != atom(f, 1)) continue;
                if (sigNames(*s.target.decl) != f.args[2].list()) continue;
                if (ctx_.siteTargets(s).count({atom(f, 0), atom(f, 1)})) return true;
            }
            return false;
        }
        case Predicate::IsUsedMethodIn: {
            for (auto& s : an_.callSites()) {
                if (s.inClass != atom(f, 2)) continue;
                if (!s.target.decl || s.target.decl->name != atom(f, 1)) continue;
                if (ctx_.siteTargets(s).count({atom(f, 0), atom(f, 1)})) return true;
            }
            return false;
        }
        case Predicate::MethodIsUsedWithType: {
            for (auto& s : an_.callSites()) {
                if (!s.target.decl || s.target.decl->name != atom(f, 1)) continue;
                if (sigNames(*s.target.decl) != f.args[2].list()) continue;
                std::vector<std::string> actuals;
                for (auto& t : s.argTypes) actuals.push_back(t.name);
                if (actuals != f.args[3].list()) continue;
                if (ctx_.siteTargets(s).count({atom(f, 0), atom(f, 1)})) return true;
            }
            return false;
        }
        case Predicate::IsUsedAttributeInMethodBody: {
            for (auto& u : an_.fieldUses())
                if (u.inClass == atom(f, 0) && u.field == atom(f, 1) &&
                    u.inMethod == atom(f, 2))
                    return true;
            return false;
        }
        case Predicate::IsUsedConstructorAsMethodParameter:
            return newSiteExists(f, NewUsage::Argument);
        case Predicate::IsUsedConstructorAsInitializer:
            return newSiteExists(f, NewUsage::Initializer);
        case Predicate::IsUsedConstructorAsObjectReceiver:
            return newSiteExists(f, NewUsage::Receiver);
        case Predicate::IsVisible:
            return memberVisible(atom(f, 0), atom(f, 1), nullptr, atom(f, 2));
        case Predicate::IsVisibleMethod: {
            auto sig = f.args[2].list();
            return memberVisible(atom(f, 0), atom(f, 1), &sig, atom(f, 3));
        }
        case Predicate::IsPublic:
            return memberHasVisibility(atom(f, 0), atom(f, 1), Visibility::Public);
        case Predicate::IsProtected:
            return memberHasVisibility(atom(f, 0), atom(f, 1), Visibility::Protected);
        case Predicate::IsPrivate:
            return memberHasVisibility(atom(f, 0), atom(f, 1), Visibility::Private);
        case Predicate::IsPrimitiveType:
            return isPrimitiveTypeName(atom(f, 0));
        case Predicate::IsGenericsSubtype: {
            const ClassDecl* a = p_.findClass(atom(f, 0));
            const ClassDecl* s = p_.findClass(atom(f, 2));
            if (!a || !s || !a->superclass || a->superclass->name != atom(f, 2)) return false;
            std::vector<std::string> argNames;
            for (auto& t : a->superclass->args) argNames.push_back(t.name);
            return argNames == f.args[1].list() && s->typeParams == f.args[3].list();
        }
        case Predicate::ExtendsFromParametricClass: {
            const ClassDecl* a = p_.findClass(atom(f, 0));
            if (!a || !a->superclass || a->superclass->name != atom(f, 1)) return false;
            return !a->superclass->args.empty() && a->superclass->args[0].name == atom(f, 2);
        }
        case Predicate::AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC: {
            for (auto& s : an_.callSites()) {
                if (s.inClass != atom(f, 0) || s.inMethod != atom(f, 1)) continue;
                bool onO = (atom(f, 2) == "this") ? s.receiverIsThis
                                                  : (s.receiverName == atom(f, 2));
                if (!onO) continue;
                if (!declaredInOrInheritedBy(atom(f, 3), s.target)) return false;
            }
            return true;
        }
        case Predicate::AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded: {
            for (auto& s : an_.callSites()) {
                if (s.inClass != atom(f, 0) || s.inMethod != atom(f, 1)) continue;
                bool passes = std::find(s.argIdents.begin(), s.argIdents.end(), atom(f, 2)) !=
                              s.argIdents.end();
                if (!passes) continue;
                Fact ov{Predicate::IsOverloaded, {Term(s.target.cls), Term(s.target.decl->name)}};
                if (eval(ov)) return false;
            }
            return true;
        }
        }
        fail(ErrorKind::UnknownPredicate, f.str());
    }

private:
    const std::string& atom(const Fact& f, int i) const { return f.args[size_t(i)].atom(); }

    bool declares(const std::string& cls, const std::string& m) const {
        if (const ClassDecl* c = p_.findClass(cls)) {
            if (c->declaresMethod(m)) return true;
        }
        if (const InterfaceDecl* i = p_.findInterface(cls)) {
            for (auto& md : i->methods)
                if (md.name == m) return true;
        }
        return false;
    }

    template <typename F>
    void forEachDecl(const std::string& cls, const std::string& m, F f) const {
        if (const ClassDecl* c = p_.findClass(cls)) {
            for (auto& md : c->methods)
                if (md.name == m) f(md);
        }
        if (const InterfaceDecl* i = p_.findInterface(cls)) {
            for (auto& md : i->methods)
                if (md.name == m) f(md);
        }
    }

    const MethodDecl* findDecl(const std::string& cls, const std::string& m,
                               const std::vector<std::string>& sig) const {
        const MethodDecl* out = nullptr;
        forEachDecl(cls, m, [&](const MethodDecl& md) {
            if (sigNames(md) == sig) out = &md;
        });
        return out;
    }

    /// Some strict ancestor (class or interface) provides a non-private m.
    bool inheritedDecl(const std::string& cls, const std::string& m,
                       const std::vector<std::string>* sig) const {
        std::vector<std::string> ancestors;
        if (const ClassDecl* c = p_.findClass(cls)) {
            std::string cur = c->superclass ? c->superclass->name : "";
            while (!cur.empty()) {
                ancestors.push_back(cur);
                const ClassDecl* cd = p_.findClass(cur);
                cur = (cd && cd->superclass) ? cd->superclass->name : "";
            }
            std::deque<std::string> ifaces;
            for (auto& i : c->interfaces) ifaces.push_back(i.name);
            for (auto& a : ancestors)
                if (const ClassDecl* ad = p_.findClass(a))
                    for (auto& i : ad->interfaces) ifaces.push_back(i.name);
            while (!ifaces.empty()) {
                std::string i = ifaces.front();
                ifaces.pop_front();
                ancestors.push_back(i);
                if (const InterfaceDecl* id = p_.findInterface(i))
                    for (auto& e : id->extends) ifaces.push_back(e.name);
            }
        } else {
            return false;
        }
        for (auto& a : ancestors) {
            bool found = false;
            forEachDecl(a, m, [&](const MethodDecl& md) {
                if (md.visibility == Visibility::Private) return;
                if (!sig || sigNames(md) == *sig) found = true;
            });
            if (found) return true;
        }
        return false;
    }

    bool blockDeclares(const Block& b, const std::string& v) const {
        for (auto& s : b.stmts) {
            if (s->kind == StmtKind::LocalDecl && s->name == v) return true;
            if (s->kind == StmtKind::ForEach) {
                if (s->name == v) return true;
                if (blockDeclares(s->body, v)) return true;
            }
        }
        return false;
    }

    bool indirectlyRecursive(const std::string& cls, const std::string& m) const {
        std::string start = cls + "::" + m;
        auto it = ctx_.callGraph_.find(start);
        if (it == ctx_.callGraph_.end()) return false;
        // BFS; a path of length >= 2 back to the start node
        std::deque<std::pair<std::string, int>> work;
        std::set<std::string> seen;
        for (auto& n : it->second) work.push_back({n, 1});
        while (!work.empty()) {
            auto [node, depth] = work.front();
            work.pop_front();
            if (node == start && depth >= 2) return true;
            if (!seen.insert(node).second) continue;
            auto eit = ctx_.callGraph_.find(node);
            if (eit == ctx_.callGraph_.end()) continue;
            for (auto& n : eit->second) work.push_back({n, depth + 1});
        }
        return false;
    }

    /// Name of the single delegated-to method, or "" when not a delegator.
    std::string delegatorTarget(const MethodDecl& m) const {
        if (!m.body || m.body->stmts.size() != 1) return "";
        const Stmt& s = *m.body->stmts[0];
        const Expr* call = nullptr;
        if (s.kind == StmtKind::ExprStmt && s.expr->kind == ExprKind::Invoke)
            call = s.expr.get();
        else if (s.kind == StmtKind::Return && s.expr && s.expr->kind == ExprKind::Invoke)
            call = s.expr.get();
        if (!call) return "";
        const Expr* recv = call->receiver.get();
        bool okRecv = !recv || recv->kind == ExprKind::This || recv->kind == ExprKind::New ||
                      recv->kind == ExprKind::Name;
        if (!okRecv) return "";
        if (recv && recv->kind == ExprKind::Name) {
            bool isParam = std::any_of(m.params.begin(), m.params.end(),
                                       [&](const Param& p) { return p.name == recv->name; });
            if (!isParam) return "";
        }
        return call->name;
    }

    bool isInverter(const MethodDecl& m, const std::string& t, const std::string& r) const {
        if (m.returnType.name != r) return false;
        if (!m.body || m.body->stmts.size() != 1) return false;
        const Stmt& s = *m.body->stmts[0];
        const Expr* call = nullptr;
        if (s.kind == StmtKind::ExprStmt && s.expr->kind == ExprKind::Invoke)
            call = s.expr.get();
        else if (s.kind == StmtKind::Return && s.expr && s.expr->kind == ExprKind::Invoke)
            call = s.expr.get();
        if (!call || !call->receiver || call->receiver->kind != ExprKind::Name) return false;
        // receiver must be a parameter of static type t
        const std::string& rn = call->receiver->name;
        bool typeOk = false;
        for (auto& prm : m.params)
            if (prm.name == rn && prm.type.name == t) typeOk = true;
        if (!typeOk) return false;
        if (call->args.size() != 1 || call->args[0]->kind != ExprKind::This) return false;
        return true;
    }

    bool newSiteExists(const Fact& f, NewUsage usage) const {
        for (auto& n : an_.newSites())
            if (n.type == atom(f, 0) && n.inClass == atom(f, 1) && n.inMethod == atom(f, 2) &&
                n.usage == usage)
                return true;
        return false;
    }

    bool memberVisible(const std::string& cls, const std::string& m,
                       const std::vector<std::string>* sig, const std::string& from) const {
        bool found = false, visible = false;
        forEachDecl(cls, m, [&](const MethodDecl& md) {
            if (sig && sigNames(md) != *sig) return;
            found = true;
            if (md.visibility != Visibility::Private || cls == from) visible = true;
        });
        if (const ClassDecl* c = p_.findClass(cls)) {
            for (auto& fd : c->fields) {
                if (fd.name != m || sig) continue;
                found = true;
                if (fd.visibility != Visibility::Private || cls == from) visible = true;
            }
        }
        return found && visible;
    }

    bool memberHasVisibility(const std::string& cls, const std::string& m, Visibility v) const {
        bool yes = false;
        forEachDecl(cls, m, [&](const MethodDecl& md) {
            if (md.visibility == v) yes = true;
        });
        if (const ClassDecl* c = p_.findClass(cls))
            for (auto& fd : c->fields)
                if (fd.name == m && fd.visibility == v) yes = true;
        return yes;
    }

    bool declaredInOrInheritedBy(const std::string& cls, const ResolvedMethod& target) const {
        if (!target.decl) return false;
        if (target.cls == cls) return true;
        // target declared in an ancestor of cls (so cls inherits it)
        if (p_.isSubtype(cls, target.cls)) return true;
        // or cls itself (or an ancestor) declares a same-named method
        std::string cur = cls;
        while (!cur.empty()) {
            if (declares(cur, target.decl->name)) return true;
            const ClassDecl* c = p_.findClass(cur);
            if (!c) break;
            cur = c->superclass ? c->superclass->name : "";
        }
        return false;
    }

    const FactContext& ctx_;
    const Program& p_;
    const Analysis& an_;
};

bool FactContext::evaluate(const Fact& f) const { return FactEval(*this).eval(f); }

//===----------------------------------------------------------------------===//
// Exhaustive extraction
//===----------------------------------------------------------------------===//

std::set<Fact> FactContext::extractAll(const std::set<Predicate>* filter) const {
    const Program& p = *prog_;
    std::set<Fact> out;
    auto want = [&](Predicate pr) { return !filter || filter->count(pr); };
    auto emit = [&](Predicate pr, std::vector<Term> args) {
        Fact f{pr, std::move(args)};
        if (evaluate(f)) out.insert(std::move(f));
    };

    std::vector<std::string> classNames;
    for (auto& [n, c] : p.classes) classNames.push_back(n);
    std::vector<std::string> typeNames = classNames;
    for (auto& [n, i] : p.interfaces) typeNames.push_back(n);
    for (auto& e : p.externTypes) typeNames.push_back(e);

    std::set<std::string> methodNames;
    std::set<std::vector<std::string>> sigs;
    std::set<std::string> fieldNames;
    std::set<std::string> paramNames;
    for (auto& [n, c] : p.classes) {
        for (auto& m : c.methods) {
            methodNames.insert(m.name);
            sigs.insert(sigNames(m));
            for (auto& prm : m.params) paramNames.insert(prm.name);
        }
        for (auto& fd : c.fields) fieldNames.insert(fd.name);
    }
    for (auto& [n, i] : p.interfaces)
        for (auto& m : i.methods) {
            methodNames.insert(m.name);
            sigs.insert(sigNames(m));
        }

    for (auto& t : typeNames) {
        if (want(Predicate::ExistsClass)) emit(Predicate::ExistsClass, {Term(t)});
        if (want(Predicate::ExistsType)) emit(Predicate::ExistsType, {Term(t)});
        if (want(Predicate::IsAbstractClass)) emit(Predicate::IsAbstractClass, {Term(t)});
        if (want(Predicate::IsInterface)) emit(Predicate::IsInterface, {Term(t)});
    }
    for (auto& c : classNames) {
        if (want(Predicate::AllSubclasses)) {
            auto subs = p.subclassesOf(c);
            if (!subs.empty()) emit(Predicate::AllSubclasses, {Term(c), Term(subs)});
        }
        for (auto& d : typeNames) {
            if (want(Predicate::ExtendsDirectly)) emit(Predicate::ExtendsDirectly, {c, d});
            if (want(Predicate::ImplementsDirectly)) emit(Predicate::ImplementsDirectly, {c, d});
            if (want(Predicate::IsSubType) && c != d) emit(Predicate::IsSubType, {c, d});
        }
        if (want(Predicate::ExtendsDirectly))
            emit(Predicate::ExtendsDirectly, {Term(c), Term("java.lang.Object")});
        for (auto& m : methodNames) {
            if (want(Predicate::ExistsMethodDefinition))
                emit(Predicate::ExistsMethodDefinition, {c, m});
            if (want(Predicate::ExistsAbstractMethod))
                emit(Predicate::ExistsAbstractMethod, {c, m});
            if (want(Predicate::IsInheritedMethod)) emit(Predicate::IsInheritedMethod, {c, m});
            if (want(Predicate::IsOverriding)) emit(Predicate::IsOverriding, {c, m});
            if (want(Predicate::IsOverridden)) emit(Predicate::IsOverridden, {c, m});
            if (want(Predicate::IsOverloaded)) emit(Predicate::IsOverloaded, {c, m});
            if (want(Predicate::IsRecursiveMethod)) emit(Predicate::IsRecursiveMethod, {c, m});
            if (want(Predicate::IsIndirectlyRecursive))
                emit(Predicate::IsIndirectlyRecursive, {c, m});
            if (want(Predicate::IsPublic)) emit(Predicate::IsPublic, {c, m});
            if (want(Predicate::IsProtected)) emit(Predicate::IsProtected, {c, m});
            if (want(Predicate::IsPrivate)) emit(Predicate::IsPrivate, {c, m});
            for (auto& sig : sigs) {
                if (want(Predicate::ExistsMethodDefinitionWithParams))
                    emit(Predicate::ExistsMethodDefinitionWithParams, {c, m, Term(sig)});
                if (want(Predicate::IsInheritedMethodWithParams))
                    emit(Predicate::IsInheritedMethodWithParams, {c, m, Term(sig)});
                if (want(Predicate::IsUsedMethod)) emit(Predicate::IsUsedMethod, {c, m, Term(sig)});
                for (auto& pn : paramNames)
                    if (want(Predicate::ExistsParameterWithName))
                        emit(Predicate::ExistsParameterWithName, {c, m, Term(sig), pn});
                for (auto& tn : typeNames)
                    if (want(Predicate::ExistsParameterWithType))
                        emit(Predicate::ExistsParameterWithType, {c, m, Term(sig), tn});
            }
            for (auto& t : typeNames) {
                if (want(Predicate::HasReturnType)) emit(Predicate::HasReturnType, {c, m, t});
                if (want(Predicate::MethodHasParameterType))
                    emit(Predicate::MethodHasParameterType, {c, m, t});
            }
            for (auto& n : methodNames)
                if (want(Predicate::IsDelegator)) emit(Predicate::IsDelegator, {c, m, n});
            if (want(Predicate::HasReturnType)) {
                emit(Predicate::HasReturnType, {c, m, "void"});
                emit(Predicate::HasReturnType, {c, m, "int"});
                emit(Predicate::HasReturnType, {c, m, "String"});
                emit(Predicate::HasReturnType, {c, m, "Integer"});
            }
        }
        for (auto& fd : fieldNames) {
            if (want(Predicate::ExistsField)) emit(Predicate::ExistsField, {c, fd});
            if (want(Predicate::IsInheritedField)) emit(Predicate::IsInheritedField, {c, fd});
            if (want(Predicate::IsPrivate)) emit(Predicate::IsPrivate, {c, fd});
        }
    }
    // call-site derived predicates: enumerate from the analysis directly
    for (auto& s : an_.callSites()) {
        for (auto& [cls, m] : siteTargets(s)) {
            if (want(Predicate::ExistsMethodInvocation))
                emit(Predicate::ExistsMethodInvocation,
                     {Term(s.inClass), Term(s.inMethod), Term(cls), Term(m)});
            if (s.target.decl) {
                auto sg = sigNames(*s.target.decl);
                if (want(Predicate::IsUsedMethodIn))
                    emit(Predicate::IsUsedMethodIn, {Term(cls), Term(m), Term(s.inClass)});
                if (want(Predicate::MethodIsUsedWithType)) {
                    std::vector<std::string> actuals;
                    for (auto& t : s.argTypes) actuals.push_back(t.name);
                    emit(Predicate::MethodIsUsedWithType,
                         {Term(cls), Term(m), Term(sg), Term(actuals)});
                }
            }
        }
    }
    for (auto& n : an_.newSites()) {
        Predicate pr = n.usage == NewUsage::Argument ? Predicate::IsUsedConstructorAsMethodParameter
                       : n.usage == NewUsage::Initializer ? Predicate::IsUsedConstructorAsInitializer
                                                          : Predicate::IsUsedConstructorAsObjectReceiver;
        if (n.usage == NewUsage::Standalone) continue;
        if (want(pr)) emit(pr, {Term(n.type), Term(n.inClass), Term(n.inMethod)});
    }
    for (auto& u : an_.fieldUses())
        if (want(Predicate::IsUsedAttributeInMethodBody))
            emit(Predicate::IsUsedAttributeInMethodBody,
                 {Term(u.inClass), Term(u.field), Term(u.inMethod)});
    return out;
}

} // namespace repat
