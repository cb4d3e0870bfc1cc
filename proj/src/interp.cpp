#include "repat/interp.hpp"

#include "repat/resolve.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <variant>

namespace repat {

uint64_t OutputTrace::hash() const {
    uint64_t h = 1469598103934665603ull;
    for (auto& c : chunks)
        for (char ch : c) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
    return h;
}

namespace {

struct ObjectData;
using ObjectRef = std::shared_ptr<ObjectData>;
struct ListData;
using ListRef = std::shared_ptr<ListData>;

struct Value {
    std::variant<std::monostate, long, bool, std::string, ObjectRef, ListRef> v;

    bool isNull() const { return std::holds_alternative<std::monostate>(v); }
};

struct ObjectData {
    std::string cls;
    int id = 0;
    std::map<std::string, Value> fields;
};

struct ListData {
    std::vector<Value> items;
};

std::string render(const Value& val) {
    if (val.isNull()) return "null";
    if (auto* i = std::get_if<long>(&val.v)) return std::to_string(*i);
    if (auto* b = std::get_if<bool>(&val.v)) return *b ? "true" : "false";
    if (auto* s = std::get_if<std::string>(&val.v)) return *s;
    if (auto* o = std::get_if<ObjectRef>(&val.v))
        return (*o)->cls + "@" + std::to_string((*o)->id);
    return "<list>";
}

class Interp {
public:
    Interp(const Program& p, long budget) : p_(p), an_(p), budget_(budget) {}

    OutputTrace run() {
        std::string entryCls = p_.entry ? p_.entry->first : "Main";
        std::string entryMethod = p_.entry ? p_.entry->second : "main";
        const ClassDecl* c = p_.findClass(entryCls);
        if (!c) fail(ErrorKind::EvalError, "no entry class " + entryCls);
        const MethodDecl* m = nullptr;
        for (auto& md : c->methods)
            if (md.name == entryMethod && md.params.empty()) m = &md;
        if (!m || !m->body) fail(ErrorKind::EvalError, "no entry method " + entryMethod);
        Frame f;
        f.selfClass = entryCls;
        execBlock(*m->body, f);
        return trace_;
    }

private:
    struct Frame {
        Value self;
        std::string selfClass;
        std::vector<std::map<std::string, Value>> scopes{1};

        Value* find(const std::string& n) {
            for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
                auto f = it->find(n);
                if (f != it->end()) return &f->second;
            }
            return nullptr;
        }
    };

    struct ExecResult {
        bool returned = false;
        Value value;
    };

    void tick() {
        if (--budget_ <= 0) fail(ErrorKind::StepBudgetExceeded, "interpreter step budget");
    }

    ExecResult execBlock(const Block& b, Frame& f) {
        f.scopes.emplace_back();
        for (auto& s : b.stmts) {
            ExecResult r = execStmt(*s, f);
            if (r.returned) {
                f.scopes.pop_back();
                return r;
            }
        }
        f.scopes.pop_back();
        return {};
    }

    ExecResult execStmt(const Stmt& s, Frame& f) {
        tick();
        switch (s.kind) {
        case StmtKind::LocalDecl: {
            Value v;
            if (s.expr) v = eval(*s.expr, f);
            f.scopes.back()[s.name] = std::move(v);
            return {};
        }
        case StmtKind::Assign: {
            Value v = eval(*s.expr, f);
            assign(*s.target, std::move(v), f);
            return {};
        }
        case StmtKind::ExprStmt:
            eval(*s.expr, f);
            return {};
        case StmtKind::ForEach: {
            Value list = eval(*s.expr, f);
            auto* lr = std::get_if<ListRef>(&list.v);
            if (!lr) fail(ErrorKind::EvalError, "for-each over non-list", s.loc);
            std::vector<Value> items = (*lr)->items; // iterate over a snapshot
            for (auto& item : items) {
                f.scopes.emplace_back();
                f.scopes.back()[s.name] = item;
                for (auto& st : s.body.stmts) {
                    ExecResult r = execStmt(*st, f);
                    if (r.returned) {
                        f.scopes.pop_back();
                        return r;
                    }
                }
                f.scopes.pop_back();
            }
            return {};
        }
        case StmtKind::Return: {
            ExecResult r;
            r.returned = true;
            if (s.expr) r.value = eval(*s.expr, f);
            return r;
        }
        }
        return {};
    }

    void assign(const Expr& target, Value v, Frame& f) {
        if (target.kind == ExprKind::Name) {
            if (Value* slot = f.find(target.name)) {
                *slot = std::move(v);
                return;
            }
            // field of this
            if (auto* o = std::get_if<ObjectRef>(&f.self.v)) {
                (*o)->fields[target.name] = std::move(v);
                return;
            }
            fail(ErrorKind::EvalError, "cannot assign " + target.name, target.loc);
        }
        if (target.kind == ExprKind::FieldAccess) {
            Value base = eval(*target.receiver, f);
            auto* o = std::get_if<ObjectRef>(&base.v);
            if (!o) fail(ErrorKind::EvalError, "field store on non-object", target.loc);
            (*o)->fields[target.name] = std::move(v);
            return;
        }
        fail(ErrorKind::EvalError, "bad assignment target", target.loc);
    }

    Value eval(const Expr& e, Frame& f) {
        tick();
        switch (e.kind) {
        case ExprKind::This:
            return f.self;
        case ExprKind::Name: {
            if (Value* slot = f.find(e.name)) return *slot;
            if (auto* o = std::get_if<ObjectRef>(&f.self.v)) {
                auto it = (*o)->fields.find(e.name);
                if (it != (*o)->fields.end()) return it->second;
            }
            fail(ErrorKind::EvalError, "unbound name " + e.name, e.loc);
        }
        case ExprKind::FieldAccess: {
            Value base = eval(*e.receiver, f);
            auto* o = std::get_if<ObjectRef>(&base.v);
            if (!o) fail(ErrorKind::EvalError, "field read on non-object", e.loc);
            auto it = (*o)->fields.find(e.name);
            if (it != (*o)->fields.end()) return it->second;
            return Value{};
        }
        case ExprKind::Invoke:
            return invoke(e, f);
        case ExprKind::New:
            return construct(e, f);
        case ExprKind::StringLit: {
            Value v;
            v.v = e.strValue;
            return v;
        }
        case ExprKind::IntLit: {
            Value v;
            v.v = e.intValue;
            return v;
        }
        case ExprKind::BoolLit: {
            Value v;
            v.v = e.boolValue;
            return v;
        }
        case ExprKind::NullLit:
            return Value{};
        case ExprKind::Concat: {
            Value l = eval(*e.lhs, f);
            Value r = eval(*e.rhs, f);
            if (std::holds_alternative<std::string>(l.v) ||
                std::holds_alternative<std::string>(r.v)) {
                Value v;
                v.v = render(l) + render(r);
                return v;
            }
            auto* li = std::get_if<long>(&l.v);
            auto* ri = std::get_if<long>(&r.v);
            if (!li || !ri) fail(ErrorKind::EvalError, "bad + operands", e.loc);
            Value v;
            v.v = *li + *ri;
            return v;
        }
        case ExprKind::Print: {
            Value a = eval(*e.args[0], f);
            trace_.chunks.push_back(render(a) + (e.newline ? "\n" : ""));
            return Value{};
        }
        }
        return Value{};
    }

    Value construct(const Expr& e, Frame& f) {
        const std::string& tn = e.newType.name;
        std::vector<Value> args;
        for (auto& a : e.args) args.push_back(eval(*a, f));
        if (isListTypeName(tn)) {
            Value v;
            v.v = std::make_shared<ListData>();
            return v;
        }
        const ClassDecl* c = p_.findClass(tn);
        if (!c) fail(ErrorKind::EvalError, "cannot instantiate " + tn, e.loc);
        auto obj = std::make_shared<ObjectData>();
        obj->cls = tn;
        obj->id = ++allocCounter_;
        Value self;
        self.v = obj;
        // field initializers along the chain, base first
        std::vector<const ClassDecl*> chain;
        for (const ClassDecl* cur = c; cur;) {
            chain.push_back(cur);
            cur = cur->superclass ? p_.findClass(cur->superclass->name) : nullptr;
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            for (auto& fd : (*it)->fields) {
                Value v;
                if (fd.init) {
                    Frame init;
                    init.self = self;
                    init.selfClass = (*it)->name;
                    v = eval(*fd.init, init);
                }
                obj->fields[fd.name] = std::move(v);
            }
        }
        // matching constructor by arity
        const MethodDecl* ctor = nullptr;
        for (auto& ct : c->constructors)
            if (ct.params.size() == args.size()) ctor = &ct;
        if (ctor && ctor->body) {
            Frame cf;
            cf.self = self;
            cf.selfClass = tn;
            for (size_t i = 0; i < args.size(); ++i)
                cf.scopes.back()[ctor->params[i].name] = args[i];
            execBlock(*ctor->body, cf);
        } else if (!c->constructors.empty() && !ctor) {
            fail(ErrorKind::EvalError, "no constructor of arity for " + tn, e.loc);
        }
        return self;
    }

    Value invoke(const Expr& e, Frame& f) {
        Value recv;
        if (e.receiver) recv = eval(*e.receiver, f);
        else recv = f.self;
        std::vector<Value> args;
        for (auto& a : e.args) args.push_back(eval(*a, f));

        if (auto* lr = std::get_if<ListRef>(&recv.v)) {
            if (e.name == "add" && args.size() == 1) {
                (*lr)->items.push_back(args[0]);
                return Value{};
            }
            if (e.name == "size" && args.empty()) {
                Value v;
                v.v = static_cast<long>((*lr)->items.size());
                return v;
            }
            fail(ErrorKind::EvalError, "unknown list method " + e.name, e.loc);
        }
        auto* obj = std::get_if<ObjectRef>(&recv.v);
        if (!obj) fail(ErrorKind::EvalError, "invocation on non-object: " + e.name, e.loc);

        // static target from the analysis, dynamic lookup by erased signature
        const CallSite* site = siteFor(&e);
        if (!site) fail(ErrorKind::EvalError, "unresolved call site " + e.name, e.loc);
        const ClassDecl* targetOwner = p_.findClass(site->target.cls);
        std::vector<TypeRef> wantSig =
            targetOwner || !site->target.decl
                ? erasedParamTypes(p_, targetOwner, *site->target.decl)
                : erasedParamTypes(p_, nullptr, *site->target.decl);

        std::string cls = (*obj)->cls;
        while (!cls.empty()) {
            const ClassDecl* c = p_.findClass(cls);
            if (!c) break;
            for (auto& md : c->methods) {
                if (md.name != e.name || md.isAbstract) continue;
                if (erasedParamTypes(p_, c, md) != wantSig) continue;
                Frame mf;
                mf.self = recv;
                mf.selfClass = cls;
                for (size_t i = 0; i < args.size(); ++i)
                    mf.scopes.back()[md.params[i].name] = args[i];
                ExecResult r = execBlock(*md.body, mf);
                return r.value;
            }
            if (!c->superclass) break;
            cls = c->superclass->name;
        }
        fail(ErrorKind::DynamicDispatchFailure,
             "no concrete " + e.name + " on " + (*obj)->cls, e.loc);
    }

    const CallSite* siteFor(const Expr* e) {
        if (siteIndex_.empty())
            for (auto& s : an_.callSites()) siteIndex_[s.call] = &s;
        auto it = siteIndex_.find(e);
        return it == siteIndex_.end() ? nullptr : it->second;
    }

    const Program& p_;
    Analysis an_;
    long budget_;
    OutputTrace trace_;
    int allocCounter_ = 0;
    std::map<const Expr*, const CallSite*> siteIndex_;
};

} // namespace

OutputTrace evaluate(const Program& p, long stepBudget) {
    long budget = stepBudget;
    if (budget <= 0) {
        if (const char* env = std::getenv("REPAT_STEP_BUDGET")) budget = std::atol(env);
        if (budget <= 0) budget = 1000000;
    }
    Interp interp(p, budget);
    return interp.run();
}

} // namespace repat
