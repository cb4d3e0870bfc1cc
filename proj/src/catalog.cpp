#include "repat/catalog.hpp"

#include "repat/catalog_detail.hpp"

#include <algorithm>
#include <sstream>

namespace repat {

using detail::OpTemplate;

const char* opKindName(OpKind k) { return detail::templateFor(k).name.c_str(); }

std::vector<OpKind> allOpKinds() {
    std::vector<OpKind> out;
    for (auto& t : detail::opTemplates()) out.push_back(t.kind);
    return out;
}

namespace detail {

const OpTemplate& templateFor(OpKind kind) {
    for (auto& t : opTemplates())
        if (t.kind == kind) return t;
    fail(ErrorKind::NotSupported, "no template for op kind");
}

} // namespace detail

std::string OpArgs::scalar(const std::string& name) const {
    auto it = scalars.find(name);
    if (it == scalars.end() || it->second.isList())
        fail(ErrorKind::ConfigInvalid, "missing scalar op argument '" + name + "'");
    return it->second.atom();
}

std::vector<std::string> OpArgs::group(const std::string& name) const {
    auto it = groups.find(name);
    return it == groups.end() ? std::vector<std::string>{} : it->second;
}

std::vector<std::string> OpArgs::listArg(const std::string& name) const {
    auto it = scalars.find(name);
    if (it != scalars.end() && it->second.isList()) return it->second.list();
    auto g = groups.find(name);
    if (g != groups.end()) return g->second;
    return {};
}

namespace {

/// Collects group formals mentioned by an atom (constant args or list items
/// whose text equals a group formal name).
std::vector<std::string> groupsInAtom(const FactPattern& a,
                                      const std::vector<std::string>& groupFormals) {
    std::vector<std::string> out;
    auto check = [&](const std::string& text) {
        if (std::find(groupFormals.begin(), groupFormals.end(), text) != groupFormals.end() &&
            std::find(out.begin(), out.end(), text) == out.end())
            out.push_back(text);
    };
    for (auto& t : a.args) {
        if (t.kind == PTerm::Kind::Const) check(t.text);
        if (t.kind == PTerm::Kind::List)
            for (auto& el : t.items)
                if (el.kind == PTerm::Kind::Const) check(el.text);
    }
    return out;
}

FactPattern substConst(const FactPattern& a, const std::string& formal,
                       const std::string& value) {
    FactPattern out = a;
    for (auto& t : out.args) {
        if (t.kind == PTerm::Kind::Const && t.text == formal) t.text = value;
        if (t.kind == PTerm::Kind::List)
            for (auto& el : t.items)
                if (el.kind == PTerm::Kind::Const && el.text == formal) el.text = value;
    }
    return out;
}

/// Expands group formals in a formula: each atom mentioning group formals is
/// replaced by the conjunction of its per-value instances (the expansion of
/// several groups in one atom is their cartesian product). Duplicate
/// conjuncts disappear in simplify().
class GroupExpander {
public:
    GroupExpander(const std::vector<std::string>& formals,
                  const std::map<std::string, std::vector<std::string>>& values)
        : formals_(formals), values_(values) {}

    Formula expand(const Formula& f) const {
        switch (f.kind) {
        case FKind::Atom:
            return expandLiteral(f.atom, /*positive=*/true);
        case FKind::Not:
            // expansion distributes over the literal: the per-element
            // instances of a negated atom are individually negated conjuncts
            if (f.children[0].kind == FKind::Atom)
                return expandLiteral(f.children[0].atom, /*positive=*/false);
            return Formula::mkNot(expand(f.children[0]));
        case FKind::And:
        case FKind::Or: {
            std::vector<Formula> cs;
            for (auto& c : f.children) cs.push_back(expand(c));
            return f.kind == FKind::And ? Formula::mkAnd(std::move(cs))
                                        : Formula::mkOr(std::move(cs));
        }
        default:
            return f;
        }
    }

    Formula expandLiteral(const FactPattern& atom, bool positive) const {
        std::vector<FactPattern> instances{atom};
        for (const std::string& g : groupsInAtom(atom, formals_)) {
            std::vector<FactPattern> next;
            auto it = values_.find(g);
            const std::vector<std::string>& vals = it == values_.end() ? kEmpty : it->second;
            for (auto& inst : instances)
                for (auto& v : vals) next.push_back(substConst(inst, g, v));
            instances = std::move(next);
        }
        std::vector<Formula> parts;
        for (auto& inst : instances) {
            Formula a = Formula::mkAtom(inst);
            parts.push_back(positive ? std::move(a) : Formula::mkNot(std::move(a)));
        }
        return Formula::mkAnd(std::move(parts)); // empty group -> no constraint
    }

private:
    static const std::vector<std::string> kEmpty;
    const std::vector<std::string>& formals_;
    const std::map<std::string, std::vector<std::string>>& values_;
};

const std::vector<std::string> GroupExpander::kEmpty;

struct RuleLine {
    std::string lhs;
    std::string rhs;
    bool cond = false;
    std::vector<std::string> dupGroups; // from @group markers
};

std::vector<RuleLine> parseRuleLines(const std::string& text) {
    std::vector<RuleLine> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto notSpace = line.find_first_not_of(" \t\r");
        if (notSpace == std::string::npos) continue;
        size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            fail(ErrorKind::ConfigInvalid, "bad rule line: " + line);
        RuleLine r;
        r.lhs = line.substr(0, arrow);
        std::string rhs = line.substr(arrow + 2);
        // trailing markers: "cond", "@group"
        while (true) {
            size_t last = rhs.find_last_not_of(" \t\r");
            if (last == std::string::npos) break;
            size_t wordStart = rhs.find_last_of(" \t", last);
            std::string word = rhs.substr(wordStart + 1, last - wordStart);
            if (word == "cond") {
                r.cond = true;
                rhs = rhs.substr(0, wordStart == std::string::npos ? 0 : wordStart);
            } else if (!word.empty() && word[0] == '@') {
                r.dupGroups.push_back(word.substr(1));
                rhs = rhs.substr(0, wordStart == std::string::npos ? 0 : wordStart);
            } else {
                break;
            }
        }
        r.rhs = rhs;
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

CatalogOp makeOp(OpKind kind, OpArgs args, std::string provenance) {
    const OpTemplate& tpl = detail::templateFor(kind);

    // binding for scalar formals (missing formals stay unbound; atoms using
    // them are dropped from pre and their rules skipped)
    Binding binding;
    std::set<std::string> missing;
    for (auto& p : tpl.params) {
        auto it = args.scalars.find(p);
        if (it != args.scalars.end()) binding[p] = it->second;
        else missing.insert(p);
    }
    std::vector<std::string> groupFormals;
    std::map<std::string, std::vector<std::string>> groupValues;
    for (auto& [formal, argName] : tpl.groups) {
        groupFormals.push_back(formal);
        groupValues[formal] = args.listArg(argName);
    }

    CatalogOp op;
    op.kind = kind;
    op.args = std::move(args);
    op.provenance = std::move(provenance);

    GroupExpander expander(groupFormals, groupValues);

    auto buildFormula = [&](const std::string& text) {
        Formula raw = parseFormula(text, &binding, /*allowVars=*/true);
        // drop conjuncts that mention unbound scalar formals
        std::function<bool(const Formula&)> mentionsMissing = [&](const Formula& f) {
            if (f.kind == FKind::Atom) {
                for (auto& a : f.atom.args) {
                    if (a.kind == PTerm::Kind::Const && missing.count(a.text)) return true;
                    if (a.kind == PTerm::Kind::List)
                        for (auto& el : a.items)
                            if (el.kind == PTerm::Kind::Const && missing.count(el.text))
                                return true;
                }
                return false;
            }
            for (auto& c : f.children)
                if (mentionsMissing(c)) return true;
            return false;
        };
        std::function<Formula(const Formula&)> strip = [&](const Formula& f) -> Formula {
            if (f.kind == FKind::And) {
                std::vector<Formula> kept;
                for (auto& c : f.children)
                    if (!mentionsMissing(c)) kept.push_back(strip(c));
                return Formula::mkAnd(std::move(kept));
            }
            return f;
        };
        return simplify(expander.expand(strip(raw)));
    };

    op.pre = buildFormula(tpl.preText);
    op.guard = tpl.guardText.empty() ? op.pre : buildFormula(tpl.guardText);

    // backward rules
    for (auto& [var, val] : binding) {
        if (val.isList())
            for (auto& s : val.list()) op.backward.opArgumentValues.insert(s);
        else op.backward.opArgumentValues.insert(val.atom());
    }
    for (auto& [g, vals] : groupValues)
        for (auto& v : vals) op.backward.opArgumentValues.insert(v);
    op.backward.opArgumentValues.insert("java.lang.Object");
    op.backward.opArgumentValues.insert("Object");

    for (const RuleLine& line : parseRuleLines(tpl.backwardText)) {
        FactPattern lhsRaw = parseAtomPattern(line.lhs, &binding, /*allowVars=*/true);
        // skip rules that reference unbound scalar formals
        bool usesMissing = false;
        auto checkPT = [&](const PTerm& t) {
            if (t.kind == PTerm::Kind::Const && missing.count(t.text)) usesMissing = true;
            if (t.kind == PTerm::Kind::List)
                for (auto& el : t.items)
                    if (el.kind == PTerm::Kind::Const && missing.count(el.text))
                        usesMissing = true;
        };
        for (auto& a : lhsRaw.args) checkPT(a);
        Formula rhsRaw = parseFormula(line.rhs, &binding, /*allowVars=*/true);
        if (usesMissing) continue;
        {
            std::function<void(const Formula&)> scan = [&](const Formula& f) {
                if (f.kind == FKind::Atom)
                    for (auto& a : f.atom.args) checkPT(a);
                for (auto& c : f.children) scan(c);
            };
            scan(rhsRaw);
            if (usesMissing) continue;
        }

        // duplication groups: groups in lhs plus @markers
        std::vector<std::string> dupGroups = groupsInAtom(lhsRaw, groupFormals);
        for (auto& g : line.dupGroups)
            if (std::find(dupGroups.begin(), dupGroups.end(), g) == dupGroups.end())
                dupGroups.push_back(g);

        // cartesian product over duplication groups
        std::vector<std::map<std::string, std::string>> combos{{}};
        for (auto& g : dupGroups) {
            std::vector<std::map<std::string, std::string>> next;
            for (auto& combo : combos)
                for (auto& v : groupValues[g]) {
                    auto c2 = combo;
                    c2[g] = v;
                    next.push_back(std::move(c2));
                }
            combos = std::move(next);
        }
        for (auto& combo : combos) {
            FactPattern lhs = lhsRaw;
            Formula rhs = rhsRaw;
            for (auto& [g, v] : combo) {
                lhs = substConst(lhs, g, v);
                std::function<Formula(const Formula&)> sub = [&](const Formula& f) -> Formula {
                    if (f.kind == FKind::Atom) return Formula::mkAtom(substConst(f.atom, g, v));
                    Formula out = f;
                    out.children.clear();
                    for (auto& c : f.children) out.children.push_back(sub(c));
                    return out;
                };
                rhs = sub(rhs);
            }
            // remaining group formals inside rhs expand conjunctively
            rhs = expander.expand(rhs);
            op.backward.rules.push_back(RewriteRule{std::move(lhs), simplify(rhs), line.cond});
        }
    }
    return op;
}

std::string CatalogOp::display() const {
    const OpTemplate& tpl = detail::templateFor(kind);
    std::string s = tpl.name;
    s += "(";
    bool first = true;
    for (auto& p : tpl.params) {
        auto it = args.scalars.find(p);
        if (it == args.scalars.end()) continue;
        if (!first) s += ", ";
        first = false;
        s += it->second.str();
    }
    for (auto& [g, vals] : args.groups) {
        if (!first) s += ", ";
        first = false;
        s += g + "=[";
        for (size_t i = 0; i < vals.size(); ++i) {
            if (i) s += ";";
            s += vals[i];
        }
        s += "]";
    }
    return s + ")";
}

} // namespace repat
