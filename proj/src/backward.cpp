#include "repat/backward.hpp"

namespace repat {

namespace {

bool rhsFullyBound(const Formula& f, const Binding& b) {
    switch (f.kind) {
    case FKind::Atom: {
        for (auto& a : f.atom.args) {
            if (a.kind == PTerm::Kind::Var && !b.count(a.text)) return false;
            if (a.kind == PTerm::Kind::List)
                for (auto& el : a.items)
                    if (el.kind == PTerm::Kind::Var && !b.count(el.text)) return false;
        }
        return true;
    }
    case FKind::Not:
    case FKind::And:
    case FKind::Or:
        for (auto& c : f.children)
            if (!rhsFullyBound(c, b)) return false;
        return true;
    default:
        return true;
    }
}

Formula substituteFormula(const Formula& f, const Binding& b) {
    switch (f.kind) {
    case FKind::Atom:
        return Formula::mkAtom(substitute(f.atom, b));
    case FKind::Not:
        return Formula::mkNot(substituteFormula(f.children[0], b));
    case FKind::And:
    case FKind::Or: {
        std::vector<Formula> cs;
        for (auto& c : f.children) cs.push_back(substituteFormula(c, b));
        return f.kind == FKind::And ? Formula::mkAnd(std::move(cs))
                                    : Formula::mkOr(std::move(cs));
    }
    default:
        return f;
    }
}

bool bindingAvoidsOpArgs(const Binding& b, const std::set<std::string>& argValues) {
    for (auto& [var, val] : b) {
        if (val.isList()) {
            for (auto& s : val.list())
                if (argValues.count(s)) return false;
        } else if (argValues.count(val.atom())) {
            return false;
        }
    }
    return true;
}

} // namespace

Formula BackwardDescription::rewriteAtom(const FactPattern& atomPat) const {
    if (!atomPat.ground()) return Formula::mkAtom(atomPat);
    Fact fact = atomPat.toFact();
    for (const RewriteRule& r : rules) {
        auto binding = matchPattern(r.lhs, fact);
        if (!binding) continue;
        if (r.conditioned && !bindingAvoidsOpArgs(*binding, opArgumentValues)) continue;
        if (!rhsFullyBound(r.rhs, *binding)) return Formula::mkAtom(atomPat);
        return substituteFormula(r.rhs, *binding);
    }
    return Formula::mkAtom(atomPat);
}

namespace {

Formula rewriteRec(const Formula& f, const BackwardDescription& bd) {
    switch (f.kind) {
    case FKind::Atom:
        return bd.rewriteAtom(f.atom);
    case FKind::Not:
        return Formula::mkNot(rewriteRec(f.children[0], bd));
    case FKind::And:
    case FKind::Or: {
        std::vector<Formula> cs;
        cs.reserve(f.children.size());
        for (auto& c : f.children) cs.push_back(rewriteRec(c, bd));
        return f.kind == FKind::And ? Formula::mkAnd(std::move(cs))
                                    : Formula::mkOr(std::move(cs));
    }
    default:
        return f;
    }
}

} // namespace

Formula backwardSubstitute(const Formula& phi, const BackwardDescription& bd) {
    return simplify(rewriteRec(phi, bd));
}

} // namespace repat
