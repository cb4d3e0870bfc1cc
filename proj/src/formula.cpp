#include "repat/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace repat {

//===----------------------------------------------------------------------===//
// PTerm / FactPattern
//===----------------------------------------------------------------------===//

std::string PTerm::str() const {
    switch (kind) {
    case Kind::Const: return text;
    case Kind::Var: return "?" + text;
    case Kind::List: {
        std::string s = "[";
        for (size_t i = 0; i < items.size(); ++i) {
            if (i) s += ";";
            s += items[i].str();
        }
        return s + "]";
    }
    }
    return "";
}

bool FactPattern::ground() const {
    for (auto& a : args) {
        if (a.kind == PTerm::Kind::Var) return false;
        if (a.kind == PTerm::Kind::List)
            for (auto& it : a.items)
                if (it.kind == PTerm::Kind::Var) return false;
    }
    return true;
}

Fact FactPattern::toFact() const {
    Fact f;
    f.pred = pred;
    for (auto& a : args) {
        if (a.kind == PTerm::Kind::Const) {
            f.args.emplace_back(a.text);
        } else if (a.kind == PTerm::Kind::List) {
            std::vector<std::string> l;
            for (auto& it : a.items) l.push_back(it.text);
            f.args.emplace_back(std::move(l));
        } else {
            fail(ErrorKind::NonLinearPatternUnsupported, "pattern not ground: " + str());
        }
    }
    return f;
}

std::string FactPattern::str() const {
    std::string s = predicateName(pred);
    s += "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i].str();
    }
    return s + ")";
}

namespace {

bool bindVar(Binding& b, const std::string& var, const Term& val) {
    auto it = b.find(var);
    if (it != b.end()) return it->second == val;
    b[var] = val;
    return true;
}

} // namespace

std::optional<Binding> matchPattern(const FactPattern& pat, const Fact& fact) {
    if (pat.pred != fact.pred || pat.args.size() != fact.args.size()) return std::nullopt;
    Binding b;
    for (size_t i = 0; i < pat.args.size(); ++i) {
        const PTerm& pt = pat.args[i];
        const Term& t = fact.args[i];
        switch (pt.kind) {
        case PTerm::Kind::Const:
            if (t.isList() || t.atom() != pt.text) return std::nullopt;
            break;
        case PTerm::Kind::Var:
            if (!bindVar(b, pt.text, t)) return std::nullopt;
            break;
        case PTerm::Kind::List: {
            if (!t.isList() || t.list().size() != pt.items.size()) return std::nullopt;
            for (size_t k = 0; k < pt.items.size(); ++k) {
                const PTerm& el = pt.items[k];
                if (el.kind == PTerm::Kind::Const) {
                    if (t.list()[k] != el.text) return std::nullopt;
                } else if (!bindVar(b, el.text, Term(t.list()[k]))) {
                    return std::nullopt;
                }
            }
            break;
        }
        }
    }
    return b;
}

FactPattern substitute(const FactPattern& pat, const Binding& b) {
    FactPattern out = pat;
    for (auto& a : out.args) {
        if (a.kind == PTerm::Kind::Var) {
            auto it = b.find(a.text);
            if (it == b.end()) continue;
            if (it->second.isList()) {
                std::vector<PTerm> items;
                for (auto& s : it->second.list()) items.push_back(PTerm::constant(s));
                a = PTerm::list(std::move(items));
            } else {
                a = PTerm::constant(it->second.atom());
            }
        } else if (a.kind == PTerm::Kind::List) {
            for (auto& el : a.items) {
                if (el.kind != PTerm::Kind::Var) continue;
                auto it = b.find(el.text);
                if (it != b.end() && !it->second.isList())
                    el = PTerm::constant(it->second.atom());
            }
        }
    }
    return out;
}

//===----------------------------------------------------------------------===//
// Formula construction / printing
//===----------------------------------------------------------------------===//

Formula Formula::mkNot(Formula f) {
    Formula n;
    n.kind = FKind::Not;
    n.children.push_back(std::move(f));
    return n;
}

Formula Formula::mkAnd(std::vector<Formula> fs) {
    if (fs.empty()) return top();
    if (fs.size() == 1) return fs[0];
    Formula n;
    n.kind = FKind::And;
    n.children = std::move(fs);
    return n;
}

Formula Formula::mkOr(std::vector<Formula> fs) {
    if (fs.empty()) return bottom();
    if (fs.size() == 1) return fs[0];
    Formula n;
    n.kind = FKind::Or;
    n.children = std::move(fs);
    return n;
}

bool Formula::operator==(const Formula& o) const {
    if (kind != o.kind) return false;
    if (kind == FKind::Atom) return atom == o.atom;
    return children == o.children;
}

std::string Formula::str() const {
    switch (kind) {
    case FKind::True: return "true";
    case FKind::False: return "false";
    case FKind::Atom: return atom.str();
    case FKind::Not: return "!" + (children[0].kind == FKind::Atom ||
                                           children[0].kind == FKind::True ||
                                           children[0].kind == FKind::False
                                       ? children[0].str()
                                       : "(" + children[0].str() + ")");
    case FKind::And:
    case FKind::Or: {
        std::string sep = kind == FKind::And ? " & " : " | ";
        std::string s = "(";
        for (size_t i = 0; i < children.size(); ++i) {
            if (i) s += sep;
            s += children[i].str();
        }
        return s + ")";
    }
    }
    return "";
}

//===----------------------------------------------------------------------===//
// Simplification
//===----------------------------------------------------------------------===//

namespace {

std::string formulaKey(const Formula& f) { return f.str(); }

Formula simplifyRec(const Formula& f) {
    switch (f.kind) {
    case FKind::True:
    case FKind::False:
    case FKind::Atom:
        return f;
    case FKind::Not: {
        Formula c = simplifyRec(f.children[0]);
        if (c.kind == FKind::True) return Formula::bottom();
        if (c.kind == FKind::False) return Formula::top();
        if (c.kind == FKind::Not) return c.children[0];
        return Formula::mkNot(std::move(c));
    }
    case FKind::And:
    case FKind::Or: {
        bool isAnd = f.kind == FKind::And;
        std::vector<Formula> flat;
        for (auto& ch : f.children) {
            Formula c = simplifyRec(ch);
            if (isAnd) {
                if (c.kind == FKind::False) return Formula::bottom();
                if (c.kind == FKind::True) continue;
                if (c.kind == FKind::And) {
                    for (auto& g : c.children) flat.push_back(std::move(g));
                    continue;
                }
            } else {
                if (c.kind == FKind::True) return Formula::top();
                if (c.kind == FKind::False) continue;
                if (c.kind == FKind::Or) {
                    for (auto& g : c.children) flat.push_back(std::move(g));
                    continue;
                }
            }
            flat.push_back(std::move(c));
        }
        // dedupe, stable order of first appearance
        std::vector<Formula> uniq;
        std::set<std::string> seen;
        for (auto& c : flat)
            if (seen.insert(formulaKey(c)).second) uniq.push_back(std::move(c));
        // complementary literals
        std::set<std::string> pos, neg;
        for (auto& c : uniq) {
            if (c.kind == FKind::Atom) pos.insert(formulaKey(c));
            if (c.kind == FKind::Not && c.children[0].kind == FKind::Atom)
                neg.insert(formulaKey(c.children[0]));
        }
        for (auto& n : neg)
            if (pos.count(n)) return isAnd ? Formula::bottom() : Formula::top();
        if (uniq.empty()) return isAnd ? Formula::top() : Formula::bottom();
        if (uniq.size() == 1) return uniq[0];
        return isAnd ? Formula::mkAnd(std::move(uniq)) : Formula::mkOr(std::move(uniq));
    }
    }
    return f;
}

} // namespace

Formula simplify(const Formula& f) { return simplifyRec(f); }

Formula normalizeAtoms(const Formula& f) {
    switch (f.kind) {
    case FKind::Atom: {
        const FactPattern& a = f.atom;
        if (a.pred == Predicate::IsSubType && a.args.size() == 2 &&
            a.args[0].kind == PTerm::Kind::Const && a.args[1].kind == PTerm::Kind::Const) {
            if (a.args[0].text == a.args[1].text) return Formula::top();
            if (a.args[1].text == "java.lang.Object" || a.args[1].text == "Object")
                return Formula::top();
        }
        return f;
    }
    case FKind::Not:
        return Formula::mkNot(normalizeAtoms(f.children[0]));
    case FKind::And:
    case FKind::Or: {
        std::vector<Formula> cs;
        for (auto& c : f.children) cs.push_back(normalizeAtoms(c));
        return f.kind == FKind::And ? Formula::mkAnd(std::move(cs))
                                    : Formula::mkOr(std::move(cs));
    }
    default:
        return f;
    }
}

//===----------------------------------------------------------------------===//
// Literal sets / evaluation
//===----------------------------------------------------------------------===//

namespace {

bool collectLiterals(const Formula& f, bool positive, std::set<Literal>& out) {
    switch (f.kind) {
    case FKind::True:
        return positive; // !true inside a conjunction would be false
    case FKind::False:
        return !positive;
    case FKind::Atom:
        if (!f.atom.ground()) return false;
        out.insert(Literal{positive, f.atom.toFact()});
        return true;
    case FKind::Not:
        return collectLiterals(f.children[0], !positive, out);
    case FKind::And:
    case FKind::Or: {
        bool conjunctive = (f.kind == FKind::And) == positive;
        // positive AND / negated OR expand exactly; negated AND is the
        // documented sufficiency-preserving strengthening. A positive OR has
        // no flat conjunction form.
        if (!conjunctive && positive) return false;
        for (auto& c : f.children)
            if (!collectLiterals(c, positive, out)) return false;
        return true;
    }
    }
    return false;
}

} // namespace

std::optional<std::set<Literal>> literalSet(const Formula& f) {
    std::set<Literal> out;
    Formula s = simplify(f);
    if (s.kind == FKind::True) return out;
    if (s.kind == FKind::False) return std::nullopt;
    if (!collectLiterals(s, true, out)) return std::nullopt;
    return out;
}

namespace {

bool evalFormula(const FactContext& ctx, const Formula& f, std::optional<Literal>& witness) {
    switch (f.kind) {
    case FKind::True: return true;
    case FKind::False: return false;
    case FKind::Atom: {
        Fact fact = f.atom.toFact();
        bool v = ctx.evaluate(fact);
        if (!v && !witness) witness = Literal{true, fact};
        return v;
    }
    case FKind::Not: {
        std::optional<Literal> inner;
        bool v = !evalFormula(ctx, f.children[0], inner);
        if (!v && !witness && f.children[0].kind == FKind::Atom)
            witness = Literal{false, f.children[0].atom.toFact()};
        return v;
    }
    case FKind::And:
        for (auto& c : f.children)
            if (!evalFormula(ctx, c, witness)) return false;
        return true;
    case FKind::Or: {
        std::optional<Literal> first;
        for (auto& c : f.children) {
            std::optional<Literal> w;
            if (evalFormula(ctx, c, w)) return true;
            if (!first) first = w;
        }
        if (!witness) witness = first;
        return false;
    }
    }
    return false;
}

void collectAtoms(const Formula& f, std::vector<std::string>& atoms) {
    switch (f.kind) {
    case FKind::Atom: {
        std::string k = f.atom.str();
        if (std::find(atoms.begin(), atoms.end(), k) == atoms.end()) atoms.push_back(k);
        break;
    }
    case FKind::Not:
    case FKind::And:
    case FKind::Or:
        for (auto& c : f.children) collectAtoms(c, atoms);
        break;
    default:
        break;
    }
}

bool evalAssignment(const Formula& f, const std::map<std::string, bool>& assign) {
    switch (f.kind) {
    case FKind::True: return true;
    case FKind::False: return false;
    case FKind::Atom: return assign.at(f.atom.str());
    case FKind::Not: return !evalAssignment(f.children[0], assign);
    case FKind::And:
        for (auto& c : f.children)
            if (!evalAssignment(c, assign)) return false;
        return true;
    case FKind::Or:
        for (auto& c : f.children)
            if (evalAssignment(c, assign)) return true;
        return false;
    }
    return false;
}

} // namespace

HoldsResult checkHolds(const FactContext& ctx, const Formula& f) {
    HoldsResult r;
    std::optional<Literal> witness;
    r.holds = evalFormula(ctx, f, witness);
    if (!r.holds) r.witness = witness;
    return r;
}

bool truthTableEquivalent(const Formula& a, const Formula& b, int maxAtoms) {
    std::vector<std::string> atoms;
    collectAtoms(a, atoms);
    collectAtoms(b, atoms);
    if (static_cast<int>(atoms.size()) > maxAtoms)
        fail(ErrorKind::NotSupported, "too many atoms for truth table");
    size_t n = atoms.size();
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::map<std::string, bool> assign;
        for (size_t i = 0; i < n; ++i) assign[atoms[i]] = (mask >> i) & 1;
        if (evalAssignment(a, assign) != evalAssignment(b, assign)) return false;
    }
    return true;
}

//===----------------------------------------------------------------------===//
// Parsing
//===----------------------------------------------------------------------===//

namespace {

struct FTok {
    enum class K { Ident, Punct, End } k = K::End;
    std::string text;
};

class FLexer {
public:
    explicit FLexer(const std::string& s) : s_(s) { next(); }
    const FTok& peek() const { return cur_; }
    FTok take() {
        FTok t = cur_;
        next();
        return t;
    }

private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        cur_ = FTok{};
        if (pos_ >= s_.size()) return;
        char c = s_[pos_];
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            size_t b = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '.'))
                ++pos_;
            cur_.k = FTok::K::Ident;
            cur_.text = s_.substr(b, pos_ - b);
            // strip trailing dots (defensive; dotted names like java.lang.Object kept)
            while (!cur_.text.empty() && cur_.text.back() == '.') {
                cur_.text.pop_back();
                --pos_;
            }
            return;
        }
        cur_.k = FTok::K::Punct;
        cur_.text = std::string(1, c);
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    FTok cur_;
};

bool looksLikeVar(const std::string& t) {
    if (t.empty() || !std::isupper(static_cast<unsigned char>(t[0]))) return false;
    if (t.find('.') != std::string::npos) return false; // java.lang.Object etc.
    return true;
}

class FParser {
public:
    FParser(const std::string& text, const Binding* binding, bool allowVars)
        : lex_(text), binding_(binding), allowVars_(allowVars) {}

    Formula formula() { return orExpr(); }

    FactPattern atomOnly() {
        FactPattern a = atom();
        return a;
    }

private:
    Formula orExpr() {
        std::vector<Formula> parts{andExpr()};
        while (accept("|")) parts.push_back(andExpr());
        return Formula::mkOr(std::move(parts));
    }

    Formula andExpr() {
        std::vector<Formula> parts{unary()};
        while (accept("&")) parts.push_back(unary());
        return Formula::mkAnd(std::move(parts));
    }

    Formula unary() {
        if (accept("!")) return Formula::mkNot(unary());
        if (lex_.peek().k == FTok::K::Punct && lex_.peek().text == "(") {
            lex_.take();
            Formula f = orExpr();
            expect(")");
            return f;
        }
        if (lex_.peek().k == FTok::K::Ident) {
            if (lex_.peek().text == "true" || lex_.peek().text == "T") {
                lex_.take();
                return Formula::top();
            }
            if (lex_.peek().text == "false" || lex_.peek().text == "F") {
                lex_.take();
                return Formula::bottom();
            }
            return Formula::mkAtom(atom());
        }
        fail(ErrorKind::SyntaxError, "bad formula near '" + lex_.peek().text + "'");
    }

    PTerm termFromToken(const std::string& tok) {
        if (binding_) {
            auto it = binding_->find(tok);
            if (it != binding_->end()) {
                if (it->second.isList()) {
                    std::vector<PTerm> items;
                    for (auto& s : it->second.list()) items.push_back(PTerm::constant(s));
                    return PTerm::list(std::move(items));
                }
                return PTerm::constant(it->second.atom());
            }
        }
        if (allowVars_ && looksLikeVar(tok)) return PTerm::var(tok);
        return PTerm::constant(tok);
    }

    FactPattern atom() {
        std::string name = lex_.take().text;
        FactPattern fp;
        fp.pred = canonicalPredicate(name);
        expect("(");
        if (!(lex_.peek().k == FTok::K::Punct && lex_.peek().text == ")")) {
            do {
                fp.args.push_back(argTerm());
            } while (accept(","));
        }
        expect(")");
        if (static_cast<int>(fp.args.size()) != predicateArity(fp.pred))
            fail(ErrorKind::ArityMismatch,
                 std::string(predicateName(fp.pred)) + " arity in formula");
        return fp;
    }

    PTerm argTerm() {
        if (lex_.peek().k == FTok::K::Punct && lex_.peek().text == "[") {
            lex_.take();
            std::vector<PTerm> items;
            while (!(lex_.peek().k == FTok::K::Punct && lex_.peek().text == "]")) {
                std::string tok = takeIdent();
                PTerm t = termFromToken(tok);
                if (t.kind == PTerm::Kind::List) {
                    // a bound list inside [..] splices its elements
                    for (auto& el : t.items) items.push_back(el);
                } else {
                    items.push_back(t);
                }
                accept(";");
            }
            expect("]");
            return PTerm::list(std::move(items));
        }
        return termFromToken(takeIdent());
    }

    std::string takeIdent() {
        if (lex_.peek().k != FTok::K::Ident)
            fail(ErrorKind::SyntaxError, "expected identifier in formula, got '" +
                                             lex_.peek().text + "'");
        return lex_.take().text;
    }

    bool accept(const std::string& p) {
        if (lex_.peek().k == FTok::K::Punct && lex_.peek().text == p) {
            lex_.take();
            return true;
        }
        return false;
    }

    void expect(const std::string& p) {
        if (!accept(p))
            fail(ErrorKind::SyntaxError,
                 "expected '" + p + "' in formula, got '" + lex_.peek().text + "'");
    }

    FLexer lex_;
    const Binding* binding_;
    bool allowVars_;
};

} // namespace

Formula parseFormula(const std::string& text, const Binding* binding, bool allowVars) {
    FParser p(text, binding, allowVars);
    return p.formula();
}

FactPattern parseAtomPattern(const std::string& text, const Binding* binding, bool allowVars) {
    FParser p(text, binding, allowVars);
    return p.atomOnly();
}

} // namespace repat
