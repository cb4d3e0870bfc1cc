#include "repat/parser.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace repat {
namespace {

enum class Tok { Ident, String, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    long intValue = 0;
    SourceLoc loc;
};

class Lexer {
public:
    Lexer(std::string src, std::string file) : src_(std::move(src)), file_(std::move(file)) {
        advance();
    }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        skipTrivia();
        cur_ = Token{};
        cur_.loc = loc();
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            cur_.kind = Tok::Ident;
            cur_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                bump();
            cur_.kind = Tok::Int;
            cur_.text = src_.substr(start, pos_ - start);
            cur_.intValue = std::stol(cur_.text);
            return;
        }
        if (c == '"') {
            bump();
            std::string s;
            while (pos_ < src_.size() && src_[pos_] != '"') {
                if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
                    bump();
                    char e = src_[pos_];
                    if (e == 'n') s += '\n';
                    else if (e == 't') s += '\t';
                    else s += e;
                } else {
                    s += src_[pos_];
                }
                bump();
            }
            if (pos_ >= src_.size()) fail(ErrorKind::SyntaxError, "unterminated string", cur_.loc);
            bump(); // closing quote
            cur_.kind = Tok::String;
            cur_.text = std::move(s);
            return;
        }
        cur_.kind = Tok::Punct;
        cur_.text = std::string(1, c);
        bump();
    }

    void skipTrivia() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
                bump();
                bump();
                while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/'))
                    bump();
                if (pos_ + 1 < src_.size()) { bump(); bump(); }
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    SourceLoc loc() const { return SourceLoc{file_, line_, col_}; }

    std::string src_;
    std::string file_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
};

class Parser {
public:
    Parser(const std::string& src, std::string file) : lex_(src, std::move(file)) {}

    Program parseProgram() {
        Program p;
        while (lex_.peek().kind != Tok::End) {
            bool isAbstract = accept("abstract");
            if (accept("extern")) {
                expect("class");
                std::string n = qualifiedName();
                expect(";");
                p.externTypes.push_back(n);
                p.declOrder.push_back(n);
                continue;
            }
            if (accept("interface")) {
                InterfaceDecl i = parseInterface();
                std::string n = i.name;
                p.interfaces.emplace(n, std::move(i));
                p.declOrder.push_back(n);
                continue;
            }
            expect("class");
            ClassDecl c = parseClass(isAbstract);
            std::string n = c.name;
            if (p.classes.count(n) || p.interfaces.count(n))
                fail(ErrorKind::WellFormednessError, "duplicate type " + n, c.loc);
            p.classes.emplace(n, std::move(c));
            p.declOrder.push_back(n);
        }
        return p;
    }

private:
    InterfaceDecl parseInterface() {
        InterfaceDecl i;
        i.loc = lex_.peek().loc;
        i.name = identifier();
        if (accept("extends")) {
            i.extends.push_back(typeRef());
            while (accept(",")) i.extends.push_back(typeRef());
        }
        expect("{");
        while (!accept("}")) {
            MethodDecl m;
            m.visibility = visibility();
            accept("abstract");
            m.isAbstract = true;
            m.returnType = typeRef();
            m.name = identifier();
            m.params = paramList();
            expect(";");
            i.methods.push_back(std::move(m));
        }
        return i;
    }

    ClassDecl parseClass(bool isAbstract) {
        ClassDecl c;
        c.loc = lex_.peek().loc;
        c.isAbstract = isAbstract;
        c.name = identifier();
        if (accept("<")) {
            c.typeParams.push_back(identifier());
            while (accept(",")) c.typeParams.push_back(identifier());
            expect(">");
        }
        if (accept("extends")) c.superclass = typeRef();
        if (accept("implements")) {
            c.interfaces.push_back(typeRef());
            while (accept(",")) c.interfaces.push_back(typeRef());
        }
        expect("{");
        while (!accept("}")) parseMember(c);
        return c;
    }

    void parseMember(ClassDecl& c) {
        Visibility vis = visibility();
        bool isAbstract = accept("abstract");
        bool isStatic = accept("static");
        std::vector<std::string> methodTypeParams;
        if (lex_.peek().text == "<") {
            lex_.next();
            methodTypeParams.push_back(identifier());
            while (accept(",")) methodTypeParams.push_back(identifier());
            expect(">");
        }
        // Constructor: identifier equal to the class name followed by '('.
        if (!isAbstract && !isStatic && lex_.peek().kind == Tok::Ident &&
            lex_.peek().text == c.name) {
            Lexer save = lex_;
            std::string name = identifier();
            if (lex_.peek().text == "(") {
                MethodDecl ctor;
                ctor.visibility = vis;
                ctor.name = name;
                ctor.returnType = TypeRef(c.name);
                ctor.params = paramList();
                ctor.body = block();
                c.constructors.push_back(std::move(ctor));
                return;
            }
            lex_ = save; // was a field/method of type <ClassName>
        }
        TypeRef type = typeRef();
        std::string name = identifier();
        if (lex_.peek().text == "(") {
            MethodDecl m;
            m.visibility = vis;
            m.isAbstract = isAbstract;
            m.isStatic = isStatic;
            m.typeParams = std::move(methodTypeParams);
            m.returnType = std::move(type);
            m.name = std::move(name);
            m.params = paramList();
            if (isAbstract) {
                expect(";");
            } else {
                m.body = block();
            }
            c.methods.push_back(std::move(m));
            return;
        }
        FieldDecl f;
        f.visibility = vis;
        f.type = std::move(type);
        f.name = std::move(name);
        if (accept("=")) f.init = expression();
        expect(";");
        c.fields.push_back(std::move(f));
    }

    Visibility visibility() {
        if (accept("public")) return Visibility::Public;
        if (accept("protected")) return Visibility::Protected;
        if (accept("private")) return Visibility::Private;
        return Visibility::Package;
    }

    std::vector<Param> paramList() {
        expect("(");
        std::vector<Param> ps;
        if (!accept(")")) {
            do {
                Param p;
                p.type = typeRef();
                p.name = identifier();
                ps.push_back(std::move(p));
            } while (accept(","));
            expect(")");
        }
        return ps;
    }

    TypeRef typeRef() {
        TypeRef t;
        t.name = qualifiedName();
        if (lex_.peek().text == "<") {
            // Distinguish generics from comparisons: types appear only in
            // declaration positions here, so '<' always opens type args.
            lex_.next();
            if (!accept(">")) { // allow diamond `<>`
                t.args.push_back(typeRef());
                while (accept(",")) t.args.push_back(typeRef());
                expect(">");
            }
        }
        return t;
    }

    std::string qualifiedName() {
        std::string n = identifier();
        while (lex_.peek().text == ".") {
            Lexer save = lex_;
            lex_.next();
            if (lex_.peek().kind == Tok::Ident) {
                std::string part = lex_.peek().text;
                // Only swallow the dot for known qualified-name shapes
                // (java.lang.Object, Point2D.Double); member access is
                // handled by the expression grammar.
                if (!part.empty() && (n == "java" || n == "java.lang" ||
                                      std::isupper(static_cast<unsigned char>(part[0])))) {
                    lex_.next();
                    n += "." + part;
                    continue;
                }
            }
            lex_ = save;
            break;
        }
        return n;
    }

    Block block() {
        expect("{");
        Block b;
        while (!accept("}")) b.stmts.push_back(statement());
        return b;
    }

    StmtPtr statement() {
        SourceLoc loc = lex_.peek().loc;
        if (accept("return")) {
            ExprPtr e;
            if (!(lex_.peek().kind == Tok::Punct && lex_.peek().text == ";"))
                e = expression();
            expect(";");
            return Stmt::makeReturn(std::move(e), loc);
        }
        if (lex_.peek().text == "for") {
            lex_.next();
            expect("(");
            TypeRef t = typeRef();
            std::string var = identifier();
            expect(":");
            ExprPtr list = expression();
            expect(")");
            Block body;
            if (lex_.peek().text == "{") {
                body = block();
            } else {
                body.stmts.push_back(statement());
            }
            return Stmt::makeForEach(std::move(t), std::move(var), std::move(list),
                                     std::move(body), loc);
        }
        // Local declaration: Type ident [= expr] ;  — requires lookahead since
        // `x = e;` and `x.f = e;` and `f(...);` all start with an identifier.
        if (lex_.peek().kind == Tok::Ident && looksLikeLocalDecl()) {
            TypeRef t = typeRef();
            std::string name = identifier();
            ExprPtr init;
            if (accept("=")) init = expression();
            expect(";");
            return Stmt::makeLocal(std::move(t), std::move(name), std::move(init), loc);
        }
        ExprPtr e = expression();
        if (accept("=")) {
            if (e->kind != ExprKind::Name && e->kind != ExprKind::FieldAccess)
                fail(ErrorKind::SyntaxError, "invalid assignment target", loc);
            ExprPtr rhs = expression();
            expect(";");
            return Stmt::makeAssign(std::move(e), std::move(rhs), loc);
        }
        expect(";");
        return Stmt::makeExpr(std::move(e), loc);
    }

    bool looksLikeLocalDecl() {
        Lexer save = lex_;
        bool result = false;
        std::string first = lex_.next().text;
        // Skip qualified-name tail and generic args.
        auto skipType = [&]() -> bool {
            while (lex_.peek().text == ".") {
                lex_.next();
                if (lex_.peek().kind != Tok::Ident) return false;
                lex_.next();
            }
            if (lex_.peek().text == "<") {
                int depth = 0;
                do {
                    std::string t = lex_.next().text;
                    if (t == "<") ++depth;
                    else if (t == ">") --depth;
                    else if (lex_.peek().kind == Tok::End) return false;
                } while (depth > 0);
            }
            return true;
        };
        if (skipType() && lex_.peek().kind == Tok::Ident) {
            Token second = lex_.next();
            std::string after = lex_.peek().text;
            result = (after == "=" || after == ";");
        }
        (void)first;
        lex_ = save;
        return result;
    }

    ExprPtr expression() { return concatExpr(); }

    ExprPtr concatExpr() {
        ExprPtr e = postfixExpr();
        while (lex_.peek().text == "+") {
            SourceLoc loc = lex_.peek().loc;
            lex_.next();
            ExprPtr r = postfixExpr();
            e = Expr::makeConcat(std::move(e), std::move(r), loc);
        }
        return e;
    }

    ExprPtr postfixExpr() {
        ExprPtr e = primary();
        while (lex_.peek().text == ".") {
            SourceLoc loc = lex_.peek().loc;
            lex_.next();
            std::string member = identifier();
            if (lex_.peek().text == "(") {
                std::vector<ExprPtr> args = callArgs();
                e = Expr::makeInvoke(std::move(e), std::move(member), std::move(args), loc);
            } else {
                e = Expr::makeField(std::move(e), std::move(member), loc);
            }
        }
        return e;
    }

    std::vector<ExprPtr> callArgs() {
        expect("(");
        std::vector<ExprPtr> args;
        if (!accept(")")) {
            do {
                args.push_back(expression());
            } while (accept(","));
            expect(")");
        }
        return args;
    }

    ExprPtr primary() {
        SourceLoc loc = lex_.peek().loc;
        const Token& t = lex_.peek();
        if (t.kind == Tok::String) {
            std::string s = lex_.next().text;
            return Expr::makeString(std::move(s), loc);
        }
        if (t.kind == Tok::Int) {
            long v = lex_.next().intValue;
            return Expr::makeInt(v, loc);
        }
        if (t.text == "(") {
            lex_.next();
            ExprPtr e = expression();
            expect(")");
            return e;
        }
        if (t.kind != Tok::Ident) fail(ErrorKind::SyntaxError, "expected expression", loc);
        if (t.text == "this") {
            lex_.next();
            return Expr::makeThis(loc);
        }
        if (t.text == "true" || t.text == "false") {
            bool v = lex_.next().text == "true";
            return Expr::makeBool(v, loc);
        }
        if (t.text == "null") {
            lex_.next();
            return Expr::makeNull(loc);
        }
        if (t.text == "new") {
            lex_.next();
            TypeRef ty = typeRef();
            std::vector<ExprPtr> args = callArgs();
            return Expr::makeNew(std::move(ty), std::move(args), loc);
        }
        if (t.text == "System") {
            // System.out.print(e) / System.out.println(e)
            Lexer save = lex_;
            lex_.next();
            if (accept(".") && accept("out") && accept(".")) {
                std::string fn = identifier();
                if (fn == "println" || fn == "print") {
                    expect("(");
                    ExprPtr arg;
                    if (!(lex_.peek().kind == Tok::Punct && lex_.peek().text == ")"))
                        arg = expression();
                    expect(")");
                    if (!arg) arg = Expr::makeString("", loc);
                    return Expr::makePrint(std::move(arg), fn == "println", loc);
                }
            }
            lex_ = save;
        }
        std::string name = identifier();
        if (lex_.peek().text == "(") {
            std::vector<ExprPtr> args = callArgs();
            return Expr::makeInvoke(nullptr, std::move(name), std::move(args), loc);
        }
        return Expr::makeName(std::move(name), loc);
    }

    std::string identifier() {
        if (lex_.peek().kind != Tok::Ident)
            fail(ErrorKind::SyntaxError, "expected identifier, got '" + lex_.peek().text + "'",
                 lex_.peek().loc);
        return lex_.next().text;
    }

    bool accept(const std::string& text) {
        if (lex_.peek().text == text &&
            (lex_.peek().kind == Tok::Punct || lex_.peek().kind == Tok::Ident)) {
            lex_.next();
            return true;
        }
        return false;
    }

    void expect(const std::string& text) {
        if (!accept(text))
            fail(ErrorKind::SyntaxError,
                 "expected '" + text + "', got '" + lex_.peek().text + "'", lex_.peek().loc);
    }

    Lexer lex_;
};

} // namespace

Program parse(const std::string& sourceText, const std::string& filename) {
    Parser p(sourceText, filename);
    return p.parseProgram();
}

Program mergePrograms(const std::vector<Program>& fragments) {
    Program out;
    for (const Program& f : fragments) {
        for (const std::string& n : f.declOrder) {
            if (out.classes.count(n) || out.interfaces.count(n) || out.hasExtern(n))
                fail(ErrorKind::WellFormednessError, "duplicate type " + n);
            out.declOrder.push_back(n);
        }
        for (auto& [n, c] : f.classes) out.classes.emplace(n, c);
        for (auto& [n, i] : f.interfaces) out.interfaces.emplace(n, i);
        for (auto& e : f.externTypes) out.externTypes.push_back(e);
        if (f.entry) out.entry = f.entry;
    }
    return out;
}

Program parseDirectory(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (!fs::exists(dir)) fail(ErrorKind::IoError, "no such directory: " + dir);
    for (auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".mj") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Program> frags;
    for (auto& f : files) {
        std::ifstream in(f);
        if (!in) fail(ErrorKind::IoError, "cannot read " + f.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        frags.push_back(parse(ss.str(), f.filename().string()));
    }
    return mergePrograms(frags);
}

} // namespace repat
