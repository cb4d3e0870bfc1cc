#include "repat/printer.hpp"

#include <sstream>

namespace repat {
namespace {

std::string ind(int n) { return std::string(static_cast<size_t>(n) * 4, ' '); }

void writeExpr(std::ostringstream& out, const Expr& e);

void writeArgs(std::ostringstream& out, const std::vector<ExprPtr>& args) {
    out << "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) out << ", ";
        writeExpr(out, *args[i]);
    }
    out << ")";
}

std::string escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"') o += "\\\"";
        else if (c == '\\') o += "\\\\";
        else if (c == '\n') o += "\\n";
        else if (c == '\t') o += "\\t";
        else o += c;
    }
    return o;
}

void writeExpr(std::ostringstream& out, const Expr& e) {
    switch (e.kind) {
    case ExprKind::This: out << "this"; break;
    case ExprKind::Name: out << e.name; break;
    case ExprKind::FieldAccess:
        writeExpr(out, *e.receiver);
        out << "." << e.name;
        break;
    case ExprKind::Invoke:
        if (e.receiver) {
            writeExpr(out, *e.receiver);
            out << ".";
        }
        out << e.name;
        writeArgs(out, e.args);
        break;
    case ExprKind::New:
        out << "new " << e.newType.str();
        writeArgs(out, e.args);
        break;
    case ExprKind::StringLit: out << '"' << escape(e.strValue) << '"'; break;
    case ExprKind::IntLit: out << e.intValue; break;
    case ExprKind::BoolLit: out << (e.boolValue ? "true" : "false"); break;
    case ExprKind::NullLit: out << "null"; break;
    case ExprKind::Concat:
        writeExpr(out, *e.lhs);
        out << " + ";
        writeExpr(out, *e.rhs);
        break;
    case ExprKind::Print:
        out << (e.newline ? "System.out.println" : "System.out.print");
        writeArgs(out, e.args);
        break;
    }
}

void writeBlock(std::ostringstream& out, const Block& b, int indent);

void writeStmt(std::ostringstream& out, const Stmt& s, int indent) {
    out << ind(indent);
    switch (s.kind) {
    case StmtKind::LocalDecl:
        out << s.declType.str() << " " << s.name;
        if (s.expr) {
            out << " = ";
            writeExpr(out, *s.expr);
        }
        out << ";\n";
        break;
    case StmtKind::Assign:
        writeExpr(out, *s.target);
        out << " = ";
        writeExpr(out, *s.expr);
        out << ";\n";
        break;
    case StmtKind::ExprStmt:
        writeExpr(out, *s.expr);
        out << ";\n";
        break;
    case StmtKind::ForEach:
        out << "for (" << s.declType.str() << " " << s.name << " : ";
        writeExpr(out, *s.expr);
        out << ") {\n";
        writeBlock(out, s.body, indent + 1);
        out << ind(indent) << "}\n";
        break;
    case StmtKind::Return:
        out << "return";
        if (s.expr) {
            out << " ";
            writeExpr(out, *s.expr);
        }
        out << ";\n";
        break;
    }
}

void writeBlock(std::ostringstream& out, const Block& b, int indent) {
    for (auto& s : b.stmts) writeStmt(out, *s, indent);
}

void writeVisibility(std::ostringstream& out, Visibility v) {
    const char* kw = visibilityKeyword(v);
    if (*kw) out << kw << " ";
}

void writeMethod(std::ostringstream& out, const MethodDecl& m, bool isCtor, int indent) {
    out << ind(indent);
    writeVisibility(out, m.visibility);
    if (m.isAbstract) out << "abstract ";
    if (m.isStatic) out << "static ";
    if (!m.typeParams.empty()) {
        out << "<";
        for (size_t i = 0; i < m.typeParams.size(); ++i) {
            if (i) out << ", ";
            out << m.typeParams[i];
        }
        out << "> ";
    }
    if (!isCtor) out << m.returnType.str() << " ";
    out << m.name << "(";
    for (size_t i = 0; i < m.params.size(); ++i) {
        if (i) out << ", ";
        out << m.params[i].type.str() << " " << m.params[i].name;
    }
    out << ")";
    if (!m.body) {
        out << ";\n";
        return;
    }
    out << " {\n";
    writeBlock(out, *m.body, indent + 1);
    out << ind(indent) << "}\n";
}

} // namespace

std::string printExpr(const Expr& e) {
    std::ostringstream out;
    writeExpr(out, e);
    return out.str();
}

std::string printStmt(const Stmt& s, int indent) {
    std::ostringstream out;
    writeStmt(out, s, indent);
    return out.str();
}

std::string prettyPrint(const ClassDecl& c) {
    std::ostringstream out;
    if (c.isAbstract) out << "abstract ";
    out << "class " << c.name;
    if (!c.typeParams.empty()) {
        out << "<";
        for (size_t i = 0; i < c.typeParams.size(); ++i) {
            if (i) out << ", ";
            out << c.typeParams[i];
        }
        out << ">";
    }
    if (c.superclass) out << " extends " << c.superclass->str();
    if (!c.interfaces.empty()) {
        out << " implements ";
        for (size_t i = 0; i < c.interfaces.size(); ++i) {
            if (i) out << ", ";
            out << c.interfaces[i].str();
        }
    }
    out << " {\n";
    for (auto& f : c.fields) {
        out << ind(1);
        writeVisibility(out, f.visibility);
        out << f.type.str() << " " << f.name;
        if (f.init) {
            out << " = ";
            writeExpr(out, *f.init);
        }
        out << ";\n";
    }
    if (!c.fields.empty() && (!c.constructors.empty() || !c.methods.empty())) out << "\n";
    for (size_t i = 0; i < c.constructors.size(); ++i) {
        writeMethod(out, c.constructors[i], true, 1);
        if (i + 1 < c.constructors.size() || !c.methods.empty()) out << "\n";
    }
    for (size_t i = 0; i < c.methods.size(); ++i) {
        writeMethod(out, c.methods[i], false, 1);
        if (i + 1 < c.methods.size()) out << "\n";
    }
    out << "}\n";
    return out.str();
}

std::string prettyPrint(const InterfaceDecl& i) {
    std::ostringstream out;
    out << "interface " << i.name;
    if (!i.extends.empty()) {
        out << " extends ";
        for (size_t k = 0; k < i.extends.size(); ++k) {
            if (k) out << ", ";
            out << i.extends[k].str();
        }
    }
    out << " {\n";
    for (auto& m : i.methods) {
        out << ind(1);
        writeVisibility(out, m.visibility);
        out << m.returnType.str() << " " << m.name << "(";
        for (size_t k = 0; k < m.params.size(); ++k) {
            if (k) out << ", ";
            out << m.params[k].type.str() << " " << m.params[k].name;
        }
        out << ");\n";
    }
    out << "}\n";
    return out.str();
}

std::string prettyPrint(const Program& p) {
    std::ostringstream out;
    bool first = true;
    for (const std::string& n : p.declOrder) {
        if (!first) out << "\n";
        first = false;
        if (const ClassDecl* c = p.findClass(n)) {
            out << prettyPrint(*c);
        } else if (const InterfaceDecl* i = p.findInterface(n)) {
            out << prettyPrint(*i);
        } else if (p.hasExtern(n)) {
            out << "extern class " << n << ";\n";
        }
    }
    return out.str();
}

std::map<std::string, std::string> renderFiles(const Program& p) {
    std::map<std::string, std::string> files;
    for (const std::string& n : p.declOrder) {
        std::string base = n;
        for (auto& ch : base)
            if (ch == '.') ch = '_';
        if (const ClassDecl* c = p.findClass(n)) {
            files[base + ".mj"] = prettyPrint(*c);
        } else if (const InterfaceDecl* i = p.findInterface(n)) {
            files[base + ".mj"] = prettyPrint(*i);
        } else if (p.hasExtern(n)) {
            files[base + ".mj"] = "extern class " + n + ";\n";
        }
    }
    return files;
}

} // namespace repat
