#pragma once

#include "repat/ast.hpp"

#include <map>
#include <string>

namespace repat {

/// Deterministic source rendering; members in declaration order.
/// parse(prettyPrint(p)) is structurally equal to p.
std::string prettyPrint(const Program& p);
std::string prettyPrint(const ClassDecl& c);
std::string prettyPrint(const InterfaceDecl& i);
std::string printExpr(const Expr& e);
std::string printStmt(const Stmt& s, int indent);

/// One file per top-level declaration, keyed by "<TypeName>.mj".
std::map<std::string, std::string> renderFiles(const Program& p);

} // namespace repat
