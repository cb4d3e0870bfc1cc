#include "repat/script.hpp"

#include "repat/catalog_detail.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace repat {
namespace {

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

/// One raw argument: atom or list of atoms ("Type name" items keep the type).
struct RawArg {
    bool isList = false;
    std::string atom;
    std::vector<std::string> items;
};

std::string typeOnly(const std::string& item) {
    std::string t = trimmed(item);
    size_t sp = t.find_last_of(" \t");
    if (sp != std::string::npos) {
        std::string head = trimmed(t.substr(0, sp));
        if (!head.empty() && head.find(' ') == std::string::npos) return head;
    }
    return t;
}

struct RawCall {
    std::string name;
    std::vector<RawArg> args;
    int line = 0;
};

std::vector<RawCall> tokenizeScript(const std::string& text) {
    std::vector<RawCall> calls;
    int lineNo = 1;
    size_t i = 0;
    auto skipWs = [&]() {
        while (i < text.size()) {
            if (text[i] == '\n') ++lineNo;
            if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';') ++i;
            else if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else break;
        }
    };
    while (true) {
        skipWs();
        if (i >= text.size()) break;
        RawCall call;
        call.line = lineNo;
        size_t start = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                   text[i] == '_'))
            ++i;
        call.name = text.substr(start, i - start);
        if (call.name.empty())
            fail(ErrorKind::ScriptParseError,
                 "line " + std::to_string(lineNo) + ": expected operation name");
        skipWs();
        if (i >= text.size() || text[i] != '(')
            fail(ErrorKind::ScriptParseError,
                 "line " + std::to_string(lineNo) + ": expected '(' after " + call.name);
        ++i;
        std::string cur;
        RawArg arg;
        bool inList = false;
        auto flushItem = [&]() {
            std::string it = typeOnly(cur);
            cur.clear();
            if (!it.empty()) arg.items.push_back(it);
        };
        auto flushArg = [&](bool force) {
            std::string a = trimmed(cur);
            cur.clear();
            if (!arg.isList && a.empty() && !force) return;
            if (!arg.isList) arg.atom = a;
            call.args.push_back(arg);
            arg = RawArg{};
        };
        int depth = 1;
        while (i < text.size() && depth > 0) {
            char ch = text[i];
            if (ch == '\n') ++lineNo;
            if (ch == '[') {
                inList = true;
                arg.isList = true;
                ++i;
                continue;
            }
            if (ch == ']') {
                flushItem();
                inList = false;
                ++i;
                continue;
            }
            if (inList && ch == ';') {
                flushItem();
                ++i;
                continue;
            }
            if (!inList && ch == '(') ++depth;
            if (!inList && ch == ')') {
                --depth;
                if (depth == 0) {
                    flushArg(arg.isList);
                    ++i;
                    break;
                }
            }
            if (!inList && ch == ',' && depth == 1) {
                flushArg(arg.isList);
                ++i;
                continue;
            }
            cur += ch;
            ++i;
        }
        calls.push_back(std::move(call));
    }
    return calls;
}

Term listTerm(const RawArg& a) { return Term(a.items); }

std::string lowerInitial(const std::string& s) {
    std::string o;
    o += static_cast<char>(std::tolower(static_cast<unsigned char>(s.empty() ? 'x' : s[0])));
    return o;
}

CatalogOp buildOp(const RawCall& c) {
    std::string key = lowered(c.name);
    auto atomAt = [&](size_t i) -> std::string {
        if (i >= c.args.size() || c.args[i].isList)
            fail(ErrorKind::ScriptParseError,
                 "line " + std::to_string(c.line) + ": " + c.name + ": expected atom arg " +
                     std::to_string(i + 1));
        return c.args[i].atom;
    };
    auto listAt = [&](size_t i) -> std::vector<std::string> {
        if (i >= c.args.size() || !c.args[i].isList)
            fail(ErrorKind::ScriptParseError,
                 "line " + std::to_string(c.line) + ": " + c.name + ": expected list arg " +
                     std::to_string(i + 1));
        return c.args[i].items;
    };
    size_t argc = c.args.size();
    OpArgs a;

    if (key == "createemptyclass") {
        a.scalars["c"] = atomAt(0);
        return makeOp(OpKind::CreateEmptyClass, std::move(a));
    }
    if (key == "createindirectioninsuperclass") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["sig"] = listTerm(c.args[3]);
        a.scalars["r"] = atomAt(4);
        a.scalars["n"] = atomAt(5);
        return makeOp(OpKind::CreateIndirectionInSuperClass, std::move(a));
    }
    if (key == "inlinemethodinvocations") {
        a.scalars["c"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.scalars["msig"] = listTerm(c.args[2]);
        a.scalars["a"] = atomAt(3);
        a.scalars["n"] = atomAt(4);
        a.scalars["nsig"] = argc > 5 ? listTerm(c.args[5]) : Term(std::vector<std::string>{});
        return makeOp(OpKind::InlineMethodInvocations, std::move(a));
    }
    if (key == "addparameterwithreuse") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["t"] = atomAt(4);
        a.scalars["p"] = atomAt(5);
        return makeOp(OpKind::AddParameterWithReuse, std::move(a));
    }
    if (key == "movemethodwithdelegate") {
        a.scalars["src"] = atomAt(0);
        a.groups["attrs"] = listAt(1);
        a.scalars["dst"] = atomAt(2);
        a.scalars["m"] = atomAt(3);
        a.scalars["osig"] = listTerm(c.args[4]);
        a.scalars["r"] = atomAt(5);
        a.scalars["n"] = atomAt(6);
        a.scalars["o"] = argc > 7 ? Term(atomAt(7)) : Term("v");
        a.scalars["o2"] = argc > 8 ? Term(atomAt(8)) : Term(lowerInitial(atomAt(0)));
        std::vector<std::string> nsig;
        std::string dst = atomAt(2);
        bool removed = false;
        for (auto& t : c.args[4].items) {
            if (!removed && t == dst) {
                removed = true;
                continue;
            }
            nsig.push_back(t);
        }
        nsig.push_back(atomAt(0));
        a.scalars["nsig"] = Term(nsig);
        return makeOp(OpKind::MoveMethodWithDelegate, std::move(a));
    }
    if (key == "extractsuperclass") {
        a.groups["subs"] = listAt(0);
        a.scalars["s"] = atomAt(1);
        a.groups["pms"] = listAt(2);
        a.scalars["ret"] = atomAt(3);
        return makeOp(OpKind::ExtractSuperClass, std::move(a));
    }
    if (key == "extractsuperclasswithoutpullup") {
        a.groups["subs"] = listAt(0);
        a.scalars["s"] = atomAt(1);
        return makeOp(OpKind::ExtractSuperClassWithoutPullUp, std::move(a));
    }
    if (key == "pullupwithgenerics") {
        a.scalars["s"] = atomAt(0);
        a.scalars["a"] = atomAt(1);
        a.groups["attrs"] = listAt(2);
        a.scalars["m"] = atomAt(3);
        a.scalars["r"] = atomAt(4);
        a.scalars["tp"] = argc > 5 ? atomAt(5) : "T";
        return makeOp(OpKind::PullUpWithGenerics, std::move(a));
    }
    if (key == "generaliseparameter" || key == "usesupertype") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["p"] = atomAt(3);
        a.scalars["t"] = atomAt(4);
        a.scalars["st"] = atomAt(5);
        return makeOp(OpKind::GeneraliseParameter, std::move(a));
    }
    if (key == "replacemethodcodeduplicatesinverter" ||
        key == "replacemethodcodeduplicatesinverters") {
        a.scalars["c"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.groups["copies"] = listAt(2);
        a.scalars["t"] = atomAt(3);
        if (argc > 4 && c.args[4].isList) {
            auto rets = listAt(4);
            if (!rets.empty()) a.scalars["r"] = rets[0];
            a.groups["crets"] = std::vector<std::string>(rets.begin() + (rets.empty() ? 0 : 1),
                                                         rets.end());
        } else if (argc > 4) {
            a.scalars["r"] = atomAt(4);
        }
        return makeOp(OpKind::ReplaceMethodcodeDuplicatesInverter, std::move(a));
    }
    if (key == "pullupconcretedelegator" || key == "pullupimplementation") {
        a.scalars["c"] = atomAt(0);
        a.groups["attrs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["s"] = atomAt(3);
        return makeOp(OpKind::PullUpImplementation, std::move(a));
    }
    if (key == "pullupabstract" || key == "pullupabstractmethod") {
        a.scalars["c"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.scalars["s"] = atomAt(2);
        return makeOp(OpKind::PullUpAbstract, std::move(a));
    }
    if (key == "safedeletedelegatoroverriding" || key == "safedeletedelegatorwithoverridden") {
        a.scalars["c"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.scalars["s"] = atomAt(2);
        if (argc > 3) a.scalars["n"] = atomAt(3);
        return makeOp(OpKind::SafeDeleteDelegatorOverriding, std::move(a));
    }
    if (key == "inlineanddelete") {
        a.scalars["s"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        if (argc > 2 && c.args[2].isList) a.scalars["sig"] = listTerm(c.args[2]);
        if (argc > 3) a.scalars["n"] = atomAt(3);
        if (argc > 4 && c.args[4].isList) a.groups["othermethods"] = listAt(4);
        if (argc > 5 && c.args[5].isList) a.groups["otherclasses"] = listAt(5);
        return makeOp(OpKind::InlineAndDelete, std::move(a));
    }
    if (key == "inlinemethod") {
        // InlineMethod(overloadClass, m, definingClass, caller [, callerSig])
        a.scalars["s"] = atomAt(2);
        a.scalars["m"] = atomAt(1);
        a.scalars["sig"] = Term(std::vector<std::string>{atomAt(0)});
        a.scalars["n"] = atomAt(3);
        return makeOp(OpKind::InlineAndDelete, std::move(a));
    }
    if (key == "renameinhierarchynooverloading") {
        a.scalars["c"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["sig"] = listTerm(c.args[3]);
        a.scalars["n"] = atomAt(4);
        return makeOp(OpKind::RenameInHierarchyNoOverloading, std::move(a));
    }
    if (key == "renameoverloadedmethodinhierarchy") {
        a.scalars["c"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        if (argc == 5) {
            a.scalars["n"] = atomAt(3);
            a.scalars["sig"] = listTerm(c.args[4]);
        } else {
            a.groups["ctors"] = listAt(3);
            a.scalars["n"] = atomAt(4);
            a.scalars["sig"] = listTerm(c.args[5]);
        }
        return makeOp(OpKind::RenameOverloadedMethodInHierarchy, std::move(a));
    }
    if (key == "renamedelegatorwithoverloading") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["t"] = atomAt(3);
        a.scalars["pn"] = atomAt(4);
        a.scalars["t2"] = atomAt(5);
        a.scalars["n"] = atomAt(6);
        return makeOp(OpKind::RenameDelegatorWithOverloading, std::move(a));
    }
    if (key == "duplicatemethodinhierarchy") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.groups["callers"] = listAt(3);
        a.groups["invoked"] = listAt(4);
        a.scalars["n"] = atomAt(5);
        a.scalars["sig"] = listTerm(c.args[6]);
        return makeOp(OpKind::DuplicateMethodInHierarchy, std::move(a));
    }
    if (key == "duplicatemethodinhierarchygen") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.groups["rets"] = listAt(3);
        a.groups["invoked"] = listAt(4);
        a.groups["callers"] = listAt(5);
        a.scalars["n"] = atomAt(6);
        a.scalars["sig"] = listTerm(c.args[7]);
        return makeOp(OpKind::DuplicateMethodInHierarchyGen, std::move(a));
    }
    if (key == "specialiseparameter") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["t"] = atomAt(3);
        size_t idx = 4;
        if (argc > idx && !c.args[idx].isList) a.scalars["p"] = atomAt(idx++);
        a.groups["stypes"] = listAt(idx++);
        a.scalars["nt"] = atomAt(idx);
        return makeOp(OpKind::SpecialiseParameter, std::move(a));
    }
    if (key == "deletemethodinhierarchy") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.groups["invoked"] = listAt(3);
        a.scalars["t"] = atomAt(4);
        return makeOp(OpKind::DeleteMethodInHierarchy, std::move(a));
    }
    if (key == "pushdownall") {
        if (argc == 4) {
            a.scalars["s"] = atomAt(0);
            a.groups["subs"] = listAt(1);
            a.scalars["m"] = atomAt(2);
            a.scalars["sig"] = listTerm(c.args[3]);
        } else {
            a.scalars["s"] = atomAt(0);
            a.groups["attrs"] = listAt(1);
            a.groups["subs"] = listAt(2);
            a.scalars["m"] = atomAt(3);
            a.scalars["sig"] = listTerm(c.args[4]);
        }
        return makeOp(OpKind::PushDownAll, std::move(a));
    }
    if (key == "pushdownimplementation") {
        a.scalars["s"] = atomAt(0);
        a.groups["attrs"] = listAt(1);
        a.groups["subs"] = listAt(2);
        a.scalars["m"] = atomAt(3);
        a.scalars["sig"] = listTerm(c.args[4]);
        return makeOp(OpKind::PushDownImplementation, std::move(a));
    }
    if (key == "pushdownnotredefinedmethod" || key == "pushdowncopy") {
        a.scalars["c"] = atomAt(0);
        a.scalars["s"] = atomAt(1);
        a.groups["methods"] = listAt(2);
        return makeOp(OpKind::PushDownNotRedefinedMethod, std::move(a));
    }
    if (key == "replacemethodduplication") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["d"] = atomAt(2);
        a.scalars["tgt"] = atomAt(3);
        a.scalars["sig"] = argc > 4 ? listTerm(c.args[4]) : Term(std::vector<std::string>{});
        return makeOp(OpKind::ReplaceMethodDuplication, std::move(a));
    }
    if (key == "removeparameter") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["sig"] = listTerm(c.args[3]);
        a.scalars["t"] = atomAt(4);
        a.scalars["p"] = atomAt(5);
        return makeOp(OpKind::RemoveParameter, std::move(a));
    }
    if (key == "deleteclass") {
        a.scalars["a"] = atomAt(0);
        a.scalars["s"] = argc > 1 ? atomAt(1) : "java.lang.Object";
        if (argc > 2) {
            auto all = listAt(2);
            all.erase(std::remove(all.begin(), all.end(), atomAt(0)), all.end());
            a.groups["classes"] = all;
        }
        if (argc > 3) a.groups["classmethods"] = listAt(3);
        if (argc > 4) a.groups["othermethods"] = listAt(4);
        return makeOp(OpKind::DeleteClass, std::move(a));
    }
    if (key == "deletemethod") {
        a.scalars["c"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        if (argc > 2 && c.args[2].isList) a.scalars["sig"] = listTerm(c.args[2]);
        if (argc > 3) a.scalars["s"] = atomAt(3);
        return makeOp(OpKind::DeleteMethod, std::move(a));
    }
    if (key == "introduceparmeterobject" || key == "introduceparameterobject") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["osig"] = listTerm(c.args[3]);
        a.groups["pnames"] = listAt(5);
        a.scalars["t"] = atomAt(6);
        a.scalars["n"] = atomAt(7);
        std::vector<std::string> getters;
        for (auto& pn : c.args[5].items) getters.push_back("get" + pn);
        a.groups["getters"] = getters;
        return makeOp(OpKind::IntroduceParameterObject, std::move(a));
    }
    if (key == "inlineconstructor") {
        a.scalars["s"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.scalars["c"] = atomAt(2);
        a.groups["fields"] = listAt(3);
        a.groups["getters"] = listAt(4);
        std::vector<std::string> fvars;
        for (auto& f : c.args[3].items) fvars.push_back(f + "var");
        a.groups["fvars"] = fvars;
        return makeOp(OpKind::InlineConstructor, std::move(a));
    }
    if (key == "inlinelocalfield") {
        a.scalars["s"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.scalars["f"] = atomAt(2);
        return makeOp(OpKind::InlineLocalField, std::move(a));
    }
    if (key == "inlinelocalvariable") {
        a.scalars["s"] = atomAt(0);
        a.scalars["m"] = atomAt(1);
        a.scalars["v"] = atomAt(2);
        return makeOp(OpKind::InlineLocalVariable, std::move(a));
    }
    if (key == "widenfieldvisibility") {
        a.scalars["c"] = atomAt(0);
        a.scalars["f"] = atomAt(1);
        return makeOp(OpKind::WidenFieldVisibility, std::move(a));
    }
    if (key == "boxreturntypes") {
        a.scalars["s"] = atomAt(0);
        a.groups["subs"] = listAt(1);
        a.scalars["m"] = atomAt(2);
        a.scalars["from"] = atomAt(3);
        a.scalars["to"] = atomAt(4);
        return makeOp(OpKind::BoxReturnTypes, std::move(a));
    }
    if (key == "introducedowncast") {
        a.scalars["c"] = atomAt(0);
        a.scalars["m"] = argc > 1 ? atomAt(1) : "";
        a.scalars["s"] = argc > 2 ? atomAt(2) : "";
        return makeOp(OpKind::IntroduceDownCast, std::move(a));
    }
    if (key == "deletedowncast") {
        a.scalars["v"] = atomAt(0);
        a.scalars["m"] = argc > 1 ? atomAt(1) : "";
        return makeOp(OpKind::DeleteDownCast, std::move(a));
    }
    fail(ErrorKind::ScriptParseError,
         "line " + std::to_string(c.line) + ": unknown operation " + c.name);
}

} // namespace

std::vector<CatalogOp> parseScript(const std::string& text) {
    std::vector<CatalogOp> ops;
    for (auto& call : tokenizeScript(text)) {
        CatalogOp op = buildOp(call);
        op.provenance = "script:" + std::to_string(call.line);
        ops.push_back(std::move(op));
    }
    return ops;
}

std::string renderScript(const std::vector<CatalogOp>& ops) {
    std::ostringstream out;
    for (auto& op : ops) out << op.display() << "\n";
    return out.str();
}

} // namespace repat
