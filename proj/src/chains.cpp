#include "repat/chains.hpp"

#include "repat/backward.hpp"
#include "repat/script.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace repat {

using nlohmann::json;

namespace {

std::string expandPattern(const std::string& pattern, const std::string& m,
                          const std::string& v) {
    std::string out;
    for (size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] == '{') {
            size_t close = pattern.find('}', i);
            std::string key = pattern.substr(i + 1, close - i - 1);
            out += key == "m" ? m : key == "V" ? v : "";
            i = close;
        } else {
            out += pattern[i];
        }
    }
    return out;
}

std::string lowerInitial(const std::string& s) {
    std::string o;
    o += static_cast<char>(std::tolower(static_cast<unsigned char>(s.empty() ? 'x' : s[0])));
    return o;
}

} // namespace

std::string TransformConfig::aux(const std::string& m) const {
    return expandPattern(auxPattern, m, "");
}

std::string TransformConfig::tmp(const std::string& m, const std::string& v) const {
    return expandPattern(tmpPattern, m, v);
}

const BusinessMethod* TransformConfig::method(const std::string& name) const {
    for (auto& m : methods)
        if (m.name == name) return &m;
    return nullptr;
}

bool TransformConfig::isParamMethod(const std::string& name) const {
    return std::find(paramMethods.begin(), paramMethods.end(), name) != paramMethods.end();
}

std::vector<std::string> TransformConfig::visitorClasses() const {
    std::vector<std::string> out;
    for (auto& m : methods) out.push_back(m.visitorClass);
    return out;
}

TransformConfig loadConfig(const std::string& jsonText) {
    json j;
    try {
        j = json::parse(jsonText);
    } catch (const std::exception& e) {
        fail(ErrorKind::ConfigInvalid, std::string("config JSON: ") + e.what());
    }
    TransformConfig cfg;
    auto need = [&](const char* key) {
        if (!j.contains(key)) fail(ErrorKind::ConfigInvalid, std::string("missing ") + key);
        return j.at(key);
    };
    cfg.root = need("root").get<std::string>();
    for (auto& c : need("concrete")) cfg.concrete.push_back(c.get<std::string>());
    for (auto& m : need("methods")) {
        BusinessMethod bm;
        bm.name = m.at("name").get<std::string>();
        if (m.contains("params"))
            for (auto& p : m.at("params")) {
                std::string decl = p.get<std::string>();
                size_t sp = decl.find(' ');
                bm.paramTypes.push_back(decl.substr(0, sp));
                if (sp != std::string::npos) bm.paramNames.push_back(decl.substr(sp + 1));
                else bm.paramNames.push_back("p" + std::to_string(bm.paramNames.size()));
            }
        if (m.contains("return")) bm.returnType = m.at("return").get<std::string>();
        bm.visitorClass = m.at("visitor").get<std::string>();
        cfg.methods.push_back(std::move(bm));
    }
    if (j.contains("param_methods"))
        for (auto& m : j.at("param_methods")) cfg.paramMethods.push_back(m.get<std::string>());
    if (j.contains("visitor_root")) cfg.visitorRoot = j.at("visitor_root");
    if (j.contains("accept")) cfg.acceptName = j.at("accept");
    if (j.contains("visit")) cfg.visitName = j.at("visit");
    if (j.contains("visitor_param")) cfg.visitorParam = j.at("visitor_param");
    if (j.contains("aux_pattern")) cfg.auxPattern = j.at("aux_pattern");
    if (j.contains("tmp_pattern")) cfg.tmpPattern = j.at("tmp_pattern");
    if (j.contains("attributes"))
        for (auto& a : j.at("attributes")) cfg.attributes.push_back(a.get<std::string>());
    if (j.contains("receiver_names"))
        for (auto& [k, v] : j.at("receiver_names").items())
            cfg.receiverNames[k] = v.get<std::string>();
    if (j.contains("generics")) cfg.generics = j.at("generics");
    if (j.contains("type_param")) cfg.typeParam = j.at("type_param");
    if (j.contains("inline_recursive_calls")) cfg.inlineRecursiveCalls = j.at("inline_recursive_calls");
    if (j.contains("recursive")) {
        for (auto& c : j.at("recursive")) cfg.recursiveClasses.push_back(c.get<std::string>());
    } else {
        cfg.recursiveClasses = cfg.concrete;
    }
    if (j.contains("interface_root")) {
        cfg.interfaceMode = true;
        cfg.interfaceName = j.at("interface_root").at("interface");
        cfg.abstractClassName = j.at("interface_root").at("abstract_class");
    }
    if (j.contains("inherited"))
        for (auto& e : j.at("inherited")) {
            TransformConfig::InheritedEntry ie;
            ie.cls = e.at("class");
            ie.super = e.at("super");
            for (auto& m : e.at("methods")) ie.methods.push_back(m.get<std::string>());
            cfg.inherited.push_back(std::move(ie));
        }
    if (j.contains("cleanup_context"))
        for (auto& [k, v] : j.at("cleanup_context").items()) {
            CleanupContext cc;
            if (v.contains("invocator")) cc.invocator = v.at("invocator");
            if (v.contains("othermethods"))
                for (auto& m : v.at("othermethods")) cc.othermethods.push_back(m.get<std::string>());
            if (v.contains("otherclasses"))
                for (auto& m : v.at("otherclasses")) cc.otherclasses.push_back(m.get<std::string>());
            cfg.cleanup[k] = std::move(cc);
        }
    if (j.contains("entry")) {
        std::string e = j.at("entry");
        size_t dot = e.find('.');
        if (dot == std::string::npos) fail(ErrorKind::ConfigInvalid, "entry must be Class.method");
        cfg.entry = {{e.substr(0, dot)}, {e.substr(dot + 1)}};
    }
    if (j.contains("specialise_param_name")) cfg.specialiseCarriesParamName = j.at("specialise_param_name");
    if (cfg.concrete.empty() && !cfg.methods.empty())
        fail(ErrorKind::ConfigInvalid, "concrete class list is empty");
    return cfg;
}

TransformConfig loadConfigFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::IoError, "cannot read config " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return loadConfig(ss.str());
}

//===----------------------------------------------------------------------===//
// Chain builders
//===----------------------------------------------------------------------===//

namespace {

Term sigTerm(const std::vector<std::string>& sig) { return Term(sig); }

CatalogOp withProv(CatalogOp op, const std::string& prov) {
    op.provenance = prov;
    return op;
}

void emitCleanupInlineAndDelete(const TransformConfig& cfg, std::vector<CatalogOp>& ops,
                                const std::string& cls, const std::string& m,
                                const std::vector<std::string>& sig, const std::string& prov) {
    OpArgs a;
    a.scalars["s"] = cls;
    a.scalars["m"] = m;
    if (!sig.empty()) a.scalars["sig"] = sigTerm(sig);
    auto it = cfg.cleanup.find(m);
    if (it != cfg.cleanup.end()) {
        if (!it->second.invocator.empty()) a.scalars["n"] = it->second.invocator;
        if (!it->second.othermethods.empty()) a.groups["othermethods"] = it->second.othermethods;
        if (!it->second.otherclasses.empty()) a.groups["otherclasses"] = it->second.otherclasses;
    }
    ops.push_back(withProv(makeOp(OpKind::InlineAndDelete, std::move(a)), prov));
}

} // namespace

Chain buildCompositeToVisitor(const TransformConfig& cfg) {
    Chain chain;
    auto& ops = chain.ops;
    const std::string S = cfg.effectiveRoot();
    const std::vector<std::string>& C = cfg.concrete;

    // multilevel pre-pass: materialize inherited methods (PushDownCopy)
    for (auto& ie : cfg.inherited) {
        OpArgs a;
        a.scalars["c"] = ie.cls;
        a.scalars["s"] = ie.super;
        a.groups["methods"] = ie.methods;
        ops.push_back(withProv(makeOp(OpKind::PushDownNotRedefinedMethod, std::move(a)),
                               "C->V:1.C"));
    }
    // interface variation: extract the abstract class under the interface
    if (cfg.interfaceMode) {
        OpArgs a;
        a.groups["subs"] = C;
        a.scalars["s"] = cfg.abstractClassName;
        std::vector<std::string> pms;
        for (auto& m : cfg.methods) pms.push_back(m.name);
        a.groups["pms"] = pms;
        a.scalars["ret"] = cfg.methods.empty() ? "void" : cfg.methods[0].returnType;
        ops.push_back(withProv(makeOp(OpKind::ExtractSuperClass, std::move(a)), "C->V:0.D"));
    }
    // 1) visitor classes for parameterless methods
    for (auto& m : cfg.methods) {
        if (cfg.isParamMethod(m.name)) continue;
        OpArgs a;
        a.scalars["c"] = m.visitorClass;
        ops.push_back(withProv(makeOp(OpKind::CreateEmptyClass, std::move(a)), "C->V:1"));
    }
    // 2) indirections
    for (auto& m : cfg.methods) {
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = m.name;
        a.scalars["sig"] = sigTerm(m.paramTypes);
        a.scalars["r"] = m.returnType;
        a.scalars["n"] = cfg.aux(m.name);
        ops.push_back(withProv(makeOp(OpKind::CreateIndirectionInSuperClass, std::move(a)),
                               "C->V:2"));
    }
    // 3) inline the recursive delegator invocations
    if (cfg.inlineRecursiveCalls && !cfg.interfaceMode) {
        for (auto& m : cfg.methods)
            for (auto& c : cfg.recursiveClasses) {
                OpArgs a;
                a.scalars["c"] = c;
                a.scalars["m"] = cfg.aux(m.name);
                a.scalars["msig"] = sigTerm(m.paramTypes);
                a.scalars["a"] = S;
                a.scalars["n"] = m.name;
                a.scalars["nsig"] = sigTerm(m.paramTypes);
                ops.push_back(withProv(makeOp(OpKind::InlineMethodInvocations, std::move(a)),
                                       "C->V:3"));
            }
    }
    // 4) visitor parameter: parameter object for M_P, reuse parameter for M_W
    for (auto& m : cfg.methods) {
        if (!cfg.isParamMethod(m.name)) continue;
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.aux(m.name);
        a.scalars["osig"] = sigTerm(m.paramTypes);
        a.groups["pnames"] = m.paramNames;
        std::vector<std::string> getters;
        for (auto& pn : m.paramNames) getters.push_back("get" + pn);
        a.groups["getters"] = getters;
        a.scalars["t"] = m.visitorClass;
        a.scalars["n"] = cfg.visitorParam;
        ops.push_back(withProv(makeOp(OpKind::IntroduceParameterObject, std::move(a)),
                               "C->V:4.A"));
    }
    for (auto& m : cfg.methods) {
        if (cfg.isParamMethod(m.name)) continue;
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.aux(m.name);
        a.scalars["t"] = m.visitorClass;
        a.scalars["p"] = cfg.visitorParam;
        ops.push_back(withProv(makeOp(OpKind::AddParameterWithReuse, std::move(a)), "C->V:4"));
    }
    // 5) move the aux methods into their visitor classes
    for (auto& m : cfg.methods)
        for (auto& c : C) {
            OpArgs a;
            a.scalars["src"] = c;
            a.groups["attrs"] = cfg.attributes;
            a.scalars["dst"] = m.visitorClass;
            a.scalars["m"] = cfg.aux(m.name);
            a.scalars["osig"] = Term(std::vector<std::string>{m.visitorClass});
            a.scalars["r"] = m.returnType;
            a.scalars["n"] = cfg.visitName;
            a.scalars["o"] = cfg.visitorParam;
            auto rn = cfg.receiverNames.find(c);
            a.scalars["o2"] = rn != cfg.receiverNames.end() ? rn->second : lowerInitial(c);
            a.scalars["nsig"] = Term(std::vector<std::string>{c});
            ops.push_back(withProv(makeOp(OpKind::MoveMethodWithDelegate, std::move(a)),
                                   "C->V:5"));
        }
    // 6) extract the visitor superclass
    if (cfg.generics) {
        OpArgs a;
        a.groups["subs"] = cfg.visitorClasses();
        a.scalars["s"] = cfg.visitorRoot;
        ops.push_back(withProv(makeOp(OpKind::ExtractSuperClassWithoutPullUp, std::move(a)),
                               "C->V:6.B"));
        for (auto& m : cfg.methods) {
            OpArgs g;
            g.scalars["s"] = cfg.visitorRoot;
            g.scalars["a"] = m.visitorClass;
            g.scalars["m"] = cfg.visitName;
            g.scalars["r"] = m.returnType;
            g.scalars["tp"] = cfg.typeParam;
            ops.push_back(withProv(makeOp(OpKind::PullUpWithGenerics, std::move(g)),
                                   "C->V:6.B"));
        }
    } else {
        OpArgs a;
        a.groups["subs"] = cfg.visitorClasses();
        a.scalars["s"] = cfg.visitorRoot;
        a.groups["pms"] = {cfg.visitName};
        a.scalars["ret"] = cfg.methods.empty() ? "void" : cfg.methods[0].returnType;
        ops.push_back(withProv(makeOp(OpKind::ExtractSuperClass, std::move(a)), "C->V:6"));
    }
    // 7) generalise the visitor parameter
    for (auto& m : cfg.methods) {
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.aux(m.name);
        a.scalars["p"] = cfg.visitorParam;
        a.scalars["t"] = m.visitorClass;
        a.scalars["st"] = cfg.generics ? cfg.visitorRoot + "<" + m.returnType + ">"
                                       : cfg.visitorRoot;
        ops.push_back(withProv(makeOp(OpKind::GeneraliseParameter, std::move(a)), "C->V:7"));
    }
    // 8) merge the aux methods into accept
    if (!cfg.methods.empty()) {
        const std::string keep = cfg.aux(cfg.methods[0].name);
        std::vector<std::string> copies;
        for (size_t i = 1; i < cfg.methods.size(); ++i) copies.push_back(cfg.aux(cfg.methods[i].name));
        if (!copies.empty()) {
            for (auto& c : C) {
                OpArgs a;
                a.scalars["c"] = c;
                a.scalars["m"] = keep;
                a.groups["copies"] = copies;
                a.scalars["t"] = cfg.visitorRoot;
                a.scalars["r"] = cfg.generics ? cfg.typeParam : cfg.methods[0].returnType;
                ops.push_back(withProv(
                    makeOp(OpKind::ReplaceMethodcodeDuplicatesInverter, std::move(a)),
                    "C->V:8.1"));
            }
            for (auto& copy : copies) {
                {
                    OpArgs a;
                    a.scalars["c"] = C.front();
                    a.groups["attrs"] = cfg.attributes;
                    a.scalars["m"] = copy;
                    a.scalars["s"] = S;
                    ops.push_back(withProv(makeOp(OpKind::PullUpImplementation, std::move(a)),
                                           "C->V:8.2"));
                }
                for (size_t i = 1; i < C.size(); ++i) {
                    OpArgs a;
                    a.scalars["c"] = C[i];
                    a.scalars["m"] = copy;
                    a.scalars["s"] = S;
                    a.scalars["n"] = keep;
                    ops.push_back(withProv(
                        makeOp(OpKind::SafeDeleteDelegatorOverriding, std::move(a)),
                        "C->V:8.3"));
                }
                emitCleanupInlineAndDelete(cfg, ops, S, copy, {}, "C->V:8.4");
            }
        }
        OpArgs a;
        a.scalars["c"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = keep;
        a.scalars["sig"] = Term(std::vector<std::string>{cfg.visitorRoot});
        a.scalars["n"] = cfg.acceptName;
        ops.push_back(withProv(makeOp(OpKind::RenameInHierarchyNoOverloading, std::move(a)),
                               "C->V:8.5"));
    }
    // interface variation, practical mode: the accept declaration stays on the
    // abstract class (IntroduceDownCast / pullupAbstractMethod to the
    // interface are not automated).
    return chain;
}

Chain buildVisitorToComposite(const TransformConfig& cfg) {
    Chain chain;
    auto& ops = chain.ops;
    const std::string S = cfg.effectiveRoot();
    const std::vector<std::string>& C = cfg.concrete;
    std::vector<std::string> businessNames;
    for (auto& m : cfg.methods) businessNames.push_back(m.name);

    // I) one specialized accept overload per visitor
    for (auto& m : cfg.methods) {
        std::string tmpName = cfg.tmp(cfg.acceptName, m.visitorClass);
        if (cfg.generics) {
            OpArgs a;
            a.scalars["s"] = S;
            a.groups["subs"] = C;
            a.scalars["m"] = cfg.acceptName;
            a.groups["rets"] = {m.returnType};
            a.groups["callers"] = {cfg.visitName};
            a.groups["invoked"] = businessNames;
            a.scalars["n"] = tmpName;
            a.scalars["sig"] = Term(std::vector<std::string>{cfg.visitorRoot});
            ops.push_back(withProv(makeOp(OpKind::DuplicateMethodInHierarchyGen, std::move(a)),
                                   "V->C:I.B"));
        } else {
            OpArgs a;
            a.scalars["s"] = S;
            a.groups["subs"] = C;
            a.scalars["m"] = cfg.acceptName;
            a.groups["callers"] = {cfg.visitName};
            a.groups["invoked"] = businessNames;
            a.scalars["n"] = tmpName;
            a.scalars["sig"] = Term(std::vector<std::string>{cfg.visitorRoot});
            ops.push_back(withProv(makeOp(OpKind::DuplicateMethodInHierarchy, std::move(a)),
                                   "V->C:I.1"));
        }
        {
            OpArgs a;
            a.scalars["s"] = S;
            a.groups["subs"] = C;
            a.scalars["m"] = tmpName;
            a.scalars["t"] = cfg.visitorRoot;
            if (cfg.specialiseCarriesParamName) a.scalars["p"] = cfg.visitorParam;
            a.groups["stypes"] = cfg.visitorClasses();
            a.scalars["nt"] = m.visitorClass;
            ops.push_back(withProv(makeOp(OpKind::SpecialiseParameter, std::move(a)),
                                   "V->C:I.2"));
        }
        {
            OpArgs a;
            a.scalars["s"] = S;
            a.groups["subs"] = C;
            a.scalars["m"] = tmpName;
            a.scalars["t"] = m.visitorClass;
            a.scalars["pn"] = cfg.visitorParam;
            a.scalars["t2"] = cfg.visitorRoot;
            a.scalars["n"] = cfg.acceptName;
            ops.push_back(withProv(makeOp(OpKind::RenameDelegatorWithOverloading, std::move(a)),
                                   "V->C:I.3"));
        }
    }
    // II) drop the generic accept
    {
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.acceptName;
        a.groups["invoked"] = {cfg.visitName};
        a.scalars["t"] = cfg.visitorRoot;
        ops.push_back(withProv(makeOp(OpKind::DeleteMethodInHierarchy, std::move(a)), "V->C:II"));
    }
    // III) drop the abstract visit declarations
    for (auto& c : C) {
        OpArgs a;
        a.scalars["s"] = cfg.visitorRoot;
        a.groups["subs"] = cfg.visitorClasses();
        a.scalars["m"] = cfg.visitName;
        a.scalars["sig"] = Term(std::vector<std::string>{c});
        ops.push_back(withProv(makeOp(OpKind::PushDownAll, std::move(a)), "V->C:III"));
    }
    // IV) inline visit into accept
    for (auto& m : cfg.methods)
        for (auto& c : C) {
            OpArgs a;
            a.scalars["s"] = m.visitorClass;
            a.scalars["m"] = cfg.visitName;
            a.scalars["sig"] = Term(std::vector<std::string>{c});
            a.scalars["n"] = cfg.acceptName;
            ops.push_back(withProv(makeOp(OpKind::InlineAndDelete, std::move(a)), "V->C:IV"));
        }
    // V) rename the overloads back to the aux names
    for (auto& m : cfg.methods) {
        OpArgs a;
        a.scalars["c"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.acceptName;
        a.scalars["n"] = cfg.aux(m.name);
        a.scalars["sig"] = Term(std::vector<std::string>{m.visitorClass});
        ops.push_back(withProv(makeOp(OpKind::RenameOverloadedMethodInHierarchy, std::move(a)),
                               "V->C:V"));
    }
    // VI) drop the visitor parameter (parameterless methods only)
    for (auto& m : cfg.methods) {
        if (cfg.isParamMethod(m.name)) continue;
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.aux(m.name);
        a.scalars["sig"] = Term(std::vector<std::string>{m.visitorClass});
        a.scalars["t"] = m.visitorClass;
        a.scalars["p"] = cfg.visitorParam;
        ops.push_back(withProv(makeOp(OpKind::RemoveParameter, std::move(a)), "V->C:VI.A"));
    }
    // VII) fold duplicated recursion back through the business method
    if (!cfg.interfaceMode) {
        for (auto& m : cfg.methods) {
            OpArgs a;
            a.scalars["s"] = S;
            a.groups["subs"] = C;
            a.scalars["d"] = m.name;
            a.scalars["tgt"] = cfg.aux(m.name);
            a.scalars["sig"] = sigTerm(m.paramTypes);
            ops.push_back(withProv(makeOp(OpKind::ReplaceMethodDuplication, std::move(a)),
                                   "V->C:VII"));
        }
    }
    // VIII) push the business delegators down, keep them abstract on the root
    for (auto& m : cfg.methods) {
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["attrs"] = {};
        a.groups["subs"] = C;
        a.scalars["m"] = m.name;
        a.scalars["sig"] = sigTerm(m.paramTypes);
        ops.push_back(withProv(makeOp(OpKind::PushDownImplementation, std::move(a)),
                               "V->C:VIII"));
    }
    // IX) drop the abstract aux declarations
    for (auto& m : cfg.methods) {
        OpArgs a;
        a.scalars["s"] = S;
        a.groups["subs"] = C;
        a.scalars["m"] = cfg.aux(m.name);
        a.scalars["sig"] = cfg.isParamMethod(m.name)
                               ? Term(std::vector<std::string>{m.visitorClass})
                               : Term(std::vector<std::string>{});
        ops.push_back(withProv(makeOp(OpKind::PushDownAll, std::move(a)), "V->C:IX"));
    }
    // X) inline the aux methods away
    for (auto& m : cfg.methods)
        for (auto& c : C) {
            std::vector<std::string> sig =
                cfg.isParamMethod(m.name) ? std::vector<std::string>{m.visitorClass}
                                          : std::vector<std::string>{};
            emitCleanupInlineAndDelete(cfg, ops, c, cfg.aux(m.name), sig, "V->C:X");
        }
    // XI.A) collapse the parameter objects
    for (auto& m : cfg.methods) {
        if (!cfg.isParamMethod(m.name)) continue;
        std::vector<std::string> hierarchy = C;
        for (auto& cls : hierarchy) {
            OpArgs a;
            a.scalars["s"] = cls;
            a.scalars["m"] = m.name;
            a.scalars["c"] = m.visitorClass;
            a.groups["fields"] = m.paramNames;
            std::vector<std::string> getters, fvars;
            for (auto& pn : m.paramNames) {
                getters.push_back("get" + pn);
                fvars.push_back(pn + "var");
            }
            a.groups["getters"] = getters;
            a.groups["fvars"] = fvars;
            ops.push_back(withProv(makeOp(OpKind::InlineConstructor, std::move(a)),
                                   "V->C:XI.A.1"));
            for (auto& pn : m.paramNames) {
                OpArgs f;
                f.scalars["s"] = cls;
                f.scalars["m"] = m.name;
                f.scalars["f"] = pn;
                ops.push_back(withProv(makeOp(OpKind::InlineLocalField, std::move(f)),
                                       "V->C:XI.A.2"));
            }
        }
        for (auto& pn : m.paramNames) {
            OpArgs g;
            g.scalars["s"] = m.visitorClass;
            g.scalars["m"] = "get" + pn;
            g.scalars["n"] = m.name;
            ops.push_back(withProv(makeOp(OpKind::InlineAndDelete, std::move(g)),
                                   "V->C:XI.A.3"));
        }
        for (auto& cls : hierarchy) {
            for (auto& pn : m.paramNames) {
                OpArgs v;
                v.scalars["s"] = cls;
                v.scalars["m"] = m.name;
                v.scalars["v"] = pn + "var";
                ops.push_back(withProv(makeOp(OpKind::InlineLocalVariable, std::move(v)),
                                       "V->C:XI.A.4"));
            }
        }
    }
    // XI/XII) delete the visitor classes, then the root
    std::vector<std::string> allClasses = C;
    allClasses.push_back(S);
    for (auto& v : cfg.visitorClasses()) allClasses.push_back(v);
    allClasses.push_back(cfg.visitorRoot);
    std::sort(allClasses.begin(), allClasses.end());
    std::vector<std::string> otherMethods = {cfg.acceptName};
    for (auto& m : cfg.methods) otherMethods.push_back(m.name);
    auto deleteClass = [&](const std::string& victim, const std::string& super,
                           const std::string& prov) {
        OpArgs a;
        a.scalars["a"] = victim;
        a.scalars["s"] = super;
        std::vector<std::string> cls = allClasses;
        cls.erase(std::remove(cls.begin(), cls.end(), victim), cls.end());
        a.groups["classes"] = cls;
        a.groups["classmethods"] = {cfg.visitName};
        a.groups["othermethods"] = otherMethods;
        ops.push_back(withProv(makeOp(OpKind::DeleteClass, std::move(a)), prov));
    };
    for (auto& m : cfg.methods) deleteClass(m.visitorClass, cfg.visitorRoot, "V->C:XI");
    deleteClass(cfg.visitorRoot, "java.lang.Object", "V->C:XII");
    // XII.C) multilevel cleanup: delete the materialized copies
    for (auto& ie : cfg.inherited)
        for (auto& m : ie.methods) {
            const BusinessMethod* bm = cfg.method(m);
            OpArgs a;
            a.scalars["c"] = ie.cls;
            a.scalars["m"] = m;
            a.scalars["sig"] = sigTerm(bm ? bm->paramTypes : std::vector<std::string>{});
            a.scalars["s"] = ie.super;
            ops.push_back(withProv(makeOp(OpKind::DeleteMethod, std::move(a)), "V->C:XII.C"));
        }
    return chain;
}

Chain concatChains(const Chain& a, const Chain& b) {
    Chain out = a;
    out.ops.insert(out.ops.end(), b.ops.begin(), b.ops.end());
    return out;
}

Formula composeChainPrecondition(const Chain& chain) {
    Formula acc = Formula::top();
    for (auto it = chain.ops.rbegin(); it != chain.ops.rend(); ++it) {
        Formula translated = backwardSubstitute(acc, it->backward);
        acc = simplify(normalizeAtoms(
            Formula::mkAnd({it->pre, std::move(translated)})));
    }
    return acc;
}

std::pair<Program, RunReport> runChain(const Program& p, const Chain& chain, RunMode mode) {
    RunReport report;
    Program cur = p;
    if (mode == RunMode::Precomposed) {
        Formula composed = composeChainPrecondition(chain);
        FactContext ctx(p);
        HoldsResult r = checkHolds(ctx, composed);
        if (!r.holds) {
            report.succeeded = false;
            report.failure = "composed precondition fails: " +
                             (r.witness ? r.witness->str() : std::string("(unknown)"));
            return {cur, report};
        }
    }
    for (size_t i = 0; i < chain.ops.size(); ++i) {
        const CatalogOp& op = chain.ops[i];
        try {
            auto [next, opRep] = applyOp(cur, op, mode == RunMode::Checked);
            cur = std::move(next);
            report.steps.push_back(std::move(opRep));
        } catch (const Error& e) {
            report.succeeded = false;
            report.failure = "step " + std::to_string(i + 1) + " [" + op.provenance + "] " +
                             op.display() + ": " + e.what();
            return {cur, report};
        }
    }
    if (cur.entry) {
        try {
            report.traceHash = evaluate(cur).hash();
            report.hasTrace = true;
        } catch (const Error&) {
            report.hasTrace = false;
        }
    }
    return {cur, report};
}

std::pair<Program, RunReport> replayScript(const Program& p, const std::string& script,
                                           RunMode mode) {
    Chain chain;
    chain.ops = parseScript(script);
    return runChain(p, chain, mode);
}

} // namespace repat
