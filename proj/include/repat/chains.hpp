#pragma once

#include "repat/catalog.hpp"
#include "repat/interp.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace repat {

/// One business method of the composite hierarchy.
struct BusinessMethod {
    std::string name;
    std::vector<std::string> paramTypes;
    std::vector<std::string> paramNames;
    std::string returnType = "void";
    std::string visitorClass; // vis(m)
};

/// Extra cleanup arguments some corpora pass to InlineAndDelete (see the
/// config schema notes).
struct CleanupContext {
    std::string invocator;
    std::vector<std::string> othermethods;
    std::vector<std::string> otherclasses;
};

/// Configuration of one Composite<->Visitor transformation instance.
struct TransformConfig {
    std::string root;                    // S
    std::vector<std::string> concrete;   // C, in config order
    std::vector<BusinessMethod> methods; // in config order
    std::vector<std::string> paramMethods; // subset names (M_P)
    std::string visitorRoot = "Visitor";
    std::string acceptName = "accept";
    std::string visitName = "visit";
    std::string visitorParam = "v";
    std::string auxPattern = "{m}Aux"; // {m} placeholder
    std::string tmpPattern = "{m}{V}addspecializedMethodtmp";
    std::vector<std::string> attributes; // composite fields named in Move/Push ops
    std::map<std::string, std::string> receiverNames; // class -> moved receiver name
    bool generics = false;
    std::string typeParam = "T";
    bool inlineRecursiveCalls = true;
    bool interfaceMode = false; // practical interface variation
    std::string interfaceName;  // I (interface root)
    std::string abstractClassName; // extracted abstract class under I
    std::vector<std::string> recursiveClasses; // classes whose methods recurse
    struct InheritedEntry {
        std::string cls;
        std::string super;
        std::vector<std::string> methods;
    };
    std::vector<InheritedEntry> inherited; // i(c)/s(c) for the multilevel variation
    std::map<std::string, CleanupContext> cleanup; // per deleted aux/method
    std::optional<std::pair<std::string, std::string>> entry;
    bool specialiseCarriesParamName = false;

    std::string aux(const std::string& m) const;
    std::string tmp(const std::string& m, const std::string& visitorCls) const;
    const BusinessMethod* method(const std::string& name) const;
    bool isParamMethod(const std::string& name) const;
    std::vector<std::string> visitorClasses() const;
    /// effective hierarchy root for the transformation (abstract class in
    /// interface mode, root otherwise)
    std::string effectiveRoot() const { return interfaceMode ? abstractClassName : root; }
};

TransformConfig loadConfig(const std::string& jsonText);
TransformConfig loadConfigFile(const std::string& path);

struct Chain {
    std::vector<CatalogOp> ops;
};

Chain buildCompositeToVisitor(const TransformConfig& cfg);
Chain buildVisitorToComposite(const TransformConfig& cfg);
Chain concatChains(const Chain& a, const Chain& b);

/// Fold of preconditions through backward descriptions, right to left:
/// P = pre(op1) & backward(op1)(pre(op2) & ...). Simplified; IsSubType
/// tautologies normalized.
Formula composeChainPrecondition(const Chain& chain);

enum class RunMode { Checked, Precomposed };

struct RunReport {
    std::vector<OpReport> steps;
    bool succeeded = true;
    std::string failure;
    uint64_t traceHash = 0;
    bool hasTrace = false;
};

std::pair<Program, RunReport> runChain(const Program& p, const Chain& chain, RunMode mode);

/// Parses and runs a script (identical to runChain over parseScript).
std::pair<Program, RunReport> replayScript(const Program& p, const std::string& script,
                                           RunMode mode);

} // namespace repat
