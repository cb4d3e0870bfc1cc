#include "repat/chains.hpp"
#include "repat/facts.hpp"
#include "repat/parser.hpp"
#include "repat/printer.hpp"
#include "repat/structural.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace repat;

namespace {

Program parseSources(const std::vector<std::string>& sources) {
    std::vector<Program> frags;
    int i = 0;
    for (auto& s : sources) frags.push_back(parse(s, "<source-" + std::to_string(i++) + ">"));
    return mergePrograms(frags);
}

std::vector<std::string> literalLines(const Formula& f) {
    std::vector<std::string> out;
    auto lits = literalSet(f);
    if (!lits) {
        out.push_back(f.str());
        return out;
    }
    for (auto& l : *lits) out.push_back(l.str());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

PYBIND11_MODULE(repat, m) {
    m.doc() = "Composite<->Visitor refactoring engine for MiniJ sources";

    py::class_<Program>(m, "Program")
        .def("pretty_print", [](const Program& p) { return prettyPrint(p); })
        .def("class_names", [](const Program& p) {
            std::vector<std::string> out;
            for (auto& [n, c] : p.classes) out.push_back(n);
            return out;
        })
        .def("set_entry", [](Program& p, const std::string& cls, const std::string& method) {
            p.entry = {{cls}, {method}};
        });

    m.def("parse_program", [](const std::string& text) { return parse(text, "<python>"); });
    m.def("parse_sources", &parseSources);
    m.def("load_directory", [](const std::string& dir) { return parseDirectory(dir); });

    m.def("evaluate", [](const Program& p) {
        OutputTrace t = evaluate(p);
        return t.text();
    });

    m.def("facts", [](const Program& p) {
        std::vector<std::string> out;
        for (auto& f : extractAllFacts(p)) out.push_back(f.str());
        return out;
    });
    m.def("evaluate_fact", [](const Program& p, const std::string& fact) {
        return evaluateFact(p, parseFact(fact));
    });

    m.def("structurally_equal",
          [](const Program& a, const Program& b, bool ignoreFieldVisibility) {
              NormalizationPolicy policy;
              policy.ignoreFieldVisibility = ignoreFieldVisibility;
              return structurallyEqual(a, b, policy);
          },
          py::arg("a"), py::arg("b"), py::arg("ignore_field_visibility") = false);

    m.def("load_config", &loadConfig);
    py::class_<TransformConfig>(m, "TransformConfig");

    m.def("compose_roundtrip_precondition", [](const TransformConfig& cfg) {
        Chain rt = concatChains(buildCompositeToVisitor(cfg), buildVisitorToComposite(cfg));
        return literalLines(composeChainPrecondition(rt));
    });

    m.def("forward", [](const Program& p, const TransformConfig& cfg) {
        auto [result, report] = runChain(p, buildCompositeToVisitor(cfg), RunMode::Checked);
        if (!report.succeeded) throw std::runtime_error(report.failure);
        return result;
    });
    m.def("backward", [](const Program& p, const TransformConfig& cfg) {
        auto [result, report] = runChain(p, buildVisitorToComposite(cfg), RunMode::Checked);
        if (!report.succeeded) throw std::runtime_error(report.failure);
        return result;
    });
    m.def("replay_script", [](const Program& p, const std::string& script) {
        auto [result, report] = replayScript(p, script, RunMode::Checked);
        if (!report.succeeded) throw std::runtime_error(report.failure);
        return result;
    });
}
