#include "repat/chains.hpp"
#include "repat/facts.hpp"
#include "repat/parser.hpp"
#include "repat/printer.hpp"
#include "repat/script.hpp"
#include "repat/structural.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace repat;
namespace fs = std::filesystem;

namespace {

// atomic per-file emission: write-temp-then-rename
void writeFileAtomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) fail(ErrorKind::IoError, "cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

void emitProgram(const Program& p, const std::string& dir) {
    fs::create_directories(dir);
    for (auto& [name, text] : renderFiles(p)) writeFileAtomic(fs::path(dir) / name, text);
}

std::vector<std::string> sortedLiteralLines(const Formula& f) {
    auto lits = literalSet(f);
    std::vector<std::string> lines;
    if (!lits) {
        lines.push_back("(not a flat conjunction)");
        lines.push_back(f.str());
        return lines;
    }
    for (auto& l : *lits) lines.push_back(l.str());
    std::sort(lines.begin(), lines.end());
    return lines;
}

Program loadInput(const std::string& dir, const TransformConfig* cfg,
                  const std::string& entryFlag) {
    Program p = parseDirectory(dir);
    if (!entryFlag.empty()) {
        size_t dot = entryFlag.find('.');
        if (dot == std::string::npos)
            fail(ErrorKind::ConfigInvalid, "--entry must be Class.method");
        p.entry = {{entryFlag.substr(0, dot)}, {entryFlag.substr(dot + 1)}};
    } else if (cfg && cfg->entry) {
        p.entry = cfg->entry;
    } else if (p.hasClass("Main")) {
        p.entry = {{"Main"}, {"main"}};
    }
    return p;
}

int cmdCheck(const std::string& configPath, const std::string& input,
             const std::string& format) {
    TransformConfig cfg = loadConfigFile(configPath);
    Chain roundTrip = concatChains(buildCompositeToVisitor(cfg), buildVisitorToComposite(cfg));
    Formula pre = composeChainPrecondition(roundTrip);
    auto lines = sortedLiteralLines(pre);
    bool holds = true;
    std::string witness;
    if (!input.empty()) {
        Program p = loadInput(input, &cfg, "");
        FactContext ctx(p);
        HoldsResult r = checkHolds(ctx, pre);
        holds = r.holds;
        if (r.witness) witness = r.witness->str();
    }
    if (format == "json") {
        nlohmann::json j;
        j["literals"] = lines;
        j["holds"] = holds;
        if (!witness.empty()) j["witness"] = witness;
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& l : lines) std::cout << l << "\n";
        if (!input.empty())
            std::cout << (holds ? "HOLDS" : "FAILS: " + witness) << "\n";
    }
    return holds ? 0 : 1;
}

int cmdApply(const std::string& configPath, const std::string& input,
             const std::string& output, const std::string& direction,
             const std::string& mode, bool normalizeVisibility) {
    TransformConfig cfg = loadConfigFile(configPath);
    Program p = loadInput(input, &cfg, "");
    RunMode rm = mode == "precomposed" ? RunMode::Precomposed : RunMode::Checked;
    auto runOne = [&](const Program& start, const Chain& chain) {
        auto [result, report] = runChain(start, chain, rm);
        if (!report.succeeded) {
            std::cerr << report.failure << "\n";
            exit(1);
        }
        return result;
    };
    Program result = p;
    if (direction == "forward") {
        result = runOne(p, buildCompositeToVisitor(cfg));
    } else if (direction == "backward") {
        result = runOne(p, buildVisitorToComposite(cfg));
    } else if (direction == "roundtrip") {
        result = runOne(p, buildCompositeToVisitor(cfg));
        result = runOne(result, buildVisitorToComposite(cfg));
        NormalizationPolicy policy;
        policy.ignoreFieldVisibility = normalizeVisibility;
        if (!structurallyEqual(p, result, policy)) {
            std::cerr << "round trip did not restore the original program:\n"
                      << structuralDiff(p, result, policy);
            if (!output.empty()) emitProgram(result, output);
            return 1;
        }
        std::cout << "roundtrip: structurally equal\n";
    } else {
        std::cerr << "unknown direction " << direction << "\n";
        return 2;
    }
    if (!output.empty()) emitProgram(result, output);
    return 0;
}

int cmdFacts(const std::string& input, const std::string& filter, const std::string& format) {
    Program p = loadInput(input, nullptr, "");
    std::set<Predicate> preds;
    if (!filter.empty()) {
        std::istringstream ss(filter);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) preds.insert(canonicalPredicate(name));
    }
    auto facts = extractAllFacts(p, preds.empty() ? nullptr : &preds);
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (auto& f : facts) j.push_back(f.str());
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto& f : facts) std::cout << f.str() << "\n";
    }
    return 0;
}

int cmdEval(const std::string& input, const std::string& entry) {
    Program p = loadInput(input, nullptr, entry);
    OutputTrace t = evaluate(p);
    std::cout << t.text();
    return 0;
}

int cmdReplay(const std::string& input, const std::string& scriptPath,
              const std::string& output, const std::string& mode) {
    Program p = loadInput(input, nullptr, "");
    std::ifstream in(scriptPath);
    if (!in) fail(ErrorKind::IoError, "cannot read script " + scriptPath);
    std::ostringstream ss;
    ss << in.rdbuf();
    RunMode rm = mode == "precomposed" ? RunMode::Precomposed : RunMode::Checked;
    auto [result, report] = replayScript(p, ss.str(), rm);
    if (!report.succeeded) {
        std::cerr << report.failure << "\n";
        return 1;
    }
    std::cout << "replayed " << report.steps.size() << " operations\n";
    if (!output.empty()) emitProgram(result, output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"repat: Composite<->Visitor refactoring engine for MiniJ sources"};
    app.require_subcommand(1);

    std::string config, input, output, format = "text", direction = "roundtrip";
    std::string mode = "checked", filter, entry, script;
    bool normalizeVisibility = false;

    CLI::App* check = app.add_subcommand("check",
        "compose the round-trip precondition and test it against the input");
    check->add_option("--config", config)->required();
    check->add_option("--input", input);
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* apply = app.add_subcommand("apply", "run a transformation chain");
    apply->add_option("--config", config)->required();
    apply->add_option("--input", input)->required();
    apply->add_option("--output", output);
    apply->add_option("--direction", direction)
        ->check(CLI::IsMember({"forward", "backward", "roundtrip"}));
    apply->add_option("--mode", mode)->check(CLI::IsMember({"checked", "precomposed"}));
    apply->add_flag("--normalize-visibility", normalizeVisibility);

    CLI::App* facts = app.add_subcommand("facts", "dump the ground facts of a program");
    facts->add_option("--input", input)->required();
    facts->add_option("--filter", filter, "comma-separated predicate names");
    facts->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    CLI::App* eval = app.add_subcommand("eval", "interpret the program's entry point");
    eval->add_option("--input", input)->required();
    eval->add_option("--entry", entry, "Class.method");

    CLI::App* replay = app.add_subcommand("replay", "replay an operation script");
    replay->add_option("--input", input)->required();
    replay->add_option("--script", script)->required();
    replay->add_option("--output", output);
    replay->add_option("--mode", mode)->check(CLI::IsMember({"checked", "precomposed"}));

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmdCheck(config, input, format);
        if (apply->parsed())
            return cmdApply(config, input, output, direction, mode, normalizeVisibility);
        if (facts->parsed()) return cmdFacts(input, filter, format);
        if (eval->parsed()) return cmdEval(input, entry);
        if (replay->parsed()) return cmdReplay(input, script, output, mode);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::SyntaxError:
        case ErrorKind::ConfigInvalid:
        case ErrorKind::ScriptParseError:
        case ErrorKind::IoError:
            return 2;
        default:
            return 1;
        }
    }
    return 2;
}
