#pragma once

#include "repat/ast.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace repat {

/// Chunks emitted by System.out.print / println (println chunks end in '\n').
struct OutputTrace {
    std::vector<std::string> chunks;

    std::string text() const {
        std::string s;
        for (auto& c : chunks) s += c;
        return s;
    }
    bool operator==(const OutputTrace& o) const { return chunks == o.chunks; }
    uint64_t hash() const;
};

/// Runs the program's entry point (`static void main()` on program.entry or a
/// class named Main). Deterministic; bounded by stepBudget (or the
/// REPAT_STEP_BUDGET environment variable when stepBudget == 0).
OutputTrace evaluate(const Program& p, long stepBudget = 0);

} // namespace repat
