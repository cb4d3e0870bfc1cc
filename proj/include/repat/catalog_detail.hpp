#pragma once

#include "repat/catalog.hpp"

namespace repat::detail {

/// Parsed-on-demand operation template. `params` are scalar formals; `groups`
/// maps a group formal (as written in the template texts) to the OpArgs group
/// it iterates over. guardText empty means guard == pre.
struct OpTemplate {
    OpKind kind;
    std::string name;
    std::vector<std::string> params;
    std::vector<std::pair<std::string, std::string>> groups;
    std::string preText;
    std::string guardText;
    std::string backwardText;
};

const std::vector<OpTemplate>& opTemplates();
const OpTemplate& templateFor(OpKind kind);

} // namespace repat::detail
