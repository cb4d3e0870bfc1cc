#pragma once

#include "repat/backward.hpp"
#include "repat/formula.hpp"

#include <map>
#include <string>
#include <vector>

namespace repat {

enum class OpKind {
    CreateEmptyClass,
    CreateIndirectionInSuperClass,
    AddParameterWithReuse,
    MoveMethodWithDelegate,
    RenameInHierarchyNoOverloading,
    RenameOverloadedMethodInHierarchy,
    RenameDelegatorWithOverloading,
    ExtractSuperClass,
    ExtractSuperClassWithoutPullUp,
    GeneraliseParameter,
    ReplaceMethodcodeDuplicatesInverter,
    SafeDeleteDelegatorOverriding,
    PullUpAbstract,
    PullUpImplementation,
    PullUpWithGenerics,
    InlineAndDelete,
    InlineMethodInvocations,
    DuplicateMethodInHierarchy,
    DuplicateMethodInHierarchyGen,
    SpecialiseParameter,
    DeleteMethodInHierarchy,
    PushDownAll,
    PushDownImplementation,
    PushDownNotRedefinedMethod,
    ReplaceMethodDuplication,
    RemoveParameter,
    DeleteClass,
    DeleteMethod,
    IntroduceParameterObject,
    InlineConstructor,
    InlineLocalField,
    InlineLocalVariable,
    WidenFieldVisibility,
    BoxReturnTypes,
    IntroduceDownCast,
    DeleteDownCast,
};

const char* opKindName(OpKind k);

/// Arguments of a bound operation: scalar formals plus expansion groups
/// (e.g. the subclass list, attribute list, caller-method list).
struct OpArgs {
    Binding scalars;
    std::map<std::string, std::vector<std::string>> groups;

    std::string scalar(const std::string& name) const;
    std::vector<std::string> group(const std::string& name) const;
    std::vector<std::string> listArg(const std::string& name) const;
};

/// A bound refactoring-operation instance. `pre` is the formal precondition
/// used by the composition calculus; `guard` is what apply() actually checks
/// at the program point (identical for all but one operation, see the op
/// template notes).
struct CatalogOp {
    OpKind kind = OpKind::CreateEmptyClass;
    OpArgs args;
    std::string provenance;
    Formula pre;
    Formula guard;
    BackwardDescription backward;

    std::string display() const;
};

CatalogOp makeOp(OpKind kind, OpArgs args, std::string provenance = "");

struct OpReport {
    std::string op;
    std::string provenance;
    bool preconditionHeld = true;
    std::vector<std::string> created;
    std::vector<std::string> deleted;
    std::vector<std::string> renamed;
    std::vector<std::string> warnings;
};

/// Applies one operation. When checkGuard is set, evaluates the executable
/// guard first and throws Error(PreconditionFailed) carrying the witness.
std::pair<Program, OpReport> applyOp(const Program& p, const CatalogOp& op,
                                     bool checkGuard = true);

/// Template access (used by tests enumerating the vocabulary).
std::vector<OpKind> allOpKinds();

} // namespace repat
