#include "repat/catalog_detail.hpp"

namespace repat::detail {

// Operation templates. Formal argument names (lowercase) are substituted at
// instantiation; group formals (sub, att, caller, invoked, om, oc, copy, pm,
// cls, cm, nm, ctor, fld, gtr, fvar, pname, osigel, sigel, ret, subAll)
// expand over the bound argument lists; other capitalized tokens are
// metavariables. Rules are tried in listing order, first match wins; "cond"
// rows apply only to entities distinct from the operation's arguments.
// guardText, when present, is the executable precondition checked by apply();
// it differs from preText only where an atom describes pre-chain context
// (see the ledger/erratum notes).

const std::vector<OpTemplate>& opTemplates() {
    static const std::vector<OpTemplate> templates = [] {
        std::vector<OpTemplate> t;

        t.push_back(OpTemplate{
            OpKind::CreateEmptyClass,
            "CreateEmptyClass",
            {"c"},
            {},
            "!ExistsType(c)",
            "",
            R"(
ExistsClass(c) -> true
ExistsType(c) -> true
IsAbstractClass(c) -> false
ExistsMethodDefinition(c,Y) -> false
ExistsMethodDefinitionWithParams(c,Y,[]) -> false
ExistsMethodDefinitionWithParams(c,Y,[T1]) -> false
ExistsMethodDefinitionWithParams(c,Y,[T1;T2]) -> false
ExistsMethodDefinitionWithParams(c,Y,[T1;T2;T3]) -> false
ExistsMethodDefinitionWithParams(c,Y,[T1;T2;T3;T4]) -> false
ExistsMethodDefinitionWithParams(c,Y,[T1;T2;T3;T4;T5]) -> false
IsInheritedMethod(c,Y) -> IsVisible(java.lang.Object,Y,c)
IsInheritedMethodWithParams(c,Y,[]) -> IsVisibleMethod(java.lang.Object,Y,[],c)
IsInheritedMethodWithParams(c,Y,[T1]) -> IsVisibleMethod(java.lang.Object,Y,[T1],c)
IsInheritedMethodWithParams(c,Y,[T1;T2]) -> IsVisibleMethod(java.lang.Object,Y,[T1;T2],c)
IsInheritedMethodWithParams(c,Y,[T1;T2;T3]) -> IsVisibleMethod(java.lang.Object,Y,[T1;T2;T3],c)
IsInheritedMethodWithParams(c,Y,[T1;T2;T3;T4]) -> IsVisibleMethod(java.lang.Object,Y,[T1;T2;T3;T4],c)
IsInheritedMethodWithParams(c,Y,[T1;T2;T3;T4;T5]) -> IsVisibleMethod(java.lang.Object,Y,[T1;T2;T3;T4;T5],c)
IsSubType(c,X) -> false cond
ExtendsDirectly(c,X) -> false cond
ExistsMethodDefinitionWithParams(B,Y,[c]) -> false
ExistsMethodDefinitionWithParams(B,Y,[c;T1]) -> false
ExistsMethodDefinitionWithParams(B,Y,[T1;c]) -> false
ExistsMethodDefinitionWithParams(B,Y,[T1;T2;c]) -> false
ExistsMethodDefinitionWithParams(B,Y,[T1;c;T2]) -> false
ExistsMethodDefinitionWithParams(B,Y,[c;T1;T2]) -> false
IsInheritedMethodWithParams(B,Y,[c]) -> false
IsInheritedMethodWithParams(B,Y,[c;T1]) -> false
IsInheritedMethodWithParams(B,Y,[T1;c]) -> false
IsInheritedMethodWithParams(B,Y,[T1;T2;c]) -> false
IsInheritedMethodWithParams(B,Y,[T1;c;T2]) -> false
IsInheritedMethodWithParams(B,Y,[c;T1;T2]) -> false
ExistsParameterWithName(B,Y,[c],P) -> false
ExistsParameterWithName(B,Y,[c;T1],P) -> false
ExistsParameterWithName(B,Y,[T1;c],P) -> false
ExistsParameterWithName(B,Y,[T1;c;T2],P) -> false
ExistsParameterWithName(B,Y,[T1;T2;c],P) -> false
ExistsParameterWithName(B,Y,[c;T1;T2],P) -> false
ExistsParameterWithType(B,Y,[c],P) -> false
ExistsParameterWithType(B,Y,[c;T1],P) -> false
ExistsParameterWithType(B,Y,[T1;c],P) -> false
ExistsParameterWithType(B,Y,[T1;c;T2],P) -> false
ExistsParameterWithType(B,Y,[T1;T2;c],P) -> false
ExistsParameterWithType(B,Y,[c;T1;T2],P) -> false
IsUsedMethodIn(c,B,Y) -> false
IsUsedMethod(c,B,[T1]) -> false
IsUsedMethod(c,B,[T1;T2]) -> false
IsUsedMethod(c,B,[T1;T2;T3]) -> false
IsUsedMethod(c,B,[T1;T2;T3;T4]) -> false
IsUsedConstructorAsMethodParameter(c,B,Y) -> false
IsUsedConstructorAsInitializer(c,B,Y) -> false
IsUsedConstructorAsObjectReceiver(c,B,Y) -> false
IsUsedConstructorAsMethodParameter(B,c,Y) -> false
IsUsedConstructorAsInitializer(B,c,Y) -> false
IsUsedConstructorAsObjectReceiver(B,c,Y) -> false
IsSubType(B,c) -> false
ExtendsDirectly(B,c) -> false
MethodIsUsedWithType(B,Y,[P],[c]) -> false
MethodIsUsedWithType(B,Y,[P],[c;T1]) -> false
MethodIsUsedWithType(B,Y,[P],[T1;c]) -> false
MethodIsUsedWithType(B,Y,[P],[T1;c;T2]) -> false
MethodIsUsedWithType(B,Y,[P],[T1;T2;c]) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(c,T1,T2,T3) -> true
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(c,T1,T2) -> true
BoundVariableInMethodBody(c,T1,T2) -> false
ExistsField(c,F) -> false
ExistsMethodInvocation(c,Y,T1,X) -> false
ExistsAbstractMethod(c,Y) -> false
IsIndirectlyRecursive(c,Y) -> false
IsVisibleMethod(c,Y,[T1],B) -> false
IsVisibleMethod(c,Y,[T1;T2],B) -> false
IsVisibleMethod(c,Y,[T1;T2;T3],B) -> false
IsVisibleMethod(B,Y,[B],c) -> false
IsVisibleMethod(B,Y,[B;T1],c) -> false
IsVisibleMethod(B,Y,[T1;B],c) -> false
IsVisibleMethod(B,Y,[T1;T2;B],c) -> false
IsVisibleMethod(B,Y,[T1;B;T2],c) -> false
IsVisibleMethod(B,Y,[B;T1;T2],c) -> false
IsInverter(c,Y,T1,T2) -> false
IsDelegator(c,Y,X) -> false
IsAbstractClass(c) -> false
IsUsedMethodIn(c,Y,B) -> false
IsUsedMethodIn(B,Y,c) -> false
IsPrimitiveType(c) -> false
IsPublic(c,Y) -> false
IsProtected(c,Y) -> false
IsPrivate(c,Y) -> false
IsUsedAttributeInMethodBody(c,X,Y) -> false
IsGenericsSubtype(c,[T1],B,[T2]) -> false
IsGenericsSubtype(c,[T1;T2],B,[T4;T3]) -> false
IsGenericsSubtype(c,[T1;T2;T3],B,[T4;T5;T6]) -> false
IsInheritedField(c,F) -> false
IsOverridden(c,Y) -> false
IsOverloaded(c,Y) -> false
IsOverriding(c,Y) -> false
IsRecursiveMethod(c,Y) -> false
HasReturnType(c,Y,T1) -> false
HasParameterType(c,T1) -> false
HasParameterType(B,c) -> false
MethodHasParameterType(c,Y,T1) -> false
AllSubclasses(c,[C1;C2;C3]) -> false
ExtendsDirectly(c,java.lang.Object) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::CreateIndirectionInSuperClass,
            "CreateIndirectionInSuperClass",
            {"s", "m", "sig", "r", "n"},
            {{"sub", "subs"}},
            "ExistsClass(s) & IsAbstractClass(s) & ExistsMethodDefinitionWithParams(s,m,[sig])"
            " & ExistsAbstractMethod(s,m) & !IsInheritedMethod(s,n)"
            " & !IsInheritedMethodWithParams(s,n,[sig]) & !ExistsMethodDefinitionWithParams(s,n,[sig])"
            " & AllSubclasses(s,[subs]) & HasReturnType(s,m,r) & !IsPrivate(s,m) & !IsPrivate(sub,m)"
            " & ExistsMethodDefinition(s,m) & ExistsMethodDefinition(sub,m)"
            " & !ExistsMethodDefinition(s,n) & !ExistsMethodDefinition(sub,n)",
            "",
            R"(
ExistsAbstractMethod(s,n) -> true
ExistsAbstractMethod(s,m) -> false
IsDelegator(s,m,n) -> true
IsInheritedMethodWithParams(s,n,[sig]) -> false
IsOverriding(s,n) -> false
ExistsType(r) -> true
HasReturnType(s,n,r) -> HasReturnType(s,m,r)
HasReturnType(sub,n,r) -> HasReturnType(s,m,r)
ExistsMethodDefinition(s,n) -> true
ExistsMethodDefinition(sub,n) -> true
ExistsMethodDefinitionWithParams(s,n,[sig]) -> true
ExistsMethodDefinitionWithParams(sub,n,[sig]) -> true
ExistsParameterWithName(s,n,[sig],N) -> false
ExistsParameterWithName(sub,n,[sig],N) -> false
ExistsParameterWithName(s,n,[V],N) -> ExistsParameterWithName(s,m,[V],N)
ExistsParameterWithName(sub,n,[V],N) -> ExistsParameterWithName(sub,m,[V],N)
ExistsMethodDefinition(sub,m) -> false
ExistsMethodDefinitionWithParams(sub,m,[sig]) -> false
IsIndirectlyRecursive(sub,n) -> IsRecursiveMethod(sub,m)
ExistsMethodInvocation(sub,n,s,m) -> IsRecursiveMethod(sub,m)
ExistsMethodInvocation(s,m,sub,n) -> true
BoundVariableInMethodBody(s,n,V) -> BoundVariableInMethodBody(s,m,V)
BoundVariableInMethodBody(sub,n,V) -> BoundVariableInMethodBody(sub,m,V)
IsOverloaded(s,n) -> false
IsOverloaded(sub,n) -> false
IsOverridden(s,n) -> false
IsOverridden(sub,n) -> IsOverridden(sub,m)
IsOverriding(sub,n) -> IsOverriding(sub,m)
IsRecursiveMethod(s,n) -> false
IsRecursiveMethod(sub,n) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,n,N,V) -> AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,N,V)
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(sub,n,N,V) -> AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(sub,m,N,V)
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,n,N) -> AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,N)
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(sub,n,N) -> AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(sub,m,N)
IsPrivate(s,V) -> false
IsPrivate(sub,V) -> false
IsPrivate(s,n) -> false
IsPrivate(sub,n) -> false
IsOverriding(sub,n) -> IsOverriding(sub,m)
IsDelegator(sub,n,V) -> IsDelegator(sub,m,V)
IsDelegator(sub,V,n) -> IsDelegator(sub,V,m)
IsInheritedMethodWithParams(sub,n,[sig]) -> IsVisibleMethod(s,m,[sig],sub)
IsVisibleMethod(s,m,[sig],sub) -> true
MethodIsUsedWithType(sub,n,[sig],[sig]) -> MethodIsUsedWithType(sub,m,[sig],[sig])
IsUsedMethod(sub,n,[sig]) -> IsUsedMethod(sub,m,[sig])
IsUsedMethodIn(sub,n,V) -> IsUsedMethodIn(sub,m,V)
IsInverter(sub,n,V,V1) -> IsInverter(sub,m,V,V1)
ExistsMethodInvocation(sub,V,V1,n) -> ExistsMethodInvocation(sub,V,V1,m)
IsIndirectlyRecursive(sub,n) -> IsIndirectlyRecursive(sub,m)
BoundVariableInMethodBody(sub,n,V) -> BoundVariableInMethodBody(sub,n,V)
IsOverridden(sub,n) -> IsOverridden(sub,m)
)"});

        t.push_back(OpTemplate{
            OpKind::AddParameterWithReuse,
            "AddParameterWithReuse",
            {"s", "m", "t", "p"},
            {{"sub", "subs"}, {"subAll", "subs"}},
            "!BoundVariableInMethodBody(s,m,p) & ExistsClass(s) & ExistsMethodDefinition(s,m)"
            " & ExistsMethodDefinitionWithParams(s,m,[]) & !ExistsMethodDefinitionWithParams(s,m,[t])"
            " & !IsInheritedMethodWithParams(s,m,[t]) & !ExistsParameterWithName(s,m,[],p)"
            " & ExistsType(t) & AllSubclasses(s,[subs])",
            "",
            R"(
ExistsMethodDefinitionWithParams(s,m,[]) -> false
ExistsMethodDefinitionWithParams(s,m,[t]) -> true
ExistsMethodDefinitionWithParams(sub,m,[]) -> !ExistsMethodDefinitionWithParams(sub,m,[])
ExistsMethodDefinitionWithParams(sub,m,[t]) -> ExistsMethodDefinitionWithParams(sub,m,[])
ExistsParameterWithName(s,m,[t],p) -> true
ExistsParameterWithName(sub,m,[t],p) -> true
ExistsParameterWithType(s,m,[t],t) -> true
ExistsParameterWithType(sub,m,[t],t) -> true
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,p,T) -> true
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(sub,m,p,T) -> true
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,p) -> (!IsOverloaded(s,m) & !IsOverloaded(subAll,m))
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(sub,m,p) -> (!IsOverloaded(s,m) & !IsOverloaded(subAll,m))
IsUsedConstructorAsMethodParameter(t,s,m) -> true
IsUsedConstructorAsMethodParameter(t,sub,m) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::MoveMethodWithDelegate,
            "MoveMethodWithDelegate",
            {"src", "dst", "m", "osig", "r", "n", "o", "o2", "nsig"},
            {{"att", "attrs"}},
            "ExistsClass(src) & ExistsClass(dst) & ExistsMethodDefinitionWithParams(src,m,[osig])"
            " & ExistsParameterWithType(src,m,[osig],dst) & ExistsParameterWithName(src,m,[osig],o)"
            " & !ExistsMethodDefinitionWithParams(dst,n,[nsig]) & HasReturnType(src,m,r)"
            " & !IsPrivate(src,m) & !IsPrivate(src,att)",
            "",
            R"(
ExistsMethodDefinitionWithParams(src,m,[osig]) -> true
ExistsMethodDefinition(dst,n) -> true
ExistsMethodDefinitionWithParams(dst,n,[nsig]) -> true
HasReturnType(dst,n,r) -> HasReturnType(src,m,r)
BoundVariableInMethodBody(dst,n,M) -> BoundVariableInMethodBody(src,m,M)
ExistsParameterWithName(dst,n,[nsig],o2) -> true
ExistsParameterWithName(dst,n,[nsig],o) -> false
ExistsParameterWithName(dst,n,[nsig],N) -> ExistsParameterWithName(src,m,[osig],N) cond
ExistsParameterWithType(dst,n,[nsig],src) -> true
ExistsParameterWithType(dst,n,[nsig],dst) -> false
ExistsParameterWithType(dst,n,[nsig],T) -> ExistsParameterWithType(src,m,[osig],T) cond
ExistsMethodInvocation(src,m,dst,n) -> true
IsInverter(src,m,dst,r) -> true
IsPrivate(src,att) -> false
IsUsedAttributeInMethodBody(src,att,m) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::RenameInHierarchyNoOverloading,
            "RenameInHierarchyNoOverloading",
            {"c", "m", "sig", "n"},
            {{"sub", "subs"}},
            "ExistsClass(c) & ExistsClass(sub) & ExistsMethodDefinition(c,m)"
            " & ExistsMethodDefinitionWithParams(c,m,[sig]) & AllSubclasses(c,[subs])"
            " & !ExistsMethodDefinition(c,n) & !ExistsMethodDefinition(sub,n)"
            " & !ExistsMethodDefinitionWithParams(c,n,[sig]) & !ExistsMethodDefinitionWithParams(sub,n,[sig])"
            " & !IsOverloaded(c,m) & !IsOverloaded(sub,m) & !IsInheritedMethod(c,n)",
            "",
            R"(
ExistsMethodDefinition(c,n) -> true
ExistsMethodDefinitionWithParams(c,n,[sig]) -> true
ExistsMethodDefinition(sub,n) -> ExistsMethodDefinition(sub,m)
ExistsMethodDefinition(c,m) -> false
ExistsMethodDefinition(sub,m) -> false
ExistsMethodDefinitionWithParams(sub,n,[sig]) -> ExistsMethodDefinitionWithParams(sub,m,[sig])
ExistsMethodDefinitionWithParams(c,m,[sig]) -> false
ExistsMethodDefinitionWithParams(sub,m,[sig]) -> false
IsInheritedMethod(sub,n) -> IsInheritedMethod(sub,m)
IsDelegator(c,n,V) -> IsDelegator(c,m,V)
IsDelegator(sub,n,V) -> IsDelegator(sub,m,V)
IsDelegator(c,V,n) -> IsDelegator(c,V,m)
IsDelegator(sub,V,n) -> IsDelegator(sub,V,m)
IsOverloaded(c,V) -> IsOverloaded(c,V) cond
IsOverloaded(sub,V) -> IsOverloaded(sub,V) cond
IsOverriding(sub,n) -> IsOverriding(sub,m)
IsOverridden(sub,n) -> IsOverridden(sub,m)
ExistsParameterWithName(c,n,[sig],V1) -> ExistsParameterWithName(c,m,[sig],V1)
ExistsParameterWithName(sub,n,[sig],V1) -> ExistsParameterWithName(sub,m,[sig],V1)
ExistsParameterWithType(c,n,[sig],V1) -> ExistsParameterWithType(c,m,[sig],V1)
ExistsParameterWithType(sub,n,[sig],V1) -> ExistsParameterWithType(sub,m,[sig],V1)
IsRecursiveMethod(c,n) -> IsRecursiveMethod(c,m)
IsRecursiveMethod(sub,n) -> IsRecursiveMethod(sub,m)
ExistsAbstractMethod(c,n) -> ExistsAbstractMethod(c,m)
ExistsAbstractMethod(sub,n) -> ExistsAbstractMethod(sub,m)
IsInheritedMethodWithParams(sub,n,[sig]) -> IsVisibleMethod(c,m,[sig],sub)
MethodIsUsedWithType(c,n,[sig],[sig]) -> MethodIsUsedWithType(c,m,[sig],[sig])
MethodIsUsedWithType(sub,n,[sig],[sig]) -> MethodIsUsedWithType(sub,m,[sig],[sig])
IsUsedMethod(c,n,[sig]) -> IsUsedMethod(c,m,[sig])
IsUsedMethod(sub,n,[sig]) -> IsUsedMethod(sub,m,[sig])
IsUsedMethodIn(c,n,V) -> IsUsedMethodIn(c,m,V)
IsUsedMethodIn(sub,n,V) -> IsUsedMethodIn(sub,m,V)
HasReturnType(c,n,V1) -> HasReturnType(c,m,V1)
HasReturnType(sub,n,V1) -> HasReturnType(sub,m,V1)
IsInverter(c,n,V,V1) -> IsInverter(c,m,V,V1)
IsInverter(sub,n,V,V1) -> IsInverter(sub,m,V,V1)
ExistsMethodInvocation(c,V,V1,n) -> ExistsMethodInvocation(c,V,V1,m)
ExistsMethodInvocation(sub,V,V1,n) -> ExistsMethodInvocation(sub,V,V1,m)
ExistsMethodInvocation(c,m,V,V1) -> false
ExistsMethodInvocation(sub,m,V,V1) -> false
IsIndirectlyRecursive(c,n) -> IsIndirectlyRecursive(c,m)
IsIndirectlyRecursive(sub,n) -> IsIndirectlyRecursive(sub,m)
BoundVariableInMethodBody(c,n,V) -> BoundVariableInMethodBody(c,n,V)
BoundVariableInMethodBody(sub,n,V) -> BoundVariableInMethodBody(sub,n,V)
IsOverridden(sub,n) -> IsOverridden(sub,m)
IsUsedConstructorAsMethodParameter(V,c,m) -> false
IsUsedConstructorAsMethodParameter(V,sub,m) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::RenameOverloadedMethodInHierarchy,
            "RenameOverloadedMethodInHierarchy",
            {"c", "m", "n", "sig"},
            {{"sub", "subs"}, {"ctor", "ctors"}},
            "ExistsClass(c) & ExistsMethodDefinitionWithParams(c,m,[sig])"
            " & !IsInheritedMethodWithParams(c,n,[sig]) & !ExistsMethodDefinitionWithParams(c,n,[sig])"
            " & !ExistsMethodDefinitionWithParams(sub,n,[sig]) & !IsInheritedMethodWithParams(c,m,[sig])"
            " & AllSubclasses(c,[subs])",
            "",
            R"(
ExistsMethodDefinition(c,m) -> false
ExistsMethodDefinition(c,n) -> true
IsOverriding(c,n) -> false
IsOverridden(c,n) -> false
IsPublic(c,n) -> IsPublic(c,m)
ExistsMethodDefinitionWithParams(c,n,[sig]) -> ExistsMethodDefinitionWithParams(c,m,[sig])
ExistsMethodDefinitionWithParams(sub,n,[sig]) -> ExistsMethodDefinitionWithParams(sub,m,[sig])
ExistsMethodDefinition(sub,n) -> true
ExistsMethodDefinitionWithParams(c,m,[sig]) -> false
ExistsMethodDefinitionWithParams(sub,m,[sig]) -> false
ExistsMethodDefinition(sub,m) -> false
IsOverridingMethod(sub,n,[sig]) -> IsOverridingMethod(sub,m,[sig])
ExistsParameterWithName(c,n,[sig],V) -> ExistsParameterWithName(c,m,[sig],V)
ExistsParameterWithName(sub,n,[sig],V) -> ExistsParameterWithName(sub,m,[sig],V)
ExistsParameterWithType(c,n,[sig],V) -> ExistsParameterWithType(c,m,[sig],V)
ExistsParameterWithType(sub,n,[sig],V) -> ExistsParameterWithType(sub,m,[sig],V)
IsDelegator(c,n,V) -> IsDelegator(c,m,V)
IsDelegator(sub,n,V) -> IsDelegator(sub,m,V)
IsDelegator(c,V,n) -> IsDelegator(c,V,m)
IsDelegator(sub,V,n) -> IsDelegator(sub,V,m)
IsRecursiveMethod(c,n) -> IsRecursiveMethod(c,m)
IsRecursiveMethod(sub,n) -> IsRecursiveMethod(sub,m)
ExistsAbstractMethod(c,n) -> ExistsAbstractMethod(c,m)
ExistsAbstractMethod(sub,n) -> ExistsAbstractMethod(sub,m)
IsInheritedMethodWithParams(sub,n,[sig]) -> IsVisibleMethod(c,m,[sig],sub)
MethodIsUsedWithType(c,n,[sig],[sig]) -> MethodIsUsedWithType(c,m,[sig],[sig])
MethodIsUsedWithType(sub,n,[sig],[sig]) -> MethodIsUsedWithType(sub,m,[sig],[sig])
IsUsedMethod(c,n,[sig]) -> IsUsedMethod(c,m,[sig])
IsUsedMethod(sub,n,[sig]) -> IsUsedMethod(sub,m,[sig])
IsUsedMethodIn(c,n,V) -> IsUsedMethodIn(c,m,V)
IsUsedMethodIn(sub,n,V) -> IsUsedMethodIn(sub,m,V)
HasReturnType(c,n,V) -> HasReturnType(c,m,V)
HasReturnType(sub,n,V) -> HasReturnType(sub,m,V)
IsInverter(c,n,V,V1) -> IsInverter(c,m,V,V1)
IsInverter(sub,n,V,V1) -> IsInverter(sub,m,V,V1)
ExistsMethodInvocation(c,V,V1,n) -> ExistsMethodInvocation(c,V,V1,m)
ExistsMethodInvocation(sub,V,V1,n) -> ExistsMethodInvocation(sub,V,V1,m)
IsIndirectlyRecursive(c,n) -> IsIndirectlyRecursive(c,m)
IsIndirectlyRecursive(sub,n) -> IsIndirectlyRecursive(sub,m)
BoundVariableInMethodBody(c,n,V) -> BoundVariableInMethodBody(c,m,V)
BoundVariableInMethodBody(sub,n,V) -> BoundVariableInMethodBody(sub,m,V)
IsOverridden(sub,n) -> IsOverridden(sub,m)
IsUsedConstructorAsMethodParameter(V,c,m) -> false
IsUsedConstructorAsMethodParameter(V,sub,m) -> false
IsUsedConstructorAsObjectReceiver(V,c,m) -> false
IsUsedConstructorAsObjectReceiver(V,sub,m) -> false
IsUsedConstructorAsMethodParameter(V,c,n) -> IsUsedConstructorAsMethodParameter(V,c,m)
IsUsedConstructorAsMethodParameter(V,sub,n) -> IsUsedConstructorAsMethodParameter(V,sub,m)
IsUsedConstructorAsObjectReceiver(ctor,c,n) -> true
IsUsedConstructorAsObjectReceiver(ctor,sub,n) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::RenameDelegatorWithOverloading,
            "RenameDelegatorWithOverloading",
            {"s", "m", "t", "pn", "t2", "n"},
            {{"sub", "subs"}},
            "ExistsClass(s) & ExistsClass(sub) & ExistsMethodDefinition(s,m)"
            " & ExistsMethodDefinitionWithParams(s,m,[t]) & AllSubclasses(s,[subs])"
            " & !ExistsMethodDefinitionWithParams(s,n,[t]) & !ExistsMethodDefinitionWithParams(sub,n,[t])"
            " & !IsInheritedMethod(s,n)",
            "",
            R"(
ExistsMethodDefinition(s,n) -> true
ExistsMethodDefinitionWithParams(s,n,[t]) -> true
IsPublic(s,n) -> IsPublic(s,m)
ExistsMethodDefinition(s,m) -> false
ExistsMethodDefinition(sub,m) -> false
ExistsMethodDefinitionWithParams(s,m,[t]) -> false
ExistsMethodDefinitionWithParams(sub,m,[t]) -> false
ExistsMethodDefinition(sub,n) -> ExistsMethodDefinition(sub,m)
ExistsMethodDefinitionWithParams(sub,n,[t]) -> ExistsMethodDefinitionWithParams(sub,m,[t])
IsInheritedMethod(sub,n) -> IsInheritedMethod(sub,m)
MethodIsUsedWithType(s,n,[t],[t]) -> MethodIsUsedWithType(s,m,[t],[t])
MethodIsUsedWithType(sub,n,[t],[t]) -> MethodIsUsedWithType(sub,m,[t],[t])
MethodIsUsedWithType(s,m,[t],[t]) -> false
MethodIsUsedWithType(sub,m,[t],[t]) -> false
ExistsParameterWithName(s,n,[t],V) -> ExistsParameterWithName(s,m,[t],V)
ExistsParameterWithName(sub,n,[t],V) -> ExistsParameterWithName(sub,m,[t],V)
ExistsParameterWithType(s,n,[t],V) -> ExistsParameterWithType(s,m,[t],V)
ExistsParameterWithType(sub,n,[t],V) -> ExistsParameterWithType(sub,m,[t],V)
ExistsMethodInvocation(s,V1,V,n) -> ExistsMethodInvocation(s,V1,V,m)
ExistsMethodInvocation(sub,V1,V,n) -> ExistsMethodInvocation(sub,V1,V,m)
IsDelegator(s,n,V) -> IsDelegator(s,m,V)
IsDelegator(sub,n,V) -> IsDelegator(sub,m,V)
IsDelegator(s,V,n) -> IsDelegator(s,V,m)
IsDelegator(sub,V,n) -> IsDelegator(sub,V,m)
IsUsedMethod(s,n,[t]) -> IsUsedMethod(s,m,[t])
IsUsedMethod(sub,n,[t]) -> IsUsedMethod(sub,m,[t])
IsUsedMethodIn(s,n,V) -> IsUsedMethodIn(s,m,V)
IsUsedMethodIn(sub,n,V) -> IsUsedMethodIn(sub,m,V)
HasReturnType(s,n,V) -> HasReturnType(s,m,V)
HasReturnType(sub,n,V) -> HasReturnType(sub,m,V)
IsInverter(s,n,V,V1) -> IsInverter(s,m,V,V1)
IsInverter(sub,n,V,V1) -> IsInverter(sub,m,V,V1)
IsIndirectlyRecursive(s,n) -> IsIndirectlyRecursive(s,m)
IsIndirectlyRecursive(sub,n) -> IsIndirectlyRecursive(sub,m)
BoundVariableInMethodBody(s,n,V) -> BoundVariableInMethodBody(s,n,V)
BoundVariableInMethodBody(sub,n,V) -> BoundVariableInMethodBody(sub,n,V)
IsOverridden(sub,n) -> IsOverridden(sub,m)
IsUsedConstructorAsMethodParameter(V,s,m) -> false
IsUsedConstructorAsMethodParameter(V,sub,m) -> false
IsUsedConstructorAsObjectReceiver(t,s,n) -> IsUsedConstructorAsObjectReceiver(t,s,m)
IsUsedConstructorAsObjectReceiver(t,sub,n) -> IsUsedConstructorAsObjectReceiver(t,sub,m)
)"});

        t.push_back(OpTemplate{
            OpKind::ExtractSuperClass,
            "ExtractSuperClass",
            {"s", "ret"},
            {{"sub", "subs"}, {"subAll", "subs"}, {"pm", "pms"}},
            "!ExistsType(s) & ExistsClass(sub) & ExtendsDirectly(sub,java.lang.Object)"
            " & HasReturnType(sub,pm,ret)",
            "",
            R"(
IsAbstractClass(s) -> true
ExistsClass(s) -> true
ExistsType(s) -> true
ExistsMethodDefinition(s,X) -> ExistsMethodDefinition(subAll,X)
ExistsMethodDefinitionWithParams(s,X,[]) -> ExistsMethodDefinitionWithParams(subAll,X,[])
ExistsMethodDefinitionWithParams(s,X,[Y]) -> ExistsMethodDefinitionWithParams(subAll,X,[Y])
IsUsedMethodIn(s,X,Y) -> false
ExistsMethodDefinitionWithParams(X,Y,[s]) -> false
IsUsedMethod(s,X,[Y]) -> false
AllSubclasses(s,[subs]) -> true
MethodIsUsedWithType(X,Y,[Z],[s]) -> false
IsInheritedMethodWithParams(X,Y,[s]) -> false
IsUsedConstructorAsMethodParameter(s,X,Y) -> false
IsUsedConstructorAsInitializer(s,X,Y) -> false
IsUsedConstructorAsObjectReceiver(s,X,Y) -> false
IsUsedConstructorAsMethodParameter(X,s,Y) -> false
IsUsedConstructorAsInitializer(X,s,Y) -> false
IsUsedConstructorAsObjectReceiver(X,s,Y) -> false
IsPrimitiveType(s) -> false
IsSubType(sub,s) -> true
IsSubType(X,s) -> IsSubType(X,sub) @sub
IsPublic(s,pm) -> true
ExistsAbstractMethod(s,pm) -> true
IsOverriding(s,pm) -> false
IsOverridden(s,pm) -> true
IsPrivate(s,pm) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::ExtractSuperClassWithoutPullUp,
            "ExtractSuperClassWithoutPullUp",
            {"s"},
            {{"sub", "subs"}},
            "!ExistsType(s) & ExistsClass(sub) & ExtendsDirectly(sub,java.lang.Object)",
            "",
            R"(
IsAbstractClass(s) -> true
ExistsClass(s) -> true
ExistsMethodDefinitionWithParams(X,Y,[s]) -> false
ExistsMethodDefinitionWithParams(s,X,[Y]) -> false
ExistsType(s) -> true
AllSubclasses(s,[subs]) -> true
IsUsedConstructorAsMethodParameter(s,X,Y) -> false
IsUsedConstructorAsInitializer(s,X,Y) -> false
IsUsedConstructorAsObjectReceiver(s,X,Y) -> false
IsUsedConstructorAsMethodParameter(X,s,Y) -> false
IsUsedConstructorAsInitializer(X,s,Y) -> false
IsUsedConstructorAsObjectReceiver(X,s,Y) -> false
IsPrimitiveType(s) -> false
IsUsedMethod(s,X,[Y]) -> false
IsInheritedMethodWithParams(X,Y,[s]) -> false
IsPrivate(s,X) -> false
MethodIsUsedWithType(X,Y,[Z],[s]) -> false
IsSubType(sub,s) -> true
IsSubType(X,s) -> IsSubType(X,sub) @sub
)"});

        t.push_back(OpTemplate{
            OpKind::GeneraliseParameter,
            "GeneraliseParameter",
            {"s", "m", "p", "t", "st"},
            {{"sub", "subs"}},
            "ExistsClass(s) & ExistsClass(sub) & ExistsMethodDefinition(s,m)"
            " & ExistsMethodDefinition(sub,m) & IsSubType(t,st) & AllSubclasses(s,[subs])"
            " & AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,p,t)"
            " & AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(sub,m,p,t)"
            " & AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,p)"
            " & AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(sub,m,p)",
            "",
            R"(
IsInverter(s,m,t,V) -> IsInverter(s,m,st,V)
IsInverter(sub,m,t,V) -> IsInverter(sub,m,st,V)
ExistsMethodDefinitionWithParams(s,m,[t]) -> ExistsMethodDefinitionWithParams(s,m,[st])
ExistsMethodDefinitionWithParams(sub,m,[t]) -> ExistsMethodDefinitionWithParams(sub,m,[st])
ExistsMethodDefinitionWithParams(s,m,[st]) -> false
ExistsMethodDefinitionWithParams(sub,m,[st]) -> false
IsInheritedMethodWithParams(sub,m,[t]) -> true
IsUsedConstructorAsMethodParameter(t,s,m) -> true
IsUsedConstructorAsMethodParameter(t,sub,m) -> true
IsUsedConstructorAsMethodParameter(st,s,m) -> false
IsUsedConstructorAsMethodParameter(st,sub,m) -> false
IsOverridden(sub,m) -> ExistsMethodDefinition(sub,m)
IsOverriding(sub,m) -> ExistsMethodDefinition(sub,m)
ExistsParameterWithName(s,m,[t],p) -> true
ExistsParameterWithName(sub,m,[t],p) -> true
ExistsParameterWithType(s,m,[t],t) -> true
ExistsParameterWithType(sub,m,[t],t) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::ReplaceMethodcodeDuplicatesInverter,
            "ReplaceMethodcodeDuplicatesInverter",
            {"c", "m", "t", "r"},
            {{"copy", "copies"}},
            "ExistsClass(c) & ExistsMethodDefinition(c,m) & ExistsMethodDefinition(c,copy)"
            " & IsInverter(c,m,t,r) & IsInverter(c,copy,t,r)",
            "",
            R"(
IsDelegator(c,copy,m) -> true
ExistsMethodInvocation(c,copy,c,m) -> false
IsRecursiveMethod(c,copy) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::SafeDeleteDelegatorOverriding,
            "SafeDeleteDelegatorOverriding",
            {"c", "m", "s", "n"},
            {},
            "ExistsClass(c) & ExistsClass(s) & ExistsMethodDefinition(c,m)"
            " & ExistsMethodDefinition(s,m) & IsDelegator(c,m,n) & IsDelegator(s,m,n)"
            " & AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(c,m,this)",
            "",
            R"(
ExistsMethodDefinition(c,m) -> false
IsInheritedMethod(c,m) -> true
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(c,m,X,Y) -> false
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(c,m,X) -> false
BoundVariableInMethodBody(c,m,X) -> false
ExistsParameterWithName(c,m,[X],Y) -> false
ExistsParameterWithType(c,m,[X],Y) -> false
ExistsMethodInvocation(c,m,X,Y) -> false
ExistsMethodDefinitionWithParams(c,m,[X]) -> false
IsInheritedMethodWithParams(X,m,[Y]) -> false
IsIndirectlyRecursive(c,m) -> false
IsVisibleMethod(c,m,[X],Y) -> false
IsInverter(c,m,X,Y) -> false
IsDelegator(c,m,X) -> false
IsUsedMethod(c,m,[X]) -> false
IsUsedMethodIn(c,m,X) -> false
IsUsedConstructorAsMethodParameter(X,c,m) -> false
IsUsedConstructorAsInitializer(X,c,m) -> false
IsUsedConstructorAsObjectReceiver(X,c,m) -> false
IsPublic(c,m) -> false
IsProtected(c,m) -> false
IsPrivate(c,m) -> false
IsUsedAttributeInMethodBody(c,X,m) -> false
IsOverridden(c,m) -> false
IsOverloaded(c,m) -> false
IsOverriding(c,m) -> false
IsRecursiveMethod(c,m) -> false
HasReturnType(c,m,X) -> false
MethodHasParameterType(c,m,X) -> false
MethodIsUsedWithType(c,m,[X],[X]) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::PullUpAbstract,
            "PullUpAbstract",
            {"c", "m", "s"},
            {},
            "ExistsClass(c) & ExistsMethodDefinition(c,m) & IsSubType(c,s)"
            " & !ExistsMethodDefinition(s,m)",
            "",
            R"(
ExistsAbstractMethod(s,m) -> true
ExistsMethodDefinition(s,m) -> true
IsOverridden(s,m) -> true
IsOverriding(c,m) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::PullUpImplementation,
            "PullUpImplementation",
            {"c", "m", "s"},
            {{"att", "attrs"}},
            "ExistsClass(c) & ExistsClass(s) & IsAbstractClass(s) & ExistsMethodDefinition(c,m)"
            " & ExistsAbstractMethod(s,m)"
            " & AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(c,m,this,s)"
            " & AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(c,m,this)"
            " & !IsPrivate(c,m) & !IsUsedAttributeInMethodBody(c,att,m)",
            "",
            R"(
ExistsMethodDefinition(c,m) -> false
ExistsMethodDefinition(s,m) -> true
ExistsAbstractMethod(s,m) -> false
IsDelegator(s,m,X) -> IsDelegator(c,m,X) cond
ExistsMethodDefinitionWithParams(c,m,[X]) -> false
IsInheritedMethodWithParams(c,m,[X]) -> true
IsInheritedMethod(c,m) -> true
IsVisibleMethod(s,m,[X],c) -> true
IsPrivate(c,m) -> false
IsOverridden(c,m) -> false
IsOverriding(c,m) -> false
IsVisible(s,m,c) -> true
IsOverloaded(s,m) -> ExistsMethodDefinition(s,m)
IsUsedAttributeInMethodBody(c,X,m) -> false
IsOverloaded(c,m) -> false
IsRecursiveMethod(c,m) -> false
HasReturnType(c,m,X) -> false
MethodHasParameterType(c,m,X) -> false
MethodIsUsedWithType(c,m,[X],[X]) -> false
IsPrivate(c,att) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::PullUpWithGenerics,
            "PullUpWithGenerics",
            {"s", "a", "m", "r", "tp"},
            {{"att", "attrs"}},
            "ExistsClass(s) & IsAbstractClass(s) & ExistsClass(a) & IsSubType(a,s)"
            " & HasReturnType(a,m,r) & !ExistsAbstractMethod(s,m) & !IsPrimitiveType(r)"
            " & !IsPrivate(a,m) & !HasParameterType(a,r) & !IsPrivate(a,att)",
            "",
            R"(
HasReturnType(s,m,tp) -> true
ExistsMethodDefinitionWithParams(s,m,[X]) -> true
MethodHasParameterType(s,m,tp) -> true
HasParameterType(s,tp) -> true
ExtendsFromParametricClass(a,s,r) -> true
IsGenericsSubtype(a,[r],s,[tp]) -> true
IsPrivate(a,m) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::InlineAndDelete,
            "InlineAndDelete",
            {"s", "m", "sig", "n"},
            {{"om", "othermethods"}, {"oc", "otherclasses"}},
            "ExistsClass(s) & ExistsMethodDefinition(s,m) & !IsOverriding(s,m)"
            " & !IsOverridden(s,m) & !IsRecursiveMethod(s,m)"
            " & !ExistsMethodInvocation(s,m,s,om) & !IsUsedMethodIn(s,m,oc)",
            "",
            R"(
ExistsMethodDefinition(s,m) -> false
ExistsMethodDefinitionWithParams(s,m,[sig]) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,X,Y) -> false
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,X) -> false
BoundVariableInMethodBody(s,m,X) -> false
ExistsParameterWithName(s,m,[X],Y) -> false
ExistsParameterWithType(s,m,[X],Y) -> false
ExistsMethodInvocation(s,m,X,Y) -> false
ExistsMethodInvocation(s,n,Y,Z) -> (ExistsMethodInvocation(s,m,Y,Z) | ExistsMethodInvocation(s,n,Y,Z))
IsUsedConstructorAsObjectReceiver(X,s,n) -> (IsUsedConstructorAsObjectReceiver(X,s,m) | IsUsedConstructorAsObjectReceiver(X,s,n))
IsIndirectlyRecursive(s,m) -> false
IsVisibleMethod(s,m,[X],Y) -> false
IsInverter(s,m,X,Y) -> false
IsDelegator(s,m,X) -> false
IsUsedMethod(s,m,[X]) -> false
IsUsedMethodIn(s,m,X) -> false
IsUsedConstructorAsMethodParameter(X,s,m) -> false
IsUsedConstructorAsInitializer(X,s,m) -> false
IsUsedConstructorAsObjectReceiver(X,s,m) -> false
IsPublic(s,m) -> false
IsProtected(s,m) -> false
IsPrivate(s,m) -> false
IsUsedAttributeInMethodBody(s,X,m) -> false
IsOverridden(s,m) -> false
IsOverloaded(s,m) -> false
IsOverriding(s,m) -> false
IsRecursiveMethod(s,m) -> false
HasReturnType(s,m,X) -> false
HasParameterType(s,m) -> false
MethodHasParameterType(s,m,X) -> false
MethodIsUsedWithType(s,m,[X],[X]) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::InlineMethodInvocations,
            "InlineMethodInvocations",
            {"c", "m", "msig", "a", "n", "nsig"},
            {},
            "ExistsClass(c) & IsIndirectlyRecursive(c,m) & IsRecursiveMethod(c,n)"
            " & !IsRecursiveMethod(c,m) & ExistsMethodInvocation(c,m,a,n)"
            " & ExistsMethodDefinition(c,m) & ExistsMethodDefinitionWithParams(c,m,[msig])"
            " & ExistsMethodDefinition(a,n) & ExistsMethodDefinitionWithParams(a,n,[nsig])",
            // The IsRecursiveMethod(c,n) conjunct describes the original
            // program's business method and is not point-checkable; see notes.
            "ExistsClass(c) & IsIndirectlyRecursive(c,m)"
            " & !IsRecursiveMethod(c,m) & ExistsMethodInvocation(c,m,a,n)"
            " & ExistsMethodDefinition(c,m) & ExistsMethodDefinitionWithParams(c,m,[msig])"
            " & ExistsMethodDefinition(a,n) & ExistsMethodDefinitionWithParams(a,n,[nsig])",
            R"(
ExistsMethodDefinitionWithParams(c,m,[msig]) -> true
ExistsMethodDefinition(c,m) -> true
ExistsMethodInvocation(c,m,a,n) -> false
IsRecursiveMethod(c,m) -> ExistsMethodInvocation(a,n,c,m)
IsIndirectlyRecursive(c,m) -> (ExistsMethodInvocation(a,n,C,X) & ExistsMethodInvocation(C,X,c,m)) cond
IsUsedMethodIn(a,n,m) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::DuplicateMethodInHierarchy,
            "DuplicateMethodInHierarchy",
            {"s", "m", "n", "sig"},
            {{"sub", "subs"}, {"caller", "callers"}, {"invoked", "invoked"}},
            "ExistsClass(s) & ExistsMethodDefinitionWithParams(s,m,[sig])"
            " & ExistsMethodDefinition(s,m) & !ExistsMethodDefinitionWithParams(s,n,[sig])"
            " & !ExistsMethodDefinitionWithParams(sub,n,[sig])"
            " & !IsInheritedMethodWithParams(s,n,[sig]) & AllSubclasses(s,[subs])",
            "",
            R"(
ExistsMethodDefinition(s,n) -> true
ExistsMethodDefinitionWithParams(s,n,[sig]) -> true
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,n,V) -> true cond
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,n,V,V1) -> AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,V,V1)
BoundVariableInMethodBody(s,n,V) -> BoundVariableInMethodBody(s,m,V)
IsPublic(s,n) -> IsPublic(s,m)
ExistsParameterWithName(s,n,[sig],V) -> ExistsParameterWithName(s,m,[sig],V)
ExistsParameterWithType(s,n,[sig],T) -> ExistsParameterWithType(s,m,[sig],T)
IsIndirectlyRecursive(s,n) -> IsIndirectlyRecursive(s,m)
IsRecursiveMethod(s,n) -> IsRecursiveMethod(s,m)
IsInverter(s,n,T,V) -> IsInverter(s,m,T,V)
IsUsedAttributeInMethodBody(s,V,n) -> IsUsedAttributeInMethodBody(s,V,m)
MethodHasParameterType(s,n,V) -> MethodHasParameterType(s,m,V)
ExistsMethodDefinitionWithParams(sub,n,[sig]) -> ExistsMethodDefinitionWithParams(sub,m,[sig])
IsDelegator(s,n,invoked) -> true
IsDelegator(sub,n,invoked) -> true
ExistsMethodDefinition(sub,n) -> true
MethodIsUsedWithType(s,n,[sig],[sig]) -> false
MethodIsUsedWithType(sub,n,[sig],[sig]) -> false
MethodIsUsedWithType(s,n,[sig],[T]) -> false
MethodIsUsedWithType(sub,n,[sig],[T]) -> false
ExistsMethodInvocation(s,caller,V,n) -> true
ExistsMethodInvocation(sub,caller,V,n) -> true
IsInheritedMethodWithParams(sub,n,[sig]) -> !ExistsMethodDefinitionWithParams(sub,m,[sig])
IsInheritedMethod(sub,n) -> !ExistsMethodDefinition(sub,m)
IsOverriding(sub,n) -> !ExistsMethodDefinition(sub,m)
IsOverridden(sub,n) -> !ExistsMethodDefinition(sub,m)
)"});

        t.push_back(OpTemplate{
            OpKind::DuplicateMethodInHierarchyGen,
            "DuplicateMethodInHierarchyGen",
            {"s", "m", "n", "sig"},
            {{"sub", "subs"}, {"caller", "callers"}, {"invoked", "invoked"}, {"ret", "rets"}},
            "ExistsClass(s) & ExistsMethodDefinitionWithParams(s,m,[sig])"
            " & ExistsMethodDefinition(s,m) & !ExistsMethodDefinitionWithParams(s,n,[sig])"
            " & !ExistsMethodDefinitionWithParams(sub,n,[sig]) & ExistsType(ret)"
            " & !IsInheritedMethodWithParams(s,n,[sig]) & AllSubclasses(s,[subs])",
            "",
            R"(
ExistsMethodDefinition(s,n) -> true
ExistsMethodDefinitionWithParams(s,n,[sig]) -> true
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,n,V) -> true cond
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,n,V,V1) -> AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,V,V1)
BoundVariableInMethodBody(s,n,V) -> BoundVariableInMethodBody(s,m,V)
IsPublic(s,n) -> IsPublic(s,m)
ExistsParameterWithName(s,n,[sig],V) -> ExistsParameterWithName(s,m,[sig],V)
ExistsParameterWithType(s,n,[sig],T) -> ExistsParameterWithType(s,m,[sig],T)
IsIndirectlyRecursive(s,n) -> IsIndirectlyRecursive(s,m)
IsRecursiveMethod(s,n) -> IsRecursiveMethod(s,m)
IsInverter(s,n,T,V) -> IsInverter(s,m,T,V)
IsUsedAttributeInMethodBody(s,V,n) -> IsUsedAttributeInMethodBody(s,V,m)
MethodHasParameterType(s,n,V) -> MethodHasParameterType(s,m,V)
ExistsMethodDefinitionWithParams(sub,n,[sig]) -> ExistsMethodDefinitionWithParams(sub,m,[sig])
IsDelegator(s,n,invoked) -> true
IsDelegator(sub,n,invoked) -> true
ExistsMethodDefinition(sub,n) -> true
MethodIsUsedWithType(s,n,[sig],[sig]) -> false
MethodIsUsedWithType(sub,n,[sig],[sig]) -> false
MethodIsUsedWithType(s,n,[sig],[T]) -> false
MethodIsUsedWithType(sub,n,[sig],[T]) -> false
ExistsMethodInvocation(s,caller,V,n) -> true
ExistsMethodInvocation(sub,caller,V,n) -> true
IsInheritedMethodWithParams(sub,n,[sig]) -> !ExistsMethodDefinitionWithParams(sub,m,[sig])
IsInheritedMethod(sub,n) -> !ExistsMethodDefinition(sub,m)
IsOverriding(sub,n) -> !ExistsMethodDefinition(sub,m)
IsOverridden(sub,n) -> !ExistsMethodDefinition(sub,m)
)"});

        t.push_back(OpTemplate{
            OpKind::SpecialiseParameter,
            "SpecialiseParameter",
            {"s", "m", "t", "p", "nt"},
            {{"sub", "subs"}, {"stype", "stypes"}},
            "IsSubType(nt,t) & !MethodIsUsedWithType(s,m,[t],[t]) & !MethodIsUsedWithType(sub,m,[t],[t])"
            " & ExistsClass(s) & ExistsMethodDefinitionWithParams(s,m,[t]) & ExistsType(t)"
            " & ExistsType(nt) & !ExistsMethodDefinitionWithParams(s,m,[nt])"
            " & !IsInheritedMethodWithParams(s,m,[nt]) & AllSubclasses(s,[subs])"
            " & AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,p)",
            "",
            R"(
ExistsMethodDefinitionWithParams(s,m,[nt]) -> true
ExistsMethodDefinitionWithParams(s,m,[t]) -> false
ExistsMethodDefinitionWithParams(sub,m,[t]) -> false
ExistsMethodDefinitionWithParams(sub,m,[nt]) -> ExistsMethodDefinitionWithParams(sub,m,[t])
MethodIsUsedWithType(s,m,[t],[t]) -> false
MethodIsUsedWithType(sub,m,[t],[t]) -> false
ExistsParameterWithName(s,m,[nt],p) -> true
ExistsParameterWithName(sub,m,[nt],p) -> true
ExistsParameterWithType(s,m,[nt],nt) -> true
ExistsParameterWithType(sub,m,[nt],nt) -> true
IsInverter(s,m,nt,V) -> IsInverter(s,m,t,V)
IsInverter(sub,m,nt,V) -> IsInverter(sub,m,t,V)
IsInheritedMethodWithParams(s,m,[nt]) -> true
IsInheritedMethodWithParams(sub,m,[nt]) -> true
IsUsedConstructorAsMethodParameter(nt,s,m) -> IsUsedConstructorAsMethodParameter(t,s,m)
IsUsedConstructorAsMethodParameter(nt,sub,m) -> IsUsedConstructorAsMethodParameter(t,sub,m)
IsOverridden(sub,m) -> ExistsMethodDefinition(sub,m)
IsOverriding(sub,m) -> ExistsMethodDefinition(sub,m)
)"});

        t.push_back(OpTemplate{
            OpKind::DeleteMethodInHierarchy,
            "DeleteMethodInHierarchy",
            {"s", "m", "t"},
            {{"sub", "subs"}, {"invoked", "invoked"}},
            "ExistsClass(s) & ExistsMethodDefinitionWithParams(s,m,[t])"
            " & !MethodIsUsedWithType(s,m,[t],[t]) & !MethodIsUsedWithType(sub,m,[t],[t])"
            " & AllSubclasses(s,[subs])",
            "",
            R"(
ExistsParameterWithType(s,m,[t],t) -> false
ExistsParameterWithType(sub,m,[t],t) -> false
ExistsMethodDefinitionWithParams(s,m,[t]) -> false
ExistsMethodDefinitionWithParams(sub,m,[t]) -> false
ExistsMethodDefinition(s,m) -> false
ExistsMethodDefinition(sub,m) -> false
IsUsedMethod(s,invoked,[V1]) -> false
IsUsedMethod(sub,invoked,[V1]) -> false
IsUsedConstructorAsMethodParameter(V1,s,m) -> false
IsUsedConstructorAsMethodParameter(V1,sub,m) -> false
IsUsedConstructorAsMethodParameter(t,s,m) -> false
IsUsedConstructorAsMethodParameter(t,sub,m) -> false
IsUsedConstructorAsObjectReceiver(t,s,m) -> false
IsUsedConstructorAsObjectReceiver(t,sub,m) -> false
IsInheritedMethod(sub,m) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,V1,V2) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(sub,m,V1,V2) -> false
ExistsAbstractMethod(s,m) -> false
ExistsAbstractMethod(sub,m) -> false
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,V1) -> false
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(sub,m,V1) -> false
BoundVariableInMethodBody(s,m,V1) -> false
BoundVariableInMethodBody(sub,m,V1) -> false
ExistsParameterWithName(s,m,[t],V1) -> false
ExistsParameterWithName(sub,m,[t],V1) -> false
ExistsMethodInvocation(s,m,V1,V2) -> false
ExistsMethodInvocation(sub,m,V1,V2) -> false
IsInheritedMethodWithParams(sub,m,[t]) -> false
IsIndirectlyRecursive(s,m) -> false
IsIndirectlyRecursive(sub,m) -> false
IsVisibleMethod(s,m,[t],V1) -> false
IsVisibleMethod(sub,m,[t],V1) -> false
IsInverter(s,m,V1,V2) -> false
IsInverter(sub,m,V1,V2) -> false
IsDelegator(s,V1,m) -> false
IsDelegator(sub,V1,m) -> false
IsUsedMethodIn(s,m,V1) -> false
IsUsedMethodIn(sub,m,V1) -> false
IsUsedConstructorAsInitializer(V1,s,m) -> false
IsUsedConstructorAsInitializer(V1,sub,m) -> false
IsUsedAttributeInMethodBody(s,V1,m) -> false
IsUsedAttributeInMethodBody(sub,V1,m) -> false
IsOverridden(sub,m) -> false
IsOverloaded(s,m) -> false
IsOverloaded(sub,m) -> false
IsOverriding(sub,m) -> false
IsRecursiveMethod(s,m) -> false
IsRecursiveMethod(sub,m) -> false
HasReturnType(s,m,V1) -> false
HasReturnType(sub,m,V1) -> false
MethodHasParameterType(s,m,V1) -> false
MethodHasParameterType(sub,m,V1) -> false
MethodIsUsedWithType(s,m,[t],[t]) -> false
MethodIsUsedWithType(sub,m,[t],[t]) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::PushDownAll,
            "PushDownAll",
            {"s", "m", "sig"},
            {{"sub", "subs"}, {"att", "attrs"}},
            "ExistsClass(s) & IsAbstractClass(s) & ExistsMethodDefinitionWithParams(s,m,[sig])"
            " & !IsUsedMethod(s,m,[sig]) & AllSubclasses(s,[subs]) & !IsPrivate(s,m)"
            " & !IsPrivate(s,att)",
            "",
            R"(
ExistsMethodDefinitionWithParams(s,m,[sig]) -> false
IsUsedMethodIn(s,m,C) -> false
ExistsMethodDefinition(s,m) -> false
ExistsAbstractMethod(s,m) -> false
IsDelegator(s,m,V1) -> false
HasReturnType(s,m,V1) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,V1,V2) -> false
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,V1) -> false
BoundVariableInMethodBody(s,m,V1) -> false
ExistsParameterWithName(s,m,[sig],V1) -> false
ExistsParameterWithType(s,m,[sig],V1) -> false
ExistsMethodInvocation(s,m,V1,V2) -> false
IsPublic(s,m) -> false
IsProtected(s,m) -> false
IsPrivate(s,m) -> false
IsOverloaded(s,m) -> false
IsUsedAttributeInMethodBody(s,V1,m) -> false
IsRecursiveMethod(s,m) -> false
IsIndirectlyRecursive(s,m) -> false
MethodHasParameterType(s,m,V1) -> false
MethodIsUsedWithType(s,m,[sig],[sig]) -> false
IsUsedConstructorAsMethodParameter(V1,s,m) -> false
IsUsedConstructorAsObjectReceiver(V1,s,m) -> false
ExistsMethodDefinitionWithParams(sub,m,[sig]) -> true
ExistsMethodDefinition(sub,m) -> true
IsOverriding(sub,m) -> false
IsOverridden(sub,m) -> false
IsInheritedMethodWithParams(sub,m,[sig]) -> false
IsVisibleMethod(s,m,[sig],sub) -> false
IsVisible(s,m,sub) -> false
IsInheritedMethod(sub,m) -> false
IsPrivate(s,att) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::PushDownImplementation,
            "PushDownImplementation",
            {"s", "m", "sig"},
            {{"sub", "subs"}, {"att", "attrs"}},
            "ExistsClass(s) & ExistsMethodDefinition(s,m) & ExistsMethodDefinitionWithParams(s,m,[sig])"
            " & !ExistsAbstractMethod(s,m) & AllSubclasses(s,[subs])"
            " & !ExistsMethodDefinitionWithParams(sub,m,[sig]) & !IsPrivate(s,att)",
            "",
            R"(
ExistsAbstractMethod(s,m) -> true
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,V1,V2) -> true
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(s,m,V1) -> true
BoundVariableInMethodBody(s,m,V1) -> false
ExistsMethodInvocation(s,m,V1,V2) -> false
IsInheritedMethodWithParams(s,m,[sig]) -> false
IsIndirectlyRecursive(s,m) -> false
IsUsedConstructorAsInitializer(V1,s,m) -> false
IsUsedConstructorAsObjectReceiver(V1,s,m) -> false
IsPrivate(s,m) -> false
IsUsedAttributeInMethodBody(s,V1,m) -> false
IsOverridden(s,m) -> false
IsOverriding(s,m) -> false
IsRecursiveMethod(s,m) -> false
MethodHasParameterType(s,m,V1) -> false
MethodIsUsedWithType(s,m,[sig],[sig]) -> false
ExistsMethodDefinitionWithParams(sub,m,[sig]) -> true
ExistsMethodDefinition(sub,m) -> true
IsPrivate(s,att) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::PushDownNotRedefinedMethod,
            "PushDownNotRedefinedMethod",
            {"c", "s"},
            {{"nm", "methods"}},
            "ExistsType(c) & ExistsClass(c) & IsSubType(c,s) & !ExistsMethodDefinition(c,nm)"
            " & ExistsMethodDefinition(s,nm)",
            "",
            R"(
ExistsMethodDefinition(c,nm) -> true
IsOverriding(c,nm) -> true
IsOverridden(c,nm) -> true
BoundVariableInMethodBody(c,nm,V) -> BoundVariableInMethodBody(s,nm,V)
HasSameBody(c,nm,s,nm) -> true
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(c,nm,this,s) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::ReplaceMethodDuplication,
            "ReplaceMethodDuplication",
            {"s", "d", "tgt", "sig"},
            {{"sub", "subs"}},
            // Paper atom order kept: IsDelegator(s,n,m) with n the delegator.
            "ExistsClass(s) & ExistsMethodDefinition(s,tgt) & ExistsMethodDefinition(s,d)"
            " & IsDelegator(s,d,tgt) & AllSubclasses(s,[subs])",
            "",
            R"(
IsUsedMethod(s,d,[sig]) -> false
IsDelegator(s,d,tgt) -> true
ExistsMethodInvocation(s,d,s,tgt) -> false
IsRecursiveMethod(s,d) -> false
IsRecursiveMethod(sub,d) -> false
ExistsMethodInvocation(sub,tgt,sub,d) -> ExistsMethodInvocation(sub,d,sub,tgt)
)"});

        t.push_back(OpTemplate{
            OpKind::RemoveParameter,
            "RemoveParameter",
            {"s", "m", "sig", "t", "p"},
            {{"sub", "subs"}},
            "ExistsClass(s) & ExistsMethodDefinition(s,m) & ExistsMethodDefinitionWithParams(s,m,[sig])"
            " & AllSubclasses(s,[subs]) & !BoundVariableInMethodBody(s,m,p)",
            "",
            R"(
ExistsMethodDefinitionWithParams(s,m,[]) -> true
ExistsMethodDefinitionWithParams(sub,m,[]) -> ExistsMethodDefinitionWithParams(sub,m,[sig])
ExistsMethodDefinitionWithParams(s,m,[sig]) -> false
ExistsMethodDefinitionWithParams(sub,m,[sig]) -> false
ExistsParameterWithName(s,m,[],V) -> false
ExistsParameterWithName(sub,m,[],V) -> false
ExistsParameterWithType(s,m,[],V) -> false
ExistsParameterWithType(sub,m,[],V) -> false
BoundVariableInMethodBody(s,m,p) -> false
BoundVariableInMethodBody(sub,m,p) -> false
IsUsedConstructorAsMethodParameter(t,s,m) -> false
IsUsedConstructorAsMethodParameter(t,sub,m) -> false
IsUsedMethod(s,m,[]) -> IsUsedMethod(s,m,[sig])
IsUsedMethod(sub,m,[]) -> IsUsedMethod(sub,m,[sig])
MethodIsUsedWithType(s,m,[],[]) -> MethodIsUsedWithType(s,m,[sig],[sig])
MethodIsUsedWithType(sub,m,[],[]) -> MethodIsUsedWithType(sub,m,[sig],[sig])
)"});

        t.push_back(OpTemplate{
            OpKind::DeleteClass,
            "DeleteClass",
            {"a", "s"},
            {{"cls", "classes"}, {"cm", "classmethods"}, {"om", "othermethods"}},
            "ExistsClass(a) & ExistsType(a) & !ExistsMethodDefinitionWithParams(cls,om,[a])"
            " & !IsUsedMethodIn(a,cm,cls) & !IsUsedConstructorAsMethodParameter(a,cls,om)"
            " & !IsUsedConstructorAsInitializer(a,cls,om) & !IsUsedConstructorAsObjectReceiver(a,cls,om)"
            " & !IsSubType(cls,a)",
            "",
            R"(
ExistsType(a) -> false
ExistsClass(a) -> false
IsSubType(a,s) -> false
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(a,V1,V2,V3) -> false
AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(a,V1,V2) -> false
BoundVariableInMethodBody(a,V1,V2) -> false
ExistsParameterWithName(a,V1,[V2],V3) -> false
ExistsParameterWithType(a,V1,[V2],V3) -> false
ExistsField(a,V1) -> false
ExistsMethodInvocation(a,V1,V2,V3) -> false
ExistsMethodDefinitionWithParams(a,V1,[V2]) -> false
ExtendsDirectly(a,s) -> false
ExtendsDirectly(V1,a) -> false
ExistsAbstractMethod(a,V1) -> false
IsInheritedMethodWithParams(a,V1,[V2]) -> false
IsIndirectlyRecursive(a,V1) -> false
IsVisibleMethod(a,V1,[V2],V3) -> false
IsInverter(a,V1,V2,V3) -> false
IsDelegator(a,V1,V2) -> false
IsAbstractClass(a) -> false
IsUsedMethod(a,V1,[V2]) -> false
IsUsedMethodIn(a,V1,V2) -> false
IsUsedConstructorAsMethodParameter(V1,a,V2) -> false
IsUsedConstructorAsInitializer(a,V1,V2) -> false
IsUsedConstructorAsObjectReceiver(a,V1,V2) -> false
IsUsedConstructorAsInitializer(V1,a,V2) -> false
IsUsedConstructorAsObjectReceiver(V1,a,V2) -> false
IsPrimitiveType(a) -> false
IsPublic(a,V1) -> false
IsProtected(a,V1) -> false
IsPrivate(a,V1) -> false
IsUsedAttributeInMethodBody(a,V1,V2) -> false
IsGenericsSubtype(a,[V1],s,[V2]) -> false
IsGenericsSubtype(V1,[V2],a,[V3]) -> false
IsGenericsSubtype(V1,[a],V2,[V3]) -> false
IsInheritedField(a,V1) -> false
IsOverridden(a,V1) -> false
IsOverloaded(a,V1) -> false
IsOverriding(a,V1) -> false
IsRecursiveMethod(a,V1) -> false
HasReturnType(a,V1,V2) -> false
HasParameterType(a,V1) -> false
HasParameterType(V1,a) -> false
MethodHasParameterType(a,V1,V2) -> false
MethodIsUsedWithType(a,V1,[V2],[V3]) -> false
MethodIsUsedWithType(V1,V2,[a],[a]) -> false
ExistsMethodDefinition(a,cm) -> false
IsInheritedMethodWithParams(V1,cm,[V2]) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::DeleteMethod,
            "DeleteMethod",
            {"c", "m", "sig", "s"},
            {{"sigel", "sig"}},
            "ExistsClass(c) & ExistsType(c) & ExistsMethodDefinitionWithParams(c,m,[sig])"
            " & IsInheritedMethod(c,m) & IsDuplicate(c,m,s,m)"
            " & AllInvokedMethodsWithParameterOInBodyOfMAreNotOverloaded(c,m,this)",
            "",
            R"(
ExistsParameterWithType(c,m,[sig],V1) -> false
ExistsMethodDefinitionWithParams(c,m,[sig]) -> false
ExistsMethodDefinition(c,m) -> false
BoundVariableInMethodBody(c,m,sigel) -> false
ExistsParameterWithName(c,m,[sig],V1) -> false
IsIndirectlyRecursive(c,m) -> false
IsVisibleMethod(c,m,[sig],V1) -> false
IsInverter(c,m,V1,V2) -> false
IsDelegator(c,V1,m) -> false
IsOverridden(c,m) -> false
IsOverloaded(c,m) -> false
IsOverriding(c,m) -> false
IsRecursiveMethod(c,m) -> false
HasReturnType(c,m,V1) -> false
MethodHasParameterType(c,m,V1) -> false
MethodIsUsedWithType(c,m,[sig],[sig]) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::IntroduceParameterObject,
            "IntroduceParameterObject",
            {"s", "m", "osig", "t", "n"},
            {{"sub", "subs"}, {"pname", "pnames"}, {"gtr", "getters"}, {"osigel", "osig"}},
            "ExistsType(s) & !ExistsType(t) & ExistsMethodDefinitionWithParams(s,m,[osig])"
            " & AllSubclasses(s,[subs]) & BoundVariableInMethodBody(sub,m,pname)",
            "",
            R"(
ExistsClass(t) -> true
ExistsType(t) -> true
IsPrimitiveType(t) -> false
IsUsedMethod(s,m,[t]) -> true
IsUsedMethod(s,m,[osig]) -> false
IsUsedMethodIn(t,C,M) -> false
IsUsedMethod(t,C,[T1]) -> false
IsUsedMethod(t,C,[T1;T2]) -> false
IsUsedMethod(t,C,[T1;T2;T3]) -> false
IsUsedMethod(t,C,[T1;T2;T3;T4]) -> false
IsUsedConstructorAsMethodParameter(t,C,m) -> false
IsUsedConstructorAsInitializer(t,C,M) -> false
IsUsedConstructorAsMethodParameter(C,t,M) -> false
IsUsedConstructorAsInitializer(C,t,M) -> false
IsUsedConstructorAsObjectReceiver(C,t,M) -> false
IsSubType(C,t) -> false
MethodIsUsedWithType(s,m,[t],[t]) -> true
MethodIsUsedWithType(s,m,[osig],[osig]) -> false
IsInheritedMethodWithParams(s,M,[t]) -> false
IsInheritedMethodWithParams(sub,m,[t]) -> IsInheritedMethodWithParams(sub,m,[osig])
IsInheritedMethod(t,M) -> IsVisible(java.lang.Object,M,t)
IsInheritedMethodWithParams(t,M,[]) -> IsVisibleMethod(java.lang.Object,M,[],t)
IsInheritedMethodWithParams(t,M,[T1]) -> IsVisibleMethod(java.lang.Object,M,[T1],t)
IsInheritedMethodWithParams(t,M,[T1;T2]) -> IsVisibleMethod(java.lang.Object,M,[T1;T2],t)
IsInheritedMethodWithParams(t,M,[T1;T2;T3]) -> IsVisibleMethod(java.lang.Object,M,[T1;T2;T3],t)
IsInheritedMethodWithParams(t,M,[T1;T2;T3;T4;T5]) -> IsVisibleMethod(java.lang.Object,M,[T1;T2;T3;T4;T5],t)
ExistsMethodDefinitionWithParams(t,M,[]) -> false
ExistsMethodDefinitionWithParams(t,M,[T1]) -> false
ExistsMethodDefinitionWithParams(t,M,[T1;T2]) -> false
ExistsMethodDefinitionWithParams(t,M,[T1;T2;T3]) -> false
ExistsMethodDefinitionWithParams(t,M,[T1;T2;T3;T4]) -> false
ExistsMethodDefinitionWithParams(t,M,[T1;T2;T3;T4;T5]) -> false
IsSubType(t,X) -> false cond
ExtendsDirectly(t,X) -> false cond
IsInheritedMethodWithParams(C,M,[t;T1]) -> false
IsInheritedMethodWithParams(C,M,[t]) -> false
IsInheritedMethodWithParams(C,M,[T1;t]) -> false
IsInheritedMethodWithParams(C,M,[T1;T2;t]) -> false
IsInheritedMethodWithParams(C,M,[T1;t;T2]) -> false
IsInheritedMethodWithParams(C,M,[t;T1;T2]) -> false
ExtendsDirectly(t,java.lang.Object) -> true
IsUsedConstructorAsObjectReceiver(t,sub,m) -> BoundVariableInMethodBody(sub,m,pname) @sub
ExistsParameterWithName(s,m,[t],n) -> true
ExistsParameterWithName(sub,m,[t],n) -> true
ExistsParameterWithType(s,m,[t],t) -> true
ExistsParameterWithType(sub,m,[t],t) -> true
ExistsMethodDefinitionWithParams(s,m,[t]) -> true
ExistsMethodDefinitionWithParams(C,M,[t]) -> false cond
ExistsMethodDefinitionWithParams(C,M,[t;T1]) -> false
ExistsMethodDefinitionWithParams(C,M,[T1;t]) -> false
ExistsMethodDefinitionWithParams(C,M,[T1;T2;t]) -> false
ExistsMethodDefinitionWithParams(C,M,[T1;t;T2]) -> false
ExistsMethodDefinitionWithParams(C,M,[t;T1;T2]) -> false
ExistsMethodDefinitionWithParams(s,m,[osig]) -> false
ExistsMethodDefinitionWithParams(sub,m,[osig]) -> false
ExistsMethodDefinitionWithParams(sub,m,[t]) -> true
ExistsField(t,pname) -> true
ExistsMethodDefinition(t,gtr) -> true
IsUsedConstructorAsObjectReceiver(T1,T2,gtr) -> false
IsPrivate(t,pname) -> true
IsInheritedField(t,pname) -> false
ExistsParameterWithName(s,m,[osig],pname) -> false
ExistsParameterWithName(sub,m,[osig],pname) -> false
ExistsParameterWithType(s,m,[osig],osigel) -> false
ExistsParameterWithType(sub,m,[osig],osigel) -> false
BoundVariableInMethodBody(s,m,n) -> BoundVariableInMethodBody(s,m,pname) @pname
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(s,m,n,T) -> true
AllInvokedMethodsOnObjectOInBodyOfMAreDeclaredInC(sub,m,n,T) -> true
)"});

        t.push_back(OpTemplate{
            OpKind::InlineConstructor,
            "InlineConstructor",
            {"s", "m", "c"},
            {{"fld", "fields"}, {"gtr", "getters"}, {"fvar", "fvars"}},
            "ExistsType(s) & ExistsType(c) & IsUsedConstructorAsObjectReceiver(c,s,m)"
            " & (!IsInheritedMethodWithParams(s,m,[c]) | !ExistsMethodDefinitionWithParams(s,m,[c]))",
            "",
            R"(
IsUsedConstructorAsObjectReceiver(c,s,m) -> false
ExistsMethodDefinitionWithParams(C,M,[c]) -> false
IsUsedMethodIn(c,c,s) -> false
IsUsedConstructorAsMethodParameter(c,s,m) -> false
IsUsedConstructorAsInitializer(c,s,m) -> false
ExistsFieldInMethodScope(s,m,fld) -> true
BoundVariableInMethodBody(s,m,fld) -> true
ExistsLocalVariable(s,m,fvar) -> true
ExistsMethodDefinition(s,gtr) -> true
IsUsedConstructorAsObjectReceiver(c,s,gtr) -> false
IsOverriding(s,gtr) -> false
IsOverridden(s,gtr) -> false
IsRecursiveMethod(s,gtr) -> false
)"});

        t.push_back(OpTemplate{
            OpKind::InlineLocalField,
            "InlineLocalField",
            {"s", "m", "f"},
            {},
            "ExistsType(s) & ExistsMethodDefinition(s,m) & ExistsFieldInMethodScope(s,m,f)",
            "",
            "ExistsFieldInMethodScope(s,m,f) -> false\n"});

        t.push_back(OpTemplate{
            OpKind::InlineLocalVariable,
            "InlineLocalVariable",
            {"s", "m", "v"},
            {},
            "ExistsType(s) & ExistsMethodDefinition(s,m) & ExistsLocalVariable(s,m,v)",
            "",
            "ExistsLocalVariable(s,m,v) -> false\n"});

        t.push_back(OpTemplate{
            OpKind::WidenFieldVisibility,
            "WidenFieldVisibility",
            {"c", "f"},
            {},
            "ExistsField(c,f)",
            "",
            "IsPrivate(c,f) -> false\nIsPublic(c,f) -> true\n"});

        t.push_back(OpTemplate{
            OpKind::BoxReturnTypes,
            "BoxReturnTypes",
            {"s", "m", "from", "to"},
            {{"sub", "subs"}},
            "ExistsClass(s) & ExistsMethodDefinition(s,m) & HasReturnType(s,m,from)",
            "",
            R"(
HasReturnType(s,m,to) -> HasReturnType(s,m,from)
HasReturnType(sub,m,to) -> HasReturnType(sub,m,from)
HasReturnType(s,m,from) -> false
HasReturnType(sub,m,from) -> false
)"});

        t.push_back(OpTemplate{OpKind::IntroduceDownCast, "IntroduceDownCast",
                               {"c", "m", "s"}, {}, "true", "", ""});
        t.push_back(OpTemplate{OpKind::DeleteDownCast, "DeleteDownCast",
                               {"v", "m"}, {}, "true", "", ""});

        return t;
    }();
    return templates;
}

} // namespace repat::detail
