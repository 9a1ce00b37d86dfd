// Copyright 2026 The ospec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ospec/validate.h"

#include <gtest/gtest.h>

#include "ospec/error.h"
#include "ospec/parser.h"
#include "support.h"

namespace ospec {
namespace {

std::vector<Diagnostic> Check(std::string_view rules) {
  return Validate(ParseSpec("S(Item[] items, int n){ " + std::string(rules) + " }"));
}

::testing::AssertionResult HasCode(const std::vector<Diagnostic>& ds, DiagnosticCode code,
                                   const std::string& variable = "") {
  for (const Diagnostic& d : ds) {
    if (d.code == code && (variable.empty() || d.variable == variable)) {
      return ::testing::AssertionSuccess();
    }
  }
  std::string got;
  for (const Diagnostic& d : ds) got += std::string(DiagnosticCodeName(d.code)) + " " + d.variable + "; ";
  return ::testing::AssertionFailure() << "missing " << DiagnosticCodeName(code) << " "
                                       << variable << ", got: " << got;
}

TEST(ValidateTest, NetworkSpecsAreClean) {
  for (const char* path : {"specs/network.ospec", "specs/network_by_type.ospec"}) {
    EXPECT_TRUE(Validate(ParseSpec(testing::ReadSource(path))).empty()) << path;
  }
}

TEST(ValidateTest, VariableOnlyUnderNegation) {
  std::vector<Diagnostic> ds = Check("p(X?) :- not q(X?).");
  EXPECT_TRUE(HasCode(ds, DiagnosticCode::kUnsafeVariable, "X"));
  EXPECT_EQ(DiagnosticCodeName(DiagnosticCode::kUnsafeVariable), "unsafe-variable");
}

TEST(ValidateTest, HeadOnlyVariable) {
  std::vector<Diagnostic> ds = Check("exe N?.addNode(M?) :- N?Node(C?), C?items(_).");
  EXPECT_TRUE(HasCode(ds, DiagnosticCode::kUnboundVariable, "M"));
  EXPECT_EQ(ds.size(), 1u);
}

TEST(ValidateTest, ComparisonDoesNotBind) {
  EXPECT_TRUE(HasCode(Check("p(X?) :- X? < 3."), DiagnosticCode::kUnsafeVariable, "X"));
  EXPECT_TRUE(Check("p(X?) :- q(X?), X? < 3.").empty());
}

TEST(ValidateTest, BindersOfEachKind) {
  EXPECT_TRUE(Check("p(X?, I?) :- X?items(I?).").empty());
  EXPECT_TRUE(Check("p(N?) :- N?Node(X?), X?items(_).").empty());
  EXPECT_TRUE(Check("p(K?) :- K? = {q(X?) : X?items(_)}.").empty());
  EXPECT_TRUE(Check("p(X?) :- q(X?, _).").empty());
}

TEST(ValidateTest, ElementLocalVariables) {
  // The element atom binds inside body cardinalities...
  EXPECT_TRUE(Check(":- 2 {p(X?)}.").empty());
  // ...but not inside choice heads, where a condition must bind it.
  EXPECT_TRUE(HasCode(Check("{p(X?)}."), DiagnosticCode::kUnsafeVariable, "X"));
  EXPECT_TRUE(Check("{p(X?) : X?items(_)}.").empty());
  EXPECT_TRUE(HasCode(Check("{p(X?) : X? < 2}."), DiagnosticCode::kUnsafeVariable, "X"));
}

TEST(ValidateTest, MethodValueBase) {
  EXPECT_TRUE(Check("p(V?) :- X?items(_), q(V?), V? == X?.size().").empty());
  EXPECT_TRUE(HasCode(Check("p(X?) :- q(X?), X?.size() > 1."), DiagnosticCode::kMethodBase, "X"));
  EXPECT_TRUE(HasCode(Check("p(N?) :- N?Node(C?), C?items(_), N?.size() > 1."),
                      DiagnosticCode::kMethodBase, "N"));
}

TEST(ValidateTest, TargetsMustBeObjects) {
  EXPECT_TRUE(HasCode(Check("return X? :- q(X?)."), DiagnosticCode::kInvalidTarget, "X"));
  EXPECT_TRUE(HasCode(Check("exe X?.m() :- q(X?)."), DiagnosticCode::kInvalidTarget, "X"));
  EXPECT_TRUE(Check("return X? :- X?items(0).").empty());
  EXPECT_TRUE(Check("exe X?.m(1) :- X?items(_).").empty());
}

TEST(ValidateTest, ReservedNames) {
  EXPECT_TRUE(HasCode(Check("created(1)."), DiagnosticCode::kReservedName));
  EXPECT_TRUE(HasCode(Check("ospec_aux(1)."), DiagnosticCode::kReservedName));
  EXPECT_TRUE(HasCode(Check("p :- ret(1)."), DiagnosticCode::kReservedName));
  EXPECT_TRUE(IsReservedPredicate("param_member"));
  EXPECT_TRUE(IsReservedPredicate("method_val"));
  EXPECT_FALSE(IsReservedPredicate("edge"));
}

TEST(ValidateTest, AnonymousPositions) {
  EXPECT_TRUE(HasCode(Check("p(_)."), DiagnosticCode::kAnonymousTerm));
  EXPECT_TRUE(HasCode(Check("p :- q(1), not r(_)."), DiagnosticCode::kAnonymousTerm));
  EXPECT_TRUE(HasCode(Check("p :- q(X?), X? < _."), DiagnosticCode::kAnonymousTerm));
}

TEST(ValidateTest, NestedConstruction) {
  EXPECT_TRUE(HasCode(Check("new Box(N?) :- N?Node(C?), C?items(_)."),
                      DiagnosticCode::kNestedConstruction));
}

TEST(ValidateTest, MinimizeElements) {
  SpecProgram ok = ParseSpec("S(){ {p(1); p(2)}. #minimize{p(X?)}. }");
  EXPECT_TRUE(Validate(ok).empty());
  SpecProgram bad = ParseSpec("S(){ {p(1); p(2)}. #minimize{p(X?) : X? < Y?}. }");
  std::vector<Diagnostic> ds = Validate(bad);
  EXPECT_TRUE(HasCode(ds, DiagnosticCode::kUnsafeVariable, "Y"));
  EXPECT_EQ(ds.front().rule_index, -1);
}

TEST(ValidateTest, ThrowsWithFirstDiagnostic) {
  SpecProgram spec = ParseSpec("S(){ p(X?) :- not q(X?). }");
  try {
    ValidateOrThrow(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::kValidate);
    EXPECT_NE(std::string(e.what()).find("X?"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace ospec
