// Copyright 2026 The amodel Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amodel/lp_format.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amodel/model.h"
#include "expect_error.h"
#include "fixtures.h"

namespace amodel {
namespace {

using ::amodel::testing::BuildTwoVariableLp;
using ::amodel::testing::Rng;
using ::testing::HasSubstr;

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(LpFormatTest, WritesTwoVariableLp) {
  Model model;
  BuildTwoVariableLp(model);
  const std::string text = WriteLpString(model.image());
  EXPECT_THAT(text, HasSubstr("obj: 12 x + 20 y\n"));
  EXPECT_THAT(text, HasSubstr("c1: 6 x + 8 y >= 100\n"));
  EXPECT_THAT(text, HasSubstr("c2: 7 x + 12 y >= 120\n"));
  EXPECT_THAT(text, HasSubstr("x >= 0\n"));
  EXPECT_THAT(text, HasSubstr("0 <= y <= 3\n"));
}

TEST(LpFormatTest, GoldenFileIsByteStable) {
  Model model;
  BuildTwoVariableLp(model);
  const std::string golden =
      ReadFile(std::filesystem::path(AMODEL_TEST_DATA_DIR) / "two_variable_lp.lp");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(WriteLpString(model.image()), golden);
  EXPECT_EQ(WriteLpString(model.image()), WriteLpString(model.image()));
  EXPECT_EQ(WriteLpString(ReadLp(golden)), golden);
}

TEST(LpFormatTest, EmptyModelSkeleton) {
  EXPECT_EQ(WriteLpString(ModelImage()), "Minimize\nobj:\nSubject To\nEnd\n");
  EXPECT_EQ(ReadLp("Minimize\nobj:\nSubject To\nEnd\n").Digest(),
            ModelImage().Digest());
}

TEST(LpFormatTest, PsdConstraintUnsupported) {
  Model model;
  std::vector<VariableRef> m = model.AddVariables(2);
  model.AddConstraint(std::vector<std::vector<AffExpr>>{{AffExpr(m[0]), AffExpr(m[1])},
                                                        {AffExpr(m[1]), AffExpr(m[0])}},
                      PsdCone{2});
  EXPECT_ERROR(WriteLpString(model.image()), ErrorCode::kUnsupportedInDialect);
}

TEST(LpFormatTest, TwoVariableLpRoundTrips) {
  Model model;
  BuildTwoVariableLp(model);
  EXPECT_EQ(ReadLp(WriteLpString(model.image())).Digest(), model.Digest());
}

TEST(LpFormatTest, MalformedSenseReportsLocation) {
  const std::string text =
      "Minimize\nobj: x\nSubject To\nc1: x + y =< 4\nEnd\n";
  try {
    ReadLp(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_EQ(e.line(), 4);
    EXPECT_EQ(e.column(), 11);
  }
}

TEST(LpFormatTest, ParserErrors) {
  EXPECT_ERROR(ReadLp("Minimize\nobj: x\nSOS\nEnd\n"), ErrorCode::kUnknownSection);
  EXPECT_ERROR(ReadLp("Minimize\nobj: x\nSubject To\n"), ErrorCode::kParseError);
  EXPECT_ERROR(ReadLp("Minimize\nobj: x\nEnd\nx\n"), ErrorCode::kParseError);
  EXPECT_ERROR(ReadLp("Minimize\nobj: 3 +\nEnd\n"), ErrorCode::kParseError);
  EXPECT_ERROR(ReadLpFile("/nonexistent/dir/model.lp"), ErrorCode::kIoError);
}

TEST(LpFormatTest, ReaderAcceptsCommentsAndCase) {
  const ModelImage image = ReadLp(
      "\\ a comment\nMAXIMIZE\n obj: 2 x + 3 y\nsubject to\n r: x + y <= 4\n"
      "BOUNDS\n x <= 3\n y free\nGENERAL\n x\nEND\n");
  EXPECT_EQ(image.num_variables(), 2);
  EXPECT_EQ(image.num_constraints(), 1);
  EXPECT_EQ(image.variable(0).integrality, Integrality::kInteger);
  EXPECT_EQ(image.variable(1).lower, -kInf);
  EXPECT_EQ(image.objective().sense, ObjectiveSense::kMaximize);
}

TEST(LpFormatTest, QuadraticObjectiveBracket) {
  Model model;
  VariableRef x = model.AddVariable(0, 1, Integrality::kContinuous, "x");
  VariableRef y = model.AddVariable(0, 1, Integrality::kContinuous, "y");
  model.SetObjective(ObjectiveSense::kMinimize, x * x + 3 * Multiply(AffExpr(x), AffExpr(y)) + y);
  const std::string text = WriteLpString(model.image());
  EXPECT_THAT(text, HasSubstr("obj: y + [ 2 x ^ 2 + 6 x * y ] / 2\n"));
  EXPECT_EQ(ReadLp(text).Digest(), model.Digest());
}

TEST(LpFormatTest, NamesAreSanitizedAndUnique) {
  Model model;
  VariableRef a = model.AddVariable(0, 1, Integrality::kContinuous, "x[1]");
  VariableRef b = model.AddVariable(0, 1, Integrality::kContinuous, "x(1)");
  VariableRef c = model.AddVariable(0, 1, Integrality::kContinuous, "1st");
  VariableRef d = model.AddVariable(0, 1, Integrality::kContinuous, "free");
  model.AddConstraint(a + b + c + d, LessEqual{2});
  const std::string text = WriteLpString(model.image());
  EXPECT_THAT(text, HasSubstr("x_1_ + x_1__2 + _1st + free_ <= 2"));
  EXPECT_EQ(ReadLp(text).Digest(), model.Digest());
}

TEST(LpFormatTest, FileRoundTrip) {
  Model model;
  BuildTwoVariableLp(model);
  const auto path = std::filesystem::temp_directory_path() / "amodel_lp_format_test.lp";
  WriteLpFile(model.image(), path);
  EXPECT_EQ(ReadLpFile(path).Digest(), model.Digest());
  std::filesystem::remove(path);
}

// Random models with every supported feature survive write then read.
TEST(LpFormatTest, PropertyRandomRoundTrip) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Model model;
    testing::BuildRandomFileModel(model, rng);
    const std::string text = WriteLpString(model.image());
    const ModelImage back = ReadLp(text);
    ASSERT_EQ(back.Digest(), model.Digest()) << "trial " << trial << "\n" << text;
    EXPECT_EQ(WriteLpString(back), text) << "trial " << trial;
  }
}

}  // namespace
}  // namespace amodel
