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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "amodel/errors.h"

namespace amodel {
namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

bool IsReserved(const std::string& name) {
  static const std::unordered_set<std::string> kReserved = {
      "inf",     "infinity", "free",     "minimize", "maximize", "minimum",
      "maximum", "min",      "max",      "subject",  "such",     "st",
      "bounds",  "bound",    "general",  "generals", "gen",      "binary",
      "binaries", "bin",     "end"};
  return kReserved.contains(Lower(name));
}

// Maps names to unique tokens of the dialect: [A-Za-z_][A-Za-z0-9_]*, not a
// keyword, unique within the namespace.
class NameTable {
 public:
  explicit NameTable(std::string fallback_prefix)
      : prefix_(std::move(fallback_prefix)) {}

  void Reserve(std::string name) { used_.insert(std::move(name)); }

  std::string Assign(const std::string& name, std::int64_t index) {
    std::string base;
    base.reserve(name.size());
    for (char c : name) {
      base.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '_'
                         ? c
                         : '_');
    }
    if (base.empty()) base = prefix_ + std::to_string(index + 1);
    if (std::isdigit(static_cast<unsigned char>(base[0]))) base = "_" + base;
    if (IsReserved(base)) base += "_";
    std::string candidate = base;
    for (int k = 2; used_.contains(candidate); ++k) {
      candidate = base + "_" + std::to_string(k);
    }
    used_.insert(candidate);
    return candidate;
  }

 private:
  std::string prefix_;
  std::unordered_set<std::string> used_;
};

void WriteCoefficient(std::ostream& out, double c, bool first,
                      const std::string& name) {
  if (first) {
    out << " " << (c < 0 ? "-" : "");
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  const double a = std::abs(c);
  if (a != 1.0) out << FormatNumber(a) << " ";
  out << name;
}

// Writes " t1 + t2 ... + k"; returns false when nothing was written.
bool WriteAffine(std::ostream& out, const ScalarAffineFunction& f,
                 const std::vector<std::string>& names, bool with_constant) {
  bool first = true;
  for (const LinearTerm& t : f.terms) {
    WriteCoefficient(out, t.coefficient, first, names[t.variable]);
    first = false;
  }
  if (with_constant && f.constant != 0.0) {
    if (first) {
      out << " " << FormatNumber(f.constant);
    } else {
      out << (f.constant < 0 ? " - " : " + ")
          << FormatNumber(std::abs(f.constant));
    }
    first = false;
  }
  return !first;
}

[[noreturn]] void Unsupported(std::int64_t index, const ConstraintData& c,
                              std::string_view why) {
  throw Error(ErrorCode::kUnsupportedInDialect,
              "constraint " + std::to_string(index) + " (" +
                  std::string(FunctionKindName(KindOf(c.function))) + " in " +
                  SetName(c.set) + "): " + std::string(why));
}

}  // namespace

void WriteLp(const ModelImage& image, std::ostream& out) {
  // Validate first so nothing is emitted for unsupported models.
  for (std::int64_t c : image.LiveConstraints()) {
    const ConstraintData& data = image.constraint(c);
    const SetTag tag = TagOf(data.set);
    if (IsIntegralitySet(tag)) continue;
    if (!std::holds_alternative<ScalarAffineFunction>(data.function)) {
      Unsupported(c, data, "only scalar affine rows are expressible");
    }
    if (tag != SetTag::kLessEqual && tag != SetTag::kGreaterEqual &&
        tag != SetTag::kEqualTo) {
      Unsupported(c, data, "only <=, >= and = rows are expressible");
    }
  }

  std::vector<std::string> names(image.variable_slots());
  NameTable variable_names("x");
  for (std::int64_t j : image.LiveVariables()) {
    names[j] = variable_names.Assign(image.variable(j).name, j);
  }

  const ObjectiveData& objective = image.objective();
  out << (objective.sense == ObjectiveSense::kMinimize ? "Minimize\n"
                                                       : "Maximize\n");
  out << "obj:";
  bool any = WriteAffine(out, objective.function.affine, names, true);
  if (!objective.function.quadratic.empty()) {
    out << (any ? " + [" : " [");
    bool first = true;
    for (const QuadraticTerm& q : objective.function.quadratic) {
      const std::string term =
          q.first == q.second ? names[q.first] + " ^ 2"
                              : names[q.first] + " * " + names[q.second];
      WriteCoefficient(out, 2.0 * q.coefficient, first, term);
      first = false;
    }
    out << " ] / 2";
  }
  out << "\n";

  out << "Subject To\n";
  NameTable row_names("c");
  row_names.Reserve("obj");
  for (std::int64_t c : image.LiveConstraints()) {
    const ConstraintData& data = image.constraint(c);
    if (IsIntegralitySet(TagOf(data.set))) continue;
    const auto& f = std::get<ScalarAffineFunction>(data.function);
    out << row_names.Assign(data.name, c) << ":";
    if (!WriteAffine(out, f, names, false)) out << " 0";
    const ConstraintSet shifted = ShiftSet(data.set, f.constant);
    if (const auto* s = std::get_if<LessEqual>(&shifted)) {
      out << " <= " << FormatNumber(s->upper);
    } else if (const auto* s = std::get_if<GreaterEqual>(&shifted)) {
      out << " >= " << FormatNumber(s->lower);
    } else {
      out << " = " << FormatNumber(std::get<EqualTo>(shifted).value);
    }
    out << "\n";
  }

  const std::vector<std::int64_t> live = image.LiveVariables();
  if (!live.empty()) {
    out << "Bounds\n";
    for (std::int64_t j : live) {
      auto [lo, hi] = image.EffectiveBounds(j);
      if (lo == hi) {
        out << names[j] << " = " << FormatNumber(lo) << "\n";
      } else if (std::isinf(lo) && std::isinf(hi)) {
        out << names[j] << " free\n";
      } else if (std::isinf(hi)) {
        out << names[j] << " >= " << FormatNumber(lo) << "\n";
      } else {
        out << FormatNumber(lo) << " <= " << names[j]
            << " <= " << FormatNumber(hi) << "\n";
      }
    }
  }
  for (auto [kind, header] :
       {std::pair{Integrality::kInteger, "General\n"},
        std::pair{Integrality::kBinary, "Binary\n"}}) {
    bool wrote_header = false;
    for (std::int64_t j : live) {
      if (image.EffectiveIntegrality(j) != kind) continue;
      if (!wrote_header) out << header;
      wrote_header = true;
      out << names[j] << "\n";
    }
  }
  out << "End\n";
}

std::string WriteLpString(const ModelImage& image) {
  std::ostringstream out;
  WriteLp(image, out);
  return out.str();
}

void WriteLpFile(const ModelImage& image, const std::filesystem::path& path) {
  const std::string text = WriteLpString(image);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  file << text;
  file.flush();
  if (!file) {
    throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  }
}

// --- reader -----------------------------------------------------------------

namespace {

enum class Section { kNone, kObjective, kConstraints, kBounds, kGeneral,
                     kBinary, kEnd };

struct Token {
  enum Kind { kName, kNumber, kOperator, kLabel } kind;
  std::string text;
  double value = 0.0;
  int line = 0;
  int column = 0;
};

struct SectionTokens {
  Section section;
  std::vector<Token> tokens;
};

std::optional<Section> HeaderSection(const std::string& line) {
  std::string key;
  for (char c : Lower(line)) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!key.empty() && key.back() != ' ') key.push_back(' ');
    } else {
      key.push_back(c);
    }
  }
  while (!key.empty() && key.back() == ' ') key.pop_back();
  static const std::map<std::string, Section> kHeaders = {
      {"minimize", Section::kObjective},   {"minimum", Section::kObjective},
      {"min", Section::kObjective},        {"maximize", Section::kObjective},
      {"maximum", Section::kObjective},    {"max", Section::kObjective},
      {"subject to", Section::kConstraints},
      {"such that", Section::kConstraints},
      {"st", Section::kConstraints},       {"s.t.", Section::kConstraints},
      {"bounds", Section::kBounds},        {"bound", Section::kBounds},
      {"general", Section::kGeneral},      {"generals", Section::kGeneral},
      {"gen", Section::kGeneral},          {"binary", Section::kBinary},
      {"binaries", Section::kBinary},      {"bin", Section::kBinary},
      {"end", Section::kEnd}};
  auto it = kHeaders.find(key);
  if (it == kHeaders.end()) return std::nullopt;
  return it->second;
}

bool IsUnknownHeader(const std::string& line) {
  static const std::unordered_set<std::string> kOther = {
      "semi-continuous", "semi-continuous variables", "semis", "semi",
      "sos", "sos1", "sos2", "pwl", "lazy constraints", "user cuts",
      "ranges", "declarations", "objectives", "general integers"};
  std::string key = Lower(line);
  while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) {
    key.pop_back();
  }
  return kOther.contains(key);
}

bool IsMaximizeHeader(const std::string& line) {
  const std::string key = Lower(line);
  return key.rfind("max", 0) == 0;
}

bool IsNameStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

void Tokenize(std::string_view line, int line_number,
              std::vector<Token>& out) {
  std::size_t i = 0;
  auto column = [&] { return static_cast<int>(i) + 1; };
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.line = line_number;
    t.column = column();
    if (IsNameStart(c)) {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_' || line[j] == '.')) {
        ++j;
      }
      t.text = std::string(line.substr(i, j - i));
      i = j;
      std::size_t k = i;
      while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
      if (k < line.size() && line[k] == ':') {
        t.kind = Token::kLabel;
        i = k + 1;
      } else {
        t.kind = Token::kName;
      }
      out.push_back(std::move(t));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double value = 0.0;
      auto [end, ec] =
          std::from_chars(line.data() + i, line.data() + line.size(), value);
      if (ec != std::errc()) {
        throw ParseError(ErrorCode::kParseError, line_number, column(),
                         "malformed number");
      }
      const std::size_t length =
          static_cast<std::size_t>(end - (line.data() + i));
      t.kind = Token::kNumber;
      t.text = std::string(line.substr(i, length));
      t.value = value;
      i += length;
      out.push_back(std::move(t));
      continue;
    }
    static constexpr std::string_view kTwoChar[] = {"<=", ">=", "=<", "=>"};
    t.kind = Token::kOperator;
    bool matched = false;
    for (std::string_view op : kTwoChar) {
      if (line.substr(i, 2) == op) {
        t.text = std::string(op);
        i += 2;
        matched = true;
        break;
      }
    }
    if (!matched) {
      if (std::string_view("+-*^[]/=<>:").find(c) == std::string_view::npos) {
        throw ParseError(ErrorCode::kParseError, line_number, column(),
                         std::string("unexpected character '") + c + "'");
      }
      t.text = std::string(1, c);
      ++i;
    }
    out.push_back(std::move(t));
  }
}

struct RawRow {
  std::string label;
  std::vector<std::pair<std::string, double>> terms;
  double constant = 0.0;
  std::string sense;
  double rhs = 0.0;
  int line = 0;
};

struct RawModel {
  ObjectiveSense sense = ObjectiveSense::kMinimize;
  std::vector<std::pair<std::string, double>> objective_terms;
  std::vector<std::tuple<std::string, std::string, double>> quadratic;
  double objective_constant = 0.0;
  std::vector<RawRow> rows;
  std::vector<std::string> bound_order;
  std::unordered_map<std::string, std::pair<double, double>> bounds;
  std::vector<std::string> appearance;
  std::unordered_set<std::string> seen;
  std::vector<std::string> general;
  std::vector<std::string> binary;
};

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, RawModel& model)
      : tokens_(tokens), model_(model) {}

  void Objective() {
    if (Peek() != nullptr && Peek()->kind == Token::kLabel) ++pos_;
    Expression(model_.objective_terms, model_.objective_constant, true);
    if (Peek() != nullptr) Fail(*Peek(), "unexpected token in objective");
  }

  void Constraints() {
    while (Peek() != nullptr) {
      RawRow row;
      row.line = Peek()->line;
      if (Peek()->kind == Token::kLabel) row.label = tokens_[pos_++].text;
      Expression(row.terms, row.constant, false);
      const Token& sense = Expect("a sense (<=, >= or =)");
      if (sense.kind != Token::kOperator ||
          (sense.text != "<=" && sense.text != ">=" && sense.text != "=")) {
        Fail(sense, "invalid sense token '" + sense.text + "'");
      }
      row.sense = sense.text;
      row.rhs = SignedValue();
      model_.rows.push_back(std::move(row));
    }
  }

  void Bounds() {
    while (Peek() != nullptr) {
      const Token& first = *Peek();
      if (first.kind == Token::kName && !IsInfinity(first)) {
        ++pos_;
        const std::string name = Use(first.text);
        auto& b = Bound(name);
        const Token& op = Expect("a bound");
        if (op.kind == Token::kName && Lower(op.text) == "free") {
          b = {-kInf, kInf};
          continue;
        }
        if (op.kind != Token::kOperator) Fail(op, "expected a bound operator");
        const double v = SignedValue();
        if (op.text == ">=") {
          b.first = v;
        } else if (op.text == "<=") {
          b.second = v;
        } else if (op.text == "=") {
          b = {v, v};
        } else {
          Fail(op, "invalid bound operator '" + op.text + "'");
        }
        continue;
      }
      const double lower = SignedValue();
      const Token& op = Expect("'<='");
      if (op.kind != Token::kOperator || op.text != "<=") {
        Fail(op, "expected '<=' after a lower bound");
      }
      const Token& var = Expect("a variable name");
      if (var.kind != Token::kName) Fail(var, "expected a variable name");
      const std::string name = Use(var.text);
      auto& b = Bound(name);
      b.first = lower;
      const Token* next = Peek();
      if (next != nullptr && next->kind == Token::kOperator &&
          next->text == "<=") {
        ++pos_;
        b.second = SignedValue();
      }
    }
  }

  void Names(std::vector<std::string>& out) {
    while (Peek() != nullptr) {
      const Token& t = tokens_[pos_++];
      if (t.kind != Token::kName) Fail(t, "expected a variable name");
      out.push_back(Use(t.text));
    }
  }

 private:
  const Token* Peek() const {
    return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr;
  }

  const Token& Expect(const std::string& what) {
    if (pos_ >= tokens_.size()) {
      const Token& last = tokens_.back();
      throw ParseError(ErrorCode::kParseError, last.line,
                       last.column + static_cast<int>(last.text.size()),
                       "expected " + what + " before end of section");
    }
    return tokens_[pos_++];
  }

  [[noreturn]] static void Fail(const Token& t, const std::string& message) {
    throw ParseError(ErrorCode::kParseError, t.line, t.column, message);
  }

  static bool IsInfinity(const Token& t) {
    const std::string s = Lower(t.text);
    return t.kind == Token::kName && (s == "inf" || s == "infinity");
  }

  bool IsOp(const Token* t, std::string_view op) const {
    return t != nullptr && t->kind == Token::kOperator && t->text == op;
  }

  double SignedValue() {
    double sign = 1.0;
    const Token* t = Peek();
    while (IsOp(t, "+") || IsOp(t, "-")) {
      if (t->text == "-") sign = -sign;
      ++pos_;
      t = Peek();
    }
    const Token& v = Expect("a number");
    if (v.kind == Token::kNumber) return sign * v.value;
    if (IsInfinity(v)) return sign * kInf;
    Fail(v, "expected a number");
  }

  std::string Use(const std::string& name) {
    if (model_.seen.insert(name).second) model_.appearance.push_back(name);
    return name;
  }

  std::pair<double, double>& Bound(const std::string& name) {
    auto [it, inserted] = model_.bounds.try_emplace(name, 0.0, kInf);
    if (inserted) model_.bound_order.push_back(name);
    return it->second;
  }

  // Reads [sign] [number] [name] terms until a token that cannot continue
  // the expression.
  void Expression(std::vector<std::pair<std::string, double>>& terms,
                  double& constant, bool allow_quadratic) {
    bool first = true;
    for (;;) {
      const Token* t = Peek();
      if (t == nullptr) return;
      double sign = 1.0;
      bool had_sign = false;
      while (IsOp(t, "+") || IsOp(t, "-")) {
        if (t->text == "-") sign = -sign;
        had_sign = true;
        ++pos_;
        t = Peek();
      }
      if (!first && !had_sign) {
        if (t != nullptr && (t->kind == Token::kName ||
                             t->kind == Token::kNumber)) {
          Fail(*t, "expected '+' or '-' between terms");
        }
        return;
      }
      if (t == nullptr) {
        Fail(tokens_[pos_ - 1], "expression ends with a sign");
      }
      if (IsOp(t, "[")) {
        if (!allow_quadratic) Fail(*t, "quadratic terms are only allowed in the objective");
        ++pos_;
        Bracket(sign);
      } else if (t->kind == Token::kNumber || IsInfinity(*t)) {
        const double value = IsInfinity(*t) ? kInf : t->value;
        ++pos_;
        const Token* next = Peek();
        if (next != nullptr && next->kind == Token::kName && !IsInfinity(*next)) {
          ++pos_;
          terms.emplace_back(Use(next->text), sign * value);
        } else {
          constant += sign * value;
        }
      } else if (t->kind == Token::kName) {
        ++pos_;
        terms.emplace_back(Use(t->text), sign);
      } else {
        if (had_sign) Fail(*t, "expected a term after the sign");
        return;
      }
      first = false;
    }
  }

  void Bracket(double outer_sign) {
    bool first = true;
    for (;;) {
      const Token* t = Peek();
      if (IsOp(t, "]")) {
        ++pos_;
        break;
      }
      double sign = outer_sign;
      bool had_sign = false;
      while (IsOp(t, "+") || IsOp(t, "-")) {
        if (t->text == "-") sign = -sign;
        had_sign = true;
        ++pos_;
        t = Peek();
      }
      if (!first && !had_sign) {
        Fail(t == nullptr ? tokens_.back() : *t, "expected '+', '-' or ']'");
      }
      double coefficient = 1.0;
      const Token& head = Expect("a quadratic term");
      const Token* name = &head;
      if (head.kind == Token::kNumber) {
        coefficient = head.value;
        name = &Expect("a variable name");
      }
      if (name->kind != Token::kName) Fail(*name, "expected a variable name");
      const std::string a = Use(name->text);
      const Token& op = Expect("'^' or '*'");
      std::string b;
      if (IsOp(&op, "^")) {
        const Token& power = Expect("2");
        if (power.kind != Token::kNumber || power.value != 2.0) {
          Fail(power, "only squares are supported");
        }
        b = a;
      } else if (IsOp(&op, "*")) {
        const Token& other = Expect("a variable name");
        if (other.kind != Token::kName) Fail(other, "expected a variable name");
        b = Use(other.text);
      } else {
        Fail(op, "expected '^' or '*'");
      }
      model_.quadratic.emplace_back(a, b, sign * coefficient);
      first = false;
    }
    const Token& slash = Expect("'/ 2'");
    if (!IsOp(&slash, "/")) Fail(slash, "expected '/ 2' after ']'");
    const Token& two = Expect("2");
    if (two.kind != Token::kNumber || two.value != 2.0) {
      Fail(two, "expected '/ 2' after ']'");
    }
  }

  const std::vector<Token>& tokens_;
  RawModel& model_;
  std::size_t pos_ = 0;
};

ScalarAffineFunction Collect(
    const std::vector<std::pair<std::string, double>>& terms,
    const std::unordered_map<std::string, std::int64_t>& index) {
  std::map<std::int64_t, double> folded;
  for (const auto& [name, c] : terms) folded[index.at(name)] += c;
  ScalarAffineFunction f;
  for (const auto& [j, c] : folded) {
    if (c != 0.0) f.terms.push_back({j, c});
  }
  return f;
}

}  // namespace

ModelImage ReadLp(std::string_view text) {
  std::vector<SectionTokens> sections;
  RawModel raw;
  int line_number = 0;
  std::size_t start = 0;
  bool ended = false;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;
    if (const std::size_t comment = line.find('\\');
        comment != std::string_view::npos) {
      line = line.substr(0, comment);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::string trimmed(line);
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (ended) {
      throw ParseError(ErrorCode::kParseError, line_number, 1,
                       "content after End");
    }
    if (std::optional<Section> s = HeaderSection(trimmed)) {
      if (*s == Section::kObjective) {
        if (!sections.empty()) {
          throw ParseError(ErrorCode::kParseError, line_number, 1,
                           "duplicate objective section");
        }
        raw.sense = IsMaximizeHeader(trimmed) ? ObjectiveSense::kMaximize
                                              : ObjectiveSense::kMinimize;
      } else if (sections.empty()) {
        throw ParseError(ErrorCode::kParseError, line_number, 1,
                         "expected Minimize or Maximize first");
      }
      if (*s == Section::kEnd) {
        ended = true;
      } else {
        sections.push_back({*s, {}});
      }
      if (end == text.size()) break;
      continue;
    }
    if (IsUnknownHeader(trimmed)) {
      throw ParseError(ErrorCode::kUnknownSection, line_number, 1,
                       "unsupported section '" + trimmed + "'");
    }
    if (sections.empty()) {
      throw ParseError(ErrorCode::kParseError, line_number, 1,
                       "expected Minimize or Maximize first");
    }
    Tokenize(line, line_number, sections.back().tokens);
    if (end == text.size()) break;
  }
  if (!ended) {
    throw ParseError(ErrorCode::kParseError, line_number, 1,
                     "missing End");
  }

  for (const SectionTokens& s : sections) {
    Parser parser(s.tokens, raw);
    switch (s.section) {
      case Section::kObjective:
        parser.Objective();
        break;
      case Section::kConstraints:
        parser.Constraints();
        break;
      case Section::kBounds:
        parser.Bounds();
        break;
      case Section::kGeneral:
        parser.Names(raw.general);
        break;
      case Section::kBinary:
        parser.Names(raw.binary);
        break;
      default:
        break;
    }
  }

  std::vector<std::string> order = raw.bound_order;
  std::unordered_set<std::string> placed(order.begin(), order.end());
  for (const std::string& name : raw.appearance) {
    if (placed.insert(name).second) order.push_back(name);
  }
  std::unordered_set<std::string> general(raw.general.begin(),
                                          raw.general.end());
  std::unordered_set<std::string> binary(raw.binary.begin(), raw.binary.end());

  ModelImage image;
  image.Reserve(static_cast<std::int64_t>(order.size()),
                static_cast<std::int64_t>(raw.rows.size()));
  std::unordered_map<std::string, std::int64_t> index;
  for (const std::string& name : order) {
    VariableData v;
    v.name = name;
    auto it = raw.bounds.find(name);
    if (it != raw.bounds.end()) {
      std::tie(v.lower, v.upper) = it->second;
    } else if (binary.contains(name)) {
      v.lower = 0.0;
      v.upper = 1.0;
    } else {
      v.lower = 0.0;
      v.upper = kInf;
    }
    if (binary.contains(name)) {
      v.integrality = Integrality::kBinary;
    } else if (general.contains(name)) {
      v.integrality = Integrality::kInteger;
    }
    index[name] = image.AddVariable(std::move(v));
  }

  for (const RawRow& row : raw.rows) {
    ConstraintData c;
    ScalarAffineFunction f = Collect(row.terms, index);
    const double rhs = row.rhs - row.constant;
    if (row.sense == "<=") {
      c.set = LessEqual{rhs};
    } else if (row.sense == ">=") {
      c.set = GreaterEqual{rhs};
    } else {
      c.set = EqualTo{rhs};
    }
    c.function = std::move(f);
    c.name = row.label;
    image.AddConstraint(std::move(c));
  }

  ObjectiveData objective;
  objective.sense = raw.sense;
  objective.function.affine = Collect(raw.objective_terms, index);
  objective.function.affine.constant = raw.objective_constant;
  std::map<std::pair<std::int64_t, std::int64_t>, double> quadratic;
  for (const auto& [a, b, c] : raw.quadratic) {
    std::int64_t i = index.at(a);
    std::int64_t j = index.at(b);
    if (i > j) std::swap(i, j);
    quadratic[{i, j}] += c;
  }
  for (const auto& [key, c] : quadratic) {
    if (c != 0.0) {
      objective.function.quadratic.push_back({key.first, key.second, c / 2.0});
    }
  }
  image.SetObjective(std::move(objective));
  return image;
}

ModelImage ReadLpFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return ReadLp(buffer.str());
}

}  // namespace amodel
