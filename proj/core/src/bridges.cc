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

#include "amodel/bridges.h"

#include <algorithm>
#include <cmath>

#include "amodel/errors.h"

namespace amodel {
namespace {

constexpr int kMaxChainLength = 2;

// Returns the first variable whose bound makes the range of f infinite on
// the requested side, or -1.
std::int64_t UnboundedTerm(const ScalarAffineFunction& f,
                           const BridgeBuilder& out, bool upper_side) {
  for (const LinearTerm& t : f.terms) {
    auto [lo, hi] = out.Bounds(t.variable);
    const bool use_upper = (t.coefficient > 0) == upper_side;
    if (std::isinf(use_upper ? hi : lo)) return t.variable;
  }
  return -1;
}

ScalarAffineFunction WithTerm(ScalarAffineFunction f, std::int64_t variable,
                              double coefficient) {
  f.SetCoefficient(variable, f.coefficient(variable) + coefficient);
  f.constant = 0.0;
  return f;
}

std::pair<double, double> Range(const ScalarAffineFunction& f,
                                const BridgeBuilder& out) {
  return AffineRange(f, [&out](std::int64_t v) { return out.Bounds(v); });
}

class IndicatorBridge : public Bridge {
 public:
  std::string name() const override { return "IndicatorBigM"; }

  void Rewrite(const ConstraintData& constraint,
               BridgeBuilder& out) const override {
    const auto& rows = std::get<VectorAffineFunction>(constraint.function).rows;
    const auto& set = std::get<Indicator>(constraint.set);
    const std::int64_t z = *SingleVariable(rows[0]);
    const ScalarAffineFunction& f = rows[1];
    const double b = f.constant;
    auto [fmin, fmax] = Range(f, out);

    if (const auto* le = std::get_if<LessEqual>(&set.inner)) {
      const double c = le->upper;
      if (std::isinf(fmax)) Unbounded(UnboundedTerm(f, out, true));
      const double m = std::max(fmax - c, 0.0);
      if (set.activate_on) {
        out.AddConstraint({WithTerm(f, z, m), LessEqual{c + m - b}, ""});
      } else {
        out.AddConstraint({WithTerm(f, z, -m), LessEqual{c - b}, ""});
      }
    } else {
      const double c = std::get<GreaterEqual>(set.inner).lower;
      if (std::isinf(fmin)) Unbounded(UnboundedTerm(f, out, false));
      const double m = std::max(c - fmin, 0.0);
      if (set.activate_on) {
        out.AddConstraint({WithTerm(f, z, -m), GreaterEqual{c - m - b}, ""});
      } else {
        out.AddConstraint({WithTerm(f, z, m), GreaterEqual{c - b}, ""});
      }
    }
  }

 private:
  [[noreturn]] static void Unbounded(std::int64_t variable) {
    throw Error(ErrorCode::kUnboundedIndicatorBigM,
                "variable " + std::to_string(variable) +
                    " has no finite bound to derive a big-M from");
  }
};

class ComplementsBridge : public Bridge {
 public:
  std::string name() const override { return "ComplementsBigM"; }

  void Rewrite(const ConstraintData& constraint,
               BridgeBuilder& out) const override {
    const auto& rows = std::get<VectorAffineFunction>(constraint.function).rows;
    const ScalarAffineFunction& f = rows[0];
    const std::int64_t x = *SingleVariable(rows[1]);
    auto [l, u] = out.Bounds(x);
    if (std::isinf(l) || std::isinf(u)) {
      throw Error(ErrorCode::kUnboundedComplementsBigM,
                  "complemented variable " + std::to_string(x) +
                      " needs a finite range");
    }
    auto [fmin, fmax] = Range(f, out);
    if (std::isinf(fmax)) Unbounded(UnboundedTerm(f, out, true));
    if (std::isinf(fmin)) Unbounded(UnboundedTerm(f, out, false));
    const double span = u - l;
    const double b = f.constant;

    const std::int64_t at_lower =
        out.AddVariable({0.0, 1.0, Integrality::kBinary, ""});
    const std::int64_t at_upper =
        out.AddVariable({0.0, 1.0, Integrality::kBinary, ""});

    // at_lower forces x = l, otherwise f <= 0.
    ScalarAffineFunction pin_lower;
    pin_lower.SetCoefficient(x, 1.0);
    pin_lower.SetCoefficient(at_lower, span);
    out.AddConstraint({pin_lower, LessEqual{u}, ""});
    out.AddConstraint(
        {WithTerm(f, at_lower, -std::max(fmax, 0.0)), LessEqual{-b}, ""});

    // at_upper forces x = u, otherwise f >= 0.
    ScalarAffineFunction pin_upper;
    pin_upper.SetCoefficient(x, 1.0);
    pin_upper.SetCoefficient(at_upper, -span);
    out.AddConstraint({pin_upper, GreaterEqual{l}, ""});
    out.AddConstraint(
        {WithTerm(f, at_upper, -std::min(fmin, 0.0)), GreaterEqual{-b}, ""});

    ScalarAffineFunction one_side;
    one_side.SetCoefficient(at_lower, 1.0);
    one_side.SetCoefficient(at_upper, 1.0);
    out.AddConstraint({one_side, LessEqual{1.0}, ""});
  }

 private:
  [[noreturn]] static void Unbounded(std::int64_t variable) {
    throw Error(ErrorCode::kUnboundedComplementsBigM,
                "variable " + std::to_string(variable) +
                    " leaves the complemented function unbounded");
  }
};

void RejectUnsupported(const ConstraintData& constraint,
                       const std::string& backend_name) {
  throw Error(ErrorCode::kUnsupportedConstraint,
              std::string(FunctionKindName(KindOf(constraint.function))) +
                  "-in-" + SetName(constraint.set) +
                  " is not supported by " + backend_name +
                  " and no bridge applies");
}

class ImageBuilder : public BridgeBuilder {
 public:
  ImageBuilder(ModelImage& image, const BackendCapabilities& capabilities,
               const std::string& backend_name, int depth,
               BridgedImage::Record& record)
      : image_(image),
        capabilities_(capabilities),
        backend_name_(backend_name),
        depth_(depth),
        record_(record) {}

  std::int64_t AddVariable(VariableData variable) override {
    if (variable.integrality != Integrality::kContinuous) {
      ConstraintSet set = variable.integrality == Integrality::kInteger
                              ? ConstraintSet(Integer{})
                              : ConstraintSet(Binary{});
      if (!capabilities_.Supports(FunctionKind::kScalarAffine, set)) {
        throw Error(ErrorCode::kUnsupportedConstraint,
                    "bridge needs " + SetName(set) +
                        " variables, which " + backend_name_ +
                        " does not support");
      }
    }
    std::int64_t v = image_.AddVariable(std::move(variable));
    record_.variables.push_back(v);
    return v;
  }

  void AddConstraint(ConstraintData constraint) override {
    if (capabilities_.Supports(KindOf(constraint.function), constraint.set)) {
      record_.constraints.push_back(image_.AddConstraint(std::move(constraint)));
      return;
    }
    auto bridge = FindBridge(constraint.set);
    if (bridge == nullptr || depth_ >= kMaxChainLength) {
      RejectUnsupported(constraint, backend_name_);
    }
    ImageBuilder nested(image_, capabilities_, backend_name_, depth_ + 1,
                        record_);
    bridge->Rewrite(constraint, nested);
  }

  std::pair<double, double> Bounds(std::int64_t variable) const override {
    return image_.EffectiveBounds(variable);
  }

 private:
  ModelImage& image_;
  const BackendCapabilities& capabilities_;
  const std::string& backend_name_;
  int depth_;
  BridgedImage::Record& record_;
};

}  // namespace

std::shared_ptr<const Bridge> IndicatorBigMBridge() {
  static const auto bridge = std::make_shared<const IndicatorBridge>();
  return bridge;
}

std::shared_ptr<const Bridge> ComplementsBigMBridge() {
  static const auto bridge = std::make_shared<const ComplementsBridge>();
  return bridge;
}

std::shared_ptr<const Bridge> FindBridge(const ConstraintSet& set) {
  switch (TagOf(set)) {
    case SetTag::kIndicator:
      return IndicatorBigMBridge();
    case SetTag::kComplements:
      return ComplementsBigMBridge();
    case SetTag::kUserSet: {
      auto registration = LookupSet(std::get<UserSet>(set).key);
      return registration == nullptr ? nullptr : registration->bridge;
    }
    default:
      return nullptr;
  }
}

std::pair<double, double> AffineRange(
    const ScalarAffineFunction& f,
    const std::function<std::pair<double, double>(std::int64_t)>& bounds) {
  double lo = f.constant;
  double hi = f.constant;
  for (const LinearTerm& t : f.terms) {
    auto [l, u] = bounds(t.variable);
    if (t.coefficient > 0) {
      lo += t.coefficient * l;
      hi += t.coefficient * u;
    } else {
      lo += t.coefficient * u;
      hi += t.coefficient * l;
    }
  }
  return {lo, hi};
}

bool NeedsBridges(const ModelImage& source,
                  const BackendCapabilities& capabilities) {
  for (std::int64_t c : source.LiveConstraints()) {
    const ConstraintData& data = source.constraint(c);
    if (!capabilities.Supports(KindOf(data.function), data.set)) return true;
  }
  return false;
}

BridgedImage BuildBridgedImage(const ModelImage& source,
                               const BackendCapabilities& capabilities,
                               const std::string& backend_name) {
  BridgedImage out;
  out.image = source;
  for (std::int64_t c : source.LiveConstraints()) {
    const ConstraintData& data = source.constraint(c);
    if (capabilities.Supports(KindOf(data.function), data.set)) continue;
    auto bridge = FindBridge(data.set);
    if (bridge == nullptr) RejectUnsupported(data, backend_name);
    BridgedImage::Record record;
    record.source = c;
    record.bridge = bridge->name();
    out.image.DeleteConstraint(c);
    ImageBuilder builder(out.image, capabilities, backend_name, 1, record);
    bridge->Rewrite(data, builder);
    out.bridged.push_back(std::move(record));
  }
  return out;
}

}  // namespace amodel
