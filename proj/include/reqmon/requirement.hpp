// The six-field structured requirement and its canonical rendering.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "reqmon/expr.hpp"

namespace reqmon {

struct Scope {
  std::string mode;  // empty = global

  bool global() const { return mode.empty(); }

  static Scope global_scope() { return {}; }
  static Scope in_mode(std::string m) { return Scope{std::move(m)}; }
};

enum class ConditionFlavor { When, Upon };

struct Condition {
  ConditionFlavor flavor = ConditionFlavor::When;
  BoolExprPtr expr;
};

struct Timing {
  enum class Kind { Always, Never, Within };

  Kind kind = Kind::Always;
  std::uint32_t ticks = 0;  // Within only, >= 1

  static Timing always() { return {}; }
  static Timing never() { return {Kind::Never, 0}; }
  static Timing within(std::uint32_t n) { return {Kind::Within, n}; }
};

struct Requirement {
  std::string id;
  std::string source_text;
  Scope scope;
  std::optional<Condition> condition;
  std::string component;
  Timing timing;
  BoolExprPtr response;
};

/* Canonical single-line form. Optional fields that carry data are always
 * printed (scope with the "mode" keyword, the default "always" timing), so
 * the output re-parses to a structurally equal requirement. */
inline std::string print_requirement(const Requirement& req) {
  std::string out;
  if (!req.scope.global()) out += "in " + req.scope.mode + " mode ";
  if (req.condition) {
    out += req.condition->flavor == ConditionFlavor::When ? "when " : "upon ";
    out += to_string(*req.condition->expr) + ", ";
  }
  out += "the " + req.component + " shall ";
  switch (req.timing.kind) {
    case Timing::Kind::Always: out += "always"; break;
    case Timing::Kind::Never: out += "never"; break;
    case Timing::Kind::Within:
      out += "within " + std::to_string(req.timing.ticks) + " ticks";
      break;
  }
  out += " satisfy " + to_string(*req.response);
  return out;
}

/* Structural equality over the grammar fields; id and source_text are
 * bookkeeping and do not participate. */
inline bool struct_eq(const Requirement& a, const Requirement& b) {
  if (a.scope.mode != b.scope.mode) return false;
  if (a.condition.has_value() != b.condition.has_value()) return false;
  if (a.condition &&
      (a.condition->flavor != b.condition->flavor ||
       !struct_eq(*a.condition->expr, *b.condition->expr)))
    return false;
  if (a.component != b.component) return false;
  if (a.timing.kind != b.timing.kind || a.timing.ticks != b.timing.ticks)
    return false;
  return struct_eq(*a.response, *b.response);
}

}  // namespace reqmon
