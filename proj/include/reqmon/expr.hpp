// Boolean/arithmetic expression trees used in requirement conditions and
// responses. Nodes are immutable and shared; all building goes through the
// factory helpers, which normalize negative literals into Neg nodes so that
// canonical printing round-trips.
#pragma once

#include <charconv>
#include <cmath>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "reqmon/diag.hpp"

namespace reqmon {

enum class CmpOp { Lt, Le, Gt, Ge, Eq, Ne };

inline const char* cmp_op_text(CmpOp op) {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
  }
  return "?";
}

struct NumExpr;
struct BoolExpr;
using NumExprPtr = std::shared_ptr<const NumExpr>;
using BoolExprPtr = std::shared_ptr<const BoolExpr>;

struct NumExpr {
  enum class Kind { Lit, Signal, Neg, Add, Sub, Mul };

  Kind kind;
  double value = 0.0;              // Lit
  std::string name;                // Signal
  NumExprPtr lhs, rhs;             // Neg uses lhs only

  // Lit provenance: `hole` marks an unfilled template placeholder, `param`
  // records the mission-parameter key a filled value came from. Neither
  // participates in structural equality except hole-vs-value.
  std::optional<std::string> hole;
  std::optional<std::string> param;
};

struct BoolExpr {
  enum class Kind { Lit, Signal, Cmp, Not, And, Or };

  Kind kind;
  bool bvalue = false;             // Lit
  std::string name;                // Signal
  CmpOp op = CmpOp::Lt;            // Cmp
  NumExprPtr nlhs, nrhs;           // Cmp operands
  BoolExprPtr lhs, rhs;            // Not uses lhs only
};

// ---- factories -------------------------------------------------------

inline NumExprPtr num_neg(NumExprPtr e);

inline NumExprPtr num_lit(double v) {
  if (!std::isfinite(v)) throw Error("numeric literal must be finite");
  if (std::signbit(v) && v == 0.0) v = 0.0;
  if (v < 0.0) {
    auto n = std::make_shared<NumExpr>();
    n->kind = NumExpr::Kind::Lit;
    n->value = -v;
    return num_neg(std::move(n));
  }
  auto n = std::make_shared<NumExpr>();
  n->kind = NumExpr::Kind::Lit;
  n->value = v;
  return n;
}

inline NumExprPtr num_hole(const std::string& placeholder) {
  auto n = std::make_shared<NumExpr>();
  n->kind = NumExpr::Kind::Lit;
  n->hole = placeholder;
  return n;
}

inline NumExprPtr num_signal(std::string name) {
  auto n = std::make_shared<NumExpr>();
  n->kind = NumExpr::Kind::Signal;
  n->name = std::move(name);
  return n;
}

inline NumExprPtr num_neg(NumExprPtr e) {
  auto n = std::make_shared<NumExpr>();
  n->kind = NumExpr::Kind::Neg;
  n->lhs = std::move(e);
  return n;
}

inline NumExprPtr num_bin(NumExpr::Kind k, NumExprPtr l, NumExprPtr r) {
  auto n = std::make_shared<NumExpr>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

inline BoolExprPtr bool_lit(bool v) {
  auto b = std::make_shared<BoolExpr>();
  b->kind = BoolExpr::Kind::Lit;
  b->bvalue = v;
  return b;
}

inline BoolExprPtr bool_signal(std::string name) {
  auto b = std::make_shared<BoolExpr>();
  b->kind = BoolExpr::Kind::Signal;
  b->name = std::move(name);
  return b;
}

inline BoolExprPtr bool_cmp(CmpOp op, NumExprPtr l, NumExprPtr r) {
  auto b = std::make_shared<BoolExpr>();
  b->kind = BoolExpr::Kind::Cmp;
  b->op = op;
  b->nlhs = std::move(l);
  b->nrhs = std::move(r);
  return b;
}

inline BoolExprPtr bool_not(BoolExprPtr e) {
  auto b = std::make_shared<BoolExpr>();
  b->kind = BoolExpr::Kind::Not;
  b->lhs = std::move(e);
  return b;
}

inline BoolExprPtr bool_bin(BoolExpr::Kind k, BoolExprPtr l, BoolExprPtr r) {
  auto b = std::make_shared<BoolExpr>();
  b->kind = k;
  b->lhs = std::move(l);
  b->rhs = std::move(r);
  return b;
}

inline BoolExprPtr bool_and(BoolExprPtr l, BoolExprPtr r) {
  return bool_bin(BoolExpr::Kind::And, std::move(l), std::move(r));
}

inline BoolExprPtr bool_or(BoolExprPtr l, BoolExprPtr r) {
  return bool_bin(BoolExpr::Kind::Or, std::move(l), std::move(r));
}

// ---- printing --------------------------------------------------------

/* Shortest decimal that parses back to the same double. std::to_chars may
 * pick scientific notation for extreme magnitudes; the lexer accepts both. */
inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string to_string(const NumExpr& e) {
  auto wrap = [](const NumExpr& c) {
    std::string s = to_string(c);
    if (c.kind == NumExpr::Kind::Lit || c.kind == NumExpr::Kind::Signal)
      return s;
    return "(" + s + ")";
  };
  switch (e.kind) {
    case NumExpr::Kind::Lit:
      return e.hole ? "{" + *e.hole + "}" : format_number(e.value);
    case NumExpr::Kind::Signal: return e.name;
    case NumExpr::Kind::Neg: return "-" + wrap(*e.lhs);
    case NumExpr::Kind::Add: return wrap(*e.lhs) + " + " + wrap(*e.rhs);
    case NumExpr::Kind::Sub: return wrap(*e.lhs) + " - " + wrap(*e.rhs);
    case NumExpr::Kind::Mul: return wrap(*e.lhs) + " * " + wrap(*e.rhs);
  }
  return "?";
}

inline std::string to_string(const BoolExpr& e) {
  auto wrap = [](const BoolExpr& c) { return "(" + to_string(c) + ")"; };
  switch (e.kind) {
    case BoolExpr::Kind::Lit: return e.bvalue ? "true" : "false";
    case BoolExpr::Kind::Signal: return e.name;
    case BoolExpr::Kind::Cmp:
      return to_string(*e.nlhs) + " " + cmp_op_text(e.op) + " " +
             to_string(*e.nrhs);
    case BoolExpr::Kind::Not: return "!" + wrap(*e.lhs);
    case BoolExpr::Kind::And: return wrap(*e.lhs) + " & " + wrap(*e.rhs);
    case BoolExpr::Kind::Or: return wrap(*e.lhs) + " | " + wrap(*e.rhs);
  }
  return "?";
}

// ---- structural equality ----------------------------------------------

inline bool struct_eq(const NumExpr& a, const NumExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NumExpr::Kind::Lit:
      if (a.hole || b.hole) return a.hole == b.hole;
      return a.value == b.value;
    case NumExpr::Kind::Signal: return a.name == b.name;
    case NumExpr::Kind::Neg: return struct_eq(*a.lhs, *b.lhs);
    default:
      return struct_eq(*a.lhs, *b.lhs) && struct_eq(*a.rhs, *b.rhs);
  }
}

inline bool struct_eq(const BoolExpr& a, const BoolExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case BoolExpr::Kind::Lit: return a.bvalue == b.bvalue;
    case BoolExpr::Kind::Signal: return a.name == b.name;
    case BoolExpr::Kind::Cmp:
      return a.op == b.op && struct_eq(*a.nlhs, *b.nlhs) &&
             struct_eq(*a.nrhs, *b.nrhs);
    case BoolExpr::Kind::Not: return struct_eq(*a.lhs, *b.lhs);
    default:
      return struct_eq(*a.lhs, *b.lhs) && struct_eq(*a.rhs, *b.rhs);
  }
}

// ---- traversal helpers -------------------------------------------------

inline void collect_signals(const NumExpr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case NumExpr::Kind::Lit: return;
    case NumExpr::Kind::Signal: out.insert(e.name); return;
    case NumExpr::Kind::Neg: collect_signals(*e.lhs, out); return;
    default:
      collect_signals(*e.lhs, out);
      collect_signals(*e.rhs, out);
  }
}

inline void collect_signals(const BoolExpr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case BoolExpr::Kind::Lit: return;
    case BoolExpr::Kind::Signal: out.insert(e.name); return;
    case BoolExpr::Kind::Cmp:
      collect_signals(*e.nlhs, out);
      collect_signals(*e.nrhs, out);
      return;
    case BoolExpr::Kind::Not: collect_signals(*e.lhs, out); return;
    default:
      collect_signals(*e.lhs, out);
      collect_signals(*e.rhs, out);
  }
}

inline void collect_holes(const NumExpr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case NumExpr::Kind::Lit:
      if (e.hole) out.insert(*e.hole);
      return;
    case NumExpr::Kind::Signal: return;
    case NumExpr::Kind::Neg: collect_holes(*e.lhs, out); return;
    default:
      collect_holes(*e.lhs, out);
      collect_holes(*e.rhs, out);
  }
}

inline void collect_holes(const BoolExpr& e, std::set<std::string>& out) {
  switch (e.kind) {
    case BoolExpr::Kind::Lit:
    case BoolExpr::Kind::Signal: return;
    case BoolExpr::Kind::Cmp:
      collect_holes(*e.nlhs, out);
      collect_holes(*e.nrhs, out);
      return;
    case BoolExpr::Kind::Not: collect_holes(*e.lhs, out); return;
    default:
      collect_holes(*e.lhs, out);
      collect_holes(*e.rhs, out);
  }
}

}  // namespace reqmon
