#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coprime/graph.hpp"

namespace coprime {

// Graph-family expression:
//
//   expr := atom | "join" "(" expr "," expr ")" | "corona" "(" expr "," expr ")"
//   atom := "P(" n ")" | "C(" n ")" | "K(" n ")" | "E(" n ")"
//         | "Kbip(" m "," n ")" | "GNP(" n "," p "," seed ")"
//
// Whitespace is allowed between tokens. n, m, seed are decimal integers; p is
// a decimal float in (0, 1). E(n) is the edgeless graph.
struct FamilyExpr {
  enum class Kind { Path, Cycle, Complete, Empty, Bipartite, Gnp, Join, Corona };

  Kind kind = Kind::Path;
  int a = 0;  // n for single-parameter atoms, m for Kbip, n for GNP
  int b = 0;  // n for Kbip
  double p = 0.0;
  std::uint64_t seed = 0;
  std::vector<FamilyExpr> args;  // two operands for Join / Corona

  bool is_atom() const noexcept { return kind != Kind::Join && kind != Kind::Corona; }
  const FamilyExpr& left() const { return args.at(0); }
  const FamilyExpr& right() const { return args.at(1); }

  friend bool operator==(const FamilyExpr&, const FamilyExpr&) = default;
};

FamilyExpr parse_family(std::string_view text);
// Canonical text; parse_family(to_string(e)) == e.
std::string to_string(const FamilyExpr& e);
Graph build(const FamilyExpr& e);

// Atom helpers.
FamilyExpr path_expr(int n);
FamilyExpr cycle_expr(int n);
FamilyExpr complete_expr(int n);
FamilyExpr empty_expr(int n);
FamilyExpr bipartite_expr(int m, int n);
FamilyExpr join_expr(FamilyExpr g, FamilyExpr h);
FamilyExpr corona_expr(FamilyExpr g, FamilyExpr h);

}  // namespace coprime
