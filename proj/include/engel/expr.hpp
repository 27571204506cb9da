#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "engel/errors.hpp"
#include "engel/metabelian.hpp"

namespace engel {

// Bracket expression over z and c_i. Brackets are binary; comma lists are folded to the left.
struct Expr {
  enum class Kind { kZ, kC, kScaled, kBracket };

  Kind kind = Kind::kZ;
  int index = 0;            // kC only
  std::int64_t scalar = 1;  // kScaled only
  std::vector<Expr> kids;   // one for kScaled, two for kBracket

  static Expr z() { return Expr{}; }
  static Expr c(int i) { return Expr{Kind::kC, i, 1, {}}; }
  static Expr scaled(std::int64_t s, Expr e);
  static Expr bracket(Expr a, Expr b);

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Syntax error with a 1-based source position.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// expr := term | '[' expr (',' expr)+ ']'
// term := 'z' | 'c' INT | INT '*' expr
// Whitespace is ignored between tokens.
Expr parse_expr(std::string_view src);

// Fully bracketed form; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

// Value in the metabelian model. Throws UsageError for a generator index above kMaxIndex.
ModelValue evaluate(const FreeMetabelian& alg, const Expr& e);

}  // namespace engel
