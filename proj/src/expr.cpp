#include "engel/expr.hpp"

#include <cctype>
#include <limits>

#include "engel/index_set.hpp"

namespace engel {

Expr Expr::scaled(std::int64_t s, Expr e) {
  Expr out{Kind::kScaled, 0, s, {}};
  out.kids.push_back(std::move(e));
  return out;
}

Expr Expr::bracket(Expr a, Expr b) {
  Expr out{Kind::kBracket, 0, 1, {}};
  out.kids.push_back(std::move(a));
  out.kids.push_back(std::move(b));
  return out;
}

ParseError::ParseError(const std::string& what, int line, int column)
    : UsageError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "' after expression");
    return e;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int depth_ = 0;

  static constexpr int kMaxDepth = 512;

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "' but input ended");
    if (peek() != c) fail(std::string("expected '") + c + "' but found '" + peek() + "'");
    advance();
  }

  std::int64_t integer() {
    const int line = line_, column = column_;
    std::int64_t v = 0;
    bool any = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      int d = peek() - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw ParseError("integer too large", line, column);
      v = v * 10 + d;
      any = true;
      advance();
    }
    if (!any) fail("expected an integer");
    return v;
  }

  Expr expr() {
    skip_space();
    if (at_end()) fail("expected an expression but input ended");
    if (++depth_ > kMaxDepth) fail("nesting too deep");
    Expr out;
    char ch = peek();
    if (ch == '[') {
      advance();
      out = expr();
      skip_space();
      if (at_end() || peek() != ',') expect(',');
      while (!at_end() && peek() == ',') {
        advance();
        out = Expr::bracket(std::move(out), expr());
        skip_space();
      }
      expect(']');
    } else if (ch == 'z') {
      advance();
      out = Expr::z();
    } else if (ch == 'c') {
      const int line = line_, column = column_;
      advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a generator index after 'c'");
      std::int64_t i = integer();
      if (i < 1 || i > IndexSet::kMaxIndex)
        throw ParseError("generator index must lie in 1.." + std::to_string(IndexSet::kMaxIndex), line, column);
      out = Expr::c(static_cast<int>(i));
    } else if (ch == '-' || std::isdigit(static_cast<unsigned char>(ch))) {
      bool negative = ch == '-';
      if (negative) advance();
      std::int64_t s = integer();
      expect('*');
      out = Expr::scaled(negative ? -s : s, expr());
    } else if (ch == ',' || ch == ']' || ch == '*') {
      fail(std::string("expected an expression but found '") + ch + "'");
    } else {
      fail(std::string("unknown symbol '") + ch + "'");
    }
    --depth_;
    return out;
  }
};

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kZ: return "z";
    case Expr::Kind::kC: return "c" + std::to_string(e.index);
    case Expr::Kind::kScaled: return std::to_string(e.scalar) + "*" + to_string(e.kids[0]);
    case Expr::Kind::kBracket: return "[" + to_string(e.kids[0]) + "," + to_string(e.kids[1]) + "]";
  }
  return {};
}

ModelValue evaluate(const FreeMetabelian& alg, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kZ: return ModelValue::ideal(alg.z());
    case Expr::Kind::kC: return ModelValue::c_generator(alg.field(), e.index);
    case Expr::Kind::kScaled: return evaluate(alg, e.kids[0]).scaled(e.scalar);
    case Expr::Kind::kBracket:
      return ModelValue::bracket(alg, evaluate(alg, e.kids[0]), evaluate(alg, e.kids[1]));
  }
  return ModelValue::ideal(alg.zero());
}

}  // namespace engel
