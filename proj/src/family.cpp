#include "coprime/family.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "coprime/errors.hpp"

namespace coprime {

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail)
    : Error([&] {
        std::ostringstream msg;
        msg << "parse error at offset " << position << ": " << detail;
        if (!expected.empty()) {
          msg << "; expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) msg << (i ? " or " : "") << '"' << expected[i] << '"';
        }
        return msg.str();
      }()),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

constexpr int kMaxParam = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  FamilyExpr parse() {
    FamilyExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail({"end of input"}, "trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
    throw ParseError(pos_ + 1, std::move(expected), detail);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      fail({std::string(1, c)}, pos_ >= s_.size() ? "unexpected end of input" : "unexpected character");
    }
    ++pos_;
  }

  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t unsigned_int() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail({"integer"}, "bad integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  int param(int min_value, const char* what) {
    std::size_t at = pos_;
    std::uint64_t v = unsigned_int();
    if (v < static_cast<std::uint64_t>(min_value) || v > kMaxParam) {
      throw ParameterError(std::string(what) + " out of range (" + std::to_string(v) + ") at offset " +
                           std::to_string(at + 1));
    }
    return static_cast<int>(v);
  }

  double probability() {
    skip_ws();
    double v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{}) fail({"probability"}, "bad number");
    std::size_t at = pos_;
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    if (!(v > 0.0 && v < 1.0)) {
      throw ParameterError("GNP probability must lie in (0,1) at offset " + std::to_string(at + 1));
    }
    return v;
  }

  FamilyExpr expr() {
    skip_ws();
    std::size_t start = pos_;
    std::string_view id = identifier();
    FamilyExpr e;
    if (id == "join" || id == "corona") {
      e.kind = id == "join" ? FamilyExpr::Kind::Join : FamilyExpr::Kind::Corona;
      expect('(');
      e.args.push_back(expr());
      expect(',');
      e.args.push_back(expr());
      expect(')');
      return e;
    }
    if (id == "P" || id == "C" || id == "K" || id == "E") {
      e.kind = id == "P"   ? FamilyExpr::Kind::Path
               : id == "C" ? FamilyExpr::Kind::Cycle
               : id == "K" ? FamilyExpr::Kind::Complete
                           : FamilyExpr::Kind::Empty;
      expect('(');
      e.a = param(e.kind == FamilyExpr::Kind::Cycle ? 3 : 1, id == "C" ? "cycle length" : "n");
      expect(')');
      return e;
    }
    if (id == "Kbip") {
      e.kind = FamilyExpr::Kind::Bipartite;
      expect('(');
      e.a = param(1, "m");
      expect(',');
      e.b = param(1, "n");
      expect(')');
      return e;
    }
    if (id == "GNP") {
      e.kind = FamilyExpr::Kind::Gnp;
      expect('(');
      e.a = param(1, "n");
      expect(',');
      e.p = probability();
      expect(',');
      e.seed = unsigned_int();
      expect(')');
      return e;
    }
    pos_ = start;
    fail({"P", "C", "K", "E", "Kbip", "GNP", "join", "corona"},
         pos_ >= s_.size() ? "unexpected end of input" : "unknown family");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilyExpr parse_family(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const FamilyExpr& e) {
  using K = FamilyExpr::Kind;
  switch (e.kind) {
    case K::Path: return "P(" + std::to_string(e.a) + ")";
    case K::Cycle: return "C(" + std::to_string(e.a) + ")";
    case K::Complete: return "K(" + std::to_string(e.a) + ")";
    case K::Empty: return "E(" + std::to_string(e.a) + ")";
    case K::Bipartite: return "Kbip(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case K::Gnp: {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, e.p);
      return "GNP(" + std::to_string(e.a) + "," + std::string(buf, res.ptr) + "," + std::to_string(e.seed) + ")";
    }
    case K::Join: return "join(" + to_string(e.left()) + "," + to_string(e.right()) + ")";
    case K::Corona: return "corona(" + to_string(e.left()) + "," + to_string(e.right()) + ")";
  }
  return {};
}

Graph build(const FamilyExpr& e) {
  using K = FamilyExpr::Kind;
  switch (e.kind) {
    case K::Path: return path(e.a);
    case K::Cycle: return cycle(e.a);
    case K::Complete: return complete(e.a);
    case K::Empty: return empty(e.a);
    case K::Bipartite: return complete_bipartite(e.a, e.b);
    case K::Gnp: return gnp(e.a, e.p, e.seed);
    case K::Join: return join(build(e.left()), build(e.right()));
    case K::Corona: return corona(build(e.left()), build(e.right()));
  }
  throw ParameterError("unknown family kind");
}

namespace {
FamilyExpr atom(FamilyExpr::Kind kind, int a, int b = 0) {
  FamilyExpr e;
  e.kind = kind;
  e.a = a;
  e.b = b;
  return e;
}
}  // namespace

FamilyExpr path_expr(int n) { return atom(FamilyExpr::Kind::Path, n); }
FamilyExpr cycle_expr(int n) { return atom(FamilyExpr::Kind::Cycle, n); }
FamilyExpr complete_expr(int n) { return atom(FamilyExpr::Kind::Complete, n); }
FamilyExpr empty_expr(int n) { return atom(FamilyExpr::Kind::Empty, n); }
FamilyExpr bipartite_expr(int m, int n) { return atom(FamilyExpr::Kind::Bipartite, m, n); }

FamilyExpr join_expr(FamilyExpr g, FamilyExpr h) {
  FamilyExpr e;
  e.kind = FamilyExpr::Kind::Join;
  e.args = {std::move(g), std::move(h)};
  return e;
}

FamilyExpr corona_expr(FamilyExpr g, FamilyExpr h) {
  FamilyExpr e;
  e.kind = FamilyExpr::Kind::Corona;
  e.args = {std::move(g), std::move(h)};
  return e;
}

}  // namespace coprime
