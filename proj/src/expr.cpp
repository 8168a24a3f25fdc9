#include "fieq/expr.hpp"

#include <cctype>
#include <string>

#include "fieq/algebra.hpp"
#include "fieq/constructors.hpp"

namespace fieq {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Implication parse() {
    Implication imp = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return imp;
  }

 private:
  Implication expr() {
    skip_space();
    const std::size_t at = pos_;
    const std::string head = word();
    if (head.rfind("named:", 0) == 0) return lookup(at, [&] { return named(head); });
    if (head == "r") {
      expect('(');
      const std::size_t a = mark();
      const std::string t = word();
      expect(')');
      return lookup(a, [&] { return r_implication(tnorm(t)); });
    }
    if (head == "sn") {
      expect('(');
      const std::size_t a = mark();
      const std::string s = word();
      expect(',');
      const std::size_t b = mark();
      const std::string n = word();
      expect(')');
      const TConorm sc = lookup(a, [&] { return tconorm(s); });
      const Negation nc = lookup(b, [&] { return negation(n); });
      return sn_implication(sc, nc);
    }
    if (head == "ql") {
      expect('(');
      const std::size_t a = mark();
      const std::string t = word();
      expect(',');
      const std::size_t b = mark();
      const std::string s = word();
      expect(',');
      const std::size_t c = mark();
      const std::string n = word();
      expect(')');
      const TNorm tc = lookup(a, [&] { return tnorm(t); });
      const TConorm sc = lookup(b, [&] { return tconorm(s); });
      const Negation nc = lookup(c, [&] { return negation(n); });
      return ql_operation(tc, sc, nc).operation;
    }
    if (head == "f" || head == "g") {
      expect('(');
      const std::size_t a = mark();
      const std::string gen = word();
      expect(')');
      if (head == "f") return f_implication(lookup(a, [&] { return f_generator(gen); }));
      return g_implication(lookup(a, [&] { return g_generator(gen); }));
    }
    if (head == "nabla") {
      expect('(');
      Implication left = expr();
      expect(',');
      Implication right = expr();
      expect(')');
      return nabla(left, right);
    }
    if (head.empty()) throw ParseError("expected an expression", at);
    throw ParseError("unknown constructor '" + head + "'", at);
  }

  template <class Make>
  static auto lookup(std::size_t at, Make make) -> decltype(make()) {
    try {
      return make();
    } catch (const UnknownNameError& e) {
      throw ParseError("unknown identifier '" + e.name() + "'", at);
    }
  }

  std::size_t mark() {
    skip_space();
    return pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const auto c = static_cast<unsigned char>(text_[pos_]);
      if (!(std::isalnum(c) || c == '_' || c == ':')) break;
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Implication parse_implication(std::string_view text) { return Parser(text).parse(); }

double default_tolerance(const Implication& imp) noexcept {
  return imp.traits().bisection_backed ? kBisectionTol : kClosedFormTol;
}

}  // namespace fieq
