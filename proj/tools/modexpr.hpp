#pragma once

// Module expressions for the `module` subcommand:
//   S<i>  P<i>  D(A)  rad(e)  syz^k(e)  sum(e, e, ...)
// where <i> is a vertex label from the input file (negatives allowed).

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "syz/modcat.hpp"

namespace syz {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <ExactField F>
class ModExprParser {
 public:
  ModExprParser(const AlgPtr<F>& alg, const std::string& text)
      : a_(alg), s_(text) {}

  Module<F> parse() {
    auto m = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after expression");
    return m;
  }

 private:
  AlgPtr<F> a_;
  std::string s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ExprError("module expression, offset " + std::to_string(pos_) + ": " +
                    msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  std::string vertex_label() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit((unsigned char)s_[start])))
      fail("expected a vertex label");
    return s_.substr(start, pos_ - start);
  }

  std::size_t slot_of(const std::string& label) {
    for (std::size_t i = 0; i < a_->n_idem; ++i)
      if (a_->idem_names[i] == label) return i;
    fail("unknown vertex '" + label + "'");
  }

  std::size_t count() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::stoul(s_.substr(start, pos_ - start));
  }

  Module<F> expr() {
    skip_ws();
    if (eat_word("sum(")) {
      std::vector<Module<F>> parts;
      parts.push_back(expr());
      while (eat(',')) parts.push_back(expr());
      expect(')');
      auto m = direct_sum(parts, a_);
      std::string nm = "sum(";
      for (std::size_t i = 0; i < parts.size(); ++i)
        nm += (i ? ", " : "") + parts[i].name;
      m.name = nm + ")";
      return m;
    }
    if (eat_word("syz^")) {
      std::size_t k = count();
      expect('(');
      auto m = expr();
      expect(')');
      std::string base = m.name;
      for (std::size_t i = 0; i < k; ++i) m = syzygy(m);
      m.name = "syz^" + std::to_string(k) + "(" + base + ")";
      return m;
    }
    if (eat_word("rad(")) {
      auto inner = expr();
      expect(')');
      auto m = radical_submodule(inner).sub;
      m.name = "rad(" + inner.name + ")";
      return m;
    }
    if (eat_word("D(A)")) {
      auto m = dual(regular(opposite(a_)));
      m.name = "D(A)";
      return m;
    }
    if (eat_word("S")) return simple(a_, slot_of(vertex_label()));
    if (eat_word("P")) return projective(a_, slot_of(vertex_label()));
    fail("expected S<i>, P<i>, D(A), rad(...), syz^k(...), or sum(...)");
  }
};

template <ExactField F>
Module<F> eval_module_expr(const AlgPtr<F>& alg, const std::string& text) {
  return ModExprParser<F>(alg, text).parse();
}

}  // namespace syz
