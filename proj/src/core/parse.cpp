#include "core/parse.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace gblx {

namespace {

enum class tok { lp, rp, amp, pipe, star, arrow, iff, tilde, zero, one, ident, eq, end };

struct token {
  tok kind;
  std::string text;  // ident only
  long at;           // byte offset
};

std::vector<token> lex(const std::string& s) {
  std::vector<token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace((unsigned char)c)) { ++i; continue; }
    long at = (long)i;
    switch (c) {
      case '(': out.push_back({tok::lp, "", at}); ++i; continue;
      case ')': out.push_back({tok::rp, "", at}); ++i; continue;
      case '&': out.push_back({tok::amp, "", at}); ++i; continue;
      case '|': out.push_back({tok::pipe, "", at}); ++i; continue;
      case '*': out.push_back({tok::star, "", at}); ++i; continue;
      case '~': out.push_back({tok::tilde, "", at}); ++i; continue;
      case '=': out.push_back({tok::eq, "", at}); ++i; continue;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({tok::arrow, "", at});
          i += 2;
          continue;
        }
        fail(errc::parse, "expected '->' at offset " + std::to_string(at), at);
      case '<':
        if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
          out.push_back({tok::iff, "", at});
          i += 3;
          continue;
        }
        fail(errc::parse, "expected '<->' at offset " + std::to_string(at), at);
      case '0':
      case '1': {
        if (i + 1 < s.size() && std::isalnum((unsigned char)s[i + 1]))
          fail(errc::parse, "stray digits at offset " + std::to_string(at), at);
        out.push_back({c == '0' ? tok::zero : tok::one, "", at});
        ++i;
        continue;
      }
      default:
        if (std::isalpha((unsigned char)c) || c == '_') {
          size_t j = i;
          while (j < s.size() && (std::isalnum((unsigned char)s[j]) || s[j] == '_')) ++j;
          out.push_back({tok::ident, s.substr(i, j - i), at});
          i = j;
          continue;
        }
        fail(errc::parse,
             std::string("unexpected character '") + c + "' at offset " + std::to_string(at),
             at);
    }
  }
  out.push_back({tok::end, "", (long)s.size()});
  return out;
}

class parser {
 public:
  parser(const std::string& text, const std::vector<std::string>& sig)
      : toks_(lex(text)), sig_(sig) {}

  fptr formula_all() {
    fptr f = iff();
    expect_end();
    return f;
  }

  std::pair<fptr, fptr> equation_all() {
    fptr l = iff();
    if (peek().kind != tok::eq)
      fail(errc::parse, "expected '=' at offset " + std::to_string(peek().at), peek().at);
    ++pos_;
    fptr r = iff();
    expect_end();
    return {l, r};
  }

 private:
  std::vector<token> toks_;
  size_t pos_ = 0;
  const std::vector<std::string>& sig_;

  const token& peek() const { return toks_[pos_]; }
  bool eat(tok k) {
    if (toks_[pos_].kind != k) return false;
    ++pos_;
    return true;
  }

  void expect_end() {
    if (peek().kind != tok::end)
      fail(errc::parse, "trailing input at offset " + std::to_string(peek().at), peek().at);
  }

  bool in_signature(const std::string& n) const {
    return std::find(sig_.begin(), sig_.end(), n) != sig_.end();
  }

  fptr iff() {
    fptr f = imp();
    while (eat(tok::iff)) f = formula::mk_iff(f, imp());
    return f;
  }

  fptr imp() {
    fptr f = disj();
    if (eat(tok::arrow)) return formula::mk_imp(f, imp());  // right-associative
    return f;
  }

  fptr disj() {
    fptr f = conj();
    while (eat(tok::pipe)) f = formula::mk_join(f, conj());
    return f;
  }

  fptr conj() {
    fptr f = fuse();
    while (eat(tok::amp)) f = formula::mk_meet(f, fuse());
    return f;
  }

  fptr fuse() {
    fptr f = unary();
    while (eat(tok::star)) f = formula::mk_fuse(f, unary());
    return f;
  }

  fptr unary() {
    const token& t = peek();
    if (t.kind == tok::tilde) {
      ++pos_;
      return formula::mk_neg(unary());
    }
    if (t.kind == tok::ident) {
      const std::string& n = t.text;
      if (n.size() >= 2 && n[0] == 'p' &&
          std::all_of(n.begin() + 1, n.end(),
                      [](char c) { return std::isdigit((unsigned char)c); }))
        return atom();  // a variable, not a modal
      ++pos_;
      if (in_signature(n)) return formula::mk_modal(n, unary());
      if (n == "P" || n == "F") {
        // P = ~H~, F = ~G~
        const char* need = n == "P" ? "H" : "G";
        if (!in_signature(need))
          fail(errc::parse,
               "abbreviation " + n + " needs modal " + need + " in the signature, at offset " +
                   std::to_string(t.at),
               t.at);
        return formula::mk_neg(formula::mk_modal(need, formula::mk_neg(unary())));
      }
      fail(errc::parse, "unknown modal name '" + n + "' at offset " + std::to_string(t.at),
           t.at);
    }
    return atom();
  }

  fptr atom() {
    const token& t = peek();
    switch (t.kind) {
      case tok::zero: ++pos_; return formula::mk_zero();
      case tok::one: ++pos_; return formula::mk_one();
      case tok::lp: {
        ++pos_;
        fptr f = iff();
        if (!eat(tok::rp))
          fail(errc::parse, "expected ')' at offset " + std::to_string(peek().at), peek().at);
        return f;
      }
      case tok::ident: {
        const std::string& n = t.text;
        if (n.size() >= 2 && n[0] == 'p' &&
            std::all_of(n.begin() + 1, n.end(),
                        [](char c) { return std::isdigit((unsigned char)c); })) {
          long v = 0;
          for (size_t i = 1; i < n.size(); ++i) {
            v = v * 10 + (n[i] - '0');
            if (v > 1000000)
              fail(errc::parse, "variable index too large at offset " + std::to_string(t.at),
                   t.at);
          }
          ++pos_;
          return formula::mk_var((int)v);
        }
        fail(errc::parse, "unexpected name '" + n + "' at offset " + std::to_string(t.at),
             t.at);
      }
      default:
        fail(errc::parse, "unexpected token at offset " + std::to_string(t.at), t.at);
    }
  }
};

}  // namespace

fptr parse_formula(const std::string& text, const std::vector<std::string>& signature) {
  validate_signature(signature);
  return parser(text, signature).formula_all();
}

std::pair<fptr, fptr> parse_equation(const std::string& text,
                                     const std::vector<std::string>& signature) {
  validate_signature(signature);
  return parser(text, signature).equation_all();
}

}  // namespace gblx
