#include "core/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "core/error.hpp"

namespace gblx {

fptr formula::mk_var(int index) {
  if (index < 0) fail(errc::invalid, "variable index must be nonnegative");
  auto f = std::make_shared<formula>(fk::var);
  f->var = index;
  return f;
}

fptr formula::mk_zero() {
  static const fptr z = std::make_shared<formula>(fk::zero);
  return z;
}

fptr formula::mk_one() {
  static const fptr o = std::make_shared<formula>(fk::one);
  return o;
}

fptr formula::mk_binary(fk k, fptr l, fptr r) {
  if (k != fk::meet && k != fk::join && k != fk::fuse && k != fk::imp)
    fail(errc::invalid, "not a binary connective");
  if (!l || !r) fail(errc::invalid, "null subformula");
  auto f = std::make_shared<formula>(k);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

fptr formula::mk_meet(fptr l, fptr r) { return mk_binary(fk::meet, std::move(l), std::move(r)); }
fptr formula::mk_join(fptr l, fptr r) { return mk_binary(fk::join, std::move(l), std::move(r)); }
fptr formula::mk_fuse(fptr l, fptr r) { return mk_binary(fk::fuse, std::move(l), std::move(r)); }
fptr formula::mk_imp(fptr l, fptr r) { return mk_binary(fk::imp, std::move(l), std::move(r)); }

fptr formula::mk_modal(std::string name, fptr sub) {
  if (!sub) fail(errc::invalid, "null subformula");
  if (name.empty()) fail(errc::invalid, "empty modal name");
  auto f = std::make_shared<formula>(fk::modal);
  f->modal = std::move(name);
  f->lhs = std::move(sub);
  return f;
}

fptr formula::mk_neg(fptr f) { return mk_imp(std::move(f), mk_zero()); }

fptr formula::mk_iff(fptr l, fptr r) {
  return mk_meet(mk_imp(l, r), mk_imp(r, l));
}

bool equal(const fptr& a, const fptr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case fk::var: return a->var == b->var;
    case fk::zero:
    case fk::one: return true;
    case fk::modal: return a->modal == b->modal && equal(a->lhs, b->lhs);
    default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

int height(const fptr& f) {
  switch (f->kind) {
    case fk::var:
    case fk::zero:
    case fk::one: return 0;
    case fk::modal: return 1 + height(f->lhs);
    default: return 1 + std::max(height(f->lhs), height(f->rhs));
  }
}

static void collect_vars(const fptr& f, std::set<int>& out) {
  switch (f->kind) {
    case fk::var: out.insert(f->var); return;
    case fk::zero:
    case fk::one: return;
    case fk::modal: collect_vars(f->lhs, out); return;
    default:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
  }
}

std::set<int> var_indices(const fptr& f) {
  std::set<int> out;
  collect_vars(f, out);
  return out;
}

static void collect_modals(const fptr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case fk::var:
    case fk::zero:
    case fk::one: return;
    case fk::modal:
      out.insert(f->modal);
      collect_modals(f->lhs, out);
      return;
    default:
      collect_modals(f->lhs, out);
      collect_modals(f->rhs, out);
  }
}

std::set<std::string> modal_names(const fptr& f) {
  std::set<std::string> out;
  collect_modals(f, out);
  return out;
}

bool is_pure(const fptr& f) {
  switch (f->kind) {
    case fk::var:
    case fk::zero:
    case fk::one: return true;
    case fk::modal: return false;
    default: return is_pure(f->lhs) && is_pure(f->rhs);
  }
}

static void print_to(const fptr& f, std::string& out) {
  switch (f->kind) {
    case fk::var:
      out += 'p';
      out += std::to_string(f->var);
      return;
    case fk::zero: out += '0'; return;
    case fk::one: out += '1'; return;
    case fk::modal:
      out += '(';
      out += f->modal;
      out += ' ';
      print_to(f->lhs, out);
      out += ')';
      return;
    default: {
      const char* op = f->kind == fk::meet   ? " & "
                       : f->kind == fk::join ? " | "
                       : f->kind == fk::fuse ? " * "
                                             : " -> ";
      out += '(';
      print_to(f->lhs, out);
      out += op;
      print_to(f->rhs, out);
      out += ')';
    }
  }
}

std::string print(const fptr& f) {
  std::string out;
  print_to(f, out);
  return out;
}

fptr relabel_modal(const fptr& f, const std::string& from, const std::string& to) {
  switch (f->kind) {
    case fk::var:
    case fk::zero:
    case fk::one: return f;
    case fk::modal: {
      fptr sub = relabel_modal(f->lhs, from, to);
      if (sub.get() == f->lhs.get() && f->modal != from) return f;
      return formula::mk_modal(f->modal == from ? to : f->modal, sub);
    }
    default: {
      fptr l = relabel_modal(f->lhs, from, to);
      fptr r = relabel_modal(f->rhs, from, to);
      if (l.get() == f->lhs.get() && r.get() == f->rhs.get()) return f;
      return formula::mk_binary(f->kind, l, r);
    }
  }
}

static fptr translate_with(const fptr& f, const std::string& box) {
  switch (f->kind) {
    case fk::var: return formula::mk_modal(box, f);
    case fk::zero:
    case fk::one: return f;
    case fk::modal:
      fail(errc::precondition, "translation input must be modal-free");
    case fk::imp:
      return formula::mk_modal(
          box, formula::mk_imp(translate_with(f->lhs, box), translate_with(f->rhs, box)));
    default:
      return formula::mk_binary(f->kind, translate_with(f->lhs, box),
                                translate_with(f->rhs, box));
  }
}

fptr translate_m(const fptr& f) { return translate_with(f, "box"); }
fptr translate_t(const fptr& f) { return translate_with(f, "G"); }

static bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
  return true;
}

static bool is_variable_token(const std::string& s) {
  if (s.size() < 2 || s[0] != 'p') return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit((unsigned char)s[i])) return false;
  return true;
}

void validate_signature(const std::vector<std::string>& names) {
  for (size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    if (!is_identifier(n))
      fail(errc::invalid, "modal name '" + n + "' is not an identifier");
    if (n == "P" || n == "F")
      fail(errc::invalid, "modal name '" + n + "' is reserved for an abbreviation");
    if (is_variable_token(n))
      fail(errc::invalid, "modal name '" + n + "' collides with a variable token");
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[j] == n) fail(errc::invalid, "duplicate modal name '" + n + "'");
  }
}

}  // namespace gblx
