// Copyright 2026 The arith-kernel Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pa/syntax.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace pa {

struct Term::Node {
  TermKind kind;
  std::size_t index = 0;
  std::optional<Term> l;
  std::optional<Term> r;
  std::size_t free_bound = 0;
  std::size_t size = 1;
  std::optional<std::uint64_t> numeral;

  Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;
  // Numerals are deep S-chains; tear them down without recursing.
  ~Node() {
    std::vector<std::shared_ptr<const Node>> pending;
    auto steal = [&pending](std::optional<Term>& t) {
      if (t && t->node_.use_count() == 1) pending.push_back(std::move(t->node_));
    };
    steal(l);
    steal(r);
    while (!pending.empty()) {
      std::shared_ptr<const Node> n = std::move(pending.back());
      pending.pop_back();
      // Sole owner, so detaching its children is safe.
      auto& m = const_cast<Node&>(*n);
      steal(m.l);
      steal(m.r);
    }
  }
};

Term Term::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->index = index;
  n->free_bound = index + 1;
  return Term(std::move(n));
}

Term Term::zero() {
  static const Term z = [] {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::Zero;
    n->numeral = 0;
    return Term(std::move(n));
  }();
  return z;
}

Term Term::succ(Term t) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Succ;
  n->free_bound = t.free_bound();
  n->size = 1 + t.size();
  if (auto v = t.numeral()) n->numeral = *v + 1;
  n->l = std::move(t);
  return Term(std::move(n));
}

namespace {
template <class NodeT, class T, class K>
std::shared_ptr<NodeT> binary_node(K kind, T l, T r) {
  auto n = std::make_shared<NodeT>();
  n->kind = kind;
  n->free_bound = std::max(l.free_bound(), r.free_bound());
  n->size = 1 + l.size() + r.size();
  n->l = std::move(l);
  n->r = std::move(r);
  return n;
}
}  // namespace

Term Term::add(Term l, Term r) {
  return Term(binary_node<Node>(TermKind::Add, std::move(l), std::move(r)));
}

Term Term::mul(Term l, Term r) {
  return Term(binary_node<Node>(TermKind::Mul, std::move(l), std::move(r)));
}

TermKind Term::kind() const { return node_->kind; }

std::size_t Term::index() const {
  assert(node_->kind == TermKind::Var);
  return node_->index;
}

const Term& Term::lhs() const {
  assert(node_->l);
  return *node_->l;
}

const Term& Term::rhs() const {
  assert(node_->r);
  return *node_->r;
}

std::size_t Term::free_bound() const { return node_->free_bound; }
std::size_t Term::size() const { return node_->size; }
std::optional<std::uint64_t> Term::numeral() const { return node_->numeral; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.free_bound() != b.free_bound() ||
      a.size() != b.size())
    return false;
  switch (a.kind()) {
    case TermKind::Var:
      return a.index() == b.index();
    case TermKind::Zero:
      return true;
    case TermKind::Succ: {
      if (a.numeral() && b.numeral()) return *a.numeral() == *b.numeral();
      const Term* x = &a;
      const Term* y = &b;
      while (x->is(TermKind::Succ) && y->is(TermKind::Succ)) {
        x = &x->lhs();
        y = &y->lhs();
        if (x->node_ == y->node_) return true;
      }
      return *x == *y;
    }
    case TermKind::Add:
    case TermKind::Mul:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

struct Formula::Node {
  FormulaKind kind;
  std::optional<Term> tl;
  std::optional<Term> tr;
  std::optional<Formula> l;
  std::optional<Formula> r;
  std::size_t free_bound = 0;
  std::size_t size = 1;
};

Formula Formula::falsum() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Falsum;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::eq(Term l, Term r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Eq;
  n->free_bound = std::max(l.free_bound(), r.free_bound());
  n->size = 1 + l.size() + r.size();
  n->tl = std::move(l);
  n->tr = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::impl(Formula a, Formula b) {
  return Formula(
      binary_node<Node>(FormulaKind::Impl, std::move(a), std::move(b)));
}

Formula Formula::conj(Formula a, Formula b) {
  return Formula(
      binary_node<Node>(FormulaKind::Conj, std::move(a), std::move(b)));
}

Formula Formula::disj(Formula a, Formula b) {
  return Formula(
      binary_node<Node>(FormulaKind::Disj, std::move(a), std::move(b)));
}

namespace {
std::size_t under_binder(std::size_t bound) { return bound == 0 ? 0 : bound - 1; }
}  // namespace

Formula Formula::forall(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Forall;
  n->free_bound = under_binder(body.free_bound());
  n->size = 1 + body.size();
  n->l = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::exists(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Exists;
  n->free_bound = under_binder(body.free_bound());
  n->size = 1 + body.size();
  n->l = std::move(body);
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  switch (kind()) {
    case FormulaKind::Impl:
    case FormulaKind::Conj:
    case FormulaKind::Disj:
      return true;
    default:
      return false;
  }
}

const Term& Formula::left() const {
  assert(node_->tl);
  return *node_->tl;
}

const Term& Formula::right() const {
  assert(node_->tr);
  return *node_->tr;
}

const Formula& Formula::lhs() const {
  assert(node_->l);
  return *node_->l;
}

const Formula& Formula::rhs() const {
  assert(node_->r);
  return *node_->r;
}

std::size_t Formula::free_bound() const { return node_->free_bound; }
std::size_t Formula::size() const { return node_->size; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.free_bound() != b.free_bound() ||
      a.size() != b.size())
    return false;
  switch (a.kind()) {
    case FormulaKind::Falsum:
      return true;
    case FormulaKind::Eq:
      return a.left() == b.left() && a.right() == b.right();
    case FormulaKind::Impl:
    case FormulaKind::Conj:
    case FormulaKind::Disj:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return a.body() == b.body();
  }
  return false;
}

// --- substitution ---------------------------------------------------------

Substitution Substitution::cons(Term t, const Substitution& sigma) {
  Substitution out;
  out.prefix.reserve(sigma.prefix.size() + 1);
  out.prefix.push_back(std::move(t));
  out.prefix.insert(out.prefix.end(), sigma.prefix.begin(), sigma.prefix.end());
  out.shift = sigma.shift;
  return out;
}

Substitution Substitution::up() const {
  Substitution out;
  out.prefix.reserve(prefix.size() + 1);
  out.prefix.push_back(Term::var(0));
  for (const Term& t : prefix) out.prefix.push_back(shift_term(t));
  out.shift = shift + 1;
  return out;
}

Term Substitution::operator()(std::size_t index) const {
  if (index < prefix.size()) return prefix[index];
  return Term::var(index - prefix.size() + shift);
}

bool Substitution::identity_below(std::size_t bound) const {
  const std::size_t n = std::min(bound, prefix.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Term& t = prefix[i];
    if (!t.is(TermKind::Var) || t.index() != i) return false;
  }
  return bound <= prefix.size() || shift == prefix.size();
}

bool Substitution::is_identity() const {
  return identity_below(prefix.size()) && shift == prefix.size();
}

bool operator==(const Substitution& a, const Substitution& b) {
  // Compare as total functions: beyond both prefixes the tails must agree.
  const std::size_t n = std::max(a.prefix.size(), b.prefix.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!(a(i) == b(i))) return false;
  return a.shift + n - a.prefix.size() == b.shift + n - b.prefix.size();
}

Term subst_term(const Term& t, const Substitution& sigma) {
  if (sigma.identity_below(t.free_bound())) return t;
  switch (t.kind()) {
    case TermKind::Var:
      return sigma(t.index());
    case TermKind::Zero:
      return t;
    case TermKind::Succ:
      return Term::succ(subst_term(t.lhs(), sigma));
    case TermKind::Add:
      return Term::add(subst_term(t.lhs(), sigma), subst_term(t.rhs(), sigma));
    case TermKind::Mul:
      return Term::mul(subst_term(t.lhs(), sigma), subst_term(t.rhs(), sigma));
  }
  throw std::logic_error("subst_term: bad term");
}

Formula subst_form(const Formula& f, const Substitution& sigma) {
  if (sigma.identity_below(f.free_bound())) return f;
  switch (f.kind()) {
    case FormulaKind::Falsum:
      return f;
    case FormulaKind::Eq:
      return Formula::eq(subst_term(f.left(), sigma),
                         subst_term(f.right(), sigma));
    case FormulaKind::Impl:
      return Formula::impl(subst_form(f.lhs(), sigma),
                           subst_form(f.rhs(), sigma));
    case FormulaKind::Conj:
      return Formula::conj(subst_form(f.lhs(), sigma),
                           subst_form(f.rhs(), sigma));
    case FormulaKind::Disj:
      return Formula::disj(subst_form(f.lhs(), sigma),
                           subst_form(f.rhs(), sigma));
    case FormulaKind::Forall:
      return Formula::forall(subst_form(f.body(), sigma.up()));
    case FormulaKind::Exists:
      return Formula::exists(subst_form(f.body(), sigma.up()));
  }
  throw std::logic_error("subst_form: bad formula");
}

Substitution compose(const Substitution& s, const Substitution& t) {
  Substitution out;
  for (const Term& p : s.prefix) out.prefix.push_back(subst_term(p, t));
  // Tail of s reaches indices s.shift, s.shift + 1, ...; those still inside
  // t's prefix become explicit entries.
  std::size_t extra = 0;
  if (t.prefix.size() > s.shift) {
    extra = t.prefix.size() - s.shift;
    for (std::size_t j = 0; j < extra; ++j)
      out.prefix.push_back(t.prefix[s.shift + j]);
  }
  out.shift = s.shift + extra - t.prefix.size() + t.shift;
  return out;
}

Term shift_term(const Term& t, std::size_t by) {
  if (by == 0 || t.closed()) return t;
  return subst_term(t, Substitution::lift(by));
}

Formula shift_form(const Formula& f, std::size_t by) {
  if (by == 0 || f.closed()) return f;
  return subst_form(f, Substitution::lift(by));
}

Formula single_subst(const Formula& f, const Term& t) {
  return subst_form(f, Substitution::cons(t, Substitution::identity()));
}

Term single_subst(const Term& s, const Term& t) {
  return subst_term(s, Substitution::cons(t, Substitution::identity()));
}

bool occurs(const Term& t, std::size_t index) {
  if (index >= t.free_bound()) return false;
  switch (t.kind()) {
    case TermKind::Var:
      return t.index() == index;
    case TermKind::Zero:
      return false;
    case TermKind::Succ:
      return occurs(t.lhs(), index);
    case TermKind::Add:
    case TermKind::Mul:
      return occurs(t.lhs(), index) || occurs(t.rhs(), index);
  }
  return false;
}

std::optional<Term> unshift_term(const Term& t) {
  if (occurs(t, 0)) return std::nullopt;
  // Var 0 is absent, so its image is irrelevant.
  Substitution down{{Term::zero()}, 0};
  return subst_term(t, down);
}

std::optional<std::size_t> max_free_index(const Formula& f) {
  if (f.closed()) return std::nullopt;
  return f.free_bound() - 1;
}

std::optional<std::size_t> max_free_index(const Term& t) {
  if (t.closed()) return std::nullopt;
  return t.free_bound() - 1;
}

Term num(std::uint64_t n) {
  Term t = Term::zero();
  for (std::uint64_t i = 0; i < n; ++i) t = Term::succ(std::move(t));
  return t;
}

std::optional<std::uint64_t> numeral_value(const Term& t) {
  return t.numeral();
}

}  // namespace pa
