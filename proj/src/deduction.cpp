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

#include "pa/deduction.hpp"

#include <map>
#include <type_traits>
#include <sstream>
#include <stdexcept>

#include "pa/surface.hpp"

namespace pa {

namespace {

constexpr const char* kRuleNames[kRuleCount] = {
    "axiom",        "exfalso",      "impl_intro",   "impl_elim",
    "conj_intro",   "proj1",        "proj2",        "disj_intro_l",
    "disj_intro_r", "disj_elim",    "forall_intro", "forall_elim",
    "exists_intro", "exists_elim",  "peirce",
};

}  // namespace

const char* rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kRuleCount; ++i)
    if (name == kRuleNames[i]) return static_cast<Rule>(i);
  return std::nullopt;
}

struct Proof::Node {
  Rule rule;
  std::size_t index = 0;
  std::vector<Proof> premises;
  std::vector<Formula> formulas;
  std::optional<Term> term;
  std::size_t size = 1;
};

namespace {

template <class NodeT>
std::shared_ptr<NodeT> make_node(Rule r, std::vector<Proof> premises,
                                 std::vector<Formula> formulas = {},
                                 std::optional<Term> term = std::nullopt) {
  auto n = std::make_shared<NodeT>();
  n->rule = r;
  for (const Proof& p : premises) n->size += p.size();
  n->premises = std::move(premises);
  n->formulas = std::move(formulas);
  n->term = std::move(term);
  return n;
}

}  // namespace

Proof Proof::axiom(std::size_t index) {
  auto n = make_node<Node>(Rule::Axiom, {});
  n->index = index;
  return Proof(std::move(n));
}

Proof Proof::exfalso(Proof p) {
  return Proof(make_node<Node>(Rule::Exfalso, {std::move(p)}));
}

Proof Proof::impl_intro(Proof body) {
  return Proof(make_node<Node>(Rule::ImplIntro, {std::move(body)}));
}

Proof Proof::impl_elim(Formula antecedent, Proof p, Proof q) {
  return Proof(make_node<Node>(Rule::ImplElim, {std::move(p), std::move(q)},
                               {std::move(antecedent)}));
}

Proof Proof::conj_intro(Proof p, Proof q) {
  return Proof(make_node<Node>(Rule::ConjIntro, {std::move(p), std::move(q)}));
}

Proof Proof::proj1(Proof p) {
  return Proof(make_node<Node>(Rule::Proj1, {std::move(p)}));
}

Proof Proof::proj2(Proof p) {
  return Proof(make_node<Node>(Rule::Proj2, {std::move(p)}));
}

Proof Proof::disj_intro_l(Formula other, Proof p) {
  return Proof(
      make_node<Node>(Rule::DisjIntroL, {std::move(p)}, {std::move(other)}));
}

Proof Proof::disj_intro_r(Formula other, Proof p) {
  return Proof(
      make_node<Node>(Rule::DisjIntroR, {std::move(p)}, {std::move(other)}));
}

Proof Proof::disj_elim(Formula left, Formula right, Proof p, Proof q, Proof r) {
  return Proof(make_node<Node>(Rule::DisjElim,
                               {std::move(p), std::move(q), std::move(r)},
                               {std::move(left), std::move(right)}));
}

Proof Proof::forall_intro(Proof p) {
  return Proof(make_node<Node>(Rule::ForallIntro, {std::move(p)}));
}

Proof Proof::forall_elim(Term t, Proof p) {
  return Proof(
      make_node<Node>(Rule::ForallElim, {std::move(p)}, {}, std::move(t)));
}

Proof Proof::exists_intro(Term t, Proof p) {
  return Proof(
      make_node<Node>(Rule::ExistsIntro, {std::move(p)}, {}, std::move(t)));
}

Proof Proof::exists_elim(Proof p, Proof q) {
  return Proof(make_node<Node>(Rule::ExistsElim, {std::move(p), std::move(q)}));
}

Proof Proof::peirce(Formula phi, Formula psi) {
  return Proof(
      make_node<Node>(Rule::Peirce, {}, {std::move(phi), std::move(psi)}));
}

Rule Proof::rule() const { return node_->rule; }
std::size_t Proof::index() const { return node_->index; }
const std::vector<Proof>& Proof::premises() const { return node_->premises; }
const std::vector<Formula>& Proof::formulas() const { return node_->formulas; }

const Term& Proof::term() const {
  if (!node_->term) throw std::logic_error("proof node carries no term");
  return *node_->term;
}

std::size_t Proof::size() const { return node_->size; }

bool operator==(const Proof& a, const Proof& b) {
  if (a.node_ == b.node_) return true;
  if (a.rule() != b.rule() || a.size() != b.size() || a.index() != b.index())
    return false;
  if (a.node_->term.has_value() != b.node_->term.has_value()) return false;
  if (a.node_->term && !(*a.node_->term == *b.node_->term)) return false;
  if (a.formulas().size() != b.formulas().size() ||
      a.premises().size() != b.premises().size())
    return false;
  for (std::size_t i = 0; i < a.formulas().size(); ++i)
    if (!(a.formulas()[i] == b.formulas()[i])) return false;
  for (std::size_t i = 0; i < a.premises().size(); ++i)
    if (!(a.premises()[i] == b.premises()[i])) return false;
  return true;
}

Proof subst_proof(const Proof& p, const Substitution& sigma) {
  if (sigma.is_identity()) return p;
  const auto& ps = p.premises();
  const auto& fs = p.formulas();
  auto sub = [&](const Proof& q) { return subst_proof(q, sigma); };
  auto subf = [&](const Formula& f) { return subst_form(f, sigma); };
  switch (p.rule()) {
    case Rule::Axiom:
      return p;
    case Rule::Exfalso:
      return Proof::exfalso(sub(ps[0]));
    case Rule::ImplIntro:
      return Proof::impl_intro(sub(ps[0]));
    case Rule::ImplElim:
      return Proof::impl_elim(subf(fs[0]), sub(ps[0]), sub(ps[1]));
    case Rule::ConjIntro:
      return Proof::conj_intro(sub(ps[0]), sub(ps[1]));
    case Rule::Proj1:
      return Proof::proj1(sub(ps[0]));
    case Rule::Proj2:
      return Proof::proj2(sub(ps[0]));
    case Rule::DisjIntroL:
      return Proof::disj_intro_l(subf(fs[0]), sub(ps[0]));
    case Rule::DisjIntroR:
      return Proof::disj_intro_r(subf(fs[0]), sub(ps[0]));
    case Rule::DisjElim:
      return Proof::disj_elim(subf(fs[0]), subf(fs[1]), sub(ps[0]), sub(ps[1]),
                              sub(ps[2]));
    case Rule::ForallIntro:
      return Proof::forall_intro(subst_proof(ps[0], sigma.up()));
    case Rule::ForallElim:
      return Proof::forall_elim(subst_term(p.term(), sigma), sub(ps[0]));
    case Rule::ExistsIntro:
      return Proof::exists_intro(subst_term(p.term(), sigma), sub(ps[0]));
    case Rule::ExistsElim:
      return Proof::exists_elim(sub(ps[0]), subst_proof(ps[1], sigma.up()));
    case Rule::Peirce:
      return Proof::peirce(subf(fs[0]), subf(fs[1]));
  }
  throw std::logic_error("subst_proof: bad rule");
}

std::string CheckError::describe() const {
  std::ostringstream os;
  os << "at /";
  for (std::size_t i = 0; i < path.size(); ++i) os << (i ? "/" : "") << path[i];
  os << ": " << reason;
  return os.str();
}

namespace {

struct Failure {
  CheckError error;
};

class Checker {
 public:
  Checker(const Context& ctx, Flavor flavor) : flavor_(flavor) {
    for (std::size_t i = ctx.size(); i-- > 0;) stack_.push_back({ctx[i], 0});
  }

  void check(const Proof& p, const Formula& goal) {
    const auto& ps = p.premises();
    switch (p.rule()) {
      case Rule::Exfalso:
        return child(0, [&] { check(ps[0], Formula::falsum()); });
      case Rule::ImplIntro: {
        if (!goal.is(FormulaKind::Impl)) fail("impl_intro: goal is not an implication", goal);
        push(goal.lhs());
        child(0, [&] { check(ps[0], goal.rhs()); });
        pop();
        return;
      }
      case Rule::ImplElim: {
        const Formula& a = p.formulas()[0];
        child(0, [&] { check(ps[0], Formula::impl(a, goal)); });
        child(1, [&] { check(ps[1], a); });
        return;
      }
      case Rule::ConjIntro:
        if (!goal.is(FormulaKind::Conj)) fail("conj_intro: goal is not a conjunction", goal);
        child(0, [&] { check(ps[0], goal.lhs()); });
        child(1, [&] { check(ps[1], goal.rhs()); });
        return;
      case Rule::DisjIntroL:
        if (!goal.is(FormulaKind::Disj)) fail("disj_intro_l: goal is not a disjunction", goal);
        if (!(goal.rhs() == p.formulas()[0]))
          fail("disj_intro_l: stored right disjunct differs from goal", goal);
        child(0, [&] { check(ps[0], goal.lhs()); });
        return;
      case Rule::DisjIntroR:
        if (!goal.is(FormulaKind::Disj)) fail("disj_intro_r: goal is not a disjunction", goal);
        if (!(goal.lhs() == p.formulas()[0]))
          fail("disj_intro_r: stored left disjunct differs from goal", goal);
        child(0, [&] { check(ps[0], goal.rhs()); });
        return;
      case Rule::DisjElim: {
        const Formula& a = p.formulas()[0];
        const Formula& b = p.formulas()[1];
        child(0, [&] { check(ps[0], Formula::disj(a, b)); });
        push(a);
        child(1, [&] { check(ps[1], goal); });
        pop();
        push(b);
        child(2, [&] { check(ps[2], goal); });
        pop();
        return;
      }
      case Rule::ForallIntro: {
        if (!goal.is(FormulaKind::Forall)) fail("forall_intro: goal is not universal", goal);
        ++level_;
        child(0, [&] { check(ps[0], goal.body()); });
        --level_;
        return;
      }
      case Rule::ExistsIntro: {
        if (!goal.is(FormulaKind::Exists)) fail("exists_intro: goal is not existential", goal);
        child(0, [&] { check(ps[0], single_subst(goal.body(), p.term())); });
        return;
      }
      case Rule::ExistsElim: {
        Formula ex = child(0, [&] { return infer(ps[0]); });
        if (!ex.is(FormulaKind::Exists))
          fail("exists_elim: major premise is not existential", ex);
        ++level_;
        push(ex.body());
        child(1, [&] { check(ps[1], shift_form(goal)); });
        pop();
        --level_;
        return;
      }
      case Rule::Axiom:
      case Rule::Proj1:
      case Rule::Proj2:
      case Rule::ForallElim:
      case Rule::Peirce: {
        Formula got = infer(p);
        if (!(got == goal))
          fail(std::string(rule_name(p.rule())) + ": proves " +
               print_formula(got) + " but goal is " + print_formula(goal));
        return;
      }
    }
  }

  Formula infer(const Proof& p) {
    const auto& ps = p.premises();
    switch (p.rule()) {
      case Rule::Axiom: {
        if (p.index() >= stack_.size())
          fail("axiom: index " + std::to_string(p.index()) +
               " out of range for context of size " +
               std::to_string(stack_.size()));
        const Entry& e = stack_[stack_.size() - 1 - p.index()];
        return shift_form(e.formula, level_ - e.level);
      }
      case Rule::ImplElim: {
        const Formula& a = p.formulas()[0];
        Formula f = child(0, [&] { return infer(ps[0]); });
        if (!f.is(FormulaKind::Impl) || !(f.lhs() == a))
          fail("impl_elim: premise is not an implication from the stored antecedent", f);
        child(1, [&] { check(ps[1], a); });
        return f.rhs();
      }
      case Rule::Proj1:
      case Rule::Proj2: {
        Formula f = child(0, [&] { return infer(ps[0]); });
        if (!f.is(FormulaKind::Conj))
          fail(std::string(rule_name(p.rule())) + ": premise is not a conjunction", f);
        return p.rule() == Rule::Proj1 ? f.lhs() : f.rhs();
      }
      case Rule::DisjIntroL: {
        Formula f = child(0, [&] { return infer(ps[0]); });
        return Formula::disj(f, p.formulas()[0]);
      }
      case Rule::DisjIntroR: {
        Formula f = child(0, [&] { return infer(ps[0]); });
        return Formula::disj(p.formulas()[0], f);
      }
      case Rule::ForallElim: {
        Formula f = child(0, [&] { return infer(ps[0]); });
        if (!f.is(FormulaKind::Forall))
          fail("forall_elim: premise is not universal", f);
        return single_subst(f.body(), p.term());
      }
      case Rule::Peirce: {
        if (flavor_ != Flavor::Classical)
          fail("peirce: Peirce's law is only available in classical mode");
        const Formula& phi = p.formulas()[0];
        const Formula& psi = p.formulas()[1];
        return Formula::impl(Formula::impl(Formula::impl(phi, psi), phi), phi);
      }
      default:
        fail(std::string(rule_name(p.rule())) +
             ": conclusion cannot be inferred here; supply it through "
             "impl_elim with an explicit antecedent");
    }
  }

 private:
  struct Entry {
    Formula formula;
    std::size_t level;
  };

  template <class F>
  auto child(std::size_t i, F&& f) -> decltype(f()) {
    path_.push_back(i);
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      path_.pop_back();
    } else {
      auto r = f();
      path_.pop_back();
      return r;
    }
  }

  void push(const Formula& f) { stack_.push_back({f, level_}); }
  void pop() { stack_.pop_back(); }

  [[noreturn]] void fail(const std::string& reason) {
    throw Failure{CheckError{path_, reason}};
  }
  [[noreturn]] void fail(const std::string& reason, const Formula& f) {
    fail(reason + " (" + print_formula(f) + ")");
  }

  Flavor flavor_;
  std::vector<Entry> stack_;
  std::size_t level_ = 0;
  std::vector<std::size_t> path_;
};

}  // namespace

CheckResult check(const Context& ctx, const Proof& p, const Formula& goal,
                  Flavor flavor) {
  try {
    Checker(ctx, flavor).check(p, goal);
    return {};
  } catch (const Failure& f) {
    return {f.error};
  }
}

CheckResult theory_check(const std::vector<Formula>& theory, const Proof& p,
                         const Formula& goal, Flavor flavor) {
  return check(theory, p, goal, flavor);
}

std::optional<Formula> infer(const Context& ctx, const Proof& p, Flavor flavor) {
  try {
    return Checker(ctx, flavor).infer(p);
  } catch (const Failure&) {
    return std::nullopt;
  }
}

namespace {

void collect_axioms(const Proof& p, std::size_t depth,
                    std::vector<bool>& used) {
  const auto& ps = p.premises();
  switch (p.rule()) {
    case Rule::Axiom:
      if (p.index() >= depth && p.index() - depth < used.size())
        used[p.index() - depth] = true;
      return;
    case Rule::ImplIntro:
      return collect_axioms(ps[0], depth + 1, used);
    case Rule::DisjElim:
      collect_axioms(ps[0], depth, used);
      collect_axioms(ps[1], depth + 1, used);
      collect_axioms(ps[2], depth + 1, used);
      return;
    case Rule::ExistsElim:
      collect_axioms(ps[0], depth, used);
      collect_axioms(ps[1], depth + 1, used);
      return;
    default:
      for (const Proof& q : ps) collect_axioms(q, depth, used);
  }
}

template <class Map>
Proof renumber(const Proof& p, std::size_t depth, const Map& map) {
  const auto& ps = p.premises();
  const auto& fs = p.formulas();
  auto r = [&](std::size_t i, std::size_t d) { return renumber(ps[i], d, map); };
  switch (p.rule()) {
    case Rule::Axiom:
      if (p.index() < depth) return p;
      return Proof::axiom(depth + map(p.index() - depth));
    case Rule::Exfalso:
      return Proof::exfalso(r(0, depth));
    case Rule::ImplIntro:
      return Proof::impl_intro(r(0, depth + 1));
    case Rule::ImplElim:
      return Proof::impl_elim(fs[0], r(0, depth), r(1, depth));
    case Rule::ConjIntro:
      return Proof::conj_intro(r(0, depth), r(1, depth));
    case Rule::Proj1:
      return Proof::proj1(r(0, depth));
    case Rule::Proj2:
      return Proof::proj2(r(0, depth));
    case Rule::DisjIntroL:
      return Proof::disj_intro_l(fs[0], r(0, depth));
    case Rule::DisjIntroR:
      return Proof::disj_intro_r(fs[0], r(0, depth));
    case Rule::DisjElim:
      return Proof::disj_elim(fs[0], fs[1], r(0, depth), r(1, depth + 1),
                              r(2, depth + 1));
    case Rule::ForallIntro:
      return Proof::forall_intro(r(0, depth));
    case Rule::ForallElim:
      return Proof::forall_elim(p.term(), r(0, depth));
    case Rule::ExistsIntro:
      return Proof::exists_intro(p.term(), r(0, depth));
    case Rule::ExistsElim:
      return Proof::exists_elim(r(0, depth), r(1, depth + 1));
    case Rule::Peirce:
      return p;
  }
  throw std::logic_error("renumber: bad rule");
}

}  // namespace

PrunedProof prune_context(const Context& ctx, const Proof& p) {
  std::vector<bool> used(ctx.size(), false);
  collect_axioms(p, 0, used);
  std::vector<std::size_t> map(ctx.size(), 0);
  PrunedProof out{{}, p};
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (!used[i]) continue;
    map[i] = out.context.size();
    out.context.push_back(ctx[i]);
  }
  out.proof = renumber(p, 0, [&](std::size_t i) { return map[i]; });
  return out;
}

Proof weaken_proof(const Proof& p, std::size_t inserted) {
  if (inserted == 0) return p;
  return renumber(p, 0, [&](std::size_t i) { return i + inserted; });
}

}  // namespace pa
