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

#include "pa/certify.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "pa/classify.hpp"
#include "pa/notation.hpp"
#include "pa/surface.hpp"

namespace pa {

namespace {

using u64 = std::uint64_t;

// Unary numerals make proofs linear in the values involved.
constexpr u64 kNumeralLimit = 200000;

u64 small(const Nat& n) {
  if (n > kNumeralLimit)
    throw std::length_error("value " + to_string(n) +
                            " is too large for a numeral derivation");
  return static_cast<u64>(n);
}

Term V(std::size_t i) { return Term::var(i); }
Term S(Term t) { return Term::succ(std::move(t)); }
Term plus(Term a, Term b) { return Term::add(std::move(a), std::move(b)); }

bool mentions(const Formula& f, std::size_t i) {
  if (f.free_bound() <= i) return false;
  switch (f.kind()) {
    case FormulaKind::Falsum:
      return false;
    case FormulaKind::Eq:
      return occurs(f.left(), i) || occurs(f.right(), i);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return mentions(f.body(), i + 1);
    default:
      return mentions(f.lhs(), i) || mentions(f.rhs(), i);
  }
}

bool holds(const Formula& f) { return eval_delta0(Environment{}, f); }

[[noreturn]] void mismatch(const char* rule, const Formula& want,
                           const Formula& got) {
  throw std::logic_error(std::string(rule) + ": expected " +
                         print_formula(want) + " but have " +
                         print_formula(got));
}

// A derived judgement together with the scope it was derived in.
struct Thm {
  Formula concl;
  Proof proof;
  bool inferable = false;
  std::size_t frames = 0;
  u64 top = 0;
  std::size_t hyps = 0;
  std::size_t level = 0;
};

thread_local u64 frame_counter = 0;

// Mirrors the checker's context while a derivation is assembled, so that
// hypothesis and axiom references can be emitted with their final indices.
class Scope {
 public:
  explicit Scope(const Context* theory) : theory_(theory) {}

  Thm theory_axiom(std::size_t k) const {
    return stamp(theory_->at(k), Proof::axiom(hyps_.size() + k), true);
  }
  Thm ax(Axiom a) const { return theory_axiom(static_cast<std::size_t>(a)); }

  std::size_t assume(Formula f) {
    hyps_.push_back({std::move(f), level_});
    frames_.push_back(++frame_counter);
    return hyps_.size() - 1;
  }
  void discharge() {
    hyps_.pop_back();
    frames_.pop_back();
  }
  void enter() {
    ++level_;
    frames_.push_back(++frame_counter);
  }
  void leave() {
    --level_;
    frames_.pop_back();
  }

  Thm hyp(std::size_t h) const {
    const auto& [f, lvl] = hyps_.at(h);
    return stamp(shift_form(f, level_ - lvl),
                 Proof::axiom(hyps_.size() - 1 - h), true);
  }

  Thm stamp(Formula concl, Proof p, bool inferable) const {
    return {std::move(concl), std::move(p), inferable, frames_.size(),
            frames_.empty() ? 0 : frames_.back(), hyps_.size(), level_};
  }

  // Moves a judgement from an enclosing scope into this one.
  Thm at(const Thm& t) const {
    if (t.frames > frames_.size() ||
        (t.frames > 0 && frames_[t.frames - 1] != t.top))
      throw std::logic_error("derivation used outside its scope");
    if (t.hyps == hyps_.size() && t.level == level_) return t;
    const std::size_t lift = level_ - t.level;
    Proof p = weaken_proof(t.proof, hyps_.size() - t.hyps);
    if (lift > 0) p = subst_proof(p, Substitution::lift(lift));
    return stamp(shift_form(t.concl, lift), std::move(p), t.inferable);
  }

 private:
  struct Hyp {
    Formula formula;
    std::size_t level;
  };
  const Context* theory_;
  std::vector<Hyp> hyps_;
  std::vector<u64> frames_;
  std::size_t level_ = 0;
};

using Body = std::function<Thm(const Thm&)>;

// --- rule combinators -------------------------------------------------------

Thm forall_elim(Scope& s, const Thm& in, const Term& t) {
  Thm p = s.at(in);
  if (!p.concl.is(FormulaKind::Forall))
    throw std::logic_error("forall_elim on " + print_formula(p.concl));
  Formula concl = single_subst(p.concl.body(), t);
  if (p.inferable)
    return s.stamp(std::move(concl), Proof::forall_elim(t, p.proof), true);
  Proof cut = Proof::impl_intro(Proof::forall_elim(t, Proof::axiom(0)));
  return s.stamp(std::move(concl), Proof::impl_elim(p.concl, cut, p.proof),
                 false);
}

Thm inst(Scope& s, Thm p, std::initializer_list<Term> ts) {
  for (const Term& t : ts) p = forall_elim(s, p, t);
  return p;
}

Thm apply(Scope& s, const Thm& fin, const Thm& ain) {
  Thm f = s.at(fin);
  Thm a = s.at(ain);
  if (!f.concl.is(FormulaKind::Impl))
    throw std::logic_error("apply: not an implication: " +
                           print_formula(f.concl));
  if (!(f.concl.lhs() == a.concl)) mismatch("apply", f.concl.lhs(), a.concl);
  return s.stamp(f.concl.rhs(), Proof::impl_elim(a.concl, f.proof, a.proof),
                 f.inferable);
}

Thm proj(Scope& s, const Thm& in, bool first) {
  Thm p = s.at(in);
  if (!p.concl.is(FormulaKind::Conj))
    throw std::logic_error("proj on " + print_formula(p.concl));
  Formula concl = first ? p.concl.lhs() : p.concl.rhs();
  auto make = [&](Proof q) {
    return first ? Proof::proj1(std::move(q)) : Proof::proj2(std::move(q));
  };
  if (p.inferable) return s.stamp(std::move(concl), make(p.proof), true);
  Proof cut = Proof::impl_intro(make(Proof::axiom(0)));
  return s.stamp(std::move(concl), Proof::impl_elim(p.concl, cut, p.proof),
                 false);
}

Thm conj(Scope& s, const Thm& ain, const Thm& bin) {
  Thm a = s.at(ain);
  Thm b = s.at(bin);
  return s.stamp(Formula::conj(a.concl, b.concl),
                 Proof::conj_intro(a.proof, b.proof), false);
}

Thm disj_l(Scope& s, const Thm& ain, const Formula& other) {
  Thm a = s.at(ain);
  return s.stamp(Formula::disj(a.concl, other),
                 Proof::disj_intro_l(other, a.proof), a.inferable);
}

Thm disj_r(Scope& s, const Formula& other, const Thm& bin) {
  Thm b = s.at(bin);
  return s.stamp(Formula::disj(other, b.concl),
                 Proof::disj_intro_r(other, b.proof), b.inferable);
}

Thm exfalso(Scope& s, const Thm& in, const Formula& goal) {
  Thm p = s.at(in);
  if (!p.concl.is(FormulaKind::Falsum))
    mismatch("exfalso", Formula::falsum(), p.concl);
  return s.stamp(goal, Proof::exfalso(p.proof), false);
}

Thm exists_intro(Scope& s, const Formula& goal, const Term& t,
                 const Thm& in) {
  Thm p = s.at(in);
  Formula want = single_subst(goal.body(), t);
  if (!(want == p.concl)) mismatch("exists_intro", want, p.concl);
  return s.stamp(goal, Proof::exists_intro(t, p.proof), false);
}

Thm intro_impl(Scope& s, const Formula& a, const Body& body) {
  const std::size_t h = s.assume(a);
  Thm b = s.at(body(s.hyp(h)));
  s.discharge();
  return s.stamp(Formula::impl(a, b.concl), Proof::impl_intro(b.proof), false);
}

Thm intro_forall(Scope& s, const std::function<Thm()>& body) {
  s.enter();
  Thm b = s.at(body());
  s.leave();
  return s.stamp(Formula::forall(b.concl), Proof::forall_intro(b.proof),
                 false);
}

Thm exists_elim(Scope& s, const Thm& in, const Formula& goal,
                const Body& body) {
  Thm major = s.at(in);
  if (!major.concl.is(FormulaKind::Exists))
    throw std::logic_error("exists_elim on " + print_formula(major.concl));
  if (!major.inferable) {
    Thm f = intro_impl(s, major.concl, [&](const Thm& h) {
      return exists_elim(s, h, goal, body);
    });
    return apply(s, f, major);
  }
  s.enter();
  const std::size_t h = s.assume(major.concl.body());
  Thm b = s.at(body(s.hyp(h)));
  const Formula want = shift_form(goal);
  if (!(b.concl == want)) mismatch("exists_elim", want, b.concl);
  s.discharge();
  s.leave();
  return s.stamp(goal, Proof::exists_elim(major.proof, b.proof), false);
}

Thm disj_elim(Scope& s, const Thm& in, const Formula& goal, const Body& left,
              const Body& right) {
  Thm d = s.at(in);
  if (!d.concl.is(FormulaKind::Disj))
    throw std::logic_error("disj_elim on " + print_formula(d.concl));
  const Formula a = d.concl.lhs();
  const Formula b = d.concl.rhs();
  auto branch = [&](const Formula& f, const Body& k) {
    const std::size_t h = s.assume(f);
    Thm r = s.at(k(s.hyp(h)));
    if (!(r.concl == goal)) mismatch("disj_elim", goal, r.concl);
    s.discharge();
    return r.proof;
  };
  Proof l = branch(a, left);
  Proof r = branch(b, right);
  return s.stamp(goal, Proof::disj_elim(a, b, d.proof, l, r), false);
}

// `d` proves disjunction(ds) for a list of `count` disjuncts starting at `i`.
Thm case_split(Scope& s, const Thm& d, std::size_t i, std::size_t count,
               const Formula& goal,
               const std::function<Thm(std::size_t, const Thm&)>& each) {
  if (i + 1 == count) {
    Thm r = s.at(each(i, d));
    if (!(r.concl == goal)) mismatch("case_split", goal, r.concl);
    return r;
  }
  return disj_elim(
      s, d, goal, [&](const Thm& h) { return each(i, h); },
      [&](const Thm& h) { return case_split(s, h, i + 1, count, goal, each); });
}

// disjunction(ds) from a proof of ds[i].
Thm inject(Scope& s, std::size_t i, const std::vector<Formula>& ds,
           std::size_t from, const Thm& a) {
  if (from + 1 == ds.size()) return s.at(a);
  if (i == from)
    return disj_l(s, a,
                  disjunction({ds.begin() + static_cast<std::ptrdiff_t>(from) + 1,
                               ds.end()}));
  return disj_r(s, ds[from], inject(s, i, ds, from + 1, a));
}

// --- equality ---------------------------------------------------------------

Thm refl(Scope& s, const Term& t) { return forall_elim(s, s.ax(Axiom::Refl), t); }

Thm sym(Scope& s, const Thm& e) {
  const Formula& f = s.at(e).concl;
  return apply(s, inst(s, s.ax(Axiom::Sym), {f.left(), f.right()}), e);
}

Thm trans(Scope& s, const Thm& e1, const Thm& e2) {
  const Formula f = s.at(e1).concl;
  const Formula g = s.at(e2).concl;
  if (!(f.right() == g.left()))
    throw std::logic_error("trans: " + print_formula(f) + " then " +
                           print_formula(g));
  Thm t = inst(s, s.ax(Axiom::Trans), {f.left(), f.right(), g.right()});
  return apply(s, apply(s, t, e1), e2);
}

Thm cong_s(Scope& s, const Thm& e) {
  const Formula& f = s.at(e).concl;
  return apply(s, inst(s, s.ax(Axiom::SuccEq), {f.left(), f.right()}), e);
}

Thm cong_op(Scope& s, bool mul, const Thm& e1, const Thm& e2) {
  const Formula f = s.at(e1).concl;
  const Formula g = s.at(e2).concl;
  Thm t = inst(s, s.ax(mul ? Axiom::MulEq : Axiom::AddEq),
               {f.left(), g.left(), f.right(), g.right()});
  return apply(s, apply(s, t, e1), e2);
}

// e : a = b and `u` a term with hole 0, one level below the current scope:
// u[a] = u[b].
Thm term_transport(Scope& s, const Term& u, const Thm& e) {
  if (!occurs(u, 0)) return refl(s, single_subst(u, s.at(e).concl.left()));
  switch (u.kind()) {
    case TermKind::Var:
      return s.at(e);
    case TermKind::Succ:
      return cong_s(s, term_transport(s, u.lhs(), e));
    case TermKind::Add:
    case TermKind::Mul:
      return cong_op(s, u.is(TermKind::Mul), term_transport(s, u.lhs(), e),
                     term_transport(s, u.rhs(), e));
    case TermKind::Zero:
      break;
  }
  throw std::logic_error("term_transport");
}

// Swaps indices 0 and 1 of a formula.
Formula swap01(const Formula& f) {
  return subst_form(f, Substitution{{V(1), V(0)}, 2});
}

// Leibniz rule. `c` has its hole at index 0, one level below the current
// scope; from e : a = b derive c[a] -> c[b].
Thm transport(Scope& s, const Formula& c, const Thm& ein) {
  const Thm e = s.at(ein);
  const Term a = e.concl.left();
  const Term b = e.concl.right();
  const Formula from = single_subst(c, a);
  const Formula to = single_subst(c, b);
  if (!mentions(c, 0))
    return intro_impl(s, from, [](const Thm& h) { return h; });
  switch (c.kind()) {
    case FormulaKind::Eq:
      return intro_impl(s, from, [&](const Thm& h) {
        Thm l = term_transport(s, c.left(), e);
        Thm r = term_transport(s, c.right(), e);
        return trans(s, trans(s, sym(s, l), h), r);
      });
    case FormulaKind::Conj:
      return intro_impl(s, from, [&](const Thm& h) {
        return conj(s, apply(s, transport(s, c.lhs(), e), proj(s, h, true)),
                    apply(s, transport(s, c.rhs(), e), proj(s, h, false)));
      });
    case FormulaKind::Disj:
      return intro_impl(s, from, [&](const Thm& h) {
        return disj_elim(
            s, h, to,
            [&](const Thm& l) {
              return disj_l(s, apply(s, transport(s, c.lhs(), e), l), to.rhs());
            },
            [&](const Thm& r) {
              return disj_r(s, to.lhs(), apply(s, transport(s, c.rhs(), e), r));
            });
      });
    case FormulaKind::Impl:
      return intro_impl(s, from, [&](const Thm& h) {
        return intro_impl(s, to.lhs(), [&](const Thm& x) {
          Thm back = apply(s, transport(s, c.lhs(), sym(s, e)), x);
          return apply(s, transport(s, c.rhs(), e), apply(s, h, back));
        });
      });
    case FormulaKind::Forall:
      return intro_impl(s, from, [&](const Thm& h) {
        return intro_forall(s, [&] {
          Thm inner = forall_elim(s, h, V(0));
          return apply(s, transport(s, swap01(c.body()), e), inner);
        });
      });
    case FormulaKind::Exists:
      return intro_impl(s, from, [&](const Thm& h) {
        return exists_elim(s, h, to, [&](const Thm& w) {
          Thm moved = apply(s, transport(s, swap01(c.body()), e), w);
          return exists_intro(s, shift_form(to), V(0), moved);
        });
      });
    case FormulaKind::Falsum:
      break;
  }
  throw std::logic_error("transport");
}

// B with its index 0 turned into a transport hole one level down.
Formula hole_form(const Formula& b) {
  return subst_form(b, Substitution{{V(0)}, 2});
}

std::vector<Formula> below_list(const Term& x, u64 n) {
  std::vector<Formula> ds;
  for (u64 i = 0; i < n; ++i) ds.push_back(Formula::eq(x, num(i)));
  return ds;
}

// --- the prover -------------------------------------------------------------

class Prover {
 public:
  explicit Prover(Context theory)
      : theory_(std::move(theory)), root_(&theory_) {}
  Prover(const Prover&) = delete;
  Prover& operator=(const Prover&) = delete;

  const Context& theory() const { return theory_; }

  // The lemmas below are derived in the root scope and are usable anywhere.

  Thm value(const Term& t) {
    if (numeral_value(t)) return refl(root_, t);
    switch (t.kind()) {
      case TermKind::Succ:
        return cong_s(root_, value(t.lhs()));
      case TermKind::Add:
      case TermKind::Mul: {
        const bool mul = t.is(TermKind::Mul);
        Thm l = value(t.lhs());
        Thm r = value(t.rhs());
        const u64 m = small(eval_term({}, t.lhs()));
        const u64 n = small(eval_term({}, t.rhs()));
        Thm k = mul ? mul_num(m, n) : add_num(m, n);
        return trans(root_, cong_op(root_, mul, l, r), k);
      }
      default:
        throw NotClosed();
    }
  }

  Thm add_num(u64 m, u64 n) {
    if (auto it = add_.find({m, n}); it != add_.end()) return it->second;
    Thm out = [&] {
      if (m == 0) return forall_elim(root_, root_.ax(Axiom::AddBase), num(n));
      Thm prev = add_num(m - 1, n);
      return trans(root_, inst(root_, root_.ax(Axiom::AddRec), {num(m - 1), num(n)}),
                   cong_s(root_, prev));
    }();
    return add_.emplace(std::make_pair(m, n), out).first->second;
  }

  Thm mul_num(u64 m, u64 n) {
    if (auto it = mul_.find({m, n}); it != mul_.end()) return it->second;
    Thm out = [&] {
      if (m == 0) return forall_elim(root_, root_.ax(Axiom::MulBase), num(n));
      small((m - 1) * n + n);
      Thm prev = mul_num(m - 1, n);
      Thm sum = add_num(n, (m - 1) * n);
      Thm e1 = inst(root_, root_.ax(Axiom::MulRec), {num(m - 1), num(n)});
      Thm e2 = cong_op(root_, false, refl(root_, num(n)), prev);
      return trans(root_, trans(root_, e1, e2), sum);
    }();
    return mul_.emplace(std::make_pair(m, n), out).first->second;
  }

  Thm neq(u64 m, u64 n) {
    if (m == n) throw EqualInputs();
    if (auto it = neq_.find({m, n}); it != neq_.end()) return it->second;
    Scope& s = root_;
    const Formula eq = Formula::eq(num(m), num(n));
    Thm out = [&] {
      if (m > 0 && n > 0) {
        Thm inner = neq(m - 1, n - 1);
        return intro_impl(s, eq, [&](const Thm& h) {
          Thm inj = inst(s, s.ax(Axiom::Injectivity), {num(m - 1), num(n - 1)});
          return apply(s, inner, apply(s, inj, h));
        });
      }
      return intro_impl(s, eq, [&](const Thm& h) {
        const u64 k = (m == 0 ? n : m) - 1;
        Thm disj = forall_elim(s, s.ax(Axiom::Disjointness), num(k));
        return apply(s, disj, m == 0 ? sym(s, h) : h);
      });
    }();
    return neq_.emplace(std::make_pair(m, n), out).first->second;
  }

  // forall x. x < n -> x = 0 \/ ... \/ x = n - 1   (false for n = 0)
  Thm below(u64 n) {
    if (auto it = below_.find(n); it != below_.end()) return it->second;
    std::optional<Thm> prev;
    if (n > 0) prev = below(n - 1);
    Scope& s = root_;
    Thm out = intro_forall(s, [&] {
      const Formula target = disjunction(below_list(V(0), n));
      return intro_impl(s, lt(V(0), num(n)), [&](const Thm& h) {
        return exists_elim(s, h, target, [&](const Thm& w) {
          // x = 1, k = 0
          const Term x = V(1);
          const Term k = V(0);
          const auto ds = below_list(x, n);
          if (n == 0)
            return apply(s, forall_elim(s, s.ax(Axiom::Disjointness), plus(x, k)), w);
          Thm cases = forall_elim(s, s.ax(Axiom::CaseAnalysis), x);
          return disj_elim(
              s, cases, disjunction(ds),
              [&](const Thm& z) { return inject(s, 0, ds, 0, z); },
              [&](const Thm& ey) {
                return exists_elim(s, ey, disjunction(ds), [&](const Thm& q) {
                  // y = 0, k = 1, x = 2
                  const Term y = V(0);
                  const Term k3 = V(1);
                  const auto ds3 = below_list(V(2), n);
                  Thm a1 = cong_op(s, false, q, refl(s, k3));
                  Thm a3 = trans(s, sym(s, cong_s(s, a1)), w);
                  Thm a4 = cong_s(s, inst(s, s.ax(Axiom::AddRec), {y, k3}));
                  Thm a5 = trans(s, sym(s, a4), a3);
                  Thm a6 = apply(
                      s, inst(s, s.ax(Axiom::Injectivity), {S(plus(y, k3)), num(n - 1)}),
                      a5);
                  Thm lty = exists_intro(s, lt(y, num(n - 1)), k3, a6);
                  Thm d = apply(s, forall_elim(s, *prev, y), lty);
                  if (n == 1) return exfalso(s, d, disjunction(ds3));
                  return case_split(
                      s, d, 0, n - 1, disjunction(ds3),
                      [&](std::size_t i, const Thm& eqi) {
                        return inject(s, i + 1, ds3, 0, trans(s, q, cong_s(s, eqi)));
                      });
                });
              });
        });
      });
    });
    return below_.emplace(n, out).first->second;
  }

  // num(w) < t for closed t with value above w.
  Thm lt_numeral(u64 w, const Term& t) {
    const u64 n = small(eval_term({}, t));
    const u64 k = n - w - 1;
    Thm e = trans(root_, cong_s(root_, add_num(w, k)), sym(root_, value(t)));
    return exists_intro(root_, lt(num(w), t), num(k), e);
  }

  // From g : v < bound (v = index 0 of the current scope) derive the list of
  // cases v = 0 \/ ... \/ v = n - 1.
  Thm bounded_cases(Scope& s, const Thm& g, const Term& bound, u64 n) {
    Thm e = value(bound);
    Thm lemma = below(n);
    Thm guard = g;
    if (!(bound == num(n)))
      guard = apply(s, transport(s, lt(V(1), V(0)), e), g);
    return apply(s, forall_elim(s, lemma, V(0)), guard);
  }

  Thm prove_true(Scope& s, const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Falsum:
        break;
      case FormulaKind::Eq:
        return trans(s, value(f.left()), sym(s, value(f.right())));
      case FormulaKind::Conj:
        return conj(s, prove_true(s, f.lhs()), prove_true(s, f.rhs()));
      case FormulaKind::Disj:
        if (holds(f.lhs())) return disj_l(s, prove_true(s, f.lhs()), f.rhs());
        return disj_r(s, f.lhs(), prove_true(s, f.rhs()));
      case FormulaKind::Impl:
        if (holds(f.rhs()))
          return intro_impl(s, f.lhs(),
                            [&](const Thm&) { return prove_true(s, f.rhs()); });
        return intro_impl(s, f.lhs(), [&](const Thm& h) {
          return exfalso(s, apply(s, refute(s, f.lhs()), h), f.rhs());
        });
      case FormulaKind::Forall: {
        auto bq = match_bounded_forall(f);
        if (!bq) throw NotDelta0();
        const u64 n = small(eval_term({}, bq->bound));
        const Formula& b = f.body().rhs();
        return intro_forall(s, [&] {
          return intro_impl(s, f.body().lhs(), [&](const Thm& g) {
            Thm d = bounded_cases(s, g, bq->bound, n);
            if (n == 0) return exfalso(s, d, b);
            return case_split(s, d, 0, n, b, [&](std::size_t i, const Thm& eqi) {
              Thm bi = prove_true(s, single_subst(b, num(i)));
              return apply(s, transport(s, hole_form(b), sym(s, eqi)), bi);
            });
          });
        });
      }
      case FormulaKind::Exists: {
        auto bq = match_bounded_exists(f);
        if (!bq) throw NotDelta0();
        const u64 n = small(eval_term({}, bq->bound));
        for (u64 w = 0; w < n; ++w) {
          Formula inst_w = single_subst(bq->body, num(w));
          if (!holds(inst_w)) continue;
          Thm guard = lt_numeral(w, bq->bound);
          return exists_intro(s, f, num(w), conj(s, guard, prove_true(s, inst_w)));
        }
        break;
      }
    }
    throw std::logic_error("prove_true on a false formula: " + print_formula(f));
  }

  // ~f for a false closed Delta0 formula.
  Thm refute(Scope& s, const Formula& f) {
    const Formula bot = Formula::falsum();
    switch (f.kind()) {
      case FormulaKind::Falsum:
        return intro_impl(s, f, [](const Thm& h) { return h; });
      case FormulaKind::Eq: {
        const u64 l = small(eval_term({}, f.left()));
        const u64 r = small(eval_term({}, f.right()));
        Thm apart = neq(l, r);
        return intro_impl(s, f, [&](const Thm& h) {
          Thm e = trans(s, trans(s, sym(s, value(f.left())), h), value(f.right()));
          return apply(s, apart, e);
        });
      }
      case FormulaKind::Conj:
        return intro_impl(s, f, [&](const Thm& h) {
          if (!holds(f.lhs())) return apply(s, refute(s, f.lhs()), proj(s, h, true));
          return apply(s, refute(s, f.rhs()), proj(s, h, false));
        });
      case FormulaKind::Disj:
        return intro_impl(s, f, [&](const Thm& h) {
          return disj_elim(
              s, h, bot,
              [&](const Thm& l) { return apply(s, refute(s, f.lhs()), l); },
              [&](const Thm& r) { return apply(s, refute(s, f.rhs()), r); });
        });
      case FormulaKind::Impl:
        return intro_impl(s, f, [&](const Thm& h) {
          return apply(s, refute(s, f.rhs()), apply(s, h, prove_true(s, f.lhs())));
        });
      case FormulaKind::Forall: {
        auto bq = match_bounded_forall(f);
        if (!bq) throw NotDelta0();
        const u64 n = small(eval_term({}, bq->bound));
        for (u64 w = 0; w < n; ++w) {
          Formula inst_w = single_subst(bq->body, num(w));
          if (holds(inst_w)) continue;
          return intro_impl(s, f, [&](const Thm& h) {
            Thm body = apply(s, forall_elim(s, h, num(w)), lt_numeral(w, bq->bound));
            return apply(s, refute(s, inst_w), body);
          });
        }
        break;
      }
      case FormulaKind::Exists: {
        auto bq = match_bounded_exists(f);
        if (!bq) throw NotDelta0();
        const u64 n = small(eval_term({}, bq->bound));
        const Formula& b = bq->body;
        return intro_impl(s, f, [&](const Thm& h) {
          return exists_elim(s, h, bot, [&](const Thm& w) {
            Thm d = bounded_cases(s, proj(s, w, true), bq->bound, n);
            if (n == 0) return d;
            return case_split(s, d, 0, n, bot, [&](std::size_t i, const Thm& eqi) {
              Thm bv = proj(s, w, false);
              Thm bi = apply(s, transport(s, hole_form(b), eqi), bv);
              return apply(s, refute(s, single_subst(b, num(i))), bi);
            });
          });
        });
      }
    }
    throw std::logic_error("refute on a true formula: " + print_formula(f));
  }

 private:
  Context theory_;
  Scope root_;
  std::map<std::pair<u64, u64>, Thm> add_, mul_, neq_;
  std::map<u64, Thm> below_;
};

Certificate finish(const Context& ctx, const Proof& proof, const Formula& goal) {
  CheckResult r = theory_check(ctx, proof, goal, Flavor::Intuitionistic);
  if (!r.ok()) throw InvalidCertificate(r.error->describe());
  PrunedProof pruned = prune_context(ctx, proof);
  return Certificate::make(std::move(pruned.context), std::move(pruned.proof),
                           goal);
}

// chi(t) := forall a b. S (S ((t + a) + b)) = t -> false
Formula asymmetry_motive() {
  Term sum = plus(plus(V(2), V(1)), V(0));
  return forall_n(2, Formula::impl(Formula::eq(S(S(sum)), V(2)),
                                   Formula::falsum()));
}

Formula asymmetry_goal() {
  return forall_n(2, Formula::impl(lt(V(1), V(0)),
                                   Formula::impl(lt(V(0), V(1)),
                                                 Formula::falsum())));
}

Context asymmetry_context() {
  Context ctx = axioms(TheoryName::FA);
  ctx.push_back(induction_instance(asymmetry_motive()));
  return ctx;
}

Thm derive_asymmetry(Scope& s) {
  const Formula chi = asymmetry_motive();
  const Term zero = Term::zero();
  Thm base = intro_forall(s, [&] {
    return intro_forall(s, [&] {
      Term inner = S(plus(plus(zero, V(1)), V(0)));
      return intro_impl(s, Formula::eq(S(inner), zero), [&](const Thm& h) {
        return apply(s, forall_elim(s, s.ax(Axiom::Disjointness), inner), h);
      });
    });
  });
  Thm step = intro_forall(s, [&] {
    return intro_impl(s, chi, [&](const Thm& ih) {
      return intro_forall(s, [&] {
        return intro_forall(s, [&] {
          const Term t = V(2), a = V(1), b = V(0);
          const Term lhs = plus(plus(S(t), a), b);
          return intro_impl(s, Formula::eq(S(S(lhs)), S(t)), [&](const Thm& h) {
            Thm e1 = apply(s, inst(s, s.ax(Axiom::Injectivity), {S(lhs), t}), h);
            Thm e2 = cong_op(s, false, inst(s, s.ax(Axiom::AddRec), {t, a}), refl(s, b));
            Thm e3 = trans(s, e2, inst(s, s.ax(Axiom::AddRec), {plus(t, a), b}));
            Thm e5 = trans(s, sym(s, cong_s(s, e3)), e1);
            return apply(s, inst(s, ih, {a, b}), e5);
          });
        });
      });
    });
  });
  Thm ind = s.theory_axiom(kFaAxiomCount);
  Thm all = apply(s, apply(s, ind, base), step);
  return intro_forall(s, [&] {
    return intro_forall(s, [&] {
      return intro_impl(s, lt(V(1), V(0)), [&](const Thm& p) {
        return intro_impl(s, lt(V(0), V(1)), [&](const Thm& q) {
          return exists_elim(s, p, Formula::falsum(), [&](const Thm& e1) {
            return exists_elim(s, q, Formula::falsum(), [&](const Thm& e2) {
              const Term t = V(3), k = V(1), kp = V(0);
              Thm f1 = cong_op(s, false, sym(s, e1), refl(s, kp));
              Thm f2 = trans(s, f1, inst(s, s.ax(Axiom::AddRec), {plus(t, k), kp}));
              Thm f4 = trans(s, sym(s, cong_s(s, f2)), e2);
              return apply(s, inst(s, all, {t, k, kp}), f4);
            });
          });
        });
      });
    });
  });
}

std::size_t small_index(const Nat& n) {
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw std::out_of_range("axiom index too large to materialise");
  return static_cast<std::size_t>(n);
}

}  // namespace

Certificate Certificate::make(Context axioms_used, Proof proof, Formula goal) {
  CheckResult r =
      theory_check(axioms_used, proof, goal, Flavor::Intuitionistic);
  if (!r.ok()) throw InvalidCertificate(r.error->describe());
  return Certificate(std::move(axioms_used), std::move(proof), std::move(goal));
}

Certificate prove_closed_term_value(const Term& t) {
  if (!t.closed()) throw NotClosed();
  Prover p(axioms(TheoryName::Q));
  Thm v = p.value(t);
  return finish(p.theory(), v.proof, v.concl);
}

Certificate prove_numeral_neq(std::uint64_t m, std::uint64_t n) {
  if (m == n) throw EqualInputs();
  Prover p(axioms(TheoryName::Q));
  Thm v = p.neq(m, n);
  return finish(p.theory(), v.proof, v.concl);
}

std::optional<Certificate> certify_sigma1(const Formula& f, Fuel fuel) {
  if (!f.closed()) throw NotClosed();
  if (!classify_sigma1(f)) throw NotSigma1();
  SearchResult found = sat_sigma1(f, fuel);
  if (!found.found()) return std::nullopt;
  const auto& ws = *found.witnesses;
  std::vector<Formula> layers{f};
  for (u64 w : ws) layers.push_back(single_subst(layers.back().body(), num(w)));
  Prover p(axioms(TheoryName::Q));
  Scope s(&p.theory());
  Thm t = p.prove_true(s, layers.back());
  for (std::size_t i = ws.size(); i-- > 0;)
    t = exists_intro(s, layers[i], num(ws[i]), t);
  return finish(p.theory(), t.proof, f);
}

std::optional<Certificate> certify_refutation(const Formula& f) {
  if (!f.closed()) throw NotClosed();
  if (holds(f)) return std::nullopt;
  Prover p(axioms(TheoryName::Q));
  Scope s(&p.theory());
  Thm t = p.refute(s, f);
  return finish(p.theory(), t.proof, t.concl);
}

Certificate order_asymmetry() {
  const Context ctx = asymmetry_context();
  Scope s(&ctx);
  Thm t = derive_asymmetry(s);
  if (!(t.concl == asymmetry_goal())) mismatch("asymmetry", asymmetry_goal(), t.concl);
  return finish(ctx, t.proof, t.concl);
}

Formula rosser_disjointness_goal(const Formula& alpha, const Formula& beta) {
  return Formula::forall(Formula::impl(
      rosser_literal(alpha, beta),
      Formula::impl(rosser_literal(beta, alpha), Formula::falsum())));
}

Certificate rosser_disjointness_proof(const Formula& alpha,
                                      const Formula& beta) {
  const Formula goal = rosser_disjointness_goal(alpha, beta);
  const Formula r1 = goal.body().lhs();
  const Formula r2 = goal.body().rhs().lhs();
  const Formula bot = Formula::falsum();
  const Context ctx = asymmetry_context();
  Scope s(&ctx);
  Thm asym = derive_asymmetry(s);
  Thm t = intro_forall(s, [&] {
    return intro_impl(s, r1, [&](const Thm& h1) {
      return intro_impl(s, r2, [&](const Thm& h2) {
        return exists_elim(s, h1, bot, [&](const Thm& a) {
          return exists_elim(s, h2, bot, [&](const Thm& b) {
            // t' = 0, t = 1, x = 2
            Thm t_before = apply(s, forall_elim(s, proj(s, a, false), V(0)),
                                 proj(s, b, true));
            Thm tp_before = apply(s, forall_elim(s, proj(s, b, false), V(1)),
                                  proj(s, a, true));
            Thm lemma = inst(s, asym, {V(1), V(0)});
            return apply(s, apply(s, lemma, t_before), tp_before);
          });
        });
      });
    });
  });
  return finish(ctx, t.proof, goal);
}

// --- proof enumeration ------------------------------------------------------

Proof enumerate_proof(const Nat& n) {
  const auto tag = static_cast<Rule>(static_cast<unsigned>(n % kRuleCount));
  const Nat r = n / kRuleCount;
  auto two = [&] { return cantor_unpair(r); };
  switch (tag) {
    case Rule::Axiom:
      return Proof::axiom(small_index(r));
    case Rule::Exfalso:
      return Proof::exfalso(enumerate_proof(r));
    case Rule::ImplIntro:
      return Proof::impl_intro(enumerate_proof(r));
    case Rule::ImplElim: {
      auto [f, rest] = two();
      auto [p, q] = cantor_unpair(rest);
      return Proof::impl_elim(enumerate_formula(f), enumerate_proof(p),
                              enumerate_proof(q));
    }
    case Rule::ConjIntro: {
      auto [p, q] = two();
      return Proof::conj_intro(enumerate_proof(p), enumerate_proof(q));
    }
    case Rule::Proj1:
      return Proof::proj1(enumerate_proof(r));
    case Rule::Proj2:
      return Proof::proj2(enumerate_proof(r));
    case Rule::DisjIntroL: {
      auto [f, p] = two();
      return Proof::disj_intro_l(enumerate_formula(f), enumerate_proof(p));
    }
    case Rule::DisjIntroR: {
      auto [f, p] = two();
      return Proof::disj_intro_r(enumerate_formula(f), enumerate_proof(p));
    }
    case Rule::DisjElim: {
      auto [fa, r1] = two();
      auto [fb, r2] = cantor_unpair(r1);
      auto [p, r3] = cantor_unpair(r2);
      auto [q, w] = cantor_unpair(r3);
      return Proof::disj_elim(enumerate_formula(fa), enumerate_formula(fb),
                              enumerate_proof(p), enumerate_proof(q),
                              enumerate_proof(w));
    }
    case Rule::ForallIntro:
      return Proof::forall_intro(enumerate_proof(r));
    case Rule::ForallElim: {
      auto [t, p] = two();
      return Proof::forall_elim(enumerate_term(t), enumerate_proof(p));
    }
    case Rule::ExistsIntro: {
      auto [t, p] = two();
      return Proof::exists_intro(enumerate_term(t), enumerate_proof(p));
    }
    case Rule::ExistsElim: {
      auto [p, q] = two();
      return Proof::exists_elim(enumerate_proof(p), enumerate_proof(q));
    }
    case Rule::Peirce: {
      auto [a, b] = two();
      return Proof::peirce(enumerate_formula(a), enumerate_formula(b));
    }
  }
  throw std::logic_error("enumerate_proof");
}

Nat proof_index(const Proof& p) {
  const auto& ps = p.premises();
  const auto& fs = p.formulas();
  auto idx = [](const Proof& q) { return proof_index(q); };
  Nat r = 0;
  switch (p.rule()) {
    case Rule::Axiom:
      r = p.index();
      break;
    case Rule::Exfalso:
    case Rule::ImplIntro:
    case Rule::Proj1:
    case Rule::Proj2:
    case Rule::ForallIntro:
      r = idx(ps[0]);
      break;
    case Rule::ImplElim:
      r = cantor_pair(formula_index(fs[0]), cantor_pair(idx(ps[0]), idx(ps[1])));
      break;
    case Rule::ConjIntro:
    case Rule::ExistsElim:
      r = cantor_pair(idx(ps[0]), idx(ps[1]));
      break;
    case Rule::DisjIntroL:
    case Rule::DisjIntroR:
      r = cantor_pair(formula_index(fs[0]), idx(ps[0]));
      break;
    case Rule::DisjElim:
      r = cantor_pair(
          formula_index(fs[0]),
          cantor_pair(formula_index(fs[1]),
                      cantor_pair(idx(ps[0]), cantor_pair(idx(ps[1]), idx(ps[2])))));
      break;
    case Rule::ForallElim:
    case Rule::ExistsIntro:
      r = cantor_pair(term_index(p.term()), idx(ps[0]));
      break;
    case Rule::Peirce:
      r = cantor_pair(formula_index(fs[0]), formula_index(fs[1]));
      break;
  }
  return r * kRuleCount + static_cast<unsigned>(p.rule());
}

Context axiom_subset(const Theory& t, const Nat& subset) {
  const Context listed = t.axioms();
  Context out;
  if (subset == 0) return out;
  const std::size_t top = boost::multiprecision::msb(subset);
  for (std::size_t j = 0; j <= top; ++j) {
    if (!boost::multiprecision::bit_test(subset, static_cast<unsigned>(j))) continue;
    if (j < listed.size()) {
      out.push_back(listed[j]);
    } else if (t.name == TheoryName::PA) {
      Formula motive = enumerate_formula(Nat(j - listed.size()));
      if (motive.free_bound() <= 1) out.push_back(induction_instance(motive));
    }
  }
  return out;
}

std::optional<Certificate> enumerate_proofs(const Theory& t, const Formula& goal,
                                            std::uint64_t fuel) {
  if (!goal.closed()) throw NotClosed();
  const std::size_t listed = t.axioms().size();
  for (u64 k = 0; k < fuel; ++k) {
    auto [i, subset] = cantor_unpair(Nat(k));
    // Outside PA the high bits select nothing new.
    if (t.name != TheoryName::PA && subset != 0 &&
        boost::multiprecision::msb(subset) >= listed)
      continue;
    Context ctx;
    std::optional<Proof> p;
    try {
      p = enumerate_proof(i);
      ctx = axiom_subset(t, subset);
    } catch (const std::out_of_range&) {
      continue;
    }
    if (!check(ctx, *p, goal, Flavor::Intuitionistic).ok()) continue;
    PrunedProof pruned = prune_context(ctx, *p);
    return Certificate::make(std::move(pruned.context), std::move(pruned.proof),
                             goal);
  }
  return std::nullopt;
}

}  // namespace pa
