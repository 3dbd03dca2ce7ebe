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

// Shared generators and independent oracles for the unit tests and the
// acceptance binary.  The oracles deliberately avoid the library's
// evaluator and bounded-quantifier matchers.

#ifndef PA_TESTS_SUPPORT_HPP_
#define PA_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "pa/natural.hpp"
#include "pa/notation.hpp"
#include "pa/syntax.hpp"

namespace testing_support {

using pa::Formula;
using pa::FormulaKind;
using pa::Nat;
using pa::Term;
using pa::TermKind;
using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Variables are drawn from indices below `vars`; with vars == 0 the term is
// closed.
inline Term random_term(Rng& rng, int depth, std::size_t vars,
                        std::uint64_t max_num = 3) {
  const bool leaf = depth <= 0 || coin(rng, 0.35);
  if (leaf) {
    if (vars > 0 && coin(rng, 0.6))
      return Term::var(uniform(rng, 0, vars - 1));
    return coin(rng, 0.3) ? Term::zero() : pa::num(uniform(rng, 0, max_num));
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Term::succ(random_term(rng, depth - 1, vars, max_num));
    case 1:
      return Term::add(random_term(rng, depth - 1, vars, max_num),
                       random_term(rng, depth - 1, vars, max_num));
    default:
      return Term::mul(random_term(rng, depth - 1, vars, max_num),
                       random_term(rng, depth - 1, vars, max_num));
  }
}

// Arbitrary formula; `vars` counts the variables in scope, and one extra
// index is allowed so free variables show up regularly.
inline Formula random_formula(Rng& rng, int depth, std::size_t vars = 2) {
  if (depth <= 0 || coin(rng, 0.2)) {
    if (coin(rng, 0.15)) return Formula::falsum();
    return Formula::eq(random_term(rng, 2, vars + 1),
                       random_term(rng, 2, vars + 1));
  }
  switch (uniform(rng, 0, 5)) {
    case 0:
      return Formula::impl(random_formula(rng, depth - 1, vars),
                           random_formula(rng, depth - 1, vars));
    case 1:
      return Formula::conj(random_formula(rng, depth - 1, vars),
                           random_formula(rng, depth - 1, vars));
    case 2:
      return Formula::disj(random_formula(rng, depth - 1, vars),
                           random_formula(rng, depth - 1, vars));
    case 3:
      return Formula::forall(random_formula(rng, depth - 1, vars + 1));
    case 4:
      return Formula::exists(random_formula(rng, depth - 1, vars + 1));
    default:
      return Formula::impl(random_formula(rng, depth - 1, vars),
                           Formula::falsum());
  }
}

inline pa::Substitution random_subst(Rng& rng, std::size_t vars = 4) {
  pa::Substitution s;
  const std::size_t len = uniform(rng, 0, 3);
  for (std::size_t i = 0; i < len; ++i)
    s.prefix.push_back(random_term(rng, 2, vars));
  s.shift = uniform(rng, 0, 3);
  return s;
}

// Small atom over the variables in scope, numerals up to max_num.
inline Formula random_atom(Rng& rng, std::size_t vars, std::uint64_t max_num) {
  auto operand = [&]() -> Term {
    const std::uint64_t choice = uniform(rng, 0, 5);
    if (vars == 0 || choice == 0) return pa::num(uniform(rng, 0, max_num));
    const Term x = Term::var(uniform(rng, 0, vars - 1));
    switch (choice) {
      case 1:
      case 2:
        return x;
      case 3:
        return Term::succ(x);
      case 4:
        return Term::add(x, pa::num(uniform(rng, 0, 3)));
      default:
        return Term::mul(x, Term::var(uniform(rng, 0, vars - 1)));
    }
  };
  return Formula::eq(operand(), operand());
}

// Delta0 formula with bounded quantifiers; bounds are numerals up to
// max_bound or variables in scope.
inline Formula random_delta0(Rng& rng, int depth, std::size_t vars,
                             std::uint64_t max_bound,
                             std::uint64_t max_num = 10) {
  if (depth <= 0 || coin(rng, 0.25)) {
    if (coin(rng, 0.05)) return Formula::falsum();
    return random_atom(rng, vars, max_num);
  }
  auto bound = [&]() -> Term {
    if (vars > 0 && coin(rng, 0.3)) return Term::var(uniform(rng, 0, vars - 1));
    return pa::num(uniform(rng, 0, max_bound));
  };
  switch (uniform(rng, 0, 5)) {
    case 0:
      return Formula::conj(random_delta0(rng, depth - 1, vars, max_bound, max_num),
                           random_delta0(rng, depth - 1, vars, max_bound, max_num));
    case 1:
      return Formula::disj(random_delta0(rng, depth - 1, vars, max_bound, max_num),
                           random_delta0(rng, depth - 1, vars, max_bound, max_num));
    case 2:
      return Formula::impl(random_delta0(rng, depth - 1, vars, max_bound, max_num),
                           random_delta0(rng, depth - 1, vars, max_bound, max_num));
    case 3:
      return pa::neg(random_delta0(rng, depth - 1, vars, max_bound, max_num));
    case 4: {
      Term b = bound();
      return pa::bounded_forall(
          b, random_delta0(rng, depth - 1, vars + 1, max_bound, max_num));
    }
    default: {
      Term b = bound();
      return pa::bounded_exists(
          b, random_delta0(rng, depth - 1, vars + 1, max_bound, max_num));
    }
  }
}

// Closed Sigma1 sentence: up to two unbounded existentials over a Delta0
// body.  Each quantifier and connective counts as one level of depth.
inline Formula random_sigma1_sentence(Rng& rng, int depth,
                                      std::uint64_t max_value) {
  const std::size_t prefix = uniform(rng, 0, 2);
  const int body_depth = depth - static_cast<int>(prefix);
  Formula f = random_delta0(rng, body_depth, prefix, max_value, max_value);
  for (std::size_t i = 0; i < prefix; ++i) f = Formula::exists(f);
  return f;
}

// --- oracles ---------------------------------------------------------------

inline Nat oracle_term(const std::vector<Nat>& env, const Term& t) {
  switch (t.kind()) {
    case TermKind::Zero:
      return 0;
    case TermKind::Var:
      return t.index() < env.size() ? env[t.index()] : Nat(0);
    case TermKind::Succ:
      return oracle_term(env, t.lhs()) + 1;
    case TermKind::Add:
      return oracle_term(env, t.lhs()) + oracle_term(env, t.rhs());
    case TermKind::Mul:
      return oracle_term(env, t.lhs()) * oracle_term(env, t.rhs());
  }
  return 0;
}

// Recognises the guard "Var 0 < t" in its expanded form
// exists k. S(Var 1 + Var 0) = t'' and returns t'' (t shifted by two).
inline std::optional<Term> oracle_guard(const Formula& g) {
  if (!g.is(FormulaKind::Exists)) return std::nullopt;
  const Formula& e = g.body();
  if (!e.is(FormulaKind::Eq)) return std::nullopt;
  const Term& l = e.left();
  if (!l.is(TermKind::Succ) || !l.lhs().is(TermKind::Add)) return std::nullopt;
  const Term& a = l.lhs().lhs();
  const Term& b = l.lhs().rhs();
  if (!a.is(TermKind::Var) || a.index() != 1) return std::nullopt;
  if (!b.is(TermKind::Var) || b.index() != 0) return std::nullopt;
  if (pa::occurs(e.right(), 0) || pa::occurs(e.right(), 1)) return std::nullopt;
  return e.right();
}

struct NotBounded : std::runtime_error {
  NotBounded() : std::runtime_error("oracle: unbounded quantifier") {}
};

// Expands every bounded quantifier into an explicit finite conjunction or
// disjunction.  env[0] is Var 0.
inline bool oracle_delta0(const std::vector<Nat>& env, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Falsum:
      return false;
    case FormulaKind::Eq:
      return oracle_term(env, f.left()) == oracle_term(env, f.right());
    case FormulaKind::Impl:
      return !oracle_delta0(env, f.lhs()) || oracle_delta0(env, f.rhs());
    case FormulaKind::Conj:
      return oracle_delta0(env, f.lhs()) && oracle_delta0(env, f.rhs());
    case FormulaKind::Disj:
      return oracle_delta0(env, f.lhs()) || oracle_delta0(env, f.rhs());
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const bool universal = f.is(FormulaKind::Forall);
      const Formula& inner = f.body();
      const FormulaKind want = universal ? FormulaKind::Impl : FormulaKind::Conj;
      if (!inner.is(want)) throw NotBounded();
      auto bound_term = oracle_guard(inner.lhs());
      if (!bound_term) throw NotBounded();
      // The bound lives two binders down; pad the two slots it cannot see.
      std::vector<Nat> padded{0, 0};
      padded.insert(padded.end(), env.begin(), env.end());
      const Nat n = oracle_term(padded, *bound_term);
      std::vector<Nat> local{0};
      local.insert(local.end(), env.begin(), env.end());
      for (Nat v = 0; v < n; ++v) {
        local[0] = v;
        const bool b = oracle_delta0(local, inner.rhs());
        if (universal && !b) return false;
        if (!universal && b) return true;
      }
      return universal;
    }
  }
  return false;
}

// Brute force over the box [0, fuel]^k for a closed Sigma1 sentence with k
// leading existentials.  Returns the lexicographically first witness tuple
// (outermost first).
inline std::optional<std::vector<std::uint64_t>> oracle_sigma1(
    const Formula& f, std::uint64_t fuel) {
  std::size_t k = 0;
  const Formula* body = &f;
  while (body->is(FormulaKind::Exists)) {
    try {
      (void)oracle_delta0(std::vector<Nat>(k + 8, 0), *body);
      break;  // the remaining block is itself bounded
    } catch (const NotBounded&) {
    }
    body = &body->body();
    ++k;
  }
  std::vector<std::uint64_t> w(k, 0);
  while (true) {
    std::vector<Nat> env(k);
    for (std::size_t i = 0; i < k; ++i) env[i] = w[k - 1 - i];
    if (oracle_delta0(env, *body)) return w;
    std::size_t pos = k;
    while (pos > 0 && w[pos - 1] == fuel) w[--pos] = 0;
    if (pos == 0) return std::nullopt;
    ++w[pos - 1];
  }
}

inline bool oracle_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> oracle_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n)
    if (oracle_is_prime(n)) out.push_back(n);
  return out;
}

// Size measure used for the enumeration coverage check: a variable of index
// i weighs 1 + i, every other node weighs 1.  Finitely many formulas exist
// at each size.
inline std::size_t weighted_size(const Term& t) {
  switch (t.kind()) {
    case TermKind::Var:
      return 1 + t.index();
    case TermKind::Zero:
      return 1;
    case TermKind::Succ:
      return 1 + weighted_size(t.lhs());
    default:
      return 1 + weighted_size(t.lhs()) + weighted_size(t.rhs());
  }
}

inline std::size_t weighted_size(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Falsum:
      return 1;
    case FormulaKind::Eq:
      return 1 + weighted_size(f.left()) + weighted_size(f.right());
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return 1 + weighted_size(f.body());
    default:
      return 1 + weighted_size(f.lhs()) + weighted_size(f.rhs());
  }
}

inline std::vector<Term> all_terms_of_size(std::size_t s) {
  std::vector<Term> out;
  if (s == 0) return out;
  out.push_back(Term::var(s - 1));
  if (s == 1) out.push_back(Term::zero());
  for (const Term& t : all_terms_of_size(s - 1)) out.push_back(Term::succ(t));
  for (std::size_t a = 1; a + 1 < s; ++a)
    for (const Term& l : all_terms_of_size(a))
      for (const Term& r : all_terms_of_size(s - 1 - a)) {
        out.push_back(Term::add(l, r));
        out.push_back(Term::mul(l, r));
      }
  return out;
}

inline std::vector<Formula> all_formulas_of_size(std::size_t s) {
  std::vector<Formula> out;
  if (s == 0) return out;
  if (s == 1) out.push_back(Formula::falsum());
  for (std::size_t a = 1; a + 1 < s; ++a) {
    for (const Term& l : all_terms_of_size(a))
      for (const Term& r : all_terms_of_size(s - 1 - a))
        out.push_back(Formula::eq(l, r));
    for (const Formula& l : all_formulas_of_size(a))
      for (const Formula& r : all_formulas_of_size(s - 1 - a)) {
        out.push_back(Formula::impl(l, r));
        out.push_back(Formula::conj(l, r));
        out.push_back(Formula::disj(l, r));
      }
  }
  for (const Formula& b : all_formulas_of_size(s - 1)) {
    out.push_back(Formula::forall(b));
    out.push_back(Formula::exists(b));
  }
  return out;
}

// Upper bounds on the enumeration index of any term / formula of weighted
// size at most s, computed from the shape of the encoding alone.
inline Nat term_index_bound(std::size_t s) {
  if (s == 0) return 0;
  Nat best = 1 + 4 * Nat(s - 1);  // largest variable
  best = std::max(best, 2 + 4 * term_index_bound(s - 1));
  const Nat inner = s >= 3 ? term_index_bound(s - 2) : Nat(0);
  best = std::max(best, 4 + 4 * pa::cantor_pair(inner, inner));
  return best;
}

inline Nat formula_index_bound(std::size_t s) {
  if (s <= 1) return 0;
  Nat best = 6 + 6 * formula_index_bound(s - 1);
  if (s >= 3) {
    const Nat t = term_index_bound(s - 2);
    best = std::max(best, 1 + 6 * pa::cantor_pair(t, t));
    const Nat f = formula_index_bound(s - 2);
    best = std::max(best, 4 + 6 * pa::cantor_pair(f, f));
  }
  return best;
}

}  // namespace testing_support

#endif  // PA_TESTS_SUPPORT_HPP_
