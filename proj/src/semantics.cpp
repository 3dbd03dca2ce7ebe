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

#include "pa/semantics.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

#include "pa/classify.hpp"
#include "pa/notation.hpp"

namespace pa {

Environment Environment::cons(Nat n) const {
  Environment out;
  out.prefix.reserve(prefix.size() + 1);
  out.prefix.push_back(std::move(n));
  out.prefix.insert(out.prefix.end(), prefix.begin(), prefix.end());
  out.fallback = fallback;
  return out;
}

namespace {

struct Linear {
  Nat constant;
  Nat coefficient;
};

// Evaluates under a stack of bound values (back = Var 0) on top of rho.
class Evaluator {
 public:
  explicit Evaluator(const Environment& rho) : rho_(rho) {}

  void push(Nat n) { stack_.push_back(std::move(n)); }
  void pop() { stack_.pop_back(); }

  Nat var(std::size_t i) const {
    if (i < stack_.size()) return stack_[stack_.size() - 1 - i];
    return rho_(i - stack_.size());
  }

  Nat term(const Term& t) const {
    if (auto n = t.numeral()) return *n;
    switch (t.kind()) {
      case TermKind::Var:
        return var(t.index());
      case TermKind::Zero:
        return 0;
      case TermKind::Succ: {
        // Numerals are long S-chains; walk them without recursing.
        std::uint64_t k = 0;
        const Term* cur = &t;
        while (cur->is(TermKind::Succ)) {
          ++k;
          cur = &cur->lhs();
        }
        return term(*cur) + k;
      }
      case TermKind::Add:
        return term(t.lhs()) + term(t.rhs());
      case TermKind::Mul:
        return term(t.lhs()) * term(t.rhs());
    }
    return 0;
  }

  bool formula(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::Falsum:
        return false;
      case FormulaKind::Eq:
        return term(f.left()) == term(f.right());
      case FormulaKind::Impl:
        return !formula(f.lhs()) || formula(f.rhs());
      case FormulaKind::Conj:
        return formula(f.lhs()) && formula(f.rhs());
      case FormulaKind::Disj:
        return formula(f.lhs()) || formula(f.rhs());
      case FormulaKind::Forall: {
        auto bq = match_bounded_forall(f);
        if (!bq) throw NotDelta0();
        const Nat bound = term(bq->bound);
        for (Nat v = 0; v < bound; ++v) {
          push(v);
          const bool ok = formula(bq->body);
          pop();
          if (!ok) return false;
        }
        return true;
      }
      case FormulaKind::Exists: {
        auto bq = match_bounded_exists(f);
        if (!bq) throw NotDelta0();
        const Nat bound = term(bq->bound);
        if (auto decided = solve_exists(bq->body, bound)) return *decided;
        for (Nat v = 0; v < bound; ++v) {
          push(v);
          const bool ok = formula(bq->body);
          pop();
          if (ok) return true;
        }
        return false;
      }
    }
    return false;
  }

 private:
  // Linear form of t in the not-yet-pushed bound variable (Var 0).
  std::optional<Linear> linear(const Term& t) const {
    if (auto n = t.numeral()) return Linear{*n, 0};
    switch (t.kind()) {
      case TermKind::Var:
        if (t.index() == 0) return Linear{0, 1};
        return Linear{var(t.index() - 1), 0};
      case TermKind::Zero:
        return Linear{0, 0};
      case TermKind::Succ: {
        std::uint64_t k = 0;
        const Term* cur = &t;
        while (cur->is(TermKind::Succ)) {
          ++k;
          cur = &cur->lhs();
        }
        auto a = linear(*cur);
        if (a) a->constant += k;
        return a;
      }
      case TermKind::Add: {
        auto a = linear(t.lhs());
        if (!a) return a;
        auto b = linear(t.rhs());
        if (!b) return b;
        return Linear{a->constant + b->constant, a->coefficient + b->coefficient};
      }
      case TermKind::Mul: {
        auto a = linear(t.lhs());
        if (!a) return a;
        auto b = linear(t.rhs());
        if (!b) return b;
        if (a->coefficient != 0 && b->coefficient != 0) return std::nullopt;
        return Linear{a->constant * b->constant,
                      a->constant * b->coefficient + a->coefficient * b->constant};
      }
    }
    return std::nullopt;
  }

  static void conjuncts(const Formula& f, std::vector<const Formula*>& out) {
    if (f.is(FormulaKind::Conj)) {
      conjuncts(f.lhs(), out);
      conjuncts(f.rhs(), out);
    } else {
      out.push_back(&f);
    }
  }

  // A top-level equation conjunct that is linear in the bound variable pins
  // down the only candidate witness.
  std::optional<bool> solve_exists(const Formula& body, const Nat& bound) {
    std::vector<const Formula*> parts;
    conjuncts(body, parts);
    for (const Formula* part : parts) {
      if (!part->is(FormulaKind::Eq)) continue;
      auto l = linear(part->left());
      if (!l) continue;
      auto r = linear(part->right());
      if (!r) continue;
      if (l->coefficient == r->coefficient) {
        if (l->constant != r->constant) return false;
        continue;
      }
      const Nat num = r->constant - l->constant;
      const Nat den = l->coefficient - r->coefficient;
      if (num % den != 0) return false;
      const Nat v = num / den;
      if (v < 0 || v >= bound) return false;
      push(v);
      const bool ok = formula(body);
      pop();
      return ok;
    }
    return std::nullopt;
  }

  const Environment& rho_;
  std::vector<Nat> stack_;
};

struct Sigma1Shape {
  std::size_t width;
  const Formula* body;
};

Sigma1Shape sigma1_shape(const Formula& f) {
  if (!f.closed()) throw NotClosed();
  if (!classify_sigma1(f)) throw NotSigma1();
  const std::size_t n = sigma1_prefix_length(f);
  const Formula* body = &f;
  for (std::size_t i = 0; i < n; ++i) body = &body->body();
  return {n, body};
}

bool holds_at(const Formula& body, const std::vector<std::uint64_t>& w) {
  static const Environment empty;
  Evaluator ev(empty);
  for (std::uint64_t x : w) ev.push(x);
  return ev.formula(body);
}

}  // namespace

Nat eval_term(const Environment& rho, const Term& t) {
  return Evaluator(rho).term(t);
}

bool eval_delta0(const Environment& rho, const Formula& f) {
  if (!classify_delta0(f)) throw NotDelta0();
  return Evaluator(rho).formula(f);
}

namespace serial {

SearchResult sat_sigma1(const Formula& f, Fuel fuel) {
  const Sigma1Shape shape = sigma1_shape(f);
  std::vector<std::uint64_t> w(shape.width, 0);
  while (true) {
    if (holds_at(*shape.body, w)) return {w};
    // Odometer: the innermost witness (last) varies fastest.
    std::size_t i = w.size();
    while (i > 0 && w[i - 1] == fuel.bound) w[--i] = 0;
    if (i == 0) return {};
    ++w[i - 1];
  }
}

}  // namespace serial

SearchResult sat_sigma1(const Formula& f, Fuel fuel) {
  const Sigma1Shape shape = sigma1_shape(f);
  const unsigned __int128 radix = static_cast<unsigned __int128>(fuel.bound) + 1;
  unsigned __int128 total = 1;
  for (std::size_t i = 0; i < shape.width; ++i) {
    total *= radix;
    if (total > std::numeric_limits<std::int64_t>::max())
      return serial::sat_sigma1(f, fuel);
  }
  const auto count = static_cast<std::int64_t>(total);
  const std::int64_t block =
      std::max<std::int64_t>(256, 64 * static_cast<std::int64_t>(omp_get_max_threads()));

  auto decode = [&](std::int64_t idx) {
    std::vector<std::uint64_t> w(shape.width);
    auto rest = static_cast<std::uint64_t>(idx);
    for (std::size_t i = shape.width; i-- > 0;) {
      w[i] = rest % static_cast<std::uint64_t>(radix);
      rest /= static_cast<std::uint64_t>(radix);
    }
    return w;
  };

  for (std::int64_t lo = 0; lo < count; lo += block) {
    const std::int64_t hi = std::min(count, lo + block);
    std::int64_t best = hi;
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
    for (std::int64_t idx = lo; idx < hi; ++idx) {
      if (idx >= best) continue;
      if (holds_at(*shape.body, decode(idx))) best = std::min(best, idx);
    }
    if (best < hi) return {decode(best)};
  }
  return {};
}

Division euclid(const Nat& e, const Nat& d) {
  if (d == 0) return {0, e};
  return {e / d, e % d};
}

bool decide_divides(const Nat& n, const Nat& d) {
  if (n == 0) return d == 0;
  return euclid(d, n).remainder == 0;
}

}  // namespace pa
