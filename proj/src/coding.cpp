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

#include "pa/coding.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

#include "pa/notation.hpp"
#include "pa/semantics.hpp"
#include "pa/surface.hpp"

namespace pa {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns (g, x) with a * x = g (mod m).
std::pair<Nat, Nat> inverse_mod(const Nat& a, const Nat& m) {
  Nat old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    Nat q = old_r / r;
    Nat t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  Nat x = old_s % m;
  if (x < 0) x += m;
  return {old_r, x};
}

Nat factorial(std::uint64_t n) {
  Nat f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Formula pieces in surface syntax; the binders inside each piece get fresh
// names so that pieces can be nested freely.
class PrimeFormulaText {
 public:
  std::string fresh(const char* stem) { return stem + std::to_string(counter_++); }

  // a < b without the unbounded quantifier of the notation.
  std::string less(const std::string& a, const std::string& b) {
    const std::string k = fresh("k");
    return "(exists " + k + ". " + k + " < " + b + " /\\ S (" + a + " + " + k +
           ") = " + b + ")";
  }

  // beta(c, d, i) = r
  std::string beta(const std::string& c, const std::string& d,
                   const std::string& i, const std::string& r) {
    const std::string m = "S (S (" + i + ") * " + d + ")";
    const std::string q = fresh("q");
    return "(" + less(r, m) + " /\\ (exists " + q + ". " + q + " < S " + c +
           " /\\ " + c + " = " + q + " * " + m + " + " + r + "))";
  }

  std::string prime(const std::string& y) {
    const std::string d = fresh("d");
    const std::string k = fresh("k");
    return "(" + less("1", y) + " /\\ (forall " + d + ". " + d + " < S " + y +
           " -> (exists " + k + ". " + k + " < S " + y + " /\\ " + d + " * " +
           k + " = " + y + ") -> " + d + " = 1 \\/ " + d + " = " + y + "))";
  }

  // b is the least prime above a.
  std::string next(const std::string& a, const std::string& b) {
    const std::string z = fresh("z");
    return "(" + less(a, b) + " /\\ " + prime(b) + " /\\ (forall " + z + ". " +
           z + " < " + b + " -> " + less(a, z) + " -> ~" + prime(z) + "))";
  }

 private:
  int counter_ = 0;
};

const Formula& prime_formula() {
  static const Formula f = [] {
    PrimeFormulaText t;
    std::string body = t.prime("y") + " /\\ " + t.beta("c", "d", "0", "2") +
                       " /\\ " + t.beta("c", "d", "x", "y") +
                       " /\\ (forall i. i < x -> exists a. a < S y /\\ "
                       "exists b. b < S y /\\ " +
                       t.beta("c", "d", "i", "a") + " /\\ " +
                       t.beta("c", "d", "S i", "b") + " /\\ " + t.next("a", "b") +
                       ")";
    return parse_formula("exists c d. " + body, {"x", "y"});
  }();
  return f;
}

const Formula& next_formula() {
  static const Formula f = [] {
    PrimeFormulaText t;
    return parse_formula(t.next("a", "b"), {"a", "b"});
  }();
  return f;
}

bool next_holds(std::uint64_t a, std::uint64_t b) {
  return eval_delta0(Environment{{a, b}}, next_formula());
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t n) {
  static std::mutex mu;
  static std::vector<std::uint64_t> table{2};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    std::uint64_t c = table.back() + 1;
    while (!is_prime(c)) ++c;
    table.push_back(c);
  }
  return table[n];
}

FinitePredicate FinitePredicate::from_members(
    std::uint64_t bound, const std::vector<std::uint64_t>& ms) {
  FinitePredicate p{bound, std::vector<bool>(bound, false)};
  for (std::uint64_t u : ms) {
    if (u >= bound)
      throw std::invalid_argument("member " + std::to_string(u) +
                                  " is not below the bound " +
                                  std::to_string(bound));
    p.members[u] = true;
  }
  return p;
}

std::vector<std::uint64_t> FinitePredicate::member_list() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t u = 0; u < bound; ++u)
    if (members[u]) out.push_back(u);
  return out;
}

Code encode(const FinitePredicate& p) {
  Code c{1, p.bound};
  for (std::uint64_t u = 0; u < p.bound; ++u)
    if (p.members[u]) c.value *= nth_prime(u);
  return c;
}

FinitePredicate decode(const Code& c) {
  if (c.value < 1) throw InvalidCode("a code is a positive product of primes");
  FinitePredicate p{c.bound, std::vector<bool>(c.bound, false)};
  Nat rest = c.value;
  for (std::uint64_t u = 0; u < c.bound; ++u) {
    const std::uint64_t q = nth_prime(u);
    p.members[u] = decide_divides(q, c.value);
    while (rest % q == 0) rest /= q;
  }
  if (rest != 1)
    throw InvalidCode("code " + to_string(c.value) +
                      " has a prime factor at or above pi_" +
                      std::to_string(c.bound) + " = " +
                      std::to_string(nth_prime(c.bound)));
  return p;
}

MembershipStructure MembershipStructure::primes() {
  return {1, [](std::uint64_t n, const Nat& c) { return c * nth_prime(n); },
          [](std::uint64_t x, const Nat& c) {
            return decide_divides(nth_prime(x), c);
          }};
}

MembershipStructure MembershipStructure::bitmask() {
  return {0,
          [](std::uint64_t n, const Nat& c) {
            Nat out = c;
            boost::multiprecision::bit_set(out, static_cast<unsigned>(n));
            return out;
          },
          [](std::uint64_t x, const Nat& c) {
            return boost::multiprecision::bit_test(c, static_cast<unsigned>(x));
          }};
}

Nat abstract_encode(const FinitePredicate& p, const MembershipStructure& s) {
  Nat c = s.empty;
  for (std::uint64_t u = 0; u < p.bound; ++u)
    if (p.members[u]) c = s.extend(u, c);
  return c;
}

Nat beta(const Nat& c, const Nat& d, const Nat& i) {
  return c % (1 + (i + 1) * d);
}

BetaPair beta_find(const std::vector<Nat>& seq) {
  if (seq.empty()) return {0, 1};
  Nat top = seq.size();
  for (const Nat& a : seq) top = std::max(top, a);
  const Nat d = factorial(static_cast<std::uint64_t>(top) + 1);
  Nat c = 0, modulus = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Nat m = 1 + (i + 1) * d;
    auto [g, inv] = inverse_mod(modulus, m);
    if (g != 1) throw std::logic_error("beta_find: moduli are not coprime");
    Nat delta = (seq[i] - c) % m;
    if (delta < 0) delta += m;
    c += modulus * ((delta * inv) % m);
    modulus *= m;
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (beta(c, d, i) != seq[i])
      throw std::logic_error("beta_find: verification failed");
  return {c, d};
}

Formula build_prime_formula() { return prime_formula(); }

bool holds_prime_formula(std::uint64_t n, std::uint64_t m) {
  const Formula& body = prime_formula().body().body();
  std::vector<std::uint64_t> chain{2};
  auto finish = [&]() {
    if (chain.back() != m) return false;
    std::vector<Nat> seq(chain.begin(), chain.end());
    BetaPair p = beta_find(seq);
    return eval_delta0(Environment{{p.d, p.c, n, m}}, body);
  };
  // Entries of an accepted chain never exceed m, which bounds the search.
  auto grow = [&](auto&& self) -> bool {
    if (chain.size() == n + 1) return finish();
    const std::uint64_t a = chain.back();
    for (std::uint64_t b = a + 1; b <= m; ++b) {
      if (!next_holds(a, b)) continue;
      chain.push_back(b);
      const bool ok = self(self);
      chain.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return grow(grow);
}

Formula represent_finite_predicate(const FinitePredicate& p) {
  std::vector<Formula> ds;
  for (std::uint64_t u : p.member_list())
    ds.push_back(Formula::eq(Term::var(0), num(u)));
  return disjunction(ds);
}

Certificate certify_instance(const FinitePredicate& p, std::uint64_t u) {
  const Formula inst = single_subst(represent_finite_predicate(p), num(u));
  if (p.holds(u)) {
    auto c = certify_sigma1(inst, Fuel{0});
    if (!c) throw std::logic_error("member instance did not certify");
    return *c;
  }
  auto c = certify_refutation(inst);
  if (!c) throw std::logic_error("non-member instance holds");
  return *c;
}

}  // namespace pa
