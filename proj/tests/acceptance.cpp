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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.  Usage: acceptance [path-to-arith-kernel]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pa/arithmetic.hpp"
#include "pa/certify.hpp"
#include "pa/classify.hpp"
#include "pa/coding.hpp"
#include "pa/deduction.hpp"
#include "pa/notation.hpp"
#include "pa/semantics.hpp"
#include "pa/surface.hpp"
#include "support.hpp"

using namespace pa;
namespace ts = testing_support;

namespace {

std::string g_binary = ARITH_KERNEL_BIN;
std::vector<Certificate> g_certificates;  // every certificate built here

struct Verdict {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Formula F(const char* s) { return parse_formula_canonical(s); }

bool certificate_valid(const Certificate& c) {
  return theory_check(c.axioms_used(), c.proof(), c.goal(), Flavor::Intuitionistic)
      .ok();
}

Verdict coding_round_trip() {
  Verdict v;
  const auto primes = ts::oracle_primes(11);
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    std::vector<std::uint64_t> ms;
    Nat product = 1;
    for (std::uint64_t u = 0; u < 10; ++u)
      if (mask >> u & 1) {
        ms.push_back(u);
        product *= primes[u];
      }
    const FinitePredicate p = FinitePredicate::from_members(10, ms);
    const Code c = encode(p);
    if (c.value != product) v.fail("code differs from prime product");
    if (!(decode(c) == p)) v.fail("decode(encode(p)) != p");
    // Strip the allowed primes; whatever is left must be 1.
    Nat rest = c.value;
    for (std::uint64_t u = 0; u < 10; ++u)
      while (rest % primes[u] == 0) rest /= primes[u];
    if (rest != 1) v.fail("prime at or above pi_10 divides a code");
  }
  return v;
}

Verdict substitution_laws() {
  Verdict v;
  ts::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = ts::random_formula(rng, 6);
    const auto s = ts::random_subst(rng);
    const auto t = ts::random_subst(rng);
    if (!(subst_form(f, Substitution::identity()) == f)) v.fail("identity law");
    if (!(subst_form(subst_form(f, s), t) == subst_form(f, compose(s, t))))
      v.fail("composition law");
    const Term u = ts::random_term(rng, 2, 3);
    if (!(subst_form(shift_form(f), Substitution::cons(u, Substitution::identity())) == f))
      v.fail("shift-cons cancellation");
  }
  return v;
}

Verdict checker_ground_truth() {
  Verdict v;
  const Formula phi = F("0 = 0");
  if (!check({}, Proof::impl_intro(Proof::axiom(0)), Formula::impl(phi, phi),
             Flavor::Intuitionistic))
    v.fail("identity derivation rejected");
  const Formula psi = Formula::falsum();
  const Formula peirce =
      Formula::impl(Formula::impl(Formula::impl(phi, psi), phi), phi);
  if (!check({}, Proof::peirce(phi, psi), peirce, Flavor::Classical))
    v.fail("Peirce rejected classically");
  if (check({}, Proof::peirce(phi, psi), peirce, Flavor::Intuitionistic))
    v.fail("Peirce accepted intuitionistically");
  const auto q = axioms(TheoryName::Q);
  if (q.size() != 13) v.fail("Q does not have 13 axioms");
  for (std::size_t i = 0; i < q.size(); ++i)
    if (!check(q, Proof::axiom(i), q[i], Flavor::Intuitionistic))
      v.fail("Q axiom " + std::to_string(i) + " not derivable");
  return v;
}

Verdict sigma1_completeness() {
  Verdict v;
  constexpr std::uint64_t kFuel = 20;
  ts::Rng rng(314159);
  std::set<std::string> seen;
  int trues = 0, falses = 0, attempts = 0;
  while ((trues < 200 || falses < 200) && attempts < 200000) {
    ++attempts;
    const Formula f = ts::random_sigma1_sentence(rng, 4, 10);
    if (!seen.insert(print_formula(f)).second) continue;
    const bool truth = ts::oracle_sigma1(f, kFuel).has_value();
    if (truth ? trues >= 200 : falses >= 200) continue;
    const auto c = certify_sigma1(f, Fuel{kFuel});
    if (truth) {
      ++trues;
      if (!c) v.fail("no certificate for true " + print_formula(f));
      else if (!(c->goal() == f) || !certificate_valid(*c))
        v.fail("bad certificate for " + print_formula(f));
      else
        g_certificates.push_back(*c);
    } else {
      ++falses;
      if (c) v.fail("certificate for false " + print_formula(f));
    }
  }
  if (trues < 200 || falses < 200) v.fail("generator could not fill the corpus");
  return v;
}

Verdict soundness() {
  Verdict v;
  // Extra certificates from the other producers.
  g_certificates.push_back(prove_closed_term_value(parse_term("2 + 2")));
  g_certificates.push_back(prove_closed_term_value(parse_term("3 * 0")));
  g_certificates.push_back(prove_numeral_neq(2, 5));
  g_certificates.push_back(order_asymmetry());
  if (auto r = certify_refutation(F("forall x. x < 3 -> x = 1")))
    g_certificates.push_back(*r);
  if (auto e = enumerate_proofs(Theory::q(), F("false -> false"), 100))
    g_certificates.push_back(*e);
  const auto two = FinitePredicate::from_members(3, {0, 2});
  for (std::uint64_t u = 0; u < 3; ++u) g_certificates.push_back(certify_instance(two, u));

  std::size_t delta0 = 0;
  const Theory pa_all = Theory::pa();
  for (const Certificate& c : g_certificates) {
    if (!certificate_valid(c)) v.fail("certificate does not re-check");
    for (const Formula& a : c.axioms_used())
      if (!Theory::q().contains(a) && !pa_all.contains(a))
        v.fail("axiom outside Q and PA");
    if (c.goal().closed() && classify_delta0(c.goal())) {
      ++delta0;
      if (!ts::oracle_delta0({}, c.goal()))
        v.fail("false conclusion " + print_formula(c.goal()));
    } else if (c.goal().closed() && classify_sigma1(c.goal())) {
      if (!ts::oracle_sigma1(c.goal(), 20))
        v.fail("Sigma1 conclusion without witness " + print_formula(c.goal()));
    }
  }
  if (delta0 == 0) v.fail("no closed Delta0 conclusions in the corpus");
  v.detail += (v.ok ? "" : "; ") + std::to_string(g_certificates.size()) +
              " certificates, " + std::to_string(delta0) + " closed Delta0";
  return v;
}

Verdict euclid_and_divides() {
  Verdict v;
  for (int e = 0; e <= 50; ++e)
    for (int d = 1; d <= 10; ++d) {
      int count = 0, q0 = -1, r0 = -1;
      for (int q = 0; q <= e; ++q)
        for (int r = 0; r < d; ++r)
          if (q * d + r == e) ++count, q0 = q, r0 = r;
      const auto got = euclid(e, d);
      if (count != 1 || got.quotient != q0 || got.remainder != r0)
        v.fail("euclid(" + std::to_string(e) + "," + std::to_string(d) + ")");
    }
  for (std::uint64_t n = 0; n <= 20; ++n)
    for (std::uint64_t d = 0; d <= 20; ++d)
      if (decide_divides(n, d) != sat_sigma1(divides(num(n), num(d)), Fuel{d + 1}).found())
        v.fail("divides(" + std::to_string(n) + "," + std::to_string(d) + ")");
  return v;
}

Verdict prime_grid() {
  Verdict v;
  const auto primes = ts::oracle_primes(7);
  if (!classify_sigma1(build_prime_formula())) v.fail("Pi is not Sigma1");
  for (std::uint64_t n = 0; n <= 6; ++n)
    for (std::uint64_t m = 0; m <= 20; ++m)
      if (holds_prime_formula(n, m) != (m == primes[n]))
        v.fail("Pi(" + std::to_string(n) + "," + std::to_string(m) + ")");
  return v;
}

Verdict beta_round_trip() {
  Verdict v;
  ts::Rng rng(8);
  for (int i = 0; i < 500; ++i) {
    std::vector<Nat> seq(ts::uniform(rng, 0, 4));
    for (Nat& x : seq) x = ts::uniform(rng, 0, 20);
    const BetaPair p = beta_find(seq);
    for (std::size_t j = 0; j < seq.size(); ++j)
      if (beta(p.c, p.d, j) != seq[j]) v.fail("beta round trip");
  }
  return v;
}

Verdict rosser_checks() {
  Verdict v;
  const std::pair<const char*, const char*> pairs[] = {
      {"v0 = v1", "S v0 = v1"},
      {"v0 * v0 = v1", "exists k. k < v1 /\\ v0 + k = v1"},
      {"false", "v1 = v1"},
  };
  for (const auto& [sa, sb] : pairs) {
    const Formula a = F(sa), b = F(sb);
    if (!classify_sigma1(rosser(a, b))) v.fail("rosser output not Sigma1");
    const Certificate c = rosser_disjointness_proof(a, b);
    if (!certificate_valid(c) || !(c.goal() == rosser_disjointness_goal(a, b)))
      v.fail("disjointness certificate");
    g_certificates.push_back(c);
  }
  ts::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const Formula a = ts::random_delta0(rng, 3, 2, 6, 6);
    const Formula b = ts::random_delta0(rng, 3, 2, 6, 6);
    const Formula ab = rosser(a, b), ba = rosser(b, a);
    if (!classify_sigma1(ab)) v.fail("rosser output not Sigma1");
    for (std::uint64_t n = 0; n <= 10; ++n) {
      const bool x = sat_sigma1(single_subst(ab, num(n)), Fuel{20}).found();
      const bool y = sat_sigma1(single_subst(ba, num(n)), Fuel{20}).found();
      if (x && y) v.fail("both Rosser formulas hold at " + std::to_string(n));
    }
  }
  return v;
}

int run_cli(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Verdict parser_round_trip() {
  Verdict v;
  ts::Rng rng(10);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = ts::random_formula(rng, 6);
    if (!(parse_formula_canonical(print_formula(f)) == f))
      v.fail("round trip: " + print_formula(f));
  }
  for (const Formula& a : axioms(TheoryName::Q))
    if (!(parse_formula_canonical(print_formula(a)) == a)) v.fail("Q axiom round trip");
  const auto dir = std::filesystem::temp_directory_path() / "arith-kernel-acceptance";
  std::filesystem::create_directories(dir);
  const std::string prf = (dir / "p.prf").string();
  if (run_cli("certify 'exists x. x * x = 4' --fuel 10 --out " + prf) != 0)
    v.fail("cli certify failed");
  if (run_cli("check " + prf + " --goal 'exists x. x * x = 4' --theory q --flavor int") != 0)
    v.fail("cli check failed");
  return v;
}

Verdict enumeration() {
  Verdict v;
  ts::Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const Formula f = ts::random_formula(rng, 6);
    if (!(enumerate_formula(formula_index(f)) == f)) v.fail("inverse law");
  }
  std::vector<Formula> small;
  for (std::size_t s = 1; s <= 2; ++s)
    for (const Formula& f : ts::all_formulas_of_size(s)) small.push_back(f);
  const Nat bound = ts::formula_index_bound(2);
  std::vector<Formula> found;
  for (Nat n = 0; n <= bound; ++n) {
    const Formula f = enumerate_formula(n);
    if (ts::weighted_size(f) <= 2) found.push_back(f);
  }
  for (const Formula& f : small) {
    bool hit = false;
    for (const Formula& g : found) hit |= g == f;
    if (!hit) v.fail("missing " + print_formula(f));
  }
  v.detail += (v.ok ? "" : "; ") + std::to_string(small.size()) +
              " formulas of size <= 2 below index " + to_string(bound);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_binary = argv[1];
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"coding round trip and prime-product oracle", coding_round_trip},
      {"substitution laws", substitution_laws},
      {"checker ground truth", checker_ground_truth},
      {"Sigma1 completeness at desk scale", sigma1_completeness},
      {"soundness of every certificate", soundness},
      {"euclid and divisibility", euclid_and_divides},
      {"prime formula grid", prime_grid},
      {"beta function round trip", beta_round_trip},
      {"Rosser formulas", rosser_checks},
      {"parser round trip and CLI pipeline", parser_round_trip},
      {"formula enumeration", enumeration},
  };
  // Rosser certificates feed the soundness corpus, so run 9 before 5 but
  // report in order.
  std::vector<Verdict> results(criteria.size());
  std::vector<double> seconds(criteria.size());
  const std::size_t order[] = {0, 1, 2, 3, 8, 4, 5, 6, 7, 9, 10};
  for (std::size_t i : order) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
      results[i] = criteria[i].second();
    } catch (const std::exception& e) {
      results[i].fail(std::string("exception: ") + e.what());
    }
    seconds[i] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    all &= results[i].ok;
    std::ostringstream line;
    line << (results[i].ok ? "PASS" : "FAIL") << " " << (i + 1) << " "
         << criteria[i].first << " (" << std::fixed;
    line.precision(2);
    line << seconds[i] << "s)";
    if (!results[i].detail.empty()) line << ": " << results[i].detail;
    std::cout << line.str() << "\n";
  }
  return all ? 0 : 1;
}
