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

#include "doctest.h"
#include "pa/certify.hpp"
#include "pa/proof_io.hpp"
#include "pa/surface.hpp"
#include "support.hpp"

using namespace pa;

TEST_CASE("print_proof format") {
  CHECK(print_proof(Proof::impl_intro(Proof::axiom(0))) == "(impl_intro\n (axiom 0))\n");
  CHECK(print_proof(Proof::forall_elim(parse_term("S 0"), Proof::axiom(2))) ==
        "(forall_elim \"1\"\n (axiom 2))\n");
}

TEST_CASE("parse_proof") {
  CHECK(parse_proof("(impl_intro (axiom 0))") == Proof::impl_intro(Proof::axiom(0)));
  CHECK(parse_proof("; comment\n(forall_elim \"S 0\" (axiom 2))") ==
        Proof::forall_elim(num(1), Proof::axiom(2)));
  CHECK(parse_proof("(peirce \"0 = 0\" \"false\")") ==
        Proof::peirce(parse_formula("0 = 0"), Formula::falsum()));
  CHECK_THROWS_AS(parse_proof("(impl_intro (axiom 0)"), ParseError);
  CHECK_THROWS_AS(parse_proof("(no_such (axiom 0))"), ParseError);
  CHECK_THROWS_AS(parse_proof("(axiom x)"), ParseError);
  CHECK_THROWS_AS(parse_proof("(forall_elim \"y\" (axiom 0))"), ParseError);
  CHECK_THROWS_AS(parse_proof("(axiom 0) (axiom 1)"), ParseError);
}

TEST_CASE("property: proof printing round trips") {
  for (std::uint64_t n = 0; n < 3000; n += 7) {
    const Proof p = enumerate_proof(Nat(n) * 7919);
    CHECK(parse_proof(print_proof(p)) == p);
  }
  const Certificate c = order_asymmetry();
  CHECK(parse_proof(print_proof(c.proof())) == c.proof());
}

TEST_CASE("certificate files") {
  const auto c = certify_sigma1(parse_formula("exists x. x * x = 4"), Fuel{10});
  REQUIRE(c.has_value());
  const std::string text = format_certificate(*c);
  const CertificateFile f = parse_certificate_file(text);
  REQUIRE(f.axioms.has_value());
  CHECK(*f.axioms == c->axioms_used());
  CHECK(f.proof == c->proof());

  const CertificateFile bare = parse_certificate_file("# note\n(impl_intro (axiom 0))\n");
  CHECK_FALSE(bare.axioms.has_value());
  CHECK(bare.proof == Proof::impl_intro(Proof::axiom(0)));

  try {
    parse_certificate_file("0 = 0\n---\n(axiom 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() >= 3);
  }
}
