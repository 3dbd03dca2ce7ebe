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

// Text formats for proofs and certificates.
//
// A proof is one s-expression whose heads are the rule names, e.g.
//   (impl_elim "0 = 0" (impl_intro (axiom 0)) (forall_elim "0" (axiom 6)))
// Embedded formulas and terms are quoted surface syntax in which free
// variables are written v0, v1, ... relative to the node they occur at.
//
// A certificate file lists the axioms a proof uses, one formula per line,
// then a line holding only "---", then the proof. Lines starting with '#'
// are comments. A file without "---" is a bare proof.

#ifndef PA_PROOF_IO_HPP_
#define PA_PROOF_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "pa/certify.hpp"
#include "pa/deduction.hpp"

namespace pa {

std::string print_proof(const Proof& p);
// Throws ParseError.
Proof parse_proof(std::string_view text);

struct CertificateFile {
  std::optional<Context> axioms;
  Proof proof;
};

std::string format_certificate(const Certificate& c);
CertificateFile parse_certificate_file(std::string_view text);

}  // namespace pa

#endif  // PA_PROOF_IO_HPP_
