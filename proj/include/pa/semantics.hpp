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

// Evaluation in the standard model N.
//
// Delta0 formulas are decided outright. Sigma1 sentences are handled by an
// exhaustive witness search over a fuel box [0, fuel]^n; the box is scanned
// in lexicographic order, so the reported witness is the least one.

#ifndef PA_SEMANTICS_HPP_
#define PA_SEMANTICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pa/errors.hpp"
#include "pa/natural.hpp"
#include "pa/syntax.hpp"

namespace pa {

// rho(i) = prefix[i] for i < prefix.size(), `fallback` beyond.
struct Environment {
  std::vector<Nat> prefix;
  Nat fallback = 0;

  Nat operator()(std::size_t index) const {
    return index < prefix.size() ? prefix[index] : fallback;
  }
  // (n ; rho)
  Environment cons(Nat n) const;
};

struct Fuel {
  std::uint64_t bound = 0;
};

Nat eval_term(const Environment& rho, const Term& t);

// Throws NotDelta0 unless classify_delta0(f).
bool eval_delta0(const Environment& rho, const Formula& f);

struct SearchResult {
  // Witnesses for the existential prefix, outermost first.
  std::optional<std::vector<std::uint64_t>> witnesses;
  bool found() const { return witnesses.has_value(); }
};

// Throws NotSigma1 / NotClosed. Parallel scan of the fuel box; returns the
// lexicographically least witness tuple, identical to serial::sat_sigma1.
SearchResult sat_sigma1(const Formula& f, Fuel fuel);

namespace serial {
// Reference implementation: a plain odometer over the fuel box.
SearchResult sat_sigma1(const Formula& f, Fuel fuel);
}  // namespace serial

struct Division {
  Nat quotient;
  Nat remainder;
};

// e = q * d + r with r < d when d > 0; (0, e) when d = 0.
Division euclid(const Nat& e, const Nat& d);

// Whether n * k = d for some k.
// n | d; zero divides only zero.
bool decide_divides(const Nat& n, const Nat& d);

}  // namespace pa

#endif  // PA_SEMANTICS_HPP_
