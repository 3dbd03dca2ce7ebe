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

#ifndef PA_CLASSIFY_HPP_
#define PA_CLASSIFY_HPP_

#include <cstddef>

#include "pa/syntax.hpp"

namespace pa {

// Syntactic Delta0: every quantifier is bounded, i.e. has the shape
// forall v. v < t -> B  or  exists v. v < t /\ B  with v not free in t.
bool classify_delta0(const Formula& f);

// A (possibly empty) block of existentials over a Delta0 body.
bool classify_sigma1(const Formula& f);

// Number of leading existentials that are not part of the Delta0 body, for a
// Sigma1 formula. Bounded existentials at the front count as body.
std::size_t sigma1_prefix_length(const Formula& f);

}  // namespace pa

#endif  // PA_CLASSIFY_HPP_
