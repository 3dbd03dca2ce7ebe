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

#include "pa/classify.hpp"

#include "pa/notation.hpp"

namespace pa {

bool classify_delta0(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Falsum:
    case FormulaKind::Eq:
      return true;
    case FormulaKind::Impl:
    case FormulaKind::Conj:
    case FormulaKind::Disj:
      return classify_delta0(f.lhs()) && classify_delta0(f.rhs());
    case FormulaKind::Forall:
      if (auto bq = match_bounded_forall(f)) return classify_delta0(bq->body);
      return false;
    case FormulaKind::Exists:
      if (auto bq = match_bounded_exists(f)) return classify_delta0(bq->body);
      return false;
  }
  return false;
}

std::size_t sigma1_prefix_length(const Formula& f) {
  std::size_t n = 0;
  const Formula* cur = &f;
  while (cur->is(FormulaKind::Exists) && !classify_delta0(*cur)) {
    ++n;
    cur = &cur->body();
  }
  return n;
}

bool classify_sigma1(const Formula& f) {
  const Formula* cur = &f;
  while (!classify_delta0(*cur)) {
    if (!cur->is(FormulaKind::Exists)) return false;
    cur = &cur->body();
  }
  return true;
}

}  // namespace pa
