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

// Text syntax for terms and formulas.
//
//   term    := term '+' term | term '*' term | 'S' term | '(' term ')'
//            | decimal | identifier
//   formula := 'false' | term rel term | '~' formula
//            | formula '/\' formula | formula '\/' formula
//            | formula '->' formula
//            | ('forall' | 'exists') identifier+ '.' formula
//            | '(' formula ')'
//   rel     := '=' | '<' | '<=' | '|'
//
// '*' binds tighter than '+', both associate to the left. Among connectives
// '~' > '/\' > '\/' > '->'; the binary connectives associate to the right and
// a quantifier extends as far right as possible.

#ifndef PA_SURFACE_HPP_
#define PA_SURFACE_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pa/syntax.hpp"

namespace pa {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column,
             std::vector<std::string> expected, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

class UnboundIdentifier : public ParseError {
 public:
  UnboundIdentifier(std::size_t line, std::size_t column, std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// free_vars[i] names free de Bruijn index i.
Term parse_term(std::string_view src,
                const std::vector<std::string>& free_vars = {});
Formula parse_formula(std::string_view src,
                      const std::vector<std::string>& free_vars = {});

// Names v0, v1, ... resolve to free indices 0, 1, ...; this is the naming
// print_formula uses for free variables.
Term parse_term_canonical(std::string_view src);
Formula parse_formula_canonical(std::string_view src);
std::vector<std::string> canonical_free_names(std::size_t n);

// Binders are named x0, x1, ... from the outside in; free index i prints as
// v<i>. Numerals above 0 print as decimals.
std::string print_formula(const Formula& f);
// `depth` is the number of enclosing binders, used to name variables.
std::string print_term(const Term& t, std::size_t depth = 0);

// One formula per line; '#' starts a comment.
std::vector<Formula> parse_formula_file(std::string_view text);
std::string format_formula_file(const std::vector<Formula>& formulas);

}  // namespace pa

#endif  // PA_SURFACE_HPP_
