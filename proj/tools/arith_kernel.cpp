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

// arith-kernel: command-line front end.
//
// Exit codes: 0 success, 1 negative verdict (check failed, nothing found
// within fuel, invalid code), 2 usage or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pa/arithmetic.hpp"
#include "pa/certify.hpp"
#include "pa/classify.hpp"
#include "pa/coding.hpp"
#include "pa/deduction.hpp"
#include "pa/proof_io.hpp"
#include "pa/semantics.hpp"
#include "pa/surface.hpp"

namespace {

using namespace pa;

constexpr std::uint64_t kDefaultFuel = 1000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Formula single_formula_file(const std::string& path) {
  std::vector<Formula> fs = parse_formula_file(read_file(path));
  if (fs.size() != 1)
    throw UsageError(path + ": expected exactly one formula, found " +
                     std::to_string(fs.size()));
  return fs.front();
}

// Inline formula, or @path for a formula file.
Formula formula_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return single_formula_file(arg.substr(1));
  return parse_formula_canonical(arg);
}

std::vector<std::uint64_t> number_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 18)
      throw UsageError("not a natural number: '" + item + "'");
    out.push_back(std::stoull(item));
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

std::uint64_t resolve_fuel(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("ARITH_KERNEL_FUEL")) {
    auto v = number_list(env);
    if (v.size() != 1) throw UsageError("ARITH_KERNEL_FUEL must be a natural number");
    return v.front();
  }
  return kDefaultFuel;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

Theory theory_named(const std::string& name) {
  if (name == "fa") return Theory::fa();
  if (name == "q") return Theory::q();
  if (name == "pa") return Theory::pa();
  return {TheoryName::FA, {}, {}};
}

int run_check(const std::string& file, const std::string& goal_text,
              const std::string& theory, const std::string& flavor) {
  const Formula goal = formula_arg(goal_text);
  const CertificateFile cf = parse_certificate_file(read_file(file));
  const bool none = theory == "none";
  const Theory t = theory_named(theory);
  Context ctx;
  if (cf.axioms) {
    for (const Formula& a : *cf.axioms) {
      if (none || !t.contains(a)) {
        std::cerr << "axiom not in theory " << theory << ": " << print_formula(a)
                  << "\n";
        return 1;
      }
    }
    ctx = *cf.axioms;
  } else if (!none) {
    ctx = t.axioms();
  }
  const Flavor fl = flavor == "class" ? Flavor::Classical : Flavor::Intuitionistic;
  CheckResult r = check(ctx, cf.proof, goal, fl);
  if (!r.ok()) {
    std::cerr << "check failed " << r.error->describe() << "\n";
    return 1;
  }
  std::cout << "ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checker and certifying prover for first-order arithmetic",
               "arith-kernel"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  int result = 0;
  std::string path, formula, goal, out, alpha_path, beta_path, env, members,
      index_text;
  std::string theory = "q", flavor = "int";
  std::optional<std::uint64_t> fuel;
  std::uint64_t bound = 0, upto = 0;
  bool disjointness = false;

  auto* parse = app.add_subcommand("parse", "Parse a formula file and print it canonically");
  parse->add_option("file", path, "formula file")->required();
  parse->callback([&] {
    std::cout << format_formula_file(parse_formula_file(read_file(path)));
  });

  auto* print = app.add_subcommand("print", "Print a formula canonically");
  print->add_option("formula", formula, "formula or @file")->required();
  print->callback([&] { std::cout << print_formula(formula_arg(formula)) << "\n"; });

  auto* chk = app.add_subcommand("check", "Check a proof or certificate file");
  chk->add_option("proof-file", path, "proof or certificate file")->required();
  chk->add_option("--goal", goal, "goal formula or @file")->required();
  chk->add_option("--theory", theory, "axioms available to the proof")
      ->check(CLI::IsMember({"none", "fa", "q", "pa"}));
  chk->add_option("--flavor", flavor, "deduction flavor")
      ->check(CLI::IsMember({"int", "class"}));
  chk->callback([&] { result = run_check(path, goal, theory, flavor); });

  auto* eval = app.add_subcommand("eval", "Evaluate a Delta0 formula in the standard model");
  eval->add_option("formula", formula, "formula or @file")->required();
  eval->add_option("--env", env, "values of v0,v1,... (default 0)");
  eval->callback([&] {
    Environment rho;
    for (std::uint64_t v : number_list(env)) rho.prefix.push_back(v);
    std::cout << (eval_delta0(rho, formula_arg(formula)) ? "true" : "false") << "\n";
  });

  auto* search = app.add_subcommand("search", "Search witnesses for a closed Sigma1 sentence");
  search->add_option("formula", formula, "formula or @file")->required();
  search->add_option("--fuel", fuel, "largest witness value tried");
  search->callback([&] {
    const std::uint64_t f = resolve_fuel(fuel);
    SearchResult r = sat_sigma1(formula_arg(formula), Fuel{f});
    if (!r.found()) {
      std::cerr << "not found within fuel " << f << "\n";
      result = 1;
      return;
    }
    std::cout << join(*r.witnesses) << "\n";
  });

  auto* cert = app.add_subcommand("certify", "Emit a Q-certificate for a true closed Sigma1 sentence");
  cert->add_option("formula", formula, "formula or @file")->required();
  cert->add_option("--fuel", fuel, "largest witness value tried");
  cert->add_option("--out", out, "certificate file (default stdout)");
  cert->callback([&] {
    const std::uint64_t f = resolve_fuel(fuel);
    auto c = certify_sigma1(formula_arg(formula), Fuel{f});
    if (!c) {
      std::cerr << "not found within fuel " << f << "\n";
      result = 1;
      return;
    }
    write_output(format_certificate(*c), out);
  });

  auto* enc = app.add_subcommand("encode", "Prime-product code of a finite predicate");
  enc->add_option("--bound", bound, "predicate bound")->required();
  enc->add_option("--members", members, "comma-separated members")->required();
  enc->callback([&] {
    auto p = FinitePredicate::from_members(bound, number_list(members));
    std::cout << to_string(encode(p).value) << "\n";
  });

  auto* dec = app.add_subcommand("decode", "Members of a prime-product code");
  dec->add_option("--bound", bound, "predicate bound")->required();
  dec->add_option("code", index_text, "code")->required();
  dec->callback([&] {
    if (index_text.empty() || index_text.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("not a natural number: '" + index_text + "'");
    try {
      FinitePredicate p = decode(Code{parse_nat(index_text), bound});
      std::cout << join(p.member_list()) << "\n";
    } catch (const InvalidCode& e) {
      std::cerr << "invalid code: " << e.what() << "\n";
      result = 1;
    }
  });

  auto* primes = app.add_subcommand("primes", "List the primes up to N");
  primes->add_option("--upto", upto, "largest value")->required();
  primes->callback([&] {
    for (std::uint64_t i = 0; nth_prime(i) <= upto; ++i)
      std::cout << nth_prime(i) << "\n";
  });

  auto* ros = app.add_subcommand("rosser", "Rosser formula of two binary formulas");
  ros->add_option("alpha-file", alpha_path, "formula file for alpha(v0 = t, v1 = x)")->required();
  ros->add_option("beta-file", beta_path, "formula file for beta")->required();
  ros->add_flag("--disjointness", disjointness,
                "emit the disjointness certificate instead of the formula");
  ros->add_option("--out", out, "output file (default stdout)");
  ros->callback([&] {
    const Formula a = single_formula_file(alpha_path);
    const Formula b = single_formula_file(beta_path);
    if (disjointness)
      write_output(format_certificate(rosser_disjointness_proof(a, b)), out);
    else
      write_output(print_formula(rosser(a, b)) + "\n", out);
  });

  auto* comp = app.add_subcommand("compress", "Collapse a Sigma1 prefix into one existential");
  comp->add_option("formula", formula, "formula or @file")->required();
  comp->callback([&] { std::cout << print_formula(sigma1_compress(formula_arg(formula))) << "\n"; });

  auto* en = app.add_subcommand("enum-formula", "Formula with the given enumeration index");
  en->add_option("n", index_text, "index")->required();
  en->callback([&] {
    if (index_text.empty() || index_text.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("not a natural number: '" + index_text + "'");
    std::cout << print_formula(enumerate_formula(parse_nat(index_text))) << "\n";
  });

  auto* sp = app.add_subcommand("search-proof", "Enumerate proofs until one checks");
  sp->add_option("formula", formula, "closed goal or @file")->required();
  sp->add_option("--theory", theory, "theory")->check(CLI::IsMember({"fa", "q", "pa"}));
  sp->add_option("--fuel", fuel, "number of candidates");
  sp->add_option("--out", out, "certificate file (default stdout)");
  sp->callback([&] {
    const std::uint64_t f = resolve_fuel(fuel);
    auto c = enumerate_proofs(theory_named(theory), formula_arg(formula), f);
    if (!c) {
      std::cerr << "not found within fuel " << f << "\n";
      result = 1;
      return;
    }
    write_output(format_certificate(*c), out);
  });

  std::string which;
  auto* ax = app.add_subcommand("axioms", "Print the axioms of FA or Q in their fixed order");
  ax->add_option("theory", which, "fa or q")->required()->check(CLI::IsMember({"fa", "q"}));
  ax->callback([&] {
    std::cout << format_formula_file(axioms(which == "fa" ? TheoryName::FA : TheoryName::Q));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result;
}
