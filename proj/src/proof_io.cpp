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

#include "pa/proof_io.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "pa/surface.hpp"

namespace pa {

namespace {

void quote(std::string& out, const std::string& s) {
  out += '"';
  out += s;
  out += '"';
}

void print_into(std::string& out, const Proof& p, std::size_t indent) {
  const auto& ps = p.premises();
  const auto& fs = p.formulas();
  out += '(';
  out += rule_name(p.rule());
  switch (p.rule()) {
    case Rule::Axiom:
      out += ' ' + std::to_string(p.index()) + ')';
      return;
    case Rule::ForallElim:
    case Rule::ExistsIntro:
      out += ' ';
      quote(out, print_term(p.term()));
      break;
    default:
      for (const Formula& f : fs) {
        out += ' ';
        quote(out, print_formula(f));
      }
  }
  // Deep derivations stay readable without drifting off the right margin.
  const std::size_t next = indent < 32 ? indent + 1 : indent;
  for (const Proof& q : ps) {
    out += '\n';
    out.append(next, ' ');
    print_into(out, q, next);
  }
  out += ')';
}

class Reader {
 public:
  explicit Reader(std::string_view text, std::size_t first_line = 1)
      : text_(text), line_(first_line) {}

  Proof proof_eof() {
    Proof p = proof();
    skip();
    if (pos_ < text_.size()) fail({"end of input"}, "trailing input after proof");
    return p;
  }

 private:
  Proof proof() {
    skip();
    expect('(');
    const std::size_t name_line = line_, name_col = column();
    std::string name = word();
    auto rule = rule_from_name(name);
    if (!rule) throw ParseError(name_line, name_col, {"rule name"}, "unknown rule '" + name + "'");
    auto sub = [&] { return proof(); };
    auto form = [&] { return formula(); };
    Proof out = [&]() -> Proof {
      switch (*rule) {
        case Rule::Axiom:
          return Proof::axiom(number());
        case Rule::Exfalso:
          return Proof::exfalso(sub());
        case Rule::ImplIntro:
          return Proof::impl_intro(sub());
        case Rule::ImplElim: {
          Formula a = form();
          Proof p = sub();
          return Proof::impl_elim(a, p, sub());
        }
        case Rule::ConjIntro: {
          Proof p = sub();
          return Proof::conj_intro(p, sub());
        }
        case Rule::Proj1:
          return Proof::proj1(sub());
        case Rule::Proj2:
          return Proof::proj2(sub());
        case Rule::DisjIntroL: {
          Formula a = form();
          return Proof::disj_intro_l(a, sub());
        }
        case Rule::DisjIntroR: {
          Formula a = form();
          return Proof::disj_intro_r(a, sub());
        }
        case Rule::DisjElim: {
          Formula a = form();
          Formula b = form();
          Proof p = sub();
          Proof q = sub();
          return Proof::disj_elim(a, b, p, q, sub());
        }
        case Rule::ForallIntro:
          return Proof::forall_intro(sub());
        case Rule::ForallElim: {
          Term t = term();
          return Proof::forall_elim(t, sub());
        }
        case Rule::ExistsIntro: {
          Term t = term();
          return Proof::exists_intro(t, sub());
        }
        case Rule::ExistsElim: {
          Proof p = sub();
          return Proof::exists_elim(p, sub());
        }
        case Rule::Peirce: {
          Formula a = form();
          return Proof::peirce(a, form());
        }
      }
      throw std::logic_error("bad rule");
    }();
    skip();
    expect(')');
    return out;
  }

  std::string word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail({"rule name"}, "expected a rule name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 9) fail({"index"}, "expected a context index");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  // Returns the quoted text and the column where it starts.
  std::pair<std::string, std::size_t> quoted() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail({"\""}, "expected a quoted formula or term");
    ++pos_;
    const std::size_t col = column();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\n') fail({"\""}, "unterminated string");
      ++pos_;
    }
    if (pos_ >= text_.size()) fail({"\""}, "unterminated string");
    std::string s(text_.substr(start, pos_ - start));
    ++pos_;
    return {s, col};
  }

  template <class F>
  auto embedded(F&& parse) -> decltype(parse(std::string_view{})) {
    const std::size_t line = line_;
    auto [s, col] = quoted();
    try {
      return parse(s);
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      throw ParseError(line, col + e.column() - 1, e.expected(),
                       msg.substr(msg.find(": ") + 2));
    }
  }

  Formula formula() {
    return embedded([](std::string_view s) { return parse_formula_canonical(s); });
  }
  Term term() {
    return embedded([](std::string_view s) { return parse_term_canonical(s); });
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') {
          ++line_;
          line_start_ = pos_ + 1;
        }
        ++pos_;
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail({std::string(1, c)}, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t column() const { return pos_ - line_start_ + 1; }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& msg) {
    throw ParseError(line_, column(), std::move(expected), msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
};

}  // namespace

std::string print_proof(const Proof& p) {
  std::string out;
  print_into(out, p, 0);
  out += '\n';
  return out;
}

Proof parse_proof(std::string_view text) { return Reader(text).proof_eof(); }

std::string format_certificate(const Certificate& c) {
  std::string out = "# goal: " + print_formula(c.goal()) + "\n";
  out += "# axioms used: " + std::to_string(c.axioms_used().size()) + "\n";
  out += format_formula_file(c.axioms_used());
  out += "---\n";
  out += print_proof(c.proof());
  return out;
}

CertificateFile parse_certificate_file(std::string_view text) {
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line == "---") {
      CertificateFile out{parse_formula_file(text.substr(0, start)), Proof::axiom(0)};
      // Keep line numbers of the proof part relative to the whole file.
      std::string padded(line_no, '\n');
      padded += text.substr(end == text.size() ? end : end + 1);
      out.proof = Reader(padded, 1).proof_eof();
      return out;
    }
    ++line_no;
    start = end + 1;
  }
  // Comments may precede a bare proof.
  std::string body;
  start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.front() != '#') body += line;
    body += '\n';
    start = end + 1;
  }
  return {std::nullopt, Reader(body).proof_eof()};
}

}  // namespace pa
