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

#include "pa/surface.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "pa/notation.hpp"

namespace pa {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::vector<std::string> expected,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

UnboundIdentifier::UnboundIdentifier(std::size_t line, std::size_t column,
                                     std::string name)
    : ParseError(line, column, {}, "unbound identifier '" + name + "'"),
      name_(std::move(name)) {}

namespace {

enum class Tok {
  Ident, Number, Forall, Exists, False, Succ,
  LParen, RParen, Dot, Eq, Lt, Le, Bar, Plus, Star, Tilde, And, Or, Arrow,
  End
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Forall: return "'forall'";
    case Tok::Exists: return "'exists'";
    case Tok::False: return "'false'";
    case Tok::Succ: return "'S'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Dot: return "'.'";
    case Tok::Eq: return "'='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Bar: return "'|'";
    case Tok::Plus: return "'+'";
    case Tok::Star: return "'*'";
    case Tok::Tilde: return "'~'";
    case Tok::And: return "'/\\'";
    case Tok::Or: return "'\\/'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line, tc = col;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(src.substr(i, len)), tl, tc});
      advance(len);
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
        ++j;
      emit(Tok::Number, j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '\''))
        ++j;
      const std::string_view word = src.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "forall") k = Tok::Forall;
      else if (word == "exists") k = Tok::Exists;
      else if (word == "false") k = Tok::False;
      else if (word == "S") k = Tok::Succ;
      emit(k, j - i);
      continue;
    }
    const std::string_view rest = src.substr(i);
    if (rest.starts_with("/\\")) { emit(Tok::And, 2); continue; }
    if (rest.starts_with("\\/")) { emit(Tok::Or, 2); continue; }
    if (rest.starts_with("->")) { emit(Tok::Arrow, 2); continue; }
    if (rest.starts_with("<=")) { emit(Tok::Le, 2); continue; }
    switch (c) {
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '.': emit(Tok::Dot, 1); continue;
      case '=': emit(Tok::Eq, 1); continue;
      case '<': emit(Tok::Lt, 1); continue;
      case '|': emit(Tok::Bar, 1); continue;
      case '+': emit(Tok::Plus, 1); continue;
      case '*': emit(Tok::Star, 1); continue;
      case '~': emit(Tok::Tilde, 1); continue;
      default:
        throw ParseError(tl, tc, {},
                         std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Failure inside a backtracking alternative; converted to ParseError at the
// top unless another alternative succeeds.
struct Failure {
  std::size_t pos;
  std::vector<Tok> expected;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::vector<std::string>& free_vars,
         bool canonical)
      : toks_(std::move(toks)), free_vars_(free_vars), canonical_(canonical) {}

  Formula formula_eof() {
    return run([&] {
      Formula f = impl();
      expect(Tok::End);
      return f;
    });
  }

  Term term_eof() {
    return run([&] {
      Term t = sum();
      expect(Tok::End);
      return t;
    });
  }

 private:
  template <class F>
  auto run(F&& body) -> decltype(body()) {
    try {
      return body();
    } catch (const Failure&) {
      const Token& at = toks_[std::min(best_.pos, toks_.size() - 1)];
      std::vector<std::string> names;
      for (Tok t : best_.expected) {
        std::string n = tok_name(t);
        if (std::find(names.begin(), names.end(), n) == names.end())
          names.push_back(n);
      }
      std::string found =
          at.kind == Tok::End ? "end of input" : "'" + at.text + "'";
      throw ParseError(at.line, at.column, names,
                       "expected " + describe_expected(names) + ", found " +
                           found);
    }
  }

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }

  [[noreturn]] void fail(std::vector<Tok> expected) {
    if (pos_ > best_.pos || best_.expected.empty()) {
      best_ = {pos_, expected};
    } else if (pos_ == best_.pos) {
      best_.expected.insert(best_.expected.end(), expected.begin(),
                            expected.end());
    }
    throw Failure{pos_, std::move(expected)};
  }

  const Token& expect(Tok k) {
    if (!at(k)) fail({k});
    return toks_[pos_++];
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  // formula levels ---------------------------------------------------------

  Formula impl() {
    Formula a = disj();
    if (accept(Tok::Arrow)) return Formula::impl(std::move(a), impl());
    return a;
  }

  Formula disj() {
    Formula a = conj();
    if (accept(Tok::Or)) return Formula::disj(std::move(a), disj());
    return a;
  }

  Formula conj() {
    Formula a = unary();
    if (accept(Tok::And)) return Formula::conj(std::move(a), conj());
    return a;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        ++pos_;
        return neg(unary());
      case Tok::False:
        ++pos_;
        return Formula::falsum();
      case Tok::Forall:
      case Tok::Exists:
        return quantifier();
      case Tok::LParen: {
        const std::size_t save = pos_;
        try {
          return atom();
        } catch (const Failure&) {
          pos_ = save;
        }
        expect(Tok::LParen);
        Formula f = impl();
        expect(Tok::RParen);
        return f;
      }
      default:
        return atom();
    }
  }

  Formula quantifier() {
    const bool universal = at(Tok::Forall);
    ++pos_;
    std::size_t count = 0;
    do {
      binders_.push_back(expect(Tok::Ident).text);
      ++count;
    } while (at(Tok::Ident));
    if (!at(Tok::Dot)) fail({Tok::Ident, Tok::Dot});
    ++pos_;
    Formula body = impl();
    binders_.resize(binders_.size() - count);
    for (std::size_t i = 0; i < count; ++i)
      body = universal ? Formula::forall(std::move(body))
                       : Formula::exists(std::move(body));
    return body;
  }

  Formula atom() {
    Term l = sum();
    switch (peek().kind) {
      case Tok::Eq:
        ++pos_;
        return Formula::eq(std::move(l), sum());
      case Tok::Lt:
        ++pos_;
        return lt(l, sum());
      case Tok::Le:
        ++pos_;
        return le(l, sum());
      case Tok::Bar:
        ++pos_;
        return divides(l, sum());
      default:
        fail({Tok::Eq, Tok::Lt, Tok::Le, Tok::Bar, Tok::Plus, Tok::Star});
    }
  }

  // term levels ------------------------------------------------------------

  Term sum() {
    Term t = product();
    while (accept(Tok::Plus)) t = Term::add(std::move(t), product());
    return t;
  }

  Term product() {
    Term t = term_unary();
    while (accept(Tok::Star)) t = Term::mul(std::move(t), term_unary());
    return t;
  }

  Term term_unary() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::Succ:
        ++pos_;
        return Term::succ(term_unary());
      case Tok::Number: {
        ++pos_;
        if (tok.text.size() > 6)
          throw ParseError(tok.line, tok.column, {},
                           "numeral literal too large: " + tok.text);
        return num(std::stoull(tok.text));
      }
      case Tok::Ident:
        ++pos_;
        return resolve(tok);
      case Tok::LParen: {
        ++pos_;
        Term t = sum();
        expect(Tok::RParen);
        return t;
      }
      default:
        fail({Tok::Succ, Tok::Number, Tok::Ident, Tok::LParen});
    }
  }

  Term resolve(const Token& tok) {
    for (std::size_t i = binders_.size(); i-- > 0;)
      if (binders_[i] == tok.text) return Term::var(binders_.size() - 1 - i);
    const std::size_t depth = binders_.size();
    for (std::size_t i = 0; i < free_vars_.size(); ++i)
      if (free_vars_[i] == tok.text) return Term::var(depth + i);
    if (canonical_ && tok.text.size() > 1 && tok.text[0] == 'v' &&
        tok.text.size() <= 7 &&
        std::all_of(tok.text.begin() + 1, tok.text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return Term::var(depth + std::stoull(tok.text.substr(1)));
    throw UnboundIdentifier(tok.line, tok.column, tok.text);
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& free_vars_;
  bool canonical_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
  Failure best_{0, {}};
};

}  // namespace

Term parse_term(std::string_view src, const std::vector<std::string>& free_vars) {
  return Parser(lex(src), free_vars, false).term_eof();
}

Formula parse_formula(std::string_view src,
                      const std::vector<std::string>& free_vars) {
  return Parser(lex(src), free_vars, false).formula_eof();
}

Term parse_term_canonical(std::string_view src) {
  static const std::vector<std::string> none;
  return Parser(lex(src), none, true).term_eof();
}

Formula parse_formula_canonical(std::string_view src) {
  static const std::vector<std::string> none;
  return Parser(lex(src), none, true).formula_eof();
}

std::vector<std::string> canonical_free_names(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

// --- printing -------------------------------------------------------------

namespace {

std::string var_name(std::size_t index, std::size_t depth) {
  if (index < depth) return "x" + std::to_string(depth - 1 - index);
  return "v" + std::to_string(index - depth);
}

// Term precedence: 1 = sum, 2 = product, 3 = successor/atom.
void print_term_prec(std::ostream& os, const Term& t, std::size_t depth,
                     int prec) {
  if (auto n = numeral_value(t)) {
    os << *n;
    return;
  }
  switch (t.kind()) {
    case TermKind::Var:
      os << var_name(t.index(), depth);
      return;
    case TermKind::Zero:
      os << '0';
      return;
    case TermKind::Succ:
      if (prec > 3) os << '(';
      os << "S ";
      print_term_prec(os, t.lhs(), depth, 3);
      if (prec > 3) os << ')';
      return;
    case TermKind::Add:
    case TermKind::Mul: {
      const int mine = t.is(TermKind::Add) ? 1 : 2;
      if (prec > mine) os << '(';
      print_term_prec(os, t.lhs(), depth, mine);
      os << (mine == 1 ? " + " : " * ");
      print_term_prec(os, t.rhs(), depth, mine + 1);
      if (prec > mine) os << ')';
      return;
    }
  }
}

// Formula precedence: 1 = '->', 2 = '\/', 3 = '/\', 4 = unary.
// `rightmost` is false when more text follows in the same parenthesis
// group, in which case a quantifier must be parenthesised.
void print_formula_prec(std::ostream& os, const Formula& f, std::size_t depth,
                        int prec, bool rightmost) {
  auto relation = [&](const Relation& r, const char* op) {
    // Operands of the sugar live outside its witness binder.
    print_term_prec(os, r.left, depth, 1);
    os << ' ' << op << ' ';
    print_term_prec(os, r.right, depth, 1);
  };
  switch (f.kind()) {
    case FormulaKind::Falsum:
      os << "false";
      return;
    case FormulaKind::Eq:
      print_term_prec(os, f.left(), depth, 1);
      os << " = ";
      print_term_prec(os, f.right(), depth, 1);
      return;
    case FormulaKind::Impl:
      if (f.rhs().is(FormulaKind::Falsum) && !f.lhs().is(FormulaKind::Falsum)) {
        os << '~';
        print_formula_prec(os, f.lhs(), depth, 4, rightmost);
        return;
      }
      [[fallthrough]];
    case FormulaKind::Conj:
    case FormulaKind::Disj: {
      const int mine = f.is(FormulaKind::Impl)   ? 1
                       : f.is(FormulaKind::Disj) ? 2
                                                 : 3;
      const char* op = mine == 1 ? " -> " : mine == 2 ? " \\/ " : " /\\ ";
      const bool paren = prec > mine;
      if (paren) os << '(';
      print_formula_prec(os, f.lhs(), depth, mine + 1, false);
      os << op;
      print_formula_prec(os, f.rhs(), depth, mine, paren || rightmost);
      if (paren) os << ')';
      return;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (f.is(FormulaKind::Exists)) {
        if (auto r = match_lt(f)) return relation(*r, "<");
        if (auto r = match_le(f)) return relation(*r, "<=");
        if (auto r = match_divides(f)) return relation(*r, "|");
      }
      const bool paren = !rightmost;
      if (paren) os << '(';
      os << (f.is(FormulaKind::Forall) ? "forall " : "exists ") << 'x'
         << depth << ". ";
      print_formula_prec(os, f.body(), depth + 1, 1, true);
      if (paren) os << ')';
      return;
    }
  }
}

}  // namespace

std::string print_term(const Term& t, std::size_t depth) {
  std::ostringstream os;
  print_term_prec(os, t, depth, 1);
  return os.str();
}

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_formula_prec(os, f, 0, 1, true);
  return os.str();
}

std::vector<Formula> parse_formula_file(std::string_view text) {
  std::vector<Formula> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      try {
        out.push_back(parse_formula_canonical(line));
      } catch (const UnboundIdentifier& e) {
        throw UnboundIdentifier(line_no, e.column(), e.name());
      } catch (const ParseError& e) {
        const std::string msg = e.what();
        throw ParseError(line_no, e.column(), e.expected(),
                         msg.substr(msg.find(": ") + 2));
      }
    }
    start = end + 1;
  }
  return out;
}

std::string format_formula_file(const std::vector<Formula>& formulas) {
  std::string out;
  for (const Formula& f : formulas) out += print_formula(f) + "\n";
  return out;
}

}  // namespace pa
