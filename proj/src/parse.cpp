#include "hyperseq/parse.hpp"

#include <cctype>
#include <vector>

namespace hyperseq {

void SignatureTable::note_predicate(const std::string& name, std::size_t arity, std::size_t pos) {
  auto [it, inserted] = preds_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw ParseError(pos, "predicate '" + name + "' used with arity " + std::to_string(arity) +
                              " but previously with arity " + std::to_string(it->second));
}

void SignatureTable::note_function(const std::string& name, std::size_t arity, std::size_t pos) {
  auto [it, inserted] = funcs_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw ParseError(pos, "function '" + name + "' used with arity " + std::to_string(arity) +
                              " but previously with arity " + std::to_string(it->second));
}

namespace {

enum class Tok { ident, lparen, rparen, comma, dot, bang, amp, vee, arrow, turnstile, bar, end };

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  Tok tok = Tok::end;
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(std::string_view t) : text(t) { advance(); }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(tok_pos, msg); }

  void advance() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos >= text.size()) {
      tok = Tok::end;
      return;
    }
    char c = text[pos];
    switch (c) {
      case '(': tok = Tok::lparen; ++pos; return;
      case ')': tok = Tok::rparen; ++pos; return;
      case ',': tok = Tok::comma; ++pos; return;
      case '.': tok = Tok::dot; ++pos; return;
      case '!': tok = Tok::bang; ++pos; return;
      case '&': tok = Tok::amp; ++pos; return;
      case '\\':
        if (pos + 1 < text.size() && text[pos + 1] == '/') {
          tok = Tok::vee;
          pos += 2;
          return;
        }
        throw ParseError(pos, "expected '\\/'");
      case '-':
        if (pos + 1 < text.size() && text[pos + 1] == '>') {
          tok = Tok::arrow;
          pos += 2;
          return;
        }
        throw ParseError(pos, "expected '->'");
      case '|':
        if (pos + 1 < text.size() && text[pos + 1] == '|') {
          tok = Tok::bar;
          pos += 2;
          return;
        }
        if (pos + 1 < text.size() && text[pos + 1] == '-') {
          tok = Tok::turnstile;
          pos += 2;
          return;
        }
        throw ParseError(pos, "expected '|-' or '||'");
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      ident.assign(text.substr(start, pos - start));
      tok = Tok::ident;
      return;
    }
    throw ParseError(pos, std::string("unexpected character '") + c + "'");
  }

  bool accept(Tok t) {
    if (tok != t) return false;
    advance();
    return true;
  }

  void expect(Tok t, const char* what) {
    if (tok != t) fail(std::string("expected ") + what);
    advance();
  }
};

struct Parser {
  Lexer lex;
  SignatureTable* sig;

  Parser(std::string_view text, SignatureTable* s) : lex(text), sig(s) {}

  Term term() {
    if (lex.tok != Tok::ident) lex.fail("expected a term");
    std::string name = lex.ident;
    std::size_t at = lex.tok_pos;
    lex.advance();
    if (lex.accept(Tok::bang)) return Term::var(std::move(name), Scope::global);
    if (lex.tok == Tok::lparen) {
      lex.advance();
      std::vector<Term> args;
      if (lex.tok != Tok::rparen) {
        args.push_back(term());
        while (lex.accept(Tok::comma)) args.push_back(term());
      }
      lex.expect(Tok::rparen, "')'");
      if (sig) sig->note_function(name, args.size(), at);
      return Term::app(std::move(name), std::move(args));
    }
    return Term::var(std::move(name), Scope::local);
  }

  Formula formula() { return implic(); }

  Formula implic() {
    Formula lhs = disjunction();
    if (lex.accept(Tok::arrow)) return Formula::impl(std::move(lhs), implic());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (lex.accept(Tok::vee)) lhs = Formula::disj(std::move(lhs), conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = atomic();
    while (lex.accept(Tok::amp)) lhs = Formula::conj(std::move(lhs), atomic());
    return lhs;
  }

  Formula atomic() {
    if (lex.accept(Tok::lparen)) {
      Formula f = formula();
      lex.expect(Tok::rparen, "')'");
      return f;
    }
    if (lex.tok != Tok::ident) lex.fail("expected a formula");
    std::string name = lex.ident;
    std::size_t at = lex.tok_pos;
    if (name == "bot") {
      lex.advance();
      return Formula::bottom();
    }
    if (name == "forall" || name == "exists") {
      lex.advance();
      if (lex.tok != Tok::ident) lex.fail("expected a variable after quantifier");
      std::string var = lex.ident;
      lex.advance();
      lex.expect(Tok::dot, "'.'");
      Formula body = formula();  // quantifier scope extends maximally
      return name == "forall" ? Formula::forall(std::move(var), std::move(body))
                              : Formula::exists(std::move(var), std::move(body));
    }
    lex.advance();
    std::vector<Term> args;
    if (lex.tok == Tok::lparen) {
      lex.advance();
      if (lex.tok != Tok::rparen) {
        args.push_back(term());
        while (lex.accept(Tok::comma)) args.push_back(term());
      }
      lex.expect(Tok::rparen, "')'");
    }
    if (sig) sig->note_predicate(name, args.size(), at);
    return Formula::atom(std::move(name), std::move(args));
  }

  std::vector<Formula> formula_list(Tok stop1, Tok stop2) {
    std::vector<Formula> out;
    if (lex.tok == stop1 || lex.tok == stop2) return out;
    out.push_back(formula());
    while (lex.accept(Tok::comma)) out.push_back(formula());
    return out;
  }

  Sequent sequent() {
    Sequent s;
    s.antecedent = formula_list(Tok::turnstile, Tok::turnstile);
    lex.expect(Tok::turnstile, "'|-'");
    s.succedent = formula_list(Tok::bar, Tok::end);
    return s;
  }

  Hypersequent hypersequent() {
    Hypersequent h;
    h.components.push_back(sequent());
    while (lex.accept(Tok::bar)) h.components.push_back(sequent());
    return h;
  }

  void finish() {
    if (lex.tok != Tok::end) lex.fail("unexpected trailing input");
  }
};

}  // namespace

Term parse_term(std::string_view text, SignatureTable* sig) {
  Parser p(text, sig);
  Term t = p.term();
  p.finish();
  return t;
}

Formula parse_formula(std::string_view text, SignatureTable* sig) {
  Parser p(text, sig);
  Formula f = p.formula();
  p.finish();
  return f;
}

Sequent parse_sequent(std::string_view text, SignatureTable* sig) {
  Parser p(text, sig);
  Sequent s = p.sequent();
  p.finish();
  return s;
}

Hypersequent parse_hypersequent(std::string_view text, SignatureTable* sig) {
  Parser p(text, sig);
  Hypersequent h = p.hypersequent();
  p.finish();
  return h;
}

}  // namespace hyperseq
