#include <doctest.h>

#include "hyperseq/parse.hpp"
#include "hyperseq/syntax.hpp"
#include "testutil.hpp"

using namespace hyperseq;
using namespace hyperseq::testutil;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

}  // namespace

TEST_CASE("free_vars basics") {
  CHECK(free_vars(F("forall x. P(x)")).empty());
  // Fact 1.5's side formula: phi \/ psi(x) has exactly x free.
  auto fv = free_vars(F("p \\/ P(x)"));
  CHECK(fv == std::set<Variable>{Variable{"x", Scope::local}});
  auto fv2 = free_vars(F("forall x. Q(x, y)"));
  CHECK(fv2 == std::set<Variable>{Variable{"y", Scope::local}});
  CHECK(free_vars(F("forall x. P(x) -> P(x)")).empty());
  auto fv3 = free_vars(F("(forall x. P(x)) -> P(x)"));
  CHECK(fv3 == std::set<Variable>{Variable{"x", Scope::local}});
}

TEST_CASE("free_vars agrees with the nameless oracle") {
  Gen gen(20240901);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen.formula(4);
    std::vector<std::string> names;
    db_free_locals(to_db(f), names);
    std::set<Variable> oracle;
    for (auto& n : names) oracle.insert({n, Scope::local});
    std::set<Variable> got;
    for (const auto& v : free_vars(f))
      if (v.scope == Scope::local) got.insert(v);
    CHECK(got == oracle);
  }
}

TEST_CASE("substitution basics") {
  const Variable x{"x", Scope::local};
  // [x/x] is the identity on Fact 1.5's phi \/ psi(x).
  Formula f = F("p \\/ P(x)");
  CHECK(substitute(f, x, Term::var("x")) == f);
  // Vacuous substitution.
  Formula g = F("forall x. P(x)");
  CHECK(substitute(g, x, Term::app("c", {})) == g);
  // Capture forces a rename: [y/x](forall y. Q(x, y)).
  Formula h = F("forall y. Q(x, y)");
  Formula hs = substitute(h, x, Term::var("y"));
  CHECK(alpha_equal(hs, F("forall z. Q(y, z)")));
  CHECK(hs == F("forall y1. Q(y, y1)"));  // fresh names take ascending suffixes
}

TEST_CASE("substitution agrees with the nameless oracle") {
  Gen gen(77002);
  int interesting = 0;
  for (int i = 0; i < 3000; ++i) {
    Formula f = gen.formula(4);
    Term t = gen.term(2);
    const Variable x{"x", Scope::local};
    DForm expected = db_subst(to_db(f), "x", to_db(t, {}));
    DForm got = to_db(substitute(f, x, t));
    CHECK(got == expected);
    if (occurs_free(x, f)) ++interesting;
  }
  CHECK(interesting > 300);  // the corpus actually exercises substitution
}

TEST_CASE("substitute only rewrites the substituted variable's occurrences") {
  Gen gen(5150);
  for (int i = 0; i < 1000; ++i) {
    Formula f = gen.formula(3);
    const Variable x{"x", Scope::local};
    Term t = gen.term(1);
    Formula fs = substitute(f, x, t);
    std::set<Variable> before = free_vars(f);
    std::set<Variable> after = free_vars(fs);
    std::set<Variable> expected;
    for (const auto& v : before)
      if (v != x) expected.insert(v);
    if (before.count(x))
      for (const auto& v : free_vars(t)) expected.insert(v);
    CHECK(after == expected);
  }
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_equal(F("forall x. P(x)"), F("forall y. P(y)")));
  CHECK_FALSE(alpha_equal(F("P(x)"), F("P(y)")));
  CHECK(alpha_equal(F("forall x. forall y. Q(x, y)"), F("forall y. forall x. Q(y, x)")));
  CHECK_FALSE(alpha_equal(F("forall x. forall y. Q(x, y)"), F("forall y. forall x. Q(x, y)")));
  // Shadowing.
  CHECK(alpha_equal(F("forall x. forall x. P(x)"), F("forall y. forall z. P(z)")));
  // Globals never rename.
  CHECK_FALSE(alpha_equal(F("P(x!)"), F("P(y!)")));
  CHECK(alpha_equal(F("P(x!)"), F("P(x!)")));
}

TEST_CASE("alpha equivalence matches the nameless oracle and is a congruence") {
  Gen gen(424242);
  for (int i = 0; i < 2000; ++i) {
    Formula a = gen.formula(3);
    Formula b = gen.formula(3);
    CHECK(alpha_equal(a, b) == (to_db(a) == to_db(b)));
    CHECK(alpha_equal(a, a));
    if (alpha_equal(a, b)) CHECK(alpha_equal(b, a));
  }
}

TEST_CASE("substitution respects alpha equivalence") {
  Gen gen(909090);
  const Variable x{"x", Scope::local};
  for (int i = 0; i < 600; ++i) {
    Formula f = gen.formula(3);
    // An alpha variant: rename every binder through a round of substitution.
    Formula g = f;
    for (const auto& v : free_vars(f)) g = substitute(g, v, Term::var(v.name, v.scope));
    Term t = gen.term(1);
    CHECK(alpha_equal(substitute(f, x, t), substitute(g, x, t)));
  }
}

TEST_CASE("parsing the spec grammar") {
  Hypersequent h = parse_hypersequent("|- p -> q || |- q -> p");
  CHECK(h.components.size() == 2);
  CHECK(h.components[0].antecedent.empty());
  CHECK(h.components[0].succedent.size() == 1);

  Formula f = F("forall x. p \\/ q(x)");
  CHECK(f.kind() == FKind::forall);
  CHECK(f.body().kind() == FKind::disj);

  // '->' is right-associative.
  Formula g = F("p -> q -> r");
  CHECK(g.kind() == FKind::impl);
  CHECK(g.rhs().kind() == FKind::impl);
  CHECK(g == F("p -> (q -> r)"));
  CHECK(g != F("(p -> q) -> r"));

  // Precedence: & over \/ over ->.
  CHECK(F("p & q \\/ r") == F("(p & q) \\/ r"));
  CHECK(F("p \\/ q -> r") == F("(p \\/ q) -> r"));

  // Quantifiers scope maximally.
  CHECK(F("forall x. P(x) -> q") == F("forall x. (P(x) -> q)"));
  CHECK(F("p -> forall x. P(x) & q") == F("p -> (forall x. (P(x) & q))"));

  // Term flavors: bare = local var, bang = global, parens = constant.
  Term t = parse_term("g(x, y!, c())");
  CHECK(t.args()[0].as_var().scope == Scope::local);
  CHECK(t.args()[1].as_var().scope == Scope::global);
  CHECK_FALSE(t.args()[2].is_var());

  // Empty sides.
  Sequent s1 = parse_sequent("|- p");
  CHECK(s1.antecedent.empty());
  Sequent s2 = parse_sequent("p |-");
  CHECK(s2.succedent.empty());
  Sequent s3 = parse_sequent("|-");
  CHECK((s3.antecedent.empty() && s3.succedent.empty()));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("p ->"), ParseError);
  CHECK_THROWS_AS(parse_formula("(p"), ParseError);
  CHECK_THROWS_AS(parse_formula("p | q"), ParseError);
  CHECK_THROWS_AS(parse_hypersequent("p |- q |"), ParseError);
  try {
    parse_formula("p & & q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("arity consistency is enforced per signature table") {
  SignatureTable sig;
  parse_formula("P(x) & p", &sig);
  CHECK_THROWS_AS(parse_formula("P(x, y)", &sig), ParseError);
  CHECK_THROWS_AS(parse_formula("p(x)", &sig), ParseError);
  parse_term("f(x)", &sig);
  CHECK_THROWS_AS(parse_term("f(x, y)", &sig), ParseError);
  // A fresh table forgets everything.
  SignatureTable sig2;
  parse_formula("P(x, y)", &sig2);
}

TEST_CASE("print-parse round trip on 1000+ random formulas") {
  Gen gen(31337);
  gen.globals = true;
  for (int i = 0; i < 1500; ++i) {
    Formula f = gen.formula(4);
    Formula back = parse_formula(to_string(f));
    CHECK(alpha_equal(f, back));
  }
  Gen g2(404);
  for (int i = 0; i < 300; ++i) {
    Hypersequent h = g2.hypersequent(3, 3);
    Hypersequent back = parse_hypersequent(to_string(h));
    CHECK(alpha_equal(h, back));
  }
}

TEST_CASE("symbol counts") {
  CHECK(symbol_count(F("p")) == 1);
  CHECK(symbol_count(F("p -> q")) == 3);
  CHECK(symbol_count(F("P(x)")) == 2);
  CHECK(symbol_count(F("forall x. P(f(x))")) == 4);
  CHECK(symbol_count(F("bot")) == 1);
}
