#include <doctest.h>

#include "hyperseq/parse.hpp"
#include "hyperseq/semantics.hpp"
#include "testutil.hpp"

using namespace hyperseq;
using namespace hyperseq::testutil;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

const std::string kLin = "(p -> q) \\/ (q -> p)";
const std::string kAcd = "(forall x. p \\/ P(x)) -> (p \\/ (forall x. P(x)))";
const std::string kGdm = "((g1 & g2) -> d) -> ((g1 -> d) \\/ (g2 -> d))";

// Root 0 below incomparable 1 and 2; p only at 1, q only at 2.
KripkeModel fork_model() {
  KripkeModel m;
  m.worlds = 3;
  m.up = {0b111, 0b010, 0b100};
  m.domain = {{}, {}, {}};
  m.atoms[{"p", {}}] = 0b010;
  m.atoms[{"q", {}}] = 0b100;
  return m;
}

// w0 < w1 with domains {a} and {a,b}; P(a) everywhere, p only at w1.
KripkeModel two_chain_model() {
  KripkeModel m;
  m.worlds = 2;
  m.up = {0b11, 0b10};
  m.domain = {{0}, {0, 1}};
  m.atoms[{"P", {0}}] = 0b11;
  m.atoms[{"p", {}}] = 0b10;
  return m;
}

}  // namespace

TEST_CASE("model invariants validate") {
  CHECK_FALSE(fork_model().validate().has_value());
  CHECK_FALSE(two_chain_model().validate().has_value());

  KripkeModel bad = two_chain_model();
  bad.domain = {{0, 1}, {0}};  // shrinking domain
  CHECK(bad.validate().has_value());

  KripkeModel bad2 = fork_model();
  bad2.atoms[{"p", {}}] = 0b001;  // true at the root, false above
  CHECK(bad2.validate().has_value());

  KripkeModel bad3 = fork_model();
  bad3.up = {0b011, 0b011, 0b100};  // 0<=1 and 1<=0
  CHECK(bad3.validate().has_value());
}

TEST_CASE("forcing basics") {
  KripkeModel m = fork_model();
  Env env;
  for (int w = 0; w < m.worlds; ++w) CHECK_FALSE(forces(m, w, env, F("bot")));
  CHECK(valid_in(m, F("bot -> bot")));
  CHECK(forces(m, 1, env, F("p")));
  CHECK_FALSE(forces(m, 0, env, F("p")));
  // The fork refutes LIN at the root.
  CHECK_FALSE(forces(m, 0, env, F(kLin)));
  CHECK(forces(m, 1, env, F(kLin)));
  CHECK_FALSE(valid_in(m, F(kLin)));
  // ... and refutes GDM too, reading g1,g2,d as p,q,bot.
  KripkeModel g = fork_model();
  g.atoms[{"g1", {}}] = 0b010;
  g.atoms[{"g2", {}}] = 0b100;
  CHECK_FALSE(valid_in(g, F(kGdm)));
}

TEST_CASE("increasing domains refute the constant domain axiom") {
  KripkeModel m = two_chain_model();
  Env env;
  CHECK(forces(m, 0, env, F("forall x. p \\/ P(x)")));
  CHECK_FALSE(forces(m, 0, env, F("p \\/ (forall x. P(x))")));
  CHECK_FALSE(valid_in(m, F(kAcd)));
  // With a constant domain the same atoms validate it.
  KripkeModel c = m;
  c.domain = {{0, 1}, {0, 1}};
  c.atoms[{"P", {0}}] = 0b11;
  REQUIRE_FALSE(c.validate().has_value());
  CHECK(valid_in(c, F(kAcd)));
}

TEST_CASE("forcing checks its preconditions") {
  KripkeModel m = two_chain_model();
  Env env;
  CHECK_THROWS_AS(forces(m, 0, env, F("P(x)")), SemanticsError);
  env[{ "x", Scope::local }] = 1;  // not in domain(w0)
  CHECK_THROWS_AS(forces(m, 0, env, F("P(x)")), SemanticsError);
  CHECK_NOTHROW(forces(m, 1, env, F("P(x)")));
  CHECK_THROWS_AS(valid_in(m, F("P(x)")), SemanticsError);
  CHECK_THROWS_AS(forces(m, 0, env, F("P(f(x))")), SemanticsError);
}

TEST_CASE("terms evaluate through function tables") {
  KripkeModel m = two_chain_model();
  m.functions["c"][{}] = 0;
  m.functions["f"][{0}] = 0;
  m.functions["f"][{1}] = 1;
  REQUIRE_FALSE(m.validate().has_value());
  Env env;
  CHECK(forces(m, 0, env, F("P(c())")));
  CHECK(forces(m, 0, env, F("P(f(c()))")));
  CHECK(forces(m, 1, env, F("exists x. P(f(x))")));
}

TEST_CASE("persistence holds on enumerated models and random formulas") {
  Gen gen(13001);
  gen.quantifiers = false;
  std::vector<Formula> samples;
  for (int i = 0; i < 40; ++i) {
    Formula f = gen.formula(3);
    // Keep only the sweep signature.
    bool ok = true;
    try {
      auto sig = formula_signature(f);
      ok = sig.size() <= 2;
      for (auto& [pred, arity] : sig) ok = ok && arity == 0;
    } catch (const SemanticsError&) {
      ok = false;
    }
    if (ok) samples.push_back(f);
  }
  REQUIRE(samples.size() >= 10);
  int models = 0;
  enumerate_models(ModelClass::all_posets, {3, 0, 2}, {{"p", 0}, {"q", 0}},
                   [&](const KripkeModel& m) {
                     REQUIRE_FALSE(m.validate().has_value());
                     ++models;
                     Env env;
                     for (const auto& f : samples) {
                       Formula closed = f;
                       for (const auto& v : free_vars(f)) closed = Formula::forall(v.name, closed);
                       for (int w = 0; w < m.worlds; ++w) {
                         if (!forces(m, w, env, closed)) continue;
                         for (int v = 0; v < m.worlds; ++v)
                           if (m.leq(w, v)) CHECK(forces(m, v, env, closed));
                       }
                     }
                     return true;
                   });
  CHECK(models > 50);
}

TEST_CASE("countermodel search: the paper's logic/class pairings") {
  // LIN over all posets: the first countermodel is the 3-world fork.
  {
    auto m = countermodel_search(F(kLin), ModelClass::all_posets, {3, 0, 2});
    REQUIRE(m.has_value());
    CHECK(m->worlds == 3);
    int roots = 0, maximal = 0;
    for (int w = 0; w < 3; ++w) {
      int above = 0, below = 0;
      for (int v = 0; v < 3; ++v) {
        if (v != w && m->leq(w, v)) ++above;
        if (v != w && m->leq(v, w)) ++below;
      }
      if (below == 0 && above == 2) ++roots;
      if (above == 0) ++maximal;
    }
    CHECK(roots == 1);
    CHECK(maximal == 2);
    CHECK_FALSE(valid_in(*m, F(kLin)));
  }
  // LIN over linear models: none.
  CHECK_FALSE(countermodel_search(F(kLin), ModelClass::linear, {4, 0, 2}).has_value());
  // ACD over all posets: the 2-world increasing-domain chain.
  {
    auto m = countermodel_search(F(kAcd), ModelClass::all_posets, {2, 2, 2});
    REQUIRE(m.has_value());
    CHECK(m->worlds == 2);
    int lo = m->leq(0, 1) ? 0 : 1;
    int hi = 1 - lo;
    CHECK(m->leq(lo, hi));
    CHECK(m->domain[lo].size() < m->domain[hi].size());
  }
  // ACD over constant domains: none.
  CHECK_FALSE(countermodel_search(F(kAcd), ModelClass::constant_domain, {3, 2, 2}).has_value());
  // GDM is refuted by the fork as well.
  {
    auto m = countermodel_search(F(kGdm), ModelClass::all_posets, {3, 0, 3});
    REQUIRE(m.has_value());
    CHECK(m->worlds == 3);
    CHECK_FALSE(valid_in(*m, F(kGdm)));
  }
  // GD-validities survive on linear constant-domain models.
  CHECK_FALSE(
      countermodel_search(F(kAcd), ModelClass::linear_constant_domain, {3, 2, 2}).has_value());
  CHECK_FALSE(countermodel_search(F(kLin), ModelClass::linear_constant_domain, {3, 2, 2})
                  .has_value());
}

TEST_CASE("countermodel search is deterministic") {
  auto a = countermodel_search(F(kLin), ModelClass::all_posets, {3, 0, 2});
  auto b = countermodel_search(F(kLin), ModelClass::all_posets, {3, 0, 2});
  REQUIRE((a.has_value() && b.has_value()));
  CHECK(a->up == b->up);
  CHECK(a->domain == b->domain);
  CHECK(a->atoms == b->atoms);
  CHECK(a->dump() == b->dump());
}

TEST_CASE("bounds policing") {
  CHECK_THROWS_AS(countermodel_search(F(kLin), ModelClass::all_posets, {5, 0, 2}),
                  SemanticsError);
  CHECK_THROWS_AS(countermodel_search(F(kLin), ModelClass::all_posets, {3, 0, 1}),
                  SemanticsError);  // two predicate symbols, max_atoms 1
  CHECK_THROWS_AS(countermodel_search(F("forall x. P(x) -> P(x)"), ModelClass::all_posets,
                                      {3, 0, 1}),
                  SemanticsError);  // quantifier but no individuals
  CHECK_THROWS_AS(countermodel_search(F("P(c())"), ModelClass::all_posets, {3, 2, 1}),
                  SemanticsError);  // function symbols are not enumerated
}

TEST_CASE("canonical poset pruning is exhaustive up to isomorphism") {
  // Oracle: enumerate every labeled poset on <=3 worlds directly and compare
  // countermodel existence for random propositional formulas.
  Gen gen(881);
  gen.quantifiers = false;
  auto labeled_refutes = [](const Formula& f) {
    const int max_n = 3;
    for (int n = 1; n <= max_n; ++n) {
      int pairs = n * n - n;
      std::vector<std::pair<int, int>> idx;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) idx.push_back({i, j});
      for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
        KripkeModel m;
        m.worlds = n;
        m.up.assign(n, 0);
        for (int i = 0; i < n; ++i) m.up[i] |= 1u << i;
        for (int b = 0; b < pairs; ++b)
          if ((bits >> b) & 1u) m.up[idx[b].first] |= 1u << idx[b].second;
        m.domain.assign(n, {});
        if (m.validate().has_value()) continue;
        // All persistent assignments for p and q.
        for (std::uint32_t pm = 0; pm < (1u << n); ++pm)
          for (std::uint32_t qm = 0; qm < (1u << n); ++qm) {
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
              if (((pm >> w) & 1u) && (m.up[w] & ~pm)) ok = false;
              if (((qm >> w) & 1u) && (m.up[w] & ~qm)) ok = false;
            }
            if (!ok) continue;
            KripkeModel mm = m;
            if (pm) mm.atoms[{"p", {}}] = pm;
            if (qm) mm.atoms[{"q", {}}] = qm;
            if (!valid_in(mm, f)) return true;
          }
      }
    }
    return false;
  };
  int refuted = 0;
  for (int i = 0; i < 30; ++i) {
    Formula f = gen.formula(3);
    std::map<std::string, std::size_t> sig;
    try {
      sig = formula_signature(f);
    } catch (const SemanticsError&) {
      continue;
    }
    bool fits = sig.size() <= 2;
    for (auto& [pred, arity] : sig) fits = fits && arity == 0 && (pred == "p" || pred == "q");
    if (!fits) continue;
    Formula closed = f;
    for (const auto& v : free_vars(f)) closed = Formula::forall(v.name, closed);
    if (!free_vars(closed).empty()) continue;
    bool canonical_found =
        countermodel_search(closed, ModelClass::all_posets, {3, 0, 2}).has_value();
    bool oracle_found = labeled_refutes(closed);
    CAPTURE(to_string(closed));
    CHECK(canonical_found == oracle_found);
    refuted += oracle_found ? 1 : 0;
  }
  CHECK(refuted > 0);  // the sample exercises both outcomes
}

TEST_CASE("model dump lists worlds, order, domains and atoms") {
  std::string d = two_chain_model().dump();
  CHECK(d.find("worlds: 2") != std::string::npos);
  CHECK(d.find("0<1") != std::string::npos);
  CHECK(d.find("domain={a}") != std::string::npos);
  CHECK(d.find("domain={a,b}") != std::string::npos);
  CHECK(d.find("P(a)") != std::string::npos);
}
