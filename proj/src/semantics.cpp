#include "hyperseq/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperseq {

bool KripkeModel::in_domain(int w, int ind) const {
  const auto& d = domain[w];
  return std::binary_search(d.begin(), d.end(), ind);
}

std::optional<std::string> KripkeModel::validate() const {
  const int n = worlds;
  if (n <= 0 || n > 32) return "world count out of range";
  if (static_cast<int>(up.size()) != n || static_cast<int>(domain.size()) != n)
    return "relation/domain tables have the wrong size";
  for (int w = 0; w < n; ++w)
    if (!leq(w, w)) return "order is not reflexive";
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (w != v && leq(w, v) && leq(v, w)) return "order is not antisymmetric";
      if (leq(w, v))
        for (int u = 0; u < n; ++u)
          if (leq(v, u) && !leq(w, u)) return "order is not transitive";
    }
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v)
      if (leq(w, v))
        for (int ind : domain[w])
          if (!in_domain(v, ind)) return "domains are not monotone";
  for (const auto& [atom, mask] : atoms) {
    for (int w = 0; w < n; ++w) {
      if (!((mask >> w) & 1u)) continue;
      if ((up[w] & ~mask) != 0) return "atom table is not persistent";
      for (int ind : atom.args)
        if (!in_domain(w, ind)) return "atom true outside its arguments' domain";
    }
  }
  for (const auto& [sym, table] : functions)
    for (const auto& [args, val] : table)
      for (int w = 0; w < n; ++w) {
        bool args_in = std::all_of(args.begin(), args.end(),
                                   [&](int a) { return in_domain(w, a); });
        if (args_in && !in_domain(w, val))
          return "function value escapes the domain of world " + std::to_string(w);
      }
  return std::nullopt;
}

namespace {

std::string individual_name(int i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

}  // namespace

std::string KripkeModel::dump() const {
  std::ostringstream out;
  out << "worlds: " << worlds << "\n";
  out << "order:";
  bool any = false;
  for (int w = 0; w < worlds; ++w)
    for (int v = 0; v < worlds; ++v)
      if (w != v && leq(w, v)) {
        out << " " << w << "<" << v;
        any = true;
      }
  if (!any) out << " (discrete)";
  out << "\n";
  for (int w = 0; w < worlds; ++w) {
    out << "world " << w << ": domain={";
    for (std::size_t i = 0; i < domain[w].size(); ++i)
      out << (i ? "," : "") << individual_name(domain[w][i]);
    out << "} atoms={";
    bool first = true;
    for (const auto& [atom, mask] : atoms) {
      if (!((mask >> w) & 1u)) continue;
      if (!first) out << ", ";
      first = false;
      out << atom.pred;
      if (!atom.args.empty()) {
        out << "(";
        for (std::size_t i = 0; i < atom.args.size(); ++i)
          out << (i ? "," : "") << individual_name(atom.args[i]);
        out << ")";
      }
    }
    out << "}\n";
  }
  return out.str();
}

std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::all_posets: return "allposets";
    case ModelClass::linear: return "linear";
    case ModelClass::constant_domain: return "constantdomain";
    case ModelClass::linear_constant_domain: return "linearconstantdomain";
  }
  return "?";
}

std::optional<ModelClass> model_class_from_name(std::string_view name) {
  if (name == "allposets") return ModelClass::all_posets;
  if (name == "linear") return ModelClass::linear;
  if (name == "constantdomain") return ModelClass::constant_domain;
  if (name == "linearconstantdomain") return ModelClass::linear_constant_domain;
  return std::nullopt;
}

bool in_class(const KripkeModel& m, ModelClass c) {
  bool need_linear = c == ModelClass::linear || c == ModelClass::linear_constant_domain;
  bool need_constant = c == ModelClass::constant_domain || c == ModelClass::linear_constant_domain;
  if (need_linear)
    for (int w = 0; w < m.worlds; ++w)
      for (int v = 0; v < m.worlds; ++v)
        if (!m.leq(w, v) && !m.leq(v, w)) return false;
  if (need_constant)
    for (int w = 1; w < m.worlds; ++w)
      if (m.domain[w] != m.domain[0]) return false;
  return true;
}

// Forcing -----------------------------------------------------------------------

namespace {

int eval_term(const KripkeModel& m, const Env& env, const Term& t) {
  if (t.is_var()) {
    auto it = env.find(t.as_var());
    if (it == env.end())
      throw SemanticsError(SemanticsErrorKind::env_incomplete,
                           "no individual assigned to variable '" + t.as_var().name + "'");
    return it->second;
  }
  std::vector<int> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_term(m, env, a));
  auto fit = m.functions.find(t.symbol());
  if (fit == m.functions.end())
    throw SemanticsError(SemanticsErrorKind::uninterpreted_symbol,
                         "function symbol '" + t.symbol() + "' is not interpreted");
  auto vit = fit->second.find(args);
  if (vit == fit->second.end())
    throw SemanticsError(SemanticsErrorKind::uninterpreted_symbol,
                         "function '" + t.symbol() + "' undefined on given arguments");
  return vit->second;
}

// Bitmask of worlds forcing f under env. Sound at every world whose domain
// contains env's range; monotone domains keep all v >= w sound once w is.
std::uint32_t eval_mask(const KripkeModel& m, Env& env, const Formula& f) {
  const std::uint32_t all = m.worlds == 32 ? ~0u : (1u << m.worlds) - 1;
  switch (f.kind()) {
    case FKind::bottom:
      return 0;
    case FKind::atom: {
      GroundAtom ga{f.predicate(), {}};
      ga.args.reserve(f.args().size());
      for (const auto& t : f.args()) ga.args.push_back(eval_term(m, env, t));
      auto it = m.atoms.find(ga);
      return it == m.atoms.end() ? 0 : it->second;
    }
    case FKind::conj:
      return eval_mask(m, env, f.lhs()) & eval_mask(m, env, f.rhs());
    case FKind::disj:
      return eval_mask(m, env, f.lhs()) | eval_mask(m, env, f.rhs());
    case FKind::impl: {
      std::uint32_t lhs = eval_mask(m, env, f.lhs());
      std::uint32_t rhs = eval_mask(m, env, f.rhs());
      std::uint32_t out = 0;
      for (int w = 0; w < m.worlds; ++w)
        if ((m.up[w] & lhs & ~rhs) == 0) out |= 1u << w;
      return out;
    }
    case FKind::forall:
    case FKind::exists: {
      const Variable x{f.bound_var(), Scope::local};
      auto saved = env.find(x) != env.end() ? std::optional<int>(env[x]) : std::nullopt;
      // Individuals ever present in some domain.
      std::vector<int> pool;
      for (int w = 0; w < m.worlds; ++w)
        for (int ind : m.domain[w])
          if (std::find(pool.begin(), pool.end(), ind) == pool.end()) pool.push_back(ind);
      std::sort(pool.begin(), pool.end());
      std::map<int, std::uint32_t> body_mask;
      for (int ind : pool) {
        env[x] = ind;
        body_mask[ind] = eval_mask(m, env, f.body());
      }
      if (saved)
        env[x] = *saved;
      else
        env.erase(x);
      std::uint32_t out = 0;
      if (f.kind() == FKind::exists) {
        for (int w = 0; w < m.worlds; ++w)
          for (int ind : m.domain[w])
            if ((body_mask[ind] >> w) & 1u) {
              out |= 1u << w;
              break;
            }
        return out;
      }
      // forall: hold at w iff every v >= w forces the body for all of dom(v).
      std::uint32_t everywhere = 0;
      for (int v = 0; v < m.worlds; ++v) {
        bool ok = true;
        for (int ind : m.domain[v])
          if (!((body_mask[ind] >> v) & 1u)) {
            ok = false;
            break;
          }
        if (ok) everywhere |= 1u << v;
      }
      for (int w = 0; w < m.worlds; ++w)
        if ((m.up[w] & ~everywhere) == 0) out |= 1u << w;
      return out & all;
    }
  }
  return 0;
}

}  // namespace

bool forces(const KripkeModel& m, int w, const Env& env, const Formula& f) {
  if (w < 0 || w >= m.worlds)
    throw SemanticsError(SemanticsErrorKind::individual_out_of_domain, "world index out of range");
  for (const auto& v : free_vars(f)) {
    auto it = env.find(v);
    if (it == env.end())
      throw SemanticsError(SemanticsErrorKind::env_incomplete,
                           "environment misses variable '" + v.name + "'");
    if (!m.in_domain(w, it->second))
      throw SemanticsError(
          SemanticsErrorKind::individual_out_of_domain,
          "individual for '" + v.name + "' is outside the domain of world " + std::to_string(w));
  }
  Env e = env;
  return (eval_mask(m, e, f) >> w) & 1u;
}

bool valid_in(const KripkeModel& m, const Formula& f) {
  if (!free_vars(f).empty())
    throw SemanticsError(SemanticsErrorKind::env_incomplete, "valid_in needs a closed formula");
  Env env;
  std::uint32_t mask = eval_mask(m, env, f);
  const std::uint32_t all = m.worlds == 32 ? ~0u : (1u << m.worlds) - 1;
  return (mask & all) == all;
}

// Signature ----------------------------------------------------------------------

namespace {

void signature_walk(const Formula& f, std::map<std::string, std::size_t>& out) {
  switch (f.kind()) {
    case FKind::bottom:
      return;
    case FKind::atom: {
      auto [it, inserted] = out.emplace(f.predicate(), f.args().size());
      if (!inserted && it->second != f.args().size())
        throw SemanticsError(SemanticsErrorKind::bounds_too_large,
                             "predicate '" + f.predicate() + "' used with two arities");
      for (const auto& t : f.args())
        if (!t.is_var())
          throw SemanticsError(SemanticsErrorKind::bounds_too_large,
                               "function symbols are excluded from model enumeration");
      return;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      signature_walk(f.lhs(), out);
      signature_walk(f.rhs(), out);
      return;
    case FKind::forall:
    case FKind::exists:
      signature_walk(f.body(), out);
      return;
  }
}

bool has_quantifier(const Formula& f) {
  switch (f.kind()) {
    case FKind::bottom:
    case FKind::atom:
      return false;
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      return has_quantifier(f.lhs()) || has_quantifier(f.rhs());
    case FKind::forall:
    case FKind::exists:
      return true;
  }
  return false;
}

}  // namespace

std::map<std::string, std::size_t> formula_signature(const Formula& f) {
  std::map<std::string, std::size_t> out;
  signature_walk(f, out);
  return out;
}

// Enumeration ---------------------------------------------------------------------

namespace {

// Strict order encoded over the off-diagonal bits of an n*n matrix, row major.
struct PosetScratch {
  int n;
  std::vector<std::uint32_t> up;

  bool leq(int i, int j) const { return (up[i] >> j) & 1u; }
};

std::uint64_t poset_key(const PosetScratch& p, const std::vector<int>& perm) {
  std::uint64_t key = 0;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      key <<= 1;
      if (p.leq(perm[i], perm[j])) key |= 1;
    }
  return key;
}

bool is_canonical(const PosetScratch& p) {
  std::vector<int> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t base = poset_key(p, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    if (poset_key(p, perm) < base) return false;
  return true;
}

// All canonical posets on n labeled worlds, in ascending encoding order.
std::vector<std::vector<std::uint32_t>> canonical_posets(int n, bool linear_only) {
  std::vector<std::vector<std::uint32_t>> out;
  const int pairs = n * n - n;
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) idx.push_back({i, j});
  for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
    PosetScratch p{n, std::vector<std::uint32_t>(n)};
    for (int i = 0; i < n; ++i) p.up[i] |= 1u << i;
    for (int b = 0; b < pairs; ++b)
      if ((bits >> b) & 1u) p.up[idx[b].first] |= 1u << idx[b].second;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && p.leq(i, j) && p.leq(j, i)) ok = false;  // antisymmetry
        if (p.leq(i, j) && (p.up[j] & ~p.up[i]) != 0) ok = false;  // transitivity
        if (linear_only && i != j && !p.leq(i, j) && !p.leq(j, i)) ok = false;
      }
    if (!ok) continue;
    if (!is_canonical(p)) continue;
    out.push_back(p.up);
  }
  return out;
}

void tuples(int arity, int pool, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (arity == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < pool; ++i) {
    cur.push_back(i);
    tuples(arity - 1, pool, cur, out);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_models(ModelClass cls, const SearchBounds& b,
                      const std::map<std::string, std::size_t>& signature,
                      const std::function<bool(const KripkeModel&)>& visit) {
  if (b.max_worlds < 1 || b.max_worlds > kMaxWorldsCap || b.max_domain < 0 ||
      b.max_domain > kMaxDomainCap || b.max_atoms < 0 || b.max_atoms > kMaxAtomsCap)
    throw SemanticsError(SemanticsErrorKind::bounds_too_large,
                         "bounds exceed the desk-scale caps (worlds<=4, domain<=3, atoms<=3)");
  if (static_cast<int>(signature.size()) > b.max_atoms)
    throw SemanticsError(SemanticsErrorKind::bounds_too_large,
                         "signature has more predicate symbols than max_atoms");
  const bool linear = cls == ModelClass::linear || cls == ModelClass::linear_constant_domain;
  const bool constant = cls == ModelClass::constant_domain || cls == ModelClass::linear_constant_domain;

  for (int n = 1; n <= b.max_worlds; ++n) {
    for (const auto& up : canonical_posets(n, linear)) {
      // Domain assignments: nonempty monotone subsets of the pool; the whole
      // pool collapses to sizes for the constant classes.
      std::vector<std::vector<std::uint32_t>> domain_masks;
      if (b.max_domain == 0) {
        domain_masks.push_back(std::vector<std::uint32_t>(n, 0));
      } else if (constant) {
        for (int size = 1; size <= b.max_domain; ++size)
          domain_masks.push_back(std::vector<std::uint32_t>(n, (1u << size) - 1));
      } else {
        std::vector<std::uint32_t> cur(n);
        const std::uint32_t dmax = 1u << b.max_domain;
        std::function<void(int)> rec = [&](int w) {
          if (w == n) {
            domain_masks.push_back(cur);
            return;
          }
          for (std::uint32_t mask = 1; mask < dmax; ++mask) {
            bool mono = true;
            for (int v = 0; v < w && mono; ++v) {
              if (((up[v] >> w) & 1u) && (cur[v] & ~mask) != 0) mono = false;
              if (((up[w] >> v) & 1u) && (mask & ~cur[v]) != 0) mono = false;
            }
            if (!mono) continue;
            cur[w] = mask;
            rec(w + 1);
          }
        };
        rec(0);
      }

      for (const auto& dmask : domain_masks) {
        KripkeModel m;
        m.worlds = n;
        m.up = up;
        m.domain.assign(n, {});
        for (int w = 0; w < n; ++w)
          for (int i = 0; i < b.max_domain; ++i)
            if ((dmask[w] >> i) & 1u) m.domain[w].push_back(i);

        // Ground atoms with their admissible persistent truth masks.
        std::vector<GroundAtom> ground;
        for (const auto& [pred, arity] : signature) {
          std::vector<std::vector<int>> argv;
          std::vector<int> cur;
          tuples(static_cast<int>(arity), b.max_domain, cur, argv);
          for (auto& args : argv) ground.push_back({pred, std::move(args)});
        }
        std::vector<std::vector<std::uint32_t>> choices(ground.size());
        for (std::size_t g = 0; g < ground.size(); ++g) {
          for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) {
              if (!((mask >> w) & 1u)) continue;
              if ((up[w] & ~mask) != 0) ok = false;  // persistence
              for (int a : ground[g].args)
                if (!((dmask[w] >> a) & 1u)) ok = false;  // args live in dom(w)
            }
            if (ok) choices[g].push_back(mask);
          }
        }
        std::vector<std::size_t> pick(ground.size(), 0);
        while (true) {
          m.atoms.clear();
          for (std::size_t g = 0; g < ground.size(); ++g)
            if (choices[g][pick[g]] != 0) m.atoms[ground[g]] = choices[g][pick[g]];
          if (!visit(m)) return;
          std::size_t g = ground.size();
          while (g > 0) {
            --g;
            if (++pick[g] < choices[g].size()) break;
            pick[g] = 0;
            if (g == 0) goto next_domain;
          }
          if (ground.empty()) break;
        }
      next_domain:;
      }
    }
  }
}

std::optional<KripkeModel> countermodel_search(const Formula& f, ModelClass cls,
                                               const SearchBounds& b) {
  auto sig = formula_signature(f);
  if (!free_vars(f).empty())
    throw SemanticsError(SemanticsErrorKind::env_incomplete,
                         "countermodel search needs a closed formula");
  if (has_quantifier(f) && b.max_domain == 0)
    throw SemanticsError(SemanticsErrorKind::bounds_too_large,
                         "a quantified formula needs max_domain >= 1");
  std::optional<KripkeModel> found;
  enumerate_models(cls, b, sig, [&](const KripkeModel& m) {
    if (!valid_in(m, f)) {
      found = m;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace hyperseq
