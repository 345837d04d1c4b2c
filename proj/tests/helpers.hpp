#pragma once

// Shared test support: fixture loading, deterministic random graph/query
// generation, and a brute-force nested-loop join oracle for BGP queries.

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "afkg/rdf/bgp.hpp"
#include "afkg/rdf/turtle.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(AFKG_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string read_fixture(const std::string& name) {
  return read_file(fixture_path(name));
}

inline afkg::rdf::Graph load_fixtures(const std::vector<std::string>& names) {
  afkg::rdf::Graph g;
  for (const auto& n : names) g.merge(afkg::rdf::parse_turtle(read_fixture(n)));
  return g;
}

inline std::string replace_once(std::string text, const std::string& from,
                                const std::string& to) {
  auto at = text.find(from);
  if (at == std::string::npos)
    throw std::runtime_error("mutation anchor not found: " + from);
  return text.replace(at, from.size(), to);
}

// ---------------------------------------------------------------------------
// Random ground graphs over a small term universe.

struct TermPool {
  std::vector<afkg::rdf::Term> subjects, predicates, objects;
};

inline TermPool make_pool(std::mt19937& rng) {
  using afkg::rdf::Term;
  TermPool pool;
  std::uniform_int_distribution<int> n_sub(3, 8), n_pred(2, 5), n_obj(4, 10);
  int ns = n_sub(rng), np = n_pred(rng), no = n_obj(rng);
  for (int i = 0; i < ns; ++i)
    pool.subjects.push_back(Term::iri("http://example.org/s" + std::to_string(i)));
  for (int i = 0; i < np; ++i)
    pool.predicates.push_back(Term::iri("http://example.org/p" + std::to_string(i)));
  for (int i = 0; i < no; ++i) {
    switch (i % 3) {
      case 0:
        pool.objects.push_back(Term::iri("http://example.org/o" + std::to_string(i)));
        break;
      case 1:
        pool.objects.push_back(Term::literal("value " + std::to_string(i)));
        break;
      default:
        pool.objects.push_back(Term::literal(std::to_string(i), "",
                                             "http://www.w3.org/2001/XMLSchema#integer"));
        break;
    }
  }
  // Subjects can also appear as objects, producing join chains.
  pool.objects.insert(pool.objects.end(), pool.subjects.begin(),
                      pool.subjects.end());
  return pool;
}

inline afkg::rdf::Graph random_graph(std::mt19937& rng, const TermPool& pool,
                                     std::size_t max_triples) {
  afkg::rdf::Graph g;
  std::uniform_int_distribution<std::size_t> n_triples(0, max_triples);
  std::size_t n = n_triples(rng);
  auto pick = [&](const std::vector<afkg::rdf::Term>& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };
  for (std::size_t i = 0; i < n; ++i)
    g.insert(pick(pool.subjects), pick(pool.predicates), pick(pool.objects));
  return g;
}

// ---------------------------------------------------------------------------
// Random queries: up to `max_patterns` patterns, optional trailing UNION
// group and DISTINCT. Terms are drawn from the pool so joins can succeed.

inline afkg::rdf::TriplePattern random_pattern(std::mt19937& rng,
                                               const TermPool& pool) {
  using afkg::rdf::PatternTerm;
  using afkg::rdf::Variable;
  static const std::vector<std::string> var_names{"a", "b", "c", "d"};
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::size_t> var_pick(0, var_names.size() - 1);
  auto pick = [&](const std::vector<afkg::rdf::Term>& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };
  auto position = [&](const std::vector<afkg::rdf::Term>& v) -> PatternTerm {
    if (coin(rng)) return Variable{var_names[var_pick(rng)]};
    return pick(v);
  };
  return {position(pool.subjects), position(pool.predicates),
          position(pool.objects)};
}

inline afkg::rdf::BgpQuery random_query(std::mt19937& rng, const TermPool& pool,
                                        std::size_t max_patterns) {
  using afkg::rdf::PatternGroup;
  std::uniform_int_distribution<std::size_t> n_pat(1, max_patterns);
  std::uniform_int_distribution<int> coin(0, 1);
  std::size_t n = n_pat(rng);
  bool with_union = n >= 2 && coin(rng);

  std::vector<PatternGroup> groups;
  PatternGroup conj;
  std::size_t plain = with_union ? n - 2 : n;
  for (std::size_t i = 0; i < plain; ++i)
    conj.patterns.push_back(random_pattern(rng, pool));
  if (!conj.patterns.empty()) groups.push_back(std::move(conj));
  if (with_union) {
    PatternGroup u;
    u.is_union = true;
    u.patterns = {random_pattern(rng, pool)};
    u.union_alternative = {random_pattern(rng, pool)};
    groups.push_back(std::move(u));
  }

  // Project a nonempty subset of the variables that actually occur.
  std::vector<std::string> used;
  auto collect = [&](const std::vector<afkg::rdf::TriplePattern>& pats) {
    for (const auto& p : pats)
      for (const afkg::rdf::PatternTerm* pt : {&p.subject, &p.predicate, &p.object})
        if (afkg::rdf::is_var(*pt) &&
            std::find(used.begin(), used.end(), afkg::rdf::var_of(*pt)) == used.end())
          used.push_back(afkg::rdf::var_of(*pt));
  };
  for (const auto& g : groups) {
    collect(g.patterns);
    collect(g.union_alternative);
  }
  std::vector<std::string> projected;
  if (used.empty()) {
    // Variable-free query: project nothing.
  } else {
    for (const auto& v : used)
      if (coin(rng)) projected.push_back(v);
    if (projected.empty()) projected.push_back(used.front());
  }
  return afkg::rdf::BgpQuery(std::move(groups), std::move(projected), coin(rng) == 1);
}

// ---------------------------------------------------------------------------
// Brute-force oracle: nested-loop join over the plain triple list, mirroring
// match_bgp's group semantics, projection, ordering, and DISTINCT.

inline bool oracle_unify(const afkg::rdf::Triple& t,
                         const afkg::rdf::TriplePattern& p,
                         afkg::rdf::Binding& b) {
  using afkg::rdf::is_var;
  using afkg::rdf::term_of;
  using afkg::rdf::var_of;
  const afkg::rdf::Term* vals[3] = {&t.subject, &t.predicate, &t.object};
  const afkg::rdf::PatternTerm* pats[3] = {&p.subject, &p.predicate, &p.object};
  for (int i = 0; i < 3; ++i) {
    if (!is_var(*pats[i])) {
      if (term_of(*pats[i]) != *vals[i]) return false;
    } else {
      auto [it, fresh] = b.emplace(var_of(*pats[i]), *vals[i]);
      if (!fresh && it->second != *vals[i]) return false;
    }
  }
  return true;
}

inline void oracle_join(const std::vector<afkg::rdf::Triple>& triples,
                        const std::vector<afkg::rdf::TriplePattern>& pats,
                        std::size_t at, const afkg::rdf::Binding& partial,
                        std::vector<afkg::rdf::Binding>& out) {
  if (at == pats.size()) {
    out.push_back(partial);
    return;
  }
  for (const auto& t : triples) {
    afkg::rdf::Binding b = partial;
    if (oracle_unify(t, pats[at], b)) oracle_join(triples, pats, at + 1, b, out);
  }
}

inline std::vector<afkg::rdf::Binding> oracle_bgp(const afkg::rdf::Graph& g,
                                                  const afkg::rdf::BgpQuery& q) {
  using afkg::rdf::Binding;
  std::vector<afkg::rdf::Triple> triples(g.begin(), g.end());

  std::vector<Binding> solutions{Binding{}};
  for (const auto& group : q.groups()) {
    std::vector<Binding> next;
    for (const auto& sol : solutions) {
      if (!group.is_union) {
        oracle_join(triples, group.patterns, 0, sol, next);
      } else {
        oracle_join(triples, group.patterns, 0, sol, next);
        oracle_join(triples, group.union_alternative, 0, sol, next);
      }
    }
    solutions = std::move(next);
  }

  std::vector<Binding> projected;
  for (const auto& sol : solutions) {
    Binding row;
    for (const auto& v : q.projected()) {
      auto it = sol.find(v);
      if (it != sol.end()) row.emplace(v, it->second);
    }
    projected.push_back(std::move(row));
  }
  std::stable_sort(projected.begin(), projected.end(),
                   [&](const Binding& a, const Binding& b) {
                     return afkg::rdf::binding_less(a, b, q.projected());
                   });
  if (q.distinct())
    projected.erase(std::unique(projected.begin(), projected.end()),
                    projected.end());
  return projected;
}

}  // namespace testutil
