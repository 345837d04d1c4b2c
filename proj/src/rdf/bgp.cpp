#include "afkg/rdf/bgp.hpp"

#include <algorithm>

#include "afkg/error.hpp"

namespace afkg::rdf {

namespace {

void collect_vars(const std::vector<TriplePattern>& pats,
                  std::vector<std::string>& out) {
  for (const auto& p : pats)
    for (const PatternTerm* pt : {&p.subject, &p.predicate, &p.object})
      if (is_var(*pt)) out.push_back(var_of(*pt));
}

}  // namespace

BgpQuery::BgpQuery(std::vector<PatternGroup> groups,
                   std::vector<std::string> projected, bool distinct)
    : groups_(std::move(groups)),
      projected_(std::move(projected)),
      distinct_(distinct) {
  std::vector<std::string> seen;
  for (const auto& g : groups_) {
    collect_vars(g.patterns, seen);
    collect_vars(g.union_alternative, seen);
  }
  for (const auto& v : projected_) {
    if (v.empty()) throw Error("projected variable name is empty");
    if (std::find(seen.begin(), seen.end(), v) == seen.end())
      throw Error("projected variable ?" + v + " occurs in no pattern");
  }
}

namespace {

// Resolves a pattern position under a partial binding.
const Term* resolve(const PatternTerm& pt, const Binding& b) {
  if (!is_var(pt)) return &term_of(pt);
  auto it = b.find(var_of(pt));
  return it == b.end() ? nullptr : &it->second;
}

// Unifies a candidate triple against the pattern, extending `b` in place.
bool unify(const Triple& t, const TriplePattern& p, Binding& b) {
  const Term* vals[3] = {&t.subject, &t.predicate, &t.object};
  const PatternTerm* pats[3] = {&p.subject, &p.predicate, &p.object};
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

template <typename IndexSet>
void scan_range(const IndexSet& index, const PrefixKey& key,
                const TriplePattern& p, const Binding& seed,
                std::vector<Binding>& out) {
  auto lo = index.lower_bound(key);
  auto hi = index.upper_bound(key);
  for (auto it = lo; it != hi; ++it) {
    Binding b = seed;
    if (unify(*it, p, b)) out.push_back(std::move(b));
  }
}

}  // namespace

std::vector<Binding> match_pattern(const Graph& g, const TriplePattern& p,
                                   const Binding& seed) {
  const Term* s = resolve(p.subject, seed);
  const Term* pr = resolve(p.predicate, seed);
  const Term* o = resolve(p.object, seed);

  auto opt = [](const Term* t) {
    return t ? std::optional<Term>(*t) : std::nullopt;
  };

  // Longest concrete prefix wins; SPO preferred on ties.
  int spo_len = s ? (pr ? (o ? 3 : 2) : 1) : 0;
  int pos_len = pr ? (o ? 2 : 1) : 0;
  int osp_len = o ? (s ? 2 : 1) : 0;

  std::vector<Binding> out;
  if (spo_len >= pos_len && spo_len >= osp_len) {
    scan_range(g.triples(), PrefixKey{opt(s), opt(pr), opt(o)}, p, seed, out);
  } else if (pos_len >= osp_len) {
    scan_range(g.pos_index(), PrefixKey{opt(pr), opt(o), opt(s)}, p, seed, out);
  } else {
    scan_range(g.osp_index(), PrefixKey{opt(o), opt(s), opt(pr)}, p, seed, out);
  }
  return out;
}

namespace {

std::vector<Binding> join_conjunction(const Graph& g,
                                      const std::vector<TriplePattern>& pats,
                                      std::vector<Binding> solutions) {
  for (const auto& p : pats) {
    std::vector<Binding> next;
    for (const auto& sol : solutions) {
      auto extended = match_pattern(g, p, sol);
      next.insert(next.end(), std::make_move_iterator(extended.begin()),
                  std::make_move_iterator(extended.end()));
    }
    solutions = std::move(next);
    if (solutions.empty()) break;
  }
  return solutions;
}

}  // namespace

bool binding_less(const Binding& a, const Binding& b,
                  const std::vector<std::string>& vars) {
  for (const auto& v : vars) {
    auto ia = a.find(v);
    auto ib = b.find(v);
    bool ha = ia != a.end(), hb = ib != b.end();
    if (ha != hb) return !ha;  // absent sorts first
    if (ha && ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

std::vector<Binding> match_bgp(const Graph& g, const BgpQuery& q) {
  std::vector<Binding> solutions{Binding{}};
  for (const auto& group : q.groups()) {
    if (!group.is_union) {
      solutions = join_conjunction(g, group.patterns, std::move(solutions));
    } else {
      auto left = join_conjunction(g, group.patterns, solutions);
      auto right = join_conjunction(g, group.union_alternative, solutions);
      solutions = std::move(left);
      solutions.insert(solutions.end(), std::make_move_iterator(right.begin()),
                       std::make_move_iterator(right.end()));
    }
    if (solutions.empty()) break;
  }

  // Project onto the requested variables.
  std::vector<Binding> projected;
  projected.reserve(solutions.size());
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
                     return binding_less(a, b, q.projected());
                   });
  if (q.distinct())
    projected.erase(std::unique(projected.begin(), projected.end()),
                    projected.end());
  return projected;
}

}  // namespace afkg::rdf
