#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "afkg/rdf/graph.hpp"

namespace afkg::rdf {

/// A named query variable. Names are non-empty and case-sensitive.
struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

/// A pattern position: either a concrete term or a variable.
using PatternTerm = std::variant<Term, Variable>;

inline bool is_var(const PatternTerm& p) { return p.index() == 1; }
inline const Term& term_of(const PatternTerm& p) { return std::get<Term>(p); }
inline const std::string& var_of(const PatternTerm& p) {
  return std::get<Variable>(p).name;
}

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;
};

/// One solution: variable name -> term. Variables a branch never touched
/// are simply absent.
using Binding = std::map<std::string, Term>;

/// A pattern group: either a plain conjunction, or the union of two
/// conjunctions.
struct PatternGroup {
  std::vector<TriplePattern> patterns;             // conjunction
  std::vector<TriplePattern> union_alternative;    // second UNION branch
  bool is_union = false;
};

/// A conjunctive query with optional UNION groups, projection, and DISTINCT.
class BgpQuery {
 public:
  /// Throws if a projected variable occurs in no pattern.
  BgpQuery(std::vector<PatternGroup> groups, std::vector<std::string> projected,
           bool distinct);

  const std::vector<PatternGroup>& groups() const { return groups_; }
  const std::vector<std::string>& projected() const { return projected_; }
  bool distinct() const { return distinct_; }

 private:
  std::vector<PatternGroup> groups_;
  std::vector<std::string> projected_;
  bool distinct_;
};

/// Bindings whose substitution into `p` yields a triple of `g`. Answered
/// from whichever index has the longest concrete prefix; full scan only
/// when all three positions are variables. Extends `seed` and honors its
/// existing assignments.
std::vector<Binding> match_pattern(const Graph& g, const TriplePattern& p,
                                   const Binding& seed = {});

/// Left-to-right conjunctive join; UNION is bag union of branch solutions;
/// DISTINCT deduplicates on the projected variables. Output is projected
/// and sorted lexicographically by the projected variable terms.
std::vector<Binding> match_bgp(const Graph& g, const BgpQuery& q);

/// Orders bindings by the given variable list; absent variables sort first.
bool binding_less(const Binding& a, const Binding& b,
                  const std::vector<std::string>& vars);

}  // namespace afkg::rdf
