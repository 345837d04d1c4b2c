#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "afkg/rdf/term.hpp"

namespace afkg::rdf {

/// Prefix-range key for the transparent index comparators. Components are
/// given in the index's own order; a missing component leaves that position
/// unconstrained, so lower_bound/upper_bound bracket the whole prefix range.
struct PrefixKey {
  std::optional<Term> a;
  std::optional<Term> b;
  std::optional<Term> c;
};

namespace detail {

// A, B, C select triple positions: 0 = subject, 1 = predicate, 2 = object.
template <int P>
inline const Term& pos(const Triple& t) {
  if constexpr (P == 0) return t.subject;
  else if constexpr (P == 1) return t.predicate;
  else return t.object;
}

template <int A, int B, int C>
struct TripleOrder {
  using is_transparent = void;

  bool operator()(const Triple& x, const Triple& y) const {
    if (auto c = pos<A>(x) <=> pos<A>(y); c != 0) return c < 0;
    if (auto c = pos<B>(x) <=> pos<B>(y); c != 0) return c < 0;
    return pos<C>(x) < pos<C>(y);
  }

  bool operator()(const Triple& x, const PrefixKey& k) const {
    if (!k.a) return false;
    if (auto c = pos<A>(x) <=> *k.a; c != 0) return c < 0;
    if (!k.b) return false;
    if (auto c = pos<B>(x) <=> *k.b; c != 0) return c < 0;
    if (!k.c) return false;
    return pos<C>(x) < *k.c;
  }

  bool operator()(const PrefixKey& k, const Triple& x) const {
    if (!k.a) return false;
    if (auto c = *k.a <=> pos<A>(x); c != 0) return c < 0;
    if (!k.b) return false;
    if (auto c = *k.b <=> pos<B>(x); c != 0) return c < 0;
    if (!k.c) return false;
    return *k.c < pos<C>(x);
  }
};

}  // namespace detail

using SpoOrder = detail::TripleOrder<0, 1, 2>;
using PosOrder = detail::TripleOrder<1, 2, 0>;
using OspOrder = detail::TripleOrder<2, 0, 1>;

/// An indexed triple set with set semantics and a prefix map.
/// Single-writer during construction; immutable and freely shareable after.
class Graph {
 public:
  using SpoSet = std::set<Triple, SpoOrder>;

  /// Inserts one triple. Returns false if it was already present.
  /// Rejects literal subjects and non-IRI predicates.
  bool insert(Triple t);
  bool insert(Term s, Term p, Term o) {
    return insert(Triple{std::move(s), std::move(p), std::move(o)});
  }

  std::size_t size() const { return spo_.size(); }
  bool empty() const { return spo_.empty(); }
  bool contains(const Triple& t) const { return spo_.count(t) != 0; }

  /// Triples in (subject, predicate, object) order.
  SpoSet::const_iterator begin() const { return spo_.begin(); }
  SpoSet::const_iterator end() const { return spo_.end(); }
  const SpoSet& triples() const { return spo_; }

  const std::set<Triple, PosOrder>& pos_index() const { return pos_; }
  const std::set<Triple, OspOrder>& osp_index() const { return osp_; }

  bool has_blank_nodes() const;

  /// prefix -> namespace IRI. Re-declaring a prefix overwrites it.
  void add_prefix(const std::string& prefix, const std::string& ns);
  const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

  /// Adds all triples and prefixes of `other` into this graph.
  void merge(const Graph& other);

 private:
  SpoSet spo_;
  std::set<Triple, PosOrder> pos_;
  std::set<Triple, OspOrder> osp_;
  std::map<std::string, std::string> prefixes_;
};

/// True iff both graphs hold identical triple sets. Rejects graphs with
/// blank nodes (isomorphism checking is out of scope).
bool graphs_equal(const Graph& a, const Graph& b);

}  // namespace afkg::rdf
