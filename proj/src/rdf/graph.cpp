#include "afkg/rdf/graph.hpp"

#include "afkg/error.hpp"

namespace afkg::rdf {

bool Graph::insert(Triple t) {
  if (t.subject.is_literal())
    throw Error("triple subject cannot be a literal");
  if (!t.predicate.is_iri())
    throw Error("triple predicate must be an IRI");
  auto [it, fresh] = spo_.insert(std::move(t));
  if (fresh) {
    pos_.insert(*it);
    osp_.insert(*it);
  }
  return fresh;
}

bool Graph::has_blank_nodes() const {
  for (const auto& t : spo_)
    if (t.subject.is_blank() || t.object.is_blank()) return true;
  return false;
}

void Graph::add_prefix(const std::string& prefix, const std::string& ns) {
  prefixes_[prefix] = ns;
}

void Graph::merge(const Graph& other) {
  for (const auto& [prefix, ns] : other.prefixes_) add_prefix(prefix, ns);
  for (const auto& t : other.spo_) insert(t);
}

bool graphs_equal(const Graph& a, const Graph& b) {
  if (a.has_blank_nodes() || b.has_blank_nodes())
    throw Error("graphs_equal: blank nodes are not supported");
  return a.triples() == b.triples();
}

}  // namespace afkg::rdf
