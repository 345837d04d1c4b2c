#include "afkg/blend/occurrence_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "afkg/error.hpp"
#include "afkg/rdf/bgp.hpp"
#include "afkg/rdf/turtle.hpp"

namespace afkg::blend {

using nlohmann::json;

FrameOccurrence occurrence_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("bad occurrence JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("frame") || !j["frame"].is_string())
    throw Error("occurrence JSON needs a \"frame\" IRI");
  FrameOccurrence occ;
  occ.frame = j["frame"].get<std::string>();
  occ.id = j.value("id", "urn:afkg:occurrence");
  for (const auto& b : j.value("bindings", json::array())) {
    if (!b.is_object() || !b.contains("role") || !b.contains("entity"))
      throw Error("each binding needs \"role\" and \"entity\"");
    RoleBinding rb{b["role"].get<std::string>(), b["entity"].get<std::string>()};
    if (rb.role.empty() || rb.entity.empty())
      throw Error("binding role and entity must be non-empty");
    occ.bindings.push_back(std::move(rb));
  }
  return occ;
}

FrameOccurrence occurrence_from_turtle(const std::string& text,
                                       const schema::Vocab& vocab) {
  rdf::Graph g = rdf::parse_turtle(text);
  using rdf::Term;
  using rdf::TriplePattern;
  using rdf::Variable;

  auto frame_links = rdf::match_pattern(
      g, TriplePattern{Variable{"occ"}, Term::iri(vocab.at(schema::Vocab::kOccurrenceOf)),
                       Variable{"frame"}});
  if (frame_links.size() != 1)
    throw Error("occurrence Turtle must describe exactly one occurrence, found " +
                std::to_string(frame_links.size()));
  const Term& occ_term = frame_links[0].at("occ");
  FrameOccurrence occ;
  occ.id = occ_term.is_iri() ? occ_term.value : "_:" + occ_term.value;
  occ.frame = frame_links[0].at("frame").value;

  auto bindings = rdf::match_pattern(
      g, TriplePattern{occ_term, Term::iri(vocab.at(schema::Vocab::kHasBinding)),
                       Variable{"b"}});
  for (const auto& row : bindings) {
    const Term& node = row.at("b");
    auto roles = rdf::match_pattern(
        g, TriplePattern{node, Term::iri(vocab.at(schema::Vocab::kBoundRole)),
                         Variable{"r"}});
    auto entities = rdf::match_pattern(
        g, TriplePattern{node, Term::iri(vocab.at(schema::Vocab::kBoundEntity)),
                         Variable{"e"}});
    if (roles.size() != 1 || entities.size() != 1)
      throw Error("binding node needs exactly one boundRole and one boundEntity");
    occ.bindings.push_back(
        {roles[0].at("r").value, entities[0].at("e").value});
  }
  std::sort(occ.bindings.begin(), occ.bindings.end(),
            [](const RoleBinding& a, const RoleBinding& b) {
              return a.role < b.role;
            });
  return occ;
}

FrameOccurrence occurrence_from_file(const std::string& path,
                                     const schema::Vocab& vocab) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open occurrence file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return occurrence_from_json(text);
  return occurrence_from_turtle(text, vocab);
}

void check_occurrence(const schema::KnowledgeBase& kb,
                      const FrameOccurrence& occ) {
  const schema::Frame* f = kb.find_frame(occ.frame);
  if (!f) return;
  for (const auto& b : occ.bindings) {
    bool ok = std::any_of(f->roles.begin(), f->roles.end(),
                          [&](const auto& r) { return r.id == b.role; });
    if (!ok)
      throw Error("binding role " + b.role + " is not a role of frame " +
                  occ.frame);
  }
}

std::string blended_occurrence_to_json(const BlendedOccurrence& b) {
  json j;
  j["id"] = b.id;
  j["frame"] = b.frame;
  j["policy"] = b.policy == IdentificationPolicy::Economic ? "economic"
                                                           : "multiplicative";
  j["bindings"] = json::array();
  auto sorted = b.bindings;
  std::sort(sorted.begin(), sorted.end(),
            [](const RoleBinding& x, const RoleBinding& y) {
              return std::tie(x.role, x.entity) < std::tie(y.role, y.entity);
            });
  for (const auto& rb : sorted)
    j["bindings"].push_back({{"role", rb.role}, {"entity", rb.entity}});
  j["merged_entities"] = json::array();
  for (const auto& m : b.merged_entities)
    j["merged_entities"].push_back(
        {{"role", m.role}, {"members", m.members}, {"result", m.result}});
  return j.dump(2);
}

}  // namespace afkg::blend
