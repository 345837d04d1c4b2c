#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "afkg/error.hpp"
#include "afkg/rdf/bgp.hpp"
#include "afkg/schema/kb.hpp"

namespace afkg::schema {

const char* violation_code_name(ViolationCode c) {
  switch (c) {
    case ViolationCode::MissingSourceFrame: return "MissingSourceFrame";
    case ViolationCode::MissingTargetFrame: return "MissingTargetFrame";
    case ViolationCode::UnresolvedRole: return "UnresolvedRole";
    case ViolationCode::ForeignRoleInMapping: return "ForeignRoleInMapping";
    case ViolationCode::InheritanceCycle: return "InheritanceCycle";
    case ViolationCode::SubFrameCycle: return "SubFrameCycle";
    case ViolationCode::DanglingAlignment: return "DanglingAlignment";
    case ViolationCode::DuplicateRoleId: return "DuplicateRoleId";
  }
  return "?";
}

namespace {

// One violation per cycle: the strongly connected components with a cycle,
// reported under their lexicographically smallest member.
void report_cycles(const std::map<Iri, std::vector<Iri>>& edges,
                   ViolationCode code, std::vector<Violation>& out) {
  // Iterative Tarjan.
  std::map<Iri, int> index, lowlink;
  std::set<Iri> on_stack;
  std::vector<Iri> stack;
  int counter = 0;

  struct DfsFrame {
    Iri node;
    std::size_t next_edge = 0;
  };

  for (const auto& [start, _] : edges) {
    if (index.count(start)) continue;
    std::vector<DfsFrame> call;
    call.push_back({start});
    index[start] = lowlink[start] = counter++;
    stack.push_back(start);
    on_stack.insert(start);

    while (!call.empty()) {
      DfsFrame& top = call.back();
      auto eit = edges.find(top.node);
      bool descended = false;
      while (eit != edges.end() && top.next_edge < eit->second.size()) {
        const Iri& to = eit->second[top.next_edge++];
        if (!edges.count(to)) continue;  // dangling target, no node
        if (!index.count(to)) {
          index[to] = lowlink[to] = counter++;
          stack.push_back(to);
          on_stack.insert(to);
          call.push_back({to});
          descended = true;
          break;
        }
        if (on_stack.count(to))
          lowlink[top.node] = std::min(lowlink[top.node], index[to]);
      }
      if (descended) continue;

      if (lowlink[top.node] == index[top.node]) {
        std::vector<Iri> scc;
        while (true) {
          Iri n = stack.back();
          stack.pop_back();
          on_stack.erase(n);
          scc.push_back(n);
          if (n == top.node) break;
        }
        bool self_loop = false;
        if (scc.size() == 1) {
          auto it = edges.find(scc[0]);
          self_loop = it != edges.end() &&
                      std::find(it->second.begin(), it->second.end(), scc[0]) !=
                          it->second.end();
        }
        if (scc.size() > 1 || self_loop) {
          std::sort(scc.begin(), scc.end());
          std::string msg = "cycle through:";
          for (const auto& n : scc) msg += " " + n;
          out.push_back(Violation{code, scc.front(), msg});
        }
      }

      Iri done = top.node;
      call.pop_back();
      if (!call.empty())
        lowlink[call.back().node] =
            std::min(lowlink[call.back().node], lowlink[done]);
    }
  }
}

// Whether `iri` occurs as the subject of any triple.
bool described_in_graph(const rdf::Graph& g, const Iri& iri) {
  rdf::TriplePattern p{rdf::Term::iri(iri), rdf::Variable{"p"},
                       rdf::Variable{"o"}};
  return !rdf::match_pattern(g, p).empty();
}

}  // namespace

std::vector<Violation> validate_kb(const KnowledgeBase& kb) {
  std::vector<Violation> out;

  for (const auto& [id, m] : kb.metaphors) {
    if (m.source_frame.empty())
      out.push_back({ViolationCode::MissingSourceFrame, id,
                     "metaphor has no source frame"});
    if (m.target_frame.empty())
      out.push_back({ViolationCode::MissingTargetFrame, id,
                     "metaphor has no target frame"});

    for (const auto& rm : m.role_mappings) {
      struct Side {
        const Iri& role;
        const Iri& frame;
        const char* name;
      };
      for (const Side& side :
           {Side{rm.source_role, m.source_frame, "source"},
            Side{rm.target_role, m.target_frame, "target"}}) {
        const Role* r = side.role.empty() ? nullptr : kb.find_role(side.role);
        if (!r) {
          out.push_back({ViolationCode::UnresolvedRole, id,
                         std::string(side.name) + " role does not resolve: " +
                             (side.role.empty() ? "<absent>" : side.role)});
        } else if (!side.frame.empty() && kb.frames.count(side.frame) &&
                   r->of_frame != side.frame) {
          out.push_back({ViolationCode::ForeignRoleInMapping, id,
                         std::string(side.name) + " role " + side.role +
                             " belongs to " + r->of_frame + ", not " +
                             side.frame});
        }
      }
    }
  }

  std::map<Iri, std::vector<Iri>> inherit_edges, subframe_edges;
  for (const auto& [id, m] : kb.metaphors) inherit_edges[id] = m.inherits_from;
  for (const auto& [id, f] : kb.frames) subframe_edges[id] = f.sub_frame_of;
  report_cycles(inherit_edges, ViolationCode::InheritanceCycle, out);
  report_cycles(subframe_edges, ViolationCode::SubFrameCycle, out);

  if (kb.graph) {
    for (const auto& [id, f] : kb.frames)
      for (const auto& a : f.alignments)
        if (!described_in_graph(*kb.graph, a.to))
          out.push_back({ViolationCode::DanglingAlignment, id,
                         "alignment target has no description: " + a.to});
  }

  std::map<Iri, std::set<Iri>> role_owners;
  for (const auto& [id, f] : kb.frames)
    for (const auto& r : f.roles) role_owners[r.id].insert(id);
  for (const auto& [rid, owners] : role_owners) {
    if (owners.size() > 1) {
      std::string msg = "role claimed by multiple frames:";
      for (const auto& o : owners) msg += " " + o;
      out.push_back({ViolationCode::DuplicateRoleId, rid, msg});
    }
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const Violation& a, const Violation& b) {
                     if (a.code != b.code) return a.code < b.code;
                     return a.subject < b.subject;
                   });
  return out;
}

namespace {

std::vector<Iri> bfs_ancestors(
    const Iri& start, const std::function<const std::vector<Iri>*(const Iri&)>& edges,
    const char* what) {
  std::vector<Iri> order;
  std::set<Iri> seen;
  std::deque<Iri> queue;
  if (const auto* e = edges(start))
    for (const auto& n : *e) queue.push_back(n);
  while (!queue.empty()) {
    Iri n = queue.front();
    queue.pop_front();
    if (n == start)
      throw Error(std::string(what) + " cycle through " + start);
    if (!seen.insert(n).second) continue;
    order.push_back(n);
    if (const auto* e = edges(n))
      for (const auto& next : *e) queue.push_back(next);
  }
  return order;
}

}  // namespace

std::vector<Iri> metaphor_ancestors(const KnowledgeBase& kb, const Iri& m) {
  if (!kb.metaphors.count(m)) throw Error("unknown metaphor: " + m);
  return bfs_ancestors(
      m,
      [&](const Iri& id) -> const std::vector<Iri>* {
        auto it = kb.metaphors.find(id);
        return it == kb.metaphors.end() ? nullptr : &it->second.inherits_from;
      },
      "inheritance");
}

std::vector<Iri> frame_ancestors(const KnowledgeBase& kb, const Iri& f) {
  if (!kb.frames.count(f)) throw Error("unknown frame: " + f);
  return bfs_ancestors(
      f,
      [&](const Iri& id) -> const std::vector<Iri>* {
        auto it = kb.frames.find(id);
        return it == kb.frames.end() ? nullptr : &it->second.sub_frame_of;
      },
      "sub-frame");
}

CoverageReport alignment_coverage(const KnowledgeBase& kb, AlignmentKind kind) {
  if (kb.frames.empty())
    throw Error("alignment coverage undefined: knowledge base has no frames");
  CoverageReport r;
  r.total = kb.frames.size();
  for (const auto& [id, f] : kb.frames)
    for (const auto& a : f.alignments)
      if (a.target_kind == kind) {
        ++r.aligned;
        break;
      }
  r.ratio = static_cast<double>(r.aligned) / static_cast<double>(r.total);
  r.exact = std::to_string(r.aligned) + "/" + std::to_string(r.total);
  return r;
}

std::string kb_to_json(const KnowledgeBase& kb) {
  nlohmann::json j;
  j["frames"] = nlohmann::json::object();
  for (const auto& [id, f] : kb.frames) {
    nlohmann::json jf;
    jf["label"] = f.label;
    jf["roles"] = nlohmann::json::array();
    for (const auto& r : f.roles)
      jf["roles"].push_back({{"id", r.id}, {"label", r.label}});
    jf["lexical_units"] = nlohmann::json::array();
    for (const auto& lu : f.lexical_units)
      jf["lexical_units"].push_back(
          {{"lemma", lu.lemma}, {"pos", pos_to_string(lu.pos)}});
    jf["sub_frame_of"] = f.sub_frame_of;
    jf["alignments"] = nlohmann::json::array();
    for (const auto& a : f.alignments)
      jf["alignments"].push_back(
          {{"to", a.to},
           {"kind", a.target_kind == AlignmentKind::FramenetFrame
                        ? "framenet_frame"
                        : a.target_kind == AlignmentKind::WordnetSynset
                              ? "wordnet_synset"
                              : "other"}});
    jf["related_to"] = nlohmann::json::array();
    for (const auto& [p, o] : f.related_to) jf["related_to"].push_back({p, o});
    j["frames"][id] = std::move(jf);
  }
  j["metaphors"] = nlohmann::json::object();
  for (const auto& [id, m] : kb.metaphors) {
    nlohmann::json jm;
    jm["label"] = m.label;
    jm["source_frame"] = m.source_frame;
    jm["target_frame"] = m.target_frame;
    jm["role_mappings"] = nlohmann::json::array();
    for (const auto& rm : m.role_mappings)
      jm["role_mappings"].push_back(
          {{"source_role", rm.source_role}, {"target_role", rm.target_role}});
    jm["entailments"] = m.entailments;
    jm["inherits_from"] = m.inherits_from;
    jm["related_to"] = nlohmann::json::array();
    for (const auto& [p, o] : m.related_to) jm["related_to"].push_back({p, o});
    j["metaphors"][id] = std::move(jm);
  }
  j["synsets"] = nlohmann::json::object();
  for (const auto& [id, pos] : kb.synset_pos)
    j["synsets"][id] = pos_to_string(pos);
  j["unplaced"] = kb.unplaced.size();
  j["unresolved"] = nlohmann::json::array();
  for (const auto& u : kb.unresolved)
    j["unresolved"].push_back({{"from", u.from}, {"field", u.field}, {"to", u.to}});
  return j.dump(2);
}

}  // namespace afkg::schema
