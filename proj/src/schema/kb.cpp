#include "afkg/schema/kb.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include <nlohmann/json.hpp>

#include "afkg/error.hpp"

namespace afkg::schema {

using rdf::Term;
using rdf::Triple;

PosCategory pos_from_string(const std::string& s) {
  if (s == "noun") return PosCategory::Noun;
  if (s == "verb") return PosCategory::Verb;
  if (s == "adjective") return PosCategory::Adjective;
  if (s == "adverb") return PosCategory::Adverb;
  return PosCategory::Other;
}

const char* pos_to_string(PosCategory p) {
  switch (p) {
    case PosCategory::Noun: return "noun";
    case PosCategory::Verb: return "verb";
    case PosCategory::Adjective: return "adjective";
    case PosCategory::Adverb: return "adverb";
    case PosCategory::Other: return "other";
  }
  return "other";
}

const Frame* KnowledgeBase::find_frame(const Iri& id) const {
  auto it = frames.find(id);
  return it == frames.end() ? nullptr : &it->second;
}

const Metaphor* KnowledgeBase::find_metaphor(const Iri& id) const {
  auto it = metaphors.find(id);
  return it == metaphors.end() ? nullptr : &it->second;
}

const Role* KnowledgeBase::find_role(const Iri& id) const {
  for (const auto& [fid, f] : frames)
    for (const auto& r : f.roles)
      if (r.id == id) return &r;
  return nullptr;
}

namespace {

// String key for any term usable as a node handle (mapping nodes may be
// blank nodes).
std::string node_key(const Term& t) {
  return t.is_blank() ? "_:" + t.value : t.value;
}

struct Builder {
  const rdf::Graph& g;
  KnowledgeBase kb;

  std::string pSource, pTarget, pRole, pMapping, pMapSrc, pMapTgt, pSubFrame,
      pInherits, pEntails, pCloseMatch, pType, pLabel, pLemma, pPos, pEvokes;
  std::string cMetaphor, cFrame, cFnFrame, cNoun, cAdj, cAdjSat;

  // mapping node key -> (metaphor id, mapping index)
  std::map<std::string, std::vector<std::pair<Iri, std::size_t>>> mapping_nodes;

  explicit Builder(const rdf::Graph& graph, Vocab vocab) : g(graph) {
    kb.vocab = std::move(vocab);
    kb.graph = &g;
    const Vocab& v = kb.vocab;
    pSource = v.at(Vocab::kHasSourceFrame);
    pTarget = v.at(Vocab::kHasTargetFrame);
    pRole = v.at(Vocab::kHasRole);
    pMapping = v.at(Vocab::kHasRoleMapping);
    pMapSrc = v.at(Vocab::kMappingSourceRole);
    pMapTgt = v.at(Vocab::kMappingTargetRole);
    pSubFrame = v.at(Vocab::kSubFrameOf);
    pInherits = v.at(Vocab::kInheritsFrom);
    pEntails = v.at(Vocab::kEntails);
    pCloseMatch = v.at(Vocab::kCloseMatch);
    pType = v.at(Vocab::kType);
    pLabel = v.at(Vocab::kLabel);
    pLemma = v.at(Vocab::kLemma);
    pPos = v.at(Vocab::kPos);
    pEvokes = v.at(Vocab::kEvokes);
    cMetaphor = v.at(Vocab::kMetaphorClass);
    cFrame = v.at(Vocab::kFrameClass);
    cFnFrame = v.at(Vocab::kFramenetFrameClass);
    cNoun = v.at(Vocab::kNounSynsetClass);
    cAdj = v.at(Vocab::kAdjectiveSynsetClass);
    cAdjSat = v.at(Vocab::kAdjectiveSatelliteSynsetClass);
  }

  void unplaced(const Triple& t) {
    kb.unplaced.push_back(UnplacedTriple{node_key(t.subject), t.predicate.value,
                                         t.object.to_ntriples()});
  }

  Frame* frame_of(const Term& subject) {
    if (!subject.is_iri()) return nullptr;
    auto it = kb.frames.find(subject.value);
    return it == kb.frames.end() ? nullptr : &it->second;
  }

  Metaphor* metaphor_of(const Term& subject) {
    if (!subject.is_iri()) return nullptr;
    auto it = kb.metaphors.find(subject.value);
    return it == kb.metaphors.end() ? nullptr : &it->second;
  }

  void pass_types() {
    for (const auto& t : g) {
      if (t.predicate.value != pType || !t.object.is_iri()) continue;
      const std::string& cls = t.object.value;
      if (cls == cMetaphor && t.subject.is_iri())
        kb.metaphors[t.subject.value].id = t.subject.value;
      else if (cls == cFrame && t.subject.is_iri())
        kb.frames[t.subject.value].id = t.subject.value;
      else if (cls == cFnFrame && t.subject.is_iri())
        kb.framenet_frames.insert(t.subject.value);
      else if (cls == cNoun && t.subject.is_iri())
        kb.synset_pos[t.subject.value] = PosCategory::Noun;
      else if ((cls == cAdj || cls == cAdjSat) && t.subject.is_iri())
        kb.synset_pos[t.subject.value] = PosCategory::Adjective;
    }
  }

  void pass_structure() {
    for (const auto& t : g) {
      const std::string& p = t.predicate.value;
      if (p == pType) {
        dispatch_type(t);
      } else if (p == pSource || p == pTarget) {
        Metaphor* m = metaphor_of(t.subject);
        if (m && t.object.is_iri()) {
          Iri& slot = (p == pSource) ? m->source_frame : m->target_frame;
          if (slot.empty()) {
            slot = t.object.value;
            continue;
          }
        }
        unplaced(t);
      } else if (p == pRole) {
        Frame* f = frame_of(t.subject);
        if (f && t.object.is_iri())
          f->roles.push_back(Role{t.object.value, "", f->id});
        else
          unplaced(t);
      } else if (p == pMapping) {
        Metaphor* m = metaphor_of(t.subject);
        if (m && !t.object.is_literal()) {
          m->role_mappings.push_back(RoleMapping{});
          mapping_nodes[node_key(t.object)].push_back(
              {m->id, m->role_mappings.size() - 1});
        } else {
          unplaced(t);
        }
      } else if (p == pSubFrame) {
        Frame* f = frame_of(t.subject);
        if (f && t.object.is_iri())
          f->sub_frame_of.push_back(t.object.value);
        else
          unplaced(t);
      } else if (p == pInherits) {
        Metaphor* m = metaphor_of(t.subject);
        if (m && t.object.is_iri())
          m->inherits_from.push_back(t.object.value);
        else
          unplaced(t);
      } else if (p == pEntails) {
        Metaphor* m = metaphor_of(t.subject);
        if (m && t.object.is_iri())
          m->entailments.push_back(t.object.value);
        else
          unplaced(t);
      } else if (p == pCloseMatch) {
        Frame* f = frame_of(t.subject);
        if (f && t.object.is_iri()) {
          Alignment a;
          a.from = f->id;
          a.to = t.object.value;
          a.relation = pCloseMatch;
          if (kb.framenet_frames.count(a.to))
            a.target_kind = AlignmentKind::FramenetFrame;
          else if (kb.synset_pos.count(a.to))
            a.target_kind = AlignmentKind::WordnetSynset;
          else
            a.target_kind = AlignmentKind::Other;
          f->alignments.push_back(std::move(a));
        } else if (Metaphor* m = metaphor_of(t.subject); m && t.object.is_iri()) {
          m->related_to.push_back({p, t.object.value});
        } else {
          unplaced(t);
        }
      }
    }
  }

  void dispatch_type(const Triple& t) {
    if (!t.object.is_iri()) {
      unplaced(t);
      return;
    }
    const std::string& cls = t.object.value;
    if (cls == cMetaphor || cls == cFrame || cls == cFnFrame || cls == cNoun ||
        cls == cAdj || cls == cAdjSat)
      return;  // consumed in pass_types
    if (Frame* f = frame_of(t.subject))
      f->related_to.push_back({pType, cls});
    else if (Metaphor* m = metaphor_of(t.subject))
      m->related_to.push_back({pType, cls});
    else
      unplaced(t);
  }

  void pass_mapping_roles() {
    for (const auto& t : g) {
      const std::string& p = t.predicate.value;
      if (p != pMapSrc && p != pMapTgt) continue;
      auto it = mapping_nodes.find(node_key(t.subject));
      if (it == mapping_nodes.end() || !t.object.is_iri()) {
        unplaced(t);
        continue;
      }
      bool placed = false;
      for (auto& [mid, idx] : it->second) {
        RoleMapping& rm = kb.metaphors[mid].role_mappings[idx];
        Iri& slot = (p == pMapSrc) ? rm.source_role : rm.target_role;
        if (slot.empty()) {
          slot = t.object.value;
          placed = true;
        }
      }
      if (!placed) unplaced(t);
    }
  }

  void pass_aux() {
    // Labels, lemmas, pos, lexical units, and related_to for predicates
    // outside the vocab.
    std::map<std::string, std::string> labels;
    for (const auto& t : g)
      if (t.predicate.value == pLabel && t.subject.is_iri() &&
          t.object.is_literal() && !labels.count(t.subject.value))
        labels[t.subject.value] = t.object.value;

    for (auto& [id, f] : kb.frames) {
      if (auto it = labels.find(id); it != labels.end()) f.label = it->second;
      for (auto& r : f.roles)
        if (auto it = labels.find(r.id); it != labels.end()) r.label = it->second;
    }
    for (auto& [id, m] : kb.metaphors)
      if (auto it = labels.find(id); it != labels.end()) m.label = it->second;

    // Lexical units: any subject with an `evokes` link to a known frame;
    // lemma and pos come from the first (sorted) literal on that subject.
    std::map<std::string, std::string> lemmas, poses;
    for (const auto& t : g) {
      if (!t.subject.is_iri() || !t.object.is_literal()) continue;
      if (t.predicate.value == pLemma && !lemmas.count(t.subject.value))
        lemmas[t.subject.value] = t.object.value;
      else if (t.predicate.value == pPos && !poses.count(t.subject.value))
        poses[t.subject.value] = t.object.value;
    }
    for (const auto& t : g) {
      if (t.predicate.value != pEvokes || !t.subject.is_iri() ||
          !t.object.is_iri())
        continue;
      auto fit = kb.frames.find(t.object.value);
      if (fit == kb.frames.end()) continue;
      LexicalUnit lu;
      lu.evokes = t.object.value;
      if (auto it = lemmas.find(t.subject.value); it != lemmas.end())
        lu.lemma = it->second;
      if (auto it = poses.find(t.subject.value); it != poses.end())
        lu.pos = pos_from_string(it->second);
      fit->second.lexical_units.push_back(std::move(lu));
    }

    // Unknown predicates on known subjects.
    const std::set<std::string> known = {
        pSource, pTarget, pRole,   pMapping, pMapSrc, pMapTgt,
        pSubFrame, pInherits, pEntails, pCloseMatch, pType, pLabel,
        pLemma,  pPos,    pEvokes};
    for (const auto& t : g) {
      if (known.count(t.predicate.value)) continue;
      if (Frame* f = frame_of(t.subject))
        f->related_to.push_back({t.predicate.value, t.object.to_ntriples()});
      else if (Metaphor* m = metaphor_of(t.subject))
        m->related_to.push_back({t.predicate.value, t.object.to_ntriples()});
    }
  }

  void pass_unresolved() {
    for (const auto& [id, m] : kb.metaphors) {
      if (!m.source_frame.empty() && !kb.frames.count(m.source_frame))
        kb.unresolved.push_back({id, "source_frame", m.source_frame});
      if (!m.target_frame.empty() && !kb.frames.count(m.target_frame))
        kb.unresolved.push_back({id, "target_frame", m.target_frame});
      for (const auto& a : m.inherits_from)
        if (!kb.metaphors.count(a))
          kb.unresolved.push_back({id, "inherits_from", a});
      for (const auto& e : m.entailments)
        if (!kb.metaphors.count(e))
          kb.unresolved.push_back({id, "entailments", e});
    }
    for (const auto& [id, f] : kb.frames)
      for (const auto& s : f.sub_frame_of)
        if (!kb.frames.count(s))
          kb.unresolved.push_back({id, "sub_frame_of", s});
  }

  KnowledgeBase run() {
    pass_types();
    pass_structure();
    pass_mapping_roles();
    pass_aux();
    pass_unresolved();
    return std::move(kb);
  }
};

}  // namespace

KnowledgeBase build_kb(const rdf::Graph& g, Vocab vocab) {
  return Builder(g, std::move(vocab)).run();
}

}  // namespace afkg::schema
