#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "afkg/rdf/graph.hpp"
#include "afkg/schema/vocab.hpp"

namespace afkg::schema {

using Iri = std::string;

enum class PosCategory { Noun, Verb, Adjective, Adverb, Other };

PosCategory pos_from_string(const std::string& s);
const char* pos_to_string(PosCategory p);

struct Role {
  Iri id;
  std::string label;
  Iri of_frame;
};

struct LexicalUnit {
  std::string lemma;
  PosCategory pos = PosCategory::Other;
  Iri evokes;
};

enum class AlignmentKind { FramenetFrame, WordnetSynset, Other };

struct Alignment {
  Iri from;
  Iri to;
  AlignmentKind target_kind = AlignmentKind::Other;
  Iri relation;  // defaults to the closeMatch predicate
};

struct Frame {
  Iri id;
  std::string label;
  std::vector<Role> roles;
  std::vector<LexicalUnit> lexical_units;
  std::vector<Iri> sub_frame_of;
  std::vector<Alignment> alignments;
  std::vector<std::pair<Iri, Iri>> related_to;  // (predicate, object)
};

struct RoleMapping {
  Iri source_role;
  Iri target_role;
};

struct Metaphor {
  Iri id;
  std::string label;
  Iri source_frame;  // empty when the triple is absent
  Iri target_frame;
  std::vector<RoleMapping> role_mappings;
  std::vector<Iri> entailments;
  std::vector<Iri> inherits_from;
  std::vector<std::pair<Iri, Iri>> related_to;
};

/// A vocab-predicate triple whose subject is not a typed KB object (for
/// example a closeMatch hop between FrameNet and WordNet entries). Kept so
/// that nothing is silently dropped.
struct UnplacedTriple {
  Iri subject;
  Iri predicate;
  std::string object;  // N-Triples rendering
};

/// A typed field whose value does not resolve to a KB object.
struct UnresolvedRef {
  Iri from;
  std::string field;
  Iri to;
};

/// The typed projection of a Graph. Immutable after build_kb.
struct KnowledgeBase {
  std::map<Iri, Frame> frames;
  std::map<Iri, Metaphor> metaphors;
  std::map<Iri, PosCategory> synset_pos;
  std::set<Iri> framenet_frames;
  std::vector<UnplacedTriple> unplaced;
  std::vector<UnresolvedRef> unresolved;
  const rdf::Graph* graph = nullptr;
  Vocab vocab;

  const Frame* find_frame(const Iri& id) const;
  const Metaphor* find_metaphor(const Iri& id) const;
  /// Role lookup across all frames; nullptr when unknown.
  const Role* find_role(const Iri& id) const;
};

/// Total projection of `g` under `vocab`. Never fails: structural problems
/// surface in validate_kb, unresolved references are recorded as warnings.
/// `g` must outlive the returned KB.
KnowledgeBase build_kb(const rdf::Graph& g, Vocab vocab = Vocab::defaults());

enum class ViolationCode {
  MissingSourceFrame,
  MissingTargetFrame,
  UnresolvedRole,
  ForeignRoleInMapping,
  InheritanceCycle,
  SubFrameCycle,
  DanglingAlignment,
  DuplicateRoleId,
};

const char* violation_code_name(ViolationCode c);

struct Violation {
  ViolationCode code;
  Iri subject;
  std::string message;
};

/// All schema violations, ordered by (code, subject). Empty iff clean.
std::vector<Violation> validate_kb(const KnowledgeBase& kb);

/// Transitive inherits_from closure of a metaphor, breadth-first,
/// deduplicated, excluding the metaphor itself. Throws on unknown id or a
/// cycle through it.
std::vector<Iri> metaphor_ancestors(const KnowledgeBase& kb, const Iri& m);

/// Same over Frame.sub_frame_of.
std::vector<Iri> frame_ancestors(const KnowledgeBase& kb, const Iri& f);

struct CoverageReport {
  std::size_t aligned = 0;
  std::size_t total = 0;
  double ratio = 0.0;
  std::string exact;  // "aligned/total"
};

/// Fraction of frames carrying at least one alignment of `kind`.
/// Throws when the KB has no frames (undefined ratio).
CoverageReport alignment_coverage(const KnowledgeBase& kb, AlignmentKind kind);

/// Deterministic JSON dump with sorted keys (debug / golden-test surface).
std::string kb_to_json(const KnowledgeBase& kb);

}  // namespace afkg::schema
