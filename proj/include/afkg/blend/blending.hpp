#pragma once

#include <map>
#include <string>
#include <vector>

#include "afkg/schema/kb.hpp"

namespace afkg::blend {

using schema::Iri;
using schema::KnowledgeBase;
using schema::RoleMapping;

enum class CompositionKind {
  Intersective,
  Attributional,
  Attitude,
  Privative,
  Metaphoric,
};

const char* composition_kind_name(CompositionKind k);

enum class RoleProvenance { FromCore, FromModifier, Substituted };

struct ComposedRole {
  Iri id;
  RoleProvenance provenance = RoleProvenance::FromCore;
  Iri replaced;  // for substituted roles: the core role that was swapped out
};

/// Result of composing two frames. Conservative kinds inherit the core
/// frame; privative/metaphoric ones do not.
struct ComposedFrame {
  Iri id;  // generated
  Iri core;
  Iri modifier;
  CompositionKind kind = CompositionKind::Intersective;
  bool inherits_core = true;
  std::vector<ComposedRole> roles;
};

struct RoleBinding {
  Iri role;
  Iri entity;
  bool operator==(const RoleBinding&) const = default;
};

/// A situation: entities bound to the roles of one frame.
struct FrameOccurrence {
  Iri id;
  Iri frame;
  std::vector<RoleBinding> bindings;
};

/// What enters the domain of interpretation when two entities merge:
/// identify them as one existing entity, or mint a new hybrid.
enum class IdentificationPolicy { Economic, Multiplicative };

struct MergeRecord {
  Iri role;                  // the (source-vocabulary) role merged under
  std::vector<Iri> members;  // input entities, in [target, source] order
  Iri result;
};

struct BlendedOccurrence {
  Iri id;  // generated
  Iri frame;
  std::vector<RoleBinding> bindings;
  std::vector<MergeRecord> merged_entities;
  IdentificationPolicy policy = IdentificationPolicy::Economic;
};

/// Conservative composition. Intersective/attributional: union of the two
/// frames' roles, inheriting the core. Attitude: a single meta-level role
/// filled by the core frame itself. Rejects privative/metaphoric kinds.
ComposedFrame merge_frames(const KnowledgeBase& kb, const Iri& core,
                           const Iri& modifier, CompositionKind kind);

/// Metaphoric blend: target roles with each mapped target role substituted
/// by its source role. Requires at least one mapping; every mapping must
/// reference roles of the respective frames.
ComposedFrame blend_frames(const KnowledgeBase& kb, const Iri& target,
                           const Iri& source,
                           const std::vector<RoleMapping>& mappings);

/// The occurrence-level blend: merges mapped entities under the policy and
/// rebinds them to the source role; unmapped target bindings pass through,
/// unmapped source bindings are dropped.
BlendedOccurrence blend_occurrences(const KnowledgeBase& kb,
                                    const FrameOccurrence& target_occ,
                                    const FrameOccurrence& source_occ,
                                    const Iri& metaphor,
                                    IdentificationPolicy policy);

enum class Interpretation { Privative, Metaphoric, Conservative };

const char* interpretation_name(Interpretation i);

/// Declared role-type compatibility for one header frame.
struct FrameConstraints {
  Iri canonical_header_type;  // e.g. Organism for Woman
  /// modifier frames admissible for this header's roles
  std::vector<Iri> admissible_modifiers;
};

using ConstraintTable = std::map<Iri, FrameConstraints>;

/// Modifier compatible -> conservative; incompatible with the header's type
/// overridden by context -> privative; incompatible, type unchanged ->
/// metaphoric. Throws when the header frame is absent from the table.
Interpretation select_interpretation(const KnowledgeBase& kb,
                                     const Iri& header_frame,
                                     const Iri& header_entity_type,
                                     const Iri& modifier_frame,
                                     const ConstraintTable& table);

}  // namespace afkg::blend
