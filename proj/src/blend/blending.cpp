#include "afkg/blend/blending.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "afkg/error.hpp"

namespace afkg::blend {

using schema::Frame;
using schema::Metaphor;

const char* composition_kind_name(CompositionKind k) {
  switch (k) {
    case CompositionKind::Intersective: return "intersective";
    case CompositionKind::Attributional: return "attributional";
    case CompositionKind::Attitude: return "attitude";
    case CompositionKind::Privative: return "privative";
    case CompositionKind::Metaphoric: return "metaphoric";
  }
  return "?";
}

const char* interpretation_name(Interpretation i) {
  switch (i) {
    case Interpretation::Privative: return "privative";
    case Interpretation::Metaphoric: return "metaphoric";
    case Interpretation::Conservative: return "conservative";
  }
  return "?";
}

namespace {

constexpr const char* kComposedNs =
    "https://w3id.org/framester/metanet/composed/";
constexpr const char* kBlendNs = "https://w3id.org/framester/metanet/blends/";

std::string local_name(const Iri& iri) {
  auto cut = iri.find_last_of("/#");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

const Frame& require_frame(const KnowledgeBase& kb, const Iri& id) {
  const Frame* f = kb.find_frame(id);
  if (!f) throw Error("unknown frame: " + id);
  return *f;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_suffix(const std::vector<std::string>& parts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : parts) {
    h = fnv1a(p, h);
    h = fnv1a(std::string(1, '\0'), h);
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (int i = 60; i >= 0; i -= 4) out += hex[(h >> i) & 0xF];
  return out;
}

}  // namespace

ComposedFrame merge_frames(const KnowledgeBase& kb, const Iri& core,
                           const Iri& modifier, CompositionKind kind) {
  if (kind == CompositionKind::Privative || kind == CompositionKind::Metaphoric)
    throw Error(std::string("merge_frames does not handle ") +
                composition_kind_name(kind) + " composition; use blend_frames");
  const Frame& core_frame = require_frame(kb, core);
  const Frame& mod_frame = require_frame(kb, modifier);

  ComposedFrame out;
  out.core = core;
  out.modifier = modifier;
  out.kind = kind;
  out.inherits_core = true;
  out.id = std::string(kComposedNs) + local_name(modifier) + "+" +
           local_name(core);

  if (kind == CompositionKind::Attitude) {
    // Meta-level predication: one role whose filler is the core frame.
    ComposedRole r;
    r.id = std::string(kComposedNs) + local_name(modifier) + "+" +
           local_name(core) + "/about";
    r.provenance = RoleProvenance::FromModifier;
    r.replaced = core;  // the role points at the core frame as its filler
    out.roles.push_back(std::move(r));
    return out;
  }

  std::set<Iri> seen;
  for (const auto& r : core_frame.roles)
    if (seen.insert(r.id).second)
      out.roles.push_back({r.id, RoleProvenance::FromCore, {}});
  for (const auto& r : mod_frame.roles)
    if (seen.insert(r.id).second)
      out.roles.push_back({r.id, RoleProvenance::FromModifier, {}});
  return out;
}

ComposedFrame blend_frames(const KnowledgeBase& kb, const Iri& target,
                           const Iri& source,
                           const std::vector<RoleMapping>& mappings) {
  if (mappings.empty())
    throw Error("metaphoric blend requires at least one role mapping");
  const Frame& target_frame = require_frame(kb, target);
  const Frame& source_frame = require_frame(kb, source);

  auto has_role = [](const Frame& f, const Iri& role) {
    return std::any_of(f.roles.begin(), f.roles.end(),
                       [&](const auto& r) { return r.id == role; });
  };
  std::map<Iri, Iri> substitution;  // target role -> source role
  for (const auto& m : mappings) {
    if (!has_role(source_frame, m.source_role))
      throw Error("mapping source role " + m.source_role +
                  " is not a role of " + source);
    if (!has_role(target_frame, m.target_role))
      throw Error("mapping target role " + m.target_role +
                  " is not a role of " + target);
    substitution[m.target_role] = m.source_role;
  }

  ComposedFrame out;
  out.core = target;
  out.modifier = source;
  out.kind = CompositionKind::Metaphoric;
  out.inherits_core = false;
  out.id = std::string(kComposedNs) + local_name(target) + "+" +
           local_name(source);
  for (const auto& r : target_frame.roles) {
    auto it = substitution.find(r.id);
    if (it == substitution.end())
      out.roles.push_back({r.id, RoleProvenance::FromCore, {}});
    else
      out.roles.push_back({it->second, RoleProvenance::Substituted, r.id});
  }
  return out;
}

BlendedOccurrence blend_occurrences(const KnowledgeBase& kb,
                                    const FrameOccurrence& target_occ,
                                    const FrameOccurrence& source_occ,
                                    const Iri& metaphor,
                                    IdentificationPolicy policy) {
  const Metaphor* m = kb.find_metaphor(metaphor);
  if (!m) throw Error("unknown metaphor: " + metaphor);
  if (target_occ.frame != m->target_frame)
    throw Error("target occurrence is over " + target_occ.frame +
                ", but the metaphor's target frame is " + m->target_frame);
  if (source_occ.frame != m->source_frame)
    throw Error("source occurrence is over " + source_occ.frame +
                ", but the metaphor's source frame is " + m->source_frame);

  auto bound = [](const FrameOccurrence& occ, const Iri& role) -> const Iri* {
    for (const auto& b : occ.bindings)
      if (b.role == role) return &b.entity;
    return nullptr;
  };

  BlendedOccurrence out;
  out.policy = policy;
  out.frame = std::string(kBlendNs) + local_name(m->target_frame) + "+" +
              local_name(m->source_frame);

  std::set<Iri> mapped_target_roles;
  for (const auto& rm : m->role_mappings) {
    mapped_target_roles.insert(rm.target_role);
    const Iri* te = bound(target_occ, rm.target_role);
    const Iri* se = bound(source_occ, rm.source_role);
    if (!te && !se) continue;

    // A merge only happens when both sides bind distinct entities; a slot
    // filled on one side is simply rebound under the source role.
    if (!te || !se || *te == *se) {
      out.bindings.push_back({rm.source_role, te ? *te : *se});
      continue;
    }

    MergeRecord rec;
    rec.role = rm.source_role;  // source vocabulary names the merged slot
    rec.members = {*te, *se};
    if (policy == IdentificationPolicy::Economic) {
      rec.result = rec.members.front();
    } else {
      std::vector<std::string> parts{metaphor, rm.source_role};
      std::vector<Iri> sorted_members = rec.members;
      std::sort(sorted_members.begin(), sorted_members.end());
      parts.insert(parts.end(), sorted_members.begin(), sorted_members.end());
      rec.result = std::string(kBlendNs) + "entity/" + hash_suffix(parts);
    }
    out.bindings.push_back({rm.source_role, rec.result});
    out.merged_entities.push_back(std::move(rec));
  }

  // Unmapped target bindings pass through untouched; unmapped source
  // bindings are dropped.
  for (const auto& b : target_occ.bindings)
    if (!mapped_target_roles.count(b.role)) out.bindings.push_back(b);

  std::vector<std::string> id_parts{metaphor, target_occ.id, source_occ.id};
  out.id = std::string(kBlendNs) + "occurrence/" + hash_suffix(id_parts);
  return out;
}

Interpretation select_interpretation(const KnowledgeBase& kb,
                                     const Iri& header_frame,
                                     const Iri& header_entity_type,
                                     const Iri& modifier_frame,
                                     const ConstraintTable& table) {
  (void)kb;
  auto it = table.find(header_frame);
  if (it == table.end())
    throw Error("header frame missing from constraint table: " + header_frame);
  const FrameConstraints& c = it->second;
  bool compatible =
      std::find(c.admissible_modifiers.begin(), c.admissible_modifiers.end(),
                modifier_frame) != c.admissible_modifiers.end();
  if (compatible) return Interpretation::Conservative;
  if (header_entity_type != c.canonical_header_type)
    return Interpretation::Privative;
  return Interpretation::Metaphoric;
}

}  // namespace afkg::blend
