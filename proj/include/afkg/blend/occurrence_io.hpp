#pragma once

#include <string>

#include "afkg/blend/blending.hpp"
#include "afkg/schema/vocab.hpp"

namespace afkg::blend {

/// Flat JSON form: {"id": optional, "frame": iri, "bindings":
/// [{"role": iri, "entity": iri}, ...]}.
FrameOccurrence occurrence_from_json(const std::string& text);

/// Turtle form using the vocab's binding predicates:
///   ex:occ metanet:occurrenceOf framedata:Crime ;
///          metanet:hasBinding _:b1 .
///   _:b1 metanet:boundRole roledata:X ; metanet:boundEntity ex:e .
/// The file must describe exactly one occurrence.
FrameOccurrence occurrence_from_turtle(const std::string& text,
                                       const schema::Vocab& vocab);

/// Dispatches on content: JSON if the first non-space byte is '{'.
FrameOccurrence occurrence_from_file(const std::string& path,
                                     const schema::Vocab& vocab);

/// Checks every binding's role against the occurrence's frame in the KB.
/// Throws on a role outside the frame's role set; unknown frames pass.
void check_occurrence(const schema::KnowledgeBase& kb,
                      const FrameOccurrence& occ);

/// Deterministic JSON rendering of a blend result (sorted keys).
std::string blended_occurrence_to_json(const BlendedOccurrence& b);

}  // namespace afkg::blend
