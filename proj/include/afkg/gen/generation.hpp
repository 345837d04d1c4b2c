#pragma once

#include <map>
#include <string>
#include <vector>

#include "afkg/rdf/bgp.hpp"
#include "afkg/schema/kb.hpp"

namespace afkg::gen {

using schema::Iri;
using schema::KnowledgeBase;

/// One metaphor lexicalization: an adjective synset reached from the source
/// frame and a noun synset reached from the target frame, both via two
/// closeMatch hops through FrameNet.
struct LexicalizationCandidate {
  Iri metaphor;
  Iri source_synset;
  Iri target_synset;
  std::string phrase;  // "<adjective lemma> <noun lemma>"
};

struct MetaphorCandidate {
  Iri source_frame;
  Iri target_frame;
  Iri derived_from;
  std::string rationale;
};

struct AlignmentSuggestion {
  Iri frame;
  std::vector<Iri> suggested;
  bool is_composition = false;
  double score = 0.0;
  bool needs_specialization = false;  // partial match on a single frame
};

struct SuggestResult {
  bool already_aligned = false;
  std::vector<AlignmentSuggestion> suggestions;
};

struct AnPhrase {
  std::string adjective_lemma;
  std::string noun_lemma;
};

/// The lexicalization query for one metaphor, as a BgpQuery over the vocab's
/// predicates: source/target frame, closeMatch to a FrameNet frame, closeMatch
/// to a synset, adjective-or-satellite UNION on the source side, noun on the
/// target side. SELECT DISTINCT ?ssyn ?tsyn.
rdf::BgpQuery lexicalization_query(const KnowledgeBase& kb, const Iri& metaphor);

/// Runs the lexicalization query and builds phrases from each synset's first
/// stored lemma. Deterministic lexicographic order.
std::vector<LexicalizationCandidate> generate_lexicalizations(
    const KnowledgeBase& kb, const Iri& metaphor);

/// Inverse of generate_lexicalizations: metaphors whose source frame reaches
/// an adjective synset carrying the adjective lemma and whose target frame
/// reaches a noun synset carrying the noun lemma.
std::vector<Iri> explain_phrase(const KnowledgeBase& kb, const AnPhrase& phrase);

/// Specializations of a seed metaphor: every (source', target') pair of
/// sub-frames within `max_depth` of the seed's frames (frames included),
/// minus the seed pair and pairs already realized in the KB.
std::vector<MetaphorCandidate> propose_novel_metaphors(const KnowledgeBase& kb,
                                                       const Iri& seed,
                                                       unsigned max_depth);

/// lemma -> candidate FrameNet frames; loaded from `lemma=IRI` lines.
using Lexicon = std::map<std::string, std::vector<Iri>>;

Lexicon lexicon_from_text(const std::string& text);
Lexicon lexicon_from_file(const std::string& path);

/// Alignment suggestions for an unaligned frame: full-label lexicon hit, or
/// a composition of per-token hits. Score is the fraction of label tokens
/// matched. An already-aligned frame is reported, not fatal.
SuggestResult suggest_alignments(const KnowledgeBase& kb, const Iri& frame,
                                 const Lexicon& lexicon);

/// Label tokenization used by suggest_alignments: splits on underscores,
/// spaces, hyphens, and camel-case boundaries; lowercases.
std::vector<std::string> tokenize_label(const std::string& label);

}  // namespace afkg::gen
