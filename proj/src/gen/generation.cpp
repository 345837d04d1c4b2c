#include "afkg/gen/generation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "afkg/error.hpp"

namespace afkg::gen {

using rdf::BgpQuery;
using rdf::PatternGroup;
using rdf::Term;
using rdf::TriplePattern;
using rdf::Variable;
using schema::Metaphor;
using schema::Vocab;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::string local_name(const Iri& iri) {
  auto cut = iri.find_last_of("/#");
  return cut == std::string::npos ? iri : iri.substr(cut + 1);
}

const Metaphor& require_metaphor(const KnowledgeBase& kb, const Iri& id) {
  const Metaphor* m = kb.find_metaphor(id);
  if (!m) throw Error("unknown metaphor: " + id);
  return *m;
}

/// All lemma literals attached to a subject, sorted.
std::vector<std::string> lemmas_of(const KnowledgeBase& kb, const Iri& subject) {
  std::vector<std::string> out;
  auto rows = rdf::match_pattern(
      *kb.graph, TriplePattern{Term::iri(subject),
                               Term::iri(kb.vocab.at(Vocab::kLemma)),
                               Variable{"l"}});
  for (const auto& row : rows)
    if (row.at("l").is_literal()) out.push_back(row.at("l").value);
  std::sort(out.begin(), out.end());
  return out;
}

std::string first_lemma(const KnowledgeBase& kb, const Iri& synset) {
  auto all = lemmas_of(kb, synset);
  if (!all.empty()) return all.front();
  return lower(local_name(synset));
}

}  // namespace

BgpQuery lexicalization_query(const KnowledgeBase& kb, const Iri& metaphor) {
  const Metaphor& m = require_metaphor(kb, metaphor);
  if (m.source_frame.empty())
    throw Error("metaphor has no source frame: " + metaphor);
  if (m.target_frame.empty())
    throw Error("metaphor has no target frame: " + metaphor);

  const Vocab& v = kb.vocab;
  Term mterm = Term::iri(metaphor);
  Term cm = Term::iri(v.at(Vocab::kCloseMatch));
  Term type = Term::iri(v.at(Vocab::kType));

  PatternGroup chain;
  chain.patterns = {
      {mterm, Term::iri(v.at(Vocab::kHasSourceFrame)), Variable{"s"}},
      {mterm, Term::iri(v.at(Vocab::kHasTargetFrame)), Variable{"t"}},
      {Variable{"s"}, cm, Variable{"fns"}},
      {Variable{"fns"}, type, Term::iri(v.at(Vocab::kFramenetFrameClass))},
      {Variable{"t"}, cm, Variable{"fnt"}},
      {Variable{"fnt"}, type, Term::iri(v.at(Vocab::kFramenetFrameClass))},
      {Variable{"fns"}, cm, Variable{"ssyn"}},
      {Variable{"fnt"}, cm, Variable{"tsyn"}},
  };

  PatternGroup adjective;
  adjective.is_union = true;
  adjective.patterns = {
      {Variable{"ssyn"}, type, Term::iri(v.at(Vocab::kAdjectiveSynsetClass))}};
  adjective.union_alternative = {
      {Variable{"ssyn"}, type,
       Term::iri(v.at(Vocab::kAdjectiveSatelliteSynsetClass))}};

  PatternGroup noun;
  noun.patterns = {
      {Variable{"tsyn"}, type, Term::iri(v.at(Vocab::kNounSynsetClass))}};

  return BgpQuery({chain, adjective, noun}, {"ssyn", "tsyn"}, true);
}

std::vector<LexicalizationCandidate> generate_lexicalizations(
    const KnowledgeBase& kb, const Iri& metaphor) {
  auto query = lexicalization_query(kb, metaphor);
  auto rows = rdf::match_bgp(*kb.graph, query);
  std::vector<LexicalizationCandidate> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    LexicalizationCandidate c;
    c.metaphor = metaphor;
    c.source_synset = row.at("ssyn").value;
    c.target_synset = row.at("tsyn").value;
    c.phrase = first_lemma(kb, c.source_synset) + " " +
               first_lemma(kb, c.target_synset);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

/// Frames reaching, via closeMatch -> FrameNet frame -> closeMatch, any
/// synset in `targets`.
std::set<Iri> frames_reaching(const KnowledgeBase& kb,
                              const std::set<Iri>& targets) {
  std::set<Iri> out;
  Term cm = Term::iri(kb.vocab.at(Vocab::kCloseMatch));
  for (const auto& syn : targets) {
    auto fn_rows = rdf::match_pattern(
        *kb.graph, TriplePattern{Variable{"fn"}, cm, Term::iri(syn)});
    for (const auto& fn_row : fn_rows) {
      const Term& fn = fn_row.at("fn");
      if (!fn.is_iri() || !kb.framenet_frames.count(fn.value)) continue;
      auto frame_rows =
          rdf::match_pattern(*kb.graph, TriplePattern{Variable{"f"}, cm, fn});
      for (const auto& frame_row : frame_rows) {
        const Term& f = frame_row.at("f");
        if (f.is_iri() && kb.frames.count(f.value)) out.insert(f.value);
      }
    }
  }
  return out;
}

std::set<Iri> synsets_with_lemma(const KnowledgeBase& kb,
                                 const std::string& lemma,
                                 schema::PosCategory pos) {
  std::set<Iri> out;
  std::string needle = lower(lemma);
  for (const auto& [syn, syn_pos] : kb.synset_pos) {
    if (syn_pos != pos) continue;
    for (const auto& l : lemmas_of(kb, syn))
      if (lower(l) == needle) {
        out.insert(syn);
        break;
      }
  }
  return out;
}

}  // namespace

std::vector<Iri> explain_phrase(const KnowledgeBase& kb, const AnPhrase& phrase) {
  auto adj_synsets =
      synsets_with_lemma(kb, phrase.adjective_lemma, schema::PosCategory::Adjective);
  auto noun_synsets =
      synsets_with_lemma(kb, phrase.noun_lemma, schema::PosCategory::Noun);
  if (adj_synsets.empty() || noun_synsets.empty()) return {};

  auto source_frames = frames_reaching(kb, adj_synsets);
  auto target_frames = frames_reaching(kb, noun_synsets);

  std::vector<Iri> out;
  for (const auto& [id, m] : kb.metaphors)
    if (source_frames.count(m.source_frame) &&
        target_frames.count(m.target_frame))
      out.push_back(id);
  return out;  // map iteration order: already sorted
}

namespace {

/// Sub-frames within `depth` of `root`, including the root at depth 0.
std::map<Iri, unsigned> descendants(const KnowledgeBase& kb, const Iri& root,
                                    unsigned depth) {
  std::map<Iri, std::vector<Iri>> children;
  for (const auto& [id, f] : kb.frames)
    for (const auto& parent : f.sub_frame_of) children[parent].push_back(id);

  std::map<Iri, unsigned> out{{root, 0}};
  std::deque<Iri> queue{root};
  while (!queue.empty()) {
    Iri cur = queue.front();
    queue.pop_front();
    unsigned d = out[cur];
    if (d >= depth) continue;
    for (const auto& child : children[cur])
      if (!out.count(child)) {
        out[child] = d + 1;
        queue.push_back(child);
      }
  }
  return out;
}

}  // namespace

std::vector<MetaphorCandidate> propose_novel_metaphors(const KnowledgeBase& kb,
                                                       const Iri& seed,
                                                       unsigned max_depth) {
  const Metaphor& m = require_metaphor(kb, seed);
  if (m.source_frame.empty() || m.target_frame.empty())
    throw Error("seed metaphor lacks source or target frame: " + seed);

  auto sources = descendants(kb, m.source_frame, max_depth);
  auto targets = descendants(kb, m.target_frame, max_depth);

  std::set<std::pair<Iri, Iri>> existing;
  for (const auto& [id, other] : kb.metaphors)
    existing.insert({other.source_frame, other.target_frame});

  std::vector<MetaphorCandidate> out;
  for (const auto& [s, sd] : sources)
    for (const auto& [t, td] : targets) {
      if (s == m.source_frame && t == m.target_frame) continue;
      if (existing.count({s, t})) continue;
      MetaphorCandidate c;
      c.source_frame = s;
      c.target_frame = t;
      c.derived_from = seed;
      c.rationale = "source " + local_name(m.source_frame) + " -> " +
                    local_name(s) + " (depth " + std::to_string(sd) +
                    "); target " + local_name(m.target_frame) + " -> " +
                    local_name(t) + " (depth " + std::to_string(td) + ")";
      out.push_back(std::move(c));
    }
  return out;  // (source, target) sorted by construction
}

std::vector<std::string> tokenize_label(const std::string& label) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(lower(cur));
      cur.clear();
    }
  };
  for (std::size_t i = 0; i < label.size(); ++i) {
    char c = label[i];
    if (c == '_' || c == ' ' || c == '-') {
      flush();
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c)) && !cur.empty() &&
        std::islower(static_cast<unsigned char>(cur.back())))
      flush();
    cur += c;
  }
  flush();
  return tokens;
}

Lexicon lexicon_from_text(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("lexicon line " + std::to_string(lineno) +
                  ": expected lemma=IRI");
    std::string lemma = lower(line.substr(0, eq));
    std::string iri = line.substr(eq + 1);
    lex[lemma].push_back(iri);
  }
  return lex;
}

Lexicon lexicon_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return lexicon_from_text(buf.str());
}

namespace {

/// Naive singularization candidates for a label token.
std::vector<std::string> lemma_variants(const std::string& token) {
  std::vector<std::string> out{token};
  auto n = token.size();
  if (n > 3 && token.compare(n - 3, 3, "ies") == 0)
    out.push_back(token.substr(0, n - 3) + "y");
  if (n > 2 && token.compare(n - 2, 2, "es") == 0)
    out.push_back(token.substr(0, n - 2));
  if (n > 1 && token.back() == 's') out.push_back(token.substr(0, n - 1));
  return out;
}

}  // namespace

SuggestResult suggest_alignments(const KnowledgeBase& kb, const Iri& frame,
                                 const Lexicon& lexicon) {
  const schema::Frame* f = kb.find_frame(frame);
  if (!f) throw Error("unknown frame: " + frame);

  SuggestResult result;
  for (const auto& a : f->alignments)
    if (a.target_kind == schema::AlignmentKind::FramenetFrame) {
      result.already_aligned = true;
      return result;
    }

  std::string label = f->label.empty() ? local_name(frame) : f->label;
  auto tokens = tokenize_label(label);
  if (tokens.empty()) return result;

  // Full-label hit first.
  std::string joined;
  for (const auto& t : tokens) joined += (joined.empty() ? "" : " ") + t;
  for (const std::string& key : {lower(label), joined}) {
    auto it = lexicon.find(key);
    if (it != lexicon.end()) {
      result.suggestions.push_back(
          AlignmentSuggestion{frame, it->second, it->second.size() > 1, 1.0,
                              false});
      return result;
    }
  }

  std::vector<Iri> hits;
  std::size_t matched = 0;
  for (const auto& token : tokens) {
    bool token_hit = false;
    for (const auto& variant : lemma_variants(token)) {
      auto it = lexicon.find(variant);
      if (it == lexicon.end()) continue;
      token_hit = true;
      for (const auto& candidate : it->second)
        if (std::find(hits.begin(), hits.end(), candidate) == hits.end())
          hits.push_back(candidate);
      break;
    }
    if (token_hit) ++matched;
  }
  if (hits.empty()) return result;

  AlignmentSuggestion s;
  s.frame = frame;
  s.suggested = hits;
  s.is_composition = hits.size() >= 2;
  s.score = static_cast<double>(matched) / static_cast<double>(tokens.size());
  s.needs_specialization = !s.is_composition && s.score < 1.0;
  result.suggestions.push_back(std::move(s));
  return result;
}

}  // namespace afkg::gen
