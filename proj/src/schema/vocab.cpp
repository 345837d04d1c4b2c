#include "afkg/schema/vocab.hpp"

#include <fstream>
#include <sstream>

#include "afkg/error.hpp"

namespace afkg::schema {

namespace {

constexpr const char* kMetanetNs = "https://w3id.org/framester/metanet/schema/";

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Vocab Vocab::defaults() {
  Vocab v;
  auto mn = [](const char* local) { return std::string(kMetanetNs) + local; };
  v.iris_ = {
      {kHasSourceFrame, mn("hasSourceFrame")},
      {kHasTargetFrame, mn("hasTargetFrame")},
      {kHasRole, mn("hasRole")},
      {kHasRoleMapping, mn("hasRoleMapping")},
      {kMappingSourceRole, mn("hasSourceRole")},
      {kMappingTargetRole, mn("hasTargetRole")},
      {kSubFrameOf, mn("isSubFrameOf")},
      {kInheritsFrom, mn("inheritsFrom")},
      {kEntails, mn("hasEntailment")},
      {kCloseMatch, "http://www.w3.org/2004/02/skos/core#closeMatch"},
      {kType, "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"},
      {kLabel, "http://www.w3.org/2000/01/rdf-schema#label"},
      {kLemma, mn("lemma")},
      {kPos, mn("pos")},
      {kEvokes, mn("evokes")},
      {kMetaphorClass, mn("Metaphor")},
      {kFrameClass, mn("Frame")},
      {kFramenetFrameClass, "https://w3id.org/framester/framenet/schema/Frame"},
      {kNounSynsetClass, "https://w3id.org/framester/wn/wn30/schema/NounSynset"},
      {kAdjectiveSynsetClass,
       "https://w3id.org/framester/wn/wn30/schema/AdjectiveSynset"},
      {kAdjectiveSatelliteSynsetClass,
       "https://w3id.org/framester/wn/wn30/schema/AdjectiveSatelliteSynset"},
      {kOccurrenceOf, mn("occurrenceOf")},
      {kHasBinding, mn("hasBinding")},
      {kBoundRole, mn("boundRole")},
      {kBoundEntity, mn("boundEntity")},
  };
  return v;
}

Vocab Vocab::parse(const std::string& text) {
  Vocab v = defaults();
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("vocab line " + std::to_string(lineno) + ": expected key=IRI");
    v.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return v;
}

Vocab Vocab::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open vocab file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const std::string& Vocab::at(const std::string& key) const {
  auto it = iris_.find(key);
  if (it == iris_.end()) throw Error("unknown vocab key: " + key);
  return it->second;
}

void Vocab::set(const std::string& key, const std::string& iri) {
  if (!iris_.count(key)) throw Error("unknown vocab key: " + key);
  iris_[key] = iri;
}

}  // namespace afkg::schema
