#include <doctest.h>

#include <set>

#include "afkg/blend/blending.hpp"
#include "afkg/blend/occurrence_io.hpp"
#include "afkg/error.hpp"
#include "afkg/rdf/turtle.hpp"
#include "afkg/schema/kb.hpp"
#include "helpers.hpp"

using namespace afkg::blend;
using afkg::rdf::parse_turtle;
using afkg::schema::KnowledgeBase;
using afkg::schema::build_kb;

namespace {

const std::string kCrime = "https://w3id.org/framester/metanet/frames/Crime";
const std::string kDisease = "https://w3id.org/framester/metanet/frames/Disease";
const std::string kMetaphor =
    "https://w3id.org/framester/metanet/metaphors/CRIME_IS_A_DISEASE";
const std::string kRoles = "https://w3id.org/framester/metanet/roles/";
const std::string kCe = "https://example.org/entities/ce";
const std::string kIe = "https://example.org/entities/ie";
const std::string kCom = "https://example.org/entities/com";

KnowledgeBase crime_kb(afkg::rdf::Graph& g) {
  g = testutil::load_fixtures({"fig2.ttl", "fig3.ttl"});
  return build_kb(g);
}

// A tiny frame catalogue for the conservative-composition examples.
KnowledgeBase person_kb(afkg::rdf::Graph& g) {
  g = parse_turtle(
      "@prefix metanet: <https://w3id.org/framester/metanet/schema/> .\n"
      "@prefix framedata: <https://w3id.org/framester/metanet/frames/> .\n"
      "@prefix roledata: <https://w3id.org/framester/metanet/roles/> .\n"
      "framedata:Woman a metanet:Frame ;\n"
      "  metanet:hasRole roledata:Woman_person , roledata:Woman_age .\n"
      "framedata:Nationality a metanet:Frame ;\n"
      "  metanet:hasRole roledata:Nationality_country .\n"
      "framedata:AttitudeTowards a metanet:Frame ;\n"
      "  metanet:hasRole roledata:AttitudeTowards_stance .\n");
  return build_kb(g);
}

FrameOccurrence crime_occ() {
  return {"urn:test:crime",
          kCrime,
          {{kRoles + "Crime_criminal_activity", kCe},
           {kRoles + "Crime_victim", kCom}}};
}

FrameOccurrence disease_occ() {
  return {"urn:test:disease", kDisease, {{kRoles + "Disease_disease", kIe}}};
}

std::set<std::string> entity_set(const FrameOccurrence& occ) {
  std::set<std::string> s;
  for (const auto& b : occ.bindings) s.insert(b.entity);
  return s;
}

}  // namespace

TEST_CASE("intersective merge takes the union of roles and inherits the core") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = person_kb(g);
  const std::string frames = "https://w3id.org/framester/metanet/frames/";
  auto out = merge_frames(kb, frames + "Woman", frames + "Nationality",
                          CompositionKind::Intersective);
  CHECK(out.inherits_core);
  CHECK(out.kind == CompositionKind::Intersective);
  REQUIRE(out.roles.size() == 3);
  CHECK(out.roles[0].provenance == RoleProvenance::FromCore);
  CHECK(out.roles[1].provenance == RoleProvenance::FromCore);
  CHECK(out.roles[2].id == kRoles + "Nationality_country");
  CHECK(out.roles[2].provenance == RoleProvenance::FromModifier);
}

TEST_CASE("attitude merge yields one meta-level role filled by the core frame") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = person_kb(g);
  const std::string frames = "https://w3id.org/framester/metanet/frames/";
  auto out = merge_frames(kb, frames + "Woman", frames + "AttitudeTowards",
                          CompositionKind::Attitude);
  CHECK(out.inherits_core);
  REQUIRE(out.roles.size() == 1);
  CHECK(out.roles[0].replaced == frames + "Woman");
  CHECK(out.roles[0].provenance == RoleProvenance::FromModifier);
}

TEST_CASE("self-merge is an idempotent role union") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = person_kb(g);
  const std::string frames = "https://w3id.org/framester/metanet/frames/";
  auto out = merge_frames(kb, frames + "Woman", frames + "Woman",
                          CompositionKind::Intersective);
  CHECK(out.roles.size() == 2);
}

TEST_CASE("merge_frames rejects privative and metaphoric kinds") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = person_kb(g);
  const std::string frames = "https://w3id.org/framester/metanet/frames/";
  CHECK_THROWS_AS(merge_frames(kb, frames + "Woman", frames + "Nationality",
                               CompositionKind::Metaphoric),
                  afkg::Error);
  CHECK_THROWS_AS(merge_frames(kb, frames + "Woman", frames + "Nationality",
                               CompositionKind::Privative),
                  afkg::Error);
}

TEST_CASE("metaphoric blend substitutes mapped roles one-for-one") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  const auto& mappings = kb.metaphors.at(kMetaphor).role_mappings;
  auto out = blend_frames(kb, kCrime, kDisease, mappings);
  CHECK(out.kind == CompositionKind::Metaphoric);
  CHECK_FALSE(out.inherits_core);
  // Role count conservation: |output roles| = |target roles|.
  REQUIRE(out.roles.size() == kb.frames.at(kCrime).roles.size());
  std::set<std::string> ids;
  std::size_t substituted = 0;
  for (const auto& r : out.roles) {
    ids.insert(r.id);
    substituted += r.provenance == RoleProvenance::Substituted;
  }
  CHECK(substituted == 2);
  CHECK(ids.count(kRoles + "Disease_disease"));
  CHECK(ids.count(kRoles + "Disease_patient"));
  CHECK(ids.count(kRoles + "Crime_perpetrator"));  // unmapped role intact
  CHECK_FALSE(ids.count(kRoles + "Crime_criminal_activity"));
  CHECK_FALSE(ids.count(kRoles + "Crime_victim"));
}

TEST_CASE("blend_frames rejects empty mappings and foreign roles") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  CHECK_THROWS_AS(blend_frames(kb, kCrime, kDisease, {}), afkg::Error);
  CHECK_THROWS_AS(
      blend_frames(kb, kCrime, kDisease,
                   {{kRoles + "Crime_victim", kRoles + "Crime_victim"}}),
      afkg::Error);
}

TEST_CASE("economic blend identifies the merged entities as the target one") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  auto out = blend_occurrences(kb, crime_occ(), disease_occ(), kMetaphor,
                               IdentificationPolicy::Economic);

  REQUIRE(out.bindings.size() == 2);
  CHECK(out.bindings[0] == RoleBinding{kRoles + "Disease_disease", kCe});
  CHECK(out.bindings[1] == RoleBinding{kRoles + "Disease_patient", kCom});
  REQUIRE(out.merged_entities.size() == 1);
  CHECK(out.merged_entities[0].role == kRoles + "Disease_disease");
  CHECK(out.merged_entities[0].members == std::vector<std::string>{kCe, kIe});
  CHECK(out.merged_entities[0].result == kCe);

  // No fresh IRI anywhere in the economic output's bindings.
  std::set<std::string> inputs{kCe, kIe, kCom};
  for (const auto& b : out.bindings) CHECK(inputs.count(b.entity));
}

TEST_CASE("multiplicative blend mints a fresh deterministic hybrid") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  auto out = blend_occurrences(kb, crime_occ(), disease_occ(), kMetaphor,
                               IdentificationPolicy::Multiplicative);
  REQUIRE(out.merged_entities.size() == 1);
  const std::string& h = out.merged_entities[0].result;
  CHECK(h != kCe);
  CHECK(h != kIe);
  CHECK(h != kCom);
  CHECK(out.bindings[0] == RoleBinding{kRoles + "Disease_disease", h});
  CHECK(out.bindings[1] == RoleBinding{kRoles + "Disease_patient", kCom});

  // Deterministic: the same inputs mint the same hybrid.
  auto again = blend_occurrences(kb, crime_occ(), disease_occ(), kMetaphor,
                                 IdentificationPolicy::Multiplicative);
  CHECK(again.merged_entities[0].result == h);
}

TEST_CASE("blending never rewrites the input occurrences' entity sets") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  auto tgt = crime_occ();
  auto src = disease_occ();
  auto tgt_entities = entity_set(tgt);
  auto src_entities = entity_set(src);
  for (auto policy : {IdentificationPolicy::Economic,
                      IdentificationPolicy::Multiplicative}) {
    blend_occurrences(kb, tgt, src, kMetaphor, policy);
    CHECK(entity_set(tgt) == tgt_entities);
    CHECK(entity_set(src) == src_entities);
  }
}

TEST_CASE("unmapped target bindings pass through; unmapped source dropped") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  auto tgt = crime_occ();
  tgt.bindings.push_back({kRoles + "Crime_perpetrator",
                          "https://example.org/entities/mafia"});
  auto src = disease_occ();
  src.bindings.push_back({kRoles + "Disease_patient",
                          "https://example.org/entities/body"});
  auto out = blend_occurrences(kb, tgt, src, kMetaphor,
                               IdentificationPolicy::Economic);
  bool carried = false;
  for (const auto& b : out.bindings)
    carried |= b == RoleBinding{kRoles + "Crime_perpetrator",
                                "https://example.org/entities/mafia"};
  CHECK(carried);
  // patient is mapped: victim(com) and patient(body) merge under the policy.
  REQUIRE(out.merged_entities.size() == 2);
}

TEST_CASE("a metaphor without mappings blends to the target occurrence") {
  afkg::rdf::Graph g;
  g = parse_turtle(
      "@prefix metanet: <https://w3id.org/framester/metanet/schema/> .\n"
      "@prefix metaphordata: <https://w3id.org/framester/metanet/metaphors/> .\n"
      "@prefix framedata: <https://w3id.org/framester/metanet/frames/> .\n"
      "metaphordata:M a metanet:Metaphor ;\n"
      "  metanet:hasSourceFrame framedata:S ; metanet:hasTargetFrame framedata:T .\n"
      "framedata:S a metanet:Frame . framedata:T a metanet:Frame .\n");
  KnowledgeBase kb = build_kb(g);
  const std::string frames = "https://w3id.org/framester/metanet/frames/";
  FrameOccurrence tgt{"urn:t", frames + "T", {{kRoles + "r", "http://e/x"}}};
  FrameOccurrence src{"urn:s", frames + "S", {}};
  auto out = blend_occurrences(
      kb, tgt, src, "https://w3id.org/framester/metanet/metaphors/M",
      IdentificationPolicy::Economic);
  CHECK(out.bindings == tgt.bindings);
  CHECK(out.merged_entities.empty());
}

TEST_CASE("occurrence frames must match the metaphor's frames") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  CHECK_THROWS_AS(blend_occurrences(kb, disease_occ(), disease_occ(), kMetaphor,
                                    IdentificationPolicy::Economic),
                  afkg::Error);
  CHECK_THROWS_AS(blend_occurrences(kb, crime_occ(), crime_occ(), kMetaphor,
                                    IdentificationPolicy::Economic),
                  afkg::Error);
}

TEST_CASE("occurrence files load from JSON and Turtle identically") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = crime_kb(g);
  auto from_json = occurrence_from_file(testutil::fixture_path("occ_disease.json"),
                                        kb.vocab);
  auto from_ttl = occurrence_from_file(testutil::fixture_path("occ_disease.ttl"),
                                       kb.vocab);
  CHECK(from_json.frame == from_ttl.frame);
  CHECK(from_json.bindings == from_ttl.bindings);
  check_occurrence(kb, from_json);

  FrameOccurrence bad = from_json;
  bad.bindings.push_back({kRoles + "Crime_victim", kCom});
  CHECK_THROWS_AS(check_occurrence(kb, bad), afkg::Error);
}

TEST_CASE("select_interpretation separates the three readings") {
  afkg::rdf::Graph g;
  KnowledgeBase kb = person_kb(g);
  const std::string frames = "https://w3id.org/framester/metanet/frames/";
  ConstraintTable table{
      {frames + "Woman",
       FrameConstraints{"http://e/type/Organism", {frames + "Nationality"}}}};

  CHECK(select_interpretation(kb, frames + "Woman", "http://e/type/Organism",
                              frames + "Nationality", table) ==
        Interpretation::Conservative);
  CHECK(select_interpretation(kb, frames + "Woman", "http://e/type/Statue",
                              frames + "ConstitutingMaterial", table) ==
        Interpretation::Privative);
  CHECK(select_interpretation(kb, frames + "Woman", "http://e/type/Organism",
                              frames + "ConstitutingMaterial", table) ==
        Interpretation::Metaphoric);
  CHECK_THROWS_AS(select_interpretation(kb, frames + "Man", "http://e/t",
                                        frames + "Nationality", table),
                  afkg::Error);
}
