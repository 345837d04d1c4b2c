#pragma once

#include <map>
#include <string>

namespace afkg::schema {

/// Predicate/class IRI configuration for projecting a Graph into typed
/// objects. Keys are fixed; values default to the w3id MetaNet namespace and
/// can be overridden from a flat `key=IRI` text file ('#' starts a comment).
class Vocab {
 public:
  static Vocab defaults();
  static Vocab load_file(const std::string& path);
  static Vocab parse(const std::string& text);

  /// Throws afkg::Error for unknown keys.
  const std::string& at(const std::string& key) const;
  void set(const std::string& key, const std::string& iri);
  const std::map<std::string, std::string>& entries() const { return iris_; }

  // Key names, to keep call sites typo-safe.
  static constexpr const char* kHasSourceFrame = "has_source_frame";
  static constexpr const char* kHasTargetFrame = "has_target_frame";
  static constexpr const char* kHasRole = "has_role";
  static constexpr const char* kHasRoleMapping = "has_role_mapping";
  static constexpr const char* kMappingSourceRole = "mapping_source_role";
  static constexpr const char* kMappingTargetRole = "mapping_target_role";
  static constexpr const char* kSubFrameOf = "sub_frame_of";
  static constexpr const char* kInheritsFrom = "inherits_from";
  static constexpr const char* kEntails = "entails";
  static constexpr const char* kCloseMatch = "close_match";
  static constexpr const char* kType = "type";
  static constexpr const char* kLabel = "label";
  static constexpr const char* kLemma = "lemma";
  static constexpr const char* kPos = "pos";
  static constexpr const char* kEvokes = "evokes";
  static constexpr const char* kMetaphorClass = "metaphor_class";
  static constexpr const char* kFrameClass = "frame_class";
  static constexpr const char* kFramenetFrameClass = "framenet_frame_class";
  static constexpr const char* kNounSynsetClass = "noun_synset_class";
  static constexpr const char* kAdjectiveSynsetClass = "adjective_synset_class";
  static constexpr const char* kAdjectiveSatelliteSynsetClass =
      "adjective_satellite_synset_class";
  static constexpr const char* kOccurrenceOf = "occurrence_of";
  static constexpr const char* kHasBinding = "has_binding";
  static constexpr const char* kBoundRole = "bound_role";
  static constexpr const char* kBoundEntity = "bound_entity";

 private:
  std::map<std::string, std::string> iris_;
};

}  // namespace afkg::schema
