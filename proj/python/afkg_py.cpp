#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "afkg/blend/blending.hpp"
#include "afkg/error.hpp"
#include "afkg/blend/occurrence_io.hpp"
#include "afkg/gen/generation.hpp"
#include "afkg/rdf/query_text.hpp"
#include "afkg/rdf/turtle.hpp"
#include "afkg/schema/kb.hpp"

namespace py = pybind11;

namespace {

using afkg::blend::IdentificationPolicy;

/// Owns a Graph and its typed projection together, so the KB's pointer into
/// the graph can never dangle on the Python side.
class Store {
 public:
  explicit Store(const std::string& vocab_path = "") {
    vocab_ = vocab_path.empty() ? afkg::schema::Vocab::defaults()
                                : afkg::schema::Vocab::load_file(vocab_path);
    rebuild();
  }

  void load(const std::string& turtle_text) {
    graph_.merge(afkg::rdf::parse_turtle(turtle_text));
    rebuild();
  }

  std::size_t size() const { return graph_.size(); }

  std::string serialize() const { return afkg::rdf::serialize_turtle(graph_); }

  std::string serialize_ntriples() const {
    return afkg::rdf::serialize_ntriples(graph_);
  }

  py::list query(const std::string& query_text) const {
    auto q = afkg::rdf::parse_query(query_text, graph_.prefixes());
    py::list rows;
    for (const auto& binding : afkg::rdf::match_bgp(graph_, q)) {
      py::dict row;
      for (const auto& [var, term] : binding)
        row[py::str(var)] = term.value;
      rows.append(row);
    }
    return rows;
  }

  py::list validate() const {
    py::list out;
    for (const auto& v : afkg::schema::validate_kb(kb_))
      out.append(py::make_tuple(afkg::schema::violation_code_name(v.code),
                                v.subject, v.message));
    return out;
  }

  py::dict coverage() const {
    auto c = afkg::schema::alignment_coverage(
        kb_, afkg::schema::AlignmentKind::FramenetFrame);
    py::dict d;
    d["aligned"] = c.aligned;
    d["total"] = c.total;
    d["ratio"] = c.ratio;
    d["exact"] = c.exact;
    return d;
  }

  py::list frames() const {
    py::list out;
    for (const auto& [id, f] : kb_.frames) out.append(id);
    return out;
  }

  py::list metaphors() const {
    py::list out;
    for (const auto& [id, m] : kb_.metaphors) out.append(id);
    return out;
  }

  py::list generate(const std::string& metaphor) const {
    py::list out;
    for (const auto& c : afkg::gen::generate_lexicalizations(kb_, metaphor)) {
      py::dict d;
      d["phrase"] = c.phrase;
      d["source_synset"] = c.source_synset;
      d["target_synset"] = c.target_synset;
      out.append(d);
    }
    return out;
  }

  std::vector<std::string> explain(const std::string& adjective,
                                   const std::string& noun) const {
    return afkg::gen::explain_phrase(kb_, {adjective, noun});
  }

  py::list propose(const std::string& seed, unsigned depth) const {
    py::list out;
    for (const auto& c : afkg::gen::propose_novel_metaphors(kb_, seed, depth)) {
      py::dict d;
      d["source_frame"] = c.source_frame;
      d["target_frame"] = c.target_frame;
      d["derived_from"] = c.derived_from;
      d["rationale"] = c.rationale;
      out.append(d);
    }
    return out;
  }

  py::dict suggest_alignments(const std::string& frame,
                              const std::string& lexicon_path) const {
    auto res = afkg::gen::suggest_alignments(
        kb_, frame, afkg::gen::lexicon_from_file(lexicon_path));
    py::dict d;
    d["already_aligned"] = res.already_aligned;
    py::list suggestions;
    for (const auto& s : res.suggestions) {
      py::dict sd;
      sd["suggested"] = s.suggested;
      sd["is_composition"] = s.is_composition;
      sd["score"] = s.score;
      sd["needs_specialization"] = s.needs_specialization;
      suggestions.append(sd);
    }
    d["suggestions"] = suggestions;
    return d;
  }

  std::string blend(const std::string& metaphor,
                    const std::string& target_occ_path,
                    const std::string& source_occ_path,
                    const std::string& policy) const {
    auto tgt = afkg::blend::occurrence_from_file(target_occ_path, vocab_);
    auto src = afkg::blend::occurrence_from_file(source_occ_path, vocab_);
    afkg::blend::check_occurrence(kb_, tgt);
    afkg::blend::check_occurrence(kb_, src);
    IdentificationPolicy p;
    if (policy == "economic")
      p = IdentificationPolicy::Economic;
    else if (policy == "multiplicative")
      p = IdentificationPolicy::Multiplicative;
    else
      throw afkg::Error("unknown identification policy: " + policy);
    return afkg::blend::blended_occurrence_to_json(
        afkg::blend::blend_occurrences(kb_, tgt, src, metaphor, p));
  }

  std::string kb_json() const { return afkg::schema::kb_to_json(kb_); }

 private:
  void rebuild() { kb_ = afkg::schema::build_kb(graph_, vocab_); }

  afkg::rdf::Graph graph_;
  afkg::schema::Vocab vocab_;
  afkg::schema::KnowledgeBase kb_;
};

}  // namespace

PYBIND11_MODULE(afkg, m) {
  m.doc() = "Metaphor knowledge-graph toolkit: Turtle store, schema "
            "validation, frame blending, and lexicalization.";

  // Translators run most-recent-first, so the derived class goes last.
  py::register_exception<afkg::Error>(m, "AfkgError");
  py::register_exception<afkg::ParseError>(m, "TurtleParseError");

  m.def(
      "round_trip",
      [](const std::string& text) {
        return afkg::rdf::serialize_turtle(afkg::rdf::parse_turtle(text));
      },
      py::arg("turtle_text"),
      "Parse Turtle text and re-serialize it deterministically.");

  py::class_<Store>(m, "Store")
      .def(py::init<const std::string&>(), py::arg("vocab_path") = "")
      .def("load", &Store::load, py::arg("turtle_text"),
           "Merge Turtle text into the store and rebuild the typed view.")
      .def("size", &Store::size)
      .def("serialize", &Store::serialize)
      .def("serialize_ntriples", &Store::serialize_ntriples)
      .def("query", &Store::query, py::arg("query_text"))
      .def("validate", &Store::validate)
      .def("coverage", &Store::coverage)
      .def("frames", &Store::frames)
      .def("metaphors", &Store::metaphors)
      .def("generate", &Store::generate, py::arg("metaphor"))
      .def("explain", &Store::explain, py::arg("adjective"), py::arg("noun"))
      .def("propose", &Store::propose, py::arg("seed"), py::arg("depth"))
      .def("suggest_alignments", &Store::suggest_alignments, py::arg("frame"),
           py::arg("lexicon_path"))
      .def("blend", &Store::blend, py::arg("metaphor"),
           py::arg("target_occ_path"), py::arg("source_occ_path"),
           py::arg("policy"))
      .def("kb_json", &Store::kb_json);
}
