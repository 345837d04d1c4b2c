// Command-line surface for the metaphor knowledge-graph engine.
//
// Exit codes: 0 success, 1 domain violations or unresolved domain inputs,
// 2 usage errors, 3 file or parse errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "afkg/blend/blending.hpp"
#include "afkg/blend/occurrence_io.hpp"
#include "afkg/error.hpp"
#include "afkg/gen/generation.hpp"
#include "afkg/rdf/query_text.hpp"
#include "afkg/rdf/turtle.hpp"
#include "afkg/schema/kb.hpp"

namespace {

using nlohmann::json;

// Domain-level failure (unknown IRI, violations): exit code 1.
struct DomainExit : afkg::Error {
  using afkg::Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw afkg::Error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

afkg::rdf::Graph load_graph(const std::vector<std::string>& paths) {
  afkg::rdf::Graph g;
  for (const auto& p : paths) {
    try {
      g.merge(afkg::rdf::parse_turtle(read_file(p)));
    } catch (const afkg::ParseError& e) {
      throw afkg::ParseError(e.line(), e.column(), p + ": " + e.reason());
    }
  }
  return g;
}

afkg::schema::Vocab load_vocab(const std::string& vocab_path) {
  if (!vocab_path.empty()) return afkg::schema::Vocab::load_file(vocab_path);
  if (const char* env = std::getenv("AFKG_VOCAB"); env && *env)
    return afkg::schema::Vocab::load_file(env);
  return afkg::schema::Vocab::defaults();
}

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw afkg::Error("cannot open output file: " + out_path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Conceptual-metaphor knowledge-graph engine"};
  app.require_subcommand(1);

  // Shared option storage; each subcommand registers the flags it uses.
  std::vector<std::string> data;
  std::string vocab_path, out_path, format = "turtle";
  std::string metaphor, seed, frame, adj, noun;
  std::string query_file, lexicon_file, target_occ, source_occ;
  std::string policy = "economic";
  std::string parse_input;
  unsigned depth = 1;
  bool as_json = false;

  auto add_data = [&](CLI::App* cmd) {
    cmd->add_option("--data", data, "Turtle data file(s)")->required();
    cmd->add_option("--vocab", vocab_path, "vocabulary key=IRI file");
  };

  auto* cmd_parse = app.add_subcommand("parse", "parse one Turtle file and re-serialize it");
  cmd_parse->add_option("file", parse_input, "Turtle file")->required();
  cmd_parse->add_option("--out", out_path, "output file (default stdout)");
  cmd_parse->add_option("--format", format, "turtle|ntriples")
      ->check(CLI::IsMember({"turtle", "ntriples"}));

  auto* cmd_validate = app.add_subcommand("validate", "check schema constraints");
  add_data(cmd_validate);

  auto* cmd_stats = app.add_subcommand("stats", "graph and alignment statistics");
  add_data(cmd_stats);

  auto* cmd_generate = app.add_subcommand("generate", "lexicalize a metaphor as adjective-noun phrases");
  cmd_generate->add_option("--metaphor", metaphor, "metaphor IRI")->required();
  cmd_generate->add_flag("--json", as_json, "JSON-lines output");
  add_data(cmd_generate);

  auto* cmd_explain = app.add_subcommand("explain", "metaphors explaining an adjective-noun phrase");
  cmd_explain->add_option("--adj", adj, "adjective lemma")->required();
  cmd_explain->add_option("--noun", noun, "noun lemma")->required();
  cmd_explain->add_flag("--json", as_json, "JSON-lines output");
  add_data(cmd_explain);

  auto* cmd_propose = app.add_subcommand("propose", "specializations of a seed metaphor");
  cmd_propose->add_option("--seed", seed, "seed metaphor IRI")->required();
  cmd_propose->add_option("--depth", depth, "sub-frame search depth")->required();
  cmd_propose->add_flag("--json", as_json, "JSON-lines output");
  add_data(cmd_propose);

  auto* cmd_blend = app.add_subcommand("blend", "blend two frame occurrences under a metaphor");
  cmd_blend->add_option("--metaphor", metaphor, "metaphor IRI")->required();
  cmd_blend->add_option("--target-occ", target_occ, "target occurrence file")->required();
  cmd_blend->add_option("--source-occ", source_occ, "source occurrence file")->required();
  cmd_blend->add_option("--policy", policy, "economic|multiplicative")
      ->check(CLI::IsMember({"economic", "multiplicative"}));
  add_data(cmd_blend);

  auto* cmd_query = app.add_subcommand("query", "run a SELECT query file against the data");
  cmd_query->add_option("--file", query_file, "query file")->required();
  add_data(cmd_query);

  auto* cmd_suggest = app.add_subcommand("suggest-align", "suggest FrameNet alignments for a frame");
  cmd_suggest->add_option("--frame", frame, "frame IRI")->required();
  cmd_suggest->add_option("--lexicon", lexicon_file, "lemma=IRI lexicon file")->required();
  cmd_suggest->add_flag("--json", as_json, "JSON-lines output");
  add_data(cmd_suggest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (cmd_parse->parsed()) {
    afkg::rdf::Graph g = afkg::rdf::parse_turtle(read_file(parse_input));
    write_out(out_path, format == "ntriples" ? afkg::rdf::serialize_ntriples(g)
                                             : afkg::rdf::serialize_turtle(g));
    return 0;
  }

  afkg::rdf::Graph g = load_graph(data);
  afkg::schema::KnowledgeBase kb =
      afkg::schema::build_kb(g, load_vocab(vocab_path));

  if (cmd_validate->parsed()) {
    auto violations = afkg::schema::validate_kb(kb);
    for (const auto& v : violations)
      std::cout << afkg::schema::violation_code_name(v.code) << ' ' << v.subject
                << ' ' << v.message << '\n';
    return violations.empty() ? 0 : 1;
  }

  if (cmd_stats->parsed()) {
    auto cov = afkg::schema::alignment_coverage(
        kb, afkg::schema::AlignmentKind::FramenetFrame);
    std::cout << "triples " << g.size() << '\n'
              << "frames " << kb.frames.size() << '\n'
              << "metaphors " << kb.metaphors.size() << '\n'
              << "framenet_coverage " << cov.exact << " = " << cov.ratio << '\n';
    return 0;
  }

  if (cmd_generate->parsed()) {
    for (const auto& c : afkg::gen::generate_lexicalizations(kb, metaphor)) {
      if (as_json) {
        json j;
        j["metaphor"] = c.metaphor;
        j["phrase"] = c.phrase;
        j["source_synset"] = c.source_synset;
        j["target_synset"] = c.target_synset;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << c.phrase << '\t' << c.source_synset << '\t'
                  << c.target_synset << '\n';
      }
    }
    return 0;
  }

  if (cmd_explain->parsed()) {
    for (const auto& m : afkg::gen::explain_phrase(kb, {adj, noun})) {
      if (as_json)
        std::cout << json{{"metaphor", m}}.dump() << '\n';
      else
        std::cout << m << '\n';
    }
    return 0;
  }

  if (cmd_propose->parsed()) {
    for (const auto& c : afkg::gen::propose_novel_metaphors(kb, seed, depth)) {
      if (as_json) {
        json j;
        j["derived_from"] = c.derived_from;
        j["rationale"] = c.rationale;
        j["source_frame"] = c.source_frame;
        j["target_frame"] = c.target_frame;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << c.source_frame << '\t' << c.target_frame << '\t'
                  << c.rationale << '\n';
      }
    }
    return 0;
  }

  if (cmd_blend->parsed()) {
    auto tgt = afkg::blend::occurrence_from_file(target_occ, kb.vocab);
    auto src = afkg::blend::occurrence_from_file(source_occ, kb.vocab);
    afkg::blend::check_occurrence(kb, tgt);
    afkg::blend::check_occurrence(kb, src);
    auto pol = policy == "multiplicative"
                   ? afkg::blend::IdentificationPolicy::Multiplicative
                   : afkg::blend::IdentificationPolicy::Economic;
    auto blended = afkg::blend::blend_occurrences(kb, tgt, src, metaphor, pol);
    std::cout << afkg::blend::blended_occurrence_to_json(blended) << '\n';
    return 0;
  }

  if (cmd_query->parsed()) {
    auto q = afkg::rdf::parse_query(read_file(query_file), g.prefixes());
    for (const auto& row : afkg::rdf::match_bgp(g, q)) {
      bool first = true;
      for (const auto& var : q.projected()) {
        if (!first) std::cout << '\t';
        first = false;
        auto it = row.find(var);
        std::cout << '?' << var << '='
                  << (it == row.end() ? std::string("<unbound>")
                                      : it->second.to_ntriples());
      }
      std::cout << '\n';
    }
    return 0;
  }

  if (cmd_suggest->parsed()) {
    auto lexicon = afkg::gen::lexicon_from_file(lexicon_file);
    auto result = afkg::gen::suggest_alignments(kb, frame, lexicon);
    if (result.already_aligned) {
      std::cout << "already-aligned " << frame << '\n';
      return 0;
    }
    for (const auto& s : result.suggestions) {
      if (as_json) {
        json j;
        j["frame"] = s.frame;
        j["is_composition"] = s.is_composition;
        j["needs_specialization"] = s.needs_specialization;
        j["score"] = s.score;
        j["suggested"] = s.suggested;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << s.score << (s.is_composition ? "\tcomposition" : "\tdirect");
        for (const auto& iri : s.suggested) std::cout << '\t' << iri;
        if (s.needs_specialization) std::cout << "\tneeds-specialization";
        std::cout << '\n';
      }
    }
    return 0;
  }

  std::cerr << "no subcommand selected\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const afkg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const DomainExit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const afkg::Error& e) {
    // I/O problems and unreadable inputs.
    std::string msg = e.what();
    bool io = msg.rfind("cannot open", 0) == 0 || msg.find("JSON") != std::string::npos;
    std::cerr << "error: " << msg << '\n';
    return io ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
