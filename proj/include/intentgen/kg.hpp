/* Copyright 2026 The IntentGen Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef INTENTGEN_KG_HPP_
#define INTENTGEN_KG_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "intentgen/error.hpp"

namespace intentgen {

// Well-known IRIs. schema.org terms are always stored fully expanded under
// the http:// namespace; the ingester normalizes https:// contexts.
namespace rdf {
inline constexpr const char* kType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr const char* kSubClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr const char* kSubPropertyOf =
    "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr const char* kComment =
    "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr const char* kDomain =
    "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr const char* kRange =
    "http://www.w3.org/2000/01/rdf-schema#range";
}  // namespace rdf

namespace schema {
inline constexpr const char* kNamespace = "http://schema.org/";

std::string expand(std::string_view local_name);
// True for the schema.org literal datatypes (Text, Date, Number, ...).
bool is_datatype(std::string_view iri);
}  // namespace schema

// An absolute IRI. Strong type so that class/property identifiers do not mix
// with plain strings in signatures.
struct Iri {
  std::string value;

  Iri() = default;
  explicit Iri(std::string v) : value(std::move(v)) {}

  // Text after the last '/' or '#'.
  std::string local_name() const;

  bool operator==(const Iri& o) const { return value == o.value; }
  bool operator!=(const Iri& o) const { return value != o.value; }
  bool operator<(const Iri& o) const { return value < o.value; }
};

struct Literal {
  std::string lexical_form;
  Iri datatype;
};

// Subject/object position of a triple: IRI, blank node id, or literal.
struct Term {
  enum class Kind { kIri, kBlank, kLiteral };

  Kind kind = Kind::kIri;
  std::string value;     // IRI text, blank id, or lexical form
  std::string datatype;  // literal datatype IRI, empty otherwise

  static Term iri(std::string v) { return {Kind::kIri, std::move(v), {}}; }
  static Term blank(std::string v) { return {Kind::kBlank, std::move(v), {}}; }
  static Term literal(std::string lex, std::string dt) {
    return {Kind::kLiteral, std::move(lex), std::move(dt)};
  }

  bool is_node() const { return kind != Kind::kLiteral; }
  bool is_literal() const { return kind == Kind::kLiteral; }

  auto key() const { return std::tie(kind, value, datatype); }
  bool operator==(const Term& o) const { return key() == o.key(); }
  bool operator!=(const Term& o) const { return key() != o.key(); }
  bool operator<(const Term& o) const { return key() < o.key(); }
};

struct Triple {
  Term subject;            // iri or blank
  std::string predicate;   // always an IRI
  Term object;
  bool derived = false;    // true when added by entailment

  auto key() const { return std::tie(subject, predicate, object); }
};

// A linear property-path query: nodes typed `start_type`, then one hop per
// property, collecting whatever the last hop reaches.
struct Pattern {
  Iri start_type;
  std::vector<Iri> hops;
  std::string terminal = "value";

  // SPARQL-like rendering for logs and docs; not executed anywhere.
  std::string to_sparql() const;
};

struct IngestReport {
  std::size_t triples = 0;
  std::vector<std::string> root_ids;
  std::vector<std::string> warnings;
};

struct VocabularyReport {
  std::size_t classes = 0;
  std::size_t properties = 0;
  std::size_t subclass_edges = 0;
  std::size_t subproperty_edges = 0;
  std::size_t inverse_pairs = 0;
  std::size_t comments = 0;
  std::size_t triples = 0;
};

// In-memory triple store with named graphs, a JSON-LD-subset ingester and
// RDFS-style forward-chaining entailment. Build it single-threaded (ingest,
// load_vocabulary, apply_entailment); afterwards all queries are const and
// safe to run from any number of threads.
class TripleStore {
 public:
  static constexpr const char* kVocabularyGraph = "vocab";

  // Parses a JSON-LD document (inline schema.org context, @type, @id,
  // nesting and arrays) into triples of the named graph. Nested objects
  // without @id become blank nodes numbered in document order.
  IngestReport ingest_jsonld(std::string_view document,
                             const std::string& graph_name);

  // Loads line-based <s> <p> <o> . triples into the reserved vocabulary
  // graph. String literals only.
  VocabularyReport load_vocabulary(const std::filesystem::path& file);
  VocabularyReport load_vocabulary_text(std::string_view text,
                                        const std::string& origin);

  // Forward-chains subClassOf transitivity, type inheritance, subPropertyOf
  // propagation and inverseOf over the union of the graph and the
  // vocabulary, to fixpoint. Derived schema-level triples (subClassOf,
  // subPropertyOf, inverseOf) are kept in the vocabulary graph; everything
  // else lands in the named graph. Returns the number of triples added to
  // the named graph. Idempotent.
  std::size_t apply_entailment(const std::string& graph_name);

  // Every value reachable from nodes typed pattern.start_type through the
  // hops, deduplicated, ordered lexicographically by string form. Empty
  // graph_name queries the union of all graphs.
  std::vector<Term> query_path(
      const Pattern& pattern,
      const std::optional<std::string>& graph_name = std::nullopt) const;
  // Same traversal, but each leaf is paired with the node it was reached
  // from (needed to look up alternate names of entities behind a final
  // schema:name hop).
  std::vector<std::pair<Term, Term>> query_path_with_sources(
      const Pattern& pattern,
      const std::optional<std::string>& graph_name = std::nullopt) const;

  // Direct manipulation, used by the ingester and by tests that build small
  // graphs programmatically. Returns false when the triple already existed.
  bool add(const std::string& graph_name, Triple triple);

  bool has_graph(const std::string& graph_name) const;
  const std::vector<Triple>& triples(const std::string& graph_name) const;
  std::size_t asserted_count(const std::string& graph_name) const;
  std::size_t derived_count(const std::string& graph_name) const;
  std::vector<std::string> graph_names() const;

  // Objects of (subject, predicate, ?) within one graph, insertion order.
  std::vector<Term> objects_of(const std::string& graph_name,
                               const Term& subject,
                               const std::string& predicate) const;
  // Asserted rdf:type objects of a node, insertion order.
  std::vector<Iri> asserted_types(const std::string& graph_name,
                                  const Term& node) const;

  // Vocabulary lookups (all read the reserved vocabulary graph).
  std::optional<std::string> comment_of(const Iri& term) const;
  std::vector<Iri> ranges_of(const Iri& property) const;
  bool is_subclass_of(const Iri& cls, const Iri& ancestor) const;
  bool is_known_property(const Iri& property) const;
  bool is_known_class(const Iri& cls) const;

 private:
  struct Graph {
    std::vector<Triple> triples;
    std::set<std::tuple<Term, std::string, Term>> index;
    std::size_t asserted = 0;
    std::size_t derived = 0;
    std::size_t blank_counter = 0;
  };

  Graph& graph(const std::string& name);
  const Graph& graph_or_throw(const std::string& name) const;

  std::map<std::string, Graph> graphs_;
};

}  // namespace intentgen

#endif  // INTENTGEN_KG_HPP_
