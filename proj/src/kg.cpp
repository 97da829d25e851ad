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
#include "intentgen/kg.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace intentgen {

namespace {

constexpr const char* kSchemaInverseOf = "http://schema.org/inverseOf";
constexpr const char* kSchemaDomainIncludes = "http://schema.org/domainIncludes";
constexpr const char* kSchemaRangeIncludes = "http://schema.org/rangeIncludes";

bool is_schema_level_predicate(const std::string& p) {
  return p == rdf::kSubClassOf || p == rdf::kSubPropertyOf ||
         p == kSchemaInverseOf;
}

}  // namespace

namespace schema {

std::string expand(std::string_view local_name) {
  return std::string(kNamespace) + std::string(local_name);
}

bool is_datatype(std::string_view iri) {
  static const std::array<std::string_view, 9> kDatatypes = {
      "Text", "Date", "DateTime", "Time",   "Number",
      "Integer", "Float", "Boolean", "URL"};
  for (auto d : kDatatypes) {
    if (iri == std::string(kNamespace) + std::string(d)) return true;
  }
  return false;
}

}  // namespace schema

std::string Iri::local_name() const {
  auto pos = value.find_last_of("/#");
  return pos == std::string::npos ? value : value.substr(pos + 1);
}

std::string Pattern::to_sparql() const {
  std::ostringstream out;
  out << "SELECT ?" << terminal << " WHERE {\n";
  out << "  ?n0 a <" << start_type.value << "> .\n";
  std::string prev = "?n0";
  for (std::size_t i = 0; i < hops.size(); ++i) {
    std::string next = i + 1 == hops.size()
                           ? "?" + terminal
                           : "?n" + std::to_string(i + 1);
    out << "  " << prev << " <" << hops[i].value << "> " << next << " .\n";
    prev = next;
  }
  out << "}";
  return out.str();
}

TripleStore::Graph& TripleStore::graph(const std::string& name) {
  return graphs_[name];
}

const TripleStore::Graph& TripleStore::graph_or_throw(
    const std::string& name) const {
  auto it = graphs_.find(name);
  if (it == graphs_.end()) {
    throw Error(ErrorCode::kNotFound, "unknown graph: " + name);
  }
  return it->second;
}

bool TripleStore::add(const std::string& graph_name, Triple triple) {
  Graph& g = graph(graph_name);
  auto key = std::make_tuple(triple.subject, triple.predicate, triple.object);
  if (!g.index.insert(key).second) return false;
  if (triple.derived) {
    ++g.derived;
  } else {
    ++g.asserted;
  }
  g.triples.push_back(std::move(triple));
  return true;
}

bool TripleStore::has_graph(const std::string& graph_name) const {
  return graphs_.count(graph_name) != 0;
}

const std::vector<Triple>& TripleStore::triples(
    const std::string& graph_name) const {
  return graph_or_throw(graph_name).triples;
}

std::size_t TripleStore::asserted_count(const std::string& graph_name) const {
  return graph_or_throw(graph_name).asserted;
}

std::size_t TripleStore::derived_count(const std::string& graph_name) const {
  return graph_or_throw(graph_name).derived;
}

std::vector<std::string> TripleStore::graph_names() const {
  std::vector<std::string> names;
  for (const auto& [name, g] : graphs_) names.push_back(name);
  return names;
}

std::vector<Term> TripleStore::objects_of(const std::string& graph_name,
                                          const Term& subject,
                                          const std::string& predicate) const {
  std::vector<Term> out;
  if (!has_graph(graph_name)) return out;
  for (const Triple& t : graph_or_throw(graph_name).triples) {
    if (t.subject == subject && t.predicate == predicate) {
      out.push_back(t.object);
    }
  }
  return out;
}

std::vector<Iri> TripleStore::asserted_types(const std::string& graph_name,
                                             const Term& node) const {
  std::vector<Iri> out;
  if (!has_graph(graph_name)) return out;
  for (const Triple& t : graph_or_throw(graph_name).triples) {
    if (!t.derived && t.subject == node && t.predicate == rdf::kType &&
        t.object.kind == Term::Kind::kIri) {
      out.push_back(Iri(t.object.value));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vocabulary file loading

VocabularyReport TripleStore::load_vocabulary(
    const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::kFileError,
                "cannot open vocabulary file: " + file.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_vocabulary_text(buf.str(), file.string());
}

namespace {

// Parses one `<s> <p> <o> .` line. Object is an IRI or a double-quoted
// string with \" and \\ escapes.
bool parse_triple_line(const std::string& line, std::string& s, std::string& p,
                       Term& o) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  auto read_iri = [&](std::string& out) {
    if (i >= line.size() || line[i] != '<') return false;
    auto end = line.find('>', i);
    if (end == std::string::npos) return false;
    out = line.substr(i + 1, end - i - 1);
    i = end + 1;
    return !out.empty();
  };
  skip_ws();
  if (!read_iri(s)) return false;
  skip_ws();
  if (!read_iri(p)) return false;
  skip_ws();
  if (i < line.size() && line[i] == '<') {
    std::string v;
    if (!read_iri(v)) return false;
    o = Term::iri(v);
  } else if (i < line.size() && line[i] == '"') {
    std::string v;
    ++i;
    while (i < line.size() && line[i] != '"') {
      if (line[i] == '\\' && i + 1 < line.size()) {
        ++i;
      }
      v.push_back(line[i]);
      ++i;
    }
    if (i >= line.size()) return false;
    ++i;  // closing quote
    o = Term::literal(v, schema::expand("Text"));
  } else {
    return false;
  }
  skip_ws();
  if (i >= line.size() || line[i] != '.') return false;
  ++i;
  skip_ws();
  return i == line.size();
}

bool upper_local_name(const std::string& iri) {
  auto pos = iri.find_last_of("/#");
  std::string local = pos == std::string::npos ? iri : iri.substr(pos + 1);
  return !local.empty() && std::isupper(static_cast<unsigned char>(local[0]));
}

}  // namespace

VocabularyReport TripleStore::load_vocabulary_text(std::string_view text,
                                                   const std::string& origin) {
  VocabularyReport report;
  std::set<std::string> classes, properties;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto classify = [&](const std::string& iri) {
    // Meta predicates and rdf/rdfs terms are not vocabulary terms.
    if (iri.rfind(schema::kNamespace, 0) != 0) return;
    (upper_local_name(iri) ? classes : properties).insert(iri);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::string s, p;
    Term o;
    if (!parse_triple_line(line, s, p, o)) {
      throw Error(ErrorCode::kParseError, origin + ": line " +
                                              std::to_string(lineno) +
                                              ": malformed triple");
    }
    add(kVocabularyGraph, Triple{Term::iri(s), p, o, false});
    ++report.triples;
    if (p == rdf::kSubClassOf) ++report.subclass_edges;
    if (p == rdf::kSubPropertyOf) ++report.subproperty_edges;
    if (p == kSchemaInverseOf) ++report.inverse_pairs;
    if (p == rdf::kComment) ++report.comments;
    classify(s);
    if (o.kind == Term::Kind::kIri) classify(o.value);
  }
  // Ensure the graph exists even for an empty file.
  graph(kVocabularyGraph);
  report.classes = classes.size();
  report.properties = properties.size();
  return report;
}

// ---------------------------------------------------------------------------
// Entailment

std::size_t TripleStore::apply_entailment(const std::string& graph_name) {
  if (!has_graph(graph_name)) {
    throw Error(ErrorCode::kNotFound, "unknown graph: " + graph_name);
  }
  graph(kVocabularyGraph);  // the vocabulary may legitimately be empty
  const bool on_vocab = graph_name == kVocabularyGraph;

  auto contains = [&](const Term& s, const std::string& p, const Term& o) {
    auto key = std::make_tuple(s, p, o);
    if (graphs_.at(graph_name).index.count(key)) return true;
    if (!on_vocab && graphs_.at(kVocabularyGraph).index.count(key))
      return true;
    return false;
  };
  auto place = [&](Term s, const std::string& p, Term o) {
    const std::string& target =
        (!on_vocab && is_schema_level_predicate(p)) ? kVocabularyGraph
                                                    : graph_name;
    return std::make_pair(target, Triple{std::move(s), p, std::move(o), true});
  };

  std::size_t added_to_target = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    // Snapshot the union view; rules below may only append.
    std::vector<Triple> view = graphs_.at(graph_name).triples;
    if (!on_vocab) {
      const auto& v = graphs_.at(kVocabularyGraph).triples;
      view.insert(view.end(), v.begin(), v.end());
    }

    std::vector<std::pair<Term, Term>> subclass, subprop;
    std::vector<std::pair<Term, Term>> inverse;
    for (const Triple& t : view) {
      if (t.predicate == rdf::kSubClassOf && t.object.is_node()) {
        subclass.emplace_back(t.subject, t.object);
      } else if (t.predicate == rdf::kSubPropertyOf && t.object.is_node()) {
        subprop.emplace_back(t.subject, t.object);
      } else if (t.predicate == kSchemaInverseOf && t.object.is_node()) {
        inverse.emplace_back(t.subject, t.object);
      }
    }

    std::vector<std::pair<std::string, Triple>> pending;
    // R1: subClassOf transitivity.
    for (const auto& [a, b] : subclass) {
      for (const auto& [c, d] : subclass) {
        if (b == c && a != d && !contains(a, rdf::kSubClassOf, d)) {
          pending.push_back(place(a, rdf::kSubClassOf, d));
        }
      }
    }
    for (const Triple& t : view) {
      // R2: type inheritance.
      if (t.predicate == rdf::kType) {
        for (const auto& [c, d] : subclass) {
          if (t.object == c && !contains(t.subject, rdf::kType, d)) {
            pending.push_back(place(t.subject, rdf::kType, d));
          }
        }
      }
      // R3: subPropertyOf propagation.
      for (const auto& [p, q] : subprop) {
        if (t.predicate == p.value && q.kind == Term::Kind::kIri &&
            !contains(t.subject, q.value, t.object)) {
          pending.push_back(place(t.subject, q.value, t.object));
        }
      }
      // R4: inverseOf, both directions; literals cannot become subjects.
      for (const auto& [p, q] : inverse) {
        if (!t.object.is_node()) continue;
        if (t.predicate == p.value && q.kind == Term::Kind::kIri &&
            !contains(t.object, q.value, t.subject)) {
          pending.push_back(place(t.object, q.value, t.subject));
        }
        if (t.predicate == q.value && p.kind == Term::Kind::kIri &&
            !contains(t.object, p.value, t.subject)) {
          pending.push_back(place(t.object, p.value, t.subject));
        }
      }
    }

    for (auto& [target, triple] : pending) {
      if (add(target, triple)) {
        changed = true;
        if (target == graph_name) ++added_to_target;
      }
    }
  }
  return added_to_target;
}

// ---------------------------------------------------------------------------
// Path queries

namespace {

std::string term_sort_form(const Term& t) { return t.value; }

}  // namespace

std::vector<std::pair<Term, Term>> TripleStore::query_path_with_sources(
    const Pattern& pattern,
    const std::optional<std::string>& graph_name) const {
  std::vector<const std::vector<Triple>*> sources;
  if (graph_name) {
    if (!has_graph(*graph_name)) return {};
    sources.push_back(&graphs_.at(*graph_name).triples);
  } else {
    for (const auto& [name, g] : graphs_) sources.push_back(&g.triples);
  }

  std::set<Term> frontier;
  for (const auto* ts : sources) {
    for (const Triple& t : *ts) {
      if (t.predicate == rdf::kType && t.object.kind == Term::Kind::kIri &&
          t.object.value == pattern.start_type.value) {
        frontier.insert(t.subject);
      }
    }
  }

  std::set<std::pair<Term, Term>> reached;  // (value, predecessor)
  for (const Term& f : frontier) reached.insert({f, f});
  for (const Iri& hop : pattern.hops) {
    std::set<std::pair<Term, Term>> next;
    for (const auto* ts : sources) {
      for (const Triple& t : *ts) {
        if (t.predicate != hop.value) continue;
        for (const auto& [node, prev] : reached) {
          if (t.subject == node) next.insert({t.object, t.subject});
        }
      }
    }
    reached = std::move(next);
  }

  std::vector<std::pair<Term, Term>> out(reached.begin(), reached.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    auto fa = term_sort_form(a.first), fb = term_sort_form(b.first);
    if (fa != fb) return fa < fb;
    return a.first.key() < b.first.key();
  });
  // Deduplicate by leaf value, keeping the first source.
  std::vector<std::pair<Term, Term>> dedup;
  for (auto& pr : out) {
    if (dedup.empty() || !(dedup.back().first == pr.first)) {
      dedup.push_back(pr);
    }
  }
  return dedup;
}

std::vector<Term> TripleStore::query_path(
    const Pattern& pattern,
    const std::optional<std::string>& graph_name) const {
  std::vector<Term> out;
  for (auto& [leaf, src] : query_path_with_sources(pattern, graph_name)) {
    out.push_back(leaf);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vocabulary lookups

std::optional<std::string> TripleStore::comment_of(const Iri& term) const {
  if (!has_graph(kVocabularyGraph)) return std::nullopt;
  for (const Triple& t : graphs_.at(kVocabularyGraph).triples) {
    if (t.subject == Term::iri(term.value) && t.predicate == rdf::kComment &&
        t.object.is_literal()) {
      return t.object.value;
    }
  }
  return std::nullopt;
}

std::vector<Iri> TripleStore::ranges_of(const Iri& property) const {
  std::vector<Iri> out;
  if (!has_graph(kVocabularyGraph)) return out;
  for (const Triple& t : graphs_.at(kVocabularyGraph).triples) {
    if (t.subject == Term::iri(property.value) &&
        (t.predicate == kSchemaRangeIncludes || t.predicate == rdf::kRange) &&
        t.object.kind == Term::Kind::kIri) {
      out.push_back(Iri(t.object.value));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool TripleStore::is_subclass_of(const Iri& cls, const Iri& ancestor) const {
  if (cls == ancestor) return true;
  if (!has_graph(kVocabularyGraph)) return false;
  std::set<std::string> seen{cls.value};
  std::vector<std::string> stack{cls.value};
  const auto& vocab = graphs_.at(kVocabularyGraph).triples;
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    for (const Triple& t : vocab) {
      if (t.predicate == rdf::kSubClassOf && t.subject == Term::iri(cur) &&
          t.object.kind == Term::Kind::kIri) {
        if (t.object.value == ancestor.value) return true;
        if (seen.insert(t.object.value).second) stack.push_back(t.object.value);
      }
    }
  }
  return false;
}

namespace {

bool mentioned_in_vocab(const std::vector<Triple>& vocab,
                        const std::string& iri) {
  for (const Triple& t : vocab) {
    if (t.subject == Term::iri(iri)) return true;
    if (t.object.kind == Term::Kind::kIri && t.object.value == iri) return true;
  }
  return false;
}

}  // namespace

bool TripleStore::is_known_property(const Iri& property) const {
  if (!has_graph(kVocabularyGraph)) return false;
  return !upper_local_name(property.value) &&
         mentioned_in_vocab(graphs_.at(kVocabularyGraph).triples,
                            property.value);
}

bool TripleStore::is_known_class(const Iri& cls) const {
  if (!has_graph(kVocabularyGraph)) return false;
  return upper_local_name(cls.value) &&
         mentioned_in_vocab(graphs_.at(kVocabularyGraph).triples, cls.value);
}

}  // namespace intentgen
