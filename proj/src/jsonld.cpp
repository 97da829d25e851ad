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

// JSON-LD subset ingester: inline schema.org string context, @type, @id,
// nested node objects and arrays of values. This intentionally does not
// implement the full JSON-LD processing algorithm; annotation documents in
// the wild that describe actions never need remote contexts or framing.

#include <cctype>
#include <string>

#include "intentgen/kg.hpp"
#include "json.hpp"

namespace intentgen {

namespace {

using Json = nlohmann::ordered_json;  // preserves document key order

bool is_absolute_iri(const std::string& s) {
  return s.find("://") != std::string::npos || s.rfind("urn:", 0) == 0;
}

std::string expand_term(const std::string& term) {
  return is_absolute_iri(term) ? term : schema::expand(term);
}

bool accepted_context(const std::string& ctx) {
  return ctx == "http://schema.org" || ctx == "http://schema.org/" ||
         ctx == "https://schema.org" || ctx == "https://schema.org/";
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool valid_day_month(int day, int month) {
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

// Dates arrive either as ISO-8601 or in the dotted DD.MM.YYYY surface form;
// both are stored as ISO-8601 schema:Date literals.
Term string_literal(const std::string& s) {
  if (s.size() == 10 && s[4] == '-' && s[7] == '-' &&
      all_digits(s.substr(0, 4)) && all_digits(s.substr(5, 2)) &&
      all_digits(s.substr(8, 2)) &&
      valid_day_month(std::stoi(s.substr(8, 2)), std::stoi(s.substr(5, 2)))) {
    return Term::literal(s, schema::expand("Date"));
  }
  if (s.size() == 10 && s[2] == '.' && s[5] == '.' &&
      all_digits(s.substr(0, 2)) && all_digits(s.substr(3, 2)) &&
      all_digits(s.substr(6, 4)) &&
      valid_day_month(std::stoi(s.substr(0, 2)), std::stoi(s.substr(3, 2)))) {
    return Term::literal(
        s.substr(6, 4) + "-" + s.substr(3, 2) + "-" + s.substr(0, 2),
        schema::expand("Date"));
  }
  return Term::literal(s, schema::expand("Text"));
}

class Ingester {
 public:
  Ingester(TripleStore& store, std::string graph_name, std::size_t* counter,
           IngestReport& report)
      : store_(store),
        graph_(std::move(graph_name)),
        counter_(counter),
        report_(report) {}

  Term walk_node(const Json& node, const std::string& path) {
    if (!node.is_object()) {
      throw Error(ErrorCode::kStructureError,
                  "expected a node object at " + path);
    }
    if (auto it = node.find("@context"); it != node.end()) {
      if (!it->is_string() || !accepted_context(it->get<std::string>())) {
        throw Error(ErrorCode::kUnsupportedContext,
                    "unsupported @context at " + path +
                        " (only the schema.org context string is accepted)");
      }
    }

    if (auto it = node.find("@id"); it != node.end() && !it->is_string()) {
      throw Error(ErrorCode::kStructureError, "non-string @id at " + path);
    }

    // A bare {"@id": ...} object is a reference to an existing node.
    if (node.size() == 1 && node.contains("@id")) {
      return Term::iri(node.at("@id").get<std::string>());
    }

    Term id = node.contains("@id")
                  ? Term::iri(node.at("@id").get<std::string>())
                  : Term::blank("_:g" + graph_ + "_n" +
                                std::to_string(++*counter_));

    if (auto it = node.find("@type"); it != node.end()) {
      if (it->is_string()) {
        emit(id, rdf::kType, Term::iri(expand_term(it->get<std::string>())));
      } else if (it->is_array()) {
        for (const auto& t : *it) {
          if (!t.is_string()) {
            throw Error(ErrorCode::kStructureError,
                        "non-string @type at " + path);
          }
          emit(id, rdf::kType, Term::iri(expand_term(t.get<std::string>())));
        }
      } else {
        throw Error(ErrorCode::kStructureError, "bad @type at " + path);
      }
    }

    for (const auto& [key, value] : node.items()) {
      if (key == "@context" || key == "@id" || key == "@type") continue;
      if (!key.empty() && key[0] == '@') {
        throw Error(ErrorCode::kStructureError,
                    "unsupported keyword " + key + " at " + path);
      }
      std::string pred = expand_term(key);
      std::string vpath = path + "." + key;
      if (value.is_array()) {
        std::size_t i = 0;
        for (const auto& item : value) {
          walk_value(id, pred, item, vpath + "[" + std::to_string(i) + "]",
                     /*inside_array=*/true);
          ++i;
        }
      } else {
        walk_value(id, pred, value, vpath, /*inside_array=*/false);
      }
    }
    return id;
  }

 private:
  void walk_value(const Term& subject, const std::string& pred,
                  const Json& value, const std::string& path,
                  bool inside_array) {
    if (value.is_string()) {
      emit(subject, pred, string_literal(value.get<std::string>()));
    } else if (value.is_number_integer() || value.is_number_unsigned()) {
      emit(subject, pred,
           Term::literal(std::to_string(value.get<long long>()),
                         schema::expand("Number")));
    } else if (value.is_number_float()) {
      emit(subject, pred,
           Term::literal(value.dump(), schema::expand("Number")));
    } else if (value.is_boolean()) {
      emit(subject, pred,
           Term::literal(value.get<bool>() ? "true" : "false",
                         schema::expand("Boolean")));
    } else if (value.is_object()) {
      Term child = walk_node(value, path);
      emit(subject, pred, child);
    } else if (value.is_array()) {
      if (inside_array) {
        throw Error(ErrorCode::kStructureError,
                    "nested array at " + path);
      }
      throw Error(ErrorCode::kStructureError, "unexpected array at " + path);
    } else {
      throw Error(ErrorCode::kStructureError,
                  "unsupported value at " + path);
    }
  }

  void emit(const Term& s, const std::string& p, Term o) {
    if (store_.add(graph_, Triple{s, p, std::move(o), false})) {
      ++report_.triples;
    }
  }

  TripleStore& store_;
  std::string graph_;
  std::size_t* counter_;
  IngestReport& report_;
};

}  // namespace

IngestReport TripleStore::ingest_jsonld(std::string_view document,
                                        const std::string& graph_name) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "malformed JSON at byte " + std::to_string(e.byte) + ": " +
                    e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kStructureError,
                "top-level value must be a JSON object");
  }
  if (!doc.contains("@context")) {
    throw Error(ErrorCode::kUnsupportedContext, "missing @context");
  }
  if (!doc.at("@context").is_string() ||
      !accepted_context(doc.at("@context").get<std::string>())) {
    throw Error(ErrorCode::kUnsupportedContext,
                "unsupported @context (only the schema.org context string is "
                "accepted)");
  }

  IngestReport report;
  Graph& g = graph(graph_name);
  Ingester ingester(*this, graph_name, &g.blank_counter, report);
  Term root = ingester.walk_node(doc, "$");
  report.root_ids.push_back(root.value);
  return report;
}

}  // namespace intentgen
