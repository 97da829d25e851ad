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
#ifndef INTENTGEN_ACTION_HPP_
#define INTENTGEN_ACTION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "intentgen/annotated_sentence.hpp"
#include "intentgen/kg.hpp"

namespace intentgen {

// Constraints attached to a <property>-input edge, either as a
// PropertyValueSpecification node or as the string shorthand
// ("required name=... multiple").
struct ValueSpec {
  bool required = false;
  std::optional<std::string> value_name;
  Iri expected_datatype;  // range of the base property
  bool multiple = false;
};

// A request parameter of an action. The path alternates class and property
// local names from an object/result root down to the input property, e.g.
// `HotelRoom.containedInPlace.Hotel.amenityFeature.name`.
struct InputParam {
  std::string path;
  ValueSpec spec;
};

// The parsed description of one schema.org action: its type, the types of
// its object and result nodes, and the declared input/output parameters.
struct ActionDescription {
  std::string node_id;
  Iri action_type;                 // most specific asserted action type
  std::vector<Iri> object_types;   // asserted types of the object nodes
  std::vector<Iri> result_types;   // asserted types of the result nodes
  std::vector<InputParam> inputs;  // document order
  std::vector<std::string> outputs;
};

// A dialogue slot derived from an input parameter.
struct Modifier {
  std::string name;  // equals the source InputParam path
  Iri value_type;
  bool required = false;
};

// A goal-oriented dialogue intent: communicative act, object types, training
// sentences (empty right after extraction) and slots.
struct Intent {
  std::string act;                        // single lowercase token
  std::vector<std::string> object_types;  // class local names, sorted
  std::vector<AnnotatedSentence> sentences;
  std::vector<Modifier> modifiers;
};

// Node ids (in first-seen order) of every node in the graph whose asserted
// type is schema:Action or one of its subclasses.
std::vector<std::string> find_action_nodes(const TripleStore& store,
                                           const std::string& graph_name);

// Reads the action quintuple rooted at `node_id`. The graph should already
// be entailed; asserted types only are reported as object/result types.
ActionDescription parse_action(const TripleStore& store,
                               const std::string& node_id,
                               const std::string& graph_name,
                               std::vector<std::string>* warnings = nullptr);

// Builds the intent for an action: act = type local name minus the trailing
// "Action", lowercased; object types sorted; one modifier per input
// parameter in order; no sentences yet.
Intent extract_intent(const ActionDescription& action,
                      std::vector<std::string>* warnings = nullptr);

// Canonical serialization: {act, objectTypes, modifiers, sentences} with
// two-space indent and a trailing newline. Byte-stable for snapshot tests.
std::string intent_to_canonical_json(const Intent& intent);

}  // namespace intentgen

#endif  // INTENTGEN_ACTION_HPP_
