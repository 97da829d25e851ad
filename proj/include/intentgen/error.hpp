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
#ifndef INTENTGEN_ERROR_HPP_
#define INTENTGEN_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace intentgen {

enum class ErrorCode {
  kParseError,          // malformed input text (JSON, triples, WordNet, vectors)
  kUnsupportedContext,  // JSON-LD @context other than schema.org
  kStructureError,      // JSON value shape the ingester does not accept
  kNotFound,            // unknown graph name
  kNotAnAction,         // node lacks an Action type
  kUntypedHost,         // -input edge whose host node cannot be named
  kUnknownWord,         // word absent from the lexicon
  kOutOfVocabulary,     // token absent from an embedding table
  kFormatError,         // vector file format violation
  kInvalidArgument,
  kValidationError,     // grammar validation failure
  kFileError,           // missing or unreadable file
  kConflict,            // refusing to overwrite a differing export file
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace intentgen

#endif  // INTENTGEN_ERROR_HPP_
