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
#ifndef INTENTGEN_ANNOTATED_SENTENCE_HPP_
#define INTENTGEN_ANNOTATED_SENTENCE_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace intentgen {

// A slot value occurrence inside a training sentence. Offsets are byte
// offsets into `text`; text.substr(begin, end - begin) equals `value`.
struct SlotSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string modifier;  // dotted modifier path
  std::string value;
};

struct AnnotatedSentence {
  std::string text;
  std::vector<SlotSpan> spans;

  bool operator==(const AnnotatedSentence& o) const {
    if (text != o.text || spans.size() != o.spans.size()) return false;
    for (std::size_t i = 0; i < spans.size(); ++i) {
      if (spans[i].begin != o.spans[i].begin ||
          spans[i].end != o.spans[i].end ||
          spans[i].modifier != o.spans[i].modifier ||
          spans[i].value != o.spans[i].value) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace intentgen

#endif  // INTENTGEN_ANNOTATED_SENTENCE_HPP_
