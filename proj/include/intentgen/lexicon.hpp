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
#ifndef INTENTGEN_LEXICON_HPP_
#define INTENTGEN_LEXICON_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "intentgen/error.hpp"

namespace intentgen {

enum class Pos { kNoun, kVerb };

const char* pos_tag(Pos pos);  // "noun" / "verb"

struct SynsetId {
  std::uint32_t offset = 0;
  Pos pos = Pos::kNoun;

  auto key() const { return std::tie(pos, offset); }
  bool operator==(const SynsetId& o) const { return key() == o.key(); }
  bool operator<(const SynsetId& o) const { return key() < o.key(); }
};

struct Synset {
  SynsetId id;
  std::vector<std::string> words;  // lowercase lemmas, '_' joins multiwords
  std::string gloss;
  std::vector<std::uint32_t> hypernyms;  // offsets within the same pos
};

struct SynonymHit {
  std::string lemma;
  SynsetId synset;
  std::string gloss;
};

// Sorensen-Dice bigram similarity. Case-folded; bigrams are taken within
// whitespace-separated words, counted as multisets. Identical inputs score
// 1.0; inputs without any bigram score 0.0.
double dice(std::string_view a, std::string_view b);

// Princeton-format WordNet database reader (index.* / data.* for nouns and
// verbs). Only hypernym (@) pointers are kept. Immutable after load; all
// queries are const and freely concurrent.
class Lexicon {
 public:
  // Requires index.noun, data.noun, index.verb, data.verb in `directory`.
  static Lexicon load(const std::filesystem::path& directory);

  std::size_t synset_count(Pos pos) const;
  bool contains(const std::string& word, Pos pos) const;
  const Synset* find(SynsetId id) const;

  // All lemmas that share a synset with `word`, excluding `word` itself.
  // Ordered by (synset offset, position within the synset).
  std::vector<SynonymHit> synonyms(const std::string& word, Pos pos) const;

  // Ranks the word's synsets by dice(gloss, context_description), keeps the
  // top_k best (ties broken by lower offset) and returns their lemmas in
  // rank order, deduplicated, still excluding the query word. An empty
  // context falls back to all synonyms and records a warning.
  std::vector<std::string> relevant_synonyms(
      const std::string& word, Pos pos, const std::string& context_description,
      std::size_t top_k = 2, std::vector<std::string>* warnings = nullptr) const;

  // Wu-Palmer similarity: max over sense pairs of
  // 2*depth(lcs) / (depth(s1) + depth(s2)), with node-counting depths from a
  // virtual root above all roots of the part of speech (root depth 1).
  double wup_similarity(const std::string& w1, const std::string& w2,
                        Pos pos) const;

 private:
  struct PosData {
    std::vector<Synset> synsets;                      // sorted by offset
    std::map<std::uint32_t, std::size_t> by_offset;   // offset -> index
    std::map<std::string, std::vector<std::uint32_t>> lemma_index;
  };

  const PosData& data(Pos pos) const {
    return pos == Pos::kNoun ? nouns_ : verbs_;
  }

  int depth_of(const PosData& d, std::uint32_t offset) const;
  void ancestors_of(const PosData& d, std::uint32_t offset,
                    std::map<std::uint32_t, int>& out) const;

  PosData nouns_;
  PosData verbs_;
};

}  // namespace intentgen

#endif  // INTENTGEN_LEXICON_HPP_
