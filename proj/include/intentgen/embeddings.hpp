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
#ifndef INTENTGEN_EMBEDDINGS_HPP_
#define INTENTGEN_EMBEDDINGS_HPP_

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "intentgen/error.hpp"

namespace intentgen {

// Minimum cosine similarity for admitting a word into the relevant-word
// pool. Must lie strictly inside (0, 1).
struct Beta {
  double value = 0.5;

  Beta() = default;
  explicit Beta(double v) : value(v) {
    if (!(v > 0.0 && v < 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "beta must lie in (0,1), got " + std::to_string(v));
    }
  }
};

// Word-vector table. Vectors are unit-normalized at load time and tokens are
// lowercased, so cosine similarity is a plain dot product. Immutable after
// load.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(std::size_t dimension, std::string label)
      : dimension_(dimension), label_(std::move(label)) {}

  std::size_t dimension() const { return dimension_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(const std::string& token) const {
    return entries_.count(token) != 0;
  }
  const std::vector<double>& vector_of(const std::string& token) const;

  // Inserts a unit-normalized copy; replaces an existing entry.
  void insert(const std::string& token, std::vector<double> components);

  const std::map<std::string, std::vector<double>>& entries() const {
    return entries_;
  }

 private:
  std::size_t dimension_ = 0;
  std::string label_;
  std::map<std::string, std::vector<double>> entries_;
};

// Whitespace-delimited text format: optional `<count> <dimension>` header,
// then one `token f1 ... fD` row per line. Duplicate tokens keep the last
// row (with a warning).
EmbeddingTable load_vectors(const std::filesystem::path& path,
                            const std::string& label,
                            std::vector<std::string>* warnings = nullptr);

double cosine(const EmbeddingTable& table, const std::string& w1,
              const std::string& w2);

struct ScoredToken {
  std::string token;
  double score = 0.0;

  bool operator==(const ScoredToken& o) const {
    return token == o.token && score == o.score;
  }
};

// Part-of-speech membership test; backed by the lexicon in the pipeline
// (embedding tables carry no part-of-speech information themselves).
using PosFilter = std::function<bool(const std::string&)>;

// Every in-lexicon token whose best cosine against an in-vocabulary seed
// exceeds beta, sorted by score descending (ties by token). Seeds themselves
// are never returned. Throws when all seeds are out of vocabulary.
std::vector<ScoredToken> most_similar(const EmbeddingTable& table,
                                      const std::vector<std::string>& seeds,
                                      const PosFilter& in_pos, Beta beta);

// Generic+domain fusion: take the generic hits rw0, then admit each domain
// hit that is close (in the generic space) to some member of the rw0
// snapshot. Result order: generic hits by score, then admitted domain words
// by their domain score. Domain words missing from the generic table are
// skipped with a warning; an empty domain table yields exactly rw0.
std::vector<ScoredToken> relevant_words(const EmbeddingTable& generic,
                                        const EmbeddingTable& domain,
                                        const std::vector<std::string>& seeds,
                                        const PosFilter& in_pos, Beta beta,
                                        std::vector<std::string>* warnings =
                                            nullptr);

}  // namespace intentgen

#endif  // INTENTGEN_EMBEDDINGS_HPP_
