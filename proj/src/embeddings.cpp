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
#include "intentgen/embeddings.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace intentgen {

namespace {

std::string fold(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace

const std::vector<double>& EmbeddingTable::vector_of(
    const std::string& token) const {
  auto it = entries_.find(token);
  if (it == entries_.end()) {
    throw Error(ErrorCode::kOutOfVocabulary,
                "token not in " + label_ + " vectors: " + token);
  }
  return it->second;
}

void EmbeddingTable::insert(const std::string& token,
                            std::vector<double> components) {
  double norm = std::sqrt(dot(components, components));
  if (norm == 0.0) {
    throw Error(ErrorCode::kFormatError, "zero vector for token: " + token);
  }
  for (double& c : components) c /= norm;
  entries_[fold(token)] = std::move(components);
}

EmbeddingTable load_vectors(const std::filesystem::path& path,
                            const std::string& label,
                            std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kFileError,
                "cannot open vector file: " + path.string());
  }

  std::string line;
  std::size_t lineno = 0;
  std::size_t dimension = 0;
  EmbeddingTable table;
  bool first_content_line = true;

  auto parse_row = [&](const std::string& row) {
    std::istringstream fields(row);
    std::string token;
    fields >> token;
    std::vector<double> comps;
    std::string f;
    while (fields >> f) {
      try {
        std::size_t used = 0;
        double v = std::stod(f, &used);
        if (used != f.size()) throw std::invalid_argument(f);
        comps.push_back(v);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kFormatError,
                    path.string() + ": line " + std::to_string(lineno) +
                        ": non-numeric component '" + f + "'");
      }
    }
    return std::make_pair(token, comps);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (first_content_line) {
      first_content_line = false;
      // `<count> <dimension>` header: exactly two integer fields.
      std::istringstream probe(line);
      std::string a, b, extra;
      if (probe >> a >> b && !(probe >> extra) &&
          a.find_first_not_of("0123456789") == std::string::npos &&
          b.find_first_not_of("0123456789") == std::string::npos) {
        dimension = static_cast<std::size_t>(std::stoul(b));
        table = EmbeddingTable(dimension, label);
        continue;
      }
    }
    auto [token, comps] = parse_row(line);
    if (comps.empty()) {
      throw Error(ErrorCode::kFormatError,
                  path.string() + ": line " + std::to_string(lineno) +
                      ": no vector components");
    }
    if (dimension == 0) {
      dimension = comps.size();
      table = EmbeddingTable(dimension, label);
    }
    if (comps.size() != dimension) {
      throw Error(ErrorCode::kFormatError,
                  path.string() + ": line " + std::to_string(lineno) +
                      ": expected " + std::to_string(dimension) +
                      " components, got " + std::to_string(comps.size()));
    }
    if (table.contains(fold(token)) && warnings != nullptr) {
      warnings->push_back(label + " vectors: duplicate token '" + token +
                          "', keeping the last row");
    }
    table.insert(token, std::move(comps));
  }
  if (table.dimension() == 0) {
    table = EmbeddingTable(0, label);
  }
  return table;
}

double cosine(const EmbeddingTable& table, const std::string& w1,
              const std::string& w2) {
  return dot(table.vector_of(fold(w1)), table.vector_of(fold(w2)));
}

std::vector<ScoredToken> most_similar(const EmbeddingTable& table,
                                      const std::vector<std::string>& seeds,
                                      const PosFilter& in_pos, Beta beta) {
  std::vector<const std::vector<double>*> seed_vecs;
  std::set<std::string> seed_set;
  for (const std::string& s : seeds) {
    std::string f = fold(s);
    seed_set.insert(f);
    if (table.contains(f)) seed_vecs.push_back(&table.vector_of(f));
  }
  if (seed_vecs.empty()) {
    throw Error(ErrorCode::kOutOfVocabulary,
                "no seed token present in " + table.label() + " vectors");
  }

  std::vector<ScoredToken> out;
  for (const auto& [token, vec] : table.entries()) {
    if (seed_set.count(token)) continue;
    if (in_pos && !in_pos(token)) continue;
    double best = -1.0;
    for (const auto* sv : seed_vecs) best = std::max(best, dot(*sv, vec));
    if (best > beta.value) out.push_back(ScoredToken{token, best});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredToken& a, const ScoredToken& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.token < b.token;
                   });
  return out;
}

std::vector<ScoredToken> relevant_words(const EmbeddingTable& generic,
                                        const EmbeddingTable& domain,
                                        const std::vector<std::string>& seeds,
                                        const PosFilter& in_pos, Beta beta,
                                        std::vector<std::string>* warnings) {
  std::vector<ScoredToken> rw0 = most_similar(generic, seeds, in_pos, beta);
  if (domain.empty()) {
    if (warnings != nullptr) {
      warnings->push_back("domain vector table is empty; using generic hits "
                          "only");
    }
    return rw0;
  }

  std::vector<ScoredToken> domain_hits =
      most_similar(domain, seeds, in_pos, beta);

  std::set<std::string> rw0_names, seed_set;
  for (const auto& st : rw0) rw0_names.insert(st.token);
  for (const auto& s : seeds) seed_set.insert(fold(s));

  // Compare against the rw0 snapshot, not the growing result, so the output
  // does not depend on iteration order.
  std::vector<ScoredToken> out = rw0;
  for (const ScoredToken& cand : domain_hits) {
    if (rw0_names.count(cand.token) || seed_set.count(cand.token)) continue;
    if (!generic.contains(cand.token)) {
      if (warnings != nullptr) {
        warnings->push_back("domain word '" + cand.token +
                            "' missing from generic vectors; skipped");
      }
      continue;
    }
    for (const ScoredToken& member : rw0) {
      if (cosine(generic, cand.token, member.token) > beta.value) {
        out.push_back(cand);
        break;
      }
    }
  }
  return out;
}

}  // namespace intentgen
