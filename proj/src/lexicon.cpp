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
#include "intentgen/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace intentgen {

const char* pos_tag(Pos pos) { return pos == Pos::kNoun ? "noun" : "verb"; }

// ---------------------------------------------------------------------------
// Dice coefficient

namespace {

std::string fold(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

std::vector<std::string> word_bigrams(const std::string& folded) {
  std::vector<std::string> grams;
  std::istringstream in(folded);
  std::string word;
  while (in >> word) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      grams.push_back(word.substr(i, 2));
    }
  }
  return grams;
}

}  // namespace

double dice(std::string_view a, std::string_view b) {
  std::string fa = fold(a), fb = fold(b);
  if (fa == fb && !fa.empty()) return 1.0;
  auto ga = word_bigrams(fa), gb = word_bigrams(fb);
  if (ga.empty() || gb.empty()) return fa == fb ? 1.0 : 0.0;
  std::map<std::string, int> count;
  for (const auto& g : ga) ++count[g];
  std::size_t shared = 0;
  for (const auto& g : gb) {
    auto it = count.find(g);
    if (it != count.end() && it->second > 0) {
      --it->second;
      ++shared;
    }
  }
  return 2.0 * static_cast<double>(shared) /
         static_cast<double>(ga.size() + gb.size());
}

// ---------------------------------------------------------------------------
// WordNet database files

namespace {

bool header_line(const std::string& line) {
  return !line.empty() && line[0] == ' ';
}

// Strips the syntactic marker some data-file words carry, e.g. "hot(a)".
std::string strip_marker(const std::string& w) {
  auto pos = w.find('(');
  return pos == std::string::npos ? w : w.substr(0, pos);
}

struct FieldReader {
  std::istringstream in;
  const std::string& origin;
  std::size_t lineno;

  FieldReader(const std::string& line, const std::string& origin,
              std::size_t lineno)
      : in(line), origin(origin), lineno(lineno) {}

  std::string next(const char* what) {
    std::string f;
    if (!(in >> f)) {
      throw Error(ErrorCode::kParseError,
                  origin + ": line " + std::to_string(lineno) +
                      ": missing field (" + what + ")");
    }
    return f;
  }
  long next_int(const char* what, int base = 10) {
    std::string f = next(what);
    try {
      return std::stol(f, nullptr, base);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParseError,
                  origin + ": line " + std::to_string(lineno) +
                      ": bad number in field " + what);
    }
  }
};

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& directory) {
  Lexicon lex;
  struct FileSpec {
    const char* data_name;
    const char* index_name;
    Pos pos;
    char pos_char;
  };
  const FileSpec specs[] = {
      {"data.noun", "index.noun", Pos::kNoun, 'n'},
      {"data.verb", "index.verb", Pos::kVerb, 'v'},
  };

  for (const FileSpec& spec : specs) {
    PosData& d = spec.pos == Pos::kNoun ? lex.nouns_ : lex.verbs_;
    const auto data_path = directory / spec.data_name;
    std::ifstream data(data_path);
    if (!data) {
      throw Error(ErrorCode::kFileError,
                  "missing WordNet file: " + data_path.string());
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(data, line)) {
      ++lineno;
      if (header_line(line) || line.empty()) continue;
      FieldReader r(line, data_path.string(), lineno);
      Synset syn;
      syn.id.offset = static_cast<std::uint32_t>(r.next_int("offset"));
      syn.id.pos = spec.pos;
      r.next("lex_filenum");
      r.next("ss_type");
      long wcnt = r.next_int("w_cnt", 16);
      for (long i = 0; i < wcnt; ++i) {
        syn.words.push_back(fold(strip_marker(r.next("word"))));
        r.next("lex_id");
      }
      long pcnt = r.next_int("p_cnt");
      for (long i = 0; i < pcnt; ++i) {
        std::string symbol = r.next("ptr_symbol");
        long target = r.next_int("ptr_offset");
        std::string ppos = r.next("ptr_pos");
        r.next("source_target");
        if (symbol == "@" && ppos[0] == spec.pos_char) {
          syn.hypernyms.push_back(static_cast<std::uint32_t>(target));
        }
      }
      // Verb lines carry a frame section before the gloss.
      std::string tok;
      while (r.in >> tok && tok != "|") {
      }
      std::string gloss;
      std::getline(r.in, gloss);
      if (!gloss.empty() && gloss[0] == ' ') gloss.erase(0, 1);
      syn.gloss = gloss;
      if (syn.words.empty()) {
        throw Error(ErrorCode::kParseError,
                    data_path.string() + ": line " + std::to_string(lineno) +
                        ": synset without words");
      }
      d.by_offset[syn.id.offset] = d.synsets.size();
      d.synsets.push_back(std::move(syn));
    }

    const auto index_path = directory / spec.index_name;
    std::ifstream index(index_path);
    if (!index) {
      throw Error(ErrorCode::kFileError,
                  "missing WordNet file: " + index_path.string());
    }
    lineno = 0;
    while (std::getline(index, line)) {
      ++lineno;
      if (header_line(line) || line.empty()) continue;
      FieldReader r(line, index_path.string(), lineno);
      std::string lemma = fold(r.next("lemma"));
      r.next("pos");
      long synset_cnt = r.next_int("synset_cnt");
      long p_cnt = r.next_int("p_cnt");
      for (long i = 0; i < p_cnt; ++i) r.next("ptr_symbol");
      r.next("sense_cnt");
      r.next("tagsense_cnt");
      auto& offsets = d.lemma_index[lemma];
      for (long i = 0; i < synset_cnt; ++i) {
        offsets.push_back(static_cast<std::uint32_t>(r.next_int("offset")));
      }
    }
  }
  return lex;
}

std::size_t Lexicon::synset_count(Pos pos) const {
  return data(pos).synsets.size();
}

bool Lexicon::contains(const std::string& word, Pos pos) const {
  return data(pos).lemma_index.count(fold(word)) != 0;
}

const Synset* Lexicon::find(SynsetId id) const {
  const PosData& d = data(id.pos);
  auto it = d.by_offset.find(id.offset);
  return it == d.by_offset.end() ? nullptr : &d.synsets[it->second];
}

std::vector<SynonymHit> Lexicon::synonyms(const std::string& word,
                                          Pos pos) const {
  std::vector<SynonymHit> out;
  const PosData& d = data(pos);
  const std::string w = fold(word);
  auto it = d.lemma_index.find(w);
  if (it == d.lemma_index.end()) return out;
  std::vector<std::uint32_t> offsets = it->second;
  std::sort(offsets.begin(), offsets.end());
  for (std::uint32_t off : offsets) {
    const Synset* syn = find(SynsetId{off, pos});
    if (syn == nullptr) continue;
    for (const std::string& lemma : syn->words) {
      if (lemma == w) continue;
      out.push_back(SynonymHit{lemma, syn->id, syn->gloss});
    }
  }
  return out;
}

std::vector<std::string> Lexicon::relevant_synonyms(
    const std::string& word, Pos pos, const std::string& context_description,
    std::size_t top_k, std::vector<std::string>* warnings) const {
  const PosData& d = data(pos);
  const std::string w = fold(word);
  auto it = d.lemma_index.find(w);
  if (it == d.lemma_index.end()) return {};

  std::vector<std::uint32_t> offsets = it->second;
  std::sort(offsets.begin(), offsets.end());

  if (context_description.empty()) {
    if (warnings != nullptr) {
      warnings->push_back("no description for context of '" + word +
                          "'; keeping all synonyms");
    }
  } else {
    std::vector<std::pair<double, std::uint32_t>> scored;
    for (std::uint32_t off : offsets) {
      const Synset* syn = find(SynsetId{off, pos});
      if (syn == nullptr) continue;
      scored.emplace_back(dice(syn->gloss, context_description), off);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) {
                       if (a.first != b.first) return a.first > b.first;
                       return a.second < b.second;
                     });
    if (scored.size() > top_k) scored.resize(top_k);
    offsets.clear();
    for (const auto& [score, off] : scored) offsets.push_back(off);
  }

  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::uint32_t off : offsets) {
    const Synset* syn = find(SynsetId{off, pos});
    if (syn == nullptr) continue;
    for (const std::string& lemma : syn->words) {
      if (lemma == w || !seen.insert(lemma).second) continue;
      out.push_back(lemma);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wu-Palmer

namespace {

// Depth counted in nodes from the virtual root (depth 1) that sits above
// every root of the part of speech; a real root has depth 2. Multiple
// hypernym paths take the longest one. The visiting set guards against
// cycles in hand-written data files.
template <typename Lookup>
int depth_rec(const Lookup& find_synset, std::uint32_t off,
              std::map<std::uint32_t, int>& memo,
              std::set<std::uint32_t>& visiting) {
  if (auto it = memo.find(off); it != memo.end()) return it->second;
  const Synset* syn = find_synset(off);
  if (syn == nullptr) return 2;  // dangling pointer target: treat as a root
  if (!visiting.insert(off).second) return 2;
  int best = 0;
  for (std::uint32_t h : syn->hypernyms) {
    best = std::max(best, depth_rec(find_synset, h, memo, visiting));
  }
  visiting.erase(off);
  int depth = best == 0 ? 2 : best + 1;
  memo[off] = depth;
  return depth;
}

}  // namespace

int Lexicon::depth_of(const PosData& d, std::uint32_t offset) const {
  auto lookup = [&d](std::uint32_t off) -> const Synset* {
    auto it = d.by_offset.find(off);
    return it == d.by_offset.end() ? nullptr : &d.synsets[it->second];
  };
  std::map<std::uint32_t, int> memo;
  std::set<std::uint32_t> visiting;
  return depth_rec(lookup, offset, memo, visiting);
}

// All hypernym ancestors of a synset (including itself) with their depths.
void Lexicon::ancestors_of(const PosData& d, std::uint32_t offset,
                           std::map<std::uint32_t, int>& out) const {
  if (out.count(offset)) return;
  out[offset] = depth_of(d, offset);
  auto it = d.by_offset.find(offset);
  if (it == d.by_offset.end()) return;
  for (std::uint32_t h : d.synsets[it->second].hypernyms) {
    ancestors_of(d, h, out);
  }
}

double Lexicon::wup_similarity(const std::string& w1, const std::string& w2,
                               Pos pos) const {
  const PosData& d = data(pos);
  auto it1 = d.lemma_index.find(fold(w1));
  auto it2 = d.lemma_index.find(fold(w2));
  if (it1 == d.lemma_index.end()) {
    throw Error(ErrorCode::kUnknownWord,
                "word not in lexicon under " + std::string(pos_tag(pos)) +
                    ": " + w1);
  }
  if (it2 == d.lemma_index.end()) {
    throw Error(ErrorCode::kUnknownWord,
                "word not in lexicon under " + std::string(pos_tag(pos)) +
                    ": " + w2);
  }

  double best = 0.0;
  for (std::uint32_t o1 : it1->second) {
    std::map<std::uint32_t, int> anc1;
    ancestors_of(d, o1, anc1);
    int d1 = depth_of(d, o1);
    for (std::uint32_t o2 : it2->second) {
      std::map<std::uint32_t, int> anc2;
      ancestors_of(d, o2, anc2);
      int d2 = depth_of(d, o2);
      int lcs_depth = 1;  // virtual root joins disjoint taxonomies
      for (const auto& [off, depth] : anc1) {
        if (anc2.count(off)) lcs_depth = std::max(lcs_depth, depth);
      }
      best = std::max(best, 2.0 * lcs_depth / (d1 + d2));
    }
  }
  return best;
}

}  // namespace intentgen
