// Copyright 2026 The Constat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "constat/corpus.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace constat {
namespace {

bool IsWordByte(unsigned char c) {
  // Bytes >= 0x80 are UTF-8 continuation or lead bytes of letters.
  return std::isalnum(c) != 0 || c >= 0x80;
}

bool IsSpaceByte(unsigned char c) { return std::isspace(c) != 0; }

// Reads a TSV file, yielding trimmed non-comment lines.
std::vector<std::string> DataLines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw KnowledgeError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> TabFields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) fields.push_back(field);
  return fields;
}

const std::vector<std::string>& Abbreviations() {
  static const std::vector<std::string> kAbbrev = {"mr", "mrs", "dr", "st"};
  return kAbbrev;
}

bool IsSentenceTerminator(const Token& tok) {
  return tok.is_punct && (tok.surface == "." || tok.surface == "?" ||
                          tok.surface == "!" || tok.surface == ";");
}

bool IsIngForm(const Token& tok) {
  const std::string folded = FoldCase(tok.surface);
  return folded.size() >= 5 && folded.compare(folded.size() - 3, 3, "ing") == 0;
}

bool HasVerbEntry(const KnowledgeBase& kb, const std::string& lemma) {
  for (const LexiconEntry& entry : kb.Lookup(lemma))
    if (IsVerbClass(entry.word_class)) return true;
  return false;
}

bool IsAuxLemma(const std::string& lemma) {
  static const std::vector<std::string> kAux = {
      "be",    "have",  "do",  "can",   "could", "will",
      "would", "shall", "may", "might", "must",  "should"};
  return std::find(kAux.begin(), kAux.end(), lemma) != kAux.end();
}

int PrevNonPunct(const std::vector<Token>& tokens, int i) {
  for (int j = i - 1; j >= 0; --j)
    if (!tokens[j].is_punct) return j;
  return -1;
}

int NextNonPunct(const std::vector<Token>& tokens, int i, int limit) {
  for (int j = i + 1; j < limit; ++j)
    if (!tokens[j].is_punct) return j;
  return -1;
}

// A token counts as finite when it is an auxiliary or a known verb lexeme
// that is neither an -ing form nor an infinitive after "to".
bool IsFinite(const std::vector<Token>& tokens, int i,
              const KnowledgeBase& kb) {
  const Token& tok = tokens[i];
  if (tok.is_punct) return false;
  if (IsAuxLemma(tok.lemma)) return true;
  if (!HasVerbEntry(kb, tok.lemma)) return false;
  if (IsIngForm(tok)) return false;
  int prev = PrevNonPunct(tokens, i);
  if (prev >= 0 && tokens[prev].lemma == "to") return false;
  return true;
}

// True when a finite token occurs among the first `window` non-punctuation
// tokens starting at i (inclusive), staying inside [i, limit).
bool FiniteRegionStartsAt(const std::vector<Token>& tokens, int i, int limit,
                          const KnowledgeBase& kb, int window) {
  int seen = 0;
  for (int j = i; j < limit && seen < window; ++j) {
    if (tokens[j].is_punct) continue;
    ++seen;
    if (IsFinite(tokens, j, kb)) return true;
  }
  return false;
}

}  // namespace

Morphology Morphology::Load(const std::string& contractions_path,
                            const std::string& irregulars_path) {
  Morphology morph;
  for (const std::string& line : DataLines(contractions_path)) {
    std::vector<std::string> fields = TabFields(line);
    if (fields.size() != 2)
      throw ParseError(contractions_path, 0, "expected 2 fields: " + line);
    morph.contractions_.emplace_back(fields[0], fields[1]);
  }
  std::sort(morph.contractions_.begin(), morph.contractions_.end(),
            [](const auto& a, const auto& b) {
              return a.first.size() > b.first.size();
            });
  for (const std::string& line : DataLines(irregulars_path)) {
    std::vector<std::string> fields = TabFields(line);
    if (fields.size() != 2)
      throw ParseError(irregulars_path, 0, "expected 2 fields: " + line);
    if (!morph.irregulars_.emplace(fields[0], fields[1]).second)
      throw ParseError(irregulars_path, 0, "duplicate form: " + fields[0]);
  }
  return morph;
}

const std::string& Morphology::LemmaOf(const std::string& folded) const {
  auto it = irregulars_.find(folded);
  return it == irregulars_.end() ? folded : it->second;
}

Report LoadReport(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KnowledgeError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  std::string name = path;
  size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);

  Report report;
  report.body = buf.str();
  size_t dot = name.find('.');
  report.id = name.substr(0, dot);
  report.language = "en";
  if (name.find(".fr.") != std::string::npos) report.language = "fr";
  return report;
}

std::vector<Token> Tokenize(std::string_view body, const Morphology& morph) {
  std::vector<Token> tokens;
  size_t i = 0;
  const size_t n = body.size();
  while (i < n) {
    unsigned char c = static_cast<unsigned char>(body[i]);
    if (IsSpaceByte(c)) {
      ++i;
      continue;
    }
    if (IsWordByte(c) || c == '\'') {
      size_t begin = i;
      while (i < n) {
        unsigned char w = static_cast<unsigned char>(body[i]);
        if (IsWordByte(w) || w == '\'')
          ++i;
        else
          break;
      }
      std::string surface(body.substr(begin, i - begin));
      std::string folded = FoldCase(surface);
      // A run of apostrophes alone is punctuation.
      if (folded.find_first_not_of('\'') == std::string::npos) {
        for (size_t k = 0; k < surface.size(); ++k)
          tokens.push_back(Token{surface.substr(k, 1), surface.substr(k, 1),
                                 begin + k, begin + k + 1, true});
        continue;
      }
      // Clitic splitting keeps spans exact: couldn't -> could + n't.
      bool split = false;
      for (const auto& [suffix, lemma] : morph.contractions()) {
        if (folded.size() > suffix.size() &&
            folded.compare(folded.size() - suffix.size(), suffix.size(),
                           suffix) == 0) {
          size_t cut = surface.size() - suffix.size();
          std::string host = surface.substr(0, cut);
          std::string host_folded = folded.substr(0, cut);
          tokens.push_back(Token{host, morph.LemmaOf(host_folded), begin,
                                 begin + cut, false});
          tokens.push_back(Token{surface.substr(cut), lemma, begin + cut,
                                 begin + surface.size(), false});
          split = true;
          break;
        }
      }
      if (!split)
        tokens.push_back(
            Token{surface, morph.LemmaOf(folded), begin, begin + surface.size(),
                  false});
      continue;
    }
    tokens.push_back(Token{std::string(body.substr(i, 1)),
                           std::string(body.substr(i, 1)), i, i + 1, true});
    ++i;
  }
  return tokens;
}

Segmentation Segment(const Report& report, const Morphology& morph,
                     const KnowledgeBase& kb) {
  Segmentation seg;
  seg.tokens = Tokenize(report.body, morph);
  const std::vector<Token>& tokens = seg.tokens;
  const int n = static_cast<int>(tokens.size());

  // Sentence spans [begin, end), each including its terminator token.
  std::vector<std::pair<int, int>> sentences;
  int sent_begin = 0;
  for (int i = 0; i < n; ++i) {
    if (!IsSentenceTerminator(tokens[i])) continue;
    if (tokens[i].surface == ".") {
      int prev = PrevNonPunct(tokens, i);
      if (prev >= 0) {
        const auto& abbrev = Abbreviations();
        if (std::find(abbrev.begin(), abbrev.end(), tokens[prev].lemma) !=
            abbrev.end())
          continue;
      }
    }
    if (i + 1 > sent_begin) sentences.emplace_back(sent_begin, i + 1);
    sent_begin = i + 1;
  }
  if (sent_begin < n) sentences.emplace_back(sent_begin, n);

  for (size_t s = 0; s < sentences.size(); ++s) {
    auto [sb, se] = sentences[s];
    // Skip leading punctuation when deciding whether a sentence is empty.
    bool has_word = false;
    for (int i = sb; i < se; ++i)
      if (!tokens[i].is_punct) has_word = true;

    std::vector<int> splits;  // clause starts after sb
    if (has_word) {
      bool finite_in_clause = false;
      for (int i = sb; i < se; ++i) {
        const Token& tok = tokens[i];
        if (tok.is_punct) continue;
        bool split_here = false;
        if (i > sb) {
          int prev = PrevNonPunct(tokens, i);
          bool after_comma = i > 0 && tokens[i - 1].is_punct &&
                             tokens[i - 1].surface == ",";
          if ((tok.lemma == "and" || tok.lemma == "but") && finite_in_clause) {
            split_here = true;
          } else if (tok.lemma == "when" && prev >= sb) {
            split_here = true;
          } else if (tok.lemma == "for") {
            int next = NextNonPunct(tokens, i, se);
            if (next >= 0 && tokens[next].lemma == "there") split_here = true;
          } else if (after_comma) {
            int next = NextNonPunct(tokens, i, se);
            bool participial =
                IsIngForm(tok) ||
                (tok.lemma == "not" && next >= 0 && IsIngForm(tokens[next]));
            if (participial)
              split_here = true;
            else if (FiniteRegionStartsAt(tokens, i, se, kb, 6))
              split_here = true;
          }
        }
        if (split_here) {
          splits.push_back(i);
          finite_in_clause = false;
        }
        if (IsFinite(tokens, i, kb)) finite_in_clause = true;
      }
    }

    int clause_index = 0;
    int begin = sb;
    for (int split : splits) {
      seg.clauses.push_back(
          Clause{static_cast<int>(s), clause_index++, begin, split});
      begin = split;
    }
    seg.clauses.push_back(Clause{static_cast<int>(s), clause_index, begin, se});
  }
  return seg;
}

std::string ClauseText(const Segmentation& seg, const Clause& clause,
                       const Report& report) {
  if (clause.begin_token >= clause.end_token) return "";
  size_t begin = seg.tokens[clause.begin_token].begin;
  size_t end = seg.tokens[clause.end_token - 1].end;
  return report.body.substr(begin, end - begin);
}

}  // namespace constat
