// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Word -> part-of-speech lexicon with discourse-relation triggers. The file
// format is line-oriented UTF-8: a "[words]" section of word<TAB>pos entries
// and a "[relations]" section of trigger<TAB>relation entries ("#" starts a
// comment line, blank lines are ignored, the words section is the default).
// Triggers may be multi-word phrases ("compared to").
#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pshrink/lexicon_data.hpp"
#include "pshrink/text.hpp"

namespace pshrink {

inline std::optional<Pos> pos_from_name(std::string_view name) {
    static const std::unordered_map<std::string_view, Pos> kMap = {
        {"noun", Pos::noun},           {"verb", Pos::verb},
        {"adjective", Pos::adjective}, {"adverb", Pos::adverb},
        {"pronoun", Pos::pronoun},     {"preposition", Pos::preposition},
        {"conjunction", Pos::conjunction}, {"determiner", Pos::determiner},
        {"numeral", Pos::numeral},     {"punctuation", Pos::punctuation},
        {"other", Pos::other},
    };
    auto it = kMap.find(name);
    if (it == kMap.end()) return std::nullopt;
    return it->second;
}

inline std::optional<RelationKind> relation_from_name(std::string_view name) {
    static const std::unordered_map<std::string_view, RelationKind> kMap = {
        {"contrast", RelationKind::contrast},
        {"concessive", RelationKind::concessive},
        {"causal", RelationKind::causal},
        {"result", RelationKind::result},
        {"conditional", RelationKind::conditional},
        {"progressive", RelationKind::progressive},
        {"comparative", RelationKind::comparative},
        {"coordinate", RelationKind::coordinate},
    };
    auto it = kMap.find(name);
    if (it == kMap.end()) return std::nullopt;
    return it->second;
}

struct TriggerPhrase {
    std::vector<std::string> words;  // case-folded, length >= 1
    RelationKind kind;
};

class PosLexicon {
public:
    // O(1) average lookups on the hot path.
    std::unordered_map<std::string, Pos> words;
    std::vector<TriggerPhrase> triggers;                 // longest phrases first
    std::unordered_set<std::string> trigger_vocabulary;  // every word of every trigger

    std::optional<Pos> find(std::string_view folded_word) const {
        auto it = words.find(std::string(folded_word));
        if (it == words.end()) return std::nullopt;
        return it->second;
    }

    bool is_trigger_word(std::string_view folded_word) const {
        return trigger_vocabulary.count(std::string(folded_word)) > 0;
    }

    size_t size() const { return words.size(); }
};

inline PosLexicon parse_lexicon(std::string_view content) {
    PosLexicon lex;
    lex.words.reserve(8192);
    enum class Section { words, relations } section = Section::words;
    size_t lineno = 0;
    size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("lexicon line " + std::to_string(lineno) + ": " + what);
    };
    while (pos <= content.size()) {
        size_t eol = content.find('\n', pos);
        std::string_view line = content.substr(
            pos, eol == std::string_view::npos ? content.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? content.size() + 1 : eol + 1;
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.remove_suffix(1);
        }
        if (line.empty() || line[0] == '#') continue;
        if (line == "[words]") {
            section = Section::words;
            continue;
        }
        if (line == "[relations]") {
            section = Section::relations;
            continue;
        }
        size_t tab = line.find('\t');
        if (tab == std::string_view::npos) fail("expected <entry>\\t<tag>");
        std::string key = fold_case(line.substr(0, tab));
        std::string_view tag = line.substr(tab + 1);
        if (key.empty() || tag.empty()) fail("empty entry or tag");
        if (section == Section::words) {
            auto p = pos_from_name(tag);
            if (!p) fail("unknown part of speech '" + std::string(tag) + "'");
            if (key.find(' ') != std::string::npos) fail("word entries cannot contain spaces");
            lex.words.emplace(std::move(key), *p);
        } else {
            auto k = relation_from_name(tag);
            if (!k) fail("unknown relation '" + std::string(tag) + "'");
            TriggerPhrase phrase;
            phrase.kind = *k;
            std::istringstream split(key);
            std::string w;
            while (split >> w) {
                lex.trigger_vocabulary.insert(w);
                phrase.words.push_back(std::move(w));
            }
            if (phrase.words.empty()) fail("empty trigger");
            lex.triggers.push_back(std::move(phrase));
        }
    }
    // Longest-first so phrase triggers win over their single-word prefixes.
    std::stable_sort(lex.triggers.begin(), lex.triggers.end(),
                     [](const TriggerPhrase& a, const TriggerPhrase& b) {
                         return a.words.size() > b.words.size();
                     });
    return lex;
}

inline PosLexicon load_lexicon_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_lexicon(buf.str());
}

// The compiled-in lexicon, parsed once.
inline const PosLexicon& builtin_lexicon() {
    static const PosLexicon lex = parse_lexicon(kBuiltinLexicon);
    return lex;
}

}  // namespace pshrink
