// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Core text model: tokens, sentences, chunks, documents, and the tokenizer
// every other module counts with. All types are plain values; treat them as
// immutable once built.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pshrink/util.hpp"

namespace pshrink {

enum class Pos {
    noun,
    verb,
    adjective,
    adverb,
    pronoun,
    preposition,
    conjunction,
    determiner,
    numeral,
    punctuation,
    other,
};

inline const char* pos_name(Pos p) {
    switch (p) {
        case Pos::noun: return "noun";
        case Pos::verb: return "verb";
        case Pos::adjective: return "adjective";
        case Pos::adverb: return "adverb";
        case Pos::pronoun: return "pronoun";
        case Pos::preposition: return "preposition";
        case Pos::conjunction: return "conjunction";
        case Pos::determiner: return "determiner";
        case Pos::numeral: return "numeral";
        case Pos::punctuation: return "punctuation";
        case Pos::other: return "other";
    }
    return "other";
}

// Retention priority used by the rule stage and importance scoring:
// noun 4, verb 3, adjective 2, adverb 1, everything else 0.
inline int priority_of(Pos p) {
    switch (p) {
        case Pos::noun: return 4;
        case Pos::verb: return 3;
        case Pos::adjective: return 2;
        case Pos::adverb: return 1;
        default: return 0;
    }
}

enum class RelationKind {
    contrast,
    concessive,
    causal,
    result,
    conditional,
    progressive,
    comparative,
    coordinate,
};

inline const char* relation_name(RelationKind k) {
    switch (k) {
        case RelationKind::contrast: return "contrast";
        case RelationKind::concessive: return "concessive";
        case RelationKind::causal: return "causal";
        case RelationKind::result: return "result";
        case RelationKind::conditional: return "conditional";
        case RelationKind::progressive: return "progressive";
        case RelationKind::comparative: return "comparative";
        case RelationKind::coordinate: return "coordinate";
    }
    return "coordinate";
}

enum class RetainedSide { before, after, both };

struct Token {
    std::string text;
    int index = 0;  // position in the source document, stable across edits
    Pos pos = Pos::other;
    int priority = 0;
};

// A discourse-relation marker found in a sentence. `trigger_token` is the
// document index of the (first word of the) trigger; `trigger_len` covers
// multi-word triggers such as "compared to".
struct RelationAnnotation {
    RelationKind kind = RelationKind::coordinate;
    int trigger_token = 0;
    int trigger_len = 1;
    RetainedSide retained_side = RetainedSide::both;
};

std::string detokenize(const std::vector<Token>& tokens);

struct Sentence {
    std::vector<Token> tokens;
    std::vector<RelationAnnotation> relations;
    std::string raw;  // original surface span; empty once the sentence was edited

    std::string text() const { return raw.empty() ? detokenize(tokens) : raw; }
};

struct Chunk {
    int id = 0;
    std::vector<Sentence> sentences;
    int token_count = 0;

    std::string text() const {
        std::string out;
        for (const auto& s : sentences) {
            if (!out.empty()) out.push_back(' ');
            out += s.text();
        }
        return out;
    }
};

struct Document {
    std::string raw;
    std::vector<Sentence> sentences;

    int token_count() const {
        int n = 0;
        for (const auto& s : sentences) n += static_cast<int>(s.tokens.size());
        return n;
    }
};

namespace detail {

// True for codepoints that keep a token glued together when they appear
// between two non-space characters (don't, 10,295, U.S., rock-'n'-roll).
inline bool is_word_cp(char32_t cp) { return !is_space_cp(cp) && !is_punct_cp(cp); }

}  // namespace detail

// Splits text into word and punctuation tokens. Words are separated on
// Unicode whitespace; punctuation is peeled off word edges one mark at a
// time while interior marks (decimal points, apostrophes, hyphens) stay put.
inline std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    size_t i = 0;
    while (i < text.size()) {
        Codepoint cp = decode_utf8(text, i);
        if (is_space_cp(cp.value)) {
            i += cp.size;
            continue;
        }
        // Collect one whitespace-delimited word.
        size_t begin = i;
        std::vector<std::pair<size_t, Codepoint>> cps;
        while (i < text.size()) {
            Codepoint c = decode_utf8(text, i);
            if (is_space_cp(c.value)) break;
            cps.emplace_back(i, c);
            i += c.size;
        }
        size_t lo = 0, hi = cps.size();
        while (lo < hi && is_punct_cp(cps[lo].second.value)) ++lo;
        while (hi > lo && is_punct_cp(cps[hi - 1].second.value)) --hi;
        for (size_t k = 0; k < lo; ++k) {
            std::string t;
            append_utf8(t, cps[k].second.value);
            out.push_back(std::move(t));
        }
        if (lo < hi) {
            size_t from = cps[lo].first;
            size_t to = cps[hi - 1].first + cps[hi - 1].second.size;
            out.emplace_back(text.substr(from, to - from));
        }
        for (size_t k = hi; k < cps.size(); ++k) {
            std::string t;
            append_utf8(t, cps[k].second.value);
            out.push_back(std::move(t));
        }
        (void)begin;
    }
    return out;
}

inline int count_tokens(std::string_view text) {
    return static_cast<int>(tokenize(text).size());
}

namespace detail {

inline bool attaches_left(std::string_view tok) {
    if (tok.size() == 1) {
        switch (tok[0]) {
            case '.': case ',': case ';': case ':': case '!': case '?':
            case ')': case ']': case '}': case '%': case '\'':
                return true;
            default:
                return false;
        }
    }
    return tok == "’" || tok == "”" || tok == "…";
}

inline bool attaches_right(std::string_view tok) {
    if (tok.size() == 1) {
        switch (tok[0]) {
            case '(': case '[': case '{':
                return true;
            default:
                return false;
        }
    }
    return tok == "‘" || tok == "“";
}

}  // namespace detail

// Rebuilds a surface string from token texts: single spaces, except closing
// punctuation attaches left and opening punctuation attaches right. Straight
// double quotes alternate open/close.
inline std::string detokenize(const std::vector<std::string>& tokens) {
    std::string out;
    bool suppress_next_space = false;
    bool quote_open = false;
    for (const auto& tok : tokens) {
        bool is_dquote = tok == "\"";
        bool left = detail::attaches_left(tok) || (is_dquote && quote_open);
        if (!out.empty() && !left && !suppress_next_space) out.push_back(' ');
        out += tok;
        suppress_next_space = detail::attaches_right(tok) || (is_dquote && !quote_open);
        if (is_dquote) quote_open = !quote_open;
    }
    return out;
}

inline std::string detokenize(const std::vector<Token>& tokens) {
    std::vector<std::string> texts;
    texts.reserve(tokens.size());
    for (const auto& t : tokens) texts.push_back(t.text);
    return detokenize(texts);
}

// Pluggable token counter so compression rates can be measured with an
// external model's notion of tokens instead of the built-in one.
class TokenCounter {
public:
    virtual ~TokenCounter() = default;
    virtual int count(std::string_view text) const = 0;
};

class DefaultTokenCounter final : public TokenCounter {
public:
    int count(std::string_view text) const override { return count_tokens(text); }
};

inline const TokenCounter& default_token_counter() {
    static const DefaultTokenCounter counter;
    return counter;
}

}  // namespace pshrink
