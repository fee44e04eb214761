// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Rule-based part-of-speech tagging. Resolution order per token:
//   1. exact lexicon match on the case-folded word (plus plural/3rd-person
//      stem retries: -ies/-es/-s);
//   2. numeric literals -> numeral;
//   3. suffix heuristics (-tion, -ly, -ize, -ous, -ing, ...) — skipped for
//      capitalized words that are not sentence-initial, since those are
//      name candidates, not ordinary morphology;
//   4. capitalized and not sentence-initial -> noun (proper-name reading);
//   5. default -> noun.
// Also extracts discourse-relation annotations from trigger words/phrases.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "pshrink/lexicon.hpp"
#include "pshrink/text.hpp"

namespace pshrink {
namespace detail {

inline bool is_punct_token(std::string_view text) {
    size_t i = 0;
    while (i < text.size()) {
        Codepoint c = decode_utf8(text, i);
        if (!is_punct_cp(c.value)) return false;
        i += c.size;
    }
    return !text.empty();
}

inline bool is_numeric_token(std::string_view text) {
    bool digit = false;
    for (char c : text) {
        if (c >= '0' && c <= '9') {
            digit = true;
        } else if (c != '.' && c != ',' && c != '-' && c != '/' && c != ':') {
            return false;
        }
    }
    return digit;
}

struct SuffixRule {
    std::string_view suffix;
    Pos pos;
};

inline const std::array<SuffixRule, 19>& suffix_rules() {
    static const std::array<SuffixRule, 19> kRules = {{
        {"tion", Pos::noun},     {"sion", Pos::noun},   {"ment", Pos::noun},
        {"ness", Pos::noun},     {"ship", Pos::noun},   {"ance", Pos::noun},
        {"ence", Pos::noun},     {"ism", Pos::noun},    {"ity", Pos::noun},
        {"ize", Pos::verb},      {"ise", Pos::verb},    {"ify", Pos::verb},
        {"ate", Pos::verb},      {"ical", Pos::adjective}, {"ous", Pos::adjective},
        {"ful", Pos::adjective}, {"ive", Pos::adjective}, {"able", Pos::adjective},
        {"ly", Pos::adverb},
    }};
    return kRules;
}

// A suffix only counts on words comfortably longer than it.
inline std::optional<Pos> match_suffix(std::string_view folded) {
    for (const auto& r : suffix_rules()) {
        if (folded.size() > r.suffix.size() + 2 && folded.ends_with(r.suffix)) {
            return r.pos;
        }
    }
    if (folded.size() > 5 && (folded.ends_with("ing") || folded.ends_with("ible"))) {
        return folded.ends_with("ing") ? Pos::verb : Pos::adjective;
    }
    if (folded.size() > 4 && folded.ends_with("ed")) return Pos::verb;
    return std::nullopt;
}

// Lexicon lookup with light morphological normalization for plurals and
// 3rd-person forms the word list does not carry explicitly.
inline std::optional<Pos> lookup_word(const PosLexicon& lex, const std::string& folded) {
    if (auto p = lex.find(folded)) return p;
    size_t n = folded.size();
    if (n > 3 && folded.ends_with("ies")) {
        if (auto p = lex.find(folded.substr(0, n - 3) + "y")) return p;
    }
    if (n > 3 && folded.ends_with("es")) {
        if (auto p = lex.find(folded.substr(0, n - 2))) return p;
    }
    if (n > 3 && folded.back() == 's') {
        if (auto p = lex.find(folded.substr(0, n - 1))) return p;
    }
    return std::nullopt;
}

}  // namespace detail

// Tags every token with a part of speech and its retention priority.
inline Sentence pos_tag(const Sentence& sentence, const PosLexicon& lex) {
    Sentence out = sentence;
    for (size_t i = 0; i < out.tokens.size(); ++i) {
        Token& tok = out.tokens[i];
        Pos pos;
        if (detail::is_punct_token(tok.text)) {
            pos = Pos::punctuation;
        } else {
            std::string folded = fold_case(tok.text);
            bool capitalized = starts_with_upper(tok.text);
            bool initial = i == 0;
            if (auto p = detail::lookup_word(lex, folded)) {
                pos = *p;
            } else if (detail::is_numeric_token(tok.text)) {
                pos = Pos::numeral;
            } else {
                std::optional<Pos> suffix;
                if (!capitalized || initial) suffix = detail::match_suffix(folded);
                pos = suffix ? *suffix : Pos::noun;
            }
        }
        tok.pos = pos;
        tok.priority = priority_of(pos);
    }
    return out;
}

// True for tokens that look like parts of a name: capitalized words the
// lexicon and suffix rules do not recognize, plus a capitalized
// sentence-initial word directly attached to such a run ("Dudley Fire ...").
// Deletion rules treat these as protected content.
inline std::vector<bool> proper_mask(const Sentence& sentence, const PosLexicon& lex) {
    const auto& toks = sentence.tokens;
    const size_t n = toks.size();
    std::vector<bool> wordlike(n, false), unknown(n, false);
    for (size_t i = 0; i < n; ++i) {
        const std::string& text = toks[i].text;
        wordlike[i] = starts_with_upper(text) && !detail::is_punct_token(text) &&
                      !detail::is_numeric_token(text);
        if (wordlike[i]) {
            std::string folded = fold_case(text);
            unknown[i] = !detail::lookup_word(lex, folded) &&
                         !detail::match_suffix(folded).has_value();
        }
    }
    std::vector<bool> mask(n, false);
    for (size_t i = 1; i < n; ++i) {
        mask[i] = wordlike[i] && (unknown[i] || wordlike[i - 1] ||
                                  (i + 1 < n && wordlike[i + 1]));
    }
    // A sentence-initial capital is ambiguous; claim it only when the lexicon
    // does not know it or it heads a capitalized run.
    if (n > 0) mask[0] = wordlike[0] && (unknown[0] || (n > 1 && mask[1]));
    // A lowercase particle bridging capitalized words ("Bank of America",
    // "Ludwig van Beethoven") joins the name run together with the word in
    // front of it.
    static const std::unordered_set<std::string> kNameParticles = {
        "of", "de", "da", "van", "von", "der", "la", "al", "bin", "ibn",
    };
    for (size_t i = 1; i + 1 < n; ++i) {
        if (!mask[i] && mask[i + 1] && wordlike[i - 1] &&
            kNameParticles.count(fold_case(toks[i].text))) {
            mask[i] = true;
            mask[i - 1] = true;
        }
    }
    return mask;
}

namespace detail {

inline RetainedSide side_for(RelationKind kind) {
    switch (kind) {
        case RelationKind::contrast: return RetainedSide::after;
        case RelationKind::concessive: return RetainedSide::both;
        case RelationKind::causal: return RetainedSide::after;   // the reason clause
        case RelationKind::result: return RetainedSide::before;  // what led to it
        case RelationKind::conditional: return RetainedSide::after;  // the condition
        case RelationKind::progressive: return RetainedSide::after;
        case RelationKind::comparative: return RetainedSide::both;
        case RelationKind::coordinate: return RetainedSide::both;
    }
    return RetainedSide::both;
}

// Clause-linking kinds have intensifier/complementizer homographs ("so cold",
// "if in doubt"), so they are only trusted when a verb flanks the trigger on
// both sides. Contrast and progressive also join bare phrases ("small but
// fast") and need no such guard.
inline bool needs_clause_guard(RelationKind kind) {
    return kind == RelationKind::causal || kind == RelationKind::result ||
           kind == RelationKind::conditional;
}

}  // namespace detail

// Finds relation triggers in a tagged sentence. Clause relations are only
// annotated when a verb sits on each side of the trigger, which keeps
// intensifier/false-trigger readings ("so cold") from mutilating the
// sentence later.
inline Sentence extract_relations(const Sentence& sentence, const PosLexicon& lex) {
    Sentence out = sentence;
    out.relations.clear();
    const auto& toks = out.tokens;
    std::vector<std::string> folded(toks.size());
    for (size_t i = 0; i < toks.size(); ++i) folded[i] = fold_case(toks[i].text);

    auto verb_in = [&](size_t from, size_t to) {  // [from, to)
        for (size_t i = from; i < to && i < toks.size(); ++i) {
            if (toks[i].pos == Pos::verb) return true;
        }
        return false;
    };

    size_t i = 0;
    while (i < toks.size()) {
        size_t matched = 0;
        RelationKind kind = RelationKind::coordinate;
        for (const auto& phrase : lex.triggers) {  // longest first
            if (phrase.words.size() > toks.size() - i) continue;
            bool ok = true;
            for (size_t k = 0; k < phrase.words.size(); ++k) {
                if (folded[i + k] != phrase.words[k]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                matched = phrase.words.size();
                kind = phrase.kind;
                break;
            }
        }
        if (matched == 0) {
            ++i;
            continue;
        }
        bool keep = true;
        if (detail::needs_clause_guard(kind)) {
            bool initial = true;
            for (size_t k = 0; k < i; ++k) {
                initial = initial && toks[k].pos == Pos::punctuation;
            }
            if (initial) {
                // "If it rains, we stay.": the clause up to the first comma
                // must hold a verb ("if in doubt" does not qualify).
                size_t clause_end = i + matched;
                while (clause_end < toks.size() && toks[clause_end].text != ",") {
                    ++clause_end;
                }
                keep = verb_in(i + matched, clause_end);
            } else {
                keep = verb_in(0, i) && verb_in(i + matched, toks.size());
            }
        }
        if (keep) {
            RelationAnnotation ann;
            ann.kind = kind;
            ann.trigger_token = toks[i].index;
            ann.trigger_len = static_cast<int>(matched);
            ann.retained_side = detail::side_for(kind);
            out.relations.push_back(ann);
        }
        i += matched;
    }
    return out;
}

}  // namespace pshrink
