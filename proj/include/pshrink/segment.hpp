// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Sentence segmentation and fixed-size chunking. Deterministic and
// rule-based: terminators end a sentence only when followed by whitespace
// and a capital/digit (or end of text), with an abbreviation list and a
// single-initial rule suppressing false boundaries. Newlines always end a
// sentence, so line-oriented corpora segment as written.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pshrink/text.hpp"

namespace pshrink {
namespace detail {

inline const std::array<std::string_view, 11>& abbreviations() {
    static const std::array<std::string_view, 11> kList = {
        "dr.", "mr.", "mrs.", "ms.", "st.", "e.g.", "i.e.", "etc.", "vs.", "fig.", "eq.",
    };
    return kList;
}

inline bool is_abbreviation(std::string_view word_with_period) {
    std::string folded = fold_case(word_with_period);
    for (auto a : abbreviations()) {
        if (folded == a) return true;
    }
    // A single capital initial ("J.") never ends a sentence.
    return word_with_period.size() == 2 &&
           is_ascii_upper(static_cast<unsigned char>(word_with_period[0]));
}

inline bool is_closer_cp(char32_t cp) {
    return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == 0x2019 || cp == 0x201D;
}

inline bool is_opener_cp(char32_t cp) {
    return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x2018 || cp == 0x201C;
}

}  // namespace detail

// Splits text into sentences. Token indices run contiguously across the
// whole document; each sentence keeps its trimmed surface span in `raw`.
inline std::vector<Sentence> split_sentences(std::string_view text) {
    struct Span {
        size_t begin, end;
    };
    std::vector<Span> spans;
    size_t start = 0;
    size_t i = 0;
    auto flush = [&](size_t end) {
        // Trim surrounding whitespace from the span.
        size_t b = start;
        while (b < end) {
            Codepoint c = decode_utf8(text, b);
            if (!is_space_cp(c.value)) break;
            b += c.size;
        }
        size_t e = end;
        while (e > b) {
            // Walk back one codepoint (ASCII fast path, else rescan).
            size_t p = e - 1;
            while (p > b && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) --p;
            Codepoint c = decode_utf8(text, p);
            if (!is_space_cp(c.value)) break;
            e = p;
        }
        if (e > b) spans.push_back({b, e});
        start = end;
    };
    while (i < text.size()) {
        Codepoint cp = decode_utf8(text, i);
        if (is_vertical_space_cp(cp.value)) {
            flush(i);
            i += cp.size;
            start = i;
            continue;
        }
        if (cp.value == '.' || cp.value == '!' || cp.value == '?') {
            size_t term_end = i + cp.size;
            // Pull any closing quotes/brackets into this sentence.
            size_t j = term_end;
            while (j < text.size()) {
                Codepoint c = decode_utf8(text, j);
                if (!detail::is_closer_cp(c.value)) break;
                j += c.size;
            }
            bool boundary = false;
            if (j >= text.size()) {
                boundary = true;
            } else {
                Codepoint after = decode_utf8(text, j);
                if (is_space_cp(after.value)) {
                    // Skip the whitespace run, then require a capital, digit,
                    // or opening mark to start the next sentence.
                    size_t k = j;
                    while (k < text.size()) {
                        Codepoint c = decode_utf8(text, k);
                        if (!is_space_cp(c.value)) break;
                        k += c.size;
                    }
                    if (k >= text.size()) {
                        boundary = true;
                    } else {
                        Codepoint nxt = decode_utf8(text, k);
                        while (detail::is_opener_cp(nxt.value)) {
                            k += nxt.size;
                            if (k >= text.size()) break;
                            nxt = decode_utf8(text, k);
                        }
                        boundary = is_ascii_upper(nxt.value) || is_ascii_digit(nxt.value);
                    }
                }
            }
            if (boundary && cp.value == '.') {
                // Look back at the word the period terminates.
                size_t wb = i;
                while (wb > start) {
                    size_t p = wb - 1;
                    while (p > start && (static_cast<unsigned char>(text[p]) & 0xC0) == 0x80) --p;
                    Codepoint c = decode_utf8(text, p);
                    if (is_space_cp(c.value) || (is_punct_cp(c.value) && c.value != '.')) break;
                    wb = p;
                }
                std::string_view word = text.substr(wb, i + cp.size - wb);
                if (detail::is_abbreviation(word)) boundary = false;
            }
            if (boundary) {
                flush(j);
                i = j;
                continue;
            }
        }
        i += cp.size;
    }
    flush(text.size());

    std::vector<Sentence> out;
    out.reserve(spans.size());
    int index = 0;
    for (const auto& sp : spans) {
        Sentence s;
        s.raw = std::string(text.substr(sp.begin, sp.end - sp.begin));
        for (auto& w : tokenize(s.raw)) {
            Token t;
            t.text = std::move(w);
            t.index = index++;
            s.tokens.push_back(std::move(t));
        }
        if (!s.tokens.empty()) out.push_back(std::move(s));
    }
    return out;
}

inline Document parse_document(std::string_view text) {
    Document d;
    d.raw = std::string(text);
    d.sentences = split_sentences(text);
    return d;
}

// Groups consecutive sentences into chunks of at most `chunk_size`; the last
// chunk may be short. Chunk ids are their 0-based positions.
inline std::vector<Chunk> split_to_chunks(const std::vector<Sentence>& sentences,
                                          int chunk_size) {
    if (chunk_size < 1) throw std::invalid_argument("chunk_size must be >= 1");
    std::vector<Chunk> out;
    Chunk cur;
    for (const auto& s : sentences) {
        cur.token_count += static_cast<int>(s.tokens.size());
        cur.sentences.push_back(s);
        if (static_cast<int>(cur.sentences.size()) == chunk_size) {
            cur.id = static_cast<int>(out.size());
            out.push_back(std::move(cur));
            cur = Chunk{};
        }
    }
    if (!cur.sentences.empty()) {
        cur.id = static_cast<int>(out.size());
        out.push_back(std::move(cur));
    }
    return out;
}

}  // namespace pshrink
