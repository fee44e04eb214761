// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pshrink {

// Decoded codepoint plus the number of bytes it consumed.
struct Codepoint {
    char32_t value = 0;
    int size = 1;
};

// Decodes one UTF-8 codepoint at `pos`. Malformed bytes are passed through
// one at a time as their raw value so tokenization never throws on bad input.
inline Codepoint decode_utf8(std::string_view text, size_t pos) {
    const auto byte = [&](size_t i) -> uint8_t { return static_cast<uint8_t>(text[i]); };
    const uint8_t b0 = byte(pos);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](size_t i) { return i < text.size() && (byte(i) & 0xC0) == 0x80; };
    if ((b0 & 0xE0) == 0xC0 && cont(pos + 1)) {
        return {static_cast<char32_t>(((b0 & 0x1Fu) << 6) | (byte(pos + 1) & 0x3Fu)), 2};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(pos + 1) && cont(pos + 2)) {
        return {static_cast<char32_t>(((b0 & 0x0Fu) << 12) | ((byte(pos + 1) & 0x3Fu) << 6) |
                                      (byte(pos + 2) & 0x3Fu)),
                3};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(pos + 1) && cont(pos + 2) && cont(pos + 3)) {
        return {static_cast<char32_t>(((b0 & 0x07u) << 18) | ((byte(pos + 1) & 0x3Fu) << 12) |
                                      ((byte(pos + 2) & 0x3Fu) << 6) | (byte(pos + 3) & 0x3Fu)),
                4};
    }
    return {b0, 1};  // lone continuation / truncated sequence
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline bool is_space_cp(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x202F: case 0x205F: case 0x3000:
        case 0x2028: case 0x2029:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

inline bool is_vertical_space_cp(char32_t cp) {
    return cp == 0x0A || cp == 0x0B || cp == 0x0C || cp == 0x0D || cp == 0x85 ||
           cp == 0x2028 || cp == 0x2029;
}

// Punctuation that gets split off token edges: full ASCII punctuation plus the
// common typographic marks (dashes, curly quotes, ellipsis, guillemets, CJK stops).
inline bool is_punct_cp(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
               (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
    }
    switch (cp) {
        case 0xAB: case 0xBB: case 0xB7:
        case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x2026:
        case 0x3001: case 0x3002: case 0xFF01: case 0xFF0C: case 0xFF1F:
            return true;
        default:
            return cp >= 0x2010 && cp <= 0x2015;  // hyphens and dashes
    }
}

inline bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }
inline bool is_ascii_upper(char32_t cp) { return cp >= 'A' && cp <= 'Z'; }
inline bool is_ascii_lower(char32_t cp) { return cp >= 'a' && cp <= 'z'; }

// ASCII-only case fold; non-ASCII bytes pass through unchanged.
inline std::string fold_case(std::string_view word) {
    std::string out;
    out.reserve(word.size());
    for (char c : word) {
        out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    }
    return out;
}

inline bool starts_with_upper(std::string_view word) {
    return !word.empty() && is_ascii_upper(static_cast<unsigned char>(word[0]));
}

// FNV-1a 64-bit hash, the stable basis for the hashed bag-of-words embedder.
inline uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 1469598103934665603ull;
    for (char c : data) {
        h ^= static_cast<uint8_t>(c);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace pshrink
