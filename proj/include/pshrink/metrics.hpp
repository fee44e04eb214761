// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Text-similarity metrics for evaluating compression quality. All metrics
// are pure functions of their inputs and safe to call concurrently.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pshrink/text.hpp"

namespace pshrink {

// Compression semantic efficiency: token ratio scaled by semantic similarity.
// Values above 1 mean the compressed prompt buys net context capacity.
// NOTE: this exact formula is a reconstruction — the simplest one consistent
// with the threshold-at-1 reading and published magnitudes; callers should
// treat absolute values as comparable only within one embedder.
// Token counts may be fractional (averages over a corpus are fine).
inline double cse(double original_tokens, double compressed_tokens, double similarity) {
    if (!(compressed_tokens > 0.0)) {
        throw std::invalid_argument("compressed token count must be positive");
    }
    return original_tokens / compressed_tokens * similarity;
}

namespace detail {

// N-grams as separator-joined keys; '\x1f' cannot appear in tokens.
inline std::map<std::string, int> ngram_counts(const std::vector<std::string>& toks,
                                               size_t n) {
    std::map<std::string, int> counts;
    if (toks.size() < n) return counts;
    for (size_t i = 0; i + n <= toks.size(); ++i) {
        std::string key = toks[i];
        for (size_t j = 1; j < n; ++j) {
            key += '\x1f';
            key += toks[i + j];
        }
        ++counts[key];
    }
    return counts;
}

}  // namespace detail

// Sentence BLEU: geometric mean of modified n-gram precisions (n = 1..max_n)
// with the standard brevity penalty. Orders longer than the candidate are
// skipped; a zero precision at any remaining order yields 0 unless `smooth`
// is set, which then uses add-one smoothing on that order instead.
inline double bleu(const std::string& candidate, const std::vector<std::string>& references,
                   int max_n = 4, bool smooth = false) {
    if (references.empty()) throw std::invalid_argument("bleu needs a reference");
    std::vector<std::string> cand = tokenize(candidate);
    if (cand.empty()) return 0.0;

    std::vector<std::vector<std::string>> refs;
    refs.reserve(references.size());
    for (const auto& r : references) refs.push_back(tokenize(r));

    // Effective reference length: closest to the candidate, shorter on ties.
    size_t ref_len = refs[0].size();
    for (const auto& r : refs) {
        auto diff = [&](size_t len) {
            return len > cand.size() ? len - cand.size() : cand.size() - len;
        };
        if (diff(r.size()) < diff(ref_len) ||
            (diff(r.size()) == diff(ref_len) && r.size() < ref_len)) {
            ref_len = r.size();
        }
    }

    double log_sum = 0.0;
    int orders = 0;
    for (int n = 1; n <= max_n; ++n) {
        auto cand_counts = detail::ngram_counts(cand, static_cast<size_t>(n));
        if (cand_counts.empty()) continue;  // candidate shorter than n
        long total = 0, matched = 0;
        std::map<std::string, int> clip;
        for (const auto& r : refs) {
            for (const auto& [gram, count] : detail::ngram_counts(r, static_cast<size_t>(n))) {
                clip[gram] = std::max(clip[gram], count);
            }
        }
        for (const auto& [gram, count] : cand_counts) {
            total += count;
            auto it = clip.find(gram);
            if (it != clip.end()) matched += std::min(count, it->second);
        }
        double p;
        if (matched == 0) {
            if (!smooth) return 0.0;
            p = 1.0 / static_cast<double>(total + 1);
        } else {
            p = static_cast<double>(matched) / static_cast<double>(total);
        }
        log_sum += std::log(p);
        ++orders;
    }
    if (orders == 0) return 0.0;

    double bp = cand.size() >= ref_len
                    ? 1.0
                    : std::exp(1.0 - static_cast<double>(ref_len) /
                                         static_cast<double>(cand.size()));
    return bp * std::exp(log_sum / orders);
}

// ROUGE-L: F-measure of the longest common subsequence over tokens.
inline double rouge_l(const std::string& candidate, const std::string& reference) {
    std::vector<std::string> a = tokenize(candidate);
    std::vector<std::string> b = tokenize(reference);
    if (a.empty() || b.empty()) return 0.0;

    // Classic O(|a|·|b|) table, rolling rows.
    std::vector<long> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                          : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    long lcs = prev[b.size()];
    if (lcs == 0) return 0.0;
    double p = static_cast<double>(lcs) / static_cast<double>(a.size());
    double r = static_cast<double>(lcs) / static_cast<double>(b.size());
    return 2.0 * p * r / (p + r);
}

namespace detail {

// QA-style normalization: case-fold, drop punctuation tokens and articles.
inline std::vector<std::string> qa_tokens(const std::string& text) {
    std::vector<std::string> out;
    for (const auto& t : tokenize(text)) {
        if (is_punct_cp(decode_utf8(t, 0).value)) continue;
        std::string folded = fold_case(t);
        if (folded == "a" || folded == "an" || folded == "the") continue;
        out.push_back(std::move(folded));
    }
    return out;
}

}  // namespace detail

// Bag-of-tokens F1 with QA-style normalization. Both sides empty after
// normalization counts as a perfect match by convention.
inline double token_f1(const std::string& prediction, const std::string& gold) {
    std::vector<std::string> pred = detail::qa_tokens(prediction);
    std::vector<std::string> ref = detail::qa_tokens(gold);
    if (pred.empty() && ref.empty()) return 1.0;
    if (pred.empty() || ref.empty()) return 0.0;

    std::map<std::string, long> counts;
    for (const auto& t : ref) ++counts[t];
    long common = 0;
    for (const auto& t : pred) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++common;
        }
    }
    if (common == 0) return 0.0;
    double p = static_cast<double>(common) / static_cast<double>(pred.size());
    double r = static_cast<double>(common) / static_cast<double>(ref.size());
    return 2.0 * p * r / (p + r);
}

}  // namespace pshrink
