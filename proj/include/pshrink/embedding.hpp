// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Text embeddings for relevance scoring: a provider interface, cosine
// similarity, and a deterministic local hashed bag-of-words embedder used
// whenever no external embedding service is configured.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pshrink/text.hpp"
#include "pshrink/util.hpp"

namespace pshrink {

// Standard cosine similarity in [-1, 1]; an all-zero vector has no direction,
// so any comparison against it yields 0.
inline double cosine(const std::vector<float>& a, const std::vector<float>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cosine: dimension mismatch");
    }
    double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        dot += static_cast<double>(a[i]) * b[i];
        norm_a += static_cast<double>(a[i]) * a[i];
        norm_b += static_cast<double>(b[i]) * b[i];
    }
    if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
    return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

// Anything that can turn text into a fixed-dimension vector. Implementations
// must be deterministic for a fixed input and safe for concurrent embed()
// calls once configured.
class EmbeddingProvider {
  public:
    virtual ~EmbeddingProvider() = default;
    virtual const std::string& name() const = 0;
    virtual int dimension() const = 0;
    virtual std::vector<float> embed(const std::string& text) const = 0;
};

// Local fallback embedder: the case-folded token multiset is hashed into
// term-frequency bins (stable 64-bit hash mod the dimension), each term
// scaled by a smoothed log inverse document frequency, and the result
// L2-normalized. Without a registered corpus every term weighs 1 (plain TF).
// Embedding is pure computation, so concurrent embed() calls are safe; the
// IDF table must be registered before handing the embedder out.
class HashedBowEmbedder : public EmbeddingProvider {
  public:
    explicit HashedBowEmbedder(int dimension = 512) : dimension_(dimension) {
        if (dimension < 1) throw std::invalid_argument("embedder dimension must be >= 1");
    }

    const std::string& name() const override {
        static const std::string kName = "hashed-bow";
        return kName;
    }

    int dimension() const override { return dimension_; }

    // Builds the IDF table: idf(t) = log((1+N)/(1+df_t)) + 1, the smoothed
    // variant that stays strictly positive and equals 1 for ubiquitous terms.
    void register_corpus(const std::vector<std::string>& documents) {
        document_count_ = documents.size();
        document_frequency_.clear();
        for (const auto& doc : documents) {
            std::unordered_map<std::string, bool> seen;
            for (const auto& tok : tokenize(doc)) {
                seen.emplace(fold_case(tok), true);
            }
            for (const auto& [term, unused] : seen) ++document_frequency_[term];
        }
    }

    std::vector<float> embed(const std::string& text) const override {
        std::vector<float> v(dimension_, 0.0f);
        std::unordered_map<std::string, int> tf;
        for (const auto& tok : tokenize(text)) ++tf[fold_case(tok)];
        if (tf.empty()) return v;
        for (const auto& [term, count] : tf) {
            size_t bin = fnv1a64(term) % static_cast<size_t>(dimension_);
            v[bin] += static_cast<float>(count * idf(term));
        }
        double norm = 0.0;
        for (float x : v) norm += static_cast<double>(x) * x;
        if (norm > 0.0) {
            float inv = static_cast<float>(1.0 / std::sqrt(norm));
            for (float& x : v) x *= inv;
        }
        return v;
    }

    // Exposed so tests can locate a term's bin without re-deriving the hash.
    size_t bin_of(const std::string& term) const {
        return fnv1a64(fold_case(term)) % static_cast<size_t>(dimension_);
    }

  private:
    double idf(const std::string& term) const {
        if (document_frequency_.empty()) return 1.0;
        auto it = document_frequency_.find(term);
        size_t df = it == document_frequency_.end() ? 0 : it->second;
        return std::log((1.0 + static_cast<double>(document_count_)) /
                        (1.0 + static_cast<double>(df))) +
               1.0;
    }

    int dimension_;
    size_t document_count_ = 0;
    std::unordered_map<std::string, size_t> document_frequency_;
};

}  // namespace pshrink
