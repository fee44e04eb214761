// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Per-chunk scoring: relevance against an optional query, positional-decay
// importance over part-of-speech priorities, perplexity under the document
// language model, and the combined selection weight.
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pshrink/embedding.hpp"
#include "pshrink/ngram.hpp"
#include "pshrink/text.hpp"

namespace pshrink {

struct ChunkScore {
    double rel = 0.0;     // cosine relevance in [-1, 1]
    double imp = 0.0;     // importance in [0, 1]
    double ppl = 1.0;     // perplexity >= 1
    double weight = 0.0;  // alpha*rel + beta*imp
};

struct ScoredChunk {
    Chunk chunk;
    ChunkScore score;
};

// Importance of a tagged chunk: each token contributes its priority damped by
// an exponential positional decay, normalized so an all-top-priority chunk at
// lambda = 0 scores exactly 1.
inline double calc_importance(const Chunk& chunk, double decay_lambda) {
    size_t len = 0;
    for (const auto& s : chunk.sentences) len += s.tokens.size();
    if (len == 0) throw std::invalid_argument("importance of an empty chunk");
    double sum = 0.0;
    size_t pos = 0;
    for (const auto& s : chunk.sentences) {
        for (const auto& t : s.tokens) {
            sum += t.priority *
                   std::exp(-decay_lambda * static_cast<double>(pos) /
                            static_cast<double>(len));
            ++pos;
        }
    }
    return sum / (4.0 * static_cast<double>(len));
}

// The selection weight: a plain linear combination.
inline double combined_weight(double rel, double imp, double alpha, double beta) {
    return alpha * rel + beta * imp;
}

// Scores every chunk. Without a query there is nothing to be relevant to, so
// rel is pinned to 1 and ranking degenerates to importance (plus alpha).
inline std::vector<ScoredChunk> score_chunks(const std::vector<Chunk>& chunks,
                                             const std::string* query,
                                             const EmbeddingProvider& embedder,
                                             const NGramModel& model, double alpha,
                                             double beta, double decay_lambda) {
    std::vector<float> query_vec;
    if (query != nullptr) query_vec = embedder.embed(*query);
    std::vector<ScoredChunk> out;
    out.reserve(chunks.size());
    for (const auto& chunk : chunks) {
        ChunkScore score;
        score.rel =
            query != nullptr ? cosine(embedder.embed(chunk.text()), query_vec) : 1.0;
        score.imp = calc_importance(chunk, decay_lambda);
        score.ppl = calc_perplexity(chunk, model);
        score.weight = combined_weight(score.rel, score.imp, alpha, beta);
        out.push_back(ScoredChunk{chunk, score});
    }
    return out;
}

// Deterministic ranking: heaviest first, perplexity breaks weight ties in
// favor of the more typical chunk, chunk id breaks exact ties.
inline std::vector<ScoredChunk> sort_chunks(std::vector<ScoredChunk> scored) {
    std::stable_sort(scored.begin(), scored.end(),
                     [](const ScoredChunk& a, const ScoredChunk& b) {
                         if (a.score.weight != b.score.weight) {
                             return a.score.weight > b.score.weight;
                         }
                         if (a.score.ppl != b.score.ppl) {
                             return a.score.ppl < b.score.ppl;
                         }
                         return a.chunk.id < b.chunk.id;
                     });
    return scored;
}

}  // namespace pshrink
