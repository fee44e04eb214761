// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end compression: rule-stage simplification per chunk, chunk scoring,
// deterministic ranking, and decremental top-k selection against a target
// retained-token rate measured on the original document. Rates use the
// retained-fraction convention: achieved_rate 0.2 means a "5x" compression.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pshrink/embedding.hpp"
#include "pshrink/lexicon.hpp"
#include "pshrink/ngram.hpp"
#include "pshrink/scoring.hpp"
#include "pshrink/segment.hpp"
#include "pshrink/simplify.hpp"
#include "pshrink/text.hpp"

namespace pshrink {

enum class CompressionMode { standard, performance };

struct CompressionConfig {
    double alpha = 0.5;        // relevance coefficient
    double beta = 0.5;         // importance coefficient
    double target_rate = 1.0;  // retained-token fraction to reach
    int level = 3;             // simplification level 1..5
    CompressionMode mode = CompressionMode::standard;
    int chunk_size = 3;        // sentences per chunk
    double decay_lambda = 0.5;

    // The coefficients form a convex combination; anything else is rescaled.
    void normalize_weights() {
        double sum = alpha + beta;
        if (sum <= 0.0) {
            alpha = beta = 0.5;
        } else {
            alpha /= sum;
            beta /= sum;
        }
    }

    void validate() const {
        if (!(target_rate > 0.0) || target_rate > 1.0) {
            throw std::invalid_argument("target rate must be in (0,1]");
        }
        if (level < 1 || level > 5) throw std::invalid_argument("level must be in [1,5]");
        if (chunk_size < 1) throw std::invalid_argument("chunk size must be >= 1");
        if (decay_lambda < 0.0) throw std::invalid_argument("decay lambda must be >= 0");
        if (alpha < 0.0 || beta < 0.0) {
            throw std::invalid_argument("weight coefficients must be non-negative");
        }
    }
};

struct PerChunkDecision {
    int id = 0;
    ChunkScore score;
    bool retained = false;
};

struct CompressionResult {
    std::string text;
    double initial_rate = 1.0;   // after the rule stage, before selection
    double achieved_rate = 1.0;  // of the final text
    int retained_k = 0;
    int total_chunks = 0;
    bool best_effort = false;  // true when the target was unreachable
    std::vector<PerChunkDecision> per_chunk;
};

// Retained-token fraction of `compressed` relative to the original document.
inline double calc_comp_rate(const Document& original, const std::string& compressed,
                             const TokenCounter& counter = default_token_counter()) {
    long original_tokens = counter.count(original.raw);
    if (original_tokens == 0) {
        throw std::invalid_argument("compression rate of an empty document");
    }
    return static_cast<double>(counter.count(compressed)) /
           static_cast<double>(original_tokens);
}

// Joins the k highest-ranked chunks back in document order.
inline std::string join_top_k(const std::vector<ScoredChunk>& ranked, int k) {
    if (k < 1 || k > static_cast<int>(ranked.size())) {
        throw std::invalid_argument("k out of range");
    }
    std::vector<const Chunk*> picked;
    picked.reserve(k);
    for (int i = 0; i < k; ++i) picked.push_back(&ranked[i].chunk);
    std::sort(picked.begin(), picked.end(),
              [](const Chunk* a, const Chunk* b) { return a->id < b->id; });
    std::string out;
    for (const Chunk* c : picked) {
        if (!out.empty()) out += ' ';
        out += c->text();
    }
    return out;
}

namespace detail {

// One ranking pass: rule-compress every chunk at `level`, score, sort.
inline std::vector<ScoredChunk> rank_chunks(const std::vector<Chunk>& chunks,
                                            const std::string* query, int level,
                                            const CompressionConfig& cfg,
                                            const PosLexicon& lex,
                                            const EmbeddingProvider& embedder,
                                            const NGramModel& model) {
    std::vector<Chunk> stage1;
    stage1.reserve(chunks.size());
    for (const auto& c : chunks) stage1.push_back(token_compress(c, make_ruleset(level), lex));
    return sort_chunks(score_chunks(stage1, query, embedder, model, cfg.alpha,
                                    cfg.beta, cfg.decay_lambda));
}

// Fills per-chunk bookkeeping in document order.
inline std::vector<PerChunkDecision> decisions_of(const std::vector<ScoredChunk>& ranked,
                                                  int retained_k) {
    std::vector<PerChunkDecision> out(ranked.size());
    for (size_t pos = 0; pos < ranked.size(); ++pos) {
        PerChunkDecision d;
        d.id = ranked[pos].chunk.id;
        d.score = ranked[pos].score;
        d.retained = static_cast<int>(pos) < retained_k;
        out[d.id] = d;
    }
    return out;
}

}  // namespace detail

// The full pipeline. The language model for perplexity is trained on the
// input document itself, so "atypical for this document" is what high
// perplexity means here.
inline CompressionResult compress_to_target(const Document& document,
                                            const std::string* query,
                                            const CompressionConfig& config,
                                            const PosLexicon& lex,
                                            const EmbeddingProvider& embedder,
                                            const TokenCounter& counter =
                                                default_token_counter()) {
    CompressionConfig cfg = config;
    cfg.normalize_weights();
    cfg.validate();
    if (document.sentences.empty()) {
        throw std::invalid_argument("cannot compress an empty document");
    }

    NGramModel model = train_lm({document});
    std::vector<Chunk> chunks = split_to_chunks(document.sentences, cfg.chunk_size);
    const int n = static_cast<int>(chunks.size());

    auto ranked = detail::rank_chunks(chunks, query, cfg.level, cfg, lex, embedder, model);

    CompressionResult result;
    result.total_chunks = n;
    result.initial_rate = calc_comp_rate(document, join_top_k(ranked, n), counter);

    // Decrement k until the rate clears the target; the first hit from the
    // top is the largest feasible k because the rate is monotone in k.
    for (int k = n; k >= 1; --k) {
        std::string text = join_top_k(ranked, k);
        double rate = calc_comp_rate(document, text, counter);
        if (rate <= cfg.target_rate) {
            result.text = std::move(text);
            result.achieved_rate = rate;
            result.retained_k = k;
            result.best_effort = false;
            result.per_chunk = detail::decisions_of(ranked, k);
            return result;
        }
    }

    if (cfg.mode == CompressionMode::performance) {
        // Retry the whole selection with the most aggressive rule level.
        auto harder = detail::rank_chunks(chunks, query, 5, cfg, lex, embedder, model);
        for (int k = n; k >= 1; --k) {
            std::string text = join_top_k(harder, k);
            double rate = calc_comp_rate(document, text, counter);
            if (rate <= cfg.target_rate) {
                result.text = std::move(text);
                result.achieved_rate = rate;
                result.retained_k = k;
                result.best_effort = false;
                result.per_chunk = detail::decisions_of(harder, k);
                return result;
            }
        }
        // Still over target with one chunk: drop whole sentences, least
        // important first, while more than one sentence remains.
        std::vector<Sentence> kept = harder[0].chunk.sentences;
        auto sentence_importance = [&](const Sentence& s) {
            Chunk probe;
            probe.sentences = {s};
            return calc_importance(probe, cfg.decay_lambda);
        };
        auto chunk_text = [&](const std::vector<Sentence>& sentences) {
            std::string out;
            for (const auto& s : sentences) {
                if (!out.empty()) out += ' ';
                out += s.text();
            }
            return out;
        };
        std::string text = chunk_text(kept);
        double rate = calc_comp_rate(document, text, counter);
        while (rate > cfg.target_rate && kept.size() > 1) {
            size_t worst = 0;
            double worst_imp = sentence_importance(kept[0]);
            for (size_t i = 1; i < kept.size(); ++i) {
                double imp = sentence_importance(kept[i]);
                if (imp < worst_imp) {
                    worst_imp = imp;
                    worst = i;
                }
            }
            kept.erase(kept.begin() + static_cast<long>(worst));
            text = chunk_text(kept);
            rate = calc_comp_rate(document, text, counter);
        }
        result.text = std::move(text);
        result.achieved_rate = rate;
        result.retained_k = 1;
        result.best_effort = rate > cfg.target_rate;
        result.per_chunk = detail::decisions_of(harder, 1);
        return result;
    }

    // Standard mode: report the single best chunk and admit the miss.
    std::string text = join_top_k(ranked, 1);
    result.text = text;
    result.achieved_rate = calc_comp_rate(document, text, counter);
    result.retained_k = 1;
    result.best_effort = true;
    result.per_chunk = detail::decisions_of(ranked, 1);
    return result;
}

// Convenience entry point with the built-in lexicon and local embedder.
inline CompressionResult compress_to_target(const Document& document,
                                            const std::string* query,
                                            const CompressionConfig& config) {
    static const HashedBowEmbedder kEmbedder;
    return compress_to_target(document, query, config, builtin_lexicon(), kEmbedder);
}

// Human-readable label for the achieved rate: 0.2 -> "5x".
inline std::string rate_label(double achieved_rate) {
    if (!(achieved_rate > 0.0)) return "-";
    return std::to_string(static_cast<long long>(std::llround(1.0 / achieved_rate))) +
           "x";
}

// Trace form of a result; one JSON object per compression run.
inline nlohmann::json result_to_json(const CompressionResult& result) {
    nlohmann::json per_chunk = nlohmann::json::array();
    for (const auto& d : result.per_chunk) {
        per_chunk.push_back(nlohmann::json{{"id", d.id},
                                           {"rel", d.score.rel},
                                           {"imp", d.score.imp},
                                           {"ppl", d.score.ppl},
                                           {"weight", d.score.weight},
                                           {"retained", d.retained}});
    }
    return nlohmann::json{{"text", result.text},
                          {"initial_rate", result.initial_rate},
                          {"achieved_rate", result.achieved_rate},
                          {"rate_label", rate_label(result.achieved_rate)},
                          {"retained_k", result.retained_k},
                          {"total_chunks", result.total_chunks},
                          {"best_effort", result.best_effort},
                          {"per_chunk", per_chunk}};
}

}  // namespace pshrink
