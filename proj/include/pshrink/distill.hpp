// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Reward-weighted dataset construction for training a small compressor
// model downstream. Candidate compressions come from pluggable text
// generators; each sample carries a similarity-gated reward and an
// exponential weight. No optimization happens here — the output is the
// weighted dataset plus a manifest.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pshrink/embedding.hpp"
#include "pshrink/lexicon.hpp"
#include "pshrink/segment.hpp"
#include "pshrink/tagger.hpp"
#include "pshrink/text.hpp"

namespace pshrink {

struct GenerationResult {
    std::string text;
    double latency_seconds = 0.0;  // wall clock for real backends, simulated for mocks
};

// A text-generation backend. The name doubles as the sample class label and
// must stay stable for the whole run. Implementations must tolerate
// concurrent generate() calls.
class LLMProvider {
  public:
    virtual ~LLMProvider() = default;
    virtual const std::string& name() const = 0;
    // `response_tokens` caps the reply length; 0 means provider default.
    virtual GenerationResult generate(const std::string& prompt, int response_tokens) = 0;
};

struct RLFTConfig {
    double tau_sim = 0.85;  // similarity gate for a non-zero reward
    double beta_kl = 1.0;   // scale inside exp(reward / beta_kl)
    int block_size = 3;     // sentences per training block

    void validate() const {
        if (!(tau_sim > 0.0) || tau_sim > 1.0) {
            throw std::invalid_argument("tau_sim must be in (0,1]");
        }
        if (!(beta_kl > 0.0)) throw std::invalid_argument("beta_kl must be > 0");
        if (block_size < 1) throw std::invalid_argument("block_size must be >= 1");
    }
};

struct RLFTSample {
    std::string x;       // source block
    std::string y;       // candidate compression
    std::string c;       // class label = provider name
    double similarity = 0.0;
    double ratio = 0.0;  // tokens(x)/tokens(y); 0 when y has no tokens
    double reward = 0.0;
    double weight = 1.0;
    bool kept = false;
    std::string error;   // non-empty only when generation failed
    int block_id = 0;    // bookkeeping for ordering; not serialized
};

// Non-overlapping windows of `block_size` consecutive sentences per document;
// a short trailing remainder becomes its own block.
inline std::vector<std::string> make_blocks(const std::vector<Document>& corpus,
                                            int block_size = 3) {
    if (block_size < 1) throw std::invalid_argument("block_size must be >= 1");
    std::vector<std::string> blocks;
    for (const auto& doc : corpus) {
        for (size_t i = 0; i < doc.sentences.size(); i += static_cast<size_t>(block_size)) {
            std::string block;
            size_t end = std::min(doc.sentences.size(), i + static_cast<size_t>(block_size));
            for (size_t j = i; j < end; ++j) {
                if (!block.empty()) block += ' ';
                block += doc.sentences[j].text();
            }
            blocks.push_back(std::move(block));
        }
    }
    return blocks;
}

// Token ratio when the candidate is close enough to the source, else zero.
// An empty candidate cannot clear the gate: its similarity is 0 by
// construction (zero embedding), and tau_sim is positive.
inline double reward(const std::string& x, const std::string& y, double sim,
                     const RLFTConfig& cfg) {
    if (x.empty()) throw std::invalid_argument("reward needs a non-empty source");
    if (sim < cfg.tau_sim) return 0.0;
    int ty = count_tokens(y);
    if (ty == 0) return 0.0;
    return static_cast<double>(count_tokens(x)) / static_cast<double>(ty);
}

inline double rlft_weight(double r, double beta_kl) {
    if (!(beta_kl > 0.0)) throw std::invalid_argument("beta_kl must be > 0");
    return std::exp(r / beta_kl);
}

// KL divergence between two discrete distributions over the same support.
// Returns +infinity when q lacks mass somewhere p has it.
inline double kl_divergence(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) throw std::invalid_argument("distribution size mismatch");
    if (p.empty()) throw std::invalid_argument("empty distribution");
    double sp = 0.0, sq = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0.0 || q[i] < 0.0) {
            throw std::invalid_argument("distributions must be non-negative");
        }
        sp += p[i];
        sq += q[i];
    }
    if (std::abs(sp - 1.0) > 1e-9 || std::abs(sq - 1.0) > 1e-9) {
        throw std::invalid_argument("distributions must sum to 1");
    }
    double kl = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
        kl += p[i] * std::log(p[i] / q[i]);
    }
    return kl;
}

// The instruction prepended to every block before it is sent to a provider.
// Deletion-oriented: the candidate should shed words, not paraphrase.
inline std::string generation_instruction() {
    return "Shorten the passage below by deleting words only; do not reorder or "
           "paraphrase. Keep names, numbers, negations, and the core "
           "subject-verb structure of each sentence. Drop decorative adjectives "
           "and adverbs, redundant prepositional phrases, and non-essential "
           "clauses. Reply with the shortened passage and nothing else.";
}

inline std::string render_prompt(const std::string& block) {
    return generation_instruction() + "\n\n" + block;
}

namespace detail {

// Mock providers receive the rendered prompt like any backend; the source
// block is everything after the final blank line.
inline std::string block_of_prompt(const std::string& prompt) {
    size_t pos = prompt.rfind("\n\n");
    return pos == std::string::npos ? prompt : prompt.substr(pos + 2);
}

}  // namespace detail

// Deterministic offline providers, resolvable by name from configuration so
// the whole pipeline runs without network access.

// Returns the source block unchanged. Simulated latency is linear in the
// prompt and response budget: a + b*prompt_tokens + c*response_tokens.
class EchoProvider final : public LLMProvider {
  public:
    explicit EchoProvider(double a = 0.0, double b = 0.0, double c = 0.0)
        : a_(a), b_(b), c_(c) {}
    const std::string& name() const override {
        static const std::string kName = "echo";
        return kName;
    }
    GenerationResult generate(const std::string& prompt, int response_tokens) override {
        GenerationResult out;
        out.text = detail::block_of_prompt(prompt);
        out.latency_seconds = a_ + b_ * count_tokens(prompt) + c_ * response_tokens;
        return out;
    }

  private:
    double a_, b_, c_;
};

// Returns fixed off-topic text: every sample lands below any sane gate.
class NoiseProvider final : public LLMProvider {
  public:
    const std::string& name() const override {
        static const std::string kName = "noise";
        return kName;
    }
    GenerationResult generate(const std::string&, int) override {
        return {"Qxev vlurm trazik povun blerg nixat wofful.", 0.0};
    }
};

// Deletes every adverb-tagged token from the block; a plausible middling
// compressor whose kept/filtered split depends on the input.
class AdverbDropProvider final : public LLMProvider {
  public:
    const std::string& name() const override {
        static const std::string kName = "adverb-drop";
        return kName;
    }
    GenerationResult generate(const std::string& prompt, int) override {
        Document doc = parse_document(detail::block_of_prompt(prompt));
        std::string out;
        for (auto& sentence : doc.sentences) {
            Sentence tagged = pos_tag(sentence, builtin_lexicon());
            std::vector<Token> kept;
            for (const auto& t : tagged.tokens) {
                if (t.pos != Pos::adverb) kept.push_back(t);
            }
            if (kept.empty()) continue;
            if (!out.empty()) out += ' ';
            out += detokenize(kept);
        }
        return {out, 0.0};
    }
};

inline nlohmann::json sample_to_json(const RLFTSample& s) {
    nlohmann::json j{{"x", s.x},
                     {"y", s.y},
                     {"c", s.c},
                     {"similarity", s.similarity},
                     {"ratio", s.ratio},
                     {"reward", s.reward},
                     {"weight", s.weight},
                     {"kept", s.kept}};
    if (!s.error.empty()) j["error"] = s.error;
    return j;
}

struct DatasetResult {
    std::vector<RLFTSample> samples;  // sorted by (block id, class label)
    nlohmann::json manifest;
};

// Generates one candidate per block x provider, scores it, and assembles the
// manifest. Provider failures are recorded on the sample and never abort the
// run. The sample list is sorted by (block id, class label), so the output
// does not depend on provider order.
inline DatasetResult build_dataset(const std::vector<Document>& corpus,
                                   const std::vector<LLMProvider*>& providers,
                                   const RLFTConfig& cfg,
                                   const EmbeddingProvider& embedder) {
    cfg.validate();
    if (providers.empty()) throw std::invalid_argument("need at least one provider");
    for (const auto* p : providers) {
        if (p == nullptr) throw std::invalid_argument("null provider");
    }

    std::vector<std::string> blocks = make_blocks(corpus, cfg.block_size);
    DatasetResult out;
    out.samples.reserve(blocks.size() * providers.size());

    for (size_t b = 0; b < blocks.size(); ++b) {
        const std::string& x = blocks[b];
        std::vector<float> vx = embedder.embed(x);
        for (LLMProvider* provider : providers) {
            RLFTSample s;
            s.x = x;
            s.c = provider->name();
            s.block_id = static_cast<int>(b);
            try {
                s.y = provider->generate(render_prompt(x), 0).text;
                s.similarity = cosine(vx, embedder.embed(s.y));
                int ty = count_tokens(s.y);
                s.ratio = ty == 0 ? 0.0
                                  : static_cast<double>(count_tokens(x)) /
                                        static_cast<double>(ty);
                s.kept = s.similarity >= cfg.tau_sim;
                s.reward = s.kept ? reward(x, s.y, s.similarity, cfg) : 0.0;
                // The similarity gate passed but the candidate had no tokens:
                // impossible with a zero-vector empty embedding, but keep the
                // flags consistent anyway.
                if (s.kept && s.reward == 0.0) s.kept = false;
            } catch (const std::exception& e) {
                s.y.clear();
                s.similarity = 0.0;
                s.ratio = 0.0;
                s.reward = 0.0;
                s.kept = false;
                s.error = e.what();
            }
            s.weight = rlft_weight(s.reward, cfg.beta_kl);
            out.samples.push_back(std::move(s));
        }
    }

    std::stable_sort(out.samples.begin(), out.samples.end(),
                     [](const RLFTSample& a, const RLFTSample& b) {
                         if (a.block_id != b.block_id) return a.block_id < b.block_id;
                         return a.c < b.c;
                     });

    // Per-class tallies keyed by label; nlohmann objects serialize sorted.
    nlohmann::json classes = nlohmann::json::object();
    for (const auto& s : out.samples) {
        if (!classes.contains(s.c)) {
            classes[s.c] = {{"errors", 0}, {"kept", 0}, {"samples", 0}};
        }
        classes[s.c]["samples"] = classes[s.c]["samples"].get<int>() + 1;
        if (s.kept) classes[s.c]["kept"] = classes[s.c]["kept"].get<int>() + 1;
        if (!s.error.empty()) {
            classes[s.c]["errors"] = classes[s.c]["errors"].get<int>() + 1;
        }
    }
    out.manifest = nlohmann::json{{"beta_kl", cfg.beta_kl},
                                  {"block_count", blocks.size()},
                                  {"block_size", cfg.block_size},
                                  {"classes", classes},
                                  {"embedder", embedder.name()},
                                  {"sample_count", out.samples.size()},
                                  {"tau_sim", cfg.tau_sim}};
    return out;
}

// Writes shard-NNNN.jsonl files plus manifest.json. Returns shard paths.
inline std::vector<std::filesystem::path> write_dataset(
    const DatasetResult& dataset, const std::filesystem::path& dir,
    size_t shard_size = 1000) {
    if (shard_size == 0) throw std::invalid_argument("shard_size must be >= 1");
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> shards;
    for (size_t start = 0; start < dataset.samples.size(); start += shard_size) {
        char name[32];
        std::snprintf(name, sizeof(name), "shard-%04zu.jsonl", shards.size());
        std::filesystem::path path = dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        size_t end = std::min(dataset.samples.size(), start + shard_size);
        for (size_t i = start; i < end; ++i) {
            out << sample_to_json(dataset.samples[i]).dump() << '\n';
        }
        shards.push_back(path);
    }
    std::ofstream mf(dir / "manifest.json", std::ios::binary);
    if (!mf) throw std::runtime_error("cannot write manifest.json");
    nlohmann::json manifest = dataset.manifest;
    manifest["shards"] = nlohmann::json::array();
    for (const auto& p : shards) manifest["shards"].push_back(p.filename().string());
    mf << manifest.dump(2) << '\n';
    return shards;
}

}  // namespace pshrink
