// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Add-k smoothed n-gram language model used to estimate how typical a chunk
// is relative to the document it came from. Sentences are padded with a
// start symbol; the vocabulary always contains an unknown symbol, and tokens
// are case-folded both at training and query time.
#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pshrink/text.hpp"
#include "pshrink/util.hpp"

namespace pshrink {

class NGramModel {
  public:
    static constexpr const char* kStartSymbol = "<s>";
    static constexpr const char* kUnknownSymbol = "<unk>";

    NGramModel(int order = 3, double k_smoothing = 1.0)
        : order_(order), k_(k_smoothing) {
        if (order < 1) throw std::invalid_argument("ngram order must be >= 1");
        if (k_smoothing <= 0.0) throw std::invalid_argument("smoothing k must be > 0");
        vocabulary_.emplace(kUnknownSymbol, true);
    }

    int order() const { return order_; }
    double smoothing() const { return k_; }

    // Vocabulary size including the unknown symbol (so an untrained model
    // has V = 1 and assigns probability 1 to everything — documented caveat).
    size_t vocabulary_size() const { return vocabulary_.size(); }

    // Adds a word to the vocabulary without observing any counts; useful for
    // building uniform models over a known symbol set.
    void add_word(const std::string& word) { vocabulary_.emplace(fold_case(word), true); }

    // Accumulates counts for one sentence worth of tokens.
    void observe(const std::vector<Token>& tokens) {
        std::vector<std::string> history(order_ - 1, kStartSymbol);
        for (const auto& tok : tokens) {
            std::string word = fold_case(tok.text);
            vocabulary_.emplace(word, true);
            std::string ctx = join_context(history);
            ++counts_[ctx][word];
            ++context_totals_[ctx];
            if (order_ > 1) {
                history.erase(history.begin());
                history.push_back(word);
            }
        }
    }

    // Smoothed conditional probability of `word` given the last order-1
    // context words. Words outside the vocabulary map to the unknown symbol.
    double probability(const std::vector<std::string>& context,
                       const std::string& word) const {
        std::vector<std::string> folded;
        folded.reserve(context.size());
        for (const auto& c : context) folded.push_back(canonical(c));
        while (static_cast<int>(folded.size()) < order_ - 1) {
            folded.insert(folded.begin(), kStartSymbol);
        }
        if (static_cast<int>(folded.size()) > order_ - 1) {
            folded.erase(folded.begin(),
                         folded.end() - (order_ - 1));
        }
        std::string ctx = join_context(folded);
        std::string w = canonical(word);
        double pair_count = 0.0, ctx_count = 0.0;
        auto ctx_it = counts_.find(ctx);
        if (ctx_it != counts_.end()) {
            auto word_it = ctx_it->second.find(w);
            if (word_it != ctx_it->second.end()) pair_count = word_it->second;
        }
        auto total_it = context_totals_.find(ctx);
        if (total_it != context_totals_.end()) ctx_count = total_it->second;
        double v = static_cast<double>(vocabulary_.size());
        return (pair_count + k_) / (ctx_count + k_ * v);
    }

    // Mean negative log probability over one sentence's tokens.
    double accumulate_nll(const std::vector<Token>& tokens, double* nll,
                          size_t* events) const {
        std::vector<std::string> history(order_ - 1, kStartSymbol);
        for (const auto& tok : tokens) {
            std::string word = canonical(tok.text);
            *nll += -std::log(probability(history, word));
            ++*events;
            if (order_ > 1) {
                history.erase(history.begin());
                history.push_back(word);
            }
        }
        return *nll;
    }

    nlohmann::json to_json() const {
        nlohmann::json contexts = nlohmann::json::object();
        for (const auto& [ctx, words] : counts_) {
            nlohmann::json entry = nlohmann::json::object();
            for (const auto& [w, n] : words) entry[w] = n;
            contexts[ctx] = std::move(entry);
        }
        nlohmann::json vocab = nlohmann::json::array();
        for (const auto& [w, unused] : vocabulary_) vocab.push_back(w);
        return nlohmann::json{{"version", 1},
                              {"order", order_},
                              {"k", k_},
                              {"vocabulary", vocab},
                              {"contexts", contexts}};
    }

    static NGramModel from_json(const nlohmann::json& j) {
        if (!j.contains("version") || j.at("version").get<int>() != 1) {
            throw std::runtime_error("unsupported language model version");
        }
        NGramModel model(j.at("order").get<int>(), j.at("k").get<double>());
        for (const auto& w : j.at("vocabulary")) {
            model.vocabulary_.emplace(w.get<std::string>(), true);
        }
        for (const auto& [ctx, words] : j.at("contexts").items()) {
            long total = 0;
            for (const auto& [w, n] : words.items()) {
                model.counts_[ctx][w] = n.get<long>();
                total += n.get<long>();
            }
            model.context_totals_[ctx] = total;
        }
        return model;
    }

  private:
    std::string canonical(const std::string& word) const {
        std::string folded = fold_case(word);
        if (folded == kStartSymbol || vocabulary_.count(folded)) return folded;
        return kUnknownSymbol;
    }

    static std::string join_context(const std::vector<std::string>& words) {
        std::string out;
        for (size_t i = 0; i < words.size(); ++i) {
            if (i > 0) out += ' ';
            out += words[i];
        }
        return out;
    }

    int order_;
    double k_;
    // Ordered maps keep serialization deterministic without extra sorting.
    std::map<std::string, bool> vocabulary_;
    std::map<std::string, std::map<std::string, long>> counts_;
    std::map<std::string, long> context_totals_;
};

// Trains a model over every sentence of every document.
inline NGramModel train_lm(const std::vector<Document>& corpus, int order = 3,
                           double k_smoothing = 1.0) {
    NGramModel model(order, k_smoothing);
    for (const auto& doc : corpus) {
        for (const auto& sentence : doc.sentences) model.observe(sentence.tokens);
    }
    return model;
}

// Perplexity of a chunk under the model: exp of the mean negative log
// conditional probability over the chunk's tokens, sentences padded
// independently. Always >= 1 up to rounding; 1 only at certainty.
inline double calc_perplexity(const Chunk& chunk, const NGramModel& model) {
    double nll = 0.0;
    size_t events = 0;
    for (const auto& sentence : chunk.sentences) {
        model.accumulate_nll(sentence.tokens, &nll, &events);
    }
    if (events == 0) throw std::invalid_argument("perplexity of an empty chunk");
    return std::exp(nll / static_cast<double>(events));
}

}  // namespace pshrink
