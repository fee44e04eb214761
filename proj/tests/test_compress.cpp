// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pshrink/compress.hpp"

using namespace pshrink;

namespace {

// Gibberish nouns: unknown to the lexicon, no suffix rule fires, so the rule
// stage leaves sentences made of them untouched at level 1.
std::string nonce_word(int i) {
    static const char* kSyllables[8] = {"zor", "bek", "lum", "tav",
                                        "rud", "pol", "min", "gaf"};
    return std::string(kSyllables[i % 8]) + kSyllables[(i / 8) % 8] +
           kSyllables[(i / 64) % 8];
}

// One sentence of `words` nonce words (words + terminator = words+1 tokens).
// Words are unique across the whole 512-word cycle, so a uniform document
// has uniform n-gram statistics and chunk ranking ties break by id.
std::string nonce_sentence(int words, int salt) {
    std::string out;
    for (int w = 0; w < words; ++w) {
        if (!out.empty()) out += ' ';
        out += nonce_word(salt + w);
    }
    out[0] = static_cast<char>(out[0] - 'a' + 'A');  // segmentation cue
    out += '.';
    return out;
}

// A document of `n` sentences, each with exactly 100 tokens, all distinct
// words, so every chunk weighs the same and ties resolve by chunk id.
Document uniform_document(int n) {
    std::string text;
    for (int j = 0; j < n; ++j) {
        if (!text.empty()) text += ' ';
        text += nonce_sentence(99, j * 99);
    }
    return parse_document(text);
}

CompressionConfig level1_config(double target, int chunk_size = 1) {
    CompressionConfig cfg;
    cfg.level = 1;
    cfg.target_rate = target;
    cfg.chunk_size = chunk_size;
    return cfg;
}

uint64_t lcg_next(uint64_t& state) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
}

// Mixed real/nonce sentences so the rule stage has something to delete and
// chunk weights actually vary.
Document mixed_document(uint64_t& rng, int sentences) {
    static const std::vector<std::string> kPool = {
        "economy", "grows",  "small", "dog",    "runs",  "quickly",
        "market",  "region", "plan",  "team",   "wins",  "old",
        "slowly",  "river",  "wide",  "bridge", "report"};
    static const std::vector<std::string> kGlue = {"in the", "of the", "with a"};
    std::string text;
    for (int s = 0; s < sentences; ++s) {
        int words = 4 + static_cast<int>(lcg_next(rng) % 9);
        std::string sent = "The";
        for (int w = 0; w < words; ++w) {
            sent += ' ';
            if (lcg_next(rng) % 4 == 0) {
                sent += kGlue[lcg_next(rng) % kGlue.size()];
                sent += ' ';
            }
            if (lcg_next(rng) % 3 == 0) {
                sent += nonce_word(static_cast<int>(lcg_next(rng) % 64));
            } else {
                sent += kPool[lcg_next(rng) % kPool.size()];
            }
        }
        sent += '.';
        if (!text.empty()) text += ' ';
        text += sent;
    }
    return parse_document(text);
}

// Reproduces the ranking pipeline so tests can score every k independently.
std::vector<ScoredChunk> oracle_ranking(const Document& doc,
                                        const CompressionConfig& config) {
    CompressionConfig cfg = config;
    cfg.normalize_weights();
    NGramModel model = train_lm({doc});
    HashedBowEmbedder embedder;
    std::vector<Chunk> chunks = split_to_chunks(doc.sentences, cfg.chunk_size);
    std::vector<Chunk> stage1;
    for (const auto& c : chunks) {
        stage1.push_back(token_compress(c, make_ruleset(cfg.level), builtin_lexicon()));
    }
    return sort_chunks(score_chunks(stage1, nullptr, embedder, model, cfg.alpha,
                                    cfg.beta, cfg.decay_lambda));
}

std::set<int> retained_ids(const CompressionResult& result) {
    std::set<int> ids;
    for (const auto& d : result.per_chunk) {
        if (d.retained) ids.insert(d.id);
    }
    return ids;
}

}  // namespace

TEST_CASE("calc_comp_rate basics") {
    Document doc = parse_document("The economy grows.");  // 4 tokens
    CHECK(calc_comp_rate(doc, doc.raw) == 1.0);
    CHECK(calc_comp_rate(doc, "") == 0.0);
    CHECK(calc_comp_rate(doc, "economy grows") == 0.5);
    CHECK_THROWS_AS(calc_comp_rate(Document{}, "anything"), std::invalid_argument);
}

TEST_CASE("join_top_k rejoins in document order") {
    // Ranked order by id: 2, 0, 1.
    Document doc = parse_document("Alpha one. Beta two. Gamma three.");
    auto chunks = split_to_chunks(doc.sentences, 1);
    std::vector<ScoredChunk> ranked(3);
    ranked[0].chunk = chunks[2];
    ranked[1].chunk = chunks[0];
    ranked[2].chunk = chunks[1];

    CHECK(join_top_k(ranked, 2) == "Alpha one. Gamma three.");
    CHECK(join_top_k(ranked, 1) == "Gamma three.");
    CHECK(join_top_k(ranked, 3) == "Alpha one. Beta two. Gamma three.");
    CHECK_THROWS_AS(join_top_k(ranked, 0), std::invalid_argument);
    CHECK_THROWS_AS(join_top_k(ranked, 4), std::invalid_argument);
}

TEST_CASE("four equal chunks at half target keep exactly two") {
    Document doc = uniform_document(4);
    REQUIRE(default_token_counter().count(doc.raw) == 400);

    CompressionResult r = compress_to_target(doc, nullptr, level1_config(0.5));
    CHECK(r.total_chunks == 4);
    CHECK(r.retained_k == 2);
    CHECK(r.achieved_rate == 0.5);
    CHECK(r.initial_rate == 1.0);
    CHECK_FALSE(r.best_effort);
    // Ties resolve by chunk id, so the first two sentences survive.
    std::string expected = nonce_sentence(99, 0) + ' ' + nonce_sentence(99, 99);
    CHECK(r.text == expected);
    CHECK(retained_ids(r) == std::set<int>{0, 1});
}

TEST_CASE("target rate 1.0 keeps every chunk") {
    Document doc = parse_document(
        "The economy, despite facing numerous challenges from the west, continues "
        "to grow. The old committee of experts approved the plan in 2019. The "
        "results of the survey, which everyone liked, were very strong.");
    CompressionConfig cfg;
    cfg.target_rate = 1.0;
    cfg.chunk_size = 1;
    CompressionResult r = compress_to_target(doc, nullptr, cfg);

    CHECK(r.retained_k == r.total_chunks);
    CHECK(r.achieved_rate == r.initial_rate);
    CHECK(r.achieved_rate < 1.0);  // the rule stage removed something
    CHECK_FALSE(r.best_effort);

    auto ranked = oracle_ranking(doc, cfg);
    CHECK(r.text == join_top_k(ranked, r.total_chunks));
}

TEST_CASE("standard mode admits an unreachable target") {
    Document doc = uniform_document(4);
    CompressionResult r = compress_to_target(doc, nullptr, level1_config(0.1));
    CHECK(r.best_effort);
    CHECK(r.retained_k == 1);
    CHECK(r.achieved_rate == 0.25);
    CHECK(r.achieved_rate > 0.1);
    CHECK(r.text == nonce_sentence(99, 0));
}

TEST_CASE("achieved rate of 0.2 is labelled 5x") {
    Document doc = uniform_document(5);
    CompressionResult r = compress_to_target(doc, nullptr, level1_config(0.2));
    CHECK(r.retained_k == 1);
    CHECK(r.achieved_rate == 0.2);
    CHECK_FALSE(r.best_effort);
    CHECK(rate_label(r.achieved_rate) == "5x");

    nlohmann::json trace = result_to_json(r);
    CHECK(trace["rate_label"] == "5x");
}

TEST_CASE("rate_label rounds the inverse rate") {
    CHECK(rate_label(1.0) == "1x");
    CHECK(rate_label(0.5) == "2x");
    CHECK(rate_label(0.3) == "3x");
    CHECK(rate_label(0.1931) == "5x");
    CHECK(rate_label(0.0) == "-");
}

TEST_CASE("selection keeps the largest feasible k") {
    uint64_t rng = 0x5eedULL;
    const double targets[4] = {0.2, 0.33, 0.5, 0.8};
    for (int trial = 0; trial < 40; ++trial) {
        Document doc = mixed_document(rng, 6 + static_cast<int>(lcg_next(rng) % 9));
        CompressionConfig cfg;
        cfg.chunk_size = 2;
        cfg.target_rate = targets[trial % 4];

        CompressionResult r = compress_to_target(doc, nullptr, cfg);
        auto ranked = oracle_ranking(doc, cfg);
        const int n = static_cast<int>(ranked.size());
        REQUIRE(r.total_chunks == n);

        int best_k = 0;  // largest k whose rate clears the target
        for (int k = 1; k <= n; ++k) {
            if (calc_comp_rate(doc, join_top_k(ranked, k)) <= cfg.target_rate) {
                best_k = k;
            }
        }
        if (best_k == 0) {
            CHECK(r.best_effort);
            CHECK(r.retained_k == 1);
        } else {
            CHECK_FALSE(r.best_effort);
            CHECK(r.retained_k == best_k);
            CHECK(r.achieved_rate <= cfg.target_rate);
            CHECK(r.text == join_top_k(ranked, best_k));
        }

        // Rate is monotone in k, so decremental search is exhaustive.
        double prev = -1.0;
        for (int k = 1; k <= n; ++k) {
            double rate = calc_comp_rate(doc, join_top_k(ranked, k));
            CHECK(rate >= prev);
            prev = rate;
        }
    }
}

TEST_CASE("retained set maximizes total weight among equal-size subsets") {
    // Six chunks with visibly different part-of-speech mixes.
    Document doc = parse_document(
        "The economy grows. He runs very quickly and quietly today. "
        "The old bridge stands near the wide river. Dudley Martinez approved "
        "the plan. It seems rather slow. The market report was strong.");
    CompressionConfig cfg;
    cfg.chunk_size = 1;
    cfg.target_rate = 0.5;
    CompressionResult r = compress_to_target(doc, nullptr, cfg);
    const int n = r.total_chunks;
    REQUIRE(n == 6);
    REQUIRE_FALSE(r.best_effort);

    std::vector<double> weight(n);
    for (const auto& d : r.per_chunk) weight[d.id] = d.score.weight;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) REQUIRE(weight[i] != weight[j]);
    }

    double best_total = -1.0;
    std::set<int> best_set;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != r.retained_k) continue;
        double total = 0.0;
        std::set<int> ids;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) {
                total += weight[i];
                ids.insert(i);
            }
        }
        if (total > best_total) {
            best_total = total;
            best_set = ids;
        }
    }
    CHECK(retained_ids(r) == best_set);
}

TEST_CASE("performance mode escalates to the strongest rules") {
    Document doc = parse_document(
        "The remarkably old plan, which everyone at the office liked, slowly "
        "continued to gain quite broad support. The surprisingly detailed "
        "report, which nobody at the meeting expected, eventually managed to "
        "convince the rather sceptical committee.");
    CompressionConfig cfg;
    cfg.level = 1;
    cfg.chunk_size = 16;  // a single chunk: selection alone cannot help
    cfg.target_rate = 0.3;

    CompressionResult standard = compress_to_target(doc, nullptr, cfg);
    CHECK(standard.best_effort);
    CHECK(standard.achieved_rate > cfg.target_rate);

    cfg.mode = CompressionMode::performance;
    CompressionResult rescued = compress_to_target(doc, nullptr, cfg);
    CHECK_FALSE(rescued.best_effort);
    CHECK(rescued.achieved_rate <= cfg.target_rate);
    CHECK(rescued.retained_k == 1);
    CHECK(rescued.total_chunks == 1);
    CHECK(!rescued.text.empty());
}

TEST_CASE("performance mode truncates sentences as a last resort") {
    Document doc = parse_document(
        "The economy of the region grows. He runs very quickly today. "
        "The old committee approved the detailed plan.");
    CompressionConfig cfg;
    cfg.mode = CompressionMode::performance;
    cfg.chunk_size = 8;  // one chunk

    // Level-5 form of the whole chunk, for deriving the expected survivors.
    Chunk whole = split_to_chunks(doc.sentences, 8)[0];
    Chunk skeleton = token_compress(whole, make_ruleset(5), builtin_lexicon());
    REQUIRE(skeleton.sentences.size() == 3);
    std::vector<double> imp;
    for (const auto& s : skeleton.sentences) {
        Chunk probe;
        probe.sentences = {s};
        imp.push_back(calc_importance(probe, cfg.decay_lambda));
    }
    long total = default_token_counter().count(doc.raw);

    SECTION("drops the least important sentence and stops at the target") {
        // Choose a target that two skeleton sentences satisfy but three miss.
        size_t worst = 0;
        for (size_t i = 1; i < imp.size(); ++i) {
            if (imp[i] < imp[worst]) worst = i;
        }
        std::string two_best;
        long two_tokens = 0;
        for (size_t i = 0; i < skeleton.sentences.size(); ++i) {
            if (i == worst) continue;
            if (!two_best.empty()) two_best += ' ';
            two_best += skeleton.sentences[i].text();
            two_tokens += static_cast<long>(skeleton.sentences[i].tokens.size());
        }
        double three_rate = static_cast<double>(skeleton.token_count) /
                            static_cast<double>(total);
        double two_rate = static_cast<double>(two_tokens) / static_cast<double>(total);
        REQUIRE(two_rate < three_rate);
        cfg.target_rate = (two_rate + three_rate) / 2.0;

        CompressionResult r = compress_to_target(doc, nullptr, cfg);
        CHECK_FALSE(r.best_effort);
        CHECK(r.achieved_rate <= cfg.target_rate);
        CHECK(r.text == two_best);  // document order preserved
    }

    SECTION("keeps one sentence and reports best effort when even that misses") {
        cfg.target_rate = 0.01;
        CompressionResult r = compress_to_target(doc, nullptr, cfg);
        CHECK(r.best_effort);
        CHECK(r.achieved_rate > cfg.target_rate);
        CHECK(r.retained_k == 1);
        // Exactly one sentence left: its text contains one terminator.
        CHECK(std::count(r.text.begin(), r.text.end(), '.') == 1);
        CHECK(!r.text.empty());
    }
}

TEST_CASE("per-chunk bookkeeping is complete and ordered") {
    uint64_t rng = 99;
    Document doc = mixed_document(rng, 10);
    CompressionConfig cfg;
    cfg.chunk_size = 2;
    cfg.target_rate = 0.6;
    CompressionResult r = compress_to_target(doc, nullptr, cfg);

    REQUIRE(static_cast<int>(r.per_chunk.size()) == r.total_chunks);
    int retained = 0;
    for (int i = 0; i < r.total_chunks; ++i) {
        CHECK(r.per_chunk[i].id == i);
        CHECK(r.per_chunk[i].score.weight ==
              combined_weight(r.per_chunk[i].score.rel, r.per_chunk[i].score.imp,
                              cfg.alpha, cfg.beta));
        if (r.per_chunk[i].retained) ++retained;
    }
    CHECK(retained == r.retained_k);
}

TEST_CASE("weight coefficients are normalized at load") {
    uint64_t rng = 7;
    Document doc = mixed_document(rng, 8);
    CompressionConfig base;
    base.chunk_size = 2;
    base.target_rate = 0.5;

    CompressionConfig scaled = base;
    scaled.alpha = 2.0;
    scaled.beta = 2.0;
    CompressionConfig zero = base;
    zero.alpha = 0.0;
    zero.beta = 0.0;
    CompressionConfig skewed = base;
    skewed.alpha = 3.0;
    skewed.beta = 1.0;
    CompressionConfig quarter = base;
    quarter.alpha = 0.75;
    quarter.beta = 0.25;

    auto dump = [&](const CompressionConfig& cfg) {
        return result_to_json(compress_to_target(doc, nullptr, cfg)).dump();
    };
    CHECK(dump(scaled) == dump(base));
    CHECK(dump(zero) == dump(base));
    CHECK(dump(skewed) == dump(quarter));
}

TEST_CASE("configuration and input validation") {
    Document doc = parse_document("The economy grows.");
    CompressionConfig cfg;

    cfg.target_rate = 0.0;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);
    cfg.target_rate = -0.5;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);
    cfg.target_rate = 1.5;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);

    cfg = CompressionConfig{};
    cfg.level = 0;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);
    cfg.level = 6;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);

    cfg = CompressionConfig{};
    cfg.chunk_size = 0;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);

    cfg = CompressionConfig{};
    cfg.decay_lambda = -1.0;
    CHECK_THROWS_AS(compress_to_target(doc, nullptr, cfg), std::invalid_argument);

    CHECK_THROWS_AS(compress_to_target(Document{}, nullptr, CompressionConfig{}),
                    std::invalid_argument);
}

TEST_CASE("identical runs produce byte-identical traces") {
    uint64_t rng1 = 42, rng2 = 42;
    Document doc1 = mixed_document(rng1, 12);
    Document doc2 = mixed_document(rng2, 12);
    CompressionConfig cfg;
    cfg.chunk_size = 3;
    cfg.target_rate = 0.4;
    cfg.mode = CompressionMode::performance;

    std::string a = result_to_json(compress_to_target(doc1, nullptr, cfg)).dump();
    std::string b = result_to_json(compress_to_target(doc2, nullptr, cfg)).dump();
    CHECK(a == b);
}

TEST_CASE("a query steers relevance-weighted selection") {
    Document doc = parse_document(
        "The economy of the region grows steadily. The old bridge crosses the "
        "wide river. Cats sleep in the warm market square.");
    CompressionConfig cfg;
    cfg.chunk_size = 1;
    cfg.target_rate = 0.4;
    std::string query = "economy region growth economy";

    CompressionResult r = compress_to_target(doc, &query, cfg);
    REQUIRE(r.retained_k == 1);
    auto ids = retained_ids(r);
    REQUIRE(ids.size() == 1);
    CHECK(*ids.begin() == 0);
    CHECK(r.per_chunk[0].score.rel > r.per_chunk[1].score.rel);
    CHECK(r.per_chunk[0].score.rel > r.per_chunk[2].score.rel);
}
