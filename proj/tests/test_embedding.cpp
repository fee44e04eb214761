// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "pshrink/embedding.hpp"

using namespace pshrink;

TEST_CASE("cosine similarity basics") {
    std::vector<float> x = {1.0f, 0.0f};
    std::vector<float> y = {0.0f, 1.0f};
    std::vector<float> z = {-1.0f, 0.0f};
    std::vector<float> zero = {0.0f, 0.0f};

    CHECK(cosine(x, x) == Catch::Approx(1.0));
    CHECK(cosine(x, y) == Catch::Approx(0.0));
    CHECK(cosine(x, z) == Catch::Approx(-1.0));
    CHECK(cosine(x, zero) == 0.0);
    CHECK(cosine(zero, zero) == 0.0);
    std::vector<float> longer = {1.0f, 0.0f, 0.0f};
    CHECK_THROWS_AS(cosine(x, longer), std::invalid_argument);
}

TEST_CASE("empty text embeds to the zero vector") {
    HashedBowEmbedder emb;
    CHECK(emb.dimension() == 512);
    auto v = emb.embed("");
    REQUIRE(v.size() == 512);
    for (float x : v) CHECK(x == 0.0f);
    CHECK(cosine(v, emb.embed("anything")) == 0.0);
}

TEST_CASE("non-empty embeddings are unit length and self-similar") {
    HashedBowEmbedder emb;
    for (const char* text : {"Cats sleep.", "the economy grows",
                             "a b c d e f g", "10,295 tokens"}) {
        auto v = emb.embed(text);
        double norm = 0.0;
        for (float x : v) norm += static_cast<double>(x) * x;
        CHECK(norm == Catch::Approx(1.0).epsilon(1e-6));
        CHECK(cosine(v, emb.embed(text)) == Catch::Approx(1.0));
    }
}

TEST_CASE("bag-of-words: token order and case do not matter") {
    HashedBowEmbedder emb;
    CHECK(emb.embed("alpha beta gamma") == emb.embed("gamma alpha beta"));
    CHECK(emb.embed("Alpha BETA gamma") == emb.embed("alpha beta GAMMA"));
    // Separate instances agree too (no hidden state).
    HashedBowEmbedder other;
    CHECK(emb.embed("alpha beta gamma") == other.embed("alpha beta gamma"));
}

TEST_CASE("disjoint vocabularies without bin collisions are orthogonal") {
    HashedBowEmbedder emb;
    std::vector<std::string> left = {"alpha", "beta"};
    std::vector<std::string> right = {"gamma", "delta"};
    std::set<size_t> left_bins, right_bins;
    for (const auto& w : left) left_bins.insert(emb.bin_of(w));
    for (const auto& w : right) right_bins.insert(emb.bin_of(w));
    // Guard the construction: the two vocabularies must not share a bin,
    // otherwise pick different words.
    for (size_t b : left_bins) REQUIRE(right_bins.count(b) == 0);
    CHECK(cosine(emb.embed("alpha beta"), emb.embed("gamma delta")) == 0.0);
}

TEST_CASE("repeated terms raise their bin proportionally") {
    HashedBowEmbedder emb;
    auto v = emb.embed("cat cat dog");
    size_t cat = emb.bin_of("cat");
    size_t dog = emb.bin_of("dog");
    REQUIRE(cat != dog);
    CHECK(v[cat] == Catch::Approx(2.0 * v[dog]).epsilon(1e-6));
}

TEST_CASE("a registered corpus reweights rare terms above common ones") {
    HashedBowEmbedder emb;
    emb.register_corpus({"the cat", "the dog"});
    // df(the)=2 of N=2 -> idf 1; df(cat)=1 -> idf log(3/2)+1.
    auto v = emb.embed("the cat");
    size_t the_bin = emb.bin_of("the");
    size_t cat_bin = emb.bin_of("cat");
    REQUIRE(the_bin != cat_bin);
    double expected_ratio = std::log(3.0 / 2.0) + 1.0;
    CHECK(v[cat_bin] / v[the_bin] == Catch::Approx(expected_ratio).epsilon(1e-6));

    // Without a corpus both terms weigh the same.
    HashedBowEmbedder plain;
    auto u = plain.embed("the cat");
    CHECK(u[plain.bin_of("the")] == Catch::Approx(u[plain.bin_of("cat")]));
}

TEST_CASE("custom dimensions are honored") {
    HashedBowEmbedder tiny(8);
    CHECK(tiny.dimension() == 8);
    CHECK(tiny.embed("hello world").size() == 8);
    CHECK(tiny.bin_of("hello") < 8);
    CHECK_THROWS_AS(HashedBowEmbedder(0), std::invalid_argument);
}

TEST_CASE("provider interface exposes a stable identity") {
    HashedBowEmbedder emb;
    const EmbeddingProvider& provider = emb;
    CHECK(provider.name() == "hashed-bow");
    CHECK(provider.dimension() == 512);
    CHECK(provider.embed("x").size() == 512);
}
