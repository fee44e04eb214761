// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "pshrink/ngram.hpp"
#include "pshrink/segment.hpp"

using namespace pshrink;

namespace {

Chunk chunk_of(const std::string& text) {
    Document doc = parse_document(text);
    auto chunks = split_to_chunks(doc.sentences, 1000);
    REQUIRE(chunks.size() == 1);
    return chunks[0];
}

}  // namespace

TEST_CASE("bigram counts on a four-token corpus match hand arithmetic") {
    NGramModel model = train_lm({parse_document("a b a b")}, 2, 1.0);
    // Vocabulary: a, b, and the unknown symbol.
    CHECK(model.vocabulary_size() == 3);
    // count(a->b)=2 of count(a)=2, so (2+1)/(2+3).
    CHECK(model.probability({"a"}, "b") == Catch::Approx(3.0 / 5.0).epsilon(1e-12));
    // One sentence start, always followed by a.
    CHECK(model.probability({NGramModel::kStartSymbol}, "a") ==
          Catch::Approx(0.5).epsilon(1e-12));
    // Perplexity of "a b": exp(-(ln(1/2)+ln(3/5))/2) = sqrt(10/3).
    CHECK(calc_perplexity(chunk_of("a b"), model) ==
          Catch::Approx(std::sqrt(10.0 / 3.0)).epsilon(1e-9));
}

TEST_CASE("single-symbol corpus approaches certainty as smoothing vanishes") {
    NGramModel model = train_lm({parse_document("a a a")}, 1, 1e-9);
    CHECK(model.probability({}, "a") == Catch::Approx(1.0).epsilon(1e-6));
    CHECK(calc_perplexity(chunk_of("a a"), model) == Catch::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("empty corpus yields the one-symbol model with perplexity 1") {
    NGramModel model = train_lm({}, 3, 1.0);
    CHECK(model.vocabulary_size() == 1);
    // Everything maps to the unknown symbol, which is certain: ppl exactly 1.
    CHECK(calc_perplexity(chunk_of("anything at all"), model) == Catch::Approx(1.0));
}

TEST_CASE("uniform model over V symbols has perplexity V") {
    NGramModel model(1, 1.0);
    for (const char* w : {"w1", "w2", "w3", "w4", "w5", "w6", "w7"}) model.add_word(w);
    CHECK(model.vocabulary_size() == 8);
    CHECK(calc_perplexity(chunk_of("w1 w5 zebra"), model) == Catch::Approx(8.0));
}

TEST_CASE("self-trained chunk approaches perplexity 1 in the small-k limit") {
    std::string text = "cats sleep deeply. dogs bark loudly.";
    NGramModel model = train_lm({parse_document(text)}, 3, 1e-12);
    CHECK(calc_perplexity(chunk_of(text), model) == Catch::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("perplexity is at least 1 on assorted inputs") {
    NGramModel model = train_lm({parse_document("the cat sat on the mat. the dog ran.")},
                                3, 1.0);
    for (const char* text : {"the cat", "completely unseen words here",
                             "the the the", "mat on sat cat the"}) {
        CHECK(calc_perplexity(chunk_of(text), model) >= 1.0);
    }
}

TEST_CASE("conditional probabilities over a context sum to one") {
    NGramModel model = train_lm({parse_document("a b a c a b")}, 2, 0.5);
    // Vocabulary is {a, b, c, unknown}; sum P(w | a) over all four must be 1.
    double sum = 0.0;
    for (const char* w : {"a", "b", "c", NGramModel::kUnknownSymbol}) {
        sum += model.probability({"a"}, w);
    }
    CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
    // Same for an unseen context (pure smoothing mass).
    sum = 0.0;
    for (const char* w : {"a", "b", "c", NGramModel::kUnknownSymbol}) {
        sum += model.probability({"zzz"}, w);
    }
    CHECK(sum == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("queries fold case like training does") {
    NGramModel model = train_lm({parse_document("The Cat Sat")}, 2, 1.0);
    CHECK(model.probability({"the"}, "cat") == model.probability({"The"}, "CAT"));
}

TEST_CASE("serialization round-trips counts, vocabulary, and version") {
    NGramModel model =
        train_lm({parse_document("the cat sat. the dog ran away quickly.")}, 3, 0.25);
    nlohmann::json j = model.to_json();
    CHECK(j.at("version") == 1);
    CHECK(j.at("order") == 3);
    CHECK(j.at("k") == 0.25);
    NGramModel back = NGramModel::from_json(j);
    CHECK(back.vocabulary_size() == model.vocabulary_size());
    CHECK(back.probability({"the"}, "cat") ==
          Catch::Approx(model.probability({"the"}, "cat")).epsilon(1e-15));
    Chunk probe = chunk_of("the cat ran");
    CHECK(calc_perplexity(probe, back) ==
          Catch::Approx(calc_perplexity(probe, model)).epsilon(1e-12));
    // Serialized form is stable: dump -> parse -> dump is byte-identical.
    CHECK(back.to_json().dump() == j.dump());

    nlohmann::json bad = j;
    bad["version"] = 99;
    CHECK_THROWS_AS(NGramModel::from_json(bad), std::runtime_error);
}

TEST_CASE("constructor and perplexity preconditions are enforced") {
    CHECK_THROWS_AS(NGramModel(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NGramModel(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NGramModel(3, -1.0), std::invalid_argument);
    NGramModel model(2, 1.0);
    Chunk empty;
    CHECK_THROWS_AS(calc_perplexity(empty, model), std::invalid_argument);
}
