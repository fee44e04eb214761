// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "pshrink/segment.hpp"
#include "pshrink/tagger.hpp"

using namespace pshrink;

static Sentence tag_one(const std::string& text) {
    auto ss = split_sentences(text);
    REQUIRE(ss.size() == 1);
    return pos_tag(ss[0], builtin_lexicon());
}

static std::vector<Pos> tags_of(const Sentence& s) {
    std::vector<Pos> out;
    for (const auto& t : s.tokens) out.push_back(t.pos);
    return out;
}

TEST_CASE("resolution order: lexicon, suffix, capitalization, default") {
    auto s = tag_one("The economy grows.");
    CHECK(tags_of(s) == std::vector<Pos>{Pos::determiner, Pos::noun, Pos::verb,
                                         Pos::punctuation});
    CHECK(s.tokens[1].priority == 4);
    CHECK(s.tokens[2].priority == 3);
    CHECK(s.tokens[0].priority == 0);

    // Lexicon entry wins.
    CHECK(tag_one("see economy now").tokens[1].pos == Pos::noun);
    // -ly suffix rule: a real adverb and an invented word both resolve.
    CHECK(tag_one("it moved quickly today").tokens[2].pos == Pos::adverb);
    CHECK(tag_one("it moved zorply today").tokens[2].pos == Pos::adverb);
    // Capitalized mid-sentence unknown word reads as a proper name -> noun.
    CHECK(tag_one("we met Blarnak there").tokens[2].pos == Pos::noun);
    // Unknown lowercase word defaults to noun.
    CHECK(tag_one("the blorptex hummed").tokens[1].pos == Pos::noun);
}

TEST_CASE("suffix heuristics cover common morphology") {
    auto lex = builtin_lexicon();
    auto pos_of = [&](const std::string& w) {
        Sentence s;
        s.tokens.push_back({w, 0, Pos::other, 0});
        s.tokens.push_back({w, 1, Pos::other, 0});
        return pos_tag(s, lex).tokens[1].pos;  // index 1: not sentence-initial
    };
    CHECK(pos_of("zorptation") == Pos::noun);
    CHECK(pos_of("blempness") == Pos::noun);
    CHECK(pos_of("vorpize") == Pos::verb);
    CHECK(pos_of("quandling") == Pos::verb);
    CHECK(pos_of("frumined") == Pos::verb);
    CHECK(pos_of("glorptous") == Pos::adjective);
    CHECK(pos_of("zemical") == Pos::adjective);
    CHECK(pos_of("snorpful") == Pos::adjective);
    // Too short for the suffix to count.
    CHECK(pos_of("red") == Pos::adjective);   // lexicon entry, not -ed rule
    CHECK(pos_of("bed") == Pos::noun);
    // Capitalized mid-sentence words skip suffix morphology: name reading.
    CHECK(pos_of("Dudley") == Pos::noun);
}

TEST_CASE("numbers and punctuation tag directly") {
    auto s = tag_one("In 2019, growth hit 5.2 percent.");
    CHECK(s.tokens[1].pos == Pos::numeral);
    CHECK(s.tokens[2].pos == Pos::punctuation);
    CHECK(s.tokens[5].pos == Pos::numeral);
    CHECK(tag_one("totals reached 10,295 today").tokens[2].pos == Pos::numeral);
    auto letters = tag_one("a x b");
    CHECK(letters.tokens[0].pos == Pos::determiner);
    CHECK(letters.tokens[1].pos == Pos::noun);  // unknown single letter
}

TEST_CASE("plural and 3rd-person forms resolve through stems") {
    auto s = tag_one("Cats sleep.");
    CHECK(tags_of(s) == std::vector<Pos>{Pos::noun, Pos::verb, Pos::punctuation});
    CHECK(tag_one("the economies grew").tokens[1].pos == Pos::noun);
    CHECK(tag_one("she watches birds").tokens[1].pos == Pos::verb);
}

TEST_CASE("proper mask protects name runs") {
    auto lex = builtin_lexicon();
    auto s = tag_one("We asked Dudley Fire Department for help.");
    auto mask = proper_mask(s, lex);
    REQUIRE(mask.size() == s.tokens.size());
    CHECK_FALSE(mask[0]);  // "We"
    CHECK_FALSE(mask[1]);
    CHECK(mask[2]);  // Dudley
    CHECK(mask[3]);  // Fire
    CHECK(mask[4]);  // Department
    CHECK_FALSE(mask[5]);

    auto t = tag_one("Blarnak runs the mill.");
    auto m2 = proper_mask(t, lex);
    CHECK(m2[0]);  // unknown capitalized sentence-initial word

    auto u = tag_one("The economy grows.");
    auto m3 = proper_mask(u, lex);
    CHECK_FALSE(m3[0]);  // known determiner heads no name run
    CHECK_FALSE(m3[1]);
}

TEST_CASE("relation extraction finds triggers with sides") {
    auto lex = builtin_lexicon();
    auto s = extract_relations(tag_one("He left because it rained."), lex);
    REQUIRE(s.relations.size() >= 1);
    const auto& ann = s.relations[0];
    CHECK(ann.kind == RelationKind::causal);
    CHECK(ann.trigger_token == 2);
    CHECK(ann.retained_side == RetainedSide::after);

    auto t = extract_relations(
        tag_one("The economy, despite facing challenges, continues to grow."), lex);
    REQUIRE(t.relations.size() >= 1);
    CHECK(t.relations[0].kind == RelationKind::concessive);
    CHECK(t.relations[0].retained_side == RetainedSide::both);

    auto u = extract_relations(tag_one("Sales rose compared to last year."), lex);
    bool found = false;
    for (const auto& a : u.relations) {
        if (a.kind == RelationKind::comparative) {
            found = true;
            CHECK(a.trigger_len == 2);
        }
    }
    CHECK(found);
}

TEST_CASE("destructive relations need verbs on both sides") {
    auto lex = builtin_lexicon();
    // "so" as intensifier: no verb after -> no result annotation.
    auto s = extract_relations(tag_one("It was so cold."), lex);
    for (const auto& a : s.relations) CHECK(a.kind != RelationKind::result);
    // "so" linking clauses: annotated.
    auto t = extract_relations(tag_one("It rained, so the match stopped."), lex);
    bool found = false;
    for (const auto& a : t.relations) found = found || a.kind == RelationKind::result;
    CHECK(found);
}
