// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Deletion-based sentence simplification at five aggressiveness levels.
// Every level's rule set contains the previous level's rules:
//   1: drop prepositional chains that trail a noun
//   2: + drop non-essential adjectives/adverbs, and gerunds after prepositions
//   3: + reduce comma/dash parentheticals, relative clauses, possessive
//        determiners, and auxiliary verb chains
//   4: + keep only the retained side of discourse relations
//   5: + extract the bare subject/verb/object skeleton
// Rules only ever delete tokens (output is a subsequence of the input), never
// drop name runs or numbers, never empty a sentence, and are applied to a
// fixpoint: region censuses and relation annotations are refreshed from the
// current token stream every pass, so re-applying simplify to its own output
// changes nothing.
#pragma once

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pshrink/tagger.hpp"
#include "pshrink/text.hpp"

namespace pshrink {

struct RuleSet {
    int level = 3;
    bool pp_removal = true;          // level >= 1
    bool gerund_after_prep = false;  // level >= 2
    bool modifier_removal = false;   // level >= 2
    bool span_reduction = false;     // level >= 3
    bool relative_clauses = false;   // level >= 3
    bool possessives = false;        // level >= 3
    bool verb_chains = false;        // level >= 3
    bool relation_sides = false;     // level >= 4
    bool skeleton_extraction = false;  // level == 5
};

inline RuleSet make_ruleset(int level) {
    if (level < 1 || level > 5) throw std::invalid_argument("level must be in [1,5]");
    RuleSet r;
    r.level = level;
    r.pp_removal = true;
    r.gerund_after_prep = level >= 2;
    r.modifier_removal = level >= 2;
    r.span_reduction = level >= 3;
    r.relative_clauses = level >= 3;
    r.possessives = level >= 3;
    r.verb_chains = level >= 3;
    r.relation_sides = level >= 4;
    r.skeleton_extraction = level >= 5;
    return r;
}

namespace detail {

inline const std::unordered_set<std::string>& negation_words() {
    static const std::unordered_set<std::string> kSet = {
        "not", "never", "no", "none", "neither", "nor",
    };
    return kSet;
}

inline const std::unordered_set<std::string>& possessive_determiners() {
    static const std::unordered_set<std::string> kSet = {
        "my", "your", "his", "her", "its", "our", "their",
    };
    return kSet;
}

inline const std::unordered_set<std::string>& copula_verbs() {
    static const std::unordered_set<std::string> kSet = {
        "is",     "am",      "are",     "was",    "were",   "be",      "been",
        "being",  "seem",    "seems",   "seemed", "appear", "appears", "appeared",
        "become", "becomes", "became",  "becoming", "remain", "remains",
        "remained", "look",  "looks",   "looked", "feel",   "feels",   "felt",
        "sound",  "sounds",  "sounded", "stay",   "stays",  "stayed",
    };
    return kSet;
}

inline const std::unordered_set<std::string>& relative_pronouns() {
    static const std::unordered_set<std::string> kSet = {"which", "who", "whom", "whose"};
    return kSet;
}

inline bool is_terminal_punct(const Token& t) {
    return t.pos == Pos::punctuation &&
           (t.text == "." || t.text == "!" || t.text == "?");
}

inline bool is_delimiter(const Token& t) {
    return t.pos == Pos::punctuation &&
           (t.text == "," || t.text == "—" || t.text == "–" || t.text == "--");
}

// Context shared by all rules while simplifying one sentence. Protection is
// anchored to the input (name runs and numbers never stop being protected);
// the delimiter-region census and the relation annotations describe the
// *current* token stream and are refreshed before every pass.
struct SimplifyContext {
    const PosLexicon* lex = nullptr;
    std::unordered_set<int> protected_indices;  // name runs and numerals
    std::vector<int> region_by_pos;             // current position -> region id
    std::vector<int> region_content;            // region id -> count of priority>0
    std::vector<RelationAnnotation> relations;

    bool is_protected(const Token& t) const {
        return protected_indices.count(t.index) > 0;
    }

    bool lone_content_at(size_t pos) const {
        return region_content[region_by_pos[pos]] <= 1;
    }

    void refresh(const std::vector<Token>& cur) {
        region_by_pos.assign(cur.size(), 0);
        int region = 0;
        for (size_t i = 0; i < cur.size(); ++i) {
            if (is_delimiter(cur[i])) ++region;
            region_by_pos[i] = region;
        }
        region_content.assign(region + 1, 0);
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i].priority > 0) ++region_content[region_by_pos[i]];
        }
        Sentence probe;
        probe.tokens = cur;
        relations = extract_relations(probe, *lex).relations;
    }
};

inline SimplifyContext make_context(const Sentence& sentence, const PosLexicon& lex) {
    SimplifyContext ctx;
    ctx.lex = &lex;
    const auto& toks = sentence.tokens;
    auto proper = proper_mask(sentence, lex);
    for (size_t i = 0; i < toks.size(); ++i) {
        if (proper[i] || toks[i].pos == Pos::numeral) {
            ctx.protected_indices.insert(toks[i].index);
        }
    }
    return ctx;
}

// Applies one batch of deletions unless it would leave the sentence without
// any word token. Returns whether anything was deleted.
inline bool apply_deletions(std::vector<Token>& cur, const std::vector<bool>& drop) {
    bool any = false;
    int words_left = 0;
    for (size_t i = 0; i < cur.size(); ++i) {
        if (drop[i]) {
            any = true;
        } else if (cur[i].pos != Pos::punctuation) {
            ++words_left;
        }
    }
    if (!any || words_left == 0) return false;
    std::vector<Token> next;
    next.reserve(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) {
        if (!drop[i]) next.push_back(std::move(cur[i]));
    }
    cur = std::move(next);
    return true;
}

// Rule: a preposition directly after a noun opens a modifier chain; delete it
// up to the next punctuation, verb, protected token, or non-conjunction
// relation trigger. Infinitive "to", relation triggers, and prepositions
// after protected nouns never open a chain.
inline bool rule_pp_removal(std::vector<Token>& cur, const SimplifyContext& ctx) {
    bool changed = false;
    size_t i = 0;
    while (i < cur.size()) {
        const Token& t = cur[i];
        std::string folded = fold_case(t.text);
        bool opens = t.pos == Pos::preposition && i > 0 && cur[i - 1].pos == Pos::noun &&
                     !ctx.is_protected(t) && !ctx.is_protected(cur[i - 1]) &&
                     !ctx.lex->is_trigger_word(folded) &&
                     !(folded == "to" && i + 1 < cur.size() && cur[i + 1].pos == Pos::verb);
        if (!opens) {
            ++i;
            continue;
        }
        size_t j = i + 1;
        while (j < cur.size()) {
            const Token& u = cur[j];
            if (u.pos == Pos::punctuation || u.pos == Pos::verb || ctx.is_protected(u)) break;
            if (ctx.lex->is_trigger_word(fold_case(u.text)) && u.pos != Pos::conjunction) break;
            ++j;
        }
        std::vector<bool> drop(cur.size(), false);
        for (size_t k = i; k < j; ++k) drop[k] = true;
        if (apply_deletions(cur, drop)) {
            changed = true;  // cur shrank; rescan from the same position
        } else {
            i = j;
        }
    }
    return changed;
}

// Rule: drop an -ing verb that directly follows a preposition.
inline bool rule_gerund_after_prep(std::vector<Token>& cur, const SimplifyContext& ctx) {
    std::vector<bool> drop(cur.size(), false);
    bool any = false;
    for (size_t i = 1; i < cur.size(); ++i) {
        if (cur[i].pos == Pos::verb && cur[i - 1].pos == Pos::preposition &&
            !ctx.is_protected(cur[i]) && fold_case(cur[i].text).ends_with("ing")) {
            drop[i] = true;
            any = true;
        }
    }
    return any && apply_deletions(cur, drop);
}

// Rule: drop adjectives and adverbs unless essential. Essential modifiers are
// negations, relation triggers, protected tokens, predicative complements
// (reachable leftward over modifiers/commas/conjunctions to a copula), and
// the only content word of their delimiter region.
inline bool rule_modifier_removal(std::vector<Token>& cur, const SimplifyContext& ctx) {
    std::vector<bool> drop(cur.size(), false);
    bool any = false;
    for (size_t i = 0; i < cur.size(); ++i) {
        const Token& t = cur[i];
        if (t.pos != Pos::adjective && t.pos != Pos::adverb) continue;
        std::string folded = fold_case(t.text);
        if (ctx.is_protected(t) || negation_words().count(folded) ||
            ctx.lex->is_trigger_word(folded) || ctx.lone_content_at(i)) {
            continue;
        }
        bool predicative = false;
        for (size_t back = i; back-- > 0;) {
            const Token& b = cur[back];
            if (b.pos == Pos::adjective || b.pos == Pos::adverb ||
                b.pos == Pos::conjunction || b.text == ",") {
                continue;
            }
            predicative = b.pos == Pos::verb && copula_verbs().count(fold_case(b.text)) > 0;
            break;
        }
        if (predicative) continue;
        drop[i] = true;
        any = true;
    }
    return any && apply_deletions(cur, drop);
}

// Rule: reduce a parenthetical between paired commas/dashes. Connective-led
// spans keep the connective plus the first noun after it; plain appositives
// are removed whole. Spans containing a verb are clauses, not parentheticals,
// and single-token spans are list elements; both are left alone.
inline bool rule_span_reduction(std::vector<Token>& cur, const SimplifyContext& ctx) {
    bool changed = false;
    size_t scan = 0;
    while (true) {
        size_t d1 = cur.size();
        for (size_t i = scan; i < cur.size(); ++i) {
            if (is_delimiter(cur[i])) {
                d1 = i;
                break;
            }
        }
        if (d1 >= cur.size()) break;
        size_t d2 = cur.size();
        for (size_t i = d1 + 1; i < cur.size(); ++i) {
            if (is_delimiter(cur[i])) {
                d2 = i;
                break;
            }
        }
        if (d2 >= cur.size()) break;
        bool has_verb = false;
        for (size_t i = d1 + 1; i < d2; ++i) has_verb = has_verb || cur[i].pos == Pos::verb;
        size_t span_len = d2 - d1 - 1;
        if (has_verb || span_len == 0) {
            scan = d2;  // a clause or nothing; try the next pair
            continue;
        }
        const Token& lead = cur[d1 + 1];
        bool connective = lead.pos == Pos::preposition || lead.pos == Pos::conjunction ||
                          ctx.lex->is_trigger_word(fold_case(lead.text));
        std::vector<bool> drop(cur.size(), false);
        if (connective) {
            drop[d1] = drop[d2] = true;
            bool noun_kept = false;
            for (size_t i = d1 + 2; i < d2; ++i) {
                const Token& u = cur[i];
                if (ctx.is_protected(u) || negation_words().count(fold_case(u.text))) continue;
                if (!noun_kept && u.pos == Pos::noun) {
                    noun_kept = true;
                    continue;
                }
                drop[i] = true;
            }
        } else if (span_len == 1) {
            scan = d2;
            continue;
        } else {
            drop[d1] = drop[d2] = true;
            for (size_t i = d1 + 1; i < d2; ++i) {
                if (!ctx.is_protected(cur[i])) drop[i] = true;
            }
        }
        if (apply_deletions(cur, drop)) {
            changed = true;
            scan = d1;
        } else {
            scan = d2;
        }
    }
    return changed;
}

// Rule: drop a relative clause introduced by ", which/who/whom/whose" through
// the next comma (inclusive) or the end of the sentence.
inline bool rule_relative_clauses(std::vector<Token>& cur, const SimplifyContext& ctx) {
    bool changed = false;
    size_t i = 0;
    while (i < cur.size()) {
        if (!(cur[i].text == "," && i + 1 < cur.size() &&
              relative_pronouns().count(fold_case(cur[i + 1].text)))) {
            ++i;
            continue;
        }
        size_t end = i + 1;
        while (end < cur.size() && cur[end].text != "," && !is_terminal_punct(cur[end])) {
            ++end;
        }
        std::vector<bool> drop(cur.size(), false);
        for (size_t k = i; k < end; ++k) drop[k] = !ctx.is_protected(cur[k]);
        if (end < cur.size() && cur[end].text == ",") drop[end] = true;
        if (apply_deletions(cur, drop)) {
            changed = true;
        } else {
            i = end;
        }
    }
    return changed;
}

// Rule: drop possessive determiners (articles stay until level 5 decides).
inline bool rule_possessives(std::vector<Token>& cur, const SimplifyContext& ctx) {
    std::vector<bool> drop(cur.size(), false);
    bool any = false;
    for (size_t i = 0; i < cur.size(); ++i) {
        if (cur[i].pos == Pos::determiner && !ctx.is_protected(cur[i]) &&
            possessive_determiners().count(fold_case(cur[i].text))) {
            drop[i] = true;
            any = true;
        }
    }
    return any && apply_deletions(cur, drop);
}

// Membership for an auxiliary/catenative verb run.
inline bool chain_member(const std::vector<Token>& cur, size_t i) {
    const Token& t = cur[i];
    if (t.pos == Pos::verb || t.pos == Pos::adverb) return true;
    std::string folded = fold_case(t.text);
    if (negation_words().count(folded)) return true;
    return folded == "to" && i + 1 < cur.size() && cur[i + 1].pos == Pos::verb;
}

// Rule: inside a verb chain ("continues to grow", "wanted to start to run")
// keep only the last verb plus negations; auxiliaries and "to" go.
inline bool rule_verb_chains(std::vector<Token>& cur, const SimplifyContext& ctx) {
    std::vector<bool> drop(cur.size(), false);
    bool any = false;
    size_t i = 0;
    while (i < cur.size()) {
        if (cur[i].pos != Pos::verb) {
            ++i;
            continue;
        }
        size_t end = i;
        while (end < cur.size() && chain_member(cur, end)) ++end;
        while (end > i && cur[end - 1].pos != Pos::verb) --end;  // trim the tail
        size_t last_verb = i;
        int verbs = 0;
        for (size_t k = i; k < end; ++k) {
            if (cur[k].pos == Pos::verb) {
                last_verb = k;
                ++verbs;
            }
        }
        if (verbs >= 2) {
            for (size_t k = i; k < end; ++k) {
                bool aux_verb = cur[k].pos == Pos::verb && k != last_verb;
                bool infinitive_to = fold_case(cur[k].text) == "to";
                if ((aux_verb || infinitive_to) && !ctx.is_protected(cur[k])) {
                    drop[k] = true;
                    any = true;
                }
            }
        }
        i = end > i ? end : i + 1;
    }
    return any && apply_deletions(cur, drop);
}

// Rule: apply discourse-relation retention. A mid-sentence trigger keeps the
// retained side and drops the trigger with the other side; a sentence-initial
// trigger of an after-side relation keeps only its own clause (up to the
// first comma). Protected tokens and terminal punctuation always survive.
inline bool rule_relation_sides(std::vector<Token>& cur, const SimplifyContext& ctx) {
    bool changed = false;
    // Annotations reference tokens by document index; resolve against the
    // live vector each time because earlier firings shift positions.
    for (const auto& ann : ctx.relations) {
        if (ann.retained_side == RetainedSide::both) continue;
        size_t p = cur.size();
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i].index == ann.trigger_token) {
                p = i;
                break;
            }
        }
        if (p >= cur.size()) continue;  // trigger already deleted
        size_t trig_end = p + 1;
        while (trig_end < cur.size() &&
               cur[trig_end].index < ann.trigger_token + ann.trigger_len) {
            ++trig_end;
        }
        bool initial = true;
        for (size_t i = 0; i < p; ++i) initial = initial && cur[i].pos == Pos::punctuation;
        std::vector<bool> drop(cur.size(), false);
        auto drop_range = [&](size_t from, size_t to) {
            for (size_t k = from; k < to && k < cur.size(); ++k) {
                drop[k] = !ctx.is_protected(cur[k]) && !is_terminal_punct(cur[k]);
            }
        };
        if (ann.retained_side == RetainedSide::before) {
            if (p == 0) continue;
            drop_range(p, cur.size());
        } else if (initial) {
            size_t clause_end = trig_end;
            while (clause_end < cur.size() && cur[clause_end].text != ",") ++clause_end;
            drop_range(0, trig_end);
            drop_range(clause_end, cur.size());
        } else {
            drop_range(0, trig_end);
        }
        if (apply_deletions(cur, drop)) changed = true;
    }
    return changed;
}

// Rule: level-5 skeleton — keep the subject noun (with its article), the main
// verb of the first chain with its negations, the object noun, protected
// tokens, and terminal punctuation.
inline bool rule_skeleton(std::vector<Token>& cur, const SimplifyContext& ctx) {
    const size_t n = cur.size();
    std::vector<bool> keep(n, false);
    for (size_t i = 0; i < n; ++i) {
        if (ctx.is_protected(cur[i])) keep[i] = true;
    }
    if (n > 0 && is_terminal_punct(cur[n - 1])) keep[n - 1] = true;

    size_t chain_begin = n;
    for (size_t i = 0; i < n; ++i) {
        if (cur[i].pos == Pos::verb) {
            chain_begin = i;
            break;
        }
    }
    auto keep_article_of = [&](size_t noun_at) {
        for (size_t back = noun_at; back-- > 0;) {
            const Token& b = cur[back];
            if (b.pos == Pos::adjective || b.pos == Pos::numeral) continue;
            std::string f = fold_case(b.text);
            if (b.pos == Pos::determiner && (f == "the" || f == "a" || f == "an")) {
                keep[back] = true;
            }
            break;
        }
    };
    if (chain_begin < n) {
        size_t chain_end = chain_begin;
        while (chain_end < n && chain_member(cur, chain_end)) ++chain_end;
        size_t main_verb = chain_begin;
        for (size_t k = chain_begin; k < chain_end; ++k) {
            if (cur[k].pos == Pos::verb) main_verb = k;
            if (negation_words().count(fold_case(cur[k].text))) keep[k] = true;
        }
        keep[main_verb] = true;
        for (size_t i = 0; i < chain_begin; ++i) {
            if (cur[i].pos == Pos::noun) {
                keep[i] = true;
                keep_article_of(i);
                break;
            }
        }
        for (size_t i = chain_end; i < n; ++i) {
            if (cur[i].pos == Pos::noun) {
                keep[i] = true;
                break;
            }
        }
    } else {
        bool found = false;
        for (size_t i = 0; i < n; ++i) {
            if (cur[i].pos == Pos::noun) {
                keep[i] = true;
                keep_article_of(i);
                found = true;
                break;
            }
        }
        if (!found) {
            size_t best = n;
            for (size_t i = 0; i < n; ++i) {
                if (cur[i].pos == Pos::punctuation) continue;
                if (best == n || cur[i].priority > cur[best].priority) best = i;
            }
            if (best < n) keep[best] = true;
        }
    }
    std::vector<bool> drop(n, false);
    bool any = false;
    for (size_t i = 0; i < n; ++i) {
        drop[i] = !keep[i];
        any = any || drop[i];
    }
    return any && apply_deletions(cur, drop);
}

}  // namespace detail

// Simplifies one tagged sentence. Output tokens are a subsequence of the
// input (document indices preserved); the surface form is regenerated on
// demand and relation annotations are re-extracted for the survivors.
inline Sentence simplify(const Sentence& sentence, const RuleSet& rules,
                         const PosLexicon& lex) {
    if (sentence.tokens.empty()) return sentence;
    detail::SimplifyContext ctx = detail::make_context(sentence, lex);
    std::vector<Token> cur = sentence.tokens;
    // Every changed pass deletes at least one token, so n+1 passes suffice.
    const size_t max_passes = sentence.tokens.size() + 1;
    for (size_t pass = 0; pass < max_passes; ++pass) {
        ctx.refresh(cur);
        bool changed = false;
        if (rules.pp_removal) changed |= detail::rule_pp_removal(cur, ctx);
        if (rules.gerund_after_prep) changed |= detail::rule_gerund_after_prep(cur, ctx);
        if (rules.modifier_removal) changed |= detail::rule_modifier_removal(cur, ctx);
        if (rules.span_reduction) changed |= detail::rule_span_reduction(cur, ctx);
        if (rules.relative_clauses) changed |= detail::rule_relative_clauses(cur, ctx);
        if (rules.possessives) changed |= detail::rule_possessives(cur, ctx);
        if (rules.verb_chains) changed |= detail::rule_verb_chains(cur, ctx);
        if (rules.relation_sides) changed |= detail::rule_relation_sides(cur, ctx);
        if (rules.skeleton_extraction) changed |= detail::rule_skeleton(cur, ctx);
        if (!changed) break;
    }
    Sentence out;
    out.tokens = std::move(cur);
    out.raw.clear();
    return extract_relations(out, lex);
}

// Applies the rule stage to every sentence of a chunk.
inline Chunk token_compress(const Chunk& chunk, const RuleSet& rules,
                            const PosLexicon& lex) {
    Chunk out;
    out.id = chunk.id;
    out.token_count = 0;
    out.sentences.reserve(chunk.sentences.size());
    for (const auto& s : chunk.sentences) {
        Sentence tagged = extract_relations(pos_tag(s, lex), lex);
        Sentence slim = simplify(tagged, rules, lex);
        out.token_count += static_cast<int>(slim.tokens.size());
        out.sentences.push_back(std::move(slim));
    }
    return out;
}

}  // namespace pshrink
