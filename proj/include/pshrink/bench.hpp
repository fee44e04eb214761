// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end latency harness: compare sending the original prompt with
// compressing first and sending the shorter one. Latencies come from the
// provider (simulated for mocks, wall clock for real backends), so mock
// runs are exactly reproducible.
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pshrink/distill.hpp"
#include "pshrink/text.hpp"

namespace pshrink {

struct BenchOptions {
    int response_tokens = 200;  // reply budget passed to the provider
};

// A compression step: input prompt -> (compressed text, seconds spent).
using CompressFn = std::function<std::pair<std::string, double>(const std::string&)>;

inline CompressFn identity_pipeline() {
    return [](const std::string& prompt) { return std::make_pair(prompt, 0.0); };
}

struct PromptTiming {
    int id = 0;
    int original_tokens = 0;
    int compressed_tokens = 0;
    double compress_seconds = 0.0;
    double original_seconds = 0.0;    // T(original prompt)
    double compressed_seconds = 0.0;  // T(compress) + T(compressed prompt)
};

struct BenchReport {
    std::vector<PromptTiming> prompts;  // successfully timed prompts
    std::vector<int> errata;            // prompt ids excluded by provider failure
    double mean_original_seconds = 0.0;
    double mean_compressed_seconds = 0.0;
    double speedup = 0.0;
};

// Mean-over-mean speedup from recorded end-to-end timings.
inline double speedup_from_timings(const std::vector<double>& original_seconds,
                                   const std::vector<double>& compressed_seconds) {
    if (original_seconds.empty() || original_seconds.size() != compressed_seconds.size()) {
        throw std::invalid_argument("timing lists must be non-empty and aligned");
    }
    double so = 0.0, sc = 0.0;
    for (double v : original_seconds) so += v;
    for (double v : compressed_seconds) sc += v;
    if (!(sc > 0.0)) throw std::invalid_argument("compressed timings must be positive");
    return so / sc;
}

inline BenchReport latency_bench(const CompressFn& compress, LLMProvider& llm,
                                 const std::vector<std::string>& prompts,
                                 const BenchOptions& options = {}) {
    if (prompts.empty()) throw std::invalid_argument("no prompts to benchmark");
    BenchReport report;
    std::vector<double> orig, comp;
    for (size_t i = 0; i < prompts.size(); ++i) {
        PromptTiming t;
        t.id = static_cast<int>(i);
        try {
            auto [text, seconds] = compress(prompts[i]);
            t.compress_seconds = seconds;
            t.original_tokens = count_tokens(prompts[i]);
            t.compressed_tokens = count_tokens(text);
            GenerationResult full = llm.generate(prompts[i], options.response_tokens);
            GenerationResult small = llm.generate(text, options.response_tokens);
            t.original_seconds = full.latency_seconds;
            t.compressed_seconds = t.compress_seconds + small.latency_seconds;
        } catch (const std::exception&) {
            report.errata.push_back(t.id);
            continue;
        }
        orig.push_back(t.original_seconds);
        comp.push_back(t.compressed_seconds);
        report.prompts.push_back(t);
    }
    if (report.prompts.empty()) {
        throw std::runtime_error("every prompt failed; nothing to report");
    }
    report.speedup = speedup_from_timings(orig, comp);
    double so = 0.0, sc = 0.0;
    for (double v : orig) so += v;
    for (double v : comp) sc += v;
    report.mean_original_seconds = so / static_cast<double>(orig.size());
    report.mean_compressed_seconds = sc / static_cast<double>(comp.size());
    return report;
}

inline nlohmann::json bench_report_to_json(const BenchReport& report) {
    nlohmann::json prompts = nlohmann::json::array();
    for (const auto& t : report.prompts) {
        prompts.push_back(nlohmann::json{{"id", t.id},
                                         {"original_tokens", t.original_tokens},
                                         {"compressed_tokens", t.compressed_tokens},
                                         {"compress_seconds", t.compress_seconds},
                                         {"original_seconds", t.original_seconds},
                                         {"compressed_seconds", t.compressed_seconds}});
    }
    return nlohmann::json{{"errata", report.errata},
                          {"mean_compressed_seconds", report.mean_compressed_seconds},
                          {"mean_original_seconds", report.mean_original_seconds},
                          {"prompts", prompts},
                          {"speedup", report.speedup}};
}

}  // namespace pshrink
