// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// pshrink -- command line front end for the compression engine.
//
// Subcommands:
//   compress   reduce one document to a target token rate
//   distill    build a reward-weighted training dataset from a corpus
//   eval       score compression quality over a JSONL task file
//   bench      measure end-to-end latency and speedup
//
// Every subcommand accepts --config FILE (flat key = value lines).  Command
// line flags take precedence over config values, which take precedence over
// the built-in defaults.  Credentials are never written in configs: a config
// names an environment variable (for example provider.api.auth_env) and the
// token is read from the process environment at startup.
//
// Exit codes: 0 success, 2 ran to completion but the requested target rate
// was not met, 1 error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pshrink/bench.hpp"
#include "pshrink/compress.hpp"
#include "pshrink/config.hpp"
#include "pshrink/distill.hpp"
#include "pshrink/metrics.hpp"
#include "pshrink/providers.hpp"
#include "pshrink/version.hpp"

namespace fs = std::filesystem;

namespace {

// ---------------------------------------------------------------------------
// IO helpers
// ---------------------------------------------------------------------------

std::string read_stream(std::istream& in) {
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

// Reads the whole input document; "-" selects stdin.
std::string read_input(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read input file " + path);
    return read_stream(in);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file " + path.string());
    return read_stream(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file " + path);
    out << content;
    if (!out) throw std::runtime_error("failed while writing " + path);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        std::string_view t = pshrink::detail::trim(item);
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

// ---------------------------------------------------------------------------
// flag / config / default resolution: a flag given on the command line wins,
// then a key in the config file, then the built-in default already stored in
// the bound variable.
// ---------------------------------------------------------------------------

double pick_double(const CLI::Option* opt, double flag_value,
                   const pshrink::ConfigMap& cfg, const std::string& key,
                   double fallback) {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    return pshrink::get_double(cfg, key, fallback);
}

int pick_int(const CLI::Option* opt, int flag_value,
             const pshrink::ConfigMap& cfg, const std::string& key,
             int fallback) {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    return pshrink::get_int(cfg, key, fallback);
}

std::string pick_string(const CLI::Option* opt, const std::string& flag_value,
                        const pshrink::ConfigMap& cfg, const std::string& key,
                        const std::string& fallback) {
    if (opt != nullptr && opt->count() > 0) return flag_value;
    return pshrink::get_string(cfg, key, fallback);
}

pshrink::CompressionMode parse_mode(const std::string& mode) {
    if (mode == "standard") return pshrink::CompressionMode::standard;
    if (mode == "performance") return pshrink::CompressionMode::performance;
    throw std::invalid_argument("unknown mode '" + mode +
                                "' (expected standard or performance)");
}

// ---------------------------------------------------------------------------
// provider construction
// ---------------------------------------------------------------------------

// Embedding backend: local hashed bag-of-words by default, or a remote HTTP
// service when the config sets embedding.provider = http.
std::unique_ptr<pshrink::EmbeddingProvider> make_embedder(
    const pshrink::ConfigMap& cfg, int jobs) {
    const std::string kind = pshrink::get_string(cfg, "embedding.provider", "local");
    const int dimension = pshrink::get_int(cfg, "embedding.dimension", 512);
    if (kind == "local") {
        return std::make_unique<pshrink::HashedBowEmbedder>(dimension);
    }
    if (kind == "http") {
        pshrink::HttpProviderOptions opts;
        opts.name = "http-embedding";
        opts.endpoint = pshrink::get_string(cfg, "embedding.endpoint");
        if (opts.endpoint.empty()) {
            throw std::runtime_error(
                "embedding.provider = http requires embedding.endpoint");
        }
        opts.path = pshrink::get_string(cfg, "embedding.path", "/embed");
        opts.auth_env = pshrink::get_string(cfg, "embedding.auth_env");
        opts.dimension = dimension;
        opts.max_retries = pshrink::get_int(cfg, "embedding.max_retries", opts.max_retries);
        opts.timeout_seconds =
            pshrink::get_int(cfg, "embedding.timeout_seconds", opts.timeout_seconds);
        opts.max_in_flight = jobs;
        return std::make_unique<pshrink::HttpEmbeddingProvider>(opts);
    }
    throw std::runtime_error("unknown embedding.provider '" + kind +
                             "' (expected local or http)");
}

// Generation backend by name.  The three deterministic local providers are
// built in; any other name is looked up under provider.<name>.* in the config
// and resolved to an HTTP provider.
std::unique_ptr<pshrink::LLMProvider> make_llm(const std::string& name,
                                               const pshrink::ConfigMap& cfg,
                                               int jobs) {
    if (name == "echo") {
        const std::string p = "provider.echo.";
        return std::make_unique<pshrink::EchoProvider>(
            pshrink::get_double(cfg, p + "base_seconds", 0.0),
            pshrink::get_double(cfg, p + "per_prompt_token_seconds", 0.0),
            pshrink::get_double(cfg, p + "per_response_token_seconds", 0.0));
    }
    if (name == "noise") return std::make_unique<pshrink::NoiseProvider>();
    if (name == "adverb-drop") return std::make_unique<pshrink::AdverbDropProvider>();

    const std::string prefix = "provider." + name + ".";
    pshrink::HttpProviderOptions opts;
    opts.endpoint = pshrink::get_string(cfg, prefix + "endpoint");
    if (opts.endpoint.empty()) {
        throw std::runtime_error("unknown provider '" + name + "' (no " + prefix +
                                 "endpoint in config)");
    }
    opts.name = name;
    opts.path = pshrink::get_string(cfg, prefix + "path", "/generate");
    opts.model = pshrink::get_string(cfg, prefix + "model");
    opts.auth_env = pshrink::get_string(cfg, prefix + "auth_env");
    opts.max_retries = pshrink::get_int(cfg, prefix + "max_retries", opts.max_retries);
    opts.timeout_seconds =
        pshrink::get_int(cfg, prefix + "timeout_seconds", opts.timeout_seconds);
    opts.max_in_flight = jobs;
    return std::make_unique<pshrink::HttpLLMProvider>(opts);
}

// ---------------------------------------------------------------------------
// task files: one JSON object per line, {id, context, question?, reference?}
// ---------------------------------------------------------------------------

struct TaskRecord {
    std::string id;
    std::string context;
    std::string question;  // empty = no steering query
    std::string reference;
    bool has_reference = false;
};

struct TaskErratum {
    size_t line = 0;  // 1-based line number in the task file
    std::string error;
};

// Returns the number of non-blank lines seen; malformed lines are recorded in
// errata and skipped.
size_t read_tasks(const std::string& path, std::vector<TaskRecord>* records,
                  std::vector<TaskErratum>* errata) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read task file " + path);
    std::string line;
    size_t line_no = 0;
    size_t seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (pshrink::detail::trim(line).empty()) continue;
        ++seen;
        try {
            nlohmann::json j = nlohmann::json::parse(line);
            if (!j.is_object()) throw std::runtime_error("record is not a JSON object");
            TaskRecord r;
            if (!j.contains("id")) throw std::runtime_error("missing field 'id'");
            const nlohmann::json& jid = j.at("id");
            if (jid.is_string()) {
                r.id = jid.get<std::string>();
            } else if (jid.is_number_integer()) {
                r.id = std::to_string(jid.get<long long>());
            } else {
                throw std::runtime_error("field 'id' must be a string or an integer");
            }
            if (!j.contains("context") || !j.at("context").is_string()) {
                throw std::runtime_error("missing string field 'context'");
            }
            r.context = j.at("context").get<std::string>();
            if (pshrink::detail::trim(r.context).empty()) {
                throw std::runtime_error("field 'context' is empty");
            }
            if (j.contains("question")) {
                if (!j.at("question").is_string()) {
                    throw std::runtime_error("field 'question' must be a string");
                }
                r.question = j.at("question").get<std::string>();
            }
            if (j.contains("reference")) {
                if (!j.at("reference").is_string()) {
                    throw std::runtime_error("field 'reference' must be a string");
                }
                r.reference = j.at("reference").get<std::string>();
                r.has_reference = true;
            }
            records->push_back(std::move(r));
        } catch (const std::exception& e) {
            errata->push_back({line_no, e.what()});
        }
    }
    return seen;
}

nlohmann::json errata_to_json(const std::vector<TaskErratum>& errata) {
    nlohmann::json out = nlohmann::json::array();
    for (const TaskErratum& e : errata) {
        out.push_back(nlohmann::json{{"line", e.line}, {"error", e.error}});
    }
    return out;
}

std::string version_text() {
    std::string out = "pshrink ";
    out += pshrink::kEngineVersion;
    out += "\nlexicon: " + std::to_string(pshrink::builtin_lexicon().size()) + " entries";
    out += "\nproviders: hashed-bow, echo, noise, adverb-drop, http";
    return out;
}

// Shared compression settings resolved from flags + config.
struct CompressSettings {
    pshrink::CompressionConfig config;
    int jobs = 4;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pshrink: rate-targeted prompt compression"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_text());

    // ---- compress ----
    CLI::App* c_cmd = app.add_subcommand("compress", "compress one document");
    std::string c_input = "-";
    std::string c_query;
    std::string c_config_path;
    std::string c_trace;
    std::string c_mode = "standard";
    double c_rate = 1.0;
    int c_level = 3;
    int c_chunk = 3;
    int c_jobs = 4;
    c_cmd->add_option("--input", c_input, "input document file, - for stdin");
    CLI::Option* c_query_opt = c_cmd->add_option("--query", c_query, "steering query");
    CLI::Option* c_rate_opt =
        c_cmd->add_option("--rate", c_rate, "target token rate in (0, 1]");
    CLI::Option* c_level_opt =
        c_cmd->add_option("--level", c_level, "simplification level 1-5");
    CLI::Option* c_mode_opt =
        c_cmd->add_option("--mode", c_mode, "standard or performance");
    CLI::Option* c_chunk_opt =
        c_cmd->add_option("--chunk-size", c_chunk, "sentences per chunk");
    c_cmd->add_option("--trace", c_trace, "write a JSON decision trace to FILE");
    c_cmd->add_option("--config", c_config_path, "flat key = value config file");
    CLI::Option* c_jobs_opt =
        c_cmd->add_option("--jobs", c_jobs, "max in-flight remote requests");

    // ---- distill ----
    CLI::App* d_cmd = app.add_subcommand("distill", "build a distillation dataset");
    std::string d_corpus;
    std::string d_out;
    std::string d_providers;
    std::string d_config_path;
    double d_tau = 0.85;
    double d_beta = 1.0;
    int d_block = 3;
    int d_shard = 1000;
    int d_jobs = 4;
    d_cmd->add_option("--corpus", d_corpus, "directory of .txt documents")->required();
    d_cmd->add_option("--out", d_out, "output directory for shards")->required();
    CLI::Option* d_providers_opt = d_cmd->add_option(
        "--providers", d_providers, "comma-separated provider names");
    CLI::Option* d_tau_opt =
        d_cmd->add_option("--tau-sim", d_tau, "similarity acceptance threshold");
    CLI::Option* d_beta_opt =
        d_cmd->add_option("--beta-kl", d_beta, "reward-weight temperature");
    CLI::Option* d_block_opt =
        d_cmd->add_option("--block-size", d_block, "sentences per block");
    CLI::Option* d_shard_opt =
        d_cmd->add_option("--shard-size", d_shard, "samples per shard file");
    d_cmd->add_option("--config", d_config_path, "flat key = value config file");
    CLI::Option* d_jobs_opt =
        d_cmd->add_option("--jobs", d_jobs, "max in-flight remote requests");

    // ---- eval ----
    CLI::App* e_cmd = app.add_subcommand("eval", "score compression over a task file");
    std::string e_tasks;
    std::string e_report;
    std::string e_config_path;
    std::string e_mode = "standard";
    double e_rate = 1.0;
    int e_level = 3;
    int e_chunk = 3;
    int e_jobs = 4;
    e_cmd->add_option("--tasks", e_tasks, "JSONL task file")->required();
    e_cmd->add_option("--report", e_report, "write a JSON report to FILE");
    CLI::Option* e_rate_opt =
        e_cmd->add_option("--rate", e_rate, "target token rate in (0, 1]");
    CLI::Option* e_level_opt =
        e_cmd->add_option("--level", e_level, "simplification level 1-5");
    CLI::Option* e_mode_opt =
        e_cmd->add_option("--mode", e_mode, "standard or performance");
    CLI::Option* e_chunk_opt =
        e_cmd->add_option("--chunk-size", e_chunk, "sentences per chunk");
    e_cmd->add_option("--config", e_config_path, "flat key = value config file");
    CLI::Option* e_jobs_opt =
        e_cmd->add_option("--jobs", e_jobs, "max in-flight remote requests");

    // ---- bench ----
    CLI::App* b_cmd = app.add_subcommand("bench", "latency benchmark");
    std::string b_tasks;
    std::string b_canned;
    std::string b_report;
    std::string b_provider = "echo";
    std::string b_config_path;
    std::string b_mode = "standard";
    double b_rate = 1.0;
    int b_level = 3;
    int b_chunk = 3;
    int b_response = 200;
    int b_jobs = 4;
    bool b_wall_clock = false;
    CLI::Option* b_tasks_opt =
        b_cmd->add_option("--tasks", b_tasks, "JSONL task file with prompts");
    CLI::Option* b_canned_opt = b_cmd->add_option(
        "--canned", b_canned, "JSONL file of recorded timing pairs");
    b_tasks_opt->excludes(b_canned_opt);
    b_cmd->add_option("--report", b_report, "write a JSON report to FILE");
    CLI::Option* b_provider_opt =
        b_cmd->add_option("--provider", b_provider, "generation provider name");
    CLI::Option* b_response_opt = b_cmd->add_option(
        "--response-tokens", b_response, "reply budget per request");
    CLI::Option* b_rate_opt =
        b_cmd->add_option("--rate", b_rate, "target token rate in (0, 1]");
    CLI::Option* b_level_opt =
        b_cmd->add_option("--level", b_level, "simplification level 1-5");
    CLI::Option* b_mode_opt =
        b_cmd->add_option("--mode", b_mode, "standard or performance");
    CLI::Option* b_chunk_opt =
        b_cmd->add_option("--chunk-size", b_chunk, "sentences per chunk");
    b_cmd->add_flag("--wall-clock", b_wall_clock,
                    "time the compression step with a real clock");
    b_cmd->add_option("--config", b_config_path, "flat key = value config file");
    CLI::Option* b_jobs_opt =
        b_cmd->add_option("--jobs", b_jobs, "max in-flight remote requests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_cmd->parsed()) {
            pshrink::ConfigMap cfg;
            if (!c_config_path.empty()) cfg = pshrink::load_config(c_config_path);

            pshrink::CompressionConfig ccfg;
            ccfg.target_rate = pick_double(c_rate_opt, c_rate, cfg, "rate", ccfg.target_rate);
            ccfg.level = pick_int(c_level_opt, c_level, cfg, "level", ccfg.level);
            ccfg.mode = parse_mode(pick_string(c_mode_opt, c_mode, cfg, "mode", "standard"));
            ccfg.chunk_size = pick_int(c_chunk_opt, c_chunk, cfg, "chunk_size", ccfg.chunk_size);
            ccfg.alpha = pshrink::get_double(cfg, "alpha", ccfg.alpha);
            ccfg.beta = pshrink::get_double(cfg, "beta", ccfg.beta);
            ccfg.decay_lambda = pshrink::get_double(cfg, "decay_lambda", ccfg.decay_lambda);
            const std::string query = pick_string(c_query_opt, c_query, cfg, "query", "");
            const int jobs = pick_int(c_jobs_opt, c_jobs, cfg, "jobs", 4);

            const std::string text = read_input(c_input);
            const pshrink::Document doc = pshrink::parse_document(text);
            std::unique_ptr<pshrink::EmbeddingProvider> embedder = make_embedder(cfg, jobs);
            const pshrink::CompressionResult result = pshrink::compress_to_target(
                doc, query.empty() ? nullptr : &query, ccfg,
                pshrink::builtin_lexicon(), *embedder);

            std::fputs(result.text.c_str(), stdout);
            std::fputc('\n', stdout);
            if (!c_trace.empty()) {
                write_file(c_trace, pshrink::result_to_json(result).dump(2) + "\n");
            }
            if (result.best_effort) {
                std::fprintf(stderr,
                             "pshrink: target rate %.4f not reached (achieved %.4f)\n",
                             ccfg.target_rate, result.achieved_rate);
                return 2;
            }
            return 0;
        }

        if (d_cmd->parsed()) {
            pshrink::ConfigMap cfg;
            if (!d_config_path.empty()) cfg = pshrink::load_config(d_config_path);

            pshrink::RLFTConfig rcfg;
            rcfg.tau_sim = pick_double(d_tau_opt, d_tau, cfg, "tau_sim", rcfg.tau_sim);
            rcfg.beta_kl = pick_double(d_beta_opt, d_beta, cfg, "beta_kl", rcfg.beta_kl);
            rcfg.block_size = pick_int(d_block_opt, d_block, cfg, "block_size", rcfg.block_size);
            const int shard_size = pick_int(d_shard_opt, d_shard, cfg, "shard_size", 1000);
            if (shard_size < 1) throw std::runtime_error("shard_size must be positive");
            const int jobs = pick_int(d_jobs_opt, d_jobs, cfg, "jobs", 4);
            const std::string provider_csv =
                pick_string(d_providers_opt, d_providers, cfg, "providers", "");
            const std::vector<std::string> names = split_list(provider_csv);
            if (names.empty()) {
                throw std::runtime_error(
                    "no providers requested (use --providers or the providers config key)");
            }

            std::vector<fs::path> files;
            for (const fs::directory_entry& entry : fs::directory_iterator(d_corpus)) {
                if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                    files.push_back(entry.path());
                }
            }
            std::sort(files.begin(), files.end());
            if (files.empty()) {
                throw std::runtime_error("no .txt documents under " + d_corpus);
            }
            std::vector<pshrink::Document> corpus;
            corpus.reserve(files.size());
            for (const fs::path& f : files) {
                corpus.push_back(pshrink::parse_document(read_file(f)));
            }

            std::vector<std::unique_ptr<pshrink::LLMProvider>> owned;
            std::vector<pshrink::LLMProvider*> providers;
            for (const std::string& name : names) {
                owned.push_back(make_llm(name, cfg, jobs));
                providers.push_back(owned.back().get());
            }
            std::unique_ptr<pshrink::EmbeddingProvider> embedder = make_embedder(cfg, jobs);

            const pshrink::DatasetResult dataset =
                pshrink::build_dataset(corpus, providers, rcfg, *embedder);
            const std::vector<fs::path> shards = pshrink::write_dataset(
                dataset, d_out, static_cast<size_t>(shard_size));

            size_t kept = 0;
            for (const pshrink::RLFTSample& s : dataset.samples) kept += s.kept ? 1 : 0;
            std::printf("samples: %zu\nkept: %zu\nshards: %zu\nout: %s\n",
                        dataset.samples.size(), kept, shards.size(), d_out.c_str());
            return 0;
        }

        if (e_cmd->parsed()) {
            pshrink::ConfigMap cfg;
            if (!e_config_path.empty()) cfg = pshrink::load_config(e_config_path);

            pshrink::CompressionConfig ccfg;
            ccfg.target_rate = pick_double(e_rate_opt, e_rate, cfg, "rate", ccfg.target_rate);
            ccfg.level = pick_int(e_level_opt, e_level, cfg, "level", ccfg.level);
            ccfg.mode = parse_mode(pick_string(e_mode_opt, e_mode, cfg, "mode", "standard"));
            ccfg.chunk_size = pick_int(e_chunk_opt, e_chunk, cfg, "chunk_size", ccfg.chunk_size);
            ccfg.alpha = pshrink::get_double(cfg, "alpha", ccfg.alpha);
            ccfg.beta = pshrink::get_double(cfg, "beta", ccfg.beta);
            ccfg.decay_lambda = pshrink::get_double(cfg, "decay_lambda", ccfg.decay_lambda);
            const int jobs = pick_int(e_jobs_opt, e_jobs, cfg, "jobs", 4);

            std::vector<TaskRecord> records;
            std::vector<TaskErratum> errata;
            const size_t seen = read_tasks(e_tasks, &records, &errata);
            if (seen == 0) throw std::runtime_error("task file " + e_tasks + " is empty");

            std::unique_ptr<pshrink::EmbeddingProvider> embedder = make_embedder(cfg, jobs);

            nlohmann::json rows = nlohmann::json::array();
            double sum_rate = 0.0, sum_cse = 0.0, sum_bleu = 0.0;
            double sum_rouge = 0.0, sum_f1 = 0.0;
            std::printf("%-12s %8s %8s %8s %8s %8s\n", "id", "rate", "cse",
                        "bleu", "rouge_l", "token_f1");
            for (const TaskRecord& rec : records) {
                try {
                    const pshrink::Document doc = pshrink::parse_document(rec.context);
                    const std::string* query = rec.question.empty() ? nullptr : &rec.question;
                    const pshrink::CompressionResult result = pshrink::compress_to_target(
                        doc, query, ccfg, pshrink::builtin_lexicon(), *embedder);
                    const std::string& reference =
                        rec.has_reference ? rec.reference : rec.context;

                    const int original_tokens = pshrink::count_tokens(rec.context);
                    const int compressed_tokens = pshrink::count_tokens(result.text);
                    const double sim = pshrink::cosine(embedder->embed(rec.context),
                                                       embedder->embed(result.text));
                    const double cse_v =
                        pshrink::cse(original_tokens, compressed_tokens, sim);
                    const double bleu_v = pshrink::bleu(result.text, {reference});
                    const double rouge_v = pshrink::rouge_l(result.text, reference);
                    const double f1_v = pshrink::token_f1(result.text, reference);

                    sum_rate += result.achieved_rate;
                    sum_cse += cse_v;
                    sum_bleu += bleu_v;
                    sum_rouge += rouge_v;
                    sum_f1 += f1_v;
                    std::printf("%-12s %8.4f %8.4f %8.4f %8.4f %8.4f\n", rec.id.c_str(),
                                result.achieved_rate, cse_v, bleu_v, rouge_v, f1_v);
                    rows.push_back(nlohmann::json{{"id", rec.id},
                                                  {"original_tokens", original_tokens},
                                                  {"compressed_tokens", compressed_tokens},
                                                  {"rate", result.achieved_rate},
                                                  {"cse", cse_v},
                                                  {"bleu", bleu_v},
                                                  {"rouge_l", rouge_v},
                                                  {"token_f1", f1_v}});
                } catch (const std::exception& ex) {
                    errata.push_back({0, "task " + rec.id + ": " + ex.what()});
                }
            }
            if (rows.empty()) {
                throw std::runtime_error("all " + std::to_string(seen) +
                                         " task lines failed");
            }
            const double n = static_cast<double>(rows.size());
            std::printf("%-12s %8.4f %8.4f %8.4f %8.4f %8.4f\n", "mean",
                        sum_rate / n, sum_cse / n, sum_bleu / n, sum_rouge / n,
                        sum_f1 / n);
            if (!errata.empty()) {
                std::printf("errata: %zu of %zu lines skipped\n", errata.size(), seen);
            }
            if (!e_report.empty()) {
                nlohmann::json report{
                    {"engine", pshrink::kEngineVersion},
                    {"embedder", embedder->name()},
                    {"rows", rows},
                    {"means",
                     nlohmann::json{{"rate", sum_rate / n},
                                    {"cse", sum_cse / n},
                                    {"bleu", sum_bleu / n},
                                    {"rouge_l", sum_rouge / n},
                                    {"token_f1", sum_f1 / n}}},
                    {"errata", errata_to_json(errata)}};
                write_file(e_report, report.dump(2) + "\n");
            }
            return 0;
        }

        if (b_cmd->parsed()) {
            pshrink::ConfigMap cfg;
            if (!b_config_path.empty()) cfg = pshrink::load_config(b_config_path);

            // Replay mode: score recorded timing pairs without touching a provider.
            const std::string canned = pick_string(b_canned_opt, b_canned, cfg, "canned", "");
            if (!canned.empty()) {
                std::ifstream in(canned);
                if (!in) throw std::runtime_error("cannot read timings file " + canned);
                std::vector<double> orig, comp;
                std::string line;
                size_t line_no = 0;
                while (std::getline(in, line)) {
                    ++line_no;
                    if (pshrink::detail::trim(line).empty()) continue;
                    nlohmann::json j;
                    try {
                        j = nlohmann::json::parse(line);
                        orig.push_back(j.at("original_seconds").get<double>());
                        comp.push_back(j.at("compressed_seconds").get<double>());
                    } catch (const std::exception& ex) {
                        throw std::runtime_error("timings file line " +
                                                 std::to_string(line_no) + ": " + ex.what());
                    }
                }
                const double speedup = pshrink::speedup_from_timings(orig, comp);
                double so = 0.0, sc = 0.0;
                for (double v : orig) so += v;
                for (double v : comp) sc += v;
                const double n = static_cast<double>(orig.size());
                std::printf("pairs: %zu\n", orig.size());
                std::printf("mean original: %.4f s\n", so / n);
                std::printf("mean compressed: %.4f s\n", sc / n);
                std::printf("speedup: %.2fx\n", speedup);
                if (!b_report.empty()) {
                    nlohmann::json report{{"engine", pshrink::kEngineVersion},
                                          {"pairs", orig.size()},
                                          {"mean_original_seconds", so / n},
                                          {"mean_compressed_seconds", sc / n},
                                          {"speedup", speedup}};
                    write_file(b_report, report.dump(2) + "\n");
                }
                return 0;
            }

            const std::string tasks = pick_string(b_tasks_opt, b_tasks, cfg, "tasks", "");
            if (tasks.empty()) {
                throw std::runtime_error("bench needs --tasks or --canned");
            }

            pshrink::CompressionConfig ccfg;
            ccfg.target_rate = pick_double(b_rate_opt, b_rate, cfg, "rate", ccfg.target_rate);
            ccfg.level = pick_int(b_level_opt, b_level, cfg, "level", ccfg.level);
            ccfg.mode = parse_mode(pick_string(b_mode_opt, b_mode, cfg, "mode", "standard"));
            ccfg.chunk_size = pick_int(b_chunk_opt, b_chunk, cfg, "chunk_size", ccfg.chunk_size);
            ccfg.alpha = pshrink::get_double(cfg, "alpha", ccfg.alpha);
            ccfg.beta = pshrink::get_double(cfg, "beta", ccfg.beta);
            ccfg.decay_lambda = pshrink::get_double(cfg, "decay_lambda", ccfg.decay_lambda);
            const int jobs = pick_int(b_jobs_opt, b_jobs, cfg, "jobs", 4);

            pshrink::BenchOptions options;
            options.response_tokens =
                pick_int(b_response_opt, b_response, cfg, "response_tokens", 200);

            std::vector<TaskRecord> records;
            std::vector<TaskErratum> errata;
            const size_t seen = read_tasks(tasks, &records, &errata);
            if (seen == 0) throw std::runtime_error("task file " + tasks + " is empty");
            if (records.empty()) {
                throw std::runtime_error("all " + std::to_string(seen) +
                                         " task lines failed");
            }
            std::vector<std::string> prompts;
            prompts.reserve(records.size());
            for (const TaskRecord& r : records) prompts.push_back(r.context);

            std::unique_ptr<pshrink::EmbeddingProvider> embedder = make_embedder(cfg, jobs);
            std::unique_ptr<pshrink::LLMProvider> llm = make_llm(
                pick_string(b_provider_opt, b_provider, cfg, "provider", "echo"), cfg, jobs);

            // By default the compression step is charged zero seconds so local
            // provider runs stay byte-reproducible; --wall-clock times it.
            const pshrink::CompressFn compress_fn =
                [&](const std::string& prompt) -> std::pair<std::string, double> {
                const auto start = std::chrono::steady_clock::now();
                const pshrink::Document doc = pshrink::parse_document(prompt);
                const pshrink::CompressionResult result = pshrink::compress_to_target(
                    doc, nullptr, ccfg, pshrink::builtin_lexicon(), *embedder);
                double seconds = 0.0;
                if (b_wall_clock) {
                    seconds = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
                }
                return {result.text, seconds};
            };

            const pshrink::BenchReport report =
                pshrink::latency_bench(compress_fn, *llm, prompts, options);

            std::printf("%6s %10s %10s %12s %12s\n", "id", "orig_tok", "comp_tok",
                        "t_original", "t_compressed");
            for (const pshrink::PromptTiming& t : report.prompts) {
                std::printf("%6d %10d %10d %12.5f %12.5f\n", t.id, t.original_tokens,
                            t.compressed_tokens, t.original_seconds, t.compressed_seconds);
            }
            std::printf("mean original: %.4f s\n", report.mean_original_seconds);
            std::printf("mean compressed: %.4f s\n", report.mean_compressed_seconds);
            std::printf("speedup: %.2fx\n", report.speedup);
            if (!report.errata.empty()) {
                std::printf("errata: %zu prompts failed\n", report.errata.size());
            }
            if (!b_report.empty()) {
                nlohmann::json j = pshrink::bench_report_to_json(report);
                j["engine"] = pshrink::kEngineVersion;
                j["provider"] = llm->name();
                j["response_tokens"] = options.response_tokens;
                write_file(b_report, j.dump(2) + "\n");
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "pshrink: error: %s\n", e.what());
        return 1;
    }
    return 0;
}
