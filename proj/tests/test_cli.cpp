// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end tests for the pshrink command line binary.  The binary path is
// injected by the build as PSHRINK_CLI_PATH; every case below runs the real
// executable through the shell and inspects exit code, stdout, stderr, and
// any files it wrote.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

// Fresh scratch directory per call site; contents from earlier runs are wiped.
fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / "pshrink_cli_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// Runs the binary with the given argument string.  stdin is fed from a file
// when stdin_text is non-empty, otherwise from /dev/null.
CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    static int invocation = 0;
    const fs::path dir = fs::temp_directory_path() / "pshrink_cli_tests" / "io";
    fs::create_directories(dir);
    const std::string tag = std::to_string(invocation++);
    const fs::path out_file = dir / ("out." + tag);
    const fs::path err_file = dir / ("err." + tag);
    const fs::path in_file = dir / ("in." + tag);

    std::string cmd = std::string(PSHRINK_CLI_PATH) + " " + args;
    cmd += " >" + out_file.string() + " 2>" + err_file.string();
    if (stdin_text.empty()) {
        cmd += " </dev/null";
    } else {
        spill(in_file, stdin_text);
        cmd += " <" + in_file.string();
    }

    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    return result;
}

// Gibberish three-syllable nouns: unknown to the lexicon, untouched by every
// simplification rule, and unique across the corpus so chunk statistics tie.
std::string nonce_word(int i) {
    static const char* kSyllables[] = {"zor", "bek", "lum", "tav",
                                       "rud", "pol", "min", "gaf"};
    std::string w = kSyllables[i % 8];
    w += kSyllables[(i / 8) % 8];
    w += kSyllables[(i / 64) % 8];
    return w;
}

// n sentences of exactly 100 tokens each (99 unique words plus the period).
std::vector<std::string> uniform_sentences(int n) {
    std::vector<std::string> sentences;
    int next = 0;
    for (int s = 0; s < n; ++s) {
        std::string sent;
        for (int j = 0; j < 99; ++j) {
            std::string w = nonce_word(next++);
            if (j == 0) w[0] = static_cast<char>(w[0] - 'a' + 'A');
            if (j > 0) sent += ' ';
            sent += w;
        }
        sent += '.';
        sentences.push_back(sent);
    }
    return sentences;
}

std::string join_sentences(const std::vector<std::string>& sentences) {
    std::string doc;
    for (size_t i = 0; i < sentences.size(); ++i) {
        if (i > 0) doc += ' ';
        doc += sentences[i];
    }
    return doc;
}

}  // namespace

TEST_CASE("cli: --version reports engine and data identities") {
    const CliResult r = run_cli("--version");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pshrink 0.1.0") != std::string::npos);
    CHECK(r.out.find("lexicon:") != std::string::npos);
    CHECK(r.out.find("providers:") != std::string::npos);
}

TEST_CASE("cli: compress round-trips stdin at rate 1.0") {
    const std::string doc =
        "The economy grows. The dog runs quickly. The market expands today.";
    const CliResult r = run_cli("compress --input - --rate 1.0 --level 1 --chunk-size 1", doc);
    CHECK(r.exit_code == 0);
    CHECK(r.out == doc + "\n");
    CHECK(r.err.empty());
}

TEST_CASE("cli: compress keeps the top chunks at rate 0.5") {
    const fs::path dir = fresh_dir("rate_half");
    const std::vector<std::string> sentences = uniform_sentences(4);
    const fs::path input = dir / "doc.txt";
    spill(input, join_sentences(sentences));
    const fs::path trace = dir / "trace.json";

    const CliResult r = run_cli("compress --input " + input.string() +
                                " --rate 0.5 --level 1 --chunk-size 1 --trace " +
                                trace.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == sentences[0] + " " + sentences[1] + "\n");

    const nlohmann::json t = nlohmann::json::parse(slurp(trace));
    CHECK(t.at("achieved_rate").get<double>() == 0.5);
    CHECK(t.at("initial_rate").get<double>() == 1.0);
    CHECK(t.at("rate_label").get<std::string>() == "2x");
    CHECK(t.at("best_effort").get<bool>() == false);
    CHECK(t.at("retained_k").get<int>() == 2);
    CHECK(t.at("total_chunks").get<int>() == 4);
    std::vector<int> retained;
    for (const auto& c : t.at("per_chunk")) {
        if (c.at("retained").get<bool>()) retained.push_back(c.at("id").get<int>());
    }
    CHECK(retained == std::vector<int>{0, 1});
}

TEST_CASE("cli: flags override config which overrides defaults") {
    const fs::path dir = fresh_dir("precedence");
    const fs::path input = dir / "doc.txt";
    spill(input, join_sentences(uniform_sentences(4)));
    const fs::path cfg = dir / "pshrink.cfg";
    spill(cfg, "rate = 0.5\nlevel = 1\nchunk_size = 1\n");

    auto retained_k = [&](const std::string& extra) {
        const fs::path trace = dir / "trace.json";
        const CliResult r = run_cli("compress --input " + input.string() + " " +
                                    extra + " --trace " + trace.string());
        REQUIRE(r.exit_code == 0);
        return nlohmann::json::parse(slurp(trace)).at("retained_k").get<int>();
    };

    // Default target rate is 1.0: everything is retained.
    CHECK(retained_k("--level 1 --chunk-size 1") == 4);
    // Config lowers the target to 0.5.
    CHECK(retained_k("--config " + cfg.string()) == 2);
    // A flag beats the config value.
    CHECK(retained_k("--config " + cfg.string() + " --rate 0.25") == 1);
}

TEST_CASE("cli: unattainable target exits 2 and marks the trace") {
    const fs::path dir = fresh_dir("best_effort");
    const fs::path input = dir / "doc.txt";
    spill(input, join_sentences(uniform_sentences(2)));
    const fs::path trace = dir / "trace.json";

    const CliResult r = run_cli("compress --input " + input.string() +
                                " --rate 0.1 --level 1 --chunk-size 1 --trace " +
                                trace.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("not reached") != std::string::npos);
    CHECK(!r.out.empty());
    const nlohmann::json t = nlohmann::json::parse(slurp(trace));
    CHECK(t.at("best_effort").get<bool>() == true);
    CHECK(t.at("retained_k").get<int>() == 1);
}

TEST_CASE("cli: compress rejects invalid settings with exit 1") {
    const std::string doc = "The economy grows.";
    CHECK(run_cli("compress --input - --rate 0.0", doc).exit_code == 1);
    CHECK(run_cli("compress --input - --rate 1.5", doc).exit_code == 1);
    CHECK(run_cli("compress --input - --level 6", doc).exit_code == 1);
    CHECK(run_cli("compress --input - --chunk-size 0", doc).exit_code == 1);

    const CliResult mode = run_cli("compress --input - --mode turbo", doc);
    CHECK(mode.exit_code == 1);
    CHECK(mode.err.find("unknown mode 'turbo'") != std::string::npos);

    const CliResult missing = run_cli("compress --input /no/such/file.txt");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("cannot read input file") != std::string::npos);

    const CliResult badcfg = run_cli("compress --input - --config /no/such.cfg", doc);
    CHECK(badcfg.exit_code == 1);
    CHECK(badcfg.err.find("cannot read config file") != std::string::npos);

    const CliResult nosub = run_cli("");
    CHECK(nosub.exit_code == 1);
}

TEST_CASE("cli: query steering with relevance-only weights") {
    const fs::path dir = fresh_dir("steering");
    const fs::path cfg = dir / "steer.cfg";
    spill(cfg, "alpha = 1\nbeta = 0\n");
    const std::string doc =
        "The economy grows in the region. The dog runs quickly. "
        "The river flows near the bridge.";

    const CliResult r = run_cli("compress --input - --rate 0.45 --level 1 "
                                "--chunk-size 1 --query \"economy region\" --config " +
                                cfg.string(),
                                doc);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "The economy grows in the region.\n");
}

TEST_CASE("cli: compress output is byte-identical across reruns") {
    const fs::path dir = fresh_dir("determinism");
    const fs::path input = dir / "doc.txt";
    spill(input,
          "The economy grows quickly in the region. The dog runs very fast. "
          "The market expands today. The old bridge stands. The river flows "
          "quietly. The team wins the plan.");
    const fs::path trace1 = dir / "t1.json";
    const fs::path trace2 = dir / "t2.json";
    const std::string args = "compress --input " + input.string() +
                             " --rate 0.4 --level 2 --chunk-size 2 --mode performance";

    const CliResult a = run_cli(args + " --trace " + trace1.string());
    const CliResult b = run_cli(args + " --trace " + trace2.string());
    REQUIRE(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
    CHECK(slurp(trace1) == slurp(trace2));
}

TEST_CASE("cli: distill writes deterministic, order-invariant shards") {
    const fs::path dir = fresh_dir("distill");
    const fs::path corpus = dir / "corpus";
    fs::create_directories(corpus);
    spill(corpus / "a.txt",
          "The economy grows quickly. The dog runs very fast. The market "
          "expands today. The team wins slowly.");
    spill(corpus / "b.txt", "The river flows quietly. The bridge stands.");

    const std::string base = "distill --corpus " + corpus.string() +
                             " --providers echo,adverb-drop --tau-sim 0.7";
    const CliResult r1 = run_cli(base + " --out " + (dir / "out1").string());
    const CliResult r2 = run_cli(base + " --out " + (dir / "out2").string());
    const CliResult r3 = run_cli("distill --corpus " + corpus.string() +
                                 " --providers adverb-drop,echo --tau-sim 0.7 --out " +
                                 (dir / "out3").string());
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    REQUIRE(r3.exit_code == 0);
    // The summary is identical up to the echoed output directory.
    auto counts = [](const std::string& s) { return s.substr(0, s.find("out:")); };
    CHECK(counts(r1.out) == counts(r2.out));
    CHECK(counts(r1.out) == counts(r3.out));
    CHECK(r1.out.find("samples:") != std::string::npos);

    const std::string shard1 = slurp(dir / "out1" / "shard-0000.jsonl");
    CHECK(shard1 == slurp(dir / "out2" / "shard-0000.jsonl"));
    // Provider order on the command line must not change the dataset.
    CHECK(shard1 == slurp(dir / "out3" / "shard-0000.jsonl"));
    CHECK(slurp(dir / "out1" / "manifest.json") == slurp(dir / "out3" / "manifest.json"));

    const nlohmann::json manifest =
        nlohmann::json::parse(slurp(dir / "out1" / "manifest.json"));
    CHECK(manifest.at("classes").contains("echo"));
    CHECK(manifest.at("classes").contains("adverb-drop"));
    CHECK(manifest.at("tau_sim").get<double>() == 0.7);
}

TEST_CASE("cli: distill rejects bad provider setups with exit 1") {
    const fs::path dir = fresh_dir("distill_errors");
    const fs::path corpus = dir / "corpus";
    fs::create_directories(corpus);
    spill(corpus / "a.txt", "The economy grows. The dog runs.");

    const CliResult unknown = run_cli("distill --corpus " + corpus.string() +
                                      " --out " + (dir / "o1").string() +
                                      " --providers bogus");
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.err.find("unknown provider 'bogus'") != std::string::npos);

    const CliResult none = run_cli("distill --corpus " + corpus.string() + " --out " +
                                   (dir / "o2").string());
    CHECK(none.exit_code == 1);
    CHECK(none.err.find("no providers") != std::string::npos);

    const CliResult tau = run_cli("distill --corpus " + corpus.string() + " --out " +
                                  (dir / "o3").string() +
                                  " --providers echo --tau-sim 1.5");
    CHECK(tau.exit_code == 1);

    const fs::path empty = dir / "empty";
    fs::create_directories(empty);
    const CliResult nodocs = run_cli("distill --corpus " + empty.string() + " --out " +
                                     (dir / "o4").string() + " --providers echo");
    CHECK(nodocs.exit_code == 1);
    CHECK(nodocs.err.find("no .txt documents") != std::string::npos);
}

TEST_CASE("cli: distill names the missing credential variable") {
    const fs::path dir = fresh_dir("distill_auth");
    const fs::path corpus = dir / "corpus";
    fs::create_directories(corpus);
    spill(corpus / "a.txt", "The economy grows.");
    const fs::path cfg = dir / "remote.cfg";
    spill(cfg,
          "provider.remote.endpoint = http://127.0.0.1:1\n"
          "provider.remote.auth_env = PSHRINK_CLI_TEST_MISSING_TOKEN\n");
    ::unsetenv("PSHRINK_CLI_TEST_MISSING_TOKEN");

    const CliResult r = run_cli("distill --corpus " + corpus.string() + " --out " +
                                (dir / "out").string() + " --providers remote --config " +
                                cfg.string());
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("PSHRINK_CLI_TEST_MISSING_TOKEN") != std::string::npos);
}

TEST_CASE("cli: eval scores identical candidate and reference as perfect") {
    const fs::path dir = fresh_dir("eval_perfect");
    const fs::path tasks = dir / "tasks.jsonl";
    spill(tasks,
          "{\"id\": \"t1\", \"context\": \"The economy grows. The dog runs.\"}\n"
          "{\"id\": 2, \"context\": \"The river flows. The bridge stands.\"}\n");
    const fs::path report = dir / "report.json";

    const CliResult r = run_cli("eval --tasks " + tasks.string() +
                                " --rate 1.0 --level 1 --report " + report.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("t1") != std::string::npos);
    CHECK(r.out.find("mean") != std::string::npos);

    const nlohmann::json j = nlohmann::json::parse(slurp(report));
    REQUIRE(j.at("rows").size() == 2);
    for (const auto& row : j.at("rows")) {
        CHECK(row.at("rate").get<double>() == 1.0);
        // The similarity factor comes from a real cosine, so allow float dust.
        CHECK_THAT(row.at("cse").get<double>(), Catch::Matchers::WithinAbs(1.0, 1e-12));
        CHECK(row.at("bleu").get<double>() == 1.0);
        CHECK(row.at("rouge_l").get<double>() == 1.0);
        CHECK(row.at("token_f1").get<double>() == 1.0);
    }
    CHECK_THAT(j.at("means").at("cse").get<double>(),
               Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(j.at("embedder").get<std::string>() == "hashed-bow");
    CHECK(j.at("errata").empty());
}

TEST_CASE("cli: eval skips malformed lines but fails on empty input") {
    const fs::path dir = fresh_dir("eval_errata");
    const fs::path tasks = dir / "tasks.jsonl";
    spill(tasks,
          "{\"id\": \"ok1\", \"context\": \"The economy grows.\"}\n"
          "this is not json\n"
          "{\"context\": \"missing id\"}\n"
          "{\"id\": \"ok2\", \"context\": \"The dog runs.\"}\n");
    const fs::path report = dir / "report.json";

    const CliResult r = run_cli("eval --tasks " + tasks.string() + " --report " +
                                report.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("errata: 2 of 4 lines skipped") != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(slurp(report));
    CHECK(j.at("rows").size() == 2);
    REQUIRE(j.at("errata").size() == 2);
    CHECK(j.at("errata")[0].at("line").get<int>() == 2);
    CHECK(j.at("errata")[1].at("line").get<int>() == 3);

    const fs::path empty = dir / "empty.jsonl";
    spill(empty, "\n\n");
    const CliResult e = run_cli("eval --tasks " + empty.string());
    CHECK(e.exit_code == 1);
    CHECK(e.err.find("is empty") != std::string::npos);

    const fs::path junk = dir / "junk.jsonl";
    spill(junk, "nope\nstill nope\n");
    const CliResult f = run_cli("eval --tasks " + junk.string());
    CHECK(f.exit_code == 1);
    CHECK(f.err.find("all 2 task lines failed") != std::string::npos);
}

TEST_CASE("cli: bench replays canned timings") {
    const fs::path dir = fresh_dir("bench_canned");
    const fs::path canned = dir / "timings.jsonl";
    spill(canned, "{\"original_seconds\": 11.84, \"compressed_seconds\": 6.64}\n");
    const fs::path report = dir / "report.json";

    const CliResult r = run_cli("bench --canned " + canned.string() + " --report " +
                                report.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("speedup: 1.78x") != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(slurp(report));
    CHECK_THAT(j.at("speedup").get<double>(),
               Catch::Matchers::WithinAbs(11.84 / 6.64, 1e-9));

    const fs::path bad = dir / "bad.jsonl";
    spill(bad, "{\"original_seconds\": 1.0}\n");
    CHECK(run_cli("bench --canned " + bad.string()).exit_code == 1);
}

TEST_CASE("cli: bench with a linear echo provider lands on 5x") {
    const fs::path dir = fresh_dir("bench_echo");
    const std::vector<std::string> sentences = uniform_sentences(5);
    nlohmann::json task{{"id", "p0"}, {"context", join_sentences(sentences)}};
    const fs::path tasks = dir / "tasks.jsonl";
    spill(tasks, task.dump() + "\n");
    const fs::path cfg = dir / "bench.cfg";
    spill(cfg, "provider.echo.per_prompt_token_seconds = 0.01\n");

    const std::string args = "bench --tasks " + tasks.string() +
                             " --rate 0.2 --level 1 --chunk-size 1 --config " +
                             cfg.string();
    const CliResult r1 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("speedup: 5.00x") != std::string::npos);
    // 500 original tokens compressed to 100.
    CHECK(r1.out.find("500") != std::string::npos);
    CHECK(r1.out.find("100") != std::string::npos);

    const CliResult r2 = run_cli(args);
    CHECK(r1.out == r2.out);

    // --tasks and --canned are mutually exclusive.
    const fs::path canned = dir / "t.jsonl";
    spill(canned, "{\"original_seconds\": 2.0, \"compressed_seconds\": 1.0}\n");
    CHECK(run_cli("bench --tasks " + tasks.string() + " --canned " + canned.string())
              .exit_code == 1);
}
