// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Exercises the HTTP providers against an in-process server on a loopback
// port, including auth, retry, dimension checks, and the in-flight cap.
#include <catch2/catch_amalgamated.hpp>

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "pshrink/providers.hpp"

using namespace pshrink;

namespace {

// Serves /embed and /generate with controllable failure behavior.
class TestServer {
  public:
    TestServer() {
        server_.Post("/embed", [this](const httplib::Request& req, httplib::Response& res) {
            track(req, res, [&] {
                auto body = nlohmann::json::parse(req.body);
                std::string text = body.at("text").get<std::string>();
                // Deterministic 4-vector: [len, 1, 0, 0].
                nlohmann::json reply{
                    {"vector", {static_cast<double>(text.size()), 1.0, 0.0, 0.0}}};
                res.set_content(reply.dump(), "application/json");
            });
        });
        server_.Post("/short", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(R"({"vector": [1.0, 2.0]})", "application/json");
        });
        server_.Post("/generate", [this](const httplib::Request& req, httplib::Response& res) {
            track(req, res, [&] {
                auto body = nlohmann::json::parse(req.body);
                nlohmann::json reply{
                    {"text", "reply to: " + body.at("prompt").get<std::string>()}};
                if (body.contains("max_tokens")) {
                    reply["max_tokens_seen"] = body["max_tokens"];
                }
                res.set_content(reply.dump(), "application/json");
            });
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        REQUIRE(port_ > 0);
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~TestServer() {
        server_.stop();
        thread_.join();
    }

    std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }

    void fail_next(int n, int status) {
        failures_left_ = n;
        failure_status_ = status;
    }
    void require_token(const std::string& token) { expected_token_ = token; }
    int requests_seen() const { return requests_; }
    int max_concurrency_seen() const { return max_concurrent_; }

  private:
    template <typename Fn>
    void track(const httplib::Request& req, httplib::Response& res, Fn&& handle) {
        ++requests_;
        int now = ++concurrent_;
        int seen = max_concurrent_.load();
        while (now > seen && !max_concurrent_.compare_exchange_weak(seen, now)) {
        }
        if (!expected_token_.empty() &&
            req.get_header_value("Authorization") != "Bearer " + expected_token_) {
            res.status = 401;
        } else if (failures_left_ > 0) {
            --failures_left_;
            res.status = failure_status_;
        } else {
            // Small hold so concurrent requests overlap measurably.
            std::this_thread::sleep_for(std::chrono::milliseconds(20));
            handle();
        }
        --concurrent_;
    }

    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> requests_{0};
    std::atomic<int> concurrent_{0};
    std::atomic<int> max_concurrent_{0};
    std::atomic<int> failures_left_{0};
    int failure_status_ = 500;
    std::string expected_token_;
};

HttpProviderOptions embed_options(const TestServer& server) {
    HttpProviderOptions opts;
    opts.name = "test-embed";
    opts.endpoint = server.endpoint();
    opts.path = "/embed";
    opts.dimension = 4;
    opts.timeout_seconds = 5;
    return opts;
}

}  // namespace

TEST_CASE("embedding client round-trips vectors") {
    TestServer server;
    HttpEmbeddingProvider provider(embed_options(server));
    CHECK(provider.name() == "test-embed");
    CHECK(provider.dimension() == 4);

    std::vector<float> v = provider.embed("hello");
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 5.0f);
    CHECK(v[1] == 1.0f);
    CHECK(cosine(v, v) == Catch::Approx(1.0));
}

TEST_CASE("embedding client rejects wrong dimensions") {
    TestServer server;
    HttpProviderOptions opts = embed_options(server);
    opts.path = "/short";  // server returns 2 components
    HttpEmbeddingProvider provider(opts);
    CHECK_THROWS_WITH(provider.embed("x"),
                      Catch::Matchers::ContainsSubstring("expected 4 components"));
}

TEST_CASE("transient server errors are retried") {
    TestServer server;
    HttpProviderOptions opts = embed_options(server);
    opts.max_retries = 2;
    opts.retry_backoff_seconds = 0.0;
    HttpEmbeddingProvider provider(opts);

    server.fail_next(2, 500);
    std::vector<float> v = provider.embed("ok");
    CHECK(v.size() == 4);
    CHECK(server.requests_seen() == 3);  // two failures + one success
}

TEST_CASE("retries exhaust into an error") {
    TestServer server;
    HttpProviderOptions opts = embed_options(server);
    opts.max_retries = 1;
    opts.retry_backoff_seconds = 0.0;
    HttpEmbeddingProvider provider(opts);

    server.fail_next(5, 503);
    CHECK_THROWS_WITH(provider.embed("x"),
                      Catch::Matchers::ContainsSubstring("after 2 attempt(s)"));
    CHECK(server.requests_seen() == 2);
}

TEST_CASE("client errors are not retried") {
    TestServer server;
    HttpProviderOptions opts = embed_options(server);
    opts.max_retries = 3;
    HttpEmbeddingProvider provider(opts);

    server.fail_next(1, 404);
    CHECK_THROWS_WITH(provider.embed("x"), Catch::Matchers::ContainsSubstring("404"));
    CHECK(server.requests_seen() == 1);
}

TEST_CASE("bearer token comes from the named environment variable") {
    TestServer server;
    server.require_token("sekrit");

    HttpProviderOptions opts = embed_options(server);
    opts.auth_env = "PSHRINK_TEST_TOKEN";

    // Missing variable: constructor refuses and names it.
    ::unsetenv("PSHRINK_TEST_TOKEN");
    CHECK_THROWS_WITH(HttpEmbeddingProvider(opts),
                      Catch::Matchers::ContainsSubstring("PSHRINK_TEST_TOKEN"));

    ::setenv("PSHRINK_TEST_TOKEN", "sekrit", 1);
    HttpEmbeddingProvider provider(opts);
    CHECK(provider.embed("abc").size() == 4);

    // Wrong token is a non-retryable client error.
    ::setenv("PSHRINK_TEST_TOKEN", "wrong", 1);
    HttpEmbeddingProvider bad(opts);
    CHECK_THROWS_WITH(bad.embed("abc"), Catch::Matchers::ContainsSubstring("401"));
    ::unsetenv("PSHRINK_TEST_TOKEN");
}

TEST_CASE("generation client returns text and latency") {
    TestServer server;
    HttpProviderOptions opts;
    opts.name = "test-llm";
    opts.endpoint = server.endpoint();
    opts.path = "/generate";
    opts.model = "tiny-1";
    opts.timeout_seconds = 5;
    HttpLLMProvider provider(opts);

    GenerationResult out = provider.generate("compress this", 200);
    CHECK(out.text == "reply to: compress this");
    CHECK(out.latency_seconds > 0.0);
}

TEST_CASE("in-flight cap bounds concurrent requests") {
    TestServer server;
    HttpProviderOptions opts = embed_options(server);
    opts.max_in_flight = 2;
    HttpEmbeddingProvider provider(opts);

    std::vector<std::thread> threads;
    std::atomic<int> completed{0};
    for (int i = 0; i < 8; ++i) {
        threads.emplace_back([&provider, &completed, i] {
            std::vector<float> v = provider.embed("text " + std::to_string(i));
            if (v.size() == 4) ++completed;
        });
    }
    for (auto& t : threads) t.join();
    CHECK(completed == 8);
    CHECK(server.max_concurrency_seen() <= 2);
    CHECK(server.max_concurrency_seen() >= 1);
}

TEST_CASE("provider options are validated") {
    HttpProviderOptions opts;
    opts.endpoint = "";
    opts.path = "/embed";
    CHECK_THROWS_AS(HttpEmbeddingProvider(opts), std::invalid_argument);

    opts.endpoint = "http://127.0.0.1:1";
    opts.path = "no-slash";
    CHECK_THROWS_AS(HttpEmbeddingProvider(opts), std::invalid_argument);

    opts.path = "/embed";
    opts.dimension = 0;
    CHECK_THROWS_AS(HttpEmbeddingProvider(opts), std::invalid_argument);
}

TEST_CASE("unreachable endpoints fail with a transport error") {
    HttpProviderOptions opts;
    opts.name = "dead";
    opts.endpoint = "http://127.0.0.1:9";  // discard port; nothing listens
    opts.path = "/embed";
    opts.dimension = 4;
    opts.max_retries = 0;
    opts.timeout_seconds = 1;
    HttpEmbeddingProvider provider(opts);
    CHECK_THROWS_WITH(provider.embed("x"),
                      Catch::Matchers::ContainsSubstring("transport error"));
}
