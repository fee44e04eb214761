// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// HTTP-backed embedding and generation providers. Wire formats:
//   embedding: POST <path>  {"text": "..."}            -> {"vector": [f, ...]}
//   generation: POST <path> {"prompt": "...",
//                            "max_tokens": N, "model": "..."} -> {"text": "..."}
// Credentials never live in config files: the config names an environment
// variable and the token is read from there at construction time.
#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <semaphore>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "pshrink/distill.hpp"
#include "pshrink/embedding.hpp"

namespace pshrink {

struct HttpProviderOptions {
    std::string name;        // class label / report identity
    std::string endpoint;    // scheme://host:port
    std::string path;        // request path, e.g. /embed or /generate
    std::string model;       // forwarded on generation requests; optional
    std::string auth_env;    // env var holding the bearer token; empty = no auth
    int dimension = 512;     // embedding providers only
    int max_in_flight = 4;   // concurrent request cap
    int max_retries = 2;     // extra attempts after a transient failure
    double retry_backoff_seconds = 0.05;
    double min_request_interval_seconds = 0.0;  // simple rate limit
    int timeout_seconds = 30;
};

namespace detail {

// Reads the bearer token named by the options, failing loudly with the
// variable name so operators know exactly what to set.
inline std::string resolve_auth_token(const std::string& auth_env) {
    if (auth_env.empty()) return {};
    const char* value = std::getenv(auth_env.c_str());
    if (value == nullptr || *value == '\0') {
        throw std::runtime_error("environment variable " + auth_env +
                                 " is not set (required for provider credentials)");
    }
    return value;
}

// Shared request plumbing: rate limiting, in-flight cap, retries on
// transport errors and 5xx statuses. 4xx is a caller bug — no retry.
class HttpRequester {
  public:
    explicit HttpRequester(const HttpProviderOptions& opts)
        : opts_(opts),
          token_(resolve_auth_token(opts.auth_env)),
          in_flight_(std::max(1, opts.max_in_flight)) {
        if (opts_.endpoint.empty()) throw std::invalid_argument("endpoint required");
        if (opts_.path.empty() || opts_.path[0] != '/') {
            throw std::invalid_argument("request path must start with '/'");
        }
    }

    nlohmann::json post_json(const nlohmann::json& body) {
        throttle();
        in_flight_.acquire();
        struct Release {
            std::counting_semaphore<>& sem;
            ~Release() { sem.release(); }
        } release{in_flight_};

        std::string payload = body.dump();
        int attempts = 1 + std::max(0, opts_.max_retries);
        std::string last_error = "request never attempted";
        for (int attempt = 0; attempt < attempts; ++attempt) {
            if (attempt > 0) {
                std::this_thread::sleep_for(std::chrono::duration<double>(
                    opts_.retry_backoff_seconds * attempt));
            }
            httplib::Client client(opts_.endpoint);
            client.set_connection_timeout(opts_.timeout_seconds);
            client.set_read_timeout(opts_.timeout_seconds);
            httplib::Headers headers;
            if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);
            auto res = client.Post(opts_.path, headers, payload, "application/json");
            if (!res) {
                last_error = "transport error: " + httplib::to_string(res.error());
                continue;  // connection problems are retryable
            }
            if (res->status >= 500) {
                last_error = "server error: HTTP " + std::to_string(res->status);
                continue;
            }
            if (res->status != 200) {
                throw std::runtime_error(opts_.name + ": HTTP " +
                                         std::to_string(res->status) + " from " +
                                         opts_.path);
            }
            try {
                return nlohmann::json::parse(res->body);
            } catch (const nlohmann::json::parse_error& e) {
                throw std::runtime_error(opts_.name + ": malformed JSON reply: " +
                                         e.what());
            }
        }
        throw std::runtime_error(opts_.name + ": " + last_error + " after " +
                                 std::to_string(attempts) + " attempt(s)");
    }

  private:
    void throttle() {
        if (opts_.min_request_interval_seconds <= 0.0) return;
        std::unique_lock lock(gate_);
        auto now = std::chrono::steady_clock::now();
        auto interval = std::chrono::duration<double>(opts_.min_request_interval_seconds);
        if (last_request_.time_since_epoch().count() != 0) {
            auto ready = last_request_ + std::chrono::duration_cast<
                                             std::chrono::steady_clock::duration>(interval);
            if (now < ready) {
                std::this_thread::sleep_until(ready);
                now = std::chrono::steady_clock::now();
            }
        }
        last_request_ = now;
    }

    HttpProviderOptions opts_;
    std::string token_;
    std::counting_semaphore<> in_flight_;
    std::mutex gate_;
    std::chrono::steady_clock::time_point last_request_{};
};

}  // namespace detail

// Embedding service client; safe for concurrent embed() calls.
class HttpEmbeddingProvider final : public EmbeddingProvider {
  public:
    explicit HttpEmbeddingProvider(HttpProviderOptions opts)
        : name_(opts.name.empty() ? "http-embedding" : opts.name),
          dimension_(opts.dimension),
          requester_(std::make_unique<detail::HttpRequester>(
              [&] {
                  if (opts.name.empty()) opts.name = "http-embedding";
                  if (opts.path.empty()) opts.path = "/embed";
                  return opts;
              }())) {
        if (dimension_ < 1) throw std::invalid_argument("dimension must be >= 1");
    }

    const std::string& name() const override { return name_; }
    int dimension() const override { return dimension_; }

    std::vector<float> embed(const std::string& text) const override {
        nlohmann::json reply = requester_->post_json({{"text", text}});
        if (!reply.contains("vector") || !reply["vector"].is_array()) {
            throw std::runtime_error(name_ + ": reply lacks a \"vector\" array");
        }
        std::vector<float> out;
        out.reserve(reply["vector"].size());
        for (const auto& v : reply["vector"]) out.push_back(v.get<float>());
        if (static_cast<int>(out.size()) != dimension_) {
            throw std::runtime_error(name_ + ": expected " +
                                     std::to_string(dimension_) + " components, got " +
                                     std::to_string(out.size()));
        }
        return out;
    }

  private:
    std::string name_;
    int dimension_;
    // unique_ptr keeps embed() const while the requester mutates its gate.
    std::unique_ptr<detail::HttpRequester> requester_;
};

// Generation service client with wall-clock latency capture.
class HttpLLMProvider final : public LLMProvider {
  public:
    explicit HttpLLMProvider(HttpProviderOptions opts)
        : name_(opts.name.empty() ? "http-llm" : opts.name),
          model_(opts.model),
          requester_([&] {
              if (opts.name.empty()) opts.name = "http-llm";
              if (opts.path.empty()) opts.path = "/generate";
              return opts;
          }()) {}

    const std::string& name() const override { return name_; }

    GenerationResult generate(const std::string& prompt, int response_tokens) override {
        nlohmann::json body{{"prompt", prompt}};
        if (response_tokens > 0) body["max_tokens"] = response_tokens;
        if (!model_.empty()) body["model"] = model_;
        auto start = std::chrono::steady_clock::now();
        nlohmann::json reply = requester_.post_json(body);
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                     start);
        if (!reply.contains("text") || !reply["text"].is_string()) {
            throw std::runtime_error(name_ + ": reply lacks a \"text\" string");
        }
        return {reply["text"].get<std::string>(), elapsed.count()};
    }

  private:
    std::string name_;
    std::string model_;
    detail::HttpRequester requester_;
};

}  // namespace pshrink
