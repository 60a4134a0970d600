#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poetics/catalog.hpp"
#include "poetics/corpus.hpp"
#include "poetics/error.hpp"

namespace poetics {

struct PromptSpec {
  catalog::Template prompt_template = catalog::Template::general;
  std::string style;
  std::string subject;
  std::string rendered;

  // "<template>|<style>|<subject>"; unique within a grid.
  std::string key() const;
};

// "Write a poem about the subject of X in the following form or style: Y."
// plus the template's suffix.
std::string render_prompt(catalog::Template t, std::string_view style, std::string_view subject);

// Cartesian product in (template, style, subject) order. Throws Error if any
// input is empty.
std::vector<PromptSpec> build_grid(std::span<const std::string_view> styles,
                                   std::span<const std::string_view> subjects,
                                   std::span<const catalog::Template> templates);

// 3 templates x 24 styles x 40 subjects.
std::vector<PromptSpec> build_full_grid();

struct ChatRequest {
  std::string model;
  std::string prompt;
  double temperature = 1.0;
  int max_tokens = 1024;
};

struct ChatResponse {
  int status = 0;  // HTTP status; 0 when the request never completed
  std::string content;
  std::string error;
};

class ChatClient {
public:
  virtual ~ChatClient() = default;
  // Must be safe to call from several threads at once.
  virtual ChatResponse complete(const ChatRequest& request) = 0;
};

// Body of an OpenAI-compatible chat-completions request: one user message,
// no system message.
std::string chat_request_body(const ChatRequest& request);

// Extracts choices[0].message.content. Throws Error on an unexpected shape.
std::string parse_chat_content(std::string_view body);

// POSTs to an OpenAI-compatible endpoint such as
// "https://api.openai.com/v1/chat/completions" with a bearer token.
class HttpChatClient final : public ChatClient {
public:
  HttpChatClient(std::string endpoint_url, std::string api_key,
                 std::chrono::seconds timeout = std::chrono::seconds(120));
  ChatResponse complete(const ChatRequest& request) override;

private:
  std::string base_;  // scheme://host[:port]
  std::string path_;
  std::string api_key_;
  std::chrono::seconds timeout_;
};

struct RetryPolicy {
  int max_retries = 5;
  std::chrono::milliseconds base_delay{1000};
  std::chrono::milliseconds max_delay{60000};

  std::chrono::milliseconds delay_for(int attempt) const;  // attempt >= 1
};

struct GenerationJob {
  std::string model;
  Source source;
  std::vector<PromptSpec> specs;
  double temperature = 1.0;
  int max_tokens = 1024;
  RetryPolicy retry;
  double max_requests_per_minute = 0.0;  // <= 0: no ceiling
  std::size_t concurrency = 4;
  std::filesystem::path output;
};

// Default corpus label for a model name: gpt-4* -> gpt4, gpt-3.5* -> gpt35,
// anything else -> model:<name>.
Source source_for_model(std::string_view model);

// Record id for a completed spec: "<model>|<template>|<style>|<subject>".
std::string generation_id(std::string_view model, const PromptSpec& spec);

// Failure rows go next to the output: "<output>.failures.jsonl".
std::filesystem::path failures_path(const std::filesystem::path& output);

class AuthError : public Error {
public:
  using Error::Error;
};

struct JobSummary {
  std::size_t requested = 0;
  std::size_t already_done = 0;
  std::size_t completed = 0;
  std::size_t failed = 0;
  std::size_t retries = 0;
};

struct JobResult {
  JobSummary summary;
  Corpus corpus;  // the output file as it stands after the run
};

using LogSink = std::function<void(const std::string&)>;

// Sends every spec not already present in `job.output`, appending one JSON
// Lines record per completion as it arrives. A truncated final line left by
// an interrupted run is dropped before resuming. Throttling (429), server
// errors (5xx) and transport failures are retried with exponential backoff;
// a spec that still fails is written to the failures file and skipped. An
// authentication failure (401/403) stops the job and throws AuthError.
JobResult run_job(const GenerationJob& job, ChatClient& client, const LogSink& log = {});

}  // namespace poetics
