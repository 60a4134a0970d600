#include "poetics/generation.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "poetics/text.hpp"

namespace poetics {

using nlohmann::json;

std::string PromptSpec::key() const {
  return std::string(catalog::to_string(prompt_template)) + "|" + style + "|" + subject;
}

std::string render_prompt(catalog::Template t, std::string_view style, std::string_view subject) {
  std::string out = "Write a poem about the subject of ";
  out += subject;
  out += " in the following form or style: ";
  out += style;
  out += ".";
  switch (t) {
    case catalog::Template::general:
      break;
    case catalog::Template::figurative:
      out += " Do not use the actual word(s) ";
      out += subject;
      out += " or ";
      out += style;
      out += " in the poem.";
      break;
    case catalog::Template::specific:
      out += " Make the poem about something specific.";
      break;
  }
  return out;
}

std::vector<PromptSpec> build_grid(std::span<const std::string_view> styles,
                                   std::span<const std::string_view> subjects,
                                   std::span<const catalog::Template> templates) {
  if (styles.empty()) throw Error("prompt grid: no styles");
  if (subjects.empty()) throw Error("prompt grid: no subjects");
  if (templates.empty()) throw Error("prompt grid: no templates");
  std::vector<PromptSpec> grid;
  grid.reserve(styles.size() * subjects.size() * templates.size());
  for (auto t : templates)
    for (auto style : styles)
      for (auto subject : subjects)
        grid.push_back({t, std::string(style), std::string(subject), render_prompt(t, style, subject)});
  return grid;
}

std::vector<PromptSpec> build_full_grid() {
  return build_grid(catalog::styles(), catalog::subjects(), catalog::all_templates());
}

std::string chat_request_body(const ChatRequest& request) {
  nlohmann::ordered_json body;
  body["model"] = request.model;
  body["messages"] = json::array({{{"role", "user"}, {"content", request.prompt}}});
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  return body.dump();
}

std::string parse_chat_content(std::string_view body) {
  try {
    auto j = json::parse(body);
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw Error(std::string("unexpected chat-completions response: ") + e.what());
  }
}

std::chrono::milliseconds RetryPolicy::delay_for(int attempt) const {
  auto delay = base_delay;
  for (int i = 1; i < attempt && delay < max_delay; ++i) delay *= 2;
  return std::min(delay, max_delay);
}

Source source_for_model(std::string_view model) {
  auto lower = text::ascii_lower(model);
  if (lower.starts_with("gpt-4")) return Source{Source::Kind::gpt4, {}};
  if (lower.starts_with("gpt-3.5")) return Source{Source::Kind::gpt35, {}};
  return Source{Source::Kind::other_model, std::string(model)};
}

std::string generation_id(std::string_view model, const PromptSpec& spec) {
  return std::string(model) + "|" + spec.key();
}

std::filesystem::path failures_path(const std::filesystem::path& output) {
  auto p = output;
  p += ".failures.jsonl";
  return p;
}

namespace {

// Reads ids already present in the output, dropping an unterminated final
// line (a write cut short by a kill).
std::unordered_set<std::string> completed_ids(const std::filesystem::path& output) {
  std::unordered_set<std::string> ids;
  if (!std::filesystem::exists(output)) return ids;
  std::string data;
  {
    std::ifstream in(output, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    data = ss.str();
  }
  if (!data.empty() && data.back() != '\n') {
    auto keep = data.rfind('\n');
    keep = keep == std::string::npos ? 0 : keep + 1;
    std::filesystem::resize_file(output, keep);
    data.resize(keep);
  }
  for (auto line : text::split_lines(data)) {
    if (text::is_blank(line)) continue;
    auto j = json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("id") && j["id"].is_string()) ids.insert(j["id"].get<std::string>());
  }
  return ids;
}

class RateLimiter {
public:
  explicit RateLimiter(double per_minute) {
    if (per_minute > 0.0)
      interval_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(60.0 / per_minute));
  }

  void acquire() {
    if (interval_.count() == 0) return;
    std::chrono::steady_clock::time_point slot;
    {
      std::lock_guard lock(mutex_);
      auto now = std::chrono::steady_clock::now();
      slot = std::max(now, next_);
      next_ = slot + interval_;
    }
    std::this_thread::sleep_until(slot);
  }

private:
  std::mutex mutex_;
  std::chrono::steady_clock::duration interval_{0};
  std::chrono::steady_clock::time_point next_{};
};

bool retryable(int status) { return status == 0 || status == 429 || status >= 500; }

}  // namespace

JobResult run_job(const GenerationJob& job, ChatClient& client, const LogSink& log) {
  auto say = [&](const std::string& msg) {
    if (log) log(msg);
  };
  if (job.output.empty()) throw Error("generation job has no output path");
  if (job.output.has_parent_path()) std::filesystem::create_directories(job.output.parent_path());

  JobSummary summary;
  summary.requested = job.specs.size();
  auto done = completed_ids(job.output);

  std::vector<const PromptSpec*> pending;
  std::unordered_set<std::string> queued;
  for (const auto& spec : job.specs) {
    auto id = generation_id(job.model, spec);
    if (done.contains(id)) {
      ++summary.already_done;
    } else if (queued.insert(id).second) {
      pending.push_back(&spec);
    }
  }
  if (summary.already_done) say("resuming: " + std::to_string(summary.already_done) + " specs already complete");

  std::ofstream out(job.output, std::ios::app | std::ios::binary);
  if (!out) throw Error("cannot open " + job.output.string() + " for writing");
  std::ofstream failures;
  std::mutex write_mutex;
  RateLimiter limiter(job.max_requests_per_minute);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::atomic<std::size_t> completed{0}, failed{0}, retries{0};
  std::exception_ptr fatal;

  auto write_record = [&](const PromptSpec& spec, const std::string& id, const std::string& content) {
    nlohmann::ordered_json rec;
    rec["id"] = id;
    rec["text"] = content;
    rec["source"] = job.source.label();
    rec["style"] = spec.style;
    rec["subject"] = spec.subject;
    rec["template"] = std::string(catalog::to_string(spec.prompt_template));
    rec["model"] = job.model;
    rec["prompt"] = spec.rendered;
    std::lock_guard lock(write_mutex);
    out << rec.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    out.flush();
  };
  auto write_failure = [&](const PromptSpec& spec, const std::string& id, const ChatResponse& r, int attempts) {
    nlohmann::ordered_json row;
    row["id"] = id;
    row["template"] = std::string(catalog::to_string(spec.prompt_template));
    row["style"] = spec.style;
    row["subject"] = spec.subject;
    row["status"] = r.status;
    row["error"] = r.error;
    row["attempts"] = attempts;
    std::lock_guard lock(write_mutex);
    if (!failures.is_open()) failures.open(failures_path(job.output), std::ios::app | std::ios::binary);
    failures << row.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
    failures.flush();
  };

  auto worker = [&] {
    while (!abort) {
      auto idx = next.fetch_add(1);
      if (idx >= pending.size()) return;
      const auto& spec = *pending[idx];
      auto id = generation_id(job.model, spec);
      ChatRequest req{job.model, spec.rendered, job.temperature, job.max_tokens};
      ChatResponse resp;
      int attempt = 0;
      for (;;) {
        limiter.acquire();
        try {
          resp = client.complete(req);
        } catch (const std::exception& e) {
          resp = ChatResponse{0, {}, e.what()};
        }
        if (resp.status == 401 || resp.status == 403) {
          std::lock_guard lock(write_mutex);
          if (!fatal)
            fatal = std::make_exception_ptr(AuthError("authentication rejected (HTTP " +
                                                      std::to_string(resp.status) + "): " + resp.error));
          abort = true;
          return;
        }
        if (resp.status >= 200 && resp.status < 300) break;
        if (!retryable(resp.status) || attempt >= job.retry.max_retries) break;
        ++attempt;
        ++retries;
        say("retry " + std::to_string(attempt) + "/" + std::to_string(job.retry.max_retries) + " for " + id +
            " (status " + std::to_string(resp.status) + (resp.error.empty() ? "" : ": " + resp.error) + ")");
        std::this_thread::sleep_for(job.retry.delay_for(attempt));
        if (abort) return;
      }
      bool ok = resp.status >= 200 && resp.status < 300 && !text::trim(resp.content).empty();
      if (ok) {
        write_record(spec, id, resp.content);
        ++completed;
      } else {
        if (resp.error.empty() && resp.status >= 200 && resp.status < 300) resp.error = "empty completion";
        write_failure(spec, id, resp, attempt + 1);
        ++failed;
        say("failed " + id + " after " + std::to_string(attempt + 1) + " attempt(s)");
      }
    }
  };

  auto workers = std::min<std::size_t>(std::max<std::size_t>(job.concurrency, 1), pending.size());
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  out.close();

  summary.completed = completed;
  summary.failed = failed;
  summary.retries = retries;
  if (fatal) std::rethrow_exception(fatal);

  JobResult result;
  result.summary = summary;
  result.corpus = load_corpus(job.output, CorpusFormat::json_lines);
  return result;
}

}  // namespace poetics
