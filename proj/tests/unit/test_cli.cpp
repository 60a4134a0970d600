#include <doctest.h>

#include <httplib.h>

#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "poetics/corpus.hpp"
#include "test_support.hpp"

using testing::cli;
using testing::fixture;
using testing::quote;
using testing::run_command;
using testing::TempDir;

namespace {

std::string dict_flag() { return " --dict " + quote(fixture("cmudict_subset.dict")); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

// Minimal chat-completions endpoint on a random local port.
class MockEndpoint {
public:
  MockEndpoint() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req, httplib::Response& res) {
      auto body = nlohmann::json::parse(req.body);
      {
        std::lock_guard lock(mutex_);
        ++requests_;
      }
      nlohmann::json reply = {
          {"choices", {{{"message", {{"role", "assistant"}, {"content", "Mock poem for\n" + body["messages"][0]["content"].get<std::string>()}}}}}}};
      res.set_content(reply.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockEndpoint() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions"; }
  int requests() {
    std::lock_guard lock(mutex_);
    return requests_;
  }

private:
  httplib::Server server_;
  std::thread thread_;
  std::mutex mutex_;
  int requests_ = 0;
  int port_ = 0;
};

}  // namespace

TEST_CASE("version and help exit cleanly") {
  CHECK(run_command(cli() + " --version").output.find("0.1.0") != std::string::npos);
  CHECK(run_command(cli() + " --help >/dev/null").exit_code == 0);
}

TEST_CASE("missing corpus path is a usage error") {
  auto r = run_command(cli() + dict_flag() + " analyze /nonexistent/corpus.jsonl 2>/dev/null");
  CHECK(r.exit_code == 2);
  CHECK(run_command(cli() + " 2>/dev/null").exit_code == 2);
  CHECK(run_command(cli() + " analyze --bogus x 2>/dev/null").exit_code == 2);
}

TEST_CASE("module errors exit nonzero with the message") {
  TempDir dir;
  testing::write_file(dir / "bad.jsonl", "{\"id\":\"a\",\"source\":\"human\"}\n");
  auto r = run_command(cli() + " structure " + quote(dir / "bad.jsonl") + " 2>&1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("bad.jsonl:1") != std::string::npos);
}

TEST_CASE("dry run prints the full prompt grid") {
  auto r = run_command(cli() + " generate --dry-run");
  CHECK(r.exit_code == 0);
  CHECK(line_count(r.output) == 2880);
  auto subset = run_command(cli() + " generate --dry-run --styles limerick --subjects 'social commentaries'");
  CHECK(subset.output == testing::read_file(fixture("golden_prompts.txt")));
}

TEST_CASE("analyze writes tables for one corpus") {
  TempDir dir;
  auto r = run_command(cli() + dict_flag() + " --out " + quote(dir / "rep") + " analyze " +
                       quote(fixture("human.jsonl")) + " 2>/dev/null");
  REQUIRE(r.exit_code == 0);
  for (auto t : {"lengths", "quatrains", "rhyme", "meter", "pronouns", "touchstones"})
    CHECK(std::filesystem::exists(dir / "rep" / "tables" / (std::string(t) + ".csv")));
  CHECK_FALSE(std::filesystem::exists(dir / "rep" / "tables" / "logodds.csv"));
}

TEST_CASE("subcommands print one table family to stdout") {
  auto r = run_command(cli() + dict_flag() + " rhyme " + quote(fixture("gpt4.jsonl")));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pooled_rhymed_fraction") != std::string::npos);
  auto j = run_command(cli() + " --format json structure " + quote(fixture("quatrains.jsonl")));
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"poems_with_quatrain\": 2") != std::string::npos);
  auto d = run_command(cli() + " lexstats --source human " + quote(fixture("textdir")));
  CHECK(d.exit_code == 0);
  CHECK(d.output.find("first_plural") != std::string::npos);
}

TEST_CASE("compare needs two corpora and reports distinctive words") {
  TempDir dir;
  auto r = run_command(cli() + dict_flag() + " --out " + quote(dir / "cmp") + " compare --min-docs 2 " +
                       quote(fixture("human.jsonl")) + " " + quote(fixture("gpt4.jsonl")) + " 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(dir / "cmp" / "tables" / "logodds.csv"));
  CHECK(std::filesystem::exists(dir / "cmp" / "tables" / "first_words.csv"));
  auto one = run_command(cli() + " compare " + quote(fixture("human.jsonl")) + " 2>/dev/null");
  CHECK(one.exit_code == 2);
}

TEST_CASE("generate against a mock endpoint, then resume a partial file") {
  MockEndpoint endpoint;
  TempDir dir;
  auto out = dir / "gen.jsonl";
  std::string base = cli() + " --out " + quote(out) + " generate --model gpt-4 --endpoint " + endpoint.url() +
                     " --api-key-env POETICS_TEST_KEY --styles haiku,ode --subjects love,nature";
  auto first = run_command("POETICS_TEST_KEY=k " + base + " 2>/dev/null");
  REQUIRE(first.exit_code == 0);
  auto corpus = poetics::load_corpus(out, poetics::CorpusFormat::json_lines);
  CHECK(corpus.size() == 12);
  CHECK(endpoint.requests() == 12);

  // keep half, plus a torn final line
  auto text = testing::read_file(out);
  std::size_t cut = 0;
  for (int i = 0; i < 6; ++i) cut = text.find('\n', cut) + 1;
  testing::write_file(out, text.substr(0, cut) + text.substr(cut, 25));

  CHECK(run_command("POETICS_TEST_KEY=k " + base + " 2>/dev/null").exit_code != 0);  // refuses to overwrite
  auto resumed = run_command("POETICS_TEST_KEY=k " + base + " --resume 2>/dev/null");
  CHECK(resumed.exit_code == 0);
  CHECK(endpoint.requests() == 18);
  auto again = poetics::load_corpus(out, poetics::CorpusFormat::json_lines);
  std::set<std::string> ids;
  for (const auto& r : again.records) ids.insert(r.id);
  CHECK(again.size() == 12);
  CHECK(ids.size() == 12);
}
