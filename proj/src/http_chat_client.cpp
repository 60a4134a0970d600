#include <httplib.h>

#include "poetics/generation.hpp"

namespace poetics {

HttpChatClient::HttpChatClient(std::string endpoint_url, std::string api_key, std::chrono::seconds timeout)
    : api_key_(std::move(api_key)), timeout_(timeout) {
  auto scheme = endpoint_url.find("://");
  if (scheme == std::string::npos) throw Error("endpoint must be a URL such as https://host/v1/chat/completions");
  auto slash = endpoint_url.find('/', scheme + 3);
  if (slash == std::string::npos) {
    base_ = endpoint_url;
    path_ = "/v1/chat/completions";
  } else {
    base_ = endpoint_url.substr(0, slash);
    path_ = endpoint_url.substr(slash);
  }
}

ChatResponse HttpChatClient::complete(const ChatRequest& request) {
  // One client per call: httplib::Client is not meant for concurrent use.
  httplib::Client cli(base_);
  cli.set_connection_timeout(timeout_);
  cli.set_read_timeout(timeout_);
  cli.set_write_timeout(timeout_);
  httplib::Headers headers;
  if (!api_key_.empty()) headers.emplace("Authorization", "Bearer " + api_key_);

  auto res = cli.Post(path_, headers, chat_request_body(request), "application/json");
  if (!res) return ChatResponse{0, {}, httplib::to_string(res.error())};
  ChatResponse out;
  out.status = res->status;
  if (res->status >= 200 && res->status < 300) {
    try {
      out.content = parse_chat_content(res->body);
    } catch (const Error& e) {
      // A 2xx with an unusable body is a permanent failure for this spec.
      out.status = 422;
      out.error = e.what();
    }
  } else {
    out.error = res->body.substr(0, 500);
  }
  return out;
}

}  // namespace poetics
