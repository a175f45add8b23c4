#include <cstdlib>
#include <regex>

#include <httplib.h>

#include "folbench/errors.hpp"
#include "folbench/harness/client.hpp"

namespace folbench::harness {

namespace {

struct Url {
  std::string origin;
  std::string path;
};

Url split_url(const std::string& url) {
  static const std::regex re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, re)) throw ConfigError("bad endpoint URL '" + url + "'");
  return {m[1].str(), m[2].matched ? m[2].str() : "/"};
}

nlohmann::json post(const HttpSettings& s, const nlohmann::json& body) {
  const auto url = split_url(s.endpoint);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (url.origin.rfind("https", 0) == 0) throw ClientError("built without TLS support");
#endif
  httplib::Client cli(url.origin);
  cli.set_connection_timeout(s.timeout_s);
  cli.set_read_timeout(s.timeout_s);
  cli.set_write_timeout(s.timeout_s);
  httplib::Headers headers;
  if (const char* token = std::getenv(s.token_env.c_str()); token && *token)
    headers.emplace("Authorization", std::string("Bearer ") + token);

  auto res = cli.Post(url.path, headers, body.dump(), "application/json");
  if (!res) throw ClientError("request to " + s.endpoint + " failed: " + httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300)
    throw ClientError("HTTP " + std::to_string(res->status) + " from " + s.endpoint + ": " +
                      res->body.substr(0, 300));
  auto j = nlohmann::json::parse(res->body, nullptr, false);
  if (j.is_discarded()) throw ClientError("non-JSON response from " + s.endpoint);
  return j;
}

}  // namespace

std::string HttpChatClient::chat(const ChatRequest& req) {
  const auto j = post(s_, chat_request_body(req, s_.model));
  try {
    return j.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception&) {
    throw ClientError("chat response without choices[0].message.content");
  }
}

std::vector<double> HttpEmbeddingClient::embed(const std::string& text,
                                               const std::optional<std::string>& instruction) {
  const nlohmann::json body = {{"model", s_.model}, {"input", instruction.value_or("") + text}};
  const auto j = post(s_, body);
  try {
    return j.at("data").at(0).at("embedding").get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    throw ClientError("embedding response without data[0].embedding");
  }
}

}  // namespace folbench::harness
