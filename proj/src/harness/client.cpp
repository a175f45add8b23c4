#include "folbench/harness/client.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "folbench/errors.hpp"
#include "folbench/rng.hpp"

namespace folbench::harness {

std::string ModelClient::chat(const ChatRequest&) {
  throw ClientError(name() + " has no dialogue operation");
}

std::vector<double> ModelClient::embed(const std::string&, const std::optional<std::string>&) {
  throw ClientError(name() + " has no embedding operation");
}

namespace {

std::string reply(const std::string& reasoning, const nlohmann::json& answer) {
  return nlohmann::json{{"reasoning", reasoning}, {"answer", answer}}.dump();
}

// Number of candidate lines in a choice prompt.
std::size_t count_candidates(const std::string& user) {
  std::size_t n = 0;
  std::istringstream in(user);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (!line.empty()) ++n;
  }
  return n;
}

}  // namespace

std::string FixedAnswerMock::chat(const ChatRequest& req) {
  if (req.tag.task == "logical_translation") return reply("fixed", formula_);
  if (req.tag.task == "ranking") {
    nlohmann::json order = nlohmann::json::array();
    for (std::size_t i = 1; i <= count_candidates(req.user); ++i) order.push_back(i);
    return reply("fixed", order);
  }
  return reply("fixed", position_);
}

ReplayMock::ReplayMock(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot read replay file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  load(ss.str());
}

ReplayMock ReplayMock::from_text(const std::string& jsonl) {
  ReplayMock m;
  m.load(jsonl);
  return m;
}

void ReplayMock::load(const std::string& jsonl) {
  std::istringstream in(jsonl);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
      throw ConfigError("replay line " + std::to_string(lineno) + " is not a JSON object");
    if (j.contains("vector")) {
      vectors_[{j.value("instruction", ""), j.at("text").get<std::string>()}] =
          j.at("vector").get<std::vector<double>>();
      continue;
    }
    const auto text = j.contains("reply") ? j["reply"] : j.value("raw_reply", nlohmann::json());
    if (!text.is_string())
      throw ConfigError("replay line " + std::to_string(lineno) + " has no reply");
    replies_[{j.at("instance_id").get<std::string>(), j.at("seed").get<std::uint64_t>(),
              j.at("task").get<std::string>()}] = text.get<std::string>();
  }
}

std::string ReplayMock::chat(const ChatRequest& req) {
  const auto it = replies_.find({req.tag.instance_id, req.tag.seed, req.tag.task});
  if (it == replies_.end())
    throw ClientError("no recorded reply for " + req.tag.instance_id + " seed " +
                      std::to_string(req.tag.seed) + " task " + req.tag.task);
  return it->second;
}

std::vector<double> ReplayMock::embed(const std::string& text,
                                      const std::optional<std::string>& instruction) {
  const auto it = vectors_.find({instruction.value_or(""), text});
  if (it == vectors_.end()) throw ClientError("no recorded vector for '" + text + "'");
  return it->second;
}

std::vector<double> HashEmbeddingClient::embed(const std::string& text,
                                               const std::optional<std::string>& instruction) {
  Rng rng(mix64(fnv1a64(instruction.value_or("") + '\x1f' + text) ^ salt_));
  std::vector<double> v(dim_);
  double norm = 0;
  // Box-Muller on raw draws keeps the vectors identical across standard
  // libraries.
  for (std::size_t i = 0; i < dim_; ++i) {
    const double u1 = (static_cast<double>(rng.next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
    v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    norm += v[i] * v[i];
  }
  norm = std::sqrt(norm);
  for (auto& x : v) x /= norm;
  return v;
}

nlohmann::json chat_request_body(const ChatRequest& req, const std::string& model) {
  nlohmann::json body = {
      {"model", model},
      {"messages",
       {{{"role", "system"}, {"content", req.system}}, {{"role", "user"}, {"content", req.user}}}},
      {"seed", req.seed},
      {"max_completion_tokens", req.max_tokens},
  };
  if (!req.schema.is_null())
    body["response_format"] = {
        {"type", "json_schema"},
        {"json_schema", {{"name", "reply"}, {"strict", true}, {"schema", req.schema}}}};
  return body;
}

}  // namespace folbench::harness
