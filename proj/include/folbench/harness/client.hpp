#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace folbench::harness {

/// Identifies the record a request belongs to. Real endpoints ignore it;
/// mocks use it to pick their answer.
struct RequestTag {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::string task;
  std::string variant;
};

struct ChatRequest {
  std::string system;
  std::string user;
  std::uint64_t seed = 0;
  int max_tokens = 2500;
  /// JSON schema the reply must follow; empty for free text.
  nlohmann::json schema;
  RequestTag tag;
};

/// Dialogue and embedding operations. Implementations must be safe to call
/// from several threads at once. Failures are reported as ClientError.
class ModelClient {
 public:
  virtual ~ModelClient() = default;
  virtual std::string name() const = 0;
  /// Raw reply text (the structured JSON as a string).
  virtual std::string chat(const ChatRequest& req);
  virtual std::vector<double> embed(const std::string& text,
                                    const std::optional<std::string>& instruction);
};

/// Answers every choice request with the same position (and the identity
/// order for rankings); translation requests get `formula_text`.
class FixedAnswerMock : public ModelClient {
 public:
  explicit FixedAnswerMock(long long position = 1, std::string formula_text = "P(a)")
      : position_(position), formula_(std::move(formula_text)) {}
  std::string name() const override { return "fixed-answer"; }
  std::string chat(const ChatRequest& req) override;

 private:
  long long position_;
  std::string formula_;
};

/// Replies read from a JSONL file. Chat lines carry instance_id, seed, task
/// and reply (or raw_reply, so a run's records.jsonl can be replayed);
/// embedding lines carry text, optional instruction, and vector.
class ReplayMock : public ModelClient {
 public:
  explicit ReplayMock(const std::filesystem::path& file);
  static ReplayMock from_text(const std::string& jsonl);
  std::string name() const override { return "replay"; }
  std::string chat(const ChatRequest& req) override;
  std::vector<double> embed(const std::string& text,
                            const std::optional<std::string>& instruction) override;

 private:
  ReplayMock() = default;
  void load(const std::string& jsonl);
  std::map<std::tuple<std::string, std::uint64_t, std::string>, std::string> replies_;
  std::map<std::pair<std::string, std::string>, std::vector<double>> vectors_;
};

/// Deterministic pseudo-random unit vectors seeded by a hash of the text.
/// Distinct texts get (nearly) orthogonal vectors for large dimensions.
class HashEmbeddingClient : public ModelClient {
 public:
  explicit HashEmbeddingClient(std::size_t dim = 256, std::uint64_t salt = 0)
      : dim_(dim), salt_(salt) {}
  std::string name() const override { return "hash-embedding"; }
  std::vector<double> embed(const std::string& text,
                            const std::optional<std::string>& instruction) override;

 private:
  std::size_t dim_;
  std::uint64_t salt_;
};

struct HttpSettings {
  /// Full URL of the chat-completions or embeddings endpoint.
  std::string endpoint;
  std::string model;
  /// Environment variable holding the bearer token.
  std::string token_env = "FOLBENCH_API_TOKEN";
  int timeout_s = 120;
};

/// Chat-completions style endpoint: POST {model, messages, seed,
/// max_completion_tokens, response_format}; reply in
/// choices[0].message.content.
class HttpChatClient : public ModelClient {
 public:
  explicit HttpChatClient(HttpSettings s) : s_(std::move(s)) {}
  std::string name() const override { return s_.model; }
  std::string chat(const ChatRequest& req) override;

 private:
  HttpSettings s_;
};

/// Embeddings style endpoint: POST {model, input}; vector in
/// data[0].embedding. The instruction, if any, is prepended to the input.
class HttpEmbeddingClient : public ModelClient {
 public:
  explicit HttpEmbeddingClient(HttpSettings s) : s_(std::move(s)) {}
  std::string name() const override { return s_.model; }
  std::vector<double> embed(const std::string& text,
                            const std::optional<std::string>& instruction) override;

 private:
  HttpSettings s_;
};

/// Body sent to a chat endpoint; exposed for tests.
nlohmann::json chat_request_body(const ChatRequest& req, const std::string& model);

}  // namespace folbench::harness
