#pragma once

#include <map>
#include <string>
#include <vector>

#include "folbench/harness/client.hpp"
#include "folbench/harness/runner.hpp"

namespace folbench::harness {

/// Knows the dataset and configuration, so it can rebuild every candidate
/// set and answer correctly: the gold formula for translations, the
/// Original's position for most similar, and for rankings Original and
/// Equivalent first, the negation pair last.
class OracleMock : public ModelClient {
 public:
  OracleMock(const std::vector<fol::Instance>& data, RunConfig cfg);
  std::string name() const override { return "oracle"; }
  std::string chat(const ChatRequest& req) override;

 private:
  std::map<std::string, const fol::Instance*> by_id_;
  RunConfig cfg_;
};

/// Translation-only mock answering with the gold formula, an equivalent
/// rewrite of it, or its negation.
class ScriptedTranslationMock : public ModelClient {
 public:
  enum class Mode { Gold, Rewrite, Negate };
  ScriptedTranslationMock(const std::vector<fol::Instance>& data, Mode mode);
  std::string name() const override { return "scripted-translation"; }
  std::string chat(const ChatRequest& req) override;

 private:
  std::map<std::string, const fol::Instance*> by_id_;
  Mode mode_;
};

}  // namespace folbench::harness
