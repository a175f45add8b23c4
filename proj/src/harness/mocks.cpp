#include "folbench/harness/mocks.hpp"

#include <algorithm>

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/printer.hpp"
#include "folbench/transform/rewrite.hpp"

namespace folbench::harness {

namespace {

std::map<std::string, const fol::Instance*> index(const std::vector<fol::Instance>& data) {
  std::map<std::string, const fol::Instance*> m;
  for (const auto& inst : data) m[inst.id] = &inst;
  return m;
}

const fol::Instance& lookup(const std::map<std::string, const fol::Instance*>& m, const std::string& id) {
  const auto it = m.find(id);
  if (it == m.end()) throw ClientError("unknown instance '" + id + "'");
  return *it->second;
}

std::string reply(const nlohmann::json& answer) {
  return nlohmann::json{{"reasoning", "oracle"}, {"answer", answer}}.dump();
}

}  // namespace

OracleMock::OracleMock(const std::vector<fol::Instance>& data, RunConfig cfg)
    : by_id_(index(data)), cfg_(std::move(cfg)) {}

std::string OracleMock::chat(const ChatRequest& req) {
  const auto& inst = lookup(by_id_, req.tag.instance_id);
  if (req.tag.task == "logical_translation") return reply(fol::print_formula(inst.formula));

  RunConfig cfg = cfg_;
  cfg.task = req.tag.task;
  if (auto v = transform::variant_from_name(req.tag.variant)) cfg.variant = *v;
  const auto set = plan_choice_task(inst, cfg, req.tag.seed);
  const auto& a = set.answers;
  if (req.tag.task == "most_similar") return reply(a.original);

  std::vector<std::size_t> top{a.original}, bottom;
  if (a.equivalent) top.push_back(*a.equivalent);
  if (a.negation) bottom.push_back(*a.negation);
  if (a.negation_nnf) bottom.push_back(*a.negation_nnf);
  nlohmann::json order = top;
  for (std::size_t p = 1; p <= set.size(); ++p)
    if (std::find(top.begin(), top.end(), p) == top.end() &&
        std::find(bottom.begin(), bottom.end(), p) == bottom.end())
      order.push_back(p);
  for (auto p : bottom) order.push_back(p);
  return reply(order);
}

ScriptedTranslationMock::ScriptedTranslationMock(const std::vector<fol::Instance>& data, Mode mode)
    : by_id_(index(data)), mode_(mode) {}

std::string ScriptedTranslationMock::chat(const ChatRequest& req) {
  const auto& inst = lookup(by_id_, req.tag.instance_id);
  switch (mode_) {
    case Mode::Gold: return reply(fol::print_formula(inst.formula));
    case Mode::Rewrite:
      return reply(fol::print_formula(transform::equivalent_rewrite(inst.formula, req.tag.seed).formula));
    case Mode::Negate: return reply(fol::print_formula(fol::negate(inst.formula)));
  }
  return {};
}

}  // namespace folbench::harness
