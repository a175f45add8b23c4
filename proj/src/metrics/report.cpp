#include "folbench/metrics/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace folbench::metrics {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_score(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

void ScoreReport::sort() {
  std::stable_sort(records.begin(), records.end(), [](const ScoreRecord& a, const ScoreRecord& b) {
    return std::tie(a.instance_id, a.seed, a.task, a.variant) < std::tie(b.instance_id, b.seed, b.task, b.variant);
  });
}

std::vector<TaskSummary> ScoreReport::summaries() const {
  std::map<std::string, TaskSummary> by_task;
  std::map<std::string, std::map<std::uint64_t, std::pair<double, std::size_t>>> seed_sums;
  for (const auto& r : records) {
    auto& s = by_task[r.task];
    s.task = r.task;
    ++s.n;
    s.mean += r.score;
    auto& [sum, count] = seed_sums[r.task][r.seed];
    sum += r.score;
    ++count;
    for (const auto& f : r.flags) ++s.flag_counts[f];
  }
  std::vector<TaskSummary> out;
  for (auto& [task, s] : by_task) {
    s.mean /= static_cast<double>(s.n);
    double m = 0;
    for (const auto& [seed, sc] : seed_sums[task]) {
      s.per_seed_mean[seed] = sc.first / static_cast<double>(sc.second);
      m += s.per_seed_mean[seed];
    }
    m /= static_cast<double>(s.per_seed_mean.size());
    double ss = 0;
    for (const auto& [seed, v] : s.per_seed_mean) ss += (v - m) * (v - m);
    s.std_across_seeds = std::sqrt(ss / static_cast<double>(s.per_seed_mean.size()));
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<TaskSummary> ScoreReport::summary(const std::string& task) const {
  for (auto& s : summaries())
    if (s.task == task) return s;
  return std::nullopt;
}

nlohmann::json ScoreReport::to_json() const {
  nlohmann::json j;
  j["summary"] = nlohmann::json::array();
  for (const auto& s : summaries()) {
    nlohmann::json e{{"task", s.task}, {"n", s.n}, {"mean", s.mean}, {"std_across_seeds", s.std_across_seeds}};
    for (const auto& [seed, v] : s.per_seed_mean) e["per_seed_mean"][std::to_string(seed)] = v;
    e["flag_counts"] = s.flag_counts;
    j["summary"].push_back(std::move(e));
  }
  j["statistics"] = nlohmann::json::object();
  for (const auto& [k, v] : statistics) j["statistics"][k] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  j["records"] = nlohmann::json::array();
  for (const auto& r : records)
    j["records"].push_back({{"instance_id", r.instance_id},
                            {"seed", r.seed},
                            {"task", r.task},
                            {"variant", r.variant},
                            {"score", r.score},
                            {"flags", r.flags}});
  return j;
}

ScoreReport ScoreReport::from_json(const nlohmann::json& j) {
  ScoreReport r;
  for (const auto& e : j.at("records")) {
    ScoreRecord s;
    s.instance_id = e.at("instance_id").get<std::string>();
    s.seed = e.at("seed").get<std::uint64_t>();
    s.task = e.at("task").get<std::string>();
    s.variant = e.value("variant", "");
    s.score = e.at("score").get<double>();
    s.flags = e.value("flags", std::vector<std::string>{});
    r.records.push_back(std::move(s));
  }
  if (j.contains("statistics"))
    for (const auto& [k, v] : j["statistics"].items())
      r.statistics[k] = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
  return r;
}

std::string ScoreReport::to_csv() const {
  std::string out = "instance_id,seed,task,variant,score,flags\n";
  for (const auto& r : records) {
    std::string flags;
    for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
    out += csv_field(r.instance_id) + "," + std::to_string(r.seed) + "," + csv_field(r.task) + "," +
           csv_field(r.variant) + "," + format_score(r.score) + "," + csv_field(flags) + "\n";
  }
  return out;
}

}  // namespace folbench::metrics
