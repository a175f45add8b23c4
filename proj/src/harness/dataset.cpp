#include "folbench/harness/dataset.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "folbench/errors.hpp"
#include "folbench/fol/normal_form.hpp"
#include "folbench/fol/ontology_io.hpp"
#include "folbench/fol/parser.hpp"

namespace folbench::harness {

using nlohmann::json;

const char* format_name(DatasetFormat f) noexcept {
  return f == DatasetFormat::TripleJsonl ? "triple_jsonl" : "folio_like";
}

std::optional<DatasetFormat> format_from_name(const std::string& s) {
  if (s == "triple_jsonl") return DatasetFormat::TripleJsonl;
  if (s == "folio_like") return DatasetFormat::FolioLike;
  return std::nullopt;
}

namespace {

class OntologyCache {
 public:
  explicit OntologyCache(std::filesystem::path base) : base_(std::move(base)) {}

  std::shared_ptr<const fol::Ontology> get(const json& ref, const std::string& record_id) {
    try {
      if (ref.is_object()) return std::make_shared<const fol::Ontology>(fol::ontology_from_json(ref));
      if (ref.is_string()) {
        auto p = std::filesystem::path(ref.get<std::string>());
        if (p.is_relative()) p = base_ / p;
        const auto key = p.lexically_normal().string();
        auto it = cache_.find(key);
        if (it == cache_.end())
          it = cache_.emplace(key, std::make_shared<const fol::Ontology>(fol::load_ontology(p))).first;
        return it->second;
      }
    } catch (const Error& e) {
      throw OntologyMismatch("record " + record_id + ": bad ontology: " + e.what());
    } catch (const std::exception& e) {
      throw OntologyMismatch("record " + record_id + ": cannot read ontology: " + e.what());
    }
    throw OntologyMismatch("record " + record_id + ": missing ontology");
  }

 private:
  std::filesystem::path base_;
  std::map<std::string, std::shared_ptr<const fol::Ontology>> cache_;
};

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(e.get<std::string>());
  } else if (j.is_string()) {
    std::stringstream ss(j.get<std::string>());
    std::string line;
    while (std::getline(ss, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  }
  return out;
}

// Returns false when the record is dropped for XOR.
bool add_instance(IngestResult& out, const std::string& id, const std::string& nl,
                  const std::string& fol_text, std::shared_ptr<const fol::Ontology> onto) {
  fol::Formula f = fol::Formula::atom("_");
  try {
    f = fol::parse_formula(fol_text, onto->signature);
  } catch (const XorRejected&) {
    ++out.dropped_xor;
    out.dropped_ids.push_back(id);
    return false;
  } catch (const SyntaxError& e) {
    throw ParseFailure("record " + id + ": " + e.what());
  } catch (const UnknownSymbol& e) {
    throw OntologyMismatch("record " + id + ": " + e.what());
  } catch (const ArityMismatch& e) {
    throw OntologyMismatch("record " + id + ": " + e.what());
  }
  if (!fol::is_closed(f)) {
    std::string vars;
    for (const auto& v : fol::free_vars(f)) vars += (vars.empty() ? "" : ", ") + v;
    throw ParseFailure("record " + id + ": formula has free variables: " + vars);
  }
  out.instances.push_back({id, nl, f, std::move(onto)});
  return true;
}

}  // namespace

IngestResult ingest_dataset_text(const std::string& text, DatasetFormat format,
                                 const std::filesystem::path& base_dir) {
  IngestResult out;
  OntologyCache ontologies(base_dir);
  std::stringstream ss(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseFailure("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    if (format == DatasetFormat::TripleJsonl) {
      const auto id = rec.contains("id") ? (rec["id"].is_string() ? rec["id"].get<std::string>() : rec["id"].dump())
                                         : std::to_string(line_no);
      if (!rec.contains("fol") || !rec.contains("nl"))
        throw ParseFailure("record " + id + ": missing 'nl' or 'fol'");
      add_instance(out, id, rec["nl"].get<std::string>(), rec["fol"].get<std::string>(),
                   ontologies.get(rec.value("ontology", json()), id));
    } else {
      const auto story = rec.contains("story_id")
                             ? (rec["story_id"].is_string() ? rec["story_id"].get<std::string>() : rec["story_id"].dump())
                             : std::to_string(line_no);
      const auto nl = string_list(rec.value("premises", json()));
      const auto fol_lines = string_list(rec.value("premises-FOL", json()));
      if (nl.size() != fol_lines.size())
        throw ParseFailure("story " + story + ": " + std::to_string(nl.size()) + " premises but " +
                           std::to_string(fol_lines.size()) + " formulas");
      auto onto = ontologies.get(rec.value("ontology", json()), story);
      for (std::size_t i = 0; i < nl.size(); ++i)
        add_instance(out, story + "-" + std::to_string(i), nl[i], fol_lines[i], onto);
    }
  }
  return out;
}

IngestResult ingest_dataset(const std::filesystem::path& path, DatasetFormat format) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open dataset " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ingest_dataset_text(buf.str(), format, path.parent_path());
}

}  // namespace folbench::harness
