#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "folbench/fol/signature.hpp"

namespace folbench::harness {

// triple_jsonl: one object per line
//   {"id": "...", "nl": "...", "fol": "...", "ontology": {...} | "path.json"}
// folio_like: one story per line
//   {"story_id": "...", "premises": [...] | "a\nb", "premises-FOL": [...] | "a\nb",
//    "ontology": {...} | "path.json"}
// Ontology paths are resolved against the dataset file's directory.
enum class DatasetFormat { TripleJsonl, FolioLike };

const char* format_name(DatasetFormat f) noexcept;
std::optional<DatasetFormat> format_from_name(const std::string& s);

struct IngestResult {
  std::vector<fol::Instance> instances;
  std::size_t dropped_xor = 0;
  std::vector<std::string> dropped_ids;
};

/// Parses every formula against its ontology. Records whose formula uses XOR
/// are dropped and counted. Throws ParseFailure (record id and position) on
/// malformed or open formulas and OntologyMismatch on undeclared symbols or
/// arity clashes.
IngestResult ingest_dataset(const std::filesystem::path& path, DatasetFormat format);
IngestResult ingest_dataset_text(const std::string& text, DatasetFormat format,
                                 const std::filesystem::path& base_dir = ".");

}  // namespace folbench::harness
