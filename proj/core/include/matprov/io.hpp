#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "matprov/errors.hpp"
#include "matprov/eval.hpp"
#include "matprov/prov_model.hpp"

namespace matprov {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Dataset layout: one JSON file per paper, filename derived from the DOI with
// "/" replaced by "_".
std::string filename_from_doi(std::string_view doi);
std::string doi_from_filename(const std::filesystem::path& path);

struct CorpusFile {
  std::filesystem::path path;
  std::string doi;
  ProcedureDocument doc;
};

// Loads a single file or every *.json in a directory (lexicographic order).
// Sets source_doi on each procedure from the filename.
std::vector<CorpusFile> load_corpus(const std::filesystem::path& file_or_dir);

// Flattens a corpus into one procedure list, preserving file order.
std::vector<SynthesisProcedure> corpus_procedures(const std::vector<CorpusFile>& corpus);

// Variant table file: JSON object mapping canonical strings to arrays of
// acceptable alternatives.
VariantTable load_variant_table(const std::filesystem::path& path);

// Minimal CSV quoting: wraps fields containing commas, quotes or newlines.
std::string csv_field(std::string_view field);

}  // namespace matprov
