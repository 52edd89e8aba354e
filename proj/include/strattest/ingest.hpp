#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "strattest/core.hpp"

namespace strattest {

struct SubjectRecord {
  std::string subject_id;  // file stem
  PlaySequence sequence;
};

struct SubjectIssue {
  std::string subject_id;
  std::string message;
};

struct DatasetLoad {
  std::vector<SubjectRecord> records;   // sorted by subject_id
  std::vector<SubjectIssue> failures;   // files that did not parse
  std::vector<SubjectIssue> warnings;   // e.g. unexpected sequence length
};

/// Parses a delimited list of integer category indices. Tokens are split
/// on commas and line breaks, surrounding whitespace is trimmed, and
/// empty fields are ignored. Token positions in error messages are
/// 1-based.
PlaySequence parse_sequence_file(const std::string& content, const ActionAlphabet& alphabet);

/// Comma-separated form accepted back by parse_sequence_file.
std::string format_sequence(const PlaySequence& seq);

/// Loads every *.csv file in the directory, one subject per file. A file
/// that fails to parse is recorded as a failure and does not abort the
/// load. When expected_length is set, other lengths produce a warning.
DatasetLoad load_dataset(const std::filesystem::path& directory,
                         const ActionAlphabet& alphabet,
                         std::optional<long long> expected_length = std::nullopt);

}  // namespace strattest
