#include "strattest/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace strattest {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

PlaySequence parse_sequence_file(const std::string& content, const ActionAlphabet& alphabet) {
  std::vector<int> items;
  const int k = alphabet.size();
  size_t start = 0;
  long long position = 0;  // 1-based index over non-empty tokens
  while (start <= content.size()) {
    size_t end = content.find_first_of(",\n\r", start);
    if (end == std::string::npos) end = content.size();
    const std::string_view token = trim(std::string_view(content).substr(start, end - start));
    start = end + 1;
    if (token.empty()) continue;
    ++position;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("token \"" + std::string(token) + "\" at position " +
                                  std::to_string(position) + " is not an integer");
    if (value < 0 || value >= k)
      throw std::invalid_argument("value " + std::to_string(value) +
                                  " out of range at position " + std::to_string(position));
    items.push_back(value);
  }
  return PlaySequence(alphabet, std::move(items));
}

std::string format_sequence(const PlaySequence& seq) {
  std::ostringstream out;
  const auto& items = seq.items();
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ',';
    out << items[i];
  }
  return out.str();
}

DatasetLoad load_dataset(const std::filesystem::path& directory,
                         const ActionAlphabet& alphabet,
                         std::optional<long long> expected_length) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(directory))
    throw std::runtime_error("not a directory: " + directory.string());

  DatasetLoad load;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    const std::string subject_id = path.stem().string();
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      load.failures.push_back({subject_id, "could not open file"});
      continue;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      PlaySequence seq = parse_sequence_file(buffer.str(), alphabet);
      if (expected_length && seq.size() != *expected_length)
        load.warnings.push_back({subject_id,
                                 "sequence length " + std::to_string(seq.size()) +
                                     " differs from expected " +
                                     std::to_string(*expected_length)});
      load.records.push_back({subject_id, std::move(seq)});
    } catch (const std::exception& e) {
      load.failures.push_back({subject_id, e.what()});
    }
  }
  std::sort(load.records.begin(), load.records.end(),
            [](const SubjectRecord& a, const SubjectRecord& b) {
              return a.subject_id < b.subject_id;
            });
  return load;
}

}  // namespace strattest
