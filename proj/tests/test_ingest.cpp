#include "strattest/ingest.hpp"

#include <filesystem>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "test_util.hpp"

using namespace strattest;
using namespace strattest::testing;

namespace {
const std::filesystem::path kDataDir = STRATTEST_TEST_DATA_DIR;
}

TEST_CASE("comma and newline delimiters both parse") {
  const ActionAlphabet abc(3);
  CHECK(parse_sequence_file("0,1,2,0", abc).items() == std::vector<int>{0, 1, 2, 0});
  CHECK(parse_sequence_file("0\n1\n2", abc).items() == std::vector<int>{0, 1, 2});
  CHECK(parse_sequence_file("0, 1,\r\n2,\n", abc).items() == std::vector<int>{0, 1, 2});
  CHECK(parse_sequence_file("", abc).items().empty());
}

TEST_CASE("out-of-range values report their position") {
  CHECK_THROWS_WITH_AS(parse_sequence_file("0,3,1", ActionAlphabet(3)),
                       "value 3 out of range at position 2", std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_sequence_file("0,-1", ActionAlphabet(3)),
                       "value -1 out of range at position 2", std::invalid_argument);
}

TEST_CASE("non-integer tokens report their position") {
  CHECK_THROWS_WITH_AS(parse_sequence_file("0,x,1", ActionAlphabet(3)),
                       "token \"x\" at position 2 is not an integer", std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence_file("1.5", ActionAlphabet(3)), std::invalid_argument);
}

TEST_CASE("format/parse round trip") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const PlaySequence seq = random_sequence(3, static_cast<int>(rng() % 80), rng);
    const PlaySequence back = parse_sequence_file(format_sequence(seq), seq.alphabet());
    CHECK(back.items() == seq.items());
  }
}

TEST_CASE("dataset loading isolates bad files") {
  const DatasetLoad load = load_dataset(kDataDir / "mini_dataset", ActionAlphabet(3));
  REQUIRE(load.records.size() == 3);
  CHECK(load.records[0].subject_id == "s01");
  CHECK(load.records[1].subject_id == "s02");
  CHECK(load.records[2].subject_id == "s03");
  CHECK(load.failures.size() == 1);
  CHECK(load.failures[0].subject_id == "s_bad");
  CHECK(load.records[0].sequence.size() == 9);
}

TEST_CASE("dataset loading is deterministic") {
  const DatasetLoad a = load_dataset(kDataDir / "mini_dataset", ActionAlphabet(3));
  const DatasetLoad b = load_dataset(kDataDir / "mini_dataset", ActionAlphabet(3));
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].subject_id == b.records[i].subject_id);
    CHECK(a.records[i].sequence.items() == b.records[i].sequence.items());
  }
}

TEST_CASE("unexpected lengths warn when a length is expected") {
  const DatasetLoad load = load_dataset(kDataDir / "mini_dataset", ActionAlphabet(3), 9);
  CHECK(load.records.size() == 3);
  CHECK(load.warnings.size() == 2);  // s02 and s03 are not 9 long
}

TEST_CASE("empty and missing directories") {
  const auto empty_dir = std::filesystem::temp_directory_path() / "strattest_empty_dataset";
  std::filesystem::create_directories(empty_dir);
  const DatasetLoad load = load_dataset(empty_dir, ActionAlphabet(3));
  CHECK(load.records.empty());
  CHECK(load.failures.empty());
  CHECK_THROWS_AS(load_dataset(empty_dir / "nope", ActionAlphabet(3)), std::runtime_error);
}
