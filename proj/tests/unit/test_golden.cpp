#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "golden.hpp"

using namespace kring::testing;

namespace {

const std::string golden_dir = KRING_GOLDEN_DIR;

// KRING_UPDATE_GOLDEN=1 rewrites the expected files instead of comparing.
bool updating() {
  const char* v = std::getenv("KRING_UPDATE_GOLDEN");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

TEST(Golden, CorpusMatches) {
  const auto corpus = load_corpus(golden_dir);
  ASSERT_FALSE(corpus.empty());
  for (const auto& c : corpus) {
    std::ostringstream out, err;
    const int code = kring::cli::run(c.args, out, err);
    EXPECT_EQ(code, c.exit_code) << c.id << ": " << err.str();
    if (updating()) {
      std::ofstream(expected_path(golden_dir, c), std::ios::binary) << out.str();
      continue;
    }
    EXPECT_EQ(out.str(), read_file(expected_path(golden_dir, c))) << c.id;
  }
}

TEST(Golden, CorpusCoversEverySubcommand) {
  std::set<std::string> seen;
  for (const auto& c : load_corpus(golden_dir))
    for (const auto& a : c.args)
      if (!a.empty() && a[0] != '-') {
        seen.insert(a);
        break;
      }
  for (const char* name : {"plethysm", "mult", "kron", "schur-expand", "char", "lr", "lambda", "tau", "taudot", "box",
                           "wreath-induce", "wreath-restrict", "universal-p", "universal-q", "axioms", "kx-rank",
                           "excision", "char-table"})
    EXPECT_TRUE(seen.count(name)) << name;
}
