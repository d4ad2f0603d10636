#include "doctest.h"

#include "bshm/tables.hpp"

using namespace bshm;

TEST_SUITE("tables") {
  TEST_CASE("published tables match the golden files") {
    for (int t = 2; t <= 6; ++t) {
      const auto d = diff_table(t, BSHM_GOLDEN_DIR);
      INFO("table " << t);
      CHECK(d.equal);
      CHECK(d.missing.empty());
      CHECK(d.surplus.empty());
    }
  }

  TEST_CASE("diff reports missing and surplus lines") {
    const auto d = diff_tsv(9, "h\na\nb\n", "h\na\nc\n");
    CHECK_FALSE(d.equal);
    CHECK(d.missing == std::vector<std::string>{"c"});
    CHECK(d.surplus == std::vector<std::string>{"b"});
  }

  TEST_CASE("policy changes the imprimitive tables") {
    HadamardOraclePolicy strict;
    strict.skew_limit = 1;
    CHECK(table_tsv(6, strict) != table_tsv(6));
  }
}
