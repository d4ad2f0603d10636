#include <sstream>

#include "doctest.h"

#include "bshm/constructions.hpp"
#include "bshm/error.hpp"
#include "bshm/pds.hpp"
#include "bshm/search.hpp"

using namespace bshm;

namespace {
bool rejects_pds(const Z2Subset& d, PdsParams (*fn)(const Z2Subset&)) {
  try {
    fn(d);
    return false;
  } catch (const Error& e) {
    return e.code() == ErrorCode::NotAPds;
  }
}
}  // namespace

TEST_SUITE("pds") {
  TEST_CASE("definitional verification") {
    const auto single = verify_pds_definition(Z2Subset(4, {5}));
    CHECK(single.v == 16);
    CHECK(single.ell == 1);
    CHECK(single.alpha == 0);
    CHECK(single.beta == 0);

    const auto ds = search_difference_set(4, 6, 2).front();
    const auto p = verify_pds_definition(ds);
    CHECK(p.alpha == 2);
    CHECK(p.beta == 2);

    const auto spread = verify_pds_definition(spread_union_pds(3, 2));
    CHECK(spread.v == 64);
    CHECK(spread.ell == 14);
    CHECK(spread.a == 6);
    CHECK(spread.b == -2);
    CHECK(spread.alpha == 6);
    CHECK(spread.beta == 2);
  }

  TEST_CASE("character verification") {
    const auto bent = verify_pds_char(bent_difference_set(2));
    CHECK(bent.v == 16);
    CHECK(bent.ell == 6);
    CHECK(bent.a == 2);
    CHECK(bent.b == -2);

    std::vector<std::uint32_t> nonzero;
    for (std::uint32_t x = 1; x < 16; ++x) nonzero.push_back(x);
    const auto all = verify_pds_char(Z2Subset(4, nonzero));
    CHECK(all.a == -1);
    CHECK(all.b == -1);
    CHECK(all.degenerate());

    const Z2Subset junk(4, {1, 2, 3, 4, 5, 6, 9});
    CHECK(rejects_pds(junk, verify_pds_char));
    CHECK(rejects_pds(junk, verify_pds_definition));
  }

  TEST_CASE("parameter identity holds on every accepted subset of size up to 5 in rank 4") {
    std::size_t accepted = 0;
    for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
      if (__builtin_popcount(mask) > 5) continue;
      std::vector<std::uint32_t> elems;
      for (std::uint32_t x = 0; x < 16; ++x)
        if ((mask >> x) & 1u) elems.push_back(x);
      const Z2Subset d(4, elems);
      if (rejects_pds(d, verify_pds_char)) {
        REQUIRE(rejects_pds(d, verify_pds_definition));
        continue;
      }
      ++accepted;
      const auto p = verify_pds_char(d);
      REQUIRE(p == verify_pds_definition(d));
      REQUIRE(p.ell * p.ell == p.gamma + (p.alpha - p.beta) * p.ell + p.beta * p.v);
    }
    CHECK(accepted > 0);
  }

  TEST_CASE("alpha and beta from character values") {
    CHECK(pds_alpha_beta(14, 6, -2, false) == std::pair<std::int64_t, std::int64_t>{6, 2});
    CHECK(pds_alpha_beta(15, 7, -1, true) == std::pair<std::int64_t, std::int64_t>{8, 2});
  }

  TEST_CASE("spread packings") {
    std::vector<Z2Subset> parts;
    for (const auto& l : spread_lines(2)) parts.push_back(l.without(0));
    const auto w = verify_packing(parts, 4, {-1, -1, -1, -1, -1});
    CHECK(w.t == 5);
    CHECK_FALSE(w.degenerate);
    for (std::uint32_t g = 1; g < 16; ++g) {
      CHECK(w.elevation[g] >= 0);
      std::int64_t total = 0;
      for (const auto& p : parts) total += p.spectrum()[g];
      CHECK(total == -1);
    }
    CHECK(infer_base_sums(parts, 4) == std::vector<std::int64_t>{-1, -1, -1, -1, -1});
  }

  TEST_CASE("degenerate and broken packings") {
    std::vector<std::uint32_t> nonzero;
    for (std::uint32_t x = 1; x < 16; ++x) nonzero.push_back(x);
    const auto w = verify_packing({Z2Subset(4, nonzero)}, 3, {-1});
    CHECK(w.degenerate);
    CHECK_THROWS_AS(verify_packing({Z2Subset(4, {1, 2}), Z2Subset(4, {3}), Z2Subset(4, {4, 5})}, 4, {-1, -1, -1}),
                    Error);
    std::vector<Z2Subset> parts;
    for (const auto& l : spread_lines(2)) parts.push_back(l.without(0));
    CHECK_THROWS_AS(verify_packing(parts, 4, {-1, -1, -1, -1, 0}), Error);
  }

  TEST_CASE("packing text format") {
    PackingFile p;
    p.rank = 4;
    p.delta = 4;
    for (const auto& l : spread_lines(2)) p.parts.push_back(l.without(0));
    std::stringstream buf;
    write_packing(buf, p);
    CHECK(buf.str().rfind("PACK 4 5 4\n", 0) == 0);
    const auto q = parse_packing(buf);
    CHECK(q.rank == 4);
    CHECK(q.delta == 4);
    CHECK(q.parts == p.parts);
  }
}
