#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bshm/bshm_core.hpp"
#include "bshm/z2_algebra.hpp"

namespace bshm {

inline constexpr std::uint64_t kDifferenceSetBudget = 10'000'000;
inline constexpr std::uint64_t kRowSearchBudget = 100'000'000;

// Saturates at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// k-subsets of the nonzero elements of Z_2^r hitting every nonzero element
// exactly lambda times as an ordered difference.
std::vector<Z2Subset> search_difference_set(unsigned r, unsigned k, unsigned lambda,
                                            std::uint64_t budget = kDifferenceSetBudget);

struct SearchOptions {
  std::optional<std::pair<std::int64_t, std::int64_t>> targets;
  // Number of colex blocks; 0 picks a default. Results do not depend on it.
  std::size_t shards = 0;
  std::size_t threads = 1;
  std::string checkpoint;  // empty: no checkpoint file
  bool resume = false;
  // Also search normalize_first_row(H).
  bool include_normalized = false;
  std::uint64_t budget = kRowSearchBudget;
};

struct SearchHit {
  bool normalized = false;
  RowSubset rows;
  BshmCertificate cert;
};

struct SearchReport {
  std::vector<SearchHit> hits;
  std::uint64_t subsets_scanned = 0;
  std::size_t blocks = 0;
  std::size_t blocks_resumed = 0;
};

SearchReport search_bshm_rows(const PmMatrix& h, std::size_t ell, const SearchOptions& options = {});

// Colex rank <-> subset, exposed for tests.
std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t ell);
std::uint64_t colex_rank(const std::vector<std::size_t>& subset);

}  // namespace bshm
