#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bshm/z2_algebra.hpp"

namespace bshm {

struct PdsParams {
  std::int64_t v = 0;
  std::int64_t ell = 0;
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t a = 0;  // a >= b
  std::int64_t b = 0;
  bool contains_identity = false;
  std::int64_t gamma = 0;

  bool degenerate() const { return a == b; }
  bool operator==(const PdsParams&) const = default;
};

// Counts x ^ y over ordered pairs of distinct elements.
PdsParams verify_pds_definition(const Z2Subset& d);
// Uses the nonprincipal Walsh values.
PdsParams verify_pds_char(const Z2Subset& d);

// (alpha, beta) from the two character values.
std::pair<std::int64_t, std::int64_t> pds_alpha_beta(std::int64_t ell, std::int64_t a, std::int64_t b,
                                                     bool contains_identity);

struct PackingWitness {
  std::int64_t delta = 0;
  std::size_t t = 0;
  std::vector<std::int64_t> base_sums;
  std::vector<Z2Subset> parts;
  // elevation[g] is the part whose sum at g is raised by delta, or -1.
  std::vector<int> elevation;
  // True when no character raises any part; only possible for t = 1.
  bool degenerate = false;
};

PackingWitness verify_packing(const std::vector<Z2Subset>& parts, std::int64_t delta,
                              const std::vector<std::int64_t>& base_sums);

// Smallest nonprincipal value when delta > 0, largest when delta < 0.
std::vector<std::int64_t> infer_base_sums(const std::vector<Z2Subset>& parts, std::int64_t delta);

struct PackingFile {
  unsigned rank = 0;
  std::int64_t delta = 0;
  std::vector<Z2Subset> parts;
};

PackingFile parse_packing(std::istream& in);
void write_packing(std::ostream& out, const PackingFile& p);

}  // namespace bshm
