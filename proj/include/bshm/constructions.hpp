#pragma once

#include <cstdint>
#include <vector>

#include "bshm/bshm_core.hpp"
#include "bshm/param_rules.hpp"
#include "bshm/z2_algebra.hpp"

namespace bshm {

PmMatrix sylvester(unsigned r);

// GF(q) for a prime power q; elements are base-p digit vectors packed into an integer.
class PrimePowerField {
 public:
  explicit PrimePowerField(std::int64_t q);
  std::int64_t order() const { return q_; }
  std::int64_t characteristic() const { return p_; }
  std::int64_t add(std::int64_t x, std::int64_t y) const;
  std::int64_t sub(std::int64_t x, std::int64_t y) const;
  std::int64_t mul(std::int64_t x, std::int64_t y) const;
  // +1 on nonzero squares, -1 on nonsquares, 0 at zero.
  int quadratic_character(std::int64_t x) const { return chi_[static_cast<std::size_t>(x)]; }

 private:
  std::vector<std::int64_t> digits(std::int64_t x) const;
  std::int64_t pack(const std::vector<std::int64_t>& d) const;

  std::int64_t q_ = 0;
  std::int64_t p_ = 0;
  int k_ = 0;
  std::vector<std::int64_t> modulus_;  // monic, degree k
  std::vector<int> chi_;
};

inline constexpr std::int64_t kMaxPaleyField = std::int64_t{1} << 13;

enum class PaleyKind { I, II };
PmMatrix paley_hadamard(std::int64_t q, PaleyKind kind);
// Sylvester, Paley I/II and Kronecker products; LimitExceeded if none applies.
PmMatrix hadamard_matrix(std::int64_t n);

struct Construction {
  PmMatrix h;
  RowSubset rows;
  BshmCertificate cert;
};

Z2Subset bent_difference_set(unsigned m);
// Union of the chosen spread lines minus the identity; an empty `which`
// selects the first s lines.
Z2Subset spread_union_pds(unsigned m, unsigned s, std::vector<std::size_t> which = {});
Construction pds_to_bshm(const Z2Subset& d);

struct MultiConstruction {
  PmMatrix h;
  // blocks[u] holds the rows of block u; row 0 is the all-ones row.
  std::vector<RowSubset> blocks;
  // certs[u] is for blocks[u], joined with the all-ones row when u == j.
  std::vector<RowSubset> cert_rows;
  std::vector<BshmCertificate> certs;
  std::size_t unions_verified = 0;
};

inline constexpr std::size_t kMaxUnionBlocks = 12;

MultiConstruction packing_to_multibshm(unsigned m, const std::vector<std::vector<std::size_t>>& partition,
                                       std::size_t j);

Construction kronecker_bshm(const PmMatrix& h, const RowSubset& rows, const PmMatrix& k);
Construction construct_ns_n_n_0(const PmMatrix& hn, const PmMatrix& hs);
Construction construct_n_2_2_0(const PmMatrix& h);
Construction b0_to_bm1(const PmMatrix& h, const RowSubset& rows);

// BSHM(8rs,4s,4s,0) and BSHM(4rs,4s-1,4s-1,-1) from explicit Hadamard matrices.
Construction construct_b0(std::int64_t r, std::int64_t s);
Construction construct_bm1(std::int64_t r, std::int64_t s);

}  // namespace bshm
