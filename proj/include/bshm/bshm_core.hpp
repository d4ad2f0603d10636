#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bshm/pm_matrix.hpp"

namespace bshm {

struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;

  SrgParams complement() const { return {v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lambda}; }
  auto operator<=>(const SrgParams&) const = default;
};

std::string format_srg(const SrgParams& p);

enum class BshmKind { Equiangular, Type1, Type2, Degenerate };
enum class AllOnesLocation { H1, H2, None };

const char* kind_name(BshmKind kind);
const char* allones_name(AllOnesLocation loc);

struct BshmCertificate {
  std::int64_t n = 0;
  std::int64_t ell = 0;
  RowSubset rows;
  std::int64_t a = 0;
  std::int64_t b = 0;
  BshmKind kind = BshmKind::Degenerate;
  // Columns per column with dot a; -1 when it varies (equiangular only).
  std::int64_t k_a = -1;
  // Absent for trivial certificates and for equiangular ones whose graph is
  // not strongly regular as given.
  std::optional<SrgParams> graph;
  bool primitive = false;
  AllOnesLocation allones_row = AllOnesLocation::None;
  bool trivial = false;

  bool operator==(const BshmCertificate&) const = default;
};

std::string certificate_json(const BshmCertificate& cert);
std::string parameter_string(const BshmCertificate& cert);

struct VerifyOptions {
  bool check_hadamard = true;
};

BshmCertificate verify_bshm(const PmMatrix& h, const RowSubset& rows, const VerifyOptions& options = {});

// Simple graph on n vertices stored as bit rows.
class Graph {
 public:
  explicit Graph(std::size_t order);
  std::size_t order() const { return n_; }
  void add_edge(std::size_t i, std::size_t j);
  bool adjacent(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  std::size_t degree(std::size_t i) const;
  std::size_t common_neighbours(std::size_t i, std::size_t j) const;
  Graph complement() const;
  bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

Graph associated_graph(const PmMatrix& h, const RowSubset& rows, std::int64_t a);
SrgParams srg_params(const Graph& g);
bool primitivity(const SrgParams& p);

// Certificate of the complementary rows. The pair is reordered so a >= b,
// which makes the stored graph the complement of the original one.
BshmCertificate switch_certificate(const BshmCertificate& cert);

BshmCertificate add_allones_row(const PmMatrix& h, const RowSubset& rows);
BshmCertificate remove_allones_row(const PmMatrix& h, const RowSubset& rows);

PmMatrix to_regular_form(const PmMatrix& h, const RowSubset& rows, std::size_t pivot_row);
// Closed-form graph of the negated matrix: pivot row outside or inside rows.
SrgParams equiangular_graph(std::int64_t n, std::int64_t ell, std::int64_t a, bool pivot_inside);

void check_unbiased_params(std::int64_t n, std::int64_t ell, std::int64_t a);
PmMatrix extract_unbiased_mate(const PmMatrix& h, const RowSubset& rows);

struct PbdReport {
  std::size_t points = 0;
  std::size_t blocks = 0;
  // incidence[p][q] is 1 when point p lies in block q.
  std::vector<std::vector<std::uint8_t>> incidence;
  std::vector<std::size_t> block_sizes;
  std::size_t pair_count = 0;
  std::vector<std::size_t> intersection_sizes;
};

PbdReport extract_pbd(const PmMatrix& h, const RowSubset& rows);

struct Decomposition {
  // Column k of the reordered matrix is column column_order[k] of H; the
  // reordered H1 reads (L L ... L).
  std::vector<std::size_t> column_order;
  std::vector<std::size_t> class_of_column;
  PmMatrix representatives;
  std::size_t class_count = 0;
  std::size_t multiplicity = 0;
};

Decomposition structure_decompose(const PmMatrix& h, const RowSubset& rows);

}  // namespace bshm
