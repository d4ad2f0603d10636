#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bshm {

inline constexpr std::size_t kDefaultMaxOrder = std::size_t{1} << 14;

inline std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }

// Sorted selection of rows of a host matrix, with a matching bitmask.
class RowSubset {
 public:
  RowSubset() = default;
  // Indices may come in any order; duplicates and out-of-range indices throw.
  RowSubset(std::vector<std::size_t> indices, std::size_t host_rows);

  static RowSubset all(std::size_t host_rows);
  static RowSubset range(std::size_t first, std::size_t last, std::size_t host_rows);

  const std::vector<std::size_t>& indices() const { return indices_; }
  const std::vector<std::uint64_t>& mask() const { return mask_; }
  std::size_t size() const { return indices_.size(); }
  std::size_t host_rows() const { return host_rows_; }
  bool contains(std::size_t row) const;
  RowSubset complement() const;
  RowSubset with(std::size_t row) const;
  RowSubset without(std::size_t row) const;

  bool operator==(const RowSubset& other) const {
    return host_rows_ == other.host_rows_ && indices_ == other.indices_;
  }

 private:
  std::vector<std::size_t> indices_;
  std::vector<std::uint64_t> mask_;
  std::size_t host_rows_ = 0;
};

std::string format_rows(const RowSubset& rows);
RowSubset parse_rows(const std::string& text, std::size_t host_rows);

// Immutable +-1 matrix. Bit value 1 encodes the entry -1. Row-major and
// column-major planes are both kept.
class PmMatrix {
 public:
  // All entries +1.
  PmMatrix(std::size_t rows, std::size_t cols, std::size_t max_order = kDefaultMaxOrder);

  // `negative(i, j)` returns true where the entry is -1.
  template <class F>
  static PmMatrix generate(std::size_t rows, std::size_t cols, F&& negative,
                           std::size_t max_order = kDefaultMaxOrder) {
    PmMatrix m(rows, cols, max_order);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (negative(i, j)) m.row_bits_[i * m.row_words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    m.rebuild_columns();
    return m;
  }

  static PmMatrix from_strings(const std::vector<std::string>& rows);
  static PmMatrix from_signs(std::size_t rows, std::size_t cols, const std::vector<int>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t row_words() const { return row_words_; }
  std::size_t col_words() const { return col_words_; }

  bool negative(std::size_t i, std::size_t j) const {
    return (row_bits_[i * row_words_ + j / 64] >> (j % 64)) & 1u;
  }
  bool negative_from_columns(std::size_t i, std::size_t j) const {
    return (col_bits_[j * col_words_ + i / 64] >> (i % 64)) & 1u;
  }
  int at(std::size_t i, std::size_t j) const { return negative(i, j) ? -1 : 1; }

  std::span<const std::uint64_t> row(std::size_t i) const {
    return {row_bits_.data() + i * row_words_, row_words_};
  }
  std::span<const std::uint64_t> col(std::size_t j) const {
    return {col_bits_.data() + j * col_words_, col_words_};
  }

  std::size_t row_negatives(std::size_t i) const;
  bool row_all_ones(std::size_t i) const;

  PmMatrix negate_columns(const std::vector<bool>& cols) const;
  PmMatrix negate_rows(const std::vector<bool>& rows) const;
  // Row k of the result is row perm[k] of this matrix.
  PmMatrix permute_rows(const std::vector<std::size_t>& perm) const;
  // Column k of the result is column perm[k] of this matrix.
  PmMatrix permute_columns(const std::vector<std::size_t>& perm) const;
  PmMatrix select_rows(const RowSubset& rows) const;
  PmMatrix transpose() const;

  bool operator==(const PmMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_bits_ == other.row_bits_;
  }

  std::uint64_t fingerprint() const;

 private:
  PmMatrix() = default;
  void rebuild_columns();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t row_words_ = 0;
  std::size_t col_words_ = 0;
  std::vector<std::uint64_t> row_bits_;
  std::vector<std::uint64_t> col_bits_;
};

// Dot product of columns i and j restricted to `rows`.
int column_dot(const PmMatrix& m, const RowSubset& rows, std::size_t i, std::size_t j);
// Dot product of columns i and j over all rows.
int column_dot(const PmMatrix& m, std::size_t i, std::size_t j);
int row_dot(const PmMatrix& m, std::size_t i, std::size_t j);
// Row i of a with row j of b; both must have equal column counts.
int row_dot(const PmMatrix& a, std::size_t i, const PmMatrix& b, std::size_t j);

bool is_hadamard(const PmMatrix& m);
PmMatrix kronecker(const PmMatrix& a, const PmMatrix& b, std::size_t max_order = kDefaultMaxOrder);
PmMatrix normalize_first_row(const PmMatrix& m);

PmMatrix parse_matrix(std::istream& in);
PmMatrix parse_matrix(const std::string& text);
void write_matrix(std::ostream& out, const PmMatrix& m);
std::string format_matrix(const PmMatrix& m);

}  // namespace bshm
