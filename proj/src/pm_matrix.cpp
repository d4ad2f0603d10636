#include "bshm/pm_matrix.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

#include "bshm/error.hpp"

namespace bshm {

RowSubset::RowSubset(std::vector<std::size_t> indices, std::size_t host_rows)
    : indices_(std::move(indices)), host_rows_(host_rows) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    fail(ErrorCode::InvalidArgument, "duplicate row index");
  mask_.assign(words_for_bits(host_rows), 0);
  for (std::size_t r : indices_) {
    if (r >= host_rows)
      fail(ErrorCode::OutOfRange, "row index " + std::to_string(r) + " outside " +
                                      std::to_string(host_rows) + " rows");
    mask_[r / 64] |= std::uint64_t{1} << (r % 64);
  }
}

RowSubset RowSubset::all(std::size_t host_rows) { return range(0, host_rows, host_rows); }

RowSubset RowSubset::range(std::size_t first, std::size_t last, std::size_t host_rows) {
  std::vector<std::size_t> idx;
  for (std::size_t i = first; i < last; ++i) idx.push_back(i);
  return RowSubset(std::move(idx), host_rows);
}

bool RowSubset::contains(std::size_t row) const {
  return row < host_rows_ && ((mask_[row / 64] >> (row % 64)) & 1u);
}

RowSubset RowSubset::complement() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < host_rows_; ++i)
    if (!contains(i)) idx.push_back(i);
  return RowSubset(std::move(idx), host_rows_);
}

RowSubset RowSubset::with(std::size_t row) const {
  auto idx = indices_;
  idx.push_back(row);
  return RowSubset(std::move(idx), host_rows_);
}

RowSubset RowSubset::without(std::size_t row) const {
  auto idx = indices_;
  auto it = std::find(idx.begin(), idx.end(), row);
  if (it == idx.end()) fail(ErrorCode::InvalidArgument, "row not in subset");
  idx.erase(it);
  return RowSubset(std::move(idx), host_rows_);
}

std::string format_rows(const RowSubset& rows) {
  std::string out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(rows.indices()[k]);
  }
  return out;
}

RowSubset parse_rows(const std::string& text, std::size_t host_rows) {
  std::vector<std::size_t> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    try {
      std::size_t used = 0;
      if (dash != std::string::npos) {
        std::size_t lo = std::stoul(item.substr(0, dash), &used);
        std::size_t hi = std::stoul(item.substr(dash + 1), &used);
        if (hi < lo) fail(ErrorCode::ParseError, "bad row range '" + item + "'");
        for (std::size_t r = lo; r <= hi; ++r) idx.push_back(r);
      } else {
        idx.push_back(std::stoul(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad row index '" + item + "'");
    }
  }
  return RowSubset(std::move(idx), host_rows);
}

PmMatrix::PmMatrix(std::size_t rows, std::size_t cols, std::size_t max_order)
    : rows_(rows), cols_(cols), row_words_(words_for_bits(cols)), col_words_(words_for_bits(rows)) {
  if (rows == 0 || cols == 0) fail(ErrorCode::InvalidArgument, "empty matrix");
  if (rows > max_order || cols > max_order)
    fail(ErrorCode::LimitExceeded, "matrix dimension exceeds " + std::to_string(max_order));
  row_bits_.assign(rows_ * row_words_, 0);
  col_bits_.assign(cols_ * col_words_, 0);
}

PmMatrix PmMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) fail(ErrorCode::InvalidArgument, "empty matrix");
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) fail(ErrorCode::ParseError, "ragged rows");
    for (char c : r)
      if (c != '+' && c != '-') fail(ErrorCode::ParseError, std::string("bad entry '") + c + "'");
  }
  return generate(rows.size(), cols, [&](std::size_t i, std::size_t j) { return rows[i][j] == '-'; });
}

PmMatrix PmMatrix::from_signs(std::size_t rows, std::size_t cols, const std::vector<int>& entries) {
  if (entries.size() != rows * cols) fail(ErrorCode::InvalidArgument, "entry count mismatch");
  for (int e : entries)
    if (e != 1 && e != -1) fail(ErrorCode::InvalidArgument, "entries must be +1 or -1");
  return generate(rows, cols, [&](std::size_t i, std::size_t j) { return entries[i * cols + j] < 0; });
}

void PmMatrix::rebuild_columns() {
  std::fill(col_bits_.begin(), col_bits_.end(), 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::uint64_t* r = row_bits_.data() + i * row_words_;
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    const std::size_t word = i / 64;
    for (std::size_t w = 0; w < row_words_; ++w) {
      std::uint64_t x = r[w];
      while (x) {
        const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(x));
        col_bits_[j * col_words_ + word] |= bit;
        x &= x - 1;
      }
    }
  }
}

std::size_t PmMatrix::row_negatives(std::size_t i) const {
  std::size_t c = 0;
  for (auto w : row(i)) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PmMatrix::row_all_ones(std::size_t i) const {
  for (auto w : row(i))
    if (w) return false;
  return true;
}

PmMatrix PmMatrix::negate_columns(const std::vector<bool>& cols) const {
  if (cols.size() != cols_) fail(ErrorCode::OutOfRange, "column mask size mismatch");
  std::vector<std::uint64_t> flip(row_words_, 0);
  for (std::size_t j = 0; j < cols_; ++j)
    if (cols[j]) flip[j / 64] |= std::uint64_t{1} << (j % 64);
  PmMatrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t w = 0; w < row_words_; ++w) m.row_bits_[i * row_words_ + w] ^= flip[w];
  m.rebuild_columns();
  return m;
}

PmMatrix PmMatrix::negate_rows(const std::vector<bool>& rows) const {
  if (rows.size() != rows_) fail(ErrorCode::OutOfRange, "row mask size mismatch");
  PmMatrix m = *this;
  const std::size_t tail = cols_ % 64;
  const std::uint64_t last = tail ? (std::uint64_t{1} << tail) - 1 : ~std::uint64_t{0};
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!rows[i]) continue;
    for (std::size_t w = 0; w < row_words_; ++w)
      m.row_bits_[i * row_words_ + w] ^= (w + 1 == row_words_) ? last : ~std::uint64_t{0};
  }
  m.rebuild_columns();
  return m;
}

static void check_permutation(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) fail(ErrorCode::InvalidArgument, "permutation size mismatch");
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) fail(ErrorCode::InvalidArgument, "not a permutation");
    seen[p] = true;
  }
}

PmMatrix PmMatrix::permute_rows(const std::vector<std::size_t>& perm) const {
  check_permutation(perm, rows_);
  PmMatrix m = *this;
  for (std::size_t k = 0; k < rows_; ++k)
    std::copy_n(row_bits_.begin() + static_cast<std::ptrdiff_t>(perm[k] * row_words_), row_words_,
                m.row_bits_.begin() + static_cast<std::ptrdiff_t>(k * row_words_));
  m.rebuild_columns();
  return m;
}

PmMatrix PmMatrix::permute_columns(const std::vector<std::size_t>& perm) const {
  check_permutation(perm, cols_);
  return generate(rows_, cols_, [&](std::size_t i, std::size_t j) { return negative(i, perm[j]); });
}

PmMatrix PmMatrix::select_rows(const RowSubset& rows) const {
  if (rows.host_rows() != rows_) fail(ErrorCode::InvalidArgument, "row subset host mismatch");
  if (rows.size() == 0) fail(ErrorCode::InvalidArgument, "empty row selection");
  const auto& idx = rows.indices();
  PmMatrix m(idx.size(), cols_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    std::copy_n(row_bits_.begin() + static_cast<std::ptrdiff_t>(idx[k] * row_words_), row_words_,
                m.row_bits_.begin() + static_cast<std::ptrdiff_t>(k * row_words_));
  m.rebuild_columns();
  return m;
}

PmMatrix PmMatrix::transpose() const {
  PmMatrix m(cols_, rows_);
  m.row_bits_ = col_bits_;
  m.col_bits_ = row_bits_;
  return m;
}

std::uint64_t PmMatrix::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(rows_);
  mix(cols_);
  for (auto w : row_bits_) mix(w);
  return h;
}

int column_dot(const PmMatrix& m, const RowSubset& rows, std::size_t i, std::size_t j) {
  if (i >= m.cols() || j >= m.cols()) fail(ErrorCode::OutOfRange, "column index out of range");
  if (rows.host_rows() != m.rows()) fail(ErrorCode::InvalidArgument, "row subset host mismatch");
  auto ci = m.col(i);
  auto cj = m.col(j);
  const auto& mask = rows.mask();
  int differ = 0;
  for (std::size_t w = 0; w < ci.size(); ++w) differ += std::popcount((ci[w] ^ cj[w]) & mask[w]);
  return static_cast<int>(rows.size()) - 2 * differ;
}

int column_dot(const PmMatrix& m, std::size_t i, std::size_t j) {
  if (i >= m.cols() || j >= m.cols()) fail(ErrorCode::OutOfRange, "column index out of range");
  auto ci = m.col(i);
  auto cj = m.col(j);
  int differ = 0;
  for (std::size_t w = 0; w < ci.size(); ++w) differ += std::popcount(ci[w] ^ cj[w]);
  return static_cast<int>(m.rows()) - 2 * differ;
}

int row_dot(const PmMatrix& a, std::size_t i, const PmMatrix& b, std::size_t j) {
  if (a.cols() != b.cols()) fail(ErrorCode::InvalidArgument, "column count mismatch");
  if (i >= a.rows() || j >= b.rows()) fail(ErrorCode::OutOfRange, "row index out of range");
  auto ri = a.row(i);
  auto rj = b.row(j);
  int differ = 0;
  for (std::size_t w = 0; w < ri.size(); ++w) differ += std::popcount(ri[w] ^ rj[w]);
  return static_cast<int>(a.cols()) - 2 * differ;
}

int row_dot(const PmMatrix& m, std::size_t i, std::size_t j) { return row_dot(m, i, m, j); }

bool is_hadamard(const PmMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const std::size_t n = m.rows();
  if (n > 2 && n % 4 != 0) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (column_dot(m, i, j) != 0) return false;
  return true;
}

PmMatrix kronecker(const PmMatrix& a, const PmMatrix& b, std::size_t max_order) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  if (rows > max_order || cols > max_order)
    fail(ErrorCode::LimitExceeded, "Kronecker product exceeds order limit " + std::to_string(max_order));
  return PmMatrix::generate(
      rows, cols,
      [&](std::size_t i, std::size_t j) {
        return a.negative(i / b.rows(), j / b.cols()) != b.negative(i % b.rows(), j % b.cols());
      },
      max_order);
}

PmMatrix normalize_first_row(const PmMatrix& m) {
  std::vector<bool> flip(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) flip[j] = m.negative(0, j);
  return m.negate_columns(flip);
}

PmMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "missing HAD header");
  std::istringstream head(line);
  std::string tag;
  long long rows = -1, cols = -1;
  std::string extra;
  if (!(head >> tag >> rows >> cols) || tag != "HAD" || (head >> extra))
    fail(ErrorCode::ParseError, "bad header '" + line + "'");
  if (rows <= 0 || cols <= 0) fail(ErrorCode::ParseError, "nonpositive dimensions");
  if (static_cast<std::size_t>(rows) > kDefaultMaxOrder || static_cast<std::size_t>(cols) > kDefaultMaxOrder)
    fail(ErrorCode::LimitExceeded, "matrix dimension exceeds limit");
  std::vector<std::string> body;
  for (long long i = 0; i < rows; ++i) {
    if (!std::getline(in, line)) fail(ErrorCode::ParseError, "missing row " + std::to_string(i));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != static_cast<std::size_t>(cols))
      fail(ErrorCode::ParseError, "row " + std::to_string(i) + " has length " + std::to_string(line.size()));
    body.push_back(line);
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line != "\r") fail(ErrorCode::ParseError, "trailing content after matrix");
  }
  return PmMatrix::from_strings(body);
}

PmMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

void write_matrix(std::ostream& out, const PmMatrix& m) {
  out << "HAD " << m.rows() << ' ' << m.cols() << '\n';
  std::string line(m.cols(), '+');
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) line[j] = m.negative(i, j) ? '-' : '+';
    out << line << '\n';
  }
}

std::string format_matrix(const PmMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

}  // namespace bshm
