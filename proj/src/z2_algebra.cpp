#include "bshm/z2_algebra.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "bshm/error.hpp"

namespace bshm {

Z2Elem::Z2Elem(unsigned rank, std::uint32_t value) : rank_(rank), value_(value) {
  if (rank > kMaxSubsetRank) fail(ErrorCode::OutOfRange, "rank too large");
  if (value >> rank) fail(ErrorCode::OutOfRange, "element does not fit the rank");
}

Z2Elem Z2Elem::operator+(const Z2Elem& other) const {
  if (rank_ != other.rank_) fail(ErrorCode::RankMismatch, "adding elements of different rank");
  return Z2Elem(rank_, value_ ^ other.value_);
}

int char_value(const Z2Elem& g, const Z2Elem& s) {
  if (g.rank() != s.rank()) fail(ErrorCode::RankMismatch, "character and element rank differ");
  return char_sign(g.value(), s.value());
}

Z2Subset::Z2Subset(unsigned rank, std::vector<std::uint32_t> elements)
    : rank_(rank), elements_(std::move(elements)) {
  if (rank > kMaxSubsetRank) fail(ErrorCode::OutOfRange, "rank too large");
  indicator_.assign(std::size_t{1} << rank, 0);
  for (auto x : elements_) {
    if (x >> rank) fail(ErrorCode::OutOfRange, "element " + std::to_string(x) + " outside Z2^" + std::to_string(rank));
    if (indicator_[x]) fail(ErrorCode::InvalidArgument, "duplicate element " + std::to_string(x));
    indicator_[x] = 1;
  }
  std::sort(elements_.begin(), elements_.end());
  spectrum_.assign(indicator_.begin(), indicator_.end());
  walsh_transform(spectrum_);
}

Z2Subset Z2Subset::from_indicator(unsigned rank, const std::vector<std::uint8_t>& indicator) {
  if (rank > kMaxSubsetRank) fail(ErrorCode::OutOfRange, "rank too large");
  if (indicator.size() != (std::size_t{1} << rank)) fail(ErrorCode::InvalidArgument, "indicator length mismatch");
  std::vector<std::uint32_t> el;
  for (std::uint32_t x = 0; x < indicator.size(); ++x)
    if (indicator[x]) el.push_back(x);
  return Z2Subset(rank, std::move(el));
}

Z2Subset Z2Subset::with(std::uint32_t x) const {
  auto el = elements_;
  el.push_back(x);
  return Z2Subset(rank_, std::move(el));
}

Z2Subset Z2Subset::without(std::uint32_t x) const {
  auto el = elements_;
  auto it = std::find(el.begin(), el.end(), x);
  if (it == el.end()) fail(ErrorCode::InvalidArgument, "element not in subset");
  el.erase(it);
  return Z2Subset(rank_, std::move(el));
}

Z2Subset Z2Subset::unite(const Z2Subset& other) const {
  if (rank_ != other.rank_) fail(ErrorCode::RankMismatch, "union of subsets of different rank");
  std::vector<std::uint8_t> ind = indicator_;
  for (std::size_t x = 0; x < ind.size(); ++x) ind[x] |= other.indicator_[x];
  return from_indicator(rank_, ind);
}

void walsh_transform(std::vector<std::int64_t>& v) {
  const std::size_t n = v.size();
  if (n == 0 || (n & (n - 1))) fail(ErrorCode::InvalidArgument, "transform length must be a power of two");
  for (std::size_t h = 1; h < n; h <<= 1)
    for (std::size_t i = 0; i < n; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t x = v[j], y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
}

std::vector<std::int64_t> walsh_spectrum(const Z2Subset& d) { return d.spectrum(); }

PmMatrix character_table(unsigned rank) {
  if (rank > kMaxTableRank) fail(ErrorCode::OutOfRange, "character table rank too large");
  const std::size_t n = std::size_t{1} << rank;
  return PmMatrix::generate(n, n, [](std::size_t g, std::size_t s) {
    return char_sign(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(s)) < 0;
  });
}

namespace {

int poly_degree(std::uint64_t p) { return p ? 63 - __builtin_clzll(p) : -1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

bool gf2_poly_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (std::uint64_t f = 2; poly_degree(f) <= d / 2; ++f)
    if (poly_mod(poly, f) == 0) return false;
  return true;
}

std::uint32_t Gf2mField::default_modulus(unsigned m) {
  switch (m) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    case 5: return 0b100101;
    case 6: return 0b1000011;
    case 7: return 0b10000011;
    default: fail(ErrorCode::OutOfRange, "no default modulus for degree " + std::to_string(m));
  }
}

Gf2mField::Gf2mField(unsigned m) : Gf2mField(m, default_modulus(m)) {}

Gf2mField::Gf2mField(unsigned m, std::uint32_t modulus) : m_(m), modulus_(modulus) {
  if (m < 1 || m > 8) fail(ErrorCode::OutOfRange, "field degree must be in 1..8");
  if (poly_degree(modulus) != static_cast<int>(m) || !gf2_poly_irreducible(modulus))
    fail(ErrorCode::InvalidArgument, "modulus is not irreducible of degree " + std::to_string(m));
}

std::uint32_t Gf2mField::mul(std::uint32_t x, std::uint32_t y) const {
  std::uint32_t r = 0;
  while (y) {
    if (y & 1u) r ^= x;
    y >>= 1;
    x <<= 1;
    if (x >> m_) x ^= modulus_;
  }
  return r;
}

std::uint32_t Gf2mField::pow(std::uint32_t x, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1u) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

std::uint32_t Gf2mField::inverse(std::uint32_t x) const {
  if (x == 0) fail(ErrorCode::InvalidArgument, "zero has no inverse");
  return pow(x, order() - 2);
}

std::vector<Z2Subset> spread_lines(unsigned m) {
  if (m < 1 || m > 7) fail(ErrorCode::OutOfRange, "spread degree must be in 1..7");
  const Gf2mField field(m);
  const std::uint32_t q = field.order();
  std::vector<Z2Subset> lines;
  for (std::uint32_t c = 0; c < q; ++c) {
    std::vector<std::uint32_t> el;
    for (std::uint32_t x = 0; x < q; ++x) el.push_back((x << m) | field.mul(c, x));
    lines.emplace_back(2 * m, std::move(el));
  }
  std::vector<std::uint32_t> el;
  for (std::uint32_t y = 0; y < q; ++y) el.push_back(y);
  lines.emplace_back(2 * m, std::move(el));
  return lines;
}

std::string format_element(std::uint32_t x, unsigned rank) {
  std::string s(rank, '0');
  for (unsigned b = 0; b < rank; ++b)
    if ((x >> b) & 1u) s[rank - 1 - b] = '1';
  return s;
}

namespace {

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
  return s.substr(k);
}

}  // namespace

Z2Subset parse_subset(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "missing Z2 header");
  std::istringstream head(line);
  std::string tag, extra;
  long long r = -1;
  if (!(head >> tag >> r) || tag != "Z2" || (head >> extra)) fail(ErrorCode::ParseError, "bad header '" + line + "'");
  if (r < 1 || r > static_cast<long long>(kMaxSubsetRank)) fail(ErrorCode::OutOfRange, "rank out of range");
  std::vector<std::uint32_t> el;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line.size() != static_cast<std::size_t>(r))
      fail(ErrorCode::ParseError, "element '" + line + "' is not " + std::to_string(r) + " bits");
    std::uint32_t x = 0;
    for (char c : line) {
      if (c != '0' && c != '1') fail(ErrorCode::ParseError, "bad element '" + line + "'");
      x = (x << 1) | static_cast<std::uint32_t>(c - '0');
    }
    el.push_back(x);
  }
  std::vector<std::uint32_t> sorted = el;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::ParseError, "duplicate element");
  return Z2Subset(static_cast<unsigned>(r), std::move(el));
}

Z2Subset parse_subset(const std::string& text) {
  std::istringstream in(text);
  return parse_subset(in);
}

void write_subset(std::ostream& out, const Z2Subset& d) {
  out << "Z2 " << d.rank() << '\n';
  for (auto x : d.elements()) out << format_element(x, d.rank()) << '\n';
}

}  // namespace bshm
