#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bshm/pm_matrix.hpp"

namespace bshm {

inline constexpr unsigned kMaxSubsetRank = 20;
inline constexpr unsigned kMaxTableRank = 14;

class Z2Elem {
 public:
  Z2Elem(unsigned rank, std::uint32_t value);
  unsigned rank() const { return rank_; }
  std::uint32_t value() const { return value_; }
  Z2Elem operator+(const Z2Elem& other) const;
  bool operator==(const Z2Elem&) const = default;

 private:
  unsigned rank_;
  std::uint32_t value_;
};

inline int char_sign(std::uint32_t g, std::uint32_t s) {
  return (__builtin_popcount(g & s) & 1) ? -1 : 1;
}
int char_value(const Z2Elem& g, const Z2Elem& s);

// Subset of Z_2^r; the Walsh spectrum is computed once at construction.
class Z2Subset {
 public:
  Z2Subset(unsigned rank, std::vector<std::uint32_t> elements);
  static Z2Subset from_indicator(unsigned rank, const std::vector<std::uint8_t>& indicator);

  unsigned rank() const { return rank_; }
  std::uint32_t group_order() const { return std::uint32_t{1} << rank_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::uint32_t x) const { return x < indicator_.size() && indicator_[x]; }
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  const std::vector<std::uint8_t>& indicator() const { return indicator_; }
  const std::vector<std::int64_t>& spectrum() const { return spectrum_; }

  Z2Subset with(std::uint32_t x) const;
  Z2Subset without(std::uint32_t x) const;
  Z2Subset unite(const Z2Subset& other) const;

  bool operator==(const Z2Subset& other) const {
    return rank_ == other.rank_ && indicator_ == other.indicator_;
  }

 private:
  unsigned rank_;
  std::vector<std::uint32_t> elements_;
  std::vector<std::uint8_t> indicator_;
  std::vector<std::int64_t> spectrum_;
};

// In-place unnormalised Walsh-Hadamard transform; size must be a power of two.
void walsh_transform(std::vector<std::int64_t>& values);
std::vector<std::int64_t> walsh_spectrum(const Z2Subset& d);

PmMatrix character_table(unsigned rank);

class Gf2mField {
 public:
  explicit Gf2mField(unsigned m);
  Gf2mField(unsigned m, std::uint32_t modulus);

  static std::uint32_t default_modulus(unsigned m);

  unsigned degree() const { return m_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << m_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t pow(std::uint32_t x, std::uint64_t e) const;
  std::uint32_t inverse(std::uint32_t x) const;

 private:
  unsigned m_;
  std::uint32_t modulus_;
};

bool gf2_poly_irreducible(std::uint32_t poly);

// Lines {(x, cx)} for c = 0 .. 2^m - 1 followed by {(0, y)}; the pair (x, y)
// is encoded as (x << m) | y.
std::vector<Z2Subset> spread_lines(unsigned m);

Z2Subset parse_subset(std::istream& in);
Z2Subset parse_subset(const std::string& text);
void write_subset(std::ostream& out, const Z2Subset& d);
std::string format_element(std::uint32_t x, unsigned rank);

}  // namespace bshm
