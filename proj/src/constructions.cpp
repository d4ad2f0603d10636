#include "bshm/constructions.hpp"

#include <algorithm>
#include <set>

#include "bshm/error.hpp"
#include "bshm/pds.hpp"

namespace bshm {

namespace {

using i64 = std::int64_t;
using Poly = std::vector<i64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, i64 p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const i64 c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    trim(f);
  }
  return f;
}

bool poly_irreducible(const Poly& f, i64 p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    i64 count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (i64 code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      i64 c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

void check_construction(const BshmCertificate& cert, i64 n, i64 ell, i64 a, i64 b) {
  if (cert.n != n || cert.ell != ell || cert.a != a || cert.b != b)
    fail(ErrorCode::Internal, "construction produced " + parameter_string(cert) + ", expected (" +
                                  std::to_string(n) + "," + std::to_string(ell) + "," + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
}

}  // namespace

PmMatrix sylvester(unsigned r) {
  if (r > kMaxTableRank) fail(ErrorCode::OutOfRange, "Sylvester rank too large");
  PmMatrix h(1, 1);
  const PmMatrix s1 = PmMatrix::from_signs(2, 2, {1, 1, 1, -1});
  for (unsigned i = 0; i < r; ++i) h = kronecker(h, s1);
  return h;
}

PrimePowerField::PrimePowerField(i64 q) : q_(q) {
  if (q > kMaxPaleyField || !is_prime_power(q, &p_, &k_))
    fail(ErrorCode::InvalidArgument, "unsupported field order " + std::to_string(q));
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    i64 count = q;
    for (i64 code = 0; code < count; ++code) {
      Poly f(k_ + 1, 0);
      f[k_] = 1;
      i64 c = code;
      for (int i = 0; i < k_; ++i) {
        f[i] = c % p_;
        c /= p_;
      }
      if (f[0] != 0 && poly_irreducible(f, p_)) {
        modulus_ = f;
        break;
      }
    }
    if (modulus_.empty()) fail(ErrorCode::Internal, "no irreducible polynomial found");
  }
  chi_.assign(static_cast<std::size_t>(q), -1);
  chi_[0] = 0;
  for (i64 x = 1; x < q; ++x) chi_[static_cast<std::size_t>(mul(x, x))] = 1;
}

std::vector<i64> PrimePowerField::digits(i64 x) const {
  std::vector<i64> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = x % p_;
    x /= p_;
  }
  return d;
}

i64 PrimePowerField::pack(const std::vector<i64>& d) const {
  i64 x = 0;
  for (int i = k_ - 1; i >= 0; --i) x = x * p_ + (i < static_cast<int>(d.size()) ? d[i] : 0);
  return x;
}

i64 PrimePowerField::add(i64 x, i64 y) const {
  if (k_ == 1) return (x + y) % p_;
  auto a = digits(x), b = digits(y);
  for (int i = 0; i < k_; ++i) a[i] = (a[i] + b[i]) % p_;
  return pack(a);
}

i64 PrimePowerField::sub(i64 x, i64 y) const {
  if (k_ == 1) return ((x - y) % p_ + p_) % p_;
  auto a = digits(x), b = digits(y);
  for (int i = 0; i < k_; ++i) a[i] = (a[i] - b[i] + p_) % p_;
  return pack(a);
}

i64 PrimePowerField::mul(i64 x, i64 y) const {
  if (k_ == 1) return x * y % p_;
  auto a = digits(x), b = digits(y);
  Poly prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p_;
  return pack(poly_mod(prod, modulus_, p_));
}

PmMatrix paley_hadamard(i64 q, PaleyKind kind) {
  const PrimePowerField f(q);
  if (f.characteristic() == 2) fail(ErrorCode::InvalidArgument, "Paley construction needs odd q");
  const std::size_t m = static_cast<std::size_t>(q) + 1;
  // Core matrix indexed by infinity (0) followed by the field elements.
  std::vector<int> core(m * m, 0);
  const int sign = kind == PaleyKind::I ? -1 : 1;
  for (std::size_t i = 1; i < m; ++i) {
    core[i] = 1;
    core[i * m] = sign;
    for (std::size_t j = 1; j < m; ++j)
      core[i * m + j] = f.quadratic_character(f.sub(static_cast<i64>(i - 1), static_cast<i64>(j - 1)));
  }
  PmMatrix h = [&] {
    if (kind == PaleyKind::I) {
      if (q % 4 != 3) fail(ErrorCode::InvalidArgument, "Paley I needs q = 3 mod 4");
      return PmMatrix::generate(m, m, [&](std::size_t i, std::size_t j) {
        return (i == j ? 1 : core[i * m + j]) < 0;
      });
    }
    if (q % 4 != 1) fail(ErrorCode::InvalidArgument, "Paley II needs q = 1 mod 4");
    return PmMatrix::generate(2 * m, 2 * m, [&](std::size_t i, std::size_t j) {
      const std::size_t bi = i / 2, bj = j / 2, ti = i % 2, tj = j % 2;
      if (bi == bj) return (ti | tj) != 0;
      const int c = core[bi * m + bj];
      const int s = (ti == 1 && tj == 1) ? -1 : 1;
      return c * s < 0;
    });
  }();
  if (!is_hadamard(h)) fail(ErrorCode::Internal, "Paley matrix is not Hadamard");
  return h;
}

PmMatrix hadamard_matrix(i64 n) {
  if (n == 1) return PmMatrix(1, 1);
  if (n == 2) return sylvester(1);
  if (n < 1 || n % 4 != 0 || n > static_cast<i64>(kDefaultMaxOrder))
    fail(ErrorCode::LimitExceeded, "no Hadamard construction for order " + std::to_string(n));
  if ((n & (n - 1)) == 0) return sylvester(static_cast<unsigned>(__builtin_ctzll(static_cast<unsigned long long>(n))));
  if (n - 1 <= kMaxPaleyField && is_prime_power(n - 1) && (n - 1) % 4 == 3) return paley_hadamard(n - 1, PaleyKind::I);
  if (n / 2 - 1 <= kMaxPaleyField && is_prime_power(n / 2 - 1) && (n / 2 - 1) % 4 == 1)
    return paley_hadamard(n / 2 - 1, PaleyKind::II);
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0 && constructible_hadamard_order(d) && constructible_hadamard_order(n / d))
      return kronecker(hadamard_matrix(d), hadamard_matrix(n / d));
  fail(ErrorCode::LimitExceeded, "no Hadamard construction for order " + std::to_string(n));
}

Z2Subset bent_difference_set(unsigned m) {
  if (m < 1 || 2 * m > kMaxSubsetRank) fail(ErrorCode::OutOfRange, "bent degree out of range");
  std::vector<std::uint32_t> el;
  const std::uint32_t q = std::uint32_t{1} << m;
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      if (__builtin_popcount(x & y) & 1) el.push_back((x << m) | y);
  return Z2Subset(2 * m, std::move(el));
}

Z2Subset spread_union_pds(unsigned m, unsigned s, std::vector<std::size_t> which) {
  const auto lines = spread_lines(m);
  if (s < 1 || s > lines.size()) fail(ErrorCode::OutOfRange, "s must lie in 1..2^m+1");
  if (which.empty())
    for (std::size_t i = 0; i < s; ++i) which.push_back(i);
  if (which.size() != s) fail(ErrorCode::InvalidArgument, "need exactly s line indices");
  std::set<std::size_t> seen;
  std::set<std::uint32_t> el;
  for (auto i : which) {
    if (i >= lines.size()) fail(ErrorCode::OutOfRange, "line index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) fail(ErrorCode::InvalidArgument, "duplicate line index " + std::to_string(i));
    for (auto x : lines[i].elements())
      if (x != 0) el.insert(x);
  }
  return Z2Subset(2 * m, std::vector<std::uint32_t>(el.begin(), el.end()));
}

Construction pds_to_bshm(const Z2Subset& d) {
  const PdsParams p = verify_pds_char(d);
  PmMatrix h = character_table(d.rank());
  std::vector<std::size_t> idx(d.elements().begin(), d.elements().end());
  RowSubset rows(std::move(idx), h.rows());
  auto cert = verify_bshm(h, rows);
  if (!cert.trivial && (cert.a != p.a || cert.b != p.b))
    fail(ErrorCode::Internal, "certificate " + parameter_string(cert) + " disagrees with the character values");
  if (cert.kind == BshmKind::Type1 && p.contains_identity)
    fail(ErrorCode::Internal, "type 1 certificate from a set containing the identity");
  if (cert.kind == BshmKind::Type2 && !p.contains_identity)
    fail(ErrorCode::Internal, "type 2 certificate from a set without the identity");
  return {std::move(h), std::move(rows), std::move(cert)};
}

MultiConstruction packing_to_multibshm(unsigned m, const std::vector<std::vector<std::size_t>>& partition,
                                       std::size_t j) {
  const auto lines = spread_lines(m);
  const std::size_t w = partition.size();
  if (w == 0 || j >= w) fail(ErrorCode::InvalidArgument, "block index out of range");
  std::vector<int> owner(lines.size(), -1);
  for (std::size_t u = 0; u < w; ++u) {
    if (partition[u].empty()) fail(ErrorCode::InvalidArgument, "empty block " + std::to_string(u));
    for (auto i : partition[u]) {
      if (i >= lines.size()) fail(ErrorCode::InvalidArgument, "line index " + std::to_string(i) + " out of range");
      if (owner[i] >= 0) fail(ErrorCode::InvalidArgument, "line " + std::to_string(i) + " used twice");
      owner[i] = static_cast<int>(u);
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (owner[i] < 0) fail(ErrorCode::InvalidArgument, "line " + std::to_string(i) + " not covered");

  std::vector<std::uint32_t> order{0};
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (const auto& part : partition) {
    const std::size_t first = order.size();
    for (auto i : part)
      for (auto x : lines[i].elements())
        if (x != 0) order.push_back(x);
    ranges.emplace_back(first, order.size());
  }
  const std::size_t n = order.size();
  PmMatrix h = PmMatrix::generate(n, n, [&](std::size_t r, std::size_t c) {
    return char_sign(order[r], static_cast<std::uint32_t>(c)) < 0;
  });

  MultiConstruction out{std::move(h), {}, {}, {}, 0};
  const i64 q = i64{1} << m;
  for (std::size_t u = 0; u < w; ++u) {
    out.blocks.push_back(RowSubset::range(ranges[u].first, ranges[u].second, n));
    RowSubset rows = u == j ? out.blocks[u].with(0) : out.blocks[u];
    auto cert = verify_bshm(out.h, rows, {.check_hadamard = u == 0});
    const i64 s = static_cast<i64>(partition[u].size());
    const i64 lift = u == j ? 1 : 0;
    if (!cert.trivial) {
      const i64 x = q - s + lift, y = lift - s;
      if (cert.a != std::max(x, y) || cert.b != std::min(x, y))
        fail(ErrorCode::Internal, "block " + std::to_string(u) + " gave " + parameter_string(cert));
    }
    out.cert_rows.push_back(std::move(rows));
    out.certs.push_back(std::move(cert));
  }
  if (w <= kMaxUnionBlocks) {
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << w); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t u = 0; u < w; ++u)
        if ((mask >> u) & 1u)
          for (auto r : out.blocks[u].indices()) idx.push_back(r);
      verify_bshm(out.h, RowSubset(std::move(idx), n), {.check_hadamard = false});
      ++out.unions_verified;
    }
  }
  return out;
}

Construction kronecker_bshm(const PmMatrix& h, const RowSubset& rows, const PmMatrix& k) {
  const auto cert = verify_bshm(h, rows);
  if (cert.a != cert.ell || cert.b != 0)
    fail(ErrorCode::CertificateMismatch, parameter_string(cert) + " is not of the form (n,ell,ell,0)");
  if (!is_hadamard(k)) fail(ErrorCode::NotHadamard, "Kronecker factor is not Hadamard");
  PmMatrix big = kronecker(h, k);
  std::vector<std::size_t> idx;
  for (auto r : rows.indices())
    for (std::size_t t = 0; t < k.rows(); ++t) idx.push_back(r * k.rows() + t);
  RowSubset big_rows(std::move(idx), big.rows());
  auto out = verify_bshm(big, big_rows);
  const i64 m = static_cast<i64>(k.rows());
  check_construction(out, cert.n * m, cert.ell * m, cert.ell * m, 0);
  return {std::move(big), std::move(big_rows), std::move(out)};
}

Construction construct_ns_n_n_0(const PmMatrix& hn, const PmMatrix& hs) {
  if (hn.rows() < 2 || hs.rows() < 2) fail(ErrorCode::InvalidArgument, "both orders must be at least 2");
  if (!is_hadamard(hn) || !is_hadamard(hs)) fail(ErrorCode::NotHadamard, "input is not Hadamard");
  PmMatrix big = kronecker(normalize_first_row(hs), hn);
  RowSubset rows = RowSubset::range(0, hn.rows(), big.rows());
  auto cert = verify_bshm(big, rows);
  const i64 n = static_cast<i64>(hn.rows());
  check_construction(cert, n * static_cast<i64>(hs.rows()), n, n, 0);
  return {std::move(big), std::move(rows), std::move(cert)};
}

Construction construct_n_2_2_0(const PmMatrix& h) {
  if (h.rows() < 4) fail(ErrorCode::InvalidArgument, "order must be at least 4");
  PmMatrix g = normalize_first_row(h);
  RowSubset rows({0, 1}, g.rows());
  auto cert = verify_bshm(g, rows);
  check_construction(cert, static_cast<i64>(g.rows()), 2, 2, 0);
  return {std::move(g), std::move(rows), std::move(cert)};
}

Construction b0_to_bm1(const PmMatrix& h, const RowSubset& rows) {
  const auto cert = verify_bshm(h, rows);
  if (cert.a != cert.ell || cert.b != 0 || cert.ell % 4 != 0)
    fail(ErrorCode::CertificateMismatch, parameter_string(cert) + " is not of the form (n,4s,4s,0)");
  const auto d = structure_decompose(h, rows);
  const std::size_t last = rows.indices().back();
  const std::size_t pos = rows.size() - 1;
  std::vector<bool> flip(h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j) flip[j] = d.representatives.negative(pos, d.class_of_column[j]);
  PmMatrix g = h.negate_columns(flip);
  if (!g.row_all_ones(last)) fail(ErrorCode::StructureViolation, "column classes are not constant on the block");
  RowSubset out_rows = rows.without(last);
  auto out = verify_bshm(g, out_rows);
  check_construction(out, cert.n, cert.ell - 1, cert.ell - 1, -1);
  return {std::move(g), std::move(out_rows), std::move(out)};
}

Construction construct_b0(i64 r, i64 s) {
  if (r < 1 || s < 1) fail(ErrorCode::InvalidArgument, "r and s must be positive");
  if (constructible_hadamard_order(2 * r) && constructible_hadamard_order(4 * s))
    return construct_ns_n_n_0(hadamard_matrix(4 * s), hadamard_matrix(2 * r));
  if (constructible_hadamard_order(4 * r) && constructible_hadamard_order(2 * s)) {
    const auto base = construct_n_2_2_0(hadamard_matrix(4 * r));
    return kronecker_bshm(base.h, base.rows, hadamard_matrix(2 * s));
  }
  fail(ErrorCode::LimitExceeded, "no explicit construction for r=" + std::to_string(r) + ", s=" + std::to_string(s));
}

Construction construct_bm1(i64 r, i64 s) {
  if (r < 2 || s < 1) fail(ErrorCode::InvalidArgument, "need r >= 2 and s >= 1");
  if (constructible_hadamard_order(r) && constructible_hadamard_order(4 * s)) {
    const auto b0 = construct_ns_n_n_0(hadamard_matrix(4 * s), hadamard_matrix(r));
    return b0_to_bm1(b0.h, b0.rows);
  }
  if (constructible_hadamard_order(2 * r) && constructible_hadamard_order(2 * s)) {
    const auto base = construct_n_2_2_0(hadamard_matrix(2 * r));
    const auto b0 = kronecker_bshm(base.h, base.rows, hadamard_matrix(2 * s));
    return b0_to_bm1(b0.h, b0.rows);
  }
  fail(ErrorCode::LimitExceeded, "no explicit construction for r=" + std::to_string(r) + ", s=" + std::to_string(s));
}

}  // namespace bshm
