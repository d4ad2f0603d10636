#include "bshm/bshm_core.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "bshm/error.hpp"
#include "json.hpp"

namespace bshm {

std::string format_srg(const SrgParams& p) {
  std::ostringstream out;
  out << '(' << p.v << ',' << p.k << ',' << p.lambda << ',' << p.mu << ')';
  return out.str();
}

const char* kind_name(BshmKind kind) {
  switch (kind) {
    case BshmKind::Equiangular: return "equiangular";
    case BshmKind::Type1: return "type1";
    case BshmKind::Type2: return "type2";
    case BshmKind::Degenerate: return "degenerate";
  }
  return "?";
}

const char* allones_name(AllOnesLocation loc) {
  switch (loc) {
    case AllOnesLocation::H1: return "H1";
    case AllOnesLocation::H2: return "H2";
    case AllOnesLocation::None: return "none";
  }
  return "?";
}

std::string certificate_json(const BshmCertificate& c) {
  nlohmann::ordered_json j;
  j["schema"] = "bshm-cert/1";
  j["n"] = c.n;
  j["ell"] = c.ell;
  j["rows"] = c.rows.indices();
  j["a"] = c.a;
  j["b"] = c.b;
  j["kind"] = kind_name(c.kind);
  j["k_a"] = c.k_a;
  if (c.graph) {
    nlohmann::ordered_json g;
    g["v"] = c.graph->v;
    g["k"] = c.graph->k;
    g["lambda"] = c.graph->lambda;
    g["mu"] = c.graph->mu;
    j["graph"] = g;
  } else {
    j["graph"] = nullptr;
  }
  j["primitive"] = c.primitive;
  j["allones_row"] = allones_name(c.allones_row);
  j["trivial"] = c.trivial;
  return j.dump();
}

std::string parameter_string(const BshmCertificate& c) {
  std::ostringstream out;
  out << '(' << c.n << ',' << c.ell << ',' << c.a << ',' << c.b << ')';
  return out.str();
}

Graph::Graph(std::size_t order) : n_(order), words_(words_for_bits(order)), bits_(order * words_, 0) {}

void Graph::add_edge(std::size_t i, std::size_t j) {
  if (i >= n_ || j >= n_ || i == j) fail(ErrorCode::InvalidArgument, "bad edge");
  bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  bits_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t Graph::degree(std::size_t i) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w]));
  return d;
}

std::size_t Graph::common_neighbours(std::size_t i, std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < words_; ++w)
    c += static_cast<std::size_t>(std::popcount(bits_[i * words_ + w] & bits_[j * words_ + w]));
  return c;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!adjacent(i, j)) g.add_edge(i, j);
  return g;
}

namespace {

inline int masked_dot(const PmMatrix& h, const std::vector<std::uint64_t>& mask, int size, std::size_t i,
                      std::size_t j) {
  auto ci = h.col(i);
  auto cj = h.col(j);
  int differ = 0;
  for (std::size_t w = 0; w < ci.size(); ++w) differ += std::popcount((ci[w] ^ cj[w]) & mask[w]);
  return size - 2 * differ;
}

[[noreturn]] void report_values(const PmMatrix& h, const RowSubset& rows) {
  std::map<int, std::size_t> hist;
  const int size = static_cast<int>(rows.size());
  for (std::size_t i = 0; i < h.cols(); ++i)
    for (std::size_t j = i + 1; j < h.cols(); ++j) ++hist[masked_dot(h, rows.mask(), size, i, j)];
  std::string list;
  for (auto [v, c] : hist) list += (list.empty() ? "" : ",") + std::to_string(v) + ":" + std::to_string(c);
  fail(ErrorCode::TooManyValues, "column dots take values {" + list + "}");
}

bool rows_balanced(const PmMatrix& h, const RowSubset& rows) {
  if (h.cols() % 2) return false;
  for (auto r : rows.indices())
    if (h.row_negatives(r) * 2 != h.cols()) return false;
  return true;
}

}  // namespace

BshmCertificate verify_bshm(const PmMatrix& h, const RowSubset& rows, const VerifyOptions& options) {
  if (rows.host_rows() != h.rows()) fail(ErrorCode::InvalidArgument, "row subset does not match the matrix");
  if (options.check_hadamard && !is_hadamard(h)) fail(ErrorCode::NotHadamard, "matrix is not Hadamard");
  const std::size_t n = h.rows();
  const std::size_t ell = rows.size();
  if (ell < 1 || ell + 1 > n) fail(ErrorCode::InvalidArgument, "row count must lie in 1..n-1");

  const int size = static_cast<int>(ell);
  int first = 0, second = 0, nvals = 0;
  Graph first_graph(n);
  std::vector<std::int64_t> first_count(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const int d = masked_dot(h, rows.mask(), size, i, j);
      if (nvals == 0) {
        first = d;
        nvals = 1;
      }
      if (d == first) {
        first_graph.add_edge(i, j);
        ++first_count[i];
        ++first_count[j];
      } else if (nvals == 1) {
        second = d;
        nvals = 2;
      } else if (d != second) {
        report_values(h, rows);
      }
    }
  if (nvals == 1) second = first;

  BshmCertificate c;
  c.n = static_cast<std::int64_t>(n);
  c.ell = static_cast<std::int64_t>(ell);
  c.rows = rows;
  c.a = std::max(first, second);
  c.b = std::min(first, second);
  c.trivial = ell == 1 || ell + 1 == n;
  const bool a_is_first = c.a == first;
  const Graph adj = a_is_first ? first_graph : first_graph.complement();

  std::vector<std::int64_t> ka(n);
  for (std::size_t i = 0; i < n; ++i)
    ka[i] = (a_is_first || c.a == c.b) ? first_count[i] : static_cast<std::int64_t>(n) - 1 - first_count[i];
  const bool ka_constant = std::all_of(ka.begin(), ka.end(), [&](std::int64_t x) { return x == ka[0]; });
  c.k_a = ka_constant ? ka[0] : -1;

  for (std::size_t r = 0; r < n; ++r)
    if (h.row_all_ones(r)) {
      c.allones_row = rows.contains(r) ? AllOnesLocation::H1 : AllOnesLocation::H2;
      break;
    }

  if (c.a == c.b) {
    c.kind = BshmKind::Degenerate;
  } else if (c.b == -c.a) {
    c.kind = BshmKind::Equiangular;
  } else {
    if (!ka_constant) fail(ErrorCode::InconsistentKa, "k_a differs between columns");
    const bool t1 = rows_balanced(h, rows);
    const bool t2 = rows_balanced(h, rows.complement());
    if (t1 == t2) fail(ErrorCode::Internal, "type test is ambiguous");
    c.kind = t1 ? BshmKind::Type1 : BshmKind::Type2;
    const std::int64_t cval = c.ell - c.b + (c.a - c.b) * c.k_a + c.b * c.n;
    if ((t1 && cval != 0) || (t2 && cval != c.n))
      fail(ErrorCode::Internal, "type test disagrees with the eigenvalue check");
  }

  if (!c.trivial) {
    if (c.kind == BshmKind::Equiangular) {
      try {
        c.graph = srg_params(adj);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotRegular && e.code() != ErrorCode::NotStronglyRegular) throw;
      }
    } else {
      c.graph = srg_params(adj);
    }
    c.primitive = c.graph && primitivity(*c.graph);
  }
  return c;
}

Graph associated_graph(const PmMatrix& h, const RowSubset& rows, std::int64_t a) {
  if (rows.host_rows() != h.rows()) fail(ErrorCode::InvalidArgument, "row subset does not match the matrix");
  Graph g(h.cols());
  const int size = static_cast<int>(rows.size());
  for (std::size_t i = 0; i < h.cols(); ++i)
    for (std::size_t j = i + 1; j < h.cols(); ++j)
      if (masked_dot(h, rows.mask(), size, i, j) == a) g.add_edge(i, j);
  return g;
}

SrgParams srg_params(const Graph& g) {
  const std::size_t n = g.order();
  SrgParams p;
  p.v = static_cast<std::int64_t>(n);
  p.k = static_cast<std::int64_t>(g.degree(0));
  for (std::size_t i = 1; i < n; ++i)
    if (static_cast<std::int64_t>(g.degree(i)) != p.k)
      fail(ErrorCode::NotRegular, "vertex " + std::to_string(i) + " has degree " + std::to_string(g.degree(i)) +
                                      ", vertex 0 has " + std::to_string(p.k));
  bool have_lambda = false, have_mu = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = static_cast<std::int64_t>(g.common_neighbours(i, j));
      const bool adj = g.adjacent(i, j);
      bool& have = adj ? have_lambda : have_mu;
      std::int64_t& value = adj ? p.lambda : p.mu;
      if (!have) {
        have = true;
        value = c;
      } else if (value != c) {
        fail(ErrorCode::NotStronglyRegular, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") has " +
                                                std::to_string(c) + " common neighbours, expected " +
                                                std::to_string(value));
      }
    }
  return p;
}

bool primitivity(const SrgParams& p) { return p.mu > 0 && p.v - 2 * p.k + p.lambda > 0; }

BshmCertificate switch_certificate(const BshmCertificate& c) {
  BshmCertificate s = c;
  s.ell = c.n - c.ell;
  s.rows = c.rows.complement();
  s.a = -c.b;
  s.b = -c.a;
  if (c.kind == BshmKind::Type1) s.kind = BshmKind::Type2;
  if (c.kind == BshmKind::Type2) s.kind = BshmKind::Type1;
  if (c.a != c.b) {
    s.k_a = c.k_a < 0 ? -1 : c.n - 1 - c.k_a;
    if (c.graph) s.graph = c.graph->complement();
  }
  s.primitive = s.graph && primitivity(*s.graph);
  if (c.allones_row == AllOnesLocation::H1) s.allones_row = AllOnesLocation::H2;
  if (c.allones_row == AllOnesLocation::H2) s.allones_row = AllOnesLocation::H1;
  return s;
}

namespace {

void check_shift(const BshmCertificate& before, const BshmCertificate& after, int sign) {
  if (after.ell != before.ell + sign || after.a != before.a + sign || after.b != before.b + sign)
    fail(ErrorCode::Internal, "all-ones row shift gave " + parameter_string(after) + " from " +
                                  parameter_string(before));
  if (before.graph && after.graph && *before.graph != *after.graph)
    fail(ErrorCode::Internal, "all-ones row shift changed the graph");
}

}  // namespace

BshmCertificate add_allones_row(const PmMatrix& h, const RowSubset& rows) {
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (rows.contains(r) || !h.row_all_ones(r)) continue;
    const auto before = verify_bshm(h, rows);
    auto after = verify_bshm(h, rows.with(r), {.check_hadamard = false});
    check_shift(before, after, 1);
    return after;
  }
  fail(ErrorCode::NoAllOnesRow, "no all-ones row outside the subset");
}

BshmCertificate remove_allones_row(const PmMatrix& h, const RowSubset& rows) {
  for (auto r : rows.indices()) {
    if (!h.row_all_ones(r)) continue;
    if (rows.size() < 2) fail(ErrorCode::InvalidArgument, "cannot remove the only row");
    const auto before = verify_bshm(h, rows);
    auto after = verify_bshm(h, rows.without(r), {.check_hadamard = false});
    check_shift(before, after, -1);
    return after;
  }
  fail(ErrorCode::NoAllOnesRow, "no all-ones row inside the subset");
}

SrgParams equiangular_graph(std::int64_t n, std::int64_t ell, std::int64_t a, bool pivot_inside) {
  if (a <= 0) fail(ErrorCode::ParamMismatch, "value a must be positive");
  const std::int64_t extra = pivot_inside ? n : 0;
  const std::int64_t kn = (n - 1) * a - ell + extra;
  const std::int64_t ln = (n - 4) * a + n - 4 * ell + 2 * extra;
  const std::int64_t mn = n * (a - 1) + 2 * extra;
  if (kn % (2 * a) || ln % (4 * a) || mn % (4 * a))
    fail(ErrorCode::ParamMismatch, "graph parameters are not integral");
  return {n, kn / (2 * a), ln / (4 * a), mn / (4 * a)};
}

PmMatrix to_regular_form(const PmMatrix& h, const RowSubset& rows, std::size_t pivot_row) {
  const auto cert = verify_bshm(h, rows);
  if (cert.kind != BshmKind::Equiangular) fail(ErrorCode::KindMismatch, "regular form needs b = -a");
  if (pivot_row >= h.rows()) fail(ErrorCode::OutOfRange, "pivot row out of range");
  std::vector<bool> flip(h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j) flip[j] = h.negative(pivot_row, j);
  PmMatrix out = h.negate_columns(flip);
  const auto after = verify_bshm(out, rows, {.check_hadamard = false});
  if (after.a != cert.a || after.b != cert.b) fail(ErrorCode::Internal, "negation changed the value pair");
  if (!after.trivial) {
    const auto expect = equiangular_graph(cert.n, cert.ell, cert.a, rows.contains(pivot_row));
    if (!after.graph || *after.graph != expect)
      fail(ErrorCode::Internal, "regular form graph differs from " + format_srg(expect));
  }
  return out;
}

void check_unbiased_params(std::int64_t n, std::int64_t ell, std::int64_t a) {
  if (a <= 0 || n != 4 * a * a || (ell != 2 * a * a - a && ell != 2 * a * a + a))
    fail(ErrorCode::ParamMismatch, "(n, ell) = (" + std::to_string(n) + "," + std::to_string(ell) +
                                       ") is not (4a^2, 2a^2 +- a) for a = " + std::to_string(a));
}

PmMatrix extract_unbiased_mate(const PmMatrix& h, const RowSubset& rows) {
  const auto cert = verify_bshm(h, rows);
  if (cert.kind != BshmKind::Equiangular) fail(ErrorCode::ParamMismatch, "unbiased mate needs b = -a");
  check_unbiased_params(cert.n, cert.ell, cert.a);
  const auto comp = rows.complement();
  const std::size_t n = h.rows();
  std::vector<int> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t diff = column_dot(h, rows, i, j) - column_dot(h, comp, i, j);
      if (diff != 2 * cert.a && diff != -2 * cert.a)
        fail(ErrorCode::NotUnbiased, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not +-1");
      entries[i * n + j] = diff > 0 ? 1 : -1;
    }
  PmMatrix l = PmMatrix::from_signs(n, n, entries);
  if (!is_hadamard(l)) fail(ErrorCode::NotUnbiased, "mate is not Hadamard");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int d = row_dot(h, i, l, j);
      if (d != 2 * cert.a && d != -2 * cert.a)
        fail(ErrorCode::NotUnbiased, "H L^T entry (" + std::to_string(i) + "," + std::to_string(j) + ") is " +
                                         std::to_string(d));
    }
  return l;
}

PbdReport extract_pbd(const PmMatrix& h, const RowSubset& rows) {
  const auto cert = verify_bshm(h, rows);
  if (cert.kind != BshmKind::Type1) fail(ErrorCode::NotType1, "certificate kind is " + std::string(kind_name(cert.kind)));
  const PmMatrix h1 = h.select_rows(rows);
  std::vector<bool> flip(h1.rows());
  for (std::size_t s = 0; s < h1.rows(); ++s) flip[s] = h1.negative(s, 0);
  const PmMatrix sm = h1.negate_rows(flip);
  const std::size_t ell = sm.rows();
  const std::size_t n = sm.cols();

  PbdReport rep;
  rep.points = ell;
  rep.blocks = n - 1;
  rep.incidence.assign(ell, std::vector<std::uint8_t>(n - 1, 0));
  for (std::size_t s = 0; s < ell; ++s)
    for (std::size_t j = 1; j < n; ++j) rep.incidence[s][j - 1] = sm.negative(s, j) ? 1 : 0;

  auto twice_in = [&](std::int64_t x, std::initializer_list<std::int64_t> allowed, std::int64_t scale) {
    for (auto v : allowed)
      if (scale * x == v) return true;
    return false;
  };
  const std::int64_t l = cert.ell, a = cert.a, b = cert.b;
  std::vector<std::size_t> sizes;
  for (std::size_t j = 1; j < n; ++j) {
    std::size_t sz = 0;
    for (auto w : sm.col(j)) sz += static_cast<std::size_t>(std::popcount(w));
    if (!twice_in(static_cast<std::int64_t>(sz), {l - a, l - b}, 2))
      fail(ErrorCode::StructureViolation, "block " + std::to_string(j - 1) + " has size " + std::to_string(sz));
    sizes.push_back(sz);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  rep.block_sizes = sizes;

  for (std::size_t p = 0; p < ell; ++p)
    for (std::size_t q = p + 1; q < ell; ++q) {
      std::size_t c = 0;
      auto rp = sm.row(p);
      auto rq = sm.row(q);
      for (std::size_t w = 0; w < rp.size(); ++w) c += static_cast<std::size_t>(std::popcount(rp[w] & rq[w]));
      if (c * 4 != n)
        fail(ErrorCode::StructureViolation, "points " + std::to_string(p) + "," + std::to_string(q) + " share " +
                                                std::to_string(c) + " blocks");
      rep.pair_count = c;
    }

  std::vector<std::size_t> inter;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t c = 0;
      auto ci = sm.col(i);
      auto cj = sm.col(j);
      for (std::size_t w = 0; w < ci.size(); ++w) c += static_cast<std::size_t>(std::popcount(ci[w] & cj[w]));
      if (!twice_in(static_cast<std::int64_t>(c), {l - a, l - b, l + a - 2 * b, l + b - 2 * a}, 4))
        fail(ErrorCode::StructureViolation, "blocks " + std::to_string(i - 1) + "," + std::to_string(j - 1) +
                                                " meet in " + std::to_string(c) + " points");
      inter.push_back(c);
    }
  std::sort(inter.begin(), inter.end());
  inter.erase(std::unique(inter.begin(), inter.end()), inter.end());
  rep.intersection_sizes = inter;
  return rep;
}

Decomposition structure_decompose(const PmMatrix& h, const RowSubset& rows) {
  const auto cert = verify_bshm(h, rows);
  const bool b0 = cert.kind == BshmKind::Type2 && cert.a == cert.ell && cert.b == 0 && cert.ell % 4 == 0;
  const bool bm1 = cert.kind == BshmKind::Type1 && cert.a == cert.ell && cert.b == -1 && (cert.ell + 1) % 4 == 0;
  if (!b0 && !bm1)
    fail(ErrorCode::StructureViolation, parameter_string(cert) + " is not of the form (n,4s,4s,0) or (n,4s-1,4s-1,-1)");

  const std::size_t n = h.cols();
  const auto& mask = rows.mask();
  std::map<std::vector<std::uint64_t>, std::size_t> ids;
  std::vector<std::size_t> cls(n);
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t j = 0; j < n; ++j) {
    auto c = h.col(j);
    std::vector<std::uint64_t> key(c.size());
    for (std::size_t w = 0; w < c.size(); ++w) key[w] = c[w] & mask[w];
    auto [it, fresh] = ids.emplace(std::move(key), members.size());
    if (fresh) members.emplace_back();
    cls[j] = it->second;
    members[it->second].push_back(j);
  }
  const std::size_t expect = b0 ? rows.size() : rows.size() + 1;
  if (members.size() != expect)
    fail(ErrorCode::StructureViolation, std::to_string(members.size()) + " column classes, expected " +
                                            std::to_string(expect));
  const std::size_t mult = members.front().size();
  for (const auto& m : members)
    if (m.size() != mult) fail(ErrorCode::StructureViolation, "column classes have unequal sizes");

  const auto& idx = rows.indices();
  PmMatrix reps = PmMatrix::generate(idx.size(), members.size(), [&](std::size_t s, std::size_t c) {
    return h.negative(idx[s], members[c].front());
  });
  const PmMatrix check = b0 ? reps : PmMatrix::generate(reps.rows() + 1, reps.cols(), [&](std::size_t s, std::size_t c) {
    return s > 0 && reps.negative(s - 1, c);
  });
  if (!is_hadamard(check)) fail(ErrorCode::StructureViolation, "class representatives do not form a Hadamard matrix");

  std::vector<std::size_t> order(n);
  for (std::size_t c = 0; c < members.size(); ++c)
    for (std::size_t k = 0; k < mult; ++k) order[k * members.size() + c] = members[c][k];
  return Decomposition{std::move(order), std::move(cls), std::move(reps), members.size(), mult};
}

}  // namespace bshm
