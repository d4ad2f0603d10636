// Acceptance runner: one PASS/FAIL line per criterion.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "bshm/bshm_core.hpp"
#include "bshm/constructions.hpp"
#include "bshm/error.hpp"
#include "bshm/param_rules.hpp"
#include "bshm/pds.hpp"
#include "bshm/pm_matrix.hpp"
#include "bshm/search.hpp"
#include "bshm/tables.hpp"
#include "bshm/z2_algebra.hpp"

using namespace bshm;
using i64 = std::int64_t;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few violations.
struct Checker {
  std::size_t violations = 0;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ++violations;
    if (notes.size() < 5) notes.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    if (violations == 0) return {true, summary};
    std::string d = std::to_string(violations) + " violation(s)";
    for (const auto& n : notes) d += "; " + n;
    return {false, d};
  }
};

std::string golden_dir;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Golden rows keyed by "n ell a b".
std::map<std::string, std::vector<std::string>> golden_rows(int table, std::size_t key_offset) {
  std::map<std::string, std::vector<std::string>> out;
  std::istringstream in(read_file(golden_dir + "/table" + std::to_string(table) + ".tsv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, '\t')) cells.push_back(c);
    std::string key;
    for (std::size_t i = key_offset; i < key_offset + 4; ++i) key += cells.at(i) + " ";
    out[key] = cells;
  }
  return out;
}

std::string key_of(i64 n, i64 ell, i64 a, i64 b) {
  return std::to_string(n) + " " + std::to_string(ell) + " " + std::to_string(a) + " " + std::to_string(b) + " ";
}

std::string srg_cells(const SrgParams& g) {
  return std::to_string(g.v) + " " + std::to_string(g.k) + " " + std::to_string(g.lambda) + " " + std::to_string(g.mu);
}

std::string cells(const std::vector<std::string>& row, std::size_t from) {
  return row.at(from) + " " + row.at(from + 1) + " " + row.at(from + 2) + " " + row.at(from + 3);
}

// Trailing empty reason cells are dropped by the tab splitter.
std::string reason_of(const std::vector<std::string>& row) { return row.size() > 9 ? row[9] : ""; }

std::string params(const BshmCertificate& c) { return parameter_string(c); }

Outcome table_exact(int table) {
  const auto d = diff_table(table, golden_dir);
  if (d.equal) return {true, "matches golden table " + std::to_string(table)};
  return {false, std::to_string(d.missing.size()) + " missing, " + std::to_string(d.surplus.size()) + " surplus rows"};
}

// Constructed instances shared by the property and invariant suites.
struct Instance {
  std::string name;
  PmMatrix h;
  RowSubset rows;
};

std::size_t first_outside(const RowSubset& rows) {
  for (std::size_t i = 0; i < rows.host_rows(); ++i)
    if (!rows.contains(i)) return i;
  fail(ErrorCode::Internal, "no row outside the subset");
}

std::vector<Instance> constructed_instances() {
  std::vector<Instance> out;
  auto add = [&](std::string name, const Construction& c) { out.push_back({std::move(name), c.h, c.rows}); };
  for (unsigned m = 2; m <= 4; ++m) {
    auto c = pds_to_bshm(bent_difference_set(m));
    const std::string tag = "bent m=" + std::to_string(m);
    out.push_back({tag + " regular-outside", to_regular_form(c.h, c.rows, first_outside(c.rows)), c.rows});
    out.push_back({tag + " regular-inside", to_regular_form(c.h, c.rows, c.rows.indices()[0]), c.rows});
    add(tag, c);
  }
  for (unsigned m = 3; m <= 4; ++m)
    for (unsigned s = 1; s <= (1u << m); ++s) {
      auto d = spread_union_pds(m, s);
      const std::string tag = "spread m=" + std::to_string(m) + " s=" + std::to_string(s);
      add(tag, pds_to_bshm(d));
      add(tag + " +identity", pds_to_bshm(d.with(0)));
    }
  auto twin = packing_to_multibshm(2, {{0}, {1, 2}, {3, 4}}, 0);
  for (std::size_t u = 0; u < twin.cert_rows.size(); ++u)
    out.push_back({"packing block " + std::to_string(u), twin.h, twin.cert_rows[u]});
  auto b0 = construct_ns_n_n_0(hadamard_matrix(12), hadamard_matrix(4));
  add("ns-n-n-0 12x4", b0);
  add("b0-to-bm1 48", b0_to_bm1(b0.h, b0.rows));
  add("n-2-2-0 8", construct_n_2_2_0(hadamard_matrix(8)));
  auto n220 = construct_n_2_2_0(hadamard_matrix(8));
  add("kron n-2-2-0 8 x 4", kronecker_bshm(n220.h, n220.rows, hadamard_matrix(4)));
  for (auto [r, s] : std::vector<std::pair<i64, i64>>{{1, 1}, {1, 2}, {2, 1}, {3, 1}, {2, 2}})
    add("b0 r=" + std::to_string(r) + " s=" + std::to_string(s), construct_b0(r, s));
  for (auto [r, s] : std::vector<std::pair<i64, i64>>{{2, 1}, {4, 1}, {6, 1}, {2, 2}, {8, 1}})
    add("bm1 r=" + std::to_string(r) + " s=" + std::to_string(s), construct_bm1(r, s));
  return out;
}

// ---- criteria ----

Outcome criterion1() { return table_exact(2); }

Outcome criterion2() {
  Checker ck;
  for (int t : {3, 4}) {
    const auto d = diff_table(t, golden_dir);
    ck.expect(d.missing.empty(), "table " + std::to_string(t) + " misses " + std::to_string(d.missing.size()) + " rows");
    for (const auto& s : d.surplus)
      ck.expect(s.ends_with("\tneeds-srg-vetting"), "table " + std::to_string(t) + " unflagged surplus: " + s);
  }
  return ck.outcome("tables 3 and 4 match golden");
}

Outcome criterion3() {
  auto a = table_exact(5), b = table_exact(6);
  if (a.ok && b.ok) return {true, "tables 5 and 6 match golden"};
  return {false, (a.ok ? "" : "table 5: " + a.detail + " ") + (b.ok ? "" : "table 6: " + b.detail)};
}

Outcome criterion4() {
  Checker ck;
  const auto t2 = golden_rows(2, 0), t3 = golden_rows(3, 0), t4 = golden_rows(4, 0);
  auto check_row = [&](const std::map<std::string, std::vector<std::string>>& table, const BshmCertificate& c,
                       std::size_t graph_col, const SrgParams& g) {
    const auto it = table.find(key_of(c.n, c.ell, c.a, c.b));
    if (it == table.end()) return ck.expect(false, params(c) + " absent from golden table");
    ck.expect(cells(it->second, graph_col) == srg_cells(g), params(c) + " graph " + srg_cells(g));
    ck.expect(it->second.at(&table == &t2 ? 12 : 8) == "yes", params(c) + " not marked as existing");
  };
  const std::vector<std::array<i64, 4>> bent_expected{{16, 6, 2, -2}, {64, 28, 4, -4}, {256, 120, 8, -8}};
  for (unsigned m = 2; m <= 4; ++m) {
    auto c = pds_to_bshm(bent_difference_set(m));
    const auto& e = bent_expected[m - 2];
    ck.expect(c.cert.n == e[0] && c.cert.ell == e[1] && c.cert.a == e[2] && c.cert.b == e[3],
              "bent m=" + std::to_string(m) + " gave " + params(c.cert));
    for (bool inside : {false, true}) {
      const std::size_t pivot = inside ? c.rows.indices()[0] : first_outside(c.rows);
      auto reg = verify_bshm(to_regular_form(c.h, c.rows, pivot), c.rows);
      if (!reg.graph) {
        ck.expect(false, "regular form of " + params(c.cert) + " has no SRG");
        continue;
      }
      check_row(t2, reg, inside ? 8 : 4, *reg.graph);
    }
  }
  std::size_t spread_rows = 0;
  for (unsigned m = 3; m <= 4; ++m)
    for (unsigned s = 2; s < (1u << m); ++s) {
      auto d = spread_union_pds(m, s);
      auto c = pds_to_bshm(d);
      const auto it = t3.find(key_of(c.cert.n, c.cert.ell, c.cert.a, c.cert.b));
      if (it == t3.end() || reason_of(it->second) != "spread-union-pds") continue;
      ++spread_rows;
      ck.expect(c.cert.kind == BshmKind::Type1, params(c.cert) + " is not type1");
      check_row(t3, c.cert, 4, *c.cert.graph);
      auto lifted = add_allones_row(c.h, c.rows);
      ck.expect(lifted.kind == BshmKind::Type2, params(lifted) + " is not type2");
      check_row(t4, lifted, 4, *lifted.graph);
    }
  ck.expect(spread_rows == 8, "spread unions hit " + std::to_string(spread_rows) + " of 8 rows");
  std::size_t golden_spread = 0;
  for (const auto& [k, row] : t3) golden_spread += reason_of(row) == "spread-union-pds";
  ck.expect(golden_spread == 8, "golden table 3 lists " + std::to_string(golden_spread) + " spread rows");

  auto bent = pds_to_bshm(bent_difference_set(2));
  auto up = add_allones_row(bent.h, bent.rows);
  ck.expect(params(up) == "(16,7,3,-1)" && up.kind == BshmKind::Type2, "add row gave " + params(up));
  check_row(t4, up, 4, *up.graph);
  const std::size_t pivot = bent.rows.indices()[0];
  auto reg = to_regular_form(bent.h, bent.rows, pivot);
  auto down = remove_allones_row(reg, bent.rows);
  ck.expect(params(down) == "(16,5,1,-3)" && down.kind == BshmKind::Type1, "remove row gave " + params(down));
  check_row(t3, down, 4, *down.graph);
  return ck.outcome("bent, spread-union and row add/remove certificates match golden rows");
}

Outcome criterion5() {
  Checker ck;
  auto mc = packing_to_multibshm(2, {{0}, {1, 2}, {3, 4}}, 0);
  std::multiset<std::string> got, want{"(16,4,4,0)", "(16,6,2,-2)", "(16,6,2,-2)"};
  for (const auto& c : mc.certs) got.insert(params(c));
  ck.expect(got == want, "block certificates differ");
  std::set<std::size_t> seen;
  for (const auto& b : mc.blocks)
    for (auto r : b.indices()) ck.expect(seen.insert(r).second, "row " + std::to_string(r) + " in two blocks");
  ck.expect(seen.size() == 15 && !seen.count(0), "blocks do not cover the non-identity rows");
  const std::size_t w = mc.blocks.size();
  std::size_t unions = 0;
  for (std::uint32_t mask = 1; mask < (1u << w); ++mask) {
    std::set<std::size_t> idx;
    for (std::size_t u = 0; u < w; ++u)
      if ((mask >> u) & 1u)
        for (auto r : mc.blocks[u].indices()) idx.insert(r);
    try {
      verify_bshm(mc.h, RowSubset({idx.begin(), idx.end()}, mc.h.rows()));
      ++unions;
    } catch (const Error& e) {
      ck.expect(false, std::string("union ") + std::to_string(mask) + ": " + e.what());
    }
  }
  ck.expect(unions == 7 && mc.unions_verified == 7, "unions verified: " + std::to_string(unions));
  return ck.outcome("twin blocks (16,4,4,0) (16,6,2,-2) (16,6,2,-2), 7 unions verified");
}

Outcome criterion6() {
  Checker ck;
  auto b0 = construct_ns_n_n_0(hadamard_matrix(12), hadamard_matrix(4));
  ck.expect(params(b0.cert) == "(48,12,12,0)", "b0 gave " + params(b0.cert));
  auto bm1 = b0_to_bm1(b0.h, b0.rows);
  ck.expect(params(bm1.cert) == "(48,11,11,-1)", "bm1 gave " + params(bm1.cert));
  ck.expect(bm1.cert.allones_row != AllOnesLocation::None, "bm1 matrix lacks the all-ones row");
  ck.expect(bm1.cert.graph && *bm1.cert.graph == SrgParams{48, 3, 2, 0}, "bm1 graph is not 12K4");
  const auto g = associated_graph(bm1.h, bm1.rows, bm1.cert.a);
  // 12 disjoint 4-cliques: every component is a clique of size 4.
  std::vector<int> comp(48, -1);
  int comps = 0;
  for (std::size_t i = 0; i < 48; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = comps;
    for (std::size_t j = 0; j < 48; ++j)
      if (g.adjacent(i, j)) comp[j] = comps;
    ++comps;
  }
  ck.expect(comps == 12, "graph has " + std::to_string(comps) + " cliques");
  for (std::size_t i = 0; i < 48; ++i)
    for (std::size_t j = 0; j < 48; ++j)
      if (i != j) ck.expect((comp[i] == comp[j]) == g.adjacent(i, j), "graph is not a union of cliques");
  auto back = add_allones_row(bm1.h, bm1.rows);
  ck.expect(params(back) == "(48,12,12,0)", "round trip gave " + params(back));
  return ck.outcome("(48,12,12,0) -> (48,11,11,-1) graph 12K4 -> (48,12,12,0)");
}

Outcome criterion7() {
  Checker ck;
  auto c = pds_to_bshm(bent_difference_set(2));
  ck.expect(params(c.cert) == "(16,6,2,-2)", "instance is " + params(c.cert));
  auto l = extract_unbiased_mate(c.h, c.rows);
  ck.expect(l.rows() == 16 && is_hadamard(l), "mate is not a Hadamard matrix of order 16");
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) {
      int dot = 0;
      for (std::size_t t = 0; t < 16; ++t) dot += c.h.at(i, t) * l.at(j, t);
      ck.expect(dot == 4 || dot == -4, "H L^T entry " + std::to_string(dot));
    }
  return ck.outcome("order-16 mate, all entries of H L^T are +-4");
}

// Naive PDS test by the character-value union rule, used against verify_packing.
bool packing_by_unions(const std::vector<Z2Subset>& parts, i64 delta, const std::vector<i64>& base) {
  const unsigned r = parts[0].rank();
  const std::uint32_t v = std::uint32_t{1} << r;
  std::vector<int> owner(v, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (auto x : parts[i].elements()) {
      if (x == 0 || owner[x] >= 0) return false;
      owner[x] = static_cast<int>(i);
    }
  for (std::uint32_t x = 1; x < v; ++x)
    if (owner[x] < 0) return false;
  for (std::uint32_t mask = 1; mask < (1u << parts.size()); ++mask) {
    std::vector<std::uint32_t> elems;
    i64 low = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
      if ((mask >> i) & 1u) {
        low += base[i];
        elems.insert(elems.end(), parts[i].elements().begin(), parts[i].elements().end());
      }
    for (std::uint32_t g = 1; g < v; ++g) {
      i64 sum = 0;
      for (auto s : elems) sum += char_sign(g, s);
      if (sum != low && sum != low + delta) return false;
    }
  }
  // The full union is G minus the identity, so at least one part must rise at each g.
  i64 total = 0;
  for (auto b : base) total += b;
  return total + delta == -1;
}

bool packing_by_elevation(const std::vector<Z2Subset>& parts, i64 delta, const std::vector<i64>& base) {
  try {
    return !verify_packing(parts, delta, base).degenerate;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAPacking) throw;
    return false;
  }
}

Outcome criterion8() {
  Checker ck;
  std::mt19937_64 rng(20240611);
  std::size_t cases = 0, packings_accepted = 0, packings_rejected = 0;

  auto pds_outcome = [](auto&& fn, const Z2Subset& d) -> std::optional<PdsParams> {
    try {
      return fn(d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotAPds) throw;
      return std::nullopt;
    }
  };
  auto compare_pds = [&](const Z2Subset& d) {
    ++cases;
    auto def = pds_outcome(verify_pds_definition, d);
    auto chr = pds_outcome(verify_pds_char, d);
    ck.expect(def.has_value() == chr.has_value() && (!def || *def == *chr),
              "pds verifiers disagree on a subset of size " + std::to_string(d.size()) + " in rank " +
                  std::to_string(d.rank()));
  };
  // All subsets of size 1..6 in Z_2^4.
  for (std::uint32_t mask = 1; mask < (1u << 16); ++mask) {
    if (__builtin_popcount(mask) > 6) continue;
    std::vector<std::uint32_t> elems;
    for (std::uint32_t x = 0; x < 16; ++x)
      if ((mask >> x) & 1u) elems.push_back(x);
    compare_pds(Z2Subset(4, elems));
  }
  // Random subsets in Z_2^6, biased towards PDS-like inputs by mixing in spread unions.
  const auto lines = spread_lines(3);
  for (int t = 0; t < 10000; ++t) {
    std::vector<std::uint8_t> ind(64, 0);
    if (t % 4 == 0) {
      for (const auto& l : lines)
        if (rng() & 1u)
          for (auto x : l.elements()) ind[x] = 1;
      ind[0] = rng() & 1u;
    } else {
      for (auto& b : ind) b = (rng() % 3) == 0;
    }
    std::size_t size = 0;
    for (auto b : ind) size += b;
    if (size == 0 || size == 64) continue;
    compare_pds(Z2Subset::from_indicator(6, ind));
  }

  // Packings: spread-line groupings plus random partitions, t <= 5, r <= 8.
  auto compare_packing = [&](const std::vector<Z2Subset>& parts, i64 delta) {
    ++cases;
    std::vector<i64> base;
    try {
      base = infer_base_sums(parts, delta);
    } catch (const Error&) {
      base.assign(parts.size(), 0);
    }
    const bool accepted = packing_by_elevation(parts, delta, base);
    ++(accepted ? packings_accepted : packings_rejected);
    ck.expect(accepted == packing_by_unions(parts, delta, base),
              "packing criteria disagree, t=" + std::to_string(parts.size()));
  };
  for (unsigned m = 2; m <= 4; ++m) {
    const auto sl = spread_lines(m);
    const i64 q = i64{1} << m;
    for (int trial = 0; trial < (m == 2 ? 200 : 60); ++trial) {
      const std::size_t t = 1 + rng() % 5;
      std::vector<std::vector<std::uint32_t>> groups(t);
      for (std::size_t i = 0; i < sl.size(); ++i) {
        const std::size_t g = i < t ? i : rng() % t;
        for (auto x : sl[i].elements())
          if (x != 0) groups[g].push_back(x);
      }
      std::vector<Z2Subset> parts;
      for (auto& g : groups) parts.emplace_back(2 * m, g);
      compare_packing(parts, q);
      // Move one element between parts to break the structure.
      if (t >= 2) {
        auto a = groups[0], b = groups[1];
        b.push_back(a.back());
        a.pop_back();
        if (!a.empty()) {
          std::vector<Z2Subset> broken{Z2Subset(2 * m, a), Z2Subset(2 * m, b)};
          for (std::size_t i = 2; i < t; ++i) broken.push_back(parts[i]);
          compare_packing(broken, q);
        }
      }
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned r = 2 + rng() % 5;
    const std::size_t t = 1 + rng() % 5;
    std::vector<std::vector<std::uint32_t>> groups(t);
    for (std::uint32_t x = 1; x < (1u << r); ++x) groups[x <= t ? x - 1 : rng() % t].push_back(x);
    bool ok = true;
    for (auto& g : groups) ok = ok && !g.empty();
    if (!ok) continue;
    std::vector<Z2Subset> parts;
    for (auto& g : groups) parts.emplace_back(r, g);
    compare_packing(parts, i64{1} << (r / 2));
  }

  // Popcount column dots against entrywise sums.
  for (int t = 0; t < 10000; ++t) {
    const std::size_t rows = 1 + rng() % 130, cols = 2 + rng() % 40;
    auto m = PmMatrix::generate(rows, cols, [&](std::size_t, std::size_t) { return rng() & 1u; });
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rows; ++i)
      if (rng() & 1u) idx.push_back(i);
    RowSubset sub(idx, rows);
    const std::size_t i = rng() % cols, j = rng() % cols;
    int naive = 0;
    for (auto s : idx) naive += m.at(s, i) * m.at(s, j);
    ++cases;
    ck.expect(column_dot(m, sub, i, j) == naive, "column_dot differs from the entrywise sum");
  }

  // srg_params against direct neighbour counting on every constructed graph.
  for (const auto& inst : constructed_instances()) {
    const auto cert = verify_bshm(inst.h, inst.rows);
    if (cert.trivial) continue;
    const auto g = associated_graph(inst.h, inst.rows, cert.a);
    const std::size_t n = g.order();
    std::optional<SrgParams> naive;
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j) k += g.adjacent(0, j);
    i64 lam = -1, mu = -1;
    bool srg = true;
    for (std::size_t i = 0; i < n && srg; ++i) {
      std::size_t deg = 0;
      for (std::size_t j = 0; j < n; ++j) deg += g.adjacent(i, j);
      if (deg != k) srg = false;
      for (std::size_t j = i + 1; j < n && srg; ++j) {
        i64 common = 0;
        for (std::size_t x = 0; x < n; ++x) common += g.adjacent(i, x) && g.adjacent(j, x);
        i64& slot = g.adjacent(i, j) ? lam : mu;
        if (slot < 0) slot = common;
        else if (slot != common) srg = false;
      }
    }
    if (srg) naive = SrgParams{static_cast<i64>(n), static_cast<i64>(k), std::max<i64>(lam, 0), std::max<i64>(mu, 0)};
    std::optional<SrgParams> fast;
    try {
      fast = srg_params(g);
    } catch (const Error&) {
    }
    ++cases;
    ck.expect(naive == fast, "srg_params differs from neighbour counting on " + inst.name);
  }
  ck.expect(packings_accepted > 0 && packings_rejected > 0, "packing comparisons cover only one verdict");
  return ck.outcome(std::to_string(cases) + " oracle comparisons (" + std::to_string(packings_accepted) +
                    " packings accepted, " + std::to_string(packings_rejected) + " rejected), no discrepancies");
}

bool is_root(i64 p, i64 q, const SrgParams& g) {
  return p * p - (g.lambda - g.mu) * p * q - (g.k - g.mu) * q * q == 0;
}

Outcome criterion9() {
  Checker ck;
  std::size_t checked = 0;
  for (const auto& inst : constructed_instances()) {
    const auto cert = verify_bshm(inst.h, inst.rows);
    const i64 n = cert.n, l = cert.ell, a = cert.a, b = cert.b;
    if (!(2 < l && l < n - 2)) continue;
    ++checked;
    const std::string who = inst.name + " " + params(cert);
    auto mod4 = [](i64 x) { return ((x % 4) + 4) % 4; };
    ck.expect(mod4(l) == mod4(a) && mod4(a) == mod4(b), who + ": mod 4 congruence");

    const auto cls = classify_params(n, l, a, b);
    const auto* pc = std::get_if<ParamClass>(&cls);
    ck.expect(pc != nullptr, who + ": classified infeasible");
    const auto g = associated_graph(inst.h, inst.rows, a);
    if (cert.kind == BshmKind::Equiangular) {
      ck.expect(a * a * (n - 1) == l * (n - l), who + ": equiangular relation");
      if (cert.graph)
        ck.expect(*cert.graph == equiangular_graph(n, l, a, false) || *cert.graph == equiangular_graph(n, l, a, true),
                  who + ": equiangular graph formula");
    } else {
      ck.expect(cert.kind == BshmKind::Type1 || cert.kind == BshmKind::Type2, who + ": kind");
      const i64 shift = cert.kind == BshmKind::Type1 ? b : b - 1;
      const i64 k_num = l - b + n * shift, den = b - a;
      ck.expect(k_num % den == 0 && cert.k_a == k_num / den, who + ": k_a closed form");
      const i64 mu_num = n * b * (cert.kind == BshmKind::Type1 ? b + 1 : b - 1);
      ck.expect(mu_num % (den * den) == 0, who + ": mu integrality");
      const i64 mu = mu_num / (den * den);
      const i64 lam_num = 2 * (l - b) - n;
      ck.expect(lam_num % den == 0, who + ": lambda integrality");
      ck.expect(cert.graph && *cert.graph == SrgParams{n, cert.k_a, mu + lam_num / den, mu}, who + ": graph formula");
      ck.expect(cert.primitive == (mu > 0 && n - 2 * cert.k_a + (mu + lam_num / den) > 0), who + ": primitivity");
    }
    if (pc && cert.graph) {
      bool listed = false;
      for (const auto& opt : pc->graph_options) listed = listed || opt == *cert.graph || opt == cert.graph->complement();
      ck.expect(listed, who + ": graph not among classified options");
    }

    // H1^T H1 = (l-b)I + (a-b)A + bJ; rows of H1 are eigenvectors for n, rows of H2 for 0.
    auto apply = [&](std::size_t row) {
      std::vector<i64> y(static_cast<std::size_t>(n));
      i64 total = 0;
      for (i64 j = 0; j < n; ++j) total += inst.h.at(row, j);
      for (i64 i = 0; i < n; ++i) {
        i64 adj = 0;
        for (i64 j = 0; j < n; ++j)
          if (g.adjacent(i, j)) adj += inst.h.at(row, j);
        y[i] = (l - b) * inst.h.at(row, i) + (a - b) * adj + b * total;
      }
      return y;
    };
    std::size_t sampled_in = 0, sampled_out = 0;
    for (std::size_t row = 0; row < inst.h.rows(); ++row) {
      const bool inside = inst.rows.contains(row);
      if ((inside ? sampled_in : sampled_out) >= 6) continue;
      ++(inside ? sampled_in : sampled_out);
      const auto y = apply(row);
      bool ok = true;
      for (i64 i = 0; i < n; ++i) ok = ok && y[i] == (inside ? n * inst.h.at(row, i) : 0);
      ck.expect(ok, who + ": row " + std::to_string(row) + " is not an eigenvector");
    }
    if (cert.graph) {
      ck.expect(is_root(n - l + b, a - b, *cert.graph), who + ": eigenvalue for Row(H1)");
      ck.expect(is_root(b - l, a - b, *cert.graph), who + ": eigenvalue for Row(H2)");
    }

    const auto sw = switch_certificate(cert);
    const auto direct = verify_bshm(inst.h, inst.rows.complement());
    ck.expect(sw.ell == direct.ell && sw.a == direct.a && sw.b == direct.b && sw.kind == direct.kind &&
                  sw.graph == direct.graph,
              who + ": switching certificate");
    ck.expect(associated_graph(inst.h, inst.rows.complement(), -a) == g, who + ": switching changed the graph");
    if (cert.kind == BshmKind::Type1) ck.expect(direct.kind == BshmKind::Type2, who + ": switch keeps type1");
    if (cert.kind == BshmKind::Type2) ck.expect(direct.kind == BshmKind::Type1, who + ": switch keeps type2");
  }
  return ck.outcome(std::to_string(checked) + " certificates, zero violations");
}

Outcome criterion10() {
  Checker ck;
  for (auto [n, l, a, b] : std::vector<std::array<i64, 4>>{{36, 10, 4, -2}, {36, 25, 1, -5}, {36, 14, 2, -4}, {36, 20, 2, -4}}) {
    const auto cls = classify_params(n, l, a, b);
    const auto* inf = std::get_if<Infeasible>(&cls);
    ck.expect(inf && inf->rule == "mod4", key_of(n, l, a, b) + "not rejected by mod4");
  }
  return ck.outcome("all four order-36 sets rejected by the mod 4 rule");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BSHM acceptance criteria"};
  golden_dir = BSHM_GOLDEN_DIR;
  int only = 0;
  app.add_option("--golden", golden_dir, "Directory with tableN.tsv files");
  app.add_option("--only", only, "Run a single criterion");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "table2-equiangular", 5, criterion1},
      {2, "tables3-4-typed", 10, criterion2},
      {3, "tables5-6-imprimitive", 1, criterion3},
      {4, "constructive-hits", 60, criterion4},
      {5, "twin-packing", 1, criterion5},
      {6, "imprimitive-pipeline", 1, criterion6},
      {7, "unbiased-mate", 1, criterion7},
      {8, "oracle-equivalence", 0, criterion8},
      {9, "certificate-invariants", 0, criterion9},
      {10, "order36-mod4", 0, criterion10},
  };
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && c.limit_s > 0 && secs >= c.limit_s) {
      out.ok = false;
      out.detail += " but exceeded the time limit";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " [" << timing
              << (c.limit_s > 0 ? " < " + std::to_string(static_cast<int>(c.limit_s)) + "s" : std::string()) << "] "
              << out.detail << std::endl;
    failures += !out.ok;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
