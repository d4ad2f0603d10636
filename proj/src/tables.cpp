#include "bshm/tables.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bshm/error.hpp"

namespace bshm {

namespace {

std::string join(std::initializer_list<std::string> cells) {
  std::string s;
  for (const auto& c : cells) s += (s.empty() ? "" : "\t") + c;
  return s + "\n";
}

std::string str(std::int64_t x) { return std::to_string(x); }

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

std::string equiangular_tsv(const std::vector<EnumRow>& rows) {
  std::string out = join({"n", "ell", "a", "b", "v", "k", "lambda", "mu", "v2", "k2", "lambda2", "mu2", "exists", "reason"});
  for (const auto& r : rows) {
    const auto& c = r.cls;
    const auto& g = c.graph_options.at(0);
    const auto& h = c.graph_options.at(1);
    out += join({str(c.n), str(c.ell), str(c.a), str(c.b), str(g.v), str(g.k), str(g.lambda), str(g.mu), str(h.v),
                 str(h.k), str(h.lambda), str(h.mu), existence_name(r.exists), r.reason});
  }
  return out;
}

std::string typed_tsv(const std::vector<EnumRow>& rows) {
  std::string out = join({"n", "ell", "a", "b", "v", "k", "lambda", "mu", "exists", "reason"});
  for (const auto& r : rows) {
    const auto& c = r.cls;
    const auto& g = c.graph_options.at(0);
    out += join({str(c.n), str(c.ell), str(c.a), str(c.b), str(g.v), str(g.k), str(g.lambda), str(g.mu),
                 existence_name(r.exists), r.reason});
  }
  return out;
}

std::string imprimitive_tsv(const std::vector<ImprimitiveRow>& rows, bool open_only) {
  std::string out = join({"r", "s", "n", "ell", "a", "b", "v", "k", "lambda", "mu", "exists", "reason"});
  for (const auto& r : rows) {
    if (open_only && r.verdict.status != Existence::Open) continue;
    out += join({str(r.r), str(r.s), str(r.n), str(r.ell), str(r.a), str(r.b), str(r.graph.v), str(r.graph.k),
                 str(r.graph.lambda), str(r.graph.mu), existence_name(r.verdict.status), r.verdict.reason});
  }
  return out;
}

std::string table_tsv(int table, const HadamardOraclePolicy& policy) {
  switch (table) {
    case 2: return equiangular_tsv(enumerate_equiangular({700, kEquiangularTableOrder}, policy));
    case 3: return typed_tsv(enumerate_type1({0, 256}, policy));
    case 4: return typed_tsv(enumerate_type2({0, 256}, policy));
    case 5: return imprimitive_tsv(enumerate_imprimitive(ImprimitiveFamily::B0, 1, 8, 8, policy), true);
    case 6: return imprimitive_tsv(enumerate_imprimitive(ImprimitiveFamily::Bm1, 2, 12, 8, policy), true);
  }
  fail(ErrorCode::InvalidArgument, "no table " + std::to_string(table));
}

TableDiff diff_tsv(int table, const std::string& produced, const std::string& golden) {
  TableDiff d;
  d.table = table;
  const auto p = lines_of(produced), g = lines_of(golden);
  d.equal = p == g;
  const std::multiset<std::string> ps(p.begin(), p.end()), gs(g.begin(), g.end());
  std::set_difference(gs.begin(), gs.end(), ps.begin(), ps.end(), std::back_inserter(d.missing));
  std::set_difference(ps.begin(), ps.end(), gs.begin(), gs.end(), std::back_inserter(d.surplus));
  return d;
}

TableDiff diff_table(int table, const std::string& golden_dir, const HadamardOraclePolicy& policy) {
  const std::string path = golden_dir + "/table" + std::to_string(table) + ".tsv";
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return diff_tsv(table, table_tsv(table, policy), buf.str());
}

}  // namespace bshm
