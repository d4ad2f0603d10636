#include "bshm/pds.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "bshm/error.hpp"

namespace bshm {

namespace {

void check_proper(const Z2Subset& d) {
  if (d.size() == 0) fail(ErrorCode::InvalidArgument, "empty subset");
  if (d.size() == d.group_order()) fail(ErrorCode::InvalidArgument, "subset is the whole group");
}

std::int64_t exact_sqrt(std::int64_t x) {
  if (x < 0) return -1;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

std::int64_t gamma_of(const PdsParams& p) {
  return p.contains_identity ? p.ell - p.alpha : p.ell - p.beta;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> pds_alpha_beta(std::int64_t ell, std::int64_t a, std::int64_t b,
                                                     bool contains_identity) {
  if (contains_identity) return {ell + a * b, ell + a * b - a - b};
  return {ell + a * b + a + b, ell + a * b};
}

PdsParams verify_pds_definition(const Z2Subset& d) {
  check_proper(d);
  const std::uint32_t v = d.group_order();
  std::vector<std::int64_t> count(v, 0);
  const auto& el = d.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j) count[el[i] ^ el[j]] += 2;

  bool have_alpha = false, have_beta = false;
  std::int64_t alpha = 0, beta = 0;
  for (std::uint32_t g = 1; g < v; ++g) {
    const bool inside = d.contains(g);
    bool& have = inside ? have_alpha : have_beta;
    std::int64_t& value = inside ? alpha : beta;
    if (!have) {
      have = true;
      value = count[g];
    } else if (count[g] != value) {
      fail(ErrorCode::NotAPds, "element " + format_element(g, d.rank()) + " occurs " + std::to_string(count[g]) +
                                   " times, expected " + std::to_string(value));
    }
  }
  // An unconstrained count is fixed so that the character values come out
  // as a repeated root.
  if (!have_alpha) alpha = beta + 2;
  if (!have_beta) beta = alpha + 2;

  PdsParams p;
  p.v = v;
  p.ell = static_cast<std::int64_t>(d.size());
  p.alpha = alpha;
  p.beta = beta;
  p.contains_identity = d.contains(0);
  p.gamma = gamma_of(p);
  if (p.ell * p.ell != p.gamma + (p.alpha - p.beta) * p.ell + p.beta * p.v)
    fail(ErrorCode::Internal, "difference counts violate the counting identity");
  const std::int64_t disc = (alpha - beta) * (alpha - beta) + 4 * p.gamma;
  const std::int64_t root = exact_sqrt(disc);
  if (root < 0 || (alpha - beta + root) % 2 != 0)
    fail(ErrorCode::NotAPds, "character values are not integral (discriminant " + std::to_string(disc) + ")");
  p.a = (alpha - beta + root) / 2;
  p.b = (alpha - beta - root) / 2;
  return p;
}

PdsParams verify_pds_char(const Z2Subset& d) {
  check_proper(d);
  const auto& spec = d.spectrum();
  std::set<std::int64_t> values;
  for (std::size_t g = 1; g < spec.size(); ++g) {
    values.insert(spec[g]);
    if (values.size() > 2) {
      std::string list;
      for (auto x : values) list += (list.empty() ? "" : ",") + std::to_string(x);
      fail(ErrorCode::NotAPds, "nonprincipal character sums take values {" + list + "}");
    }
  }
  PdsParams p;
  p.v = d.group_order();
  p.ell = static_cast<std::int64_t>(d.size());
  p.a = *values.rbegin();
  p.b = *values.begin();
  p.contains_identity = d.contains(0);
  std::tie(p.alpha, p.beta) = pds_alpha_beta(p.ell, p.a, p.b, p.contains_identity);
  p.gamma = gamma_of(p);
  return p;
}

PackingWitness verify_packing(const std::vector<Z2Subset>& parts, std::int64_t delta,
                              const std::vector<std::int64_t>& base_sums) {
  if (parts.empty()) fail(ErrorCode::InvalidArgument, "no parts");
  if (base_sums.size() != parts.size()) fail(ErrorCode::InvalidArgument, "one base sum per part required");
  const unsigned r = parts.front().rank();
  const std::uint32_t v = std::uint32_t{1} << r;
  std::vector<int> owner(v, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].rank() != r) fail(ErrorCode::RankMismatch, "parts of different rank");
    for (auto x : parts[i].elements()) {
      if (x == 0) fail(ErrorCode::NotAPacking, "part " + std::to_string(i) + " contains the identity");
      if (owner[x] >= 0)
        fail(ErrorCode::NotAPacking, "element " + format_element(x, r) + " lies in parts " +
                                         std::to_string(owner[x]) + " and " + std::to_string(i));
      owner[x] = static_cast<int>(i);
    }
  }
  for (std::uint32_t x = 1; x < v; ++x)
    if (owner[x] < 0) fail(ErrorCode::NotAPacking, "element " + format_element(x, r) + " is not covered");

  PackingWitness w;
  w.delta = delta;
  w.t = parts.size();
  w.base_sums = base_sums;
  w.parts = parts;
  w.elevation.assign(v, -1);
  std::size_t elevated_chars = 0;
  for (std::uint32_t g = 1; g < v; ++g) {
    std::vector<std::size_t> raised;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::int64_t s = parts[i].spectrum()[g];
      if (s == base_sums[i]) continue;
      if (s == base_sums[i] + delta) {
        raised.push_back(i);
        continue;
      }
      fail(ErrorCode::NotAPacking, "character " + format_element(g, r) + ": part " + std::to_string(i) + " sums to " +
                                       std::to_string(s) + ", outside {" + std::to_string(base_sums[i]) + "," +
                                       std::to_string(base_sums[i] + delta) + "}");
    }
    if (raised.size() > 1) {
      std::string list;
      for (auto i : raised) list += (list.empty() ? "" : ",") + std::to_string(i);
      fail(ErrorCode::NotAPacking, "character " + format_element(g, r) + " raises parts {" + list + "}");
    }
    if (!raised.empty()) {
      w.elevation[g] = static_cast<int>(raised.front());
      ++elevated_chars;
    }
  }
  if (elevated_chars != 0 && elevated_chars != v - 1)
    fail(ErrorCode::Internal, "elevation count varies across characters");
  if (elevated_chars == 0) {
    // Sum of base values must then be -1 by itself.
    std::int64_t total = 0;
    for (auto a : base_sums) total += a;
    if (total != -1)
      fail(ErrorCode::NotAPacking, "no character is raised and the base sums add to " + std::to_string(total) +
                                       " instead of -1");
    w.degenerate = true;
  }
  return w;
}

std::vector<std::int64_t> infer_base_sums(const std::vector<Z2Subset>& parts, std::int64_t delta) {
  std::vector<std::int64_t> out;
  for (const auto& p : parts) {
    const auto& s = p.spectrum();
    if (s.size() < 2) fail(ErrorCode::InvalidArgument, "group too small");
    std::int64_t lo = s[1], hi = s[1];
    for (std::size_t g = 2; g < s.size(); ++g) {
      lo = std::min(lo, s[g]);
      hi = std::max(hi, s[g]);
    }
    out.push_back(delta < 0 ? hi : lo);
  }
  return out;
}

PackingFile parse_packing(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "missing PACK header");
  std::istringstream head(line);
  std::string tag, extra;
  long long r = -1, t = -1, delta = 0;
  if (!(head >> tag >> r >> t >> delta) || tag != "PACK" || (head >> extra))
    fail(ErrorCode::ParseError, "bad header '" + line + "'");
  if (r < 1 || r > static_cast<long long>(kMaxSubsetRank) || t < 1) fail(ErrorCode::ParseError, "bad PACK dimensions");
  std::vector<std::string> blocks;
  while (std::getline(in, line)) {
    if (line.rfind("Z2", 0) == 0) blocks.emplace_back();
    else if (blocks.empty()) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      fail(ErrorCode::ParseError, "content before first Z2 block");
    }
    blocks.back() += line + "\n";
  }
  if (blocks.size() != static_cast<std::size_t>(t))
    fail(ErrorCode::ParseError, "expected " + std::to_string(t) + " blocks, found " + std::to_string(blocks.size()));
  PackingFile p;
  p.rank = static_cast<unsigned>(r);
  p.delta = delta;
  for (const auto& b : blocks) {
    p.parts.push_back(parse_subset(b));
    if (p.parts.back().rank() != p.rank) fail(ErrorCode::ParseError, "block rank differs from header");
  }
  return p;
}

void write_packing(std::ostream& out, const PackingFile& p) {
  out << "PACK " << p.rank << ' ' << p.parts.size() << ' ' << p.delta << '\n';
  for (const auto& part : p.parts) write_subset(out, part);
}

}  // namespace bshm
