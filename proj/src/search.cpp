#include "bshm/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "bshm/error.hpp"

namespace bshm {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSat) return kSat;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> colex_unrank(std::uint64_t rank, std::size_t ell) {
  std::vector<std::size_t> out(ell);
  for (std::size_t i = ell; i >= 1; --i) {
    std::uint64_t c = i - 1;
    while (binomial(c + 1, i) <= rank) ++c;
    out[i - 1] = c;
    rank -= binomial(c, i);
  }
  return out;
}

std::uint64_t colex_rank(const std::vector<std::size_t>& subset) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) r += binomial(subset[i], i + 1);
  return r;
}

std::vector<Z2Subset> search_difference_set(unsigned r, unsigned k, unsigned lambda, std::uint64_t budget) {
  if (r < 1 || r > kMaxSubsetRank) fail(ErrorCode::OutOfRange, "rank out of range");
  const std::uint32_t v = std::uint32_t{1} << r;
  if (k < 1 || k >= v) fail(ErrorCode::InvalidArgument, "k must lie in 1..2^r-1");
  if (binomial(v, k) > budget)
    fail(ErrorCode::BudgetExceeded, "C(" + std::to_string(v) + "," + std::to_string(k) + ") exceeds the search budget");
  std::vector<Z2Subset> out;
  std::vector<std::uint32_t> chosen;
  std::vector<unsigned> count(v, 0);

  auto dfs = [&](auto&& self, std::uint32_t next) -> void {
    if (chosen.size() == k) {
      for (std::uint32_t g = 1; g < v; ++g)
        if (count[g] != lambda) return;
      out.emplace_back(r, chosen);
      return;
    }
    for (std::uint32_t x = next; x < v; ++x) {
      if (v - x < k - chosen.size()) break;
      bool ok = true;
      for (auto y : chosen)
        if ((count[x ^ y] += 2) > lambda) ok = false;
      chosen.push_back(x);
      if (ok) self(self, x + 1);
      chosen.pop_back();
      for (auto y : chosen) count[x ^ y] -= 2;
    }
  };
  dfs(dfs, 1);
  return out;
}

namespace {

struct Scanner {
  const PmMatrix& h;
  std::size_t ell;
  std::optional<std::pair<std::int64_t, std::int64_t>> targets;

  // Returns true when the column dots over the subset take at most two values
  // (inside the targets when given).
  bool accepts(const std::vector<std::uint64_t>& mask) const {
    const std::size_t n = h.cols();
    const int l = static_cast<int>(ell);
    int first = std::numeric_limits<int>::min(), second = std::numeric_limits<int>::min();
    for (std::size_t i = 0; i < n; ++i) {
      auto ci = h.col(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        auto cj = h.col(j);
        int diff = 0;
        for (std::size_t w = 0; w < ci.size(); ++w) diff += __builtin_popcountll((ci[w] ^ cj[w]) & mask[w]);
        const int dot = l - 2 * diff;
        if (dot == first || dot == second) continue;
        if (targets && dot != targets->first && dot != targets->second) return false;
        if (first == std::numeric_limits<int>::min()) first = dot;
        else if (second == std::numeric_limits<int>::min()) second = dot;
        else return false;
      }
    }
    return true;
  }
};

struct BlockResult {
  std::vector<std::vector<std::size_t>> subsets;
  std::uint64_t scanned = 0;
};

BlockResult scan_block(const Scanner& sc, std::uint64_t begin, std::uint64_t end) {
  BlockResult res;
  if (begin >= end) return res;
  auto sub = colex_unrank(begin, sc.ell);
  const std::size_t words = words_for_bits(sc.h.rows());
  std::vector<std::uint64_t> mask(words);
  for (std::uint64_t rank = begin; rank < end; ++rank) {
    std::fill(mask.begin(), mask.end(), 0);
    for (auto x : sub) mask[x / 64] |= std::uint64_t{1} << (x % 64);
    ++res.scanned;
    if (sc.accepts(mask)) res.subsets.push_back(sub);
    // next colex subset
    std::size_t i = 0;
    while (i + 1 < sub.size() && sub[i] + 1 == sub[i + 1]) ++i;
    ++sub[i];
    for (std::size_t t = 0; t < i; ++t) sub[t] = t;
  }
  return res;
}

struct Checkpoint {
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> done;
};

std::string header_line(const std::string& hash, std::size_t ell, std::size_t blocks,
                        const std::optional<std::pair<std::int64_t, std::int64_t>>& targets) {
  std::string s = "# " + hash + " " + std::to_string(ell) + " blocks " + std::to_string(blocks) + " targets ";
  s += targets ? std::to_string(targets->first) + "," + std::to_string(targets->second) : "any";
  return s;
}

Checkpoint load_checkpoint(const std::string& path, const std::string& hash, std::size_t ell, const std::string& header) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  std::string line;
  bool header_seen = false;
  std::vector<std::vector<std::size_t>> pending;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# " + hash + " " + std::to_string(ell) + " ", 0) == 0) {
        if (line != header) fail(ErrorCode::InvalidArgument, "checkpoint was written with different settings");
        header_seen = true;
      }
      pending.clear();
      continue;
    }
    if (line.rfind("SHARD ", 0) == 0) {
      std::istringstream ss(line);
      std::string tag, h, status;
      std::size_t l = 0, block = 0;
      if (!(ss >> tag >> h >> l >> block >> status)) fail(ErrorCode::ParseError, "bad checkpoint line '" + line + "'");
      if (h == hash && l == ell && status == "done") cp.done[block] = pending;
      pending.clear();
      continue;
    }
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("rows")) fail(ErrorCode::ParseError, "bad checkpoint line '" + line + "'");
    pending.push_back(j["rows"].get<std::vector<std::size_t>>());
  }
  if (!cp.done.empty() && !header_seen) fail(ErrorCode::ParseError, "checkpoint lacks a settings line");
  return cp;
}

void search_one(const PmMatrix& h, std::size_t ell, bool normalized, const SearchOptions& opt, std::size_t blocks,
                std::uint64_t total, SearchReport& report) {
  const std::string hash = hex64(h.fingerprint());
  const std::string header = header_line(hash, ell, blocks, opt.targets);
  Checkpoint cp;
  if (!opt.checkpoint.empty() && opt.resume) cp = load_checkpoint(opt.checkpoint, hash, ell, header);

  std::ofstream out;
  std::mutex out_mutex;
  if (!opt.checkpoint.empty()) {
    out.open(opt.checkpoint, std::ios::app);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot open checkpoint " + opt.checkpoint);
    out << header << '\n';
    out.flush();
  }

  const Scanner sc{h, ell, opt.targets};
  std::vector<BlockResult> results(blocks);
  std::vector<char> resumed(blocks, 0);
  for (auto& [b, subs] : cp.done)
    if (b < blocks) {
      results[b].subsets = subs;
      resumed[b] = 1;
    }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= blocks) return;
      if (resumed[b]) continue;
      const std::uint64_t begin = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * b) / blocks);
      const std::uint64_t end = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (b + 1)) / blocks);
      results[b] = scan_block(sc, begin, end);
      if (out.is_open()) {
        std::lock_guard<std::mutex> lock(out_mutex);
        for (const auto& s : results[b].subsets) {
          RowSubset rs(s, h.rows());
          out << certificate_json(verify_bshm(h, rs, {.check_hadamard = false})) << '\n';
        }
        out << "SHARD " << hash << ' ' << ell << ' ' << b << " done\n";
        out.flush();
      }
    }
  };
  const std::size_t nthreads = std::max<std::size_t>(1, std::min(opt.threads, blocks));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t b = 0; b < blocks; ++b) {
    report.subsets_scanned += results[b].scanned;
    report.blocks_resumed += resumed[b];
    for (const auto& s : results[b].subsets) {
      RowSubset rs(s, h.rows());
      auto cert = verify_bshm(h, rs, {.check_hadamard = false});
      report.hits.push_back({normalized, std::move(rs), std::move(cert)});
    }
  }
}

}  // namespace

SearchReport search_bshm_rows(const PmMatrix& h, std::size_t ell, const SearchOptions& options) {
  if (ell < 1 || ell >= h.rows()) fail(ErrorCode::InvalidArgument, "ell must lie in 1..n-1");
  if (!is_hadamard(h)) fail(ErrorCode::NotHadamard, "search input is not a Hadamard matrix");
  auto opt = options;
  if (opt.targets && opt.targets->first < opt.targets->second) std::swap(opt.targets->first, opt.targets->second);
  const std::uint64_t total = binomial(h.rows(), ell);
  const std::uint64_t passes = opt.include_normalized ? 2 : 1;
  if (total == kSat || total > opt.budget / passes)
    fail(ErrorCode::BudgetExceeded, "C(" + std::to_string(h.rows()) + "," + std::to_string(ell) +
                                        ") subsets exceed the search budget");
  std::size_t blocks = opt.shards ? opt.shards : 64;
  blocks = static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(blocks, total)));
  SearchReport report;
  report.blocks = blocks;
  search_one(h, ell, false, opt, blocks, total, report);
  if (opt.include_normalized) search_one(normalize_first_row(h), ell, true, opt, blocks, total, report);
  return report;
}

}  // namespace bshm
