#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "bshm/bshm_core.hpp"
#include "bshm/constructions.hpp"
#include "bshm/error.hpp"
#include "bshm/param_rules.hpp"
#include "bshm/pds.hpp"
#include "bshm/search.hpp"
#include "bshm/tables.hpp"

using namespace bshm;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::OutOfRange:
    case ErrorCode::ParseError:
    case ErrorCode::RankMismatch:
      return 2;
    case ErrorCode::LimitExceeded:
    case ErrorCode::BudgetExceeded:
      return 3;
    default:
      return 1;
  }
}

PmMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  return parse_matrix(in);
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad index '" + tok + "'");
    }
  }
  return out;
}

ojson cert_object(const BshmCertificate& c) { return ojson::parse(certificate_json(c)); }

ojson range_object(const RowSubset& rows) {
  const auto& idx = rows.indices();
  ojson r;
  r["first"] = idx.empty() ? 0 : idx.front();
  r["last"] = idx.empty() ? 0 : idx.back();
  r["count"] = idx.size();
  return r;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << text;
}

struct ConstructArgs {
  std::string family;
  std::string out_dir;
  unsigned r = 4, m = 2, s = 1;
  std::int64_t q = 3, order = 4, rr = 0, ss = 0, n = 0, so = 0;
  std::string kind = "I";
  std::string which;
  std::string partition;
  std::size_t j = 0;
  std::string matrix, rows, kfile;
  std::int64_t korder = 0;
};

int emit_single(const ConstructArgs& a, const Construction& c, ojson extra = {}) {
  if (a.out_dir.empty()) {
    std::cout << certificate_json(c.cert) << '\n';
    return 0;
  }
  fs::create_directories(a.out_dir);
  write_text(fs::path(a.out_dir) / "matrix.had", format_matrix(c.h));
  write_text(fs::path(a.out_dir) / "certificate.json", certificate_json(c.cert) + "\n");
  ojson man;
  man["family"] = a.family;
  man["matrix"] = "matrix.had";
  man["order"] = c.h.rows();
  for (auto& [k, v] : extra.items()) man[k] = v;
  ojson blk;
  blk["rows"] = c.rows.indices();
  blk["certificate"] = "certificate.json";
  man["blocks"] = ojson::array({blk});
  write_text(fs::path(a.out_dir) / "manifest.json", man.dump(2) + "\n");
  std::cout << certificate_json(c.cert) << '\n';
  return 0;
}

int emit_matrix(const ConstructArgs& a, const PmMatrix& h) {
  if (a.out_dir.empty()) {
    std::cout << format_matrix(h);
    return 0;
  }
  fs::create_directories(a.out_dir);
  write_text(fs::path(a.out_dir) / "matrix.had", format_matrix(h));
  ojson man;
  man["family"] = a.family;
  man["matrix"] = "matrix.had";
  man["order"] = h.rows();
  man["hadamard"] = is_hadamard(h);
  write_text(fs::path(a.out_dir) / "manifest.json", man.dump(2) + "\n");
  return 0;
}

int run_construct(const ConstructArgs& a) {
  const auto& f = a.family;
  if (f == "sylvester") return emit_matrix(a, sylvester(a.r));
  if (f == "paley") {
    if (a.kind != "I" && a.kind != "II") fail(ErrorCode::InvalidArgument, "kind must be I or II");
    return emit_matrix(a, paley_hadamard(a.q, a.kind == "I" ? PaleyKind::I : PaleyKind::II));
  }
  if (f == "hadamard") return emit_matrix(a, hadamard_matrix(a.order));
  if (f == "bent") return emit_single(a, pds_to_bshm(bent_difference_set(a.m)));
  if (f == "spread-union") return emit_single(a, pds_to_bshm(spread_union_pds(a.m, a.s, parse_index_list(a.which))));
  if (f == "packing") {
    std::vector<std::vector<std::size_t>> parts;
    std::stringstream ss(a.partition);
    std::string tok;
    while (std::getline(ss, tok, '|')) parts.push_back(parse_index_list(tok));
    const auto mc = packing_to_multibshm(a.m, parts, a.j);
    ojson man;
    man["family"] = f;
    man["matrix"] = "matrix.had";
    man["order"] = mc.h.rows();
    man["allones_row"] = 0;
    man["unions_verified"] = mc.unions_verified;
    man["blocks"] = ojson::array();
    for (std::size_t u = 0; u < mc.blocks.size(); ++u) {
      ojson b;
      b["block"] = u;
      b["rows"] = range_object(mc.blocks[u]);
      b["with_allones_row"] = u == a.j;
      b["certificate"] = "certificate_" + std::to_string(u) + ".json";
      man["blocks"].push_back(b);
    }
    if (!a.out_dir.empty()) {
      fs::create_directories(a.out_dir);
      write_text(fs::path(a.out_dir) / "matrix.had", format_matrix(mc.h));
      for (std::size_t u = 0; u < mc.certs.size(); ++u)
        write_text(fs::path(a.out_dir) / ("certificate_" + std::to_string(u) + ".json"),
                   certificate_json(mc.certs[u]) + "\n");
      write_text(fs::path(a.out_dir) / "manifest.json", man.dump(2) + "\n");
    }
    for (const auto& c : mc.certs) std::cout << certificate_json(c) << '\n';
    return 0;
  }
  if (f == "kron") {
    if (a.matrix.empty()) fail(ErrorCode::InvalidArgument, "kron needs --matrix and --rows");
    const PmMatrix h = read_matrix(a.matrix);
    const PmMatrix k = !a.kfile.empty() ? read_matrix(a.kfile) : hadamard_matrix(a.korder);
    return emit_single(a, kronecker_bshm(h, parse_rows(a.rows, h.rows()), k));
  }
  if (f == "ns-n-n-0") return emit_single(a, construct_ns_n_n_0(hadamard_matrix(a.n), hadamard_matrix(a.so)));
  if (f == "n-2-2-0") return emit_single(a, construct_n_2_2_0(hadamard_matrix(a.order)));
  if (f == "b0") return emit_single(a, construct_b0(a.rr, a.ss));
  if (f == "bm1") return emit_single(a, construct_bm1(a.rr, a.ss));
  if (f == "b0-to-bm1") {
    if (!a.matrix.empty()) {
      const PmMatrix h = read_matrix(a.matrix);
      return emit_single(a, b0_to_bm1(h, parse_rows(a.rows, h.rows())));
    }
    const auto b0 = construct_b0(a.rr, a.ss);
    return emit_single(a, b0_to_bm1(b0.h, b0.rows));
  }
  fail(ErrorCode::InvalidArgument, "unknown family '" + f + "'");
}

int run_classify(std::int64_t n, std::int64_t ell, std::int64_t a, std::int64_t b, bool json) {
  const auto res = classify_params(n, ell, a, b);
  if (const auto* inf = std::get_if<Infeasible>(&res)) {
    if (json) {
      ojson j;
      j["feasible"] = false;
      j["rule"] = inf->rule;
      j["detail"] = inf->detail;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "infeasible " << inf->rule << ": " << inf->detail << '\n';
    }
    return 1;
  }
  const auto& pc = std::get<ParamClass>(res);
  if (json) {
    ojson j;
    j["feasible"] = true;
    j["class"] = class_name(pc.id);
    j["n"] = pc.n;
    j["ell"] = pc.ell;
    j["a"] = pc.a;
    j["b"] = pc.b;
    j["switched"] = pc.switched;
    if (pc.r) {
      j["r"] = pc.r;
      j["s"] = pc.s;
    }
    j["graphs"] = ojson::array();
    for (const auto& g : pc.graph_options) j["graphs"].push_back({g.v, g.k, g.lambda, g.mu});
    j["integrality"] = ojson::array();
    for (const auto& c : pc.integrality) {
      ojson x;
      x["name"] = c.name;
      x["value"] = std::to_string(c.numerator) + "/" + std::to_string(c.denominator);
      x["integral"] = c.integral;
      j["integrality"].push_back(x);
    }
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << class_name(pc.id) << " (" << pc.n << "," << pc.ell << "," << pc.a << "," << pc.b << ")";
  if (pc.switched) std::cout << " switched";
  std::cout << " graphs";
  for (const auto& g : pc.graph_options) std::cout << ' ' << format_srg(g);
  std::cout << '\n';
  return 0;
}

Z2Subset read_subset(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  return parse_subset(in);
}

ojson pds_object(const PdsParams& p) {
  ojson j;
  j["v"] = p.v;
  j["ell"] = p.ell;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["a"] = p.a;
  j["b"] = p.b;
  j["contains_identity"] = p.contains_identity;
  j["degenerate"] = p.degenerate();
  return j;
}

int run_pds(const std::string& action, const std::string& file, std::optional<std::int64_t> delta) {
  if (action == "verify") {
    const auto d = read_subset(file);
    const auto by_char = verify_pds_char(d);
    const auto by_def = verify_pds_definition(d);
    if (by_char.a != by_def.a || by_char.b != by_def.b || by_char.alpha != by_def.alpha || by_char.beta != by_def.beta)
      fail(ErrorCode::Internal, "definition and character checks disagree");
    std::cout << pds_object(by_char).dump() << '\n';
    return 0;
  }
  if (action == "spectrum") {
    const auto d = read_subset(file);
    const auto& s = d.spectrum();
    for (std::uint32_t g = 0; g < s.size(); ++g) std::cout << format_element(g, d.rank()) << '\t' << s[g] << '\n';
    return 0;
  }
  if (action == "pack-verify") {
    std::ifstream in(file);
    if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + file);
    const auto pf = parse_packing(in);
    const std::int64_t dl = delta.value_or(pf.delta);
    const auto w = verify_packing(pf.parts, dl, infer_base_sums(pf.parts, dl));
    ojson j;
    j["rank"] = pf.rank;
    j["t"] = w.t;
    j["delta"] = w.delta;
    j["base_sums"] = w.base_sums;
    j["degenerate"] = w.degenerate;
    std::vector<std::size_t> raised(w.t, 0);
    for (auto e : w.elevation)
      if (e >= 0) ++raised[static_cast<std::size_t>(e)];
    j["elevations_per_part"] = raised;
    std::cout << j.dump() << '\n';
    return 0;
  }
  fail(ErrorCode::InvalidArgument, "unknown pds action '" + action + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced splittable Hadamard matrix toolkit"};
  app.require_subcommand(1);
  bool assume = true;
  std::int64_t range_limit = 668;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_flag("--assume-conjecture,!--no-assume-conjecture", assume, "Assume Hadamard matrices of all orders 4k");
  app.add_option("--range-limit", range_limit, "Orders below this are known Hadamard orders");
  app.add_option("--threads", threads, "Worker threads");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a matrix and its certificate");
  construct->add_option("family", ca.family, "sylvester|paley|hadamard|bent|spread-union|packing|kron|ns-n-n-0|n-2-2-0|b0|bm1|b0-to-bm1")
      ->required();
  construct->add_option("-o,--out", ca.out_dir, "Output directory");
  construct->add_option("--r", ca.r, "Sylvester rank");
  construct->add_option("--m", ca.m, "Field degree for bent, spread-union and packing");
  construct->add_option("--s", ca.s, "Number of spread lines");
  construct->add_option("--which", ca.which, "Spread line indices");
  construct->add_option("--q", ca.q, "Paley field order");
  construct->add_option("--kind", ca.kind, "Paley kind I or II");
  construct->add_option("--order", ca.order, "Hadamard order");
  construct->add_option("--partition", ca.partition, "Packing blocks of line indices, e.g. 0|1,2|3,4");
  construct->add_option("--j", ca.j, "Packing block joined with the all-ones row");
  construct->add_option("--n", ca.n, "Order of the repeated factor (ns-n-n-0)");
  construct->add_option("--so", ca.so, "Order of the outer factor (ns-n-n-0)");
  construct->add_option("--rr", ca.rr, "Imprimitive parameter r");
  construct->add_option("--ss", ca.ss, "Imprimitive parameter s");
  construct->add_option("--matrix", ca.matrix, "Input matrix file");
  construct->add_option("--rows", ca.rows, "Input row subset");
  construct->add_option("--k-matrix", ca.kfile, "Kronecker factor file");
  construct->add_option("--k-order", ca.korder, "Kronecker factor order");

  std::string vmatrix, vrows;
  bool vnormalize = false;
  auto* verify = app.add_subcommand("verify", "Certify a row subset");
  verify->add_option("-m,--matrix", vmatrix, "Matrix file")->required();
  verify->add_option("-r,--rows", vrows, "0-based rows, e.g. 0,1,4-7")->required();
  verify->add_flag("--normalize", vnormalize, "Negate columns so row 0 is all-ones first");

  std::int64_t cn = 0, cl = 0, cav = 0, cbv = 0;
  bool cjson = false;
  auto* classify = app.add_subcommand("classify", "Classify parameters (n, ell, a, b)");
  classify->add_option("n", cn)->required();
  classify->add_option("ell", cl)->required();
  classify->add_option("a", cav)->required();
  classify->add_option("b", cbv)->required();
  classify->add_flag("--json", cjson, "JSON output");

  std::string efamily;
  std::int64_t emax = 0, emax_ell = 0, emin_r = 0, emax_s = 0;
  bool eopen = false;
  auto* enumerate = app.add_subcommand("enumerate", "Parameter sweeps as TSV");
  enumerate->add_option("family", efamily, "equiangular|type1|type2|imprimitive-b0|imprimitive-bm1")->required();
  enumerate->add_option("--max", emax, "Bound on n (r for imprimitive families); equiangular defaults to 1296");
  enumerate->add_option("--max-ell", emax_ell, "Bound on ell");
  enumerate->add_option("--min-r", emin_r, "Smallest r for imprimitive families");
  enumerate->add_option("--max-s", emax_s, "Bound on s for imprimitive families");
  enumerate->add_flag("--open-only", eopen, "Only rows whose existence is open");

  std::string paction, pfile;
  std::optional<std::int64_t> pdelta;
  auto* pds = app.add_subcommand("pds", "Partial difference sets");
  pds->add_option("action", paction, "verify|spectrum|pack-verify")->required();
  pds->add_option("file", pfile)->required();
  pds->add_option("--delta", pdelta, "Override the packing offset");

  std::string smode, smatrix, stargets, scheckpoint;
  unsigned sr = 4, sk = 6, slambda = 2;
  std::size_t sell = 0, sshards = 0;
  bool sresume = false, snormalized = false;
  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->add_option("mode", smode, "ds|bshm")->required();
  search->add_option("--r", sr, "Group rank (ds)");
  search->add_option("--k", sk, "Set size (ds)");
  search->add_option("--lambda", slambda, "Difference count (ds)");
  search->add_option("-m,--matrix", smatrix, "Matrix file (bshm)");
  search->add_option("--ell", sell, "Row count (bshm)");
  search->add_option("--targets", stargets, "Value pair a,b (bshm)");
  search->add_option("--shards", sshards, "Number of colex blocks");
  search->add_option("--checkpoint", scheckpoint, "Checkpoint file");
  search->add_flag("--resume", sresume, "Skip blocks recorded in the checkpoint");
  search->add_flag("--normalized", snormalized, "Also search the row-0 normalized matrix");

  std::string gdir;
  int gtable = 0;
  auto* tables = app.add_subcommand("tables", "Regenerate the published tables and diff against goldens");
  tables->add_option("--golden", gdir, "Directory holding table2.tsv .. table6.tsv")->required();
  tables->add_option("--table", gtable, "Only this table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  HadamardOraclePolicy policy;
  policy.assume_conjecture = assume;
  policy.range_limit = range_limit;

  try {
    if (*construct) return run_construct(ca);
    if (*verify) {
      PmMatrix h = read_matrix(vmatrix);
      if (vnormalize) h = normalize_first_row(h);
      std::cout << certificate_json(verify_bshm(h, parse_rows(vrows, h.rows()))) << '\n';
      return 0;
    }
    if (*classify) return run_classify(cn, cl, cav, cbv, cjson);
    if (*enumerate) {
      if (efamily == "equiangular") {
        // Published sweep bound on n when only ell is bounded.
        const std::int64_t n_max = emax > 0 ? emax : kEquiangularTableOrder;
        auto rows = enumerate_equiangular({emax_ell, n_max}, policy);
        if (eopen) std::erase_if(rows, [](const EnumRow& r) { return r.exists != Existence::Open; });
        std::cout << equiangular_tsv(rows);
        return 0;
      }
      if (efamily == "type1" || efamily == "type2") {
        if (emax <= 0 && emax_ell <= 0) fail(ErrorCode::InvalidArgument, "give --max or --max-ell");
        auto rows = efamily == "type1" ? enumerate_type1({emax_ell, emax}, policy) : enumerate_type2({emax_ell, emax}, policy);
        if (eopen) std::erase_if(rows, [](const EnumRow& r) { return r.exists != Existence::Open; });
        std::cout << typed_tsv(rows);
        return 0;
      }
      if (efamily == "imprimitive-b0" || efamily == "imprimitive-bm1") {
        const bool b0 = efamily == "imprimitive-b0";
        const std::int64_t r_max = emax > 0 ? emax : (b0 ? 8 : 12);
        const std::int64_t s_max = emax_s > 0 ? emax_s : 8;
        const std::int64_t r_min = emin_r > 0 ? emin_r : (b0 ? 1 : 2);
        std::cout << imprimitive_tsv(
            enumerate_imprimitive(b0 ? ImprimitiveFamily::B0 : ImprimitiveFamily::Bm1, r_min, r_max, s_max, policy),
            eopen);
        return 0;
      }
      fail(ErrorCode::InvalidArgument, "unknown family '" + efamily + "'");
    }
    if (*pds) return run_pds(paction, pfile, pdelta);
    if (*search) {
      if (smode == "ds") {
        for (const auto& d : search_difference_set(sr, sk, slambda)) {
          std::string line;
          for (auto x : d.elements()) line += (line.empty() ? "" : " ") + format_element(x, d.rank());
          std::cout << line << '\n';
        }
        return 0;
      }
      if (smode == "bshm") {
        if (smatrix.empty() || sell == 0) fail(ErrorCode::InvalidArgument, "bshm search needs --matrix and --ell");
        SearchOptions opt;
        if (!stargets.empty()) {
          const auto pos = stargets.find(',');
          if (pos == std::string::npos) fail(ErrorCode::ParseError, "targets must read a,b");
          try {
            opt.targets = std::pair{std::stoll(stargets.substr(0, pos)), std::stoll(stargets.substr(pos + 1))};
          } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "targets must read a,b");
          }
        }
        opt.shards = sshards;
        opt.threads = threads;
        opt.checkpoint = scheckpoint;
        opt.resume = sresume;
        opt.include_normalized = snormalized;
        const auto rep = search_bshm_rows(read_matrix(smatrix), sell, opt);
        for (const auto& hit : rep.hits) {
          ojson j;
          j["normalized"] = hit.normalized;
          j["certificate"] = cert_object(hit.cert);
          std::cout << j.dump() << '\n';
        }
        std::cerr << rep.hits.size() << " hits, " << rep.subsets_scanned << " subsets scanned, " << rep.blocks_resumed
                  << " of " << rep.blocks << " blocks resumed\n";
        return 0;
      }
      fail(ErrorCode::InvalidArgument, "unknown search mode '" + smode + "'");
    }
    if (*tables) {
      bool all_equal = true;
      for (int t = 2; t <= 6; ++t) {
        if (gtable && gtable != t) continue;
        const auto d = diff_table(t, gdir, policy);
        all_equal = all_equal && d.equal;
        std::cout << "table " << t << ": " << (d.equal ? "match" : "differs") << '\n';
        for (const auto& l : d.missing) std::cout << "  missing\t" << l << '\n';
        for (const auto& l : d.surplus) std::cout << "  surplus\t" << l << '\n';
        if (!d.equal && d.missing.empty() && d.surplus.empty()) std::cout << "  row order differs\n";
      }
      return all_equal ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
