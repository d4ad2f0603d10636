#include "bshm/param_rules.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>

#include "bshm/error.hpp"

namespace bshm {

namespace {

using i64 = std::int64_t;

i64 exact_sqrt(i64 x) {
  if (x < 0) return -1;
  auto r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(x))));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r * r == x ? r : -1;
}

bool divides(i64 q, i64 p) { return q != 0 && p % q == 0; }

IntegralityCheck check(const std::string& name, i64 num, i64 den) {
  IntegralityCheck c;
  c.name = name;
  c.numerator = num;
  c.denominator = den;
  c.integral = divides(den, num);
  return c;
}

std::string tuple_string(i64 n, i64 ell, i64 a, i64 b) {
  return "(" + std::to_string(n) + "," + std::to_string(ell) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
}

Infeasible reject(std::string rule, std::string detail) { return Infeasible{std::move(rule), std::move(detail)}; }

std::optional<Infeasible> first_failure(const std::vector<IntegralityCheck>& checks) {
  for (const auto& c : checks)
    if (!c.integral)
      return reject("integrality:" + c.name,
                    std::to_string(c.numerator) + "/" + std::to_string(c.denominator) + " is not an integer");
  return std::nullopt;
}

// Type1 graph when shift = +1, type2 when shift = -1.
std::vector<IntegralityCheck> primitive_checks(i64 n, i64 ell, i64 a, i64 b, i64 shift) {
  const i64 d = b - a;
  const std::string bs = shift > 0 ? "(b+1)" : "(b-1)";
  std::vector<IntegralityCheck> out;
  out.push_back(check("(ell-b)/(b-a)", ell - b, d));
  out.push_back(check("n/(b-a)", n, d));
  out.push_back(check("n" + bs + "/(2(b-a))", n * (b + shift), 2 * d));
  out.push_back(check("nb" + bs + "/(b-a)^2", n * b * (b + shift), d * d));
  out.push_back(check("k", ell - b + n * (shift > 0 ? b : b - 1), d));
  return out;
}

SrgParams primitive_graph(i64 n, i64 ell, i64 a, i64 b, i64 shift) {
  const i64 d = b - a;
  const i64 mu = n * b * (b + shift) / (d * d);
  const i64 k = shift > 0 ? (ell - b + n * b) / d : (ell - b + n * (b - 1)) / d;
  const i64 lambda = mu + (2 * (ell - b) - n) / d;
  return {n, k, lambda, mu};
}

}  // namespace

const char* class_name(ParamClassId id) {
  switch (id) {
    case ParamClassId::EquiangularPrimitive: return "equiangular-primitive";
    case ParamClassId::Type1Imprimitive: return "type1-imprimitive";
    case ParamClassId::Type1Primitive: return "type1-primitive";
    case ParamClassId::Type2Imprimitive: return "type2-imprimitive";
    case ParamClassId::Type2Primitive: return "type2-primitive";
  }
  return "?";
}

const char* existence_name(Existence e) {
  switch (e) {
    case Existence::Exists: return "yes";
    case Existence::NotExists: return "no";
    case Existence::Open: return "open";
  }
  return "?";
}

Rational make_rational(i64 num, i64 den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return {num, den};
}

Classification classify_params(i64 n, i64 ell, i64 a, i64 b) {
  if (a < b) std::swap(a, b);
  const std::string given = tuple_string(n, ell, a, b);
  if (!(2 < ell && ell < n - 2)) return reject("range", "need 2 < ell < n-2 for " + given);
  if (n % 4 != 0) return reject("hadamard-order", "n = " + std::to_string(n) + " is not a multiple of 4");
  if (a == b) return reject("distinct-values", "a = b = " + std::to_string(a));
  const auto mod4 = [](i64 x) { return ((x % 4) + 4) % 4; };
  if (mod4(ell) != mod4(a) || mod4(a) != mod4(b))
    return reject("mod4", "ell, a, b are not congruent mod 4 in " + given);
  const i64 bound = std::min(ell, n - ell);
  if (std::max(std::abs(a), std::abs(b)) > bound)
    return reject("value-bound", "|a|,|b| must not exceed " + std::to_string(bound));

  ParamClass pc;
  if (b == -a) {
    if (2 * ell > n) {
      ell = n - ell;
      pc.switched = true;
    }
    if (2 * ell == n) return reject("etf-half", "ell = n/2");
    if (n * (ell - a * a) != ell * ell - a * a)
      return reject("equiangular-relation", "n(ell-a^2) != ell^2-a^2 for " + given);
    if (a % 2 != 0) return reject("a-even", "a = " + std::to_string(a) + " is odd");
    if (ell % a != 0 || (ell / a) % 2 == 0) return reject("ell-over-a-odd", "ell/a is not an odd integer");
    if (n % (4 * a) != 0) return reject("n-over-4a", "n/(4a) is not an integer");
    pc.id = ParamClassId::EquiangularPrimitive;
    pc.n = n;
    pc.ell = ell;
    pc.a = a;
    pc.b = -a;
    pc.integrality.push_back(check("ell/a", ell, a));
    pc.integrality.push_back(check("n/(4a)", n, 4 * a));
    for (bool inside : {false, true}) {
      const i64 extra = inside ? n : 0;
      pc.integrality.push_back(check(inside ? "k+" : "k", (n - 1) * a - ell + extra, 2 * a));
      pc.integrality.push_back(check(inside ? "lambda+" : "lambda", (n - 4) * a + n - 4 * ell + 2 * extra, 4 * a));
      pc.integrality.push_back(check(inside ? "mu+" : "mu", n * (a - 1) + 2 * extra, 4 * a));
    }
    if (auto f = first_failure(pc.integrality)) {
      f->rule = "graph-integrality";
      return *f;
    }
    pc.graph_options.push_back(equiangular_graph(n, ell, a, false));
    pc.graph_options.push_back(equiangular_graph(n, ell, a, true));
    return pc;
  }

  if (a * b > 0) return reject("ab-sign", "a and b have the same sign in " + given);

  struct Orientation {
    i64 ell, a, b;
    bool switched;
  };
  const Orientation orient[2] = {{ell, a, b, false}, {n - ell, -b, -a, true}};
  int type = 0;
  Orientation chosen{};
  for (const auto& o : orient) {
    const i64 lhs1 = n * (o.ell + o.a * o.b);
    const i64 lhs2 = n * (o.ell + o.a * o.b - o.a - o.b);
    const i64 rhs = (o.ell - o.a) * (o.ell - o.b);
    if (lhs1 == rhs && 2 * o.ell < n) {
      type = 1;
      chosen = o;
      break;
    }
    if (lhs2 == rhs && 2 * o.ell <= n) {
      type = 2;
      chosen = o;
      break;
    }
  }
  if (type == 0) return reject("type-relation", "neither type relation holds for " + given);

  pc.n = n;
  pc.ell = chosen.ell;
  pc.a = chosen.a;
  pc.b = chosen.b;
  pc.switched = chosen.switched;
  if (pc.a == pc.ell) {
    if (type == 1) {
      if (pc.b != -1) return reject("imprimitive-form", "a = ell requires b = -1 for type 1");
      if (n % (pc.ell + 1) != 0) return reject("integrality:n/(ell+1)", "ell+1 does not divide n");
      pc.id = ParamClassId::Type1Imprimitive;
      pc.r = n / (pc.ell + 1);
      pc.s = (pc.ell + 1) / 4;
      if (pc.r < 2) return reject("imprimitive-form", "r must be at least 2");
      pc.graph_options.push_back({n, pc.r - 1, pc.r - 2, 0});
    } else {
      if (pc.b != 0) return reject("imprimitive-form", "a = ell requires b = 0 for type 2");
      if (n % (2 * pc.ell) != 0) return reject("integrality:n/(2ell)", "2ell does not divide n");
      pc.id = ParamClassId::Type2Imprimitive;
      pc.r = n / (2 * pc.ell);
      pc.s = pc.ell / 4;
      pc.graph_options.push_back({n, 2 * pc.r - 1, 2 * pc.r - 2, 0});
    }
    return pc;
  }
  const i64 shift = type == 1 ? 1 : -1;
  pc.id = type == 1 ? ParamClassId::Type1Primitive : ParamClassId::Type2Primitive;
  pc.integrality = primitive_checks(n, pc.ell, pc.a, pc.b, shift);
  if (auto f = first_failure(pc.integrality)) return *f;
  pc.graph_options.push_back(primitive_graph(n, pc.ell, pc.a, pc.b, shift));
  return pc;
}

bool is_prime_power(i64 q, i64* prime, int* exponent) {
  if (q < 2) return false;
  i64 p = 0;
  for (i64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return false;
  if (prime) *prime = p;
  if (exponent) *exponent = e;
  return true;
}

bool constructible_hadamard_order(i64 n) {
  static std::map<i64, bool> memo;
  if (n == 1 || n == 2) return true;
  if (n < 1 || n % 4 != 0) return false;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  bool ok = false;
  if ((n & (n - 1)) == 0) ok = true;
  if (!ok && is_prime_power(n - 1) && (n - 1) % 4 == 3) ok = true;
  if (!ok && n % 2 == 0 && is_prime_power(n / 2 - 1) && (n / 2 - 1) % 4 == 1) ok = true;
  for (i64 d = 2; !ok && d * d <= n; ++d)
    if (n % d == 0 && constructible_hadamard_order(d) && constructible_hadamard_order(n / d)) ok = true;
  memo[n] = ok;
  return ok;
}

bool HadamardOraclePolicy::hadamard_order(i64 n) const {
  if (n == 1 || n == 2) return true;
  if (n < 1 || n % 4 != 0) return false;
  if (n < range_limit) return true;
  return assume_conjecture || constructible_hadamard_order(n);
}

bool HadamardOraclePolicy::skew_order(i64 n) const {
  if (n == 2) return true;
  if (n < 4 || n % 4 != 0) return false;
  return n / 4 < skew_limit;
}

bool srg_feasible(const SrgParams& p, bool strict) {
  const i64 v = p.v, k = p.k, l = p.lambda, m = p.mu;
  if (v < 2 || k < 0 || k >= v || l < 0 || m < 0) return false;
  if (k * (k - l - 1) != (v - k - 1) * m) return false;
  const SrgParams c = p.complement();
  if (c.k < 0 || c.lambda < 0 || c.mu < 0) return false;
  const i64 disc = (l - m) * (l - m) + 4 * (k - m);
  const i64 sd = exact_sqrt(disc);
  const i64 num = 2 * k + (v - 1) * (l - m);
  if (sd <= 0) {
    // Conference graphs have irrational eigenvalues.
    return num == 0 && (v - 1) % 2 == 0;
  }
  if (num % sd != 0) return false;
  const i64 f2 = (v - 1) - num / sd;
  const i64 g2 = (v - 1) + num / sd;
  if (f2 < 0 || g2 < 0 || f2 % 2 != 0 || g2 % 2 != 0) return false;
  if (!strict || m == 0 || c.mu == 0) return true;
  const double r = (l - m + sd) / 2.0, s = (l - m - sd) / 2.0;
  const double f = f2 / 2.0, g = g2 / 2.0, kd = static_cast<double>(k);
  const double eps = 1e-9;
  if ((r + 1) * (kd + r + 2 * r * s) > (kd + r) * (s + 1) * (s + 1) + eps) return false;
  if ((s + 1) * (kd + s + 2 * r * s) > (kd + s) * (r + 1) * (r + 1) + eps) return false;
  if (v > f * (f + 3) / 2 + eps || v > g * (g + 3) / 2 + eps) return false;
  return true;
}

bool srg_known_nonexistent(const SrgParams& p) {
  static const SrgParams known[] = {{96, 45, 24, 18}, {96, 57, 36, 30}};
  for (const auto& q : known)
    if (q == p || q == p.complement()) return true;
  return false;
}

EquiangularReport equiangular_integrality(i64 n, i64 ell) {
  EquiangularReport rep;
  if (ell < 2 || ell > n - 2) return rep;
  const i64 sq_num = ell * (n - ell);
  const i64 a = divides(n - 1, sq_num) ? exact_sqrt(sq_num / (n - 1)) : -1;
  rep.a_integral = a > 0;
  rep.checks.push_back({"a", sq_num, n - 1, rep.a_integral});
  if (!rep.a_integral) return rep;
  auto& d = rep.design;
  d.a = make_rational(a, 1);
  d.v = make_rational(ell, 1);
  d.k = make_rational(ell - a, 2);
  d.lambda = make_rational((n - 1) * (ell - a) * (ell - a - 2), 4 * ell * (ell - 1));
  d.r = make_rational((n - 1) * (ell - a), 2 * ell);
  d.b = make_rational(n - 1, 1);
  d.x = make_rational(ell - 3 * a, 4);
  d.y = make_rational(ell - a, 4);
  bool ok = true;
  auto add = [&](const std::string& name, bool pass, i64 num, i64 den) {
    rep.checks.push_back({name, num, den, pass});
    ok = ok && pass;
  };
  auto nonneg_int = [](const Rational& q) { return q.integral() && q.num >= 0; };
  add("a-even", a % 2 == 0, a, 2);
  add("design-k", nonneg_int(d.k), d.k.num, d.k.den);
  add("design-lambda", nonneg_int(d.lambda), d.lambda.num, d.lambda.den);
  add("design-r", nonneg_int(d.r), d.r.num, d.r.den);
  add("design-x", nonneg_int(d.x), d.x.num, d.x.den);
  add("design-y", nonneg_int(d.y), d.y.num, d.y.den);
  add("ell-not-half", 2 * ell != n, ell, n);
  const i64 p = divides(n - ell, ell * (n - 1)) ? exact_sqrt(ell * (n - 1) / (n - ell)) : -1;
  add("sqrt(ell(n-1)/(n-ell))-odd", p > 0 && p % 2 == 1, ell * (n - 1), n - ell);
  const i64 q = divides(ell, (n - ell) * (n - 1)) ? exact_sqrt((n - ell) * (n - 1) / ell) : -1;
  add("sqrt((n-ell)(n-1)/ell)-odd", q > 0 && q % 2 == 1, (n - ell) * (n - 1), ell);
  // (n-2ell)^2 (n-1) / (ell(n-ell)) must be a perfect square
  const i64 t_num = (n - 2 * ell) * (n - 2 * ell) * (n - 1);
  const i64 t_den = ell * (n - ell);
  add("(n-2ell)sqrt((n-1)/(ell(n-ell)))", divides(t_den, t_num) && exact_sqrt(t_num / t_den) >= 0, t_num, t_den);
  const i64 cap = std::min(ell * (ell + 1) / 2, (n - ell) * (n - ell + 1) / 2);
  add("gerzon-bound", n <= cap, n, cap);
  rep.passes = ok;
  return rep;
}

i64 two_distance_bound(i64 ell) {
  if (ell < 2) fail(ErrorCode::InvalidArgument, "ell must be at least 2");
  for (i64 k = 1;; ++k) {
    const i64 x = (2 * k + 1) * (2 * k + 1) - 3;
    if (x == ell) return ell * (ell + 3) / 2;
    if (x > ell) break;
  }
  return ell * (ell + 1) / 2;
}

bool sum_of_odd_squares_feasible(i64 total, i64 terms) {
  if (total < 1 || terms < 1) return false;
  if (terms > total) return false;
  if ((total - terms) % 8 != 0) return false;
  // Each odd square is 1 mod 8; write it as 1 + 8*tri(j), so we need
  // sum of `terms` values 8*T_j summing to total-terms, T_j triangular.
  const i64 budget = (total - terms) / 8;
  std::vector<i64> tri;
  for (i64 j = 1; j * (j + 1) / 2 <= budget; ++j) tri.push_back(j * (j + 1) / 2);
  // best[x] = fewest nonzero triangular parts summing to x; any count up to
  // `terms` works since zero parts are free.
  const i64 inf = terms + 1;
  std::vector<i64> best(static_cast<std::size_t>(budget) + 1, inf);
  best[0] = 0;
  for (i64 x = 1; x <= budget; ++x)
    for (i64 t : tri) {
      if (t > x) break;
      best[x] = std::min(best[x], best[x - t] + 1);
    }
  return best[budget] <= terms;
}

ExistenceVerdict imprimitive_existence(i64 r, i64 s, ImprimitiveFamily family, const HadamardOraclePolicy& policy) {
  if (r < 1 || s < 1) fail(ErrorCode::InvalidArgument, "r and s must be positive");
  const auto& h = policy;
  if (family == ImprimitiveFamily::B0) {
    if (h.hadamard_order(2 * r) && h.hadamard_order(4 * s)) return {Existence::Exists, "hadamard-orders-2r-4s"};
    if (h.hadamard_order(4 * r) && h.hadamard_order(2 * s)) return {Existence::Exists, "hadamard-orders-4r-2s"};
    return {Existence::Open, ""};
  }
  if (h.hadamard_order(r) && h.hadamard_order(4 * s)) return {Existence::Exists, "hadamard-orders-r-4s"};
  if (h.hadamard_order(2 * r) && h.hadamard_order(2 * s)) return {Existence::Exists, "hadamard-orders-2r-2s"};
  if (r == 4 * s - 1 && h.skew_order(4 * s)) return {Existence::Exists, "skew-order-4s"};
  if (r % 2 == 1) {
    if (r < 4 * s - 1) return {Existence::NotExists, "ratio-bound"};
    if (!sum_of_odd_squares_feasible(r * r, 4 * r * s - 4 * s + 1)) return {Existence::NotExists, "odd-square-sum"};
  }
  return {Existence::Open, ""};
}

std::vector<ImprimitiveRow> enumerate_imprimitive(ImprimitiveFamily family, i64 r_min, i64 r_max, i64 s_max,
                                                  const HadamardOraclePolicy& policy) {
  std::vector<ImprimitiveRow> out;
  for (i64 s = 1; s <= s_max; ++s)
    for (i64 r = r_min; r <= r_max; ++r) {
      ImprimitiveRow row;
      row.r = r;
      row.s = s;
      if (family == ImprimitiveFamily::B0) {
        row.n = 8 * r * s;
        row.ell = row.a = 4 * s;
        row.b = 0;
        row.graph = {row.n, 2 * r - 1, 2 * r - 2, 0};
      } else {
        row.n = 4 * r * s;
        row.ell = row.a = 4 * s - 1;
        row.b = -1;
        row.graph = {row.n, r - 1, r - 2, 0};
      }
      row.verdict = imprimitive_existence(r, s, family, policy);
      out.push_back(row);
    }
  std::stable_sort(out.begin(), out.end(), [](const ImprimitiveRow& x, const ImprimitiveRow& y) {
    if (x.n != y.n) return x.n < y.n;
    return x.r > y.r;
  });
  return out;
}

namespace {

i64 pow2(i64 e) { return e >= 62 ? -1 : (i64{1} << e); }

void add_family(std::set<ParamTuple>& out, i64 n, i64 ell, i64 a, i64 b) {
  if (a < b) std::swap(a, b);
  if (!(1 < ell && ell < n - 2)) return;
  if (b == -a || a + b == -2) return;
  for (auto [l, x, y] : {std::tuple{ell, a, b}, std::tuple{ell + 1, a + 1, b + 1}}) {
    out.insert({n, l, x, y});
    out.insert({n, n - l, -y, -x});
  }
}

}  // namespace

std::set<ParamTuple> cited_pds_parameters(int max_exponent, bool spread_only) {
  std::set<ParamTuple> out;
  const i64 e_max = max_exponent;
  for (i64 m = 1; 2 * m <= e_max; ++m) {
    const i64 q = pow2(m);
    for (i64 s = 1; s <= q + 1; ++s) add_family(out, q * q, s * (q - 1), q - s, -s);
  }
  if (spread_only) return out;
  // (ii)
  for (i64 m = 2; 3 * m <= e_max; ++m)
    for (i64 s = 1; s < m; ++s) {
      const i64 q = pow2(m), t = pow2(s);
      add_family(out, q * q * q, (q * t - q + t) * (q - 1), q - t, q - t - q * t);
    }
  // (iii)
  for (i64 s = 1; 2 * s <= e_max; ++s)
    for (i64 m = 1; 2 * s * m <= e_max; ++m) {
      const i64 n = pow2(2 * s * m), u = pow2((s - 1) * m), h = pow2(m - 1), w = pow2(s * m);
      add_family(out, n, u * (h - 1) * (w - 1), u * (h + 1), -u * (h - 1));
      add_family(out, n, u * (h - 1) * (w + 1), u * (h - 1), -u * (h + 1));
    }
  // (iv)
  for (i64 m = 1; 12 * m <= e_max; ++m) {
    const i64 q = pow2(m);
    for (i64 t = 1; t <= q * (q - 1); ++t) {
      const i64 a = t * (q * q - 1) * (q * q + q + 1);
      add_family(out, pow2(12 * m), a * (pow2(6 * m) + 1), a, a - pow2(6 * m));
    }
  }
  // (v) and (vi)
  for (i64 s = 1; 4 * s <= e_max; ++s)
    for (i64 m = 1; m * 4 * s <= e_max; ++m) {
      const i64 q = pow2(m);
      if ((4 * s + 2) * m <= e_max) {
        const i64 big = pow2((2 * s + 1) * m), small = pow2((2 * s - 1) * m) + 1;
        for (i64 t = 1; t <= q + 1; ++t) {
          if ((t * small) % (q + 1) != 0) continue;
          const i64 c = t * small / (q + 1);
          add_family(out, pow2((4 * s + 2) * m), (big - 1) * c, big - c, -c);
        }
        const i64 x = pow2(2 * s * m) - 1, y = big + 1;
        if ((q * x) % (q + 1) == 0 && (q * y) % (q + 1) == 0)
          add_family(out, pow2((4 * s + 2) * m), q * x / (q + 1) * y, q * x / (q + 1), -q * y / (q + 1));
      }
      const i64 n = pow2(4 * s * m), w = pow2(2 * s * m);
      for (i64 t = 1; t <= q + 1; ++t) {
        const i64 ln = t * (n - 1), an = t * (w - 1), bn = w * (t - 1 - q) - t;
        if (ln % (q + 1) || an % (q + 1) || bn % (q + 1)) continue;
        add_family(out, n, ln / (q + 1), an / (q + 1), bn / (q + 1));
      }
    }
  // (vii)
  for (i64 t = 3; t <= pow2(e_max / 8) + 1; t += 2) {
    i64 s = 0;
    for (i64 j = 1; j <= e_max; ++j)
      if ((pow2(j) + 1) % t == 0) {
        s = j;
        break;
      }
    if (s == 0) continue;
    for (i64 m = 2; 4 * s * m <= e_max; ++m) {
      const i64 n = pow2(4 * s * m), w = pow2(2 * s * m);
      if ((w - 1) % t == 0 && ((t - 1) * w + 1) % t == 0) {
        add_family(out, n, (w - 1) * (w - 1) / t, ((t - 1) * w + 1) / t, -(w - 1) / t);
        add_family(out, n, (n - 1) / t, (w - 1) / t, -((t - 1) * w + 1) / t);
      }
    }
  }
  // (viii)
  for (i64 m = 3; 2 * m <= e_max; ++m)
    for (i64 s = 1; s <= m; ++s) {
      if (m % s != 0) continue;
      const i64 q = pow2(m), u = pow2(m - s);
      add_family(out, q * q, (u - 1) * (q - 1), q + 1 - u, 1 - u);
      add_family(out, q * q, (u - 1) * (q + 1), u - 1, u - 1 - q);
    }
  return out;
}

namespace {

constexpr i64 kVettedEquiangular = 1296;
constexpr i64 kVettedTypes = 256;

int log2_exact(i64 n) {
  if (n < 1 || (n & (n - 1)) != 0) return -1;
  int e = 0;
  while ((i64{1} << e) < n) ++e;
  return e;
}

void attribute(EnumRow& row, const HadamardOraclePolicy& policy) {
  const auto& c = row.cls;
  bool nonexistent = false;
  for (const auto& opt : c.graph_options) nonexistent = nonexistent || srg_known_nonexistent(opt);
  if (nonexistent) {
    row.exists = Existence::NotExists;
    row.reason = "srg-nonexistent";
    return;
  }
  const i64 n = c.n;
  const i64 u = exact_sqrt(n / 4);
  const bool square = n % 4 == 0 && u > 0 && 4 * u * u == n;
  if (c.id == ParamClassId::EquiangularPrimitive) {
    if (square && c.a == u && (c.ell == 2 * u * u - u || c.ell == 2 * u * u + u) && policy.hadamard_order(u)) {
      row.exists = Existence::Exists;
      row.reason = "hadamard-etf";
      return;
    }
  } else if (square && u > 1 && policy.hadamard_order(u)) {
    const ParamTuple t1{n, 2 * u * u - u - 1, u - 1, -u - 1};
    const ParamTuple t2{n, 2 * u * u - u + 1, u + 1, -u + 1};
    const ParamTuple me{n, c.ell, c.a, c.b};
    auto switched = [&](const ParamTuple& t) {
      auto [tn, tl, ta, tb] = t;
      return ParamTuple{tn, tn - tl, -tb, -ta};
    };
    if (me == t1 || me == t2 || me == switched(t1) || me == switched(t2)) {
      row.exists = Existence::Exists;
      row.reason = "all-ones-row-shift";
      return;
    }
  }
  const int e = log2_exact(n);
  if (e > 0 && e <= 40) {
    const ParamTuple me{n, c.ell, c.a, c.b};
    static std::map<int, std::pair<std::set<ParamTuple>, std::set<ParamTuple>>> cache;
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, std::pair{cited_pds_parameters(e, true), cited_pds_parameters(e, false)}).first;
    if (it->second.first.count(me)) {
      row.exists = Existence::Exists;
      row.reason = "spread-union-pds";
      return;
    }
    if (it->second.second.count(me)) {
      row.exists = Existence::Exists;
      row.reason = "cited-pds";
      return;
    }
  }
  const i64 vetted = c.id == ParamClassId::EquiangularPrimitive ? kVettedEquiangular : kVettedTypes;
  row.exists = Existence::Open;
  row.reason = n > vetted ? "needs-srg-vetting" : "";
}

bool sort_rows(const EnumRow& x, const EnumRow& y) {
  return std::tie(x.cls.n, x.cls.ell, x.cls.a) < std::tie(y.cls.n, y.cls.ell, y.cls.a);
}

}  // namespace

std::vector<EnumRow> enumerate_equiangular(const EnumLimits& limits, const HadamardOraclePolicy& policy) {
  i64 ell_max = limits.ell_max;
  if (ell_max <= 0) ell_max = limits.n_max / 2;
  std::vector<EnumRow> out;
  for (i64 ell = 2; ell <= ell_max; ell += 2)
    for (i64 a = 1; a * a < ell; ++a) {
      if ((ell - a) % 4 != 0 || ell % a != 0 || (ell / a) % 2 == 0) continue;
      const i64 num = ell * ell - a * a, den = ell - a * a;
      if (num % den != 0) continue;
      const i64 n = num / den;
      if (n % (4 * a) != 0 || n <= 2 * ell) continue;
      if (limits.n_max > 0 && n > limits.n_max) continue;
      auto cls = classify_params(n, ell, a, -a);
      if (!std::holds_alternative<ParamClass>(cls)) continue;
      EnumRow row;
      row.cls = std::get<ParamClass>(cls);
      attribute(row, policy);
      out.push_back(std::move(row));
    }
  std::sort(out.begin(), out.end(), sort_rows);
  return out;
}

namespace {

std::vector<EnumRow> enumerate_typed(int type, const EnumLimits& limits, const HadamardOraclePolicy& policy) {
  i64 ell_max = limits.ell_max;
  if (ell_max <= 0) ell_max = limits.n_max / 2;
  if (ell_max <= 0) fail(ErrorCode::InvalidArgument, "enumeration needs a bound");
  const i64 shift = type == 1 ? 1 : -1;
  std::vector<EnumRow> out;
  for (i64 ell = 3; ell <= ell_max; ++ell)
    for (i64 a = 1; a <= ell; ++a) {
      if ((a - ell) % 4 != 0) continue;
      for (i64 b = 0; b >= -ell; --b) {
        if (b == -a || (b - ell) % 4 != 0) continue;
        const i64 den = type == 1 ? ell + a * b : ell + a * b - a - b;
        if (den <= 0) continue;
        if ((ell - b) % (b - a) != 0) continue;
        const i64 num = (ell - a) * (ell - b);
        if (num % den != 0) continue;
        const i64 n = num / den;
        if (limits.n_max > 0 && n > limits.n_max) continue;
        if (type == 1 ? n <= 2 * ell : n < 2 * ell) continue;
        auto checks = primitive_checks(n, ell, a, b, shift);
        if (std::any_of(checks.begin(), checks.end(), [](const auto& c) { return !c.integral; })) continue;
        if (!srg_feasible(primitive_graph(n, ell, a, b, shift))) continue;
        auto cls = classify_params(n, ell, a, b);
        if (!std::holds_alternative<ParamClass>(cls)) continue;
        EnumRow row;
        row.cls = std::get<ParamClass>(cls);
        attribute(row, policy);
        out.push_back(std::move(row));
      }
    }
  std::sort(out.begin(), out.end(), sort_rows);
  return out;
}

}  // namespace

std::vector<EnumRow> enumerate_type1(const EnumLimits& limits, const HadamardOraclePolicy& policy) {
  return enumerate_typed(1, limits, policy);
}

std::vector<EnumRow> enumerate_type2(const EnumLimits& limits, const HadamardOraclePolicy& policy) {
  return enumerate_typed(2, limits, policy);
}

}  // namespace bshm
