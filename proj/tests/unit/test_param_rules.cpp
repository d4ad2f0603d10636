#include <array>
#include <variant>

#include "doctest.h"

#include "bshm/param_rules.hpp"

using namespace bshm;
using i64 = std::int64_t;

namespace {
ParamClass as_class(const Classification& c) {
  REQUIRE(std::holds_alternative<ParamClass>(c));
  return std::get<ParamClass>(c);
}
}  // namespace

TEST_SUITE("param_rules") {
  TEST_CASE("classify examples") {
    const auto eq = as_class(classify_params(16, 6, 2, -2));
    CHECK(eq.id == ParamClassId::EquiangularPrimitive);
    REQUIRE(eq.graph_options.size() == 2);
    CHECK(eq.graph_options[0] == SrgParams{16, 6, 2, 2});
    CHECK(eq.graph_options[1] == SrgParams{16, 10, 6, 6});

    const auto bad = classify_params(36, 10, 4, -2);
    REQUIRE(std::holds_alternative<Infeasible>(bad));
    CHECK(std::get<Infeasible>(bad).rule == "mod4");

    const auto imp = as_class(classify_params(12, 3, 3, -1));
    CHECK(imp.id == ParamClassId::Type1Imprimitive);
    CHECK(imp.graph_options.at(0) == SrgParams{12, 2, 1, 0});
    CHECK(imp.r == 3);
    CHECK(imp.s == 1);

    const auto t2 = as_class(classify_params(48, 12, 12, 0));
    CHECK(t2.id == ParamClassId::Type2Imprimitive);
    CHECK(t2.graph_options.at(0) == SrgParams{48, 3, 2, 0});
  }

  TEST_CASE("classification normalizes switching and value order") {
    const auto a = as_class(classify_params(64, 14, 6, -2));
    CHECK(a.id == ParamClassId::Type1Primitive);
    CHECK_FALSE(a.switched);
    const auto b = as_class(classify_params(64, 50, -6, 2));
    CHECK(b.id == ParamClassId::Type1Primitive);
    CHECK(b.switched);
    CHECK(b.ell == 14);
  }

  TEST_CASE("order 36 sets fall to the mod 4 rule") {
    for (auto [n, l, a, b] : std::vector<std::array<i64, 4>>{{36, 10, 4, -2}, {36, 25, 1, -5}, {36, 14, 2, -4}, {36, 20, 2, -4}}) {
      const auto c = classify_params(n, l, a, b);
      REQUIRE(std::holds_alternative<Infeasible>(c));
      CHECK(std::get<Infeasible>(c).rule == "mod4");
    }
  }

  TEST_CASE("equiangular sweep") {
    auto at_ell = [](i64 ell) {
      std::vector<std::array<i64, 4>> out;
      for (const auto& r : enumerate_equiangular({ell, 0}))
        if (r.cls.ell == ell) out.push_back({r.cls.n, r.cls.ell, r.cls.a, r.cls.b});
      return out;
    };
    CHECK(at_ell(6) == std::vector<std::array<i64, 4>>{{16, 6, 2, -2}});
    CHECK(at_ell(20) == std::vector<std::array<i64, 4>>{{96, 20, 4, -4}});
    CHECK(at_ell(4).empty());
    CHECK(enumerate_equiangular({700, kEquiangularTableOrder}).size() == 16);
  }

  TEST_CASE("typed sweeps") {
    const auto t1 = enumerate_type1({0, 256});
    const auto t2 = enumerate_type2({0, 256});
    CHECK(t1.size() == 30);
    CHECK(t2.size() == 30);
    CHECK(t1.front().cls.n == 16);
    CHECK(t1.front().cls.ell == 5);
    CHECK(t1.front().cls.graph_options.at(0) == SrgParams{16, 10, 6, 6});
    for (const auto& rows : {t1, t2})
      for (const auto& r : rows) {
        const auto& c = r.cls;
        // Ratio (ell-a)/(ell-b) = (m-1)/m for an integer m.
        if (c.n > 2 * c.ell + 1) {
          const i64 num = c.ell - c.a, den = c.ell - c.b;
          CHECK(num * 1 < den);
          CHECK(den % (den - num) == 0);
        }
      }
  }

  TEST_CASE("srg feasibility") {
    CHECK(srg_feasible({16, 6, 2, 2}));
    CHECK(srg_feasible({48, 3, 2, 0}));
    CHECK_FALSE(srg_feasible({5, 3, 2, 2}));
    CHECK(srg_known_nonexistent({96, 45, 24, 18}));
    CHECK(srg_known_nonexistent({96, 50, 22, 30}));
    CHECK_FALSE(srg_known_nonexistent({16, 6, 2, 2}));
  }

  TEST_CASE("equiangular integrality screens") {
    const auto ok = equiangular_integrality(16, 6);
    CHECK(ok.a_integral);
    CHECK(ok.passes);
    CHECK(ok.design.a == Rational{2, 1});
    CHECK(ok.design.x == Rational{0, 1});
    CHECK(ok.design.y == Rational{1, 1});
    CHECK_FALSE(equiangular_integrality(36, 15).passes);
    CHECK_FALSE(equiangular_integrality(16, 8).passes);
  }

  TEST_CASE("two-distance bound") {
    CHECK(two_distance_bound(4) == 10);
    CHECK(two_distance_bound(6) == 27);
    CHECK(two_distance_bound(22) == 275);
  }

  TEST_CASE("sums of odd squares") {
    CHECK(sum_of_odd_squares_feasible(9, 9));
    CHECK_FALSE(sum_of_odd_squares_feasible(4, 1));
    CHECK(sum_of_odd_squares_feasible(25, 1));
    // A sum of t odd squares is t mod 8.
    CHECK(sum_of_odd_squares_feasible(25, 9));
    CHECK_FALSE(sum_of_odd_squares_feasible(25, 13));
    CHECK_FALSE(sum_of_odd_squares_feasible(25, 2));
  }

  TEST_CASE("imprimitive existence") {
    const HadamardOraclePolicy policy;
    CHECK(imprimitive_existence(3, 1, ImprimitiveFamily::Bm1, policy).status == Existence::Exists);
    CHECK(imprimitive_existence(1, 1, ImprimitiveFamily::B0, policy).status == Existence::Exists);
    std::size_t open_b0 = 0, open_bm1 = 0;
    for (const auto& r : enumerate_imprimitive(ImprimitiveFamily::B0, 1, 8, 8, policy))
      open_b0 += r.verdict.status == Existence::Open;
    for (const auto& r : enumerate_imprimitive(ImprimitiveFamily::Bm1, 2, 12, 8, policy))
      open_bm1 += r.verdict.status == Existence::Open;
    CHECK(open_b0 == 9);
    CHECK(open_bm1 == 12);
  }

  TEST_CASE("Hadamard order policy") {
    HadamardOraclePolicy p;
    CHECK(p.hadamard_order(1));
    CHECK(p.hadamard_order(2));
    CHECK_FALSE(p.hadamard_order(6));
    CHECK(p.hadamard_order(92));
    p.assume_conjecture = false;
    CHECK(p.hadamard_order(92));
    p.range_limit = 0;
    CHECK_FALSE(p.hadamard_order(92));
    CHECK(p.hadamard_order(12));
    CHECK(constructible_hadamard_order(100));
    CHECK_FALSE(constructible_hadamard_order(92));
    i64 prime = 0;
    int e = 0;
    CHECK(is_prime_power(81, &prime, &e));
    CHECK(prime == 3);
    CHECK(e == 4);
    CHECK_FALSE(is_prime_power(12));
  }
}
