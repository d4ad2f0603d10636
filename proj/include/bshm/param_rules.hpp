#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "bshm/bshm_core.hpp"

namespace bshm {

enum class ParamClassId { EquiangularPrimitive, Type1Imprimitive, Type1Primitive, Type2Imprimitive, Type2Primitive };
const char* class_name(ParamClassId id);

struct IntegralityCheck {
  std::string name;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  bool integral = false;
};

struct ParamClass {
  ParamClassId id = ParamClassId::Type1Primitive;
  std::int64_t n = 0, ell = 0, a = 0, b = 0;
  std::vector<SrgParams> graph_options;
  std::vector<IntegralityCheck> integrality;
  // True when the input was switched to reach the normal form.
  bool switched = false;
  // Imprimitive classes only.
  std::int64_t r = 0, s = 0;
};

struct Infeasible {
  std::string rule;
  std::string detail;
};

using Classification = std::variant<ParamClass, Infeasible>;

Classification classify_params(std::int64_t n, std::int64_t ell, std::int64_t a, std::int64_t b);

struct HadamardOraclePolicy {
  std::int64_t range_limit = 668;
  bool assume_conjecture = true;
  std::int64_t skew_limit = 47;

  bool hadamard_order(std::int64_t n) const;
  bool skew_order(std::int64_t n) const;
};

bool is_prime_power(std::int64_t q, std::int64_t* prime = nullptr, int* exponent = nullptr);
// Orders reachable from Sylvester, Paley I/II and Kronecker products.
bool constructible_hadamard_order(std::int64_t n);

enum class Existence { Exists, NotExists, Open };
const char* existence_name(Existence e);

struct EnumRow {
  ParamClass cls;
  Existence exists = Existence::Open;
  std::string reason;
};

// Order bound of the published equiangular sweep.
inline constexpr std::int64_t kEquiangularTableOrder = 1296;

struct EnumLimits {
  std::int64_t ell_max = 0;  // 0: derived from n_max
  std::int64_t n_max = 0;    // 0: no bound on n
};

std::vector<EnumRow> enumerate_equiangular(const EnumLimits& limits, const HadamardOraclePolicy& policy = {});
std::vector<EnumRow> enumerate_type1(const EnumLimits& limits, const HadamardOraclePolicy& policy = {});
std::vector<EnumRow> enumerate_type2(const EnumLimits& limits, const HadamardOraclePolicy& policy = {});

bool srg_feasible(const SrgParams& p, bool strict = false);
bool srg_known_nonexistent(const SrgParams& p);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool integral() const { return den == 1; }
  bool operator==(const Rational&) const = default;
};
Rational make_rational(std::int64_t num, std::int64_t den);

struct QsbibdParams {
  Rational a, v, k, lambda, r, b, x, y;
};

struct EquiangularReport {
  bool a_integral = false;
  QsbibdParams design;
  std::vector<IntegralityCheck> checks;
  bool passes = false;
};

EquiangularReport equiangular_integrality(std::int64_t n, std::int64_t ell);
std::int64_t two_distance_bound(std::int64_t ell);
bool sum_of_odd_squares_feasible(std::int64_t total, std::int64_t terms);

enum class ImprimitiveFamily { B0, Bm1 };

struct ExistenceVerdict {
  Existence status = Existence::Open;
  std::string reason;
};

ExistenceVerdict imprimitive_existence(std::int64_t r, std::int64_t s, ImprimitiveFamily family,
                                       const HadamardOraclePolicy& policy = {});

struct ImprimitiveRow {
  std::int64_t r = 0, s = 0, n = 0, ell = 0, a = 0, b = 0;
  SrgParams graph;
  ExistenceVerdict verdict;
};

std::vector<ImprimitiveRow> enumerate_imprimitive(ImprimitiveFamily family, std::int64_t r_min, std::int64_t r_max,
                                                  std::int64_t s_max, const HadamardOraclePolicy& policy = {});

using ParamTuple = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
// Cited partial difference set parameter families, with n up to 2^max_exponent,
// together with their all-ones-row shifts and switched forms.
std::set<ParamTuple> cited_pds_parameters(int max_exponent, bool spread_only);

}  // namespace bshm
