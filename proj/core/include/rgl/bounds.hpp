#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgl/detectors.hpp"

namespace rgl {

enum class BoundKind { kLower, kUpper, kExact };

/// Whether the quoted theorem's threshold on n holds. kUnknown arises when
/// the caller supplies only an upper bound on l and the threshold fails for
/// that bound (a smaller true l might still meet it).
enum class Hypothesis { kMet, kNotMet, kUnknown };

enum class EllSource { kOracle, kKnownTable, kBookUpper, kCaller };

/// The quantity l (a small Ramsey number) with where it came from. `exact`
/// says whether value is the true number or only an upper bound.
struct EllBound {
  long long value = 0;
  EllSource source = EllSource::kCaller;
  bool exact = false;
};

struct Provenance {
  std::string rule;
  std::vector<std::pair<std::string, long long>> parameters;
  /// For exact results: which argument gives each side.
  std::string lower_source;
  std::string upper_source;
  std::string note;
};

struct BoundResult {
  BoundKind kind = BoundKind::kLower;
  BigInt value = 0;
  Provenance provenance;
  Hypothesis hypothesis = Hypothesis::kMet;
  /// Closed form reported alongside the recurrence for book bounds.
  std::optional<BigInt> closed_form;
};

/// log10 of a positive big integer, accurate to long double precision.
long double log10_big(const BigInt& x);

/// r(K_p, T) = (p-1)(n-1)+1 for every tree T on n vertices.
BoundResult chvatal_tree(int p, int n);

/// (chi-1)(h_order-1) + surplus for connected H with |H| >= surplus.
BoundResult burr_lower(int chi, int surplus, int h_order);

/// r(K_p, K_1 + nH) = (p-1) n |H| + 1 once n >= c p l / |H|,
/// c = (3 + 3 sqrt 2)^2. Below the threshold the value is still a lower
/// bound. The threshold is decided in exact integer arithmetic.
BoundResult k1_union_goodness(int p, int h_order, long long n, const EllBound& ell);

/// (p-1)(f + a2 - 1) + 1 if f + a2 - 1 or a2 - 1 is even, else
/// (p-1)(f + a2 - 2) + 1: the lower bound for r(K_p(1,a2,...), K_1 + F)
/// with |F| = f >= 2 a2.
BoundResult multipartite_k1_lower(int p, int a2, long long f_order);

struct BoundQuery {
  int p = 0;
  /// a_1..a_p, sorted ascending.
  std::vector<int> parts;
  int h_order = 0;
  long long n = 0;
};

/// Parity formula for r(K_p(1, a2, ..., a_p), K_1 + nH) with f = n|H|.
/// Exact when n meets the threshold of goodness_thresholds() (and
/// a_p <= delta n), otherwise a lower bound. Rejects a_1 != 1.
BoundResult multipartite_k1_union(const BoundQuery& query);

/// Upper bound on r(K_p, B_{k,t}) from the degree recurrence
/// r_p <= k (r_{p-1} - 1) + t with r_2 = t. The closed form k^p t is attached
/// for k >= 2 only; at k = 1 it undercuts true values (r(K_3, B_{1,3}) = 5 > 3).
BoundResult book_upper(int p, int k, int t);

/// r(K_p, nH) <= |H| (n - 1) + l.
BoundResult union_ramsey_upper(int p, const EllBound& ell, int h_order, long long n);

inline constexpr long double kFanConstant = 52.45584412271571087975L;      // (3 + 3 sqrt 2)^2
inline constexpr long double kFanConstantHalf = 26.22792206135785543988L;  // (3 + 3 sqrt 2)^2 / 2

struct ThresholdParams {
  long long a_sum = 0;   // a_1 + ... + a_{p-1}
  BigInt a_prod = 0;     // a_1 * ... * a_{p-1}
  int b = 0;             // max(a_1, ..., a_{p-1})
  long double c_const = kFanConstant;
  long double big_c_const = kFanConstantHalf;
  /// log10 of 1 / (400 a^{h+2} p^4) and of (100 a^p p^{14p})^{-A}.
  long double term1_log10 = 0;
  long double term2_log10 = 0;
  /// log10 of the supremum of admissible delta (min of the two terms).
  long double delta_log10 = 0;
  /// delta^(1/A).
  long double eta_log10 = 0;
  /// 1/delta_sup as an exact integer when it has at most kExactDigitCap
  /// digits.
  std::optional<BigInt> delta_denominator;
  /// Smallest n with n > p b^2 / delta_sup, i.e. admitting some delta.
  long double n_min_log10 = 0;
  std::optional<BigInt> n_min;
};

inline constexpr int kExactDigitCap = 20000;

/// Threshold constants for multipartite_k1_union. parts = a_1..a_p sorted.
ThresholdParams goodness_thresholds(int p, const std::vector<int>& parts, int h_order);

/// Classical values from the literature, shipped only for cross-checks.
struct KnownRamseyValue {
  int s;
  int t;
  int value;
  const char* source;
};
/// r(K_s, K_t) when tabulated.
std::optional<KnownRamseyValue> known_clique_ramsey(int s, int t);
const std::vector<KnownRamseyValue>& known_clique_ramsey_table();

std::string to_string(BoundKind k);
std::string to_string(Hypothesis h);
std::string to_string(EllSource s);

}  // namespace rgl
