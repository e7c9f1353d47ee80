#include "rgl/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "rgl/error.hpp"

namespace rgl {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

BigInt pow_big(BigInt base, long long exp) {
  BigInt out = 1;
  while (exp > 0) {
    if (exp & 1) out *= base;
    base *= base;
    exp >>= 1;
  }
  return out;
}

// Exact test of n h >= (27 + 18 sqrt 2) p l.
bool meets_fan_threshold(long long n, int h, int p, long long ell) {
  const BigInt lhs = BigInt(n) * h - BigInt(27) * p * ell;
  if (lhs < 0) return false;
  const BigInt rhs = BigInt(p) * ell;
  return lhs * lhs >= BigInt(648) * rhs * rhs;
}

Provenance provenance(std::string rule, std::vector<std::pair<std::string, long long>> params) {
  Provenance p;
  p.rule = std::move(rule);
  p.parameters = std::move(params);
  return p;
}

}  // namespace

long double log10_big(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("log10 of a non-positive integer");
  const auto bits = static_cast<long long>(boost::multiprecision::msb(x));
  if (bits < 62) return std::log10(static_cast<long double>(static_cast<unsigned long long>(x)));
  const long long shift = bits - 61;
  const BigInt top = x >> shift;
  return std::log10(static_cast<long double>(static_cast<unsigned long long>(top))) +
         static_cast<long double>(shift) * std::log10(2.0L);
}

BoundResult chvatal_tree(int p, int n) {
  require(p >= 1, "clique order must be at least 1");
  require(n >= 1, "tree order must be at least 1");
  BoundResult r;
  r.kind = BoundKind::kExact;
  r.value = BigInt(p - 1) * (n - 1) + 1;
  r.provenance = provenance("chvatal", {{"p", p}, {"n", n}});
  r.provenance.lower_source = "(p-1) disjoint copies of K_{n-1}";
  r.provenance.upper_source = "greedy tree embedding in a graph of minimum degree n-1";
  return r;
}

BoundResult burr_lower(int chi, int surplus, int h_order) {
  require(chi >= 1, "chromatic number must be at least 1");
  require(surplus >= 1, "chromatic surplus must be at least 1");
  require(h_order >= surplus, "target order is below the chromatic surplus");
  BoundResult r;
  r.kind = BoundKind::kLower;
  r.value = BigInt(chi - 1) * (h_order - 1) + surplus;
  r.provenance = provenance("burr", {{"chi", chi}, {"surplus", surplus}, {"h_order", h_order}});
  r.provenance.lower_source = "(chi-1) cliques of order h-1 plus a clique of order s-1, all blue between";
  return r;
}

BoundResult k1_union_goodness(int p, int h_order, long long n, const EllBound& ell) {
  require(p >= 1, "clique order must be at least 1");
  require(h_order >= 1, "component order must be at least 1");
  require(n >= 1, "copy count must be at least 1");
  require(ell.value >= 1, "l must be at least 1");
  BoundResult r;
  r.value = BigInt(p - 1) * n * h_order + 1;
  r.provenance = provenance("theorem1", {{"p", p}, {"h_order", h_order}, {"n", n}, {"ell", ell.value}});
  r.provenance.lower_source = "(p-1) disjoint copies of K_{n|H|}";
  if (p <= 2) {
    r.kind = BoundKind::kExact;
    r.hypothesis = Hypothesis::kMet;
    r.provenance.upper_source = "trivial for p <= 2";
    return r;
  }
  if (meets_fan_threshold(n, h_order, p, ell.value)) {
    r.kind = BoundKind::kExact;
    r.hypothesis = Hypothesis::kMet;
    r.provenance.upper_source = "stability argument; n >= c p l / |H|, c = (3+3 sqrt 2)^2";
  } else {
    r.kind = BoundKind::kLower;
    r.hypothesis = ell.exact ? Hypothesis::kNotMet : Hypothesis::kUnknown;
    r.provenance.note = "n below c p l / |H|; value is a lower bound only";
  }
  return r;
}

BoundResult multipartite_k1_lower(int p, int a2, long long f_order) {
  require(p >= 2, "p must be at least 2");
  require(a2 >= 1, "a2 must be at least 1");
  require(f_order >= 2LL * a2, "|F| must be at least 2 a2");
  BoundResult r;
  r.kind = BoundKind::kLower;
  const long long m = f_order + a2 - 1;
  const long long base = (m % 2 == 0 || (a2 - 1) % 2 == 0) ? m : m - 1;
  r.value = BigInt(p - 1) * base + 1;
  r.provenance = provenance("theorem2", {{"p", p}, {"a2", a2}, {"f_order", f_order}});
  r.provenance.lower_source = "(p-1) joined copies of a triangle-free (a2-1)-regular graph";
  return r;
}

BoundResult multipartite_k1_union(const BoundQuery& q) {
  require(q.p >= 2, "p must be at least 2");
  require(static_cast<int>(q.parts.size()) == q.p, "expected p part sizes");
  require(std::is_sorted(q.parts.begin(), q.parts.end()), "part sizes must be sorted ascending");
  require(q.parts.front() == 1, "the smallest part must have size 1");
  require(q.h_order >= 1 && q.n >= 1, "H and n must be non-empty");
  const int a2 = q.parts.size() > 1 ? q.parts[1] : 1;
  const long long f = q.n * q.h_order;

  BoundResult r;
  const long long m = f + a2 - 1;
  const long long base = (m % 2 == 0 || (a2 - 1) % 2 == 0) ? m : m - 1;
  r.value = BigInt(q.p - 1) * base + 1;
  r.provenance = provenance("theorem3", {{"p", q.p}, {"a2", a2}, {"h_order", q.h_order}, {"n", q.n}});

  const auto t = goodness_thresholds(q.p, q.parts, q.h_order);
  const long long need = std::max<long long>(q.parts.back(), static_cast<long long>(q.p) * t.b * t.b);
  bool met;
  if (t.delta_denominator) {
    met = BigInt(q.n) > BigInt(need) * *t.delta_denominator;
  } else {
    met = std::log10(static_cast<long double>(q.n)) >
          std::log10(static_cast<long double>(need)) - t.delta_log10;
  }
  r.hypothesis = met ? Hypothesis::kMet : Hypothesis::kNotMet;
  if (met) {
    r.kind = BoundKind::kExact;
    r.provenance.lower_source = "(p-1) joined copies of a triangle-free (a2-1)-regular graph";
    r.provenance.upper_source = "stability argument with delta below the threshold";
  } else if (f >= 2LL * a2) {
    r.kind = BoundKind::kLower;
    r.provenance.lower_source = "(p-1) joined copies of a triangle-free (a2-1)-regular graph";
    r.provenance.note = "n below the stability threshold; value is a lower bound only";
  } else {
    r.kind = BoundKind::kLower;
    r.provenance.note = "n|H| < 2 a2: neither side is proved, value is the formula only";
  }
  return r;
}

BoundResult book_upper(int p, int k, int t) {
  require(p >= 2, "p must be at least 2");
  require(k >= 1, "spine order must be at least 1");
  require(t > k, "book order must exceed the spine");
  BigInt r = t;
  for (int i = 3; i <= p; ++i) r = BigInt(k) * (r - 1) + t;
  BoundResult out;
  out.kind = BoundKind::kUpper;
  out.value = r;
  out.provenance = provenance("book", {{"p", p}, {"k", k}, {"t", t}});
  out.provenance.upper_source = "degree recurrence r_p <= k (r_{p-1} - 1) + t, r_2 = t";
  if (k >= 2) {
    out.closed_form = pow_big(k, p) * t;
  } else {
    out.provenance.note = "closed form k^p t omitted for k = 1 (it undercuts true values)";
  }
  return out;
}

BoundResult union_ramsey_upper(int p, const EllBound& ell, int h_order, long long n) {
  require(p >= 1, "clique order must be at least 1");
  require(ell.value >= 1, "l must be at least 1");
  require(h_order >= 1 && n >= 1, "H and n must be non-empty");
  BoundResult r;
  r.kind = BoundKind::kUpper;
  r.value = BigInt(h_order) * (n - 1) + ell.value;
  r.provenance = provenance("union", {{"p", p}, {"ell", ell.value}, {"h_order", h_order}, {"n", n}});
  r.provenance.upper_source = "peel off copies of H greedily, l = r(K_p, H)";
  if (!ell.exact) r.provenance.note = "l is itself an upper bound";
  return r;
}

ThresholdParams goodness_thresholds(int p, const std::vector<int>& parts, int h_order) {
  require(p >= 2, "p must be at least 2");
  require(static_cast<int>(parts.size()) == p, "expected p part sizes");
  require(std::is_sorted(parts.begin(), parts.end()), "part sizes must be sorted ascending");
  require(parts.front() >= 1, "part sizes must be positive");
  require(h_order >= 1, "component order must be at least 1");

  ThresholdParams t;
  t.a_prod = 1;
  for (int i = 0; i + 1 < p; ++i) {
    t.a_sum += parts[i];
    t.a_prod *= parts[i];
    t.b = std::max(t.b, parts[i]);
  }
  const long double la = std::log10(static_cast<long double>(t.a_sum));
  const long double lp = std::log10(static_cast<long double>(p));
  const long double l_prod = log10_big(t.a_prod);

  // delta < min{ 1/(400 a^{h+2} p^4), (100 a^p p^{14p})^{-A} }.
  t.term1_log10 = -(std::log10(400.0L) + (h_order + 2) * la + 4 * lp);
  const long double base_log = 2 + p * la + 14 * p * lp;
  // A can be astronomically large; work with log10(A) when it does not fit.
  const long double prod_value = std::pow(10.0L, l_prod);
  t.term2_log10 = -base_log * prod_value;
  t.delta_log10 = std::min(t.term1_log10, t.term2_log10);
  t.eta_log10 = t.delta_log10 / prod_value;

  const long double denominator_digits = -t.delta_log10;
  if (denominator_digits < kExactDigitCap) {
    const BigInt d1 = BigInt(400) * pow_big(t.a_sum, h_order + 2) * pow_big(p, 4);
    const BigInt base = BigInt(100) * pow_big(t.a_sum, p) * pow_big(p, 14LL * p);
    const BigInt d2 = pow_big(base, static_cast<long long>(t.a_prod));
    const BigInt d = std::max(d1, d2);
    t.delta_denominator = d;
    t.delta_log10 = -log10_big(d);
    t.term1_log10 = -log10_big(d1);
    t.term2_log10 = -log10_big(d2);
    t.eta_log10 = t.delta_log10 / prod_value;
    t.n_min = BigInt(p) * t.b * t.b * d + 1;
    t.n_min_log10 = log10_big(*t.n_min);
  } else {
    t.n_min_log10 = std::log10(static_cast<long double>(p) * t.b * t.b) - t.delta_log10;
  }
  return t;
}

const std::vector<KnownRamseyValue>& known_clique_ramsey_table() {
  static const std::vector<KnownRamseyValue> table = {
      {3, 3, 6, "Greenwood and Gleason 1955"}, {3, 4, 9, "Greenwood and Gleason 1955"},
      {3, 5, 14, "Greenwood and Gleason 1955"}, {3, 6, 18, "Kery 1964"},
      {3, 7, 23, "Kalbfleisch 1966"},          {3, 8, 28, "McKay and Radziszowski 1992"},
      {3, 9, 36, "Grinstead and Roberts 1982"}, {4, 4, 18, "Greenwood and Gleason 1955"},
      {4, 5, 25, "McKay and Radziszowski 1995"},
  };
  return table;
}

std::optional<KnownRamseyValue> known_clique_ramsey(int s, int t) {
  if (s > t) std::swap(s, t);
  if (s == 1) return KnownRamseyValue{s, t, 1, "trivial"};
  if (s == 2) return KnownRamseyValue{s, t, t, "trivial"};
  for (const auto& v : known_clique_ramsey_table())
    if (v.s == s && v.t == t) return v;
  return std::nullopt;
}

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::kLower:
      return "lower";
    case BoundKind::kUpper:
      return "upper";
    case BoundKind::kExact:
      return "exact";
  }
  return "lower";
}

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::kMet:
      return "met";
    case Hypothesis::kNotMet:
      return "not_met";
    case Hypothesis::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string to_string(EllSource s) {
  switch (s) {
    case EllSource::kOracle:
      return "oracle";
    case EllSource::kKnownTable:
      return "known_table";
    case EllSource::kBookUpper:
      return "book_upper";
    case EllSource::kCaller:
      return "caller";
  }
  return "caller";
}

}  // namespace rgl
