#include "diamonds/gfd.hpp"

#include <mutex>

#include "diamonds/dyck.hpp"
#include "diamonds/error.hpp"

namespace diamonds {

namespace {

BigInt factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt power(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

const DescentPoly kX = DescentPoly::monomial(1);
const DescentPoly kOnePlusX{1, 1};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::recursion: return "recursion";
    case Method::brute_force: return "brute_force";
    case Method::zero_rule: return "zero_rule";
    case Method::singleton_rule: return "singleton_rule";
  }
  return "unknown";
}

BigInt total_count(int v, int d) {
  require(v >= 3 && d >= 1, "total_count needs v >= 3 and d >= 1");
  BigInt denom = power(BigInt(v), d) * power(BigInt(v - 1), d);
  BigInt num = factorial(v * d);
  if (num % denom != 0) throw DomainError("total_count: inexact division");
  return num / denom;
}

BigInt fuss_catalan_count(int v, int d) {
  require(v >= 1 && d >= 1, "fuss_catalan_count needs v >= 1 and d >= 1");
  BigInt num = binomial(d * (v + 1), d);
  return num / (v * d + 1);
}

// ---------------------------------------------------------------- GfdTable

DescentPoly GfdTable::alpha(int v, int j, int d) { return cell(Kind::alpha, v, j, d); }
DescentPoly GfdTable::beta(int v, int j, int d) { return cell(Kind::beta, v, j, d); }

std::size_t GfdTable::cached_cells() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

DescentPoly GfdTable::cell(Kind kind, int v, int j, int d) {
  require(v >= 4, "the alpha/beta recursions need v >= 4");
  require(d >= 1, "the alpha/beta recursions need d >= 1");
  require(j >= 1 && j <= v, "partial size j must lie in 1..v");
  const Key key{kind, v, j, d};
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  // Computed outside the lock: the recursion re-enters cell().
  DescentPoly value = d == 1 ? base_case(kind, v, j) : compute(kind, v, j, d);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

DescentPoly GfdTable::base_case(Kind kind, int v, int j) {
  const PatternSet avoid = kind == Kind::alpha ? PatternSet::parse("231")
                                               : PatternSet::parse("231:321");
  const SystemShape shape =
      j == v ? SystemShape::make(v, 1) : SystemShape::make(v, 0, j);
  return descent_poly_brute(shape, avoid, limits_);
}

DescentPoly GfdTable::compute(Kind kind, int v, int j, int d) {
  auto f = [&](int jj, int dd) { return cell(kind, v, jj, dd); };
  const bool a = kind == Kind::alpha;

  // The largest label on the top of full diamond i (1 <= i <= d-1): the
  // part before it is f(v-1, i), the part after it sees shape (j, d-i).
  DescentPoly on_tops;
  for (int i = 1; i <= d - 1; ++i) {
    on_tops += a ? f(v - 1, i) * f(j, d - i) : f(v - 1, i);
  }
  on_tops = on_tops * kX;

  if (j == 1) return f(v, d - 1) + on_tops;
  if (j == v) return f(v - 1, d) + on_tops;

  // Largest label inside the partial diamond, with g - 1 vertices behind
  // it. g = 1 puts it last and creates no descent from it.
  DescentPoly inside = a ? f(j - 1, d) * f(1, 1) : f(j - 1, d);
  DescentPoly later;
  for (int g = 2; g <= j - 1; ++g) {
    later += a ? f(j - g, d) * f(g, 1) : f(j - g, d);
  }
  return inside + later * kX + on_tops;
}

GfdTable& default_gfd_table() {
  static GfdTable table;
  return table;
}

DescentPoly alpha_gfd(int v, int j, int d) { return default_gfd_table().alpha(v, j, d); }
DescentPoly beta_gfd(int v, int j, int d) { return default_gfd_table().beta(v, j, d); }

// ----------------------------------------------------------- closed forms

const char* to_string(ClosedFamily f) {
  switch (f) {
    case ClosedFamily::f132_213: return "132_213";
    case ClosedFamily::f132_312: return "132_312";
    case ClosedFamily::f132_321: return "132_321";
    case ClosedFamily::f231_312: return "231_312";
    case ClosedFamily::f132_213_321: return "132_213_321";
    case ClosedFamily::f231_312_321: return "231_312_321";
  }
  return "unknown";
}

PatternSet patterns_of(ClosedFamily f) {
  switch (f) {
    case ClosedFamily::f132_213: return PatternSet::parse("132:213");
    case ClosedFamily::f132_312: return PatternSet::parse("132:312");
    case ClosedFamily::f132_321: return PatternSet::parse("132:321");
    case ClosedFamily::f231_312: return PatternSet::parse("231:312");
    case ClosedFamily::f132_213_321: return PatternSet::parse("132:213:321");
    case ClosedFamily::f231_312_321: return PatternSet::parse("231:312:321");
  }
  return {};
}

FamilyResult closed_family_gfd(ClosedFamily family, int v, int d) {
  const int min_v = family == ClosedFamily::f231_312_321 ? 3 : 4;
  require(v >= min_v, std::string("family ") + to_string(family) + " needs v >= " +
                          std::to_string(min_v));
  require(d >= 1, "closed forms need d >= 1");
  FamilyResult r;
  r.method = Method::closed_form;
  switch (family) {
    case ClosedFamily::f132_213:
    case ClosedFamily::f132_312:
      r.poly = kOnePlusX.pow(d - 1);
      r.count = power(BigInt(2), d - 1);
      break;
    case ClosedFamily::f132_321: {
      const long long pairs = static_cast<long long>(d) * (d - 1);
      if (pairs % 2 != 0) throw DomainError("d(d-1) is odd");
      const BigInt one_descent = BigInt(v) * (pairs / 2);
      r.poly = DescentPoly::one() + DescentPoly::monomial(1, one_descent);
      r.count = 1 + one_descent;
      break;
    }
    case ClosedFamily::f231_312:
      r.poly = kOnePlusX.pow((v - 2) * d - 1);
      r.count = power(BigInt(2), (v - 2) * d - 1);
      break;
    case ClosedFamily::f132_213_321:
      r.poly = DescentPoly::one() + DescentPoly::monomial(1, d - 1);
      r.count = d;
      break;
    case ClosedFamily::f231_312_321: {
      // Per diamond: choose k pairwise disjoint adjacent swaps among the
      // v-2 middles. Between diamonds: swap a top with the next bottom or
      // not.
      std::vector<BigInt> per_diamond;
      for (int k = 0; k <= (v - 2) / 2; ++k) per_diamond.push_back(binomial(v - 2 - k, k));
      r.poly = kOnePlusX.pow(d - 1) * DescentPoly(per_diamond).pow(d);
      r.count = r.poly->eval_one();
      break;
    }
  }
  return r;
}

int four_plus_count(const PatternSet& set) {
  return set.contains(Pattern{1, 2, 3}) ? 0 : 1;
}

DescentPoly fuss_catalan_gfd(int v, int d) { return corners_polynomial(v, d); }

// --------------------------------------------------------------- dispatch

namespace {

std::optional<ClosedFamily> closed_family_for(const PatternSet& set) {
  for (auto f : {ClosedFamily::f132_213, ClosedFamily::f132_312, ClosedFamily::f132_321,
                 ClosedFamily::f231_312, ClosedFamily::f132_213_321,
                 ClosedFamily::f231_312_321}) {
    const PatternSet canon = patterns_of(f);
    if (set == canon || set == apply_symmetry(canon, Symmetry::reverse_complement)) {
      return f;
    }
  }
  return std::nullopt;
}

bool is_one_of(const PatternSet& set, std::initializer_list<const char*> names) {
  for (const char* name : names) {
    if (set == PatternSet::parse(name)) return true;
  }
  return false;
}

bool includes(const PatternSet& set, const char* subset) {
  const PatternSet wanted = PatternSet::parse(subset);
  for (const auto& p : wanted.patterns()) {
    if (!set.contains(p)) return false;
  }
  return true;
}

FamilyResult brute(int v, int d, const PatternSet& avoid, const SearchLimits& limits) {
  FamilyResult r;
  r.poly = descent_poly_brute(SystemShape::make(v, d), avoid, limits);
  r.count = r.poly->eval_one();
  r.method = Method::brute_force;
  return r;
}

FamilyResult constant(int c, Method m) {
  FamilyResult r;
  r.count = c;
  r.poly = DescentPoly::constant(c);
  r.method = m;
  return r;
}

}  // namespace

FamilyResult dispatch(int v, int d, const PatternSet& avoid, const SearchLimits& limits) {
  require(v >= 3 && d >= 1, "dispatch needs v >= 3 and d >= 1");

  if (avoid.empty()) {
    FamilyResult r;
    r.count = total_count(v, d);
    r.method = Method::closed_form;
    return r;
  }
  // Every diamond holds bottom < middle < top, an occurrence of 123.
  if (avoid.contains(Pattern{1, 2, 3})) return constant(0, Method::zero_rule);
  if (!avoid.all_length_three()) return brute(v, d, avoid, limits);
  if (avoid.size() >= 4) return constant(four_plus_count(avoid), Method::singleton_rule);
  // Avoiding 132 and 231 pins the largest remaining label to the end at
  // every step, leaving only the identity; 213 and 312 is its mirror.
  if (includes(avoid, "132:231") || includes(avoid, "213:312")) {
    return constant(1, Method::singleton_rule);
  }

  if (auto family = closed_family_for(avoid)) {
    const int min_v = *family == ClosedFamily::f231_312_321 ? 3 : 4;
    if (v >= min_v) return closed_family_gfd(*family, v, d);
  }
  if (v >= 4) {
    if (is_one_of(avoid, {"132", "213"})) {
      FamilyResult r;
      r.count = fuss_catalan_count(v, d);
      r.poly = fuss_catalan_gfd(v, d);
      r.method = Method::closed_form;
      return r;
    }
    if (is_one_of(avoid, {"231", "312"})) {
      FamilyResult r;
      r.poly = default_gfd_table().alpha(v, v, d);
      r.count = r.poly->eval_one();
      r.method = Method::recursion;
      return r;
    }
    if (is_one_of(avoid, {"231:321", "312:321"})) {
      FamilyResult r;
      r.poly = default_gfd_table().beta(v, v, d);
      r.count = r.poly->eval_one();
      r.method = Method::recursion;
      return r;
    }
  }
  return brute(v, d, avoid, limits);
}

}  // namespace diamonds
