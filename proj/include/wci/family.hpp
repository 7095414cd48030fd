/// @file family.hpp
/// @brief Weighted-complete-intersection families, their derived invariants
///        and the purely numerical structural predicates.

#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wci/counting.hpp"
#include "wci/integers.hpp"

namespace wci {

/// A family of weighted complete intersections: the ambient weights
/// (a_0 <= ... <= a_N, all >= 1) and the multidegree (d_1 <= ... <= d_k,
/// all >= 2).  Degree-1 equations are rejected at construction: such a
/// family is always an intersection with a linear cone and is excluded
/// here just as codimension-0 families (the ambient space itself) are.
class Family {
 public:
  static Family create(std::vector<int> weights, std::vector<int> degrees) {
    std::sort(weights.begin(), weights.end());
    std::sort(degrees.begin(), degrees.end());
    if (weights.size() < 2) throw ValidationError("family: need at least two weights");
    if (degrees.empty()) throw ValidationError("family: need at least one degree");
    if (weights.front() < 1) throw ValidationError("family: weights must be positive");
    if (degrees.front() < 2) throw ValidationError("family: degrees must be at least 2");
    if (degrees.size() >= weights.size())
      throw ValidationError("family: codimension must be smaller than the ambient dimension");
    Family f;
    f.weights_ = std::move(weights);
    f.degrees_ = std::move(degrees);
    return f;
  }

  const std::vector<int>& weights() const { return weights_; }
  const std::vector<int>& degrees() const { return degrees_; }

  int ambient_index() const { return static_cast<int>(weights_.size()) - 1; }  // N
  int codimension() const { return static_cast<int>(degrees_.size()); }        // k
  int dimension() const { return ambient_index() - codimension(); }            // n
  int max_degree() const { return degrees_.back(); }                           // d

  long long weight_sum() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0ll);
  }
  long long degree_sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0ll);
  }
  /// Anticanonical degree i_X = sum a_i - sum d_j.  For n >= 2 this is the
  /// Fano index of a smooth member; for n = 1 it is not (the conic has
  /// i_X = 1 while its Fano index is 2), so no operation here claims to
  /// return the Fano index of a curve.
  long long anticanonical_degree() const { return weight_sum() - degree_sum(); }

  bool all_unit_weights() const { return weights_.back() == 1; }

  auto operator<=>(const Family&) const = default;

 private:
  Family() = default;
  std::vector<int> weights_;
  std::vector<int> degrees_;
};

enum class Trichotomy { Fano, CalabiYau, GeneralType };

inline const char* to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Fano: return "Fano";
    case Trichotomy::CalabiYau: return "CalabiYau";
    default: return "GeneralType";
  }
}

/// Derived integer invariants of a family.
struct InvariantSummary {
  int N = 0;  ///< ambient index, weights are a_0..a_N
  int k = 0;  ///< codimension
  int n = 0;  ///< dimension N - k
  int l = 0;  ///< top index with a_l = 1 (so l+1 = number of unit weights); -1 if none
  int s = 0;  ///< number of degrees strictly below the top degree
  int d = 0;  ///< top degree d_k
  long long i_X = 0;
  std::optional<int> p_X;      ///< ceil(i_X / d); present only when i_X > 0
  std::optional<long long> r;  ///< p_X * d - i_X; present only when i_X > 0

  Trichotomy label() const {
    if (i_X > 0) return Trichotomy::Fano;
    if (i_X == 0) return Trichotomy::CalabiYau;
    return Trichotomy::GeneralType;
  }
};

inline InvariantSummary summarize(const Family& f) {
  InvariantSummary inv;
  inv.N = f.ambient_index();
  inv.k = f.codimension();
  inv.n = f.dimension();
  inv.l = -1;
  for (size_t i = 0; i < f.weights().size() && f.weights()[i] == 1; ++i)
    inv.l = static_cast<int>(i);
  inv.d = f.max_degree();
  inv.s = 0;
  for (int d : f.degrees())
    if (d < inv.d) ++inv.s;
  inv.i_X = f.anticanonical_degree();
  if (inv.i_X > 0) {
    inv.p_X = static_cast<int>(ceil_div(inv.i_X, inv.d));
    inv.r = static_cast<long long>(*inv.p_X) * inv.d - inv.i_X;
  }
  return inv;
}

inline long long canonical_degree(const Family& f) { return -f.anticanonical_degree(); }

inline Trichotomy trichotomy_label(const Family& f) { return summarize(f).label(); }

/// Well-formedness of the weighted projective space: deleting any one weight
/// leaves a set with gcd 1.
inline bool is_wps_well_formed(const std::vector<int>& weights) {
  const size_t n = weights.size();
  if (n < 2) return false;
  std::vector<long long> prefix(n + 1, 0), suffix(n + 1, 0);
  for (size_t i = 0; i < n; ++i) prefix[i + 1] = gcd_ll(prefix[i], weights[i]);
  for (size_t i = n; i-- > 0;) suffix[i] = gcd_ll(suffix[i + 1], weights[i]);
  for (size_t i = 0; i < n; ++i)
    if (gcd_ll(prefix[i], suffix[i + 1]) != 1) return false;
  return true;
}

inline bool is_wps_well_formed(const Family& f) { return is_wps_well_formed(f.weights()); }

/// Intersection with a linear cone: some degree equals some weight.
inline bool is_linear_cone(const Family& f) {
  for (int d : f.degrees())
    if (std::binary_search(f.weights().begin(), f.weights().end(), d)) return true;
  return false;
}

/// For every choice of t weights whose gcd is delta > 1 there must be t
/// degrees whose gcd is divisible by delta (necessary for a smooth well
/// formed member to exist).  The gcds of weight subsets are exactly the
/// divisors delta > 1 of some weight with gcd{a_i : delta | a_i} = delta,
/// and a set of t degrees has gcd divisible by delta iff each of them does,
/// so the exact check is per such divisor.
inline bool gcd_degree_condition(const Family& f) {
  std::set<long long> candidates;
  for (int a : f.weights()) {
    if (a <= 1) continue;
    for (long long p = 1; p * p <= a; ++p) {
      if (a % p == 0) {
        if (p > 1) candidates.insert(p);
        candidates.insert(a / p);
      }
    }
  }
  for (long long delta : candidates) {
    long long subset_gcd = 0;
    int weight_count = 0;
    for (int a : f.weights()) {
      if (a % delta == 0) {
        subset_gcd = gcd_ll(subset_gcd, a);
        ++weight_count;
      }
    }
    if (weight_count == 0 || subset_gcd != delta) continue;
    int degree_count = 0;
    for (int d : f.degrees())
      if (d % delta == 0) ++degree_count;
    if (degree_count < weight_count) return false;
  }
  return true;
}

/// Necessary bounds for a smooth well formed Fano member that is not a
/// linear cone: a_N <= N, k <= n, l >= k and i_X <= n.  Pruning predicate,
/// not sufficient.
inline bool smooth_fano_necessary(const Family& f) {
  const InvariantSummary inv = summarize(f);
  return f.weights().back() <= inv.N && inv.k <= inv.n && inv.l >= inv.k && inv.i_X <= inv.n;
}

// --- canonical text form -----------------------------------------------
//
// "P(a_0,...,a_N) : d_1,...,d_k" with the repetition shorthand "1^4,3"
// accepted on input and emitted on output.  "P^N" is accepted as an alias
// for P(1^{N+1}).

namespace detail {

inline std::vector<int> parse_int_list(const std::string& text, const std::string& context) {
  std::vector<int> out;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> long long {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw ParseError(context + ": expected integer at position " + std::to_string(start));
    return std::stoll(text.substr(start, pos - start));
  };
  while (true) {
    long long value = read_int();
    long long repeat = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      repeat = read_int();
      skip_ws();
    }
    if (value <= 0 || value > 1000000 || repeat <= 0 || repeat > 4096)
      throw ParseError(context + ": entries must be in 1..10^6 with repetition counts in 1..4096");
    for (long long i = 0; i < repeat; ++i) out.push_back(static_cast<int>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw ParseError(context + ": expected ',' at position " + std::to_string(pos));
    ++pos;
  }
  return out;
}

inline std::string format_int_list(const std::vector<int>& values) {
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < values.size()) {
    size_t j = i;
    while (j < values.size() && values[j] == values[i]) ++j;
    if (!first) os << ',';
    first = false;
    os << values[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

}  // namespace detail

inline Family parse_family(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("family: expected \"P(...) : d_1,...,d_k\" (missing ':')");
  std::string space = text.substr(0, colon);
  std::string degrees = text.substr(colon + 1);

  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  space = trim(space);
  degrees = trim(degrees);
  if (space.empty() || space[0] != 'P')
    throw ParseError("family: ambient space must start with 'P' at position 0");

  std::vector<int> weights;
  if (space.size() >= 2 && space[1] == '^') {
    long long n = 0;
    try {
      n = std::stoll(space.substr(2));
    } catch (const std::exception&) {
      throw ParseError("family: malformed P^N at position 1");
    }
    if (n < 1 || n > 4096) throw ParseError("family: P^N needs N in 1..4096");
    weights.assign(static_cast<size_t>(n) + 1, 1);
  } else {
    size_t open = space.find('(');
    size_t close = space.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw ParseError("family: expected P(...) at position 1");
    weights = detail::parse_int_list(space.substr(open + 1, close - open - 1), "weights");
  }
  std::vector<int> degree_list = detail::parse_int_list(degrees, "degrees");
  return Family::create(std::move(weights), std::move(degree_list));
}

inline std::string format_family(const Family& f) {
  return "P(" + detail::format_int_list(f.weights()) + ") : " +
         detail::format_int_list(f.degrees());
}

}  // namespace wci
