/// @file search.hpp
/// @brief Enumeration drivers: smooth Fano families of a given dimension, and
///        the quasi-smooth K3-type hypersurface scan under a weight bound.

#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "wci/record.hpp"

namespace wci {

inline FamilyRecord compute_record(const Family& f, const HodgeOptions& opts = {}) {
  FamilyRecord rec(f);
  rec.inv = summarize(f);
  rec.regularity = regularity_report(f);
  const BigradedContext ctx = BigradedContext::make(f);
  rec.row = middle_row(ctx, opts);
  // structural classification only applies to certified-smooth members;
  // everything else is labeled from the computed row
  if (rec.regularity.smooth == Verdict::Certified && !rec.regularity.linear_cone)
    rec.labels = labels_structural(f, rec.regularity);
  else
    rec.labels = labels_from_row(rec.row);
  rec.provenance.seed = opts.seed;
  rec.provenance.prime = prime_by_index(opts.prime_index);
  rec.provenance.trials = opts.trials;
  return rec;
}

struct EnumerationResult {
  std::vector<FamilyRecord> records;      ///< certified-smooth families
  std::vector<Family> needs_review;       ///< survived every filter, smoothness undetermined
};

/// All smooth well formed Fano weighted complete intersections of dimension n
/// (no linear cones), within the index/weight/codimension bounds that any
/// smooth member must satisfy: a_N <= N, k <= n, at least k+1 unit weights,
/// 0 < i_X <= n.
inline EnumerationResult enumerate_smooth_fano(int n, const HodgeOptions& opts = {}) {
  if (n < 1) throw ValidationError("enumerate_smooth_fano: dimension must be >= 1");
  EnumerationResult result;

  for (int k = 1; k <= n; ++k) {
    const int N = n + k;
    std::vector<int> weights(static_cast<size_t>(N) + 1, 1);

    // positions k+1..N hold the free weights, each in [previous, N]
    std::vector<int> degrees(static_cast<size_t>(k), 2);
    std::function<void(int)> choose_degrees;
    std::function<void(int)> choose_weights = [&](int pos) {
      if (pos > N) {
        choose_degrees(0);
        return;
      }
      const int low = weights[static_cast<size_t>(pos) - 1];
      for (int a = low; a <= N; ++a) {
        weights[static_cast<size_t>(pos)] = a;
        choose_weights(pos + 1);
      }
    };
    long long weight_sum = 0;
    choose_degrees = [&](int pos) {
      if (pos == 0) weight_sum = std::accumulate(weights.begin(), weights.end(), 0ll);
      if (pos == k) {
        const long long i_X = weight_sum - std::accumulate(degrees.begin(), degrees.end(), 0ll);
        if (i_X < 1 || i_X > n) return;
        Family f = Family::create(weights, degrees);
        if (is_linear_cone(f)) return;
        if (!is_wps_well_formed(f)) return;
        if (!smooth_fano_necessary(f)) return;
        if (!gcd_degree_condition(f)) return;
        if (wci_well_formed(f) != Verdict::Certified) return;
        switch (smooth_general_member(f)) {
          case Verdict::Certified:
            result.records.push_back(compute_record(f, opts));
            break;
          case Verdict::Undetermined:
            result.needs_review.push_back(f);
            break;
          case Verdict::Refuted:
            break;
        }
        return;
      }
      const int low = pos == 0 ? 2 : degrees[static_cast<size_t>(pos) - 1];
      // remaining degrees are at least `d` each; stop once Fano is impossible
      for (int d = low;; ++d) {
        long long partial = 0;
        for (int j = 0; j < pos; ++j) partial += degrees[static_cast<size_t>(j)];
        if (partial + static_cast<long long>(d) * (k - pos) >= weight_sum) break;
        degrees[static_cast<size_t>(pos)] = d;
        choose_degrees(pos + 1);
      }
    };
    choose_weights(k + 1);
  }

  auto key = [](const FamilyRecord& r) {
    return std::make_tuple(r.inv.n, r.inv.N, r.family.weights(), r.family.degrees());
  };
  std::sort(result.records.begin(), result.records.end(),
            [&](const FamilyRecord& a, const FamilyRecord& b) { return key(a) < key(b); });
  std::sort(result.needs_review.begin(), result.needs_review.end());
  return result;
}

// --- quasi-smooth K3-type hypersurface scan -------------------------------

/// Which hypersurfaces the K3 scan keeps.
///
/// IndexCondition (default) is the convention behind the published counts:
/// besides quasi-smoothness and well-formedness it requires i_X to be exactly
/// ((n-2)/2) * d, so the window-edge piece is spanned by a power of the
/// auxiliary variable, and 2*a_N <= d, so no coordinate is confined to appear
/// linearly in the general member.  Both conditions force the K3 Hodge
/// pattern, which the scan still verifies.
///
/// HodgePattern keeps every quasi-smooth well formed Fano non-cone
/// hypersurface whose middle row has the K3 shape (edge value 1, vanishing
/// below the window).  This superset grows without bound as the weight bound
/// grows; it is exposed for exploration, not for the reference counts.
enum class K3Selection { IndexCondition, HodgePattern };

struct K3ScanOptions {
  HodgeOptions hodge;
  int jobs = 1;
  K3Selection selection = K3Selection::IndexCondition;
  std::string checkpoint_dir;  ///< empty: no checkpointing
  std::function<void(size_t shards_done, size_t shards_total)> progress;
};

struct K3ScanResult {
  std::vector<FamilyRecord> records;   ///< sorted by (weights, degree)
  std::vector<std::string> capacity_errors;
  unsigned long long tuples_scanned = 0;
  unsigned long long candidates_pruned = 0;   ///< (tuple, d) pairs rejected cheaply
  unsigned long long candidates_checked = 0;  ///< reached the exact-criterion stage
};

namespace detail {

inline constexpr unsigned long long kSaturated = ~0ull;

/// Saturating count table; saturation marks candidates for the big-int path.
inline void saturating_count_table(const std::vector<int>& weights, long long max_degree,
                                   std::vector<unsigned long long>& table) {
  table.assign(static_cast<size_t>(max_degree) + 1, 0);
  table[0] = 1;
  for (int w : weights)
    for (long long e = w; e <= max_degree; ++e) {
      unsigned long long& dst = table[static_cast<size_t>(e)];
      const unsigned long long add = table[static_cast<size_t>(e - w)];
      if (dst == kSaturated || add == kSaturated || dst > kSaturated - add)
        dst = kSaturated;
      else
        dst += add;
    }
}

struct ShardOutput {
  std::vector<std::string> hits;  // canonical family strings, generation order
  std::vector<std::string> capacity_errors;
  unsigned long long tuples = 0, pruned = 0, checked = 0;
};

/// Scan every tuple extending the fixed (a_0, a_1) prefix.
inline void scan_shard(int N, int bound, int a0, int a1, K3Selection selection,
                       ShardOutput& out) {
  const int n = N - 1;
  const int q0 = (n - 2) / 2;
  std::vector<int> a(static_cast<size_t>(N) + 1);
  a[0] = a0;
  a[1] = a1;

  std::vector<unsigned long long> counts;
  std::vector<std::pair<int, int>> values;
  std::vector<std::vector<char>> singleton_residues;  // per distinct value
  std::vector<ReachSet> reach;

  std::function<void(int)> recurse = [&](int pos) {
    if (pos <= N) {
      for (int v = a[static_cast<size_t>(pos) - 1]; v <= bound; ++v) {
        a[static_cast<size_t>(pos)] = v;
        recurse(pos + 1);
      }
      return;
    }
    ++out.tuples;
    const long long sum = std::accumulate(a.begin(), a.end(), 0ll);
    if (sum < 3) return;

    // candidate degrees: the index condition pins d = sum/(q0+1); the pattern
    // mode walks every Fano degree with a non-negative window-edge piece
    long long d_low, d_high;
    if (selection == K3Selection::IndexCondition) {
      if (sum % (q0 + 1) != 0) return;
      d_low = d_high = sum / (q0 + 1);
      if (d_low < 2 || 2ll * a[static_cast<size_t>(N)] > d_low) return;
    } else {
      d_low = std::max<long long>(2, ceil_div(sum, q0 + 1));
      d_high = sum - 1;
    }
    if (!is_wps_well_formed(a)) return;

    values.clear();
    for (int w : a) {
      if (!values.empty() && values.back().first == w)
        ++values.back().second;
      else
        values.emplace_back(w, 1);
    }

    // allowed residues of d mod v for the singleton criterion: 0, or u mod v
    // for some other weight value u (<= d, checked later by the full test)
    singleton_residues.assign(values.size(), {});
    for (size_t i = 0; i < values.size(); ++i) {
      const int v = values[i].first;
      singleton_residues[i].assign(static_cast<size_t>(v), 0);
      singleton_residues[i][0] = 1;
      for (size_t j = 0; j < values.size(); ++j)
        if (j != i) singleton_residues[i][static_cast<size_t>(values[j].first % v)] = 1;
    }

    const long long max_e = static_cast<long long>(q0 + 1) * d_high - sum;
    if (max_e < 0) return;
    saturating_count_table(a, max_e, counts);
    // the series evaluation below works in signed 64-bit; its intermediates
    // are bounded by the monomial counts, so one check covers the tuple
    bool counts_in_range = true;
    for (unsigned long long c : counts)
      counts_in_range = counts_in_range && c < (1ull << 62);
    bool reach_ready = false;

    for (long long d = d_low; d <= d_high; ++d) {
      bool ok = true;
      for (size_t i = 0; i < values.size() && ok; ++i)
        ok = singleton_residues[i][static_cast<size_t>(d % values[i].first)];
      if (!ok) {
        ++out.pruned;
        continue;
      }
      bool cone = false;
      for (const auto& [v, mult] : values) cone = cone || v == d;
      if (cone) {
        ++out.pruned;
        continue;
      }
      const long long i_X = sum - d;
      const long long edge = static_cast<long long>(q0 + 1) * d - sum;  // q0*d - i_X
      const unsigned long long cols = counts[static_cast<size_t>(edge)];
      if (cols == 0) {
        ++out.pruned;
        continue;
      }
      if (!counts_in_range || cols == kSaturated) {
        out.capacity_errors.push_back(format_family(Family::create(a, {static_cast<int>(d)})));
        continue;
      }
      unsigned long long rows = 0;
      for (int w : a) {
        const long long re = edge - d + w;
        if (re >= 0) rows += counts[static_cast<size_t>(re)];
      }
      if (cols > rows + 1) {  // dim >= cols - rows > 1: cannot be K3 type
        ++out.pruned;
        continue;
      }

      ++out.checked;
      if (!reach_ready) {
        reach = subset_reach_sets(values, sum - 1);
        reach_ready = true;
      }

      // exact quasi-smoothness over value subsets (maximal index subsets bind)
      bool quasi_smooth = true;
      for (size_t mask = 1; quasi_smooth && mask < (size_t(1) << values.size()); ++mask) {
        if (reach[mask].test(d)) continue;
        int size = 0, qualifying = 0;
        for (size_t i = 0; i < values.size(); ++i) {
          if ((mask >> i) & 1)
            size += values[i].second;
          else if (reach[mask].test(d - values[i].first))
            qualifying += values[i].second;
        }
        quasi_smooth = qualifying >= size;
      }
      if (!quasi_smooth) continue;

      // well-formedness of the hypersurface inside the ambient space
      bool well_formed = true;
      for (size_t mask = 1; well_formed && mask < (size_t(1) << values.size()); ++mask) {
        long long g = 0;
        int size = 0;
        for (size_t i = 0; i < values.size(); ++i)
          if ((mask >> i) & 1) {
            g = gcd_ll(g, values[i].first);
            size += values[i].second;
          }
        if (g <= 1) continue;
        const int rep = reach[mask].test(d) ? 1 : 0;
        well_formed = size - 1 - rep <= n - 2;
      }
      if (!well_formed) continue;

      // exact window dimensions from the Jacobian-ring Hilbert series
      const auto series = milnor_series<long long>(a, static_cast<int>(d), edge);
      bool k3 = series[static_cast<size_t>(edge)] == 1;
      for (int q = 1; k3 && q < q0; ++q) {
        const long long e_q = static_cast<long long>(q) * d - i_X;
        if (e_q >= 0) k3 = series[static_cast<size_t>(e_q)] == 0;
      }
      if (k3) out.hits.push_back(format_family(Family::create(a, {static_cast<int>(d)})));
    }
  };
  recurse(2);
}

}  // namespace detail

/// Quasi-smooth well formed Fano hypersurfaces of K3 type in P(a_0..a_N),
/// a_i <= weight_bound, N odd.  Deterministic sharded scan: shards are the
/// (a_0, a_1) prefixes, outputs merge in shard order, so the result is
/// byte-identical for fixed inputs regardless of the worker count.
inline K3ScanResult enumerate_quasismooth_k3_hypersurfaces(int N, int weight_bound,
                                                           const K3ScanOptions& options = {}) {
  if (N < 5 || N % 2 == 0)
    throw ValidationError("k3 scan: ambient index must be odd and at least 5");
  if (weight_bound < 1) throw ValidationError("k3 scan: weight bound must be >= 1");

  std::vector<std::pair<int, int>> shards;
  for (int a0 = 1; a0 <= weight_bound; ++a0)
    for (int a1 = a0; a1 <= weight_bound; ++a1) shards.emplace_back(a0, a1);

  std::vector<detail::ShardOutput> outputs(shards.size());
  std::vector<char> loaded(shards.size(), 0);

  namespace fs = std::filesystem;
  const bool checkpointing = !options.checkpoint_dir.empty();
  auto shard_stem = [&](size_t s) {
    return fs::path(options.checkpoint_dir) /
           ("shard_" + std::to_string(shards[s].first) + "_" + std::to_string(shards[s].second));
  };
  if (checkpointing) {
    fs::create_directories(options.checkpoint_dir);
    for (size_t s = 0; s < shards.size(); ++s) {
      const fs::path done = shard_stem(s).string() + ".done";
      if (!fs::exists(done)) continue;
      std::ifstream in(shard_stem(s).string() + ".txt");
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) outputs[s].hits.push_back(line);
      loaded[s] = 1;
    }
  }

  std::atomic<size_t> next{0};
  std::atomic<size_t> done_count{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    while (true) {
      const size_t s = next.fetch_add(1);
      if (s >= shards.size()) return;
      if (!loaded[s]) {
        detail::scan_shard(N, weight_bound, shards[s].first, shards[s].second,
                           options.selection, outputs[s]);
        if (checkpointing) {
          std::ofstream hit_file(shard_stem(s).string() + ".txt", std::ios::trunc);
          for (const auto& h : outputs[s].hits) hit_file << h << '\n';
          hit_file.close();
          std::ofstream done_file(shard_stem(s).string() + ".done", std::ios::trunc);
          done_file << outputs[s].hits.size() << '\n';
        }
      }
      const size_t finished = done_count.fetch_add(1) + 1;
      if (options.progress) {
        std::lock_guard<std::mutex> lock(progress_mutex);
        options.progress(finished, shards.size());
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  K3ScanResult result;
  for (size_t s = 0; s < shards.size(); ++s) {
    result.tuples_scanned += outputs[s].tuples;
    result.candidates_pruned += outputs[s].pruned;
    result.candidates_checked += outputs[s].checked;
    for (auto& e : outputs[s].capacity_errors) result.capacity_errors.push_back(std::move(e));
    for (const auto& hit : outputs[s].hits)
      result.records.push_back(compute_record(parse_family(hit), options.hodge));
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const FamilyRecord& x, const FamilyRecord& y) {
              return std::make_pair(x.family.weights(), x.family.degrees()) <
                     std::make_pair(y.family.weights(), y.family.degrees());
            });
  return result;
}

}  // namespace wci
