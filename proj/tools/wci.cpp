// Command-line surface for batch use and CI.
//
// Exit codes: 0 success, 2 parse error, 3 validation error, 4 capacity
// exceeded, 5 data mismatch (verify-tables, k3scan --baseline).

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "wci/search.hpp"
#include "wci/version.hpp"

namespace {

using namespace wci;

struct GlobalFlags {
  uint64_t seed = kDefaultSeed;
  int prime_index = 0;
  int trials = 3;
  int jobs = 2;
  std::string format = "text";
  std::string checkpoint_dir;

  HodgeOptions hodge() const {
    HodgeOptions h;
    h.seed = seed;
    h.prime_index = prime_index;
    h.trials = trials;
    return h;
  }
};

void print_record_text(const FamilyRecord& rec, std::ostream& os) {
  os << rec.key() << "\n";
  os << "  N=" << rec.inv.N << " k=" << rec.inv.k << " n=" << rec.inv.n << " l=" << rec.inv.l
     << " s=" << rec.inv.s << " d=" << rec.inv.d << " i_X=" << rec.inv.i_X;
  if (rec.inv.p_X) os << " p_X=" << *rec.inv.p_X << " r=" << *rec.inv.r;
  os << "  [" << to_string(rec.inv.label()) << "]\n";
  os << "  regularity: wps_well_formed=" << (rec.regularity.wps_well_formed ? "yes" : "no")
     << " linear_cone=" << (rec.regularity.linear_cone ? "yes" : "no")
     << " wci_well_formed=" << to_string(rec.regularity.wci_well_formed)
     << " quasi_smooth=" << to_string(rec.regularity.quasi_smooth)
     << " smooth=" << to_string(rec.regularity.smooth) << "\n";
  os << "  middle row:";
  for (long long v : rec.row.values) os << ' ' << v;
  os << "\n  hodge level: ";
  if (rec.labels.hodge_level)
    os << *rec.labels.hodge_level;
  else
    os << "-inf";
  os << "  minimal=" << (rec.labels.q_homologically_minimal ? "yes" : "no")
     << " diagonal=" << (rec.labels.diagonal ? "yes" : "no")
     << " curve_type=" << (rec.labels.curve_type ? "yes" : "no") << " cy_type=";
  if (rec.labels.cy_type)
    os << "m=" << *rec.labels.cy_type;
  else
    os << "none";
  os << "\n";
}

void print_diamond(const HodgeDiamond& d, std::ostream& os) {
  for (int p = 0; p <= d.n; ++p) {
    os << " ";
    for (int q = 0; q <= d.n; ++q) os << " " << d.at(p, q);
    os << "\n";
  }
}

int run_analyze(const GlobalFlags& flags, const std::string& family_text) {
  const Family f = parse_family(family_text);
  const InvariantSummary inv = summarize(f);
  const RegularityReport rep = regularity_report(f);
  if (flags.format == "json") {
    Json j;
    j["family"] = format_family(f);
    j["invariants"] = to_json(inv);
    j["regularity"] = to_json(rep);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << format_family(f) << "\n";
  std::cout << "  N=" << inv.N << " k=" << inv.k << " n=" << inv.n << " l=" << inv.l
            << " s=" << inv.s << " d=" << inv.d << " i_X=" << inv.i_X;
  if (inv.p_X) std::cout << " p_X=" << *inv.p_X << " r=" << *inv.r;
  std::cout << "  [" << to_string(inv.label()) << "]\n";
  std::cout << "  wps_well_formed=" << (rep.wps_well_formed ? "yes" : "no")
            << " linear_cone=" << (rep.linear_cone ? "yes" : "no")
            << " wci_well_formed=" << to_string(rep.wci_well_formed)
            << " quasi_smooth=" << to_string(rep.quasi_smooth)
            << " smooth=" << to_string(rep.smooth) << "\n";
  return 0;
}

int run_hodge(const GlobalFlags& flags, const std::string& family_text) {
  const Family f = parse_family(family_text);
  const FamilyRecord rec = compute_record(f, flags.hodge());
  if (flags.format == "json") {
    std::cout << to_json(rec).dump() << "\n";
    return 0;
  }
  std::cout << rec.key() << "\n";
  std::cout << "middle row:";
  for (long long v : rec.row.values) std::cout << ' ' << v;
  std::cout << "\n";
  print_diamond(hodge_diamond(rec.row), std::cout);
  return 0;
}

int run_classify(const GlobalFlags& flags, const std::string& family_text) {
  const Family f = parse_family(family_text);
  const FamilyRecord rec = compute_record(f, flags.hodge());
  if (flags.format == "json") {
    Json j;
    j["family"] = rec.key();
    j["labels"] = to_json(rec.labels);
    std::cout << j.dump() << "\n";
    return 0;
  }
  std::cout << rec.key() << ": hodge level ";
  if (rec.labels.hodge_level)
    std::cout << *rec.labels.hodge_level;
  else
    std::cout << "-inf";
  if (rec.labels.q_homologically_minimal) std::cout << ", homologically minimal";
  if (rec.labels.diagonal) std::cout << ", diagonal";
  if (rec.labels.curve_type) std::cout << ", curve type";
  if (rec.labels.cy_type) std::cout << ", Calabi-Yau type m=" << *rec.labels.cy_type;
  std::cout << "\n";
  return 0;
}

int emit_records(const GlobalFlags& flags, const std::vector<FamilyRecord>& records) {
  if (flags.format == "csv") {
    std::cout << csv_header() << "\n";
    for (const auto& r : records) std::cout << to_csv(r) << "\n";
  } else if (flags.format == "json") {
    for (const auto& r : records) std::cout << to_json(r).dump() << "\n";
  } else {
    for (const auto& r : records) print_record_text(r, std::cout);
  }
  return 0;
}

int run_enumerate(const GlobalFlags& flags, int dim) {
  const EnumerationResult res = enumerate_smooth_fano(dim, flags.hodge());
  for (const auto& f : res.needs_review)
    std::cerr << "needs review (smoothness undetermined): " << format_family(f) << "\n";
  return emit_records(flags, res.records);
}

int run_k3scan(const GlobalFlags& flags, int N, int max_weight, const std::string& baseline,
               bool pattern_only, bool quiet) {
  K3ScanOptions opts;
  opts.hodge = flags.hodge();
  opts.jobs = flags.jobs;
  opts.checkpoint_dir = flags.checkpoint_dir;
  if (pattern_only) opts.selection = K3Selection::HodgePattern;
  if (!quiet)
    opts.progress = [](size_t done, size_t total) {
      if (done % 256 == 0 || done == total)
        std::cerr << "\rshards " << done << "/" << total << std::flush;
      if (done == total) std::cerr << "\n";
    };
  const K3ScanResult res = enumerate_quasismooth_k3_hypersurfaces(N, max_weight, opts);
  for (const auto& e : res.capacity_errors) std::cerr << "capacity exceeded: " << e << "\n";
  std::cerr << "tuples " << res.tuples_scanned << ", candidates checked "
            << res.candidates_checked << ", families " << res.records.size() << "\n";
  emit_records(flags, res.records);
  if (!baseline.empty()) {
    std::ifstream in(baseline);
    if (!in) throw ValidationError("k3scan: cannot open baseline file " + baseline);
    std::set<std::string> expected;
    std::string line;
    while (std::getline(in, line))
      if (!line.empty()) expected.insert(line);
    std::set<std::string> got;
    for (const auto& r : res.records) got.insert(r.key());
    bool mismatch = false;
    for (const auto& k : got)
      if (!expected.count(k)) {
        std::cerr << "extra (not in baseline): " << k << "\n";
        mismatch = true;
      }
    for (const auto& k : expected)
      if (!got.count(k)) {
        std::cerr << "missing (in baseline only): " << k << "\n";
        mismatch = true;
      }
    if (mismatch) return 5;
    std::cerr << "baseline match: " << got.size() << " families\n";
  }
  return 0;
}

struct TableRow {
  const char* family;
  long long middle;
};

// Two- and three-dimensional reference data (del Pezzo surfaces and Fano
// threefolds) keyed by the canonical family string.
constexpr TableRow kSurfaceTable[] = {
    {"P(1^2,2,3) : 6", 9}, {"P(1^3,2) : 4", 8}, {"P(1^4) : 3", 7},
    {"P(1^5) : 2^2", 6},   {"P(1^4) : 2", 2},
};
constexpr TableRow kThreefoldTable[] = {
    {"P(1^4,3) : 6", 52},  {"P(1^5) : 4", 30},   {"P(1^6) : 2,3", 20},
    {"P(1^7) : 2^3", 14},  {"P(1^3,2,3) : 6", 21}, {"P(1^4,2) : 4", 10},
    {"P(1^5) : 3", 5},     {"P(1^6) : 2^2", 2},  {"P(1^5) : 2", 0},
};

int run_verify_tables(const GlobalFlags& flags) {
  int failures = 0;
  auto check_dim = [&](int n, const TableRow* rows, size_t count) {
    const EnumerationResult res = enumerate_smooth_fano(n, flags.hodge());
    std::set<std::string> found;
    for (const auto& rec : res.records) {
      found.insert(rec.key());
      bool known = false;
      for (size_t i = 0; i < count; ++i) {
        if (rec.key() == rows[i].family) {
          known = true;
          const long long middle = rec.row.full(n % 2 == 0 ? n / 2 : (n - 1) / 2);
          if (middle != rows[i].middle) {
            std::cout << "MISMATCH " << rec.key() << ": middle " << middle << " expected "
                      << rows[i].middle << "\n";
            ++failures;
          }
        }
      }
      if (!known) {
        std::cout << "MISMATCH dimension " << n << ": unexpected family " << rec.key() << "\n";
        ++failures;
      }
    }
    for (size_t i = 0; i < count; ++i)
      if (!found.count(rows[i].family)) {
        std::cout << "MISMATCH dimension " << n << ": missing family " << rows[i].family << "\n";
        ++failures;
      }
    if (!res.needs_review.empty()) {
      for (const auto& f : res.needs_review)
        std::cout << "MISMATCH dimension " << n << ": unreviewed candidate " << format_family(f)
                  << "\n";
      ++failures;
    }
    std::cout << "dimension " << n << ": " << res.records.size() << " families "
              << (failures == 0 ? "ok" : "CHECK FAILED") << "\n";
  };

  {
    const EnumerationResult res = enumerate_smooth_fano(1, flags.hodge());
    if (res.records.size() != 1 || res.records[0].key() != "P(1^3) : 2" ||
        !res.needs_review.empty()) {
      std::cout << "MISMATCH dimension 1: expected exactly the conic\n";
      ++failures;
    } else {
      std::cout << "dimension 1: 1 family ok\n";
    }
  }
  check_dim(2, kSurfaceTable, std::size(kSurfaceTable));
  check_dim(3, kThreefoldTable, std::size(kThreefoldTable));

  // classification lists: surfaces are diagonal; threefolds are of curve
  // type with the quadric as the only diagonal (and only minimal) one
  for (const auto& rec : enumerate_smooth_fano(2, flags.hodge()).records) {
    if (!rec.labels.diagonal || rec.labels.curve_type) {
      std::cout << "MISMATCH " << rec.key() << ": surface labels\n";
      ++failures;
    }
  }
  {
    int diagonal = 0, minimal = 0;
    for (const auto& rec : enumerate_smooth_fano(3, flags.hodge()).records) {
      if (!rec.labels.curve_type) {
        std::cout << "MISMATCH " << rec.key() << ": threefolds are of curve type\n";
        ++failures;
      }
      diagonal += rec.labels.diagonal ? 1 : 0;
      minimal += rec.labels.q_homologically_minimal ? 1 : 0;
    }
    if (diagonal != 1 || minimal != 1) {
      std::cout << "MISMATCH dimension 3: expected one diagonal, one minimal family\n";
      ++failures;
    }
  }

  // spot checks of the named classification values
  struct Spot {
    const char* family;
    int m;
  } spots[] = {{"P(1^6) : 3", 2}, {"P(1^6,2) : 4", 3}, {"P(1^8) : 2,3", 3}, {"P(1^9) : 3", 3}};
  for (const auto& s : spots) {
    const FamilyRecord rec = compute_record(parse_family(s.family), flags.hodge());
    if (!rec.labels.cy_type || *rec.labels.cy_type != s.m) {
      std::cout << "MISMATCH " << s.family << ": expected Calabi-Yau type m=" << s.m << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all tables verified\n" : "verification FAILED\n");
  return failures == 0 ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted complete intersections: Hodge numbers, regularity, classification"};
  app.set_version_flag("--version", wci::kVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "random seed for the rank computations")
      ->envname("WCI_SEED");
  app.add_option("--prime", flags.prime_index, "prime index (0..2) for the rank computations")
      ->envname("WCI_PRIME");
  app.add_option("--trials", flags.trials, "random members per dimension computation")
      ->envname("WCI_TRIALS");
  app.add_option("--jobs", flags.jobs, "worker threads for enumerations")->envname("WCI_JOBS");
  app.add_option("--format", flags.format, "output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("WCI_FORMAT");
  app.add_option("--checkpoint-dir", flags.checkpoint_dir, "shard checkpoint directory (k3scan)")
      ->envname("WCI_CHECKPOINT_DIR");

  std::string family_text;
  auto* analyze = app.add_subcommand("analyze", "invariants and regularity of a family");
  analyze->add_option("family", family_text, "family, e.g. \"P(1^4,3) : 6\"")->required();
  auto* hodge = app.add_subcommand("hodge", "middle Hodge row and full diamond");
  hodge->add_option("family", family_text)->required();
  auto* classify = app.add_subcommand("classify", "Hodge-theoretic type labels");
  classify->add_option("family", family_text)->required();

  int dim = 3;
  auto* enumerate = app.add_subcommand("enumerate", "all smooth Fano families of a dimension");
  enumerate->add_option("--dim", dim, "dimension")->required();

  int scan_N = 5, scan_weight = 50;
  std::string baseline;
  bool pattern_only = false, quiet = false;
  auto* k3scan = app.add_subcommand("k3scan", "quasi-smooth K3-type hypersurface scan");
  k3scan->add_option("--N", scan_N, "ambient index (odd, >= 5)")->required();
  k3scan->add_option("--max-weight", scan_weight, "weight bound")->required();
  k3scan->add_option("--baseline", baseline, "compare against a reference family list");
  k3scan->add_flag("--pattern-only", pattern_only,
                   "keep every hypersurface with the K3 Hodge pattern (unbounded superset)");
  k3scan->add_flag("--quiet", quiet, "suppress progress output");

  auto* verify = app.add_subcommand("verify-tables", "re-derive the reference tables");
  (void)verify;

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(flags, family_text);
    if (hodge->parsed()) return run_hodge(flags, family_text);
    if (classify->parsed()) return run_classify(flags, family_text);
    if (enumerate->parsed()) return run_enumerate(flags, dim);
    if (k3scan->parsed())
      return run_k3scan(flags, scan_N, scan_weight, baseline, pattern_only, quiet);
    if (verify->parsed()) return run_verify_tables(flags);
  } catch (const wci::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const wci::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 4;
  } catch (const wci::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
