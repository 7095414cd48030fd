/// @file record.hpp
/// @brief Serialized classification results: one JSON record per family,
///        plus the CSV summary.  Field order is fixed so enumeration output
///        is byte-identical across runs.

#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "wci/classify.hpp"
#include "wci/version.hpp"

namespace wci {

using Json = nlohmann::ordered_json;

struct Provenance {
  uint64_t seed = kDefaultSeed;
  uint32_t prime = kPrimes[0];
  int trials = 3;
  std::string tool_version = kVersion;
};

struct FamilyRecord {
  Family family;
  InvariantSummary inv;
  RegularityReport regularity;
  MiddleRow row;
  TypeLabels labels;
  Provenance provenance;

  explicit FamilyRecord(Family f) : family(std::move(f)) {}

  std::string key() const { return format_family(family); }
};

inline Json to_json(const InvariantSummary& inv) {
  Json j;
  j["N"] = inv.N;
  j["k"] = inv.k;
  j["n"] = inv.n;
  j["l"] = inv.l;
  j["s"] = inv.s;
  j["d"] = inv.d;
  j["i_X"] = inv.i_X;
  if (inv.p_X)
    j["p_X"] = *inv.p_X;
  else
    j["p_X"] = nullptr;
  if (inv.r)
    j["r"] = *inv.r;
  else
    j["r"] = nullptr;
  j["label"] = to_string(inv.label());
  return j;
}

inline Json to_json(const RegularityReport& rep) {
  Json j;
  j["wps_well_formed"] = rep.wps_well_formed;
  j["linear_cone"] = rep.linear_cone;
  j["wci_well_formed"] = to_string(rep.wci_well_formed);
  j["quasi_smooth"] = to_string(rep.quasi_smooth);
  j["smooth"] = to_string(rep.smooth);
  return j;
}

inline Json to_json(const TypeLabels& labels) {
  Json j;
  if (labels.hodge_level)
    j["hodge_level"] = *labels.hodge_level;
  else
    j["hodge_level"] = "-inf";
  j["q_homologically_minimal"] = labels.q_homologically_minimal;
  j["diagonal"] = labels.diagonal;
  j["curve_type"] = labels.curve_type;
  if (labels.cy_type)
    j["cy_type"] = *labels.cy_type;
  else
    j["cy_type"] = nullptr;
  return j;
}

inline Json to_json(const FamilyRecord& rec) {
  Json j;
  j["family"] = rec.key();
  j["weights"] = rec.family.weights();
  j["degrees"] = rec.family.degrees();
  j["invariants"] = to_json(rec.inv);
  j["regularity"] = to_json(rec.regularity);
  j["middle_row"] = rec.row.values;
  const HodgeDiamond diamond = hodge_diamond(rec.row);
  j["diamond"] = diamond.table;  // row-major (n+1) x (n+1)
  j["labels"] = to_json(rec.labels);
  Json prov;
  prov["seed"] = rec.provenance.seed;
  prov["prime"] = rec.provenance.prime;
  prov["trials"] = rec.provenance.trials;
  prov["tool_version"] = rec.provenance.tool_version;
  j["provenance"] = prov;
  return j;
}

inline std::string csv_header() {
  return "family,n,i_X,p_X,hodge_level,minimal,diagonal,curve_type,cy_type,middle_row";
}

inline std::string to_csv(const FamilyRecord& rec) {
  std::ostringstream os;
  os << '"' << rec.key() << '"' << ',' << rec.inv.n << ',' << rec.inv.i_X << ',';
  if (rec.inv.p_X) os << *rec.inv.p_X;
  os << ',';
  if (rec.labels.hodge_level)
    os << *rec.labels.hodge_level;
  else
    os << "-inf";
  os << ',' << (rec.labels.q_homologically_minimal ? 1 : 0) << ','
     << (rec.labels.diagonal ? 1 : 0) << ',' << (rec.labels.curve_type ? 1 : 0) << ',';
  if (rec.labels.cy_type) os << *rec.labels.cy_type;
  os << ",\"";
  for (size_t i = 0; i < rec.row.values.size(); ++i) {
    if (i) os << ' ';
    os << rec.row.values[i];
  }
  os << '"';
  return os.str();
}

}  // namespace wci
