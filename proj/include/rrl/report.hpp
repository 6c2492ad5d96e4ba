#pragma once

// Renderings of the library's report structs for the command line: JSON via
// nlohmann (keys sorted, doubles quantized so repeated runs and round-trips
// are byte-identical), one-row CSV, and aligned text tables. Fields that rest
// on unproven claims carry a _conjectured suffix in every format.

#include <string>
#include <vector>

#include <json.hpp>

#include "rrl/consensus.hpp"
#include "rrl/graph.hpp"
#include "rrl/oracle.hpp"
#include "rrl/spectral.hpp"
#include "rrl/textio.hpp"
#include "rrl/verify.hpp"

namespace rrl::report {

using nlohmann::json;
using nlohmann::ordered_json;

inline json num(double v) { return json(textio::quantize15(v)); }

// A report rendered three ways from one field list, so the formats cannot
// drift apart.
struct FieldList {
  std::vector<std::pair<std::string, json>> fields;

  void add(const std::string& key, json value) {
    fields.emplace_back(key, std::move(value));
  }

  json to_json() const {
    json out = json::object();
    for (const auto& [k, v] : fields) out[k] = v;
    return out;
  }

  static std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    if (v.is_null()) return "";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_number_float()) return textio::fmt15(v.get<double>());
    if (v.is_array()) {
      std::string s;
      for (const auto& e : v) {
        if (!s.empty()) s.push_back('|');
        s += scalar_text(e);
      }
      return s;
    }
    return v.dump();
  }

  std::string to_csv() const {
    std::string head, row;
    for (const auto& [k, v] : fields) {
      if (!head.empty()) {
        head.push_back(',');
        row.push_back(',');
      }
      head += k;
      row += scalar_text(v);
    }
    return head + "\n" + row + "\n";
  }

  std::string to_table() const {
    textio::TextTable t;
    t.header = {"field", "value"};
    for (const auto& [k, v] : fields) t.add_row({k, scalar_text(v)});
    return t.render();
  }
};

inline FieldList props_fields(const RingLattice& g, bool exact) {
  const PropertyReport p = basic_properties(g);
  FieldList f;
  f.add("N", p.N);
  f.add("m", p.m);
  f.add("degree", p.degree);
  f.add("edges", p.edges);
  f.add("volume", p.volume);
  f.add("diameter", p.diameter);
  f.add("radius", p.radius);
  f.add("girth_formula", p.girth_formula);
  f.add("chromatic_formula", p.chromatic_formula);
  f.add("circumference", p.circumference);
  f.add("bipartite", p.bipartite);
  f.add("eulerian", p.eulerian);
  f.add("hamiltonian", p.hamiltonian);
  f.add("center_is_all_vertices", p.center_is_all_vertices);
  f.add("periphery_is_all_vertices", p.periphery_is_all_vertices);
  if (exact) {
    const auto [diam, rad] = oracle::exact_diameter_radius(g);
    const int girth = oracle::exact_girth(g);
    f.add("diameter_exact", diam);
    f.add("radius_exact", rad);
    f.add("girth_exact", girth);
    f.add("girth_formula_matches", girth == p.girth_formula);
    if (g.N <= oracle::kChromaticLimit) {
      const int chrom = oracle::exact_chromatic(g);
      f.add("chromatic_exact", chrom);
      f.add("chromatic_formula_matches", chrom == p.chromatic_formula);
    } else {
      f.add("chromatic_exact", nullptr);
      f.add("chromatic_formula_matches", nullptr);
    }
  }
  return f;
}

inline FieldList extremes_fields(const RingLattice& g) {
  const ExtremalReport r = extremal_report(g);
  FieldList f;
  f.add("N", r.N);
  f.add("m", r.m);
  f.add("fiedler", num(r.fiedler));
  f.add("spectral_radius", num(r.spectral_radius));
  f.add("j_star", r.j_star);
  f.add("j_lower", r.j_lower);
  f.add("j_upper_conjectured", r.j_upper_conjectured);
  f.add("j_star_estimate_conjectured", r.j_star_estimate_conjectured);
  f.add("gamma", r.gamma.gamma);
  json ties = json::array();
  for (int t : r.gamma.ties) ties.push_back(t);
  f.add("gamma_ties", ties);
  f.add("gamma_conjectured", gamma_conjectured(g));
  f.add("sigma", num(r.sigma));
  f.add("m_star", num(r.m_star));
  f.add("m_tilde", num(r.m_tilde));
  return f;
}

struct SpectrumRendering {
  SpectrumReport rep;

  json to_json() const {
    json out;
    out["N"] = rep.N;
    out["m"] = rep.m;
    out["kind"] = std::string(kind_name(rep.kind));
    json vals = json::array();
    for (double v : rep.values) vals.push_back(num(v));
    out["values"] = vals;
    return out;
  }

  std::string to_csv() const {
    std::string out = "j,value\n";
    for (std::size_t j = 0; j < rep.values.size(); ++j)
      out += std::to_string(j) + "," + textio::fmt15(rep.values[j]) + "\n";
    return out;
  }

  std::string to_table() const {
    textio::TextTable t;
    t.header = {"j", kind_name(rep.kind)};
    for (std::size_t j = 0; j < rep.values.size(); ++j)
      t.add_row({std::to_string(j), textio::fmt15(rep.values[j])});
    return t.render();
  }
};

inline FieldList consensus_fields(const RingLattice& g,
                                  const consensus::Trajectory& tr,
                                  const consensus::RateEstimate& est) {
  FieldList f;
  f.add("N", tr.N);
  f.add("m", tr.m);
  f.add("steps", tr.steps);
  f.add("sigma", num(essential_spectral_radius(g)));
  f.add("bipartite", tr.bipartite);
  f.add("mean", num(tr.mean));
  f.add("initial_error", num(tr.errors.front()));
  f.add("final_error", num(tr.errors.back()));
  f.add("rate_fitted", est.fitted);
  f.add("rate", num(est.rate));
  f.add("fit_window_begin", est.window_begin);
  f.add("fit_window_end", est.window_end);
  f.add("note", est.note);
  return f;
}

inline json verify_route_json(const VerifyRouteReport& r, double tol) {
  json out;
  out["route"] = r.route;
  out["spectra"] = r.spectra;
  out["max_abs_dev"] = num(r.max_abs_dev);
  out["tol"] = num(tol);
  out["worst_N"] = r.worst_N;
  out["worst_m"] = r.worst_m;
  out["worst_index"] = r.worst_index;
  out["worst_kind"] = std::string(kind_name(r.worst_kind));
  out["pass"] = r.pass;
  return out;
}

// Timing deliberately left out: stdout must not change between identical runs.
inline json verify_json(const VerifyReport& rep) {
  json out;
  out["n_max"] = rep.n_max;
  out["dft"] = verify_route_json(rep.dft, rep.tol);
  out["dense"] = verify_route_json(rep.dense, kDenseTol);
  out["pass"] = rep.pass();
  return out;
}

}  // namespace rrl::report
