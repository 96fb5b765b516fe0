#include "hopfkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "hopfkit/datum_io.hpp"
#include "hopfkit/errors.hpp"
#include "hopfkit/identities.hpp"
#include "hopfkit/oracles.hpp"
#include "hopfkit/presets.hpp"
#include "hopfkit/repr.hpp"

namespace hopfkit::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Tsv };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json data = Json::object();
  std::optional<Table> table;
  int code = kExitOk;
};

// ------------------------------------------------------------------ output

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void print_table(const Table& t, std::ostream& out) {
  for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "\t" : "") << t.columns[k];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "\t" : "") << row[k];
    out << "\n";
  }
}

void emit(const Report& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << r.data.dump(2) << "\n";
      break;
    case Format::Tsv:
      if (r.table) {
        print_table(*r.table, out);
      } else {
        for (const auto& [k, v] : r.data.items()) out << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      break;
    case Format::Text:
      for (const auto& [k, v] : r.data.items()) {
        if (r.table && v.is_array() && !v.empty() && v.front().is_object()) continue;  // shown as the table
        flatten(v, k, out);
      }
      if (r.table) print_table(*r.table, out);
      break;
  }
}

// ------------------------------------------------------------------ inputs

struct Source {
  std::string path;
  std::string preset;
};

void add_source(CLI::App* sub, Source& s) {
  sub->add_option("datum", s.path, "Datum JSON file");
  std::string names;
  for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
  sub->add_option("--preset", s.preset, "Built-in datum: " + names);
}

LoadedDatum load(const Source& s) {
  if (!s.preset.empty() && !s.path.empty()) throw InvalidDatum("give either a datum file or --preset, not both");
  if (!s.preset.empty()) {
    LoadedDatum d;
    d.reduced = preset(s.preset);
    return d;
  }
  if (s.path.empty()) throw InvalidDatum("no datum given; pass a file or --preset");
  return load_datum_file(s.path);
}

/// Reduced datum behind a source; YD data are reduced through their linking.
ReducedDatum load_reduced(const Source& s) {
  LoadedDatum d = load(s);
  if (d.reduced) {
    validate_reduced(*d.reduced);
    return *d.reduced;
  }
  validate_yd(*d.yd);
  return to_reduced(*d.yd, d.lambda).datum;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

Json one_based(const std::vector<std::vector<std::size_t>>& groups) {
  Json out = Json::array();
  for (const auto& g : groups) {
    Json row = Json::array();
    for (auto v : g) row.push_back(v + 1);
    out.push_back(row);
  }
  return out;
}

Json one_based(const std::set<std::size_t>& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(v + 1);
  return out;
}

std::string index_string(const SubgroupIndex& idx) { return idx.is_finite() ? idx.value->get_str() : "infinite"; }

Json braiding_json(const BraidingMatrix& q, const ParameterSpace& params) {
  Json out = Json::array();
  for (const auto& row : q) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_string(params));
    out.push_back(r);
  }
  return out;
}

Json cartan_json(const BraidingMatrix& q) {
  Json out;
  try {
    CartanData c = detect_cartan(q);
    out["matrix"] = c.a;
    out["symmetrizer"] = c.d;
    out["finite_type"] = c.finite_type;
    out["components"] = one_based(c.components);
    out["types"] = c.component_types;
  } catch (const NotCartan& e) {
    out["error"] = std::string("not of Cartan type: ") + e.what();
  } catch (const NotSymmetrizable& e) {
    out["error"] = std::string("not symmetrizable: ") + e.what();
  }
  return out;
}

Json analyze_reduced(const ReducedDatum& d) {
  Json out;
  out["name"] = d.name;
  out["theta"] = d.theta();
  out["group_rank"] = d.group_rank;
  out["parameters"] = d.params.names();
  const BraidingMatrix q = d.braiding();
  out["braiding"] = braiding_json(q, d.params);
  out["classes"] = one_based(equivalence_classes(q));
  out["cartan"] = cartan_json(q);
  const ReductivityReport red = regularity_and_reductivity(d);
  Json r;
  r["regular"] = red.regular;
  r["gamma2_index"] = index_string(red.gamma2_index);
  r["gamma_reductive"] = red.gamma_reductive;
  r["reductive"] = red.reductive;
  if (red.cartan_invertible) r["cartan_invertible"] = *red.cartan_invertible;
  out["reductivity"] = r;
  if (!out["cartan"].contains("error")) {
    out["dj2"] = check_dj2(d).has_value();
    out["pre_nichols_assumption"] = AlgebraHandle(d).pre_nichols_assumption();
  }
  out["nli"] = check_nli(d);
  return out;
}

std::vector<std::vector<int>> parse_cartan(const std::string& text) {
  std::vector<std::vector<int>> a;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<int> r;
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        r.push_back(std::stoi(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
      } catch (const std::logic_error&) {
        throw InvalidDatum("bad Cartan entry '" + cell + "'");
      }
    }
    a.push_back(std::move(r));
  }
  return a;
}

// ----------------------------------------------------------------- commands

Report datum_validate(const Source& s) {
  LoadedDatum d = load(s);
  Report r;
  if (d.reduced) {
    validate_reduced(*d.reduced);
    r.data["kind"] = "reduced";
    r.data["theta"] = d.reduced->theta();
    r.data["cartan"] = cartan_json(d.reduced->braiding());
  } else {
    const YDReport yd = validate_yd(*d.yd);
    const LinkingReport link = validate_linking(*d.yd, d.lambda);
    r.data["kind"] = "yd";
    r.data["theta"] = d.yd->theta();
    r.data["generic"] = yd.generic;
    r.data["perfect_linking"] = link.perfect;
    r.data["cartan"] = cartan_json(d.yd->braiding());
  }
  r.data["valid"] = true;
  return r;
}

Report datum_analyze(const Source& s) {
  LoadedDatum d = load(s);
  Report r;
  if (d.reduced) {
    validate_reduced(*d.reduced);
    r.data["kind"] = "reduced";
    r.data.update(analyze_reduced(*d.reduced));
    return r;
  }
  const YDDatum& yd = *d.yd;
  const YDReport rep = validate_yd(yd);
  r.data["kind"] = "yd";
  r.data["theta"] = yd.theta();
  r.data["group_rank"] = yd.group_rank;
  r.data["parameters"] = yd.params.names();
  r.data["braiding"] = braiding_json(yd.braiding(), yd.params);
  r.data["classes"] = one_based(rep.classes);
  r.data["cartan"] = cartan_json(yd.braiding());
  const LinkingReport link = validate_linking(yd, d.lambda);
  Json l;
  l["linked"] = one_based(link.linked);
  l["unlinked"] = one_based(link.unlinked);
  l["perfect"] = link.perfect;
  l["condition_holds"] = link.condition_holds;
  r.data["linking"] = l;
  const PointedReductivityReport pr = pointed_reductivity(yd, d.lambda);
  Json p;
  p["perfect"] = pr.perfect;
  p["gamma2_index"] = index_string(pr.gamma2_index);
  p["gamma_reductive"] = pr.gamma_reductive;
  p["reductive"] = pr.reductive;
  r.data["reductivity"] = p;
  if (link.perfect && link.condition_holds) r.data["reduced"] = analyze_reduced(to_reduced(yd, d.lambda).datum);
  return r;
}

Report algebra_dims(const Source& s, int max_degree, const std::string& side_name) {
  if (side_name != "plus" && side_name != "minus") throw InvalidDatum("--side must be plus or minus");
  const Side side = side_name == "plus" ? Side::Plus : Side::Minus;
  AlgebraHandle h(load_reduced(s));
  if (max_degree > h.max_degree())
    throw DegreeCapExceeded("requested degree " + std::to_string(max_degree) + " exceeds the cap " +
                            std::to_string(h.max_degree()) + " (set HOPFKIT_MAX_DEGREE)");
  Report r;
  r.data["side"] = side_name;
  r.data["max_degree"] = max_degree;
  r.data["pre_nichols_assumption"] = h.pre_nichols_assumption();
  Table t{{"alpha", "dim", "certified"}, {}};
  Json rows = Json::array();
  for (const auto& alpha : degrees_up_to(h.theta(), 0, max_degree)) {
    const GradedSlice& sl = h.slice(side, alpha);
    t.rows.push_back({join(alpha.coords), std::to_string(sl.dim()), sl.certified ? "yes" : "no"});
    rows.push_back({{"alpha", alpha.coords}, {"dim", sl.dim()}, {"certified", sl.certified}});
  }
  r.data["dims"] = rows;
  r.table = std::move(t);
  return r;
}

Report algebra_gram(const Source& s, const std::vector<int>& degree) {
  AlgebraHandle h(load_reduced(s));
  if (degree.size() != h.theta()) throw RankMismatch("--degree needs " + std::to_string(h.theta()) + " entries");
  const DegreeVector alpha(degree);
  const auto& params = h.datum().params;
  const GradedSlice& minus = h.slice(Side::Minus, alpha);
  const GradedSlice& plus = h.slice(Side::Plus, alpha);
  const Matrix<Scalar> g = h.gram(alpha);
  Report r;
  r.data["alpha"] = degree;
  Json rows_words = Json::array(), cols_words = Json::array(), matrix = Json::array();
  Table t;
  t.columns.push_back("");
  for (const auto& w : plus.canonical) {
    cols_words.push_back(word_to_string(w, Side::Plus));
    t.columns.push_back(word_to_string(w, Side::Plus));
  }
  for (std::size_t k = 0; k < g.rows(); ++k) {
    rows_words.push_back(word_to_string(minus.canonical[k], Side::Minus));
    Json row = Json::array();
    std::vector<std::string> cells{word_to_string(minus.canonical[k], Side::Minus)};
    for (std::size_t l = 0; l < g.cols(); ++l) {
      row.push_back(g(k, l).to_string(params));
      cells.push_back(g(k, l).to_string(params));
    }
    matrix.push_back(row);
    t.rows.push_back(std::move(cells));
  }
  r.data["rows"] = rows_words;
  r.data["columns"] = cols_words;
  r.data["matrix"] = matrix;
  r.data["determinant"] = g.rows() ? determinant(g).to_string(params) : "1";
  r.table = std::move(t);
  return r;
}

Report algebra_check(const Source& s, const IdentityOptions& options) {
  AlgebraHandle h(load_reduced(s));
  Report r;
  r.data["seed"] = options.seed;
  Table t{{"identity", "status", "cases", "detail"}, {}};
  Json rows = Json::array();
  bool ok = true;
  for (const auto& c : check_identities(h, options)) {
    const std::string status = c.skipped ? "skipped" : c.ok ? "pass" : "FAIL";
    ok = ok && (c.ok || c.skipped);
    t.rows.push_back({c.name, status, std::to_string(c.cases), c.detail});
    rows.push_back({{"identity", c.name}, {"status", status}, {"cases", c.cases}, {"detail", c.detail}});
  }
  r.data["all_passed"] = ok;
  r.data["checks"] = rows;
  r.table = std::move(t);
  r.code = ok ? kExitOk : kExitAudit;
  return r;
}

Weight character_for(const AlgebraHandle& h, const std::vector<int>& m) {
  if (m.size() != h.theta()) throw RankMismatch("--m needs " + std::to_string(h.theta()) + " entries");
  return dominant_character(h, m);
}

std::optional<int> as_depth(int depth) { return depth >= 0 ? std::optional<int>(depth) : std::nullopt; }

Report module_simple(const Source& s, const std::vector<int>& m, bool table, int depth) {
  AlgebraHandle h(load_reduced(s));
  const HighestWeightModule L = simple_module(h, character_for(h, m), as_depth(depth));
  const auto& params = h.datum().params;
  const RelationsAudit audit = audit_relations(L.module);
  Report r;
  r.data["m"] = m;
  r.data["highest_weight"] = L.highest.to_string(params);
  r.data["dim"] = L.module.total_dim();
  r.data["depth"] = L.depth;
  r.data["truncated"] = L.module.truncated_depth.has_value();
  r.data["relations_audit"] = audit.ok;
  if (!audit.ok) r.data["audit_failures"] = audit.failures;
  if (!L.module.truncated_depth) r.data["integrable"] = is_integrable(L.module);
  if (table) {
    Table t{{"alpha", "weight", "multiplicity"}, {}};
    Json rows = Json::array();
    for (std::size_t k = 0; k < L.module.weight_count(); ++k) {
      const std::string w = L.module.weight(k).to_string(params);
      t.rows.push_back({join(L.degrees[k].coords), w, std::to_string(L.module.dim(k))});
      rows.push_back({{"alpha", L.degrees[k].coords}, {"weight", w}, {"multiplicity", L.module.dim(k)}});
    }
    r.data["weights"] = rows;
    r.table = std::move(t);
  }
  r.code = audit.ok ? kExitOk : kExitAudit;
  return r;
}

Json summand_json(const Summand& sm, const ParameterSpace& params) {
  return {{"m", sm.m}, {"multiplicity", sm.multiplicity}, {"dim", sm.simple_dim}, {"highest_weight", sm.highest.to_string(params)}};
}

Report module_tensor(const Source& s, const std::vector<int>& m1, const std::vector<int>& m2, bool do_decompose) {
  AlgebraHandle h(load_reduced(s));
  const HighestWeightModule a = simple_module(h, character_for(h, m1));
  const HighestWeightModule b = simple_module(h, character_for(h, m2));
  const WeightModule t = tensor(a.module, b.module);
  const auto& params = h.datum().params;
  const RelationsAudit audit = audit_relations(t);
  Report r;
  r.data["m1"] = m1;
  r.data["m2"] = m2;
  r.data["dim"] = t.total_dim();
  r.data["relations_audit"] = audit.ok;
  if (!audit.ok) {
    r.data["audit_failures"] = audit.failures;
    r.code = kExitAudit;
    return r;
  }
  if (do_decompose) {
    const DecompositionReport rep = decompose(h, t);
    Json summands = Json::array();
    Table tab{{"m", "multiplicity", "dim", "highest_weight"}, {}};
    std::string pretty;
    for (const auto& sm : rep.summands) {
      summands.push_back(summand_json(sm, params));
      tab.rows.push_back({join(sm.m), std::to_string(sm.multiplicity), std::to_string(sm.simple_dim),
                          sm.highest.to_string(params)});
      pretty += (pretty.empty() ? "" : " + ") + (sm.multiplicity > 1 ? std::to_string(sm.multiplicity) + "*" : "") +
                "L(" + join(sm.m) + ")";
    }
    r.data["decomposition"] = pretty;
    r.data["module_dim"] = rep.module_dim;
    r.data["audited_dim"] = rep.audited_dim;
    r.data["direct"] = rep.direct;
    r.data["summands"] = summands;
    r.table = std::move(tab);
  }
  return r;
}

Report module_casimir(const Source& s, const std::vector<int>& m, const std::vector<int>& m2, bool allow_degenerate) {
  AlgebraHandle h(load_reduced(s));
  const HighestWeightModule a = simple_module(h, character_for(h, m));
  std::optional<HighestWeightModule> b;
  if (!m2.empty()) b = simple_module(h, character_for(h, m2));
  const WeightModule module = b ? tensor(a.module, b->module) : a.module;
  const auto& params = h.datum().params;
  const DecompositionReport rep = decompose(h, module);
  const GFunction g(h, rep.summands.front().highest, allow_degenerate);
  const auto eig = casimir_eigenvalues(module, rep, g);
  Report r;
  r.data["m"] = m;
  if (b) r.data["m2"] = m2;
  r.data["dim"] = module.total_dim();
  r.data["anchor"] = g.anchor().to_string(params);
  Table t{{"m", "highest_weight", "G", "scalar_on_span"}, {}};
  Json rows = Json::array();
  bool ok = true;
  std::set<UnitScalar> values;
  for (std::size_t k = 0; k < eig.size(); ++k) {
    const auto& e = eig[k];
    ok = ok && e.scalar_on_span;
    values.insert(e.expected);
    const Summand* sm = nullptr;
    for (const auto& candidate : rep.summands)
      if (candidate.highest == e.highest) sm = &candidate;
    const std::string mm = sm ? join(sm->m) : "";
    t.rows.push_back({mm, e.highest.to_string(params), e.expected.to_string(params), e.scalar_on_span ? "yes" : "no"});
    rows.push_back({{"m", sm ? Json(sm->m) : Json()},
                    {"highest_weight", e.highest.to_string(params)},
                    {"G", e.expected.to_string(params)},
                    {"scalar_on_span", e.scalar_on_span}});
  }
  r.data["all_scalar"] = ok;
  r.data["pairwise_distinct"] = values.size() == eig.size();
  r.data["eigenvalues"] = rows;
  r.table = std::move(t);
  r.code = ok ? kExitOk : kExitAudit;
  return r;
}

/// Smallest nonzero n ∈ N^θ of height ≤ bound with Π q_ii^{n_i} = 1.
std::optional<DegreeVector> nli_witness(const ReducedDatum& d, int bound) {
  for (const auto& n : degrees_up_to(d.theta(), 1, bound)) {
    UnitScalar prod;
    for (std::size_t i = 0; i < d.theta(); ++i) prod *= d.q(i, i).pow(n[i]);
    if (prod.is_one()) return n;
  }
  return std::nullopt;
}

Report gcheck_counterexample(const AlgebraHandle& h, bool allow_degenerate) {
  const ReducedDatum& d = h.datum();
  const auto& params = d.params;
  Report r;
  r.data["nli"] = check_nli(d);
  const auto witness = nli_witness(d, 2 * static_cast<int>(d.theta()) + 2);
  if (!witness) {
    r.data["verdict"] = "no N-linear relation among the q_ii found; no counterexample";
    return r;
  }
  r.data["relation"] = witness->coords;
  // χ' = χ_n and χ = χ'·χ_n for the relation Π q_ii^{n_i} = 1
  std::vector<Character> basis(d.chi.begin(), d.chi.end());
  const Weight lower = character_power(basis, *witness);
  const Weight upper = lower * character_power(basis, *witness);
  const auto m_lower = is_dominant(h, lower);
  const auto m_upper = is_dominant(h, upper);
  r.data["chi_prime"] = {{"weight", lower.to_string(params)}, {"dominant", m_lower.has_value()}};
  r.data["chi"] = {{"weight", upper.to_string(params)}, {"dominant", m_upper.has_value()}};
  if (m_lower) r.data["chi_prime"]["m"] = *m_lower;
  if (m_upper) r.data["chi"]["m"] = *m_upper;
  r.data["chi_prime_leq_chi"] = weight_leq(h, lower, upper);
  if (!allow_degenerate && !check_nli(d)) {
    r.data["verdict"] = "G is not defined without --allow-degenerate-G when the q_ii are N-linearly dependent";
    r.code = kExitInvalid;
    return r;
  }
  const GFunction g(h, lower, allow_degenerate);
  const UnitScalar g_lower = g(lower), g_upper = g(upper);
  r.data["G_chi_prime"] = g_lower.to_string(params);
  r.data["G_chi"] = g_upper.to_string(params);
  const bool separates = !(g_lower == g_upper);
  r.data["G_separates"] = separates;
  r.data["verdict"] = separates ? "G separates chi' < chi"
                                : "distinct comparable dominant weights with equal G: separation fails without N-linear independence";
  return r;
}

Report gcheck_separation(const AlgebraHandle& h, int bound, bool allow_degenerate) {
  const ReducedDatum& d = h.datum();
  const auto& params = d.params;
  Report r;
  r.data["nli"] = check_nli(d);
  // dominant weights λ with m ≤ bound, grouped by G's coset
  std::vector<std::pair<std::vector<int>, Weight>> dominant;
  for (const auto& a : degrees_up_to(d.theta(), 0, bound * static_cast<int>(d.theta()))) {
    if (std::any_of(a.coords.begin(), a.coords.end(), [&](int x) { return x > bound; })) continue;
    try {
      dominant.emplace_back(a.coords, dominant_character(h, a.coords));
    } catch (const NoSolution&) {
    }
  }
  std::size_t pairs = 0, recursion_cases = 0;
  bool separated = true, recursion = true;
  Table t{{"m_lower", "m_upper", "G_lower", "G_upper"}, {}};
  for (const auto& [m_hi, hi] : dominant) {
    const GFunction g(h, hi, allow_degenerate);
    for (std::size_t i = 0; i < d.theta(); ++i) {
      ++recursion_cases;
      const GroupElement kl = d.K[i] * d.L[i];
      if (!(g(hi) == g(hi * d.chi[i].inverse()) * hi(kl))) recursion = false;
    }
    for (const auto& [m_lo, lo] : dominant) {
      if (lo == hi || !weight_leq(h, lo, hi)) continue;
      ++pairs;
      if (g(lo) == g(hi)) {
        separated = false;
        t.rows.push_back({join(m_lo), join(m_hi), g(lo).to_string(params), g(hi).to_string(params)});
      }
    }
  }
  r.data["dominant_weights"] = dominant.size();
  r.data["comparable_pairs"] = pairs;
  r.data["recursion_cases"] = recursion_cases;
  r.data["recursion_holds"] = recursion;
  r.data["separates"] = separated;
  if (!t.rows.empty()) r.table = std::move(t);
  r.code = recursion && (separated || allow_degenerate) ? kExitOk : kExitAudit;
  return r;
}

Report gcheck(const Source& s, bool counterexample, bool allow_degenerate, int bound) {
  AlgebraHandle h(load_reduced(s));
  return counterexample ? gcheck_counterexample(h, allow_degenerate) : gcheck_separation(h, bound, allow_degenerate);
}

struct OracleArgs {
  Source source;
  std::string cartan;
  std::vector<int> vec;
  int m = 0, n = 0;
};

oracle::RootSystem oracle_system(const OracleArgs& a) {
  oracle::CartanMatrix c;
  if (!a.cartan.empty()) {
    c = parse_cartan(a.cartan);
  } else {
    c = detect_cartan(load_reduced(a.source).braiding()).a;
  }
  try {
    return oracle::root_system(c);
  } catch (const std::invalid_argument& e) {
    throw InvalidDatum(e.what());
  }
}

Report oracle_roots(const OracleArgs& a) {
  const auto rs = oracle_system(a);
  Report r;
  r.data["cartan"] = rs.cartan;
  r.data["symmetrizer"] = rs.d;
  r.data["positive_roots"] = rs.positive.size();
  Table t{{"root", "height"}, {}};
  Json roots = Json::array();
  for (const auto& b : rs.positive) {
    int height = 0;
    for (int x : b) height += x;
    t.rows.push_back({join(b), std::to_string(height)});
    roots.push_back({{"root", b}, {"height", height}});
  }
  r.data["roots"] = roots;
  r.table = std::move(t);
  return r;
}

void check_length(const oracle::RootSystem& rs, const std::vector<int>& v, const char* flag) {
  if (v.size() != rs.rank()) throw RankMismatch(std::string(flag) + " needs " + std::to_string(rs.rank()) + " entries");
  if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
    throw InvalidDatum(std::string(flag) + " entries must be nonnegative");
}

Report oracle_kostant(const OracleArgs& a) {
  const auto rs = oracle_system(a);
  check_length(rs, a.vec, "--alpha");
  Report r;
  r.data["alpha"] = a.vec;
  r.data["partitions"] = oracle::kostant_partition(rs, a.vec);
  return r;
}

Report oracle_weyl(const OracleArgs& a) {
  const auto rs = oracle_system(a);
  check_length(rs, a.vec, "--m");
  Report r;
  r.data["m"] = a.vec;
  r.data["dim"] = oracle::weyl_dim(rs, a.vec);
  return r;
}

Report oracle_freudenthal(const OracleArgs& a) {
  const auto rs = oracle_system(a);
  check_length(rs, a.vec, "--m");
  const auto mult = oracle::freudenthal(rs, a.vec);
  Report r;
  r.data["m"] = a.vec;
  std::uint64_t total = 0;
  Table t{{"alpha", "multiplicity"}, {}};
  Json rows = Json::array();
  for (const auto& [g, k] : mult) {
    total += k;
    t.rows.push_back({join(g), std::to_string(k)});
    rows.push_back({{"alpha", g}, {"multiplicity", k}});
  }
  r.data["dim"] = total;
  r.data["weights"] = rows;
  r.table = std::move(t);
  return r;
}

Report oracle_cg(const OracleArgs& a) {
  if (a.m < 0 || a.n < 0) throw InvalidDatum("--m and --n must be nonnegative");
  Report r;
  r.data["m"] = a.m;
  r.data["n"] = a.n;
  r.data["summands"] = oracle::clebsch_gordan_a1(a.m, a.n);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with quantized enveloping algebras of reduced data", "hopfkit"};
  app.require_subcommand(1);
  bool json = false, tsv = false;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--tsv", tsv, "TSV output");

  std::function<Report()> action;

  // datum
  auto* datum = app.add_subcommand("datum", "Validate and analyze data")->require_subcommand(1);
  Source datum_src;
  auto* validate = datum->add_subcommand("validate", "Check a datum file or preset");
  add_source(validate, datum_src);
  validate->callback([&] { action = [&] { return datum_validate(datum_src); }; });
  auto* analyze = datum->add_subcommand("analyze", "Classes, Cartan data, regularity, reductivity, DJ2 and Nli");
  add_source(analyze, datum_src);
  analyze->callback([&] { action = [&] { return datum_analyze(datum_src); }; });

  // algebra
  auto* algebra = app.add_subcommand("algebra", "Graded pieces, Gram matrices and identity checks")->require_subcommand(1);
  Source alg_src;
  int dims_degree = 4;
  std::string side = "minus";
  auto* dims = algebra->add_subcommand("dims", "Dimensions of the graded pieces");
  add_source(dims, alg_src);
  dims->add_option("--max-degree", dims_degree, "Largest height listed")->check(CLI::NonNegativeNumber);
  dims->add_option("--side", side, "plus or minus");
  dims->callback([&] { action = [&] { return algebra_dims(alg_src, dims_degree, side); }; });
  std::vector<int> gram_degree;
  auto* gram = algebra->add_subcommand("gram", "Gram matrix of the bilinear form in one degree");
  add_source(gram, alg_src);
  gram->add_option("--degree", gram_degree, "Degree, e.g. 1,1")->required()->delimiter(',');
  gram->callback([&] { action = [&] { return algebra_gram(alg_src, gram_degree); }; });
  IdentityOptions id_opts;
  auto* ids = algebra->add_subcommand("check-identities", "Exact identity checks of the algebra and its form");
  add_source(ids, alg_src);
  ids->add_option("--seed", id_opts.seed, "Seed for random samples");
  ids->add_option("--samples", id_opts.pairing_samples, "Random pairs for the pairing recursions");
  ids->add_option("--gram-degree", id_opts.gram_degree, "Largest height for Gram determinants");
  ids->add_option("--pairing-degree", id_opts.pairing_degree, "Largest height for random pairs");
  ids->callback([&] { action = [&] { return algebra_check(alg_src, id_opts); }; });

  // module
  auto* module = app.add_subcommand("module", "Simple modules, tensor products and the Casimir operator")->require_subcommand(1);
  Source mod_src;
  std::vector<int> m, m1, m2;
  bool table = false, decompose_flag = false, allow_degenerate = false;
  int depth = -1;
  auto* simple = module->add_subcommand("simple", "Build L(m)");
  add_source(simple, mod_src);
  simple->add_option("--m", m, "Dominant m-vector, e.g. 1,1")->required()->delimiter(',');
  simple->add_flag("--table", table, "Weight multiplicity table");
  simple->add_option("--depth", depth, "Truncate after this height (data not of finite type)");
  simple->callback([&] { action = [&] { return module_simple(mod_src, m, table, depth); }; });
  auto* tens = module->add_subcommand("tensor", "Build L(m1) (x) L(m2)");
  add_source(tens, mod_src);
  tens->add_option("--m1", m1, "First m-vector")->required()->delimiter(',');
  tens->add_option("--m2", m2, "Second m-vector")->required()->delimiter(',');
  tens->add_flag("--decompose", decompose_flag, "Decompose into simple summands");
  tens->callback([&] { action = [&] { return module_tensor(mod_src, m1, m2, decompose_flag); }; });
  auto* cas = module->add_subcommand("casimir", "Casimir eigenvalues on L(m) or L(m) (x) L(m2)");
  add_source(cas, mod_src);
  cas->add_option("--m", m, "m-vector")->required()->delimiter(',');
  cas->add_option("--m2", m2, "Optional second factor")->delimiter(',');
  cas->add_flag("--allow-degenerate-G", allow_degenerate, "Allow G when the q_ii are N-linearly dependent");
  cas->callback([&] { action = [&] { return module_casimir(mod_src, m, m2, allow_degenerate); }; });

  // gcheck
  Source g_src;
  bool counterexample = false;
  int bound = 2;
  auto* gck = app.add_subcommand("gcheck", "Check that G separates comparable dominant weights");
  add_source(gck, g_src);
  gck->add_flag("--counterexample", counterexample, "Build chi' < chi from an N-linear relation among the q_ii");
  gck->add_flag("--allow-degenerate-G", allow_degenerate, "Allow G when the q_ii are N-linearly dependent");
  gck->add_option("--bound", bound, "Largest m_i among the weights compared")->check(CLI::NonNegativeNumber);
  gck->callback([&] { action = [&] { return gcheck(g_src, counterexample, allow_degenerate, bound); }; });

  // oracle
  auto* orc = app.add_subcommand("oracle", "Classical reference values")->require_subcommand(1);
  OracleArgs oa;
  auto add_oracle_source = [&](CLI::App* sub) {
    add_source(sub, oa.source);
    sub->add_option("--cartan", oa.cartan, "Cartan matrix, rows separated by ';', e.g. 2,-1;-1,2");
  };
  auto* roots = orc->add_subcommand("roots", "Positive roots");
  add_oracle_source(roots);
  roots->callback([&] { action = [&] { return oracle_roots(oa); }; });
  auto* kostant = orc->add_subcommand("kostant", "Kostant partition number");
  add_oracle_source(kostant);
  kostant->add_option("--alpha", oa.vec, "Degree, e.g. 2,2")->required()->delimiter(',');
  kostant->callback([&] { action = [&] { return oracle_kostant(oa); }; });
  auto* weyl = orc->add_subcommand("weyl", "Weyl dimension");
  add_oracle_source(weyl);
  weyl->add_option("--m", oa.vec, "m-vector")->required()->delimiter(',');
  weyl->callback([&] { action = [&] { return oracle_weyl(oa); }; });
  auto* freud = orc->add_subcommand("freudenthal", "Weight multiplicities");
  add_oracle_source(freud);
  freud->add_option("--m", oa.vec, "m-vector")->required()->delimiter(',');
  freud->callback([&] { action = [&] { return oracle_freudenthal(oa); }; });
  auto* cg = orc->add_subcommand("cg", "Clebsch-Gordan rule for rank one");
  cg->add_option("--m", oa.m, "First highest weight")->required();
  cg->add_option("--n", oa.n, "Second highest weight")->required();
  cg->callback([&] { action = [&] { return oracle_cg(oa); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (json && tsv) {
    err << "error: --json and --tsv are exclusive\n";
    return kExitUsage;
  }
  const Format format = json ? Format::Json : tsv ? Format::Tsv : Format::Text;
  try {
    Report r = action();
    emit(r, format, out);
    return r.code;
  } catch (const AuditFailure& e) {
    err << "audit failure: " << e.what() << "\n";
    return kExitAudit;
  } catch (const SingularGram& e) {
    err << "audit failure: " << e.what() << "\n";
    return kExitAudit;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitAudit;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, out, err);
}

}  // namespace hopfkit::cli
