#include "hopfkit/datum_io.hpp"

#include <fstream>
#include <sstream>

#include "hopfkit/errors.hpp"
#include "json.hpp"

namespace hopfkit {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.contains(key)) throw InvalidDatum(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<GroupElement> group_elements(const json& rows, std::size_t count, std::size_t rank, const char* key) {
  if (!rows.is_array() || rows.size() != count)
    throw InvalidDatum(std::string("'") + key + "' must list " + std::to_string(count) + " group elements");
  std::vector<GroupElement> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rank)
      throw RankMismatch(std::string("an entry of '") + key + "' does not have group_rank coordinates");
    std::vector<long> e;
    for (const auto& x : row) e.push_back(x.get<long>());
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<Character> characters(const json& rows, std::size_t count, std::size_t rank, const ParameterSpace& params) {
  if (!rows.is_array() || rows.size() != count)
    throw InvalidDatum("'chi' must list " + std::to_string(count) + " characters");
  std::vector<Character> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != rank) throw RankMismatch("a character does not have group_rank values");
    std::vector<UnitScalar> values;
    for (const auto& x : row) values.push_back(parse_unit(x.get<std::string>(), params));
    out.emplace_back(std::move(values));
  }
  return out;
}

json group_rows(const std::vector<GroupElement>& gs) {
  json rows = json::array();
  for (const auto& g : gs) rows.push_back(g.exps);
  return rows;
}

json character_rows(const std::vector<Character>& chis, const ParameterSpace& params) {
  json rows = json::array();
  for (const auto& c : chis) {
    json row = json::array();
    for (const auto& v : c.values) row.push_back(v.to_string(params));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

LoadedDatum parse_datum_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw InvalidDatum("datum file must be a JSON object");
    std::vector<std::string> names;
    if (j.contains("parameters")) names = j.at("parameters").get<std::vector<std::string>>();
    ParameterSpace params(names);
    const auto rank = require(j, "group_rank").get<std::size_t>();
    const auto theta = require(j, "theta").get<std::size_t>();
    if (rank == 0) throw InvalidDatum("group_rank must be at least 1");
    if (theta == 0) throw InvalidDatum("theta must be at least 1");
    LoadedDatum out;
    if (j.contains("g")) {
      YDDatum d;
      d.params = params;
      d.group_rank = rank;
      d.g = group_elements(j.at("g"), theta, rank, "g");
      d.chi = characters(require(j, "chi"), theta, rank, params);
      if (j.contains("lambda")) {
        for (const auto& entry : j.at("lambda")) {
          auto i = require(entry, "i").get<long>();
          auto k = require(entry, "j").get<long>();
          if (i < 1 || k < 1 || i > static_cast<long>(theta) || k > static_cast<long>(theta))
            throw InvalidDatum("lambda index out of range");
          out.lambda[{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)}] =
              parse_scalar(require(entry, "value").get<std::string>(), params);
        }
      }
      out.yd = std::move(d);
    } else {
      ReducedDatum d;
      if (j.contains("name")) d.name = j.at("name").get<std::string>();
      d.params = params;
      d.group_rank = rank;
      d.K = group_elements(require(j, "K"), theta, rank, "K");
      d.L = group_elements(require(j, "L"), theta, rank, "L");
      d.chi = characters(require(j, "chi"), theta, rank, params);
      const json& ell = require(j, "ell");
      if (!ell.is_array() || ell.size() != theta) throw InvalidDatum("'ell' must list theta scalars");
      for (const auto& x : ell) d.ell.push_back(parse_scalar(x.get<std::string>(), params));
      out.reduced = std::move(d);
    }
    if (j.contains("cartan")) {
      out.declared_cartan = j.at("cartan").get<IntegerMatrix>();
      BraidingMatrix q = out.reduced ? out.reduced->braiding() : out.yd->braiding();
      if (detect_cartan(q).a != *out.declared_cartan)
        throw InvalidDatum("declared Cartan matrix differs from the one detected from the braiding");
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidDatum(std::string("datum field has the wrong type: ") + e.what());
  }
}

LoadedDatum load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open datum file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_datum_json(buffer.str());
}

std::string reduced_to_json(const ReducedDatum& d) {
  json j;
  if (!d.name.empty()) j["name"] = d.name;
  j["parameters"] = d.params.names();
  j["group_rank"] = d.group_rank;
  j["theta"] = d.theta();
  j["K"] = group_rows(d.K);
  j["L"] = group_rows(d.L);
  j["chi"] = character_rows(d.chi, d.params);
  json ell = json::array();
  for (const auto& x : d.ell) ell.push_back(x.to_string(d.params));
  j["ell"] = ell;
  return j.dump(2);
}

std::string yd_to_json(const YDDatum& d, const LinkingParameter& lambda) {
  json j;
  j["parameters"] = d.params.names();
  j["group_rank"] = d.group_rank;
  j["theta"] = d.theta();
  j["g"] = group_rows(d.g);
  j["chi"] = character_rows(d.chi, d.params);
  json entries = json::array();
  for (const auto& [key, value] : lambda) {
    entries.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"value", value.to_string(d.params)}});
  }
  j["lambda"] = entries;
  return j.dump(2);
}

}  // namespace hopfkit
