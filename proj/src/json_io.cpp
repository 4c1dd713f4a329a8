#include "apportion/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace apportion {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& why) {
  throw std::invalid_argument(why);
}

void expect_object(const json& j, const std::set<std::string>& required,
                   const std::set<std::string>& optional) {
  if (!j.is_object()) bad("expected a JSON object");
  for (const auto& item : j.items()) {
    if (!required.count(item.key()) && !optional.count(item.key()))
      bad("unknown field: " + item.key());
  }
  for (const std::string& key : required)
    if (!j.contains(key)) bad("missing field: " + key);
}

void check_schema(const json& j) {
  if (!j.at("schema").is_number_integer() || j.at("schema").get<int>() != 1)
    bad("unsupported schema version");
}

Rat vote_from_json(const json& v) {
  if (!v.is_string()) bad("votes must be strings");
  auto r = parse_rational(v.get<std::string>());
  if (!r) bad("malformed rational: " + v.get<std::string>());
  return *r;
}

int int_from_json(const json& v, const std::string& what) {
  if (!v.is_number_integer()) bad(what + " must be an integer");
  return v.get<int>();
}

TieBreak tie_break_from_json(const json& v) {
  if (!v.is_string()) bad("tie_break must be a string");
  std::string s = v.get<std::string>();
  if (s == "prefer_f") return TieBreak::PreferF;
  if (s == "prefer_m") return TieBreak::PreferM;
  bad("tie_break must be prefer_f or prefer_m");
}

Ctype type_from_string(const std::string& s) {
  if (s == "f") return Ctype::F;
  if (s == "m") return Ctype::M;
  bad("type must be f or m");
}

ElectionFile assemble(int house, const std::vector<std::string>& names,
                      TieBreak tb,
                      const std::vector<std::array<std::string, 4>>& rows) {
  ElectionFile f;
  f.party_names = names;
  f.instance.house = house;
  f.instance.parties = static_cast<int>(names.size());
  f.instance.leading_tie_break = tb;
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) bad("party name empty");
    if (!index.emplace(names[i], static_cast<int>(i)).second)
      bad("duplicate party name: " + names[i]);
  }
  for (const auto& row : rows) {
    Candidate c;
    c.id = row[0];
    auto it = index.find(row[1]);
    if (it == index.end()) bad("unknown party: " + row[1]);
    c.party = it->second;
    c.type = type_from_string(row[2]);
    auto r = parse_rational(row[3]);
    if (!r) bad("malformed rational: " + row[3]);
    c.votes = *r;
    f.instance.candidates.push_back(std::move(c));
  }
  validate_instance(f.instance);
  return f;
}

}  // namespace

std::vector<std::string> default_party_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

nlohmann::json election_to_json(const ElectionFile& f) {
  json j;
  j["schema"] = 1;
  j["house"] = f.instance.house;
  j["parties"] = f.party_names;
  j["tie_break"] =
      f.instance.leading_tie_break == TieBreak::PreferF ? "prefer_f"
                                                        : "prefer_m";
  json cands = json::array();
  for (const Candidate& c : f.instance.candidates) {
    json jc;
    jc["id"] = c.id;
    jc["party"] = f.party_names.at(c.party);
    jc["type"] = c.type == Ctype::F ? "f" : "m";
    jc["votes"] = format_rational(c.votes);
    cands.push_back(std::move(jc));
  }
  j["candidates"] = std::move(cands);
  return j;
}

ElectionFile election_from_json(const nlohmann::json& j) {
  expect_object(j, {"schema", "house", "parties", "candidates"}, {"tie_break"});
  check_schema(j);
  int house = int_from_json(j.at("house"), "house");
  if (!j.at("parties").is_array()) bad("parties must be an array");
  std::vector<std::string> names;
  for (const json& p : j.at("parties")) {
    if (!p.is_string()) bad("party names must be strings");
    names.push_back(p.get<std::string>());
  }
  TieBreak tb = TieBreak::PreferF;
  if (j.contains("tie_break")) tb = tie_break_from_json(j.at("tie_break"));
  if (!j.at("candidates").is_array()) bad("candidates must be an array");
  std::vector<std::array<std::string, 4>> rows;
  for (const json& jc : j.at("candidates")) {
    expect_object(jc, {"id", "party", "type", "votes"}, {});
    if (!jc.at("id").is_string() || !jc.at("party").is_string() ||
        !jc.at("type").is_string())
      bad("candidate fields id, party and type must be strings");
    vote_from_json(jc.at("votes"));
    rows.push_back({jc.at("id").get<std::string>(),
                    jc.at("party").get<std::string>(),
                    jc.at("type").get<std::string>(),
                    jc.at("votes").get<std::string>()});
  }
  return assemble(house, names, tb, rows);
}

ElectionFile election_from_csv(const std::string& csv,
                               const nlohmann::json& config) {
  expect_object(config, {"schema", "house", "parties"}, {"tie_break"});
  check_schema(config);
  int house = int_from_json(config.at("house"), "house");
  if (!config.at("parties").is_array()) bad("parties must be an array");
  std::vector<std::string> names;
  for (const json& p : config.at("parties")) {
    if (!p.is_string()) bad("party names must be strings");
    names.push_back(p.get<std::string>());
  }
  TieBreak tb = TieBreak::PreferF;
  if (config.contains("tie_break"))
    tb = tie_break_from_json(config.at("tie_break"));

  std::vector<std::array<std::string, 4>> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 4) bad("expected 4 CSV columns, got line: " + line);
    if (header) {
      if (fields[0] != "id" || fields[1] != "party" || fields[2] != "type" ||
          fields[3] != "votes")
        bad("CSV header must be id,party,type,votes");
      header = false;
      continue;
    }
    rows.push_back({fields[0], fields[1], fields[2], fields[3]});
  }
  if (header) bad("empty CSV input");
  return assemble(house, names, tb, rows);
}

nlohmann::json two_dim_to_json(const TwoDimInstance& T) {
  json j;
  j["schema"] = 1;
  json P = json::array();
  json S = json::array();
  for (std::size_t i = 0; i < T.P.size(); ++i) {
    P.push_back({format_rational(T.P[i][0]), format_rational(T.P[i][1])});
    json caps = json::array();
    for (int t = 0; t < 2; ++t) {
      if (T.S[i][t])
        caps.push_back(*T.S[i][t]);
      else
        caps.push_back(nullptr);
    }
    S.push_back(std::move(caps));
  }
  j["P"] = std::move(P);
  j["S"] = std::move(S);
  j["J"] = T.J;
  j["phi"] = T.phi;
  return j;
}

TwoDimInstance two_dim_from_json(const nlohmann::json& j) {
  expect_object(j, {"schema", "P", "J", "phi"}, {"S"});
  check_schema(j);
  TwoDimInstance T;
  if (!j.at("P").is_array()) bad("P must be an array");
  for (const json& row : j.at("P")) {
    if (!row.is_array() || row.size() != 2) bad("P rows must be pairs");
    T.P.push_back({vote_from_json(row[0]), vote_from_json(row[1])});
  }
  std::size_t n = T.P.size();
  if (j.contains("S")) {
    if (!j.at("S").is_array() || j.at("S").size() != n)
      bad("S must be an array matching P");
    for (const json& row : j.at("S")) {
      if (!row.is_array() || row.size() != 2) bad("S rows must be pairs");
      std::array<std::optional<int>, 2> caps;
      for (int t = 0; t < 2; ++t) {
        if (row[t].is_null())
          caps[t] = std::nullopt;
        else
          caps[t] = int_from_json(row[t], "capacity");
      }
      T.S.push_back(caps);
    }
  } else {
    T.S.assign(n, {std::nullopt, std::nullopt});
  }
  if (!j.at("J").is_array() || j.at("J").size() != n)
    bad("J must be an array matching P");
  for (const json& v : j.at("J")) T.J.push_back(int_from_json(v, "J entry"));
  if (!j.at("phi").is_array() || j.at("phi").size() != 2)
    bad("phi must be a pair");
  T.phi = {int_from_json(j.at("phi")[0], "phi"),
           int_from_json(j.at("phi")[1], "phi")};
  validate_two_dim(T);
  return T;
}

nlohmann::json expectations_to_json(const HardInstance& H) {
  json j;
  j["schema"] = 1;
  j["ell"] = H.ell;
  j["rows"] = H.rows;
  json x = json::array();
  for (const auto& row : H.expected_x) x.push_back({row[0], row[1]});
  j["expected_x"] = std::move(x);
  json F = json::array();
  for (const auto& row : H.expected_F)
    F.push_back({format_rational(row[0]), format_rational(row[1])});
  j["expected_F"] = std::move(F);
  return j;
}

}  // namespace apportion
