#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "apportion/biprop.hpp"
#include "apportion/divisor.hpp"
#include "apportion/errors.hpp"
#include "apportion/fairshare.hpp"
#include "apportion/generators.hpp"
#include "apportion/greedy.hpp"
#include "apportion/json_io.hpp"
#include "apportion/oracles.hpp"

using nlohmann::json;

namespace {

using namespace apportion;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

Rat parse_or_throw(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw std::invalid_argument("malformed rational: " + s);
  return *r;
}

std::vector<Rat> rational_list(const std::string& s) {
  std::vector<Rat> out;
  for (const std::string& item : split(s, ',')) out.push_back(parse_or_throw(item));
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const Rat& r : rational_list(s)) {
    if (denominator(r) != 1)
      throw std::invalid_argument("expected integers, got " + format_rational(r));
    out.push_back(static_cast<int>(numerator(r).convert_to<long>()));
  }
  return out;
}

Signpost make_method(const std::string& name, const std::string& table) {
  if (!table.empty() && !name.empty())
    throw std::invalid_argument("give a method name or a table, not both");
  if (!table.empty()) return Signpost::custom(rational_list(table));
  if (name.empty()) throw std::invalid_argument("a method is required");
  return Signpost::named(name);
}

std::size_t tie_cap() {
  const char* env = std::getenv("APPORTION_MAX_TIES");
  if (!env) return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1)
    throw std::invalid_argument("APPORTION_MAX_TIES must be a positive integer");
  return static_cast<std::size_t>(v);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return json::parse(in);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

ElectionFile load_election(const std::string& input,
                           const std::string& csv_config) {
  bool csv = !csv_config.empty() ||
             (input.size() > 4 && input.rfind(".csv") == input.size() - 4);
  if (csv) {
    if (csv_config.empty())
      throw std::invalid_argument("CSV input needs --csv-config");
    return election_from_csv(read_text_file(input),
                             read_json_file(csv_config));
  }
  return election_from_json(read_json_file(input));
}

json seats_to_json(const std::vector<int>& seats) { return json(seats); }

json matrix_to_json(const SeatMatrix& x) {
  json out = json::array();
  for (const auto& row : x) out.push_back({row[0], row[1]});
  return out;
}

SeatMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a matrix");
  SeatMatrix x;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
        !row[1].is_number_integer())
      throw std::invalid_argument("matrix rows must be integer pairs");
    x.push_back({row[0].get<int>(), row[1].get<int>()});
  }
  return x;
}

// Accepts a bare matrix, a generator sidecar, or an elect report with a
// single run.
SeatMatrix allocation_matrix(const json& j) {
  if (j.is_array()) return matrix_from_json(j);
  if (j.is_object() && j.contains("expected_x"))
    return matrix_from_json(j.at("expected_x"));
  if (j.is_object() && j.contains("runs")) {
    const json& runs = j.at("runs");
    if (!runs.is_array() || runs.size() != 1)
      throw std::invalid_argument(
          "report must contain exactly one run to compare against");
    return matrix_from_json(runs[0].at("cross_tab"));
  }
  throw std::invalid_argument("unrecognized allocation file");
}

json elected_ids(const ElectionFile& f, const Allocation& E) {
  json out = json::array();
  for (int c : candidate_order(f.instance))
    if (E[c]) out.push_back(f.instance.candidates[c].id);
  return out;
}

json error_json(const std::string& kind, const std::string& message) {
  json j;
  j["schema"] = 1;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

int fail(const std::string& kind, const std::string& message, int code,
         const json& extra = json::object()) {
  json j = error_json(kind, message);
  for (const auto& item : extra.items()) j["error"][item.key()] = item.value();
  std::cout << j.dump(2) << "\n";
  std::cerr << "error: " << message << "\n";
  return code;
}

int run_apportion(const std::string& votes, int house,
                  const std::string& method, const std::string& table) {
  Signpost s = make_method(method, table);
  std::vector<Rat> q = rational_list(votes);
  std::vector<std::vector<int>> sols =
      apportion::apportion(q, house, s, tie_cap());
  json out;
  out["schema"] = 1;
  out["method"] = s.name();
  out["house"] = house;
  json votes_back = json::array();
  for (const Rat& v : q) votes_back.push_back(format_rational(v));
  out["votes"] = std::move(votes_back);
  json jsols = json::array();
  for (const std::vector<int>& seats : sols) {
    MultiplierInterval mi = multiplier_interval(q, seats, s);
    json js;
    js["seats"] = seats_to_json(seats);
    js["multiplier_lo"] = format_rational(mi.lo);
    if (mi.hi)
      js["multiplier_hi"] = format_rational(*mi.hi);
    else
      js["multiplier_hi"] = nullptr;
    jsols.push_back(std::move(js));
  }
  out["solutions"] = std::move(jsols);
  out["tie"] = sols.size() > 1;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_elect(const ElectionFile& f, const std::string& mechanism,
              const std::string& party_method, const std::string& party_table,
              const std::string& biprop_method,
              const std::string& biprop_table, bool trace) {
  Signpost party = make_method(party_method, party_table);
  json out;
  out["schema"] = 1;
  out["mechanism"] = mechanism;
  out["house"] = f.instance.house;
  out["parties"] = f.party_names;
  json runs = json::array();
  json traces = json::array();

  if (mechanism == "greedy") {
    out["party_method"] = party.name();
    for (const GreedyRun& run :
         mechanism_greedy(f.instance, party, tie_cap())) {
      json jr;
      jr["J"] = seats_to_json(run.J);
      jr["elected"] = elected_ids(f, run.result);
      jr["cross_tab"] = matrix_to_json(cross_tab(f.instance, run.result));
      std::array<int, 2> tc = counts_by_type(f.instance, run.result);
      jr["parity"] = {{"f", tc[0]},
                      {"m", tc[1]},
                      {"balanced", condition_A(f.instance, run.result)}};
      runs.push_back(std::move(jr));
      if (trace) {
        json jt;
        jt["J"] = seats_to_json(run.J);
        jt["oblivious"] = elected_ids(f, run.oblivious);
        json swaps = json::array();
        for (const GreedySwap& sw : run.swaps)
          swaps.push_back(
              {{"removed", f.instance.candidates[sw.removed].id},
               {"inserted", f.instance.candidates[sw.inserted].id}});
        jt["swaps"] = std::move(swaps);
        traces.push_back(std::move(jt));
      }
    }
  } else if (mechanism == "biprop") {
    Signpost delta = make_method(biprop_method, biprop_table);
    out["party_method"] = party.name();
    out["biprop_method"] = delta.name();
    std::vector<std::vector<int>> seen_J;
    for (const BipropRun& run :
         mechanism_biprop(f.instance, party, delta, tie_cap())) {
      json jr;
      jr["J"] = seats_to_json(run.J);
      jr["elected"] = elected_ids(f, run.alloc);
      jr["cross_tab"] = matrix_to_json(run.x);
      std::array<int, 2> tc = counts_by_type(f.instance, run.alloc);
      jr["parity"] = {{"f", tc[0]},
                      {"m", tc[1]},
                      {"balanced", condition_A(f.instance, run.alloc)}};
      runs.push_back(std::move(jr));
      if (trace &&
          std::find(seen_J.begin(), seen_J.end(), run.J) == seen_J.end()) {
        seen_J.push_back(run.J);
        BipropResult r = solve_biproportional(
            election_two_dim(f.instance, run.J), delta, tie_cap());
        json jt;
        jt["J"] = seats_to_json(run.J);
        jt["increments"] = json(r.increments);
        traces.push_back(std::move(jt));
      }
    }
  } else {
    throw std::invalid_argument("mechanism must be greedy or biprop");
  }

  out["runs"] = std::move(runs);
  out["tie"] = out["runs"].size() > 1;
  if (trace) out["trace"] = std::move(traces);
  std::cout << out.dump(2) << "\n";
  return 0;
}

// Adds instance context (party name, candidate id) to a stuck failure.
int run_elect_guarded(const std::string& input, const std::string& csv_config,
                      const std::string& mechanism,
                      const std::string& party_method,
                      const std::string& party_table,
                      const std::string& biprop_method,
                      const std::string& biprop_table, bool trace) {
  ElectionFile f = load_election(input, csv_config);
  try {
    return run_elect(f, mechanism, party_method, party_table, biprop_method,
                     biprop_table, trace);
  } catch (const StuckError& e) {
    return fail("stuck", e.what(), 4,
                {{"party", e.party},
                 {"party_name", f.party_names.at(e.party)},
                 {"removed_candidate",
                  f.instance.candidates.at(e.removed_candidate).id}});
  }
}

int run_fairshare(const std::string& input, const std::string& matrix,
                  const std::string& rows, const std::string& cols,
                  const std::string& against) {
  TwoDimInstance T;
  if (!input.empty()) {
    if (!matrix.empty() || !rows.empty() || !cols.empty())
      throw std::invalid_argument("--input excludes --matrix/--rows/--cols");
    T = two_dim_from_json(read_json_file(input));
  } else {
    if (matrix.empty() || rows.empty() || cols.empty())
      throw std::invalid_argument(
          "inline mode needs --matrix, --rows and --cols");
    for (const std::string& row : split(matrix, ';')) {
      std::vector<Rat> entries = rational_list(row);
      if (entries.size() != 2)
        throw std::invalid_argument("matrix rows must have two entries");
      T.P.push_back({entries[0], entries[1]});
      T.S.push_back({std::nullopt, std::nullopt});
    }
    T.J = int_list(rows);
    std::vector<int> phi = int_list(cols);
    if (phi.size() != 2) throw std::invalid_argument("--cols needs two values");
    T.phi = {phi[0], phi[1]};
    validate_two_dim(T);
  }

  FairShareResult r = fair_share(T);
  json out;
  out["schema"] = 1;
  json F = json::array();
  for (const auto& row : r.F)
    F.push_back({static_cast<double>(row[0]), static_cast<double>(row[1])});
  out["F"] = std::move(F);
  json lam = json::array();
  for (long double l : r.row_mult) lam.push_back(static_cast<double>(l));
  out["row_mult"] = std::move(lam);
  out["col_mult"] = {static_cast<double>(r.col_mult[0]),
                     static_cast<double>(r.col_mult[1])};
  out["iterations"] = r.iterations;
  out["residual"] = static_cast<double>(r.residual);

  if (!against.empty()) {
    SeatMatrix x = allocation_matrix(read_json_file(against));
    if (x.size() != r.F.size())
      throw std::invalid_argument("allocation shape does not match matrix");
    std::vector<QuotaRow> report = quota_report(x, r.F);
    json jq = json::array();
    bool all = true;
    for (const QuotaRow& qr : report) {
      all = all && qr.within;
      jq.push_back({{"lo", {qr.lo[0], qr.lo[1]}},
                    {"hi", {qr.hi[0], qr.hi[1]}},
                    {"dir", {qr.dir[0], qr.dir[1]}},
                    {"within", qr.within}});
    }
    out["quota"] = {
        {"rows", std::move(jq)},
        {"all_within", all},
        {"row_violation_share", format_rational(row_violation_share(x, r.F))},
        {"overshoot_entry_share",
         format_rational(overshoot_entry_share(x, r.F))}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_generate(const std::string& family, int ell, const std::string& method,
                 const std::string& table, const std::string& which,
                 const std::string& out_path) {
  json report;
  report["schema"] = 1;
  if (family == "gap" || family == "rowviol") {
    Signpost s = make_method(method, table);
    HardInstance H = family == "gap" ? gen_gap_instance(ell, s)
                                     : gen_row_violation_instance(s);
    write_text_file(out_path, two_dim_to_json(H.instance).dump(2) + "\n");
    std::string sidecar = out_path + ".expected.json";
    write_text_file(sidecar, expectations_to_json(H).dump(2) + "\n");
    report["written"] = out_path;
    report["sidecar"] = sidecar;
  } else if (family == "fixed") {
    FixedElection fe;
    if (which == "infeasible16")
      fe = FixedElection::Infeasible16;
    else if (which == "stuck8")
      fe = FixedElection::Stuck8;
    else if (which == "contrast6")
      fe = FixedElection::Contrast6;
    else
      throw std::invalid_argument(
          "--which must be infeasible16, stuck8 or contrast6");
    ElectionFile f;
    f.instance = gen_fixed_election(fe);
    f.party_names = default_party_names(f.instance.parties);
    write_text_file(out_path, election_to_json(f).dump(2) + "\n");
    report["written"] = out_path;
  } else {
    throw std::invalid_argument("--family must be gap, rowviol or fixed");
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisor apportionment with type-parity mechanisms"};
  app.require_subcommand(1);

  std::string votes, method, table;
  int house = 0;
  CLI::App* c_app = app.add_subcommand(
      "apportion", "Seat vectors of a divisor method with exact ties");
  c_app->add_option("--votes", votes, "comma-separated vote totals")
      ->required();
  c_app->add_option("--house", house, "number of seats")->required();
  c_app->add_option("--method", method, "jefferson | adams | webster");
  c_app->add_option("--table", table, "custom signpost table, comma-separated");

  std::string e_input, e_csv_config, e_mech, e_pm, e_pt, e_bm, e_bt;
  bool e_trace = false;
  CLI::App* c_elect =
      app.add_subcommand("elect", "Run a parity mechanism on an instance file");
  c_elect->add_option("--input", e_input, "instance JSON (or CSV) path")
      ->required();
  c_elect->add_option("--csv-config", e_csv_config,
                      "config JSON for CSV input");
  c_elect->add_option("--mechanism", e_mech, "greedy | biprop")->required();
  c_elect->add_option("--party-method", e_pm, "divisor method for seats");
  c_elect->add_option("--party-table", e_pt, "custom table for seats");
  c_elect->add_option("--biprop-method", e_bm, "signpost for the type split");
  c_elect->add_option("--biprop-table", e_bt, "custom table for the split");
  c_elect->add_flag("--trace", e_trace, "include phase traces");

  std::string f_input, f_matrix, f_rows, f_cols, f_against;
  CLI::App* c_fair = app.add_subcommand(
      "fairshare", "Doubly scaled fractional seat shares and quota checks");
  c_fair->add_option("--input", f_input, "two-dim instance JSON path");
  c_fair->add_option("--matrix", f_matrix,
                     "inline vote matrix, rows ; entries ,");
  c_fair->add_option("--rows", f_rows, "row seat targets, comma-separated");
  c_fair->add_option("--cols", f_cols, "column targets f,m");
  c_fair->add_option("--against", f_against,
                     "allocation file to compare against the fair share");

  std::string g_family, g_method, g_table, g_which, g_out;
  int g_ell = 1;
  CLI::App* c_gen = app.add_subcommand(
      "generate", "Write instances with known hard structure");
  c_gen->add_option("--family", g_family, "gap | rowviol | fixed")->required();
  c_gen->add_option("--ell", g_ell, "designed gap size (gap family)");
  c_gen->add_option("--method", g_method, "signpost name");
  c_gen->add_option("--table", g_table, "custom signpost table");
  c_gen->add_option("--which", g_which, "infeasible16 | stuck8 | contrast6");
  c_gen->add_option("--out", g_out, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_app))
      return run_apportion(votes, house, method, table);
    if (app.got_subcommand(c_elect))
      return run_elect_guarded(e_input, e_csv_config, e_mech, e_pm, e_pt, e_bm,
                               e_bt, e_trace);
    if (app.got_subcommand(c_fair))
      return run_fairshare(f_input, f_matrix, f_rows, f_cols, f_against);
    if (app.got_subcommand(c_gen))
      return run_generate(g_family, g_ell, g_method, g_table, g_which, g_out);
    return 2;
  } catch (const AdamsHouseTooSmall& e) {
    return fail("adams_house_too_small", e.what(), 3,
                {{"positive_parties", e.positive_parties}, {"house", e.house}});
  } catch (const StuckError& e) {
    return fail("stuck", e.what(), 4,
                {{"party", e.party}, {"removed_candidate", e.removed_candidate}});
  } catch (const InfeasibleError& e) {
    return fail("infeasible", e.what(), 5);
  } catch (const NotStrictlyPositive& e) {
    return fail("not_strictly_positive", e.what(), 6,
                {{"row", e.row}, {"col", e.col}});
  } catch (const TieExplosion& e) {
    return fail("tie_explosion", e.what(), 7,
                {{"cap", static_cast<long>(e.cap)}});
  } catch (const NonConvergence& e) {
    return fail("non_convergence", e.what(), 8);
  } catch (const MarginalMismatch& e) {
    return fail("parse_error", e.what(), 2);
  } catch (const json::exception& e) {
    return fail("parse_error", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    return fail("parse_error", e.what(), 2);
  } catch (const std::out_of_range& e) {
    return fail("parse_error", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
}
