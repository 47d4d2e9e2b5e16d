// hurwitz: command-line front end for the Hurwitz space library.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/notation.hpp"
#include "report_json.hpp"

namespace {

using namespace hurwitz;
using cli::Json;

enum class Format { json, csv, text };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Output {
  Json json;
  Table table;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv(std::ostream& os, const Table& table) {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) os << ',';
      os << csv_field(fields[i]);
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
}

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "-";
  return value.dump();
}

void write_text(std::ostream& os, const Json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto simple = [](const Json& v) {
    if (!v.is_array()) return !v.is_object();
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  auto inline_text = [&](const Json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : ", ") + scalar_text(x);
    return out;
  };
  if (value.is_object()) {
    for (const auto& [key, v] : value.items()) {
      if (simple(v)) {
        os << pad << key << ": " << inline_text(v) << '\n';
      } else {
        os << pad << key << ":\n";
        write_text(os, v, indent + 2);
      }
    }
  } else if (value.is_array()) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (simple(value[i])) {
        os << pad << "- " << inline_text(value[i]) << '\n';
      } else {
        os << pad << "[" << i << "]\n";
        write_text(os, value[i], indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(value) << '\n';
  }
}

std::string str(std::size_t n) { return std::to_string(n); }

std::size_t require_degree(const std::optional<std::size_t>& degree) {
  if (!degree) throw UsageError("--degree is required");
  return *degree;
}

RamificationProfile profile_arg(const std::optional<std::string>& text,
                                const std::optional<std::size_t>& degree) {
  if (!text) throw UsageError("--profile is required");
  return parse_profile(*text, require_degree(degree));
}

Output run_enumerate(const RamificationProfile& profile, std::size_t threads) {
  const CoverSet covers = enumerate_covers(profile, {threads});
  Output out;
  Json list = Json::array();
  out.table.header = {"index", "tuple"};
  for (std::size_t i = 0; i < covers.count(); ++i) {
    list.push_back(cli::to_json(covers.representatives[i]));
    out.table.rows.push_back({str(i), format_tuple(covers.representatives[i])});
  }
  out.json = Json{{"degree", profile.degree()},
                  {"profile", format_profile(profile)},
                  {"genus", profile.parity_ok() ? Json(genus_of_profile(profile)) : Json(nullptr)},
                  {"count", covers.count()},
                  {"covers", std::move(list)}};
  return out;
}

Output orbits_output(const RamificationProfile& profile, const std::vector<Orbit>& orbits) {
  Output out;
  Json list = Json::array();
  out.table.header = {"orbit", "size", "member"};
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    list.push_back(cli::to_json(orbits[i]));
    for (const auto& m : orbits[i].members) {
      out.table.rows.push_back({str(i), str(orbits[i].size()), format_tuple(m)});
    }
  }
  out.json = Json{{"degree", profile.degree()},
                  {"profile", format_profile(profile)},
                  {"orbit_count", orbits.size()},
                  {"orbits", std::move(list)}};
  return out;
}

void slope_row(Table& table, const std::string& scope, const SlopeReport& r) {
  table.rows.push_back({scope, str(r.orbit_size), to_string(r.delta), to_string(r.delta_prime),
                        to_string(r.deg_lambda), to_string(r.slope)});
}

Output run_slope(const std::optional<std::string>& tuple_text,
                 const std::optional<std::string>& profile_text,
                 const std::optional<std::size_t>& degree, std::size_t threads) {
  Output out;
  out.table.header = {"scope", "orbit_size", "delta", "delta_prime", "deg_lambda", "slope"};
  if (tuple_text) {
    const SlopeReport report = slope(orbit_of(parse_tuple(*tuple_text, degree)));
    out.json = cli::to_json(report);
    slope_row(out.table, "orbit", report);
    return out;
  }
  const RamificationProfile profile = profile_arg(profile_text, degree);
  const CoverSet covers = enumerate_covers(profile, {threads});
  if (covers.count() == 0) throw DomainError("Cov_d(c) is empty for this profile");
  const std::vector<Orbit> orbits = orbit_decompose(covers);
  Json list = Json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const SlopeReport report = slope(orbits[i]);
    Json entry = cli::to_json(report);
    entry["representative"] = cli::to_json(orbits[i].members.front());
    list.push_back(std::move(entry));
    slope_row(out.table, "orbit " + str(i), report);
  }
  const SlopeReport space = slope_of_orbits(orbits);
  slope_row(out.table, "space", space);
  out.json = Json{{"degree", profile.degree()},
                  {"profile", format_profile(profile)},
                  {"N", covers.count()},
                  {"orbit_count", orbits.size()},
                  {"orbits", std::move(list)},
                  {"space", cli::to_json(space)}};
  return out;
}

Output run_degenerate(const MonodromyTuple& r, std::optional<int> direction) {
  Output out;
  out.table.header = {"direction", "cycle", "multiplicity", "survives", "weight"};
  Json list = Json::array();
  for (int j = 1; j <= 3; ++j) {
    if (direction && *direction != j) continue;
    const DegenerationReport report = degenerate(r, direction_from_int(j));
    for (const auto& node : report.nodes) {
      std::string cycle;
      for (int x : node.cycle_support) cycle += (cycle.empty() ? "" : " ") + std::to_string(x);
      out.table.rows.push_back({std::to_string(j), "(" + cycle + ")",
                                std::to_string(node.multiplicity), node.survives ? "true" : "false",
                                to_string(node.weight)});
    }
    list.push_back(cli::to_json(report));
  }
  out.json = Json{{"tuple", cli::to_json(r)},
                  {"genus", genus_of_profile(r.profile())},
                  {"degenerations", std::move(list)}};
  return out;
}

Output run_cyclic(int d, const std::vector<int>& exponents) {
  if (exponents.size() != 4) throw UsageError("--exponents needs exactly four values");
  const CyclicCoverSpec spec(d, {exponents[0], exponents[1], exponents[2], exponents[3]});
  const CyclicCrossCheck check = cyclic_cross_check(spec);
  Output out;
  out.json = cli::to_json(spec, check);
  std::string exps;
  for (int a : exponents) exps += (exps.empty() ? "" : " ") + std::to_string(a);
  out.table.header = {"d", "exponents", "genus", "slope", "lyapunov_sum", "cross_check"};
  out.table.rows.push_back({std::to_string(d), exps, std::to_string(cyclic_genus(spec)),
                            to_string(check.closed_form_slope), to_string(check.lyapunov_sum),
                            check.passed ? "pass" : "fail"});
  return out;
}

Output run_stratum(const std::vector<int>& parts, const std::vector<int>& d_values,
                   const ScanOptions& options) {
  const OddPartition nu(parts);
  std::vector<int> degrees = d_values;
  if (degrees.empty()) degrees.push_back(minimal_degree(nu));
  const std::vector<StratumScanRow> rows = stratum_scan(nu, degrees, options);
  Output out;
  out.table.header = {"d", "N", "delta", "slope", "sv_estimate", "orbit_count", "skipped_reason"};
  Json list = Json::array();
  for (const auto& row : rows) {
    list.push_back(cli::to_json(row, nu));
    if (row.computed()) {
      out.table.rows.push_back({std::to_string(row.d), to_string(row.N), to_string(row.delta),
                                to_string(row.slope), to_string(row.sv_estimate),
                                str(row.orbit_count), ""});
    } else {
      out.table.rows.push_back({std::to_string(row.d), to_string(row.N), "", "", "", "0",
                                *row.skipped_reason});
    }
  }
  out.json = Json{{"nu", nu.parts()},
                  {"genus", nu.genus()},
                  {"kappa", to_string(kappa(nu))},
                  {"asymptotic_bound", to_string(asymptotic_bound(nu))},
                  {"minimal_degree", minimal_degree(nu)},
                  {"rows", std::move(list)}};
  return out;
}

Output run_dejonquieres(int genus, const std::vector<int>& zeros) {
  const BigInt count = de_jonquieres_count(genus, zeros);
  Output out;
  out.json = Json{{"genus", genus}, {"zeros", zeros}, {"count", to_string(count)}};
  out.table.header = {"genus", "count"};
  out.table.rows.push_back({std::to_string(genus), to_string(count)});
  return out;
}

void emit(const Output& out, Format format) {
  switch (format) {
    case Format::json:
      std::cout << out.json.dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(std::cout, out.table);
      break;
    case Format::text:
      write_text(std::cout, out.json, 0);
      break;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz spaces of degree-d covers of P^1 with four branch points"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::json;
  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  app.add_option("--output", format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  std::size_t threads = 1;
  app.add_option("--parallel", threads, "Worker threads for enumeration")
      ->check(CLI::Range(1, 256));

  std::optional<std::size_t> degree;
  std::optional<std::string> profile_text;
  std::optional<std::string> tuple_text;
  auto add_degree = [&](CLI::App* sub) {
    sub->add_option("--degree", degree, "Degree d of the covers")->check(CLI::Range(1, 64));
  };

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "List Cov_d(c) up to equivalence");
  add_degree(enumerate_cmd);
  enumerate_cmd->add_option("--profile", profile_text, "Classes like \"4|4|3,1|3,1\"")
      ->required();

  CLI::App* orbits_cmd = app.add_subcommand("orbits", "Braid orbits of a profile or a seed");
  add_degree(orbits_cmd);
  orbits_cmd->add_option("--profile", profile_text, "Classes like \"4|4|3,1|3,1\"");
  orbits_cmd->add_option("--seed", tuple_text, "Four permutations separated by ';'");

  CLI::App* slope_cmd = app.add_subcommand("slope", "Boundary degrees and slope");
  add_degree(slope_cmd);
  slope_cmd->add_option("--profile", profile_text, "Classes like \"4|4|3,1|3,1\"");
  slope_cmd->add_option("--tuple", tuple_text, "Use the orbit of this tuple");

  CLI::App* degenerate_cmd = app.add_subcommand("degenerate", "Admissible-cover degenerations");
  add_degree(degenerate_cmd);
  degenerate_cmd->add_option("--tuple", tuple_text, "Four permutations separated by ';'")
      ->required();
  std::optional<int> direction;
  degenerate_cmd->add_option("--direction", direction, "1, 2 or 3 (default: all)")
      ->check(CLI::Range(1, 3));

  CLI::App* cyclic_cmd = app.add_subcommand("cyclic", "Cyclic covers y^d = prod (x - z_i)^a_i");
  int cyclic_d = 0;
  std::vector<int> exponents;
  cyclic_cmd->add_option("--d", cyclic_d, "Degree")->required();
  cyclic_cmd->add_option("--exponents", exponents, "a1,a2,a3,a4")->delimiter(',')->required();

  CLI::App* stratum_cmd = app.add_subcommand("stratum", "Pillowcase covers of a stratum Q(nu)");
  std::vector<int> nu_parts;
  std::vector<int> d_values;
  std::string budget_text = ScanOptions{}.budget.str();
  stratum_cmd->add_option("--nu", nu_parts, "Odd zero orders, e.g. 1,1,1,1")
      ->delimiter(',')
      ->required();
  stratum_cmd->add_option("--d-values", d_values, "Even degrees to scan")->delimiter(',');
  stratum_cmd->add_option("--budget", budget_text, "Skip rows whose search cost exceeds B")
      ->check(CLI::Validator(
          [](std::string& s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
              return std::string("budget must be a nonnegative integer");
            }
            return std::string();
          },
          "INTEGER"));

  CLI::App* dj_cmd = app.add_subcommand("dejonquieres", "Virtual count of quadratic differentials");
  int genus = 0;
  std::vector<int> zeros;
  dj_cmd->add_option("--genus", genus, "Genus g")->required();
  dj_cmd->add_option("--zeros", zeros, "Zero orders summing to 4g - 4")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Output out;
    if (enumerate_cmd->parsed()) {
      out = run_enumerate(profile_arg(profile_text, degree), threads);
    } else if (orbits_cmd->parsed()) {
      if (tuple_text && profile_text) throw UsageError("give either --seed or --profile");
      if (tuple_text) {
        const Orbit orbit = orbit_of(parse_tuple(*tuple_text, degree));
        out = orbits_output(orbit.profile, {orbit});
      } else {
        const RamificationProfile profile = profile_arg(profile_text, degree);
        out = orbits_output(profile, orbit_decompose(enumerate_covers(profile, {threads})));
      }
    } else if (slope_cmd->parsed()) {
      if (tuple_text && profile_text) throw UsageError("give either --tuple or --profile");
      out = run_slope(tuple_text, profile_text, degree, threads);
    } else if (degenerate_cmd->parsed()) {
      out = run_degenerate(parse_tuple(*tuple_text, degree), direction);
    } else if (cyclic_cmd->parsed()) {
      out = run_cyclic(cyclic_d, exponents);
    } else if (stratum_cmd->parsed()) {
      ScanOptions options;
      options.budget = BigInt(budget_text);
      options.threads = threads;
      out = run_stratum(nu_parts, d_values, options);
    } else if (dj_cmd->parsed()) {
      out = run_dejonquieres(genus, zeros);
    }
    emit(out, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
