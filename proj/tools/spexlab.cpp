// spexlab command-line entry point. Exit codes: 0 ok, 1 assertion failed, 2 usage.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spexlab/canonical.hpp"
#include "spexlab/claims.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/error.hpp"
#include "spexlab/graph6.hpp"
#include "spexlab/json_io.hpp"
#include "spexlab/patterns.hpp"

using namespace spexlab;

namespace {

struct Settings {
  std::size_t jobs = 1;
  std::uint64_t seed = ClaimOptions{}.seed;
  double spectral_tol = kDefaultTol;
  double filter_tol = OracleOptions{}.filter_tol;
  std::size_t max_order = OracleOptions{}.max_order;
  bool allow_large = false;
  bool timestamps = true;
};

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::istringstream in(read_file(path));
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument(path + ":" + std::to_string(no) + ": expected key = value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InvalidArgument("not a boolean: " + v);
}

std::size_t parse_size(const std::string& v) {
  std::size_t pos = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw InvalidArgument("not a nonnegative integer: " + v);
  return x;
}

double parse_double(const std::string& v) {
  std::size_t pos = 0;
  double x = 0;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw InvalidArgument("not a number: " + v);
  return x;
}

void apply_config(Settings& s, const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) {
    if (k == "jobs") s.jobs = parse_size(v);
    else if (k == "seed") s.seed = parse_size(v);
    else if (k == "spectral_tol") s.spectral_tol = parse_double(v);
    else if (k == "filter_tol") s.filter_tol = parse_double(v);
    else if (k == "max_order") s.max_order = parse_size(v);
    else if (k == "allow_large") s.allow_large = parse_bool(v);
    else if (k == "timestamps") s.timestamps = parse_bool(v);
    else throw InvalidArgument("unknown config key '" + k + "'");
  }
}

std::map<std::string, long> parse_params(const std::vector<std::string>& items) {
  std::map<std::string, long> out;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidArgument("parameter '" + it + "' is not key=value");
    const std::string v = it.substr(eq + 1);
    std::size_t pos = 0;
    long x = 0;
    try {
      x = std::stol(v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != v.size()) throw InvalidArgument("parameter '" + it + "' needs an integer value");
    out[it.substr(0, eq)] = x;
  }
  return out;
}

long need(const std::map<std::string, long>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw InvalidArgument("missing parameter " + key);
  if (it->second < 0) throw InvalidArgument("parameter " + key + " must be nonnegative");
  return it->second;
}

std::vector<std::size_t> numbers(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(trim(item)));
  return out;
}

ForbiddenFamily parse_family(const std::string& text) {
  auto tail = [&](std::size_t from) { return text.substr(from); };
  if (text == "f1") return ForbiddenFamily({f1()}, {"F1"});
  if (text.rfind("cx1:", 0) == 0) {
    auto v = numbers(tail(4));
    if (v.size() != 3) throw InvalidArgument("cx1 family needs r,k,m");
    return cx1_family(v[0], v[1], v[2]);
  }
  if (text.rfind("cx2:", 0) == 0) {
    auto v = numbers(tail(4));
    if (v.size() != 1) throw InvalidArgument("cx2 family needs m");
    return cx2_family(v[0]);
  }
  if (text.rfind("path-power:", 0) == 0) {
    auto v = numbers(tail(11));
    if (v.size() != 2) throw InvalidArgument("path-power family needs l,p");
    return ForbiddenFamily({path_power(v[0], v[1])}, {text});
  }
  if (text.size() > 1 && (text[0] == 'K' || text[0] == 'C' || text[0] == 'P') &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::size_t l = parse_size(tail(1));
    Graph g = text[0] == 'K' ? complete(l) : text[0] == 'C' ? cycle(l) : path(l);
    return ForbiddenFamily({std::move(g)}, {text});
  }
  if (std::filesystem::is_regular_file(text)) {
    auto members = decode_graph6_lines(read_file(text));
    std::vector<std::string> names;
    for (const auto& g : members) names.push_back(encode_graph6(g));
    return ForbiddenFamily(std::move(members), std::move(names));
  }
  throw InvalidArgument("unknown family '" + text + "' (K<r>, C<l>, P<l>, f1, cx1:r,k,m, cx2:m, path-power:l,p or a graph6 file)");
}

Graph read_graph(const std::string& g6) {
  if (!g6.empty()) return decode_graph6(g6);
  std::string line;
  while (std::getline(std::cin, line)) {
    line = trim(line);
    if (!line.empty() && line[0] != '#') return decode_graph6(line);
  }
  throw InvalidArgument("no graph6 input on stdin");
}

Partition parse_partition(const std::string& text, std::size_t n) {
  // classes separated by '|', vertices by ','
  std::vector<std::vector<Vertex>> classes;
  std::stringstream ss(text);
  std::string cls;
  while (std::getline(ss, cls, '|')) {
    auto v = numbers(cls);
    classes.emplace_back(v.begin(), v.end());
  }
  return Partition(n, std::move(classes));
}

void emit(const Json& j) { std::cout << stamped(j).dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spexlab: spectral versus edge extremal graph computations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::optional<std::size_t> jobs_flag;
  std::optional<std::uint64_t> seed_flag;
  std::string config_path;
  bool no_timestamps = false;
  app.add_option("--jobs", jobs_flag, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed_flag, "seed for randomized property sampling");
  app.add_option("--config", config_path, "key = value settings file")->check(CLI::ExistingFile);
  app.add_flag("--no-timestamps", no_timestamps, "omit elapsed times from reports");

  std::string g6, family, partition_text, name, experiment_name, data_path, claim, policy = "any";
  std::vector<std::string> params;
  std::size_t n = 0, r = 2, tree_order = 1, slack = 0, budget = 0, points = 4;
  std::optional<std::size_t> p_opt, m_opt, max_order_opt;
  std::optional<double> tol_opt;
  std::string n_list;
  bool all = false, with_vector = false, allow_large = false;

  auto* construct = app.add_subcommand("construct", "build a named construction");
  construct->add_option("--name", name, "f1 | cx1 | cx2 | star-path | turan")->required();
  construct->add_option("--params", params, "key=value ...");

  auto* free_check = app.add_subcommand("free-check", "test a graph against a forbidden family");
  free_check->add_option("--graph6", g6, "graph (default: first line of stdin)");
  free_check->add_option("--family", family, "family name or graph6 file")->required();

  auto* chromatic = app.add_subcommand("chromatic", "exact chromatic number");
  chromatic->add_option("--graph6", g6, "graph (default: first line of stdin)");

  auto* lambda = app.add_subcommand("lambda", "spectral radius by power iteration");
  lambda->add_option("--graph6", g6, "graph (default: first line of stdin)");
  lambda->add_option("--tol", tol_opt, "residual tolerance");
  lambda->add_flag("--vector", with_vector, "include the eigenvector");

  auto* quotient = app.add_subcommand("quotient", "quotient matrix of an equitable partition");
  quotient->add_option("--graph6", g6, "graph (default: first line of stdin)");
  quotient->add_option("--partition", partition_text, "classes as 0,1|2,3,4")->required();

  auto* ex = app.add_subcommand("ex", "exhaustive edge-extremal oracle");
  auto* spex = app.add_subcommand("spex", "exhaustive spectral-extremal oracle");
  for (auto* sc : {ex, spex}) {
    sc->add_option("--n", n, "order")->required();
    sc->add_option("--family", family, "family name or graph6 file")->required();
    sc->add_option("--max-order", max_order_opt, "enumeration guardrail");
    sc->add_flag("--allow-large", allow_large, "lift the guardrail");
  }

  auto* rex = app.add_subcommand("restricted-ex", "edge maximum over Turan graphs with forests in one part");
  rex->add_option("--n", n, "order")->required();
  rex->add_option("--family", family, "family name or graph6 file")->required();
  rex->add_option("--r", r, "number of parts");
  rex->add_option("--max-tree-order", tree_order, "largest forest component");
  rex->add_option("--policy", policy, "any | largest | smallest");
  rex->add_option("--slack", slack, "part size slack (0..2)");
  rex->add_option("--budget", budget, "extra edge edits (0..3)");

  auto* fit = app.add_subcommand("fit", "first-order constant of a named experiment");
  fit->add_option("--experiment", experiment_name, "star_vs_path | edge_add | transfer_shift | cx1_gap")->required();
  fit->add_option("--params", params, "key=value ...");
  fit->add_option("--n", n_list, "comma-separated orders (default: automatic schedule)");
  fit->add_option("--points", points, "schedule length");
  fit->add_option("--data", data_path, "write (n, n*delta) columns here");

  auto* verify = app.add_subcommand("verify", "replay a claim");
  auto* claim_opt = verify->add_option("--claim", claim, "claim id");
  auto* all_opt = verify->add_flag("--all", all, "every claim");
  claim_opt->excludes(all_opt);
  verify->add_option("--p", p_opt, "cx2: single p");
  verify->add_option("--m", m_opt, "family constant m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Settings s;
    if (const char* env = std::getenv("SPEXLAB_JOBS")) s.jobs = parse_size(env);
    if (!config_path.empty()) {
      auto kv = read_config(config_path);
      apply_config(s, kv);
    }
    if (jobs_flag) s.jobs = *jobs_flag;
    if (seed_flag) s.seed = *seed_flag;
    if (no_timestamps) s.timestamps = false;
    if (max_order_opt) s.max_order = *max_order_opt;
    if (allow_large) s.allow_large = true;
    if (s.jobs == 0) throw InvalidArgument("jobs must be positive");

    OracleOptions oo;
    oo.jobs = s.jobs;
    oo.max_order = s.max_order;
    oo.allow_large = s.allow_large;
    oo.filter_tol = s.filter_tol;
    oo.spectral_tol = s.spectral_tol;

    if (*construct) {
      const auto pm = parse_params(params);
      Json out{{"construction", name}, {"params", pm}};
      if (name == "f1") {
        out["graph"] = to_json(PartitionedGraph{f1(), Partition::singletons(9)}, {"a", "b", "c", "d", "e", "f", "g", "h", "i"});
      } else if (name == "turan") {
        out["graph"] = to_json(turan(need(pm, "n"), need(pm, "r")));
      } else if (name == "cx1") {
        auto pr = cx1_pair(need(pm, "r"), need(pm, "k"), need(pm, "n"));
        out["G"] = to_json(pr.g);
        out["H"] = to_json(pr.h);
      } else if (name == "cx2") {
        auto pk = cx2_package(need(pm, "p"), pm.count("m") ? need(pm, "m") : 3);
        out["G"] = to_json(pk.g);
        out["H"] = to_json(pk.h);
        out["H_prime"] = to_json(pk.h_prime);
        out["equitable"] = {{"G", pk.g_eq.classes()}, {"H", pk.h_eq.classes()}, {"H_prime", pk.h_prime_eq.classes()}};
      } else if (name == "star-path") {
        auto sp = star_path_pair(need(pm, "n"), need(pm, "r"), need(pm, "k"));
        out["star"] = to_json(sp.star);
        out["path"] = to_json(sp.path);
      } else {
        throw InvalidArgument("unknown construction '" + name + "'");
      }
      emit(out);
      return 0;
    }
    if (*free_check) {
      const auto g = read_graph(g6);
      const auto fam = parse_family(family);
      Json out{{"graph6", encode_graph6(g)}, {"family", family}};
      auto idx = first_contained(g, fam);
      out["free"] = !idx.has_value();
      if (idx) {
        out["member"] = fam.names()[*idx];
        out["embedding"] = *find_embedding(g, fam[*idx]);
      }
      emit(out);
      return 0;
    }
    if (*chromatic) {
      const auto g = read_graph(g6);
      emit({{"graph6", encode_graph6(g)}, {"chromatic_number", chromatic_number(g)}, {"clique_number", clique_number(g)}});
      return 0;
    }
    if (*lambda) {
      const auto g = read_graph(g6);
      Json out = to_json(spectral_radius(g, tol_opt.value_or(s.spectral_tol)), with_vector);
      out["graph6"] = encode_graph6(g);
      emit(out);
      return 0;
    }
    if (*quotient) {
      const auto g = read_graph(g6);
      const auto part = parse_partition(partition_text, g.order());
      const auto q = quotient_matrix(g, part);
      const auto [lo, hi] = perron_bracket(q, Rational(1, 1000000000000L));
      emit({{"graph6", encode_graph6(g)},
            {"partition", part.classes()},
            {"quotient", to_json(q)},
            {"char_poly", to_json(char_poly(q))},
            {"perron_bracket", {to_string(lo), to_string(hi)}}});
      return 0;
    }
    if (*ex || *spex || *rex) {
      const auto fam = parse_family(family);
      ExtremalReport rep;
      if (*ex) rep = ex_oracle(n, fam, oo, family);
      else if (*spex) rep = spex_oracle(n, fam, oo, family);
      else {
        RestrictedSpace space;
        space.r = r;
        space.max_tree_order = tree_order;
        space.policy = parse_part_policy(policy);
        space.part_slack = slack;
        space.edit_budget = budget;
        rep = restricted_ex(n, fam, space, oo, family);
      }
      emit(to_json(rep, fam, s.timestamps));
      return 0;
    }
    if (*fit) {
      ExperimentOptions eo;
      eo.jobs = s.jobs;
      eo.tol = std::min(s.spectral_tol, eo.tol);
      eo.points = points;
      if (!n_list.empty()) eo.n_values = numbers(n_list);
      auto result = experiment(experiment_name, parse_params(params), eo);
      if (!data_path.empty()) {
        std::ofstream out(data_path);
        if (!out) throw InvalidArgument("cannot write " + data_path);
        out.precision(17);
        out << "# n n*delta\n";
        for (const auto& smp : result.samples) out << smp.n << ' ' << double(smp.n) * smp.delta << '\n';
      }
      emit(to_json(result));
      return 0;
    }
    if (*verify) {
      if (!all && claim.empty()) throw InvalidArgument("verify needs --claim <id> or --all");
      ClaimOptions co;
      co.jobs = s.jobs;
      co.seed = s.seed;
      co.p = p_opt;
      co.m = m_opt;
      co.spectral_tol = s.spectral_tol;
      co.filter_tol = s.filter_tol;
      co.max_order = s.max_order;
      const auto ids = all ? claim_ids() : std::vector<std::string>{claim};
      Json results = Json::array();
      const Assertion* failed = nullptr;
      std::string failed_claim;
      std::vector<ClaimResult> done;
      done.reserve(ids.size());
      for (const auto& id : ids) {
        done.push_back(run_claim(id, co));
        results.push_back(to_json(done.back(), s.timestamps));
        if (!failed && (failed = done.back().first_failure())) failed_claim = id;
      }
      Json out{{"claims", results}, {"passed", failed == nullptr}, {"seed", s.seed}};
      emit(out);
      if (failed) {
        std::cerr << "FAILED " << failed_claim << ": " << failed->name;
        if (!failed->detail.empty()) std::cerr << " (" << failed->detail << ")";
        std::cerr << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const GuardrailError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
