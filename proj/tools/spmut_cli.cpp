#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "service.hpp"
#include "spm/spm.h"

namespace {

using Json = nlohmann::json;

struct Failed {
  int code;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw Failed{2};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::size_t> parse_seq(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      std::cerr << "error: bad vertex '" << item << "' in --seq\n";
      throw Failed{2};
    }
  }
  return out;
}

void check(spm_status s) {
  if (s == SPM_OK) return;
  std::cerr << "error [" << spm_status_name(s) << "]: " << spm_last_error() << "\n";
  throw Failed{1};
}

Json take(char* s) {
  Json j = Json::parse(s);
  spm_free_string(s);
  return j;
}

std::string multiplicity_table(const spm_quiver* q) {
  const std::size_t n = spm_quiver_vertex_count(q);
  std::ostringstream out;
  out << "arrows j->i (row i, column j):\n";
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t m = 0;
      check(spm_quiver_multiplicity(q, i, j, &m));
      out << (j > 1 ? " " : "  ") << m;
    }
    out << "\n";
  }
  return out.str();
}

std::string summarize_potential(const Json& potential) {
  std::map<std::size_t, std::size_t> by_length;
  for (const Json& t : potential.at("terms")) ++by_length[t.at("arrows").size()];
  std::ostringstream out;
  out << "potential: " << potential.at("terms").size() << " terms (truncation " << potential.at("truncation")
      << ")";
  for (const auto& [len, count] : by_length) out << "; length " << len << ": " << count;
  out << "\n";
  return out.str();
}

std::uint32_t prime_for(const spm_quiver* q, std::optional<std::uint32_t> prime) {
  if (prime) return *prime;
  std::uint32_t p = 0;
  check(spm_quiver_default_prime(q, &p));
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation of skew-symmetrizable matrices, weighted quivers and species with potential"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string seq_text;
  std::optional<std::uint32_t> prime;
  unsigned truncation = 12;
  std::size_t budget = 100;
  unsigned max_ext = 7;
  std::uint64_t seed = 1;
  bool as_json = false;
  std::string potential_file;
  bool do_search = false;
  std::string host = "127.0.0.1";
  int port = 8080;

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "input JSON file, - for stdin");
    cmd->add_option("--seq", seq_text, "mutation sequence, e.g. 3,1,2 (applied left to right)");
    cmd->add_flag("--json", as_json, "print JSON");
  };
  auto* mutate_matrix = app.add_subcommand("mutate-matrix", "mutate an exchange matrix");
  common(mutate_matrix);
  auto* mutate_quiver = app.add_subcommand("mutate-quiver", "mutate a weighted quiver (matrix input is converted)");
  common(mutate_quiver);
  auto* mutate_sp = app.add_subcommand("mutate-sp", "mutate a species with potential");
  common(mutate_sp);
  auto* search = app.add_subcommand("search", "search for a potential non-degenerate along --seq");
  common(search);
  auto* check_cmd = app.add_subcommand("check", "cross-check matrix, quiver and species mutation");
  common(check_cmd);
  for (auto* cmd : {search, check_cmd}) {
    cmd->add_option("--prime", prime, "characteristic p, 1 mod lcm of the weights");
    cmd->add_option("--truncation", truncation, "truncation order N");
    cmd->add_option("--budget", budget, "random potentials per extension degree");
    cmd->add_option("--max-ext", max_ext, "largest extension degree r");
    cmd->add_option("--seed", seed, "base RNG seed");
  }
  check_cmd->add_option("--potential", potential_file, "potential JSON on the species of the matrix");
  check_cmd->add_flag("--search", do_search, "search for a potential when none is given");
  auto* serve = app.add_subcommand("serve", "run the session API on loopback");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port");

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) {
      spmut::Service service;
      std::cerr << "listening on " << host << ":" << port << "\n";
      return spmut::serve(service, host, port) ? 0 : 1;
    }

    const std::string text = read_input(input);
    const std::vector<std::size_t> seq = parse_seq(seq_text);

    if (mutate_matrix->parsed()) {
      char* out = nullptr;
      check(spm_matrix_mutate(text.c_str(), seq.data(), seq.size(), &out));
      const Json m = take(out);
      if (as_json) {
        std::cout << m.dump(2) << "\n";
      } else {
        for (const Json& row : m.at("rows")) {
          for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j > 0 ? " " : "") << row[j];
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (mutate_quiver->parsed()) {
      spm_quiver* q = nullptr;
      check(spm_quiver_from_json(text.c_str(), &q));
      std::unique_ptr<spm_quiver, void (*)(spm_quiver*)> guard(q, spm_quiver_free);
      for (std::size_t k : seq) check(spm_quiver_mutate(q, k));
      char* out = nullptr;
      check(spm_quiver_to_json(q, &out));
      const Json j = take(out);
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << multiplicity_table(q);
        for (const Json& a : j.at("arrows")) {
          std::cout << "  " << a.at("id").get<std::string>() << ": " << a.at("from") << " -> " << a.at("to") << "\n";
        }
      }
      return 0;
    }

    if (mutate_sp->parsed()) {
      spm_species* s = nullptr;
      check(spm_species_from_json(text.c_str(), &s));
      std::unique_ptr<spm_species, void (*)(spm_species*)> guard(s, spm_species_free);
      Json reports = Json::array();
      for (std::size_t k : seq) {
        char* report = nullptr;
        check(spm_species_mutate(s, k, &report));
        Json r = take(report);
        r["vertex"] = k;
        reports.push_back(std::move(r));
      }
      char* out = nullptr;
      check(spm_species_to_json(s, &out));
      const Json state = take(out);
      if (as_json) {
        std::cout << Json{{"state", state}, {"reports", reports}}.dump(2) << "\n";
        return 0;
      }
      spm_quiver* q = nullptr;
      check(spm_species_quiver(s, &q));
      std::unique_ptr<spm_quiver, void (*)(spm_quiver*)> qguard(q, spm_quiver_free);
      std::cout << multiplicity_table(q) << summarize_potential(state.at("potential"));
      for (const Json& r : reports) {
        std::cout << "step at " << r.at("vertex") << ": removed " << r.at("removed_pairs").size()
                  << " pairs, residual 2-cycles " << r.at("residual_2cycles").dump() << "\n";
      }
      std::cout << (spm_quiver_is_2_acyclic(q) ? "2-acyclic\n" : "NOT 2-acyclic\n");
      return 0;
    }

    if (search->parsed()) {
      spm_quiver* q = nullptr;
      check(spm_quiver_from_json(text.c_str(), &q));
      std::unique_ptr<spm_quiver, void (*)(spm_quiver*)> guard(q, spm_quiver_free);
      spm_search_options options;
      spm_search_options_init(&options);
      options.budget = budget;
      options.max_r = max_ext;
      options.seed = seed;
      options.truncation = truncation;
      int found = 0;
      char* out = nullptr;
      check(spm_search(q, prime_for(q, prime), seq.data(), seq.size(), &options, &found, nullptr, &out));
      const Json result = take(out);
      if (as_json) {
        std::cout << result.dump(2) << "\n";
      } else if (found) {
        const Json& w = result.at("witness");
        std::cout << "witness over r = " << w.at("extension_degree") << " after " << w.at("attempts")
                  << " attempts (seed " << w.at("seed") << ", candidate " << w.at("candidate_index") << ")\n"
                  << summarize_potential(w.at("state").at("potential"));
      } else {
        std::cout << "no witness;";
        for (const Json& a : result.at("attempts_per_r")) std::cout << " r=" << a.at("r") << ": " << a.at("attempts");
        std::cout << "\n";
      }
      return found ? 0 : 3;
    }

    if (check_cmd->parsed()) {
      spm_quiver* q = nullptr;
      check(spm_quiver_from_json(text.c_str(), &q));
      std::unique_ptr<spm_quiver, void (*)(spm_quiver*)> guard(q, spm_quiver_free);
      spm_search_options options;
      spm_search_options_init(&options);
      options.budget = budget;
      options.max_r = max_ext;
      options.seed = seed;
      options.truncation = truncation;
      const std::string potential = potential_file.empty() ? "" : read_input(potential_file);
      char* out = nullptr;
      check(spm_compatibility_report(text.c_str(), seq.data(), seq.size(), prime_for(q, prime),
                                     potential.empty() ? nullptr : potential.c_str(), do_search ? 1 : 0, &options,
                                     &out));
      const Json report = take(out);
      if (as_json) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << report.at("table").get<std::string>();
        if (!report.at("degenerate_step").is_null()) {
          std::cout << "species level degenerate at step " << report.at("degenerate_step") << "\n";
        }
      }
      return report.at("levels_agree").get<bool>() ? 0 : 1;
    }
  } catch (const Failed& f) {
    return f.code;
  }
  return 0;
}
