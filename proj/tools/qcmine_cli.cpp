// Command-line front end for the qcmine shared library. Everything here
// goes through the C API in qcmine.h; diagnostics go to stderr and data to
// stdout or the requested output files.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcmine.h"

namespace {

struct GraphHandle {
  qcm_graph* g = nullptr;
  ~GraphHandle() { qcm_graph_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { qcm_string_free(s); }
};

int die(const std::string& context) {
  std::cerr << "qcmine: " << context << ": " << qcm_last_error() << "\n";
  return 1;
}

bool write_output(const std::string& path, const char* data, const std::string& what) {
  if (path.empty()) {
    std::cout << data;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "qcmine: cannot open output file '" << path << "'\n";
    return false;
  }
  out << data;
  if (!out) {
    std::cerr << "qcmine: failed writing " << what << " to '" << path << "'\n";
    return false;
  }
  return true;
}

bool check_format(const std::string& format, const std::string& expected,
                  const std::string& command) {
  if (format.empty() || format == expected) return true;
  std::cerr << "qcmine: " << command << " produces " << expected << " output; --format " << format
            << " is not available\n";
  return false;
}

int load_graph(const std::string& path, GraphHandle& handle) {
  const int rc = qcm_graph_load_path(path.c_str(), nullptr, &handle.g);
  if (rc != QCM_OK) return die("loading '" + path + "'");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense-neighborhood mining of cliques and quasi-cliques"};
  app.require_subcommand(1);

  std::string input, output, summary_path, format;
  int threads = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    auto* opt = cmd->add_option("--input", input, "edge-list file, one 'u v' edge per line");
    if (needs_input) opt->required();
    cmd->add_option("--output", output, "output file (stdout when omitted)");
    cmd->add_option("--format", format, "output format (json|csv)");
    cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* stats = app.add_subcommand("stats", "graph summary: counts, degrees, clustering");
  add_common(stats);

  auto* ndp = app.add_subcommand("ndp", "neighborhood density profile CSV + JSON sidecar");
  add_common(ndp);
  ndp->add_option("--summary", summary_path, "sidecar JSON file (stdout when omitted)");

  auto* bounds = app.add_subcommand("bounds", "tail-bound and existence-guarantee sweeps");
  add_common(bounds, false);
  double cg = -1.0;
  unsigned dmin = 0, dmax = 0;
  double beta_min = 0.05;
  std::vector<double> alpha_grid, beta_grid;
  bounds->add_option("--cg", cg, "global clustering coefficient (when no --input)");
  bounds->add_option("--dmin", dmin, "smallest degree > 1 (when no --input)");
  bounds->add_option("--dmax", dmax, "largest degree (when no --input)");
  bounds->add_option("--alpha", alpha_grid, "alpha values for the tail sweep");
  bounds->add_option("--beta", beta_grid, "beta values for the guarantee sweep");
  bounds->add_option("--beta-min", beta_min, "low end of the per-degree profile");

  auto* mine = app.add_subcommand("mine", "mine cliques and quasi-cliques");
  add_common(mine);
  std::string strategy;
  std::vector<std::string> mine_alphas;
  unsigned tmax = 50;
  mine->add_option("--strategy", strategy,
                   "ego | s1+localsearch | s2+localsearch | greedy | kcore-seed | avgdeg-seed")
      ->required();
  mine->add_option("--alpha", mine_alphas, "objective ratio, repeatable (e.g. 1/3 or 0.9)");
  mine->add_option("--tmax", tmax, "outer iteration cap for local search")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run the invariant suite on a graph");
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  if (stats->parsed()) {
    if (!check_format(format, "json", "stats")) return 2;
    GraphHandle h;
    if (int rc = load_graph(input, h)) return rc;
    OwnedString json;
    if (qcm_stats_json(h.g, threads, &json.s) != QCM_OK) return die("stats");
    if (!write_output(output, json.s, "stats")) return 1;
    if (output.empty()) std::cout << "\n";
    return 0;
  }

  if (ndp->parsed()) {
    if (!check_format(format, "csv", "ndp")) return 2;
    GraphHandle h;
    if (int rc = load_graph(input, h)) return rc;
    OwnedString csv, sidecar;
    if (qcm_ndp_csv(h.g, threads, &csv.s, &sidecar.s) != QCM_OK) return die("ndp");
    if (!write_output(output, csv.s, "profile CSV")) return 1;
    if (!write_output(summary_path, sidecar.s, "profile summary")) return 1;
    if (summary_path.empty()) std::cout << "\n";
    return 0;
  }

  if (bounds->parsed()) {
    if (!check_format(format, "csv", "bounds")) return 2;
    GraphHandle h;
    const bool have_graph = !input.empty();
    if (have_graph) {
      if (int rc = load_graph(input, h)) return rc;
      if (qcm_measured_bound_inputs(h.g, threads, &cg, &dmin, &dmax) != QCM_OK)
        return die("measuring bound inputs");
    } else if (cg < 0.0 || dmin == 0 || dmax == 0) {
      std::cerr << "qcmine: bounds needs either --input or all of --cg --dmin --dmax\n";
      return 2;
    }

    OwnedString alpha_csv;
    if (qcm_bounds_alpha_csv(cg, alpha_grid.empty() ? nullptr : alpha_grid.data(),
                             alpha_grid.size(), &alpha_csv.s) != QCM_OK)
      return die("alpha sweep");
    OwnedString beta_csv;
    if (qcm_bounds_beta_csv(cg, dmin, dmax, beta_grid.empty() ? nullptr : beta_grid.data(),
                            beta_grid.size(), &beta_csv.s) != QCM_OK)
      return die("beta sweep");
    OwnedString profile_csv;
    if (have_graph) {
      if (qcm_bounds_profile_csv(h.g, beta_min, threads, &profile_csv.s) != QCM_OK)
        return die("per-degree profile");
    }

    if (output.empty()) {
      std::cout << alpha_csv.s << "\n" << beta_csv.s;
      if (profile_csv.s) std::cout << "\n" << profile_csv.s;
      return 0;
    }
    if (!write_output(output + ".alpha.csv", alpha_csv.s, "alpha sweep")) return 1;
    if (!write_output(output + ".beta.csv", beta_csv.s, "beta sweep")) return 1;
    if (profile_csv.s && !write_output(output + ".profile.csv", profile_csv.s, "profile")) return 1;
    return 0;
  }

  if (mine->parsed()) {
    if (!check_format(format, "json", "mine")) return 2;
    GraphHandle h;
    const int load_rc = qcm_graph_load_path(input.c_str(), nullptr, &h.g);
    if (load_rc == QCM_ERR_PARSE &&
        std::string(qcm_last_error()).find("empty input") != std::string::npos) {
      // A graph without edges has nothing to mine; still a complete run.
      const char* empty =
          "{\n  \"reports\": [],\n  \"best_clique_index\": null,\n"
          "  \"best_quasi_clique_index\": null\n}";
      if (!write_output(output, empty, "mining report")) return 1;
      if (output.empty()) std::cout << "\n";
      return 0;
    }
    if (load_rc != QCM_OK) return die("loading '" + input + "'");
    std::string alpha_list;
    for (std::size_t i = 0; i < mine_alphas.size(); ++i) {
      if (i) alpha_list += ',';
      alpha_list += mine_alphas[i];
    }
    OwnedString json;
    if (qcm_mine_json(h.g, strategy.c_str(), alpha_list.empty() ? nullptr : alpha_list.c_str(),
                      tmax, threads, &json.s) != QCM_OK)
      return die("mine");
    if (!write_output(output, json.s, "mining report")) return 1;
    if (output.empty()) std::cout << "\n";
    return 0;
  }

  if (verify->parsed()) {
    if (!check_format(format, "json", "verify")) return 2;
    GraphHandle h;
    if (int rc = load_graph(input, h)) return rc;
    OwnedString json;
    int violations = 0;
    if (qcm_verify_json(h.g, threads, &json.s, &violations) != QCM_OK) return die("verify");
    if (!write_output(output, json.s, "verification report")) return 1;
    if (output.empty()) std::cout << "\n";
    if (violations > 0) {
      std::cerr << "qcmine: verify found " << violations << " violated invariant(s)\n";
      return 1;
    }
    return 0;
  }

  return 2;
}
