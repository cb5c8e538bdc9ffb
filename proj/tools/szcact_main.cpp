#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "szcact.h"

namespace {

int exit_code_for(szc_status status) {
  switch (status) {
    case SZC_OK:
      return 0;
    case SZC_ERR_PARSE:
      return 2;
    case SZC_ERR_INVALID:
    case SZC_ERR_DISCONNECTED:
    case SZC_ERR_NOT_CACTUS:
      return 3;
    case SZC_ERR_INFEASIBLE:
    case SZC_ERR_TOO_LARGE:
      return 4;
    case SZC_ERR_VERIFICATION:
      return 5;
    default:
      return 1;
  }
}

[[noreturn]] void die(szc_status status) {
  std::fprintf(stderr, "error: %s\n", szc_last_error());
  std::exit(exit_code_for(status));
}

void check(szc_status status) {
  if (status != SZC_OK) die(status);
}

[[noreturn]] void die_parse(const std::string& message) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  std::exit(2);
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) die_parse("cannot open " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct OwnedString {
  char* value = nullptr;
  ~OwnedString() { szc_string_free(value); }
};

struct OwnedGraph {
  szc_graph* value = nullptr;
  ~OwnedGraph() { szc_graph_free(value); }
};

void load_graph(const std::string& path, const std::string& format,
                OwnedGraph& out) {
  std::string text = read_source(path);
  if (format == "graph6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      if (!line.empty()) break;
    }
    if (line.empty()) die_parse("no graph6 line in input");
    check(szc_parse_graph6(line.c_str(), &out.value));
  } else {
    check(szc_parse_edge_list(text.c_str(), &out.value));
  }
}

void write_file(const std::string& path, const char* content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    std::exit(1);
  }
  file << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-Szeged toolkit for cactus graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "edgelist";
  bool as_json = false;
  bool as_csv = false;
  std::string trace_path;
  int n = 0;
  int k = 0;
  int k_max = -1;
  int n_max = 0;
  int ceiling = 8;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "graph file, or - for stdin");
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
  };

  CLI::App* cmd_index =
      app.add_subcommand("index", "compute the distance indices of a graph");
  add_input(cmd_index);
  auto* json_flag = cmd_index->add_flag("--json", as_json, "JSON report");
  cmd_index->add_flag("--csv", as_csv, "CSV summary row")
      ->excludes(json_flag);

  CLI::App* cmd_generate =
      app.add_subcommand("generate", "emit the extremal bundle graph");
  cmd_generate->add_option("--n", n, "vertex count")->required();
  cmd_generate->add_option("--k", k, "cycle count")->required();

  CLI::App* cmd_transform = app.add_subcommand(
      "transform", "reduce a cactus to the extremal bundle");
  add_input(cmd_transform);
  cmd_transform->add_option("--trace", trace_path,
                            "write the rewrite trace to this JSON file");

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "list all cacti with given order and cycle count");
  cmd_enumerate->add_option("--n", n, "vertex count")->required();
  cmd_enumerate->add_option("--k", k, "cycle count")->required();
  cmd_enumerate
      ->add_option("--unsafe-ceiling", ceiling, "enumeration order ceiling")
      ->capture_default_str();

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check the closed-form minima at one (n, k)");
  cmd_verify->add_option("--n", n, "vertex count")->required();
  cmd_verify->add_option("--k", k, "cycle count")->required();
  cmd_verify
      ->add_option("--unsafe-ceiling", ceiling, "enumeration order ceiling")
      ->capture_default_str();

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "verify every (n, k) cell up to a maximum order");
  cmd_sweep->add_option("--n-max", n_max, "largest vertex count")->required();
  cmd_sweep->add_option("--k-max", k_max, "cap on the cycle count");
  cmd_sweep
      ->add_option("--unsafe-ceiling", ceiling, "enumeration order ceiling")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (cmd_index->parsed()) {
    OwnedGraph g;
    load_graph(input, format, g);
    OwnedString report;
    if (as_csv)
      check(szc_index_report_csv(g.value, &report.value));
    else
      check(szc_index_report_json(g.value, &report.value));
    std::fputs(report.value, stdout);
  } else if (cmd_generate->parsed()) {
    OwnedGraph g;
    check(szc_bundle_graph(n, k, &g.value));
    OwnedString line;
    check(szc_write_graph6(g.value, &line.value));
    std::printf("%s\n", line.value);
  } else if (cmd_transform->parsed()) {
    OwnedGraph g;
    load_graph(input, format, g);
    OwnedGraph reduced;
    OwnedString trace;
    check(szc_normalize(g.value, &reduced.value, &trace.value));
    if (!trace_path.empty()) write_file(trace_path, trace.value);
    OwnedString line;
    check(szc_write_graph6(reduced.value, &line.value));
    std::printf("%s\n", line.value);
  } else if (cmd_enumerate->parsed()) {
    OwnedString lines;
    check(szc_enumerate_graph6(n, k, ceiling, &lines.value));
    std::fputs(lines.value, stdout);
  } else if (cmd_verify->parsed()) {
    OwnedString header;
    check(szc_verify_csv_header(&header.value));
    OwnedString row;
    int32_t pass = 0;
    check(szc_verify_row_csv(n, k, ceiling, &row.value, &pass));
    std::fputs(header.value, stdout);
    std::fputs(row.value, stdout);
    if (pass == 0) {
      std::fprintf(stderr, "error: verification failed at n=%d k=%d\n", n, k);
      return 5;
    }
  } else if (cmd_sweep->parsed()) {
    OwnedString table;
    int32_t all_pass = 0;
    check(szc_sweep_csv(n_max, k_max, ceiling, 0, &table.value, &all_pass));
    std::fputs(table.value, stdout);
    if (all_pass == 0) {
      std::fprintf(stderr, "error: verification failed in sweep\n");
      return 5;
    }
  }
  return 0;
}
