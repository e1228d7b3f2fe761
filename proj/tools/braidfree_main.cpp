// Copyright 2026 The braidfree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// braidfree: analyze digraph deformations of the braid arrangement and run
// the exhaustive verification harnesses.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "braidfree/digraph.hpp"
#include "braidfree/errors.hpp"
#include "braidfree/io.hpp"
#include "braidfree/signed_graph.hpp"
#include "braidfree/verify.hpp"

namespace {

using namespace braidfree;

std::string read_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open input file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Prints a progress line to stderr at most once per second.
ProgressFn progress_printer(const std::string& label) {
  auto last = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
  return [label, last](std::uint64_t done, std::uint64_t total) {
    const auto now = std::chrono::steady_clock::now();
    if (done != total && now - *last < std::chrono::seconds(1)) return;
    *last = now;
    std::cerr << label << ": " << done << "/" << total << '\n';
  };
}

int report(const VerifySummary& s) {
  std::cout << format_summary_text(s);
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digraph deformations of the braid arrangement: characteristic polynomials and freeness criteria"};
  app.require_subcommand(1);

  std::string input;
  int k = 0;
  bool as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one digraph");
  analyze_cmd->add_option("--input", input, "Digraph file (text or JSON) or inline JSON")->required();
  analyze_cmd->add_option("--k", k, "Level k of the deformation")->check(CLI::Range(0, kAnalyzeMaxLevel));
  analyze_cmd->add_flag("--json", as_json, "Print the report as JSON");

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification harnesses");
  verify_cmd->require_subcommand(1);

  int n = 3;
  bool progress = false;
  auto* prop_cmd = verify_cmd->add_subcommand("prop-char", "Ordering exists iff eliminable and no forbidden triple");
  prop_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(1, 5));
  prop_cmd->add_flag("--progress", progress, "Report progress on stderr");

  int k_max = 2;
  auto* lemma_cmd = verify_cmd->add_subcommand("lemma", "Forbidden-pattern polynomials against their formulas");
  lemma_cmd->add_option("--k-max", k_max, "Largest level checked")->check(CLI::Range(0, 3));

  auto* fact_cmd = verify_cmd->add_subcommand("factorization", "Integer splitting of chi(cA_G) for (A1)/(A2) digraphs");
  fact_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(2, 4));
  fact_cmd->add_option("--k", k, "Level k")->required()->check(CLI::Range(0, 2));
  fact_cmd->add_flag("--progress", progress, "Report progress on stderr");

  bool exhaustive = false;
  std::uint64_t samples = 512;
  auto* loc_cmd = verify_cmd->add_subcommand("localization", "Localization at vertex triples vs induced deformations");
  loc_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(3, 5));
  loc_cmd->add_option("--k", k, "Level k")->required()->check(CLI::Range(0, 2));
  loc_cmd->add_flag("--exhaustive", exhaustive, "Check every digraph even when n = 5");
  loc_cmd->add_option("--samples", samples, "Sampled digraphs when not exhaustive");
  loc_cmd->add_flag("--progress", progress, "Report progress on stderr");

  auto* cone_cmd = verify_cmd->add_subcommand("coning", "chi(cA_G) = (t-1) chi(A_G) for every digraph");
  cone_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(2, 4));
  cone_cmd->add_option("--k", k, "Level k")->required()->check(CLI::Range(0, 2));

  verify_cmd->add_subcommand("cases", "Lifting classification of 3-vertex signed graphs");

  std::string filter;
  auto* enum_cmd = app.add_subcommand("enumerate", "Print digraphs in the text format");
  enum_cmd->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(1, 5));
  enum_cmd->add_option("--filter", filter, "Keep only a1a2, forbidden, or eliminable digraphs")
      ->check(CLI::IsMember({"a1a2", "forbidden", "eliminable"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) {
      const Digraph g = parse_digraph(read_input(input));
      const AnalysisReport r = analyze(g, k);
      std::cout << (as_json ? format_report_json(r) + "\n" : format_report_text(r));
      return 0;
    }
    if (verify_cmd->parsed()) {
      ProgressFn pf = progress ? progress_printer("progress") : ProgressFn{};
      if (prop_cmd->parsed()) return report(verify_proposition_char(n, pf));
      if (lemma_cmd->parsed()) return report(verify_lemma_vectors(k_max));
      if (fact_cmd->parsed()) return report(verify_factorization(n, k, pf));
      if (loc_cmd->parsed()) return report(verify_localization(n, k, exhaustive, samples, pf));
      if (cone_cmd->parsed()) return report(verify_coning(n, k, pf));
      return report(verify_case_classification());
    }
    if (enum_cmd->parsed()) {
      std::uint64_t printed = 0;
      for (const Digraph& g : enumerate_digraphs(n)) {
        bool keep = true;
        if (filter == "a1a2") keep = find_a1_a2_ordering(g).has_value();
        else if (filter == "forbidden") keep = find_forbidden_triple(g).has_value();
        else if (filter == "eliminable") keep = find_elimination_ordering(sign_map(g)).has_value();
        if (!keep) continue;
        if (printed++) std::cout << '\n';
        std::cout << format_digraph_text(g);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
