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

#include "braidfree/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace braidfree {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

int json_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<std::pair<int, int>> json_pairs(const json& obj, const char* key) {
  std::vector<std::pair<int, int>> out;
  if (!obj.contains(key)) return out;
  const json& list = obj.at(key);
  if (!list.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != 2) {
      throw std::invalid_argument(std::string("entries of \"") + key + "\" must be [i, j] pairs");
    }
    out.emplace_back(json_int(item[0], "vertex label"), json_int(item[1], "vertex label"));
  }
  return out;
}

int json_vertex_count(const json& obj) {
  if (!obj.is_object() || !obj.contains("n")) throw std::invalid_argument("JSON object with \"n\" expected");
  const int n = json_int(obj.at("n"), "\"n\"");
  if (n < 0 || n > Digraph::kMaxVertices) throw std::invalid_argument("vertex count out of range");
  return n;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
  json list = json::array();
  for (auto [i, j] : pairs) list.push_back({i, j});
  return list;
}

json digraph_json(const Digraph& g) { return {{"n", g.size()}, {"edges", pairs_json(g.arcs())}}; }

json signed_graph_json(const SignedGraph& sg) {
  return {{"n", sg.size()}, {"plus", pairs_json(sg.plus_edges())}, {"minus", pairs_json(sg.minus_edges())}};
}

json ordering_json(const std::optional<VertexOrdering>& ord) {
  return ord ? json(ord->sequence()) : json(nullptr);
}

std::string ordering_text(const std::optional<VertexOrdering>& ord) { return ord ? ord->to_string() : "none"; }

}  // namespace

Digraph parse_digraph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<Digraph> g;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto number = [&](const std::string& s) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != s.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected an integer, got '" + s + "'");
      }
      return v;
    };
    if (!g) {
      if (tok.size() != 2 || tok[0] != "n") {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'n <count>'");
      }
      g.emplace(number(tok[1]));
      continue;
    }
    if (tok.size() != 2) throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'i j'");
    try {
      g->add_arc(number(tok[0]), number(tok[1]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!g) throw std::invalid_argument("empty digraph description");
  return *g;
}

std::string format_digraph_text(const Digraph& g) {
  std::ostringstream os;
  os << "n " << g.size() << '\n';
  for (auto [i, j] : g.arcs()) os << i << ' ' << j << '\n';
  return os.str();
}

Digraph parse_digraph_json(std::string_view text) {
  const json obj = parse_json(text);
  const int n = json_vertex_count(obj);
  const auto arcs = json_pairs(obj, "edges");
  return Digraph(n, arcs);
}

std::string format_digraph_json(const Digraph& g) { return digraph_json(g).dump(); }

Digraph parse_digraph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_digraph_json(text);
  return parse_digraph_text(text);
}

SignedGraph parse_signed_graph_json(std::string_view text) {
  const json obj = parse_json(text);
  const int n = json_vertex_count(obj);
  return SignedGraph(n, json_pairs(obj, "plus"), json_pairs(obj, "minus"));
}

std::string format_signed_graph_json(const SignedGraph& sg) { return signed_graph_json(sg).dump(); }

std::string format_polynomial_json(const IntPolynomial& p) { return json(p.coeffs()).dump(); }

std::string format_report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "digraph: n=" << r.digraph.size() << " arcs=";
  const auto arcs = r.digraph.arcs();
  if (arcs.empty()) os << "none";
  for (std::size_t a = 0; a < arcs.size(); ++a) os << (a ? " " : "") << '(' << arcs[a].first << ',' << arcs[a].second << ')';
  os << '\n';
  os << "k: " << r.k << '\n';
  os << "signed graph: " << to_string(r.signed_graph) << '\n';
  os << "multiplicities:";
  for (const auto& [pair, m] : r.multiplicity.mult) os << " {" << pair.first << ',' << pair.second << "}:" << m;
  os << '\n';
  os << "forbidden triple: ";
  if (r.forbidden) {
    os << to_string(r.forbidden->kind) << " (" << r.forbidden->witness[0] << ',' << r.forbidden->witness[1] << ','
       << r.forbidden->witness[2] << ")\n";
  } else {
    os << "none\n";
  }
  os << "(A1)/(A2) ordering: " << ordering_text(r.a1a2_ordering) << '\n';
  os << "elimination ordering: " << ordering_text(r.elimination_ordering) << '\n';
  os << "hyperplanes: " << r.hyperplane_count << '\n';
  os << "chi(A): " << r.chi.to_string() << '\n';
  os << "chi(cA): " << r.chi_cone.to_string() << '\n';
  os << "roots of chi(cA): ";
  if (r.cone_roots) {
    os << '{';
    for (std::size_t i = 0; i < r.cone_roots->size(); ++i) os << (i ? "," : "") << (*r.cone_roots)[i];
    os << "}\n";
  } else {
    os << "no integer split\n";
  }
  os << "verdict: " << to_string(r.verdict) << '\n';
  return os.str();
}

std::string format_report_json(const AnalysisReport& r) {
  json forbidden = nullptr;
  if (r.forbidden) {
    forbidden = {{"kind", std::string(to_string(r.forbidden->kind))},
                 {"witness", {r.forbidden->witness[0], r.forbidden->witness[1], r.forbidden->witness[2]}}};
  }
  json mult = json::array();
  for (const auto& [pair, m] : r.multiplicity.mult) mult.push_back({pair.first, pair.second, m});
  json out = {
      {"digraph", digraph_json(r.digraph)},
      {"k", r.k},
      {"signed_graph", signed_graph_json(r.signed_graph)},
      {"multiplicity", mult},
      {"forbidden_pattern", forbidden},
      {"a1a2_ordering", ordering_json(r.a1a2_ordering)},
      {"elimination_ordering", ordering_json(r.elimination_ordering)},
      {"hyperplanes", r.hyperplane_count},
      {"chi", r.chi.coeffs()},
      {"chi_text", r.chi.to_string()},
      {"chi_cone", r.chi_cone.coeffs()},
      {"chi_cone_text", r.chi_cone.to_string()},
      {"cone_roots", r.cone_roots ? json(*r.cone_roots) : json(nullptr)},
      {"verdict", std::string(to_string(r.verdict))},
  };
  return out.dump();
}

std::string format_summary_text(const VerifySummary& s) {
  std::ostringstream os;
  os << s.name << ": checked " << s.checked << ", violations " << s.violation_count << '\n';
  for (const auto& [key, value] : s.counts) os << "  " << key << ": " << value << '\n';
  for (const auto& v : s.violations) os << "  VIOLATION " << v << '\n';
  if (s.violation_count > s.violations.size()) {
    os << "  ... " << (s.violation_count - s.violations.size()) << " more\n";
  }
  return os.str();
}

}  // namespace braidfree
