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

// Text and JSON forms of the library's values. Vertex labels are 0-based
// everywhere. Parse errors throw std::invalid_argument.

#ifndef BRAIDFREE_IO_HPP
#define BRAIDFREE_IO_HPP

#include <string>
#include <string_view>

#include "braidfree/digraph.hpp"
#include "braidfree/polynomial.hpp"
#include "braidfree/signed_graph.hpp"
#include "braidfree/verify.hpp"

namespace braidfree {

/// `n <count>` on the first line, then one `i j` arc per line. `#` starts a
/// comment; blank lines are ignored.
Digraph parse_digraph_text(std::string_view text);
std::string format_digraph_text(const Digraph& g);

/// {"n": 3, "edges": [[0,1],[1,2]]}
Digraph parse_digraph_json(std::string_view text);
std::string format_digraph_json(const Digraph& g);

/// JSON when the first non-space character is '{', text otherwise.
Digraph parse_digraph(std::string_view text);

/// {"n": 3, "plus": [[0,1]], "minus": [[1,2]]}
SignedGraph parse_signed_graph_json(std::string_view text);
std::string format_signed_graph_json(const SignedGraph& sg);

/// Ascending coefficient list, e.g. [0,7,-5,1].
std::string format_polynomial_json(const IntPolynomial& p);

std::string format_report_text(const AnalysisReport& r);
/// Single-line JSON object; identical reports give identical bytes.
std::string format_report_json(const AnalysisReport& r);

std::string format_summary_text(const VerifySummary& s);

}  // namespace braidfree

#endif  // BRAIDFREE_IO_HPP
