// Copyright 2026 The mcgraph Authors.
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

#ifndef MCGRAPH_GRAPH_IO_HPP_
#define MCGRAPH_GRAPH_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mcgraph/multigraph.hpp"

namespace mcg {

// graph6 for simple graphs (header ">>graph6<<" accepted on decode).
Multigraph DecodeGraph6(std::string_view text);
std::string EncodeGraph6(const Multigraph& g);  // throws kNotSimple

// Edge-list text: "n m" then m lines "u v", 0-based, parallels repeated.
std::string EncodeMg(const Multigraph& g);
Multigraph DecodeMg(std::string_view text);

// Reads every graph in a file or string. A line that parses as graph6 is one
// graph; otherwise the text is read as a sequence of .mg records. Blank lines
// and lines starting with '#' are skipped.
std::vector<Multigraph> ReadGraphs(std::string_view text);
std::vector<Multigraph> ReadGraphFile(const std::string& path);

}  // namespace mcg

#endif  // MCGRAPH_GRAPH_IO_HPP_
