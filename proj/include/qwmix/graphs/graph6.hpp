// Copyright 2026 The qwmix Authors
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

#ifndef QWMIX_GRAPHS_GRAPH6_HPP
#define QWMIX_GRAPHS_GRAPH6_HPP

#include <string>
#include <string_view>

#include "qwmix/graphs/graph.hpp"

namespace qwmix::graphs {

/// Decodes a graph6 string. An optional ">>graph6<<" prefix and trailing
/// newline are accepted. Throws ParseError carrying the offending byte offset.
WeightedGraph parse_graph6(std::string_view text);

/// Encodes a simple graph; throws UnsupportedError for weighted or looped input.
std::string emit_graph6(const WeightedGraph& g);

}  // namespace qwmix::graphs

#endif  // QWMIX_GRAPHS_GRAPH6_HPP
