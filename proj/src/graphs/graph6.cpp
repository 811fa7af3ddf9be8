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

#include "qwmix/graphs/graph6.hpp"

#include <algorithm>

#include "qwmix/error.hpp"

namespace qwmix::graphs {

namespace {

constexpr unsigned char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

unsigned sextet(std::string_view text, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", base + pos);
  return c - kBias;
}

}  // namespace

WeightedGraph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = sextet(text, 0, base);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("truncated 18-bit vertex count", base + text.size());
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(text, k, base);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("truncated 36-bit vertex count", base + text.size());
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | sextet(text, k, base);
    pos = 8;
  }
  if (n == 0) throw ParseError("graph6 graph with no vertices", base);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("expected " + std::to_string(bytes) + " edge bytes, found " +
                         std::to_string(text.size() - pos),
                     base + std::min(text.size(), pos + bytes));

  WeightedGraph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const unsigned value = sextet(text, pos + k / 6, base);
      if (value & (1u << (5 - k % 6))) g.set_weight(i, j, 1);
    }
  }
  if (k % 6 != 0) {
    const unsigned value = sextet(text, pos + k / 6, base);
    if (value & ((1u << (6 - k % 6)) - 1))
      throw ParseError("nonzero padding bits", base + pos + k / 6);
  }
  return g;
}

std::string emit_graph6(const WeightedGraph& g) {
  if (!g.is_simple()) throw UnsupportedError("graph6 encodes simple graphs only");
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + kBias));
  }
  unsigned acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<unsigned>(g.weight(i, j));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace qwmix::graphs
