// Copyright 2026 The dpcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpcolor/cover.hpp"

#include <algorithm>
#include <cstdlib>

namespace dpcolor {

Signing Signing::uniform(int num_edges, Sign s) {
  return Signing(std::vector<Sign>(num_edges, s));
}

Signing Signing::from_index(int num_edges, std::uint64_t index) {
  if (num_edges > 63) {
    throw EnumerationLimitError("signing index space needs " +
                                std::to_string(num_edges) + " bits");
  }
  std::vector<Sign> signs(num_edges);
  for (int e = 0; e < num_edges; ++e) {
    signs[e] = (index >> (num_edges - 1 - e) & 1) ? Sign::kTwisted : Sign::kParallel;
  }
  return Signing(std::move(signs));
}

Signing Signing::parse(std::string_view text) {
  std::vector<Sign> signs;
  signs.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'P': case 'p': case '0': signs.push_back(Sign::kParallel); break;
      case 'T': case 't': case '1': signs.push_back(Sign::kTwisted); break;
      default:
        throw GraphError(std::string("invalid signing character '") + c + "'");
    }
  }
  return Signing(std::move(signs));
}

std::uint64_t Signing::index() const {
  if (size() > 63) throw EnumerationLimitError("signing too long for an index");
  std::uint64_t out = 0;
  for (Sign s : signs_) out = out << 1 | static_cast<std::uint64_t>(s);
  return out;
}

bool Signing::advance() {
  for (auto it = signs_.rbegin(); it != signs_.rend(); ++it) {
    if (*it == Sign::kParallel) {
      *it = Sign::kTwisted;
      return true;
    }
    *it = Sign::kParallel;
  }
  return false;
}

std::string Signing::to_string() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out += s == Sign::kParallel ? 'P' : 'T';
  return out;
}

HMap HMap::uniform(int num_vertices, Color c) {
  return HMap(std::vector<Color>(num_vertices, c));
}

HMap HMap::parse(std::string_view text) {
  std::vector<Color> colors;
  colors.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'p': case 'P': colors.push_back(Color::kPoor); break;
      case 'r': case 'R': colors.push_back(Color::kRich); break;
      default:
        throw GraphError(std::string("invalid H-map character '") + c + "'");
    }
  }
  return HMap(std::move(colors));
}

std::string HMap::to_string() const {
  std::string out;
  out.reserve(colors_.size());
  for (Color c : colors_) out += c == Color::kPoor ? 'p' : 'r';
  return out;
}

std::vector<int> phi_degrees(const SimpleGraph& g, const Signing& s,
                             const HMap& phi) {
  if (s.size() != g.num_edges()) {
    throw GraphError("signing has " + std::to_string(s.size()) +
                     " entries for " + std::to_string(g.num_edges()) + " edges");
  }
  if (phi.size() != g.num_vertices()) {
    throw GraphError("H-map has " + std::to_string(phi.size()) +
                     " entries for " + std::to_string(g.num_vertices()) +
                     " vertices");
  }
  std::vector<int> degree(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& uv = g.edges()[e];
    if (linked(s[e], phi[uv.u], phi[uv.v])) {
      ++degree[uv.u];
      ++degree[uv.v];
    }
  }
  return degree;
}

Parity vertex_parity(const SimpleGraph& g, const Signing& s, Vertex y) {
  const auto inc = g.incidences(y);
  if (inc.size() != 2) {
    throw GraphError("vertex " + std::to_string(y) + " has degree " +
                     std::to_string(inc.size()) + ", parity needs degree 2");
  }
  if (s.size() != g.num_edges()) throw GraphError("signing size mismatch");
  return s[inc[0].edge] == s[inc[1].edge] ? Parity::kEven : Parity::kOdd;
}

int enumeration_limit_from_env() {
  if (const char* raw = std::getenv("DPCOLOR_ENUM_LIMIT")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end != raw && *end == '\0' && value >= 0 && value <= 62) {
      return static_cast<int>(value);
    }
  }
  return kDefaultEnumerationLimit;
}

SigningSpace::SigningSpace(const SimpleGraph& g, int limit)
    : num_edges_(g.num_edges()) {
  const int cap = std::min(limit, 62);
  if (num_edges_ > cap) {
    throw EnumerationLimitError(
        "graph has " + std::to_string(num_edges_) +
        " edges; enumerating all signings is limited to " + std::to_string(cap));
  }
}

SigningSpace::Range SigningSpace::range(std::uint64_t begin,
                                        std::uint64_t end) const {
  end = std::min(end, size());
  begin = std::min(begin, end);
  return Range(num_edges_, begin, end);
}

SigningSpace enumerate_signings(const SimpleGraph& g, int limit) {
  return SigningSpace(g, limit);
}

CoverGraph expand_cover(const SimpleGraph& g, const Signing& s) {
  if (s.size() != g.num_edges()) throw GraphError("signing size mismatch");
  CoverGraph h;
  h.num_vertices = 2 * g.num_vertices();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& uv = g.edges()[e];
    const int pu = 2 * uv.u, ru = pu + 1, pv = 2 * uv.v, rv = pv + 1;
    if (s[e] == Sign::kParallel) {
      h.edges.emplace_back(pu, pv);
      h.edges.emplace_back(ru, rv);
    } else {
      h.edges.emplace_back(pu, rv);
      h.edges.emplace_back(ru, pv);
    }
  }
  return h;
}

}  // namespace dpcolor
