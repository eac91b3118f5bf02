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

// Text formats: JSON for data, DOT for pictures, CSV for reports.
//
//   graph       {"n": 3, "edges": [[0,1],[1,2]], "i": 1, "j": 2,
//                "capacities": [[1,2],[0,2],[1,-1]]}   (i, j, capacities optional)
//   multigraph  same shape, repeated pairs allowed
//   capacities  {"i": 1, "j": 2, "capacities": [[c1,c2], ...]}
//   bounds      [w0, w1, ...] or {"bounds": [...]}
//   signing     ["P","T",...] or a bare string such as "PTP" or "010"
//   H-map       ["p","r",...] or a bare string such as "prp"
//   cache       {"i","j","verified","case_count","checksum"}
//
// Output is deterministic: fixed key order, no timestamps.

#ifndef DPCOLOR_IO_HPP_
#define DPCOLOR_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpcolor/construction.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/hall.hpp"

namespace dpcolor::io {

class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphFile {
  SimpleGraph graph;
  std::optional<int> i;
  std::optional<int> j;
  std::optional<CapacityMap> capacities;
};

GraphFile parse_graph(std::string_view text);
std::string graph_to_json(const SimpleGraph& g, const CapacityMap* capacities = nullptr);

MultiGraph parse_multigraph(std::string_view text);
std::vector<int> parse_bounds(std::string_view text);

CapacityMap parse_capacities(std::string_view text);

Signing parse_signing(std::string_view text);
std::string signing_to_json(const Signing& s);

HMap parse_hmap(std::string_view text);
std::string hmap_to_json(const HMap& phi);

std::string spec_to_json(const ConstructionSpec& spec);

struct CacheEntry {
  int i = 0;
  int j = 0;
  bool verified = false;
  std::uint64_t case_count = 0;
  std::uint64_t checksum = 0;
};

CacheEntry parse_cache(std::string_view text);
std::string cache_to_json(const CacheEntry& entry);

// Undirected graph; when `spec` is given each flag becomes a cluster.
std::string graph_to_dot(const SimpleGraph& g, const ConstructionSpec* spec = nullptr);
// The cover graph H, with p(v) and r(v) drawn for every v.
std::string cover_to_dot(const SimpleGraph& g, const Signing& s);

std::string read_file(const std::filesystem::path& path);

// Writes every file or none: contents go to temporaries first and are
// renamed into place only after all writes succeed.
void write_files(std::span<const std::pair<std::filesystem::path, std::string>> files);

}  // namespace dpcolor::io

#endif  // DPCOLOR_IO_HPP_
