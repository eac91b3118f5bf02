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

#include "dpcolor/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dpcolor::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw FormatError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) return std::nullopt;
  return field<T>(j, key);
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Json& j) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (pair.size() != 2) throw FormatError("each edge must be a pair [u, v]");
    edges.emplace_back(pair[0], pair[1]);
  }
  return edges;
}

std::vector<Capacity> capacity_list(const Json& j) {
  std::vector<Capacity> out;
  for (const auto& pair : field<std::vector<std::vector<int>>>(j, "capacities")) {
    if (pair.size() != 2) throw FormatError("each capacity must be a pair [c1, c2]");
    out.push_back({pair[0], pair[1]});
  }
  return out;
}

CapacityMap make_capacities(int i, int j, std::vector<Capacity> values) {
  try {
    return CapacityMap(i, j, std::move(values));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

std::string trimmed(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

// A JSON array of one-character strings, or a bare string.
std::string symbol_string(std::string_view text, const char* what) {
  const std::string body = trimmed(text);
  if (body.empty() || body.front() != '[') {
    if (body.size() >= 2 && body.front() == '"' && body.back() == '"') {
      return body.substr(1, body.size() - 2);
    }
    return body;
  }
  const Json j = parse_json(body);
  std::string out;
  for (const Json& item : j) {
    if (!item.is_string() || item.get<std::string>().size() != 1) {
      throw FormatError(std::string(what) + " entries must be one-character strings");
    }
    out += item.get<std::string>();
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

GraphFile parse_graph(std::string_view text) {
  const Json j = parse_json(text);
  GraphFile out;
  try {
    out.graph = SimpleGraph(field<int>(j, "n"), edge_list(j));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
  out.i = optional_field<int>(j, "i");
  out.j = optional_field<int>(j, "j");
  if (j.contains("capacities")) {
    if (!out.i || !out.j) throw FormatError("capacities need \"i\" and \"j\"");
    out.capacities = make_capacities(*out.i, *out.j, capacity_list(j));
    if (out.capacities->size() != out.graph.num_vertices()) {
      throw FormatError("capacity list length does not match n");
    }
  }
  return out;
}

std::string graph_to_json(const SimpleGraph& g, const CapacityMap* capacities) {
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  if (capacities) {
    j["i"] = capacities->i();
    j["j"] = capacities->j();
    Json caps = Json::array();
    for (const Capacity& c : capacities->values()) caps.push_back({c.poor, c.rich});
    j["capacities"] = caps;
  }
  return dump(j);
}

MultiGraph parse_multigraph(std::string_view text) {
  const Json j = parse_json(text);
  try {
    return MultiGraph(field<int>(j, "n"), edge_list(j));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

std::vector<int> parse_bounds(std::string_view text) {
  const Json j = parse_json(text);
  try {
    if (j.is_array()) return j.get<std::vector<int>>();
  } catch (const Json::exception&) {
    throw FormatError("bounds must be integers");
  }
  return field<std::vector<int>>(j, "bounds");
}

CapacityMap parse_capacities(std::string_view text) {
  const Json j = parse_json(text);
  return make_capacities(field<int>(j, "i"), field<int>(j, "j"), capacity_list(j));
}

Signing parse_signing(std::string_view text) {
  try {
    return Signing::parse(symbol_string(text, "signing"));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

std::string signing_to_json(const Signing& s) {
  Json j = Json::array();
  for (Sign sign : s.signs()) j.push_back(sign == Sign::kParallel ? "P" : "T");
  return j.dump() + "\n";
}

HMap parse_hmap(std::string_view text) {
  try {
    return HMap::parse(symbol_string(text, "H-map"));
  } catch (const GraphError& e) {
    throw FormatError(e.what());
  }
}

std::string hmap_to_json(const HMap& phi) {
  Json j = Json::array();
  for (Color c : phi.colors()) j.push_back(c == Color::kPoor ? "p" : "r");
  return j.dump() + "\n";
}

std::string spec_to_json(const ConstructionSpec& spec) {
  Json j;
  j["i"] = spec.i;
  j["j"] = spec.j;
  j["m"] = spec.m;
  j["path"] = spec.path;
  j["path_edges"] = spec.path_edges;
  Json flags = Json::array();
  for (const FlagLayout& f : spec.flags) {
    Json flag;
    flag["base"] = f.base;
    flag["top"] = f.top;
    flag["middles"] = f.middles;
    flag["base_top"] = f.base_top;
    flag["base_middle"] = f.base_middle;
    flag["top_middle"] = f.top_middle;
    flags.push_back(flag);
  }
  j["flags"] = flags;
  j["flags_at"] = spec.flags_at;
  return dump(j);
}

CacheEntry parse_cache(std::string_view text) {
  const Json j = parse_json(text);
  CacheEntry out;
  out.i = field<int>(j, "i");
  out.j = field<int>(j, "j");
  out.verified = field<bool>(j, "verified");
  out.case_count = field<std::uint64_t>(j, "case_count");
  out.checksum = field<std::uint64_t>(j, "checksum");
  return out;
}

std::string cache_to_json(const CacheEntry& entry) {
  Json j;
  j["i"] = entry.i;
  j["j"] = entry.j;
  j["verified"] = entry.verified;
  j["case_count"] = entry.case_count;
  j["checksum"] = entry.checksum;
  return dump(j);
}

std::string graph_to_dot(const SimpleGraph& g, const ConstructionSpec* spec) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  if (spec) {
    for (std::size_t t = 0; t < spec->path.size(); ++t) {
      out << "  " << spec->path[t] << " [label=\"v" << t + 1 << "\", style=filled];\n";
    }
    for (std::size_t f = 0; f < spec->flags.size(); ++f) {
      const FlagLayout& flag = spec->flags[f];
      out << "  subgraph cluster_flag" << f << " {\n    label=\"flag " << f << "\";\n";
      for (Vertex v : flag.vertices()) out << "    " << v << ";\n";
      out << "  }\n";
    }
  } else {
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

std::string cover_to_dot(const SimpleGraph& g, const Signing& s) {
  const CoverGraph h = expand_cover(g, s);
  std::ostringstream out;
  out << "graph H {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  p" << v << " [label=\"p(" << v << ")\"];\n";
    out << "  r" << v << " [label=\"r(" << v << ")\", style=filled];\n";
  }
  auto name = [](int x) {
    return std::string(x % 2 == 0 ? "p" : "r") + std::to_string(x / 2);
  };
  for (const auto& [a, b] : h.edges) out << "  " << name(a) << " -- " << name(b) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_files(std::span<const std::pair<std::filesystem::path, std::string>> files) {
  std::vector<std::filesystem::path> temporaries;
  auto cleanup = [&] {
    std::error_code ignored;
    for (const auto& t : temporaries) std::filesystem::remove(t, ignored);
  };
  for (const auto& [path, content] : files) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    temporaries.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) {
      cleanup();
      throw FormatError("cannot write " + path.string());
    }
  }
  for (std::size_t k = 0; k < files.size(); ++k) {
    std::error_code ec;
    std::filesystem::rename(temporaries[k], files[k].first, ec);
    if (ec) {
      cleanup();
      throw FormatError("cannot write " + files[k].first.string() + ": " + ec.message());
    }
  }
}

}  // namespace dpcolor::io
