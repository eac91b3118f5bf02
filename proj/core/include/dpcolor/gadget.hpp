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

// Exhaustive flag oracle and the compositional all-covers checker.
//
// A flag touches the rest of the graph only through its base vertex, so once
// the base color is fixed the flag contributes to the base degree the
// minimum number of links over all valid colorings of its own vertices, and
// nothing else. The trichotomy check measures that minimum for every flag
// signing: 1 for a rich base on a parallel flag, 1 for a poor base on a
// twisted flag, 0 otherwise, and 0 everywhere once any flag edge is deleted.
// With that established for (i, j), a flag of class parallel (twisted)
// lowers the rich (poor) capacity of its base by one, and colorability of
// a flagged path over all covers reduces to colorability of the bare path
// over all (class counts, path signing) combinations.

#ifndef DPCOLOR_GADGET_HPP_
#define DPCOLOR_GADGET_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dpcolor/construction.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor {

class GadgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Minimum number of flag neighbors of the base over all valid extensions,
// per base color. nullopt: no valid extension exists.
struct FlagProfile {
  std::optional<int> poor;
  std::optional<int> rich;

  friend bool operator==(const FlagProfile&, const FlagProfile&) = default;
};

std::string to_string(const FlagProfile& p);

inline int flag_edge_count(int i) { return 2 * i + 3; }

// `flag_signing` follows the flag-local edge order (base-top, base-middles,
// top-middles) with `deleted_edge`, if any, left out. Internal vertices get
// uniform (i, j) capacities. Requires i >= 3 and j >= 2i+1.
FlagProfile flag_profile(int i, int j, const Signing& flag_signing,
                         std::optional<int> deleted_edge = std::nullopt);

// Syntactic class of an intact flag-local signing.
FlagRole classify_flag_signing(int i, const Signing& flag_signing);

FlagProfile expected_profile(FlagRole role);

struct TrichotomyFailure {
  Signing signing;
  std::optional<int> deleted_edge;
  FlagProfile expected;
  FlagProfile actual;
};

struct TrichotomyReport;

// Proof that the flag trichotomy holds for (i, j). Only produced by
// verify_flag_trichotomy or by a cache entry whose checksum matches.
class TrichotomyCertificate {
 public:
  int i() const { return i_; }
  int j() const { return j_; }
  std::uint64_t case_count() const { return case_count_; }
  std::uint64_t checksum() const { return checksum_; }

 private:
  TrichotomyCertificate(int i, int j, std::uint64_t cases, std::uint64_t checksum)
      : i_(i), j_(j), case_count_(cases), checksum_(checksum) {}

  friend TrichotomyReport verify_flag_trichotomy(int i, int j, int workers);
  friend TrichotomyCertificate certificate_from_cache(int i, int j, bool verified,
                                                      std::uint64_t case_count,
                                                      std::uint64_t checksum);

  int i_;
  int j_;
  std::uint64_t case_count_;
  std::uint64_t checksum_;
};

struct TrichotomyReport {
  int i = 0;
  int j = 0;
  std::uint64_t intact_cases = 0;   // 2^(2i+3)
  std::uint64_t deleted_cases = 0;  // (2i+3) * 2^(2i+2)
  std::vector<TrichotomyFailure> failures;
  std::uint64_t checksum = 0;
  std::optional<TrichotomyCertificate> certificate;

  bool verified() const { return failures.empty(); }
  std::uint64_t case_count() const { return intact_cases + deleted_cases; }
};

// Checks every intact flag signing against its syntactic class and every
// single-edge-deleted flag signing against (0, 0).
TrichotomyReport verify_flag_trichotomy(int i, int j, int workers = 1);

std::uint64_t trichotomy_case_count(int i);

// Checksum a conforming run produces; derived from the syntactic classes
// alone, so a cache can be validated without redoing the search.
std::uint64_t expected_trichotomy_checksum(int i, int j);

// Throws GadgetError unless the entry describes a verified, conforming run.
TrichotomyCertificate certificate_from_cache(int i, int j, bool verified,
                                             std::uint64_t case_count,
                                             std::uint64_t checksum);

// Throws GadgetError unless the graph is exactly the path plus the listed
// flags, flags meet only at their bases, and flag vertices have uniform
// (i, j) capacities.
void validate_flag_layout(const Construction& c);

struct ClassCounts {
  int twisted = 0;
  int parallel = 0;
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct PathInstance {
  SimpleGraph graph;      // the bare path, minus a deleted path edge
  CapacityMap capacities; // base capacities reduced by the flag classes
  Signing signing;        // signs of the surviving path edges
  std::vector<ClassCounts> counts;
  std::vector<EdgeId> source_edges;  // path-instance edge -> edge of G
};

// `s` is indexed by the edges of c.graph; the entry of a deleted edge is
// ignored. A flag containing the deleted edge counts as neither class.
PathInstance reduce_to_path(const Construction& c, const Signing& s,
                            std::optional<EdgeId> deleted_edge,
                            const TrichotomyCertificate& certificate);

struct ComposedOptions {
  int workers = 1;
};

struct ComposedVerdict {
  bool colorable = false;
  std::vector<ClassCounts> witness_counts;
  std::optional<Signing> witness_path_signing;
  // A full signing of G (or G - e) realizing the witness.
  std::optional<Signing> witness;
  std::uint64_t instances = 0;  // distinct reduced instances examined
};

// All-covers colorability of c.graph (minus `deleted_edge`) through the flag
// reduction. Witnesses are the first failure in lexicographic order of
// (per-base class counts, path signing).
ComposedVerdict colorable_all_covers_composed(
    const Construction& c, std::optional<EdgeId> deleted_edge,
    const TrichotomyCertificate& certificate, const ComposedOptions& options = {});

// Criticality of a flagged path: not colorable, and colorable after deleting
// any single edge.
CriticalityReport check_critical_composed(const Construction& c,
                                          const TrichotomyCertificate& certificate,
                                          const ComposedOptions& options = {});

}  // namespace dpcolor

#endif  // DPCOLOR_GADGET_HPP_
