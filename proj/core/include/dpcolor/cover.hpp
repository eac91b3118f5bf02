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

// Full 2-fold covers in signed form.
//
// Every vertex v of G owns two cover vertices, the poor vertex p(v) and the
// rich vertex r(v). A full cover puts a perfect matching between L(u) and
// L(v) for every edge uv, so the cover is fixed by one sign per edge:
//
//   Parallel:  p(u)~p(v) and r(u)~r(v)
//   Twisted:   p(u)~r(v) and r(u)~p(v)
//
// An H-map picks one of p(v), r(v) per vertex. Poor and rich are not
// interchangeable (their capacities differ), so no switching-class
// reduction is applied anywhere.

#ifndef DPCOLOR_COVER_HPP_
#define DPCOLOR_COVER_HPP_

#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

enum class Sign : std::uint8_t { kParallel = 0, kTwisted = 1 };
enum class Color : std::uint8_t { kPoor = 0, kRich = 1 };

constexpr Color flip(Color c) noexcept {
  return c == Color::kPoor ? Color::kRich : Color::kPoor;
}
constexpr Sign flip(Sign s) noexcept {
  return s == Sign::kParallel ? Sign::kTwisted : Sign::kParallel;
}

// True iff the chosen cover vertices of the two endpoints are adjacent.
constexpr bool linked(Sign s, Color a, Color b) noexcept {
  return (s == Sign::kParallel) == (a == b);
}

// Capacity of the cover vertex of color `c`.
constexpr int capacity_of(const Capacity& cap, Color c) noexcept {
  return c == Color::kPoor ? cap.poor : cap.rich;
}

class Signing {
 public:
  Signing() = default;
  explicit Signing(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  static Signing uniform(int num_edges, Sign s);

  // The signing at position `index` in lexicographic order (Parallel < Twisted,
  // edge 0 most significant). Requires num_edges <= 63.
  static Signing from_index(int num_edges, std::uint64_t index);

  // Accepts "P"/"T" or "0"/"1" characters.
  static Signing parse(std::string_view text);

  std::uint64_t index() const;

  int size() const { return static_cast<int>(signs_.size()); }
  Sign operator[](EdgeId e) const { return signs_[e]; }
  void set(EdgeId e, Sign s) { signs_[e] = s; }
  const std::vector<Sign>& signs() const { return signs_; }

  // Moves to the lexicographic successor. Returns false after the last one.
  bool advance();

  std::string to_string() const;

  friend bool operator==(const Signing&, const Signing&) = default;

 private:
  std::vector<Sign> signs_;
};

// The H-map phi as one color per vertex.
class HMap {
 public:
  HMap() = default;
  explicit HMap(std::vector<Color> colors) : colors_(std::move(colors)) {}

  static HMap uniform(int num_vertices, Color c);
  // Accepts "p"/"r" (any case) characters.
  static HMap parse(std::string_view text);

  int size() const { return static_cast<int>(colors_.size()); }
  Color operator[](Vertex v) const { return colors_[v]; }
  void set(Vertex v, Color c) { colors_[v] = c; }
  const std::vector<Color>& colors() const { return colors_; }

  std::string to_string() const;

  friend bool operator==(const HMap&, const HMap&) = default;

 private:
  std::vector<Color> colors_;
};

// Degree of phi(u) in H_phi for every u. Throws GraphError on size mismatch.
std::vector<int> phi_degrees(const SimpleGraph& g, const Signing& s,
                             const HMap& phi);

enum class Parity { kEven, kOdd };

// Even iff the two edges at the degree-2 vertex y carry equal signs; then
// each cover vertex of y sees two cover vertices of one type.
Parity vertex_parity(const SimpleGraph& g, const Signing& s, Vertex y);

inline constexpr int kDefaultEnumerationLimit = 24;

class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads DPCOLOR_ENUM_LIMIT, falling back to kDefaultEnumerationLimit.
int enumeration_limit_from_env();

// All 2^|E| signings of a graph in lexicographic order. Index ranges can be
// consumed independently, which is how the parallel searches shard work.
class SigningSpace {
 public:
  class Iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Signing;
    using difference_type = std::ptrdiff_t;
    using pointer = const Signing*;
    using reference = const Signing&;

    Iterator() = default;
    Iterator(int num_edges, std::uint64_t index)
        : current_(Signing::from_index(num_edges, index)), index_(index) {}

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    Iterator& operator++() {
      current_.advance();
      ++index_;
      return *this;
    }
    void operator++(int) { ++*this; }
    std::uint64_t index() const { return index_; }
    friend bool operator==(const Iterator& a, const Iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    Signing current_;
    std::uint64_t index_ = 0;
  };

  class Range {
   public:
    Range(int num_edges, std::uint64_t begin, std::uint64_t end)
        : num_edges_(num_edges), begin_(begin), end_(end) {}
    Iterator begin() const { return Iterator(num_edges_, begin_); }
    Iterator end() const { return Iterator(num_edges_, end_); }

   private:
    int num_edges_;
    std::uint64_t begin_;
    std::uint64_t end_;
  };

  // Throws EnumerationLimitError if |E| exceeds `limit`.
  SigningSpace(const SimpleGraph& g, int limit = kDefaultEnumerationLimit);

  std::uint64_t size() const { return std::uint64_t{1} << num_edges_; }
  int num_edges() const { return num_edges_; }
  Signing at(std::uint64_t index) const {
    return Signing::from_index(num_edges_, index);
  }

  Iterator begin() const { return Iterator(num_edges_, 0); }
  Iterator end() const { return Iterator(num_edges_, size()); }
  Range range(std::uint64_t begin, std::uint64_t end) const;

 private:
  int num_edges_;
};

SigningSpace enumerate_signings(const SimpleGraph& g,
                                int limit = kDefaultEnumerationLimit);

// Explicit cover graph H on 2n vertices (2v = p(v), 2v+1 = r(v)), used for
// DOT export and as a test oracle.
struct CoverGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

CoverGraph expand_cover(const SimpleGraph& g, const Signing& s);

}  // namespace dpcolor

#endif  // DPCOLOR_COVER_HPP_
