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

// Parameter grids such as "i=3..5,j=2i+1..2i+3,m=1..4".
//
// Each term binds one of i, j, m to an inclusive range whose ends are affine
// expressions in the variables bound by earlier terms. A single value
// ("m=2") is a range of length one.

#ifndef DPCOLOR_TOOLS_GRID_HPP_
#define DPCOLOR_TOOLS_GRID_HPP_

#include <stdexcept>
#include <string_view>
#include <vector>

namespace dpcolor::tools {

class GridError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridPoint {
  int i = 0;
  int j = 0;
  int m = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Points in nesting order: the first term varies slowest.
std::vector<GridPoint> parse_grid(std::string_view text, std::size_t max_points = 100000);

}  // namespace dpcolor::tools

#endif  // DPCOLOR_TOOLS_GRID_HPP_
