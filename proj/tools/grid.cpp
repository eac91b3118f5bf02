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

#include "grid.hpp"

#include <array>
#include <cctype>
#include <string>

namespace dpcolor::tools {
namespace {

int slot(char name) {
  switch (name) {
    case 'i': return 0;
    case 'j': return 1;
    case 'm': return 2;
    default: return -1;
  }
}

// c0 + c_i*i + c_j*j + c_m*m
struct Affine {
  long long constant = 0;
  std::array<long long, 3> coef{};

  long long eval(const std::array<int, 3>& values) const {
    long long v = constant;
    for (int k = 0; k < 3; ++k) v += coef[k] * values[k];
    return v;
  }
};

Affine parse_affine(std::string_view text, const std::array<bool, 3>& bound) {
  Affine out;
  std::size_t pos = 0;
  if (text.empty()) throw GridError("empty expression");
  while (pos < text.size()) {
    long long sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw GridError("expected '+' or '-' in \"" + std::string(text) + "\"");
    }
    long long number = 1;
    bool has_number = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      number = 0;
      has_number = true;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        number = number * 10 + (text[pos++] - '0');
        if (number > 1'000'000) throw GridError("grid constant too large");
      }
    }
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      const int k = slot(text[pos]);
      if (k < 0 || !bound[k]) {
        throw GridError(std::string("variable '") + text[pos] +
                        "' is unknown or not bound yet");
      }
      out.coef[k] += sign * number;
      ++pos;
    } else if (has_number) {
      out.constant += sign * number;
    } else {
      throw GridError("malformed expression \"" + std::string(text) + "\"");
    }
  }
  return out;
}

struct Term {
  int var;
  Affine lo;
  Affine hi;
};

void expand(const std::vector<Term>& terms, std::size_t depth,
            std::array<int, 3>& values, std::vector<GridPoint>& out,
            std::size_t max_points) {
  if (depth == terms.size()) {
    if (out.size() >= max_points) throw GridError("grid has too many points");
    out.push_back({values[0], values[1], values[2]});
    return;
  }
  const Term& t = terms[depth];
  const long long lo = t.lo.eval(values);
  const long long hi = t.hi.eval(values);
  for (long long v = lo; v <= hi; ++v) {
    values[t.var] = static_cast<int>(v);
    expand(terms, depth + 1, values, out, max_points);
  }
}

}  // namespace

std::vector<GridPoint> parse_grid(std::string_view text, std::size_t max_points) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  std::array<bool, 3> bound{};
  std::vector<Term> terms;
  std::string_view rest = compact;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view term = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (term.size() < 3 || term[1] != '=' || slot(term[0]) < 0) {
      throw GridError("grid terms look like i=LO..HI; got \"" + std::string(term) + "\"");
    }
    const int var = slot(term[0]);
    if (bound[var]) throw GridError(std::string("variable '") + term[0] + "' bound twice");
    const std::string_view range = term.substr(2);
    const std::size_t dots = range.find("..");
    Term t{var, {}, {}};
    if (dots == std::string_view::npos) {
      t.lo = t.hi = parse_affine(range, bound);
    } else {
      t.lo = parse_affine(range.substr(0, dots), bound);
      t.hi = parse_affine(range.substr(dots + 2), bound);
    }
    bound[var] = true;
    terms.push_back(t);
  }
  if (!bound[0] || !bound[1] || !bound[2]) {
    throw GridError("grid must bind i, j and m");
  }
  std::vector<GridPoint> out;
  std::array<int, 3> values{};
  expand(terms, 0, values, out, max_points);
  return out;
}

}  // namespace dpcolor::tools
