// Copyright 2026 The Authors.
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

#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "patsum/common.hpp"
#include "patsum/database.hpp"
#include "patsum/itemset.hpp"

namespace patsum {

/// A database restricted item-wise to one itemset. Row i corresponds to
/// tid i+1; equivalence of projections is multiset equality of the rows.
struct Projection {
  Itemset onto;
  std::vector<Itemset> rows;  // each a subset of onto

  std::vector<Itemset> sorted_rows() const {
    std::vector<Itemset> out(rows);
    std::sort(out.begin(), out.end(), card_lex_less);
    return out;
  }

  bool equivalent(const Projection& other) const {
    return onto == other.onto && sorted_rows() == other.sorted_rows();
  }
};

inline Projection project(const TransactionDatabase& db, const Itemset& onto) {
  Projection p;
  p.onto = onto;
  p.rows.reserve(db.size());
  for (const Itemset& row : db.rows()) p.rows.push_back(onto.intersect(row));
  return p;
}

/// Restriction of a projection to a sub-itemset of its domain.
inline Projection restrict(const Projection& p, const Itemset& onto) {
  Projection out;
  out.onto = onto;
  out.rows.reserve(p.rows.size());
  for (const Itemset& row : p.rows) out.rows.push_back(onto.intersect(row));
  return out;
}

inline long long support(const Itemset& x, const Projection& p) {
  long long count = 0;
  for (const Itemset& row : p.rows)
    if (x.subset_of(row)) ++count;
  return count;
}

/// Text form: "# onto: i1 i2 ..." then one FIMI row per line.
inline std::string to_text(const Projection& p) {
  std::string out = "# onto: " + p.onto.str() + "\n";
  for (const Itemset& row : p.rows) {
    out += row.str();
    out += '\n';
  }
  return out;
}

inline Projection parse_projection(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string line;
  // Other comment lines (e.g. a tool banner) may precede the domain header.
  std::size_t header_line = 0;
  bool found = false;
  while (std::getline(stream, line)) {
    ++header_line;
    if (line.rfind("# onto:", 0) == 0) {
      found = true;
      break;
    }
    if (line.empty() || line[0] != '#') break;
  }
  if (!found) throw ParseError("expected '# onto: ...' header", header_line);

  std::istringstream header(line.substr(7));
  std::vector<Item> onto_items;
  std::string token;
  while (header >> token) {
    try {
      onto_items.push_back(static_cast<Item>(std::stoul(token)));
    } catch (const std::logic_error&) {
      throw ParseError("non-integer item '" + token + "' in header", 1);
    }
  }
  Projection p;
  p.onto = Itemset(std::move(onto_items));

  std::size_t line_no = header_line;
  while (std::getline(stream, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<Item> items;
    while (fields >> token) {
      try {
        items.push_back(static_cast<Item>(std::stoul(token)));
      } catch (const std::logic_error&) {
        throw ParseError("non-integer item '" + token + "'", line_no);
      }
    }
    Itemset row(std::move(items));
    if (!row.subset_of(p.onto))
      throw ParseError("row {" + row.str() +
                           "} is not a subset of the projection domain",
                       line_no);
    p.rows.push_back(std::move(row));
  }
  return p;
}

}  // namespace patsum
