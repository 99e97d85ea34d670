#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "racah/linear.hpp"

namespace racah {

// A sparse row of integers, sorted by column index.
using SparseIntRow = std::vector<std::pair<std::size_t, Integer>>;

// Rank over the rationals via fraction-free elimination: each incoming row
// is cross-multiplied against the stored pivot rows and reduced by its
// content, so all arithmetic stays integral.
std::size_t exact_rank(std::vector<SparseIntRow> rows);

// Clears denominators of a sparse vector against a fixed column indexing.
template <class Key>
SparseIntRow to_integer_row(const Linear<Key>& v, const std::map<Key, std::size_t>& columns) {
  Integer den_lcm(1);
  for (const auto& [k, c] : v.terms()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
  SparseIntRow row;
  row.reserve(v.term_count());
  for (const auto& [k, c] : v.terms())
    row.emplace_back(columns.at(k), Integer(c.get_num()) * (den_lcm / c.get_den()));
  return row;
}

// Rank of a family of sparse vectors over a shared monomial indexing.
template <class Key>
std::size_t rank_of(const std::vector<Linear<Key>>& vectors) {
  std::map<Key, std::size_t> columns;
  for (const auto& v : vectors)
    for (const auto& [k, c] : v.terms()) columns.emplace(k, 0);
  std::size_t next = 0;
  for (auto& [k, id] : columns) id = next++;

  std::vector<SparseIntRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    SparseIntRow row = to_integer_row(v, columns);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return exact_rank(std::move(rows));
}

}  // namespace racah
