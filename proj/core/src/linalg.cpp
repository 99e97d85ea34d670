#include "racah/linalg.hpp"

namespace racah {

namespace {

// Divides the row by the gcd of its entries and makes the lead positive.
void reduce_content(SparseIntRow& row) {
  if (row.empty()) return;
  Integer g(0);
  for (const auto& [col, v] : row) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [col, v] : row) v /= g;
}

// lead(p) * row - lead(row) * p; the two leads sit on the same column, so
// the result starts strictly to the right of it.
SparseIntRow eliminate(const SparseIntRow& row, const SparseIntRow& p) {
  const Integer& lr = row.front().second;
  const Integer& lp = p.front().second;
  SparseIntRow out;
  out.reserve(row.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < p.size()) {
    if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
      out.emplace_back(row[i].first, lp * row[i].second);
      ++i;
    } else if (i == row.size() || p[j].first < row[i].first) {
      out.emplace_back(p[j].first, -lr * p[j].second);
      ++j;
    } else {
      Integer v = lp * row[i].second - lr * p[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t exact_rank(std::vector<SparseIntRow> rows) {
  std::map<std::size_t, SparseIntRow> pivots;  // keyed by leading column
  std::size_t rank = 0;
  for (auto& incoming : rows) {
    SparseIntRow cur = std::move(incoming);
    reduce_content(cur);
    while (!cur.empty()) {
      auto it = pivots.find(cur.front().first);
      if (it == pivots.end()) {
        pivots.emplace(cur.front().first, std::move(cur));
        ++rank;
        break;
      }
      cur = eliminate(cur, it->second);
      reduce_content(cur);
    }
  }
  return rank;
}

}  // namespace racah
