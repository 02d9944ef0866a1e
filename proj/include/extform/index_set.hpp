#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace extform {

// Strictly increasing tuple of 1-based indices. The empty tuple keys the
// single coefficient of a degree-0 object.
using IndexSet = std::vector<int>;

inline bool strictly_increasing(const IndexSet& I) {
  for (std::size_t i = 1; i < I.size(); ++i)
    if (I[i - 1] >= I[i]) return false;
  return true;
}

inline bool in_range(const IndexSet& I, int n) {
  return I.empty() || (I.front() >= 1 && I.back() <= n);
}

// Sorts an arbitrary index tuple, returning the permutation sign, or nullopt
// when two indices coincide.
inline std::optional<std::pair<IndexSet, int>> sort_indices(IndexSet I) {
  int sign = 1;
  for (std::size_t i = 1; i < I.size(); ++i) {  // insertion sort, counts swaps
    std::size_t j = i;
    while (j > 0 && I[j - 1] > I[j]) {
      std::swap(I[j - 1], I[j]);
      sign = -sign;
      --j;
    }
    if (j > 0 && I[j - 1] == I[j]) return std::nullopt;
  }
  return std::make_pair(std::move(I), sign);
}

// Concatenation sign of two increasing tuples, nullopt if they intersect.
inline std::optional<std::pair<IndexSet, int>> merge_indices(const IndexSet& a,
                                                             const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return std::make_pair(std::move(out), sign);
}

// Contraction sign for J a subset of I (both increasing): the Laplace sign
// (-1)^{sum of (position of j_a in I) - a}. Returns the remaining indices.
inline std::optional<std::pair<IndexSet, int>> remove_subset(const IndexSet& I,
                                                             const IndexSet& J) {
  IndexSet rest;
  rest.reserve(I.size() - J.size());
  int sign = 1;
  std::size_t j = 0;
  for (std::size_t pos = 0; pos < I.size(); ++pos) {
    if (j < J.size() && I[pos] == J[j]) {
      // (pos+1) - (j+1) swaps modulo 2
      if ((pos - j) % 2 == 1) sign = -sign;
      ++j;
    } else {
      rest.push_back(I[pos]);
    }
  }
  if (j != J.size()) return std::nullopt;
  return std::make_pair(std::move(rest), sign);
}

inline IndexSet complement(const IndexSet& I, int n) {
  IndexSet out;
  out.reserve(n - I.size());
  std::size_t j = 0;
  for (int k = 1; k <= n; ++k) {
    if (j < I.size() && I[j] == k) {
      ++j;
    } else {
      out.push_back(k);
    }
  }
  return out;
}

inline IndexSet full_set(int n) {
  IndexSet out(n);
  for (int k = 1; k <= n; ++k) out[k - 1] = k;
  return out;
}

// All strictly increasing p-tuples in 1..n, lexicographic order.
inline std::vector<IndexSet> all_index_sets(int n, int p) {
  std::vector<IndexSet> out;
  if (p < 0 || p > n) return out;
  IndexSet cur(p);
  for (int k = 0; k < p; ++k) cur[k] = k + 1;
  while (true) {
    out.push_back(cur);
    int k = p - 1;
    while (k >= 0 && cur[k] == n - (p - 1 - k)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int l = k + 1; l < p; ++l) cur[l] = cur[l - 1] + 1;
  }
  if (p == 0) out.assign(1, IndexSet{});
  return out;
}

}  // namespace extform
