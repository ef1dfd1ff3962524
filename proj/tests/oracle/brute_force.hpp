#pragma once

// Reference implementations kept deliberately naive: machine-integer
// rationals, definitions transcribed directly, and weak orders enumerated as
// surjections onto class labels. Nothing here is shared with the library.

#include <boost/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Q = boost::rational<std::int64_t>;
using Grades = std::vector<int>;

inline Q precision(const Grades& g) {
  int rel = 0;
  for (int x : g) rel += x > 0;
  return Q(rel, static_cast<std::int64_t>(g.size()));
}

inline Q recall(const Grades& g, int rb) {
  int rel = 0;
  for (int x : g) rel += x > 0;
  return Q(rel, rb);
}

inline Q f1(const Grades& g, int rb) {
  const Q p = precision(g);
  const Q r = recall(g, rb);
  if (p + r == Q(0)) return Q(0);
  return Q(2) * p * r / (p + r);
}

inline Q ap(const Grades& g, int rb) {
  Q sum(0);
  int rel = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > 0) {
      ++rel;
      sum += Q(rel, static_cast<std::int64_t>(i + 1));
    }
  }
  return sum / Q(rb);
}

inline Q rbp(const Grades& g, Q p) {
  Q sum(0);
  Q w(1);
  for (int x : g) {
    if (x > 0) sum += w;
    w *= p;
  }
  return (Q(1) - p) * sum;
}

inline Q err(const Grades& g, int g_max) {
  Q sum(0);
  Q not_stopped(1);
  const std::int64_t denom = std::int64_t{1} << g_max;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Q r((std::int64_t{1} << g[i]) - 1, denom);
    sum += not_stopped * r / Q(static_cast<std::int64_t>(i + 1));
    not_stopped *= Q(1) - r;
  }
  return sum;
}

/// All 0/1 vectors of length n in lexicographic order.
inline std::vector<Grades> binary_lists(int n) {
  std::vector<Grades> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    Grades g(n);
    for (int i = 0; i < n; ++i) g[i] = (mask >> (n - 1 - i)) & 1;
    out.push_back(g);
  }
  return out;
}

/// Every weak order on m elements as a vector of class labels 0..k-1, with
/// label order = rank order. Enumerated as surjections.
inline std::vector<std::vector<int>> weak_orders(int m) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= m; ++k) {
    std::vector<int> label(m, 0);
    while (true) {
      std::set<int> used(label.begin(), label.end());
      if (static_cast<int>(used.size()) == k) out.push_back(label);
      int i = m - 1;
      while (i >= 0 && label[i] == k - 1) label[i--] = 0;
      if (i < 0) break;
      ++label[i];
    }
  }
  return out;
}

inline std::vector<std::vector<int>> strict_orders(int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// x <= y iff f(x) <= f(y), checked over all ordered pairs.
inline bool ordinal(const std::vector<Q>& f, const std::vector<int>& label) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if ((label[x] <= label[y]) != (f[x] <= f[y])) return false;
    }
  }
  return true;
}

/// Ordinal and the per-class values are equally spaced.
inline bool interval(const std::vector<Q>& f, const std::vector<int>& label) {
  if (!ordinal(f, label)) return false;
  const int k = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<Q> level(k);
  for (std::size_t x = 0; x < f.size(); ++x) level[label[x]] = f[x];
  for (int c = 2; c < k; ++c) {
    if (level[c] - level[c - 1] != level[1] - level[0]) return false;
  }
  return true;
}

}  // namespace oracle
