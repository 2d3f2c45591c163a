#pragma once

// Brute-force reference computations used to derive expected values. Kept
// free of any library code path: plain nested vectors, no propagation, no
// canonical-labeling shortcuts.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline bool latin_ok(const Table& t, int r, int c, int v) {
  for (int k = 0; k < c; ++k)
    if (t[r][k] == v) return false;
  for (int k = 0; k < r; ++k)
    if (t[k][c] == v) return false;
  return true;
}

inline void fill(Table& t, int n, int pos, std::vector<Table>& out) {
  if (pos == n * n) {
    out.push_back(t);
    return;
  }
  const int r = pos / n, c = pos % n;
  if (r == 0 || c == 0) {
    t[r][c] = r == 0 ? c : r;
    fill(t, n, pos + 1, out);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (!latin_ok(t, r, c, v)) continue;
    t[r][c] = v;
    fill(t, n, pos + 1, out);
  }
}

/// Every Cayley table with identity 0 (reduced Latin squares).
inline std::vector<Table> all_loops(int n) {
  Table t(n, std::vector<int>(n, -1));
  std::vector<Table> out;
  fill(t, n, 0, out);
  return out;
}

inline int n_of(const Table& t) { return static_cast<int>(t.size()); }

inline bool left_bol(const Table& t) {
  const int n = n_of(t);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[x][t[y][t[x][z]]] != t[t[x][t[y][x]]][z]) return false;
  return true;
}

inline bool right_bol(const Table& t) {
  const int n = n_of(t);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[t[z][x]][y]][x] != t[z][t[t[x][y]][x]]) return false;
  return true;
}

inline bool associative(const Table& t) {
  const int n = n_of(t);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[x][t[y][z]] != t[t[x][y]][z]) return false;
  return true;
}

/// Lexicographically least relabeling fixing 0, by trying all (n-1)! maps.
inline Table canonical(const Table& t) {
  const int n = n_of(t);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Table best;
  do {
    Table r(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r[perm[a]][perm[b]] = perm[t[a][b]];
    if (best.empty() || r < best) best = r;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

/// Canonical representatives of the tables accepted by `keep`.
template <class Pred>
std::set<Table> classes(int n, Pred keep) {
  std::set<Table> out;
  for (const auto& t : all_loops(n))
    if (keep(t)) out.insert(canonical(t));
  return out;
}

/// All bracketings of x^k, by brute-force recursion over split points.
inline std::set<int> bracketings(const Table& t, int x, int k) {
  if (k == 1) return {x};
  std::set<int> out;
  for (int left = 1; left < k; ++left)
    for (int a : bracketings(t, x, left))
      for (int b : bracketings(t, x, k - left)) out.insert(t[a][b]);
  return out;
}

}  // namespace oracle
