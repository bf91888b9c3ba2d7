#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "strata/zint.hpp"

namespace strata {

// Sparse integer matrix, row-major. Each row is sorted by column index and
// stores no zero entries.
struct sparse_matrix {
  int n_rows = 0;
  int n_cols = 0;
  std::vector<std::vector<std::pair<int, zint>>> rows;

  sparse_matrix() = default;
  sparse_matrix(int r, int c) : n_rows(r), n_cols(c), rows(r) {}

  static sparse_matrix identity(int n) {
    sparse_matrix m(n, n);
    for (int i = 0; i < n; ++i) m.rows[i].push_back({i, zint(1)});
    return m;
  }

  long long nnz() const {
    long long t = 0;
    for (auto& r : rows) t += static_cast<long long>(r.size());
    return t;
  }

  zint get(int i, int j) const {
    const auto& r = rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) return it->second;
    return zint(0);
  }

  void set(int i, int j, zint v) {
    auto& r = rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      if (v.is_zero())
        r.erase(it);
      else
        it->second = std::move(v);
    } else if (!v.is_zero()) {
      r.insert(it, {j, std::move(v)});
    }
  }

  void add(int i, int j, const zint& v) {
    if (v.is_zero()) return;
    auto& r = rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  // row_dst += c * row_src
  void row_axpy(int dst, int src, const zint& c) {
    if (c.is_zero()) return;
    const auto& s = rows[src];
    if (s.empty()) return;
    std::vector<std::pair<int, zint>> out;
    out.reserve(rows[dst].size() + s.size());
    auto a = rows[dst].begin(), ae = rows[dst].end();
    auto b = s.begin(), be = s.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        out.push_back({b->first, c * b->second});
        ++b;
      } else {
        zint v = a->second + c * b->second;
        if (!v.is_zero()) out.push_back({a->first, std::move(v)});
        ++a;
        ++b;
      }
    }
    rows[dst] = std::move(out);
  }

  sparse_matrix transpose() const {
    sparse_matrix t(n_cols, n_rows);
    std::vector<int> cnt(n_cols, 0);
    for (const auto& r : rows)
      for (const auto& [c, v] : r) cnt[c]++;
    for (int j = 0; j < n_cols; ++j) t.rows[j].reserve(cnt[j]);
    for (int i = 0; i < n_rows; ++i)
      for (const auto& [c, v] : rows[i]) t.rows[c].push_back({i, v});
    return t;
  }

  std::vector<zint> column(int j) const {
    std::vector<zint> v(n_rows);
    for (int i = 0; i < n_rows; ++i) v[i] = get(i, j);
    return v;
  }

  friend bool operator==(const sparse_matrix& a, const sparse_matrix& b) {
    return a.n_rows == b.n_rows && a.n_cols == b.n_cols && a.rows == b.rows;
  }
};

inline sparse_matrix operator*(const sparse_matrix& a, const sparse_matrix& b) {
  if (a.n_cols != b.n_rows) throw std::invalid_argument("matrix product: shape mismatch");
  sparse_matrix c(a.n_rows, b.n_cols);
  std::vector<zint> acc(b.n_cols);
  std::vector<int> touched;
  for (int i = 0; i < a.n_rows; ++i) {
    touched.clear();
    for (const auto& [k, av] : a.rows[i]) {
      for (const auto& [j, bv] : b.rows[k]) {
        if (acc[j].is_zero()) touched.push_back(j);
        acc[j] += av * bv;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int j : touched) {
      if (!acc[j].is_zero()) c.rows[i].push_back({j, acc[j]});
      acc[j] = zint(0);
    }
  }
  return c;
}

inline std::vector<zint> operator*(const sparse_matrix& a, const std::vector<zint>& x) {
  if (static_cast<int>(x.size()) != a.n_cols)
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<zint> y(a.n_rows);
  for (int i = 0; i < a.n_rows; ++i)
    for (const auto& [j, v] : a.rows[i]) y[i] += v * x[j];
  return y;
}

// Columns of `m` listed in `which`, as a new matrix.
inline sparse_matrix select_columns(const sparse_matrix& m, const std::vector<int>& which) {
  std::vector<int> pos(m.n_cols, -1);
  for (int k = 0; k < static_cast<int>(which.size()); ++k) pos[which[k]] = k;
  sparse_matrix out(m.n_rows, static_cast<int>(which.size()));
  for (int i = 0; i < m.n_rows; ++i)
    for (const auto& [j, v] : m.rows[i])
      if (pos[j] >= 0) out.rows[i].push_back({pos[j], v});
  return out;
}

}  // namespace strata
