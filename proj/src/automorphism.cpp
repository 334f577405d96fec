#include "sphere/analysis.hpp"

#include "sphere/error.hpp"
#include "sphere/kernels.hpp"
#include "sphere/random.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <numeric>

namespace sphere {

std::vector<std::vector<int>> inner_product_colors(const PointConfig& config, double tol, int* color_count) {
  const Matrix g = kernels::gram(config.points());
  const int count = config.size();
  struct Entry {
    double t;
    int i, j;
  };
  std::vector<Entry> entries;
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) entries.push_back({g(i, j), i, j});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.t < b.t; });
  std::vector<std::vector<int>> colors(count, std::vector<int>(count, -1));
  int color = -1;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k == 0 || entries[k].t - entries[k - 1].t > tol) ++color;
    colors[entries[k].i][entries[k].j] = colors[entries[k].j][entries[k].i] = color;
  }
  if (color_count) *color_count = color + 1;
  return colors;
}

namespace {

struct Partition {
  std::vector<int> cell;  // ordered cell index of every vertex
  int count = 1;
};

class Searcher {
 public:
  Searcher(std::vector<int> colors, int size, int color_count)
      : colors_(std::move(colors)), n_(size), k_(static_cast<std::uint64_t>(color_count) + 1) {}

  // Splits cells by the multiset of (cell, colour) seen from each vertex
  // until nothing changes. Returns a hash of the splitting history, which
  // is invariant under relabelling.
  std::uint64_t refine(Partition& p) const {
    std::uint64_t trace = splitmix64(static_cast<std::uint64_t>(p.count));
    std::vector<std::uint64_t> h(n_);
    std::vector<int> order(n_);
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        std::uint64_t s = 0;
        const int* row = &colors_[static_cast<std::size_t>(v) * n_];
        for (int u = 0; u < n_; ++u) {
          if (u != v) s += splitmix64(static_cast<std::uint64_t>(p.cell[u]) * k_ + static_cast<std::uint64_t>(row[u] + 1));
        }
        h[v] = s;
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (p.cell[a] != p.cell[b]) return p.cell[a] < p.cell[b];
        if (h[a] != h[b]) return h[a] < h[b];
        return a < b;
      });
      std::vector<int> next(n_);
      int id = -1;
      int size = 0;
      for (int k = 0; k < n_; ++k) {
        const int v = order[k];
        const bool fresh = k == 0 || p.cell[v] != p.cell[order[k - 1]] || h[v] != h[order[k - 1]];
        if (fresh) {
          if (id >= 0) trace = splitmix64(trace ^ static_cast<std::uint64_t>(size));
          ++id;
          size = 0;
          trace = splitmix64(trace ^ h[v] ^ (static_cast<std::uint64_t>(p.cell[v]) << 32));
        }
        ++size;
        next[v] = id;
      }
      trace = splitmix64(trace ^ static_cast<std::uint64_t>(size));
      const int fresh_count = id + 1;
      p.cell = std::move(next);
      if (fresh_count == p.count) break;
      p.count = fresh_count;
    }
    return trace;
  }

  static Partition individualize(const Partition& p, int w) {
    Partition q = p;
    const int t = p.cell[w];
    for (std::size_t v = 0; v < q.cell.size(); ++v) {
      if (q.cell[v] > t || (q.cell[v] == t && static_cast<int>(v) != w)) ++q.cell[v];
    }
    ++q.count;
    return q;
  }

  // First smallest cell with more than one vertex, or -1 when discrete.
  int target_cell(const Partition& p) const {
    std::vector<int> sizes(p.count, 0);
    for (int c : p.cell) ++sizes[c];
    int best = -1;
    for (int c = 0; c < p.count; ++c) {
      if (sizes[c] > 1 && (best < 0 || sizes[c] < sizes[best])) best = c;
    }
    return best;
  }

  bool is_automorphism(const std::vector<int>& perm) const {
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        if (colors_[static_cast<std::size_t>(perm[i]) * n_ + perm[j]] != colors_[static_cast<std::size_t>(i) * n_ + j]) return false;
      }
    }
    return true;
  }

  void build_reference() {
    Partition p;
    p.cell.assign(n_, 0);
    hashes_.push_back(refine(p));
    partitions_.push_back(p);
    for (int t = target_cell(p); t >= 0; t = target_cell(p)) {
      int b = 0;
      while (p.cell[b] != t) ++b;
      base_.push_back(b);
      targets_.push_back(t);
      p = individualize(p, b);
      hashes_.push_back(refine(p));
      partitions_.push_back(p);
    }
    leaf_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) leaf_[p.cell[v]] = v;
  }

  // Automorphism fixing base[0..level) and sending base[level] to v.
  bool map_base_point(int level, int v, std::vector<int>& perm) const {
    Partition q = individualize(partitions_[level], v);
    if (refine(q) != hashes_[level + 1]) return false;
    return descend(level + 1, q, perm);
  }

  const std::vector<int>& base() const { return base_; }
  const std::vector<int>& targets() const { return targets_; }
  const Partition& partition(int level) const { return partitions_[level]; }

 private:
  bool descend(int depth, const Partition& p, std::vector<int>& perm) const {
    if (depth == static_cast<int>(base_.size())) {
      perm.assign(n_, 0);
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[p.cell[v]] = v;
      for (int c = 0; c < n_; ++c) perm[leaf_[c]] = order[c];
      return is_automorphism(perm);
    }
    const int t = targets_[depth];
    for (int w = 0; w < n_; ++w) {
      if (p.cell[w] != t) continue;
      Partition q = individualize(p, w);
      if (refine(q) != hashes_[depth + 1]) continue;
      if (descend(depth + 1, q, perm)) return true;
    }
    return false;
  }

  std::vector<int> colors_;
  int n_;
  std::uint64_t k_;
  std::vector<std::uint64_t> hashes_;
  std::vector<Partition> partitions_;
  std::vector<int> base_;
  std::vector<int> targets_;
  std::vector<int> leaf_;
};

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

UnionFind orbits(int n, const std::vector<std::vector<int>>& generators) {
  UnionFind uf(n);
  for (const auto& g : generators) {
    for (int v = 0; v < n; ++v) uf.unite(v, g[v]);
  }
  return uf;
}

}  // namespace

SymmetryReport automorphism_group(const PointConfig& config, double tol) {
  const int count = config.size();
  int color_count = 0;
  const auto table = inner_product_colors(config, tol, &color_count);
  std::vector<int> flat(static_cast<std::size_t>(count) * count);
  for (int i = 0; i < count; ++i) std::copy(table[i].begin(), table[i].end(), flat.begin() + static_cast<std::ptrdiff_t>(i) * count);

  Searcher searcher(std::move(flat), count, color_count);
  searcher.build_reference();

  SymmetryReport report;
  report.base = searcher.base();
  const int levels = static_cast<int>(report.base.size());
  report.orbit_lengths.assign(levels, 1);
  std::vector<int> perm;
  for (int level = levels - 1; level >= 0; --level) {
    const int b = report.base[level];
    const int t = searcher.targets()[level];
    const Partition& p = searcher.partition(level);
    for (int v = 0; v < count; ++v) {
      if (v == b || p.cell[v] != t) continue;
      UnionFind uf = orbits(count, report.generators);
      if (uf.find(v) == uf.find(b)) continue;
      if (searcher.map_base_point(level, v, perm)) report.generators.push_back(perm);
    }
    UnionFind uf = orbits(count, report.generators);
    std::uint64_t length = 0;
    for (int v = 0; v < count; ++v) length += uf.find(v) == uf.find(b) ? 1 : 0;
    report.orbit_lengths[level] = length;
  }
  report.order = 1;
  for (std::uint64_t length : report.orbit_lengths) report.order *= length;

  UnionFind uf = orbits(count, report.generators);
  std::vector<int> label(count, -1);
  report.orbit_of.assign(count, 0);
  for (int v = 0; v < count; ++v) {
    const int root = uf.find(v);
    if (label[root] < 0) label[root] = report.orbit_count++;
    report.orbit_of[v] = label[root];
  }

  const Eigen::JacobiSVD<Matrix> span(config.points());
  const Vector& sv = span.singularValues();
  const int n = config.dimension();
  report.spans = sv.size() >= n && sv(n - 1) > 1e-9 * std::max(1.0, sv(0));
  if (report.spans) {
    bool rotations = true;
    for (const auto& g : report.generators) {
      if (realize_automorphism(config, g, 1e3 * tol).determinant < 0.0) {
        rotations = false;
        break;
      }
    }
    report.chiral = rotations;
  }
  return report;
}

}  // namespace sphere
