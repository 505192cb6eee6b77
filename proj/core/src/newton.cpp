#include "hsamuel/newton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hsamuel/errors.hpp"

namespace hsamuel {

namespace {

using Vec = std::vector<std::int64_t>;

/// Determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(std::vector<Vec> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        __int128 v = static_cast<__int128>(m[i][j]) * m[k][k] - static_cast<__int128>(m[i][k]) * m[k][j];
        m[i][j] = static_cast<std::int64_t>(v / prev);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Vector orthogonal to the n-1 given vectors (generalized cross product).
Vec normal_of(const std::vector<Vec>& dirs, int n) {
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> minor;
    for (const auto& d : dirs) {
      Vec row;
      for (int j = 0; j < n; ++j) {
        if (j != i) row.push_back(d[j]);
      }
      minor.push_back(row);
    }
    std::int64_t det = determinant(minor);
    out[i] = (i % 2 == 0) ? det : -det;
  }
  return out;
}

}  // namespace

NewtonPolyhedron::NewtonPolyhedron(std::vector<std::vector<int>> points) : points_(std::move(points)) {
  if (points_.empty()) throw InputError("Newton polyhedron of the zero ideal");
  n_ = static_cast<int>(points_.front().size());
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  // drop points dominated by another point
  std::vector<std::vector<int>> minimal;
  for (const auto& p : points_) {
    bool dominated = false;
    for (const auto& q : points_) {
      if (q == p) continue;
      bool ge = true;
      for (int i = 0; i < n_; ++i) ge = ge && p[i] >= q[i];
      if (ge) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(p);
  }
  points_ = std::move(minimal);

  std::set<std::pair<Vec, std::int64_t>> seen;
  const int np = static_cast<int>(points_.size());
  std::vector<int> chosen;
  // choose k >= 1 points and n-k coordinate rays spanning a hyperplane
  std::function<void(int, int)> pick_rays;
  std::vector<int> rays;
  auto consider = [&]() {
    std::vector<Vec> dirs;
    const auto& base = points_[chosen[0]];
    for (std::size_t i = 1; i < chosen.size(); ++i) {
      Vec d(n_);
      for (int j = 0; j < n_; ++j) d[j] = points_[chosen[i]][j] - base[j];
      dirs.push_back(d);
    }
    for (int r : rays) {
      Vec d(n_, 0);
      d[r] = 1;
      dirs.push_back(d);
    }
    Vec a = normal_of(dirs, n_);
    bool any = false, pos = false, neg = false;
    for (auto v : a) {
      any = any || v != 0;
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (!any || (pos && neg)) return;
    if (neg) {
      for (auto& v : a) v = -v;
    }
    std::int64_t g = 0;
    for (auto v : a) g = std::gcd(g, v);
    for (auto& v : a) v /= g;
    std::int64_t b = 0;
    for (int j = 0; j < n_; ++j) b += a[j] * base[j];
    for (const auto& p : points_) {
      std::int64_t s = 0;
      for (int j = 0; j < n_; ++j) s += a[j] * p[j];
      if (s < b) return;
    }
    if (b <= 0) return;  // coordinate halfspaces are implicit
    if (seen.insert({a, b}).second) facets_.push_back({a, b});
  };
  pick_rays = [&](int from, int need) {
    if (need == 0) {
      consider();
      return;
    }
    for (int r = from; r < n_; ++r) {
      rays.push_back(r);
      pick_rays(r + 1, need - 1);
      rays.pop_back();
    }
  };
  std::function<void(int)> pick_points = [&](int from) {
    int k = static_cast<int>(chosen.size());
    if (k >= 1) pick_rays(0, n_ - k);
    if (k == n_) return;
    for (int i = from; i < np; ++i) {
      chosen.push_back(i);
      pick_points(i + 1);
      chosen.pop_back();
    }
  };
  pick_points(0);
}

bool NewtonPolyhedron::contains(const std::vector<int>& x) const {
  if (static_cast<int>(x.size()) != n_) throw InputError("dimension mismatch");
  for (int v : x) {
    if (v < 0) return false;
  }
  for (const auto& h : facets_) {
    std::int64_t s = 0;
    for (int j = 0; j < n_; ++j) s += h.a[j] * x[j];
    if (s < h.b) return false;
  }
  // with no bounding facet at all the polyhedron is the whole orthant
  return true;
}

NewtonPolyhedron NewtonPolyhedron::scaled(int q) const {
  if (q < 1) throw InputError("scale factor must be positive");
  NewtonPolyhedron out;
  out.n_ = n_;
  for (const auto& p : points_) {
    std::vector<int> s = p;
    for (auto& v : s) v *= q;
    out.points_.push_back(s);
  }
  for (const auto& h : facets_) out.facets_.push_back({h.a, h.b * q});
  return out;
}

std::vector<std::vector<int>> NewtonPolyhedron::minimal_lattice_points() const {
  std::vector<int> hi(n_, 0);
  for (const auto& p : points_) {
    for (int j = 0; j < n_; ++j) hi[j] = std::max(hi[j], p[j]);
  }
  std::vector<std::vector<int>> inside;
  std::vector<int> x(n_, 0);
  std::function<void(int)> walk = [&](int j) {
    if (j == n_) {
      if (contains(x)) inside.push_back(x);
      return;
    }
    for (int v = 0; v <= hi[j]; ++v) {
      x[j] = v;
      walk(j + 1);
    }
    x[j] = 0;
  };
  walk(0);
  std::vector<std::vector<int>> out;
  for (const auto& p : inside) {
    bool minimal = true;
    for (int j = 0; j < n_ && minimal; ++j) {
      if (p[j] == 0) continue;
      std::vector<int> q = p;
      --q[j];
      if (contains(q)) minimal = false;
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

}  // namespace hsamuel
