////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of thermocone                                           //
//                                                                            //
//  Copyright 2026 thermocone developers                                      //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#include "polytope.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace thermocone {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kGeomTol = 1e-10;

double max_norm_diff(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Orthonormal basis of the affine hull of pts (columns) plus the origin point.
struct AffineFrame {
  VectorXd origin;
  MatrixXd basis;
};

AffineFrame affine_frame(const std::vector<VectorXd>& pts) {
  AffineFrame f;
  f.origin = pts.front();
  const Eigen::Index n = static_cast<Eigen::Index>(pts.size());
  if (n == 1) {
    f.basis = MatrixXd(pts.front().size(), 0);
    return f;
  }
  MatrixXd diffs(pts.front().size(), n - 1);
  for (Eigen::Index i = 1; i < n; ++i) diffs.col(i - 1) = pts[static_cast<std::size_t>(i)] - f.origin;
  Eigen::ColPivHouseholderQR<MatrixXd> qr(diffs);
  qr.setThreshold(1e-9);
  const Eigen::Index r = qr.rank();
  MatrixXd q = qr.householderQ();
  f.basis = q.leftCols(r);
  return f;
}

std::vector<VectorXd> to_eigen(const std::vector<Point>& pts) {
  std::vector<VectorXd> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(Eigen::Map<const VectorXd>(p.data(), static_cast<Eigen::Index>(p.size())));
  return out;
}

using P2 = std::array<double, 2>;

double cross(const P2& o, const P2& a, const P2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Indices of strict hull vertices in counter-clockwise order.
std::vector<std::size_t> hull2(const std::vector<P2>& pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= kGeomTol) --k;
    h[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= t && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= kGeomTol) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

std::vector<std::size_t> extreme_indices(const std::vector<VectorXd>& pts) {
  const AffineFrame f = affine_frame(pts);
  const Eigen::Index k = f.basis.cols();
  std::vector<VectorXd> local;
  for (const auto& p : pts) local.push_back(f.basis.transpose() * (p - f.origin));
  std::vector<std::size_t> out;
  if (k == 0) return {0};
  if (k == 1) {
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 1; i < local.size(); ++i) {
      if (local[i][0] < local[lo][0]) lo = i;
      if (local[i][0] > local[hi][0]) hi = i;
    }
    return {lo, hi};
  }
  if (k == 2) {
    std::vector<P2> p2;
    for (const auto& v : local) p2.push_back({v[0], v[1]});
    return hull2(p2);
  }
  require(k == 3, ErrorKind::Unsupported, "extreme points supported up to affine dimension 3");
  std::vector<char> mark(pts.size(), 0);
  const std::size_t n = local.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Eigen::Vector3d u = local[b].head<3>() - local[a].head<3>();
        Eigen::Vector3d v = local[c].head<3>() - local[a].head<3>();
        Eigen::Vector3d nrm = u.cross(v);
        const double len = nrm.norm();
        if (len < 1e-12) continue;
        nrm /= len;
        bool pos = false, neg = false;
        std::vector<std::size_t> on;
        for (std::size_t i = 0; i < n; ++i) {
          const double s = nrm.dot(local[i].head<3>() - local[a].head<3>());
          if (s > kGeomTol) pos = true;
          else if (s < -kGeomTol) neg = true;
          else on.push_back(i);
          if (pos && neg) break;
        }
        if (pos && neg) continue;
        Eigen::Vector3d e1 = u.normalized();
        Eigen::Vector3d e2 = nrm.cross(e1);
        std::vector<P2> face;
        for (std::size_t i : on) {
          Eigen::Vector3d w = local[i].head<3>() - local[a].head<3>();
          face.push_back({w.dot(e1), w.dot(e2)});
        }
        for (std::size_t j : hull2(face)) mark[on[j]] = 1;
      }
  for (std::size_t i = 0; i < n; ++i)
    if (mark[i]) out.push_back(i);
  return out;
}

class FaceVolume {
 public:
  FaceVolume(const std::vector<Point>& v, const std::vector<HalfSpace>& c) : verts_(to_eigen(v)) {
    tight_.resize(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
      tight_[j].resize(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        double s = -c[j].b;
        for (std::size_t t = 0; t < v[i].size(); ++t) s += c[j].a[t] * v[i][t];
        tight_[j][i] = std::abs(s) <= 1e-9;
      }
    }
  }

  double volume(const std::vector<std::size_t>& face, Eigen::Index k) {
    if (k == 0) return 1.0;
    if (k == 1) {
      std::size_t a = face[0];
      for (std::size_t i : face)
        if ((verts_[i] - verts_[face[0]]).norm() > (verts_[a] - verts_[face[0]]).norm()) a = i;
      double len = 0.0;
      for (std::size_t i : face) len = std::max(len, (verts_[i] - verts_[a]).norm());
      return len;
    }
    auto it = memo_.find(face);
    if (it != memo_.end()) return it->second;
    VectorXd centre = VectorXd::Zero(verts_.front().size());
    for (std::size_t i : face) centre += verts_[i];
    centre /= static_cast<double>(face.size());
    std::vector<std::vector<std::size_t>> seen;
    double total = 0.0;
    for (const auto& t : tight_) {
      std::vector<std::size_t> g;
      for (std::size_t i : face)
        if (t[i]) g.push_back(i);
      if (g.size() < static_cast<std::size_t>(k) || g.size() == face.size()) continue;
      if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
      std::vector<VectorXd> gp;
      for (std::size_t i : g) gp.push_back(verts_[i]);
      const AffineFrame fr = affine_frame(gp);
      if (fr.basis.cols() != k - 1) continue;
      seen.push_back(g);
      const VectorXd w = centre - fr.origin;
      const double h = (w - fr.basis * (fr.basis.transpose() * w)).norm();
      total += h * volume(g, k - 1);
    }
    const double vol = total / static_cast<double>(k);
    memo_.emplace(face, vol);
    return vol;
  }

  Eigen::Index dimension() const {
    return affine_frame(verts_).basis.cols();
  }

 private:
  std::vector<VectorXd> verts_;
  std::vector<std::vector<char>> tight_;
  std::map<std::vector<std::size_t>, double> memo_;
};

}  // namespace

std::vector<Point> dedupe_points(const std::vector<Point>& pts, double tol) {
  std::vector<Point> out;
  for (const auto& p : pts) {
    bool dup = false;
    for (const auto& q : out)
      if (max_norm_diff(p, q) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

std::vector<Point> enumerate_vertices(const std::vector<HalfSpace>& constraints, std::size_t d, double tol) {
  require(d >= 2, ErrorKind::InvalidArgument, "vertex enumeration needs d >= 2");
  const std::size_t m = constraints.size();
  const std::size_t r = d - 1;
  std::vector<Point> found;
  if (m < r) return found;
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  const auto n = static_cast<Eigen::Index>(d);
  for (;;) {
    MatrixXd a(n, n);
    VectorXd b(n);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = constraints[pick[i]].a[j];
      b(static_cast<Eigen::Index>(i)) = constraints[pick[i]].b;
    }
    a.row(n - 1).setOnes();
    b(n - 1) = 1.0;
    Eigen::FullPivLU<MatrixXd> lu(a);
    lu.setThreshold(1e-12);
    if (lu.isInvertible()) {
      VectorXd x = lu.solve(b);
      bool ok = true;
      for (const auto& c : constraints) {
        double s = -c.b;
        for (std::size_t j = 0; j < d; ++j) s += c.a[j] * x(static_cast<Eigen::Index>(j));
        if (s < -tol) {
          ok = false;
          break;
        }
      }
      if (ok) found.emplace_back(x.data(), x.data() + d);
    }
    // Next combination.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == m - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  for (auto& p : found)
    for (auto& v : p)
      if (std::abs(v) < 1e-14) v = 0.0;
  return dedupe_points(found);
}

std::vector<Point> extreme_points(const std::vector<Point>& pts) {
  const auto uniq = dedupe_points(pts);
  if (uniq.size() <= 1) return uniq;
  std::vector<Point> out;
  for (std::size_t i : extreme_indices(to_eigen(uniq))) out.push_back(uniq[i]);
  return out;
}

std::vector<Point> clip_to_simplex3(const std::vector<Point>& polygon) {
  std::vector<Point> poly = polygon;
  for (std::size_t axis = 0; axis < 3 && !poly.empty(); ++axis) {
    std::vector<Point> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % poly.size()];
      const bool ina = a[axis] >= 0.0, inb = b[axis] >= 0.0;
      if (ina) next.push_back(a);
      if (ina != inb) {
        const double t = a[axis] / (a[axis] - b[axis]);
        Point c(3);
        for (std::size_t j = 0; j < 3; ++j) c[j] = a[j] + t * (b[j] - a[j]);
        c[axis] = 0.0;
        next.push_back(c);
      }
    }
    poly = std::move(next);
  }
  return dedupe_points(poly);
}

double relative_area3(const std::vector<Point>& pts) {
  const auto uniq = dedupe_points(pts);
  if (uniq.size() < 3) return 0.0;
  std::vector<P2> planar;
  for (const auto& p : uniq) planar.push_back({p[1] + 0.5 * p[2], std::sqrt(3.0) / 2.0 * p[2]});
  const auto h = hull2(planar);
  if (h.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const P2& a = planar[h[i]];
    const P2& b = planar[h[(i + 1) % h.size()]];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  return std::abs(twice) / 2.0 / (std::sqrt(3.0) / 4.0);
}

double simplex_volume(std::size_t d) {
  double f = 1.0;
  for (std::size_t i = 2; i < d; ++i) f *= static_cast<double>(i);
  return std::sqrt(static_cast<double>(d)) / f;
}

double relative_volume(const std::vector<Point>& vertices, const std::vector<HalfSpace>& constraints) {
  if (vertices.empty()) return 0.0;
  const std::size_t d = vertices.front().size();
  FaceVolume fv(vertices, constraints);
  const Eigen::Index k = fv.dimension();
  if (k < static_cast<Eigen::Index>(d) - 1) return 0.0;
  std::vector<std::size_t> all(vertices.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return fv.volume(all, k) / simplex_volume(d);
}

}  // namespace thermocone
