#include "tc/spaces.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace tc {
namespace {

double sq(double v) { return v * v; }

double euclid(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += sq(a[i] - b[i]);
  return std::sqrt(s);
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

[[noreturn]] void fail(const std::string& msg) { throw SpaceError(msg); }

}  // namespace

double wrap_signed(double a) {
  double r = std::fmod(a, kTau);  // exact remainder, in (-2*pi, 2*pi)
  if (r > kPi) r -= kTau;
  if (r <= -kPi) r += kTau;
  return r;
}

double wrap_positive(double a) {
  double r = std::fmod(a, kTau);
  if (r < 0.0) r += kTau;
  if (r >= kTau) r = 0.0;
  return r;
}

double circle_distance(double a, double b) { return std::fabs(wrap_signed(a - b)); }

// --------------------------------------------------------------------------
// Rng

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::unit() {
  // 53 high bits -> uniform double in [0, 1); avoids the
  // implementation-defined std::uniform_real_distribution.
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

int Rng::pick(int n) {
  if (n <= 0) fail("Rng::pick: need a positive range");
  return static_cast<int>(next() % static_cast<std::uint64_t>(n));
}

Rng Rng::split(std::uint64_t stream) const {
  return Rng(splitmix64(seed_ ^ splitmix64(stream)));
}

// --------------------------------------------------------------------------
// Points

std::string format_point(const Point& p) {
  std::ostringstream out;
  out << "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << ", ";
    out << p[i];
  }
  out << ")";
  return out.str();
}

// --------------------------------------------------------------------------
// ObstacleSet

ObstacleSet ObstacleSet::make(std::vector<std::array<double, 3>> pts, double collinear_tol) {
  ObstacleSet o;
  o.points = std::move(pts);
  o.collinear_tol = collinear_tol;
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    for (double v : o.points[i]) {
      if (!std::isfinite(v)) fail("obstacle coordinates must be finite");
    }
    for (std::size_t j = i + 1; j < o.points.size(); ++j) {
      double d = std::sqrt(sq(o.points[i][0] - o.points[j][0]) +
                           sq(o.points[i][1] - o.points[j][1]) +
                           sq(o.points[i][2] - o.points[j][2]));
      if (d < 1e-12) {
        fail("obstacles " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
      o.min_gap = std::min(o.min_gap, d);
    }
  }
  return o;
}

double ObstacleSet::clearance(const Point& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    best = std::min(best, std::sqrt(sq(x[0] - p[0]) + sq(x[1] - p[1]) + sq(x[2] - p[2])));
  }
  return best;
}

std::vector<SegmentHit> ObstacleSet::hits(const Point& a, const Point& b) const {
  std::vector<SegmentHit> out;
  const double dx = b[0] - a[0], dy = b[1] - a[1], dz = b[2] - a[2];
  const double len2 = sq(dx) + sq(dy) + sq(dz);
  for (int i = 0; i < size(); ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    double t = 0.0;
    if (len2 > 0.0) {
      t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy + (p[2] - a[2]) * dz) / len2;
      t = std::clamp(t, 0.0, 1.0);
    }
    const double qx = a[0] + t * dx, qy = a[1] + t * dy, qz = a[2] + t * dz;
    const double gap = std::sqrt(sq(p[0] - qx) + sq(p[1] - qy) + sq(p[2] - qz));
    if (gap <= collinear_tol) out.push_back({i, t});
  }
  std::sort(out.begin(), out.end(), [](const SegmentHit& l, const SegmentHit& r) {
    return l.t != r.t ? l.t < r.t : l.index < r.index;
  });
  return out;
}

std::vector<int> ObstacleSet::segment_hits(const Point& a, const Point& b) const {
  std::vector<int> out;
  for (const SegmentHit& h : hits(a, b)) out.push_back(h.index);
  return out;
}

// --------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::make(std::vector<std::vector<double>> vertex_coords,
                                          std::vector<std::vector<int>> generators) {
  SimplicialComplex k;
  if (vertex_coords.empty()) fail("complex needs at least one vertex");
  k.ambient_dim_ = static_cast<int>(vertex_coords[0].size());
  if (k.ambient_dim_ < 1) fail("complex vertices need at least one coordinate");
  for (const auto& v : vertex_coords) {
    if (static_cast<int>(v.size()) != k.ambient_dim_) {
      fail("complex vertices must share one ambient dimension");
    }
    for (double c : v) {
      if (!std::isfinite(c)) fail("complex vertex coordinates must be finite");
    }
  }
  k.vertices_ = std::move(vertex_coords);
  const int nverts = static_cast<int>(k.vertices_.size());

  if (generators.empty()) fail("complex needs at least one simplex");
  std::set<std::vector<int>> closed;
  for (auto gen : generators) {
    if (gen.empty()) fail("empty simplex in complex description");
    std::sort(gen.begin(), gen.end());
    for (int v : gen) {
      if (v < 0 || v >= nverts) fail("simplex vertex index " + std::to_string(v) + " out of range");
    }
    if (std::adjacent_find(gen.begin(), gen.end()) != gen.end()) {
      fail("simplex repeats a vertex");
    }
    if (gen.size() > 12) fail("simplex dimension too large");
    // Close under faces: every nonempty vertex subset is a simplex.
    const std::size_t n = gen.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> face;
      for (std::size_t b = 0; b < n; ++b) {
        if (mask & (std::size_t{1} << b)) face.push_back(gen[b]);
      }
      closed.insert(std::move(face));
    }
  }

  k.simplices_.reserve(closed.size());
  for (const auto& verts : closed) k.simplices_.push_back(Simplex{verts});
  std::sort(k.simplices_.begin(), k.simplices_.end(), [](const Simplex& a, const Simplex& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  for (const Simplex& s : k.simplices_) k.dim_ = std::max(k.dim_, s.dim());

  std::vector<bool> used(static_cast<std::size_t>(nverts), false);
  for (const Simplex& s : k.simplices_) {
    for (int v : s.vertices) used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < nverts; ++v) {
    if (!used[static_cast<std::size_t>(v)]) {
      fail("vertex " + std::to_string(v) + " belongs to no simplex");
    }
  }

  // Affine independence of every simplex's vertex set.
  for (const Simplex& s : k.simplices_) {
    const int dim = s.dim();
    if (dim == 0) continue;
    if (dim > k.ambient_dim_) fail("simplex dimension exceeds ambient dimension");
    Eigen::MatrixXd edges(k.ambient_dim_, dim);
    const auto& v0 = k.vertices_[static_cast<std::size_t>(s.vertices[0])];
    for (int c = 1; c <= dim; ++c) {
      const auto& vc = k.vertices_[static_cast<std::size_t>(s.vertices[static_cast<std::size_t>(c)])];
      for (int r = 0; r < k.ambient_dim_; ++r) edges(r, c - 1) = vc[static_cast<std::size_t>(r)] - v0[static_cast<std::size_t>(r)];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(edges);
    qr.setThreshold(1e-9);
    if (qr.rank() < dim) fail("simplex has affinely dependent vertices");
  }

  // Face / coface tables.
  const int count = k.size();
  k.proper_faces_.assign(static_cast<std::size_t>(count), {});
  k.cofaces_.assign(static_cast<std::size_t>(count), {});
  auto is_subset = [](const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      const auto& sa = k.simplices_[static_cast<std::size_t>(a)].vertices;
      const auto& sb = k.simplices_[static_cast<std::size_t>(b)].vertices;
      if (sa.size() < sb.size() && is_subset(sa, sb)) {
        k.proper_faces_[static_cast<std::size_t>(b)].push_back(a);
        k.cofaces_[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }

  // Connectedness via the 1-skeleton.
  if (nverts > 1) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nverts));
    for (const Simplex& s : k.simplices_) {
      if (s.dim() == 1) {
        adj[static_cast<std::size_t>(s.vertices[0])].push_back(s.vertices[1]);
        adj[static_cast<std::size_t>(s.vertices[1])].push_back(s.vertices[0]);
      }
    }
    std::vector<bool> seen(static_cast<std::size_t>(nverts), false);
    std::vector<int> queue = {0};
    seen[0] = true;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    for (int v = 0; v < nverts; ++v) {
      if (!seen[static_cast<std::size_t>(v)]) fail("complex is disconnected");
    }
  }
  return k;
}

int SimplicialComplex::id_of(std::vector<int> verts) const {
  std::sort(verts.begin(), verts.end());
  for (int id = 0; id < size(); ++id) {
    if (simplices_[static_cast<std::size_t>(id)].vertices == verts) return id;
  }
  return -1;
}

std::optional<std::vector<double>> SimplicialComplex::barycentric(int id, const Point& x) const {
  if (id < 0 || id >= size()) fail("barycentric: simplex id out of range");
  if (x.size() != ambient_dim_) fail("barycentric: point dimension mismatch");
  const Simplex& s = simplices_[static_cast<std::size_t>(id)];
  const int dim = s.dim();
  const auto& v0 = vertices_[static_cast<std::size_t>(s.vertices[0])];
  if (dim == 0) {
    double gap = 0.0;
    for (int r = 0; r < ambient_dim_; ++r) gap += sq(x[r] - v0[static_cast<std::size_t>(r)]);
    if (std::sqrt(gap) > kSpanTol) return std::nullopt;
    return std::vector<double>{1.0};
  }
  Eigen::MatrixXd edges(ambient_dim_, dim);
  Eigen::VectorXd rhs(ambient_dim_);
  for (int r = 0; r < ambient_dim_; ++r) rhs(r) = x[r] - v0[static_cast<std::size_t>(r)];
  for (int c = 1; c <= dim; ++c) {
    const auto& vc = vertices_[static_cast<std::size_t>(s.vertices[static_cast<std::size_t>(c)])];
    for (int r = 0; r < ambient_dim_; ++r) edges(r, c - 1) = vc[static_cast<std::size_t>(r)] - v0[static_cast<std::size_t>(r)];
  }
  Eigen::VectorXd mu = edges.colPivHouseholderQr().solve(rhs);
  if ((edges * mu - rhs).norm() > kSpanTol) return std::nullopt;
  std::vector<double> lambda(static_cast<std::size_t>(dim) + 1);
  double rest = 0.0;
  for (int c = 0; c < dim; ++c) {
    lambda[static_cast<std::size_t>(c) + 1] = mu(c);
    rest += mu(c);
  }
  lambda[0] = 1.0 - rest;
  return lambda;
}

namespace {
bool all_at_least(const std::vector<double>& v, double bound) {
  return std::all_of(v.begin(), v.end(), [bound](double x) { return x >= bound; });
}
}  // namespace

int SimplicialComplex::carrier(const Point& x) const {
  if (x.carrier_hint && *x.carrier_hint >= 0 && *x.carrier_hint < size()) {
    auto bc = barycentric(*x.carrier_hint, x);
    if (bc && all_at_least(*bc, kInteriorTol)) return *x.carrier_hint;
  }
  // Canonical order (ascending dimension) resolves boundary points to the
  // face holding them in its interior before any coface is examined.
  for (int id = 0; id < size(); ++id) {
    auto bc = barycentric(id, x);
    if (bc && all_at_least(*bc, kInteriorTol)) return id;
  }
  fail("carrier: point " + format_point(x) + " is not in the complex");
}

bool SimplicialComplex::contains(const Point& x) const {
  if (x.size() != ambient_dim_) return false;
  if (x.carrier_hint && *x.carrier_hint >= 0 && *x.carrier_hint < size()) {
    auto bc = barycentric(*x.carrier_hint, x);
    if (bc && all_at_least(*bc, -kSpanTol)) return true;
  }
  for (int id = 0; id < size(); ++id) {
    auto bc = barycentric(id, x);
    if (bc && all_at_least(*bc, -kSpanTol)) return true;
  }
  return false;
}

Point SimplicialComplex::barycenter(int id) const {
  if (id < 0 || id >= size()) fail("barycenter: simplex id out of range");
  const Simplex& s = simplices_[static_cast<std::size_t>(id)];
  Point p(std::vector<double>(static_cast<std::size_t>(ambient_dim_), 0.0));
  for (int v : s.vertices) {
    for (int r = 0; r < ambient_dim_; ++r) p[r] += vertices_[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)];
  }
  for (int r = 0; r < ambient_dim_; ++r) p[r] /= static_cast<double>(s.vertices.size());
  p.carrier_hint = id;
  return p;
}

const std::vector<int>& SimplicialComplex::proper_faces(int id) const {
  if (id < 0 || id >= size()) fail("proper_faces: simplex id out of range");
  return proper_faces_[static_cast<std::size_t>(id)];
}

const std::vector<int>& SimplicialComplex::cofaces(int id) const {
  if (id < 0 || id >= size()) fail("cofaces: simplex id out of range");
  return cofaces_[static_cast<std::size_t>(id)];
}

double SimplicialComplex::diameter() const {
  // The far pair of a union of simplices is always a vertex pair.
  double best = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, euclid(vertices_[i], vertices_[j]));
    }
  }
  return best;
}

// --------------------------------------------------------------------------
// ConfigSpace

ConfigSpace ConfigSpace::convex(std::vector<std::array<double, 2>> box) {
  if (box.empty()) fail("convex space needs at least one coordinate");
  for (const auto& [lo, hi] : box) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      fail("convex box bounds must be finite with lo <= hi");
    }
  }
  ConfigSpace s;
  s.kind_ = Kind::Convex;
  s.box_ = std::move(box);
  return s;
}

ConfigSpace ConfigSpace::circle() {
  ConfigSpace s;
  s.kind_ = Kind::Circle;
  return s;
}

ConfigSpace ConfigSpace::torus(int factors) {
  if (factors < 1 || factors > 64) fail("torus needs between 1 and 64 circle factors");
  ConfigSpace s;
  s.kind_ = Kind::Torus;
  s.torus_n_ = factors;
  return s;
}

ConfigSpace ConfigSpace::punctured_r3(std::vector<std::array<double, 3>> obstacles) {
  ConfigSpace s;
  s.kind_ = Kind::Punctured;
  s.obstacles_ = ObstacleSet::make(std::move(obstacles));
  // Sampling box: obstacle bounding box inflated by a fixed margin.
  std::array<double, 2> base{-2.0, 2.0};
  s.box_.assign(3, base);
  for (const auto& p : s.obstacles_.points) {
    for (int i = 0; i < 3; ++i) {
      s.box_[static_cast<std::size_t>(i)][0] = std::min(s.box_[static_cast<std::size_t>(i)][0], p[static_cast<std::size_t>(i)] - 2.0);
      s.box_[static_cast<std::size_t>(i)][1] = std::max(s.box_[static_cast<std::size_t>(i)][1], p[static_cast<std::size_t>(i)] + 2.0);
    }
  }
  return s;
}

ConfigSpace ConfigSpace::complex(SimplicialComplex k) {
  ConfigSpace s;
  s.kind_ = Kind::Complex;
  s.complex_ = std::make_shared<const SimplicialComplex>(std::move(k));
  return s;
}

ConfigSpace ConfigSpace::product(ConfigSpace left, ConfigSpace right) {
  ConfigSpace s;
  s.kind_ = Kind::Product;
  s.left_ = std::make_shared<const ConfigSpace>(std::move(left));
  s.right_ = std::make_shared<const ConfigSpace>(std::move(right));
  return s;
}

std::string ConfigSpace::type_name() const {
  switch (kind_) {
    case Kind::Convex: return "convex";
    case Kind::Circle: return "circle";
    case Kind::Torus: return "torus";
    case Kind::Punctured: return "punctured_r3";
    case Kind::Complex: return "complex";
    case Kind::Product: return "product";
  }
  return "unknown";
}

int ConfigSpace::coords() const {
  switch (kind_) {
    case Kind::Convex: return static_cast<int>(box_.size());
    case Kind::Circle: return 1;
    case Kind::Torus: return torus_n_;
    case Kind::Punctured: return 3;
    case Kind::Complex: return complex_->ambient_dim();
    case Kind::Product: return left_->coords() + right_->coords();
  }
  return 0;
}

bool ConfigSpace::contains(const Point& x) const {
  if (x.size() != coords()) return false;
  for (double v : x.c) {
    if (!std::isfinite(v)) return false;
  }
  switch (kind_) {
    case Kind::Convex:
      for (int i = 0; i < x.size(); ++i) {
        const auto& [lo, hi] = box_[static_cast<std::size_t>(i)];
        if (x[i] < lo - 1e-9 || x[i] > hi + 1e-9) return false;
      }
      return true;
    case Kind::Circle:
    case Kind::Torus:
      return true;  // any finite angle vector represents a point
    case Kind::Punctured:
      return obstacles_.clearance(x) > 0.0;
    case Kind::Complex:
      return complex_->contains(x);
    case Kind::Product:
      return left_->contains(left_part(x)) && right_->contains(right_part(x));
  }
  return false;
}

void ConfigSpace::require(const Point& x, const std::string& role) const {
  if (!contains(x)) {
    fail(role + ": point " + format_point(x) + " is not in the " + type_name() + " space");
  }
}

double ConfigSpace::distance(const Point& x, const Point& y) const {
  if (x.size() != coords() || y.size() != coords()) {
    fail("distance: point dimension mismatch for " + type_name() + " space");
  }
  switch (kind_) {
    case Kind::Convex:
    case Kind::Punctured:
    case Kind::Complex:
      return euclid(x.c, y.c);
    case Kind::Circle:
      return circle_distance(x[0], y[0]);
    case Kind::Torus: {
      double best = 0.0;
      for (int i = 0; i < torus_n_; ++i) best = std::max(best, circle_distance(x[i], y[i]));
      return best;
    }
    case Kind::Product:
      return std::max(left_->distance(left_part(x), left_part(y)),
                      right_->distance(right_part(x), right_part(y)));
  }
  return 0.0;
}

Point ConfigSpace::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::Convex: {
      Point p(std::vector<double>(box_.size(), 0.0));
      for (int i = 0; i < p.size(); ++i) {
        p[i] = rng.uniform(box_[static_cast<std::size_t>(i)][0], box_[static_cast<std::size_t>(i)][1]);
      }
      return p;
    }
    case Kind::Circle:
      return Point{rng.uniform(0.0, kTau)};
    case Kind::Torus: {
      Point p(std::vector<double>(static_cast<std::size_t>(torus_n_), 0.0));
      for (int i = 0; i < torus_n_; ++i) p[i] = rng.uniform(0.0, kTau);
      return p;
    }
    case Kind::Punctured: {
      for (int attempt = 0; attempt < 4096; ++attempt) {
        Point p{rng.uniform(box_[0][0], box_[0][1]), rng.uniform(box_[1][0], box_[1][1]),
                rng.uniform(box_[2][0], box_[2][1])};
        if (obstacles_.clearance(p) > kClearanceFloor) return p;
      }
      fail("sample: could not draw a point clear of the obstacles");
    }
    case Kind::Complex: {
      const SimplicialComplex& k = *complex_;
      const int id = rng.pick(k.size());
      const Simplex& s = k.simplex(id);
      const std::size_t m = s.vertices.size();
      // Interior point: normalized exponentials give uniform barycentric
      // weights; tiny weights are re-drawn so the carrier stays clearly `id`.
      std::vector<double> w(m);
      for (int attempt = 0; attempt < 256; ++attempt) {
        double sum = 0.0;
        for (auto& wi : w) {
          wi = -std::log(1.0 - rng.unit());
          sum += wi;
        }
        if (sum <= 0.0) continue;
        double lo = 1.0;
        for (auto& wi : w) {
          wi /= sum;
          lo = std::min(lo, wi);
        }
        if (m > 1 && lo < 1e-6) continue;
        Point p(std::vector<double>(static_cast<std::size_t>(k.ambient_dim()), 0.0));
        for (std::size_t vi = 0; vi < m; ++vi) {
          const auto& v = k.vertex(s.vertices[vi]);
          for (int r = 0; r < k.ambient_dim(); ++r) p[r] += w[vi] * v[static_cast<std::size_t>(r)];
        }
        p.carrier_hint = id;
        return p;
      }
      fail("sample: could not draw an interior point of a simplex");
    }
    case Kind::Product: {
      Point l = left_->sample(rng);
      Point r = right_->sample(rng);
      return join(l, r);
    }
  }
  fail("sample: unknown space kind");
}

namespace {
// Uniform direction*magnitude draw from the unit ball, by rejection.
std::vector<double> unit_ball(int dim, Rng& rng) {
  std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    double len2 = 0.0;
    for (auto& vi : v) {
      vi = rng.uniform(-1.0, 1.0);
      len2 += vi * vi;
    }
    if (len2 <= 1.0) return v;
  }
  std::fill(v.begin(), v.end(), 0.0);
  return v;
}
}  // namespace

Point ConfigSpace::perturb(const Point& x, double r, Rng& rng) const {
  switch (kind_) {
    case Kind::Convex: {
      auto v = unit_ball(coords(), rng);
      Point p = x;
      p.carrier_hint.reset();
      for (int i = 0; i < p.size(); ++i) {
        p[i] = std::clamp(x[i] + r * v[static_cast<std::size_t>(i)], box_[static_cast<std::size_t>(i)][0],
                          box_[static_cast<std::size_t>(i)][1]);
      }
      return p;
    }
    case Kind::Circle:
      return Point{wrap_positive(x[0] + rng.uniform(-r, r))};
    case Kind::Torus: {
      Point p = x;
      for (int i = 0; i < torus_n_; ++i) p[i] = wrap_positive(x[i] + rng.uniform(-r, r));
      return p;
    }
    case Kind::Punctured: {
      for (int attempt = 0; attempt < 256; ++attempt) {
        auto v = unit_ball(3, rng);
        Point p{x[0] + r * v[0], x[1] + r * v[1], x[2] + r * v[2]};
        if (obstacles_.clearance(p) > kClearanceFloor) return p;
      }
      return x;
    }
    case Kind::Complex: {
      const SimplicialComplex& k = *complex_;
      const int home = k.carrier(x);
      const auto& up = k.cofaces(home);
      // Choose the home simplex or one coface; move toward a point of it.
      const int choice = rng.pick(static_cast<int>(up.size()) + 1);
      Point target;
      int target_id = home;
      if (choice == 0) {
        const Simplex& s = k.simplex(home);
        const std::size_t m = s.vertices.size();
        std::vector<double> w(m);
        double sum = 0.0;
        for (auto& wi : w) {
          wi = -std::log(1.0 - rng.unit()) + 1e-12;
          sum += wi;
        }
        target = Point(std::vector<double>(static_cast<std::size_t>(k.ambient_dim()), 0.0));
        for (std::size_t vi = 0; vi < m; ++vi) {
          const auto& v = k.vertex(s.vertices[vi]);
          for (int c = 0; c < k.ambient_dim(); ++c) target[c] += (w[vi] / sum) * v[static_cast<std::size_t>(c)];
        }
      } else {
        target_id = up[static_cast<std::size_t>(choice - 1)];
        target = k.barycenter(target_id);
      }
      const double gap = euclid(x.c, target.c);
      if (gap == 0.0) {
        Point p = x;
        p.carrier_hint = home;
        return p;
      }
      // Step fraction bounded below so the result is numerically interior
      // to the chosen simplex, and capped so it stays within radius r.
      const double step = std::min(1.0, r / gap) * (0.25 + 0.75 * rng.unit());
      Point p(std::vector<double>(x.c.size(), 0.0));
      for (int c = 0; c < p.size(); ++c) p[c] = x[c] + step * (target[c] - x[c]);
      p.carrier_hint = target_id;
      return p;
    }
    case Kind::Product: {
      Point l = left_->perturb(left_part(x), r, rng);
      Point r2 = right_->perturb(right_part(x), r, rng);
      return join(l, r2);
    }
  }
  return x;
}

double ConfigSpace::diameter() const {
  switch (kind_) {
    case Kind::Convex:
    case Kind::Punctured: {
      double s = 0.0;
      for (const auto& [lo, hi] : box_) s += sq(hi - lo);
      return std::sqrt(s);
    }
    case Kind::Circle:
    case Kind::Torus:
      return kPi;
    case Kind::Complex:
      return complex_->diameter();
    case Kind::Product:
      return std::max(left_->diameter(), right_->diameter());
  }
  return 0.0;
}

const std::vector<std::array<double, 2>>& ConfigSpace::box() const {
  if (kind_ != Kind::Convex && kind_ != Kind::Punctured) fail("box: not a boxed space");
  return box_;
}

int ConfigSpace::torus_factors() const {
  if (kind_ != Kind::Torus) fail("torus_factors: not a torus");
  return torus_n_;
}

const ObstacleSet& ConfigSpace::obstacles() const {
  if (kind_ != Kind::Punctured) fail("obstacles: not a punctured space");
  return obstacles_;
}

const SimplicialComplex& ConfigSpace::complex_ref() const {
  if (kind_ != Kind::Complex) fail("complex_ref: not a complex space");
  return *complex_;
}

const ConfigSpace& ConfigSpace::left() const {
  if (kind_ != Kind::Product) fail("left: not a product space");
  return *left_;
}

const ConfigSpace& ConfigSpace::right() const {
  if (kind_ != Kind::Product) fail("right: not a product space");
  return *right_;
}

Point ConfigSpace::left_part(const Point& x) const {
  const int n = left().coords();
  return Point(std::vector<double>(x.c.begin(), x.c.begin() + n));
}

Point ConfigSpace::right_part(const Point& x) const {
  const int n = left().coords();
  return Point(std::vector<double>(x.c.begin() + n, x.c.end()));
}

Point ConfigSpace::join(const Point& l, const Point& r) const {
  if (kind_ != Kind::Product) fail("join: not a product space");
  Point p;
  p.c.reserve(l.c.size() + r.c.size());
  p.c.insert(p.c.end(), l.c.begin(), l.c.end());
  p.c.insert(p.c.end(), r.c.begin(), r.c.end());
  return p;
}

nlohmann::json ConfigSpace::to_json() const {
  nlohmann::json j;
  j["type"] = type_name();
  switch (kind_) {
    case Kind::Convex: {
      j["dim"] = static_cast<int>(box_.size());
      auto arr = nlohmann::json::array();
      for (const auto& [lo, hi] : box_) arr.push_back({lo, hi});
      j["box"] = arr;
      break;
    }
    case Kind::Circle:
      break;
    case Kind::Torus:
      j["n"] = torus_n_;
      break;
    case Kind::Punctured: {
      auto arr = nlohmann::json::array();
      for (const auto& p : obstacles_.points) arr.push_back({p[0], p[1], p[2]});
      j["obstacles"] = arr;
      break;
    }
    case Kind::Complex: {
      const SimplicialComplex& k = *complex_;
      auto verts = nlohmann::json::array();
      for (int v = 0; v < k.vertex_count(); ++v) verts.push_back(k.vertex(v));
      auto gens = nlohmann::json::array();
      for (int id = 0; id < k.size(); ++id) {
        if (k.cofaces(id).empty()) gens.push_back(k.simplex(id).vertices);  // maximal only
      }
      j["vertices"] = verts;
      j["simplices"] = gens;
      break;
    }
    case Kind::Product:
      j["left"] = left_->to_json();
      j["right"] = right_->to_json();
      break;
  }
  return j;
}

namespace {
double json_number(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number()) fail("space description: " + what + " must be a number");
  return j.get<double>();
}
}  // namespace

ConfigSpace ConfigSpace::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    fail("space description must be an object with a \"type\" string");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "convex") {
    if (!j.contains("dim") || !j["dim"].is_number_integer()) fail("convex space needs an integer \"dim\"");
    const int dim = j["dim"].get<int>();
    if (!j.contains("box") || !j["box"].is_array() || static_cast<int>(j["box"].size()) != dim) {
      fail("convex space needs a \"box\" array with one [lo, hi] pair per coordinate");
    }
    std::vector<std::array<double, 2>> box;
    for (const auto& pair : j["box"]) {
      if (!pair.is_array() || pair.size() != 2) fail("convex box entries must be [lo, hi] pairs");
      box.push_back({json_number(pair[0], "box bound"), json_number(pair[1], "box bound")});
    }
    return convex(std::move(box));
  }
  if (type == "circle") return circle();
  if (type == "torus") {
    if (!j.contains("n") || !j["n"].is_number_integer()) fail("torus space needs an integer \"n\"");
    return torus(j["n"].get<int>());
  }
  if (type == "punctured_r3") {
    if (!j.contains("obstacles") || !j["obstacles"].is_array()) {
      fail("punctured space needs an \"obstacles\" array");
    }
    std::vector<std::array<double, 3>> obs;
    for (const auto& p : j["obstacles"]) {
      if (!p.is_array() || p.size() != 3) fail("obstacles must be [x, y, z] triples");
      obs.push_back({json_number(p[0], "obstacle"), json_number(p[1], "obstacle"),
                     json_number(p[2], "obstacle")});
    }
    return punctured_r3(std::move(obs));
  }
  if (type == "complex") {
    if (!j.contains("vertices") || !j["vertices"].is_array() || !j.contains("simplices") ||
        !j["simplices"].is_array()) {
      fail("complex space needs \"vertices\" and \"simplices\" arrays");
    }
    std::vector<std::vector<double>> verts;
    for (const auto& v : j["vertices"]) {
      if (!v.is_array()) fail("complex vertices must be coordinate arrays");
      std::vector<double> coords;
      for (const auto& c : v) coords.push_back(json_number(c, "vertex coordinate"));
      verts.push_back(std::move(coords));
    }
    std::vector<std::vector<int>> gens;
    for (const auto& s : j["simplices"]) {
      if (!s.is_array()) fail("complex simplices must be vertex index arrays");
      std::vector<int> verts_of;
      for (const auto& v : s) {
        if (!v.is_number_integer()) fail("simplex entries must be integer vertex indices");
        verts_of.push_back(v.get<int>());
      }
      gens.push_back(std::move(verts_of));
    }
    return complex(SimplicialComplex::make(std::move(verts), std::move(gens)));
  }
  if (type == "product") {
    if (!j.contains("left") || !j.contains("right")) {
      fail("product space needs \"left\" and \"right\" factors");
    }
    return product(from_json(j["left"]), from_json(j["right"]));
  }
  fail("unknown space type \"" + type + "\"");
}

}  // namespace tc
