#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

// Geometric configuration spaces: membership, metric, deterministic sampling,
// and the predicates the motion planners build on (obstacle clearance,
// segment/obstacle incidence, simplex carriers).  Geometry runs in double
// precision with explicit tolerances, unlike the exact algebra layer; every
// tolerance is a named constant or a constructor argument.

namespace tc {

struct SpaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTau = 2.0 * kPi;

// Segments count as touching an obstacle when the obstacle lies within this
// distance of them.
inline constexpr double kCollinearTol = 1e-9;
// Samplers in punctured space reject points closer than this to an obstacle.
inline constexpr double kClearanceFloor = 1e-6;
// Angle pairs within this of a half-turn count as antipodal.
inline constexpr double kAntipodalTol = 1e-6;
// Barycentric coordinates above this threshold count as strictly positive.
inline constexpr double kInteriorTol = 1e-12;
// A point farther than this from a simplex's affine span is outside it.
inline constexpr double kSpanTol = 1e-9;

// Reduce an angle to (-pi, pi].  Exact (no rounding) when the input already
// lies in range; in particular wrap_signed(0.0) == 0.0 bitwise.
double wrap_signed(double a);
// Reduce an angle to [0, 2*pi).
double wrap_positive(double a);
// Shorter-arc distance between two angles.
double circle_distance(double a, double b);

// --------------------------------------------------------------------------
// Deterministic randomness.

// Wrapper around the standard 64-bit Mersenne engine.  split() derives an
// independent deterministic sub-stream, so audits can hand one child per item
// index and stay reproducible regardless of evaluation order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double unit();                       // uniform in [0, 1)
  double uniform(double lo, double hi);
  int pick(int n);                     // uniform in {0, ..., n-1}
  Rng split(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::mt19937_64 engine_;
};

// --------------------------------------------------------------------------
// Points.

// One configuration.  Coordinates are variant-specific: one angle per
// circle/torus factor, Cartesian coordinates otherwise.  carrier_hint caches
// the simplex id whose interior holds the point, so repeated carrier lookups
// on complexes need no fresh barycentric solve.
struct Point {
  std::vector<double> c;
  std::optional<int> carrier_hint;

  Point() = default;
  explicit Point(std::vector<double> coords) : c(std::move(coords)) {}
  Point(std::initializer_list<double> coords) : c(coords) {}

  int size() const { return static_cast<int>(c.size()); }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

std::string format_point(const Point& p);

// --------------------------------------------------------------------------
// Obstacles in punctured 3-space.

// A finite set of pairwise distinct obstacle points in R^3.
struct SegmentHit {
  int index = 0;   // obstacle index
  double t = 0.0;  // parameter along the segment, from its start
};

struct ObstacleSet {
  std::vector<std::array<double, 3>> points;
  // Minimum pairwise obstacle distance; +infinity for fewer than two points.
  double min_gap = std::numeric_limits<double>::infinity();
  double collinear_tol = kCollinearTol;

  static ObstacleSet make(std::vector<std::array<double, 3>> pts,
                          double collinear_tol = kCollinearTol);

  int size() const { return static_cast<int>(points.size()); }

  // Distance from x to the nearest obstacle (+infinity when there are none).
  double clearance(const Point& x) const;

  // Obstacles within collinear_tol of the closed segment [a, b], ordered by
  // parameter from a; ties broken by obstacle index.
  std::vector<SegmentHit> hits(const Point& a, const Point& b) const;
  // The same hits as bare obstacle indices.
  std::vector<int> segment_hits(const Point& a, const Point& b) const;
};

// --------------------------------------------------------------------------
// Geometric simplicial complexes.

struct Simplex {
  std::vector<int> vertices;  // ascending vertex indices
  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// A finite geometric simplicial complex.  Simplices are stored closed under
// faces and ordered by (dimension, lexicographic vertex list); the position
// in that order is the simplex id.  Validation requires every simplex's
// vertices to be affinely independent and the whole complex to be connected.
class SimplicialComplex {
 public:
  // vertex_coords: one coordinate vector per vertex, common length;
  // generators: vertex index sets whose face closure defines the complex.
  static SimplicialComplex make(std::vector<std::vector<double>> vertex_coords,
                                std::vector<std::vector<int>> generators);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(simplices_.size()); }
  const Simplex& simplex(int id) const { return simplices_.at(static_cast<std::size_t>(id)); }
  const std::vector<double>& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  // Id of the simplex with exactly these vertices, or -1.
  int id_of(std::vector<int> verts) const;

  // Affine coordinates of x with respect to simplex id, or nullopt when x
  // lies farther than kSpanTol from the simplex's affine span.
  std::optional<std::vector<double>> barycentric(int id, const Point& x) const;

  // The unique simplex whose interior contains x; points on a boundary face
  // resolve to that face.  Throws SpaceError when x is in no simplex.  A
  // valid carrier hint on x short-circuits the search.
  int carrier(const Point& x) const;
  bool contains(const Point& x) const;

  Point barycenter(int id) const;  // carrier hint set to id

  // Proper faces / proper cofaces of a simplex, ascending ids.
  const std::vector<int>& proper_faces(int id) const;
  const std::vector<int>& cofaces(int id) const;

  // Largest pairwise distance; attained at vertices.
  double diameter() const;

 private:
  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<std::vector<double>> vertices_;
  std::vector<Simplex> simplices_;
  std::vector<std::vector<int>> proper_faces_;
  std::vector<std::vector<int>> cofaces_;
};

// --------------------------------------------------------------------------
// Configuration spaces.

// Tagged union over the supported space variants.  Products hold their
// factors behind shared pointers, so spaces copy cheaply and are immutable
// after construction.
class ConfigSpace {
 public:
  enum class Kind { Convex, Circle, Torus, Punctured, Complex, Product };

  // Axis-aligned box given as one {lo, hi} pair per coordinate.
  static ConfigSpace convex(std::vector<std::array<double, 2>> box);
  static ConfigSpace circle();
  static ConfigSpace torus(int factors);
  static ConfigSpace punctured_r3(std::vector<std::array<double, 3>> obstacles);
  static ConfigSpace complex(SimplicialComplex k);
  static ConfigSpace product(ConfigSpace left, ConfigSpace right);

  Kind kind() const { return kind_; }
  std::string type_name() const;
  // Length of the coordinate vector of a point of this space.
  int coords() const;

  bool contains(const Point& x) const;
  // Throws SpaceError naming `role` when x is not a point of this space.
  void require(const Point& x, const std::string& role) const;

  // The variant metric: Euclidean for convex/punctured/complex, shorter-arc
  // per circle factor, max over factors for torus and product.
  double distance(const Point& x, const Point& y) const;

  // Deterministic pseudo-random point.  Punctured space draws from its
  // sampling box and rejects points with clearance <= kClearanceFloor;
  // complexes draw a uniformly chosen simplex and an interior point of it.
  Point sample(Rng& rng) const;

  // Perturbation of x within metric radius r, kept inside the space:
  // uniform in the radius-r ball for convex/circle/torus/punctured/product;
  // on complexes, a coin picks the carrier or one of its cofaces and the
  // point moves toward a random point of the chosen simplex, so the result
  // stays within r of x and inside the complex.
  Point perturb(const Point& x, double r, Rng& rng) const;

  // Largest distance between sampled points (for punctured space, the
  // diagonal of the sampling box).
  double diameter() const;

  const std::vector<std::array<double, 2>>& box() const;
  int torus_factors() const;
  const ObstacleSet& obstacles() const;
  const SimplicialComplex& complex_ref() const;
  const ConfigSpace& left() const;
  const ConfigSpace& right() const;
  // Split/join coordinate vectors of a product space.  Carrier hints do not
  // survive either direction (they are only meaningful on a bare complex).
  Point left_part(const Point& x) const;
  Point right_part(const Point& x) const;
  Point join(const Point& l, const Point& r) const;

  nlohmann::json to_json() const;
  static ConfigSpace from_json(const nlohmann::json& j);

 private:
  ConfigSpace() = default;

  Kind kind_ = Kind::Convex;
  std::vector<std::array<double, 2>> box_;  // convex bounds / punctured sampling box
  int torus_n_ = 0;
  ObstacleSet obstacles_;
  std::shared_ptr<const SimplicialComplex> complex_;
  std::shared_ptr<const ConfigSpace> left_, right_;
};

}  // namespace tc
