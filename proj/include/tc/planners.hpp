#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tc/spaces.hpp"

// Executable motion planners: each planner partitions the pair space X x X
// into finitely many local domains and attaches to every domain a rule that
// produces a continuous path from the first point to the second.  Exactly one
// domain claims any queried pair; query() enforces that and reports the rule
// index alongside the path.

namespace tc {

struct PlannerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultPathSamples = 257;

// A path as both a parametric map and a uniformly sampled polyline.  The map
// snaps t <= 0 and t >= 1 to the exact query endpoints, so endpoint identity
// is bitwise rather than within a tolerance.
struct Path {
  std::function<Point(double)> at;
  std::vector<Point> samples;

  int grid() const { return static_cast<int>(samples.size()); }
};

// Wrap a raw interior map into a Path with clamped endpoints and `samples`
// grid points.  clamp=false keeps the raw map at t in {0, 1} (used by the
// deliberately broken planners the audits must catch).
Path make_path(const Point& a, const Point& b, const std::function<Point(double)>& interior,
               int samples = kDefaultPathSamples, bool clamp = true);

// One local domain with its rule.
struct LocalRule {
  int index = 0;  // 1-based position in the planner
  std::string name;
  std::function<bool(const Point&, const Point&)> member;
  // Closed-form predicate for the topological closure of the domain; the
  // instability order of a pair counts the closures containing it.
  std::function<bool(const Point&, const Point&)> in_closure;
  // Raw parametric map for a pair in the domain.
  std::function<std::function<Point(double)>(const Point&, const Point&)> path;
  bool clamp_endpoints = true;
};

struct Query {
  int rule = 0;
  std::string rule_name;
  Path path;
  double epsilon = 0.0;  // detour radius for punctured-space queries, else 0
};

struct Planner {
  ConfigSpace space;
  std::string name;
  std::vector<LocalRule> rules;
  // Asserts closure(F_j) lies in F_1 u ... u F_j for every j; required of
  // both factors by the product construction.
  bool nested_closure = false;
  // Pairs designed to land on the most degenerate strata (antipodal,
  // obstacle-aligned, vertex-vertex, ...); audits always include them.
  std::vector<std::pair<Point, Point>> degenerate_pairs;
  // Labels the continuity branch of a pair (detour set, rotation direction,
  // carrier pair).  The local-continuity audit only compares pairs with
  // equal labels, since rule domains may contain several Lipschitz branches.
  std::function<std::string(const Point&, const Point&)> branch_signature;
  // Lipschitz-style constant C valid near the given pair: perturbing both
  // endpoints by delta moves the path by at most C*delta in the sup metric.
  std::function<double(const Point&, const Point&)> continuity_bound;
  // Detour radius for punctured-space planners (0 elsewhere).
  std::function<double(const Point&, const Point&)> epsilon;

  int rule_count() const { return static_cast<int>(rules.size()); }
  // Index of the unique rule whose member predicate holds; throws
  // PlannerError (broken partition) when none or several match.
  int member_index(const Point& a, const Point& b) const;
  Query query(const Point& a, const Point& b, int samples = kDefaultPathSamples) const;
};

// One rule: the straight segment, constant velocity.
Planner convex_planner(ConfigSpace space);
// Two rules on the unit circle: antipodal pairs take the counterclockwise
// half-turn, all others the shorter geodesic.
Planner circle_planner(double antipodal_tol = kAntipodalTol);
// The circle as rotation group: paths s(A,B)(t) = h(A*B^{-1}, t)*B where h
// contracts the cut circle; the overlap of the two categorical sets goes to
// the set cut at the identity.
Planner lie_circle_planner(double antipodal_tol = kAntipodalTol);
// Three rules on R^3 minus point obstacles: straight when the segment is
// clear, semicircular detours otherwise (x-displaced for z-parallel
// segments, z-displaced otherwise), with query-adapted detour radius
// eps(A,B) = min(min_gap/3, clearance(A)/2, clearance(B)/2).
Planner punctured_r3_planner(ConfigSpace space);
// 2*dim+1 rules on a geometric simplicial complex, one per total carrier
// dimension; paths run endpoint -> barycenter -> (breadth-first barycenter
// route) -> barycenter -> endpoint.
Planner polyhedral_planner(ConfigSpace space);
// Product planner W_r = union of F_j x G_i over j+i=r; both factors must
// have nested closures, and the result has them again.
Planner product_planner(Planner left, Planner right);

// Planner for a space: name "auto" picks the variant's builder (tori become
// iterated circle products); explicit names: convex, circle, lie_circle,
// punctured_r3, polyhedral, product.
Planner planner_for(const ConfigSpace& space, const std::string& name = "auto");

// Deliberately broken planners, used to prove the audits catch violations.
Planner faulty_overlap_planner();    // two rules both claim antipodal pairs
Planner faulty_endpoint_planner();   // paths start displaced from the query point
Planner faulty_clearance_planner();  // oversized detour radius grazes an obstacle

}  // namespace tc
