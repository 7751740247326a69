#include "tc/planners.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <memory>
#include <sstream>

namespace tc {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw PlannerError(msg); }

Point lerp(const Point& a, const Point& b, double t) {
  Point p(std::vector<double>(a.c.size(), 0.0));
  for (int i = 0; i < a.size(); ++i) p[i] = (1.0 - t) * a[i] + t * b[i];
  return p;
}

std::string pair_text(const Point& a, const Point& b) {
  return format_point(a) + " -> " + format_point(b);
}

struct V3 {
  double x = 0, y = 0, z = 0;
};
V3 v3(const Point& p) { return {p[0], p[1], p[2]}; }
V3 operator-(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
V3 operator+(V3 a, V3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
V3 operator*(double s, V3 a) { return {s * a.x, s * a.y, s * a.z}; }
double dot(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm(V3 a) { return std::sqrt(dot(a, a)); }

}  // namespace

Path make_path(const Point& a, const Point& b, const std::function<Point(double)>& interior,
               int samples, bool clamp) {
  if (samples < 2) fail("a path needs at least two samples");
  Path p;
  if (clamp) {
    p.at = [a, b, interior](double t) {
      if (t <= 0.0) return a;
      if (t >= 1.0) return b;
      return interior(t);
    };
  } else {
    p.at = interior;
  }
  p.samples.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    p.samples.push_back(p.at(static_cast<double>(i) / (samples - 1)));
  }
  return p;
}

int Planner::member_index(const Point& a, const Point& b) const {
  std::vector<int> matched;
  for (const LocalRule& r : rules) {
    if (r.member(a, b)) matched.push_back(r.index);
  }
  if (matched.size() == 1) return matched[0];
  if (matched.empty()) {
    fail("broken partition: no local rule of " + name + " matched " + pair_text(a, b));
  }
  std::ostringstream msg;
  msg << "broken partition: rules";
  for (int i : matched) msg << " " << i;
  msg << " of " << name << " all matched " << pair_text(a, b);
  fail(msg.str());
}

Query Planner::query(const Point& a, const Point& b, int samples) const {
  space.require(a, "query start");
  space.require(b, "query end");
  const int idx = member_index(a, b);
  const LocalRule& rule = rules[static_cast<std::size_t>(idx - 1)];
  Query q;
  q.rule = idx;
  q.rule_name = rule.name;
  q.path = make_path(a, b, rule.path(a, b), samples, rule.clamp_endpoints);
  if (epsilon) {
    const double e = epsilon(a, b);
    q.epsilon = std::isfinite(e) ? e : 0.0;
  }
  return q;
}

// --------------------------------------------------------------------------
// Convex regions

Planner convex_planner(ConfigSpace space) {
  if (space.kind() != ConfigSpace::Kind::Convex) fail("convex planner needs a convex space");
  Planner p;
  p.space = std::move(space);
  p.name = "convex";
  LocalRule r;
  r.index = 1;
  r.name = "straight-segment";
  r.member = [](const Point&, const Point&) { return true; };
  r.in_closure = [](const Point&, const Point&) { return true; };
  r.path = [](const Point& a, const Point& b) {
    return std::function<Point(double)>([a, b](double t) { return lerp(a, b, t); });
  };
  p.rules.push_back(std::move(r));
  p.nested_closure = true;
  Point center(std::vector<double>(p.space.box().size(), 0.0));
  for (std::size_t i = 0; i < p.space.box().size(); ++i) {
    center[static_cast<int>(i)] = 0.5 * (p.space.box()[i][0] + p.space.box()[i][1]);
  }
  p.degenerate_pairs = {{center, center}};
  p.branch_signature = [](const Point&, const Point&) { return std::string{}; };
  p.continuity_bound = [](const Point&, const Point&) { return 1.0; };
  return p;
}

// --------------------------------------------------------------------------
// Circle (shorter-geodesic version)

namespace {
bool antipodal(const Point& a, const Point& b, double tol) {
  return std::fabs(wrap_signed(b[0] - a[0])) >= kPi - tol;
}
}  // namespace

Planner circle_planner(double antipodal_tol) {
  Planner p;
  p.space = ConfigSpace::circle();
  p.name = "circle";
  const double tol = antipodal_tol;

  LocalRule half;
  half.index = 1;
  half.name = "antipodal-half-turn";
  half.member = [tol](const Point& a, const Point& b) { return antipodal(a, b, tol); };
  half.in_closure = half.member;  // the antipodal set is closed
  half.path = [](const Point& a, const Point& b) {
    const double turn = wrap_positive(b[0] - a[0]);  // counterclockwise
    return std::function<Point(double)>([a, turn](double t) { return Point{a[0] + t * turn}; });
  };
  p.rules.push_back(std::move(half));

  LocalRule geo;
  geo.index = 2;
  geo.name = "shorter-geodesic";
  geo.member = [tol](const Point& a, const Point& b) { return !antipodal(a, b, tol); };
  // The non-antipodal set is open and dense: its closure is everything.
  geo.in_closure = [](const Point&, const Point&) { return true; };
  geo.path = [](const Point& a, const Point& b) {
    const double turn = wrap_signed(b[0] - a[0]);
    return std::function<Point(double)>([a, turn](double t) { return Point{a[0] + t * turn}; });
  };
  p.rules.push_back(std::move(geo));

  p.nested_closure = true;
  p.degenerate_pairs = {{Point{0.0}, Point{kPi}}};
  p.branch_signature = [tol](const Point& a, const Point& b) {
    if (antipodal(a, b, tol)) return std::string("half-turn");
    return std::string(wrap_signed(b[0] - a[0]) >= 0.0 ? "ccw" : "cw");
  };
  p.continuity_bound = [](const Point&, const Point&) { return 4.0; };
  return p;
}

// --------------------------------------------------------------------------
// Circle as the rotation group

Planner lie_circle_planner(double antipodal_tol) {
  Planner p;
  p.space = ConfigSpace::circle();
  p.name = "lie_circle";
  const double tol = antipodal_tol;
  // Group element moved by the pair: g = A * B^{-1}, here the angle a - b.
  auto group_g = [](const Point& a, const Point& b) { return a[0] - b[0]; };

  // Categorical sets: U1 = circle minus the half-turn rotation, U2 = circle
  // minus the identity; the overlap belongs to U1, so the U2 rule keeps only
  // the closed half-turn set and is listed first for nested closures.
  LocalRule half;
  half.index = 1;
  half.name = "half-turn-contraction";
  half.member = [tol, group_g](const Point& a, const Point& b) {
    return std::fabs(wrap_signed(group_g(a, b))) >= kPi - tol;
  };
  half.in_closure = half.member;
  half.path = [group_g](const Point& a, const Point& b) {
    // h2 contracts the circle cut at the identity: angles in (0, 2*pi) slide
    // up to 2*pi.  Path = h2(g, t) * B.
    const double g = wrap_positive(group_g(a, b));
    return std::function<Point(double)>(
        [g, b](double t) { return Point{(1.0 - t) * g + t * kTau + b[0]}; });
  };
  p.rules.push_back(std::move(half));

  LocalRule generic;
  generic.index = 2;
  generic.name = "identity-contraction";
  generic.member = [tol, group_g](const Point& a, const Point& b) {
    return std::fabs(wrap_signed(group_g(a, b))) < kPi - tol;
  };
  generic.in_closure = [](const Point&, const Point&) { return true; };
  generic.path = [group_g](const Point& a, const Point& b) {
    // h1 contracts the circle cut at the half-turn: linear shrink to 0.
    const double g = wrap_signed(group_g(a, b));
    return std::function<Point(double)>([g, b](double t) { return Point{(1.0 - t) * g + b[0]}; });
  };
  p.rules.push_back(std::move(generic));

  p.nested_closure = true;
  p.degenerate_pairs = {{Point{kPi}, Point{0.0}}};
  p.branch_signature = [tol, group_g](const Point& a, const Point& b) {
    const double g = wrap_signed(group_g(a, b));
    if (std::fabs(g) >= kPi - tol) return std::string("half-turn");
    return std::string(g >= 0.0 ? "pos" : "neg");
  };
  p.continuity_bound = [](const Point&, const Point&) { return 4.0; };
  return p;
}

// --------------------------------------------------------------------------
// Punctured 3-space

namespace {

bool z_parallel(const Point& a, const Point& b) {
  const V3 d = v3(b) - v3(a);
  const double len = norm(d);
  if (len == 0.0) return false;
  return std::hypot(d.x, d.y) <= kCollinearTol * len;
}

Planner punctured_impl(ConfigSpace space, std::optional<double> eps_override,
                       const std::string& name) {
  if (space.kind() != ConfigSpace::Kind::Punctured) {
    fail("punctured planner needs a punctured_r3 space");
  }
  const ObstacleSet obs = space.obstacles();
  const double diam = space.diameter();

  auto eps_of = [obs, eps_override](const Point& a, const Point& b) {
    if (eps_override) return *eps_override;
    double e = obs.min_gap / 3.0;
    e = std::min(e, obs.clearance(a) / 2.0);
    e = std::min(e, obs.clearance(b) / 2.0);
    return e;
  };

  // Detour path: straight segment with semicircular arcs of radius eps
  // replacing the stretch around each obstacle on the segment.  The arc
  // plane is spanned by the segment direction and `side`.
  auto detour = [obs, eps_of](const Point& a, const Point& b, bool x_side) {
    const auto hs = obs.hits(a, b);
    const V3 va = v3(a), vb = v3(b);
    const V3 d = vb - va;
    const double len = norm(d);
    const double eps = eps_of(a, b);
    const double tr = len > 0.0 ? eps / len : 0.0;  // parameter half-width
    V3 side{1.0, 0.0, 0.0};
    if (!x_side) {
      const V3 u = (1.0 / len) * d;
      V3 w = V3{0.0, 0.0, 1.0} - dot(V3{0.0, 0.0, 1.0}, u) * u;
      side = (1.0 / norm(w)) * w;  // upper: positive z component
    }
    return std::function<Point(double)>([hs, va, d, len, eps, tr, side](double t) {
      for (const SegmentHit& h : hs) {
        if (std::fabs(t - h.t) <= tr && tr > 0.0) {
          const double s = (t - (h.t - tr)) / (2.0 * tr);
          const V3 center = va + h.t * d;
          const V3 u = (1.0 / len) * d;
          const V3 q = center + (-eps * std::cos(kPi * s)) * u + (eps * std::sin(kPi * s)) * side;
          return Point{q.x, q.y, q.z};
        }
      }
      const V3 q = va + t * d;
      return Point{q.x, q.y, q.z};
    });
  };

  Planner p;
  p.space = std::move(space);
  p.name = name;

  LocalRule axial;
  axial.index = 1;
  axial.name = "blocked-axial";  // segment hits an obstacle and runs along z
  axial.member = [obs](const Point& a, const Point& b) {
    return !obs.hits(a, b).empty() && z_parallel(a, b);
  };
  axial.in_closure = axial.member;  // intersection of two closed conditions
  axial.path = [detour](const Point& a, const Point& b) { return detour(a, b, true); };
  p.rules.push_back(std::move(axial));

  LocalRule blocked;
  blocked.index = 2;
  blocked.name = "blocked-generic";
  blocked.member = [obs](const Point& a, const Point& b) {
    return !obs.hits(a, b).empty() && !z_parallel(a, b);
  };
  // Closure: all blocked pairs (tilting a blocked axial segment around the
  // obstacle keeps it blocked while breaking axiality).
  blocked.in_closure = [obs](const Point& a, const Point& b) { return !obs.hits(a, b).empty(); };
  blocked.path = [detour](const Point& a, const Point& b) { return detour(a, b, false); };
  p.rules.push_back(std::move(blocked));

  LocalRule clear;
  clear.index = 3;
  clear.name = "straight-clear";
  clear.member = [obs](const Point& a, const Point& b) { return obs.hits(a, b).empty(); };
  // The clear set is open and dense; its closure is everything.
  clear.in_closure = [](const Point&, const Point&) { return true; };
  clear.path = [](const Point& a, const Point& b) {
    return std::function<Point(double)>([a, b](double t) { return lerp(a, b, t); });
  };
  p.rules.push_back(std::move(clear));

  p.nested_closure = true;
  if (obs.size() > 0) {
    const auto& p0 = obs.points[0];
    const double h = std::isfinite(obs.min_gap) ? obs.min_gap / 2.0 : 1.0;
    p.degenerate_pairs.push_back(
        {Point{p0[0], p0[1], p0[2] - h}, Point{p0[0], p0[1], p0[2] + h}});
    p.degenerate_pairs.push_back(
        {Point{p0[0] - h, p0[1], p0[2]}, Point{p0[0] + h, p0[1], p0[2]}});
  }
  p.branch_signature = [obs](const Point& a, const Point& b) {
    const auto hs = obs.hits(a, b);
    if (hs.empty()) return std::string("clear");
    std::ostringstream sig;
    sig << (z_parallel(a, b) ? "axial" : "generic");
    for (const SegmentHit& h : hs) sig << ":" << h.index;
    return sig.str();
  };
  p.continuity_bound = [diam, eps_of](const Point& a, const Point& b) {
    const double e = eps_of(a, b);
    if (!std::isfinite(e) || e <= 0.0) return 1.0;
    return 8.0 * diam / e;
  };
  p.epsilon = eps_of;
  return p;
}

}  // namespace

Planner punctured_r3_planner(ConfigSpace space) {
  return punctured_impl(std::move(space), std::nullopt, "punctured_r3");
}

// --------------------------------------------------------------------------
// Simplicial complexes

Planner polyhedral_planner(ConfigSpace space) {
  if (space.kind() != ConfigSpace::Kind::Complex) fail("polyhedral planner needs a complex space");
  auto k = std::make_shared<const SimplicialComplex>(space.complex_ref());
  const int n = k->dim();
  const int count = k->size();

  // Center graph: every simplex's barycenter is joined to the barycenters of
  // its proper faces.  Breadth-first routes with ascending-id expansion give
  // the deterministic (lexicographically least among shortest) choice.
  auto centers = std::make_shared<std::vector<Point>>();
  for (int id = 0; id < count; ++id) centers->push_back(k->barycenter(id));
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(count));
  for (int id = 0; id < count; ++id) {
    auto& adj = adjacent[static_cast<std::size_t>(id)];
    adj.insert(adj.end(), k->proper_faces(id).begin(), k->proper_faces(id).end());
    adj.insert(adj.end(), k->cofaces(id).begin(), k->cofaces(id).end());
    std::sort(adj.begin(), adj.end());
  }
  auto routes = std::make_shared<std::vector<std::vector<std::vector<int>>>>(
      static_cast<std::size_t>(count));
  for (int src = 0; src < count; ++src) {
    std::vector<int> parent(static_cast<std::size_t>(count), -1);
    std::vector<bool> seen(static_cast<std::size_t>(count), false);
    std::deque<int> frontier{src};
    seen[static_cast<std::size_t>(src)] = true;
    while (!frontier.empty()) {
      const int at = frontier.front();
      frontier.pop_front();
      for (int next : adjacent[static_cast<std::size_t>(at)]) {
        if (!seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = true;
          parent[static_cast<std::size_t>(next)] = at;
          frontier.push_back(next);
        }
      }
    }
    auto& row = (*routes)[static_cast<std::size_t>(src)];
    row.resize(static_cast<std::size_t>(count));
    for (int dst = 0; dst < count; ++dst) {
      if (!seen[static_cast<std::size_t>(dst)]) fail("complex center graph is disconnected");
      std::vector<int> path{dst};
      for (int at = dst; at != src; at = parent[static_cast<std::size_t>(at)]) {
        path.push_back(parent[static_cast<std::size_t>(at)]);
      }
      std::reverse(path.begin(), path.end());
      row[static_cast<std::size_t>(dst)] = std::move(path);
    }
  }

  Planner p;
  p.space = std::move(space);
  p.name = "polyhedral";
  for (int i = 0; i <= 2 * n; ++i) {
    LocalRule r;
    r.index = i + 1;
    r.name = "carrier-dims-" + std::to_string(i);
    r.member = [k, i](const Point& a, const Point& b) {
      return k->simplex(k->carrier(a)).dim() + k->simplex(k->carrier(b)).dim() == i;
    };
    // Closure of the dimension-d stratum is the d-skeleton, so the closure
    // of this rule's domain collects all pairs with carrier dim sum <= i.
    r.in_closure = [k, i](const Point& a, const Point& b) {
      return k->simplex(k->carrier(a)).dim() + k->simplex(k->carrier(b)).dim() <= i;
    };
    r.path = [k, centers, routes](const Point& a, const Point& b) {
      const int ca = k->carrier(a), cb = k->carrier(b);
      const auto& route = (*routes)[static_cast<std::size_t>(ca)][static_cast<std::size_t>(cb)];
      std::vector<Point> stops;
      std::vector<int> hints;  // simplex whose closure holds each segment
      stops.push_back(a);
      hints.push_back(ca);
      for (int id : route) stops.push_back((*centers)[static_cast<std::size_t>(id)]);
      for (std::size_t e = 0; e + 1 < route.size(); ++e) {
        // One endpoint of each route edge is a proper face of the other.
        hints.push_back(k->simplex(route[e]).dim() > k->simplex(route[e + 1]).dim()
                            ? route[e]
                            : route[e + 1]);
      }
      stops.push_back(b);
      hints.push_back(cb);
      const int segs = static_cast<int>(stops.size()) - 1;
      return std::function<Point(double)>([stops, hints, segs](double t) {
        const double s = t * segs;
        const int j = std::min(static_cast<int>(s), segs - 1);
        Point q =
            lerp(stops[static_cast<std::size_t>(j)], stops[static_cast<std::size_t>(j) + 1], s - j);
        q.carrier_hint = hints[static_cast<std::size_t>(j)];
        return q;
      });
    };
    p.rules.push_back(std::move(r));
  }
  p.nested_closure = true;  // closure of each stratum lies in the lower skeleta

  const int v_first = 0;
  const int v_last = k->vertex_count() - 1;
  auto vertex_point = [&](int v) {
    Point q(k->vertex(v));
    q.carrier_hint = k->id_of({v});
    return q;
  };
  p.degenerate_pairs = {{vertex_point(v_first), vertex_point(v_first)},
                        {vertex_point(v_first), vertex_point(v_last)}};
  p.branch_signature = [k](const Point& a, const Point& b) {
    return std::to_string(k->carrier(a)) + ":" + std::to_string(k->carrier(b));
  };
  p.continuity_bound = [](const Point&, const Point&) { return 4.0; };
  return p;
}

// --------------------------------------------------------------------------
// Products

Planner product_planner(Planner left, Planner right) {
  if (!left.nested_closure || !right.nested_closure) {
    fail("product planner needs nested closures on both factors");
  }
  auto P = std::make_shared<const Planner>(std::move(left));
  auto Q = std::make_shared<const Planner>(std::move(right));
  auto space = std::make_shared<const ConfigSpace>(ConfigSpace::product(P->space, Q->space));
  const int k = P->rule_count(), l = Q->rule_count();

  Planner p;
  p.space = *space;
  p.name = "product(" + P->name + "," + Q->name + ")";
  for (int r = 2; r <= k + l; ++r) {
    LocalRule rule;
    rule.index = r - 1;
    rule.name = "index-sum-" + std::to_string(r);
    rule.member = [P, Q, space, r](const Point& a, const Point& b) {
      const int j = P->member_index(space->left_part(a), space->left_part(b));
      const int i = Q->member_index(space->right_part(a), space->right_part(b));
      return j + i == r;
    };
    rule.in_closure = [P, Q, space, r, k, l](const Point& a, const Point& b) {
      const Point la = space->left_part(a), lb = space->left_part(b);
      const Point ra = space->right_part(a), rb = space->right_part(b);
      for (int j = std::max(1, r - l); j <= std::min(k, r - 1); ++j) {
        if (P->rules[static_cast<std::size_t>(j - 1)].in_closure(la, lb) &&
            Q->rules[static_cast<std::size_t>(r - j - 1)].in_closure(ra, rb)) {
          return true;
        }
      }
      return false;
    };
    rule.path = [P, Q, space](const Point& a, const Point& b) {
      const Point la = space->left_part(a), lb = space->left_part(b);
      const Point ra = space->right_part(a), rb = space->right_part(b);
      const int j = P->member_index(la, lb);
      const int i = Q->member_index(ra, rb);
      auto pl = P->rules[static_cast<std::size_t>(j - 1)].path(la, lb);
      auto pr = Q->rules[static_cast<std::size_t>(i - 1)].path(ra, rb);
      return std::function<Point(double)>(
          [space, pl, pr](double t) { return space->join(pl(t), pr(t)); });
    };
    p.rules.push_back(std::move(rule));
  }
  p.nested_closure = true;
  for (const auto& [la, lb] : P->degenerate_pairs) {
    for (const auto& [ra, rb] : Q->degenerate_pairs) {
      p.degenerate_pairs.push_back({space->join(la, ra), space->join(lb, rb)});
    }
  }
  p.branch_signature = [P, Q, space](const Point& a, const Point& b) {
    return "(" + P->branch_signature(space->left_part(a), space->left_part(b)) + ")*(" +
           Q->branch_signature(space->right_part(a), space->right_part(b)) + ")";
  };
  p.continuity_bound = [P, Q, space](const Point& a, const Point& b) {
    return std::max(P->continuity_bound(space->left_part(a), space->left_part(b)),
                    Q->continuity_bound(space->right_part(a), space->right_part(b)));
  };
  return p;
}

// --------------------------------------------------------------------------
// Selection and broken planners

namespace {
Planner torus_product(int factors) {
  if (factors == 1) return circle_planner();
  return product_planner(circle_planner(), torus_product(factors - 1));
}
}  // namespace

Planner planner_for(const ConfigSpace& space, const std::string& name) {
  using Kind = ConfigSpace::Kind;
  if (name == "auto") {
    switch (space.kind()) {
      case Kind::Convex: return convex_planner(space);
      case Kind::Circle: return circle_planner();
      case Kind::Torus: return torus_product(space.torus_factors());
      case Kind::Punctured: return punctured_r3_planner(space);
      case Kind::Complex: return polyhedral_planner(space);
      case Kind::Product:
        return product_planner(planner_for(space.left()), planner_for(space.right()));
    }
    fail("planner_for: unknown space kind");
  }
  if (name == "convex") return convex_planner(space);
  if (name == "circle") {
    if (space.kind() != Kind::Circle) fail("the circle planner needs a circle space");
    return circle_planner();
  }
  if (name == "lie_circle") {
    if (space.kind() != Kind::Circle) fail("the lie_circle planner needs a circle space");
    return lie_circle_planner();
  }
  if (name == "punctured_r3") return punctured_r3_planner(space);
  if (name == "polyhedral") return polyhedral_planner(space);
  if (name == "product") {
    if (space.kind() == Kind::Torus) return torus_product(space.torus_factors());
    if (space.kind() != Kind::Product) fail("the product planner needs a product space");
    return product_planner(planner_for(space.left()), planner_for(space.right()));
  }
  fail("unknown planner \"" + name + "\"");
}

Planner faulty_overlap_planner() {
  Planner p = circle_planner();
  p.name = "faulty-overlap";
  LocalRule extra = p.rules[0];  // a second claim on the antipodal pairs
  extra.index = 3;
  extra.name = "antipodal-duplicate";
  p.rules.push_back(std::move(extra));
  return p;
}

Planner faulty_endpoint_planner() {
  Planner p = convex_planner(ConfigSpace::convex({{-1, 1}, {-1, 1}}));
  p.name = "faulty-endpoint";
  LocalRule& r = p.rules[0];
  r.name = "displaced-start";
  r.clamp_endpoints = false;
  r.path = [](const Point& a, const Point& b) {
    Point shifted = a;
    shifted[0] += 1e-3;
    return std::function<Point(double)>([shifted, b](double t) { return lerp(shifted, b, t); });
  };
  p.degenerate_pairs = {{Point{-0.5, 0.0}, Point{0.5, 0.0}}};
  return p;
}

Planner faulty_clearance_planner() {
  Planner p = punctured_impl(ConfigSpace::punctured_r3({{0, 0, 0}, {0, 0, 1}}), 1.0,
                             "faulty-clearance");
  // Detour radius 1 around the origin sends the arc straight through the
  // second obstacle for this pair.
  p.degenerate_pairs = {{Point{-1, 0, 0}, Point{1, 0, 0}}};
  return p;
}

}  // namespace tc
