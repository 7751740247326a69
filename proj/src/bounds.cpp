#include "tc/bounds.hpp"

#include <algorithm>
#include <cctype>

#include "tc/presets.hpp"

namespace tc {

namespace {

[[noreturn]] void bad(const std::string& text, const std::string& why) {
  throw DescriptorError("bad space descriptor '" + text + "': " + why);
}

struct Cursor {
  std::string all;  // whitespace already stripped
  std::size_t pos = 0;

  bool done() const { return pos >= all.size(); }
  char peek() const { return done() ? '\0' : all[pos]; }
  void expect(char c, const std::string& what) {
    if (peek() != c) bad(all, "expected '" + std::string(1, c) + "' " + what);
    ++pos;
  }
  std::string ident() {
    std::size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(all[pos])) ||
                       all[pos] == '_'))
      ++pos;
    if (pos == start) bad(all, "expected a name at position " +
                                   std::to_string(pos));
    return all.substr(start, pos - start);
  }
  int integer() {
    std::size_t start = pos;
    if (peek() == '-') ++pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(all[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && all[start] == '-'))
      bad(all, "expected an integer at position " + std::to_string(start));
    return std::stoi(all.substr(start, pos - start));
  }
};

struct AtomSpec {
  const char* canonical;
  int param_count;
};

const AtomSpec* atom_spec(const std::string& name) {
  static const std::map<std::string, AtomSpec> table = {
      {"point", {"point", 0}},
      {"se3", {"se3", 0}},
      {"circle", {"torus", 0}},  // circle = torus:1
      {"sphere", {"sphere", 1}},
      {"surface", {"surface", 1}},
      {"torus", {"torus", 1}},
      {"projective_mod2", {"projective_mod2", 1}},
      {"pm2", {"projective_mod2", 1}},
      {"graph", {"graph", 1}},
      {"wedge_spheres", {"wedge_spheres", 2}},
      {"wedge", {"wedge_spheres", 2}},
  };
  auto it = table.find(name);
  return it == table.end() ? nullptr : &it->second;
}

void check_ranges(const SpaceDescriptor& d, const std::string& text) {
  const auto& p = d.params;
  if (d.kind == "sphere" && p[0] < 1)
    bad(text, "sphere dimension must be >= 1");
  if (d.kind == "wedge_spheres" && (p[0] < 1 || p[1] < 1))
    bad(text, "wedge_spheres needs n >= 1 spheres of dimension m >= 1");
  if (d.kind == "surface" && (p[0] < 0 || p[0] > 13))
    bad(text, "surface genus must be between 0 and 13");
  if (d.kind == "torus" && (p[0] < 1 || p[0] > 11))
    bad(text, "torus factor count must be between 1 and 11");
  if (d.kind == "projective_mod2" && p[0] < 1)
    bad(text, "projective_mod2 dimension must be >= 1");
  if (d.kind == "graph" && p[0] < 0)
    bad(text, "graph first Betti number must be >= 0");
}

SpaceDescriptor parse_one(Cursor& c) {
  const std::string name = c.ident();
  if (name == "product") {
    SpaceDescriptor d;
    d.kind = "product";
    c.expect('(', "after product");
    d.factors.push_back(parse_one(c));
    while (c.peek() == ',') {
      ++c.pos;
      d.factors.push_back(parse_one(c));
    }
    c.expect(')', "to close product(...)");
    if (d.factors.size() < 2) bad(c.all, "product needs at least two factors");
    return d;
  }
  if (name == "power") {
    c.expect('(', "after power");
    SpaceDescriptor base = parse_one(c);
    c.expect(',', "between the power base and exponent");
    const int k = c.integer();
    c.expect(')', "to close power(...)");
    if (k < 1) bad(c.all, "power exponent must be >= 1");
    if (k == 1) return base;
    SpaceDescriptor d;
    d.kind = "product";
    d.factors.assign(static_cast<std::size_t>(k), base);
    return d;
  }
  const AtomSpec* spec = atom_spec(name);
  if (!spec) bad(c.all, "unknown space '" + name + "'");
  SpaceDescriptor d;
  d.kind = spec->canonical;
  if (name == "circle") {
    d.params = {1};
  } else if (spec->param_count > 0) {
    c.expect(':', "before the parameters of " + name);
    d.params.push_back(c.integer());
    for (int i = 1; i < spec->param_count; ++i) {
      c.expect(',', "between the parameters of " + name);
      d.params.push_back(c.integer());
    }
  }
  check_ranges(d, c.all);
  return d;
}

SpaceDescriptor normalized_leaf(SpaceDescriptor d) {
  for (;;) {
    if (d.kind == "wedge_spheres" && d.params[0] == 1) {
      d = SpaceDescriptor{"sphere", {d.params[1]}, {}};
    } else if (d.kind == "surface" && d.params[0] == 0) {
      d = SpaceDescriptor{"sphere", {2}, {}};
    } else if (d.kind == "surface" && d.params[0] == 1) {
      d = SpaceDescriptor{"torus", {2}, {}};
    } else if (d.kind == "sphere" && d.params[0] == 1) {
      d = SpaceDescriptor{"torus", {1}, {}};
    } else {
      return d;
    }
  }
}

void collect_leaves(const SpaceDescriptor& d,
                    std::vector<SpaceDescriptor>& out) {
  if (d.is_product()) {
    for (const auto& f : d.factors) collect_leaves(f, out);
    return;
  }
  SpaceDescriptor n = normalized_leaf(d);
  if (!n.contractible()) out.push_back(std::move(n));
}

}  // namespace

SpaceDescriptor SpaceDescriptor::parse(const std::string& text) {
  Cursor c;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) c.all.push_back(ch);
  if (c.all.empty()) throw DescriptorError("empty space descriptor");
  SpaceDescriptor d = parse_one(c);
  if (!c.done())
    bad(c.all, "trailing text '" + c.all.substr(c.pos) + "'");
  return d;
}

std::string SpaceDescriptor::text() const {
  if (is_product()) {
    std::string out = "product(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += ",";
      out += factors[i].text();
    }
    return out + ")";
  }
  std::string out = kind;
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i ? "," : ":") + std::to_string(params[i]);
  return out;
}

Presentation SpaceDescriptor::algebra() const {
  if (is_product()) {
    Presentation acc = factors[0].algebra();
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = preset_product(acc, factors[i].algebra());
    return acc;
  }
  if (kind == "point") return preset_point();
  if (kind == "sphere") return preset_sphere(params[0]);
  if (kind == "wedge_spheres")
    return preset_wedge_spheres(params[0], params[1]);
  if (kind == "surface") return preset_surface(params[0]);
  if (kind == "torus") return preset_torus(params[0]);
  if (kind == "projective_mod2") return preset_projective_mod2(params[0]);
  // SE(3) deformation retracts to its compact rotation factor, whose mod-2
  // cohomology is the truncated polynomial ring on a degree-1 class.
  if (kind == "se3") return preset_projective_mod2(3);
  if (kind == "graph")
    return params[0] == 0 ? preset_point()
                          : preset_wedge_spheres(params[0], 1);
  throw DescriptorError("descriptor kind '" + kind + "' has no algebra");
}

int SpaceDescriptor::dimension() const {
  if (is_product()) {
    int d = 0;
    for (const auto& f : factors) d += f.dimension();
    return d;
  }
  if (kind == "point") return 0;
  if (kind == "sphere" || kind == "wedge_spheres")
    return params[kind == "sphere" ? 0 : 1];
  if (kind == "surface") return 2;
  if (kind == "torus" || kind == "projective_mod2") return params[0];
  if (kind == "se3") return 3;  // compact model RP^3
  if (kind == "graph") return params[0] == 0 ? 0 : 1;
  throw DescriptorError("descriptor kind '" + kind + "' has no dimension");
}

int SpaceDescriptor::connectivity() const {
  if (is_product()) {
    int r = factors[0].connectivity();
    for (const auto& f : factors) r = std::min(r, f.connectivity());
    return r;
  }
  if (kind == "sphere") return params[0] - 1;
  if (kind == "wedge_spheres") return params[1] - 1;
  if (kind == "surface") return params[0] == 0 ? 1 : 0;
  return 0;
}

long SpaceDescriptor::betti1() const {
  if (is_product()) {
    long b = 0;
    for (const auto& f : factors) b += f.betti1();
    return b;
  }
  if (kind == "graph") return params[0];
  if (kind == "torus") return params[0];
  if (kind == "sphere") return params[0] == 1 ? 1 : 0;
  if (kind == "wedge_spheres") return params[1] == 1 ? params[0] : 0;
  if (kind == "surface") return 2L * params[0];
  return 0;  // point, se3, projective_mod2
}

bool SpaceDescriptor::contractible() const {
  if (is_product()) {
    for (const auto& f : factors)
      if (!f.contractible()) return false;
    return true;
  }
  return kind == "point" || (kind == "graph" && params[0] == 0);
}

std::vector<SpaceDescriptor> SpaceDescriptor::leaves() const {
  std::vector<SpaceDescriptor> out;
  collect_leaves(*this, out);
  return out;
}

int tc_lower_from_zdcl(int length) {
  if (length < 0) throw BracketError("zdcl length must be >= 0");
  return length + 1;
}

int tc_upper_dim(int d) {
  if (d < 0) throw BracketError("dimension must be >= 0");
  return 2 * d + 1;
}

int tc_upper_conn(int d, int r) {
  if (d < 0) throw BracketError("dimension must be >= 0");
  if (r < 0) throw BracketError("connectivity must be >= 0");
  // (2d+1)/(r+1) + 1 = (2d + r + 2) / (r + 1), exactly.
  mpq_class v(2 * d + r + 2, r + 1);
  v.canonicalize();
  if (v.get_den() == 1)
    return static_cast<int>(v.get_num().get_si()) - 1;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  return static_cast<int>(q.get_si());
}

int graph_tc(long b1) {
  if (b1 < 0) throw BracketError("first Betti number must be >= 0");
  if (b1 == 0) return 1;
  return b1 == 1 ? 2 : 3;
}

int product_upper(int tc_x, int tc_y) {
  if (tc_x < 1 || tc_y < 1)
    throw BracketError("product_upper needs TC values >= 1");
  return tc_x + tc_y - 1;
}

std::optional<KnownValue> known_value(const SpaceDescriptor& d) {
  const std::vector<SpaceDescriptor> ls = d.leaves();
  if (ls.empty())
    return KnownValue{
        1, "a contractible space admits a single always-defined rule, so "
           "TC = 1"};

  const auto all_are = [&](const std::string& kind,
                           std::optional<int> param) {
    for (const auto& l : ls) {
      if (l.kind != kind) return false;
      if (param && l.params[0] != *param) return false;
    }
    return true;
  };

  if (all_are("torus", std::nullopt)) {
    long n = 0;
    for (const auto& l : ls) n += l.params[0];
    return KnownValue{
        static_cast<int>(n) + 1,
        "the space is homotopy equivalent to the torus T^" +
            std::to_string(n) +
            ", a connected Lie group, and TC of a connected Lie group "
            "equals its category: cat(T^n) = n + 1"};
  }

  if (ls.size() == 1) {
    const SpaceDescriptor& l = ls[0];
    if (l.kind == "se3")
      return KnownValue{
          4, "SE(3) deformation retracts to the rotation group SO(3) = "
             "RP^3, a connected Lie group; TC of a connected Lie group "
             "equals its category, and cat(RP^3) = 4"};
    if (l.kind == "sphere") {
      const int m = l.params[0];
      if (m % 2 == 1)
        return KnownValue{
            2, "TC(S^m) = 2 for odd m: a nonvanishing tangent field routes "
               "antipodal pairs, so two rules suffice and one cannot"};
      return KnownValue{
          3, "TC(S^m) = 3 for even m: the zero-divisor cup-length is 2, "
             "and three rules suffice"};
    }
    if (l.kind == "wedge_spheres")  // n >= 2 after normalization
      return KnownValue{
          3, "a wedge of two or more spheres of a fixed dimension has "
             "TC = 3: the zero-divisor cup-length is 2 and the "
             "connectivity bound caps TC at 3"};
    if (l.kind == "surface" && l.params[0] == 3)
      return KnownValue{
          5, "the orientable surface of genus 3 has zero-divisor "
             "cup-length 4 and dimension 2, so TC = 5"};
    return std::nullopt;
  }

  const int k = static_cast<int>(ls.size());
  if (all_are("sphere", 2))
    return KnownValue{
        2 * k + 1,
        "TC((S^2)^k) = 2k + 1: the Kunneth zero-divisor cup-length is 2k "
        "and the product inequality caps TC at 2k + 1"};
  if (all_are("surface", 3))
    return KnownValue{
        4 * k + 1,
        "the k-fold power of the genus-3 surface has TC = 4k + 1: "
        "zero-divisor cup-length 4k with the product inequality cap "
        "4k + 1"};
  return std::nullopt;
}

namespace {

BoundReport assemble(const SpaceDescriptor* desc, const GradedAlgebra& alg,
                     std::optional<int> dim, std::optional<int> conn) {
  BoundReport r;
  r.space = desc ? desc->text() : alg.label();
  r.algebra_label = alg.label();
  r.dimension = dim;
  r.connectivity = conn;
  r.zdcl_result = zdcl(alg);

  r.lower_candidates.push_back(
      {tc_lower_from_zdcl(r.zdcl_result.length), "zdcl"});
  r.lower = r.lower_candidates.front();

  if (dim) {
    r.upper_candidates.push_back({tc_upper_dim(*dim), "dimension"});
    if (conn)
      r.upper_candidates.push_back({tc_upper_conn(*dim, *conn),
                                    "connectivity"});
  }
  if (desc && desc->is_product()) {
    bool all_exact = true;
    int composed = 0;
    bool first = true;
    for (const auto& f : desc->factors) {
      BoundReport fr = bracket(f);
      if (!fr.exact) {
        all_exact = false;
        break;
      }
      composed = first ? *fr.exact : product_upper(composed, *fr.exact);
      first = false;
    }
    if (all_exact)
      r.upper_candidates.push_back({composed, "product-composition"});
  }
  if (desc && desc->dimension() <= 1)
    r.upper_candidates.push_back({graph_tc(desc->betti1()),
                                  "graph-formula"});

  for (const TaggedBound& cand : r.upper_candidates)
    if (!r.upper || cand.value < r.upper->value) r.upper = cand;

  if (r.upper && r.lower->value > r.upper->value)
    throw BracketError(
        "bracket contradiction for " + r.space + ": lower bound " +
        std::to_string(r.lower->value) + " (" + r.lower->tag +
        ") exceeds upper bound " + std::to_string(r.upper->value) + " (" +
        r.upper->tag + ")");

  std::optional<KnownValue> kv =
      desc ? known_value(*desc) : std::nullopt;
  if (kv) {
    if (kv->value < r.lower->value ||
        (r.upper && kv->value > r.upper->value))
      throw BracketError("known value " + std::to_string(kv->value) +
                         " for " + r.space +
                         " falls outside the computed bracket [" +
                         std::to_string(r.lower->value) + ", " +
                         (r.upper ? std::to_string(r.upper->value) : "?") +
                         "]");
    r.exact = kv->value;
    r.exact_tag = "known-value";
    r.exact_claim = kv->claim;
  } else if (r.upper && r.lower->value == r.upper->value) {
    r.exact = r.lower->value;
    r.exact_tag = r.upper->tag;
  }
  return r;
}

}  // namespace

BoundReport bracket(const SpaceDescriptor& d, const BracketOptions& opt) {
  const GradedAlgebra alg = GradedAlgebra::validated(d.algebra());
  const int dim = opt.dim.value_or(d.dimension());
  const int conn = opt.conn.value_or(d.connectivity());
  return assemble(&d, alg, dim, conn);
}

BoundReport bracket(const GradedAlgebra& a, const BracketOptions& opt) {
  return assemble(nullptr, a, opt.dim, opt.conn);
}

}  // namespace tc
