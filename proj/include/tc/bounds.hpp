#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tc/algebra.hpp"
#include "tc/zero_divisors.hpp"

namespace tc {

// Counting convention used by every bound and report in this project: TC is
// the minimal number of covering sets, so a contractible space has TC = 1.
inline constexpr const char* kConvention =
    "TC counts covering sets; TC(point)=1";

class DescriptorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Space descriptor grammar (whitespace is ignored):
//
//   atom     := point | sphere:<m> | wedge_spheres:<n>,<m> | surface:<g>
//             | torus:<n> | projective_mod2:<n> | se3 | graph:<b1>
//   aliases  := wedge -> wedge_spheres, pm2 -> projective_mod2,
//               circle -> torus:1
//   product  := product(<desc>, <desc> [, <desc> ...])
//   power    := power(<desc>, <k>)     expands to a flat k-fold product
//
// Parameter ranges: sphere m >= 1; wedge_spheres n >= 1, m >= 1;
// surface 0 <= g <= 13; torus 1 <= n <= 11; projective_mod2 n >= 1;
// graph b1 >= 0; power k >= 1.
struct SpaceDescriptor {
  std::string kind;                      // atom name, or "product"
  std::vector<int> params;               // atom parameters
  std::vector<SpaceDescriptor> factors;  // product factors (>= 2)

  static SpaceDescriptor parse(const std::string& text);

  bool is_product() const { return kind == "product"; }
  std::string text() const;  // canonical descriptor string

  // Cohomology presentation of the space (se3 uses the ring of its compact
  // deformation retract; graph:b1 uses a wedge of b1 circles).
  Presentation algebra() const;

  int dimension() const;     // dimension of a CW model of the homotopy type
  int connectivity() const;  // the space is r-connected for this r
  long betti1() const;       // first Betti number
  bool contractible() const;

  // Flattened factor list with contractible leaves dropped and homotopy
  // equivalences normalized (single-sphere wedges to spheres, 1-spheres and
  // genus <= 1 surfaces to tori/spheres).  Empty means contractible.
  std::vector<SpaceDescriptor> leaves() const;
};

// TC > zdcl, so a length-L nonzero product certifies TC >= L + 1.
int tc_lower_from_zdcl(int length);
// TC(X) <= 2 dim(X) + 1.
int tc_upper_dim(int d);
// For an r-connected d-dimensional CW space, TC(X) < (2d+1)/(r+1) + 1;
// returns the largest integer strictly below that rational value.
int tc_upper_conn(int d, int r);
// Exact TC of a connected graph from its first Betti number.
int graph_tc(long b1);
// TC(X x Y) <= TC(X) + TC(Y) - 1.
int product_upper(int tc_x, int tc_y);

struct KnownValue {
  int value = 0;
  std::string claim;  // self-contained mathematical justification
};

// Exact-TC table for the supported homotopy types; absent when the space has
// no table entry.
std::optional<KnownValue> known_value(const SpaceDescriptor& d);

struct TaggedBound {
  int value = 0;
  std::string tag;  // zdcl | dimension | connectivity | product-composition |
                    // graph-formula | known-value
};

struct BoundReport {
  std::string space;          // descriptor text, or algebra label
  std::string algebra_label;
  std::optional<int> dimension;
  std::optional<int> connectivity;

  std::optional<TaggedBound> lower;  // best (largest) lower bound
  std::optional<TaggedBound> upper;  // best (smallest) upper bound; on a tie
                                     // the earliest candidate wins
  std::vector<TaggedBound> lower_candidates;
  std::vector<TaggedBound> upper_candidates;  // in rule order: dimension,
                                              // connectivity,
                                              // product-composition,
                                              // graph-formula

  std::optional<int> exact;  // known value, or coinciding bounds
  std::string exact_tag;
  std::string exact_claim;   // justification when a table row fired

  ZdclResult zdcl_result;
  std::string convention = kConvention;
};

struct BracketOptions {
  std::optional<int> dim;   // override the descriptor's dimension
  std::optional<int> conn;  // override the descriptor's connectivity
};

// Two-sided TC bracket for a preset space: exact zdcl lower bound plus the
// applicable upper-bound rules and the known-value table.  Throws
// BracketError when a known value falls outside [lower, upper] or the
// bounds cross — that signals an inconsistent descriptor/algebra pairing.
BoundReport bracket(const SpaceDescriptor& d, const BracketOptions& = {});

// Bracket for a user-supplied cohomology algebra.  Upper bounds require the
// caller to state dimension (and connectivity) via options; without them only
// the zdcl lower bound is reported.
BoundReport bracket(const GradedAlgebra& a, const BracketOptions& = {});

}  // namespace tc
