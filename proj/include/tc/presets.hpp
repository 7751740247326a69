#pragma once

#include "tc/algebra.hpp"

namespace tc {

// Standard cohomology presentations over an exact field (rationals unless
// stated otherwise).  The first basis entry of every preset is the unit "1".
//
//   point                 one-dimensional algebra k
//   sphere(m)             k[u]/(u^2), |u| = m >= 1
//   wedge_spheres(n, m)   n generators u1..un in degree m, all products zero
//   surface(g)            orientable genus-g surface: 2g degree-1 generators
//                         in handle pairs (a,b), (c,d), ...; each handle pair
//                         multiplies to the degree-2 class A, every other
//                         positive-degree product is zero.  g = 0 gives {1, A}.
//   torus(n)              exterior algebra on degree-1 generators e1..en;
//                         basis indexed by subsets, ordered by (size, lex)
//   projective_mod2(n)    F2[a]/(a^{n+1}), |a| = 1, over the two-element field
//
// Products of presets are formed with tensor_algebra on the validated factors.
Presentation preset_point(const Field& field = Field::rationals());
Presentation preset_sphere(int m, const Field& field = Field::rationals());
Presentation preset_wedge_spheres(int n, int m,
                                  const Field& field = Field::rationals());
Presentation preset_surface(int g, const Field& field = Field::rationals());
Presentation preset_torus(int n, const Field& field = Field::rationals());
Presentation preset_projective_mod2(int n);

// Presentation of the tensor product of two presets (Kuenneth algebra).
Presentation preset_product(const Presentation& a, const Presentation& b);

}  // namespace tc
