#pragma once

#include "tropk/kgroups.hpp"

namespace tropk {

// Weight-p complex of a fan: the degree-i term is one block
// wedge^(p-i)(M cap sigma^perp)_Q per cone sigma of dimension i, and the
// differential is the residue contraction along each codimension-one face
// pair. The contraction blocks carry no orientation signs; the two paths
// through a two-step face pair then agree on the nose and already compose
// to zero, because opposite wedge orientations cancel against the lattice
// index factors.
struct ToricGerstenComplex {
  int rank = 0;
  int p = 0;
  std::vector<std::vector<int>> cone_indices;  // fan indices per degree
  std::vector<int> term_dims;                  // degrees 0..p
  std::vector<QMat> differentials;             // d^i, degrees 0..p-1
};

ToricGerstenComplex build_complex(const Fan& f, int p);

// Betti numbers of the complex; verifies d(d(x)) = 0 first and throws
// DifferentialNotSquareZero otherwise.
std::vector<int> cohomology_dims(const ToricGerstenComplex& c);

// Rational Chow group dimension of the complete toric variety of the fan in
// codimension p, computed by an independent route: ray count minus rank for
// p = 1, degree one for p = rank, and the orbit-relation presentation in
// between. NotComplete when the fan is not complete.
int chow_oracle(const Fan& f, int p);

struct GerstenComparison {
  std::vector<int> h;
  int top_cokernel = 0;  // h at degree p, the cokernel of the last map
  int oracle = 0;
  bool match = false;
};

// Top cohomology of the weight-p complex against the Chow oracle; with
// strict set, a disagreement raises Mismatch instead of reporting false.
GerstenComparison compare_with_oracle(const Fan& f, int p, bool strict = false);

}  // namespace tropk
