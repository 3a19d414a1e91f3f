#pragma once

#include "tropk/stratum.hpp"
#include "tropk/subspace.hpp"
#include "tropk/trop.hpp"

namespace tropk {

// The weight-p piece attached to a fan: F_p is spanned by the p-fold wedges
// of the linear spans of the cones, inside wedge^p N_Q. The degree-p class
// group lives on the dual side, wedge^p M_Q modulo the classes that pair to
// zero with F_p.
struct FpSpaces {
  int rank = 0;
  int p = 0;
  QSubspace lower = QSubspace(0);   // F_p in wedge^p N_Q
  QSubspace kernel = QSubspace(0);  // vanishing classes in wedge^p M_Q

  int class_dim() const { return kernel.ambient() - kernel.dim(); }
  QVec reduce(QVec v) const { return kernel.reduce(std::move(v)); }
};

FpSpaces f_spaces(const Fan& lambda, int p);

// Cross-check that the pairing radical equals the joint wedge kernel of the
// projections onto the spans of the maximal cones (two independent
// computations of the same subspace).
bool flag_kernel_check(const Fan& lambda, int p);

// Functoriality: a monomial map whose image support equals the target fan
// pulls degree-p classes of the target back to the source, by the p-th wedge
// of the dual lattice map. SupportMismatch when the supports disagree.
QVec pullback(const MonomialMap& psi, const Fan& source, const Fan& target,
              int p, const QVec& cls);

// Residue along a codimension-one face pair tau < sigma of the fan: contract
// with the primitive generator u of the image of sigma in the tau-stratum,
// then rewrite in the sigma-stratum coordinates using the uniformizer m_pi
// (an element of the tau-stratum dual with <m_pi, u> = 1; the class does not
// depend on the choice). omega holds wedge^q coordinates over the tau-stratum
// basis; the result holds wedge^(q-1) coordinates over the sigma-stratum
// basis.
QVec residue_contract(const Fan& f, const Cone& tau, const Cone& sigma, int q,
                      const QVec& omega, const ZVec& m_pi);

// Some integral solution of <m, u> = 1 for a primitive u; the default
// uniformizer for residue_contract.
ZVec dual_unit(const ZVec& u);

// Restriction of degree-p classes to the monomial subfield of a finite-index
// sublattice (rows = basis in ambient coordinates): a plain coordinate
// change, since the sublattice spans the same rational vector space.
QVec k_restriction(const ZMat& sublattice, int p, const QVec& cls);

// Transfer in the opposite direction: the index [M : M'] times the
// coordinate change back. transfer(restriction(x)) = [M : M'] x.
// InfiniteIndex when the rows do not span a finite-index sublattice.
QVec monomial_transfer(const ZMat& sublattice, int p, const QVec& cls);

}  // namespace tropk
