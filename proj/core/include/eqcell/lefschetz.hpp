#pragma once

// Equivariant Lefschetz numbers evaluated on chains.

#include "eqcell/chains.hpp"

#include <memory>
#include <string>
#include <vector>

namespace eqcell {

struct LefschetzReport {
  UDVector lambda;
  /// Per isomorphism class m: ids of the simplices σ with f(σ) = σ setwise
  /// whose invariant orbit has type m. The type of σ is the class that
  /// Ab(φ) assigns to the endomorphism u_σ; it is the class of T_σ whenever
  /// u_σ is an automorphism.
  std::vector<std::vector<std::string>> invariant_simplices;
  /// Per class: no invariant simplex has type m, so every orbit over a
  /// simplex of type m meets its image in no open cell.
  std::vector<bool> disjoint_image;
  /// Per class: disjoint_image holds and, in addition, every simplex
  /// labelled with an orbit of the class is vertex-disjoint from its image.
  std::vector<bool> closed_disjoint;
};

/// Type of an invariant simplex (carrier(σ) == σ), as a class index.
int invariant_type(const EquivariantSelfMap& f, SimplexRef s, const IsotropyRing& ring);

/// Ab(φ)(Σ (-1)^k tr_HS(C_k(f; I))).
UDVector lefschetz_number(const EquivariantSelfMap& f, const std::shared_ptr<const IsotropyRing>& ring);

/// Λ_D(f) plus the invariant-simplex listing and certificates.
LefschetzReport invariant_orbit_report(const EquivariantSelfMap& f,
                                       const std::shared_ptr<const IsotropyRing>& ring);

/// Classical Lefschetz number of the map induced on the colimit.
Integer ordinary_lefschetz(const EquivariantSelfMap& f);

struct TheoremCheck {
  bool passed = true;
  /// Classes with a disjoint-image certificate but λ != 0.
  std::vector<int> violations;
  LefschetzReport report;
};

/// For every certified class asserts λ = 0.
TheoremCheck theorem_check(const EquivariantSelfMap& f, const std::shared_ptr<const IsotropyRing>& ring);

}  // namespace eqcell
