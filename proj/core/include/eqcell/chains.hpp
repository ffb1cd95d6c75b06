#pragma once

// Equivariant cellular chains with coefficients in a functor on O'.

#include "eqcell/dspace.hpp"
#include "eqcell/isotropy.hpp"
#include "eqcell/smith.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace eqcell {

/// Functor from O' to finitely generated free abelian groups.
class CoefficientSystem {
 public:
  enum class Kind { Constant, Isotropy, Custom };

  /// Z at every orbit, identity at every morphism.
  static CoefficientSystem constant(std::shared_ptr<const OrbitCategory> oc);
  /// ζI: T ↦ 1_T I with its morphism basis, f ↦ left multiplication by f.
  static CoefficientSystem isotropy(std::shared_ptr<const IsotropyRing> ring);
  /// maps[m] is rank(cod m) x rank(dom m). Throws ValidationError when not
  /// functorial.
  static CoefficientSystem custom(std::shared_ptr<const OrbitCategory> oc, std::vector<std::size_t> ranks,
                                  std::vector<SparseMatrix> maps);

  Kind kind() const { return kind_; }
  const OrbitCategory& orbits() const { return *oc_; }
  std::size_t rank(int t) const { return ranks_.at(t); }
  const SparseMatrix& map(MorId m) const { return maps_.at(m); }

  /// Only for Kind::Isotropy.
  const IsotropyRing& ring() const;
  const std::shared_ptr<const IsotropyRing>& ring_ptr() const { return ring_; }
  /// Basis of 1_T I (Kind::Isotropy).
  const std::vector<MorId>& basis(int t) const { return bases_.at(t); }

 private:
  CoefficientSystem() = default;
  void check_functorial() const;

  Kind kind_ = Kind::Custom;
  std::shared_ptr<const OrbitCategory> oc_;
  std::shared_ptr<const IsotropyRing> ring_;
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> maps_;
  std::vector<std::vector<MorId>> bases_;
};

struct ChainGenerator {
  int simplex;  // index within its dimension
  int basis;    // basis element of M(T_σ)
};

struct ChainComplex {
  std::shared_ptr<const LabeledComplex> space;
  std::shared_ptr<const CoefficientSystem> coefficients;
  std::vector<std::vector<ChainGenerator>> generators;
  /// block_offset[n][i]: first generator of simplex i in degree n.
  std::vector<std::vector<std::size_t>> block_offset;
  /// boundary[n]: C_n -> C_{n-1}; boundary[0] has zero rows.
  std::vector<SparseMatrix> boundary;
  /// ζI only: I-level boundary with entries Σ ±r_{σ,i}.
  std::vector<MatrixOverI> boundary_over_i;

  int top_degree() const { return static_cast<int>(generators.size()) - 1; }
  std::size_t rank(int n) const;
};

/// Throws ValidationError when a label lies outside the coefficient
/// system's O'. Verifies ∂∂ = 0 at both levels (InternalError otherwise).
ChainComplex build_chain_complex(std::shared_ptr<const LabeledComplex> x,
                                 std::shared_ptr<const CoefficientSystem> m);

/// Both the Z-level and, when present, the I-level products vanish.
bool boundary_squares_vanish(const ChainComplex& c);

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<Integer> torsion;
  /// ζI only: Betti number of the summand spanned by basis morphisms with
  /// domain S, one entry per orbit S of O'.
  std::vector<std::size_t> betti_by_domain;
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;
  bool graded_by_domain = false;
};

/// Betti numbers and torsion from boundary matrices of a free complex.
/// boundaries[n]: C_n -> C_{n-1} for n >= 1; ranks[n] = dim C_n.
std::vector<DegreeHomology> homology_from_boundaries(const std::vector<std::size_t>& ranks,
                                                     const std::vector<SparseMatrix>& boundaries);

HomologyResult homology(const ChainComplex& c);

/// Simplicial chain boundaries of a Δ-complex with alternating signs.
std::vector<SparseMatrix> delta_boundaries(const DeltaComplex& d);
std::vector<DegreeHomology> delta_homology(const DeltaComplex& d);

/// Ab(φ)(Σ (-1)^n rk_HS(C_n)); throws ValidationError unless ζI.
UDVector chain_chi_hs(const ChainComplex& c);

struct ChainMap {
  std::vector<SparseMatrix> degree;        // Z-level
  std::vector<MatrixOverI> degree_over_i;  // ζI only
};

/// Block (carrier(σ), σ) = sign · M(u_σ), zero on degenerate simplices.
/// Checks ∂∘C(f) = C(f)∘∂ (InternalError otherwise).
ChainMap induced_chain_map(const EquivariantSelfMap& f, const ChainComplex& c);

}  // namespace eqcell
