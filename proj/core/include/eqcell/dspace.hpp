#pragma once

// Triangulated diagrams as labeled simplicial complexes: every simplex of
// the colimit carries an orbit, and every facet inclusion a natural map
// between the orbits.

#include "eqcell/orbits.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace eqcell {

struct Simplex {
  std::string id;
  /// Indices into the vertex list, strictly increasing.
  std::vector<int> vertices;
  int orbit = -1;
  /// restrictions[i]: T_σ -> T_τ for the facet τ dropping vertex i.
  /// Empty for vertices.
  std::vector<MorId> restrictions;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

struct SimplexRef {
  int dim = -1;
  int index = -1;
  auto operator<=>(const SimplexRef&) const = default;
};

class LabeledComplex {
 public:
  /// Groups simplices by dimension (keeping the given order within each
  /// dimension) and indexes them. Structural checks are left to
  /// validate_space; only out-of-range vertex indices throw.
  LabeledComplex(std::shared_ptr<const OrbitCategory> oc, std::vector<std::string> vertices,
                 std::vector<Simplex> simplices);

  const OrbitCategory& orbits() const { return *oc_; }
  const std::shared_ptr<const OrbitCategory>& orbits_ptr() const { return oc_; }

  std::span<const std::string> vertices() const { return vertices_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::span<const Simplex> simplices(int dim) const;
  std::size_t simplex_count() const;
  const Simplex& simplex(SimplexRef s) const { return by_dim_.at(s.dim).at(s.index); }

  std::optional<SimplexRef> find(const std::vector<int>& sorted_vertices) const;
  std::optional<SimplexRef> find_id(std::string_view id) const;
  std::optional<int> find_vertex(std::string_view name) const;

  /// Facet of s obtained by dropping vertex position i.
  std::optional<SimplexRef> facet(SimplexRef s, int i) const;

  /// Composite restriction T_σ -> T_ρ for a face ρ ⊆ σ, dropping vertices
  /// one at a time from the highest position. Identity when ρ == σ.
  MorId face_restriction(SimplexRef sigma, SimplexRef rho) const;

 private:
  std::shared_ptr<const OrbitCategory> oc_;
  std::vector<std::string> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::map<std::vector<int>, SimplexRef> by_vertices_;
  std::map<std::string, SimplexRef, std::less<>> by_id_;
};

/// Ordering, closure, restriction typing, and commutation of the two facet
/// chains to every codimension-2 face.
ValidationReport validate_space(const LabeledComplex& x);

/// Σ (-1)^dim · [T_σ].
UDVector euler_class(const LabeledComplex& x);

/// Barycentric subdivision. The vertex of the new complex for a simplex σ
/// is named by σ's id; a chain σ0 ⊂ ... ⊂ σk has id "σ0<...<σk" and label
/// T_{σk}. Dropping σi is the identity for i < k and the restriction
/// σk -> σ(k-1) for i = k.
LabeledComplex subdivide(const LabeledComplex& x);

/// Δ-complex without orbit data: cells per dimension with face indices.
struct DeltaComplex {
  std::vector<std::vector<std::string>> cells;
  /// faces[n][c][i]: index in dimension n-1 of the i-th face of cell c.
  std::vector<std::vector<std::vector<int>>> faces;

  std::vector<std::size_t> counts() const;
};

/// Cells (σ, t) with t ∈ T_σ(d); throws ValidationError for unknown objects.
DeltaComplex total_space(const LabeledComplex& x, std::string_view object);

/// Cells (σ, g) with g ∈ hom(T, T_σ); faces by post-composition.
DeltaComplex orbit_point(const LabeledComplex& x, int orbit);
/// Same construction for an orbit outside O' (hom-sets enumerated on the fly).
DeltaComplex orbit_point(const LabeledComplex& x, const Orbit& orbit);

/// A simplicial self-map with a natural map over every simplex.
struct EquivariantSelfMap {
  std::shared_ptr<const LabeledComplex> space;
  std::vector<int> vertex_map;
  /// components[dim][index]: T_σ -> T_{carrier(σ)}.
  std::vector<std::vector<MorId>> components;
};

/// Simplex spanned by the image vertex set; nullopt when it is not a simplex.
std::optional<SimplexRef> carrier(const EquivariantSelfMap& f, SimplexRef s);

/// Sign of the permutation sorting the image vertices, 0 when the image
/// is degenerate.
int orientation_sign(const EquivariantSelfMap& f, SimplexRef s);

ValidationReport validate_map(const EquivariantSelfMap& f);

EquivariantSelfMap identity_map(const std::shared_ptr<const LabeledComplex>& x);

/// The induced map on the barycentric subdivision: σ ↦ carrier(σ) on
/// vertices, component over a chain taken from its top simplex.
EquivariantSelfMap subdivide_map(const EquivariantSelfMap& f,
                                 const std::shared_ptr<const LabeledComplex>& subdivided);

}  // namespace eqcell
