#pragma once

// The isotropy ring I: free abelian group on mor(O') with product
// f·g = f∘g when composable and 0 otherwise.

#include "eqcell/orbits.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace eqcell {

/// Finite integer combination of morphisms of O'. Zero terms are never
/// stored, so equality is structural.
class IsotropyElement {
 public:
  IsotropyElement() = default;
  static IsotropyElement generator(MorId m, Integer coeff = 1);

  const std::map<MorId, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(MorId m) const;

  void add_term(MorId m, const Integer& coeff);

  IsotropyElement& operator+=(const IsotropyElement& o);
  IsotropyElement& operator-=(const IsotropyElement& o);
  IsotropyElement& operator*=(const Integer& k);
  IsotropyElement operator-() const;
  friend IsotropyElement operator+(IsotropyElement a, const IsotropyElement& b) { return a += b; }
  friend IsotropyElement operator-(IsotropyElement a, const IsotropyElement& b) { return a -= b; }
  friend IsotropyElement operator*(const Integer& k, IsotropyElement a) { return a *= k; }
  bool operator==(const IsotropyElement&) const = default;

 private:
  std::map<MorId, Integer> terms_;
};

/// Class in Ab(I) = I / [I, I], held as its canonical representative:
/// the element reduced against the echelon basis of the commutator span.
struct AbIClass {
  IsotropyElement representative;
  bool operator==(const AbIClass&) const = default;
  bool is_zero() const { return representative.is_zero(); }
};

struct CellLabel {
  std::string cell;
  int orbit;
  bool operator==(const CellLabel&) const = default;
};

/// Sparse matrix with entries in I. An entry at (row labelled T, column
/// labelled S) must be supported on morphisms S -> T.
struct MatrixOverI {
  std::vector<CellLabel> rows;
  std::vector<CellLabel> cols;
  std::map<std::pair<int, int>, IsotropyElement> entries;

  void add(int row, int col, const IsotropyElement& value);
  const IsotropyElement* at(int row, int col) const;
  bool is_zero() const { return entries.empty(); }
};

class IsotropyRing {
 public:
  explicit IsotropyRing(std::shared_ptr<const OrbitCategory> oc);

  const OrbitCategory& orbits() const { return *oc_; }
  const std::shared_ptr<const OrbitCategory>& orbits_ptr() const { return oc_; }

  IsotropyElement multiply(const IsotropyElement& a, const IsotropyElement& b) const;
  /// Sum of the orthogonal idempotents 1_T.
  IsotropyElement unit() const;
  IsotropyElement idempotent(int t) const;

  /// Per isomorphism class, the sum of coefficients of endomorphisms of
  /// orbits in that class. Cross terms contribute nothing.
  UDVector augmentation(const IsotropyElement& a) const;

  /// Z-basis of 1_T I: every morphism with codomain T, by domain orbit.
  std::vector<MorId> zeta_component(int t) const { return oc_->morphisms_into(t); }

  // Ab(I).
  AbIClass reduce(const IsotropyElement& a) const;
  AbIClass add(const AbIClass& a, const AbIClass& b) const;
  AbIClass scale(const Integer& k, const AbIClass& a) const;
  /// Morphisms whose classes form a basis of the free part of Ab(I).
  const std::vector<MorId>& ab_basis() const { return free_generators_; }
  /// Pivots of the commutator lattice with |pivot| > 1 (empty in every
  /// case the relations produce, which are of the form f or f - g).
  const std::vector<std::pair<MorId, Integer>>& ab_torsion() const { return torsion_; }
  /// Ab(φ). Each basis class of Ab(I) is sent to the isomorphism class of
  /// the smallest orbit (by total element count, then list position) that
  /// carries an endomorphism in it. Coincides with φ on any representative
  /// when no class mixes endomorphisms of non-isomorphic orbits.
  UDVector ab_augmentation(const AbIClass& c) const;
  /// Isomorphism class assigned to a basis generator by ab_augmentation.
  int ab_generator_class(MorId generator) const { return generator_class_.at(generator); }

  /// Σ multiplicity · [1_T].
  AbIClass hs_rank(const std::vector<std::pair<int, Integer>>& module) const;
  /// Class of the diagonal sum; throws ValidationError unless square.
  AbIClass hs_trace(const MatrixOverI& m) const;

  MatrixOverI multiply(const MatrixOverI& a, const MatrixOverI& b) const;
  /// Entries respect the orbit labels of their row and column.
  bool supported(const MatrixOverI& m) const;

  /// "3·S->T#1 + 1·id_T" with terms in id order.
  std::string format(const IsotropyElement& a) const;

 private:
  struct EchelonRow {
    MorId pivot;
    std::map<MorId, Integer> entries;
  };
  void insert_relation(std::map<MorId, Integer> v);
  void reduce_in_place(std::map<MorId, Integer>& v) const;

  std::shared_ptr<const OrbitCategory> oc_;
  // Echelon rows keyed by pivot. A row's pivot is its largest morphism id,
  // so the surviving basis favours low ids.
  std::map<MorId, EchelonRow, std::greater<>> rows_;
  std::vector<MorId> free_generators_;
  std::vector<std::pair<MorId, Integer>> torsion_;
  std::map<MorId, int> generator_class_;
};

}  // namespace eqcell
