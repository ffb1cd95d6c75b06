#pragma once

// Orbits, free orbits, and the finite orbit category O' they span.

#include "eqcell/fincat.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eqcell {

/// A functor into finite sets whose colimit is a single point.
struct Orbit {
  std::string name;
  std::shared_ptr<const FinFunctor> functor;
};

ValidationReport validate_orbit(const Orbit& orbit);

/// The representable functor hom(d, -), acting by post-composition.
/// Default name is "F_<d>". Throws ValidationError for unknown objects.
Orbit free_orbit(const std::shared_ptr<const FinCategory>& cat, std::string_view object,
                 std::string name = {});

/// Global index of a morphism of O'.
using MorId = int;

/// Integer vector in U(D), one coordinate per isomorphism class of orbits.
class UDVector {
 public:
  UDVector() = default;
  explicit UDVector(std::size_t classes) : entries_(classes, 0) {}
  explicit UDVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_.at(i); }
  Integer& operator[](std::size_t i) { return entries_.at(i); }
  const std::vector<Integer>& entries() const { return entries_; }
  bool is_zero() const;

  UDVector& operator+=(const UDVector& o);
  UDVector& operator-=(const UDVector& o);
  UDVector& operator*=(const Integer& k);
  friend UDVector operator+(UDVector a, const UDVector& b) { return a += b; }
  friend UDVector operator-(UDVector a, const UDVector& b) { return a -= b; }
  friend UDVector operator*(const Integer& k, UDVector a) { return a *= k; }
  bool operator==(const UDVector&) const = default;

 private:
  std::vector<Integer> entries_;
};

/// Full subcategory of the functor category spanned by a finite list of
/// orbits. Every hom-set is enumerated up front; morphisms carry global ids
/// laid out block by block, hom(s, t) occupying a contiguous range.
///
/// Orbits have discrete values, so hO' = O' and hom-sets are never
/// quotiented.
class OrbitCategory {
 public:
  /// Throws ValidationError on invalid orbits, foreign base categories or
  /// duplicate names.
  static std::shared_ptr<const OrbitCategory> build(std::shared_ptr<const FinCategory> base,
                                                    std::vector<Orbit> orbits);

  const FinCategory& base() const { return *base_; }
  const std::shared_ptr<const FinCategory>& base_ptr() const { return base_; }

  std::size_t orbit_count() const { return orbits_.size(); }
  const Orbit& orbit(int t) const { return orbits_.at(t); }
  const std::string& orbit_name(int t) const { return orbits_.at(t).name; }
  std::optional<int> find_orbit(std::string_view name) const;

  std::size_t morphism_count() const { return dom_.size(); }
  int dom(MorId m) const { return dom_.at(m); }
  int cod(MorId m) const { return cod_.at(m); }
  const NatTrans& transformation(MorId m) const { return transformations_.at(m); }

  struct Range {
    MorId first;
    MorId last;  // one past the end
    std::size_t size() const { return static_cast<std::size_t>(last - first); }
  };
  Range hom(int s, int t) const;
  /// All morphisms with codomain t, ordered by domain orbit.
  std::vector<MorId> morphisms_into(int t) const;

  MorId identity(int t) const { return identities_.at(t); }
  bool is_endomorphism(MorId m) const { return dom(m) == cod(m); }

  /// f ∘ g; requires cod(g) == dom(f).
  MorId compose(MorId f, MorId g) const;
  std::optional<MorId> find(int s, int t, const std::vector<std::vector<int>>& components) const;

  /// "id_T" for identities, "S->T#k" otherwise (k the enumeration index).
  std::string morphism_name(MorId m) const;
  std::optional<MorId> find_morphism(std::string_view name) const;

  // Isomorphism classes. Classes are ordered by the position of their
  // representative in the orbit list; the representative is the
  // lexicographically first name in the class.
  std::size_t class_count() const { return representatives_.size(); }
  int class_of(int t) const { return class_of_.at(t); }
  int representative(int cls) const { return representatives_.at(cls); }
  std::vector<std::string> class_labels() const;

  UDVector zero_vector() const { return UDVector(class_count()); }

 private:
  OrbitCategory() = default;

  std::shared_ptr<const FinCategory> base_;
  std::vector<Orbit> orbits_;
  std::vector<MorId> hom_offset_;  // (s * n + t) -> first id; extra final sentinel
  std::vector<int> dom_;
  std::vector<int> cod_;
  std::vector<NatTrans> transformations_;
  std::vector<MorId> identities_;
  std::vector<std::map<std::vector<std::vector<int>>, MorId>> lookup_;  // per (s, t)
  std::vector<MorId> composition_;  // dense (f * N + g), -1 when not composable
  std::vector<int> class_of_;
  std::vector<int> representatives_;
};

/// Standard basis vector of the orbit's isomorphism class.
/// Throws ValidationError for unknown names.
UDVector euler_unit(const OrbitCategory& oc, std::string_view orbit_name);

/// "T2: 2, T3: -1".
std::string format_ud(const OrbitCategory& oc, const UDVector& v);

}  // namespace eqcell
