#pragma once

// Finite categories, finite-set-valued functors and natural transformations.

#include "eqcell/common.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eqcell {

struct MorphismDecl {
  std::string name;
  std::string dom;
  std::string cod;
};

/// One entry of the composition table: `second ∘ first` where
/// first: a -> b and second: b -> c.
struct CompositionDecl {
  std::string first;
  std::string second;
  std::string result;
};

/// Unresolved, name-based description of a finite category. Identities
/// named `id_<object>` are inserted when omitted, together with their
/// composition entries.
struct CategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<CompositionDecl> composition;
};

/// Checks names, closure, totality, identity laws and associativity.
/// Reports the first violation.
ValidationReport validate_category(const CategorySpec& spec);

class FinCategory {
 public:
  /// Throws ValidationError when validate_category fails.
  static std::shared_ptr<const FinCategory> from_spec(const CategorySpec& spec);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(int obj) const { return objects_.at(obj); }
  const std::string& morphism_name(int m) const { return morphisms_.at(m).name; }
  int dom(int m) const { return morphisms_.at(m).dom; }
  int cod(int m) const { return morphisms_.at(m).cod; }
  int identity(int obj) const { return identities_.at(obj); }
  bool is_identity(int m) const { return identities_.at(dom(m)) == m; }

  /// `second ∘ first`; requires cod(first) == dom(second).
  int compose(int second, int first) const;

  std::optional<int> find_object(std::string_view name) const;
  std::optional<int> find_morphism(std::string_view name) const;

  /// Morphisms a -> b in declaration order.
  std::vector<int> hom(int a, int b) const;

  /// Spec including the inserted identities and the full table.
  CategorySpec to_spec() const;

 private:
  struct Arrow {
    std::string name;
    int dom;
    int cod;
  };

  FinCategory() = default;

  std::vector<std::string> objects_;
  std::vector<Arrow> morphisms_;
  std::vector<int> identities_;
  std::vector<int> table_;  // table_[second * n + first], -1 if not composable
};

/// Element-name based description of a functor into finite sets. Actions of
/// identity morphisms may be omitted.
struct FunctorSpec {
  std::map<std::string, std::vector<std::string>> sets;
  std::map<std::string, std::map<std::string, std::string>> action;
};

class FinFunctor {
 public:
  /// Unchecked constructor; see validate_functor.
  FinFunctor(std::shared_ptr<const FinCategory> base,
             std::vector<std::vector<std::string>> sets,
             std::vector<std::vector<int>> action);

  /// Resolves names and validates functoriality; throws ValidationError.
  static std::shared_ptr<const FinFunctor> from_spec(
      std::shared_ptr<const FinCategory> base, const FunctorSpec& spec);

  const FinCategory& base() const { return *base_; }
  const std::shared_ptr<const FinCategory>& base_ptr() const { return base_; }

  std::size_t size(int obj) const { return sets_.at(obj).size(); }
  std::span<const std::string> elements(int obj) const { return sets_.at(obj); }
  std::optional<int> find_element(int obj, std::string_view name) const;

  /// Image of element `x` of F(dom m) under F(m).
  int act(int m, int x) const { return action_[m][x]; }
  std::span<const int> action(int m) const { return action_.at(m); }

  bool empty() const;
  FunctorSpec to_spec() const;

 private:
  std::shared_ptr<const FinCategory> base_;
  std::vector<std::vector<std::string>> sets_;
  std::vector<std::vector<int>> action_;
};

ValidationReport validate_functor(const FinFunctor& f);

/// A family of functions F(d) -> G(d), one per object.
struct NatTrans {
  std::shared_ptr<const FinFunctor> source;
  std::shared_ptr<const FinFunctor> target;
  std::vector<std::vector<int>> components;

  bool operator==(const NatTrans& other) const {
    return source == other.source && target == other.target &&
           components == other.components;
  }
};

/// True iff every component is total, in range, and every naturality square
/// commutes.
bool is_natural(const NatTrans& t);

NatTrans identity_nat(const std::shared_ptr<const FinFunctor>& f);

/// Quotient of the disjoint union of all F(d) by x ~ F(m)(x).
struct Colimit {
  std::size_t class_count = 0;
  /// projection[d][x] is the class of element x of F(d). Classes are
  /// numbered by first appearance in object order, then element order.
  std::vector<std::vector<int>> projection;
};

Colimit colimit(const FinFunctor& f);

/// All natural transformations F -> G in lexicographic order of their
/// components (object order, then element order). Throws ValidationError
/// when the bases differ.
std::vector<NatTrans> enumerate_nat_trans(
    const std::shared_ptr<const FinFunctor>& f,
    const std::shared_ptr<const FinFunctor>& g);

/// Objectwise `f ∘ g`; throws ValidationError unless g.target == f.source.
NatTrans compose_nat(const NatTrans& f, const NatTrans& g);

bool is_iso(const NatTrans& f);

}  // namespace eqcell
