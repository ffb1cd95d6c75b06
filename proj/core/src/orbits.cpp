#include "eqcell/orbits.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace eqcell {

ValidationReport validate_orbit(const Orbit& orbit) {
  if (!orbit.functor) return ValidationReport::failure("orbit '" + orbit.name + "' has no functor");
  if (auto r = validate_functor(*orbit.functor); !r) {
    return ValidationReport::failure("orbit '" + orbit.name + "': " + r.message);
  }
  const Colimit c = colimit(*orbit.functor);
  if (c.class_count == 0) {
    return ValidationReport::failure("orbit '" + orbit.name + "': colimit is empty");
  }
  if (c.class_count > 1) {
    const FinFunctor& f = *orbit.functor;
    std::ostringstream msg;
    msg << "orbit '" << orbit.name << "': colimit has " << c.class_count << " classes:";
    for (std::size_t k = 0; k < c.class_count; ++k) {
      msg << (k ? " |" : "");
      for (std::size_t d = 0; d < c.projection.size(); ++d) {
        for (std::size_t x = 0; x < c.projection[d].size(); ++x) {
          if (c.projection[d][x] == static_cast<int>(k)) {
            msg << ' ' << f.base().object_name(static_cast<int>(d)) << ':'
                << f.elements(static_cast<int>(d))[x];
          }
        }
      }
    }
    return ValidationReport::failure(msg.str());
  }
  return ValidationReport::success();
}

Orbit free_orbit(const std::shared_ptr<const FinCategory>& cat, std::string_view object,
                 std::string name) {
  auto d = cat->find_object(object);
  if (!d) throw ValidationError("free orbit: unknown object '" + std::string(object) + "'");
  if (name.empty()) name = "F_" + std::string(object);

  const std::size_t n = cat->object_count();
  std::vector<std::vector<int>> homs(n);
  std::vector<std::vector<std::string>> sets(n);
  for (std::size_t e = 0; e < n; ++e) {
    homs[e] = cat->hom(*d, static_cast<int>(e));
    for (int m : homs[e]) sets[e].push_back(cat->morphism_name(m));
  }
  std::vector<std::vector<int>> action(cat->morphism_count());
  for (std::size_t mi = 0; mi < cat->morphism_count(); ++mi) {
    const int m = static_cast<int>(mi);
    const auto& src = homs[cat->dom(m)];
    const auto& dst = homs[cat->cod(m)];
    for (int h : src) {
      const int image = cat->compose(m, h);
      action[m].push_back(static_cast<int>(std::find(dst.begin(), dst.end(), image) - dst.begin()));
    }
  }
  return {std::move(name), std::make_shared<const FinFunctor>(cat, std::move(sets), std::move(action))};
}

// ---------------------------------------------------------------------------

bool UDVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

UDVector& UDVector::operator+=(const UDVector& o) {
  if (o.size() != size()) throw InternalError("UDVector size mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

UDVector& UDVector::operator-=(const UDVector& o) {
  if (o.size() != size()) throw InternalError("UDVector size mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

UDVector& UDVector::operator*=(const Integer& k) {
  for (auto& e : entries_) e *= k;
  return *this;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const OrbitCategory> OrbitCategory::build(std::shared_ptr<const FinCategory> base,
                                                          std::vector<Orbit> orbits) {
  std::set<std::string> names;
  for (const auto& o : orbits) {
    if (!names.insert(o.name).second) {
      throw ValidationError("duplicate orbit name '" + o.name + "'");
    }
    if (!o.functor || o.functor->base_ptr() != base) {
      throw ValidationError("orbit '" + o.name + "' is not a functor on the given category");
    }
    if (auto r = validate_orbit(o); !r) throw ValidationError(r.message);
  }

  auto oc = std::shared_ptr<OrbitCategory>(new OrbitCategory());
  oc->base_ = std::move(base);
  oc->orbits_ = std::move(orbits);
  const std::size_t n = oc->orbits_.size();

  oc->hom_offset_.assign(n * n + 1, 0);
  oc->lookup_.resize(n * n);
  oc->identities_.assign(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t block = s * n + t;
      oc->hom_offset_[block] = static_cast<MorId>(oc->dom_.size());
      auto homs = enumerate_nat_trans(oc->orbits_[s].functor, oc->orbits_[t].functor);
      for (auto& h : homs) {
        const MorId id = static_cast<MorId>(oc->dom_.size());
        oc->dom_.push_back(static_cast<int>(s));
        oc->cod_.push_back(static_cast<int>(t));
        oc->lookup_[block].emplace(h.components, id);
        oc->transformations_.push_back(std::move(h));
      }
    }
  }
  oc->hom_offset_[n * n] = static_cast<MorId>(oc->dom_.size());

  for (std::size_t t = 0; t < n; ++t) {
    auto id = oc->find(static_cast<int>(t), static_cast<int>(t),
                       identity_nat(oc->orbits_[t].functor).components);
    if (!id) throw InternalError("identity missing from enumerated endomorphisms");
    oc->identities_[t] = *id;
  }

  const std::size_t total = oc->dom_.size();
  oc->composition_.assign(total * total, -1);
  for (std::size_t f = 0; f < total; ++f) {
    for (std::size_t g = 0; g < total; ++g) {
      if (oc->cod_[g] != oc->dom_[f]) continue;
      const NatTrans c = compose_nat(oc->transformations_[f], oc->transformations_[g]);
      auto id = oc->find(oc->dom_[g], oc->cod_[f], c.components);
      if (!id) throw InternalError("orbit category not closed under composition");
      oc->composition_[f * total + g] = *id;
    }
  }

  UnionFind uf(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      const Range r = oc->hom(static_cast<int>(s), static_cast<int>(t));
      for (MorId m = r.first; m < r.last; ++m) {
        if (is_iso(oc->transformations_[m])) {
          uf.unite(s, t);
          break;
        }
      }
    }
  }
  std::vector<int> rep_of_root(n, -1);
  for (std::size_t t = 0; t < n; ++t) {
    int& rep = rep_of_root[uf.find(t)];
    if (rep < 0 || oc->orbits_[t].name < oc->orbits_[rep].name) rep = static_cast<int>(t);
  }
  std::vector<int> reps;
  for (std::size_t t = 0; t < n; ++t) {
    if (rep_of_root[uf.find(t)] == static_cast<int>(t)) reps.push_back(static_cast<int>(t));
  }
  oc->representatives_ = reps;
  oc->class_of_.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const int rep = rep_of_root[uf.find(t)];
    oc->class_of_[t] = static_cast<int>(std::find(reps.begin(), reps.end(), rep) - reps.begin());
  }
  return oc;
}

std::optional<int> OrbitCategory::find_orbit(std::string_view name) const {
  for (std::size_t t = 0; t < orbits_.size(); ++t) {
    if (orbits_[t].name == name) return static_cast<int>(t);
  }
  return std::nullopt;
}

OrbitCategory::Range OrbitCategory::hom(int s, int t) const {
  const std::size_t n = orbits_.size();
  const std::size_t block = static_cast<std::size_t>(s) * n + static_cast<std::size_t>(t);
  return {hom_offset_.at(block), hom_offset_.at(block + 1)};
}

std::vector<MorId> OrbitCategory::morphisms_into(int t) const {
  std::vector<MorId> out;
  for (std::size_t s = 0; s < orbits_.size(); ++s) {
    const Range r = hom(static_cast<int>(s), t);
    for (MorId m = r.first; m < r.last; ++m) out.push_back(m);
  }
  return out;
}

MorId OrbitCategory::compose(MorId f, MorId g) const {
  const MorId c = composition_.at(static_cast<std::size_t>(f) * dom_.size() + static_cast<std::size_t>(g));
  if (c < 0) {
    throw ValidationError("cannot compose " + morphism_name(f) + " ∘ " + morphism_name(g));
  }
  return c;
}

std::optional<MorId> OrbitCategory::find(int s, int t,
                                         const std::vector<std::vector<int>>& components) const {
  const auto& table = lookup_.at(static_cast<std::size_t>(s) * orbits_.size() + static_cast<std::size_t>(t));
  auto it = table.find(components);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string OrbitCategory::morphism_name(MorId m) const {
  const int s = dom(m);
  const int t = cod(m);
  if (s == t && identities_[s] == m) return "id_" + orbits_[s].name;
  return orbits_[s].name + "->" + orbits_[t].name + "#" + std::to_string(m - hom(s, t).first);
}

std::optional<MorId> OrbitCategory::find_morphism(std::string_view name) const {
  for (MorId m = 0; m < static_cast<MorId>(dom_.size()); ++m) {
    if (morphism_name(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<std::string> OrbitCategory::class_labels() const {
  std::vector<std::string> out;
  for (int rep : representatives_) out.push_back(orbits_[rep].name);
  return out;
}

UDVector euler_unit(const OrbitCategory& oc, std::string_view orbit_name) {
  auto t = oc.find_orbit(orbit_name);
  if (!t) throw ValidationError("unknown orbit '" + std::string(orbit_name) + "'");
  UDVector v = oc.zero_vector();
  v[oc.class_of(*t)] = 1;
  return v;
}

std::string format_ud(const OrbitCategory& oc, const UDVector& v) {
  std::ostringstream out;
  const auto labels = oc.class_labels();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << (i ? ", " : "") << labels[i] << ": " << v[i];
  }
  return out.str();
}

}  // namespace eqcell
