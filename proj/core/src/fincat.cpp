#include "eqcell/fincat.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace eqcell {

namespace {

struct Resolved {
  std::vector<std::string> objects;
  std::vector<std::string> names;
  std::vector<int> dom;
  std::vector<int> cod;
  std::vector<int> identities;
  std::vector<int> table;
};

// Resolves a spec into index form. Returns an error message on failure.
std::optional<std::string> resolve(const CategorySpec& spec, Resolved& out) {
  std::unordered_map<std::string, int> object_index;
  for (const auto& name : spec.objects) {
    if (name.empty()) return "empty object name";
    if (!object_index.emplace(name, static_cast<int>(out.objects.size())).second) {
      return "duplicate object name '" + name + "'";
    }
    out.objects.push_back(name);
  }

  std::unordered_map<std::string, int> morphism_index;
  for (const auto& m : spec.morphisms) {
    auto d = object_index.find(m.dom);
    auto c = object_index.find(m.cod);
    if (m.name.empty()) return "empty morphism name";
    if (d == object_index.end()) {
      return "morphism '" + m.name + "': unknown domain '" + m.dom + "'";
    }
    if (c == object_index.end()) {
      return "morphism '" + m.name + "': unknown codomain '" + m.cod + "'";
    }
    if (!morphism_index.emplace(m.name, static_cast<int>(out.names.size())).second) {
      return "duplicate morphism name '" + m.name + "'";
    }
    out.names.push_back(m.name);
    out.dom.push_back(d->second);
    out.cod.push_back(c->second);
  }

  for (std::size_t obj = 0; obj < out.objects.size(); ++obj) {
    const std::string id_name = "id_" + out.objects[obj];
    auto it = morphism_index.find(id_name);
    if (it == morphism_index.end()) {
      morphism_index.emplace(id_name, static_cast<int>(out.names.size()));
      out.identities.push_back(static_cast<int>(out.names.size()));
      out.names.push_back(id_name);
      out.dom.push_back(static_cast<int>(obj));
      out.cod.push_back(static_cast<int>(obj));
    } else {
      if (out.dom[it->second] != static_cast<int>(obj) ||
          out.cod[it->second] != static_cast<int>(obj)) {
        return "identity '" + id_name + "' is not an endomorphism of '" +
               out.objects[obj] + "'";
      }
      out.identities.push_back(it->second);
    }
  }

  const std::size_t n = out.names.size();
  out.table.assign(n * n, -1);
  for (const auto& entry : spec.composition) {
    auto f = morphism_index.find(entry.first);
    auto g = morphism_index.find(entry.second);
    auto h = morphism_index.find(entry.result);
    const std::string locus = "composition (" + entry.second + " ∘ " + entry.first + ")";
    if (f == morphism_index.end()) return locus + ": unknown morphism '" + entry.first + "'";
    if (g == morphism_index.end()) return locus + ": unknown morphism '" + entry.second + "'";
    if (h == morphism_index.end()) return locus + ": unknown morphism '" + entry.result + "'";
    if (out.cod[f->second] != out.dom[g->second]) {
      return locus + ": non-composable pair";
    }
    if (out.dom[h->second] != out.dom[f->second] ||
        out.cod[h->second] != out.cod[g->second]) {
      return locus + ": result '" + entry.result + "' has wrong domain or codomain";
    }
    int& slot = out.table[g->second * n + f->second];
    if (slot != -1 && slot != h->second) {
      return locus + ": conflicting entries '" + out.names[slot] + "' and '" +
             entry.result + "'";
    }
    slot = h->second;
  }

  // Entries with an identity factor default to the identity law.
  for (std::size_t m = 0; m < n; ++m) {
    int& left = out.table[out.identities[out.cod[m]] * n + m];
    if (left == -1) left = static_cast<int>(m);
    int& right = out.table[m * n + out.identities[out.dom[m]]];
    if (right == -1) right = static_cast<int>(m);
  }
  return std::nullopt;
}

std::optional<std::string> check_axioms(const Resolved& r) {
  const std::size_t n = r.names.size();
  auto at = [&](std::size_t second, std::size_t first) { return r.table[second * n + first]; };

  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (r.cod[f] == r.dom[g] && at(g, f) == -1) {
        return "composition table gap: (" + r.names[g] + " ∘ " + r.names[f] + ")";
      }
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (at(r.identities[r.cod[m]], m) != static_cast<int>(m)) {
      return "identity law fails: " + r.names[r.identities[r.cod[m]]] + " ∘ " + r.names[m];
    }
    if (at(m, r.identities[r.dom[m]]) != static_cast<int>(m)) {
      return "identity law fails: " + r.names[m] + " ∘ " + r.names[r.identities[r.dom[m]]];
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (r.cod[f] != r.dom[g]) continue;
      const int gf = at(g, f);
      for (std::size_t h = 0; h < n; ++h) {
        if (r.cod[g] != r.dom[h]) continue;
        const int hg = at(h, g);
        if (at(h, gf) != at(hg, f)) {
          return "associativity fails on triple (" + r.names[h] + ", " + r.names[g] +
                 ", " + r.names[f] + ")";
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_category(const CategorySpec& spec) {
  Resolved r;
  if (auto err = resolve(spec, r)) return ValidationReport::failure(*err);
  if (auto err = check_axioms(r)) return ValidationReport::failure(*err);
  return ValidationReport::success();
}

std::shared_ptr<const FinCategory> FinCategory::from_spec(const CategorySpec& spec) {
  Resolved r;
  if (auto err = resolve(spec, r)) throw ValidationError("category: " + *err);
  if (auto err = check_axioms(r)) throw ValidationError("category: " + *err);

  auto cat = std::shared_ptr<FinCategory>(new FinCategory());
  cat->objects_ = std::move(r.objects);
  for (std::size_t m = 0; m < r.names.size(); ++m) {
    cat->morphisms_.push_back({r.names[m], r.dom[m], r.cod[m]});
  }
  cat->identities_ = std::move(r.identities);
  cat->table_ = std::move(r.table);
  return cat;
}

int FinCategory::compose(int second, int first) const {
  if (cod(first) != dom(second)) {
    throw ValidationError("cannot compose " + morphism_name(second) + " ∘ " +
                          morphism_name(first));
  }
  return table_[static_cast<std::size_t>(second) * morphisms_.size() + first];
}

std::optional<int> FinCategory::find_object(std::string_view name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<int>(it - objects_.begin());
}

std::optional<int> FinCategory::find_morphism(std::string_view name) const {
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    if (morphisms_[m].name == name) return static_cast<int>(m);
  }
  return std::nullopt;
}

std::vector<int> FinCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t m = 0; m < morphisms_.size(); ++m) {
    if (morphisms_[m].dom == a && morphisms_[m].cod == b) out.push_back(static_cast<int>(m));
  }
  return out;
}

CategorySpec FinCategory::to_spec() const {
  CategorySpec spec;
  spec.objects = objects_;
  for (const auto& m : morphisms_) {
    spec.morphisms.push_back({m.name, objects_[m.dom], objects_[m.cod]});
  }
  const std::size_t n = morphisms_.size();
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (morphisms_[f].cod != morphisms_[g].dom) continue;
      if (is_identity(static_cast<int>(f)) || is_identity(static_cast<int>(g))) continue;
      spec.composition.push_back(
          {morphisms_[f].name, morphisms_[g].name, morphisms_[table_[g * n + f]].name});
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------

FinFunctor::FinFunctor(std::shared_ptr<const FinCategory> base,
                       std::vector<std::vector<std::string>> sets,
                       std::vector<std::vector<int>> action)
    : base_(std::move(base)), sets_(std::move(sets)), action_(std::move(action)) {}

std::shared_ptr<const FinFunctor> FinFunctor::from_spec(
    std::shared_ptr<const FinCategory> base, const FunctorSpec& spec) {
  const FinCategory& cat = *base;
  std::vector<std::vector<std::string>> sets(cat.object_count());
  for (const auto& [obj_name, elems] : spec.sets) {
    auto obj = cat.find_object(obj_name);
    if (!obj) throw ValidationError("functor: unknown object '" + obj_name + "'");
    std::set<std::string> seen;
    for (const auto& e : elems) {
      if (!seen.insert(e).second) {
        throw ValidationError("functor: duplicate element '" + e + "' over '" + obj_name + "'");
      }
    }
    sets[*obj] = elems;
  }

  std::vector<std::vector<int>> action(cat.morphism_count());
  std::vector<bool> given(cat.morphism_count(), false);
  for (const auto& [m_name, mapping] : spec.action) {
    auto m = cat.find_morphism(m_name);
    if (!m) throw ValidationError("functor: unknown morphism '" + m_name + "'");
    const auto& src = sets[cat.dom(*m)];
    const auto& dst = sets[cat.cod(*m)];
    std::vector<int> fn(src.size(), -1);
    for (const auto& [from, to] : mapping) {
      auto x = std::find(src.begin(), src.end(), from);
      auto y = std::find(dst.begin(), dst.end(), to);
      if (x == src.end()) {
        throw ValidationError("functor: action of '" + m_name + "': unknown element '" + from + "'");
      }
      if (y == dst.end()) {
        throw ValidationError("functor: action of '" + m_name + "': unknown element '" + to + "'");
      }
      fn[x - src.begin()] = static_cast<int>(y - dst.begin());
    }
    for (std::size_t x = 0; x < fn.size(); ++x) {
      if (fn[x] < 0) {
        throw ValidationError("functor: action of '" + m_name + "' undefined on '" + src[x] + "'");
      }
    }
    action[*m] = std::move(fn);
    given[*m] = true;
  }
  for (std::size_t m = 0; m < cat.morphism_count(); ++m) {
    if (given[m]) continue;
    if (cat.is_identity(static_cast<int>(m)) || sets[cat.dom(static_cast<int>(m))].empty()) {
      std::vector<int> fn(sets[cat.dom(static_cast<int>(m))].size());
      std::iota(fn.begin(), fn.end(), 0);
      action[m] = std::move(fn);
    } else {
      throw ValidationError("functor: missing action of '" + cat.morphism_name(static_cast<int>(m)) + "'");
    }
  }

  auto f = std::make_shared<const FinFunctor>(std::move(base), std::move(sets), std::move(action));
  if (auto report = validate_functor(*f); !report) {
    throw ValidationError("functor: " + report.message);
  }
  return f;
}

std::optional<int> FinFunctor::find_element(int obj, std::string_view name) const {
  const auto& s = sets_.at(obj);
  auto it = std::find(s.begin(), s.end(), name);
  if (it == s.end()) return std::nullopt;
  return static_cast<int>(it - s.begin());
}

bool FinFunctor::empty() const {
  return std::all_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.empty(); });
}

FunctorSpec FinFunctor::to_spec() const {
  FunctorSpec spec;
  for (std::size_t d = 0; d < sets_.size(); ++d) {
    spec.sets[base_->object_name(static_cast<int>(d))] = sets_[d];
  }
  for (std::size_t m = 0; m < action_.size(); ++m) {
    if (base_->is_identity(static_cast<int>(m))) continue;
    auto& mapping = spec.action[base_->morphism_name(static_cast<int>(m))];
    const int d = base_->dom(static_cast<int>(m));
    const int c = base_->cod(static_cast<int>(m));
    for (std::size_t x = 0; x < action_[m].size(); ++x) {
      mapping[sets_[d][x]] = sets_[c][action_[m][x]];
    }
  }
  return spec;
}

ValidationReport validate_functor(const FinFunctor& f) {
  const FinCategory& cat = f.base();
  auto name = [&](int m) { return cat.morphism_name(m); };
  for (std::size_t mi = 0; mi < cat.morphism_count(); ++mi) {
    const int m = static_cast<int>(mi);
    const auto fn = f.action(m);
    if (fn.size() != f.size(cat.dom(m))) {
      return ValidationReport::failure("action of '" + name(m) + "' has wrong arity");
    }
    for (int y : fn) {
      if (y < 0 || static_cast<std::size_t>(y) >= f.size(cat.cod(m))) {
        return ValidationReport::failure("action of '" + name(m) + "' out of range");
      }
    }
    if (cat.is_identity(m)) {
      for (std::size_t x = 0; x < fn.size(); ++x) {
        if (fn[x] != static_cast<int>(x)) {
          return ValidationReport::failure("identity '" + name(m) + "' does not act trivially");
        }
      }
    }
  }
  for (std::size_t fi = 0; fi < cat.morphism_count(); ++fi) {
    for (std::size_t gi = 0; gi < cat.morphism_count(); ++gi) {
      const int first = static_cast<int>(fi);
      const int second = static_cast<int>(gi);
      if (cat.cod(first) != cat.dom(second)) continue;
      const int composite = cat.compose(second, first);
      for (std::size_t x = 0; x < f.size(cat.dom(first)); ++x) {
        if (f.act(second, f.act(first, static_cast<int>(x))) != f.act(composite, static_cast<int>(x))) {
          return ValidationReport::failure("functoriality fails for " + name(second) + " ∘ " +
                                           name(first) + " at element '" +
                                           f.elements(cat.dom(first))[x] + "'");
        }
      }
    }
  }
  return ValidationReport::success();
}

// ---------------------------------------------------------------------------

bool is_natural(const NatTrans& t) {
  if (!t.source || !t.target) return false;
  const FinFunctor& f = *t.source;
  const FinFunctor& g = *t.target;
  if (f.base_ptr() != g.base_ptr()) return false;
  const FinCategory& cat = f.base();
  if (t.components.size() != cat.object_count()) return false;
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    const auto& c = t.components[d];
    if (c.size() != f.size(static_cast<int>(d))) return false;
    for (int y : c) {
      if (y < 0 || static_cast<std::size_t>(y) >= g.size(static_cast<int>(d))) return false;
    }
  }
  for (std::size_t mi = 0; mi < cat.morphism_count(); ++mi) {
    const int m = static_cast<int>(mi);
    const int a = cat.dom(m);
    const int b = cat.cod(m);
    for (std::size_t x = 0; x < f.size(a); ++x) {
      if (t.components[b][f.act(m, static_cast<int>(x))] != g.act(m, t.components[a][x])) {
        return false;
      }
    }
  }
  return true;
}

NatTrans identity_nat(const std::shared_ptr<const FinFunctor>& f) {
  NatTrans t{f, f, {}};
  for (std::size_t d = 0; d < f->base().object_count(); ++d) {
    std::vector<int> c(f->size(static_cast<int>(d)));
    std::iota(c.begin(), c.end(), 0);
    t.components.push_back(std::move(c));
  }
  return t;
}

Colimit colimit(const FinFunctor& f) {
  const FinCategory& cat = f.base();
  std::vector<std::size_t> offset(cat.object_count() + 1, 0);
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    offset[d + 1] = offset[d] + f.size(static_cast<int>(d));
  }
  UnionFind uf(offset.back());
  for (std::size_t mi = 0; mi < cat.morphism_count(); ++mi) {
    const int m = static_cast<int>(mi);
    const int a = cat.dom(m);
    const int b = cat.cod(m);
    for (std::size_t x = 0; x < f.size(a); ++x) {
      uf.unite(offset[a] + x, offset[b] + f.act(m, static_cast<int>(x)));
    }
  }

  Colimit out;
  std::vector<int> label(offset.back(), -1);
  out.projection.resize(cat.object_count());
  for (std::size_t d = 0; d < cat.object_count(); ++d) {
    for (std::size_t x = 0; x < f.size(static_cast<int>(d)); ++x) {
      const std::size_t root = uf.find(offset[d] + x);
      if (label[root] < 0) label[root] = static_cast<int>(out.class_count++);
      out.projection[d].push_back(label[root]);
    }
  }
  return out;
}

namespace {

// Depth-first enumeration over (object, element) slots; values are tried in
// increasing order so the output is lexicographic.
class NatTransEnumerator {
 public:
  NatTransEnumerator(const FinFunctor& f, const FinFunctor& g) : f_(f), g_(g) {
    const FinCategory& cat = f.base();
    for (std::size_t d = 0; d < cat.object_count(); ++d) {
      slot_offset_.push_back(slots_.size());
      for (std::size_t x = 0; x < f.size(static_cast<int>(d)); ++x) {
        slots_.push_back({static_cast<int>(d), static_cast<int>(x)});
      }
    }
    slot_offset_.push_back(slots_.size());
    constraints_.resize(slots_.size());
    // Constraint (m, x): component_b(F(m)(x)) == G(m)(component_a(x)).
    // It is checked once both slots are assigned, i.e. at the later one.
    for (std::size_t mi = 0; mi < cat.morphism_count(); ++mi) {
      const int m = static_cast<int>(mi);
      const int a = cat.dom(m);
      const int b = cat.cod(m);
      for (std::size_t x = 0; x < f.size(a); ++x) {
        const std::size_t s1 = slot_offset_[a] + x;
        const std::size_t s2 = slot_offset_[b] + f.act(m, static_cast<int>(x));
        constraints_[std::max(s1, s2)].push_back({m, s1, s2});
      }
    }
    values_.assign(slots_.size(), -1);
  }

  std::vector<std::vector<std::vector<int>>> run() {
    std::vector<std::vector<std::vector<int>>> out;
    recurse(0, out);
    return out;
  }

 private:
  struct Slot {
    int obj;
    int elem;
  };
  struct Constraint {
    int morphism;
    std::size_t src_slot;
    std::size_t dst_slot;
  };

  bool consistent(std::size_t slot) const {
    for (const auto& c : constraints_[slot]) {
      if (values_[c.dst_slot] != g_.act(c.morphism, values_[c.src_slot])) return false;
    }
    return true;
  }

  void recurse(std::size_t slot, std::vector<std::vector<std::vector<int>>>& out) {
    if (slot == slots_.size()) {
      std::vector<std::vector<int>> comps(slot_offset_.size() - 1);
      for (std::size_t d = 0; d + 1 < slot_offset_.size(); ++d) {
        comps[d].assign(values_.begin() + static_cast<std::ptrdiff_t>(slot_offset_[d]),
                        values_.begin() + static_cast<std::ptrdiff_t>(slot_offset_[d + 1]));
      }
      out.push_back(std::move(comps));
      return;
    }
    const std::size_t range = g_.size(slots_[slot].obj);
    for (std::size_t v = 0; v < range; ++v) {
      values_[slot] = static_cast<int>(v);
      if (consistent(slot)) recurse(slot + 1, out);
    }
    values_[slot] = -1;
  }

  const FinFunctor& f_;
  const FinFunctor& g_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> slot_offset_;
  std::vector<std::vector<Constraint>> constraints_;
  std::vector<int> values_;
};

}  // namespace

std::vector<NatTrans> enumerate_nat_trans(const std::shared_ptr<const FinFunctor>& f,
                                          const std::shared_ptr<const FinFunctor>& g) {
  if (f->base_ptr() != g->base_ptr()) {
    throw ValidationError("natural transformations between functors on different categories");
  }
  std::vector<NatTrans> out;
  for (auto& comps : NatTransEnumerator(*f, *g).run()) {
    out.push_back({f, g, std::move(comps)});
  }
  return out;
}

NatTrans compose_nat(const NatTrans& f, const NatTrans& g) {
  if (g.target != f.source) {
    throw ValidationError("non-composable natural transformations");
  }
  NatTrans out{g.source, f.target, {}};
  out.components.resize(g.components.size());
  for (std::size_t d = 0; d < g.components.size(); ++d) {
    for (int x : g.components[d]) out.components[d].push_back(f.components[d][x]);
  }
  if (!is_natural(out)) throw InternalError("composite of natural maps is not natural");
  return out;
}

bool is_iso(const NatTrans& f) {
  for (std::size_t d = 0; d < f.components.size(); ++d) {
    const auto& c = f.components[d];
    if (c.size() != f.target->size(static_cast<int>(d))) return false;
    std::vector<bool> hit(c.size(), false);
    for (int y : c) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

}  // namespace eqcell
