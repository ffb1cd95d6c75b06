#include "eqcell/dspace.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace eqcell {

namespace {

std::string vertex_list(const LabeledComplex& x, const std::vector<int>& verts) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < verts.size(); ++i) {
    out << (i ? "," : "") << x.vertices()[verts[i]];
  }
  out << ']';
  return out.str();
}

std::vector<int> drop(const std::vector<int>& v, int i) {
  std::vector<int> out = v;
  out.erase(out.begin() + i);
  return out;
}

// Position of each simplex in (dimension, index) order.
std::vector<std::vector<int>> flat_positions(const LabeledComplex& x) {
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(x.dimension() + 1));
  int next = 0;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) pos[d].push_back(next++);
  }
  return pos;
}

}  // namespace

LabeledComplex::LabeledComplex(std::shared_ptr<const OrbitCategory> oc,
                               std::vector<std::string> vertices, std::vector<Simplex> simplices)
    : oc_(std::move(oc)), vertices_(std::move(vertices)) {
  for (auto& s : simplices) {
    if (s.vertices.empty()) throw ValidationError("simplex '" + s.id + "' has no vertices");
    for (int v : s.vertices) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) {
        throw ValidationError("simplex '" + s.id + "' uses an unknown vertex");
      }
    }
    const auto d = static_cast<std::size_t>(s.dim());
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    const SimplexRef ref{static_cast<int>(d), static_cast<int>(by_dim_[d].size())};
    by_vertices_.try_emplace(s.vertices, ref);
    by_id_.try_emplace(s.id, ref);
    by_dim_[d].push_back(std::move(s));
  }
}

std::span<const Simplex> LabeledComplex::simplices(int dim) const {
  if (dim < 0 || dim > dimension()) return {};
  return by_dim_[dim];
}

std::size_t LabeledComplex::simplex_count() const {
  std::size_t n = 0;
  for (const auto& d : by_dim_) n += d.size();
  return n;
}

std::optional<SimplexRef> LabeledComplex::find(const std::vector<int>& sorted_vertices) const {
  auto it = by_vertices_.find(sorted_vertices);
  if (it == by_vertices_.end()) return std::nullopt;
  return it->second;
}

std::optional<SimplexRef> LabeledComplex::find_id(std::string_view id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> LabeledComplex::find_vertex(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<SimplexRef> LabeledComplex::facet(SimplexRef s, int i) const {
  return find(drop(simplex(s).vertices, i));
}

MorId LabeledComplex::face_restriction(SimplexRef sigma, SimplexRef rho) const {
  const auto& target = simplex(rho).vertices;
  SimplexRef current = sigma;
  MorId mor = oc_->identity(simplex(sigma).orbit);
  while (current != rho) {
    const auto& verts = simplex(current).vertices;
    int pos = -1;
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (!std::binary_search(target.begin(), target.end(), verts[i])) {
        pos = i;
        break;
      }
    }
    if (pos < 0) throw ValidationError("face_restriction: not a face");
    auto next = facet(current, pos);
    if (!next) throw ValidationError("face_restriction: missing face");
    mor = oc_->compose(simplex(current).restrictions.at(pos), mor);
    current = *next;
  }
  return mor;
}

// ---------------------------------------------------------------------------

ValidationReport validate_space(const LabeledComplex& x) {
  const OrbitCategory& oc = x.orbits();
  auto fail = [](std::string msg) { return ValidationReport::failure(std::move(msg)); };

  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const Simplex& s = x.simplices(d)[i];
      const SimplexRef ref{d, static_cast<int>(i)};
      const std::string locus = "simplex '" + s.id + "'";
      if (s.orbit < 0 || static_cast<std::size_t>(s.orbit) >= oc.orbit_count()) {
        return fail(locus + ": label is not an orbit of O'");
      }
      for (std::size_t k = 1; k < s.vertices.size(); ++k) {
        if (s.vertices[k - 1] >= s.vertices[k]) {
          return fail(locus + ": vertices " + vertex_list(x, s.vertices) +
                      " are not strictly increasing");
        }
      }
      if (x.find(s.vertices) != ref) {
        return fail(locus + ": duplicate simplex " + vertex_list(x, s.vertices));
      }
      if (x.find_id(s.id) != ref) return fail(locus + ": duplicate id");
      const std::size_t expected = d == 0 ? 0 : static_cast<std::size_t>(d + 1);
      if (s.restrictions.size() != expected) {
        return fail(locus + ": expected " + std::to_string(expected) + " restrictions, got " +
                    std::to_string(s.restrictions.size()));
      }
    }
  }

  for (int d = 1; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const Simplex& s = x.simplex(ref);
      const std::string locus = "simplex '" + s.id + "'";
      for (int k = 0; k <= d; ++k) {
        auto face = x.facet(ref, k);
        if (!face) {
          return fail(locus + " " + vertex_list(x, s.vertices) + " is missing its face " +
                      vertex_list(x, drop(s.vertices, k)));
        }
        const MorId r = s.restrictions[k];
        if (r < 0 || static_cast<std::size_t>(r) >= oc.morphism_count()) {
          return fail(locus + ": restriction " + std::to_string(k) + " is not a morphism of O'");
        }
        const Simplex& f = x.simplex(*face);
        if (oc.dom(r) != s.orbit) {
          return fail(locus + ": restriction to face '" + f.id + "' starts at orbit '" +
                      oc.orbit_name(oc.dom(r)) + "', simplex is labelled '" +
                      oc.orbit_name(s.orbit) + "'");
        }
        if (oc.cod(r) != f.orbit) {
          return fail(locus + ": restriction to face '" + f.id + "' maps into orbit '" +
                      oc.orbit_name(oc.cod(r)) + "', face is labelled '" +
                      oc.orbit_name(f.orbit) + "'");
        }
      }
    }
  }

  for (std::size_t v = 0; v < x.vertices().size(); ++v) {
    if (!x.find({static_cast<int>(v)})) {
      return fail("vertex '" + x.vertices()[v] + "' has no 0-simplex");
    }
  }

  for (int d = 2; d <= x.dimension(); ++d) {
    for (std::size_t idx = 0; idx < x.simplices(d).size(); ++idx) {
      const SimplexRef ref{d, static_cast<int>(idx)};
      const Simplex& s = x.simplex(ref);
      for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j <= d; ++j) {
          const Simplex& drop_j = x.simplex(*x.facet(ref, j));
          const Simplex& drop_i = x.simplex(*x.facet(ref, i));
          const MorId via_j = oc.compose(drop_j.restrictions[i], s.restrictions[j]);
          const MorId via_i = oc.compose(drop_i.restrictions[j - 1], s.restrictions[i]);
          if (via_i != via_j) {
            return fail("simplex '" + s.id + "': restrictions to face " +
                        vertex_list(x, drop(drop(s.vertices, j), i)) + " through '" +
                        drop_i.id + "' and '" + drop_j.id + "' do not commute");
          }
        }
      }
    }
  }
  return ValidationReport::success();
}

UDVector euler_class(const LabeledComplex& x) {
  const OrbitCategory& oc = x.orbits();
  UDVector v = oc.zero_vector();
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const auto& s : x.simplices(d)) v[oc.class_of(s.orbit)] += (d % 2 == 0) ? 1 : -1;
  }
  return v;
}

LabeledComplex subdivide(const LabeledComplex& x) {
  const OrbitCategory& oc = x.orbits();
  const auto position = flat_positions(x);

  std::vector<std::string> vertices;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const auto& s : x.simplices(d)) vertices.push_back(s.id);
  }

  // Proper faces of each simplex, ascending by (dim, index).
  auto proper_faces = [&](SimplexRef s) {
    const auto& verts = x.simplex(s).vertices;
    const int n = static_cast<int>(verts.size());
    std::vector<SimplexRef> faces;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) sub.push_back(verts[k]);
      }
      auto f = x.find(sub);
      if (!f) throw ValidationError("subdivide: complex is not closed");
      faces.push_back(*f);
    }
    std::sort(faces.begin(), faces.end());
    return faces;
  };

  std::map<SimplexRef, std::vector<std::vector<SimplexRef>>> chains_to;
  std::function<const std::vector<std::vector<SimplexRef>>&(SimplexRef)> chains =
      [&](SimplexRef top) -> const std::vector<std::vector<SimplexRef>>& {
    auto it = chains_to.find(top);
    if (it != chains_to.end()) return it->second;
    std::vector<std::vector<SimplexRef>> out{{top}};
    for (SimplexRef f : proper_faces(top)) {
      for (auto c : chains(f)) {
        c.push_back(top);
        out.push_back(std::move(c));
      }
    }
    return chains_to.emplace(top, std::move(out)).first->second;
  };

  std::vector<Simplex> simplices;
  std::set<std::string> ids;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef top{d, static_cast<int>(i)};
      const Simplex& top_simplex = x.simplex(top);
      for (const auto& chain : chains(top)) {
        Simplex s;
        s.orbit = top_simplex.orbit;
        for (std::size_t k = 0; k < chain.size(); ++k) {
          s.vertices.push_back(position[chain[k].dim][chain[k].index]);
          s.id += (k ? "<" : "") + x.simplex(chain[k]).id;
        }
        const std::size_t k = chain.size() - 1;
        if (k > 0) {
          for (std::size_t pos = 0; pos < k; ++pos) s.restrictions.push_back(oc.identity(s.orbit));
          s.restrictions.push_back(x.face_restriction(chain[k], chain[k - 1]));
        }
        if (!ids.insert(s.id).second) {
          throw ValidationError("subdivide: generated id '" + s.id + "' is ambiguous");
        }
        simplices.push_back(std::move(s));
      }
    }
  }
  return LabeledComplex(x.orbits_ptr(), std::move(vertices), std::move(simplices));
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> DeltaComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& c : cells) out.push_back(c.size());
  return out;
}

namespace {

// Shared builder: `fiber(σ)` is the cell count over σ, `face(σ, i, k)` the
// index within the fiber over facet i of the image of the k-th cell.
template <class Names, class Face>
DeltaComplex build_delta(const LabeledComplex& x, Names&& names, Face&& face) {
  DeltaComplex out;
  const int top = x.dimension();
  out.cells.resize(static_cast<std::size_t>(top + 1));
  out.faces.resize(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<int>> offset(static_cast<std::size_t>(top + 1));
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      offset[d].push_back(static_cast<int>(out.cells[d].size()));
      for (auto& n : names(ref)) out.cells[d].push_back(std::move(n));
    }
  }
  for (int d = 0; d <= top; ++d) {
    out.faces[d].resize(out.cells[d].size());
    if (d == 0) continue;
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const int base = offset[d][i];
      const int fiber = (i + 1 < offset[d].size() ? offset[d][i + 1] : static_cast<int>(out.cells[d].size())) - base;
      for (int k = 0; k < fiber; ++k) {
        for (int f = 0; f <= d; ++f) {
          const SimplexRef fr = *x.facet(ref, f);
          out.faces[d][base + k].push_back(offset[d - 1][fr.index] + face(ref, f, k));
        }
      }
    }
  }
  return out;
}

}  // namespace

DeltaComplex total_space(const LabeledComplex& x, std::string_view object) {
  const OrbitCategory& oc = x.orbits();
  auto d = oc.base().find_object(object);
  if (!d) throw ValidationError("unknown object '" + std::string(object) + "'");
  auto label = [&](SimplexRef r) -> const FinFunctor& { return *oc.orbit(x.simplex(r).orbit).functor; };
  return build_delta(
      x,
      [&](SimplexRef r) {
        std::vector<std::string> names;
        for (const auto& e : label(r).elements(*d)) names.push_back(x.simplex(r).id + ":" + e);
        return names;
      },
      [&](SimplexRef r, int f, int k) {
        const MorId m = x.simplex(r).restrictions[f];
        return oc.transformation(m).components[*d][k];
      });
}

DeltaComplex orbit_point(const LabeledComplex& x, int orbit) {
  const OrbitCategory& oc = x.orbits();
  if (orbit < 0 || static_cast<std::size_t>(orbit) >= oc.orbit_count()) {
    throw ValidationError("unknown orbit index");
  }
  return build_delta(
      x,
      [&](SimplexRef r) {
        std::vector<std::string> names;
        const auto range = oc.hom(orbit, x.simplex(r).orbit);
        for (MorId g = range.first; g < range.last; ++g) {
          names.push_back(x.simplex(r).id + ":" + oc.morphism_name(g));
        }
        return names;
      },
      [&](SimplexRef r, int f, int k) {
        const Simplex& s = x.simplex(r);
        const MorId g = oc.hom(orbit, s.orbit).first + k;
        const MorId image = oc.compose(s.restrictions[f], g);
        return image - oc.hom(orbit, oc.cod(image)).first;
      });
}

DeltaComplex orbit_point(const LabeledComplex& x, const Orbit& orbit) {
  const OrbitCategory& oc = x.orbits();
  if (orbit.functor->base_ptr() != oc.base_ptr()) {
    throw ValidationError("orbit '" + orbit.name + "' lives on a different category");
  }
  std::vector<std::vector<NatTrans>> homs(oc.orbit_count());
  std::vector<std::map<std::vector<std::vector<int>>, int>> index(oc.orbit_count());
  for (std::size_t t = 0; t < oc.orbit_count(); ++t) {
    homs[t] = enumerate_nat_trans(orbit.functor, oc.orbit(static_cast<int>(t)).functor);
    for (std::size_t k = 0; k < homs[t].size(); ++k) index[t].emplace(homs[t][k].components, static_cast<int>(k));
  }
  return build_delta(
      x,
      [&](SimplexRef r) {
        std::vector<std::string> names;
        for (std::size_t k = 0; k < homs[x.simplex(r).orbit].size(); ++k) {
          names.push_back(x.simplex(r).id + ":#" + std::to_string(k));
        }
        return names;
      },
      [&](SimplexRef r, int f, int k) {
        const Simplex& s = x.simplex(r);
        const MorId m = s.restrictions[f];
        const NatTrans image = compose_nat(oc.transformation(m), homs[s.orbit][k]);
        return index[oc.cod(m)].at(image.components);
      });
}

// ---------------------------------------------------------------------------

std::optional<SimplexRef> carrier(const EquivariantSelfMap& f, SimplexRef s) {
  const LabeledComplex& x = *f.space;
  std::vector<int> image;
  for (int v : x.simplex(s).vertices) image.push_back(f.vertex_map.at(v));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return x.find(image);
}

int orientation_sign(const EquivariantSelfMap& f, SimplexRef s) {
  std::vector<int> image;
  for (int v : f.space->simplex(s).vertices) image.push_back(f.vertex_map.at(v));
  int inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] == image[j]) return 0;
      if (image[i] > image[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

ValidationReport validate_map(const EquivariantSelfMap& f) {
  auto fail = [](std::string msg) { return ValidationReport::failure(std::move(msg)); };
  if (!f.space) return fail("map has no space");
  const LabeledComplex& x = *f.space;
  const OrbitCategory& oc = x.orbits();
  if (f.vertex_map.size() != x.vertices().size()) return fail("vertex map has wrong size");
  for (int v : f.vertex_map) {
    if (v < 0 || static_cast<std::size_t>(v) >= x.vertices().size()) return fail("vertex map out of range");
  }
  if (f.components.size() != static_cast<std::size_t>(x.dimension() + 1)) {
    return fail("components missing for some dimension");
  }
  for (int d = 0; d <= x.dimension(); ++d) {
    if (f.components[d].size() != x.simplices(d).size()) {
      return fail("components missing in dimension " + std::to_string(d));
    }
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const Simplex& s = x.simplex(ref);
      auto c = carrier(f, ref);
      if (!c) return fail("image of simplex '" + s.id + "' is not a simplex");
      const MorId u = f.components[d][i];
      if (u < 0 || static_cast<std::size_t>(u) >= oc.morphism_count()) {
        return fail("component over '" + s.id + "' is not a morphism of O'");
      }
      if (oc.dom(u) != s.orbit || oc.cod(u) != x.simplex(*c).orbit) {
        return fail("component over '" + s.id + "' must map " + oc.orbit_name(s.orbit) + " -> " +
                    oc.orbit_name(x.simplex(*c).orbit));
      }
    }
  }
  for (int d = 1; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const Simplex& s = x.simplex(ref);
      const SimplexRef image = *carrier(f, ref);
      for (int k = 0; k <= d; ++k) {
        const SimplexRef face = *x.facet(ref, k);
        const SimplexRef face_image = *carrier(f, face);
        const MorId lhs = oc.compose(f.components[face.dim][face.index], s.restrictions[k]);
        const MorId rhs = oc.compose(x.face_restriction(image, face_image), f.components[d][i]);
        if (lhs != rhs) {
          return fail("component square over '" + s.id + "' and its face '" + x.simplex(face).id +
                      "' does not commute");
        }
      }
    }
  }
  return ValidationReport::success();
}

EquivariantSelfMap identity_map(const std::shared_ptr<const LabeledComplex>& x) {
  EquivariantSelfMap f{x, {}, {}};
  for (std::size_t v = 0; v < x->vertices().size(); ++v) f.vertex_map.push_back(static_cast<int>(v));
  f.components.resize(static_cast<std::size_t>(x->dimension() + 1));
  for (int d = 0; d <= x->dimension(); ++d) {
    for (const auto& s : x->simplices(d)) f.components[d].push_back(x->orbits().identity(s.orbit));
  }
  return f;
}

EquivariantSelfMap subdivide_map(const EquivariantSelfMap& f,
                                 const std::shared_ptr<const LabeledComplex>& subdivided) {
  const LabeledComplex& x = *f.space;
  const auto position = flat_positions(x);
  std::vector<SimplexRef> simplex_at;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) simplex_at.push_back({d, static_cast<int>(i)});
  }
  if (subdivided->vertices().size() != simplex_at.size()) {
    throw ValidationError("subdivide_map: target is not the subdivision of the map's space");
  }

  EquivariantSelfMap out{subdivided, {}, {}};
  for (SimplexRef s : simplex_at) {
    auto c = carrier(f, s);
    if (!c) throw ValidationError("subdivide_map: map is not simplicial");
    out.vertex_map.push_back(position[c->dim][c->index]);
  }
  out.components.resize(static_cast<std::size_t>(subdivided->dimension() + 1));
  for (int d = 0; d <= subdivided->dimension(); ++d) {
    for (const auto& s : subdivided->simplices(d)) {
      const SimplexRef top = simplex_at.at(s.vertices.back());
      out.components[d].push_back(f.components[top.dim][top.index]);
    }
  }
  return out;
}

}  // namespace eqcell
