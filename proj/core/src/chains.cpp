#include "eqcell/chains.hpp"

#include <algorithm>

namespace eqcell {

CoefficientSystem CoefficientSystem::constant(std::shared_ptr<const OrbitCategory> oc) {
  CoefficientSystem m;
  m.kind_ = Kind::Constant;
  m.ranks_.assign(oc->orbit_count(), 1);
  for (std::size_t f = 0; f < oc->morphism_count(); ++f) {
    SparseMatrix one(1, 1);
    one.add(0, 0, 1);
    m.maps_.push_back(std::move(one));
  }
  m.oc_ = std::move(oc);
  return m;
}

CoefficientSystem CoefficientSystem::isotropy(std::shared_ptr<const IsotropyRing> ring) {
  CoefficientSystem m;
  m.kind_ = Kind::Isotropy;
  m.oc_ = ring->orbits_ptr();
  m.ring_ = std::move(ring);
  const OrbitCategory& oc = *m.oc_;

  std::vector<int> position(oc.morphism_count(), -1);
  for (std::size_t t = 0; t < oc.orbit_count(); ++t) {
    auto basis = m.ring_->zeta_component(static_cast<int>(t));
    for (std::size_t k = 0; k < basis.size(); ++k) position[basis[k]] = static_cast<int>(k);
    m.ranks_.push_back(basis.size());
    m.bases_.push_back(std::move(basis));
  }
  for (MorId f = 0; f < static_cast<MorId>(oc.morphism_count()); ++f) {
    const int s = oc.dom(f);
    const int t = oc.cod(f);
    SparseMatrix left(m.ranks_[t], m.ranks_[s]);
    for (std::size_t k = 0; k < m.bases_[s].size(); ++k) {
      left.add(static_cast<std::size_t>(position[oc.compose(f, m.bases_[s][k])]), k, 1);
    }
    m.maps_.push_back(std::move(left));
  }
  return m;
}

CoefficientSystem CoefficientSystem::custom(std::shared_ptr<const OrbitCategory> oc,
                                            std::vector<std::size_t> ranks,
                                            std::vector<SparseMatrix> maps) {
  if (ranks.size() != oc->orbit_count() || maps.size() != oc->morphism_count()) {
    throw ValidationError("coefficient system: wrong number of ranks or maps");
  }
  CoefficientSystem m;
  m.kind_ = Kind::Custom;
  m.oc_ = std::move(oc);
  m.ranks_ = std::move(ranks);
  m.maps_ = std::move(maps);
  m.check_functorial();
  return m;
}

void CoefficientSystem::check_functorial() const {
  const OrbitCategory& oc = *oc_;
  const auto n = static_cast<MorId>(oc.morphism_count());
  for (MorId f = 0; f < n; ++f) {
    const SparseMatrix& mf = maps_[f];
    if (mf.rows() != ranks_[oc.cod(f)] || mf.cols() != ranks_[oc.dom(f)]) {
      throw ValidationError("coefficient system: map of " + oc.morphism_name(f) + " has wrong shape");
    }
  }
  for (std::size_t t = 0; t < oc.orbit_count(); ++t) {
    const SparseMatrix& id = maps_[oc.identity(static_cast<int>(t))];
    SparseMatrix expected(ranks_[t], ranks_[t]);
    for (std::size_t k = 0; k < ranks_[t]; ++k) expected.add(k, k, 1);
    if (!(id == expected)) {
      throw ValidationError("coefficient system: identity of " + oc.orbit_name(static_cast<int>(t)) +
                            " does not act as the identity");
    }
  }
  for (MorId f = 0; f < n; ++f) {
    for (MorId g = 0; g < n; ++g) {
      if (oc.dom(f) != oc.cod(g)) continue;
      if (!(maps_[oc.compose(f, g)] == maps_[f] * maps_[g])) {
        throw ValidationError("coefficient system: not functorial at " + oc.morphism_name(f) + " ∘ " +
                              oc.morphism_name(g));
      }
    }
  }
}

const IsotropyRing& CoefficientSystem::ring() const {
  if (!ring_) throw ValidationError("coefficient system is not the isotropy system");
  return *ring_;
}

std::size_t ChainComplex::rank(int n) const {
  if (n < 0 || n > top_degree()) return 0;
  return generators[n].size();
}

// ---------------------------------------------------------------------------

ChainComplex build_chain_complex(std::shared_ptr<const LabeledComplex> x,
                                 std::shared_ptr<const CoefficientSystem> coefficients) {
  const CoefficientSystem& m = *coefficients;
  if (x->orbits_ptr().get() != &m.orbits()) {
    throw ValidationError("coefficient system is defined on a different orbit category");
  }
  const LabeledComplex& space = *x;
  const bool over_i = m.kind() == CoefficientSystem::Kind::Isotropy;
  ChainComplex c{x, std::move(coefficients), {}, {}, {}, {}};
  const int top = space.dimension();
  c.generators.resize(static_cast<std::size_t>(top + 1));
  c.block_offset.resize(static_cast<std::size_t>(top + 1));

  for (int n = 0; n <= top; ++n) {
    const auto simplices = space.simplices(n);
    for (std::size_t i = 0; i < simplices.size(); ++i) {
      c.block_offset[n].push_back(c.generators[n].size());
      for (std::size_t b = 0; b < m.rank(simplices[i].orbit); ++b) {
        c.generators[n].push_back({static_cast<int>(i), static_cast<int>(b)});
      }
    }
  }

  auto labels = [&](int n) {
    std::vector<CellLabel> out;
    for (const auto& s : space.simplices(n)) out.push_back({s.id, s.orbit});
    return out;
  };

  for (int n = 0; n <= top; ++n) {
    SparseMatrix d(n == 0 ? 0 : c.generators[n - 1].size(), c.generators[n].size());
    MatrixOverI d_i{n == 0 ? std::vector<CellLabel>{} : labels(n - 1), labels(n), {}};
    if (n > 0) {
      const auto simplices = space.simplices(n);
      for (std::size_t i = 0; i < simplices.size(); ++i) {
        const SimplexRef ref{n, static_cast<int>(i)};
        for (int k = 0; k <= n; ++k) {
          const SimplexRef face = *space.facet(ref, k);
          const MorId r = simplices[i].restrictions[k];
          const Integer sign = (k % 2 == 0) ? 1 : -1;
          const SparseMatrix& block = m.map(r);
          for (std::size_t col = 0; col < block.cols(); ++col) {
            for (const auto& [row, v] : block.column(col)) {
              d.add(c.block_offset[n - 1][face.index] + row, c.block_offset[n][i] + col, sign * v);
            }
          }
          if (over_i) d_i.add(face.index, static_cast<int>(i), IsotropyElement::generator(r, sign));
        }
      }
    }
    c.boundary.push_back(std::move(d));
    if (over_i) c.boundary_over_i.push_back(std::move(d_i));
  }

  if (!boundary_squares_vanish(c)) throw InternalError("boundary does not square to zero");
  return c;
}

bool boundary_squares_vanish(const ChainComplex& c) {
  for (int n = 2; n <= c.top_degree(); ++n) {
    if (!(c.boundary[n - 1] * c.boundary[n]).is_zero()) return false;
    if (!c.boundary_over_i.empty() &&
        !c.coefficients->ring().multiply(c.boundary_over_i[n - 1], c.boundary_over_i[n]).is_zero()) {
      return false;
    }
  }
  return true;
}

std::vector<DegreeHomology> homology_from_boundaries(const std::vector<std::size_t>& ranks,
                                                     const std::vector<SparseMatrix>& boundaries) {
  const std::size_t top = ranks.size();
  std::vector<SmithInvariants> snf(top + 1);
  for (std::size_t n = 1; n < top; ++n) snf[n] = smith_invariants(boundaries[n]);
  std::vector<DegreeHomology> out(top);
  for (std::size_t n = 0; n < top; ++n) {
    const std::size_t outgoing = snf[n].rank;
    const std::size_t incoming = snf[n + 1].rank;
    if (outgoing + incoming > ranks[n]) throw InternalError("boundary ranks exceed chain rank");
    out[n].betti = ranks[n] - outgoing - incoming;
    out[n].torsion = snf[n + 1].torsion;
  }
  return out;
}

namespace {

// Restriction of a complex to the generators selected per degree.
std::vector<DegreeHomology> sub_homology(const ChainComplex& c,
                                         const std::vector<std::vector<std::size_t>>& keep) {
  const int top = c.top_degree();
  std::vector<std::vector<long>> local(static_cast<std::size_t>(top + 1));
  std::vector<std::size_t> ranks;
  for (int n = 0; n <= top; ++n) {
    local[n].assign(c.generators[n].size(), -1);
    for (std::size_t k = 0; k < keep[n].size(); ++k) local[n][keep[n][k]] = static_cast<long>(k);
    ranks.push_back(keep[n].size());
  }
  std::vector<SparseMatrix> boundaries{SparseMatrix(0, ranks.empty() ? 0 : ranks[0])};
  for (int n = 1; n <= top; ++n) {
    SparseMatrix d(ranks[n - 1], ranks[n]);
    for (std::size_t k = 0; k < keep[n].size(); ++k) {
      for (const auto& [row, v] : c.boundary[n].column(keep[n][k])) {
        if (local[n - 1][row] < 0) throw InternalError("boundary leaves the selected summand");
        d.add(static_cast<std::size_t>(local[n - 1][row]), k, v);
      }
    }
    boundaries.push_back(std::move(d));
  }
  return homology_from_boundaries(ranks, boundaries);
}

}  // namespace

HomologyResult homology(const ChainComplex& c) {
  HomologyResult result;
  const int top = c.top_degree();
  if (c.coefficients->kind() != CoefficientSystem::Kind::Isotropy) {
    std::vector<std::size_t> ranks;
    for (int n = 0; n <= top; ++n) ranks.push_back(c.generators[n].size());
    result.degrees = homology_from_boundaries(ranks, c.boundary);
    return result;
  }

  // Left multiplication preserves the domain of basis morphisms, so the
  // complex is the direct sum of its domain-S summands.
  const OrbitCategory& oc = c.coefficients->orbits();
  const LabeledComplex& x = *c.space;
  result.graded_by_domain = true;
  result.degrees.resize(static_cast<std::size_t>(top + 1));
  for (auto& d : result.degrees) d.betti_by_domain.assign(oc.orbit_count(), 0);
  for (std::size_t s = 0; s < oc.orbit_count(); ++s) {
    std::vector<std::vector<std::size_t>> keep(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= top; ++n) {
      for (std::size_t g = 0; g < c.generators[n].size(); ++g) {
        const auto& gen = c.generators[n][g];
        const int label = x.simplices(n)[gen.simplex].orbit;
        if (oc.dom(c.coefficients->basis(label)[gen.basis]) == static_cast<int>(s)) keep[n].push_back(g);
      }
    }
    const auto part = sub_homology(c, keep);
    for (int n = 0; n <= top; ++n) {
      result.degrees[n].betti += part[n].betti;
      result.degrees[n].betti_by_domain[s] = part[n].betti;
      result.degrees[n].torsion.insert(result.degrees[n].torsion.end(), part[n].torsion.begin(),
                                       part[n].torsion.end());
    }
  }
  for (auto& d : result.degrees) std::sort(d.torsion.begin(), d.torsion.end());
  return result;
}

std::vector<SparseMatrix> delta_boundaries(const DeltaComplex& d) {
  std::vector<SparseMatrix> out;
  for (std::size_t n = 0; n < d.cells.size(); ++n) {
    SparseMatrix b(n == 0 ? 0 : d.cells[n - 1].size(), d.cells[n].size());
    if (n > 0) {
      for (std::size_t c = 0; c < d.cells[n].size(); ++c) {
        for (std::size_t i = 0; i < d.faces[n][c].size(); ++i) {
          b.add(static_cast<std::size_t>(d.faces[n][c][i]), c, i % 2 == 0 ? 1 : -1);
        }
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<DegreeHomology> delta_homology(const DeltaComplex& d) {
  return homology_from_boundaries(d.counts(), delta_boundaries(d));
}

UDVector chain_chi_hs(const ChainComplex& c) {
  if (c.coefficients->kind() != CoefficientSystem::Kind::Isotropy) {
    throw ValidationError("chain-level Hattori-Stallings Euler characteristic needs isotropy coefficients");
  }
  const IsotropyRing& ring = c.coefficients->ring();
  AbIClass total;
  for (int n = 0; n <= c.top_degree(); ++n) {
    std::vector<std::pair<int, Integer>> module;
    for (const auto& s : c.space->simplices(n)) module.emplace_back(s.orbit, 1);
    total = ring.add(total, ring.scale(n % 2 == 0 ? 1 : -1, ring.hs_rank(module)));
  }
  return ring.ab_augmentation(total);
}

ChainMap induced_chain_map(const EquivariantSelfMap& f, const ChainComplex& c) {
  if (f.space != c.space) throw ValidationError("map and chain complex live on different spaces");
  const LabeledComplex& x = *c.space;
  const CoefficientSystem& m = *c.coefficients;
  const bool over_i = m.kind() == CoefficientSystem::Kind::Isotropy;
  ChainMap out;
  for (int n = 0; n <= c.top_degree(); ++n) {
    SparseMatrix fn(c.generators[n].size(), c.generators[n].size());
    std::vector<CellLabel> labels;
    for (const auto& s : x.simplices(n)) labels.push_back({s.id, s.orbit});
    MatrixOverI fi{labels, labels, {}};
    for (std::size_t i = 0; i < x.simplices(n).size(); ++i) {
      const SimplexRef ref{n, static_cast<int>(i)};
      const int sign = orientation_sign(f, ref);
      if (sign == 0) continue;
      auto target = carrier(f, ref);
      if (!target || target->dim != n) throw ValidationError("degenerate data inconsistency");
      const MorId u = f.components[n][i];
      const SparseMatrix& block = m.map(u);
      for (std::size_t col = 0; col < block.cols(); ++col) {
        for (const auto& [row, v] : block.column(col)) {
          fn.add(c.block_offset[n][target->index] + row, c.block_offset[n][i] + col, sign * v);
        }
      }
      if (over_i) fi.add(target->index, static_cast<int>(i), IsotropyElement::generator(u, sign));
    }
    out.degree.push_back(std::move(fn));
    if (over_i) out.degree_over_i.push_back(std::move(fi));
  }

  for (int n = 1; n <= c.top_degree(); ++n) {
    if (!(c.boundary[n] * out.degree[n] == out.degree[n - 1] * c.boundary[n])) {
      throw InternalError("induced map does not commute with the boundary in degree " + std::to_string(n));
    }
    if (over_i) {
      const IsotropyRing& ring = m.ring();
      const MatrixOverI lhs = ring.multiply(c.boundary_over_i[n], out.degree_over_i[n]);
      const MatrixOverI rhs = ring.multiply(out.degree_over_i[n - 1], c.boundary_over_i[n]);
      if (lhs.entries != rhs.entries) {
        throw InternalError("induced I-level map does not commute with the boundary in degree " +
                            std::to_string(n));
      }
    }
  }
  return out;
}

}  // namespace eqcell
