#include "eqcell/lefschetz.hpp"

#include <algorithm>

namespace eqcell {

namespace {

void require_valid(const EquivariantSelfMap& f) {
  if (auto r = validate_map(f); !r) throw ValidationError("invalid map: " + r.message);
}

}  // namespace

UDVector lefschetz_number(const EquivariantSelfMap& f, const std::shared_ptr<const IsotropyRing>& ring) {
  require_valid(f);
  if (&ring->orbits() != &f.space->orbits()) {
    throw ValidationError("isotropy ring is built on a different orbit category");
  }
  auto coefficients = std::make_shared<const CoefficientSystem>(CoefficientSystem::isotropy(ring));
  const ChainComplex c = build_chain_complex(f.space, coefficients);
  const ChainMap map = induced_chain_map(f, c);
  AbIClass total;
  for (int k = 0; k <= c.top_degree(); ++k) {
    total = ring->add(total, ring->scale(k % 2 == 0 ? 1 : -1, ring->hs_trace(map.degree_over_i[k])));
  }
  return ring->ab_augmentation(total);
}

int invariant_type(const EquivariantSelfMap& f, SimplexRef s, const IsotropyRing& ring) {
  if (carrier(f, s) != s) throw ValidationError("simplex is not invariant");
  const MorId u = f.components.at(static_cast<std::size_t>(s.dim)).at(static_cast<std::size_t>(s.index));
  const AbIClass c = ring.reduce(IsotropyElement::generator(u));
  if (c.representative.terms().size() != 1) throw InternalError("endomorphism class is not a basis class");
  return ring.ab_generator_class(c.representative.terms().begin()->first);
}

LefschetzReport invariant_orbit_report(const EquivariantSelfMap& f,
                                       const std::shared_ptr<const IsotropyRing>& ring) {
  LefschetzReport report;
  report.lambda = lefschetz_number(f, ring);
  const LabeledComplex& x = *f.space;
  const OrbitCategory& oc = x.orbits();
  report.invariant_simplices.resize(oc.class_count());
  report.disjoint_image.assign(oc.class_count(), true);
  report.closed_disjoint.assign(oc.class_count(), true);

  for (int d = 0; d <= x.dimension(); ++d) {
    for (std::size_t i = 0; i < x.simplices(d).size(); ++i) {
      const SimplexRef ref{d, static_cast<int>(i)};
      const Simplex& s = x.simplex(ref);
      const SimplexRef image = *carrier(f, ref);
      if (image == ref) {
        const int type = invariant_type(f, ref, *ring);
        report.invariant_simplices[type].push_back(s.id);
        report.disjoint_image[type] = false;
      }
      const auto& image_vertices = x.simplex(image).vertices;
      for (int v : s.vertices) {
        if (std::binary_search(image_vertices.begin(), image_vertices.end(), v)) {
          report.closed_disjoint[oc.class_of(s.orbit)] = false;
          break;
        }
      }
    }
  }
  for (std::size_t m = 0; m < oc.class_count(); ++m) {
    if (!report.disjoint_image[m]) report.closed_disjoint[m] = false;
  }
  return report;
}

Integer ordinary_lefschetz(const EquivariantSelfMap& f) {
  require_valid(f);
  auto coefficients =
      std::make_shared<const CoefficientSystem>(CoefficientSystem::constant(f.space->orbits_ptr()));
  const ChainComplex c = build_chain_complex(f.space, coefficients);
  const ChainMap map = induced_chain_map(f, c);
  Integer total = 0;
  for (int k = 0; k <= c.top_degree(); ++k) {
    Integer trace = 0;
    for (std::size_t g = 0; g < c.generators[k].size(); ++g) trace += map.degree[k].at(g, g);
    total += (k % 2 == 0) ? trace : Integer(-trace);
  }
  return total;
}

TheoremCheck theorem_check(const EquivariantSelfMap& f, const std::shared_ptr<const IsotropyRing>& ring) {
  TheoremCheck check;
  check.report = invariant_orbit_report(f, ring);
  for (std::size_t m = 0; m < check.report.lambda.size(); ++m) {
    if (check.report.disjoint_image[m] && check.report.lambda[m] != 0) {
      check.violations.push_back(static_cast<int>(m));
      check.passed = false;
    }
  }
  return check;
}

}  // namespace eqcell
