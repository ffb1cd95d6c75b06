#pragma once

#include "eqcell/chains.hpp"
#include "eqcell/document.hpp"

#include <memory>
#include <string>

namespace eqtest {

inline std::string fixture_path(const std::string& name) { return std::string(EQCELL_FIXTURE_DIR) + "/" + name; }
inline std::string data_path(const std::string& name) { return std::string(EQCELL_TEST_DATA_DIR) + "/" + name; }

inline eqcell::Document fixture(const std::string& name) { return eqcell::load_document(fixture_path(name)); }

inline std::shared_ptr<const eqcell::IsotropyRing> ring_of(const std::shared_ptr<const eqcell::OrbitCategory>& oc) {
  return std::make_shared<const eqcell::IsotropyRing>(oc);
}

inline std::shared_ptr<const eqcell::CoefficientSystem> constant_system(
    const std::shared_ptr<const eqcell::OrbitCategory>& oc) {
  return std::make_shared<const eqcell::CoefficientSystem>(eqcell::CoefficientSystem::constant(oc));
}

inline std::shared_ptr<const eqcell::CoefficientSystem> isotropy_system(
    const std::shared_ptr<const eqcell::IsotropyRing>& ring) {
  return std::make_shared<const eqcell::CoefficientSystem>(eqcell::CoefficientSystem::isotropy(ring));
}

inline eqcell::UDVector ud(std::initializer_list<long long> values) {
  std::vector<eqcell::Integer> v;
  for (long long x : values) v.emplace_back(x);
  return eqcell::UDVector(std::move(v));
}

}  // namespace eqtest
