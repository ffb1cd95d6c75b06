#include "eqcell/isotropy.hpp"

#include <set>
#include <sstream>

namespace eqcell {

namespace {

void axpy(std::map<MorId, Integer>& y, const Integer& k, const std::map<MorId, Integer>& x) {
  if (k == 0) return;
  for (const auto& [m, c] : x) {
    auto [it, inserted] = y.try_emplace(m, 0);
    it->second += k * c;
    if (it->second == 0) y.erase(it);
  }
}

// Floor division for a nonzero divisor.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// s*a + t*b = g >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

}  // namespace

IsotropyElement IsotropyElement::generator(MorId m, Integer coeff) {
  IsotropyElement e;
  e.add_term(m, coeff);
  return e;
}

Integer IsotropyElement::coefficient(MorId m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void IsotropyElement::add_term(MorId m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

IsotropyElement& IsotropyElement::operator+=(const IsotropyElement& o) {
  axpy(terms_, 1, o.terms_);
  return *this;
}

IsotropyElement& IsotropyElement::operator-=(const IsotropyElement& o) {
  axpy(terms_, -1, o.terms_);
  return *this;
}

IsotropyElement& IsotropyElement::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= k;
  }
  return *this;
}

IsotropyElement IsotropyElement::operator-() const {
  IsotropyElement out = *this;
  out *= -1;
  return out;
}

void MatrixOverI::add(int row, int col, const IsotropyElement& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries.try_emplace({row, col});
  it->second += value;
  if (it->second.is_zero()) entries.erase(it);
}

const IsotropyElement* MatrixOverI::at(int row, int col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------

IsotropyRing::IsotropyRing(std::shared_ptr<const OrbitCategory> oc) : oc_(std::move(oc)) {
  const OrbitCategory& o = *oc_;
  std::set<std::map<MorId, Integer>> relations;
  for (MorId f = 0; f < static_cast<MorId>(o.morphism_count()); ++f) {
    for (MorId g : o.morphisms_into(o.dom(f))) {
      std::map<MorId, Integer> rel;
      rel[o.compose(f, g)] += 1;
      if (o.dom(g) == o.cod(f)) {
        const MorId gf = o.compose(g, f);
        rel[gf] -= 1;
        if (rel[gf] == 0) rel.erase(gf);
      }
      if (!rel.empty()) relations.insert(std::move(rel));
    }
  }
  for (const auto& rel : relations) insert_relation(rel);

  for (MorId m = 0; m < static_cast<MorId>(o.morphism_count()); ++m) {
    auto it = rows_.find(m);
    if (it == rows_.end()) {
      free_generators_.push_back(m);
    } else if (abs(it->second.entries.at(m)) != 1) {
      torsion_.emplace_back(m, abs(it->second.entries.at(m)));
    }
  }

  auto orbit_size = [&](int t) {
    std::size_t n = 0;
    const FinFunctor& f = *o.orbit(t).functor;
    for (std::size_t d = 0; d < o.base().object_count(); ++d) n += f.size(static_cast<int>(d));
    return n;
  };
  std::map<MorId, int> smallest;
  for (MorId m = 0; m < static_cast<MorId>(o.morphism_count()); ++m) {
    if (!o.is_endomorphism(m)) continue;
    std::map<MorId, Integer> v{{m, 1}};
    reduce_in_place(v);
    if (v.size() != 1 || v.begin()->second != 1) {
      throw InternalError("endomorphism does not reduce to a basis class");
    }
    const MorId generator = v.begin()->first;
    const int t = o.dom(m);
    auto [it, inserted] = smallest.emplace(generator, t);
    const int best = it->second;
    if (!inserted && (orbit_size(t) < orbit_size(best) || (orbit_size(t) == orbit_size(best) && t < best))) {
      it->second = t;
    }
  }
  for (const auto& [generator, t] : smallest) generator_class_[generator] = o.class_of(t);
}

UDVector IsotropyRing::ab_augmentation(const AbIClass& c) const {
  UDVector out = oc_->zero_vector();
  for (const auto& [m, coeff] : c.representative.terms()) {
    auto it = generator_class_.find(m);
    if (it == generator_class_.end()) {
      throw InternalError("Ab(I) representative is not supported on basis generators");
    }
    out[static_cast<std::size_t>(it->second)] += coeff;
  }
  return out;
}

void IsotropyRing::insert_relation(std::map<MorId, Integer> v) {
  while (!v.empty()) {
    const MorId p = v.rbegin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      if (v.rbegin()->second < 0) {
        for (auto& [m, c] : v) c = -c;
      }
      rows_.emplace(p, EchelonRow{p, std::move(v)});
      return;
    }
    EchelonRow& row = it->second;
    const Integer a = row.entries.at(p);
    const Integer b = v.at(p);
    if (b % a == 0) {
      axpy(v, -(b / a), row.entries);
      continue;
    }
    Integer g, s, t;
    extended_gcd(a, b, g, s, t);
    std::map<MorId, Integer> merged;
    axpy(merged, s, row.entries);
    axpy(merged, t, v);
    std::map<MorId, Integer> rest;
    axpy(rest, b / g, row.entries);
    axpy(rest, -(a / g), v);
    row.entries = std::move(merged);
    v = std::move(rest);
  }
}

void IsotropyRing::reduce_in_place(std::map<MorId, Integer>& v) const {
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    const Integer q = floor_div(it->second, row.entries.at(pivot));
    axpy(v, -q, row.entries);
  }
}

IsotropyElement IsotropyRing::multiply(const IsotropyElement& a, const IsotropyElement& b) const {
  IsotropyElement out;
  for (const auto& [f, x] : a.terms()) {
    for (const auto& [g, y] : b.terms()) {
      if (oc_->dom(f) != oc_->cod(g)) continue;
      out.add_term(oc_->compose(f, g), x * y);
    }
  }
  return out;
}

IsotropyElement IsotropyRing::unit() const {
  IsotropyElement out;
  for (std::size_t t = 0; t < oc_->orbit_count(); ++t) out.add_term(oc_->identity(static_cast<int>(t)), 1);
  return out;
}

IsotropyElement IsotropyRing::idempotent(int t) const {
  return IsotropyElement::generator(oc_->identity(t));
}

UDVector IsotropyRing::augmentation(const IsotropyElement& a) const {
  UDVector out = oc_->zero_vector();
  for (const auto& [m, c] : a.terms()) {
    if (oc_->is_endomorphism(m)) out[oc_->class_of(oc_->dom(m))] += c;
  }
  return out;
}

AbIClass IsotropyRing::reduce(const IsotropyElement& a) const {
  std::map<MorId, Integer> v = a.terms();
  reduce_in_place(v);
  AbIClass out;
  for (const auto& [m, c] : v) out.representative.add_term(m, c);
  return out;
}

AbIClass IsotropyRing::add(const AbIClass& a, const AbIClass& b) const {
  return reduce(a.representative + b.representative);
}

AbIClass IsotropyRing::scale(const Integer& k, const AbIClass& a) const {
  return reduce(k * a.representative);
}

AbIClass IsotropyRing::hs_rank(const std::vector<std::pair<int, Integer>>& module) const {
  IsotropyElement sum;
  for (const auto& [t, mult] : module) sum.add_term(oc_->identity(t), mult);
  return reduce(sum);
}

AbIClass IsotropyRing::hs_trace(const MatrixOverI& m) const {
  if (m.rows != m.cols) throw ValidationError("Hattori-Stallings trace of a non-square matrix");
  IsotropyElement diag;
  for (const auto& [pos, value] : m.entries) {
    if (pos.first == pos.second) diag += value;
  }
  return reduce(diag);
}

MatrixOverI IsotropyRing::multiply(const MatrixOverI& a, const MatrixOverI& b) const {
  if (a.cols != b.rows) throw ValidationError("matrix dimensions do not match");
  std::map<int, std::vector<std::pair<int, const IsotropyElement*>>> b_rows;
  for (const auto& [pos, value] : b.entries) b_rows[pos.first].emplace_back(pos.second, &value);
  MatrixOverI out{a.rows, b.cols, {}};
  for (const auto& [pos, value] : a.entries) {
    auto it = b_rows.find(pos.second);
    if (it == b_rows.end()) continue;
    for (const auto& [col, rhs] : it->second) out.add(pos.first, col, multiply(value, *rhs));
  }
  return out;
}

bool IsotropyRing::supported(const MatrixOverI& m) const {
  for (const auto& [pos, value] : m.entries) {
    const int row_orbit = m.rows.at(pos.first).orbit;
    const int col_orbit = m.cols.at(pos.second).orbit;
    for (const auto& [mor, c] : value.terms()) {
      if (oc_->dom(mor) != col_orbit || oc_->cod(mor) != row_orbit) return false;
    }
  }
  return true;
}

std::string IsotropyRing::format(const IsotropyElement& a) const {
  if (a.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    out << abs(c) << "·" << oc_->morphism_name(m);
  }
  return out.str();
}

}  // namespace eqcell
