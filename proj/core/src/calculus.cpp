#include "dunkl_forge/calculus.hpp"

#include "dunkl_forge/errors.hpp"

namespace dforge {

GermVector GermVector::basis(Element s) {
  GermVector v;
  v.add(s, Scalar(1));
  return v;
}

Scalar GermVector::operator[](Element s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void GermVector::add(Element s, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

GermVector& GermVector::operator+=(const GermVector& o) {
  for (const auto& [s, c] : o.coeffs_) add(s, c);
  return *this;
}

GermVector& GermVector::operator-=(const GermVector& o) {
  for (const auto& [s, c] : o.coeffs_) add(s, -c);
  return *this;
}

GermVector& GermVector::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [s, v] : coeffs_) v *= c;
  return *this;
}

FunctionOnG FunctionOnG::delta(Element g) {
  FunctionOnG f;
  f.set(g, Scalar(1));
  return f;
}

FunctionOnG FunctionOnG::one(const GroupTable& table) {
  FunctionOnG f;
  for (auto g : table.elements()) f.set(g, Scalar(1));
  return f;
}

Scalar FunctionOnG::operator()(Element g) const {
  auto it = values_.find(g);
  return it == values_.end() ? Scalar() : it->second;
}

void FunctionOnG::set(Element g, const Scalar& v) {
  if (v.is_zero()) {
    values_.erase(g);
  } else {
    values_[g] = v;
  }
}

void GammaElement::add(Element g, const GermVector& theta) {
  if (theta.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, theta);
  if (!inserted) {
    it->second += theta;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar GammaElement::coefficient(Element g, Element s) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar() : it->second[s];
}

GammaElement& GammaElement::operator+=(const GammaElement& o) {
  for (const auto& [g, theta] : o.terms_) add(g, theta);
  return *this;
}

GammaElement& GammaElement::operator-=(const GammaElement& o) {
  for (const auto& [g, theta] : o.terms_) add(g, theta * Scalar(-1));
  return *this;
}

GermVector quantum_germ(const GroupTable& table, const SubsetS& S, Element g) {
  if (S.contains(g)) return GermVector::basis(g);
  GermVector v;
  if (g == table.identity()) {
    for (auto s : S) v.add(s, Scalar(-1));
  }
  return v;
}

GammaElement differential_delta(const GroupTable& table, const SubsetS& S, Element g) {
  GammaElement x;
  for (auto s : S) {
    const GermVector e = GermVector::basis(s);
    x.add(table.product(g, table.inverse(s)), e);
    x.add(g, e * Scalar(-1));
  }
  return x;
}

GermVector circ_action(const GermVector& theta, const FunctionOnG& b) {
  GermVector r;
  for (const auto& [s, c] : theta.coeffs()) r.add(s, c * b(s));
  return r;
}

GammaElement right_module_action(const GroupTable& table, const GammaElement& x, const FunctionOnG& b) {
  GammaElement r;
  for (const auto& [g, theta] : x.terms()) {
    GermVector shifted;
    for (const auto& [s, c] : theta.coeffs()) shifted.add(s, c * b(table.product(g, s)));
    r.add(g, shifted);
  }
  return r;
}

GammaElement left_module_action(const FunctionOnG& b, const GammaElement& x) {
  GammaElement r;
  for (const auto& [g, theta] : x.terms()) r.add(g, theta * b(g));
  return r;
}

GammaElement vacuum(const GroupTable& table, const SubsetS& S) {
  GermVector minus_e;
  for (auto s : S) minus_e.add(s, Scalar(1));
  GammaElement x;
  for (auto g : table.elements()) x.add(g, minus_e);
  return x;
}

GammaElement inner_derivation(const GroupTable& table, const SubsetS& S, Element g) {
  const GammaElement v = vacuum(table, S);
  const FunctionOnG d = FunctionOnG::delta(g);
  return right_module_action(table, v, d) - left_module_action(d, v);
}

std::vector<AdTerm> ad_coaction(const GroupTable& table, Element g) {
  std::vector<AdTerm> out;
  out.reserve(table.order());
  for (auto k : table.elements()) out.push_back({table.conjugate(k, g), k, Scalar(1)});
  return out;
}

std::pair<Element, Element> braid_sigma(const GroupTable& table, const SubsetS& S, Element g, Element h) {
  if (!S.contains(g) || !S.contains(h)) throw NotInS("braid_sigma arguments must lie in S");
  return {table.conjugate(g, h), g};
}

std::size_t braid_orbit_count(const GroupTable& table, const SubsetS& S) {
  const std::size_t n = S.size();
  std::vector<bool> seen(n * n, false);
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[i * n + j]) continue;
      ++orbits;
      std::size_t a = i;
      std::size_t b = j;
      while (!seen[a * n + b]) {
        seen[a * n + b] = true;
        const auto [g, h] = braid_sigma(table, S, S[a], S[b]);
        a = S.index_of(g);
        b = S.index_of(h);
      }
    }
  }
  return orbits;
}

std::size_t gamma_tilde_dim2(const GroupTable& table, const SubsetS& S) {
  return S.size() * S.size() - braid_orbit_count(table, S);
}

}  // namespace dforge
