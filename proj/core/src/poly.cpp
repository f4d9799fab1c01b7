#include "dunkl_forge/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dunkl_forge/errors.hpp"

namespace dforge {

MultiPoly MultiPoly::constant(std::size_t nvars, const Scalar& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t j) {
  if (j >= nvars) throw DimensionMismatch("variable index out of range");
  Exponent e(nvars, 0);
  e[j] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& exp, const Scalar& c) {
  MultiPoly p(exp.size());
  p.add_term(exp, c);
  return p;
}

int MultiPoly::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto v : e) d += v;
    best = std::max(best, d);
  }
  return best;
}

bool MultiPoly::is_homogeneous() const {
  const int d = total_degree();
  for (const auto& [e, c] : terms_) {
    int t = 0;
    for (auto v : e) t += v;
    if (t != d) return false;
  }
  return true;
}

Scalar MultiPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Scalar() : it->second;
}

void MultiPoly::add_term(const Exponent& exp, const Scalar& c) {
  if (exp.size() != nvars_) throw DimensionMismatch("exponent length does not match nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o, const char* what) const {
  if (nvars_ != o.nvars_) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + " variables");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o, "subtract");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b, "multiply");
  MultiPoly r(a.nvars_);
  Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        const int d = ea[i] + eb[i];
        if (d > kMaxDegreePerVariable) throw BudgetExceeded("polynomial degree exceeds the per-variable bound");
        e[i] = static_cast<std::uint8_t>(d);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) return false;
  return (a - b).is_zero();
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(nvars_, Scalar(1));
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::partial_derivative(std::size_t j) const {
  if (j >= nvars_) throw DimensionMismatch("derivative index out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exponent d = e;
    --d[j];
    r.add_term(d, c * Scalar(static_cast<long>(e[j])));
  }
  return r;
}

Scalar MultiPoly::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) throw DimensionMismatch("evaluation point has wrong dimension");
  Scalar total;
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::in_field(const Field& field) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c.in_field(field));
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << '(' << it->second << ')';
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*x" << (i + 1);
      if (it->first[i] > 1) os << '^' << static_cast<int>(it->first[i]);
    }
  }
  return os.str();
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

MultiPoly LinearForm::to_poly() const {
  MultiPoly p(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    Exponent e(coeffs_.size(), 0);
    e[j] = 1;
    p.add_term(e, coeffs_[j]);
  }
  return p;
}

MultiPoly act_by_matrix(const MultiPoly& p, const Matrix& g, bool conjugate) {
  const std::size_t n = p.nvars();
  if (g.rows() != n || g.cols() != n) throw DimensionMismatch("act_by_matrix: matrix size does not match nvars");
  // image[i] = sum_k x_k g_{k i}
  std::vector<std::vector<MultiPoly>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiPoly lin(n);
    for (std::size_t k = 0; k < n; ++k) {
      Exponent e(n, 0);
      e[k] = 1;
      lin.add_term(e, conjugate ? g(k, i).conj() : g(k, i));
    }
    powers[i].push_back(MultiPoly::constant(n, Scalar(1)));
    powers[i].push_back(std::move(lin));
  }
  MultiPoly result(n);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      if (e[i] > 0) term = term * powers[i][e[i]];
    }
    result += term;
  }
  return result;
}

MultiPoly divide_by_linear(const MultiPoly& p, const LinearForm& l) {
  if (l.nvars() != p.nvars()) throw DimensionMismatch("divide_by_linear: form and polynomial disagree on nvars");
  std::size_t pivot = l.nvars();
  for (std::size_t j = 0; j < l.nvars(); ++j) {
    if (!l[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == l.nvars()) throw NotDivisible("division by the zero linear form");
  const Scalar inv = l[pivot].inverse();
  const MultiPoly divisor = l.to_poly();

  // Order with the pivot variable first; the divisor's leading term is then x_pivot.
  auto before = [pivot](const Exponent& a, const Exponent& b) {
    if (a[pivot] != b[pivot]) return a[pivot] < b[pivot];
    return a < b;
  };

  MultiPoly rem = p;
  MultiPoly quot(p.nvars());
  while (!rem.is_zero()) {
    auto lead = rem.terms().begin();
    for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
      if (before(lead->first, it->first)) lead = it;
    }
    if (lead->first[pivot] == 0) {
      throw NotDivisible("remainder " + rem.to_string() + " is left after dividing by " + divisor.to_string());
    }
    Exponent e = lead->first;
    --e[pivot];
    const MultiPoly step = MultiPoly::monomial(e, lead->second * inv);
    quot += step;
    rem -= divisor * step;
  }
  if (!(divisor * quot == p)) throw NotDivisible("quotient failed the multiply-back check");
  return quot;
}

std::vector<Exponent> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  for (int d = 0; d <= degree; ++d) {
    // Enumerate compositions of d into nvars parts, lexicographically descending.
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
      if (i + 1 == nvars) {
        e[i] = static_cast<std::uint8_t>(left);
        out.push_back(e);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[i] = static_cast<std::uint8_t>(v);
        self(self, i + 1, left - v);
      }
    };
    if (nvars == 0) {
      if (d == 0) out.push_back(e);
      continue;
    }
    rec(rec, 0, d);
  }
  return out;
}

}  // namespace dforge
