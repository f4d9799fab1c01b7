#include "dunkl_forge/scalar.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "dunkl_forge/errors.hpp"

namespace dforge {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Long division of integer polynomials (low-to-high) by a monic divisor.
std::vector<long long> divide_monic(std::vector<long long> num, const std::vector<long long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

// Reduces sum_k c[k] z^k (any length) to the power basis of Q(zeta_m).
std::vector<mpq_class> reduce_cyclotomic(std::vector<mpq_class> c, int m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  if (c.size() > static_cast<std::size_t>(m)) {
    // z^m = 1
    std::vector<mpq_class> folded(m);
    for (std::size_t k = 0; k < c.size(); ++k) folded[k % m] += c[k];
    c = std::move(folded);
  }
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    const mpq_class lead = c[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) c[i - deg + j] -= lead * static_cast<long>(phi[j]);
    }
  }
  c.resize(deg);
  return c;
}

}  // namespace

Field Field::cyclotomic(int m) {
  if (m < 1) throw ParseError("cyclotomic conductor must be positive");
  return {FieldKind::Cyclotomic, m};
}

std::string Field::name() const {
  switch (kind) {
    case FieldKind::Rational:
      return "rational";
    case FieldKind::Gaussian:
      return "gaussian";
    case FieldKind::Cyclotomic:
      return "cyclotomic:" + std::to_string(conductor);
    case FieldKind::Float:
      return "float";
  }
  return "?";
}

Field Field::parse(const std::string& text) {
  if (text == "rational") return rational();
  if (text == "gaussian") return gaussian();
  if (text == "float") return floating();
  const std::string prefix = "cyclotomic:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(text.substr(prefix.size()), &used);
      if (used + prefix.size() != text.size()) throw ParseError("");
      return cyclotomic(m);
    } catch (const std::exception&) {
      throw ParseError("bad cyclotomic field '" + text + "'");
    }
  }
  throw ParseError("unknown scalar field '" + text + "'");
}

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::vector<long long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    // Divisors are filled in ascending order so every proper divisor of d is cached.
    if (!cache.contains(d)) {
      std::vector<long long> sub(d + 1, 0);
      sub[0] = -1;
      sub[d] = 1;
      for (int e = 1; e < d; ++e) {
        if (d % e == 0) sub = divide_monic(sub, cache.at(e));
      }
      cache.emplace(d, std::move(sub));
    }
    poly = divide_monic(poly, cache.at(d));
  }
  return cache.emplace(m, std::move(poly)).first->second;
}

Scalar::Scalar(mpq_class value) : conductor_(1), coeffs_{std::move(value)} { coeffs_[0].canonicalize(); }

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) { return cyclotomic(4, {re, im}); }

Scalar Scalar::zeta(int m, long k) {
  std::vector<mpq_class> c(m);
  c[((k % m) + m) % m] = 1;
  return cyclotomic(m, std::move(c));
}

Scalar Scalar::cyclotomic(int m, std::vector<mpq_class> coeffs) {
  if (m < 1) throw std::domain_error("cyclotomic conductor must be positive");
  for (auto& q : coeffs) q.canonicalize();
  Scalar s;
  s.conductor_ = m;
  s.coeffs_ = reduce_cyclotomic(std::move(coeffs), m);
  return s;
}

Scalar Scalar::from_complex(std::complex<double> z) {
  Scalar s;
  s.conductor_ = 0;
  s.coeffs_.clear();
  s.value_ = z;
  return s;
}

bool Scalar::is_zero() const {
  if (is_float()) return std::abs(value_) <= kFloatTolerance;
  for (const auto& q : coeffs_) {
    if (q != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const { return *this == Scalar(1); }

bool Scalar::is_rational() const {
  if (is_float()) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

mpq_class Scalar::as_rational() const {
  if (!is_rational()) throw FieldMismatch("value " + to_string() + " is not rational");
  return coeffs_[0];
}

Scalar Scalar::conj() const {
  if (is_float()) return from_complex(std::conj(value_));
  std::vector<mpq_class> c(conductor_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[(conductor_ - static_cast<int>(k)) % conductor_] += coeffs_[k];
  return cyclotomic(conductor_, std::move(c));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_float()) return from_complex(1.0 / value_);
  const std::size_t n = coeffs_.size();
  if (n == 1) return Scalar(mpq_class(1) / coeffs_[0]);
  // Solve (multiplication by this) * x = 1 in the power basis.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  Scalar basis = Scalar(1).embed(conductor_);
  const Scalar z = zeta(conductor_);
  for (std::size_t j = 0; j < n; ++j) {
    const Scalar col = *this * basis;
    for (std::size_t i = 0; i < n; ++i) a[i][j] = col.coeffs_[i];
    basis *= z;
  }
  a[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    const mpq_class inv = 1 / a[col][col];
    for (std::size_t k = col; k <= n; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return cyclotomic(conductor_, std::move(x));
}

std::complex<double> Scalar::to_complex() const {
  if (is_float()) return value_;
  std::complex<double> z{};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    z += coeffs_[k].get_d() * std::polar(1.0, kTwoPi * static_cast<double>(k) / conductor_);
  }
  return z;
}

Scalar Scalar::embed(int m) const {
  if (is_float()) return *this;
  if (m == conductor_) return *this;
  if (m % conductor_ != 0) throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(conductor_) + ") into Q(zeta_" + std::to_string(m) + ")");
  std::vector<mpq_class> c(m);
  const int step = m / conductor_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[(k * step) % m] += coeffs_[k];
  return cyclotomic(m, std::move(c));
}

Scalar Scalar::in_field(const Field& field) const {
  if (!field.exact()) return from_complex(to_complex());
  if (is_float()) throw FieldMismatch("float value " + to_string() + " in exact field " + field.name());
  if (field.conductor % conductor_ != 0) {
    // A value may be written with a larger conductor than it needs (e.g. -1 as zeta_2).
    if (is_rational()) return Scalar(coeffs_[0]).embed(field.conductor);
    throw FieldMismatch("value " + to_string() + " does not lie in " + field.name());
  }
  return embed(field.conductor);
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.conductor_ == b.conductor_) return;
  if (a.is_float() || b.is_float()) {
    if (!a.is_float()) a = from_complex(a.to_complex());
    if (!b.is_float()) b = from_complex(b.to_complex());
    return;
  }
  const int m = std::lcm(a.conductor_, b.conductor_);
  a = a.embed(m);
  b = b.embed(m);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  Scalar rhs = o;
  align(*this, rhs);
  if (is_float()) {
    value_ += rhs.value_;
  } else {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar rhs = o;
  align(*this, rhs);
  if (is_float()) {
    value_ *= rhs.value_;
    return *this;
  }
  if (coeffs_.size() == 1) {
    coeffs_[0] *= rhs.coeffs_[0];
    return *this;
  }
  std::vector<mpq_class> prod(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce_cyclotomic(std::move(prod), conductor_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.is_float()) {
    r.value_ = -r.value_;
  } else {
    for (auto& q : r.coeffs_) q = -q;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_float() || b.is_float()) {
    const auto x = a.to_complex();
    const auto y = b.to_complex();
    const double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= Scalar::kFloatTolerance * scale;
  }
  Scalar x = a;
  Scalar y = b;
  Scalar::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (is_float()) {
    os.precision(17);
    os << '(' << value_.real() << ',' << value_.imag() << ')';
    return os.str();
  }
  if (conductor_ == 1 || is_rational()) return coeffs_[0].get_str();
  const char* unit = conductor_ == 4 ? "i" : "z";
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    std::string coef = c.get_str();
    if (!first && c > 0) os << '+';
    if (k == 0) {
      os << coef;
    } else {
      if (c == 1) {
      } else if (c == -1) {
        os << '-';
      } else {
        os << coef << '*';
      }
      os << unit;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace dforge
