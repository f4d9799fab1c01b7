#include "dunkl_forge/forms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dunkl_forge/errors.hpp"
#include "dunkl_forge/parallel.hpp"

namespace dforge {

namespace {

using CMatrix = std::vector<CVector>;  // row-major

CVector mat_vec(const CMatrix& m, const CVector& v) {
  CVector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

// Distance from v to span(basis), basis orthonormalized on the fly.
double distance_to_span(const CVector& v, const std::vector<CVector>& vectors) {
  std::vector<CVector> ortho;
  for (auto u : vectors) {
    for (const auto& q : ortho) {
      const cplx c = inner(q, u);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * q[i];
    }
    const double n = norm(u);
    if (n > 1e-12) {
      for (auto& x : u) x /= n;
      ortho.push_back(std::move(u));
    }
  }
  CVector r = v;
  for (const auto& q : ortho) {
    const cplx c = inner(q, r);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * q[i];
  }
  return norm(r);
}

// sin of the angle between two lines
double line_gap(const CVector& a, const CVector& b) {
  const double na = norm(a), nb = norm(b);
  const double cosv = std::abs(inner(a, b)) / (na * nb);
  return std::sqrt(std::max(0.0, 1.0 - cosv * cosv));
}

double covector_gap(const Covector& a, const Covector& b) {
  double diff = 0, scale = 0;
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    diff = std::max(diff, std::abs(a.c[i] - b.c[i]));
    scale = std::max({scale, std::abs(a.c[i]), std::abs(b.c[i])});
  }
  return scale > 0 ? diff / scale : 0.0;
}

Covector scaled(Covector v, cplx s) {
  for (auto& x : v.c) x *= s;
  return v;
}

// Pull-back of a covector field along x -> A x, evaluated at x: coefficient k is
// sum_j conj(A_jk) f_j(A x).
template <class F>
Covector pullback(const CMatrix& A, const CVector& x, F&& field) {
  const Covector at = field(mat_vec(A, x));
  Covector out{CVector(x.size())};
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t j = 0; j < x.size(); ++j) out.c[k] += std::conj(A[j][k]) * at.c[j];
  return out;
}

std::string point_label(std::size_t index) { return "sample " + std::to_string(index); }

}  // namespace

cplx TwoForm::operator()(std::size_t j, std::size_t k) const {
  if (j == k) return 0.0;
  return j < k ? upper_[index(j, k)] : -upper_[index(k, j)];
}

void TwoForm::add(std::size_t j, std::size_t k, cplx v) {
  if (j == k) return;
  if (j < k) {
    upper_[index(j, k)] += v;
  } else {
    upper_[index(k, j)] -= v;
  }
}

double TwoForm::norm() const {
  double s = 0;
  for (const auto& v : upper_) s += std::norm(v);
  return std::sqrt(s);
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
  if (o.n_ != n_) throw DimensionMismatch("two-form dimensions differ");
  for (std::size_t i = 0; i < upper_.size(); ++i) upper_[i] += o.upper_[i];
  return *this;
}

cplx inner(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner product of vectors of different length");
  cplx s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm(const CVector& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

CVector to_complex(const std::vector<Scalar>& v) {
  CVector out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.to_complex());
  return out;
}

CVector eigenline(const Matrix& s) {
  if (s.rows() != s.cols()) throw DimensionMismatch("eigenline needs a square matrix");
  const Matrix d = s - Matrix::identity(s.rows());
  if (d.rank() != 1) throw NotAReflection("rank(s - I) = " + std::to_string(d.rank()));
  CVector best;
  double best_norm = 0;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    const CVector col = to_complex(d.column(c));
    const double n = norm(col);
    if (n > best_norm) {
      best_norm = n;
      best = col;
    }
  }
  for (auto& x : best) x /= best_norm;
  return best;
}

Covector xi_eval(const CVector& alpha, const CVector& x) {
  const cplx den = inner(x, alpha);
  if (std::abs(den) < kSingularGuard * norm(x) * norm(alpha)) throw SingularPoint("x is orthogonal to the line");
  Covector out{CVector(alpha.size())};
  for (std::size_t j = 0; j < alpha.size(); ++j) out.c[j] = alpha[j] / den;
  return out;
}

TwoForm wedge(const Covector& a, const Covector& b) {
  if (a.c.size() != b.c.size()) throw DimensionMismatch("wedge of covectors of different length");
  const std::size_t n = a.c.size();
  TwoForm w(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) w.add(j, k, a.c[j] * b.c[k] - a.c[k] * b.c[j]);
  return w;
}

CyclicSumResult cyclic_sum(const std::vector<CVector>& lines, const CVector& x, const CVector& weights) {
  CyclicSumResult r{TwoForm(x.size())};
  if (lines.empty()) return r;
  std::vector<Covector> xi;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    xi.push_back(scaled(xi_eval(lines[i], x), weights.empty() ? cplx(1) : weights[i]));
  }
  for (std::size_t i = 0; i < xi.size(); ++i) {
    const TwoForm t = wedge(xi[i], xi[(i + 1) % xi.size()]);
    r.max_term = std::max(r.max_term, t.norm());
    r.sum += t;
  }
  return r;
}

DisplacementConfig make_displacement_config(std::shared_ptr<const GroupTable> group, SubsetS S,
                                            const CVector& class_values) {
  const auto classes = conjugacy_classes(*group);
  if (class_values.size() != classes.size()) throw ValidationError("one multiplicity per conjugacy class expected");
  CVector by_element(group->order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto g : classes[c]) by_element[g.id] = class_values[c];
  DisplacementConfig cfg{group, S, {}, {}, {}};
  const Matrix id = Matrix::identity(group->degree());
  for (auto s : S) {
    const Matrix d = group->rep(s) - id;
    if (d.rank() != 1) throw NotAReflection(group->label(s) + " is not a complex reflection");
    std::vector<Scalar> root;
    for (std::size_t c = 0; c < d.cols() && root.empty(); ++c) {
      auto col = d.column(c);
      if (std::any_of(col.begin(), col.end(), [](const Scalar& v) { return !v.is_zero(); })) root = std::move(col);
    }
    CVector unit = to_complex(root);
    const double n = norm(unit);
    for (auto& v : unit) v /= n;
    cfg.mu.push_back(std::move(unit));
    cfg.mu_exact.push_back(std::move(root));
    cfg.nu.push_back(by_element[s.id]);
  }
  return cfg;
}

Container container(const CyclicLine& line, const DisplacementConfig& cfg) {
  Container out;
  std::vector<CVector> vecs;
  for (auto p : line.points) vecs.push_back(cfg.mu.at(p));
  if (!cfg.mu_exact.empty() && std::all_of(line.points.begin(), line.points.end(), [&](std::size_t p) {
        return std::all_of(cfg.mu_exact[p].begin(), cfg.mu_exact[p].end(), [](const Scalar& s) { return s.is_exact(); });
      })) {
    std::vector<std::vector<Scalar>> exact;
    for (auto p : line.points) exact.push_back(cfg.mu_exact[p]);
    out.rank = vector_rank(exact);
    out.exact = true;
  }
  for (auto u : vecs) {
    for (const auto& q : out.basis) {
      const cplx c = inner(q, u);
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * q[i];
    }
    const double n = norm(u);
    if (n > 1e-9) {
      for (auto& x : u) x /= n;
      out.basis.push_back(std::move(u));
    }
  }
  if (!out.exact) out.rank = out.basis.size();
  return out;
}

CheckResult container_scan(const DisplacementConfig& cfg) {
  CheckResult r{.name = "container rank at most 2"};
  const CyclicSpace space = build_cyclic_space(*cfg.group, cfg.S);
  std::size_t worst = 0;
  bool all_exact = true;
  for (const auto& line : space.lines()) {
    const Container c = container(line, cfg);
    all_exact = all_exact && c.exact;
    worst = std::max(worst, c.rank);
    if (c.rank > 2 && r.passed()) {
      std::string w = "(";
      for (std::size_t i = 0; i < line.points.size(); ++i) w += (i ? ", " : "") + space.labels()[line.points[i]];
      r.fail(w + ") has rank " + std::to_string(c.rank));
    }
  }
  r.detail = std::to_string(space.lines().size()) + " lines, max rank " + std::to_string(worst) +
             (all_exact ? ", exact" : ", numeric");
  return r;
}

std::vector<std::vector<CVector>> numeric_rep(const GroupTable& table) {
  std::vector<std::vector<CVector>> out;
  for (auto g : table.elements()) {
    const Matrix& m = table.rep(g);
    CMatrix c(m.rows(), CVector(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t k = 0; k < m.cols(); ++k) c[r][k] = m(r, k).to_complex();
    out.push_back(std::move(c));
  }
  return out;
}

Report coxeter_type_check(const DisplacementConfig& cfg, const FormTolerances& tol) {
  const auto& G = *cfg.group;
  const auto& S = cfg.S;
  const auto rep = numeric_rep(G);
  Report out;

  CheckResult closed{.name = "S closed under conjugation"};
  CheckResult cov{.name = "line map covariance", .tolerance = tol.identity};
  CheckResult span{.name = "transformed line in span", .tolerance = tol.identity};
  for (auto u : S) {
    for (auto v : S) {
      const Element w = G.conjugate(u, v);
      const std::string pair = "u=" + G.label(u) + ", v=" + G.label(v);
      if (!S.contains(w)) {
        closed.fail(pair);
        continue;
      }
      const CVector& alpha = cfg.mu[S.index_of(u)];
      const CVector& beta = cfg.mu[S.index_of(v)];
      const CVector ub = mat_vec(rep[u.id], beta);
      const double gap = line_gap(cfg.mu[S.index_of(w)], ub);
      cov.max_residual = std::max(cov.max_residual, gap);
      if (gap > tol.identity) cov.fail(pair);
      const double d = distance_to_span(ub, {alpha, beta}) / norm(ub);
      span.max_residual = std::max(span.max_residual, d);
      if (d > tol.identity) span.fail(pair);
    }
  }
  out.add(closed);
  out.add(cov);
  out.add(span);
  return out;
}

CVector sample_point(const DisplacementConfig& cfg, const std::vector<std::vector<CVector>>& rep, std::uint64_t seed,
                     std::size_t index, std::size_t max_rejections) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> nd;
  const std::size_t n = cfg.group->degree();
  for (std::size_t attempt = 0; attempt < max_rejections; ++attempt) {
    CVector x(n);
    for (auto& v : x) v = {nd(rng), nd(rng)};
    const double nx = norm(x);
    bool ok = true;
    for (const auto& a : cfg.mu) ok = ok && std::abs(inner(x, a)) >= kSingularGuard * nx * norm(a);
    for (std::size_t g = 1; g < rep.size() && ok; ++g) {
      CVector d = mat_vec(rep[g], x);
      for (std::size_t i = 0; i < n; ++i) d[i] -= x[i];
      ok = norm(d) > kSingularGuard * nx;
    }
    if (ok) return x;
  }
  throw SamplingExhausted("no admissible sample point after " + std::to_string(max_rejections) + " attempts");
}

Report displacement_checks(const DisplacementConfig& cfg, const SampleOptions& opts, const FormTolerances& tol) {
  const auto& G = *cfg.group;
  const auto& S = cfg.S;
  const std::size_t n = G.degree();
  const auto rep = numeric_rep(G);
  const CyclicSpace space = build_cyclic_space(G, S);

  auto lambda = [&](std::size_t i, const CVector& x) { return scaled(xi_eval(cfg.mu[i], x), cfg.nu[i]); };
  auto lambda0 = [&](const CVector& x) {
    Covector sum{CVector(n)};
    for (std::size_t i = 0; i < S.size(); ++i) {
      const Covector l = lambda(i, x);
      for (std::size_t k = 0; k < n; ++k) sum.c[k] += l.c[k];
    }
    return sum;
  };

  struct SampleResult {
    double cyclic = 0, covariance = 0, invariance = 0, closedness = 0;
    std::string cyclic_w, covariance_w, invariance_w, closedness_w;
  };
  std::vector<SampleResult> results(opts.samples);

  parallel_for(opts.samples, [&](std::size_t idx) {
    SampleResult& res = results[idx];
    const CVector x = sample_point(cfg, rep, opts.seed, idx, opts.max_rejections);
    const std::string where = point_label(idx);

    for (const auto& line : space.lines()) {
      std::vector<CVector> vecs;
      CVector weights;
      for (auto p : line.points) {
        vecs.push_back(cfg.mu[p]);
        weights.push_back(cfg.nu[p]);
      }
      const double rel = cyclic_sum(vecs, x, weights).relative();
      if (rel > res.cyclic) {
        res.cyclic = rel;
        res.cyclic_w = where + ", line through " + space.labels()[line.points[0]];
      }
    }

    const Covector l0 = lambda0(x);
    for (auto g : G.elements()) {
      // right action x.g = g^-1 x
      const CMatrix& A = rep[G.inverse(g).id];
      for (std::size_t i = 0; i < S.size(); ++i) {
        const Covector lhs = pullback(A, x, [&](const CVector& y) { return lambda(i, y); });
        const Covector rhs = lambda(S.index_of(G.conjugate(g, S[i])), x);
        const double gap = covector_gap(lhs, rhs);
        if (gap > res.covariance) {
          res.covariance = gap;
          res.covariance_w = where + ", g=" + G.label(g) + ", s=" + G.label(S[i]);
        }
      }
      const double gap0 = covector_gap(pullback(A, x, lambda0), l0);
      if (gap0 > res.invariance) {
        res.invariance = gap0;
        res.invariance_w = where + ", g=" + G.label(g);
      }
    }

    // d lambda(s) in conjugate coordinates: a_j is antiholomorphic, so a real
    // step in x_k differentiates along conj(x_k).
    const double h = tol.fd_step * std::max(1.0, norm(x));
    for (std::size_t i = 0; i < S.size(); ++i) {
      std::vector<Covector> deriv;
      double scale = 0;
      for (std::size_t k = 0; k < n; ++k) {
        CVector xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const Covector ap = lambda(i, xp), am = lambda(i, xm);
        Covector d{CVector(n)};
        for (std::size_t j = 0; j < n; ++j) {
          d.c[j] = (ap.c[j] - am.c[j]) / (2 * h);
          scale = std::max(scale, std::abs(d.c[j]));
        }
        deriv.push_back(std::move(d));
      }
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const double r = std::abs(deriv[k].c[j] - deriv[j].c[k]) / std::max(1.0, scale);
          if (r > res.closedness) {
            res.closedness = r;
            res.closedness_w = where + ", s=" + G.label(S[i]);
          }
        }
    }
  });

  CheckResult cyc{.name = "cyclic property", .tolerance = tol.identity};
  CheckResult cov{.name = "covariance", .tolerance = tol.identity};
  CheckResult inv{.name = "lambda0 invariance", .tolerance = tol.identity};
  CheckResult clo{.name = "closedness", .tolerance = tol.closedness};
  for (const auto& r : results) {
    auto take = [](CheckResult& c, double v, const std::string& w) {
      c.max_residual = std::max(c.max_residual, v);
      if (v > c.tolerance && c.passed()) c.fail(w);
    };
    take(cyc, r.cyclic, r.cyclic_w);
    take(cov, r.covariance, r.covariance_w);
    take(inv, r.invariance, r.invariance_w);
    take(clo, r.closedness, r.closedness_w);
  }
  Report out;
  for (auto* c : {&cyc, &cov, &inv, &clo}) {
    c->sampled = true;
    c->detail = std::to_string(opts.samples) + " samples, seed " + std::to_string(opts.seed);
    out.add(*c);
  }
  return out;
}

}  // namespace dforge
