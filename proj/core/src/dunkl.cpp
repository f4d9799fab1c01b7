#include "dunkl_forge/dunkl.hpp"

#include <map>
#include <optional>

#include "dunkl_forge/errors.hpp"
#include "dunkl_forge/parallel.hpp"

namespace dforge {

namespace {

// Matrix and linear form actually substituted for one datum.
struct Prepared {
  Matrix action;
  LinearForm form;
  Scalar nu;
};

std::vector<Prepared> prepare(const DunklConfig& cfg) {
  std::vector<Prepared> out;
  out.reserve(cfg.data.size());
  for (const auto& d : cfg.data) {
    if (d.root.nvars() != cfg.nvars()) throw DimensionMismatch("root length does not match the representation");
    if (cfg.holomorphic) {
      std::vector<Scalar> c;
      for (const auto& a : d.root.coeffs()) c.push_back(a.conj());
      out.push_back({cfg.group->rep(d.element).conj(), LinearForm(std::move(c)), d.multiplicity});
    } else {
      out.push_back({cfg.group->rep(d.element), d.root, d.multiplicity});
    }
  }
  return out;
}

MultiPoly apply_prepared(const std::vector<Prepared>& prep, std::size_t j, const MultiPoly& p) {
  MultiPoly r = p.partial_derivative(j);
  for (const auto& d : prep) {
    if (d.nu.is_zero() || d.form[j].is_zero()) continue;
    const MultiPoly diff = p - act_by_matrix(p, d.action);
    if (diff.is_zero()) continue;
    r += divide_by_linear(diff, d.form) * (d.nu * d.form[j]);
  }
  return r;
}

std::string exponent_label(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

LinearForm default_root(const GroupTable& table, Element s) {
  const Matrix m = table.rep(s) - Matrix::identity(table.degree());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    for (const auto& v : col)
      if (!v.is_zero()) return LinearForm(std::move(col));
  }
  throw NotAReflection(table.label(s) + " fixes every vector");
}

DunklConfig make_config(std::shared_ptr<const GroupTable> group, SubsetS S, const std::vector<Scalar>& class_values,
                        DunklMode mode) {
  const auto classes = conjugacy_classes(*group);
  if (class_values.size() != classes.size()) throw ValidationError("one multiplicity per conjugacy class expected");
  std::vector<Scalar> by_element(group->order());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto g : classes[c]) by_element[g.id] = class_values[c];
  DunklConfig cfg{group, S, {}, mode, false};
  for (auto s : S) cfg.data.push_back({s, default_root(*group, s), by_element[s.id]});
  return cfg;
}

Report validate_config(const DunklConfig& cfg) {
  Report rep;
  const auto& G = *cfg.group;
  const Matrix id = Matrix::identity(G.degree());

  CheckResult cover{.name = "one datum per reflection"};
  std::map<Element, std::size_t> count;
  for (const auto& d : cfg.data) {
    ++count[d.element];
    if (!cfg.S.contains(d.element)) cover.fail(G.label(d.element) + " is not in S");
  }
  for (auto s : cfg.S)
    if (count[s] != 1) cover.fail(G.label(s) + " has " + std::to_string(count[s]) + " data");
  rep.add(cover);

  CheckResult kind{.name = cfg.mode == DunklMode::Real ? "real reflections" : "complex reflections"};
  CheckResult roots{.name = "roots match reflections"};
  for (const auto& d : cfg.data) {
    const Matrix diff = G.rep(d.element) - id;
    if (diff.rank() != 1) kind.fail(G.label(d.element));
    if (cfg.mode == DunklMode::Real && G.product(d.element, d.element) != G.identity()) kind.fail(G.label(d.element));
    Matrix aug(G.degree(), G.degree() + 1);
    for (std::size_t r = 0; r < G.degree(); ++r) {
      for (std::size_t c = 0; c < G.degree(); ++c) aug(r, c) = diff(r, c);
      aug(r, G.degree()) = d.root.nvars() == G.degree() ? d.root[r] : Scalar();
    }
    if (d.root.nvars() != G.degree() || d.root.is_zero() || aug.rank() != 1) roots.fail(G.label(d.element));
  }
  rep.add(kind);
  rep.add(roots);

  CheckResult nu{.name = "multiplicity constant on classes"};
  for (const auto& a : cfg.data)
    for (const auto& b : cfg.data)
      if (a.element < b.element && a.multiplicity != b.multiplicity) {
        for (auto g : G.elements())
          if (G.conjugate(g, a.element) == b.element) {
            nu.fail(G.label(a.element) + " and " + G.label(b.element));
            break;
          }
      }
  rep.add(nu);
  return rep;
}

MultiPoly dunkl_apply(const DunklConfig& cfg, std::size_t j, const MultiPoly& p) {
  if (p.nvars() != cfg.nvars()) throw DimensionMismatch("polynomial and config disagree on nvars");
  if (j >= cfg.nvars()) throw DimensionMismatch("coordinate index out of range");
  return apply_prepared(prepare(cfg), j, p);
}

std::vector<MultiPoly> dunkl_gradient(const DunklConfig& cfg, const MultiPoly& p) {
  if (p.nvars() != cfg.nvars()) throw DimensionMismatch("polynomial and config disagree on nvars");
  const auto prep = prepare(cfg);
  std::vector<MultiPoly> out;
  for (std::size_t j = 0; j < cfg.nvars(); ++j) out.push_back(apply_prepared(prep, j, p));
  return out;
}

Report commutator_check(const DunklConfig& cfg, const CommutatorOptions& opts) {
  if (opts.degree > opts.degree_guard) throw BudgetExceeded("commutator degree exceeds the guard");
  const std::size_t n = cfg.nvars();
  const auto prep = prepare(cfg);
  const auto monos = monomials_up_to(n, opts.degree);

  struct Failure {
    std::size_t j, k;
    std::string residual;
  };
  std::vector<std::optional<Failure>> fails(monos.size());
  parallel_for(monos.size(), [&](std::size_t m) {
    const MultiPoly p = MultiPoly::monomial(monos[m]).in_field(cfg.group->field());
    std::vector<MultiPoly> first;
    for (std::size_t k = 0; k < n; ++k) first.push_back(apply_prepared(prep, k, p));
    for (std::size_t j = 0; j < n && !fails[m]; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const MultiPoly res = apply_prepared(prep, j, first[k]) - apply_prepared(prep, k, first[j]);
        if (!res.is_zero()) {
          fails[m] = Failure{j, k, res.to_string()};
          break;
        }
      }
  });

  CheckResult r{.name = "dunkl operators commute"};
  std::size_t bad = 0;
  for (std::size_t m = 0; m < monos.size(); ++m) {
    if (!fails[m]) continue;
    ++bad;
    if (r.passed()) {
      r.fail("[D" + std::to_string(fails[m]->j + 1) + ", D" + std::to_string(fails[m]->k + 1) + "] " +
             exponent_label(monos[m]) + " = " + fails[m]->residual);
    }
  }
  r.detail = std::to_string(monos.size()) + " monomials, " + std::to_string(n * (n - 1) / 2) + " pairs, degree <= " +
             std::to_string(opts.degree);
  if (bad > 0) r.detail += ", " + std::to_string(bad) + " nonzero";
  Report rep;
  rep.add(r);
  return rep;
}

CheckResult equivariance_check(const DunklConfig& cfg, int degree) {
  CheckResult r{.name = "dunkl gradient equivariance"};
  const std::size_t n = cfg.nvars();
  const auto prep = prepare(cfg);
  const auto& G = *cfg.group;
  for (const auto& e : monomials_up_to(n, degree)) {
    const MultiPoly p = MultiPoly::monomial(e).in_field(G.field());
    std::vector<MultiPoly> grad;
    for (std::size_t k = 0; k < n; ++k) grad.push_back(apply_prepared(prep, k, p));
    for (auto g : G.elements()) {
      const Matrix m = cfg.holomorphic ? G.rep(g).conj() : G.rep(g);
      const MultiPoly pg = act_by_matrix(p, m);
      for (std::size_t j = 0; j < n; ++j) {
        MultiPoly rhs(n);
        for (std::size_t k = 0; k < n; ++k)
          if (!m(j, k).is_zero()) rhs += act_by_matrix(grad[k], m) * m(j, k);
        if (!(apply_prepared(prep, j, pg) == rhs)) {
          r.fail("g=" + G.label(g) + ", j=" + std::to_string(j + 1) + ", p=" + exponent_label(e));
          return r;
        }
      }
    }
  }
  return r;
}

DunklConfig zero_multiplicity(DunklConfig cfg) {
  for (auto& d : cfg.data) d.multiplicity = Scalar();
  return cfg;
}

}  // namespace dforge
