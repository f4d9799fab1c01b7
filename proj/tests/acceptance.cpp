// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <dunkl_forge/calculus.hpp>
#include <dunkl_forge/errors.hpp>

#include "commands.hpp"
#include "io.hpp"

using namespace dforge;
using io::json;

namespace {

const std::string kCorpus = DUNKL_FORGE_CORPUS_DIR;
std::string g_cli;

const std::vector<std::string> kGroupConfigs = {"a1", "a1xa1", "a2", "b2", "i2_4", "q8_minus_one", "z4", "g312"};
const std::vector<std::string> kReflectionConfigs = {"a1", "a1xa1", "a2", "b2", "i2_4", "z4", "g312"};

json load(const std::string& name) { return io::read_json_file(kCorpus + "/" + name + ".json"); }

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& why) {
    if (!cond && ok) note = why;
    ok = ok && cond;
  }
};

struct GroupAndS {
  std::shared_ptr<const GroupTable> group;
  SubsetS S;
};

GroupAndS group_of(const std::string& name) {
  const json cfg = load(name);
  auto g = io::parse_group(cfg.at("group"));
  SubsetS S = cfg.contains("S") ? io::parse_subset(cfg.at("S"), *g) : SubsetS(*g, complex_reflections(*g));
  return {g, S};
}

using PairSet = std::set<std::pair<std::uint32_t, std::uint32_t>>;

// Orbits of (g, h) -> (g h g^-1, g) by direct iteration on the product table.
std::set<PairSet> brute_force_orbits(const GroupTable& t, const SubsetS& S) {
  std::set<PairSet> out;
  for (auto a : S)
    for (auto b : S) {
      PairSet orbit;
      Element g = a, h = b;
      while (orbit.insert({g.id, h.id}).second) {
        const Element ng = t.product(t.product(g, h), t.inverse(g));
        h = g;
        g = ng;
      }
      out.insert(orbit);
    }
  return out;
}

std::set<PairSet> library_orbits(const std::vector<Orbit>& orbits) {
  std::set<PairSet> out;
  for (const auto& o : orbits) {
    PairSet s;
    for (const auto& [g, h] : o.pairs) s.insert({g.id, h.id});
    out.insert(s);
  }
  return out;
}

MultiPoly random_sparse(std::mt19937_64& rng, std::size_t n, const Field& f) {
  std::uniform_int_distribution<int> terms(1, 6), deg(0, 6), num(-9, 9), den(1, 5);
  MultiPoly p(n);
  const int k = terms(rng);
  for (int t = 0; t < k; ++t) {
    Exponent e(n, 0);
    int budget = deg(rng);
    for (std::size_t i = 0; i + 1 < n && budget > 0; ++i) {
      const int d = std::uniform_int_distribution<int>(0, budget)(rng);
      e[i] = static_cast<std::uint8_t>(d);
      budget -= d;
    }
    e[n - 1] = static_cast<std::uint8_t>(budget);
    Scalar c = Scalar::rational(num(rng), den(rng));
    if (f.conductor > 1) c = c * Scalar::zeta(f.conductor, std::uniform_int_distribution<int>(0, f.conductor - 1)(rng));
    p.add_term(e, c.in_field(f));
  }
  return p;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- criteria ----

Outcome germ_identity() {
  Outcome o;
  for (const auto& name : kGroupConfigs) {
    const auto [g, S] = group_of(name);
    GermVector sum = quantum_germ(*g, S, g->identity());
    for (auto s : S) sum += quantum_germ(*g, S, s);
    o.require(sum.is_zero(), name);
  }
  o.note = o.ok ? std::to_string(kGroupConfigs.size()) + " configs" : "nonzero sum for " + o.note;
  return o;
}

Outcome differential_consistency() {
  Outcome o;
  std::size_t elements = 0;
  for (const auto& name : kGroupConfigs) {
    const auto [g, S] = group_of(name);
    o.require(g->order() <= 200, name + " exceeds 200 elements");
    for (auto x : g->elements()) {
      ++elements;
      o.require(differential_delta(*g, S, x) == inner_derivation(*g, S, x), name + " at " + g->label(x));
    }
  }
  if (o.ok) o.note = std::to_string(elements) + " group elements";
  return o;
}

Outcome orbit_structure() {
  Outcome o;
  for (const auto& name : kGroupConfigs) {
    const auto [g, S] = group_of(name);
    const auto orbits = enumerate_orbits(*g, S);
    for (const auto& orb : orbits) {
      o.require(first_components_distinct(orb), name + ": repeated first component");
      try {
        orbit_invariant(*g, orb);
      } catch (const InconsistentOrbit&) {
        o.require(false, name + ": orbit invariant not constant");
      }
    }
    o.require(library_orbits(orbits) == brute_force_orbits(*g, S), name + ": orbits differ from brute force");
  }
  const auto [g, S] = group_of("a2");
  std::multiset<std::size_t> sizes;
  for (const auto& orb : enumerate_orbits(*g, S)) sizes.insert(orb.size());
  o.require(sizes == std::multiset<std::size_t>{1, 1, 1, 3, 3}, "S3 transpositions do not give 1,1,1,3,3");
  if (o.ok) o.note = "S3 transpositions: 5 orbits (1,1,1,3,3); brute force agrees on all configs";
  return o;
}

Outcome braid_relation() {
  Outcome o;
  for (const auto& name : kGroupConfigs) {
    const auto [g, S] = group_of(name);
    if (S.size() > 30) continue;
    const Report r = braid_check(*g, S, 4);
    for (const auto& c : r.checks) o.require(c.status == Status::Pass, name + ": " + c.name + " " + c.witness);
  }
  if (o.ok) o.note = "S^3 and S^4 exhaustive";
  return o;
}

Outcome kernel_dimension() {
  Outcome o;
  for (const auto& name : kGroupConfigs) {
    const auto [g, S] = group_of(name);
    const std::size_t n = S.size();
    Matrix m = Matrix::identity(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto [x, y] = flip(*g, S, S[a], S[b]);
        m(S.index_of(x) * n + S.index_of(y), a * n + b) -= Scalar(1);
      }
    const std::size_t kernel = n * n - m.rank();
    o.require(kernel == braid_orbit_count(*g, S), name + ": kernel " + std::to_string(kernel));
    o.require(gamma_tilde_dim2(*g, S) == n * n - kernel, name + ": degree-2 dimension");
  }
  if (o.ok) o.note = "rational rank matches orbit count";
  return o;
}

bool axioms_hold(const Report& r, std::string& why) {
  for (const auto& c : r.checks)
    if (c.status == Status::Fail) {
      why = c.name + " (" + c.witness + ")";
      return false;
    }
  return true;
}

Outcome cyclic_axioms() {
  Outcome o;
  std::size_t reconstructed = 0;
  for (const auto& name : kGroupConfigs) {
    const auto [g, S] = group_of(name);
    const CyclicSpace space = build_cyclic_space(*g, S);
    const Report r = verify_cyclic_axioms(space);
    std::string why;
    const bool held = axioms_hold(r, why);
    o.require(held, name + ": " + why);
    o.require(check_group_action(*g, S, space).passed(), name + ": action is not conjugation");
    if (r.find(axiom::kNonTrivial)->status == Status::Pass) {
      const auto rec = reconstruct_group(space);
      o.require(check_reconstruction(space, rec).passed(), name + ": reconstruction");
      ++reconstructed;
    }
  }
  const CyclicSpace fano = io::parse_space(load("fano"));
  o.require(fano.lines().size() == 21, "fano has " + std::to_string(fano.lines().size()) + " lines");
  const Report fr = verify_cyclic_axioms(fano);
  std::string why;
  const bool held = axioms_hold(fr, why);
  o.require(held, "fano: " + why);
  if (o.ok) o.note = std::to_string(reconstructed) + " reconstructions, fano 21 lines";
  return o;
}

DunklConfig dunkl_config(const std::string& name, const json& nu_override = {}) {
  json cfg = load(name);
  if (!nu_override.is_null()) cfg["nu"] = nu_override;
  return io::parse_dunkl(cfg);
}

Outcome dunkl_commutativity() {
  Outcome o;
  std::size_t runs = 0;
  auto run = [&](const DunklConfig& cfg, int degree, const std::string& label) {
    const Report r = commutator_check(cfg, {.degree = degree});
    o.require(r.passed(), label + ": " + r.checks[0].witness);
    ++runs;
  };
  const std::vector<std::pair<std::string, json>> real = {
      {"a2", json{{"default", "-5/7"}}}, {"b2", json{{"s", "-3/2"}, {"default", "5/7"}}},
      {"i2_4", json{{"f", "-3/2"}, {"default", "5/7"}}}};
  for (const auto& [name, alt] : real) {
    run(dunkl_config(name), 6, name);
    run(dunkl_config(name, alt), 6, name + " (second nu)");
  }
  for (const std::string name : {"z4", "g312"}) {
    DunklConfig cfg = dunkl_config(name);
    run(cfg, 5, name);
    cfg.holomorphic = true;
    run(cfg, 5, name + " (holomorphic)");
  }
  if (o.ok) o.note = std::to_string(runs) + " configurations, zero residual";
  return o;
}

Outcome zero_reduction() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (const auto& name : kReflectionConfigs) {
    const DunklConfig cfg = zero_multiplicity(dunkl_config(name));
    const Field& f = cfg.group->field();
    for (int t = 0; t < 500 && o.ok; ++t) {
      const MultiPoly p = random_sparse(rng, cfg.nvars(), f);
      for (std::size_t j = 0; j < cfg.nvars(); ++j)
        o.require(dunkl_apply(cfg, j, p) == p.partial_derivative(j), name + ": " + p.to_string());
    }
  }
  if (o.ok) o.note = "500 polynomials x " + std::to_string(kReflectionConfigs.size()) + " configs";
  return o;
}

Outcome cyclic_wedge() {
  Outcome o;
  double worst = 0;
  for (const auto& name : kReflectionConfigs) {
    const DisplacementConfig cfg = io::parse_displacement(load(name));
    const Report r = displacement_checks(cfg, {.samples = 100, .seed = 1});
    const CheckResult* c = r.find("cyclic property");
    o.require(c && c->passed() && c->max_residual <= 1e-9, name + ": cyclic residual");
    if (c) worst = std::max(worst, c->max_residual);
  }
  const CVector x{1.0, 2.0};
  const std::vector<CVector> lines{{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
  const cplx w12 = wedge(xi_eval(lines[0], x), xi_eval(lines[1], x))(0, 1);
  const cplx w23 = wedge(xi_eval(lines[1], x), xi_eval(lines[2], x))(0, 1);
  const cplx w31 = wedge(xi_eval(lines[2], x), xi_eval(lines[0], x))(0, 1);
  o.require(std::abs(w12 - 0.5) < 1e-15 && std::abs(w23 + 1.0 / 6) < 1e-15 && std::abs(w31 + 1.0 / 3) < 1e-15,
            "plane witness coefficients");
  o.require(cyclic_sum(lines, x).relative() <= 1e-15, "plane witness sum");

  const DisplacementConfig neg = io::parse_displacement(load("negative/c3_generic_lines"));
  const auto rep = numeric_rep(*neg.group);
  double least = 1e300;
  for (std::size_t i = 0; i < 100; ++i) {
    const CVector pt = sample_point(neg, rep, 1, i, 10'000);
    least = std::min(least, cyclic_sum(neg.mu, pt).relative());
  }
  o.require(least > 1e-6, "C3 control fell to " + std::to_string(least));
  if (o.ok) {
    std::ostringstream os;
    os << "max relative " << std::scientific << std::setprecision(1) << worst << ", C3 control min " << least;
    o.note = os.str();
  }
  return o;
}

Outcome displacement_suite() {
  Outcome o;
  for (const auto& name : kReflectionConfigs) {
    const DisplacementConfig cfg = io::parse_displacement(load(name));
    Report r = coxeter_type_check(cfg);
    r.append(displacement_checks(cfg, {.samples = 100, .seed = 1}));
    for (const auto& c : r.checks) o.require(c.status == Status::Pass, name + ": " + c.name + " " + c.witness);
  }
  const DisplacementConfig bad = io::parse_displacement(load("negative/perturbed_eigenline"));
  Report r = coxeter_type_check(bad);
  r.append(displacement_checks(bad, {.samples = 100, .seed = 1}));
  std::string witness;
  for (const auto& c : r.checks)
    if (c.status == Status::Fail && witness.empty()) witness = c.name + ": " + c.witness;
  o.require(!witness.empty(), "perturbed eigenline passed");
  if (o.ok) o.note = "perturbed control fails (" + witness + ")";
  return o;
}

Outcome container_rank() {
  Outcome o;
  std::size_t lines = 0;
  for (const auto& name : kReflectionConfigs) {
    const DisplacementConfig cfg = io::parse_displacement(load(name));
    const CheckResult c = container_scan(cfg);
    o.require(c.passed(), name + ": " + c.witness);
    o.require(c.detail.find("exact") != std::string::npos, name + ": rank not exact");
    lines += build_cyclic_space(*cfg.group, cfg.S).lines().size();
  }
  if (o.ok) o.note = std::to_string(lines) + " lines, exact rank";
  return o;
}

Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::string> runs = {"analyze " + kCorpus + "/g312.json", "verify " + kCorpus + "/fano.json",
                                         "dunkl " + kCorpus + "/b2.json --degree 4",
                                         "forms " + kCorpus + "/g312.json --samples 50 --seed 9"};
  for (const auto& args : runs) {
    std::string reports[2];
    for (int k = 0; k < 2; ++k) {
      const auto out = dir / ("dforge_accept_" + std::to_string(k) + ".json");
      std::filesystem::remove(out);
      const int status = std::system((g_cli + " " + args + " --json " + out.string() + " > /dev/null").c_str());
      o.require(WIFEXITED(status) && WEXITSTATUS(status) <= 1, "cli failed: " + args);
      reports[k] = slurp(out);
    }
    o.require(!reports[0].empty() && reports[0] == reports[1], "reports differ: " + args);
  }
  if (o.ok) o.note = std::to_string(runs.size()) + " commands, identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to dunkl-forge>\n";
    return 2;
  }
  g_cli = argv[1];

  struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"germ identity", 1, germ_identity},
      {"differential consistency", 5, differential_consistency},
      {"orbit structure", 0, orbit_structure},
      {"braid relation", 10, braid_relation},
      {"flip kernel dimension", 0, kernel_dimension},
      {"cyclic-space axioms", 10, cyclic_axioms},
      {"dunkl commutativity", 60, dunkl_commutativity},
      {"zero multiplicity reduction", 0, zero_reduction},
      {"cyclic wedge identity", 0, cyclic_wedge},
      {"coxeter-type and displacement suite", 30, displacement_suite},
      {"container rank", 0, container_rank},
      {"determinism", 0, determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) o.require(false, "took longer than " + std::to_string(c.limit_s) + " s");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << c.name << ": " << o.note << " ("
              << std::fixed << std::setprecision(2) << secs << " s)\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
