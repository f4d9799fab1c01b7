#include "dunkl_forge/cyclic.hpp"

#include <algorithm>
#include <random>

#include "dunkl_forge/errors.hpp"

namespace dforge {

namespace {

void require_in_s(const SubsetS& S, Element g, Element h) {
  if (!S.contains(g) || !S.contains(h)) throw NotInS("flip arguments must lie in S");
}

// flip on index pairs of S, flattened a * n + b -> a' * n + b'
std::vector<std::size_t> flip_table(const GroupTable& table, const SubsetS& S) {
  const std::size_t n = S.size();
  std::vector<std::size_t> out(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto [g, h] = flip(table, S, S[a], S[b]);
      out[a * n + b] = S.index_of(g) * n + S.index_of(h);
    }
  }
  return out;
}

std::string tuple_label(const GroupTable& table, const SubsetS& S, const std::vector<std::size_t>& t) {
  std::string w = "(";
  for (std::size_t i = 0; i < t.size(); ++i) w += (i ? ", " : "") + table.label(S[t[i]]);
  return w + ")";
}

}  // namespace

ElementPair flip(const GroupTable& table, const SubsetS& S, Element g, Element h) {
  require_in_s(S, g, h);
  return {table.conjugate(g, h), g};
}

ElementPair flip_inv(const GroupTable& table, const SubsetS& S, Element g, Element h) {
  require_in_s(S, g, h);
  return {h, table.conjugate(table.inverse(h), g)};
}

std::vector<Element> Orbit::points() const {
  std::vector<Element> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.first);
  return out;
}

CyclicLine CyclicLine::canonical(std::vector<std::size_t> points) {
  std::vector<std::size_t> best = points;
  for (std::size_t r = 1; r < points.size(); ++r) {
    std::rotate(points.begin(), points.begin() + 1, points.end());
    if (points < best) best = points;
  }
  return CyclicLine{std::move(best)};
}

std::vector<Orbit> enumerate_orbits(const GroupTable& table, const SubsetS& S) {
  const std::size_t n = S.size();
  std::vector<bool> seen(n * n, false);
  std::vector<Orbit> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[i * n + j]) continue;
      Orbit o;
      ElementPair p{S[i], S[j]};
      do {
        seen[S.index_of(p.first) * n + S.index_of(p.second)] = true;
        o.pairs.push_back(p);
        p = flip_inv(table, S, p.first, p.second);
      } while (p != o.pairs.front());
      out.push_back(std::move(o));
    }
  }
  return out;
}

bool first_components_distinct(const Orbit& o) {
  auto pts = o.points();
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

Element orbit_invariant(const GroupTable& table, const Orbit& o) {
  if (o.pairs.empty()) throw InconsistentOrbit("empty orbit");
  const Element inv = table.product(o.pairs[0].first, o.pairs[0].second);
  for (const auto& [a, b] : o.pairs) {
    if (table.product(a, b) != inv) {
      throw InconsistentOrbit("product " + table.label(a) + "*" + table.label(b) + " differs from " + table.label(inv));
    }
  }
  return inv;
}

Report braid_check(const GroupTable& table, const SubsetS& S, int n) {
  if (n < 3) throw ValidationError("braid_check needs n >= 3");
  const std::size_t m = S.size();
  double count = 1;
  for (int k = 0; k < n; ++k) count *= static_cast<double>(m);
  if (count > 1e7) throw BudgetExceeded("|S|^n exceeds 1e7");

  const auto fl = flip_table(table, S);
  auto apply = [&](std::vector<std::size_t>& t, std::size_t pos) {
    const std::size_t r = fl[t[pos] * m + t[pos + 1]];
    t[pos] = r / m;
    t[pos + 1] = r % m;
  };

  Report rep;
  CheckResult braid{.name = "braid relation"};
  std::vector<std::size_t> t(3);
  std::size_t triples = 0;
  for (t[0] = 0; t[0] < m; ++t[0]) {
    for (t[1] = 0; t[1] < m; ++t[1]) {
      for (t[2] = 0; t[2] < m; ++t[2]) {
        ++triples;
        auto lhs = t;
        apply(lhs, 0);
        apply(lhs, 1);
        apply(lhs, 0);
        auto rhs = t;
        apply(rhs, 1);
        apply(rhs, 0);
        apply(rhs, 1);
        if (lhs != rhs && braid.passed()) braid.fail(tuple_label(table, S, t));
      }
    }
  }
  braid.detail = std::to_string(triples) + " triples";
  rep.add(braid);

  CheckResult far{.name = "far commutation"};
  if (n < 4) {
    far.status = Status::Skipped;
    far.detail = "needs n >= 4";
  } else {
    std::vector<std::size_t> u(n, 0);
    std::size_t tuples = 0;
    for (;;) {
      ++tuples;
      for (int j = 0; j + 1 < n && far.passed(); ++j) {
        for (int k = j + 2; k + 1 < n; ++k) {
          auto a = u;
          apply(a, j);
          apply(a, k);
          auto b = u;
          apply(b, k);
          apply(b, j);
          if (a != b) {
            far.fail(tuple_label(table, S, u));
            break;
          }
        }
      }
      int pos = n - 1;
      while (pos >= 0 && ++u[pos] == m) u[pos--] = 0;
      if (pos < 0) break;
    }
    far.detail = std::to_string(tuples) + " tuples";
  }
  rep.add(far);
  return rep;
}

CyclicSpace::CyclicSpace(std::vector<std::string> labels, std::vector<std::vector<std::size_t>> lines)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  by_pair_.assign(n * n, {});
  for (auto& pts : lines) {
    if (pts.empty()) throw ValidationError("empty cyclic line");
    for (auto p : pts)
      if (p >= n) throw ValidationError("line point out of range");
    lines_.push_back(CyclicLine::canonical(std::move(pts)));
  }
  std::sort(lines_.begin(), lines_.end());
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    const auto& p = lines_[l].points;
    if (p.size() == 1) {
      by_pair_[p[0] * n + p[0]].push_back({l, 0});
      continue;
    }
    for (std::size_t i = 0; i < p.size(); ++i) by_pair_[p[i] * n + p[(i + 1) % p.size()]].push_back({l, i});
  }
}

const std::vector<CyclicSpace::Incidence>& CyclicSpace::incidences(std::size_t x, std::size_t y) const {
  return by_pair_.at(x * size() + y);
}

CyclicSpace build_cyclic_space(const GroupTable& table, const SubsetS& S) {
  std::vector<std::string> labels;
  for (auto s : S) labels.push_back(table.label(s));
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& o : enumerate_orbits(table, S)) {
    std::vector<std::size_t> pts;
    for (auto q : o.points()) pts.push_back(S.index_of(q));
    lines.push_back(std::move(pts));
  }
  return CyclicSpace(std::move(labels), std::move(lines));
}

CyclicSpace fano_space() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 7; ++i) labels.push_back("e" + std::to_string(i));
  const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& t : triples) {
    const std::size_t a = t[0] - 1, b = t[1] - 1, c = t[2] - 1;
    lines.push_back({a, b, c});
    lines.push_back({a, c, b});
  }
  for (std::size_t i = 0; i < 7; ++i) lines.push_back({i});
  return CyclicSpace(std::move(labels), std::move(lines));
}

std::size_t triangle_action(const CyclicSpace& space, std::size_t x, std::size_t y) {
  if (x == y) return x;
  const auto& inc = space.incidences(x, y);
  if (inc.empty()) throw ValidationError("no line through (" + space.labels()[x] + ", " + space.labels()[y] + ")");
  const auto& p = space.lines()[inc.front().line].points;
  if (p.size() <= 2) return x;
  return p[(inc.front().position + 2) % p.size()];
}

namespace {

// Full x < y table, or nullopt when some pair has no line.
std::optional<std::vector<std::size_t>> action_table(const CyclicSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && space.incidences(x, y).empty()) return std::nullopt;
      t[x * n + y] = triangle_action(space, x, y);
    }
  }
  return t;
}

}  // namespace

Report verify_cyclic_axioms(const CyclicSpace& space, const AxiomOptions& opts) {
  const std::size_t n = space.size();
  const auto& L = space.labels();
  Report rep;

  CheckResult distinct{.name = axiom::kDistinctPoints};
  for (const auto& line : space.lines()) {
    auto p = line.points;
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end()) distinct.fail("line starting at " + L[line.points[0]]);
  }
  rep.add(distinct);

  CheckResult unique{.name = axiom::kUniqueLine};
  CheckResult single{.name = axiom::kSingletons};
  for (std::size_t x = 0; x < n; ++x) {
    if (space.incidences(x, x).size() != 1) single.fail(L[x]);
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && space.incidences(x, y).size() != 1) {
        unique.fail("(" + L[x] + ", " + L[y] + ") lies on " + std::to_string(space.incidences(x, y).size()) + " lines");
      }
    }
  }
  rep.add(unique);
  rep.add(single);

  const auto table = action_table(space);
  const char* dependent[] = {axiom::kRightCancel, axiom::kLeftCancel,           axiom::kNonTrivial,
                             axiom::kDistributive, axiom::kDistributiveCollinear, axiom::kConsecutive};
  if (!table) {
    for (const char* name : dependent) rep.add({.name = name, .status = Status::Skipped, .detail = "action undefined"});
    return rep;
  }
  const auto& T = *table;
  auto act = [&](std::size_t a, std::size_t b) { return T[a * n + b]; };

  CheckResult right{.name = axiom::kRightCancel};
  for (std::size_t x = 0; x < n && right.passed(); ++x) {
    std::vector<std::size_t> seen(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t w = act(a, x);
      if (seen[w] != n) {
        right.fail(L[seen[w]] + " < " + L[x] + " = " + L[a] + " < " + L[x]);
        break;
      }
      seen[w] = a;
    }
  }
  rep.add(right);

  CheckResult left{.name = axiom::kLeftCancel};
  for (std::size_t x = 0; x < n && left.passed(); ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool differ = false;
      for (std::size_t a = 0; a < n && !differ; ++a) differ = act(a, x) != act(a, y);
      if (!differ) {
        left.fail(L[x] + " and " + L[y] + " act identically");
        break;
      }
    }
  }
  if (!left.passed()) left.status = Status::Unmet;
  rep.add(left);

  CheckResult nontrivial{.name = axiom::kNonTrivial};
  for (std::size_t x = 0; x < n; ++x) {
    bool moves = false;
    for (std::size_t a = 0; a < n && !moves; ++a) moves = act(a, x) != a;
    if (!moves) {
      nontrivial.fail(L[x] + " acts trivially");
      break;
    }
  }
  if (!nontrivial.passed()) nontrivial.status = Status::Unmet;
  rep.add(nontrivial);

  auto distributes = [&](std::size_t z, std::size_t x, std::size_t y) {
    return act(act(z, x), y) == act(act(z, y), act(x, y));
  };
  auto triple_label = [&](std::size_t z, std::size_t x, std::size_t y) {
    const std::size_t lhs = act(act(z, x), y);
    const std::size_t rhs = act(act(z, y), act(x, y));
    return "z=" + L[z] + ", x=" + L[x] + ", y=" + L[y] + ": " + L[lhs] + " vs " + L[rhs];
  };

  CheckResult dist{.name = axiom::kDistributive};
  const double cube = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
  if (cube <= static_cast<double>(opts.exhaustive_limit)) {
    for (std::size_t z = 0; z < n && dist.passed(); ++z)
      for (std::size_t x = 0; x < n && dist.passed(); ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (!distributes(z, x, y)) {
            dist.fail(triple_label(z, x, y));
            break;
          }
    dist.detail = std::to_string(n * n * n) + " triples";
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t k = 0; k < opts.samples && dist.passed(); ++k) {
      const std::size_t z = pick(rng), x = pick(rng), y = pick(rng);
      if (!distributes(z, x, y)) dist.fail(triple_label(z, x, y));
    }
    dist.sampled = true;
    dist.detail = std::to_string(opts.samples) + " sampled triples";
  }
  rep.add(dist);

  CheckResult coll{.name = axiom::kDistributiveCollinear};
  for (const auto& line : space.lines()) {
    for (auto z : line.points)
      for (auto x : line.points)
        for (auto y : line.points)
          if (coll.passed() && !distributes(z, x, y)) coll.fail(triple_label(z, x, y));
  }
  rep.add(coll);

  CheckResult consec{.name = axiom::kConsecutive};
  for (const auto& line : space.lines()) {
    const auto& p = line.points;
    if (p.size() < 2 || !consec.passed()) continue;
    for (std::size_t k = 1; k < p.size() && consec.passed(); ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        if (act(act(a, p[k]), p[(k + 1) % p.size()]) != act(act(a, p[0]), p[1])) {
          consec.fail("line through " + L[p[0]] + ", " + L[p[1]] + " at position " + std::to_string(k + 1) +
                      ", point " + L[a]);
          break;
        }
      }
    }
  }
  rep.add(consec);
  return rep;
}

Reconstruction reconstruct_group(const CyclicSpace& space) {
  const Report rep = verify_cyclic_axioms(space);
  for (const char* name : {axiom::kUniqueLine, axiom::kSingletons, axiom::kRightCancel, axiom::kNonTrivial,
                           axiom::kDistributive}) {
    const CheckResult* c = rep.find(name);
    if (c == nullptr || c->status != Status::Pass) {
      throw AxiomsNotVerified(std::string(name) + (c && !c->witness.empty() ? ": " + c->witness : ""));
    }
  }
  const std::size_t n = space.size();
  GroupSpec spec;
  spec.degree = n;
  for (std::size_t x = 0; x < n; ++x) {
    Permutation p(n);
    for (std::size_t a = 0; a < n; ++a) p[a] = static_cast<std::uint32_t>(triangle_action(space, a, x));
    spec.permutations.push_back(std::move(p));
  }
  Reconstruction rec{build_group(spec), {}};
  for (const auto& p : spec.permutations) rec.embedding.push_back(rec.group.find_permutation(p).value());
  return rec;
}

CheckResult check_reconstruction(const CyclicSpace& space, const Reconstruction& rec) {
  CheckResult r{.name = "reconstructed conjugation law"};
  const auto& G = rec.group;
  for (std::size_t x = 0; x < space.size() && r.passed(); ++x) {
    for (std::size_t y = 0; y < space.size(); ++y) {
      const Element conj = G.conjugate(G.inverse(rec.embedding[y]), rec.embedding[x]);
      if (conj != rec.embedding[triangle_action(space, x, y)]) {
        r.fail("x=" + space.labels()[x] + ", y=" + space.labels()[y]);
        break;
      }
    }
  }
  r.detail = "group order " + std::to_string(G.order());
  return r;
}

CheckResult check_group_action(const GroupTable& table, const SubsetS& S, const CyclicSpace& space) {
  CheckResult r{.name = "action is conjugation"};
  for (std::size_t x = 0; x < S.size() && r.passed(); ++x) {
    for (std::size_t y = 0; y < S.size(); ++y) {
      const Element conj = table.conjugate(table.inverse(S[y]), S[x]);
      if (S[triangle_action(space, x, y)] != conj) {
        r.fail("x=" + table.label(S[x]) + ", y=" + table.label(S[y]));
        break;
      }
    }
  }
  return r;
}

}  // namespace dforge
