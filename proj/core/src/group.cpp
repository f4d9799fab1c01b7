#include "dunkl_forge/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dunkl_forge/errors.hpp"

namespace dforge {

namespace {

std::string perm_key(const Permutation& p) {
  std::string k;
  k.reserve(p.size() * 3);
  for (auto v : p) {
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

Permutation compose(const Permutation& g, const Permutation& h) {
  Permutation r(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) r[x] = h[g[x]];
  return r;
}

void check_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) throw ValidationError("generator has " + std::to_string(p.size()) + " images, expected degree " + std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (auto v : p) {
    if (v >= degree || seen[v]) throw NonInvertible("generator is not a permutation of " + std::to_string(degree) + " points");
    seen[v] = true;
  }
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      if (!first) os << ',';
      os << (x + 1);
      first = false;
      x = p[x];
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation parse_cycles(const std::string& text, std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) { throw ParseError("bad cycle notation '" + text + "': " + why); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    while (true) {
      while (i < text.size() && (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i])))) ++i;
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) fail("expected a point number");
      const long v = std::stol(text.substr(i, j - i));
      if (v < 1 || static_cast<std::size_t>(v) > degree) fail("point out of range");
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      i = j;
    }
    std::set<std::uint32_t> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) fail("repeated point in a cycle");
    // Cycles compose left to right, matching the right action.
    Permutation c(degree);
    for (std::size_t k = 0; k < degree; ++k) c[k] = static_cast<std::uint32_t>(k);
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
    p = compose(p, c);
  }
  return p;
}

std::optional<Element> GroupTable::find_label(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it != by_label_.end()) return Element{it->second};
  if (kind_ == GroupKind::Permutation && !label.empty() && label.front() == '(') {
    try {
      return find_permutation(parse_cycles(label, degree_));
    } catch (const ParseError&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<Element> GroupTable::elements() const {
  std::vector<Element> out(order());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Element{static_cast<std::uint32_t>(i)};
  return out;
}

const Matrix& GroupTable::rep(Element a) const {
  if (rep_.empty()) throw NoRepresentation("group has no matrix representation");
  return rep_.at(a.id);
}

std::optional<Element> GroupTable::find_matrix(const Matrix& m) const {
  if (rep_.empty()) return std::nullopt;
  auto it = by_key_.find(m.in_field(field_).key());
  if (it == by_key_.end()) return std::nullopt;
  return Element{it->second};
}

std::optional<Element> GroupTable::find_permutation(const Permutation& p) const {
  if (kind_ != GroupKind::Permutation) return std::nullopt;
  auto it = by_key_.find(perm_key(p));
  if (it == by_key_.end()) return std::nullopt;
  return Element{it->second};
}

std::optional<bool> GroupTable::check_associative(std::size_t bound) const {
  const std::size_t n = order();
  if (n > bound) return std::nullopt;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      const Element ab = product(Element{a}, Element{b});
      for (std::uint32_t c = 0; c < n; ++c) {
        if (product(ab, Element{c}) != product(Element{a}, product(Element{b}, Element{c}))) return false;
      }
    }
  }
  return true;
}

bool GroupTable::rep_is_unitary_homomorphism() const {
  if (rep_.empty()) throw NoRepresentation("group has no matrix representation");
  for (const auto& m : rep_) {
    if (!m.is_unitary()) return false;
  }
  for (auto a : elements()) {
    for (auto b : elements()) {
      if (!(rep(a) * rep(b) == rep(product(a, b)))) return false;
    }
  }
  return true;
}

GroupTable build_group(const GroupSpec& spec) {
  GroupTable t;
  t.kind_ = spec.kind;
  t.degree_ = spec.degree;
  t.field_ = spec.field;

  const bool perm = spec.kind == GroupKind::Permutation;
  const std::size_t ngens = perm ? spec.permutations.size() : spec.matrices.size();
  if (ngens == 0) throw ValidationError("generator list is empty");

  std::vector<Matrix> gens;
  std::vector<std::string> names = spec.generator_names;
  if (perm) {
    for (const auto& g : spec.permutations) check_permutation(g, spec.degree);
  } else {
    for (const auto& m : spec.matrices) {
      if (m.rows() != spec.degree || m.cols() != spec.degree) throw DimensionMismatch("generator matrix is not degree x degree");
      Matrix f = m.in_field(spec.field);
      if (f.rank() != spec.degree) throw NonInvertible("generator matrix is singular");
      gens.push_back(std::move(f));
    }
    for (std::size_t i = names.size(); i < ngens; ++i) names.push_back("g" + std::to_string(i + 1));
  }

  // Breadth-first closure under right multiplication by generators.
  std::vector<std::vector<std::uint32_t>> right_mult;  // element x generator -> element
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> parent_gen;
  auto add = [&](std::string key, std::uint32_t from, std::uint32_t gen) -> std::uint32_t {
    auto [it, inserted] = t.by_key_.try_emplace(std::move(key), static_cast<std::uint32_t>(parent.size()));
    if (inserted) {
      if (parent.size() >= spec.order_bound) throw OrderBoundExceeded("closure exceeds the order bound " + std::to_string(spec.order_bound));
      parent.push_back(from);
      parent_gen.push_back(gen);
      right_mult.emplace_back(ngens, 0);
    }
    return it->second;
  };

  if (perm) {
    Permutation id(spec.degree);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint32_t>(i);
    t.perms_.push_back(id);
    add(perm_key(id), 0, 0);
  } else {
    t.rep_.push_back(Matrix::identity(spec.degree).in_field(spec.field));
    add(t.rep_.back().key(), 0, 0);
  }
  for (std::size_t x = 0; x < parent.size(); ++x) {
    for (std::size_t g = 0; g < ngens; ++g) {
      std::uint32_t y;
      if (perm) {
        Permutation p = compose(t.perms_[x], spec.permutations[g]);
        const std::size_t before = parent.size();
        y = add(perm_key(p), static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(g));
        if (parent.size() != before) t.perms_.push_back(std::move(p));
      } else {
        Matrix m = t.rep_[x] * gens[g];
        const std::size_t before = parent.size();
        y = add(m.key(), static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(g));
        if (parent.size() != before) t.rep_.push_back(std::move(m));
      }
      right_mult[x][g] = y;
    }
  }

  const std::size_t n = parent.size();
  std::vector<std::vector<std::uint32_t>> words(n);
  for (std::size_t x = 1; x < n; ++x) {
    words[x] = words[parent[x]];
    words[x].push_back(parent_gen[x]);
  }

  t.product_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t cur = static_cast<std::uint32_t>(a);
      for (auto g : words[b]) cur = right_mult[cur][g];
      t.product_[a * n + b] = cur;
    }
  }
  t.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t.product_[a * n + b] == 0) {
        t.inverse_[a] = static_cast<std::uint32_t>(b);
        break;
      }
    }
  }

  t.labels_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (perm) {
      t.labels_[x] = cycle_notation(t.perms_[x]);
    } else if (words[x].empty()) {
      t.labels_[x] = "e";
    } else {
      std::string w;
      for (auto g : words[x]) {
        if (!w.empty()) w += '*';
        w += names[g];
      }
      t.labels_[x] = std::move(w);
    }
    t.by_label_.emplace(t.labels_[x], static_cast<std::uint32_t>(x));
  }
  return t;
}

SubsetS::SubsetS(const GroupTable& table, std::vector<Element> members) : position_(table.order(), -1) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto e : members) {
    if (e.id >= table.order()) throw ValidationError("element index out of range");
  }
  members_ = std::move(members);
  for (std::size_t i = 0; i < members_.size(); ++i) position_[members_[i].id] = static_cast<int>(i);
}

std::size_t SubsetS::index_of(Element e) const {
  if (!contains(e)) throw NotInS("element is not in S");
  return static_cast<std::size_t>(position_[e.id]);
}

SubsetS conjugacy_closure(const GroupTable& table, std::span<const Element> seeds, bool add_inverses) {
  if (seeds.empty()) throw ValidationError("conjugacy_closure needs at least one seed");
  std::vector<bool> in(table.order(), false);
  std::deque<Element> queue;
  auto push = [&](Element e) {
    if (e == table.identity()) throw IdentityInSeed("identity reached while closing the seed set");
    if (!in[e.id]) {
      in[e.id] = true;
      queue.push_back(e);
    }
  };
  for (auto s : seeds) {
    if (s.id >= table.order()) throw ValidationError("seed index out of range");
    push(s);
  }
  std::vector<Element> out;
  while (!queue.empty()) {
    const Element s = queue.front();
    queue.pop_front();
    out.push_back(s);
    for (auto g : table.elements()) push(table.conjugate(g, s));
    if (add_inverses) push(table.inverse(s));
  }
  return SubsetS(table, std::move(out));
}

bool SubsetValidation::ok() const { return first_failure() == 0; }

int SubsetValidation::first_failure() const {
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    if (!conditions[i].pass) return static_cast<int>(i) + 1;
  }
  return 0;
}

SubsetValidation validate_subset(const GroupTable& table, std::span<const Element> members) {
  SubsetValidation v;
  std::vector<bool> in(table.order(), false);
  for (auto s : members) {
    if (s.id >= table.order()) throw ValidationError("element index out of range");
    in[s.id] = true;
  }
  for (auto s : members) {
    if (!in[table.inverse(s).id]) {
      v.conditions[0] = {false, s, std::nullopt, "inverse of " + table.label(s) + " is not in S"};
      break;
    }
  }
  for (auto g : table.elements()) {
    if (!v.conditions[1].pass) break;
    for (auto s : members) {
      const Element c = table.product(table.product(table.inverse(g), s), g);
      if (!in[c.id]) {
        v.conditions[1] = {false, s, g, "conjugating " + table.label(s) + " by " + table.label(g) + " leaves S"};
        break;
      }
    }
  }
  if (in[table.identity().id]) v.conditions[2] = {false, table.identity(), std::nullopt, "S contains the identity"};
  if (members.empty()) v.conditions[3] = {false, std::nullopt, std::nullopt, "S is empty"};
  return v;
}

std::vector<Element> complex_reflections(const GroupTable& table) {
  if (!table.has_rep()) throw NoRepresentation("complex_reflections needs a matrix representation");
  std::vector<Element> out;
  const Matrix id = Matrix::identity(table.degree());
  for (auto g : table.elements()) {
    if (g == table.identity()) continue;
    if ((table.rep(g) - id).rank() == 1) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& table) {
  std::vector<bool> seen(table.order(), false);
  std::vector<std::vector<Element>> classes;
  for (auto x : table.elements()) {
    if (seen[x.id]) continue;
    std::set<Element> cls;
    for (auto g : table.elements()) cls.insert(table.conjugate(g, x));
    for (auto c : cls) seen[c.id] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

}  // namespace dforge
