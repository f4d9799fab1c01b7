#include "io.hpp"

#include <cctype>
#include <fstream>
#include <algorithm>
#include <map>
#include <sstream>

#include <dunkl_forge/errors.hpp>

namespace dforge::io {

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

// Unsigned decimal or fraction at s[pos], read exactly.
mpq_class read_number(const std::string& s, std::size_t& pos) {
  const std::size_t start = pos;
  std::string digits;
  long scale = 0;
  bool dot = false;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
    if (s[pos] == '.') {
      if (dot) throw ParseError("two decimal points in '" + s + "'");
      dot = true;
    } else {
      digits += s[pos];
      if (dot) ++scale;
    }
    ++pos;
  }
  if (digits.empty()) throw ParseError("expected a number at offset " + std::to_string(start) + " of '" + s + "'");
  mpz_class den = 1;
  for (long k = 0; k < scale; ++k) den *= 10;
  mpq_class value(mpz_class(digits, 10), den);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    const std::size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (d0 == pos) throw ParseError("missing denominator in '" + s + "'");
    const mpz_class d(s.substr(d0, pos - d0), 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    value /= d;
  }
  value.canonicalize();
  return value;
}

std::vector<std::string> labels_of(const json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

// Class index per element.
std::vector<std::size_t> class_index(const GroupTable& t) {
  std::vector<std::size_t> idx(t.order());
  const auto classes = conjugacy_classes(t);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto g : classes[c]) idx[g.id] = c;
  return idx;
}

// Per-class values from { label: value } plus an optional "default".
template <class T, class Conv>
std::vector<T> class_values(const json& j, const GroupTable& t, const SubsetS& S, Conv conv) {
  const auto classes = conjugacy_classes(t);
  const auto idx = class_index(t);
  std::vector<std::optional<T>> vals(classes.size());
  std::optional<T> fallback;
  for (const auto& [key, v] : j.items()) {
    if (key == "default") {
      fallback = conv(v);
      continue;
    }
    vals[idx[parse_element(key, t).id]] = conv(v);
  }
  std::vector<T> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (!vals[c] && fallback) vals[c] = fallback;
    const bool needed = std::any_of(S.begin(), S.end(), [&](Element s) { return idx[s.id] == c; });
    if (needed && !vals[c]) throw ValidationError("no multiplicity for the class of " + t.label(classes[c].front()));
    out.push_back(vals[c].value_or(T{}));
  }
  return out;
}

SubsetS subset_or_reflections(const json& j, const GroupTable& t) {
  if (j.contains("S")) return parse_subset(j.at("S"), t);
  return SubsetS(t, complex_reflections(t));
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

Scalar parse_scalar(const std::string& raw, const Field& field) {
  const std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.front() == '(') {
    double re = 0, im = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream is(s);
    if (!(is >> c1 >> re >> c2 >> im >> c3) || c2 != ',' || c3 != ')') throw ParseError("bad complex '" + raw + "'");
    return Scalar::from_complex({re, im}).in_field(field);
  }
  Scalar total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected + or - at offset " + std::to_string(pos) + " of '" + raw + "'");
    }
    Scalar term(sign);
    bool any = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      term *= Scalar(read_number(s, pos));
      any = true;
      if (pos < s.size() && s[pos] == '*') ++pos;
    }
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'z')) {
      const char sym = s[pos++];
      long power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t p0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (p0 == pos) throw ParseError("missing exponent in '" + raw + "'");
        power = std::stol(s.substr(p0, pos - p0));
      }
      if (sym == 'z' && (!field.exact() || field.conductor <= 1)) throw ParseError("'z' needs a cyclotomic field");
      term *= sym == 'i' ? Scalar::zeta(4, power) : Scalar::zeta(field.conductor, power);
      any = true;
    }
    if (!any) throw ParseError("bad scalar '" + raw + "'");
    total += term;
  }
  return total.in_field(field);
}

Scalar scalar_from_json(const json& j, const Field& field) {
  if (j.is_number_integer()) return Scalar(j.get<long>()).in_field(field);
  if (j.is_number()) return parse_scalar(j.dump(), field);
  if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
  if (j.is_array()) {
    if (!field.exact() || field.conductor <= 1) throw ParseError("coefficient lists need a cyclotomic field");
    std::vector<mpq_class> c;
    for (const auto& v : j) {
      const Scalar s = scalar_from_json(v, Field::rational());
      if (!s.is_rational()) throw ParseError("cyclotomic coefficients must be rational");
      c.push_back(s.as_rational());
    }
    return Scalar::cyclotomic(field.conductor, std::move(c)).in_field(field);
  }
  throw ParseError("unsupported scalar " + j.dump());
}

cplx complex_from_json(const json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    int m = 4;
    if (s.find('z') != std::string::npos) throw ParseError("use explicit complex values for multiplicities");
    return parse_scalar(s, Field::cyclotomic(m)).to_complex();
  }
  throw ParseError("unsupported complex value " + j.dump());
}

std::shared_ptr<const GroupTable> parse_group(const json& j) {
  GroupSpec spec;
  const std::string kind = j.value("kind", "permutation");
  if (kind == "permutation") {
    spec.kind = GroupKind::Permutation;
  } else if (kind == "matrix") {
    spec.kind = GroupKind::Matrix;
  } else {
    throw ParseError("unknown group kind '" + kind + "'");
  }
  spec.degree = require(j, "degree").get<std::size_t>();
  spec.field = Field::parse(j.value("scalar", "rational"));
  spec.order_bound = j.value("order_bound", std::size_t{10000});
  const json& gens = require(j, "generators");
  if (!gens.is_array() || gens.empty()) throw ParseError("generators must be a nonempty array");
  for (const auto& g : gens) {
    if (spec.kind == GroupKind::Permutation) {
      if (g.is_string()) {
        spec.permutations.push_back(parse_cycles(g.get<std::string>(), spec.degree));
      } else {
        Permutation p;
        for (const auto& v : g) {
          const long x = v.get<long>();
          if (x < 1 || static_cast<std::size_t>(x) > spec.degree) throw ParseError("permutation image out of range");
          p.push_back(static_cast<std::uint32_t>(x - 1));
        }
        if (p.size() != spec.degree) throw ParseError("permutation has wrong length");
        spec.permutations.push_back(std::move(p));
      }
    } else {
      if (!g.is_array() || g.size() != spec.degree) throw ParseError("matrix generator must have degree rows");
      Matrix m(spec.degree, spec.degree);
      for (std::size_t r = 0; r < spec.degree; ++r) {
        if (!g[r].is_array() || g[r].size() != spec.degree) throw ParseError("matrix row has wrong length");
        for (std::size_t c = 0; c < spec.degree; ++c) m(r, c) = scalar_from_json(g[r][c], spec.field);
      }
      spec.matrices.push_back(std::move(m));
    }
  }
  if (j.contains("names")) spec.generator_names = labels_of(j.at("names"));
  return std::make_shared<const GroupTable>(build_group(spec));
}

Element parse_element(const json& j, const GroupTable& table) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (auto e = table.find_label(s)) return *e;
    throw ValidationError("unknown element '" + s + "'");
  }
  if (j.is_array() && table.has_rep()) {
    const std::size_t n = table.degree();
    if (j.size() != n) throw ParseError("element matrix has wrong size");
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(j[r].at(c), table.field());
    if (auto e = table.find_matrix(m)) return *e;
    throw ValidationError("matrix is not a group element");
  }
  if (j.is_array() && table.is_permutation_group()) {
    Permutation p;
    for (const auto& v : j) p.push_back(v.get<std::uint32_t>() - 1);
    if (auto e = table.find_permutation(p)) return *e;
    throw ValidationError("permutation is not a group element");
  }
  throw ParseError("unsupported element " + j.dump());
}

SubsetS parse_subset(const json& j, const GroupTable& table) {
  std::vector<Element> members;
  if (j.is_array()) {
    for (const auto& e : j) members.push_back(parse_element(e, table));
  } else if (j.contains("elements")) {
    for (const auto& e : j.at("elements")) members.push_back(parse_element(e, table));
  } else if (j.contains("closure_of")) {
    std::vector<Element> seeds;
    for (const auto& e : j.at("closure_of")) seeds.push_back(parse_element(e, table));
    return conjugacy_closure(table, seeds, j.value("add_inverses", true));
  } else if (j.value("reflections", false)) {
    members = complex_reflections(table);
  } else if (j.value("all_nonidentity", false)) {
    for (auto g : table.elements())
      if (g != table.identity()) members.push_back(g);
  } else {
    throw ParseError("subset spec needs elements, closure_of, reflections or all_nonidentity");
  }
  const auto v = validate_subset(table, members);
  if (!v.ok()) {
    const int k = v.first_failure();
    throw ValidationError("subset condition (" + std::to_string(k) + ") fails: " + v.conditions[k - 1].message);
  }
  return SubsetS(table, members);
}

CyclicSpace parse_space(const json& j) {
  if (j.contains("builtin")) {
    if (j.at("builtin") == "fano") return fano_space();
    throw ParseError("unknown builtin space " + j.at("builtin").dump());
  }
  const auto labels = labels_of(require(j, "points"));
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!index.emplace(labels[i], i).second) throw ParseError("duplicate point '" + labels[i] + "'");
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& line : require(j, "lines")) {
    std::vector<std::size_t> pts;
    for (const auto& p : line) {
      auto it = index.find(p.get<std::string>());
      if (it == index.end()) throw ParseError("unknown point " + p.dump());
      pts.push_back(it->second);
    }
    lines.push_back(std::move(pts));
  }
  return CyclicSpace(labels, std::move(lines));
}

DunklConfig parse_dunkl(const json& j) {
  auto group = parse_group(require(j, "group"));
  SubsetS S = subset_or_reflections(j, *group);
  const std::string mode = j.value("mode", "real");
  if (mode != "real" && mode != "complex") throw ParseError("mode must be real or complex");
  const Field& f = group->field();
  const auto nu = class_values<Scalar>(require(j, "nu"), *group, S, [&](const json& v) { return scalar_from_json(v, f); });
  DunklConfig cfg = make_config(group, S, nu, mode == "real" ? DunklMode::Real : DunklMode::Complex);
  cfg.holomorphic = j.value("holomorphic", false);
  if (j.contains("roots")) {
    for (const auto& [key, v] : j.at("roots").items()) {
      const Element s = parse_element(key, *group);
      std::vector<Scalar> c;
      for (const auto& x : v) c.push_back(scalar_from_json(x, f));
      for (auto& d : cfg.data)
        if (d.element == s) d.root = LinearForm(c);
    }
  }
  if (j.contains("nu_elements")) {
    for (const auto& [key, v] : j.at("nu_elements").items()) {
      const Element s = parse_element(key, *group);
      for (auto& d : cfg.data)
        if (d.element == s) d.multiplicity = scalar_from_json(v, f);
    }
  }
  return cfg;
}

DisplacementConfig parse_displacement(const json& j) {
  auto group = parse_group(require(j, "group"));
  SubsetS S = subset_or_reflections(j, *group);
  const auto nu = class_values<cplx>(require(j, "nu"), *group, S, complex_from_json);
  DisplacementConfig cfg;
  if (j.contains("mu")) {
    // explicit line map; no exact representatives
    const bool flip = j.value("inner_product", "linear_second") == "linear_first";
    std::map<Element, CVector> given;
    for (const auto& [key, v] : j.at("mu").items()) {
      CVector vec;
      for (const auto& x : v) vec.push_back(flip ? std::conj(complex_from_json(x)) : complex_from_json(x));
      if (vec.size() != group->degree()) throw ParseError("mu vector has wrong length");
      given[parse_element(key, *group)] = vec;
    }
    const auto idx = class_index(*group);
    cfg.group = group;
    cfg.S = S;
    for (auto s : S) {
      auto it = given.find(s);
      CVector v = it != given.end() ? it->second : eigenline(group->rep(s));
      const double n = norm(v);
      if (n == 0) throw ValidationError("zero mu vector for " + group->label(s));
      for (auto& x : v) x /= n;
      cfg.mu.push_back(std::move(v));
      cfg.nu.push_back(nu[idx[s.id]]);
    }
    return cfg;
  }
  return make_displacement_config(group, S, nu);
}

json scalar_json(const Scalar& s) { return s.to_string(); }

json poly_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exp = json::array();
    for (auto v : e) exp.push_back(static_cast<int>(v));
    terms.push_back({{"exp", exp}, {"coef", c.to_string()}});
  }
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const json& j, const Field& field) {
  MultiPoly p(require(j, "nvars").get<std::size_t>());
  for (const auto& t : require(j, "terms")) {
    Exponent e;
    for (const auto& v : require(t, "exp")) {
      const int x = v.get<int>();
      if (x < 0 || x > kMaxDegreePerVariable) throw ParseError("exponent out of range");
      e.push_back(static_cast<std::uint8_t>(x));
    }
    p.add_term(e, scalar_from_json(require(t, "coef"), field));
  }
  return p;
}

json check_json(const CheckResult& c) {
  json j{{"name", c.name}, {"status", status_name(c.status)}, {"max_residual", c.max_residual},
         {"tolerance", c.tolerance}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (c.sampled) j["sampled"] = true;
  return j;
}

json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  return checks;
}

}  // namespace dforge::io
