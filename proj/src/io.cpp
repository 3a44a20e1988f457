#include "gradex/io.hpp"

#include <fstream>
#include <sstream>

namespace gradex::io {

namespace {

using Violations = std::vector<Violation>;

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

bool is_int(const json& j) { return j.is_number_integer() || j.is_number_unsigned(); }

Integer integer_of(const json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  return Integer(std::to_string(j.get<std::int64_t>()));
}

std::optional<Rational> parse_scalar(const json& j) {
  if (is_int(j)) return Rational(integer_of(j));
  if (!j.is_string()) return std::nullopt;
  const std::string s = j.get<std::string>();
  try {
    auto slash = s.find('/');
    Integer num(s.substr(0, slash));
    Integer den = slash == std::string::npos ? Integer(1) : Integer(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::optional<FGAbelianGroup> check_group(const json& j, const std::string& path, Violations& V) {
  if (!j.is_object()) {
    V.push_back({path, "group must be an object"});
    return std::nullopt;
  }
  bool ok = true;
  if (!j.contains("free_rank") || !is_int(j["free_rank"]) || integer_of(j["free_rank"]) < 0) {
    V.push_back({at(path, "free_rank"), "nonnegative integer required"});
    ok = false;
  }
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) {
      V.push_back({at(path, "torsion"), "array of integers required"});
      ok = false;
    } else {
      for (std::size_t i = 0; i < j["torsion"].size(); ++i) {
        const json& t = j["torsion"][i];
        if (!is_int(t)) {
          V.push_back({idx(at(path, "torsion"), i), "integer required"});
          ok = false;
          continue;
        }
        Integer d = integer_of(t);
        if (d < 2) {
          V.push_back({idx(at(path, "torsion"), i), "torsion factor must be at least 2"});
          ok = false;
        } else if (!torsion.empty() && torsion.back() >= 2 && d % torsion.back() != 0) {
          V.push_back({idx(at(path, "torsion"), i), "torsion factors must divide their successors"});
          ok = false;
        }
        torsion.push_back(d);
      }
    }
  }
  if (!ok) return std::nullopt;
  return FGAbelianGroup(integer_of(j["free_rank"]).get_ui(), torsion);
}

std::optional<Field> check_field(const json& j, const std::string& path, Violations& V) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("p") && is_int(j["p"])) {
    Integer p = integer_of(j["p"]);
    if (p >= 2 && p.fits_ulong_p() && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0) return Field::prime(p.get_ui());
    V.push_back({at(path, "p"), "p must be prime"});
    return std::nullopt;
  }
  V.push_back({path, "field must be \"Q\" or {\"p\": prime}"});
  return std::nullopt;
}

std::optional<GroupElement> check_degree(const FGAbelianGroup& G, const json& j, const std::string& path,
                                         Violations& V) {
  if (!j.is_array() || j.size() != G.ngens()) {
    V.push_back({path, "degree must be an array of " + std::to_string(G.ngens()) + " integers"});
    return std::nullopt;
  }
  IntVector c;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!is_int(j[i])) {
      V.push_back({idx(path, i), "integer required"});
      return std::nullopt;
    }
    c.push_back(integer_of(j[i]));
  }
  for (std::size_t t = 0; t < G.torsion().size(); ++t) {
    const Integer& x = c[G.free_rank() + t];
    if (x < 0 || x >= G.torsion()[t]) {
      V.push_back({idx(path, G.free_rank() + t), "torsion coordinate outside [0, d)"});
      return std::nullopt;
    }
  }
  return GroupElement{c};
}

std::optional<std::vector<GroupElement>> check_basis(const FGAbelianGroup& G, const json& j, const std::string& path,
                                                     Violations& V) {
  if (!j.is_array()) {
    V.push_back({path, "basis must be an array"});
    return std::nullopt;
  }
  std::vector<GroupElement> degs;
  bool ok = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_object() || !j[i].contains("degree")) {
      V.push_back({idx(path, i), "basis entries need a degree"});
      ok = false;
      continue;
    }
    auto d = check_degree(G, j[i]["degree"], at(idx(path, i), "degree"), V);
    if (d) degs.push_back(*d);
    else ok = false;
  }
  if (!ok) return std::nullopt;
  return degs;
}

// Entries [i, j, [[k, c], ...]]; calls fn(t, i, j, k, c) on each well-formed term.
template <class Fn>
bool check_triples(const json& j, const std::string& path, std::size_t ni, std::size_t nj, std::size_t nk,
                   Violations& V, Fn fn) {
  if (!j.is_array()) {
    V.push_back({path, "array of [i, j, [[k, c], ...]] required"});
    return false;
  }
  bool ok = true;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const json& e = j[t];
    const std::string p = idx(path, t);
    if (!e.is_array() || e.size() != 3 || !is_int(e[0]) || !is_int(e[1]) || !e[2].is_array()) {
      V.push_back({p, "entry must be [i, j, [[k, c], ...]]"});
      ok = false;
      continue;
    }
    Integer i = integer_of(e[0]), jj = integer_of(e[1]);
    if (i < 0 || i >= Integer(static_cast<unsigned long>(ni)) || jj < 0 || jj >= Integer(static_cast<unsigned long>(nj))) {
      V.push_back({p, "index out of range"});
      ok = false;
      continue;
    }
    for (std::size_t s = 0; s < e[2].size(); ++s) {
      const json& term = e[2][s];
      const std::string q = idx(at(p, "terms"), s);
      if (!term.is_array() || term.size() != 2 || !is_int(term[0])) {
        V.push_back({q, "term must be [k, c]"});
        ok = false;
        continue;
      }
      Integer k = integer_of(term[0]);
      auto c = parse_scalar(term[1]);
      if (k < 0 || k >= Integer(static_cast<unsigned long>(nk))) {
        V.push_back({q, "index out of range"});
        ok = false;
        continue;
      }
      if (!c) {
        V.push_back({at(q, "c"), "scalar must be an integer or \"a/b\""});
        ok = false;
        continue;
      }
      fn(t, i.get_ui(), jj.get_ui(), k.get_ui(), *c);
    }
  }
  return ok;
}

struct RingShape {
  FGAbelianGroup G;
  std::optional<Field> F;
  std::vector<GroupElement> degrees;
};

std::optional<RingShape> check_ring(const json& j, const std::string& path, Violations& V) {
  if (!j.is_object()) {
    V.push_back({path, "ring must be an object"});
    return std::nullopt;
  }
  for (const char* key : {"group", "field", "basis", "mul", "unit"})
    if (!j.contains(key)) V.push_back({at(path, key), "required"});
  if (!j.contains("group") || !j.contains("basis")) return std::nullopt;
  auto G = check_group(j["group"], at(path, "group"), V);
  std::optional<Field> F;
  if (j.contains("field")) F = check_field(j["field"], at(path, "field"), V);
  if (!G) return std::nullopt;
  auto degs = check_basis(*G, j["basis"], at(path, "basis"), V);
  if (!degs) return std::nullopt;
  const std::size_t n = degs->size();
  if (j.contains("mul")) {
    check_triples(j["mul"], at(path, "mul"), n, n, n, V,
                  [&](std::size_t t, std::size_t i, std::size_t jj, std::size_t k, const Rational& c) {
                    if (c != 0 && !(G->add((*degs)[i], (*degs)[jj]) == (*degs)[k]))
                      V.push_back({idx(at(path, "mul"), t), "grading (" + std::to_string(i) + "," +
                                                                std::to_string(jj) + "," + std::to_string(k) + ")"});
                  });
  }
  if (j.contains("unit")) {
    const json& u = j["unit"];
    if (!u.is_array() || u.size() != n) V.push_back({at(path, "unit"), "unit must have one scalar per basis element"});
    else
      for (std::size_t i = 0; i < n; ++i)
        if (!parse_scalar(u[i])) V.push_back({idx(at(path, "unit"), i), "scalar must be an integer or \"a/b\""});
  }
  return RingShape{*G, F, *degs};
}

void check_module(const json& j, Violations& V) {
  for (const char* key : {"ring", "basis", "action"})
    if (!j.contains(key)) V.push_back({key, "required"});
  if (!j.contains("ring")) return;
  auto R = check_ring(j["ring"], "ring", V);
  if (!R || !j.contains("basis")) return;
  auto degs = check_basis(R->G, j["basis"], "basis", V);
  if (!degs || !j.contains("action")) return;
  check_triples(j["action"], "action", R->degrees.size(), degs->size(), degs->size(), V,
                [&](std::size_t t, std::size_t i, std::size_t jj, std::size_t k, const Rational& c) {
                  if (c != 0 && !(R->G.add(R->degrees[i], (*degs)[jj]) == (*degs)[k]))
                    V.push_back({idx("action", t), "grading (" + std::to_string(i) + "," + std::to_string(jj) +
                                                       "," + std::to_string(k) + ")"});
                });
}

std::optional<IntMatrix> check_int_matrix(const json& j, const std::string& path, std::size_t rows,
                                          std::optional<std::size_t> cols, Violations& V) {
  if (!j.is_array() || j.size() != rows) {
    V.push_back({path, "matrix must have " + std::to_string(rows) + " rows"});
    return std::nullopt;
  }
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || (cols && row.size() != *cols)) {
      V.push_back({idx(path, r), "row has the wrong length"});
      return std::nullopt;
    }
    IntVector v;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!is_int(row[c])) {
        V.push_back({idx(idx(path, r), c), "integer required"});
        return std::nullopt;
      }
      v.push_back(integer_of(row[c]));
    }
    out.push_back(v);
  }
  return IntMatrix::from_rows(out, cols.value_or(out.empty() ? 0 : out[0].size()));
}

void check_hom(const json& j, Violations& V) {
  for (const char* key : {"source", "target", "matrix"})
    if (!j.contains(key)) V.push_back({key, "required"});
  if (!j.contains("source") || !j.contains("target") || !j.contains("matrix")) return;
  auto S = check_group(j["source"], "source", V);
  auto T = check_group(j["target"], "target", V);
  if (!S || !T) return;
  auto m = check_int_matrix(j["matrix"], "matrix", T->ngens(), S->ngens(), V);
  if (!m) return;
  try {
    GroupHom(*S, *T, *m);
  } catch (const ValidationError& e) {
    V.push_back({"matrix", e.invariant()});
  }
}

void check_monoid_algebra(const json& j, Violations& V) {
  for (const char* key : {"base", "monoid", "mode"})
    if (!j.contains(key)) V.push_back({key, "required"});
  std::optional<RingShape> R;
  if (j.contains("base")) R = check_ring(j["base"], "base", V);
  std::optional<std::size_t> d;
  if (j.contains("monoid")) {
    const json& m = j["monoid"];
    if (!m.is_object() || !m.contains("dim") || !is_int(m["dim"]) || integer_of(m["dim"]) < 0) {
      V.push_back({"monoid.dim", "nonnegative integer required"});
    } else {
      d = integer_of(m["dim"]).get_ui();
      if (!m.contains("gens") || !m["gens"].is_array()) V.push_back({"monoid.gens", "array of vectors required"});
      else
        for (std::size_t i = 0; i < m["gens"].size(); ++i) {
          const json& g = m["gens"][i];
          if (!g.is_array() || g.size() != *d || !std::all_of(g.begin(), g.end(), is_int))
            V.push_back({idx("monoid.gens", i), "generator must have dim integer entries"});
        }
    }
  }
  if (j.contains("mode")) {
    const json& mode = j["mode"];
    if (mode.is_string()) {
      std::string s = mode.get<std::string>();
      if (s != "fine" && s != "coarse") V.push_back({"mode", "mode must be \"fine\", \"coarse\" or {\"d\": matrix}"});
    } else if (mode.is_object() && mode.contains("d")) {
      if (R && d) check_int_matrix(mode["d"], "mode.d", R->G.ngens(), *d, V);
    } else {
      V.push_back({"mode", "mode must be \"fine\", \"coarse\" or {\"d\": matrix}"});
    }
  }
}

void check_principal(const json& j, Violations& V) {
  for (const char* key : {"field", "group", "var_degree", "ambient", "gens"})
    if (!j.contains(key)) V.push_back({key, "required"});
  if (j.contains("field")) check_field(j["field"], "field", V);
  if (!j.contains("group")) return;
  auto G = check_group(j["group"], "group", V);
  if (!G) return;
  if (j.contains("var_degree")) check_degree(*G, j["var_degree"], "var_degree", V);
  std::size_t rows = 0;
  if (j.contains("ambient")) {
    if (!j["ambient"].is_array()) V.push_back({"ambient", "array of degrees required"});
    else {
      rows = j["ambient"].size();
      for (std::size_t r = 0; r < rows; ++r) check_degree(*G, j["ambient"][r], idx("ambient", r), V);
    }
  }
  if (!j.contains("gens")) return;
  if (!j["gens"].is_array()) {
    V.push_back({"gens", "array of columns required"});
    return;
  }
  for (std::size_t c = 0; c < j["gens"].size(); ++c) {
    const json& col = j["gens"][c];
    if (!col.is_array() || col.size() != rows) {
      V.push_back({idx("gens", c), "column needs one entry per ambient generator"});
      continue;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      const json& e = col[r];
      if (e.is_null() || (is_int(e) && integer_of(e) == 0)) continue;
      if (!e.is_array() || e.size() != 2 || !parse_scalar(e[0]) || !is_int(e[1]) || integer_of(e[1]) < 0)
        V.push_back({idx(idx("gens", c), r), "entry must be null or [c, k] with k >= 0"});
    }
  }
}

void require_valid(const json& j, DocKind kind) {
  auto V = schema_validate(j);
  if (!V.empty()) throw ValidationError("schema", V.front().path + ": " + V.front().rule);
  if (kind_of(j) != kind) throw ValidationError("schema", "document has the wrong kind");
}

std::vector<Rational> structure_from(const json& mul, std::size_t n, const Field& f) {
  std::vector<Rational> c(n * n * n);
  std::vector<bool> given(n * n, false);
  for (const auto& e : mul) given[e[0].get<std::size_t>() * n + e[1].get<std::size_t>()] = true;
  for (const auto& e : mul) {
    const std::size_t i = e[0].get<std::size_t>(), j = e[1].get<std::size_t>();
    for (const auto& term : e[2]) {
      const std::size_t k = term[0].get<std::size_t>();
      Rational v = f.reduce(*parse_scalar(term[1]));
      c[(i * n + j) * n + k] = f.add(c[(i * n + j) * n + k], v);
      if (!given[j * n + i]) c[(j * n + i) * n + k] = f.add(c[(j * n + i) * n + k], v);
    }
  }
  return c;
}

std::vector<GroupElement> degrees_from(const FGAbelianGroup& G, const json& basis) {
  std::vector<GroupElement> degs;
  for (const auto& b : basis) degs.push_back(element_from_json(G, b["degree"], "basis"));
  return degs;
}

}  // namespace

json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Rational scalar_from_json(const json& j, const std::string& path) {
  auto q = parse_scalar(j);
  if (!q) throw ValidationError("schema", path + ": scalar must be an integer or \"a/b\"");
  return *q;
}

json to_json(const FGAbelianGroup& G) {
  json t = json::array();
  for (const auto& d : G.torsion()) t.push_back(d.get_si());
  return json{{"free_rank", G.free_rank()}, {"torsion", t}};
}

FGAbelianGroup group_from_json(const json& j, const std::string& path) {
  Violations V;
  auto G = check_group(j, path, V);
  if (!G) throw ValidationError("schema", V.front().path + ": " + V.front().rule);
  return *G;
}

json to_json(const GroupElement& g) {
  json a = json::array();
  for (const auto& c : g.coords) a.push_back(c.get_si());
  return a;
}

GroupElement element_from_json(const FGAbelianGroup& G, const json& j, const std::string& path) {
  Violations V;
  auto g = check_degree(G, j, path, V);
  if (!g) throw ValidationError("schema", V.front().path + ": " + V.front().rule);
  return *g;
}

json to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return json{{"p", f.characteristic()}};
}

Field field_from_json(const json& j, const std::string& path) {
  Violations V;
  auto f = check_field(j, path, V);
  if (!f) throw ValidationError("schema", V.front().path + ": " + V.front().rule);
  return *f;
}

json to_json(const GroupHom& h) {
  json m = json::array();
  for (std::size_t r = 0; r < h.matrix().rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < h.matrix().cols(); ++c) row.push_back(h.matrix()(r, c).get_si());
    m.push_back(row);
  }
  return json{{"source", to_json(h.source())}, {"target", to_json(h.target())}, {"matrix", m}};
}

GroupHom hom_from_json(const json& j) {
  require_valid(j, DocKind::hom);
  FGAbelianGroup S = group_from_json(j["source"], "source"), T = group_from_json(j["target"], "target");
  std::vector<IntVector> rows;
  for (const auto& row : j["matrix"]) {
    IntVector v;
    for (const auto& x : row) v.push_back(integer_of(x));
    rows.push_back(v);
  }
  return GroupHom(S, T, IntMatrix::from_rows(rows, S.ngens()));
}

json to_json(const GradedAlgebra& R) {
  const std::size_t n = R.dim();
  json basis = json::array(), mul = json::array(), unit = json::array();
  for (const auto& d : R.degrees()) basis.push_back(json{{"degree", to_json(d)}});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < n; ++k)
        if (R.c(i, j, k) != 0) terms.push_back(json::array({k, to_json(R.c(i, j, k))}));
      if (!terms.empty()) mul.push_back(json::array({i, j, terms}));
    }
  for (const auto& u : R.unit()) unit.push_back(to_json(u));
  return json{{"group", to_json(R.group())}, {"field", to_json(R.field())}, {"basis", basis}, {"mul", mul},
              {"unit", unit}};
}

AlgebraPtr algebra_from_json(const json& j, const std::optional<Field>& field, const std::string& path) {
  Violations V;
  auto shape = check_ring(j, path, V);
  if (!V.empty()) throw ValidationError("schema", V.front().path + ": " + V.front().rule);
  const Field f = field ? *field : *shape->F;
  Vector unit;
  for (const auto& u : j["unit"]) unit.push_back(f.reduce(*parse_scalar(u)));
  return GradedAlgebra::make(shape->G, f, shape->degrees, structure_from(j["mul"], shape->degrees.size(), f), unit);
}

json to_json(const MonoidAlgebra& R) {
  json gens = json::array();
  for (const auto& g : R.monoid().generators()) {
    json v = json::array();
    for (const auto& x : g) v.push_back(x.get_si());
    gens.push_back(v);
  }
  json mode;
  if (R.mode() == GradingMode::fine) mode = "fine";
  else if (R.mode() == GradingMode::coarse) mode = "coarse";
  else {
    json m = json::array();
    for (std::size_t r = 0; r < R.d_matrix().rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < R.d_matrix().cols(); ++c) row.push_back(R.d_matrix()(r, c).get_si());
      m.push_back(row);
    }
    mode = json{{"d", m}};
  }
  return json{{"base", to_json(*R.base())},
              {"monoid", json{{"dim", R.monoid().ambient_dim()}, {"gens", gens}}},
              {"mode", mode}};
}

MonoidAlgebra monoid_algebra_from_json(const json& j, const std::optional<Field>& field) {
  require_valid(j, DocKind::monoid_algebra);
  AlgebraPtr base = algebra_from_json(j["base"], field, "base");
  const std::size_t d = j["monoid"]["dim"].get<std::size_t>();
  std::vector<IntVector> gens;
  for (const auto& g : j["monoid"]["gens"]) {
    IntVector v;
    for (const auto& x : g) v.push_back(integer_of(x));
    gens.push_back(v);
  }
  AffineMonoid M(d, gens);
  const json& mode = j["mode"];
  if (mode.is_string()) return MonoidAlgebra(base, M, mode == "fine" ? GradingMode::fine : GradingMode::coarse);
  std::vector<IntVector> rows;
  for (const auto& row : mode["d"]) {
    IntVector v;
    for (const auto& x : row) v.push_back(integer_of(x));
    rows.push_back(v);
  }
  return MonoidAlgebra(base, M, GradingMode::d, IntMatrix::from_rows(rows, d));
}

json to_json(const GradedModule& M) {
  json basis = json::array(), action = json::array();
  for (const auto& d : M.degrees()) basis.push_back(json{{"degree", to_json(d)}});
  for (std::size_t i = 0; i < M.ring()->dim(); ++i)
    for (std::size_t j = 0; j < M.dim(); ++j) {
      json terms = json::array();
      for (std::size_t k = 0; k < M.dim(); ++k)
        if (M.action(i)(k, j) != 0) terms.push_back(json::array({k, to_json(M.action(i)(k, j))}));
      if (!terms.empty()) action.push_back(json::array({i, j, terms}));
    }
  return json{{"ring", to_json(*M.ring())}, {"basis", basis}, {"action", action}};
}

GradedModule module_from_json(const json& j, const std::optional<Field>& field) {
  require_valid(j, DocKind::module);
  AlgebraPtr R = algebra_from_json(j["ring"], field, "ring");
  auto degs = degrees_from(R->group(), j["basis"]);
  const Field& f = R->field();
  std::vector<Matrix> act(R->dim(), Matrix(f, degs.size(), degs.size()));
  for (const auto& e : j["action"]) {
    const std::size_t i = e[0].get<std::size_t>(), jj = e[1].get<std::size_t>();
    for (const auto& term : e[2]) {
      const std::size_t k = term[0].get<std::size_t>();
      act[i](k, jj) = f.add(act[i](k, jj), f.reduce(*parse_scalar(term[1])));
    }
  }
  return GradedModule::make(R, degs, act);
}

json to_json(const PrincipalPresentation& P) {
  json ambient = json::array(), gens = json::array();
  for (const auto& d : P.ambient) ambient.push_back(to_json(d));
  for (const auto& col : P.gens) {
    json c = json::array();
    for (const auto& e : col) c.push_back(e ? json::array({to_json(e->coeff), e->exponent}) : json(nullptr));
    gens.push_back(c);
  }
  return json{{"field", to_json(P.field)}, {"group", to_json(P.group)}, {"var_degree", to_json(P.var_degree)},
              {"ambient", ambient}, {"gens", gens}};
}

PrincipalPresentation principal_from_json(const json& j, const std::optional<Field>& field) {
  require_valid(j, DocKind::principal);
  PrincipalPresentation P;
  P.group = group_from_json(j["group"]);
  P.field = field ? *field : field_from_json(j["field"]);
  P.var_degree = element_from_json(P.group, j["var_degree"], "var_degree");
  for (const auto& d : j["ambient"]) P.ambient.push_back(element_from_json(P.group, d, "ambient"));
  for (const auto& col : j["gens"]) {
    std::vector<PrincipalEntry> c;
    for (const auto& e : col) {
      if (e.is_null() || is_int(e)) c.push_back(std::nullopt);
      else c.push_back(Monomial{P.field.reduce(*parse_scalar(e[0])), e[1].get<std::size_t>()});
    }
    P.gens.push_back(c);
  }
  P.validate();
  return P;
}

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Subspace& s) {
  json a = json::array();
  for (const auto& b : s.basis()) a.push_back(to_json(b));
  return a;
}

json to_json(const HilbertFunction& h) {
  json o = json::object();
  for (const auto& [g, n] : h)
    if (n > 0) o[g.to_string()] = n;
  return o;
}

json betti_json(const FreeResolution& r) {
  json o = json::object();
  for (std::size_t i = 0; i < r.betti.size(); ++i) o[std::to_string(i)] = to_json(r.betti[i]);
  return o;
}

json to_json(const DimensionReport& d) {
  json v = d.value ? json(*d.value) : json(d.to_string());
  return json{{"kind", to_string(d.kind)}, {"value", v}, {"cutoff", d.cutoff}};
}

json to_json(Truth t) {
  if (t == Truth::undecided) return "undecided";
  return t == Truth::yes;
}

DocKind kind_of(const json& j) {
  if (!j.is_object()) return DocKind::unknown;
  if (j.contains("action")) return DocKind::module;
  if (j.contains("monoid")) return DocKind::monoid_algebra;
  if (j.contains("mul")) return DocKind::ring;
  if (j.contains("var_degree")) return DocKind::principal;
  if (j.contains("matrix")) return DocKind::hom;
  if (j.contains("free_rank")) return DocKind::group;
  return DocKind::unknown;
}

std::vector<Violation> schema_validate(const json& doc) {
  Violations V;
  switch (kind_of(doc)) {
    case DocKind::group: check_group(doc, "", V); break;
    case DocKind::hom: check_hom(doc, V); break;
    case DocKind::ring: check_ring(doc, "", V); break;
    case DocKind::monoid_algebra: check_monoid_algebra(doc, V); break;
    case DocKind::module: check_module(doc, V); break;
    case DocKind::principal: check_principal(doc, V); break;
    default: V.push_back({"", "unrecognized document"});
  }
  return V;
}

json load(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw ValidationError("input", "cannot read " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return json::parse(ss.str());
}

}  // namespace gradex::io
