#include "commsub/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace commsub {

namespace {

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t uint_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string string_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool bool_of(const Json& j, const char* key) {
  const Json& v = field_of(j, key);
  if (!v.is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

PrimeField field_from(const Json& j) {
  const std::uint64_t p = uint_of(j, "p");
  if (p > kMaxModulus) throw DomainError("modulus " + std::to_string(p) + " out of range");
  return PrimeField(static_cast<std::uint32_t>(p));
}

Vec vec_from(const Json& j, std::size_t len, const PrimeField& f) {
  if (!j.is_array() || j.size() != len)
    throw ParseError("expected an array of length " + std::to_string(len));
  Vec v(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (!j[i].is_number_integer()) throw ParseError("vector entries must be integers");
    const auto x = j[i].get<std::int64_t>();
    if (x < 0 || x >= static_cast<std::int64_t>(f.p()))
      throw DomainError("entry " + std::to_string(x) + " is not reduced mod " +
                        std::to_string(f.p()));
    v[i] = static_cast<Elem>(x);
  }
  return v;
}

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

} // namespace

Json to_json(const Matrix& m) {
  Json j;
  j["p"] = m.field().p();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = m.entries();
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const PrimeField f = field_from(j);
  const std::size_t rows = uint_of(j, "rows"), cols = uint_of(j, "cols");
  if (rows > 65536 || cols > 65536) throw DomainError("matrix shape too large");
  return Matrix(f, rows, cols, vec_from(field_of(j, "entries"), rows * cols, f));
}

Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["basis"] = to_json(s.basis());
  return j;
}

Subspace subspace_from_json(const Json& j) {
  const std::size_t n = uint_of(j, "ambient_dim");
  Matrix b = matrix_from_json(field_of(j, "basis"));
  if (b.cols() != n) throw DomainError("basis width differs from ambient_dim");
  return Subspace::from_canonical(std::move(b));
}

Json to_json(const StructureConstantAlgebra& a) {
  const std::size_t d = a.dim();
  const auto& f = a.field();
  const bool lie = a.kind() == AlgebraKind::lie;
  auto implied = [&](std::size_t i, std::size_t j) {
    // (j, i) with j > i is implicit when it is the negation of (i, j)
    if (!lie || i <= j) return false;
    auto lo = a.product(j, i), hi = a.product(i, j);
    for (std::size_t k = 0; k < d; ++k)
      if (hi[k] != f.neg(lo[k])) return false;
    return true;
  };
  Json sc = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto v = a.product(i, j);
      if (is_zero(v) || implied(i, j)) continue;
      Json e;
      e["i"] = i;
      e["j"] = j;
      e["v"] = std::vector<Elem>(v.begin(), v.end());
      sc.push_back(std::move(e));
    }
  // A zero (j, i) whose (i, j) is nonzero must be written explicitly.
  if (lie)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (is_zero(a.product(i, j)) && !is_zero(a.product(j, i))) {
          Json e;
          e["i"] = i;
          e["j"] = j;
          e["v"] = Vec(d, 0);
          sc.push_back(std::move(e));
        }
  Json j;
  j["kind"] = to_string(a.kind());
  j["p"] = f.p();
  j["dim"] = d;
  j["sc"] = std::move(sc);
  j["labels"] = a.labels();
  return j;
}

StructureConstantAlgebra algebra_from_json(const Json& j) {
  const std::string kind_s = string_of(j, "kind");
  AlgebraKind kind;
  if (kind_s == "lie") kind = AlgebraKind::lie;
  else if (kind_s == "assoc") kind = AlgebraKind::associative;
  else throw ParseError("algebra kind must be 'lie' or 'assoc', got '" + kind_s + "'");
  const PrimeField f = field_from(j);
  const std::size_t d = uint_of(j, "dim");
  if (d > 256) throw DomainError("algebra dimension " + std::to_string(d) + " is too large");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("'labels' must be an array of strings");
    for (const auto& l : *it) {
      if (!l.is_string()) throw ParseError("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  StructureConstantAlgebra a(kind, f, d, std::move(labels));
  const Json& sc = field_of(j, "sc");
  if (!sc.is_array()) throw ParseError("'sc' must be an array");
  std::vector<bool> seen(d * d, false);
  for (const auto& e : sc) {
    const std::size_t i = uint_of(e, "i"), k = uint_of(e, "j");
    if (i >= d || k >= d) throw DomainError("structure constant index out of range");
    if (seen[i * d + k])
      throw DomainError("duplicate entry (" + std::to_string(i) + ", " + std::to_string(k) + ")");
    seen[i * d + k] = true;
    a.set_product(i, k, vec_from(field_of(e, "v"), d, f));
  }
  if (kind == AlgebraKind::lie) {
    Vec neg(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = i + 1; k < d; ++k) {
        if (!seen[i * d + k] || seen[k * d + i]) continue;
        auto v = a.product(i, k);
        for (std::size_t m = 0; m < d; ++m) neg[m] = f.neg(v[m]);
        a.set_product(k, i, neg);
      }
  }
  return a;
}

Json to_json(const FormTuple& fs) {
  Json j;
  j["n"] = fs.n();
  j["t"] = fs.t();
  j["kind"] = to_string(fs.kind());
  j["p"] = fs.field().p();
  Json mats = Json::array();
  for (const auto& m : fs.mats()) mats.push_back(to_json(m));
  j["mats"] = std::move(mats);
  j["seed"] = fs.seed() ? Json(*fs.seed()) : Json(nullptr);
  return j;
}

FormTuple forms_from_json(const Json& j) {
  const PrimeField f = field_from(j);
  const std::size_t n = uint_of(j, "n"), t = uint_of(j, "t");
  const FormKind kind = form_kind_from_string(string_of(j, "kind"));
  const Json& mats = field_of(j, "mats");
  if (!mats.is_array() || mats.size() != t)
    throw ParseError("'mats' must hold " + std::to_string(t) + " matrices");
  std::vector<Matrix> ms;
  for (const auto& m : mats) {
    Matrix mat = matrix_from_json(m);
    if (!(mat.field() == f)) throw DomainError("form matrix over a different field");
    ms.push_back(std::move(mat));
  }
  std::optional<std::uint64_t> seed;
  if (auto it = j.find("seed"); it != j.end() && !it->is_null()) seed = uint_of(j, "seed");
  return FormTuple(f, n, kind, std::move(ms), seed);
}

Json to_json(const GenericityCertificate& c) {
  Json j = to_json(c.forms);
  j["k"] = c.k;
  j["subspaces_checked"] = c.subspaces_checked.str();
  j["verdict"] = "certified";
  j["vacuous"] = c.vacuous;
  return j;
}

GenericityCertificate certificate_from_json(const Json& j) {
  FormTuple forms = forms_from_json(j);
  if (!forms.seed()) throw ParseError("certificate has no seed");
  if (string_of(j, "verdict") != "certified") throw DomainError("certificate verdict is not 'certified'");
  BigInt checked;
  try {
    checked = BigInt(string_of(j, "subspaces_checked"));
  } catch (const std::runtime_error&) {
    throw ParseError("'subspaces_checked' must be a decimal string");
  }
  return {uint_of(j, "k"), std::move(forms), checked, bool_of(j, "vacuous")};
}

Json to_json(const ExtremalParams& p) {
  Json j;
  j["s"] = p.s;
  j["n"] = p.n;
  j["t"] = p.t;
  j["k"] = p.k;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["dim"] = r.dim;
  j["witness"] = to_json(r.witness);
  j["exact"] = r.exact;
  return j;
}

Json to_json(const AxiomReport& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  if (r.kind == AlgebraKind::lie) {
    j["alternating"] = r.alternating;
    j["jacobi"] = r.jacobi;
  } else {
    j["associative"] = r.associative;
  }
  j["ok"] = r.ok();
  if (r.first_violation) {
    Json v;
    v["axiom"] = r.first_violation->axiom;
    v["indices"] = r.first_violation->indices;
    j["violation"] = std::move(v);
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["field"] = to_string(r.field);
  j["c"] = r.c ? Json(to_string(*r.c)) : Json(nullptr);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["function"] = e.function;
    x["side"] = to_string(e.side);
    x["value"] = to_string(e.value);
    x["floor"] = big_json(floor_of(e.value));
    x["ceil"] = big_json(ceil_of(e.value));
    x["field_class"] = to_string(e.field_class);
    x["formula"] = e.formula;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const SimpleTypeEntry& e) {
  Json j;
  j["type"] = to_string(e.type);
  j["rank"] = e.rank ? Json(*e.rank) : Json(nullptr);
  j["dim"] = e.dim;
  j["max_abelian"] = e.max_abelian;
  return j;
}

Json to_json(const InequalityCheck& c) {
  Json j;
  j["label"] = c.label;
  j["lhs"] = big_json(c.lhs);
  j["rhs"] = to_string(c.rhs);
  j["pass"] = c.pass;
  return j;
}

Json to_json(const SevenNVerdict& v) {
  Json j;
  Json entries = Json::array();
  for (const auto& e : v.entries) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  j["total"] = to_json(v.total);
  j["pass"] = v.pass;
  return j;
}

Json to_json(const StructuralVerdict& v) {
  Json j;
  j["structure"] = to_string(v.structure);
  j["n"] = v.n;
  j["check"] = to_json(v.check);
  j["pass"] = v.check.pass;
  return j;
}

Json to_json(const MatrixCommutative& m, std::size_t r, MatrixConstruction construction) {
  Json j;
  j["r"] = r;
  j["construction"] = to_string(construction);
  j["dim"] = m.sub.dim();
  j["ambient"] = to_json(m.ambient);
  j["subspace"] = to_json(m.sub);
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

namespace {

bool flat(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

void write(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      os << pad << Json(it.key()).dump() << ": ";
      write(os, it.value(), indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "}";
  } else if (j.is_array() && !j.empty() && !flat(j)) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << std::string(static_cast<std::size_t>(indent), ' ') << "]";
  } else {
    // scalars and arrays of scalars stay on one line
    os << j.dump();
  }
}

} // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  write(os, j, 0);
  os << "\n";
  return os.str();
}

} // namespace commsub
