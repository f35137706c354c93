#include "commsub/bounds.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace commsub {

BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

BigInt ceil_of(const Rational& r) {
  return -floor_of(-r);
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& s) {
  auto bad = [&] { return ParseError("not a rational number: '" + s + "'"); };
  auto integer = [&](const std::string& t) {
    if (t.empty()) throw bad();
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size() || !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                                          [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw bad();
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt den = integer(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(integer(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) throw bad();
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = integer(whole);
    const Rational f(BigInt(frac), scale);
    return whole[0] == '-' ? Rational(w) - f : Rational(w) + f;
  }
  return Rational(integer(s));
}

const char* to_string(FieldClass f) noexcept {
  switch (f) {
  case FieldClass::C: return "C";
  case FieldClass::R: return "R";
  case FieldClass::closed: return "closed";
  case FieldClass::char0: return "char0";
  case FieldClass::any: return "any";
  }
  return "?";
}

const char* to_string(Side s) noexcept { return s == Side::lower ? "lower" : "upper"; }

FieldClass field_class_from_string(const std::string& s) {
  for (auto f : {FieldClass::C, FieldClass::R, FieldClass::closed, FieldClass::char0, FieldClass::any})
    if (s == to_string(f)) return f;
  throw DomainError("unknown field class '" + s + "' (expected C, R, closed, char0 or any)");
}

const BoundEntry* BoundReport::find(const std::string& function, Side side) const {
  for (const auto& e : entries)
    if (e.function == function && e.side == side) return &e;
  return nullptr;
}

BoundReport bound_table(std::size_t n, FieldClass field, std::optional<Rational> c) {
  if (n < 1) throw DomainError("bound_table needs n >= 1");
  if (c && *c < Rational(9, 2)) throw DomainError("c must be at least 9/2, got " + to_string(*c));

  const Rational x(n);
  const Rational class2_lower = (x * x + 4 * x - 5) / 8;
  const Rational class2_upper = x * x / 4 + x;
  const Rational small_lower = (x * x + 2 * x) / 8;
  const Rational char0_upper = (3 * x * x + x) / 2;
  const Rational complex_lie = (x * x + 17 * x) / 2;
  const Rational complex_assoc = x * x / 2 + 5 * x;
  const Rational real_lie_upper = 4 * x * x + 18 * x;
  const Rational real_lie_lower = 2 * x * x + x;

  BoundReport r{n, field, c, {}};
  auto add = [&](std::string fn, Side side, Rational v, FieldClass fc, std::string formula) {
    r.entries.push_back({std::move(fn), side, std::move(v), fc, std::move(formula)});
  };

  const bool is_c = field == FieldClass::C;
  const bool is_r = field == FieldClass::R;
  const bool closed = is_c || field == FieldClass::closed;
  const bool char0 = is_c || is_r || field == FieldClass::char0;

  if (is_c) {
    add("l_C", Side::lower, class2_lower, FieldClass::C, "(n^2+4n-5)/8");
    add("l_C", Side::upper, complex_lie, FieldClass::C, "(n^2+17n)/2");
    add("g_C", Side::lower, class2_lower, FieldClass::C, "(n^2+4n-5)/8");
    add("g_C", Side::upper, complex_lie, FieldClass::C, "(n^2+17n)/2");
    add("a_C", Side::lower, class2_lower, FieldClass::C, "(n^2+4n-5)/8");
    add("a_C", Side::upper, complex_assoc, FieldClass::C, "n^2/2+5n");
  }
  if (is_r) {
    add("l_R", Side::lower, real_lie_lower, FieldClass::R, "2n^2+n");
    add("l_R", Side::upper, real_lie_upper, FieldClass::R, "4n^2+18n");
    add("g_R", Side::lower, real_lie_lower, FieldClass::R, "2n^2+n");
    add("g_R", Side::upper, real_lie_upper, FieldClass::R, "4n^2+18n");
    add("a_R", Side::lower, class2_lower, FieldClass::R, "(n^2+4n-5)/8");
    add("a_R", Side::upper, complex_assoc, FieldClass::R, "n^2/2+5n");
  }
  if (char0 || closed) {
    const FieldClass fc = char0 ? FieldClass::char0 : FieldClass::closed;
    add("a_K", Side::upper, char0_upper, fc, "(3n^2+n)/2");
    add("a1_K", Side::upper, char0_upper, fc, "(3n^2+n)/2");
  }
  if (closed || c) {
    const Rational cc = c.value_or(Rational(9, 2));
    const Rational v = (x * x + (2 * cc + 1) * x) / 2;
    const std::string formula = "(n^2+(2c+1)n)/2, c=" + to_string(cc);
    const FieldClass fc = closed ? FieldClass::closed : FieldClass::char0;
    add("a_K", Side::upper, v, fc, formula);
    add("a1_K", Side::upper, v, fc, formula);
  }
  add("l_K", Side::lower, class2_lower, FieldClass::any, "(n^2+4n-5)/8");
  add("a_K", Side::lower, class2_lower, FieldClass::any, "(n^2+4n-5)/8");
  add("a1_K", Side::lower, small_lower, FieldClass::any, "(n^2+2n)/8");
  for (const char* fn : {"ln_K", "an_K", "gn_K"}) {
    add(fn, Side::lower, class2_lower, FieldClass::any, "(n^2+4n-5)/8");
    add(fn, Side::upper, class2_upper, FieldClass::any, "n^2/4+n");
  }
  return r;
}

std::string format_bound_table(const BoundReport& r) {
  std::vector<std::array<std::string, 7>> rows;
  rows.push_back({"function", "side", "value", "floor", "ceil", "field", "formula"});
  for (const auto& e : r.entries)
    rows.push_back({e.function, to_string(e.side), to_string(e.value), floor_of(e.value).str(),
                    ceil_of(e.value).str(), to_string(e.field_class), e.formula});
  std::array<std::size_t, 7> width{};
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  os << "n = " << r.n << ", field class " << to_string(r.field) << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

const char* to_string(SimpleType t) noexcept {
  switch (t) {
  case SimpleType::A: return "A";
  case SimpleType::B: return "B";
  case SimpleType::C: return "C";
  case SimpleType::D: return "D";
  case SimpleType::E6: return "E6";
  case SimpleType::E7: return "E7";
  case SimpleType::E8: return "E8";
  case SimpleType::F4: return "F4";
  case SimpleType::G2: return "G2";
  }
  return "?";
}

namespace {

constexpr std::array kAllTypes{SimpleType::A,  SimpleType::B,  SimpleType::C,
                               SimpleType::D,  SimpleType::E6, SimpleType::E7,
                               SimpleType::E8, SimpleType::F4, SimpleType::G2};

} // namespace

SimpleType simple_type_from_string(const std::string& s) {
  for (auto t : kAllTypes)
    if (s == to_string(t)) return t;
  throw DomainError("unknown simple type '" + s + "'");
}

bool is_classical(SimpleType t) noexcept {
  return t == SimpleType::A || t == SimpleType::B || t == SimpleType::C || t == SimpleType::D;
}

std::size_t min_rank(SimpleType t) noexcept {
  switch (t) {
  case SimpleType::A: return 1;
  case SimpleType::B: return 3;
  case SimpleType::C: return 2;
  case SimpleType::D: return 4;
  default: return 0;
  }
}

SimpleTypeEntry simple_lie_data(SimpleType type, std::optional<std::size_t> rank) {
  if (!is_classical(type)) {
    if (rank) throw DomainError(std::string("type ") + to_string(type) + " takes no rank");
    switch (type) {
    case SimpleType::E6: return {type, std::nullopt, 78, 16};
    case SimpleType::E7: return {type, std::nullopt, 133, 27};
    case SimpleType::E8: return {type, std::nullopt, 248, 36};
    case SimpleType::F4: return {type, std::nullopt, 52, 9};
    default: return {type, std::nullopt, 14, 3};
    }
  }
  if (!rank) throw DomainError(std::string("type ") + to_string(type) + " needs a rank");
  if (*rank < min_rank(type) || *rank > 1'000'000)
    throw DomainError(std::string("rank ") + std::to_string(*rank) + " out of range for type " +
                      to_string(type) + " (minimum " + std::to_string(min_rank(type)) + ")");
  const std::uint64_t l = *rank;
  switch (type) {
  case SimpleType::A: return {type, rank, l * l + 2 * l, (l + 1) * (l + 1) / 4};
  case SimpleType::B: return {type, rank, 2 * l * l + l, l * (l - 1) / 2 + 1};
  case SimpleType::C: return {type, rank, 2 * l * l + l, l * (l + 1) / 2};
  default: return {type, rank, 2 * l * l - l, l * (l - 1) / 2};
  }
}

std::vector<SimpleTypeEntry> simple_lie_table(std::size_t max_rank) {
  std::vector<SimpleTypeEntry> out;
  for (auto t : kAllTypes) {
    if (!is_classical(t)) {
      out.push_back(simple_lie_data(t));
      continue;
    }
    for (std::size_t l = min_rank(t); l <= max_rank; ++l) out.push_back(simple_lie_data(t, l));
  }
  return out;
}

namespace {

std::string entry_label(const SimpleTypeEntry& e) {
  std::string s = to_string(e.type);
  if (e.rank) s += std::to_string(*e.rank);
  return s;
}

InequalityCheck le(std::string label, const BigInt& lhs, const Rational& rhs) {
  return {std::move(label), lhs, rhs, Rational(lhs) <= rhs};
}

} // namespace

SevenNVerdict seven_n_check(const std::vector<SimpleTypeEntry>& entries) {
  SevenNVerdict v;
  v.pass = true;
  BigInt dim_sum = 0, abelian_sum = 0;
  for (const auto& e : entries) {
    v.entries.push_back(le(entry_label(e), BigInt(e.dim), Rational(7 * BigInt(e.max_abelian))));
    v.pass = v.pass && v.entries.back().pass;
    dim_sum += e.dim;
    abelian_sum += e.max_abelian;
  }
  v.total = le("sum", dim_sum, Rational(7 * abelian_sum));
  v.pass = v.pass && v.total.pass;
  return v;
}

const char* to_string(Structure s) noexcept {
  switch (s) {
  case Structure::nilpotent: return "nilpotent";
  case Structure::class2: return "class2";
  case Structure::nilpotent_assoc: return "nilpotent-assoc";
  }
  return "?";
}

Structure structure_from_string(const std::string& s) {
  for (auto x : {Structure::nilpotent, Structure::class2, Structure::nilpotent_assoc})
    if (s == to_string(x)) return x;
  throw DomainError("unknown structure '" + s + "'");
}

StructuralVerdict check_structural_bound(const StructureConstantAlgebra& a, std::size_t n,
                                         Structure structure) {
  const auto cls = nilpotency_class(a);
  const bool lie = a.kind() == AlgebraKind::lie;
  switch (structure) {
  case Structure::nilpotent:
    if (!lie || !cls) throw DomainError("structure 'nilpotent' needs a nilpotent Lie algebra");
    break;
  case Structure::nilpotent_assoc:
    if (lie || !cls)
      throw DomainError("structure 'nilpotent-assoc' needs a nilpotent associative algebra");
    break;
  case Structure::class2:
    if (!cls || *cls > 2) throw DomainError("structure 'class2' needs nilpotency class <= 2");
    break;
  }
  const Rational x(n);
  const Rational rhs = structure == Structure::class2 ? Rational(x * x / 4 + x) : Rational(x * (x + 1) / 2);
  const std::string label = structure == Structure::class2 ? "dim <= n^2/4+n" : "dim <= n(n+1)/2";
  return {structure, n, le(label, BigInt(a.dim()), rhs)};
}

} // namespace commsub
