#pragma once

// Growth bounds for the maximal dimension of an algebra all of whose
// commutative subalgebras have dimension <= n, the simple Lie algebra table,
// and structural checks on concrete algebras.

#include "commsub/algebra.hpp"
#include "commsub/enumerate.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace commsub {

using Rational = boost::multiprecision::cpp_rational;

BigInt floor_of(const Rational& r);
BigInt ceil_of(const Rational& r);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
/// Accepts "a", "a/b" or a terminating decimal such as "4.5".
Rational parse_rational(const std::string& s);

enum class FieldClass { C, R, closed, char0, any };
enum class Side { lower, upper };

const char* to_string(FieldClass f) noexcept;
const char* to_string(Side s) noexcept;
FieldClass field_class_from_string(const std::string& s);

struct BoundEntry {
  /// l_C, g_C, a_C, l_R, g_R, a_R, a_K, a1_K, l_K, ln_K, an_K, gn_K
  std::string function;
  Side side;
  Rational value;
  /// Field class the inequality is stated for.
  FieldClass field_class;
  std::string formula;
};

struct BoundReport {
  std::size_t n;
  FieldClass field;
  std::optional<Rational> c;
  std::vector<BoundEntry> entries;

  /// First entry with this function and side, if any.
  const BoundEntry* find(const std::string& function, Side side) const;
};

/// Every inequality that applies to fields of class `field`: a field in
/// class C is also closed and of characteristic 0, R is of characteristic 0,
/// and everything is in class "any". `c` feeds (n^2 + (2c+1)n)/2 and must be
/// at least 9/2; closed fields use 9/2 when it is absent, characteristic 0
/// fields skip that bound without it. Throws DomainError for n < 1.
BoundReport bound_table(std::size_t n, FieldClass field,
                        std::optional<Rational> c = std::nullopt);

std::string format_bound_table(const BoundReport& r);

enum class SimpleType { A, B, C, D, E6, E7, E8, F4, G2 };

const char* to_string(SimpleType t) noexcept;
SimpleType simple_type_from_string(const std::string& s);
bool is_classical(SimpleType t) noexcept;
/// Smallest admissible rank of a classical type.
std::size_t min_rank(SimpleType t) noexcept;

struct SimpleTypeEntry {
  SimpleType type;
  std::optional<std::size_t> rank;
  std::uint64_t dim;
  std::uint64_t max_abelian;
  bool operator==(const SimpleTypeEntry&) const = default;
};

/// Dimension and maximal abelian subalgebra dimension of the simple complex
/// Lie algebra of the given type. Classical types need a rank (A >= 1,
/// B >= 3, C >= 2, D >= 4); exceptional types take none.
SimpleTypeEntry simple_lie_data(SimpleType type, std::optional<std::size_t> rank = std::nullopt);

/// Exceptional types and classical ranks up to max_rank.
std::vector<SimpleTypeEntry> simple_lie_table(std::size_t max_rank);

struct InequalityCheck {
  std::string label;
  BigInt lhs;
  Rational rhs;
  bool pass;
};

struct SevenNVerdict {
  std::vector<InequalityCheck> entries;
  InequalityCheck total;
  bool pass;
};

/// dim <= 7 max_abelian for each entry and for the direct sum of all of them.
SevenNVerdict seven_n_check(const std::vector<SimpleTypeEntry>& entries);

enum class Structure { nilpotent, class2, nilpotent_assoc };

const char* to_string(Structure s) noexcept;
Structure structure_from_string(const std::string& s);

struct StructuralVerdict {
  Structure structure;
  std::size_t n;
  InequalityCheck check;
};

/// nilpotent Lie and nilpotent associative: dim <= n(n+1)/2.
/// class2: dim <= n^2/4 + n.
/// Throws DomainError when the algebra does not have the stated structure.
StructuralVerdict check_structural_bound(const StructureConstantAlgebra& a, std::size_t n,
                                         Structure structure);

} // namespace commsub
