#pragma once

// Constructions of algebras with small commutative subalgebras.

#include "commsub/algebra.hpp"
#include "commsub/forms.hpp"

namespace commsub {

/// Parameters (n = dim V, t = dim U, k) for an algebra whose abelian
/// subalgebras have dimension at most s.
struct ExtremalParams {
  std::size_t s, n, t, k;
  bool operator==(const ExtremalParams&) const = default;
};

/// s even: t = s/2 + 1, k = s/2, n = floor((s^2-5)/8);
/// s odd:  t = k = (s+1)/2,       n = floor((s^2-2)/8).
/// n is clamped at 0 (only s = 2 would go negative). Throws for s < 2.
ExtremalParams extremal_params(std::size_t s);

/// ceil((s^2 + 4s - 5) / 8), the dimension the construction must reach.
std::size_t extremal_target_dim(std::size_t s);

/// Class-2 nilpotent Lie algebra on V (basis e_1..e_n) + U (basis f_1..f_t)
/// with [e_i, e_j] = sum_m phi_m(e_i, e_j) f_m and U central.
StructureConstantAlgebra build_lie_from_forms(const FormTuple& forms);

/// Associative analogue: e_i e_j = sum_m phi_m(e_i, e_j) f_m, every other
/// basis product zero. Forms of any kind.
StructureConstantAlgebra build_assoc_from_forms(const FormTuple& forms);

/// A + K e with e a two-sided identity, appended as the last basis vector.
StructureConstantAlgebra unitalize(const StructureConstantAlgebra& a);

enum class MatrixConstruction { diagonal, corner };

const char* to_string(MatrixConstruction c) noexcept;
MatrixConstruction matrix_construction_from_string(const std::string& s);

inline constexpr std::size_t kMaxMatrixOrder = 12;

struct MatrixCommutative {
  /// M_r(GF(p)) on the basis E_ab, index a*r + b.
  StructureConstantAlgebra ambient;
  Subspace sub;
};

/// Diagonal matrices (dim r), or the upper-right k x k (r = 2k) or
/// k x (k+1) (r = 2k+1) block; the whole algebra when r = 1.
MatrixCommutative matrix_commutative_subalgebra(std::size_t r, PrimeField field,
                                                MatrixConstruction construction);

} // namespace commsub
