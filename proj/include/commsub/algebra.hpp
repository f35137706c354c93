#pragma once

// Finite-dimensional Lie and associative algebras over GF(p) given by
// structure constants, with the linear-algebra queries built on them.

#include "commsub/errors.hpp"
#include "commsub/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commsub {

enum class AlgebraKind { lie, associative };

/// Products of basis elements e_i e_j = sum_k c_ij^k e_k, stored densely.
///
/// For the Lie kind, set_bracket writes (i,j) and the negated (j,i) so the
/// alternating law holds by construction; set_product writes a single entry
/// and is what file input uses, so a malformed table stays detectable by
/// verify_axioms.
class StructureConstantAlgebra {
public:
  StructureConstantAlgebra(AlgebraKind kind, PrimeField field, std::size_t dim,
                           std::vector<std::string> labels = {});

  AlgebraKind kind() const noexcept { return kind_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::span<const Elem> product(std::size_t i, std::size_t j) const noexcept {
    return {table_.data() + (i * dim_ + j) * dim_, dim_};
  }
  /// Lie bracket, or the commutator e_i e_j - e_j e_i for the associative kind.
  std::span<const Elem> bracket(std::size_t i, std::size_t j) const noexcept {
    const auto& t = kind_ == AlgebraKind::lie ? table_ : commutator_;
    return {t.data() + (i * dim_ + j) * dim_, dim_};
  }

  void set_product(std::size_t i, std::size_t j, std::span<const Elem> v);
  /// Lie kind only: sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, std::span<const Elem> v);

  Vec multiply(std::span<const Elem> x, std::span<const Elem> y) const;
  Vec bracket(std::span<const Elem> x, std::span<const Elem> y) const;
  /// Rows (g, k), columns i: coordinate k of [e_i, g]. Its kernel is the centralizer of gens.
  Matrix commutation_system(const std::vector<Vec>& gens) const;

private:
  Vec combine(const std::vector<Elem>& table, std::span<const Elem> x,
              std::span<const Elem> y) const;

  AlgebraKind kind_;
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Elem> table_;
  std::vector<Elem> commutator_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<std::size_t> indices;
};

struct AxiomReport {
  AlgebraKind kind;
  bool alternating = true;
  bool jacobi = true;
  bool associative = true;
  std::optional<AxiomViolation> first_violation;

  bool ok() const noexcept { return !first_violation.has_value(); }
};

AxiomReport verify_axioms(const StructureConstantAlgebra& a);

Subspace centralizer(const StructureConstantAlgebra& a, const std::vector<Vec>& gens);
Subspace center(const StructureConstantAlgebra& a);

/// Lower central series (powers A^c for the associative kind). Returns the
/// smallest c with the (c+1)-th term zero, or nullopt if the series
/// stabilizes at a nonzero term.
std::optional<std::size_t> nilpotency_class(const StructureConstantAlgebra& a);

class NotSubalgebra : public Error {
public:
  NotSubalgebra(std::size_t i, std::size_t j)
      : Error("not a subalgebra: product of basis vectors " + std::to_string(i) + " and " +
              std::to_string(j) + " leaves the subspace"),
        pair_(i, j) {}
  std::pair<std::size_t, std::size_t> witness() const noexcept { return pair_; }

private:
  std::pair<std::size_t, std::size_t> pair_;
};

/// First pair of basis vectors whose product leaves s, if any.
std::optional<std::pair<std::size_t, std::size_t>> subalgebra_violation(
    const StructureConstantAlgebra& a, const Subspace& s);

/// True iff the subalgebra s is abelian (commutative). Throws NotSubalgebra.
bool is_abelian_subspace(const StructureConstantAlgebra& a, const Subspace& s);

/// True iff every pair of basis vectors of s commutes; no closure check.
bool is_commuting_subspace(const StructureConstantAlgebra& a, const Subspace& s);

bool is_ideal(const StructureConstantAlgebra& a, const Subspace& s);

/// Greedy maximal abelian ideal of a nilpotent Lie algebra, grown from the
/// center. Throws DomainError for associative or non-nilpotent input.
Subspace maximal_abelian_ideal(const StructureConstantAlgebra& a);

/// The subspace of x with [x, g] in ideal for all g and [x, ideal] = 0;
/// contains ideal whenever ideal is an abelian ideal.
Subspace abelian_ideal_extensions(const StructureConstantAlgebra& a, const Subspace& ideal);

/// Lexicographically smallest vector of `outer` not in `inner`, where inner
/// is a subspace of outer. It is the last RREF row of outer outside inner.
std::optional<Vec> lex_smallest_outside(const Subspace& outer, const Subspace& inner);

const char* to_string(AlgebraKind k) noexcept;

} // namespace commsub
