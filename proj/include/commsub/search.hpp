#pragma once

// Maximal abelian (commutative) subalgebra dimensions.

#include "commsub/algebra.hpp"
#include "commsub/forms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace commsub {

enum class SearchMode { exact, class2, greedy };

const char* to_string(SearchMode m) noexcept;
SearchMode search_mode_from_string(const std::string& s);

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

struct SearchResult {
  SearchMode mode;
  std::size_t dim;
  Subspace witness;
  /// False when the value is only a lower bound (greedy, or an aborted search).
  bool exact;
  std::uint64_t nodes = 0;
};

/// Exact maximum dimension of a commuting subspace, by depth-first search
/// over canonical RREF extensions pruned by centralizer dimension. For the
/// associative kind the commutator is used; a maximum commuting subspace of
/// an associative algebra is closed under the product, so the witness is a
/// commutative subalgebra. Root branches run on OpenMP threads; the
/// dimension and witness match max_abelian_exact_serial. Past `budget`
/// search nodes the best subspace found so far is returned with exact=false.
SearchResult max_abelian_exact(const StructureConstantAlgebra& a,
                               std::uint64_t budget = kDefaultSearchBudget);

/// Single-threaded reference for max_abelian_exact.
SearchResult max_abelian_exact_serial(const StructureConstantAlgebra& a,
                                      std::uint64_t budget = kDefaultSearchBudget);

/// A class <= 2 algebra written as center Z plus the coordinate complement V
/// (the non-pivot columns of Z's RREF), with [x, y] = sum_m phi_m(x_V, y_V) z_m.
struct Class2Decomposition {
  Subspace center;
  std::vector<std::size_t> complement;
  FormTuple forms;
};

/// Throws DomainError when the algebra has nilpotency class above 2.
Class2Decomposition decompose_class2(const StructureConstantAlgebra& a);

struct Class2Exact {
  std::size_t dim;       // t + k
  Subspace isotropic;    // k-dimensional, inside V
};

/// t + the largest k admitting a common isotropic k-subspace (scanned from
/// k = n down). Throws EnumerationTooLarge past the budget.
Class2Exact max_abelian_class2_exact(const FormTuple& forms,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// The same reduction applied to a class <= 2 algebra through decompose_class2.
SearchResult max_abelian_class2_exact(const StructureConstantAlgebra& a,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// Builds an abelian subalgebra x_1, ..., x_k + Z one pick at a time, each
/// x_j the lexicographically smallest new solution of phi_i(x_l, y) = 0.
/// The result always satisfies dim a <= s^2/4 + s.
SearchResult greedy_abelian_class2(const StructureConstantAlgebra& a);

} // namespace commsub
