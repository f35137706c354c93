#pragma once

// Canonical enumeration of the k-dimensional subspaces of GF(p)^n.
//
// Subspaces are produced as RREF bases ordered first by pivot-column set
// (lexicographic over k-combinations) and then by the free entries read in
// row-major order as a base-p odometer. Every subspace has a global index in
// that order, so the stream can be split into index ranges and consumed by
// independent workers.

#include "commsub/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace commsub {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Number of k-dimensional subspaces of GF(q)^n. Throws DomainError if k > n.
BigInt gaussian_binomial(unsigned n, unsigned k, std::uint64_t q);

class SubspaceEnumeration {
public:
  /// Throws DomainError if k > n and EnumerationTooLarge if the subspace
  /// count exceeds the budget.
  SubspaceEnumeration(PrimeField field, std::size_t n, std::size_t k,
                      std::uint64_t budget = kDefaultEnumerationBudget);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t subspace_dim() const noexcept { return k_; }
  const PrimeField& field() const noexcept { return field_; }
  std::uint64_t size() const noexcept { return total_; }

  /// Walks the enumeration in canonical order starting at some index.
  class Cursor {
  public:
    /// Basis of the current subspace (k x n, RREF).
    const Matrix& basis() const noexcept { return basis_; }
    std::uint64_t index() const noexcept { return index_; }
    bool done() const noexcept { return index_ >= owner_->total_; }
    void next();

  private:
    friend class SubspaceEnumeration;
    Cursor(const SubspaceEnumeration* owner, std::uint64_t index);
    void load_block();

    const SubspaceEnumeration* owner_;
    std::uint64_t index_;
    std::size_t block_ = 0;
    std::vector<Elem> digits_;
    Matrix basis_;
  };

  Cursor cursor(std::uint64_t index = 0) const { return Cursor(this, index); }
  Subspace at(std::uint64_t index) const;

  class Iterator {
  public:
    using value_type = Subspace;
    using difference_type = std::ptrdiff_t;

    Subspace operator*() const { return Subspace::from_canonical(cursor_.basis()); }
    Iterator& operator++() {
      cursor_.next();
      return *this;
    }
    void operator++(int) { cursor_.next(); }
    bool operator==(std::default_sentinel_t) const noexcept { return cursor_.done(); }

  private:
    friend class SubspaceEnumeration;
    explicit Iterator(Cursor c) : cursor_(std::move(c)) {}
    Cursor cursor_;
  };

  Iterator begin() const { return Iterator(cursor(0)); }
  std::default_sentinel_t end() const noexcept { return {}; }

private:
  struct Block {
    std::vector<std::size_t> pivots;
    // (row, col) of each free entry, row-major.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    std::uint64_t offset;
    std::uint64_t count;
  };

  PrimeField field_;
  std::size_t n_;
  std::size_t k_;
  std::uint64_t total_ = 0;
  std::vector<Block> blocks_;
};

/// Index of the first subspace (in canonical order) accepted by `pred`,
/// scanned serially. `pred` receives the RREF basis matrix.
template <class Pred>
std::optional<std::uint64_t> first_match_serial(const SubspaceEnumeration& en, Pred pred) {
  for (auto cur = en.cursor(); !cur.done(); cur.next())
    if (pred(cur.basis())) return cur.index();
  return std::nullopt;
}

/// Same result as first_match_serial, with the index range split across
/// OpenMP threads. Each thread works on its own copy of `pred`; the smallest
/// matching index wins regardless of the thread count.
template <class Pred>
std::optional<std::uint64_t> first_match_parallel(const SubspaceEnumeration& en, const Pred& pred,
                                                  std::uint64_t chunk = 512);

} // namespace commsub

#include "commsub/enumerate_parallel.inl"
