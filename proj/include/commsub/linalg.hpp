#pragma once

// Exact linear algebra over prime fields GF(p).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace commsub {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

inline constexpr std::uint32_t kMaxModulus = 8191;

bool is_prime(std::uint32_t n) noexcept;

/// The prime field GF(p), 2 <= p <= 8191. Elements are residues in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  // p <= 8191 keeps a*b below 2^26.
  Elem mul(Elem a, Elem b) const noexcept { return (a * b) % p_; }
  Elem inv(Elem a) const;

  bool operator==(const PrimeField&) const = default;

private:
  std::uint32_t p_;
};

/// Dense row-major matrix over a prime field.
class Matrix {
public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Throws DomainError unless entries.size() == rows*cols and every entry < p.
  Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, std::size_t cols, const std::vector<Vec>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Elem>& entries() const noexcept { return entries_; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Elem> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Elem> row);
  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool is_zero() const noexcept;

  bool operator==(const Matrix&) const = default;

private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RrefResult {
  std::size_t rank;
  /// The reduced row echelon form with zero rows dropped (rank x cols).
  Matrix echelon;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);

/// Basis (rows, canonical RREF) of { x : m x = 0 }.
Matrix null_space(const Matrix& m);

/// Row vector times matrix.
Vec row_times(const PrimeField& f, std::span<const Elem> v, const Matrix& m);

/// u^T M v
Elem bilinear(const Matrix& m, std::span<const Elem> u, std::span<const Elem> v);

bool is_zero(std::span<const Elem> v) noexcept;

/// A subspace of GF(p)^n held as its canonical RREF basis. Two equal
/// subspaces have identical representations.
class Subspace {
public:
  static Subspace zero(PrimeField field, std::size_t ambient_dim);
  static Subspace full(PrimeField field, std::size_t ambient_dim);
  /// Row space of the generators.
  static Subspace span(const Matrix& generators);
  static Subspace span(PrimeField field, std::size_t ambient_dim, const std::vector<Vec>& gens);
  /// Wraps a matrix that must already be in RREF without zero rows.
  static Subspace from_canonical(Matrix basis);

  const PrimeField& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  std::span<const Elem> vector(std::size_t i) const noexcept { return basis_.row(i); }

  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  Subspace join(const Subspace& other) const;
  Subspace join(std::span<const Elem> v) const;
  /// Coordinates of v (which must lie in the subspace) in the RREF basis.
  Vec coordinates(std::span<const Elem> v) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

} // namespace commsub
