#include "commsub/linalg.hpp"

#include "commsub/errors.hpp"

#include <algorithm>
#include <string>

namespace commsub {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus || !is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not a prime in [2, 8191]");
}

Elem PrimeField::inv(Elem a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero");
  // Fermat: a^(p-2)
  Elem result = 1, base = a % p_;
  for (std::uint32_t e = p_ - 2; e; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw DomainError("matrix has " + std::to_string(entries_.size()) + " entries, expected " +
                      std::to_string(rows * cols));
  for (Elem e : entries_)
    if (e >= field_.p())
      throw DomainError("matrix entry " + std::to_string(e) + " is not reduced mod " +
                        std::to_string(field_.p()));
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Elem> row) {
  if (row.size() != cols_) throw DomainError("row length mismatch");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DomainError("matrix product shape mismatch");
  Matrix out(field_, rows_, rhs.cols_);
  const auto p = static_cast<std::uint64_t>(field_.p());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += std::uint64_t{(*this)(r, k)} * rhs(k, c);
      out(r, c) = static_cast<Elem>(acc % p);
    }
  }
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

bool is_zero(std::span<const Elem> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

RrefResult rref(const Matrix& m) {
  const PrimeField& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
    const Elem scale = f.inv(a(r, c));
    for (auto& e : a.row(r)) e = f.mul(e, scale);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem factor = a(i, c);
      auto src = a.row(r);
      auto dst = a.row(i);
      for (std::size_t j = c; j < a.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Elem> kept(a.entries().begin(), a.entries().begin() + r * a.cols());
  return {r, Matrix(f, r, a.cols(), std::move(kept)), std::move(pivots)};
}

Matrix null_space(const Matrix& m) {
  const PrimeField& f = m.field();
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;

  // One kernel vector per free column, then canonicalized.
  Matrix basis(f, 0, m.cols());
  Vec v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = f.neg(red.echelon(i, free));
    basis.append_row(v);
  }
  return rref(basis).echelon;
}

Vec row_times(const PrimeField& f, std::span<const Elem> v, const Matrix& m) {
  Vec out(m.cols(), 0);
  const auto p = static_cast<std::uint64_t>(f.p());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) acc += std::uint64_t{v[r]} * m(r, c);
    out[c] = static_cast<Elem>(acc % p);
  }
  return out;
}

Elem bilinear(const Matrix& m, std::span<const Elem> u, std::span<const Elem> v) {
  const auto p = static_cast<std::uint64_t>(m.field().p());
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (u[i] == 0) continue;
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) row += std::uint64_t{m(i, j)} * v[j];
    acc += (row % p) * u[i];
  }
  return static_cast<Elem>(acc % p);
}

Subspace Subspace::zero(PrimeField field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(PrimeField field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::span(const Matrix& generators) {
  auto red = rref(generators);
  return Subspace(std::move(red.echelon), std::move(red.pivots));
}

Subspace Subspace::span(PrimeField field, std::size_t ambient_dim, const std::vector<Vec>& gens) {
  return span(Matrix::from_rows(field, ambient_dim, gens));
}

Subspace Subspace::from_canonical(Matrix basis) {
  auto red = rref(basis);
  if (!(red.echelon == basis))
    throw DomainError("subspace basis is not in reduced row echelon form without zero rows");
  return Subspace(std::move(red.echelon), std::move(red.pivots));
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw DomainError("vector length mismatch");
  const PrimeField& f = field();
  Vec w(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Elem coef = w[pivots_[i]];
    if (coef == 0) continue;
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < w.size(); ++j) w[j] = f.sub(w[j], f.mul(coef, row[j]));
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

Subspace Subspace::join(const Subspace& other) const {
  Matrix gens = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) gens.append_row(other.vector(i));
  return span(gens);
}

Subspace Subspace::join(std::span<const Elem> v) const {
  Matrix gens = basis_;
  gens.append_row(v);
  return span(gens);
}

Vec Subspace::coordinates(std::span<const Elem> v) const {
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = v[pivots_[i]];
  return out;
}

} // namespace commsub
