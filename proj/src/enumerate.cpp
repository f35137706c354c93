#include "commsub/enumerate.hpp"

#include "commsub/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace commsub {

BigInt gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
  if (k > n)
    throw DomainError("gaussian_binomial: k=" + std::to_string(k) + " exceeds n=" +
                      std::to_string(n));
  if (q < 2) throw DomainError("gaussian_binomial: q must be at least 2");
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (unsigned i = 0; i < k; ++i) {
    num *= BigInt(pow(bq, n - i)) - 1;
    den *= BigInt(pow(bq, k - i)) - 1;
  }
  return num / den;
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace

SubspaceEnumeration::SubspaceEnumeration(PrimeField field, std::size_t n, std::size_t k,
                                         std::uint64_t budget)
    : field_(field), n_(n), k_(k) {
  const BigInt count = gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k),
                                         field.p());
  if (count > budget) throw EnumerationTooLarge(count.str(), std::to_string(budget));
  total_ = static_cast<std::uint64_t>(count);

  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  std::uint64_t offset = 0;
  do {
    Block b;
    b.pivots = piv;
    std::vector<bool> is_pivot(n, false);
    for (auto c : piv) is_pivot[c] = true;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) b.free.emplace_back(r, c);
    b.count = 1;
    for (std::size_t i = 0; i < b.free.size(); ++i) b.count *= field.p();
    b.offset = offset;
    offset += b.count;
    blocks_.push_back(std::move(b));
  } while (next_combination(piv, n));
  // k == 0 yields one block holding the zero subspace; k > n was rejected above.
}

SubspaceEnumeration::Cursor::Cursor(const SubspaceEnumeration* owner, std::uint64_t index)
    : owner_(owner), index_(index), basis_(owner->field_, owner->k_, owner->n_) {
  if (done()) return;
  const auto& blocks = owner_->blocks_;
  auto it = std::upper_bound(blocks.begin(), blocks.end(), index,
                             [](std::uint64_t i, const Block& b) { return i < b.offset; });
  block_ = static_cast<std::size_t>(std::distance(blocks.begin(), it) - 1);
  load_block();
  // Decode the offset inside the block as base-p digits, last digit fastest.
  std::uint64_t rem = index - blocks[block_].offset;
  const auto p = owner_->field_.p();
  for (std::size_t d = digits_.size(); d-- > 0;) {
    digits_[d] = static_cast<Elem>(rem % p);
    rem /= p;
    const auto [r, c] = blocks[block_].free[d];
    basis_(r, c) = digits_[d];
  }
}

void SubspaceEnumeration::Cursor::load_block() {
  const Block& b = owner_->blocks_[block_];
  basis_ = Matrix(owner_->field_, owner_->k_, owner_->n_);
  for (std::size_t r = 0; r < b.pivots.size(); ++r) basis_(r, b.pivots[r]) = 1;
  digits_.assign(b.free.size(), 0);
}

void SubspaceEnumeration::Cursor::next() {
  if (done()) return;
  ++index_;
  if (done()) return;
  const Block& b = owner_->blocks_[block_];
  const auto p = owner_->field_.p();
  for (std::size_t d = digits_.size(); d-- > 0;) {
    const auto [r, c] = b.free[d];
    if (++digits_[d] < p) {
      basis_(r, c) = digits_[d];
      return;
    }
    digits_[d] = 0;
    basis_(r, c) = 0;
  }
  ++block_;
  load_block();
}

Subspace SubspaceEnumeration::at(std::uint64_t index) const {
  if (index >= total_) throw DomainError("subspace index out of range");
  return Subspace::from_canonical(cursor(index).basis());
}

} // namespace commsub
