#pragma once

// Tuples of bilinear forms on V = GF(p)^n, common isotropic subspaces, and
// seeded sample-and-certify genericity certificates.

#include "commsub/enumerate.hpp"
#include "commsub/errors.hpp"
#include "commsub/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace commsub {

enum class FormKind { alternating, symmetric, general };

const char* to_string(FormKind k) noexcept;
FormKind form_kind_from_string(const std::string& s);

/// t bilinear forms on an n-dimensional space, as n x n Gram matrices.
class FormTuple {
public:
  /// Throws DomainError if a matrix has the wrong shape or field, or breaks
  /// the invariant of `kind` (alternating: M^T = -M with zero diagonal).
  FormTuple(PrimeField field, std::size_t n, FormKind kind, std::vector<Matrix> mats,
            std::optional<std::uint64_t> seed = std::nullopt);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t t() const noexcept { return mats_.size(); }
  FormKind kind() const noexcept { return kind_; }
  const std::vector<Matrix>& mats() const noexcept { return mats_; }
  const std::optional<std::uint64_t>& seed() const noexcept { return seed_; }

  bool operator==(const FormTuple&) const = default;

private:
  PrimeField field_;
  std::size_t n_;
  FormKind kind_;
  std::vector<Matrix> mats_;
  std::optional<std::uint64_t> seed_;
};

/// Uniform sample from std::mt19937_64 seeded with `seed`. Entries are drawn
/// matrix by matrix, row-major over the independent positions of the kind,
/// with rejection sampling so the stream is identical on every platform.
FormTuple sample_form_tuple(std::size_t n, std::size_t t, FormKind kind, PrimeField field,
                            std::uint64_t seed);

enum class IsotropyMode {
  /// phi_i(u, v) = 0 for all u, v in W
  isotropic,
  /// phi_i(u, v) = phi_i(v, u) for all u, v in W
  symmetric_restriction,
};

/// Mode matching the commutativity criterion for algebras built from this
/// kind of tuple: symmetric restrictions for general forms (associative
/// construction), isotropy otherwise.
IsotropyMode natural_mode(FormKind kind) noexcept;

bool subspace_qualifies(const FormTuple& forms, const Matrix& basis, IsotropyMode mode);

/// First k-dimensional subspace in canonical order satisfying `mode` for all
/// forms, or nullopt. Parallel scan; the result equals the serial scan.
std::optional<Subspace> find_common_isotropic(const FormTuple& forms, std::size_t k,
                                              IsotropyMode mode = IsotropyMode::isotropic,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Serial reference scan.
std::optional<Subspace> find_common_isotropic_serial(
    const FormTuple& forms, std::size_t k, IsotropyMode mode = IsotropyMode::isotropic,
    std::uint64_t budget = kDefaultEnumerationBudget);

/// 2n < t(k-1): the hypothesis under which a good tuple is guaranteed to exist.
bool genericity_condition(std::size_t n, std::size_t t, std::size_t k) noexcept;

struct GenericityCertificate {
  std::size_t k;
  FormTuple forms;  // carries n, t, p and the successful seed
  BigInt subspaces_checked;
  bool vacuous;

  std::size_t n() const noexcept { return forms.n(); }
  std::size_t t() const noexcept { return forms.t(); }
  std::uint64_t seed() const { return forms.seed().value(); }
};

class CertificationFailed : public Error {
public:
  CertificationFailed(std::uint64_t attempts, std::optional<Subspace> last_witness)
      : Error("certification failed: every one of " + std::to_string(attempts) +
              " sampled tuples admits a common isotropic subspace"),
        last_witness_(std::move(last_witness)) {}
  const std::optional<Subspace>& last_witness() const noexcept { return last_witness_; }

private:
  std::optional<Subspace> last_witness_;
};

/// Samples tuples at seed, seed+1, ... until one admits no k-dimensional
/// subspace in the kind's natural mode. When n < k the certificate is vacuous.
GenericityCertificate certify_no_isotropic(std::size_t n, std::size_t t, std::size_t k,
                                           PrimeField field, std::uint64_t seed,
                                           std::uint64_t max_attempts,
                                           FormKind kind = FormKind::alternating,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Regenerates the tuple from the recorded seed and repeats the exhaustive scan.
bool reverify_certificate(const GenericityCertificate& c,
                          std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace commsub
