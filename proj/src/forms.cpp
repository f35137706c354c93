#include "commsub/forms.hpp"

#include <limits>
#include <random>

namespace commsub {

const char* to_string(FormKind k) noexcept {
  switch (k) {
  case FormKind::alternating: return "alternating";
  case FormKind::symmetric: return "symmetric";
  case FormKind::general: return "general";
  }
  return "?";
}

FormKind form_kind_from_string(const std::string& s) {
  if (s == "alternating") return FormKind::alternating;
  if (s == "symmetric") return FormKind::symmetric;
  if (s == "general") return FormKind::general;
  throw DomainError("unknown form kind '" + s + "'");
}

FormTuple::FormTuple(PrimeField field, std::size_t n, FormKind kind, std::vector<Matrix> mats,
                     std::optional<std::uint64_t> seed)
    : field_(field), n_(n), kind_(kind), mats_(std::move(mats)), seed_(seed) {
  for (std::size_t m = 0; m < mats_.size(); ++m) {
    const Matrix& a = mats_[m];
    if (a.rows() != n || a.cols() != n || !(a.field() == field))
      throw DomainError("form " + std::to_string(m) + " is not an n x n matrix over GF(p)");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool ok = kind == FormKind::alternating
                            ? (i == j ? a(i, i) == 0 : a(j, i) == field.neg(a(i, j)))
                        : kind == FormKind::symmetric ? a(j, i) == a(i, j)
                                                      : true;
        if (!ok)
          throw DomainError("form " + std::to_string(m) + " is not " + to_string(kind) +
                            " at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
}

namespace {

Elem draw_residue(std::mt19937_64& rng, std::uint32_t p) {
  // Reject the low 2^64 mod p values so x % p is exactly uniform.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() % p + 1) % p;
  std::uint64_t x;
  do x = rng();
  while (x < threshold);
  return static_cast<Elem>(x % p);
}

// Gram matrices W M W^T for each form, checked in place.
class QualifyCheck {
public:
  QualifyCheck(const FormTuple& forms, IsotropyMode mode) : forms_(&forms), mode_(mode) {}

  bool operator()(const Matrix& w) {
    const std::size_t k = w.rows(), n = w.cols();
    const std::uint64_t p = forms_->field().p();
    wm_.resize(k * n);
    for (const Matrix& m : forms_->mats()) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t j = 0; j < n; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t i = 0; i < n; ++i) acc += std::uint64_t{w(a, i)} * m(i, j);
          wm_[a * n + j] = acc % p;
        }
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = (mode_ == IsotropyMode::isotropic ? 0 : a + 1); b < k; ++b) {
          const std::uint64_t ab = gram(a, b, w, n, p);
          if (mode_ == IsotropyMode::isotropic) {
            if (ab != 0) return false;
          } else if (ab != gram(b, a, w, n, p)) {
            return false;
          }
        }
    }
    return true;
  }

private:
  std::uint64_t gram(std::size_t a, std::size_t b, const Matrix& w, std::size_t n,
                     std::uint64_t p) const {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc += wm_[a * n + j] * w(b, j);
    return acc % p;
  }

  const FormTuple* forms_;
  IsotropyMode mode_;
  std::vector<std::uint64_t> wm_;
};

void check_scan_args(const FormTuple& forms, std::size_t k) {
  if (k > forms.n())
    throw DomainError("subspace dimension k=" + std::to_string(k) + " exceeds n=" +
                      std::to_string(forms.n()));
}

} // namespace

FormTuple sample_form_tuple(std::size_t n, std::size_t t, FormKind kind, PrimeField field,
                            std::uint64_t seed) {
  if (t < 1) throw DomainError("a form tuple needs t >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Matrix> mats;
  mats.reserve(t);
  for (std::size_t m = 0; m < t; ++m) {
    Matrix a(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      switch (kind) {
      case FormKind::alternating:
        for (std::size_t j = i + 1; j < n; ++j) {
          a(i, j) = draw_residue(rng, field.p());
          a(j, i) = field.neg(a(i, j));
        }
        break;
      case FormKind::symmetric:
        for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = draw_residue(rng, field.p());
        break;
      case FormKind::general:
        for (std::size_t j = 0; j < n; ++j) a(i, j) = draw_residue(rng, field.p());
        break;
      }
    }
    mats.push_back(std::move(a));
  }
  return FormTuple(field, n, kind, std::move(mats), seed);
}

IsotropyMode natural_mode(FormKind kind) noexcept {
  return kind == FormKind::general ? IsotropyMode::symmetric_restriction
                                   : IsotropyMode::isotropic;
}

bool subspace_qualifies(const FormTuple& forms, const Matrix& basis, IsotropyMode mode) {
  return QualifyCheck(forms, mode)(basis);
}

std::optional<Subspace> find_common_isotropic(const FormTuple& forms, std::size_t k,
                                              IsotropyMode mode, std::uint64_t budget) {
  check_scan_args(forms, k);
  SubspaceEnumeration en(forms.field(), forms.n(), k, budget);
  auto hit = first_match_parallel(en, QualifyCheck(forms, mode));
  if (!hit) return std::nullopt;
  return en.at(*hit);
}

std::optional<Subspace> find_common_isotropic_serial(const FormTuple& forms, std::size_t k,
                                                     IsotropyMode mode, std::uint64_t budget) {
  check_scan_args(forms, k);
  SubspaceEnumeration en(forms.field(), forms.n(), k, budget);
  auto hit = first_match_serial(en, QualifyCheck(forms, mode));
  if (!hit) return std::nullopt;
  return en.at(*hit);
}

bool genericity_condition(std::size_t n, std::size_t t, std::size_t k) noexcept {
  return k >= 1 && 2 * n < t * (k - 1);
}

GenericityCertificate certify_no_isotropic(std::size_t n, std::size_t t, std::size_t k,
                                           PrimeField field, std::uint64_t seed,
                                           std::uint64_t max_attempts, FormKind kind,
                                           std::uint64_t budget) {
  if (n < k)
    return {k, sample_form_tuple(n, t, kind, field, seed), BigInt(0), true};

  const IsotropyMode mode = natural_mode(kind);
  // Checked once up front so an oversized request fails before sampling.
  const BigInt count = gaussian_binomial(static_cast<unsigned>(n), static_cast<unsigned>(k),
                                         field.p());
  if (count > budget) throw EnumerationTooLarge(count.str(), std::to_string(budget));

  std::optional<Subspace> last;
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    FormTuple forms = sample_form_tuple(n, t, kind, field, seed + attempt);
    last = find_common_isotropic(forms, k, mode, budget);
    if (!last) return {k, std::move(forms), count, false};
  }
  throw CertificationFailed(max_attempts, std::move(last));
}

bool reverify_certificate(const GenericityCertificate& c, std::uint64_t budget) {
  const FormTuple& f = c.forms;
  if (!f.seed() || f.t() < 1) return false;
  if (!(sample_form_tuple(f.n(), f.t(), f.kind(), f.field(), *f.seed()) == f)) return false;
  if (c.vacuous) return f.n() < c.k && c.subspaces_checked == 0;
  if (f.n() < c.k) return false;
  const BigInt count = gaussian_binomial(static_cast<unsigned>(f.n()),
                                         static_cast<unsigned>(c.k), f.field().p());
  if (c.subspaces_checked != count) return false;
  return !find_common_isotropic(f, c.k, natural_mode(f.kind()), budget).has_value();
}

} // namespace commsub
