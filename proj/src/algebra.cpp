#include "commsub/algebra.hpp"

#include <string>

namespace commsub {

const char* to_string(AlgebraKind k) noexcept {
  return k == AlgebraKind::lie ? "lie" : "assoc";
}

StructureConstantAlgebra::StructureConstantAlgebra(AlgebraKind kind, PrimeField field,
                                                   std::size_t dim,
                                                   std::vector<std::string> labels)
    : kind_(kind),
      field_(field),
      dim_(dim),
      labels_(std::move(labels)),
      table_(dim * dim * dim, 0) {
  if (!labels_.empty() && labels_.size() != dim)
    throw DomainError("expected " + std::to_string(dim) + " labels, got " +
                      std::to_string(labels_.size()));
  if (kind_ == AlgebraKind::associative) commutator_.assign(table_.size(), 0);
}

void StructureConstantAlgebra::set_product(std::size_t i, std::size_t j, std::span<const Elem> v) {
  if (i >= dim_ || j >= dim_) throw DomainError("basis index out of range");
  if (v.size() != dim_) throw DomainError("product vector has wrong length");
  for (Elem e : v)
    if (e >= field_.p()) throw DomainError("structure constant not reduced mod p");
  std::copy(v.begin(), v.end(), table_.begin() + (i * dim_ + j) * dim_);
  if (kind_ == AlgebraKind::associative) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Elem ij = table_[(i * dim_ + j) * dim_ + k];
      const Elem ji = table_[(j * dim_ + i) * dim_ + k];
      commutator_[(i * dim_ + j) * dim_ + k] = field_.sub(ij, ji);
      commutator_[(j * dim_ + i) * dim_ + k] = field_.sub(ji, ij);
    }
  }
}

void StructureConstantAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Elem> v) {
  if (kind_ != AlgebraKind::lie) throw DomainError("set_bracket requires a Lie algebra");
  if (i == j) {
    if (!is_zero(v)) throw DomainError("[e_i, e_i] must vanish in a Lie algebra");
    return;
  }
  set_product(i, j, v);
  Vec neg(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) neg[k] = field_.neg(v[k]);
  set_product(j, i, neg);
}

Vec StructureConstantAlgebra::combine(const std::vector<Elem>& table, std::span<const Elem> x,
                                      std::span<const Elem> y) const {
  std::vector<std::uint64_t> acc(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Elem coef = field_.mul(x[i], y[j]);
      const Elem* c = table.data() + (i * dim_ + j) * dim_;
      for (std::size_t k = 0; k < dim_; ++k) acc[k] += std::uint64_t{coef} * c[k];
    }
    for (auto& a : acc) a %= field_.p();
  }
  Vec out(dim_);
  for (std::size_t k = 0; k < dim_; ++k) out[k] = static_cast<Elem>(acc[k] % field_.p());
  return out;
}

Vec StructureConstantAlgebra::multiply(std::span<const Elem> x, std::span<const Elem> y) const {
  return combine(table_, x, y);
}

Vec StructureConstantAlgebra::bracket(std::span<const Elem> x, std::span<const Elem> y) const {
  return combine(kind_ == AlgebraKind::lie ? table_ : commutator_, x, y);
}

Matrix StructureConstantAlgebra::commutation_system(const std::vector<Vec>& gens) const {
  Matrix sys(field_, gens.size() * dim_, dim_);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t i = 0; i < dim_; ++i) {
      Vec unit(dim_, 0);
      unit[i] = 1;
      const Vec col = bracket(unit, gens[g]);
      for (std::size_t k = 0; k < dim_; ++k) sys(g * dim_ + k, i) = col[k];
    }
  }
  return sys;
}

namespace {

// sum_l c[l] * table(l, k) for fixed right factor k, or table(k, l) when left.
void accumulate(const StructureConstantAlgebra& a, std::span<const Elem> c, std::size_t other,
                bool c_on_left, std::vector<std::uint64_t>& acc) {
  const std::size_t d = a.dim();
  for (std::size_t l = 0; l < d; ++l) {
    if (c[l] == 0) continue;
    auto prod = c_on_left ? a.product(l, other) : a.product(other, l);
    for (std::size_t m = 0; m < d; ++m) acc[m] += std::uint64_t{c[l]} * prod[m];
  }
}

bool all_divisible(const std::vector<std::uint64_t>& acc, std::uint32_t p) {
  for (auto v : acc)
    if (v % p) return false;
  return true;
}

} // namespace

AxiomReport verify_axioms(const StructureConstantAlgebra& a) {
  AxiomReport rep;
  rep.kind = a.kind();
  const std::size_t d = a.dim();
  const auto& f = a.field();
  const std::uint32_t p = f.p();
  auto note = [&rep](const char* axiom, std::vector<std::size_t> idx) {
    if (!rep.first_violation) rep.first_violation = AxiomViolation{axiom, std::move(idx)};
  };

  if (a.kind() == AlgebraKind::lie) {
    for (std::size_t i = 0; i < d && rep.alternating; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        auto ij = a.product(i, j);
        auto ji = a.product(j, i);
        bool ok = true;
        for (std::size_t k = 0; k < d && ok; ++k)
          ok = (i == j) ? ij[k] == 0 : f.add(ij[k], ji[k]) == 0;
        if (!ok) {
          rep.alternating = false;
          note("alternating", {i, j});
          break;
        }
      }
    }
    std::vector<std::uint64_t> acc(d);
    for (std::size_t i = 0; i < d && rep.jacobi; ++i)
      for (std::size_t j = i + 1; j < d && rep.jacobi; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
          std::fill(acc.begin(), acc.end(), 0);
          accumulate(a, a.product(i, j), k, true, acc);
          accumulate(a, a.product(j, k), i, true, acc);
          accumulate(a, a.product(k, i), j, true, acc);
          if (!all_divisible(acc, p)) {
            rep.jacobi = false;
            note("jacobi", {i, j, k});
            break;
          }
        }
  } else {
    std::vector<std::uint64_t> lhs(d), rhs(d);
    for (std::size_t i = 0; i < d && rep.associative; ++i)
      for (std::size_t j = 0; j < d && rep.associative; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          std::fill(lhs.begin(), lhs.end(), 0);
          std::fill(rhs.begin(), rhs.end(), 0);
          accumulate(a, a.product(i, j), k, true, lhs);
          accumulate(a, a.product(j, k), i, false, rhs);
          bool same = true;
          for (std::size_t m = 0; m < d && same; ++m) same = lhs[m] % p == rhs[m] % p;
          if (!same) {
            rep.associative = false;
            note("associative", {i, j, k});
            break;
          }
        }
  }
  return rep;
}

Subspace centralizer(const StructureConstantAlgebra& a, const std::vector<Vec>& gens) {
  if (gens.empty()) return Subspace::full(a.field(), a.dim());
  return Subspace::from_canonical(null_space(a.commutation_system(gens)));
}

Subspace center(const StructureConstantAlgebra& a) {
  const std::size_t d = a.dim();
  Matrix sys(a.field(), d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      auto b = a.bracket(i, j);
      for (std::size_t k = 0; k < d; ++k) sys(j * d + k, i) = b[k];
    }
  return Subspace::from_canonical(null_space(sys));
}

std::optional<std::size_t> nilpotency_class(const StructureConstantAlgebra& a) {
  const std::size_t d = a.dim();
  Subspace term = Subspace::full(a.field(), d);
  std::size_t c = 0;
  Vec unit(d, 0);
  while (term.dim() > 0) {
    Matrix gens(a.field(), 0, d);
    for (std::size_t i = 0; i < d; ++i) {
      std::fill(unit.begin(), unit.end(), 0);
      unit[i] = 1;
      for (std::size_t b = 0; b < term.dim(); ++b)
        gens.append_row(a.kind() == AlgebraKind::lie ? a.bracket(unit, term.vector(b))
                                                     : a.multiply(unit, term.vector(b)));
    }
    Subspace next = Subspace::span(gens);
    if (next.dim() == term.dim()) return std::nullopt;
    term = std::move(next);
    ++c;
  }
  return c;
}

std::optional<std::pair<std::size_t, std::size_t>> subalgebra_violation(
    const StructureConstantAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(a.multiply(s.vector(i), s.vector(j)))) return std::pair{i, j};
  return std::nullopt;
}

bool is_commuting_subspace(const StructureConstantAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j)
      if (!is_zero(a.bracket(s.vector(i), s.vector(j)))) return false;
  return true;
}

bool is_abelian_subspace(const StructureConstantAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DomainError("subspace lives in the wrong ambient space");
  if (auto bad = subalgebra_violation(a, s)) throw NotSubalgebra(bad->first, bad->second);
  return is_commuting_subspace(a, s);
}

bool is_ideal(const StructureConstantAlgebra& a, const Subspace& s) {
  const std::size_t d = a.dim();
  Vec unit(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[j] = 1;
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (!s.contains(a.multiply(unit, s.vector(b)))) return false;
      if (a.kind() == AlgebraKind::associative && !s.contains(a.multiply(s.vector(b), unit)))
        return false;
    }
  }
  return true;
}

Subspace abelian_ideal_extensions(const StructureConstantAlgebra& a, const Subspace& ideal) {
  const std::size_t d = a.dim();
  const auto& f = a.field();
  // Rows w with w . v = 0 for all v in ideal; v lies in the ideal iff all w . v vanish.
  const Matrix annihilator = null_space(ideal.basis());
  Matrix sys(f, 0, d);
  Vec row(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t w = 0; w < annihilator.rows(); ++w) {
      for (std::size_t i = 0; i < d; ++i) {
        auto b = a.bracket(i, j);
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < d; ++k) acc += std::uint64_t{annihilator(w, k)} * b[k];
        row[i] = static_cast<Elem>(acc % f.p());
      }
      sys.append_row(row);
    }
  }
  Vec unit(d, 0);
  for (std::size_t u = 0; u < ideal.dim(); ++u) {
    std::vector<Vec> cols(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::fill(unit.begin(), unit.end(), 0);
      unit[i] = 1;
      cols[i] = a.bracket(unit, ideal.vector(u));
    }
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) row[i] = cols[i][k];
      sys.append_row(row);
    }
  }
  return Subspace::from_canonical(null_space(sys));
}

std::optional<Vec> lex_smallest_outside(const Subspace& outer, const Subspace& inner) {
  for (std::size_t i = outer.dim(); i-- > 0;) {
    auto v = outer.vector(i);
    if (!inner.contains(v)) return Vec(v.begin(), v.end());
  }
  return std::nullopt;
}

Subspace maximal_abelian_ideal(const StructureConstantAlgebra& a) {
  if (a.kind() != AlgebraKind::lie)
    throw DomainError("maximal_abelian_ideal requires a Lie algebra");
  if (!nilpotency_class(a)) throw DomainError("maximal_abelian_ideal requires a nilpotent algebra");
  Subspace ideal = center(a);
  while (auto x = lex_smallest_outside(abelian_ideal_extensions(a, ideal), ideal))
    ideal = ideal.join(*x);
  return ideal;
}

} // namespace commsub
