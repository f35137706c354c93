#include "commsub/construct.hpp"

#include <string>

namespace commsub {

ExtremalParams extremal_params(std::size_t s) {
  if (s < 2) throw DomainError("extremal_params needs s >= 2, got " + std::to_string(s));
  const auto s2 = static_cast<long long>(s * s);
  auto floor8 = [](long long v) { return v >= 0 ? v / 8 : -((-v + 7) / 8); };
  if (s % 2 == 0) {
    const long long n = floor8(s2 - 5);
    return {s, static_cast<std::size_t>(n < 0 ? 0 : n), s / 2 + 1, s / 2};
  }
  const long long n = floor8(s2 - 2);
  return {s, static_cast<std::size_t>(n < 0 ? 0 : n), (s + 1) / 2, (s + 1) / 2};
}

std::size_t extremal_target_dim(std::size_t s) {
  const long long v = static_cast<long long>(s * s + 4 * s) - 5;
  return v <= 0 ? 0 : static_cast<std::size_t>((v + 7) / 8);
}

namespace {

std::vector<std::string> form_algebra_labels(std::size_t n, std::size_t t) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  for (std::size_t m = 0; m < t; ++m) labels.push_back("f" + std::to_string(m + 1));
  return labels;
}

} // namespace

StructureConstantAlgebra build_lie_from_forms(const FormTuple& forms) {
  if (forms.kind() != FormKind::alternating)
    throw DomainError(std::string("build_lie_from_forms needs alternating forms, got ") +
                      to_string(forms.kind()));
  const std::size_t n = forms.n(), t = forms.t(), d = n + t;
  StructureConstantAlgebra a(AlgebraKind::lie, forms.field(), d, form_algebra_labels(n, t));
  Vec v(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t m = 0; m < t; ++m) v[n + m] = forms.mats()[m](i, j);
      if (!is_zero(v)) a.set_bracket(i, j, v);
    }
  return a;
}

StructureConstantAlgebra build_assoc_from_forms(const FormTuple& forms) {
  const std::size_t n = forms.n(), t = forms.t(), d = n + t;
  StructureConstantAlgebra a(AlgebraKind::associative, forms.field(), d,
                             form_algebra_labels(n, t));
  Vec v(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t m = 0; m < t; ++m) v[n + m] = forms.mats()[m](i, j);
      if (!is_zero(v)) a.set_product(i, j, v);
    }
  return a;
}

StructureConstantAlgebra unitalize(const StructureConstantAlgebra& a) {
  if (a.kind() != AlgebraKind::associative)
    throw DomainError("unitalize needs an associative algebra");
  const std::size_t d = a.dim(), d1 = d + 1;
  std::vector<std::string> labels = a.labels();
  if (!labels.empty()) labels.push_back("1");
  StructureConstantAlgebra out(AlgebraKind::associative, a.field(), d1, std::move(labels));
  Vec v(d1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto p = a.product(i, j);
      if (is_zero(p)) continue;
      std::copy(p.begin(), p.end(), v.begin());
      v[d] = 0;
      out.set_product(i, j, v);
    }
  for (std::size_t i = 0; i <= d; ++i) {
    std::fill(v.begin(), v.end(), 0);
    v[i] = 1;
    out.set_product(i, d, v);
    out.set_product(d, i, v);
  }
  return out;
}

const char* to_string(MatrixConstruction c) noexcept {
  return c == MatrixConstruction::diagonal ? "diagonal" : "corner";
}

MatrixConstruction matrix_construction_from_string(const std::string& s) {
  if (s == "diagonal") return MatrixConstruction::diagonal;
  if (s == "corner") return MatrixConstruction::corner;
  throw DomainError("unknown matrix construction '" + s + "'");
}

MatrixCommutative matrix_commutative_subalgebra(std::size_t r, PrimeField field,
                                                MatrixConstruction construction) {
  if (r < 1 || r > kMaxMatrixOrder)
    throw DomainError("matrix order r must lie in [1, 12], got " + std::to_string(r));
  const std::size_t d = r * r;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      labels.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
  StructureConstantAlgebra m(AlgebraKind::associative, field, d, std::move(labels));
  Vec v(d, 0);
  // E_ab E_bc = E_ac
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c) {
        std::fill(v.begin(), v.end(), 0);
        v[a * r + c] = 1;
        m.set_product(a * r + b, b * r + c, v);
      }

  std::vector<Vec> gens;
  auto unit = [&](std::size_t a, std::size_t b) {
    Vec e(d, 0);
    e[a * r + b] = 1;
    gens.push_back(std::move(e));
  };
  if (construction == MatrixConstruction::diagonal) {
    for (std::size_t a = 0; a < r; ++a) unit(a, a);
  } else if (r == 1) {
    unit(0, 0);
  } else {
    const std::size_t k = r / 2;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = k; b < r; ++b) unit(a, b);
  }
  Subspace sub = Subspace::span(field, d, gens);
  if (!is_abelian_subspace(m, sub)) throw Error("matrix subalgebra failed to commute");
  return {std::move(m), std::move(sub)};
}

} // namespace commsub
