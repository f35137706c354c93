#include "commsub/construct.hpp"
#include "commsub/search.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace commsub;
using corpus::unit;

TEST_CASE("extremal parameters") {
  CHECK(extremal_params(4) == ExtremalParams{4, 1, 3, 2});
  CHECK(extremal_params(5) == ExtremalParams{5, 2, 3, 3});
  CHECK(extremal_params(6) == ExtremalParams{6, 3, 4, 3});
  CHECK(extremal_params(7) == ExtremalParams{7, 5, 4, 4});
  CHECK(extremal_params(8) == ExtremalParams{8, 7, 5, 4});
  CHECK(extremal_params(3) == ExtremalParams{3, 0, 2, 2});
  CHECK(extremal_params(2).n == 0);
  CHECK_THROWS_AS(extremal_params(1), DomainError);
  CHECK_THROWS_AS(extremal_params(0), DomainError);
}

TEST_CASE("extremal parameters reach the target dimension") {
  for (std::size_t s = 2; s <= 60; ++s) {
    const auto prm = extremal_params(s);
    INFO("s = " << s);
    CHECK(prm.n + prm.t >= extremal_target_dim(s));
    if (s >= 4) CHECK(2 * prm.n < prm.t * (prm.k - 1));
    // exact ceil((s^2+4s-5)/8)
    CHECK(8 * extremal_target_dim(s) >= s * s + 4 * s - 5);
    CHECK(8 * (extremal_target_dim(s) - 1) < s * s + 4 * s - 5);
  }
  CHECK(extremal_target_dim(8) == 12);
}

TEST_CASE("lie algebra from forms") {
  SUBCASE("symplectic plane gives heisenberg") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto a = build_lie_from_forms(corpus::symplectic_plane(p));
      const auto h = corpus::heisenberg(p);
      CHECK(a.dim() == 3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          auto x = a.product(i, j), y = h.product(i, j);
          CHECK(std::equal(x.begin(), x.end(), y.begin()));
        }
      CHECK(a.labels() == std::vector<std::string>{"e1", "e2", "f1"});
    }
  }
  SUBCASE("zero forms give an abelian algebra") {
    PrimeField f(2);
    const auto a = build_lie_from_forms(FormTuple(f, 2, FormKind::alternating, {Matrix(f, 2, 2), Matrix(f, 2, 2)}));
    CHECK(a.dim() == 4);
    CHECK(nilpotency_class(a) == 1);
  }
  SUBCASE("certified tuple") {
    const auto c = certify_no_isotropic(7, 5, 4, PrimeField(2), 1, 1000);
    const auto a = build_lie_from_forms(c.forms);
    CHECK(a.dim() == 12);
    CHECK(verify_axioms(a).ok());
    CHECK(nilpotency_class(a) == 2);
  }
  CHECK_THROWS_AS(build_lie_from_forms(sample_form_tuple(3, 1, FormKind::general, PrimeField(3), 1)),
                  DomainError);
}

TEST_CASE("form algebras: U central, class <= 2, isotropic lifts are abelian") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::uint32_t p = seed % 3 == 0 ? 3 : 2;
    const std::size_t n = 1 + seed % 5, t = 1 + seed % 3;
    const auto forms = sample_form_tuple(n, t, FormKind::alternating, PrimeField(p), seed);
    const auto a = build_lie_from_forms(forms);
    INFO("seed " << seed);
    CHECK(a.dim() == n + t);
    CHECK(verify_axioms(a).ok());
    CHECK(nilpotency_class(a).value() <= 2);
    const Subspace z = center(a);
    for (std::size_t m = 0; m < t; ++m) CHECK(z.contains(unit(n + t, n + m)));
    for (std::size_t k = 1; k <= n; ++k) {
      auto w = find_common_isotropic(forms, k);
      if (!w) break;
      Matrix gens(a.field(), 0, n + t);
      for (std::size_t r = 0; r < w->dim(); ++r) {
        Vec v(n + t, 0);
        std::copy(w->vector(r).begin(), w->vector(r).end(), v.begin());
        gens.append_row(v);
      }
      for (std::size_t m = 0; m < t; ++m) gens.append_row(unit(n + t, n + m));
      CHECK(is_abelian_subspace(a, Subspace::span(gens)));
    }
  }
}

TEST_CASE("associative algebra from forms") {
  PrimeField f(2);
  SUBCASE("zero forms are commutative") {
    const auto a = build_assoc_from_forms(FormTuple(f, 2, FormKind::general, {Matrix(f, 2, 2)}));
    CHECK(is_commuting_subspace(a, Subspace::full(f, 3)));
  }
  SUBCASE("upper corner form") {
    const auto a = build_assoc_from_forms(FormTuple(f, 2, FormKind::general, {Matrix(f, 2, 2, {0, 1, 0, 0})}));
    CHECK(verify_axioms(a).ok());
    CHECK(a.multiply(unit(3, 0), unit(3, 1)) == unit(3, 2));
    CHECK(is_zero(a.multiply(unit(3, 1), unit(3, 0))));
    CHECK(is_abelian_subspace(a, Subspace::span(f, 3, {unit(3, 0), unit(3, 2)})));
    // span(e1, e2) is neither closed nor commutative
    CHECK_THROWS_AS(is_abelian_subspace(a, Subspace::span(f, 3, {unit(3, 0), unit(3, 1)})), NotSubalgebra);
    CHECK_FALSE(is_commuting_subspace(a, Subspace::span(f, 3, {unit(3, 0), unit(3, 1)})));
  }
  SUBCASE("symmetric form is commutative") {
    PrimeField g(3);
    const auto a = build_assoc_from_forms(FormTuple(g, 2, FormKind::symmetric, {Matrix(g, 2, 2, {1, 2, 2, 0})}));
    CHECK(is_abelian_subspace(a, Subspace::full(g, 3)));
  }
  SUBCASE("random general tuples are associative of class <= 2") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto a = build_assoc_from_forms(sample_form_tuple(3, 2, FormKind::general, PrimeField(3), seed));
      CHECK(verify_axioms(a).ok());
      CHECK(nilpotency_class(a).value() <= 2);
    }
  }
}

TEST_CASE("unitalization") {
  PrimeField f(2);
  SUBCASE("zero algebra of dim 1") {
    const auto u = unitalize(corpus::abelian(AlgebraKind::associative, 2, 1));
    CHECK(u.dim() == 2);
    CHECK(verify_axioms(u).ok());
    CHECK(is_zero(u.product(0, 0)));
    CHECK(u.multiply(unit(2, 1), unit(2, 1)) == unit(2, 1));
    CHECK(u.multiply(unit(2, 0), unit(2, 1)) == unit(2, 0));
  }
  SUBCASE("A_phi of dim 3") {
    const auto a = build_assoc_from_forms(FormTuple(f, 2, FormKind::general, {Matrix(f, 2, 2, {0, 1, 0, 0})}));
    const auto u = unitalize(a);
    CHECK(u.dim() == 4);
    CHECK(verify_axioms(u).ok());
    CHECK(u.labels().back() == "1");
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(u.multiply(unit(4, i), unit(4, 3)) == unit(4, i));
      CHECK(u.multiply(unit(4, 3), unit(4, i)) == unit(4, i));
    }
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        auto x = a.product(i, j);
        auto y = u.product(i, j);
        CHECK(std::equal(x.begin(), x.end(), y.begin()));
        CHECK(y[3] == 0);
      }
  }
  SUBCASE("twice") {
    const auto a = corpus::matrix_units(AlgebraKind::associative, 3, corpus::upper(3, true));
    const auto uu = unitalize(unitalize(a));
    CHECK(uu.dim() == a.dim() + 2);
    CHECK(verify_axioms(uu).ok());
    const std::size_t e = uu.dim() - 1;
    for (std::size_t i = 0; i < uu.dim(); ++i) {
      CHECK(uu.multiply(unit(uu.dim(), e), unit(uu.dim(), i)) == unit(uu.dim(), i));
      CHECK(uu.multiply(unit(uu.dim(), i), unit(uu.dim(), e)) == unit(uu.dim(), i));
    }
  }
  CHECK_THROWS_AS(unitalize(corpus::heisenberg(2)), DomainError);
}

TEST_CASE("matrix commutative subalgebras") {
  SUBCASE("r = 1") {
    const auto m = matrix_commutative_subalgebra(1, PrimeField(2), MatrixConstruction::corner);
    CHECK(m.ambient.dim() == 1);
    CHECK(m.sub.dim() == 1);
  }
  SUBCASE("r = 4 corner over GF(2)") {
    const auto m = matrix_commutative_subalgebra(4, PrimeField(2), MatrixConstruction::corner);
    CHECK(m.sub.dim() == 4);
    CHECK(m.ambient.dim() == 16);
    CHECK(m.ambient.dim() == 4 * m.sub.dim());
  }
  SUBCASE("r = 5 corner over GF(3)") {
    const auto m = matrix_commutative_subalgebra(5, PrimeField(3), MatrixConstruction::corner);
    CHECK(m.sub.dim() == 6);
    CHECK(m.ambient.dim() == 25);
    CHECK(2 * m.ambient.dim() <= 9 * m.sub.dim());
  }
  SUBCASE("ambient is M_r") {
    const auto m = matrix_commutative_subalgebra(3, PrimeField(3), MatrixConstruction::diagonal);
    CHECK(verify_axioms(m.ambient).ok());
    CHECK(center(m.ambient).dim() == 1);
    CHECK(m.sub.dim() == 3);
    CHECK(is_abelian_subspace(m.ambient, m.sub));
  }
  CHECK_THROWS_AS(matrix_commutative_subalgebra(0, PrimeField(2), MatrixConstruction::diagonal), DomainError);
  CHECK_THROWS_AS(matrix_commutative_subalgebra(13, PrimeField(2), MatrixConstruction::diagonal), DomainError);
  CHECK(matrix_construction_from_string("corner") == MatrixConstruction::corner);
  CHECK_THROWS_AS(matrix_construction_from_string("upper"), DomainError);
}
