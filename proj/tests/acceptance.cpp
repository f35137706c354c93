// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "commsub/bounds.hpp"
#include "commsub/construct.hpp"
#include "commsub/search.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace commsub;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Largest commutative subalgebra by scanning every subspace from the top,
// keeping those that is_abelian_subspace accepts.
std::size_t brute_max_abelian(const StructureConstantAlgebra& a) {
  for (std::size_t k = a.dim() + 1; k-- > 0;) {
    SubspaceEnumeration en(a.field(), a.dim(), k);
    for (const Subspace& s : en) {
      try {
        if (is_abelian_subspace(a, s)) return k;
      } catch (const NotSubalgebra&) {
      }
    }
  }
  return 0;
}

Outcome lower_bound_reproduction() {
  Outcome o;
  std::ostringstream d;
  for (std::size_t s = 4; s <= 8; ++s) {
    const auto prm = extremal_params(s);
    const PrimeField f(2);
    const auto cert = certify_no_isotropic(prm.n, prm.t, prm.k, f, 1, 1000);
    const auto alg = build_lie_from_forms(cert.forms);
    const auto res = max_abelian_class2_exact(alg);
    const std::size_t dim = alg.dim();
    if (s > 4) d << "; ";
    d << "s=" << s << ": dim " << dim << ", max abelian " << res.dim;

    // rescan the certified tuple, counting every subspace looked at
    std::uint64_t scanned = 0;
    if (!cert.vacuous) {
      SubspaceEnumeration en(f, prm.n, prm.k);
      for (auto cur = en.cursor(); !cur.done(); cur.next()) {
        ++scanned;
        if (subspace_qualifies(cert.forms, cur.basis(), IsotropyMode::isotropic))
          o.fail("certified tuple has an isotropic subspace at s=" + std::to_string(s));
      }
      d << ", " << scanned << " subspaces";
      if (BigInt(scanned) != cert.subspaces_checked ||
          BigInt(scanned) != gaussian_binomial(static_cast<unsigned>(prm.n), static_cast<unsigned>(prm.k), 2))
        o.fail("scan count mismatch at s=" + std::to_string(s));
    } else if (prm.n >= prm.k) {
      o.fail("unexpected vacuous certificate at s=" + std::to_string(s));
    }
    if (dim != prm.n + prm.t || 8 * dim + 5 < s * s + 4 * s) o.fail("dimension below target at s=" + std::to_string(s));
    if (res.dim > s || !res.exact) o.fail("max abelian above s at s=" + std::to_string(s));
    if (s == 8 && (dim != 12 || scanned != 11811)) o.fail("s=8 instance is not dim 12 with 11811 subspaces");
  }
  o.detail = o.pass ? d.str() : o.detail;
  return o;
}

Outcome reduction_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t t = 1 + rng() % 3;
    const std::size_t n = 1 + rng() % (7 - t);
    const auto forms = sample_form_tuple(n, t, FormKind::alternating, PrimeField(2), 5000 + i);
    const auto alg = build_lie_from_forms(forms);
    const std::size_t a = max_abelian_class2_exact(forms).dim;
    const std::size_t b = max_abelian_exact(alg).dim;
    const std::size_t c = brute_max_abelian(alg);
    if (a != b || b != c)
      o.fail("tuple " + std::to_string(i) + ": " + std::to_string(a) + " / " + std::to_string(b) + " / " +
             std::to_string(c));
  }
  if (o.pass) o.detail = "50/50 tuples agree (class-2 reduction, exact search, brute force)";
  return o;
}

Outcome class2_upper_bound() {
  Outcome o;
  std::mt19937_64 rng(3);
  const std::uint32_t primes[] = {2, 3, 5};
  int ok = 0;
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t p = primes[i % 3];
    const std::size_t t = 1 + rng() % 4;
    const std::size_t n = 1 + rng() % (10 - t);
    const auto alg = build_lie_from_forms(sample_form_tuple(n, t, FormKind::alternating, PrimeField(p), 7000 + i));
    const auto g = greedy_abelian_class2(alg);
    const std::size_t s = g.dim;
    const bool good = g.witness.dim() == s && is_abelian_subspace(alg, g.witness) && alg.dim() <= s * s / 4 + s;
    if (good) ++ok;
    else o.fail("algebra " + std::to_string(i) + " of dim " + std::to_string(alg.dim()) + ", greedy " + std::to_string(s));
  }
  if (o.pass) o.detail = std::to_string(ok) + "/100 greedy witnesses satisfy dim <= floor(s^2/4)+s";
  return o;
}

Outcome nilpotent_bound() {
  Outcome o;
  int count = 0;
  auto run = [&](const corpus::Named& x, Structure st) {
    const auto res = max_abelian_exact(x.alg);
    const auto v = check_structural_bound(x.alg, res.dim, st);
    // n(n+1)/2 recomputed here
    const bool direct = 2 * x.alg.dim() <= res.dim * (res.dim + 1);
    if (!res.exact || !v.check.pass || !direct) o.fail(x.name);
    ++count;
  };
  for (const auto& x : corpus::nilpotent_lie()) run(x, Structure::nilpotent);
  for (const auto& x : corpus::class2_assoc()) run(x, Structure::nilpotent_assoc);
  if (o.pass) o.detail = std::to_string(count) + " corpus algebras satisfy dim <= n(n+1)/2";
  return o;
}

bool restrictions_symmetric(const FormTuple& forms, const Subspace& s) {
  const std::size_t n = forms.n();
  const PrimeField& f = forms.field();
  std::vector<Vec> proj;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto v = s.vector(i);
    proj.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  }
  for (const auto& m : forms.mats())
    for (const auto& x : proj)
      for (const auto& y : proj) {
        Elem xy = 0, yx = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            xy = f.add(xy, f.mul(f.mul(x[a], m(a, b)), y[b]));
            yx = f.add(yx, f.mul(f.mul(y[a], m(a, b)), x[b]));
          }
        if (xy != yx) return false;
      }
  return true;
}

Outcome associative_criterion() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uint64_t subalgebras = 0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t t = 1 + rng() % 3;
    const std::size_t n = 1 + rng() % (6 - t);
    const auto forms = sample_form_tuple(n, t, FormKind::general, PrimeField(2), 9000 + i);
    const auto alg = build_assoc_from_forms(forms);
    for (std::size_t k = 0; k <= alg.dim(); ++k) {
      SubspaceEnumeration en(alg.field(), alg.dim(), k);
      for (const Subspace& s : en) {
        if (subalgebra_violation(alg, s)) continue;
        ++subalgebras;
        if (is_commuting_subspace(alg, s) != restrictions_symmetric(forms, s))
          o.fail("tuple " + std::to_string(i) + " disagrees on a subalgebra of dim " + std::to_string(k));
      }
    }
  }
  if (o.pass) o.detail = "30 tuples, " + std::to_string(subalgebras) + " subalgebras, criterion holds on all";
  return o;
}

Outcome unitalization_shift() {
  Outcome o;
  std::vector<corpus::Named> algs{
      {"zero1", corpus::abelian(AlgebraKind::associative, 2, 1)},
      {"zero3", corpus::abelian(AlgebraKind::associative, 3, 3)},
      {"n3", corpus::matrix_units(AlgebraKind::associative, 2, corpus::upper(3, true))},
      {"t2", corpus::matrix_units(AlgebraKind::associative, 3, corpus::upper(2, false))},
      {"m2", corpus::matrix_units(AlgebraKind::associative, 2, corpus::all_units(2))},
  };
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::size_t n = 2 + seed % 2, t = 5 - n - seed % 2;
    algs.push_back({"a_phi" + std::to_string(seed),
                    build_assoc_from_forms(sample_form_tuple(n, t, FormKind::general, PrimeField(2), 300 + seed))});
  }
  std::ostringstream d;
  for (const auto& [name, a] : algs) {
    const auto base = max_abelian_exact(a);
    const auto up = max_abelian_exact(unitalize(a));
    if (name != algs.front().name) d << ", ";
    d << name << " " << base.dim << "->" << up.dim;
    if (a.dim() > 5 || !base.exact || !up.exact || up.dim != base.dim + 1) o.fail(name);
  }
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome matrix_constructions() {
  Outcome o;
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t r = 2; r <= 9; ++r) {
      const std::size_t k = r / 2;
      const std::size_t expect = r % 2 == 0 ? k * k : k * (k + 1);
      const auto corner = matrix_commutative_subalgebra(r, PrimeField(p), MatrixConstruction::corner);
      const auto diag = matrix_commutative_subalgebra(r, PrimeField(p), MatrixConstruction::diagonal);
      const std::string at = "r=" + std::to_string(r) + " p=" + std::to_string(p);
      if (corner.ambient.dim() != r * r || corner.sub.dim() != expect) o.fail("corner dim at " + at);
      if (!is_abelian_subspace(corner.ambient, corner.sub)) o.fail("corner not commutative at " + at);
      if (2 * r * r > 9 * corner.sub.dim()) o.fail("dim M_r > 9/2 dim B at " + at);
      if (diag.sub.dim() != r || !is_abelian_subspace(diag.ambient, diag.sub)) o.fail("diagonal at " + at);
    }
  if (o.pass) o.detail = "r = 2..9 over GF(2) and GF(3)";
  return o;
}

Outcome table_fidelity() {
  Outcome o;
  const std::vector<std::tuple<SimpleType, std::uint64_t, std::uint64_t>> exceptional{
      {SimpleType::E6, 78, 16}, {SimpleType::E7, 133, 27}, {SimpleType::E8, 248, 36},
      {SimpleType::F4, 52, 9},  {SimpleType::G2, 14, 3}};
  std::vector<SimpleTypeEntry> all;
  for (const auto& [t, dim, ab] : exceptional) {
    const auto e = simple_lie_data(t);
    if (e.dim != dim || e.max_abelian != ab) o.fail(std::string("exceptional ") + to_string(t));
    all.push_back(e);
  }
  std::size_t cells = 2 * exceptional.size();
  for (std::uint64_t l = 1; l <= 25; ++l) {
    auto cmp = [&](SimpleType t, std::uint64_t dim, std::uint64_t ab) {
      const auto e = simple_lie_data(t, l);
      if (e.dim != dim || e.max_abelian != ab) o.fail(std::string(to_string(t)) + std::to_string(l));
      all.push_back(e);
      cells += 2;
    };
    cmp(SimpleType::A, l * l + 2 * l, (l + 1) * (l + 1) / 4);
    if (l >= 3) cmp(SimpleType::B, 2 * l * l + l, l * (l - 1) / 2 + 1);
    if (l >= 2) cmp(SimpleType::C, 2 * l * l + l, l * (l + 1) / 2);
    if (l >= 4) cmp(SimpleType::D, 2 * l * l - l, l * (l - 1) / 2);
  }
  if (!seven_n_check(all).pass) o.fail("seven_n_check");
  if (o.pass) o.detail = std::to_string(cells) + " cells match, dim <= 7n on all " + std::to_string(all.size()) + " entries";
  return o;
}

Outcome formula_fidelity() {
  Outcome o;
  // function, side, field class queried, closed form
  const std::vector<std::tuple<const char*, Side, FieldClass, const char*>> checks{
      {"l_C", Side::upper, FieldClass::C, "(n^2+17n)/2"},
      {"a_C", Side::upper, FieldClass::C, "n^2/2+5n"},
      {"l_C", Side::lower, FieldClass::C, "(n^2+4n-5)/8"},
      {"l_R", Side::upper, FieldClass::R, "4n^2+18n"},
      {"l_R", Side::lower, FieldClass::R, "2n^2+n"},
      {"a_K", Side::upper, FieldClass::char0, "(3n^2+n)/2"},
      {"a1_K", Side::upper, FieldClass::char0, "(3n^2+n)/2"},
      {"a_K", Side::lower, FieldClass::any, "(n^2+4n-5)/8"},
      {"a1_K", Side::lower, FieldClass::any, "(n^2+2n)/8"},
      {"l_K", Side::lower, FieldClass::any, "(n^2+4n-5)/8"},
      {"ln_K", Side::lower, FieldClass::any, "(n^2+4n-5)/8"},
      {"ln_K", Side::upper, FieldClass::any, "n^2/4+n"},
  };
  std::size_t compared = 0;
  for (std::int64_t n = 1; n <= 100; ++n) {
    for (const auto& [fn, side, fc, form] : checks) {
      const auto rep = bound_table(static_cast<std::size_t>(n), fc);
      const BoundEntry* e = rep.find(fn, side);
      if (!e || to_string(e->value) != oracle::closed_form(form, n)) {
        o.fail(std::string(fn) + " at n=" + std::to_string(n));
        continue;
      }
      ++compared;
    }
    // the a_K upper bound with c = 9/2 on closed fields
    const auto closed = bound_table(static_cast<std::size_t>(n), FieldClass::closed);
    bool seen_c = false;
    for (const auto& e : closed.entries)
      if (e.function == "a_K" && e.side == Side::upper && e.formula.rfind("(n^2+(2c+1)n)/2", 0) == 0) {
        seen_c = true;
        if (to_string(e.value) != oracle::closed_form("(n^2+10n)/2", n)) o.fail("c bound at n=" + std::to_string(n));
      }
    if (!seen_c) o.fail("c bound missing at n=" + std::to_string(n));
    for (auto fc : {FieldClass::C, FieldClass::R, FieldClass::closed, FieldClass::char0, FieldClass::any}) {
      const auto rep = bound_table(static_cast<std::size_t>(n), fc);
      for (const auto& lo : rep.entries)
        for (const auto& hi : rep.entries)
          if (lo.side == Side::lower && hi.side == Side::upper && lo.function == hi.function && lo.value > hi.value)
            o.fail("lower > upper for " + lo.function + " at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " values match closed forms for n = 1..100, lower <= upper";
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lower-bound reproduction, s = 4..8", lower_bound_reproduction},
      {"class-2 reduction equivalence", reduction_equivalence},
      {"class-2 upper bound via greedy", class2_upper_bound},
      {"nilpotent bound n(n+1)/2", nilpotent_bound},
      {"associative commutativity criterion", associative_criterion},
      {"unitalization shift", unitalization_shift},
      {"matrix-algebra constructions", matrix_constructions},
      {"simple Lie table fidelity", table_fidelity},
      {"bound formula fidelity", formula_fidelity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s (%s) [%.2fs]\n", index, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(),
                secs);
  }
  std::printf("criterion 10: EXCLUDED  real lower bound via compact forms, Lie-group corollaries and "
              "infinite-field genericity are not desk-reproducible; only their formulas are checked by criterion 9\n");
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
