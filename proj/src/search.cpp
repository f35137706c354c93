#include "commsub/search.hpp"

#include <algorithm>
#include <atomic>
#include <optional>

namespace commsub {

const char* to_string(SearchMode m) noexcept {
  switch (m) {
  case SearchMode::exact: return "exact";
  case SearchMode::class2: return "class2";
  case SearchMode::greedy: return "greedy";
  }
  return "?";
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "exact") return SearchMode::exact;
  if (s == "class2") return SearchMode::class2;
  if (s == "greedy") return SearchMode::greedy;
  throw DomainError("unknown search mode '" + s + "'");
}

namespace {

// A node is a commuting subspace S held as RREF rows built bottom-up: each
// new row has a pivot left of every existing pivot and vanishes on them, so
// every subspace is reached exactly once. `cent` is the centralizer of S.
struct Node {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  std::size_t leftmost;
  Subspace cent;
};

class ExactSearch {
public:
  ExactSearch(const StructureConstantAlgebra& a, std::uint64_t budget,
              std::atomic<std::uint64_t>& nodes, std::atomic<bool>& aborted,
              std::atomic<std::size_t>* global_best)
      : a_(a), budget_(budget), nodes_(nodes), aborted_(aborted), global_best_(global_best) {}

  Node root() const {
    return {{}, {}, a_.dim(), Subspace::full(a_.field(), a_.dim())};
  }

  Node child(const Node& parent, const Vec& x) const {
    const auto lead = static_cast<std::size_t>(
        std::find_if(x.begin(), x.end(), [](Elem e) { return e != 0; }) - x.begin());
    Node n{parent.rows, parent.pivots, lead, restrict_centralizer(parent.cent, x)};
    n.rows.insert(n.rows.begin(), x);
    n.pivots.insert(n.pivots.begin(), lead);
    return n;
  }

  /// Root children, in exploration order.
  std::vector<Vec> children(const Node& node) const {
    std::vector<Vec> out;
    for_each_child(node, [&](const Vec& x) {
      out.push_back(x);
      return true;
    }, 0, false);
    return out;
  }

  void explore(const Node& node) {
    if (aborted_.load(std::memory_order_relaxed)) return;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
      aborted_.store(true);
      return;
    }
    const std::size_t dim = node.rows.size();
    if (dim > best_ || !witness_) {
      best_ = dim;
      witness_ = node.rows;
      if (global_best_) {
        std::size_t g = global_best_->load();
        while (dim > g && !global_best_->compare_exchange_weak(g, dim)) {
        }
      }
    }
    for_each_child(node, [&](const Vec& x) {
      explore(child(node, x));
      return !aborted_.load(std::memory_order_relaxed);
    }, dim, true);
  }

  std::size_t best() const noexcept { return best_; }
  bool found() const noexcept { return witness_.has_value(); }
  Subspace witness() const {
    return Subspace::span(a_.field(), a_.dim(), witness_.value_or(std::vector<Vec>{}));
  }

private:
  bool prune(std::size_t bound) const {
    if (bound <= best_ && witness_) return true;
    return global_best_ && bound < global_best_->load(std::memory_order_relaxed);
  }

  // Centralizer of S + x inside the centralizer C of S.
  Subspace restrict_centralizer(const Subspace& c, const Vec& x) const {
    const std::size_t d = a_.dim();
    Matrix sys(a_.field(), d, c.dim());
    for (std::size_t l = 0; l < c.dim(); ++l) {
      const Vec b = a_.bracket(x, c.vector(l));
      for (std::size_t k = 0; k < d; ++k) sys(k, l) = b[k];
    }
    const Matrix coeffs = null_space(sys);
    return Subspace::span(coeffs * c.basis());
  }

  // Candidates x for the next row: vectors of the centralizer reduced to vanish
  // on the pivots of S, with leading entry 1 left of node.leftmost.
  template <class Fn>
  void for_each_child(const Node& node, Fn&& fn, std::size_t dim, bool use_bound) const {
    const auto& f = a_.field();
    const std::size_t d = a_.dim();
    Matrix gens(f, 0, d);
    Vec v(d);
    for (std::size_t i = 0; i < node.cent.dim(); ++i) {
      auto b = node.cent.vector(i);
      std::copy(b.begin(), b.end(), v.begin());
      for (std::size_t r = 0; r < node.rows.size(); ++r) {
        const Elem coef = v[node.pivots[r]];
        if (coef == 0) continue;
        for (std::size_t j = 0; j < d; ++j) v[j] = f.sub(v[j], f.mul(coef, node.rows[r][j]));
      }
      gens.append_row(v);
    }
    const Subspace free = Subspace::span(gens);
    const auto& piv = free.pivots();

    // Rows of `free` with pivot < leftmost, taken right to left.
    std::size_t usable = 0;
    while (usable < piv.size() && piv[usable] < node.leftmost) ++usable;
    for (std::size_t r = usable; r-- > 0;) {
      // Any extension through this row has dimension at most dim + r + 1.
      if (use_bound && prune(dim + r + 1)) return;
      const std::size_t tail = free.dim() - r - 1;
      Vec coeff(tail, 0);
      while (true) {
        Vec x(free.vector(r).begin(), free.vector(r).end());
        for (std::size_t l = 0; l < tail; ++l) {
          if (coeff[l] == 0) continue;
          auto row = free.vector(r + 1 + l);
          for (std::size_t j = 0; j < d; ++j) x[j] = f.add(x[j], f.mul(coeff[l], row[j]));
        }
        if (!fn(x)) return;
        if (use_bound && prune(dim + r + 1)) return;
        std::size_t pos = tail;
        while (pos > 0 && ++coeff[pos - 1] == f.p()) coeff[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }

  const StructureConstantAlgebra& a_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& aborted_;
  std::atomic<std::size_t>* global_best_;
  std::size_t best_ = 0;
  std::optional<std::vector<Vec>> witness_;
};

SearchResult finish(std::size_t dim, Subspace witness, bool aborted, std::uint64_t nodes) {
  return {SearchMode::exact, dim, std::move(witness), !aborted, nodes};
}

} // namespace

SearchResult max_abelian_exact_serial(const StructureConstantAlgebra& a, std::uint64_t budget) {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  ExactSearch dfs(a, budget, nodes, aborted, nullptr);
  dfs.explore(dfs.root());
  return finish(dfs.best(), dfs.witness(), aborted.load(), nodes.load());
}

SearchResult max_abelian_exact(const StructureConstantAlgebra& a, std::uint64_t budget) {
  std::atomic<std::uint64_t> nodes{1};
  std::atomic<bool> aborted{false};
  std::atomic<std::size_t> global_best{0};

  ExactSearch planner(a, budget, nodes, aborted, nullptr);
  const Node root = planner.root();
  const std::vector<Vec> tasks = planner.children(root);

  std::vector<std::size_t> best(tasks.size(), 0);
  std::vector<std::optional<Subspace>> witness(tasks.size());

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i) {
    ExactSearch dfs(a, budget, nodes, aborted, &global_best);
    dfs.explore(dfs.child(root, tasks[static_cast<std::size_t>(i)]));
    if (dfs.found()) {
      best[static_cast<std::size_t>(i)] = dfs.best();
      witness[static_cast<std::size_t>(i)] = dfs.witness();
    }
  }

  std::size_t dim = 0;
  Subspace w = Subspace::zero(a.field(), a.dim());
  for (std::size_t i = 0; i < tasks.size(); ++i)
    if (witness[i] && best[i] > dim) {
      dim = best[i];
      w = *witness[i];
    }
  return finish(dim, std::move(w), aborted.load(), nodes.load());
}

Class2Decomposition decompose_class2(const StructureConstantAlgebra& a) {
  const auto cls = nilpotency_class(a);
  if (!cls || *cls > 2) throw DomainError("algebra is not nilpotent of class <= 2");
  Subspace z = center(a);
  std::vector<bool> is_pivot(a.dim(), false);
  for (auto c : z.pivots()) is_pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) comp.push_back(i);

  const std::size_t m = comp.size();
  std::vector<Matrix> mats(z.dim(), Matrix(a.field(), m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto b = a.bracket(comp[i], comp[j]);
      for (std::size_t q = 0; q < z.dim(); ++q) mats[q](i, j) = b[z.pivots()[q]];
    }
  FormTuple forms(a.field(), m, FormKind::alternating, std::move(mats));
  return {std::move(z), std::move(comp), std::move(forms)};
}

Class2Exact max_abelian_class2_exact(const FormTuple& forms, std::uint64_t budget) {
  for (std::size_t k = forms.n() + 1; k-- > 0;)
    if (auto w = find_common_isotropic(forms, k, IsotropyMode::isotropic, budget))
      return {forms.t() + k, std::move(*w)};
  // k = 0 always matches with the zero subspace.
  return {forms.t(), Subspace::zero(forms.field(), forms.n())};
}

namespace {

Subspace lift(const Class2Decomposition& dec, std::size_t d, const Subspace& inside_v) {
  Matrix gens = dec.center.basis();
  Vec v(d);
  for (std::size_t r = 0; r < inside_v.dim(); ++r) {
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t i = 0; i < dec.complement.size(); ++i)
      v[dec.complement[i]] = inside_v.vector(r)[i];
    gens.append_row(v);
  }
  return Subspace::span(gens);
}

} // namespace

SearchResult max_abelian_class2_exact(const StructureConstantAlgebra& a, std::uint64_t budget) {
  const Class2Decomposition dec = decompose_class2(a);
  Class2Exact r = max_abelian_class2_exact(dec.forms, budget);
  Subspace w = lift(dec, a.dim(), r.isotropic);
  return {SearchMode::class2, r.dim, std::move(w), true};
}

SearchResult greedy_abelian_class2(const StructureConstantAlgebra& a) {
  const Class2Decomposition dec = decompose_class2(a);
  const FormTuple& forms = dec.forms;
  const auto& f = a.field();
  const std::size_t m = forms.n();

  Subspace picked = Subspace::zero(f, m);
  Matrix system(f, 0, m);
  while (true) {
    const Subspace solutions = system.rows() == 0 ? Subspace::full(f, m)
                                                  : Subspace::from_canonical(null_space(system));
    auto x = lex_smallest_outside(solutions, picked);
    if (!x) break;
    // phi_i(x, y) = (x^T M_i) y
    for (const Matrix& mat : forms.mats()) system.append_row(row_times(f, *x, mat));
    picked = picked.join(*x);
  }
  Subspace w = lift(dec, a.dim(), picked);
  const std::size_t s = w.dim();
  return {SearchMode::greedy, s, std::move(w), false};
}

} // namespace commsub
