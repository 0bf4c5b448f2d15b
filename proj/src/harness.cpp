#include "homalg/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "homalg/trees.hpp"

namespace homalg {

// ---------------------------------------------------------------------------
// deterministic randomness
// ---------------------------------------------------------------------------

uint64_t Rng::next() {
  s_ += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::int_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::int_in: empty range");
  const uint64_t width = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % width);
}

Rational Rng::rational(long bound) {
  if (bound <= 0) return Rational(0);
  const long num = int_in(-bound, bound);
  const long den = int_in(1, bound);
  return Rational(num, den);
}

uint64_t sub_seed(uint64_t seed, std::string_view identity, uint64_t trial) {
  uint64_t h = 1469598103934665603ULL;  // FNV-1a over the stream name
  for (const char c : identity) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  uint64_t z = seed ^ h ^ (trial * 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------

FixtureRegistry default_fixtures() {
  FixtureRegistry reg;
  reg.algebras = {
      fixtures::ground_field(),
      fixtures::dual_numbers(),
      fixtures::dual_numbers_twisted(Rational(2)),
      fixtures::truncated_poly(),
      fixtures::truncated_poly_twisted(Rational(2)),
  };
  reg.dialgebras = {
      fixtures::bimodule_maps(),
      fixtures::bimodule_maps_swapped(),
      diagonal_dialgebra(fixtures::ground_field()),
      diagonal_dialgebra(fixtures::dual_numbers()),
  };
  reg.perturbed_algebra = fixtures::dual_numbers_perturbed();
  reg.perturbed_dialgebra = fixtures::bimodule_maps_perturbed();
  return reg;
}

// ---------------------------------------------------------------------------
// caches shared across checks of one session
// ---------------------------------------------------------------------------

struct Session::Caches {
  std::map<std::pair<const void*, int>, std::vector<Vec>> hom_bases;
  std::map<std::pair<const void*, int>, std::vector<Vec>> dlg_bases;
  std::map<const void*, std::unique_ptr<HomTower>> hom_towers;
  std::map<const void*, std::unique_ptr<DialgTower>> dlg_towers;

  const std::vector<Vec>& basis(const AlgebraPtr& a, int n) {
    const auto key = std::make_pair(static_cast<const void*>(a.get()), n);
    auto it = hom_bases.find(key);
    if (it == hom_bases.end()) it = hom_bases.emplace(key, alpha_subspace_basis(*a, n)).first;
    return it->second;
  }

  const std::vector<Vec>& basis(const DialgebraPtr& d, int n) {
    const auto key = std::make_pair(static_cast<const void*>(d.get()), n);
    auto it = dlg_bases.find(key);
    if (it == dlg_bases.end()) it = dlg_bases.emplace(key, alpha_subspace_basis(*d, n)).first;
    return it->second;
  }

  HomTower& tower(const AlgebraPtr& a) {
    auto it = hom_towers.find(a.get());
    if (it == hom_towers.end())
      it = hom_towers.emplace(a.get(), std::make_unique<HomTower>(HomComplex{a}, 8)).first;
    return *it->second;
  }

  DialgTower& tower(const DialgebraPtr& d) {
    auto it = dlg_towers.find(d.get());
    if (it == dlg_towers.end())
      it = dlg_towers.emplace(d.get(), std::make_unique<DialgTower>(DialgComplex{d}, 5)).first;
    return *it->second;
  }
};

// ---------------------------------------------------------------------------
// random elements of the compatible subspace
// ---------------------------------------------------------------------------

namespace {

Vec random_combination(const std::vector<Vec>& basis, size_t length, Rng& rng, long bound) {
  Vec flat(length, Rational(0));
  for (const Vec& b : basis) {
    // Draw unconditionally so the stream does not depend on which draws are zero.
    const Rational c = rng.rational(bound);
    if (c.is_zero()) continue;
    for (size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_zero()) flat[i] += c * b[i];
    }
  }
  return flat;
}

}  // namespace

Cochain random_cochain(const AlgebraPtr& a, int n, Rng& rng, long bound) {
  const std::vector<Vec> basis = alpha_subspace_basis(*a, n);
  DenseTensor t(map_shape(a->dim, n));
  t.entries() = random_combination(basis, t.entries().size(), rng, bound);
  return Cochain::unchecked(a, std::move(t));
}

TreeCochain random_tree_cochain(const DialgebraPtr& d, int n, Rng& rng, long bound) {
  const std::vector<Vec> basis = alpha_subspace_basis(*d, n);
  const DialgComplex cx{d};
  const Vec zero = cx.to_vec(TreeCochain::zero(d, n));
  return cx.from_vec(n, random_combination(basis, zero.size(), rng, bound));
}

// ---------------------------------------------------------------------------
// witnesses: first differing / nonzero entry, indices reported one-based
// ---------------------------------------------------------------------------

namespace {

std::vector<int> decode_index(const std::vector<int>& shape, size_t flat) {
  std::vector<int> idx(shape.size());
  for (size_t k = shape.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat % static_cast<size_t>(shape[k]));
    flat /= static_cast<size_t>(shape[k]);
  }
  return idx;
}

std::string entry_name(const std::vector<int>& idx) {
  std::string s = "(";
  for (size_t k = 0; k + 1 < idx.size(); ++k) {
    if (k > 0) s += ",";
    s += "e" + std::to_string(idx[k] + 1);
  }
  s += " -> e" + std::to_string(idx.back() + 1) + ")";
  return s;
}

// Index of the first differing entry, or npos when the tensors agree.
size_t first_diff(const DenseTensor& x, const DenseTensor& y) {
  const auto& a = x.entries();
  const auto& b = y.entries();
  for (size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return i;
  }
  return static_cast<size_t>(-1);
}

std::string describe_diff(const Cochain& x, const Cochain& y) {
  if (x.degree() != y.degree())
    return "degree mismatch " + std::to_string(x.degree()) + " vs " + std::to_string(y.degree());
  const size_t i = first_diff(x.coeffs(), y.coeffs());
  if (i == static_cast<size_t>(-1)) return "tensors agree";
  return "entry " + entry_name(decode_index(x.coeffs().shape(), i)) + ": lhs=" +
         x.coeffs().entries()[i].str() + " rhs=" + y.coeffs().entries()[i].str();
}

std::string describe_diff(const TreeCochain& x, const TreeCochain& y) {
  if (x.degree() != y.degree())
    return "degree mismatch " + std::to_string(x.degree()) + " vs " + std::to_string(y.degree());
  const auto trees_n = trees::enumerate_trees(x.degree());
  for (size_t t = 0; t < x.tensors().size(); ++t) {
    const size_t i = first_diff(x.tensors()[t], y.tensors()[t]);
    if (i == static_cast<size_t>(-1)) continue;
    return "tree " + trees_n[t].label() + " entry " +
           entry_name(decode_index(x.tensors()[t].shape(), i)) + ": lhs=" +
           x.tensors()[t].entries()[i].str() + " rhs=" + y.tensors()[t].entries()[i].str();
  }
  return "tensors agree";
}

std::string describe_nonzero(const DenseTensor& t) {
  const auto& e = t.entries();
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i].is_zero())
      return "entry " + entry_name(decode_index(t.shape(), i)) + " = " + e[i].str();
  }
  return "all entries zero";
}

std::string describe_nonzero(const Cochain& x) { return describe_nonzero(x.coeffs()); }

std::string describe_nonzero(const TreeCochain& x) {
  const auto trees_n = trees::enumerate_trees(x.degree());
  for (size_t t = 0; t < x.tensors().size(); ++t) {
    if (x.tensors()[t].is_zero()) continue;
    return "tree " + trees_n[t].label() + " " + describe_nonzero(x.tensors()[t]);
  }
  return "all entries zero";
}

template <class E>
bool expect_equal(const E& lhs, const E& rhs, const std::string& what, std::string* witness) {
  if (lhs == rhs) return true;
  *witness = what + ": " + describe_diff(lhs, rhs);
  return false;
}

template <class E>
bool expect_zero(const E& value, const std::string& what, std::string* witness) {
  if (value.is_zero()) return true;
  *witness = what + ": " + describe_nonzero(value);
  return false;
}

// ---------------------------------------------------------------------------
// per-complex context: uniform access to random elements and distinguished
// cochains, so each trial body runs unchanged on both cochain families
// ---------------------------------------------------------------------------

struct HomCtx {
  using E = Cochain;
  AlgebraPtr alg;
  Session::Caches* caches;
  int unit_cap;  // largest degree drawn for a single random argument
  int budget;    // largest composite degree any trial may reach

  const std::string& name() const { return alg->name; }

  E random(int n, Rng& rng, long bound) const {
    DenseTensor t(map_shape(alg->dim, n));
    t.entries() = random_combination(caches->basis(alg, n), t.entries().size(), rng, bound);
    return Cochain::unchecked(alg, std::move(t));
  }

  E mult() const { return Cochain::multiplication(alg); }
  E ident() const { return Cochain::identity(alg); }
  E zero(int n) const { return Cochain::zero(alg, n); }
};

struct DlgCtx {
  using E = TreeCochain;
  DialgebraPtr dlg;
  Session::Caches* caches;
  int unit_cap;
  int budget;

  const std::string& name() const { return dlg->name; }

  E random(int n, Rng& rng, long bound) const {
    const DialgComplex cx{dlg};
    const Vec zero_vec = cx.to_vec(TreeCochain::zero(dlg, n));
    return cx.from_vec(n, random_combination(caches->basis(dlg, n), zero_vec.size(), rng, bound));
  }

  E mult() const { return pi_multiplication(dlg); }
  E ident() const { return TreeCochain::identity(dlg); }
  E zero(int n) const { return TreeCochain::zero(dlg, n); }
};

Cochain zero_like(const Cochain& f, int n) { return Cochain::zero(f.algebra(), n); }
TreeCochain zero_like(const TreeCochain& f, int n) { return TreeCochain::zero(f.dialgebra(), n); }

// Shifted degree |f| = deg f - 1, the grading all sign exponents use.
template <class E>
long sdeg(const E& f) {
  return f.degree() - 1;
}

// Brace with the out-of-range convention used inside identity expansions:
// more arguments than inputs contributes the zero cochain of matching degree.
template <class E>
E brace_or_zero(const E& f, const std::vector<E>& gs) {
  if (static_cast<int>(gs.size()) > f.degree()) {
    int deg = f.degree();
    for (const E& g : gs) deg += g.degree() - 1;
    return zero_like(f, deg);
  }
  if (gs.empty()) return f;
  return brace(f, std::span<const E>(gs.data(), gs.size()));
}

// ---------------------------------------------------------------------------
// degree plans: resample until the composite degree fits the context budget
// ---------------------------------------------------------------------------

struct DegreePlan {
  int f = 1;
  std::vector<int> gs;
  std::vector<int> hs;
};

DegreePlan draw_plan(Rng& rng, int f_lo, int f_hi, int gcount, int hcount, int budget) {
  DegreePlan plan;
  for (int attempt = 0; attempt < 32; ++attempt) {
    plan.f = static_cast<int>(rng.int_in(f_lo, f_hi));
    plan.gs.clear();
    plan.hs.clear();
    int total = plan.f;
    for (int i = 0; i < gcount; ++i) {
      plan.gs.push_back(static_cast<int>(rng.int_in(1, 2)));
      total += plan.gs.back() - 1;
    }
    for (int i = 0; i < hcount; ++i) {
      plan.hs.push_back(static_cast<int>(rng.int_in(1, 2)));
      total += plan.hs.back() - 1;
    }
    if (total <= budget) return plan;
  }
  plan.f = f_lo;
  plan.gs.assign(static_cast<size_t>(gcount), 1);
  plan.hs.assign(static_cast<size_t>(hcount), 1);
  return plan;
}

// ---------------------------------------------------------------------------
// per-trial bodies (templated over the context, hence over the complex)
// ---------------------------------------------------------------------------

// (f o_i g) o_{i+j-1} h = f o_i (g o_j h)
template <class Cx>
bool trial_assoc_nested(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  int m = 1, n = 1, p = 1;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const int am = static_cast<int>(rng.int_in(1, cx.unit_cap));
    const int an = static_cast<int>(rng.int_in(1, cx.unit_cap));
    const int ap = static_cast<int>(rng.int_in(1, cx.unit_cap));
    if (am + an + ap - 2 <= cx.budget) {
      m = am;
      n = an;
      p = ap;
      break;
    }
  }
  const E f = cx.random(m, rng, bound);
  const E g = cx.random(n, rng, bound);
  const E h = cx.random(p, rng, bound);
  const int i = static_cast<int>(rng.int_in(1, m));
  const int j = static_cast<int>(rng.int_in(1, n));
  const E lhs = partial_composition(partial_composition(f, g, i), h, i + j - 1);
  const E rhs = partial_composition(f, partial_composition(g, h, j), i);
  std::ostringstream what;
  what << "degrees (" << m << "," << n << "," << p << ") slots i=" << i << " j=" << j;
  return expect_equal(lhs, rhs, what.str(), witness);
}

// (f o_i g) o_{j+n-1} h = (f o_j h) o_i g for disjoint slots i < j
template <class Cx>
bool trial_assoc_disjoint(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  int m = 2, n = 1, p = 1;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const int am = static_cast<int>(rng.int_in(2, std::max(2, cx.unit_cap)));
    const int an = static_cast<int>(rng.int_in(1, cx.unit_cap));
    const int ap = static_cast<int>(rng.int_in(1, cx.unit_cap));
    if (am + an + ap - 2 <= cx.budget) {
      m = am;
      n = an;
      p = ap;
      break;
    }
  }
  const E f = cx.random(m, rng, bound);
  const E g = cx.random(n, rng, bound);
  const E h = cx.random(p, rng, bound);
  const int i = static_cast<int>(rng.int_in(1, m - 1));
  const int j = static_cast<int>(rng.int_in(i + 1, m));
  const E lhs = partial_composition(partial_composition(f, g, i), h, j + n - 1);
  const E rhs = partial_composition(partial_composition(f, h, j), g, i);
  std::ostringstream what;
  what << "degrees (" << m << "," << n << "," << p << ") slots i=" << i << " j=" << j;
  return expect_equal(lhs, rhs, what.str(), witness);
}

// The identity cochain is a two-sided unit for o_i and for full composition.
template <class Cx>
bool trial_operad_identity(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  const int m = static_cast<int>(rng.int_in(1, cx.unit_cap));
  const E f = cx.random(m, rng, bound);
  const E id = cx.ident();
  for (int i = 1; i <= m; ++i) {
    if (!expect_equal(partial_composition(f, id, i), f, "f o_" + std::to_string(i) + " id",
                      witness))
      return false;
  }
  if (!expect_equal(partial_composition(id, f, 1), f, "id o_1 f", witness)) return false;
  const std::vector<E> ids(static_cast<size_t>(m), id);
  if (!expect_equal(gamma_alpha(f, std::span<const E>(ids.data(), ids.size())), f,
                    "gamma(f; id,...,id)", witness))
    return false;
  const std::vector<E> fs(1, f);
  if (!expect_equal(gamma_alpha(id, std::span<const E>(fs.data(), fs.size())), f, "gamma(id; f)",
                    witness))
    return false;
  return true;
}

// {{f}{g_1..g_m}}{h_1..h_n} expanded over all interleavings.
template <class Cx>
bool trial_pre_jacobi(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  const int m = static_cast<int>(rng.int_in(1, 2));
  const int n = static_cast<int>(rng.int_in(1, 2));
  const DegreePlan plan = draw_plan(rng, std::min(m, cx.unit_cap), cx.unit_cap, m, n, cx.budget);
  const E f = cx.random(plan.f, rng, bound);
  std::vector<E> gs, hs;
  for (const int dg : plan.gs) gs.push_back(cx.random(dg, rng, bound));
  for (const int dh : plan.hs) hs.push_back(cx.random(dh, rng, bound));

  const E lhs = brace_or_zero(brace_or_zero(f, gs), hs);
  E rhs = zero_like(f, lhs.degree());

  std::vector<std::pair<int, int>> seg(static_cast<size_t>(m));
  const std::function<void(int, int)> enumerate = [&](int p, int start) {
    if (p == m) {
      std::vector<E> args;
      long eps = 0;
      int prev = 0;
      for (int q = 0; q < m; ++q) {
        const auto [iq, jq] = seg[static_cast<size_t>(q)];
        for (int r = prev; r < iq; ++r) args.push_back(hs[static_cast<size_t>(r)]);
        const std::vector<E> inner(hs.begin() + iq, hs.begin() + jq);
        args.push_back(brace_or_zero(gs[static_cast<size_t>(q)], inner));
        long hsum = 0;
        for (int r = 0; r < iq; ++r) hsum += sdeg(hs[static_cast<size_t>(r)]);
        eps += sdeg(gs[static_cast<size_t>(q)]) * hsum;
        prev = jq;
      }
      for (int r = prev; r < n; ++r) args.push_back(hs[static_cast<size_t>(r)]);
      E term = brace_or_zero(f, args);
      if (eps % 2 != 0) term.negate();
      rhs += term;
      return;
    }
    for (int ip = start; ip <= n; ++ip) {
      for (int jp = ip; jp <= n; ++jp) {
        seg[static_cast<size_t>(p)] = {ip, jp};
        enumerate(p + 1, jp);
      }
    }
  };
  enumerate(0, 0);
  return expect_equal(lhs, rhs, "m=" + std::to_string(m) + " n=" + std::to_string(n), witness);
}

// {f.g}{h_1..h_n} distributes over all front/back splits of the arguments.
template <class Cx>
bool trial_distributivity(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  const int n = static_cast<int>(rng.int_in(1, 2));
  int df = 1, dg = 1;
  std::vector<int> dhs(static_cast<size_t>(n), 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const int af = static_cast<int>(rng.int_in(1, cx.unit_cap));
    const int ag = static_cast<int>(rng.int_in(1, cx.unit_cap));
    std::vector<int> ahs;
    int total = af + ag;
    for (int i = 0; i < n; ++i) {
      ahs.push_back(static_cast<int>(rng.int_in(1, 2)));
      total += ahs.back() - 1;
    }
    if (total <= cx.budget) {
      df = af;
      dg = ag;
      dhs = ahs;
      break;
    }
  }
  const E f = cx.random(df, rng, bound);
  const E g = cx.random(dg, rng, bound);
  std::vector<E> hs;
  for (const int dh : dhs) hs.push_back(cx.random(dh, rng, bound));

  const E lhs = brace_or_zero(dot(f, g), hs);
  E rhs = zero_like(f, lhs.degree());
  for (int k = 0; k <= n; ++k) {
    const std::vector<E> front(hs.begin(), hs.begin() + k);
    const std::vector<E> back(hs.begin() + k, hs.end());
    E term = dot(brace_or_zero(f, front), brace_or_zero(g, back));
    // Expanding {f.g}{h...} through the pre-Jacobi identity leaves the factor
    // (-1)^{(|g|+1) sum |h_p|} on the split after h_k: the Koszul move of g past
    // h_1..h_k plus the sign absorbed by rewriting the head brace as a product.
    long eps = 0;
    for (int p = 0; p < k; ++p) eps += sdeg(hs[static_cast<size_t>(p)]);
    eps *= sdeg(g) + 1;
    if (eps % 2 != 0) term.negate();
    rhs += term;
  }
  return expect_equal(lhs, rhs, "n=" + std::to_string(n), witness);
}

// The brace deviation from being a chain map equals the product terms.
template <class Cx>
bool trial_higher_homotopy(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  const int k = static_cast<int>(rng.int_in(1, 2));  // argument count n+1
  // Composite degree grows by one under d, so keep one unit of headroom.
  const DegreePlan plan =
      draw_plan(rng, std::min(k, cx.unit_cap), cx.unit_cap, k, 0, cx.budget - 1);
  const E f = cx.random(plan.f, rng, bound);
  std::vector<E> gs;
  for (const int dg : plan.gs) gs.push_back(cx.random(dg, rng, bound));

  E lhs = differential_d(brace_or_zero(f, gs));
  lhs -= brace_or_zero(differential_d(f), gs);
  const long pre = sdeg(f);
  {
    long acc = 0;
    for (int i = 0; i < k; ++i) {
      std::vector<E> modified = gs;
      modified[static_cast<size_t>(i)] = differential_d(gs[static_cast<size_t>(i)]);
      E term = brace_or_zero(f, modified);
      if ((pre + acc) % 2 != 0) term.negate();
      lhs -= term;
      acc += sdeg(gs[static_cast<size_t>(i)]);
    }
  }

  // The product terms carry the signs forced by the pre-Jacobi expansion of
  // each side: every term of the form {m}{x,y} is rewritten as a dot product
  // at the cost of (-1)^{|x|+1}, which shifts the displayed exponents.
  const std::vector<E> tail(gs.begin() + 1, gs.end());
  E rhs = dot(gs.front(), brace_or_zero(f, tail));
  if ((sdeg(gs.front()) * (pre + 1)) % 2 != 0) rhs.negate();
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<E> merged(gs.begin(), gs.begin() + i);
    merged.push_back(dot(gs[static_cast<size_t>(i)], gs[static_cast<size_t>(i) + 1]));
    merged.insert(merged.end(), gs.begin() + i + 2, gs.end());
    E term = brace_or_zero(f, merged);
    long acc = 0;
    for (int l = 0; l <= i; ++l) acc += sdeg(gs[static_cast<size_t>(l)]);
    if ((pre + acc) % 2 == 0) term.negate();
    rhs += term;
  }
  const std::vector<E> head(gs.begin(), gs.end() - 1);
  E last = dot(brace_or_zero(f, head), gs.back());
  long all_but_last = 0;
  for (int l = 0; l + 1 < k; ++l) all_but_last += sdeg(gs[static_cast<size_t>(l)]);
  if ((pre + all_but_last) % 2 != 0) last.negate();
  rhs += last;
  return expect_equal(lhs, rhs, "arguments=" + std::to_string(k), witness);
}

// [f,g] = -(-1)^{|f||g|}[g,f] and [f,f] = 0 for even |f|.
template <class Cx>
bool trial_bracket_antisym(const Cx& cx, Rng& rng, long bound, std::string* witness) {
  using E = typename Cx::E;
  int m = 1, n = 1;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const int am = static_cast<int>(rng.int_in(1, cx.unit_cap));
    const int an = static_cast<int>(rng.int_in(1, cx.unit_cap));
    if (am + an - 1 <= cx.budget) {
      m = am;
      n = an;
      break;
    }
  }
  const E f = cx.random(m, rng, bound);
  const E g = cx.random(n, rng, bound);
  const E lhs = bracket(f, g);
  E rhs = bracket(g, f);
  if ((sdeg(f) * sdeg(g)) % 2 == 0) rhs.negate();
  if (!expect_equal(lhs, rhs, "degrees (" + std::to_string(m) + "," + std::to_string(n) + ")",
                    witness))
    return false;
  // Odd degree means even shifted degree, where self-bracketing must vanish.
  const int modd = (m % 2 == 1) ? m : (m + 1 <= cx.unit_cap ? m + 1 : 1);
  const E h = cx.random(modd, rng, bound);
  return expect_zero(bracket(h, h), "[f,f] at degree " + std::to_string(modd), witness);
}

// ---------------------------------------------------------------------------
// suite plumbing
// ---------------------------------------------------------------------------

struct RunArgs {
  const TrialConfig& cfg;
  const FixtureRegistry& reg;
  Session::Caches& caches;
};

HomCtx make_ctx(const AlgebraPtr& a, Session::Caches& caches) {
  // Larger fixtures get a tighter composite-degree budget to bound tensor sizes.
  return HomCtx{a, &caches, 3, a->dim >= 3 ? 5 : 7};
}

DlgCtx make_ctx(const DialgebraPtr& d, Session::Caches& caches) { return DlgCtx{d, &caches, 3, 5}; }

template <class Cx, class Fn>
bool drive(const std::string& identity, const Cx& cx, const RunArgs& ra, int trials, Fn&& body,
           std::string* witness) {
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(ra.cfg.seed, identity + "/" + cx.name(), static_cast<uint64_t>(t)));
    std::string local;
    if (!body(cx, rng, ra.cfg.coefficient_bound, &local)) {
      *witness = "fixture=" + cx.name() + " trial=" + std::to_string(t) + " " + local;
      return false;
    }
  }
  return true;
}

// Run one trial body over every fixture of both families.
template <class Fn>
Verdict run_family(const std::string& name, const RunArgs& ra, int min_trials, Fn body) {
  const int trials = std::max(ra.cfg.trials, min_trials);
  std::string witness;
  int fixture_count = 0;
  for (const AlgebraPtr& a : ra.reg.algebras) {
    if (!drive(name, make_ctx(a, ra.caches), ra, trials, body, &witness))
      return {name, Outcome::fail, witness};
    ++fixture_count;
  }
  for (const DialgebraPtr& d : ra.reg.dialgebras) {
    if (!drive(name, make_ctx(d, ra.caches), ra, trials, body, &witness))
      return {name, Outcome::fail, witness};
    ++fixture_count;
  }
  if (fixture_count == 0) return {name, Outcome::skip, "no applicable fixture"};
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(fixture_count) + " trials=" + std::to_string(trials)};
}

// ---------------------------------------------------------------------------
// exhaustive checks (not per-trial)
// ---------------------------------------------------------------------------

template <class Tower>
bool delta_squared_on(Tower& tower, int cap, const std::string& fixture, std::string* witness) {
  for (int n = 1; n <= cap; ++n) {
    const auto& image = tower.delta_full(n);
    for (size_t j = 0; j < image.size(); ++j) {
      const auto db = tower.complex().from_vec(n + 1, image[j]);
      const auto ddb = tower.complex().delta(db);
      if (!ddb.is_zero()) {
        *witness = "fixture=" + fixture + " degree=" + std::to_string(n) + " basis #" +
                   std::to_string(j + 1) + ": " + describe_nonzero(ddb);
        return false;
      }
    }
  }
  for (int n = 1; n + 1 <= cap; ++n) {
    const Matrix prod = tower.delta_matrix(n + 1) * tower.delta_matrix(n);
    for (int r = 0; r < prod.rows(); ++r) {
      for (int c = 0; c < prod.cols(); ++c) {
        if (!prod.at(r, c).is_zero()) {
          *witness = "fixture=" + fixture + " matrix product delta^" + std::to_string(n + 1) +
                     " * delta^" + std::to_string(n) + " entry (" + std::to_string(r + 1) + "," +
                     std::to_string(c + 1) + ") = " + prod.at(r, c).str();
          return false;
        }
      }
    }
  }
  return true;
}

Verdict run_delta_squared(const RunArgs& ra) {
  const std::string name = "delta-squared";
  std::string witness;
  int fixture_count = 0;
  const int hom_cap = std::min(ra.cfg.max_degree, 4);
  for (const AlgebraPtr& a : ra.reg.algebras) {
    if (!delta_squared_on(ra.caches.tower(a), hom_cap, a->name, &witness))
      return {name, Outcome::fail, witness};
    ++fixture_count;
  }
  const int dlg_cap = std::min(ra.cfg.max_degree, 3);
  for (const DialgebraPtr& d : ra.reg.dialgebras) {
    if (!delta_squared_on(ra.caches.tower(d), dlg_cap, d->name, &witness))
      return {name, Outcome::fail, witness};
    ++fixture_count;
  }
  if (fixture_count == 0) return {name, Outcome::skip, "no applicable fixture"};
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(fixture_count) + " basis-exhaustive degrees<=" +
              std::to_string(hom_cap) + " (hom) <=" + std::to_string(dlg_cap) + " (trees)"};
}

Verdict run_mu_square(const RunArgs& ra) {
  const std::string name = "mu-square";
  std::string witness;
  for (const AlgebraPtr& a : ra.reg.algebras) {
    const Cochain mu = Cochain::multiplication(a);
    const Cochain id = Cochain::identity(a);
    const Cochain square = circle(mu, mu);
    const std::vector<Cochain> left = {mu, id};
    const std::vector<Cochain> right = {id, mu};
    Cochain expansion = gamma_alpha(mu, std::span<const Cochain>(left.data(), left.size()));
    expansion -= gamma_alpha(mu, std::span<const Cochain>(right.data(), right.size()));
    if (!expect_equal(square, expansion, "fixture=" + a->name + " {mu}{mu} vs gamma expansion",
                      &witness))
      return {name, Outcome::fail, witness};
    if (!expect_zero(square, "fixture=" + a->name + " {mu}{mu}", &witness))
      return {name, Outcome::fail, witness};
    if (!validate(*a).empty())
      return {name, Outcome::fail, "fixture=" + a->name + " failed its own validation"};
  }
  std::string note = "no negative control";
  if (ra.reg.perturbed_algebra) {
    const AlgebraPtr& p = ra.reg.perturbed_algebra;
    const Cochain square = circle(Cochain::multiplication(p), Cochain::multiplication(p));
    if (square.is_zero())
      return {name, Outcome::fail, "negative control " + p->name + ": {mu}{mu} vanished"};
    if (validate(*p).empty())
      return {name, Outcome::fail, "negative control " + p->name + ": validation found nothing"};
    note = "negative control " + p->name + ": {mu}{mu} " + describe_nonzero(square);
  }
  if (ra.reg.algebras.empty()) return {name, Outcome::skip, "no applicable fixture"};
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(ra.reg.algebras.size()) + " zero; " + note};
}

// Rows indexed by the canonical 3-vertex trees, as both pipi computations
// return them.
std::string rows_nonzero_witness(const std::vector<DenseTensor>& rows) {
  const auto trees3 = trees::enumerate_trees(3);
  for (size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].is_zero()) continue;
    return "tree " + trees3[t].label() + " " + describe_nonzero(rows[t]);
  }
  return "all rows zero";
}

bool rows_all_zero(const std::vector<DenseTensor>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const DenseTensor& t) { return t.is_zero(); });
}

bool rows_equal(const std::vector<DenseTensor>& lhs, const std::vector<DenseTensor>& rhs,
                const std::string& what, std::string* witness) {
  const auto trees3 = trees::enumerate_trees(3);
  for (size_t t = 0; t < lhs.size(); ++t) {
    const size_t i = first_diff(lhs[t], rhs[t]);
    if (i == static_cast<size_t>(-1)) continue;
    *witness = what + ": tree " + trees3[t].label() + " entry " +
               entry_name(decode_index(lhs[t].shape(), i)) + ": lhs=" + lhs[t].entries()[i].str() +
               " rhs=" + rhs[t].entries()[i].str();
    return false;
  }
  return true;
}

Verdict run_pi_square(const RunArgs& ra) {
  const std::string name = "pi-square";
  std::string witness;
  for (const DialgebraPtr& d : ra.reg.dialgebras) {
    const TreeCochain pi = pi_multiplication(d);
    if (!expect_zero(circle(pi, pi), "fixture=" + d->name + " {pi}{pi}", &witness))
      return {name, Outcome::fail, witness};
  }
  std::string note = "no negative control";
  if (ra.reg.perturbed_dialgebra) {
    const DialgebraPtr& p = ra.reg.perturbed_dialgebra;
    const std::vector<DenseTensor> square = pipi_operadic(p);
    if (rows_all_zero(square))
      return {name, Outcome::fail, "negative control " + p->name + ": {pi}{pi} vanished"};
    if (validate(*p).empty())
      return {name, Outcome::fail, "negative control " + p->name + ": validation found nothing"};
    note = "negative control " + p->name + ": {pi}{pi} " + rows_nonzero_witness(square);
  }
  if (ra.reg.dialgebras.empty()) return {name, Outcome::skip, "no applicable fixture"};
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(ra.reg.dialgebras.size()) + " zero; " + note};
}

Verdict run_pipi_table(const RunArgs& ra) {
  const std::string name = "pipi-table";
  std::string witness;
  for (const DialgebraPtr& d : ra.reg.dialgebras) {
    if (!rows_equal(pipi_case_table(*d), pipi_operadic(d), "fixture=" + d->name, &witness))
      return {name, Outcome::fail, witness};
  }
  // The case table is an identity of expansions, so it must also hold for
  // arbitrary products that need not satisfy any axiom.
  const int trials = std::max(ra.cfg.trials, 25);
  for (int t = 0; t < trials; ++t) {
    Rng rng(sub_seed(ra.cfg.seed, "pipi-table/random-products", static_cast<uint64_t>(t)));
    const int dim = (t % 2 == 0) ? 2 : 3;
    DenseTensor left(map_shape(dim, 2));
    DenseTensor right(map_shape(dim, 2));
    for (Rational& r : left.entries()) r = rng.rational(ra.cfg.coefficient_bound);
    for (Rational& r : right.entries()) r = rng.rational(ra.cfg.coefficient_bound);
    const DialgebraPtr d =
        make_dialgebra(dim, left, right, Matrix::identity(dim), "random-products");
    if (!rows_equal(pipi_case_table(*d), pipi_operadic(d),
                    "random products trial=" + std::to_string(t), &witness))
      return {name, Outcome::fail, witness};
  }
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(ra.reg.dialgebras.size()) +
              " rows=5; random-product trials=" + std::to_string(trials)};
}

// Entrywise comparison of two vectors up to one global sign.
// Returns +1 / -1 when it matches with that sign, 0 when both are zero,
// and 2 when no sign works.
int vector_sign(const Vec& lhs, const Vec& rhs) {
  bool plus = true, minus = true, zero = true;
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (!lhs[i].is_zero() || !rhs[i].is_zero()) zero = false;
    if (!(lhs[i] == rhs[i])) plus = false;
    if (!(lhs[i] == -rhs[i])) minus = false;
    if (!plus && !minus) return 2;
  }
  if (zero) return 0;
  if (plus) return 1;
  return -1;
}

template <class Tower>
bool scan_signs(Tower& tower, int cap, const std::string& fixture, std::vector<int>* signs,
                std::string* witness) {
  for (int n = 1; n <= cap; ++n) {
    const auto& image = tower.delta_full(n);
    const auto& basis = tower.slice(n).basis;
    for (size_t j = 0; j < basis.size(); ++j) {
      const Vec lhs = tower.complex().to_vec(differential_d(basis[j]));
      const int s = vector_sign(lhs, image[j]);
      if (s == 0) continue;
      if (s == 2) {
        *witness = "fixture=" + fixture + " degree=" + std::to_string(n) + " basis #" +
                   std::to_string(j + 1) + ": d is not +/- delta on this element";
        return false;
      }
      int& slot = (*signs)[static_cast<size_t>(n)];
      if (slot == 0) slot = s;
      if (slot != s) {
        *witness = "fixture=" + fixture + " degree=" + std::to_string(n) +
                   ": inconsistent sign between d and delta";
        return false;
      }
    }
  }
  return true;
}

std::string render_signs(const std::vector<int>& signs, int cap) {
  std::string s = "(";
  for (int n = 1; n <= cap; ++n) {
    if (n > 1) s += ",";
    const int v = signs[static_cast<size_t>(n)];
    s += v > 0 ? "+1" : (v < 0 ? "-1" : "0");
  }
  s += ")";
  return s;
}

Verdict run_sign_comparison(const RunArgs& ra) {
  const std::string name = "d-vs-delta-sign";
  std::string witness;
  const int hom_cap = std::min(ra.cfg.max_degree, 4);
  const int dlg_cap = std::min(ra.cfg.max_degree, 3);
  std::vector<int> hom_signs(static_cast<size_t>(hom_cap) + 1, 0);
  std::vector<int> dlg_signs(static_cast<size_t>(dlg_cap) + 1, 0);
  for (const AlgebraPtr& a : ra.reg.algebras) {
    if (!scan_signs(ra.caches.tower(a), hom_cap, a->name, &hom_signs, &witness))
      return {name, Outcome::fail, witness};
  }
  for (const DialgebraPtr& d : ra.reg.dialgebras) {
    if (!scan_signs(ra.caches.tower(d), dlg_cap, d->name, &dlg_signs, &witness))
      return {name, Outcome::fail, witness};
  }
  if (ra.reg.algebras.empty() && ra.reg.dialgebras.empty())
    return {name, Outcome::skip, "no applicable fixture"};
  std::string detail;
  if (!ra.reg.algebras.empty()) detail += "hom s=" + render_signs(hom_signs, hom_cap);
  if (!ra.reg.dialgebras.empty()) {
    if (!detail.empty()) detail += " ";
    detail += "trees s=" + render_signs(dlg_signs, dlg_cap);
  }
  return {name, Outcome::pass, detail};
}

// Panel of small fixtures whose degree 2 and 3 cohomology feeds the
// class-level checks.  Larger fixtures make is_coboundary too costly.
std::vector<AlgebraPtr> cohomology_panel(const RunArgs& ra) {
  std::vector<AlgebraPtr> panel;
  for (const AlgebraPtr& a : ra.reg.algebras) {
    if (a->dim <= 2) panel.push_back(a);
  }
  return panel;
}

// Tree-indexed cochain spaces grow by a Catalan factor per degree, so the
// class-level checks on dialgebras stay at degree-2 classes.
std::vector<DialgebraPtr> dialgebra_cohomology_panel(const RunArgs& ra) {
  std::vector<DialgebraPtr> panel;
  for (const DialgebraPtr& d : ra.reg.dialgebras) {
    if (d->dim <= 2) panel.push_back(d);
  }
  return panel;
}

Cochain random_element(const AlgebraPtr& a, int degree, Rng& rng, long bound) {
  return random_cochain(a, degree, rng, bound);
}

TreeCochain random_element(const DialgebraPtr& d, int degree, Rng& rng, long bound) {
  return random_tree_cochain(d, degree, rng, bound);
}

template <class Tower>
std::vector<typename Tower::Class> classes_in_degrees(Tower& tower,
                                                      const std::vector<int>& degrees) {
  std::vector<typename Tower::Class> classes;
  for (const int n : degrees) {
    for (const auto& c : tower.cohomology_basis(n)) classes.push_back(c);
  }
  return classes;
}

template <class Tower, class Owner>
bool leibniz_on_tower(Tower& tower, const Owner& owner, const std::string& fixture,
                      const std::vector<int>& degrees, const TrialConfig& cfg, int* triples,
                      int* perturbations, std::string* witness) {
  const auto classes = classes_in_degrees(tower, degrees);
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      for (const auto& z : classes) {
        const auto& fx = x.representative;
        const auto& fy = y.representative;
        const auto& fz = z.representative;
        auto defect = bracket(fx, dot(fy, fz));
        defect -= dot(bracket(fx, fy), fz);
        auto third = dot(fy, bracket(fx, fz));
        if ((sdeg(fx) * (sdeg(fy) + 1)) % 2 != 0) third.negate();
        defect -= third;
        if (!defect.is_zero() && !tower.is_coboundary(defect)) {
          *witness = "fixture=" + fixture + " degrees (" + std::to_string(x.degree) + "," +
                     std::to_string(y.degree) + "," + std::to_string(z.degree) +
                     "): Leibniz defect is not a coboundary";
          return false;
        }
        ++*triples;
      }
    }
  }
  // Representative independence: shifting one argument by a coboundary
  // must not move the induced bracket.
  if (!classes.empty()) {
    for (int t = 0; t < 2; ++t) {
      Rng rng(sub_seed(cfg.seed, "leibniz-on-cohomology/" + fixture, static_cast<uint64_t>(t)));
      const auto& x = classes[static_cast<size_t>(t) % classes.size()];
      const auto& y = classes[(static_cast<size_t>(t) + 1) % classes.size()];
      const auto bump =
          hochschild_delta(random_element(owner, x.degree - 1, rng, cfg.coefficient_bound));
      auto shifted = x.representative;
      shifted += bump;
      const auto xs = tower.make_class(shifted);
      if (!tower.same_class(tower.induced_bracket(xs, y), tower.induced_bracket(x, y))) {
        *witness = "fixture=" + fixture + " perturbation trial=" + std::to_string(t) +
                   ": induced bracket moved between representatives";
        return false;
      }
      ++*perturbations;
    }
  }
  return true;
}

template <class Tower, class Owner>
bool graded_comm_on_tower(Tower& tower, const Owner& owner, const std::string& fixture,
                          const std::vector<int>& degrees, const TrialConfig& cfg, int* pairs,
                          int* triples, int* perturbations, std::string* witness) {
  const auto classes = classes_in_degrees(tower, degrees);
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      // The induced product commutes up to (-1)^{mn} in the plain cochain
      // degrees m, n: the single-argument homotopy identity exhibits
      // x.y - (-1)^{mn} y.x as the boundary of (-1)^{|x|} {x}{y}.
      auto defect = dot(x.representative, y.representative);
      auto swapped = dot(y.representative, x.representative);
      if ((x.degree * y.degree) % 2 != 0) swapped.negate();
      defect -= swapped;
      if (!defect.is_zero() && !tower.is_coboundary(defect)) {
        *witness = "fixture=" + fixture + " degrees (" + std::to_string(x.degree) + "," +
                   std::to_string(y.degree) + "): commutativity defect is not a coboundary";
        return false;
      }
      ++*pairs;
    }
  }
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      for (const auto& z : classes) {
        auto defect = dot(dot(x.representative, y.representative), z.representative);
        defect -= dot(x.representative, dot(y.representative, z.representative));
        if (!defect.is_zero() && !tower.is_coboundary(defect)) {
          *witness = "fixture=" + fixture + " degrees (" + std::to_string(x.degree) + "," +
                     std::to_string(y.degree) + "," + std::to_string(z.degree) +
                     "): associativity defect is not a coboundary";
          return false;
        }
        ++*triples;
      }
    }
  }
  if (!classes.empty()) {
    for (int t = 0; t < 2; ++t) {
      Rng rng(
          sub_seed(cfg.seed, "graded-comm-on-cohomology/" + fixture, static_cast<uint64_t>(t)));
      const auto& x = classes[static_cast<size_t>(t) % classes.size()];
      const auto& y = classes[(static_cast<size_t>(t) + 1) % classes.size()];
      const auto bump =
          hochschild_delta(random_element(owner, x.degree - 1, rng, cfg.coefficient_bound));
      auto shifted = x.representative;
      shifted += bump;
      const auto xs = tower.make_class(shifted);
      if (!tower.same_class(tower.induced_cup(xs, y), tower.induced_cup(x, y))) {
        *witness = "fixture=" + fixture + " perturbation trial=" + std::to_string(t) +
                   ": induced product moved between representatives";
        return false;
      }
      ++*perturbations;
    }
  }
  return true;
}

Verdict run_leibniz(const RunArgs& ra) {
  const std::string name = "leibniz-on-cohomology";
  std::string witness;
  const std::vector<AlgebraPtr> panel = cohomology_panel(ra);
  const std::vector<DialgebraPtr> dlg_panel = dialgebra_cohomology_panel(ra);
  if (panel.empty() && dlg_panel.empty())
    return {name, Outcome::skip, "no fixture of dimension <= 2"};
  int triples = 0, perturbations = 0;
  for (const AlgebraPtr& a : panel) {
    if (!leibniz_on_tower(ra.caches.tower(a), a, a->name, {2, 3}, ra.cfg, &triples,
                          &perturbations, &witness))
      return {name, Outcome::fail, witness};
  }
  for (const DialgebraPtr& d : dlg_panel) {
    if (!leibniz_on_tower(ra.caches.tower(d), d, d->name, {2}, ra.cfg, &triples, &perturbations,
                          &witness))
      return {name, Outcome::fail, witness};
  }
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(panel.size() + dlg_panel.size()) +
              " triples=" + std::to_string(triples) +
              " perturbations=" + std::to_string(perturbations)};
}

Verdict run_graded_comm(const RunArgs& ra) {
  const std::string name = "graded-comm-on-cohomology";
  std::string witness;
  const std::vector<AlgebraPtr> panel = cohomology_panel(ra);
  const std::vector<DialgebraPtr> dlg_panel = dialgebra_cohomology_panel(ra);
  if (panel.empty() && dlg_panel.empty())
    return {name, Outcome::skip, "no fixture of dimension <= 2"};
  int pairs = 0, triples = 0, perturbations = 0;
  for (const AlgebraPtr& a : panel) {
    if (!graded_comm_on_tower(ra.caches.tower(a), a, a->name, {2, 3}, ra.cfg, &pairs, &triples,
                              &perturbations, &witness))
      return {name, Outcome::fail, witness};
  }
  for (const DialgebraPtr& d : dlg_panel) {
    if (!graded_comm_on_tower(ra.caches.tower(d), d, d->name, {2}, ra.cfg, &pairs, &triples,
                              &perturbations, &witness))
      return {name, Outcome::fail, witness};
  }
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(panel.size() + dlg_panel.size()) +
              " pairs=" + std::to_string(pairs) + " triples=" + std::to_string(triples) +
              " perturbations=" + std::to_string(perturbations)};
}

Verdict run_embed_chain_map(const RunArgs& ra) {
  const std::string name = "embed-chain-map";
  std::string witness;
  std::vector<AlgebraPtr> panel;
  for (const AlgebraPtr& a : ra.reg.algebras) {
    if (a->dim <= 2) panel.push_back(a);
  }
  if (panel.empty()) return {name, Outcome::skip, "no fixture of dimension <= 2"};
  const int trials = std::max(ra.cfg.trials, 25);
  for (const AlgebraPtr& a : panel) {
    const DialgebraPtr diag = diagonal_dialgebra(a);
    for (int t = 0; t < trials; ++t) {
      Rng rng(sub_seed(ra.cfg.seed, "embed-chain-map/" + a->name, static_cast<uint64_t>(t)));
      const int m = static_cast<int>(rng.int_in(1, 3));
      const int n = static_cast<int>(rng.int_in(1, 4 - m));
      const Cochain f = random_cochain(a, m, rng, ra.cfg.coefficient_bound);
      const Cochain g = random_cochain(a, n, rng, ra.cfg.coefficient_bound);
      const TreeCochain ef = embed_hochschild(f, diag);
      const TreeCochain eg = embed_hochschild(g, diag);
      const int i = static_cast<int>(rng.int_in(1, m));
      const std::string tag = "fixture=" + a->name + " trial=" + std::to_string(t) + " ";
      if (!expect_equal(embed_hochschild(partial_composition(f, g, i), diag),
                        partial_composition(ef, eg, i), tag + "o_i", &witness))
        return {name, Outcome::fail, witness};
      if (!expect_equal(embed_hochschild(dot(f, g), diag), dot(ef, eg), tag + "dot", &witness))
        return {name, Outcome::fail, witness};
      if (!expect_equal(embed_hochschild(bracket(f, g), diag), bracket(ef, eg), tag + "bracket",
                        &witness))
        return {name, Outcome::fail, witness};
      if (!expect_equal(embed_hochschild(hochschild_delta(f), diag), hochschild_delta(ef),
                        tag + "delta", &witness))
        return {name, Outcome::fail, witness};
      if (!expect_equal(embed_hochschild(differential_d(f), diag), differential_d(ef), tag + "d",
                        &witness))
        return {name, Outcome::fail, witness};
    }
  }
  return {name, Outcome::pass,
          "fixtures=" + std::to_string(panel.size()) + " trials=" + std::to_string(trials)};
}

// ---------------------------------------------------------------------------
// planar-tree substitution identities (pure combinatorics, fixture free)
// ---------------------------------------------------------------------------

void for_each_composition(int total, int parts,
                          const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> current(static_cast<size_t>(parts), 1);
  const std::function<void(int, int)> rec = [&](int index, int remaining) {
    if (index == parts - 1) {
      current[static_cast<size_t>(index)] = remaining;
      emit(current);
      return;
    }
    for (int v = 1; v <= remaining - (parts - 1 - index); ++v) {
      current[static_cast<size_t>(index)] = v;
      rec(index + 1, remaining - v);
    }
  };
  if (parts <= 0 || total < parts) return;
  rec(0, total);
}

constexpr int kTreeCap = 6;  // exhaust substitution identities up to this leaf count

Verdict run_preoperadic_1(const RunArgs&) {
  const std::string name = "preoperadic-1";
  for (int k = 1; k <= kTreeCap; ++k) {
    const std::vector<int> ones(static_cast<size_t>(k), 1);
    for (const trees::Tree& y : trees::enumerate_trees(k)) {
      if (!(trees::r0(ones, y) == y))
        return {name, Outcome::fail, "R_0(" + std::to_string(k) + ";1,...,1) moved " + y.label()};
    }
  }
  return {name, Outcome::pass, "exhaustive for <= " + std::to_string(kTreeCap) + " leaves"};
}

// Shared enumeration for the three substitution compatibilities: outer arity
// k, middle arities ns summing to N, inner arities ms summing to M.
template <class Body>
Verdict run_substitution(const std::string& name, Body body) {
  for (int k = 1; k <= kTreeCap; ++k) {
    for (int N = k; N <= kTreeCap; ++N) {
      std::vector<std::vector<int>> middle;
      for_each_composition(N, k, [&](const std::vector<int>& ns) { middle.push_back(ns); });
      for (const std::vector<int>& ns : middle) {
        for (int M = N; M <= kTreeCap; ++M) {
          std::vector<std::vector<int>> inner;
          for_each_composition(M, N, [&](const std::vector<int>& ms) { inner.push_back(ms); });
          for (const std::vector<int>& ms : inner) {
            std::vector<int> grouped(static_cast<size_t>(k), 0);
            std::vector<std::vector<int>> slices(static_cast<size_t>(k));
            int offset = 0;
            for (int i = 0; i < k; ++i) {
              for (int l = 0; l < ns[static_cast<size_t>(i)]; ++l) {
                grouped[static_cast<size_t>(i)] += ms[static_cast<size_t>(offset + l)];
                slices[static_cast<size_t>(i)].push_back(ms[static_cast<size_t>(offset + l)]);
              }
              offset += ns[static_cast<size_t>(i)];
            }
            for (const trees::Tree& y : trees::enumerate_trees(M)) {
              std::string witness;
              if (!body(k, ns, ms, grouped, slices, y, &witness))
                return {name, Outcome::fail, witness};
            }
          }
        }
      }
    }
  }
  return {name, Outcome::pass, "exhaustive for <= " + std::to_string(kTreeCap) + " leaves"};
}

Verdict run_preoperadic_2(const RunArgs&) {
  return run_substitution(
      "preoperadic-2",
      [](int, const std::vector<int>& ns, const std::vector<int>& ms,
         const std::vector<int>& grouped, const std::vector<std::vector<int>>&,
         const trees::Tree& y, std::string* witness) {
        const trees::Tree lhs = trees::r0(ns, trees::r0(ms, y));
        const trees::Tree rhs = trees::r0(grouped, y);
        if (lhs == rhs) return true;
        *witness = "R_0 composition disagreed at " + y.label() + ": " + lhs.label() + " vs " +
                   rhs.label();
        return false;
      });
}

Verdict run_preoperadic_3(const RunArgs&) {
  return run_substitution(
      "preoperadic-3",
      [](int k, const std::vector<int>& ns, const std::vector<int>& ms,
         const std::vector<int>& grouped, const std::vector<std::vector<int>>& slices,
         const trees::Tree& y, std::string* witness) {
        for (int i = 1; i <= k; ++i) {
          const trees::Tree lhs = trees::ri(ns, i, trees::r0(ms, y));
          const trees::Tree rhs =
              trees::r0(slices[static_cast<size_t>(i - 1)], trees::ri(grouped, i, y));
          if (!(lhs == rhs)) {
            *witness = "R_" + std::to_string(i) + " after R_0 disagreed at " + y.label() + ": " +
                       lhs.label() + " vs " + rhs.label();
            return false;
          }
        }
        return true;
      });
}

Verdict run_preoperadic_4(const RunArgs&) {
  return run_substitution(
      "preoperadic-4",
      [](int k, const std::vector<int>& ns, const std::vector<int>& ms,
         const std::vector<int>& grouped, const std::vector<std::vector<int>>& slices,
         const trees::Tree& y, std::string* witness) {
        int offset = 0;
        for (int i = 1; i <= k; ++i) {
          for (int j = 1; j <= ns[static_cast<size_t>(i - 1)]; ++j) {
            const trees::Tree lhs = trees::ri(ms, offset + j, y);
            const trees::Tree rhs = trees::ri(slices[static_cast<size_t>(i - 1)], j,
                                              trees::ri(grouped, i, y));
            if (!(lhs == rhs)) {
              *witness = "iterated R_i disagreed at " + y.label() + " (i=" + std::to_string(i) +
                         ", j=" + std::to_string(j) + "): " + lhs.label() + " vs " + rhs.label();
              return false;
            }
          }
          offset += ns[static_cast<size_t>(i - 1)];
        }
        return true;
      });
}

Verdict run_presimplicial(const RunArgs&) {
  const std::string name = "presimplicial";
  for (int n = 2; n <= kTreeCap; ++n) {
    for (const trees::Tree& y : trees::enumerate_trees(n)) {
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          const trees::Tree lhs = trees::face(trees::face(y, j), i);
          const trees::Tree rhs = trees::face(trees::face(y, i), j - 1);
          if (!(lhs == rhs))
            return {name, Outcome::fail,
                    "d_" + std::to_string(i) + " d_" + std::to_string(j) + " disagreed at " +
                        y.label() + ": " + lhs.label() + " vs " + rhs.label()};
        }
      }
    }
  }
  return {name, Outcome::pass, "exhaustive for <= " + std::to_string(kTreeCap) + " leaves"};
}

}  // namespace

// ---------------------------------------------------------------------------
// catalogue and session
// ---------------------------------------------------------------------------

const std::vector<std::string>& identity_catalogue() {
  static const std::vector<std::string> names = {
      "operad-assoc-1",
      "operad-assoc-2",
      "operad-identity",
      "pre-jacobi",
      "distributivity",
      "higher-homotopy",
      "delta-squared",
      "mu-square",
      "pi-square",
      "pipi-table",
      "d-vs-delta-sign",
      "bracket-antisym",
      "leibniz-on-cohomology",
      "graded-comm-on-cohomology",
      "embed-chain-map",
      "preoperadic-1",
      "preoperadic-2",
      "preoperadic-3",
      "preoperadic-4",
      "presimplicial",
  };
  return names;
}

Session::Session(TrialConfig cfg) : Session(std::move(cfg), default_fixtures()) {}

Session::Session(TrialConfig cfg, FixtureRegistry reg)
    : cfg_(std::move(cfg)), reg_(std::move(reg)), caches_(std::make_shared<Caches>()) {
  if (cfg_.fixture == "all") return;
  FixtureRegistry narrowed;
  for (const AlgebraPtr& a : reg_.algebras) {
    if (a->name == cfg_.fixture) narrowed.algebras.push_back(a);
  }
  for (const DialgebraPtr& d : reg_.dialgebras) {
    if (d->name == cfg_.fixture) narrowed.dialgebras.push_back(d);
  }
  if (reg_.perturbed_algebra && reg_.perturbed_algebra->name == cfg_.fixture)
    narrowed.algebras.push_back(reg_.perturbed_algebra);
  if (reg_.perturbed_dialgebra && reg_.perturbed_dialgebra->name == cfg_.fixture)
    narrowed.dialgebras.push_back(reg_.perturbed_dialgebra);
  if (narrowed.algebras.empty() && narrowed.dialgebras.empty())
    throw std::invalid_argument("unknown fixture '" + cfg_.fixture + "'");
  // The negative controls stay attached unless one of them is the selection
  // itself, in which case it runs as a regular fixture (and fails validation).
  if (!(reg_.perturbed_algebra && reg_.perturbed_algebra->name == cfg_.fixture))
    narrowed.perturbed_algebra = reg_.perturbed_algebra;
  if (!(reg_.perturbed_dialgebra && reg_.perturbed_dialgebra->name == cfg_.fixture))
    narrowed.perturbed_dialgebra = reg_.perturbed_dialgebra;
  reg_ = std::move(narrowed);
}

Verdict Session::check(const std::string& identity) {
  // An invalid fixture turns every check into a clean failure instead of
  // surfacing as an internal error from the cohomology machinery.
  for (const AlgebraPtr& a : reg_.algebras) {
    const auto violations = validate(*a);
    if (!violations.empty())
      return {identity, Outcome::fail,
              "fixture=" + a->name + " failed validation; " + violations.front().rule + ": " +
                  violations.front().detail};
  }
  for (const DialgebraPtr& d : reg_.dialgebras) {
    const auto violations = validate(*d);
    if (!violations.empty())
      return {identity, Outcome::fail,
              "fixture=" + d->name + " failed validation; " + violations.front().rule + ": " +
                  violations.front().detail};
  }
  const RunArgs ra{cfg_, reg_, *caches_};
  const auto family = [&](int min_trials, auto body) {
    return run_family(identity, ra, min_trials, body);
  };
  if (identity == "operad-assoc-1")
    return family(50, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_assoc_nested(cx, rng, bound, w);
    });
  if (identity == "operad-assoc-2")
    return family(50, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_assoc_disjoint(cx, rng, bound, w);
    });
  if (identity == "operad-identity")
    return family(50, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_operad_identity(cx, rng, bound, w);
    });
  if (identity == "pre-jacobi")
    return family(25, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_pre_jacobi(cx, rng, bound, w);
    });
  if (identity == "distributivity")
    return family(25, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_distributivity(cx, rng, bound, w);
    });
  if (identity == "higher-homotopy")
    return family(25, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_higher_homotopy(cx, rng, bound, w);
    });
  if (identity == "delta-squared") return run_delta_squared(ra);
  if (identity == "mu-square") return run_mu_square(ra);
  if (identity == "pi-square") return run_pi_square(ra);
  if (identity == "pipi-table") return run_pipi_table(ra);
  if (identity == "d-vs-delta-sign") return run_sign_comparison(ra);
  if (identity == "bracket-antisym")
    return family(25, [](const auto& cx, Rng& rng, long bound, std::string* w) {
      return trial_bracket_antisym(cx, rng, bound, w);
    });
  if (identity == "leibniz-on-cohomology") return run_leibniz(ra);
  if (identity == "graded-comm-on-cohomology") return run_graded_comm(ra);
  if (identity == "embed-chain-map") return run_embed_chain_map(ra);
  if (identity == "preoperadic-1") return run_preoperadic_1(ra);
  if (identity == "preoperadic-2") return run_preoperadic_2(ra);
  if (identity == "preoperadic-3") return run_preoperadic_3(ra);
  if (identity == "preoperadic-4") return run_preoperadic_4(ra);
  if (identity == "presimplicial") return run_presimplicial(ra);
  throw std::invalid_argument("unknown identity '" + identity + "'");
}

std::vector<Verdict> Session::run_all() {
  std::vector<Verdict> out;
  Verdict preamble{"validate-fixtures", Outcome::pass, ""};
  int algebras = 0, dialgebras = 0;
  for (const AlgebraPtr& a : reg_.algebras) {
    const auto violations = validate(*a);
    if (!violations.empty()) {
      preamble.outcome = Outcome::fail;
      preamble.detail = "fixture=" + a->name + " " + violations.front().rule + ": " +
                        violations.front().detail;
      break;
    }
    ++algebras;
  }
  if (preamble.outcome == Outcome::pass) {
    for (const DialgebraPtr& d : reg_.dialgebras) {
      const auto violations = validate(*d);
      if (!violations.empty()) {
        preamble.outcome = Outcome::fail;
        preamble.detail = "fixture=" + d->name + " " + violations.front().rule + ": " +
                          violations.front().detail;
        break;
      }
      ++dialgebras;
    }
  }
  if (preamble.outcome == Outcome::pass)
    preamble.detail =
        "algebras=" + std::to_string(algebras) + " dialgebras=" + std::to_string(dialgebras);
  out.push_back(preamble);
  if (preamble.outcome == Outcome::fail) return out;
  for (const std::string& name : identity_catalogue()) out.push_back(check(name));
  return out;
}

Verdict check_identity(const std::string& identity, const TrialConfig& cfg) {
  return Session(cfg).check(identity);
}

std::vector<Verdict> run_suite(const TrialConfig& cfg) { return Session(cfg).run_all(); }

bool any_failed(const std::vector<Verdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.outcome == Outcome::fail; });
}

namespace {

const char* outcome_word(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "FAIL";
    case Outcome::skip:
      return "skip";
  }
  return "?";
}

std::string summary_line(const std::vector<Verdict>& verdicts, const TrialConfig& cfg,
                         const char* sep) {
  int pass = 0, fail = 0, skip = 0;
  for (const Verdict& v : verdicts) {
    if (v.outcome == Outcome::pass) ++pass;
    if (v.outcome == Outcome::fail) ++fail;
    if (v.outcome == Outcome::skip) ++skip;
  }
  std::ostringstream os;
  os << "summary:" << sep << "total=" << verdicts.size() << " pass=" << pass << " fail=" << fail
     << " skip=" << skip << " seed=" << cfg.seed << " trials=" << cfg.trials
     << " max-degree=" << cfg.max_degree << " bound=" << cfg.coefficient_bound;
  return os.str();
}

}  // namespace

std::string render_text(const std::vector<Verdict>& verdicts, const TrialConfig& cfg) {
  std::ostringstream os;
  for (const Verdict& v : verdicts) {
    os << outcome_word(v.outcome) << "  " << v.identity;
    if (!v.detail.empty()) os << "  " << v.detail;
    os << "\n";
  }
  os << summary_line(verdicts, cfg, " ") << "\n";
  return os.str();
}

std::string render_tsv(const std::vector<Verdict>& verdicts, const TrialConfig& cfg) {
  std::ostringstream os;
  os << "identity\toutcome\tdetail\n";
  for (const Verdict& v : verdicts) {
    os << v.identity << "\t" << outcome_word(v.outcome) << "\t" << v.detail << "\n";
  }
  os << summary_line(verdicts, cfg, "\t") << "\n";
  return os.str();
}

}  // namespace homalg
