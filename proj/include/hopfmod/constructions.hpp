#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/errors.hpp"
#include "hopfmod/fields.hpp"
#include "hopfmod/group.hpp"
#include "hopfmod/hopf_algebra.hpp"
#include "hopfmod/matrix.hpp"

namespace hopfmod {

namespace detail {

template <class F>
void normalize(const F& f, SparseVec<F>& v) {
  std::sort(v.t.begin(), v.t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, typename F::Elem>> out;
  for (auto& [i, c] : v.t) {
    if (!out.empty() && out.back().first == i)
      out.back().second = f.add(out.back().second, c);
    else
      out.push_back({i, c});
  }
  v.t.clear();
  for (auto& [i, c] : out)
    if (!f.is_zero(c)) v.t.push_back({i, std::move(c)});
}

template <class F>
void normalize(const F& f, SparsePair<F>& v) {
  std::sort(v.t.begin(), v.t.end(), [](const auto& a, const auto& b) {
    return std::make_pair(std::get<0>(a), std::get<1>(a)) <
           std::make_pair(std::get<0>(b), std::get<1>(b));
  });
  std::vector<std::tuple<int, int, typename F::Elem>> out;
  for (auto& [i, j, c] : v.t) {
    if (!out.empty() && std::get<0>(out.back()) == i && std::get<1>(out.back()) == j)
      std::get<2>(out.back()) = f.add(std::get<2>(out.back()), c);
    else
      out.push_back({i, j, c});
  }
  v.t.clear();
  for (auto& [i, j, c] : out)
    if (!f.is_zero(c)) v.t.push_back({i, j, std::move(c)});
}

inline std::string sanitize_name(std::string s) {
  std::string out;
  for (char c : s)
    if (c != '*' && c != '^' && c != ' ') out += c;
  return out;
}

inline std::string join_labels(const std::string& a, const std::string& b) {
  if (a == "1") return b;
  if (b == "1") return a;
  return a + "*" + b;
}

// coordinate map C with C * basis = I, from the first independent rows
template <class F>
typename HopfAlgebra<F>::ProjSummand make_proj_summand(const std::shared_ptr<const F>& field,
                                                       Matrix<F> basis) {
  auto piv = basis.transpose().rref().pivot_cols;  // independent rows of basis
  int d = basis.cols();
  require(static_cast<int>(piv.size()) == d, Errc::InternalError,
          "projective summand basis is rank deficient");
  Matrix<F> sq(field, d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) sq.at(i, j) = basis.at(piv[static_cast<size_t>(i)], j);
  auto inv = sq.inverse();
  require(inv.has_value(), Errc::InternalError, "summand pivot block not invertible");
  Matrix<F> coord(field, d, basis.rows());
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) coord.at(i, piv[static_cast<size_t>(k)]) = inv->at(i, k);
  return {std::move(basis), std::move(coord)};
}

// find a deterministic element of exact multiplicative order n
template <class F>
std::optional<typename F::Elem> root_of_unity(const F& f, long n) {
  if constexpr (std::is_same_v<F, CyclotomicField>) {
    if (n == 1) return f.one();
    if (n == 2) return f.neg(f.one());
    long cond = f.conductor();
    auto exact_order_n = [&](const typename F::Elem& cand) {
      auto x = f.one();
      for (long i = 1; i < n; ++i) {
        x = f.mul(x, cand);
        if (f.eq(x, f.one())) return false;
      }
      return f.eq(f.mul(x, cand), f.one());
    };
    if (cond % n == 0) {
      auto cand = f.pow(f.zeta(), cond / n);
      if (exact_order_n(cand)) return cand;
    }
    if (cond % 2 == 1 && (2 * cond) % n == 0) {
      // the roots of unity in Q(zeta_cond) form the group generated by -zeta
      auto cand = f.pow(f.neg(f.zeta()), (2 * cond) / n);
      if (exact_order_n(cand)) return cand;
    }
    return std::nullopt;
  } else {
    for (std::uint64_t i = 1; i < f.size(); ++i) {
      auto cand = f.element(i);
      auto x = f.one();
      bool hit_early = false;
      for (long k = 1; k < n; ++k) {
        x = f.mul(x, cand);
        if (f.eq(x, f.one())) {
          hit_early = true;
          break;
        }
      }
      if (!hit_early && f.eq(f.mul(x, cand), f.one())) return cand;
    }
    return std::nullopt;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// group_algebra: kG for finite abelian G (Ex: Delta(g) = g (x) g, S(g) = g^-1)
// ---------------------------------------------------------------------------

template <class F>
HopfAlgebraPtr<F> group_algebra(const GroupPresentation& G, std::shared_ptr<const F> field) {
  auto A = std::make_shared<HopfAlgebra<F>>();
  const auto& f = *field;
  A->field = field;
  const int n = G.size();
  A->dim = n;
  A->name = "k[" + [&] {
    std::ostringstream os;
    for (size_t i = 0; i < G.orders.size(); ++i) os << (i ? "x" : "") << "Z/" << G.orders[i];
    return os.str();
  }() + "] over " + f.describe();

  for (int i = 0; i < n; ++i) A->basis_labels.push_back(G.label(i));

  A->mult.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      A->mult[static_cast<size_t>(i) * n + j] = SparseVec<F>::unit(G.mul(i, j), f.one());

  A->unit.assign(static_cast<size_t>(n), f.zero());
  A->unit[static_cast<size_t>(G.identity())] = f.one();

  A->comul.resize(static_cast<size_t>(n));
  A->counit.assign(static_cast<size_t>(n), f.one());
  A->antipode.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    A->comul[static_cast<size_t>(i)].t.push_back({i, i, f.one()});
    A->antipode[static_cast<size_t>(i)] = SparseVec<F>::unit(G.inverse(i), f.one());
  }

  for (int i = 0; i < G.rank(); ++i) {
    A->named_elements.push_back(
        {G.gen_names[static_cast<size_t>(i)], SparseVec<F>::unit(G.generator(i), f.one())});
    A->algebra_gens.push_back(SparseVec<F>::unit(G.generator(i), f.one()));
  }
  if (A->algebra_gens.empty()) A->algebra_gens.push_back(A->unit_sparse());

  // split each cyclic factor into p-part and p'-part
  const long p = f.characteristic();
  std::vector<int> ppart(G.orders.size(), 1), qpart(G.orders.size(), 1);
  for (size_t i = 0; i < G.orders.size(); ++i) {
    int o = G.orders[i];
    if (p > 0)
      while (o % p == 0) {
        ppart[i] *= static_cast<int>(p);
        o /= static_cast<int>(p);
      }
    qpart[i] = o;
  }
  int psize = 1, qsize = 1, bound = 1;
  for (size_t i = 0; i < G.orders.size(); ++i) {
    psize *= ppart[i];
    qsize *= qpart[i];
    bound += ppart[i] - 1;
  }
  A->nilpotency_bound = bound;

  // enumerate P = { prod g_i^(q_i * s_i) } and Q = { prod g_i^(p_i * t_i) }
  std::vector<int> p_elements, q_elements;
  {
    std::vector<int> s(G.orders.size(), 0);
    while (true) {
      std::vector<int> e(G.orders.size());
      for (size_t i = 0; i < s.size(); ++i) e[i] = qpart[i] * s[i];
      p_elements.push_back(G.index(e));
      size_t i = s.size();
      while (i > 0 && ++s[i - 1] == ppart[i - 1]) s[--i] = 0;
      if (i == 0) break;
    }
    std::vector<int> t(G.orders.size(), 0);
    while (true) {
      std::vector<int> e(G.orders.size());
      for (size_t i = 0; i < t.size(); ++i) e[i] = ppart[i] * t[i];
      q_elements.push_back(G.index(e));
      size_t i = t.size();
      while (i > 0 && ++t[i - 1] == qpart[i - 1]) t[--i] = 0;
      if (i == 0) break;
    }
  }

  // radical basis: (u - 1) v for u in P \ {1}, v in Q
  Matrix<F> rad(field, n, (psize - 1) * qsize);
  int col = 0;
  for (int u : p_elements) {
    if (u == G.identity()) continue;
    for (int v : q_elements) {
      rad.at(G.mul(u, v), col) = f.one();
      rad.at(v, col) = f.add(rad.at(v, col), f.neg(f.one()));
      ++col;
    }
  }
  A->radical_basis = std::move(rad);
  for (size_t i = 0; i < G.orders.size(); ++i) {
    if (ppart[i] == 1) continue;
    std::vector<int> e(G.orders.size(), 0);
    e[i] = qpart[i];
    SparseVec<F> gen;
    gen.t.push_back({G.index(e), f.one()});
    gen.t.push_back({G.identity(), f.neg(f.one())});
    detail::normalize(f, gen);
    A->radical_left_gens.push_back(std::move(gen));
  }

  // idempotents: characters of the p'-part Q, when the field has the roots
  bool complete = true;
  std::vector<std::optional<typename F::Elem>> roots(G.orders.size());
  for (size_t i = 0; i < G.orders.size(); ++i) {
    if (qpart[i] == 1) continue;
    roots[i] = detail::root_of_unity(f, qpart[i]);
    if (!roots[i]) complete = false;
  }
  if (complete) {
    std::vector<int> chi(G.orders.size(), 0);
    while (true) {
      // e_chi = prod_i (1/q_i) sum_t chi(gen_i)^-t gen_i^(p_i t)
      typename HopfAlgebra<F>::Vec e = A->unit;
      for (size_t i = 0; i < G.orders.size(); ++i) {
        if (qpart[i] == 1) continue;
        typename HopfAlgebra<F>::Vec factor(static_cast<size_t>(n), f.zero());
        auto inv_q = f.inv(f.from_int(qpart[i]));
        for (int t = 0; t < qpart[i]; ++t) {
          std::vector<int> ee(G.orders.size(), 0);
          ee[i] = ppart[i] * t;
          auto coef = f.mul(inv_q, f.pow(*roots[i], static_cast<long>(
                                             ((qpart[i] - chi[i]) * t) % qpart[i])));
          int idx = G.index(ee);
          factor[static_cast<size_t>(idx)] = f.add(factor[static_cast<size_t>(idx)], coef);
        }
        e = A->mul_dense(e, factor);
      }
      std::ostringstream lb;
      bool any = false;
      for (size_t i = 0; i < chi.size(); ++i)
        if (qpart[i] > 1) {
          lb << (any ? "," : "") << chi[i];
          any = true;
        }
      A->idempotents.push_back({e, any ? lb.str() : "triv"});
      size_t i = chi.size();
      while (i > 0 && (qpart[i - 1] == 1 || ++chi[i - 1] == qpart[i - 1])) chi[--i] = 0;
      if (i == 0) break;
    }
  } else {
    A->idempotents_complete = false;
  }

  // projective indecomposables: A e_chi has basis { u e_chi : u in P }
  for (const auto& idem : A->idempotents) {
    Matrix<F> basis(field, n, psize);
    int c = 0;
    for (int u : p_elements) {
      auto v = A->mul_dense(A->dense_of(SparseVec<F>::unit(u, f.one())), idem.vec);
      basis.set_column(c++, v);
    }
    A->projectives.push_back(detail::make_proj_summand(field, std::move(basis)));
  }

  // rank-variety support: elementary abelian p-group in characteristic p
  if (p > 0 && psize == n) {
    bool elem = true;
    for (int o : G.orders)
      if (o != p) elem = false;
    if (elem) {
      A->rank_variety.kind = HopfAlgebra<F>::RankVarietySupport::Kind::ElementaryAbelian;
      A->rank_variety.nvars = G.rank();
      A->rank_variety.nildeg = static_cast<int>(p);
      for (int i = 0; i < G.rank(); ++i) {
        SparseVec<F> x;
        x.t.push_back({G.identity(), f.neg(f.one())});
        x.t.push_back({G.generator(i), f.one()});
        detail::normalize(f, x);
        A->rank_variety.xelems.push_back(std::move(x));
      }
    }
  }

  A->group = G;
  A->antipode_involutive = true;  // S(g) = g^-1 is involutive on group algebras
  return A;
}

// ---------------------------------------------------------------------------
// dual_group_algebra: k[G] with pointwise multiplication (Ex 2.2 pattern)
// ---------------------------------------------------------------------------

template <class F>
HopfAlgebraPtr<F> dual_group_algebra(const GroupPresentation& G, std::shared_ptr<const F> field) {
  auto A = std::make_shared<HopfAlgebra<F>>();
  const auto& f = *field;
  A->field = field;
  const int n = G.size();
  A->dim = n;
  A->name = "k^[" + [&] {
    std::ostringstream os;
    for (size_t i = 0; i < G.orders.size(); ++i) os << (i ? "x" : "") << "Z/" << G.orders[i];
    return os.str();
  }() + "] over " + f.describe();

  for (int i = 0; i < n; ++i)
    A->basis_labels.push_back("p_" + detail::sanitize_name(G.label(i)));

  A->mult.resize(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    A->mult[static_cast<size_t>(i) * n + i] = SparseVec<F>::unit(i, f.one());

  A->unit.assign(static_cast<size_t>(n), f.one());

  A->comul.resize(static_cast<size_t>(n));
  A->counit.assign(static_cast<size_t>(n), f.zero());
  A->counit[static_cast<size_t>(G.identity())] = f.one();
  A->antipode.resize(static_cast<size_t>(n));
  for (int g = 0; g < n; ++g) {
    for (int a = 0; a < n; ++a) {
      int b = G.mul(G.inverse(a), g);  // ab = g
      A->comul[static_cast<size_t>(g)].t.push_back({a, b, f.one()});
    }
    detail::normalize(f, A->comul[static_cast<size_t>(g)]);
    A->antipode[static_cast<size_t>(g)] = SparseVec<F>::unit(G.inverse(g), f.one());
  }

  for (int g = 0; g < n; ++g) {
    A->named_elements.push_back(
        {"p_" + detail::sanitize_name(G.label(g)), SparseVec<F>::unit(g, f.one())});
    A->algebra_gens.push_back(SparseVec<F>::unit(g, f.one()));
  }

  A->radical_basis = Matrix<F>(field, n, 0);
  A->nilpotency_bound = 1;
  for (int g = 0; g < n; ++g) {
    typename HopfAlgebra<F>::Vec e(static_cast<size_t>(n), f.zero());
    e[static_cast<size_t>(g)] = f.one();
    A->idempotents.push_back({e, G.label(g)});
    Matrix<F> basis(field, n, 1);
    basis.at(g, 0) = f.one();
    A->projectives.push_back(detail::make_proj_summand(field, std::move(basis)));
  }

  A->group = G;
  A->is_dual_group_algebra = true;
  A->antipode_involutive = true;
  return A;
}

// ---------------------------------------------------------------------------
// quantum_elementary_abelian (Ex 2.5): x_i^n = 0, g_i^n = 1, g_i x_j = q^d x_j g_i
// ---------------------------------------------------------------------------

// Exponent layout: (a_1..a_m, b_1..b_m) for x^a g^b, mixed radix with the
// first coordinate most significant (lexicographic enumeration).
template <class F>
HopfAlgebraPtr<F> quantum_elementary_abelian(int m, long n, std::shared_ptr<const F> field) {
  require(m >= 1, Errc::InvalidN, "m must be positive");
  require(n >= 2, Errc::InvalidN, "n must be at least 2");
  const auto& f = *field;
  auto qopt = detail::root_of_unity(f, n);
  require(qopt.has_value(), Errc::NoPrimitiveRoot,
          "field " + f.describe() + " has no primitive " + std::to_string(n) + "-th root of unity");
  auto q = *qopt;

  auto A = std::make_shared<HopfAlgebra<F>>();
  A->field = field;
  std::int64_t dim64 = 1;
  for (int i = 0; i < 2 * m; ++i) dim64 *= n;
  require(dim64 <= 100000, Errc::InvalidN, "quantum algebra too large");
  const int dim = static_cast<int>(dim64);
  A->dim = dim;
  A->name = "quantum(" + std::to_string(m) + "," + std::to_string(n) + ") over " + f.describe();

  const int mm = m;
  auto exps = [&](int idx) {
    std::vector<int> e(static_cast<size_t>(2 * mm));
    for (int i = 2 * mm - 1; i >= 0; --i) {
      e[static_cast<size_t>(i)] = static_cast<int>(idx % n);
      idx = static_cast<int>(idx / n);
    }
    return e;
  };
  auto index = [&](const std::vector<int>& e) {
    long idx = 0;
    for (int i = 0; i < 2 * mm; ++i) idx = idx * n + (((e[static_cast<size_t>(i)] % n) + n) % n);
    return static_cast<int>(idx);
  };

  for (int i = 0; i < dim; ++i) {
    auto e = exps(i);
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < mm; ++k)
      if (e[static_cast<size_t>(k)]) {
        os << (first ? "" : "*") << "x" << (k + 1);
        if (e[static_cast<size_t>(k)] > 1) os << "^" << e[static_cast<size_t>(k)];
        first = false;
      }
    for (int k = 0; k < mm; ++k)
      if (e[static_cast<size_t>(mm + k)]) {
        os << (first ? "" : "*") << "g" << (k + 1);
        if (e[static_cast<size_t>(mm + k)] > 1) os << "^" << e[static_cast<size_t>(mm + k)];
        first = false;
      }
    A->basis_labels.push_back(first ? "1" : os.str());
  }

  // multiplication: (x^a g^b)(x^c g^d) = q^(b . c) x^(a+c) g^(b+d), zero when a+c overflows
  A->mult.resize(static_cast<size_t>(dim) * static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    auto ei = exps(i);
    for (int j = 0; j < dim; ++j) {
      auto ej = exps(j);
      bool zero = false;
      long twist = 0;
      std::vector<int> e(static_cast<size_t>(2 * mm));
      for (int k = 0; k < mm; ++k) {
        int a = ei[static_cast<size_t>(k)], c = ej[static_cast<size_t>(k)];
        if (a + c >= n) {
          zero = true;
          break;
        }
        e[static_cast<size_t>(k)] = a + c;
        twist += static_cast<long>(ei[static_cast<size_t>(mm + k)]) * c;
        e[static_cast<size_t>(mm + k)] =
            (ei[static_cast<size_t>(mm + k)] + ej[static_cast<size_t>(mm + k)]) % static_cast<int>(n);
      }
      if (zero) continue;
      A->mult[static_cast<size_t>(i) * dim + j] =
          SparseVec<F>::unit(index(e), f.pow(q, twist % n));
    }
  }

  A->unit.assign(static_cast<size_t>(dim), f.zero());
  A->unit[0] = f.one();

  // comultiplication assembled multiplicatively from the generator coproducts
  A->comul.resize(static_cast<size_t>(dim));
  {
    std::vector<SparsePair<F>> gen_delta(static_cast<size_t>(2 * mm));
    for (int k = 0; k < mm; ++k) {
      std::vector<int> ex(static_cast<size_t>(2 * mm), 0), eg(static_cast<size_t>(2 * mm), 0);
      ex[static_cast<size_t>(k)] = 1;
      eg[static_cast<size_t>(mm + k)] = 1;
      int xi = index(ex), gi = index(eg);
      SparsePair<F> dx;  // Delta(x_k) = x_k (x) 1 + g_k (x) x_k
      dx.t.push_back({xi, 0, f.one()});
      dx.t.push_back({gi, xi, f.one()});
      detail::normalize(f, dx);
      gen_delta[static_cast<size_t>(k)] = dx;
      SparsePair<F> dg;  // Delta(g_k) = g_k (x) g_k
      dg.t.push_back({gi, gi, f.one()});
      gen_delta[static_cast<size_t>(mm + k)] = dg;
    }
    for (int i = 0; i < dim; ++i) {
      auto e = exps(i);
      SparsePair<F> acc;
      acc.t.push_back({0, 0, f.one()});
      for (int k = 0; k < 2 * mm; ++k)
        for (int t = 0; t < e[static_cast<size_t>(k)]; ++t)
          acc = detail::pair_mul(*A, acc, gen_delta[static_cast<size_t>(k)]);
      A->comul[static_cast<size_t>(i)] = std::move(acc);
    }
  }

  // counit: 1 on pure grouplike monomials, 0 as soon as some x appears
  A->counit.assign(static_cast<size_t>(dim), f.zero());
  for (int i = 0; i < dim; ++i) {
    auto e = exps(i);
    bool xfree = true;
    for (int k = 0; k < mm; ++k)
      if (e[static_cast<size_t>(k)]) xfree = false;
    if (xfree) A->counit[static_cast<size_t>(i)] = f.one();
  }

  // antipode: S(x_k) = -g_k^-1 x_k, S(g_k) = g_k^-1, extended anti-multiplicatively
  A->antipode.resize(static_cast<size_t>(dim));
  {
    std::vector<SparseVec<F>> gen_s(static_cast<size_t>(2 * mm));
    for (int k = 0; k < mm; ++k) {
      std::vector<int> e(static_cast<size_t>(2 * mm), 0);
      e[static_cast<size_t>(k)] = 1;
      e[static_cast<size_t>(mm + k)] = static_cast<int>(n) - 1;  // g^-1 x = q x g^-1 ... store as monomial
      // S(x_k) = -g_k^{-1} x_k: in PBW order x_k g_k^{n-1} times the twist from moving g^{-1} left
      // g_k^{-1} x_k = q^{-1} x_k g_k^{-1}
      auto coef = f.neg(f.pow(q, n - 1));  // q^{-1} = q^{n-1}
      gen_s[static_cast<size_t>(k)] = SparseVec<F>::unit(index(e), coef);
      std::vector<int> eg(static_cast<size_t>(2 * mm), 0);
      eg[static_cast<size_t>(mm + k)] = static_cast<int>(n) - 1;
      gen_s[static_cast<size_t>(mm + k)] = SparseVec<F>::unit(index(eg), f.one());
    }
    for (int i = 0; i < dim; ++i) {
      auto e = exps(i);
      // S reverses order: S(x^a g^b) = S(g)^b S(x)^a with factors reversed
      SparseVec<F> acc = SparseVec<F>::unit(0, f.one());
      for (int k = mm - 1; k >= 0; --k)
        for (int t = 0; t < e[static_cast<size_t>(mm + k)]; ++t)
          acc = A->sparse_of(A->mul_elems(acc, gen_s[static_cast<size_t>(mm + k)]));
      for (int k = mm - 1; k >= 0; --k)
        for (int t = 0; t < e[static_cast<size_t>(k)]; ++t)
          acc = A->sparse_of(A->mul_elems(acc, gen_s[static_cast<size_t>(k)]));
      A->antipode[static_cast<size_t>(i)] = std::move(acc);
    }
  }

  // named elements and generators
  for (int k = 0; k < mm; ++k) {
    std::vector<int> ex(static_cast<size_t>(2 * mm), 0), eg(static_cast<size_t>(2 * mm), 0);
    ex[static_cast<size_t>(k)] = 1;
    eg[static_cast<size_t>(mm + k)] = 1;
    A->named_elements.push_back({"x" + std::to_string(k + 1), SparseVec<F>::unit(index(ex), f.one())});
    A->named_elements.push_back({"g" + std::to_string(k + 1), SparseVec<F>::unit(index(eg), f.one())});
    A->algebra_gens.push_back(SparseVec<F>::unit(index(ex), f.one()));
    A->algebra_gens.push_back(SparseVec<F>::unit(index(eg), f.one()));
    A->radical_left_gens.push_back(SparseVec<F>::unit(index(ex), f.one()));
  }

  // radical: monomials with some x-exponent positive
  {
    std::vector<int> cols;
    for (int i = 0; i < dim; ++i) {
      auto e = exps(i);
      for (int k = 0; k < mm; ++k)
        if (e[static_cast<size_t>(k)]) {
          cols.push_back(i);
          break;
        }
    }
    Matrix<F> rad(field, dim, static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) rad.at(cols[c], static_cast<int>(c)) = f.one();
    A->radical_basis = std::move(rad);
  }
  A->nilpotency_bound = mm * static_cast<int>(n - 1) + 1;

  // idempotents: characters chi(g_k) = q^{c_k} of the grouplike (Z/n)^m
  {
    std::vector<int> chi(static_cast<size_t>(mm), 0);
    auto inv_n = f.inv(f.from_int(n));
    while (true) {
      typename HopfAlgebra<F>::Vec e = A->unit;
      for (int k = 0; k < mm; ++k) {
        typename HopfAlgebra<F>::Vec factor(static_cast<size_t>(dim), f.zero());
        for (int t = 0; t < static_cast<int>(n); ++t) {
          std::vector<int> eg(static_cast<size_t>(2 * mm), 0);
          eg[static_cast<size_t>(mm + k)] = t;
          auto coef = f.mul(inv_n, f.pow(q, static_cast<long>(
                                             ((n - chi[static_cast<size_t>(k)]) * t) % n)));
          factor[static_cast<size_t>(index(eg))] = coef;
        }
        e = A->mul_dense(e, factor);
      }
      std::ostringstream lb;
      for (int k = 0; k < mm; ++k) lb << (k ? "," : "") << chi[static_cast<size_t>(k)];
      A->idempotents.push_back({e, lb.str()});
      int i = mm;
      while (i > 0 && ++chi[static_cast<size_t>(i - 1)] == static_cast<int>(n)) chi[static_cast<size_t>(--i)] = 0;
      if (i == 0) break;
    }
  }

  // projectives: A e_chi has basis { x^a e_chi : a in [0,n)^m }
  for (const auto& idem : A->idempotents) {
    int pdim = 1;
    for (int k = 0; k < mm; ++k) pdim *= static_cast<int>(n);
    Matrix<F> basis(field, dim, pdim);
    std::vector<int> a(static_cast<size_t>(mm), 0);
    int c = 0;
    while (true) {
      std::vector<int> e(static_cast<size_t>(2 * mm), 0);
      for (int k = 0; k < mm; ++k) e[static_cast<size_t>(k)] = a[static_cast<size_t>(k)];
      auto v = A->mul_dense(A->dense_of(SparseVec<F>::unit(index(e), f.one())), idem.vec);
      basis.set_column(c++, v);
      int i = mm;
      while (i > 0 && ++a[static_cast<size_t>(i - 1)] == static_cast<int>(n)) a[static_cast<size_t>(--i)] = 0;
      if (i == 0) break;
    }
    A->projectives.push_back(detail::make_proj_summand(field, std::move(basis)));
  }

  if (mm == 1) {
    A->rank_variety.kind = HopfAlgebra<F>::RankVarietySupport::Kind::QuantumLine;
    A->rank_variety.nvars = 1;
    A->rank_variety.nildeg = static_cast<int>(n);
    std::vector<int> ex(static_cast<size_t>(2), 0);
    ex[0] = 1;
    A->rank_variety.xelems.push_back(SparseVec<F>::unit(index(ex), f.one()));
  }

  // S^2(x) = g^-1 x g = q^-1 x, so S is not involutive for n > 2
  A->antipode_involutive = (n <= 2);
  A->quantum = typename HopfAlgebra<F>::QuantumShape{mm, n};
  return A;
}

// ---------------------------------------------------------------------------
// tensor_algebra: componentwise Hopf structure on A (x) B
// ---------------------------------------------------------------------------

template <class F>
HopfAlgebraPtr<F> tensor_algebra(const HopfAlgebraPtr<F>& Ap, const HopfAlgebraPtr<F>& Bp) {
  const HopfAlgebra<F>& A = *Ap;
  const HopfAlgebra<F>& B = *Bp;
  require(A.field->spec() == B.field->spec(), Errc::FieldMismatch,
          "tensor factors over different fields");
  require(A.idempotents_complete && B.idempotents_complete, Errc::UnsupportedAlgebra,
          "tensor factors must have complete idempotent data");
  const auto& f = *A.field;
  auto T = std::make_shared<HopfAlgebra<F>>();
  T->field = A.field;
  const int da = A.dim, db = B.dim, d = da * db;
  T->dim = d;
  T->name = A.name + " (x) " + B.name;
  auto idx = [&](int i, int j) { return i * db + j; };

  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      T->basis_labels.push_back(detail::join_labels(A.basis_labels[static_cast<size_t>(i)],
                                                    B.basis_labels[static_cast<size_t>(j)]));

  T->mult.resize(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          SparseVec<F> out;
          for (const auto& [u, cu] : A.mult_entry(i, k).t)
            for (const auto& [v, cv] : B.mult_entry(j, l).t)
              out.t.push_back({idx(u, v), f.mul(cu, cv)});
          detail::normalize(f, out);
          T->mult[static_cast<size_t>(idx(i, j)) * d + idx(k, l)] = std::move(out);
        }

  T->unit.assign(static_cast<size_t>(d), f.zero());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      T->unit[static_cast<size_t>(idx(i, j))] =
          f.mul(A.unit[static_cast<size_t>(i)], B.unit[static_cast<size_t>(j)]);

  T->comul.resize(static_cast<size_t>(d));
  T->counit.assign(static_cast<size_t>(d), f.zero());
  T->antipode.resize(static_cast<size_t>(d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      SparsePair<F> dl;
      for (const auto& [x1, x2, cx] : A.comul[static_cast<size_t>(i)].t)
        for (const auto& [y1, y2, cy] : B.comul[static_cast<size_t>(j)].t)
          dl.t.push_back({idx(x1, y1), idx(x2, y2), f.mul(cx, cy)});
      detail::normalize(f, dl);
      T->comul[static_cast<size_t>(idx(i, j))] = std::move(dl);
      T->counit[static_cast<size_t>(idx(i, j))] =
          f.mul(A.counit[static_cast<size_t>(i)], B.counit[static_cast<size_t>(j)]);
      SparseVec<F> s;
      for (const auto& [u, cu] : A.antipode[static_cast<size_t>(i)].t)
        for (const auto& [v, cv] : B.antipode[static_cast<size_t>(j)].t)
          s.t.push_back({idx(u, v), f.mul(cu, cv)});
      detail::normalize(f, s);
      T->antipode[static_cast<size_t>(idx(i, j))] = std::move(s);
    }

  // radical: J_A (x) B + A (x) J_B, spanned independently by
  // { ra (x) b_j } and { e_chi (x) rb }
  {
    const int ra = A.radical_basis.cols(), rb = B.radical_basis.cols();
    int cols = ra * db + static_cast<int>(A.idempotents.size()) * rb;
    Matrix<F> rad(T->field, d, cols);
    int c = 0;
    for (int k = 0; k < ra; ++k)
      for (int j = 0; j < db; ++j) {
        for (int i = 0; i < da; ++i)
          rad.at(idx(i, j), c) = A.radical_basis.at(i, k);
        ++c;
      }
    for (const auto& e : A.idempotents)
      for (int k = 0; k < rb; ++k) {
        for (int i = 0; i < da; ++i) {
          if (f.is_zero(e.vec[static_cast<size_t>(i)])) continue;
          for (int j = 0; j < db; ++j)
            rad.at(idx(i, j), c) = f.mul(e.vec[static_cast<size_t>(i)], B.radical_basis.at(j, k));
        }
        ++c;
      }
    T->radical_basis = std::move(rad);
  }
  T->nilpotency_bound = A.nilpotency_bound + B.nilpotency_bound - 1;

  auto lift_a = [&](const SparseVec<F>& s) {
    SparseVec<F> out;
    for (const auto& [i, c] : s.t)
      for (int j = 0; j < db; ++j) {
        if (f.is_zero(B.unit[static_cast<size_t>(j)])) continue;
        out.t.push_back({idx(i, j), f.mul(c, B.unit[static_cast<size_t>(j)])});
      }
    detail::normalize(f, out);
    return out;
  };
  auto lift_b = [&](const SparseVec<F>& s) {
    SparseVec<F> out;
    for (const auto& [j, c] : s.t)
      for (int i = 0; i < da; ++i) {
        if (f.is_zero(A.unit[static_cast<size_t>(i)])) continue;
        out.t.push_back({idx(i, j), f.mul(c, A.unit[static_cast<size_t>(i)])});
      }
    detail::normalize(f, out);
    return out;
  };

  for (const auto& g : A.radical_left_gens) T->radical_left_gens.push_back(lift_a(g));
  for (const auto& g : B.radical_left_gens) T->radical_left_gens.push_back(lift_b(g));
  for (const auto& g : A.algebra_gens) T->algebra_gens.push_back(lift_a(g));
  for (const auto& g : B.algebra_gens) T->algebra_gens.push_back(lift_b(g));

  // named elements, prefixed on collision
  {
    bool collide = false;
    for (const auto& [na, ea] : A.named_elements)
      for (const auto& [nb, eb] : B.named_elements)
        if (na == nb) collide = true;
    for (const auto& [na, ea] : A.named_elements)
      T->named_elements.push_back({collide ? "a." + na : na, lift_a(ea)});
    for (const auto& [nb, eb] : B.named_elements)
      T->named_elements.push_back({collide ? "b." + nb : nb, lift_b(eb)});
  }

  for (size_t ia = 0; ia < A.idempotents.size(); ++ia)
    for (size_t ib = 0; ib < B.idempotents.size(); ++ib) {
      typename HopfAlgebra<F>::Vec e(static_cast<size_t>(d), f.zero());
      for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
          e[static_cast<size_t>(idx(i, j))] =
              f.mul(A.idempotents[ia].vec[static_cast<size_t>(i)],
                    B.idempotents[ib].vec[static_cast<size_t>(j)]);
      T->idempotents.push_back({std::move(e), A.idempotents[ia].label + "|" + B.idempotents[ib].label});
      T->projectives.push_back(
          {Matrix<F>::kron(A.projectives[ia].basis, B.projectives[ib].basis),
           Matrix<F>::kron(A.projectives[ia].coord, B.projectives[ib].coord)});
    }

  // rank varieties combine for elementary abelian factors over the same prime
  using RK = typename HopfAlgebra<F>::RankVarietySupport::Kind;
  if (A.rank_variety.kind == RK::ElementaryAbelian && B.rank_variety.kind == RK::ElementaryAbelian &&
      A.rank_variety.nildeg == B.rank_variety.nildeg) {
    T->rank_variety.kind = RK::ElementaryAbelian;
    T->rank_variety.nvars = A.rank_variety.nvars + B.rank_variety.nvars;
    T->rank_variety.nildeg = A.rank_variety.nildeg;
    for (const auto& x : A.rank_variety.xelems) T->rank_variety.xelems.push_back(lift_a(x));
    for (const auto& x : B.rank_variety.xelems) T->rank_variety.xelems.push_back(lift_b(x));
  }

  T->antipode_involutive = A.antipode_involutive && B.antipode_involutive;
  return T;
}

// ---------------------------------------------------------------------------
// smash_coproduct: kL natural k[G] with G acting on the base by Hopf
// automorphisms; Delta twisted by the action (basis: base-major, group-minor)
// ---------------------------------------------------------------------------

// verify sigma is a Hopf automorphism of B
template <class F>
void check_hopf_automorphism(const HopfAlgebra<F>& B, const Matrix<F>& sigma) {
  const auto& f = *B.field;
  require(sigma.rows() == B.dim && sigma.cols() == B.dim, Errc::NotAutomorphism,
          "automorphism matrix has wrong shape");
  require(sigma.inverse().has_value(), Errc::NotAutomorphism, "action matrix is singular");
  auto apply = [&](const SparseVec<F>& v) {
    return B.sparse_of(sigma.mul_vec(B.dense_of(v)));
  };
  // algebra map on basis pairs, unit preserved
  require(detail::vec_equal(f, sigma.mul_vec(B.unit), B.unit), Errc::NotAutomorphism,
          "action does not fix the unit");
  for (int i = 0; i < B.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      auto lhs = B.sparse_of(B.mul_elems(apply(SparseVec<F>::unit(i, f.one())),
                                         apply(SparseVec<F>::unit(j, f.one()))));
      auto rhs = apply(B.sparse_of(B.mul_elems(SparseVec<F>::unit(i, f.one()),
                                               SparseVec<F>::unit(j, f.one()))));
      require(detail::vec_equal(f, B.dense_of(lhs), B.dense_of(rhs)), Errc::NotAutomorphism,
              "action is not an algebra homomorphism at (" + B.basis_labels[static_cast<size_t>(i)] +
                  ", " + B.basis_labels[static_cast<size_t>(j)] + ")");
    }
  for (int i = 0; i < B.dim; ++i) {
    // epsilon(sigma b) = epsilon(b)
    auto sb = apply(SparseVec<F>::unit(i, f.one()));
    require(f.eq(B.counit_of(sb), B.counit[static_cast<size_t>(i)]), Errc::NotAutomorphism,
            "action does not preserve the counit at " + B.basis_labels[static_cast<size_t>(i)]);
    // Delta(sigma b) = (sigma (x) sigma) Delta(b)
    auto lhs = B.comul_of(sb);
    SparsePair<F> rhs;
    for (const auto& [x, y, c] : B.comul[static_cast<size_t>(i)].t) {
      auto sx = apply(SparseVec<F>::unit(x, f.one()));
      auto sy = apply(SparseVec<F>::unit(y, f.one()));
      for (const auto& [u, cu] : sx.t)
        for (const auto& [v, cv] : sy.t) rhs.t.push_back({u, v, f.mul(c, f.mul(cu, cv))});
    }
    detail::normalize(f, rhs);
    require(detail::pair_equal(f, lhs, rhs), Errc::NotAutomorphism,
            "action does not commute with Delta at " + B.basis_labels[static_cast<size_t>(i)]);
    // S(sigma b) = sigma(S b)
    auto lhs_s = B.dense_of(B.antipode_of(sb));
    auto rhs_s = sigma.mul_vec(B.dense_of(B.antipode[static_cast<size_t>(i)]));
    require(detail::vec_equal(f, lhs_s, rhs_s), Errc::NotAutomorphism,
            "action does not commute with S at " + B.basis_labels[static_cast<size_t>(i)]);
  }
}

template <class F>
HopfAlgebraPtr<F> smash_coproduct(const HopfAlgebraPtr<F>& Bp, const GroupPresentation& G,
                                  const std::vector<Matrix<F>>& gen_actions,
                                  bool run_validator = true) {
  const HopfAlgebra<F>& B = *Bp;
  const auto& f = *B.field;
  require(static_cast<int>(gen_actions.size()) == G.rank(), Errc::NotAutomorphism,
          "need one action matrix per acting-group generator");
  require(B.idempotents_complete, Errc::UnsupportedAlgebra,
          "smash base must have complete idempotent data");

  for (const auto& sigma : gen_actions) check_hopf_automorphism(B, sigma);
  // generator order relations sigma^ord = id
  for (int i = 0; i < G.rank(); ++i) {
    Matrix<F> pw = Matrix<F>::identity(B.field, B.dim);
    for (int t = 0; t < G.orders[static_cast<size_t>(i)]; ++t) pw = pw.mul(gen_actions[static_cast<size_t>(i)]);
    require(pw == Matrix<F>::identity(B.field, B.dim), Errc::NotAutomorphism,
            "action generator " + std::to_string(i + 1) + " does not satisfy its order relation");
  }

  const int ng = G.size();
  std::vector<Matrix<F>> action;  // per group element
  for (int g = 0; g < ng; ++g) {
    auto e = G.exponents(g);
    Matrix<F> m = Matrix<F>::identity(B.field, B.dim);
    for (size_t i = 0; i < e.size(); ++i)
      for (int t = 0; t < e[i]; ++t) m = m.mul(gen_actions[i]);
    action.push_back(std::move(m));
  }

  auto A = std::make_shared<HopfAlgebra<F>>();
  A->field = B.field;
  const int db = B.dim, d = db * ng;
  A->dim = d;
  A->name = B.name + " natural k^[G]";
  auto idx = [&](int i, int g) { return i * ng + g; };

  for (int i = 0; i < db; ++i)
    for (int g = 0; g < ng; ++g)
      A->basis_labels.push_back(detail::join_labels(B.basis_labels[static_cast<size_t>(i)],
                                                    "p_" + detail::sanitize_name(G.label(g))));

  // algebra structure: componentwise tensor with the dual group algebra
  A->mult.resize(static_cast<size_t>(d) * static_cast<size_t>(d));
  for (int i = 0; i < db; ++i)
    for (int g = 0; g < ng; ++g)
      for (int j = 0; j < db; ++j) {
        const auto& bij = B.mult_entry(i, j);
        SparseVec<F> out;
        for (const auto& [k, c] : bij.t) out.t.push_back({idx(k, g), c});
        detail::normalize(f, out);
        A->mult[static_cast<size_t>(idx(i, g)) * d + idx(j, g)] = std::move(out);
      }

  A->unit.assign(static_cast<size_t>(d), f.zero());
  for (int i = 0; i < db; ++i)
    for (int g = 0; g < ng; ++g) A->unit[static_cast<size_t>(idx(i, g))] = B.unit[static_cast<size_t>(i)];

  // Delta(b (x) p_g) = sum_{uv=g} (b1 (x) p_u) (x) (u^-1 . b2 (x) p_v)
  A->comul.resize(static_cast<size_t>(d));
  A->counit.assign(static_cast<size_t>(d), f.zero());
  A->antipode.resize(static_cast<size_t>(d));
  for (int i = 0; i < db; ++i) {
    for (int g = 0; g < ng; ++g) {
      SparsePair<F> dl;
      for (int u = 0; u < ng; ++u) {
        int v = G.mul(G.inverse(u), g);
        const Matrix<F>& au_inv = action[static_cast<size_t>(G.inverse(u))];
        for (const auto& [x, y, c] : B.comul[static_cast<size_t>(i)].t) {
          // expand u^-1 . b_y
          for (int z = 0; z < db; ++z) {
            const auto& coef = au_inv.at(z, y);
            if (f.is_zero(coef)) continue;
            dl.t.push_back({idx(x, u), idx(z, v), f.mul(c, coef)});
          }
        }
      }
      detail::normalize(f, dl);
      A->comul[static_cast<size_t>(idx(i, g))] = std::move(dl);

      A->counit[static_cast<size_t>(idx(i, g))] =
          (g == G.identity()) ? B.counit[static_cast<size_t>(i)] : f.zero();

      // S(b (x) p_g) = (g^-1 . S_B(b)) (x) p_{g^-1}
      const Matrix<F>& ag_inv = action[static_cast<size_t>(G.inverse(g))];
      auto sb = ag_inv.mul_vec(B.dense_of(B.antipode[static_cast<size_t>(i)]));
      SparseVec<F> s;
      int ginv = G.inverse(g);
      for (int z = 0; z < db; ++z)
        if (!f.is_zero(sb[static_cast<size_t>(z)])) s.t.push_back({idx(z, ginv), sb[static_cast<size_t>(z)]});
      detail::normalize(f, s);
      A->antipode[static_cast<size_t>(idx(i, g))] = std::move(s);
    }
  }

  // radical J_B (x) k[G]
  {
    const int rb = B.radical_basis.cols();
    Matrix<F> rad(A->field, d, rb * ng);
    int c = 0;
    for (int k = 0; k < rb; ++k)
      for (int g = 0; g < ng; ++g) {
        for (int i = 0; i < db; ++i) rad.at(idx(i, g), c) = B.radical_basis.at(i, k);
        ++c;
      }
    A->radical_basis = std::move(rad);
  }
  A->nilpotency_bound = B.nilpotency_bound;

  auto lift = [&](const SparseVec<F>& s) {
    SparseVec<F> out;
    for (const auto& [i, c] : s.t)
      for (int g = 0; g < ng; ++g) out.t.push_back({idx(i, g), c});
    detail::normalize(f, out);
    return out;
  };
  for (const auto& gen : B.radical_left_gens) A->radical_left_gens.push_back(lift(gen));
  for (const auto& gen : B.algebra_gens) A->algebra_gens.push_back(lift(gen));
  for (int g = 0; g < ng; ++g) {
    SparseVec<F> pg;
    for (int i = 0; i < db; ++i)
      if (!f.is_zero(B.unit[static_cast<size_t>(i)])) pg.t.push_back({idx(i, g), B.unit[static_cast<size_t>(i)]});
    detail::normalize(f, pg);
    A->algebra_gens.push_back(pg);
    A->named_elements.push_back({"p_" + detail::sanitize_name(G.label(g)), pg});
  }
  for (const auto& [nm, el] : B.named_elements) A->named_elements.push_back({nm, lift(el)});

  // idempotents e_chi (x) p_g and their projectives B e_chi (x) p_g
  for (size_t c = 0; c < B.idempotents.size(); ++c)
    for (int g = 0; g < ng; ++g) {
      typename HopfAlgebra<F>::Vec e(static_cast<size_t>(d), f.zero());
      for (int i = 0; i < db; ++i)
        e[static_cast<size_t>(idx(i, g))] = B.idempotents[c].vec[static_cast<size_t>(i)];
      A->idempotents.push_back(
          {std::move(e), B.idempotents[c].label + "|" + detail::sanitize_name(G.label(g))});
      const auto& PB = B.projectives[c];
      Matrix<F> basis(A->field, d, PB.basis.cols());
      for (int i = 0; i < db; ++i)
        for (int j = 0; j < PB.basis.cols(); ++j) basis.at(idx(i, g), j) = PB.basis.at(i, j);
      Matrix<F> coord(A->field, PB.coord.rows(), d);
      for (int i = 0; i < PB.coord.rows(); ++i)
        for (int j = 0; j < db; ++j) coord.at(i, idx(j, g)) = PB.coord.at(i, j);
      A->projectives.push_back({std::move(basis), std::move(coord)});
    }

  A->smash = typename HopfAlgebra<F>::SmashData{Bp, G, std::move(action)};
  // S^2(b (x) p_g) = S_B^2(b) (x) p_g since the action commutes with S_B
  A->antipode_involutive = B.antipode_involutive;

  if (run_validator) {
    auto rep = validate_hopf(*A, ValidateOptions{});
    if (!rep.all_pass) {
      std::string wit;
      for (const auto& e : rep.entries)
        if (!e.pass) {
          wit = e.axiom + (e.witness.empty() ? "" : " at " + e.witness);
          break;
        }
      fail(Errc::ValidationFailed, "smash coproduct failed validation: " + wit);
    }
  }
  return A;
}

// ---------------------------------------------------------------------------
// automorphism helpers
// ---------------------------------------------------------------------------

// permutation of group-algebra generators -> algebra automorphism matrix
template <class F>
Matrix<F> group_permutation_automorphism(const HopfAlgebra<F>& A, const std::vector<int>& perm) {
  require(A.group.has_value() && !A.is_dual_group_algebra, Errc::NoActionData,
          "expected a group algebra");
  const auto& G = *A.group;
  require(static_cast<int>(perm.size()) == G.rank(), Errc::NotAutomorphism,
          "permutation size mismatch");
  Matrix<F> m(A.field, A.dim, A.dim);
  for (int g = 0; g < A.dim; ++g) {
    auto e = G.exponents(g);
    std::vector<int> pe(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      require(G.orders[i] == G.orders[static_cast<size_t>(perm[i])], Errc::NotAutomorphism,
              "permutation does not preserve factor orders");
      pe[static_cast<size_t>(perm[i])] = e[i];
    }
    m.at(G.index(pe), g) = A.field->one();
  }
  return m;
}

// permutation of the m quantum index pairs (x_i, g_i) -> automorphism matrix
template <class F>
Matrix<F> quantum_permutation_automorphism(const HopfAlgebra<F>& A, const std::vector<int>& perm) {
  require(A.quantum.has_value(), Errc::NoActionData, "expected a quantum elementary abelian algebra");
  const int m = A.quantum->m;
  const long n = A.quantum->n;
  require(static_cast<int>(perm.size()) == m, Errc::NotAutomorphism, "permutation size mismatch");
  auto exps = [&](int i) {
    std::vector<int> e(static_cast<size_t>(2 * m));
    for (int k = 2 * m - 1; k >= 0; --k) {
      e[static_cast<size_t>(k)] = static_cast<int>(i % n);
      i = static_cast<int>(i / n);
    }
    return e;
  };
  auto index = [&](const std::vector<int>& e) {
    long i = 0;
    for (int k = 0; k < 2 * m; ++k) i = i * n + e[static_cast<size_t>(k)];
    return static_cast<int>(i);
  };
  Matrix<F> out(A.field, A.dim, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    auto e = exps(i);
    std::vector<int> pe(static_cast<size_t>(2 * m));
    for (int k = 0; k < m; ++k) {
      pe[static_cast<size_t>(perm[static_cast<size_t>(k)])] = e[static_cast<size_t>(k)];
      pe[static_cast<size_t>(m + perm[static_cast<size_t>(k)])] = e[static_cast<size_t>(m + k)];
    }
    out.at(index(pe), i) = A.field->one();
  }
  return out;
}

}  // namespace hopfmod
