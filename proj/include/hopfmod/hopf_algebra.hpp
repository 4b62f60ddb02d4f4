#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/errors.hpp"
#include "hopfmod/fields.hpp"
#include "hopfmod/group.hpp"
#include "hopfmod/matrix.hpp"

namespace hopfmod {

// Sparse coefficient vector over the algebra basis, terms sorted by index.
template <class F>
struct SparseVec {
  using Elem = typename F::Elem;
  std::vector<std::pair<int, Elem>> t;

  static SparseVec unit(int idx, Elem c) { return SparseVec{{{idx, std::move(c)}}}; }
  bool empty() const { return t.empty(); }
};

// Sparse element of A (x) A, terms sorted by (i, j).
template <class F>
struct SparsePair {
  using Elem = typename F::Elem;
  std::vector<std::tuple<int, int, Elem>> t;
};

// ---------------------------------------------------------------------------
// HopfAlgebra: structure constants + Delta/epsilon/S + homological data
// ---------------------------------------------------------------------------

// Finite dimensional Hopf algebra over F.  Multiplication is a sparse
// structure-constant table; Delta, epsilon, S are stored per basis element.
// Constructors additionally supply the Jacobson radical basis, a complete set
// of primitive orthogonal idempotents (all in-scope algebras are basic with
// one-dimensional simples), explicit bases of the projective indecomposables
// A e_chi, a small generating set, and left-ideal generators of the radical.
// Instances are immutable after construction and shared via shared_ptr.
template <class F>
struct HopfAlgebra {
  using Elem = typename F::Elem;
  using FieldPtr = std::shared_ptr<const F>;
  using Vec = std::vector<Elem>;

  FieldPtr field;
  int dim = 0;
  std::string name;
  std::vector<std::string> basis_labels;

  std::vector<SparseVec<F>> mult;      // mult[i*dim+j] = b_i b_j
  Vec unit;                            // coefficients of 1
  std::vector<SparsePair<F>> comul;    // Delta(b_i)
  Vec counit;                          // epsilon(b_i)
  std::vector<SparseVec<F>> antipode;  // S(b_i)

  Matrix<F> radical_basis;  // dim x r, columns span J(A)
  int nilpotency_bound = 0; // certified bound on the nilpotency index of J
  std::vector<SparseVec<F>> radical_left_gens;  // J = sum A * gen
  std::vector<SparseVec<F>> algebra_gens;       // generate A as unital algebra

  struct Idempotent {
    Vec vec;
    std::string label;
  };
  std::vector<Idempotent> idempotents;
  bool idempotents_complete = true;

  // basis of each projective indecomposable A e_chi, with a coordinate map
  // (coord * basis = identity on the summand)
  struct ProjSummand {
    Matrix<F> basis;  // dim x d
    Matrix<F> coord;  // d x dim
  };
  std::vector<ProjSummand> projectives;

  // named elements for the expression grammar (g1, x2, p_h, ...)
  std::vector<std::pair<std::string, SparseVec<F>>> named_elements;

  // rank-variety support: which shifted-subgroup theory applies
  struct RankVarietySupport {
    enum class Kind { None, ElementaryAbelian, QuantumLine };
    Kind kind = Kind::None;
    int nvars = 0;    // number of lambda variables
    int nildeg = 0;   // p, or n for the quantum line
    std::vector<SparseVec<F>> xelems;  // the nilpotent generators x_i
  };
  RankVarietySupport rank_variety;

  // smash-coproduct metadata (component slicing, conjugation)
  struct SmashData {
    std::shared_ptr<const HopfAlgebra<F>> base;
    GroupPresentation group;
    std::vector<Matrix<F>> action;  // per group element: Hopf automorphism of base
    // basis layout: index = base_index * |G| + group_index
  };
  std::optional<SmashData> smash;

  std::optional<GroupPresentation> group;  // for kG and k[G]
  bool is_dual_group_algebra = false;

  // quantum elementary abelian shape (m generators pairs, order n)
  struct QuantumShape {
    int m = 0;
    long n = 0;
  };
  std::optional<QuantumShape> quantum;

  bool antipode_involutive = false;  // S n S == id, computed at construction

  // -------------------------------------------------------------------------
  // element arithmetic
  // -------------------------------------------------------------------------

  SparseVec<F> sparse_of(const Vec& v) const {
    SparseVec<F> s;
    for (int i = 0; i < dim; ++i)
      if (!field->is_zero(v[static_cast<size_t>(i)])) s.t.push_back({i, v[static_cast<size_t>(i)]});
    return s;
  }

  Vec dense_of(const SparseVec<F>& s) const {
    Vec v(static_cast<size_t>(dim), field->zero());
    for (const auto& [i, c] : s.t)
      v[static_cast<size_t>(i)] = field->add(v[static_cast<size_t>(i)], c);
    return v;
  }

  const SparseVec<F>& mult_entry(int i, int j) const {
    return mult[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
  }

  Vec mul_elems(const SparseVec<F>& a, const SparseVec<F>& b) const {
    Vec out(static_cast<size_t>(dim), field->zero());
    for (const auto& [i, ca] : a.t)
      for (const auto& [j, cb] : b.t) {
        Elem c = field->mul(ca, cb);
        if (field->is_zero(c)) continue;
        for (const auto& [k, ck] : mult_entry(i, j).t)
          out[static_cast<size_t>(k)] = field->add(out[static_cast<size_t>(k)], field->mul(c, ck));
      }
    return out;
  }

  // sparse product, accumulated into a reusable buffer (sorted, zero-free)
  void mul_sparse_into(const SparseVec<F>& a, const SparseVec<F>& b,
                       std::vector<std::pair<int, Elem>>& acc) const {
    acc.clear();
    for (const auto& [i, ca] : a.t)
      for (const auto& [j, cb] : b.t) {
        Elem c = field->mul(ca, cb);
        if (field->is_zero(c)) continue;
        for (const auto& [k, ck] : mult_entry(i, j).t) acc.push_back({k, field->mul(c, ck)});
      }
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    size_t out = 0;
    for (size_t i = 0; i < acc.size();) {
      int key = acc[i].first;
      Elem sum = std::move(acc[i].second);
      for (++i; i < acc.size() && acc[i].first == key; ++i) sum = field->add(sum, acc[i].second);
      if (!field->is_zero(sum)) acc[out++] = {key, std::move(sum)};
    }
    acc.resize(out);
  }

  SparseVec<F> mul_sparse(const SparseVec<F>& a, const SparseVec<F>& b) const {
    SparseVec<F> s;
    mul_sparse_into(a, b, s.t);
    return s;
  }

  Vec mul_dense(const Vec& a, const Vec& b) const {
    return mul_elems(sparse_of(a), sparse_of(b));
  }

  Elem counit_of(const SparseVec<F>& a) const {
    Elem e = field->zero();
    for (const auto& [i, c] : a.t) e = field->add(e, field->mul(c, counit[static_cast<size_t>(i)]));
    return e;
  }

  SparseVec<F> antipode_of(const SparseVec<F>& a) const {
    Vec out(static_cast<size_t>(dim), field->zero());
    for (const auto& [i, c] : a.t)
      for (const auto& [j, cj] : antipode[static_cast<size_t>(i)].t)
        out[static_cast<size_t>(j)] = field->add(out[static_cast<size_t>(j)], field->mul(c, cj));
    return sparse_of(out);
  }

  SparsePair<F> comul_of(const SparseVec<F>& a) const {
    std::vector<std::pair<std::uint64_t, Elem>> acc;
    for (const auto& [i, c] : a.t)
      for (const auto& [x, y, cx] : comul[static_cast<size_t>(i)].t)
        acc.push_back({static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(dim) + y,
                       field->mul(c, cx)});
    std::sort(acc.begin(), acc.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    SparsePair<F> out;
    for (size_t i = 0; i < acc.size();) {
      std::uint64_t key = acc[i].first;
      Elem sum = std::move(acc[i].second);
      for (++i; i < acc.size() && acc[i].first == key; ++i) sum = field->add(sum, acc[i].second);
      if (!field->is_zero(sum))
        out.t.push_back({static_cast<int>(key / static_cast<std::uint64_t>(dim)),
                         static_cast<int>(key % static_cast<std::uint64_t>(dim)), std::move(sum)});
    }
    return out;
  }

  // left multiplication matrix L(b_i)
  Matrix<F> left_mult_matrix(int i) const {
    Matrix<F> m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
      for (const auto& [k, c] : mult_entry(i, j).t) m.at(k, j) = field->add(m.at(k, j), c);
    return m;
  }

  // left multiplication by an arbitrary element
  Matrix<F> left_mult_matrix(const SparseVec<F>& a) const {
    Matrix<F> m(field, dim, dim);
    for (const auto& [i, ca] : a.t)
      for (int j = 0; j < dim; ++j)
        for (const auto& [k, c] : mult_entry(i, j).t)
          m.at(k, j) = field->add(m.at(k, j), field->mul(ca, c));
    return m;
  }

  // right multiplication matrix by an element (column j = b_j * a)
  Matrix<F> right_mult_matrix(const SparseVec<F>& a) const {
    Matrix<F> m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
      for (const auto& [i, ca] : a.t)
        for (const auto& [k, c] : mult_entry(j, i).t)
          m.at(k, j) = field->add(m.at(k, j), field->mul(ca, c));
    return m;
  }

  SparseVec<F> unit_sparse() const { return sparse_of(unit); }

  SparseVec<F> named(const std::string& n) const {
    for (const auto& [nm, el] : named_elements)
      if (nm == n) return el;
    fail(Errc::ParseError, "unknown element name '" + n + "' in algebra " + name);
  }

  int basis_index_of_label(const std::string& l) const {
    for (int i = 0; i < dim; ++i)
      if (basis_labels[static_cast<size_t>(i)] == l) return i;
    return -1;
  }

  bool same_algebra(const HopfAlgebra& o) const { return this == &o; }
};

template <class F>
using HopfAlgebraPtr = std::shared_ptr<const HopfAlgebra<F>>;

// ---------------------------------------------------------------------------
// validate_hopf
// ---------------------------------------------------------------------------

struct ValidationEntry {
  std::string axiom;
  bool pass = true;
  std::string witness;  // empty on pass, or an informational note
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool all_pass = true;

  void add(const std::string& axiom, bool pass, const std::string& witness = "") {
    entries.push_back({axiom, pass, witness});
    all_pass = all_pass && pass;
  }

  std::string summary() const {
    std::ostringstream os;
    for (const auto& e : entries) {
      os << (e.pass ? "  pass  " : "  FAIL  ") << e.axiom;
      if (!e.witness.empty()) os << "  [" << e.witness << "]";
      os << "\n";
    }
    return os.str();
  }
};

struct ValidateOptions {
  bool check_radical = true;
  // exact nilpotency chain is run when dim <= this bound; above it the
  // constructor-certified bound plus element-nilpotence probes are used
  int exact_nilpotency_dim_galois = 64;
  int exact_nilpotency_dim_cyclotomic = 32;
};

namespace detail {

template <class F>
bool pair_equal(const F& f, const SparsePair<F>& a, const SparsePair<F>& b) {
  // both are sorted and stripped of zero terms
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (i >= a.t.size() || j >= b.t.size()) return false;
    if (std::get<0>(a.t[i]) != std::get<0>(b.t[j]) || std::get<1>(a.t[i]) != std::get<1>(b.t[j]))
      return false;
    if (!f.eq(std::get<2>(a.t[i]), std::get<2>(b.t[j]))) return false;
    ++i;
    ++j;
  }
  return true;
}

template <class F>
bool vec_equal(const F& f, const std::vector<typename F::Elem>& a,
               const std::vector<typename F::Elem>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!f.eq(a[i], b[i])) return false;
  return true;
}

// combine a flat (key, value) accumulation into sorted zero-free form
template <class F>
void combine_keyed(const F& f, std::vector<std::pair<std::uint64_t, typename F::Elem>>& acc) {
  std::sort(acc.begin(), acc.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  size_t out = 0;
  for (size_t i = 0; i < acc.size();) {
    std::uint64_t key = acc[i].first;
    auto sum = std::move(acc[i].second);
    for (++i; i < acc.size() && acc[i].first == key; ++i) sum = f.add(sum, acc[i].second);
    if (!f.is_zero(sum)) acc[out++] = {key, std::move(sum)};
  }
  acc.resize(out);
}

// product in A (x) A, accumulated sparsely
template <class F>
SparsePair<F> pair_mul(const HopfAlgebra<F>& A, const SparsePair<F>& a, const SparsePair<F>& b) {
  const auto& f = *A.field;
  std::vector<std::pair<std::uint64_t, typename F::Elem>> acc;
  acc.reserve(a.t.size() * b.t.size());
  for (const auto& [x1, y1, c1] : a.t)
    for (const auto& [x2, y2, c2] : b.t) {
      auto c = f.mul(c1, c2);
      if (f.is_zero(c)) continue;
      for (const auto& [u, cu] : A.mult_entry(x1, x2).t)
        for (const auto& [v, cv] : A.mult_entry(y1, y2).t) {
          auto w = f.mul(c, f.mul(cu, cv));
          if (f.is_zero(w)) continue;
          acc.push_back({static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(A.dim) + v,
                         std::move(w)});
        }
    }
  combine_keyed(f, acc);
  SparsePair<F> out;
  for (auto& [key, v] : acc)
    out.t.push_back({static_cast<int>(key / static_cast<std::uint64_t>(A.dim)),
                     static_cast<int>(key % static_cast<std::uint64_t>(A.dim)), std::move(v)});
  return out;
}

}  // namespace detail

// Axiom-by-axiom check of the full Hopf structure plus the homological data
// (radical, idempotents, projectives).  Failures are report entries with a
// witness basis element, never exceptions.
template <class F>
ValidationReport validate_hopf(const HopfAlgebra<F>& A, const ValidateOptions& opt = {}) {
  ValidationReport rep;
  const auto& f = *A.field;
  using Elem = typename F::Elem;
  const int d = A.dim;

  auto label = [&](int i) { return A.basis_labels[static_cast<size_t>(i)]; };

  // --- unit ---
  {
    bool ok = true;
    std::string wit;
    SparseVec<F> one = A.unit_sparse();
    for (int i = 0; i < d && ok; ++i) {
      SparseVec<F> bi = SparseVec<F>::unit(i, f.one());
      auto li = A.mul_elems(one, bi);
      auto ri = A.mul_elems(bi, one);
      typename HopfAlgebra<F>::Vec ei(static_cast<size_t>(d), f.zero());
      ei[static_cast<size_t>(i)] = f.one();
      if (!detail::vec_equal(f, li, ei) || !detail::vec_equal(f, ri, ei)) {
        ok = false;
        wit = label(i);
      }
    }
    rep.add("unit", ok, wit);
  }

  // --- associativity on basis triples (sparse; tables are near-monomial) ---
  {
    bool ok = true;
    std::string wit;
    std::vector<std::pair<int, Elem>> lhs, rhs;
    auto combine = [&f](std::vector<std::pair<int, Elem>>& acc) {
      std::sort(acc.begin(), acc.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      size_t out = 0;
      for (size_t i = 0; i < acc.size();) {
        int key = acc[i].first;
        auto sum = std::move(acc[i].second);
        for (++i; i < acc.size() && acc[i].first == key; ++i) sum = f.add(sum, acc[i].second);
        if (!f.is_zero(sum)) acc[out++] = {key, std::move(sum)};
      }
      acc.resize(out);
    };
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        const auto& ij = A.mult_entry(i, j);
        for (int k = 0; k < d && ok; ++k) {
          lhs.clear();
          rhs.clear();
          for (const auto& [l, c] : ij.t)
            for (const auto& [m, cm] : A.mult_entry(l, k).t) lhs.push_back({m, f.mul(c, cm)});
          for (const auto& [l, c] : A.mult_entry(j, k).t)
            for (const auto& [m, cm] : A.mult_entry(i, l).t) rhs.push_back({m, f.mul(c, cm)});
          combine(lhs);
          combine(rhs);
          bool eq = lhs.size() == rhs.size();
          for (size_t t = 0; eq && t < lhs.size(); ++t)
            eq = lhs[t].first == rhs[t].first && f.eq(lhs[t].second, rhs[t].second);
          if (!eq) {
            ok = false;
            wit = "(" + label(i) + ", " + label(j) + ", " + label(k) + ")";
          }
        }
      }
    rep.add("associativity", ok, wit);
  }

  // --- counit is an algebra homomorphism ---
  {
    bool ok = true;
    std::string wit;
    if (!f.eq(A.counit_of(A.unit_sparse()), f.one())) {
      ok = false;
      wit = "epsilon(1) != 1";
    }
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        Elem lhs = f.zero();
        for (const auto& [k, c] : A.mult_entry(i, j).t)
          lhs = f.add(lhs, f.mul(c, A.counit[static_cast<size_t>(k)]));
        Elem rhs = f.mul(A.counit[static_cast<size_t>(i)], A.counit[static_cast<size_t>(j)]);
        if (!f.eq(lhs, rhs)) {
          ok = false;
          wit = "(" + label(i) + ", " + label(j) + ")";
        }
      }
    rep.add("counit-homomorphism", ok, wit);
  }

  // --- comultiplication is an algebra homomorphism ---
  {
    bool ok = true;
    std::string wit;
    auto delta_one = A.comul_of(A.unit_sparse());
    SparsePair<F> one_one;
    {
      auto u = A.unit_sparse();
      for (const auto& [i, ci] : u.t)
        for (const auto& [j, cj] : u.t) one_one.t.push_back({i, j, f.mul(ci, cj)});
      std::sort(one_one.t.begin(), one_one.t.end(), [](const auto& a, const auto& b) {
        return std::make_pair(std::get<0>(a), std::get<1>(a)) <
               std::make_pair(std::get<0>(b), std::get<1>(b));
      });
    }
    if (!detail::pair_equal(f, delta_one, one_one)) {
      ok = false;
      wit = "Delta(1) != 1 (x) 1";
    }
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        SparseVec<F> prod;
        prod.t.assign(A.mult_entry(i, j).t.begin(), A.mult_entry(i, j).t.end());
        auto lhs = A.comul_of(prod);
        auto rhs = detail::pair_mul(A, A.comul[static_cast<size_t>(i)], A.comul[static_cast<size_t>(j)]);
        if (!detail::pair_equal(f, lhs, rhs)) {
          ok = false;
          wit = "(" + label(i) + ", " + label(j) + ")";
        }
      }
    rep.add("comultiplication-homomorphism", ok, wit);
  }

  // --- antipode is an algebra anti-homomorphism ---
  {
    bool ok = true;
    std::string wit;
    {
      auto s1 = A.antipode_of(A.unit_sparse());
      if (!detail::vec_equal(f, A.dense_of(s1), A.unit)) {
        ok = false;
        wit = "S(1) != 1";
      }
    }
    std::vector<std::pair<int, Elem>> sp, rhs;
    for (int i = 0; i < d && ok; ++i)
      for (int j = 0; j < d && ok; ++j) {
        // S(b_i b_j), accumulated sparsely
        sp.clear();
        for (const auto& [k, c] : A.mult_entry(i, j).t)
          for (const auto& [u, cu] : A.antipode[static_cast<size_t>(k)].t)
            sp.push_back({u, f.mul(c, cu)});
        A.mul_sparse_into(A.antipode[static_cast<size_t>(j)], A.antipode[static_cast<size_t>(i)], rhs);
        std::sort(sp.begin(), sp.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        size_t out = 0;
        for (size_t t = 0; t < sp.size();) {
          int key = sp[t].first;
          auto sum = std::move(sp[t].second);
          for (++t; t < sp.size() && sp[t].first == key; ++t) sum = f.add(sum, sp[t].second);
          if (!f.is_zero(sum)) sp[out++] = {key, std::move(sum)};
        }
        sp.resize(out);
        bool eq = sp.size() == rhs.size();
        for (size_t t = 0; eq && t < sp.size(); ++t)
          eq = sp[t].first == rhs[t].first && f.eq(sp[t].second, rhs[t].second);
        if (!eq) {
          ok = false;
          wit = "(" + label(i) + ", " + label(j) + ")";
        }
      }
    rep.add("antipode-antihomomorphism", ok, wit);
  }

  // --- coassociativity ---
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      std::map<std::uint64_t, Elem> lhs, rhs;
      for (const auto& [x, y, c] : A.comul[static_cast<size_t>(i)].t) {
        // (Delta (x) 1): expand x
        for (const auto& [u, v, cu] : A.comul[static_cast<size_t>(x)].t) {
          std::uint64_t key =
              (static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(d) + v) *
                  static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(y);
          auto w = f.mul(c, cu);
          auto it = lhs.find(key);
          if (it == lhs.end())
            lhs.emplace(key, std::move(w));
          else
            it->second = f.add(it->second, w);
        }
        // (1 (x) Delta): expand y
        for (const auto& [u, v, cu] : A.comul[static_cast<size_t>(y)].t) {
          std::uint64_t key =
              (static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(d) + u) *
                  static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(v);
          auto w = f.mul(c, cu);
          auto it = rhs.find(key);
          if (it == rhs.end())
            rhs.emplace(key, std::move(w));
          else
            it->second = f.add(it->second, w);
        }
      }
      for (auto it = lhs.begin(); it != lhs.end();)
        it = f.is_zero(it->second) ? lhs.erase(it) : std::next(it);
      for (auto it = rhs.begin(); it != rhs.end();)
        it = f.is_zero(it->second) ? rhs.erase(it) : std::next(it);
      bool eq = lhs.size() == rhs.size();
      if (eq)
        for (auto &[k, v] : lhs) {
          auto it = rhs.find(k);
          if (it == rhs.end() || !f.eq(v, it->second)) {
            eq = false;
            break;
          }
        }
      if (!eq) {
        ok = false;
        wit = label(i);
      }
    }
    rep.add("coassociativity", ok, wit);
  }

  // --- counit property ---
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      typename HopfAlgebra<F>::Vec le(static_cast<size_t>(d), f.zero());
      typename HopfAlgebra<F>::Vec re(static_cast<size_t>(d), f.zero());
      for (const auto& [x, y, c] : A.comul[static_cast<size_t>(i)].t) {
        le[static_cast<size_t>(y)] =
            f.add(le[static_cast<size_t>(y)], f.mul(c, A.counit[static_cast<size_t>(x)]));
        re[static_cast<size_t>(x)] =
            f.add(re[static_cast<size_t>(x)], f.mul(c, A.counit[static_cast<size_t>(y)]));
      }
      typename HopfAlgebra<F>::Vec ei(static_cast<size_t>(d), f.zero());
      ei[static_cast<size_t>(i)] = f.one();
      if (!detail::vec_equal(f, le, ei) || !detail::vec_equal(f, re, ei)) {
        ok = false;
        wit = label(i);
      }
    }
    rep.add("counit-property", ok, wit);
  }

  // --- antipode property ---
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      typename HopfAlgebra<F>::Vec le(static_cast<size_t>(d), f.zero());
      typename HopfAlgebra<F>::Vec re(static_cast<size_t>(d), f.zero());
      for (const auto& [x, y, c] : A.comul[static_cast<size_t>(i)].t) {
        // S(a1) a2
        auto sx = A.antipode[static_cast<size_t>(x)];
        for (const auto& [u, cu] : sx.t)
          for (const auto& [k, ck] : A.mult_entry(u, y).t)
            le[static_cast<size_t>(k)] = f.add(le[static_cast<size_t>(k)], f.mul(c, f.mul(cu, ck)));
        // a1 S(a2)
        auto sy = A.antipode[static_cast<size_t>(y)];
        for (const auto& [u, cu] : sy.t)
          for (const auto& [k, ck] : A.mult_entry(x, u).t)
            re[static_cast<size_t>(k)] = f.add(re[static_cast<size_t>(k)], f.mul(c, f.mul(cu, ck)));
      }
      typename HopfAlgebra<F>::Vec target(static_cast<size_t>(d), f.zero());
      const Elem& eps = A.counit[static_cast<size_t>(i)];
      for (int k = 0; k < d; ++k) target[static_cast<size_t>(k)] = f.mul(eps, A.unit[static_cast<size_t>(k)]);
      if (!detail::vec_equal(f, le, target) || !detail::vec_equal(f, re, target)) {
        ok = false;
        wit = label(i);
      }
    }
    rep.add("antipode-property", ok, wit);
  }

  // --- classical consequences: eps n S = eps, Delta n S = (S (x) S) n tau n Delta ---
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      if (!f.eq(A.counit_of(A.antipode[static_cast<size_t>(i)]), A.counit[static_cast<size_t>(i)])) {
        ok = false;
        wit = "eps(S(" + label(i) + "))";
        break;
      }
      auto lhs = A.comul_of(A.antipode[static_cast<size_t>(i)]);
      // (S (x) S)(tau(Delta(b_i)))
      std::map<std::uint64_t, Elem> acc;
      for (const auto& [x, y, c] : A.comul[static_cast<size_t>(i)].t)
        for (const auto& [u, cu] : A.antipode[static_cast<size_t>(y)].t)
          for (const auto& [v, cv] : A.antipode[static_cast<size_t>(x)].t) {
            std::uint64_t key = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(d) + v;
            auto w = f.mul(c, f.mul(cu, cv));
            auto it = acc.find(key);
            if (it == acc.end())
              acc.emplace(key, std::move(w));
            else
              it->second = f.add(it->second, w);
          }
      SparsePair<F> rhs;
      for (auto& [key, v] : acc) {
        if (f.is_zero(v)) continue;
        rhs.t.push_back({static_cast<int>(key / static_cast<std::uint64_t>(d)),
                         static_cast<int>(key % static_cast<std::uint64_t>(d)), v});
      }
      if (!detail::pair_equal(f, lhs, rhs)) {
        ok = false;
        wit = "Delta(S(" + label(i) + "))";
      }
    }
    rep.add("antipode-consequences", ok, wit);
  }

  // --- generators generate ---
  {
    ColumnSpan<F> span(A.field, d);
    span.add(A.unit);
    std::vector<typename HopfAlgebra<F>::Vec> frontier{A.unit};
    while (!frontier.empty() && span.dim() < d) {
      std::vector<typename HopfAlgebra<F>::Vec> next;
      for (const auto& v : frontier)
        for (const auto& g : A.algebra_gens) {
          auto w = A.mul_elems(g, A.sparse_of(v));
          if (span.add(w)) next.push_back(w);
        }
      frontier = std::move(next);
    }
    rep.add("generators-generate", span.dim() == d,
            span.dim() == d ? "" : "span dim " + std::to_string(span.dim()) + " < " + std::to_string(d));
  }

  if (!opt.check_radical) return rep;

  // --- radical: two-sided ideal (checked against the generating set) ---
  const int r = A.radical_basis.cols();
  ColumnSpan<F> jspan(A.field, d);
  jspan.add_columns(A.radical_basis);
  {
    bool ok = jspan.dim() == r;
    std::string wit = ok ? "" : "radical basis is dependent";
    for (int k = 0; k < r && ok; ++k) {
      auto col = A.sparse_of(A.radical_basis.column(k));
      for (const auto& g : A.algebra_gens) {
        if (!jspan.contains(A.mul_elems(g, col)) || !jspan.contains(A.mul_elems(col, g))) {
          ok = false;
          wit = "column " + std::to_string(k);
          break;
        }
      }
    }
    rep.add("radical-ideal", ok, wit);
  }

  // --- radical nilpotency ---
  {
    bool exact = (A.field->characteristic() > 0)
                     ? d <= opt.exact_nilpotency_dim_galois
                     : d <= opt.exact_nilpotency_dim_cyclotomic;
    bool ok = true;
    std::string note;
    if (exact) {
      // chain J, J^2, ... must reach zero
      std::vector<typename HopfAlgebra<F>::Vec> power;
      for (int k = 0; k < r; ++k) power.push_back(A.radical_basis.column(k));
      int steps = 1;
      while (!power.empty() && steps <= d + 1) {
        ColumnSpan<F> next(A.field, d);
        for (int k = 0; k < r; ++k) {
          auto jk = A.sparse_of(A.radical_basis.column(k));
          for (const auto& v : power) next.add(A.mul_elems(jk, A.sparse_of(v)));
        }
        power.clear();
        for (const auto& b : next.basis()) power.push_back(b);
        ++steps;
      }
      ok = power.empty();
      note = ok ? "exact chain, index " + std::to_string(steps) : "J^" + std::to_string(steps) + " still nonzero";
    } else {
      ok = A.nilpotency_bound > 0;
      note = ok ? "certified bound " + std::to_string(A.nilpotency_bound) : "no certified bound";
      // probe: each radical basis element is nilpotent
      for (int k = 0; k < r && ok; ++k) {
        auto v = A.radical_basis.column(k);
        int s = 1;
        while (s <= A.nilpotency_bound) {
          bool zero = true;
          for (const auto& x : v)
            if (!f.is_zero(x)) {
              zero = false;
              break;
            }
          if (zero) break;
          v = A.mul_dense(v, A.radical_basis.column(k));
          ++s;
        }
        bool zero = true;
        for (const auto& x : v)
          if (!f.is_zero(x)) zero = false;
        if (!zero) {
          ok = false;
          note = "radical column " + std::to_string(k) + " not nilpotent within bound";
        }
      }
    }
    rep.add("radical-nilpotency", ok, note);
  }

  // --- radical complement: A = J + span(e_chi), idempotents orthogonal, sum 1 ---
  {
    bool ok = true;
    std::string wit;
    const auto& es = A.idempotents;
    for (size_t a = 0; a < es.size() && ok; ++a)
      for (size_t b = 0; b < es.size() && ok; ++b) {
        auto prod = A.mul_dense(es[a].vec, es[b].vec);
        if (a == b ? !detail::vec_equal(f, prod, es[a].vec)
                   : !A.sparse_of(prod).empty()) {
          ok = false;
          wit = "e_" + es[a].label + " e_" + es[b].label;
        }
      }
    if (ok && A.idempotents_complete) {
      typename HopfAlgebra<F>::Vec sum(static_cast<size_t>(d), f.zero());
      for (const auto& e : es)
        for (int i = 0; i < d; ++i)
          sum[static_cast<size_t>(i)] = f.add(sum[static_cast<size_t>(i)], e.vec[static_cast<size_t>(i)]);
      if (!detail::vec_equal(f, sum, A.unit)) {
        ok = false;
        wit = "sum of idempotents != 1";
      }
      if (ok && static_cast<int>(es.size()) + jspan.dim() != d) {
        ok = false;
        wit = "dim J + #simples != dim A";
      }
      if (ok) {
        ColumnSpan<F> whole(A.field, d);
        whole.add_columns(A.radical_basis);
        for (const auto& e : es) whole.add(e.vec);
        if (whole.dim() != d) {
          ok = false;
          wit = "J + span(e_chi) != A";
        }
      }
    }
    rep.add("radical-complement", ok,
            ok && !A.idempotents_complete ? "idempotent set incomplete over " + f.describe() : wit);
  }

  // --- projective summand data coheres ---
  {
    bool ok = A.projectives.size() == A.idempotents.size();
    std::string wit = ok ? "" : "summand count mismatch";
    for (size_t c = 0; c < A.projectives.size() && ok; ++c) {
      const auto& P = A.projectives[c];
      auto prod = P.coord.mul(P.basis);
      if (!(prod == Matrix<F>::identity(A.field, P.basis.cols()))) {
        ok = false;
        wit = "coord * basis != I for " + A.idempotents[c].label;
        break;
      }
      // each basis column lies in A e_chi: v * e_chi = v
      auto re = A.right_mult_matrix(A.sparse_of(A.idempotents[c].vec));
      if (!(re.mul(P.basis) == P.basis)) {
        ok = false;
        wit = "basis not inside A e_" + A.idempotents[c].label;
      }
    }
    rep.add("projective-summands", ok, wit);
  }

  return rep;
}

}  // namespace hopfmod
