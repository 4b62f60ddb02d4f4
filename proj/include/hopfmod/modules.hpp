#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/constructions.hpp"
#include "hopfmod/errors.hpp"
#include "hopfmod/hopf_algebra.hpp"
#include "hopfmod/matrix.hpp"

namespace hopfmod {

// ---------------------------------------------------------------------------
// Module: finite dimensional left module as one action matrix per basis elt
// ---------------------------------------------------------------------------

template <class F>
struct Module {
  using Elem = typename F::Elem;

  HopfAlgebraPtr<F> algebra;
  int dim = 0;
  std::vector<Matrix<F>> actions;  // indexed by algebra basis
  std::string label;

  const Matrix<F>& action(int i) const { return actions[static_cast<size_t>(i)]; }

  // action of an arbitrary algebra element
  Matrix<F> act(const SparseVec<F>& a) const {
    Matrix<F> r(algebra->field, dim, dim);
    for (const auto& [i, c] : a.t) r.add_scaled_in_place(actions[static_cast<size_t>(i)], c);
    return r;
  }

  Matrix<F> act_dense(const typename HopfAlgebra<F>::Vec& a) const {
    return act(algebra->sparse_of(a));
  }
};

template <class F>
using ModulePtr = std::shared_ptr<const Module<F>>;

template <class F>
void check_same_algebra(const Module<F>& m, const Module<F>& n) {
  require(m.algebra.get() == n.algebra.get(), Errc::AlgebraMismatch,
          "modules over different algebras: " + m.label + " vs " + n.label);
}

// ---------------------------------------------------------------------------
// basic constructions
// ---------------------------------------------------------------------------

// unit object k, the algebra acting through the counit
template <class F>
ModulePtr<F> trivial_module(const HopfAlgebraPtr<F>& A) {
  auto m = std::make_shared<Module<F>>();
  m->algebra = A;
  m->dim = 1;
  m->label = "k";
  for (int i = 0; i < A->dim; ++i) {
    Matrix<F> a(A->field, 1, 1);
    a.at(0, 0) = A->counit[static_cast<size_t>(i)];
    m->actions.push_back(std::move(a));
  }
  return m;
}

template <class F>
ModulePtr<F> regular_module(const HopfAlgebraPtr<F>& A) {
  auto m = std::make_shared<Module<F>>();
  m->algebra = A;
  m->dim = A->dim;
  m->label = "regular";
  for (int i = 0; i < A->dim; ++i) m->actions.push_back(A->left_mult_matrix(i));
  return m;
}

// A / (left ideal generated by the given elements)
template <class F>
ModulePtr<F> quotient_module(const HopfAlgebraPtr<F>& A, const std::vector<SparseVec<F>>& gens,
                             const std::string& label) {
  const auto& f = *A->field;
  ColumnSpan<F> ideal(A->field, A->dim);
  for (const auto& r : gens) ideal.add_columns(A->right_mult_matrix(r));
  std::vector<bool> is_pivot(static_cast<size_t>(A->dim), false);
  for (int p : ideal.pivots()) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> rows;  // surviving coordinates
  for (int i = 0; i < A->dim; ++i)
    if (!is_pivot[static_cast<size_t>(i)]) rows.push_back(i);
  const int d = static_cast<int>(rows.size());

  using Elem = typename F::Elem;
  auto project = [&](const std::vector<Elem>& v) {
    auto r = ideal.reduce(v);
    std::vector<Elem> out(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] = r[static_cast<size_t>(rows[static_cast<size_t>(i)])];
    return out;
  };

  auto m = std::make_shared<Module<F>>();
  m->algebra = A;
  m->dim = d;
  m->label = label;
  for (int b = 0; b < A->dim; ++b) {
    Matrix<F> act(A->field, d, d);
    for (int c = 0; c < d; ++c) {
      // image of the class of e_{rows[c]} under left multiplication by b
      std::vector<Elem> col(static_cast<size_t>(A->dim), f.zero());
      for (const auto& [k, ck] : A->mult_entry(b, rows[static_cast<size_t>(c)]).t)
        col[static_cast<size_t>(k)] = f.add(col[static_cast<size_t>(k)], ck);
      act.set_column(c, project(col));
    }
    m->actions.push_back(std::move(act));
  }
  return m;
}

// module supported at one component of a smash coproduct: the base algebra
// acts through U, the idempotent 1 (x) p_g picks the module out
template <class F>
ModulePtr<F> module_at_component(const HopfAlgebraPtr<F>& A, const ModulePtr<F>& U, int g,
                                 const std::string& label) {
  require(A->smash.has_value(), Errc::NotSmashCoproduct, A->name + " is not a smash coproduct");
  require(U->algebra.get() == A->smash->base.get(), Errc::AlgebraMismatch,
          "component module must live over the smash base");
  const int ng = A->smash->group.size();
  auto m = std::make_shared<Module<F>>();
  m->algebra = A;
  m->dim = U->dim;
  m->label = label;
  for (int i = 0; i < A->smash->base->dim; ++i)
    for (int h = 0; h < ng; ++h)
      m->actions.push_back(h == g ? U->action(i) : Matrix<F>(A->field, U->dim, U->dim));
  return m;
}

// projective module: one summand A e_chi per entry of counts
template <class F>
ModulePtr<F> projective_module(const HopfAlgebraPtr<F>& A, const std::vector<int>& counts,
                               const std::string& label) {
  require(counts.size() == A->projectives.size(), Errc::MissingIdempotentData,
          "multiplicity vector length mismatch");
  int d = 0;
  for (size_t c = 0; c < counts.size(); ++c)
    d += counts[c] * A->projectives[c].basis.cols();
  auto m = std::make_shared<Module<F>>();
  m->algebra = A;
  m->dim = d;
  m->label = label;
  for (int b = 0; b < A->dim; ++b) {
    Matrix<F> act(A->field, d, d);
    int off = 0;
    auto L = A->left_mult_matrix(b);
    for (size_t c = 0; c < counts.size(); ++c) {
      if (!counts[c]) continue;
      auto block = A->projectives[c].coord.mul(L.mul(A->projectives[c].basis));
      for (int copy = 0; copy < counts[c]; ++copy) {
        for (int i = 0; i < block.rows(); ++i)
          for (int j = 0; j < block.cols(); ++j) act.at(off + i, off + j) = block.at(i, j);
        off += block.rows();
      }
    }
    m->actions.push_back(std::move(act));
  }
  return m;
}

// ---------------------------------------------------------------------------
// validate_module
// ---------------------------------------------------------------------------

template <class F>
ValidationReport validate_module(const Module<F>& m) {
  ValidationReport rep;
  const auto& A = *m.algebra;

  {
    auto rho1 = m.act(A.unit_sparse());
    rep.add("identity-acts-as-identity", rho1 == Matrix<F>::identity(A.field, m.dim));
  }
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i)
      for (int j = 0; j < A.dim && ok; ++j) {
        auto lhs = m.action(i).mul(m.action(j));
        Matrix<F> rhs(A.field, m.dim, m.dim);
        for (const auto& [k, c] : A.mult_entry(i, j).t)
          rhs.add_scaled_in_place(m.action(k), c);
        if (!(lhs == rhs)) {
          ok = false;
          wit = "(" + A.basis_labels[static_cast<size_t>(i)] + ", " +
                A.basis_labels[static_cast<size_t>(j)] + ")";
        }
      }
    rep.add("action-respects-multiplication", ok, wit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// tensor category structure
// ---------------------------------------------------------------------------

// M (x) N along the comultiplication
template <class F>
ModulePtr<F> tensor(const ModulePtr<F>& mp, const ModulePtr<F>& np) {
  const Module<F>& m = *mp;
  const Module<F>& n = *np;
  check_same_algebra(m, n);
  const auto& A = *m.algebra;
  auto out = std::make_shared<Module<F>>();
  out->algebra = m.algebra;
  out->dim = m.dim * n.dim;
  out->label = "(" + m.label + ")(x)(" + n.label + ")";
  for (int a = 0; a < A.dim; ++a) {
    Matrix<F> act(A.field, out->dim, out->dim);
    for (const auto& [i, j, c] : A.comul[static_cast<size_t>(a)].t)
      act.accumulate_kron(c, m.action(i), n.action(j));
    out->actions.push_back(std::move(act));
  }
  return out;
}

// dual module along the antipode: rho*(a) = rho(S(a))^T
template <class F>
ModulePtr<F> dual(const ModulePtr<F>& mp) {
  const Module<F>& m = *mp;
  const auto& A = *m.algebra;
  auto out = std::make_shared<Module<F>>();
  out->algebra = m.algebra;
  out->dim = m.dim;
  out->label = "(" + m.label + ")*";
  for (int a = 0; a < A.dim; ++a) {
    Matrix<F> act(A.field, m.dim, m.dim);
    for (const auto& [j, c] : A.antipode[static_cast<size_t>(a)].t) {
      const auto& rj = m.action(j);
      for (int r = 0; r < m.dim; ++r)
        for (int s = 0; s < m.dim; ++s) {
          if (A.field->is_zero(rj.at(s, r))) continue;
          act.at(r, s) = A.field->add(act.at(r, s), A.field->mul(c, rj.at(s, r)));
        }
    }
    out->actions.push_back(std::move(act));
  }
  return out;
}

template <class F>
ModulePtr<F> direct_sum(const ModulePtr<F>& mp, const ModulePtr<F>& np) {
  const Module<F>& m = *mp;
  const Module<F>& n = *np;
  check_same_algebra(m, n);
  auto out = std::make_shared<Module<F>>();
  out->algebra = m.algebra;
  out->dim = m.dim + n.dim;
  out->label = "(" + m.label + ")+(" + n.label + ")";
  for (int a = 0; a < m.algebra->dim; ++a) {
    Matrix<F> act(m.algebra->field, out->dim, out->dim);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < m.dim; ++j) act.at(i, j) = m.action(a).at(i, j);
    for (int i = 0; i < n.dim; ++i)
      for (int j = 0; j < n.dim; ++j) act.at(m.dim + i, m.dim + j) = n.action(a).at(i, j);
    out->actions.push_back(std::move(act));
  }
  return out;
}

// restriction along an algebra map B -> A given by the images of B's basis
template <class F>
ModulePtr<F> restrict_along(const ModulePtr<F>& mp, const HopfAlgebraPtr<F>& B,
                            const std::vector<SparseVec<F>>& images, const std::string& label) {
  const Module<F>& m = *mp;
  require(static_cast<int>(images.size()) == B->dim, Errc::AlgebraMismatch,
          "need one image per basis element of the subalgebra");
  auto out = std::make_shared<Module<F>>();
  out->algebra = B;
  out->dim = m.dim;
  out->label = label;
  for (int i = 0; i < B->dim; ++i) out->actions.push_back(m.act(images[static_cast<size_t>(i)]));
  return out;
}

// conjugate module: precompose the action with an algebra automorphism
// (sigma should be the map x -> a^-1 . x)
template <class F>
ModulePtr<F> conjugate_by(const ModulePtr<F>& mp, const Matrix<F>& sigma, const std::string& label) {
  const Module<F>& m = *mp;
  require(sigma.rows() == m.algebra->dim && sigma.cols() == m.algebra->dim, Errc::NoActionData,
          "automorphism matrix shape mismatch");
  auto out = std::make_shared<Module<F>>();
  out->algebra = m.algebra;
  out->dim = m.dim;
  out->label = label;
  for (int i = 0; i < m.algebra->dim; ++i) {
    Matrix<F> act(m.algebra->field, m.dim, m.dim);
    for (int j = 0; j < m.algebra->dim; ++j) {
      const auto& c = sigma.at(j, i);
      if (m.algebra->field->is_zero(c)) continue;
      act.add_scaled_in_place(m.action(j), c);
    }
    out->actions.push_back(std::move(act));
  }
  return out;
}

// conjugate of a base-algebra module by a group element of a smash coproduct:
// x ._a n = (a^-1 . x) . n
template <class F>
ModulePtr<F> conjugate(const ModulePtr<F>& mp, const HopfAlgebraPtr<F>& smash_algebra, int a) {
  require(smash_algebra->smash.has_value(), Errc::NoActionData,
          smash_algebra->name + " carries no group action data");
  const auto& sd = *smash_algebra->smash;
  require(mp->algebra.get() == sd.base.get(), Errc::AlgebraMismatch,
          "conjugation acts on modules over the smash base");
  int ainv = sd.group.inverse(a);
  return conjugate_by(mp, sd.action[static_cast<size_t>(ainv)],
                      "^" + sd.group.label(a) + "(" + mp->label + ")");
}

// component M_g = (1 (x) p_g) M of a module over a smash coproduct, as a module
// over the base algebra
template <class F>
ModulePtr<F> component(const ModulePtr<F>& mp, int g) {
  const Module<F>& m = *mp;
  const auto& A = *m.algebra;
  require(A.smash.has_value(), Errc::NotSmashCoproduct, A.name + " is not a smash coproduct");
  const auto& f = *A.field;
  const auto& B = A.smash->base;
  const int ng = A.smash->group.size();

  // idempotent z_g = 1_B (x) p_g
  SparseVec<F> zg;
  for (int i = 0; i < B->dim; ++i)
    if (!f.is_zero(B->unit[static_cast<size_t>(i)]))
      zg.t.push_back({i * ng + g, B->unit[static_cast<size_t>(i)]});

  auto proj = m.act(zg);
  ColumnSpan<F> image(A.field, m.dim);
  image.add_columns(proj);
  const int d = image.dim();

  auto out = std::make_shared<Module<F>>();
  out->algebra = B;
  out->dim = d;
  out->label = "(" + m.label + ")_" + A.smash->group.label(g);
  for (int b = 0; b < B->dim; ++b) {
    // iota(b) = b (x) sum_h p_h acting on the image basis
    SparseVec<F> ib;
    for (int h = 0; h < ng; ++h) ib.t.push_back({b * ng + h, f.one()});
    auto act_full = m.act(ib);
    Matrix<F> act(A.field, d, d);
    for (int c = 0; c < d; ++c) {
      auto v = act_full.mul_vec(image.basis()[static_cast<size_t>(c)]);
      act.set_column(c, image.coordinates(v));
    }
    out->actions.push_back(std::move(act));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hom spaces, isomorphism, rigidity
// ---------------------------------------------------------------------------

template <class F>
struct ModuleMap {
  ModulePtr<F> source, target;
  Matrix<F> matrix;  // target.dim x source.dim

  bool intertwines() const {
    for (int a = 0; a < source->algebra->dim; ++a) {
      if (!(matrix.mul(source->action(a)) == target->action(a).mul(matrix))) return false;
    }
    return true;
  }
};

// basis of Hom_A(m, n), solved from the intertwiner system over the algebra's
// generating set
template <class F>
std::vector<Matrix<F>> hom_space(const ModulePtr<F>& mp, const ModulePtr<F>& np) {
  const Module<F>& m = *mp;
  const Module<F>& n = *np;
  check_same_algebra(m, n);
  const auto& A = *m.algebra;
  const auto& f = *A.field;
  const int dm = m.dim, dn = n.dim;
  const int unknowns = dm * dn;
  if (unknowns == 0) return {};

  std::vector<Matrix<F>> gen_m, gen_n;
  for (const auto& g : A.algebra_gens) {
    gen_m.push_back(m.act(g));
    gen_n.push_back(n.act(g));
  }

  Matrix<F> sys(A.field, static_cast<int>(gen_m.size()) * unknowns, unknowns);
  int row = 0;
  for (size_t g = 0; g < gen_m.size(); ++g) {
    const auto& Gm = gen_m[g];
    const auto& Gn = gen_n[g];
    // unknown T is dn x dm, vec index r*dm + c
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        // (T Gm)[r,c] - (Gn T)[r,c] = 0
        for (int k = 0; k < dm; ++k) {
          const auto& v = Gm.at(k, c);
          if (!f.is_zero(v)) sys.at(row, r * dm + k) = f.add(sys.at(row, r * dm + k), v);
        }
        for (int k = 0; k < dn; ++k) {
          const auto& v = Gn.at(r, k);
          if (!f.is_zero(v))
            sys.at(row, k * dm + c) = f.sub(sys.at(row, k * dm + c), v);
        }
        ++row;
      }
  }
  auto ker = sys.kernel_basis();
  std::vector<Matrix<F>> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    Matrix<F> T(A.field, dn, dm);
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) T.at(r, c) = ker.at(r * dm + c, b);
    basis.push_back(std::move(T));
  }
  return basis;
}

// rigidity: explicit coevaluation k -> M (x) M* and evaluation M* (x) M -> k,
// and the split identity (id (x) ev) n (coev (x) id) = id_M
template <class F>
struct RigiditySplit {
  Matrix<F> coev;  // dim^2 x 1
  Matrix<F> ev;    // 1 x dim^2
  bool coev_is_module_map = false;
  bool ev_is_module_map = false;
  bool composite_is_identity = false;
  bool summand_verified = false;  // triple-tensor intertwining, small modules only

  bool all() const { return coev_is_module_map && ev_is_module_map && composite_is_identity; }
};

template <class F>
RigiditySplit<F> rigidity_split(const ModulePtr<F>& mp, int triple_check_limit = 1200) {
  const Module<F>& m = *mp;
  const auto& A = *m.algebra;
  const auto& f = *A.field;
  const int d = m.dim;
  RigiditySplit<F> out{Matrix<F>(A.field, d * d, 1), Matrix<F>(A.field, 1, d * d)};

  auto mdual = dual(mp);
  auto mmd = tensor(mp, mdual);
  auto mdm = tensor(mdual, mp);

  for (int i = 0; i < d; ++i) {
    out.coev.at(i * d + i, 0) = f.one();
    out.ev.at(0, i * d + i) = f.one();
  }

  out.coev_is_module_map = true;
  out.ev_is_module_map = true;
  for (int a = 0; a < A.dim; ++a) {
    const auto& eps = A.counit[static_cast<size_t>(a)];
    if (!(mmd->action(a).mul(out.coev) == out.coev.scaled(eps))) out.coev_is_module_map = false;
    if (!(out.ev.mul(mdm->action(a)) == out.ev.scaled(eps))) out.ev_is_module_map = false;
    if (!out.coev_is_module_map && !out.ev_is_module_map) break;
  }

  // composite (id (x) ev) n (coev (x) id): M -> (M (x) M*) (x) M -> M
  {
    Matrix<F> iota(A.field, d * d * d, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) iota.at((i * d + i) * d + j, j) = f.one();
    Matrix<F> pi(A.field, d, d * d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) pi.at(a, (a * d + b) * d + b) = f.one();
    out.composite_is_identity = (pi.mul(iota) == Matrix<F>::identity(A.field, d));

    if (static_cast<long>(d) * d * d <= triple_check_limit) {
      auto triple = tensor(mmd, mp);
      bool ok = true;
      for (int a = 0; a < A.dim && ok; ++a)
        ok = triple->action(a).mul(iota) == iota.mul(m.action(a));
      out.summand_verified = ok;
    }
  }
  return out;
}

}  // namespace hopfmod
