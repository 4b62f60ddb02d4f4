#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/errors.hpp"
#include "hopfmod/matrix.hpp"
#include "hopfmod/modules.hpp"

namespace hopfmod {

// ---------------------------------------------------------------------------
// top(M) = M / JM, decomposed over the one-dimensional simples
// ---------------------------------------------------------------------------

template <class F>
struct TopDecomposition {
  std::vector<int> multiplicities;  // per idempotent
  int radical_image_dim = 0;        // dim JM
  // one lift per cover summand: (idempotent index, vector in e_chi M whose
  // class spans a line of the chi-isotypic part of M/JM)
  std::vector<std::pair<int, std::vector<typename F::Elem>>> lifts;

  int total() const {
    int t = 0;
    for (int m : multiplicities) t += m;
    return t;
  }
};

// span of J*M, computed from the radical's left-ideal generators and closed
// under the algebra generators
template <class F>
ColumnSpan<F> radical_image(const Module<F>& m) {
  const auto& A = *m.algebra;
  ColumnSpan<F> span(A.field, m.dim);
  if (A.radical_basis.cols() == 0) return span;
  require(!A.radical_left_gens.empty(), Errc::MissingRadicalData,
          A.name + " has a radical but no left-ideal generators");
  for (const auto& r : A.radical_left_gens) span.add_columns(m.act(r));
  std::vector<Matrix<F>> gen_actions;
  for (const auto& g : A.algebra_gens) gen_actions.push_back(m.act(g));
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = span.basis();
    for (const auto& v : snapshot)
      for (const auto& ga : gen_actions)
        if (span.add(ga.mul_vec(v))) grew = true;
  }
  return span;
}

template <class F>
TopDecomposition<F> top(const Module<F>& m) {
  const auto& A = *m.algebra;
  require(A.idempotents_complete, Errc::MissingIdempotentData,
          A.name + " has incomplete idempotent data");

  auto jm = radical_image(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.dim), false);
  for (int p : jm.pivots()) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<int> rows;
  for (int i = 0; i < m.dim; ++i)
    if (!is_pivot[static_cast<size_t>(i)]) rows.push_back(i);
  const int t = static_cast<int>(rows.size());

  TopDecomposition<F> out;
  out.radical_image_dim = jm.dim();
  out.multiplicities.assign(A.idempotents.size(), 0);

  auto project = [&](const std::vector<typename F::Elem>& v) {
    auto r = jm.reduce(v);
    std::vector<typename F::Elem> q(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) q[static_cast<size_t>(i)] = r[static_cast<size_t>(rows[static_cast<size_t>(i)])];
    return q;
  };

  for (size_t c = 0; c < A.idempotents.size(); ++c) {
    auto e_act = m.act_dense(A.idempotents[c].vec);
    // induced map on M/JM in the surviving coordinates
    Matrix<F> induced(A.field, t, t);
    std::vector<std::vector<typename F::Elem>> images(static_cast<size_t>(t));
    for (int j = 0; j < t; ++j) {
      images[static_cast<size_t>(j)] = e_act.column(rows[static_cast<size_t>(j)]);
      induced.set_column(j, project(images[static_cast<size_t>(j)]));
    }
    auto ech = induced.rref();
    out.multiplicities[c] = ech.rank;
    for (int pc : ech.pivot_cols)
      out.lifts.push_back({static_cast<int>(c), images[static_cast<size_t>(pc)]});
  }
  require(out.total() + out.radical_image_dim >= m.dim, Errc::InternalError,
          "top decomposition lost dimensions");
  return out;
}

// ---------------------------------------------------------------------------
// projective cover
// ---------------------------------------------------------------------------

template <class F>
struct ProjectiveCover {
  ModulePtr<F> cover_module;
  Matrix<F> cover_map;  // dim M x dim P, surjective, kernel inside J P
  std::vector<int> multiplicities;
  int cover_dim = 0;
};

// cover map columns for one summand: b in A e_chi acts on the lift w
template <class F>
Matrix<F> cover_columns(const Module<F>& m, const Matrix<F>& summand_basis,
                        const std::vector<typename F::Elem>& lift) {
  const auto& A = *m.algebra;
  Matrix<F> orbit(A.field, m.dim, A.dim);
  for (int b = 0; b < A.dim; ++b) orbit.set_column(b, m.action(b).mul_vec(lift));
  return orbit.mul(summand_basis);
}

template <class F>
ProjectiveCover<F> projective_cover(const ModulePtr<F>& mp) {
  const Module<F>& m = *mp;
  const auto& A = *m.algebra;
  auto td = top(m);

  ProjectiveCover<F> out;
  out.multiplicities = td.multiplicities;
  for (size_t c = 0; c < td.multiplicities.size(); ++c)
    out.cover_dim += td.multiplicities[c] * A.projectives[c].basis.cols();

  out.cover_module = projective_module(m.algebra, td.multiplicities, "P(" + m.label + ")");
  out.cover_map = Matrix<F>(A.field, m.dim, out.cover_dim);
  int off = 0;
  for (const auto& [chi, lift] : td.lifts) {
    auto block = cover_columns(m, A.projectives[static_cast<size_t>(chi)].basis, lift);
    for (int i = 0; i < m.dim; ++i)
      for (int j = 0; j < block.cols(); ++j) out.cover_map.at(i, off + j) = block.at(i, j);
    off += block.cols();
  }
  require(out.cover_map.rank() == m.dim, Errc::LiftFailed,
          "projective cover map is not surjective for " + m.label);
  return out;
}

// M is projective iff its projective cover has the same dimension
template <class F>
bool is_projective(const ModulePtr<F>& mp) {
  const Module<F>& m = *mp;
  const auto& A = *m.algebra;
  auto td = top(m);
  int cover_dim = 0;
  for (size_t c = 0; c < td.multiplicities.size(); ++c)
    cover_dim += td.multiplicities[c] * A.projectives[c].basis.cols();
  bool proj = cover_dim == m.dim;

  // Dade-style cross-check for elementary abelian group algebras: projective
  // modules restrict freely to every cyclic shifted subgroup, so a non-free
  // probe refutes projectivity.  Sound in this direction only.
  if constexpr (std::is_same_v<F, GaloisField>) {
    using RK = typename HopfAlgebra<F>::RankVarietySupport::Kind;
    if (proj && A.rank_variety.kind == RK::ElementaryAbelian) {
      const auto& rv = A.rank_variety;
      const long p = rv.nildeg;
      if (m.dim % p == 0) {
        std::uint64_t npoints = 1;
        for (int i = 0; i < rv.nvars; ++i) npoints *= static_cast<std::uint64_t>(p);
        if (npoints <= 4096) {
          std::vector<Matrix<F>> xact;
          for (const auto& x : rv.xelems) xact.push_back(m.act(x));
          for (std::uint64_t pt = 1; pt < npoints; ++pt) {
            Matrix<F> X(A.field, m.dim, m.dim);
            std::uint64_t rem = pt;
            for (int i = 0; i < rv.nvars; ++i) {
              auto coef = A.field->from_int(static_cast<long>(rem % static_cast<std::uint64_t>(p)));
              rem /= static_cast<std::uint64_t>(p);
              if (!A.field->is_zero(coef)) X.add_scaled_in_place(xact[static_cast<size_t>(i)], coef);
            }
            Matrix<F> Xp = X;
            for (long e = 1; e < p - 1; ++e) Xp = Xp.mul(X);
            require(Xp.rank() == m.dim / p, Errc::InternalError,
                    "cover criterion and shifted-subgroup probe disagree on " + m.label);
          }
        }
      } else {
        fail(Errc::InternalError,
             "cover criterion claims projective but dim is not divisible by p: " + m.label);
      }
    }
  }
  return proj;
}

// ---------------------------------------------------------------------------
// minimal projective resolution (free/projective presentation chain)
// ---------------------------------------------------------------------------

struct ResolutionProfile {
  std::string module_label;
  std::vector<std::vector<int>> multiplicities;  // per step, per simple
  std::vector<int> dim_p;                        // dim P_j
  std::vector<int> dim_omega;                    // dim Omega^j, starting at j = 0
  std::vector<std::string> simple_labels;
  bool terminated = false;
  bool minimality_checked = false;

  int steps() const { return static_cast<int>(dim_p.size()); }
};

namespace detail {

// per-summand description of P_j inside the coordinate space of P_{j-1}
template <class F>
struct PresentationStep {
  std::vector<int> summand_chis;  // one entry per summand copy
  Matrix<F> map;                  // dim P_{j-1} (or dim M at step 0) x dim P_j
};

// action of an algebra element on the coordinate space of a projective module
// given by its summand list
template <class F>
class ProjectiveAction {
 public:
  ProjectiveAction(const HopfAlgebraPtr<F>& A, std::vector<int> chis)
      : A_(A), chis_(std::move(chis)) {
    offsets_.push_back(0);
    for (int c : chis_)
      offsets_.push_back(offsets_.back() + A_->projectives[static_cast<size_t>(c)].basis.cols());
  }

  int dim() const { return offsets_.back(); }
  const std::vector<int>& chis() const { return chis_; }

  // block matrices for left multiplication by basis element b on A e_chi
  const Matrix<F>& block(int chi, int b) const {
    auto key = std::make_pair(chi, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto& P = A_->projectives[static_cast<size_t>(chi)];
    Matrix<F> blk = P.coord.mul(A_->left_mult_matrix(b).mul(P.basis));
    return cache_.emplace(key, std::move(blk)).first->second;
  }

  std::vector<typename F::Elem> apply(const SparseVec<F>& elem,
                                      const std::vector<typename F::Elem>& v) const {
    const auto& f = *A_->field;
    std::vector<typename F::Elem> out(static_cast<size_t>(dim()), f.zero());
    for (size_t s = 0; s < chis_.size(); ++s) {
      int off = offsets_[s];
      int d = offsets_[s + 1] - off;
      for (const auto& [b, c] : elem.t) {
        const auto& blk = block(chis_[s], b);
        for (int i = 0; i < d; ++i) {
          auto acc = f.zero();
          for (int j = 0; j < d; ++j) {
            if (f.is_zero(blk.at(i, j)) || f.is_zero(v[static_cast<size_t>(off + j)])) continue;
            acc = f.add(acc, f.mul(blk.at(i, j), v[static_cast<size_t>(off + j)]));
          }
          if (!f.is_zero(acc))
            out[static_cast<size_t>(off + i)] = f.add(out[static_cast<size_t>(off + i)], f.mul(c, acc));
        }
      }
    }
    return out;
  }

 private:
  HopfAlgebraPtr<F> A_;
  std::vector<int> chis_;
  std::vector<int> offsets_;
  mutable std::map<std::pair<int, int>, Matrix<F>> cache_;
};

}  // namespace detail

// Iterate minimal covers/kernels `steps` times.  Internally the chain is kept
// as projective presentations (maps between projective coordinate spaces), so
// syzygies are never materialized as standalone modules.
template <class F>
ResolutionProfile minimal_resolution(const ModulePtr<F>& mp, int steps,
                                     bool check_minimality = true) {
  require(steps >= 1, Errc::InsufficientSteps, "need at least one resolution step");
  const Module<F>& m = *mp;
  const auto& A = *m.algebra;
  const auto& f = *A.field;

  ResolutionProfile prof;
  prof.module_label = m.label;
  for (const auto& e : A.idempotents) prof.simple_labels.push_back(e.label);
  prof.dim_omega.push_back(m.dim);
  prof.minimality_checked = check_minimality;

  // step 0: cover of M itself
  auto td = top(m);
  std::vector<int> chis;
  Matrix<F> phi(A.field, m.dim, 0);
  {
    std::vector<Matrix<F>> blocks;
    int total = 0;
    for (const auto& [chi, lift] : td.lifts) {
      chis.push_back(chi);
      blocks.push_back(cover_columns(m, A.projectives[static_cast<size_t>(chi)].basis, lift));
      total += blocks.back().cols();
    }
    phi = Matrix<F>(A.field, m.dim, total);
    int off = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < b.cols(); ++j) phi.at(i, off + j) = b.at(i, j);
      off += b.cols();
    }
  }
  require(phi.rank() == m.dim, Errc::LiftFailed, "cover not surjective at step 0");
  prof.multiplicities.push_back(td.multiplicities);
  prof.dim_p.push_back(phi.cols());

  detail::ProjectiveAction<F> pact(m.algebra, chis);
  Matrix<F> kernel = phi.kernel_basis();
  prof.dim_omega.push_back(kernel.cols());
  if (kernel.cols() == 0) prof.terminated = true;

  for (int j = 1; j < steps; ++j) {
    if (kernel.cols() == 0) {
      prof.terminated = true;
      prof.multiplicities.push_back(std::vector<int>(A.idempotents.size(), 0));
      prof.dim_p.push_back(0);
      prof.dim_omega.push_back(0);
      continue;
    }
    // JK: radical action on the syzygy, then generators of K/JK adapted to
    // the idempotents
    ColumnSpan<F> jk(A.field, pact.dim());
    {
      std::vector<SparseVec<F>> radical_cols;
      for (int c = 0; c < A.radical_basis.cols(); ++c)
        radical_cols.push_back(A.sparse_of(A.radical_basis.column(c)));
      for (const auto& r : radical_cols)
        for (int c = 0; c < kernel.cols(); ++c) jk.add(pact.apply(r, kernel.column(c)));
    }
    int quotient_dim = kernel.cols() - jk.dim();

    std::vector<int> new_chis;
    std::vector<std::vector<typename F::Elem>> gens;
    std::vector<int> mults(A.idempotents.size(), 0);
    {
      ColumnSpan<F> accum = jk;  // grow past JK with chosen generator classes
      for (size_t chi = 0; chi < A.idempotents.size() && static_cast<int>(gens.size()) < quotient_dim;
           ++chi) {
        auto echi = A.sparse_of(A.idempotents[chi].vec);
        for (int c = 0; c < kernel.cols() && static_cast<int>(gens.size()) < quotient_dim; ++c) {
          auto cand = pact.apply(echi, kernel.column(c));
          if (accum.add(cand)) {
            new_chis.push_back(static_cast<int>(chi));
            gens.push_back(cand);
            ++mults[chi];
          }
        }
      }
      require(static_cast<int>(gens.size()) == quotient_dim, Errc::InternalError,
              "syzygy generators do not exhaust K/JK");
    }

    // map P_j -> P_{j-1}: columns are (summand basis element) . generator
    int pj_dim = 0;
    for (int chi : new_chis) pj_dim += A.projectives[static_cast<size_t>(chi)].basis.cols();
    Matrix<F> next_phi(A.field, pact.dim(), pj_dim);
    {
      int off = 0;
      for (size_t s = 0; s < gens.size(); ++s) {
        const auto& basis = A.projectives[static_cast<size_t>(new_chis[s])].basis;
        // orbit of the generator under all algebra basis elements
        Matrix<F> orbit(A.field, pact.dim(), A.dim);
        for (int b = 0; b < A.dim; ++b)
          orbit.set_column(b, pact.apply(SparseVec<F>::unit(b, f.one()), gens[s]));
        auto block = orbit.mul(basis);
        for (int i = 0; i < pact.dim(); ++i)
          for (int c = 0; c < block.cols(); ++c) next_phi.at(i, off + c) = block.at(i, c);
        off += block.cols();
      }
    }

    prof.multiplicities.push_back(mults);
    prof.dim_p.push_back(pj_dim);

    detail::ProjectiveAction<F> next_act(m.algebra, new_chis);
    Matrix<F> next_kernel = next_phi.kernel_basis();
    prof.dim_omega.push_back(next_kernel.cols());

    // rank-nullity consistency along the chain
    require(next_kernel.cols() == pj_dim - kernel.cols(), Errc::InternalError,
            "cover at step " + std::to_string(j) + " is not surjective onto the syzygy");

    if (check_minimality && pj_dim <= 96) {
      // kernel of the new cover must lie inside J P_j
      ColumnSpan<F> jp(A.field, pj_dim);
      for (int c = 0; c < A.radical_basis.cols(); ++c) {
        auto r = A.sparse_of(A.radical_basis.column(c));
        for (int i = 0; i < pj_dim; ++i) {
          std::vector<typename F::Elem> e(static_cast<size_t>(pj_dim), f.zero());
          e[static_cast<size_t>(i)] = f.one();
          jp.add(next_act.apply(r, e));
        }
      }
      for (int c = 0; c < next_kernel.cols(); ++c)
        require(jp.contains(next_kernel.column(c)), Errc::InternalError,
                "resolution not minimal at step " + std::to_string(j));
    }

    pact = std::move(next_act);
    kernel = std::move(next_kernel);
  }
  return prof;
}

// ---------------------------------------------------------------------------
// complexity: growth degree of dim P_j
// ---------------------------------------------------------------------------

struct ComplexityEstimate {
  int value = -1;  // -1 when inconclusive
  int low = -1, high = -1;
  bool exact = false;
  bool inconclusive = false;
  double residual = 0.0;
  std::string method;
  std::vector<double> doubling_ratios;
};

inline ComplexityEstimate complexity(const ResolutionProfile& prof) {
  ComplexityEstimate out;
  const auto& p = prof.dim_p;
  if (prof.terminated) {
    out.value = out.low = out.high = 0;
    out.exact = true;
    out.method = "resolution terminates";
    return out;
  }
  require(static_cast<int>(p.size()) >= 8, Errc::InsufficientSteps,
          "need at least 8 resolution steps, have " + std::to_string(p.size()));

  // exact fast path: eventually-constant finite differences
  {
    std::vector<long> seq(p.begin(), p.end());
    for (int d = 0; d + 4 <= static_cast<int>(seq.size()); ++d) {
      bool constant = true;
      for (size_t i = 1; i < seq.size(); ++i)
        if (seq[i] != seq[0]) constant = false;
      if (constant) {
        out.value = out.low = out.high = d + 1;
        out.exact = true;
        out.method = "exact, difference-table";
        for (size_t j = 1; 2 * j < p.size(); ++j)
          out.doubling_ratios.push_back(static_cast<double>(p[2 * j]) / p[j]);
        return out;
      }
      std::vector<long> next;
      for (size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
      seq = std::move(next);
    }
  }

  // regression fallback on the window [N/2, N)
  const int n = static_cast<int>(p.size());
  std::vector<double> xs, ys;
  for (int j = std::max(1, n / 2); j < n; ++j) {
    xs.push_back(std::log(static_cast<double>(j)));
    ys.push_back(std::log(static_cast<double>(p[static_cast<size_t>(j)])));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double nn = static_cast<double>(xs.size());
  double slope = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
  double intercept = (sy - slope * sx) / nn;
  double rss = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (intercept + slope * xs[i]);
    rss += e * e;
  }
  out.residual = std::sqrt(rss / nn);
  out.method = "log-log regression";
  for (size_t j = 1; 2 * j < p.size(); ++j)
    out.doubling_ratios.push_back(static_cast<double>(p[2 * j]) / p[j]);
  if (out.residual > 0.25) {
    out.inconclusive = true;
    out.low = static_cast<int>(std::floor(slope)) + 1;
    out.high = static_cast<int>(std::ceil(slope)) + 1;
    return out;
  }
  out.value = out.low = out.high = static_cast<int>(std::lround(slope)) + 1;
  return out;
}

template <class F>
ComplexityEstimate complexity_of(const ModulePtr<F>& m, int steps = 12) {
  return complexity(minimal_resolution(m, steps));
}

}  // namespace hopfmod
