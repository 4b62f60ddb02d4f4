#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hopfmod/errors.hpp"
#include "hopfmod/fields.hpp"

namespace hopfmod {

// Sparse multivariate polynomial in lambda_1..lambda_nvars with coefficients
// in F.  Monomials are kept in graded-lex order (total degree first, then
// lexicographic), which is normative for serialized ideals.
template <class F>
struct MultiPoly {
  using Elem = typename F::Elem;
  static constexpr int kMaxVars = 8;
  using Expo = std::array<std::uint8_t, kMaxVars>;

  struct GradedLex {
    bool operator()(const Expo& a, const Expo& b) const {
      int da = 0, db = 0;
      for (int i = 0; i < kMaxVars; ++i) {
        da += a[static_cast<size_t>(i)];
        db += b[static_cast<size_t>(i)];
      }
      if (da != db) return da > db;  // higher degree first
      return a > b;                  // then lex, larger exponent vector first
    }
  };

  std::shared_ptr<const F> field;
  int nvars = 0;
  std::map<Expo, Elem, GradedLex> terms;  // zero coefficients never stored

  static MultiPoly zero(std::shared_ptr<const F> f, int nv) { return MultiPoly{std::move(f), nv, {}}; }

  static MultiPoly variable(std::shared_ptr<const F> f, int nv, int i) {
    MultiPoly p{f, nv, {}};
    Expo e{};
    e[static_cast<size_t>(i)] = 1;
    p.terms.emplace(e, f->one());
    return p;
  }

  static MultiPoly constant(std::shared_ptr<const F> f, int nv, Elem c) {
    MultiPoly p{f, nv, {}};
    if (!f->is_zero(c)) p.terms.emplace(Expo{}, std::move(c));
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
      int t = 0;
      for (int i = 0; i < kMaxVars; ++i) t += e[static_cast<size_t>(i)];
      if (t > d) d = t;
    }
    return d;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms) {
      int t = 0;
      for (int i = 0; i < kMaxVars; ++i) t += e[static_cast<size_t>(i)];
      if (d < 0) d = t;
      if (t != d) return false;
    }
    return true;
  }

  void add_term(const Expo& e, const Elem& c) {
    if (field->is_zero(c)) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
      terms.emplace(e, c);
    } else {
      it->second = field->add(it->second, c);
      if (field->is_zero(it->second)) terms.erase(it);
    }
  }

  MultiPoly add(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }

  MultiPoly sub(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, field->neg(c));
    return r;
  }

  MultiPoly neg() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms) c = field->neg(c);
    return r;
  }

  MultiPoly mul(const MultiPoly& o) const {
    MultiPoly r = zero(field, nvars);
    for (const auto& [ea, ca] : terms)
      for (const auto& [eb, cb] : o.terms) {
        Expo e{};
        for (int i = 0; i < kMaxVars; ++i) {
          int s = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
          require(s < 256, Errc::InternalError, "monomial exponent overflow");
          e[static_cast<size_t>(i)] = static_cast<std::uint8_t>(s);
        }
        r.add_term(e, field->mul(ca, cb));
      }
    return r;
  }

  MultiPoly scaled(const Elem& s) const {
    MultiPoly r = zero(field, nvars);
    if (field->is_zero(s)) return r;
    for (const auto& [e, c] : terms) r.terms.emplace(e, field->mul(c, s));
    return r;
  }

  // make the graded-lex leading coefficient 1
  MultiPoly monic() const {
    if (terms.empty()) return *this;
    return scaled(field->inv(terms.begin()->second));
  }

  // evaluate at a point over an extension field, mapping coefficients along m
  template <class G, class MapFn>
  typename G::Elem evaluate_mapped(const G& dst, MapFn&& map_coef,
                                   const std::vector<typename G::Elem>& point) const {
    auto acc = dst.zero();
    for (const auto& [e, c] : terms) {
      auto t = map_coef(c);
      for (int i = 0; i < nvars; ++i)
        for (int k = 0; k < e[static_cast<size_t>(i)]; ++k)
          t = dst.mul(t, point[static_cast<size_t>(i)]);
      acc = dst.add(acc, t);
    }
    return acc;
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    return evaluate_mapped(*field, [](const Elem& c) { return c; }, point);
  }

  bool operator==(const MultiPoly& o) const {
    if (terms.size() != o.terms.size()) return false;
    auto it = o.terms.begin();
    for (const auto& [e, c] : terms) {
      if (e != it->first || !field->eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  std::string format() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
      std::string cs = field->format(c);
      if (!first) os << " + ";
      first = false;
      bool any_var = false;
      for (int i = 0; i < nvars; ++i)
        if (e[static_cast<size_t>(i)]) any_var = true;
      if (!any_var) {
        os << cs;
        continue;
      }
      if (cs != "1") os << cs << "*";
      bool fv = true;
      for (int i = 0; i < nvars; ++i) {
        if (!e[static_cast<size_t>(i)]) continue;
        if (!fv) os << "*";
        fv = false;
        os << "l" << (i + 1);
        if (e[static_cast<size_t>(i)] > 1) os << "^" << static_cast<int>(e[static_cast<size_t>(i)]);
      }
    }
    return os.str();
  }
};

// determinant of a square matrix of polynomials by cofactor expansion;
// fine at the sizes the minor caps allow (s <= 6)
template <class F>
MultiPoly<F> poly_determinant(const std::vector<MultiPoly<F>>& m, int s) {
  require(s >= 1, Errc::InternalError, "empty minor");
  if (s == 1) return m[0];
  const auto& field = m[0].field;
  const int nv = m[0].nvars;
  MultiPoly<F> det = MultiPoly<F>::zero(field, nv);
  // expand along the first row
  for (int j = 0; j < s; ++j) {
    if (m[static_cast<size_t>(j)].is_zero()) continue;
    std::vector<MultiPoly<F>> sub;
    sub.reserve(static_cast<size_t>((s - 1) * (s - 1)));
    for (int r = 1; r < s; ++r)
      for (int c = 0; c < s; ++c) {
        if (c == j) continue;
        sub.push_back(m[static_cast<size_t>(r * s + c)]);
      }
    auto term = m[static_cast<size_t>(j)].mul(poly_determinant(sub, s - 1));
    det = (j % 2 == 0) ? det.add(term) : det.sub(term);
  }
  return det;
}

}  // namespace hopfmod
