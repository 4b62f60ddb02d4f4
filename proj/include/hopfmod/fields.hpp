#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopfmod/errors.hpp"

namespace hopfmod {

// ---------------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------------

enum class FieldKind { PrimePower, Cyclotomic };

// Description of a coefficient field: F_{p^e} given by a monic irreducible
// modulus over F_p, or Q(zeta_n) as Q[z]/(Phi_n).  All arithmetic downstream
// is exact; there are no floating point scalars anywhere in the math core.
struct FieldSpec {
  FieldKind kind = FieldKind::PrimePower;
  long p = 0;
  int degree = 1;
  std::vector<long> modulus;  // coefficients c0..ce over F_p, monic; empty = built-in choice
  long conductor = 0;         // n for cyclotomic

  static FieldSpec prime(long p) {
    FieldSpec s;
    s.kind = FieldKind::PrimePower;
    s.p = p;
    s.degree = 1;
    return s;
  }
  static FieldSpec prime_power(long p, int e, std::vector<long> mod = {}) {
    FieldSpec s;
    s.kind = FieldKind::PrimePower;
    s.p = p;
    s.degree = e;
    s.modulus = std::move(mod);
    return s;
  }
  static FieldSpec cyclotomic(long n) {
    FieldSpec s;
    s.kind = FieldKind::Cyclotomic;
    s.conductor = n;
    return s;
  }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p && degree == o.degree && modulus == o.modulus &&
           conductor == o.conductor;
  }

  std::string describe() const {
    std::ostringstream os;
    if (kind == FieldKind::Cyclotomic) {
      if (conductor <= 2)
        os << "Q";
      else
        os << "Q(zeta_" << conductor << ")";
    } else if (degree == 1) {
      os << "F_" << p;
    } else {
      os << "F_" << p << "^" << degree;
    }
    return os.str();
  }
};

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Univariate polynomial helpers over F_p (used for modulus validation only)
// ---------------------------------------------------------------------------

namespace detail {

using FpPoly = std::vector<long>;  // coefficients low..high, reduced mod p; no trailing zeros

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, long p) {
  std::vector<long> c(a.size() + b.size() > 0 ? a.size() + b.size() - 1 : 0, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  // reduce mod f (monic)
  int df = static_cast<int>(f.size()) - 1;
  for (int k = static_cast<int>(c.size()) - 1; k >= df; --k) {
    long lead = c[k];
    if (!lead) continue;
    for (int j = 0; j <= df; ++j) {
      long idx = k - df + j;
      c[idx] = ((c[idx] - lead * f[j]) % p + p * p) % p;
    }
  }
  c.resize(df > 0 ? df : 1);
  fp_trim(c);
  return c;
}

inline FpPoly fp_powmod(FpPoly base, mpz_class exp, const FpPoly& f, long p) {
  FpPoly result{1};
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) result = fp_mulmod(result, base, f, p);
    base = fp_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  auto inv_mod = [&](long x) {
    long r = 1, e = p - 2, base = ((x % p) + p) % p;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    long lead_inv = inv_mod(b.back());
    FpPoly r = a;
    while (!r.empty() && r.size() >= b.size()) {
      long factor = r.back() * lead_inv % p;
      size_t shift = r.size() - b.size();
      for (size_t j = 0; j < b.size(); ++j)
        r[shift + j] = ((r[shift + j] - factor * b[j]) % p + p * p) % p;
      fp_trim(r);
    }
    a = b;
    b = r;
  }
  return a;
}

// Irreducibility per construction contract: root check for degree <= 3,
// Frobenius gcd test for higher degree.
inline bool fp_irreducible(const FpPoly& f, long p) {
  int e = static_cast<int>(f.size()) - 1;
  if (e <= 0) return false;
  if (e == 1) return true;
  if (e <= 3) {
    for (long x = 0; x < p; ++x) {
      long v = 0, xp = 1;
      for (int i = 0; i <= e; ++i) {
        v = (v + f[i] * xp) % p;
        xp = xp * x % p;
      }
      if (v == 0) return false;
    }
    return true;  // no roots suffices for degree 2, 3
  }
  // x^{p^e} == x mod f, and gcd(x^{p^{e/t}} - x, f) = 1 for prime divisors t of e
  mpz_class pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  FpPoly x{0, 1};
  FpPoly xq = fp_powmod(x, pe, f, p);
  if (xq != x) return false;
  for (int t = 2; t <= e; ++t) {
    if (e % t != 0 || !is_prime(t)) continue;
    mpz_class ped;
    mpz_ui_pow_ui(ped.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e / t));
    FpPoly xs = fp_powmod(x, ped, f, p);
    // xs - x
    FpPoly diff = xs;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    fp_trim(diff);
    FpPoly g = fp_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

// Canonical built-in moduli for tiny extensions; anything else is found by a
// deterministic first-in-lex-order search (verified irreducible either way).
inline std::vector<long> builtin_modulus(long p, int e) {
  if (p == 2 && e == 2) return {1, 1, 1};        // w^2+w+1
  if (p == 2 && e == 3) return {1, 1, 0, 1};     // w^3+w+1
  if (p == 2 && e == 4) return {1, 1, 0, 0, 1};  // w^4+w+1
  if (p == 3 && e == 2) return {2, 2, 1};        // w^2+2w+2
  if (p == 3 && e == 3) return {1, 2, 0, 1};     // w^3+2w+1
  if (p == 5 && e == 2) return {2, 0, 1};        // w^2+2
  // lex search over constant-first tuples
  std::vector<long> f(static_cast<size_t>(e) + 1, 0);
  f[static_cast<size_t>(e)] = 1;
  while (true) {
    if (fp_irreducible(f, p)) return f;
    int i = 0;
    while (i < e && ++f[static_cast<size_t>(i)] == p) f[static_cast<size_t>(i++)] = 0;
    require(i < e, Errc::ReducibleModulus, "no irreducible modulus found");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GaloisField: F_{p^e} with packed uint32 elements
// ---------------------------------------------------------------------------

// Elements are packed base-p digit vectors: value = sum c_i p^i with c_i the
// coefficients of the representative polynomial in the generator w.
// Fields with p^e <= 256 run entirely on lookup tables.
class GaloisField {
 public:
  using Elem = std::uint32_t;

  explicit GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
    require(spec_.kind == FieldKind::PrimePower, Errc::InternalError, "not a prime-power spec");
    require(is_prime(spec_.p), Errc::NonPrimeP, "p = " + std::to_string(spec_.p));
    require(spec_.degree >= 1, Errc::ReducibleModulus, "degree must be positive");
    p_ = spec_.p;
    e_ = spec_.degree;
    if (e_ > 1) {
      std::vector<long> mod = spec_.modulus;
      if (mod.empty()) {
        require(e_ <= 4, Errc::ReducibleModulus,
                "no built-in modulus for degree " + std::to_string(e_) + "; supply one");
        mod = detail::builtin_modulus(p_, e_);
        spec_.modulus = mod;
      }
      require(static_cast<int>(mod.size()) == e_ + 1 && mod.back() % p_ == 1,
              Errc::ReducibleModulus, "modulus must be monic of degree e");
      for (auto& c : mod) c = ((c % p_) + p_) % p_;
      mod.back() = 1;
      require(detail::fp_irreducible(mod, p_), Errc::ReducibleModulus,
              "modulus is reducible over F_p");
      modulus_ = mod;
    }
    q_ = 1;
    for (int i = 0; i < e_; ++i) {
      require(q_ <= (1ULL << 40) / static_cast<unsigned long long>(p_), Errc::ReducibleModulus,
              "field too large");
      q_ *= static_cast<std::uint64_t>(p_);
    }
    if (q_ <= kTableLimit) build_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  long characteristic() const { return p_; }
  int degree() const { return e_; }
  std::uint64_t size() const { return q_; }
  std::string describe() const { return spec_.describe(); }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  // element with the given digits (coefficients of powers of w)
  Elem from_digits(const std::vector<long>& digits) const {
    Elem r = 0;
    for (int i = std::min<int>(e_, static_cast<int>(digits.size())) - 1; i >= 0; --i) {
      long d = ((digits[static_cast<size_t>(i)] % p_) + p_) % p_;
      r = static_cast<Elem>(r * static_cast<Elem>(p_) + static_cast<Elem>(d));
    }
    return r;
  }

  std::vector<long> digits(Elem a) const {
    std::vector<long> d(static_cast<size_t>(e_));
    for (int i = 0; i < e_; ++i) {
      d[static_cast<size_t>(i)] = static_cast<long>(a % static_cast<Elem>(p_));
      a /= static_cast<Elem>(p_);
    }
    return d;
  }

  // generator w of the extension (invalid for e = 1)
  Elem generator() const {
    require(e_ > 1, Errc::InternalError, "prime field has no extension generator");
    return static_cast<Elem>(p_);
  }

  // enumeration: element with packed index i, 0 <= i < size()
  Elem element(std::uint64_t index) const { return static_cast<Elem>(index); }
  std::uint64_t index_of(Elem a) const { return a; }

  Elem add(Elem a, Elem b) const {
    if (e_ == 1) {
      Elem s = a + b;
      return s >= static_cast<Elem>(p_) ? s - static_cast<Elem>(p_) : s;
    }
    if (p_ == 2) return a ^ b;
    Elem r = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
      Elem da = a % static_cast<Elem>(p_), db = b % static_cast<Elem>(p_);
      Elem s = da + db;
      if (s >= static_cast<Elem>(p_)) s -= static_cast<Elem>(p_);
      r += s * mul;
      a /= static_cast<Elem>(p_);
      b /= static_cast<Elem>(p_);
      mul *= static_cast<Elem>(p_);
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (a == 0) return 0;
    if (e_ == 1) return static_cast<Elem>(p_) - a;
    if (p_ == 2) return a;
    Elem r = 0, mul = 1;
    for (int i = 0; i < e_; ++i) {
      Elem da = a % static_cast<Elem>(p_);
      r += (da ? static_cast<Elem>(p_) - da : 0) * mul;
      a /= static_cast<Elem>(p_);
      mul *= static_cast<Elem>(p_);
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables_) return mul_table_[a * q_ + b];
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % static_cast<std::uint64_t>(p_));
    return mul_slow(a, b);
  }

  Elem inv(Elem a) const {
    require(a != 0, Errc::DivisionByZero, "inverse of zero in " + describe());
    if (tables_) return inv_table_[a];
    // Fermat: a^(q-2)
    Elem r = 1, base = a;
    std::uint64_t e = q_ - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    Elem r = 1, base = a;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  std::string format(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::ostringstream os;
    auto d = digits(a);
    bool first = true;
    for (int i = e_ - 1; i >= 0; --i) {
      long c = d[static_cast<size_t>(i)];
      if (!c) continue;
      if (!first) os << "+";
      first = false;
      if (i == 0) {
        os << c;
      } else {
        if (c != 1) os << c << "*";
        os << "w";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  static constexpr std::uint64_t kTableLimit = 256;

  Elem mul_slow(Elem a, Elem b) const {
    // polynomial multiplication in digits, reduced mod modulus_
    auto da = digits(a), db = digits(b);
    std::vector<long> c(static_cast<size_t>(2 * e_ - 1), 0);
    for (int i = 0; i < e_; ++i)
      if (da[static_cast<size_t>(i)])
        for (int j = 0; j < e_; ++j)
          c[static_cast<size_t>(i + j)] =
              (c[static_cast<size_t>(i + j)] + da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p_;
    for (int k = 2 * e_ - 2; k >= e_; --k) {
      long lead = c[static_cast<size_t>(k)];
      if (!lead) continue;
      c[static_cast<size_t>(k)] = 0;
      for (int j = 0; j < e_; ++j)
        c[static_cast<size_t>(k - e_ + j)] =
            ((c[static_cast<size_t>(k - e_ + j)] - lead * modulus_[static_cast<size_t>(j)]) % p_ + p_) % p_;
    }
    c.resize(static_cast<size_t>(e_));
    return from_digits(c);
  }

  void build_tables() {
    tables_ = true;
    mul_table_.assign(q_ * q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a)
      for (std::uint64_t b = 1; b < q_; ++b) {
        Elem v;
        if (e_ == 1)
          v = static_cast<Elem>(a * b % static_cast<std::uint64_t>(p_));
        else
          v = mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
        mul_table_[a * q_ + b] = v;
      }
    inv_table_.assign(q_, 0);
    for (std::uint64_t a = 1; a < q_; ++a)
      for (std::uint64_t b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = static_cast<Elem>(b);
          break;
        }
  }

  FieldSpec spec_;
  long p_ = 2;
  int e_ = 1;
  std::uint64_t q_ = 2;
  std::vector<long> modulus_;
  bool tables_ = false;
  std::vector<Elem> mul_table_;
  std::vector<Elem> inv_table_;
};

// Canonical embedding F_{p^a} -> F_{p^b} when a | b: maps the source generator
// to the first root (in element enumeration order) of the source modulus in
// the target field.  Deterministic, hence reproducible.
class FieldEmbedding {
 public:
  FieldEmbedding(std::shared_ptr<const GaloisField> src, std::shared_ptr<const GaloisField> dst)
      : src_(std::move(src)), dst_(std::move(dst)) {
    require(src_->characteristic() == dst_->characteristic(), Errc::FieldMismatch,
            "different characteristics");
    require(dst_->degree() % src_->degree() == 0, Errc::FieldMismatch,
            "no embedding: source degree does not divide target degree");
    if (src_->degree() == 1) {
      root_ = dst_->one();  // constants map to constants
      return;
    }
    const auto& mod = src_->spec().modulus;
    for (std::uint64_t i = 0; i < dst_->size(); ++i) {
      GaloisField::Elem x = dst_->element(i);
      GaloisField::Elem v = dst_->zero(), xp = dst_->one();
      for (long c : mod) {
        v = dst_->add(v, dst_->mul(dst_->from_int(c), xp));
        xp = dst_->mul(xp, x);
      }
      if (dst_->is_zero(v)) {
        root_ = x;
        return;
      }
    }
    fail(Errc::InternalError, "no root of modulus in extension");
  }

  GaloisField::Elem map(GaloisField::Elem a) const {
    auto d = src_->digits(a);
    GaloisField::Elem v = dst_->zero(), xp = dst_->one();
    for (long c : d) {
      v = dst_->add(v, dst_->mul(dst_->from_int(c), xp));
      xp = dst_->mul(xp, root_);
    }
    return v;
  }

 private:
  std::shared_ptr<const GaloisField> src_, dst_;
  GaloisField::Elem root_ = 0;
};

// ---------------------------------------------------------------------------
// CyclotomicField: Q(zeta_n) = Q[z]/(Phi_n), exact rational coefficients
// ---------------------------------------------------------------------------

struct CycElem {
  std::vector<mpq_class> c;  // length = deg Phi_n, reduced

  bool operator==(const CycElem& o) const {
    if (c.size() != o.c.size()) return false;
    for (size_t i = 0; i < c.size(); ++i)
      if (cmp(c[i], o.c[i]) != 0) return false;
    return true;
  }
};

namespace detail {

// exact division of integer polynomials (quotient known integral)
inline std::vector<mpz_class> zpoly_divexact(const std::vector<mpz_class>& num,
                                             const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  int dq = static_cast<int>(num.size()) - static_cast<int>(den.size());
  std::vector<mpz_class> q(static_cast<size_t>(dq + 1));
  for (int k = dq; k >= 0; --k) {
    mpz_class coef = rem[static_cast<size_t>(k) + den.size() - 1] / den.back();
    q[static_cast<size_t>(k)] = coef;
    for (size_t j = 0; j < den.size(); ++j)
      rem[static_cast<size_t>(k) + j] -= coef * den[j];
  }
  return q;
}

inline std::vector<mpz_class> cyclotomic_polynomial(long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<mpz_class> num(static_cast<size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  std::vector<mpz_class> den{1};
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto phi_d = cyclotomic_polynomial(d);
    std::vector<mpz_class> nd(den.size() + phi_d.size() - 1, 0);
    for (size_t i = 0; i < den.size(); ++i)
      for (size_t j = 0; j < phi_d.size(); ++j) nd[i + j] += den[i] * phi_d[j];
    den = std::move(nd);
  }
  return zpoly_divexact(num, den);
}

}  // namespace detail

class CyclotomicField {
 public:
  using Elem = CycElem;

  explicit CyclotomicField(FieldSpec spec) : spec_(std::move(spec)) {
    require(spec_.kind == FieldKind::Cyclotomic, Errc::InternalError, "not a cyclotomic spec");
    n_ = spec_.conductor;
    require(n_ >= 1, Errc::InvalidN, "cyclotomic order must be >= 1");
    auto phi = detail::cyclotomic_polynomial(n_);
    deg_ = static_cast<int>(phi.size()) - 1;
    phi_.assign(phi.begin(), phi.end());
    // reduction table: z^k mod Phi for k in [deg, 2 deg - 2]
    if (deg_ >= 1) {
      red_.resize(static_cast<size_t>(std::max(0, deg_ - 1)));
      std::vector<mpq_class> cur(static_cast<size_t>(deg_), 0);
      // z^deg = -(phi_0 + phi_1 z + ...)/1  (phi monic)
      for (int i = 0; i < deg_; ++i) cur[static_cast<size_t>(i)] = -mpq_class(phi_[static_cast<size_t>(i)]);
      for (int k = 0; k + deg_ <= 2 * deg_ - 2; ++k) {
        red_[static_cast<size_t>(k)] = cur;
        // multiply by z
        mpq_class top = cur[static_cast<size_t>(deg_ - 1)];
        for (int i = deg_ - 1; i >= 1; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        cur[0] = 0;
        for (int i = 0; i < deg_; ++i)
          cur[static_cast<size_t>(i)] -= top * mpq_class(phi_[static_cast<size_t>(i)]);
      }
    }
  }

  const FieldSpec& spec() const { return spec_; }
  long conductor() const { return n_; }
  int degree() const { return deg_; }
  long characteristic() const { return 0; }
  std::string describe() const { return spec_.describe(); }

  Elem zero() const { return Elem{std::vector<mpq_class>(static_cast<size_t>(deg_), 0)}; }
  Elem one() const {
    Elem r = zero();
    r.c[0] = 1;
    return r;
  }
  bool is_zero(const Elem& a) const {
    for (const auto& x : a.c)
      if (sgn(x) != 0) return false;
    return true;
  }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem from_int(long v) const {
    Elem r = zero();
    r.c[0] = v;
    return r;
  }
  Elem from_rational(const mpq_class& v) const {
    Elem r = zero();
    r.c[0] = v;
    return r;
  }

  // primitive n-th root of unity
  Elem zeta() const {
    Elem r = zero();
    if (deg_ >= 2) {
      r.c[1] = 1;
      return r;
    }
    // n = 1 -> 1; n = 2 -> -1 (z = -1 mod z+1)
    r.c[0] = (n_ == 2) ? -1 : 1;
    return r;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (int i = 0; i < deg_; ++i) r.c[static_cast<size_t>(i)] += b.c[static_cast<size_t>(i)];
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (int i = 0; i < deg_; ++i) r.c[static_cast<size_t>(i)] -= b.c[static_cast<size_t>(i)];
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (deg_ == 1) {
      Elem r = zero();
      r.c[0] = a.c[0] * b.c[0];
      return r;
    }
    std::vector<mpq_class> prod(static_cast<size_t>(2 * deg_ - 1), 0);
    for (int i = 0; i < deg_; ++i) {
      if (sgn(a.c[static_cast<size_t>(i)]) == 0) continue;
      for (int j = 0; j < deg_; ++j) {
        if (sgn(b.c[static_cast<size_t>(j)]) == 0) continue;
        prod[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
      }
    }
    Elem r = zero();
    for (int i = 0; i < deg_; ++i) r.c[static_cast<size_t>(i)] = prod[static_cast<size_t>(i)];
    for (int k = deg_; k <= 2 * deg_ - 2; ++k) {
      const mpq_class& coef = prod[static_cast<size_t>(k)];
      if (sgn(coef) == 0) continue;
      const auto& row = red_[static_cast<size_t>(k - deg_)];
      for (int i = 0; i < deg_; ++i) r.c[static_cast<size_t>(i)] += coef * row[static_cast<size_t>(i)];
    }
    return r;
  }

  Elem inv(const Elem& a) const {
    require(!is_zero(a), Errc::DivisionByZero, "inverse of zero in " + describe());
    // extended Euclid in Q[z] between a (as poly) and Phi_n
    using QPoly = std::vector<mpq_class>;
    auto trim = [](QPoly& f) {
      while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
    };
    QPoly r0(phi_.size());
    for (size_t i = 0; i < phi_.size(); ++i) r0[i] = mpq_class(phi_[i]);
    QPoly r1(a.c.begin(), a.c.end());
    trim(r1);
    QPoly s0{0}, s1{1};  // coefficients on a
    while (true) {
      // divide r0 by r1: r0 = q r1 + r
      QPoly rem = r0, q;
      q.assign(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
      while (rem.size() >= r1.size() && !rem.empty()) {
        mpq_class factor = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] += factor;
        for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= factor * r1[j];
        trim(rem);
      }
      // s = s0 - q s1
      QPoly qs(q.size() + s1.size() > 0 ? q.size() + s1.size() - 1 : 0, 0);
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
      QPoly s(std::max(s0.size(), qs.size()), 0);
      for (size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
      for (size_t i = 0; i < qs.size(); ++i) s[i] -= qs[i];
      trim(s);
      if (rem.empty()) {
        // r1 is the gcd (a unit since Phi is irreducible): inverse = s1 / r1
        require(r1.size() == 1, Errc::InternalError, "cyclotomic gcd not a unit");
        Elem out = zero();
        for (size_t i = 0; i < s1.size() && i < static_cast<size_t>(deg_); ++i)
          out.c[i] = s1[i] / r1[0];
        return out;
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
  }

  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

  Elem pow(const Elem& a, long k) const {
    if (k < 0) return pow(inv(a), -k);
    Elem r = one(), base = a;
    while (k) {
      if (k & 1) r = mul(r, base);
      base = mul(base, base);
      k >>= 1;
    }
    return r;
  }

  std::string format(const Elem& a) const {
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg_ - 1; i >= 0; --i) {
      const mpq_class& q = a.c[static_cast<size_t>(i)];
      if (sgn(q) == 0) continue;
      mpq_class aq = abs(q);
      if (first) {
        if (sgn(q) < 0) os << "-";
        first = false;
      } else {
        os << (sgn(q) < 0 ? "-" : "+");
      }
      bool unit_coef = (cmp(aq, 1) == 0);
      if (i == 0) {
        os << aq.get_str();
      } else {
        if (!unit_coef) os << aq.get_str() << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  FieldSpec spec_;
  long n_ = 1;
  int deg_ = 1;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<mpq_class>> red_;
};

// ---------------------------------------------------------------------------
// Scalar expression parsing (shared grammar: integers, w, z, + - * / ^, parens)
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
class ScalarParser {
 public:
  ScalarParser(const F& field, const std::string& text) : f_(field), s_(text) {}

  typename F::Elem parse() {
    auto v = expr();
    skip_ws();
    require(pos_ == s_.size(), Errc::ParseError,
            "trailing characters in scalar '" + s_ + "' at position " + std::to_string(pos_));
    return v;
  }

 private:
  using Elem = typename F::Elem;

  Elem expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    Elem v = term();
    if (neg) v = f_.neg(v);
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        get();
        Elem t = term();
        v = (c == '+') ? f_.add(v, t) : f_.sub(v, t);
      } else {
        return v;
      }
    }
  }

  Elem term() {
    Elem v = factor();
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        get();
        v = f_.mul(v, factor());
      } else if (c == '/') {
        get();
        v = f_.div(v, factor());
      } else {
        return v;
      }
    }
  }

  Elem factor() {
    skip_ws();
    Elem v = atom();
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        get();
      }
      long k = integer();
      v = f_.pow(v, neg ? -k : k);
    }
    return v;
  }

  Elem atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Elem v = expr();
      skip_ws();
      require(get() == ')', Errc::ParseError, "expected ')' in scalar '" + s_ + "'");
      return v;
    }
    if (c >= '0' && c <= '9') return f_.from_int(integer());
    if (c == 'w' || c == 'z') {
      get();
      return named_generator(c);
    }
    fail(Errc::ParseError, "unexpected character '" + std::string(1, c) + "' in scalar '" + s_ + "'");
  }

  Elem named_generator(char c) {
    if constexpr (std::is_same_v<F, GaloisField>) {
      require(c == 'w', Errc::ParseError, "'z' is not an element of " + f_.describe());
      return f_.generator();
    } else {
      require(c == 'z', Errc::ParseError, "'w' is not an element of " + f_.describe());
      return f_.zeta();
    }
  }

  long integer() {
    skip_ws();
    require(peek() >= '0' && peek() <= '9', Errc::ParseError, "expected integer in '" + s_ + "'");
    long v = 0;
    while (peek() >= '0' && peek() <= '9') v = v * 10 + (get() - '0');
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

  const F& f_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

template <class F>
typename F::Elem parse_scalar(const F& field, const std::string& text) {
  return detail::ScalarParser<F>(field, text).parse();
}

// ---------------------------------------------------------------------------
// field_make: FieldSpec -> shared field object (variant at the boundary)
// ---------------------------------------------------------------------------

using GaloisFieldPtr = std::shared_ptr<const GaloisField>;
using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

struct AnyField {
  GaloisFieldPtr galois;        // exactly one of the two is set
  CyclotomicFieldPtr cyclotomic;
};

inline AnyField field_make(const FieldSpec& spec) {
  AnyField f;
  if (spec.kind == FieldKind::PrimePower)
    f.galois = std::make_shared<const GaloisField>(spec);
  else
    f.cyclotomic = std::make_shared<const CyclotomicField>(spec);
  return f;
}

}  // namespace hopfmod
