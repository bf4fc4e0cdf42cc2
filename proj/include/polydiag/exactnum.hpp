#pragma once
// Exact rational and cyclotomic-integer arithmetic.
//
// Everything here is an immutable value type. The one piece of reusable state,
// CyclotomicCache, is owned by the caller and never shared implicitly.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polydiag {

using BigInt = boost::multiprecision::cpp_int;

namespace exactnum {

// ---------------------------------------------------------------------------
// Rational

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit on purpose
  explicit Rational(BigInt value) : num_(std::move(value)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  Rational operator-() const { return from_normalized(-num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Floor of the value as a BigInt.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  long double to_long_double() const {
    return num_.convert_to<long double>() / den_.convert_to<long double>();
  }
  double to_double() const { return static_cast<double>(to_long_double()); }

  // "p/q", or "p" for integers.
  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  // Accepts "p", "p/q", with optional leading sign on p.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    text = trim(text);
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw std::invalid_argument("empty integer in fraction");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw std::invalid_argument("bad integer in fraction");
      for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
          throw std::invalid_argument("bad integer in fraction: " + std::string(s));
        }
      }
      if (s[0] == '+') s.remove_prefix(1);
      return BigInt(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_normalized(BigInt num, BigInt den) {
    Rational r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

inline Rational rat(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

// ---------------------------------------------------------------------------
// Roots of unity

// e^(2*pi*i*exponent/order). The pair is not required to be reduced; equality
// and ordering compare the underlying fraction exponent/order in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() : order_(1), exponent_(0) {}
  RootOfUnity(std::int64_t order, std::int64_t exponent) : order_(order) {
    if (order <= 0) throw std::invalid_argument("root of unity order must be positive");
    exponent_ = ((exponent % order) + order) % order;
  }

  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }

  // Same root with exponent/order in lowest terms.
  RootOfUnity reduced() const {
    const std::int64_t g = std::gcd(exponent_, order_);
    return RootOfUnity(order_ / g, exponent_ / g);
  }

  // Exponent of this root in the ring of order n (n must be a multiple of the reduced order).
  std::int64_t exponent_in(std::int64_t n) const {
    const RootOfUnity r = reduced();
    if (n % r.order_ != 0) throw std::invalid_argument("root does not lie in the requested ring");
    return r.exponent_ * (n / r.order_);
  }

  RootOfUnity inverse() const { return RootOfUnity(order_, order_ - exponent_); }
  RootOfUnity negated() const { return *this * RootOfUnity(2, 1); }

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const std::int64_t n = lcm64(a.order_, b.order_);
    return RootOfUnity(n, a.exponent_ * (n / a.order_) + b.exponent_ * (n / b.order_)).reduced();
  }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    return a.exponent_ * b.order_ == b.exponent_ * a.order_;
  }
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    return a.exponent_ * b.order_ <=> b.exponent_ * a.order_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RootOfUnity& r) {
    const RootOfUnity red = r.reduced();
    return os << "z" << red.order_ << "^" << red.exponent_;
  }

 private:
  std::int64_t order_;
  std::int64_t exponent_;
};

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

inline std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int mobius(std::int64_t n) {
  int result = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

inline std::int64_t radical(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t p : prime_factors(n)) r *= p;
  return r;
}

// Coefficients (lowest degree first) of the n-th cyclotomic polynomial, from
// the product over d | n of (x^d - 1)^mu(n/d).
inline std::vector<BigInt> cyclotomic_polynomial(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic polynomial order must be positive");
  std::vector<BigInt> poly{BigInt(1)};
  std::vector<std::int64_t> dividers;
  for (std::int64_t d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1) {
      // poly *= (x^d - 1)
      std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(d));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + static_cast<std::size_t>(d)] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      dividers.push_back(d);
    }
  }
  for (std::int64_t d : dividers) {
    // poly /= (x^d - 1), exact: p_i = q_{i-d} - q_i.
    const auto du = static_cast<std::size_t>(d);
    if (poly.size() <= du) throw std::logic_error("cyclotomic division underflow");
    std::vector<BigInt> q(poly.size() - du);
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = (i >= du ? q[i - du] : BigInt(0)) - poly[i];
    }
    for (std::size_t i = q.size(); i < poly.size(); ++i) {
      const BigInt back = (i >= du ? q[i - du] : BigInt(0));
      if (back != poly[i]) throw std::logic_error("cyclotomic division not exact");
    }
    poly = std::move(q);
  }
  return poly;
}

// ---------------------------------------------------------------------------
// CycSum

class CycSum;

// Exact zero test for sums in the ring of N-th roots of unity.
//
// Phi_N(x) = Phi_r(x^m) with r = rad(N), m = N / r, and 1, z, ..., z^(m-1) is a
// basis of Q(z_N) over Q(z_r). So a sum vanishes iff, for every residue class
// c mod m, the polynomial in y = x^m formed by its exponents is divisible by
// Phi_r(y).
class CyclotomicZeroTest {
 public:
  explicit CyclotomicZeroTest(std::int64_t ring_order)
      : order_(ring_order), radical_(radical(ring_order)), stride_(ring_order / radical_) {
    if (ring_order <= 0) throw std::invalid_argument("ring order must be positive");
    phi_ = cyclotomic_polynomial(radical_);
    phi_small_.reserve(phi_.size());
    small_ok_ = true;
    for (const BigInt& c : phi_) {
      if (c > 1'000'000 || c < -1'000'000) small_ok_ = false;
      phi_small_.push_back(small_ok_ ? static_cast<std::int64_t>(c) : 0);
    }
  }

  std::int64_t ring_order() const { return order_; }
  const std::vector<BigInt>& radical_polynomial() const { return phi_; }

  bool is_zero(const CycSum& s) const;

  // Sparse form: (exponent mod N, coefficient) pairs; duplicates allowed.
  bool is_zero_terms(const std::vector<std::pair<std::int64_t, std::int64_t>>& terms) const {
    if (small_ok_) {
      bool overflow = false;
      const bool zero = reduce_small(terms, overflow);
      if (!overflow) return zero;
    }
    std::vector<std::pair<std::int64_t, BigInt>> big;
    big.reserve(terms.size());
    for (const auto& [e, c] : terms) big.emplace_back(e, BigInt(c));
    return reduce_big(big);
  }

  bool is_zero_terms(const std::vector<std::pair<std::int64_t, BigInt>>& terms) const {
    if (small_ok_) {
      std::vector<std::pair<std::int64_t, std::int64_t>> small;
      small.reserve(terms.size());
      bool fits = true;
      for (const auto& [e, c] : terms) {
        if (c > 1'000'000'000 || c < -1'000'000'000) {
          fits = false;
          break;
        }
        small.emplace_back(e, static_cast<std::int64_t>(c));
      }
      if (fits) {
        bool overflow = false;
        const bool zero = reduce_small(small, overflow);
        if (!overflow) return zero;
      }
    }
    return reduce_big(terms);
  }

 private:
  std::size_t phi_degree() const { return phi_.size() - 1; }

  bool reduce_small(const std::vector<std::pair<std::int64_t, std::int64_t>>& terms,
                    bool& overflow) const {
    const auto r = static_cast<std::size_t>(radical_);
    const auto m = static_cast<std::size_t>(stride_);
    const std::size_t deg = phi_degree();
    std::vector<std::vector<std::int64_t>> classes(m);
    for (const auto& [e_raw, c] : terms) {
      const auto e = static_cast<std::size_t>(((e_raw % order_) + order_) % order_);
      auto& cls = classes[e % m];
      if (cls.empty()) cls.assign(r, 0);
      if (__builtin_add_overflow(cls[e / m], c, &cls[e / m])) {
        overflow = true;
        return false;
      }
    }
    for (auto& g : classes) {
      if (g.empty()) continue;
      for (std::size_t i = r; i-- > deg;) {
        const std::int64_t q = g[i];
        if (q == 0) continue;
        const std::size_t base = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) {
          if (phi_small_[j] == 0) continue;
          std::int64_t prod;
          if (__builtin_mul_overflow(q, phi_small_[j], &prod) ||
              __builtin_sub_overflow(g[base + j], prod, &g[base + j])) {
            overflow = true;
            return false;
          }
        }
      }
      for (std::size_t i = 0; i < std::min(deg, r); ++i) {
        if (g[i] != 0) return false;
      }
    }
    return true;
  }

  bool reduce_big(const std::vector<std::pair<std::int64_t, BigInt>>& terms) const {
    const auto r = static_cast<std::size_t>(radical_);
    const auto m = static_cast<std::size_t>(stride_);
    const std::size_t deg = phi_degree();
    std::vector<std::vector<BigInt>> classes(m);
    for (const auto& [e_raw, c] : terms) {
      const auto e = static_cast<std::size_t>(((e_raw % order_) + order_) % order_);
      auto& cls = classes[e % m];
      if (cls.empty()) cls.assign(r, BigInt(0));
      cls[e / m] += c;
    }
    for (auto& g : classes) {
      if (g.empty()) continue;
      for (std::size_t i = r; i-- > deg;) {
        if (g[i] == 0) continue;
        const BigInt q = g[i];
        const std::size_t base = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) {
          if (phi_[j] != 0) g[base + j] -= q * phi_[j];
        }
      }
      for (std::size_t i = 0; i < std::min(deg, r); ++i) {
        if (g[i] != 0) return false;
      }
    }
    return true;
  }

  std::int64_t order_;
  std::int64_t radical_;
  std::int64_t stride_;
  std::vector<BigInt> phi_;
  std::vector<std::int64_t> phi_small_;
  bool small_ok_ = false;
};

// Caller-owned memo of zero testers keyed by ring order. Not thread-safe; give
// each worker its own.
class CyclotomicCache {
 public:
  const CyclotomicZeroTest& get(std::int64_t ring_order) {
    auto it = testers_.find(ring_order);
    if (it == testers_.end()) it = testers_.emplace(ring_order, CyclotomicZeroTest(ring_order)).first;
    return it->second;
  }

 private:
  std::map<std::int64_t, CyclotomicZeroTest> testers_;
};

// Formal sum of c_e * z_N^e. Zero coefficients are never stored.
class CycSum {
 public:
  explicit CycSum(std::int64_t ring_order = 1) : order_(ring_order) {
    if (ring_order <= 0) throw std::invalid_argument("ring order must be positive");
  }

  static CycSum of_root(const RootOfUnity& root, BigInt coefficient = 1) {
    const RootOfUnity r = root.reduced();
    CycSum s(r.order());
    s.add_term(r.exponent(), std::move(coefficient));
    return s;
  }

  std::int64_t ring_order() const { return order_; }
  const std::map<std::int64_t, BigInt>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  BigInt coefficient(std::int64_t exponent) const {
    auto it = coeffs_.find(normalize_exponent(exponent));
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  void add_term(std::int64_t exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    const std::int64_t e = normalize_exponent(exponent);
    auto [it, inserted] = coeffs_.try_emplace(e, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  void add_root(const RootOfUnity& root, const BigInt& coefficient = 1) {
    add_term(root.exponent_in(order_), coefficient);
  }

  // Same value in the ring of order new_order (a multiple of the current order).
  CycSum lifted(std::int64_t new_order) const {
    if (new_order % order_ != 0) throw std::invalid_argument("lift target must be a multiple");
    CycSum out(new_order);
    const std::int64_t factor = new_order / order_;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e * factor, c);
    return out;
  }

  // Smallest ring order holding every term (the empty sum lives in order 1).
  CycSum reduced() const {
    std::int64_t g = order_;
    for (const auto& [e, c] : coeffs_) g = std::gcd(g, e);
    if (coeffs_.empty()) g = order_;
    CycSum out(order_ / g);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e / g, c);
    return out;
  }

  CycSum negated() const {
    CycSum out(order_);
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e, -c);
    return out;
  }

  CycSum rotated(const RootOfUnity& root) const {
    const RootOfUnity r = root.reduced();
    const std::int64_t n = lcm64(order_, r.order());
    const CycSum base = lifted(n);
    const std::int64_t shift = r.exponent_in(n);
    CycSum out(n);
    for (const auto& [e, c] : base.coeffs_) out.add_term(e + shift, c);
    return out;
  }

  friend CycSum operator+(const CycSum& a, const CycSum& b) {
    const std::int64_t n = lcm64(a.order_, b.order_);
    CycSum out = a.lifted(n);
    const CycSum bb = b.lifted(n);
    for (const auto& [e, c] : bb.coeffs_) out.add_term(e, c);
    return out;
  }
  friend CycSum operator-(const CycSum& a, const CycSum& b) { return a + b.negated(); }
  friend CycSum operator*(const CycSum& a, const CycSum& b) {
    const std::int64_t n = lcm64(a.order_, b.order_);
    const CycSum aa = a.lifted(n);
    const CycSum bb = b.lifted(n);
    CycSum out(n);
    for (const auto& [ea, ca] : aa.coeffs_) {
      for (const auto& [eb, cb] : bb.coeffs_) out.add_term(ea + eb, ca * cb);
    }
    return out;
  }

  // Formal equality (same ring, same coefficients). Use is_zero(a - b) for value equality.
  friend bool operator==(const CycSum& a, const CycSum& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::vector<std::pair<std::int64_t, BigInt>> terms() const {
    return {coeffs_.begin(), coeffs_.end()};
  }

 private:
  std::int64_t normalize_exponent(std::int64_t e) const { return ((e % order_) + order_) % order_; }

  std::int64_t order_;
  std::map<std::int64_t, BigInt> coeffs_;
};

inline bool CyclotomicZeroTest::is_zero(const CycSum& s) const {
  if (s.empty()) return true;
  if (order_ % s.ring_order() != 0) {
    throw std::invalid_argument("sum does not lie in the tester's ring");
  }
  if (s.ring_order() == order_) return is_zero_terms(s.terms());
  return is_zero_terms(s.lifted(order_).terms());
}

enum class CycOp { add, sub, mul, negate, rotate };

// Generic dispatcher over the ring operations. `root` is only read for rotate;
// `b` is ignored for negate and rotate.
inline CycSum cyc_arith(const CycSum& a, const CycSum& b, CycOp op,
                        const RootOfUnity& root = RootOfUnity()) {
  switch (op) {
    case CycOp::add: return a + b;
    case CycOp::sub: return a - b;
    case CycOp::mul: return a * b;
    case CycOp::negate: return a.negated();
    case CycOp::rotate: return a.rotated(root);
  }
  throw std::logic_error("unknown cyclotomic operation");
}

inline bool cyc_is_zero(const CycSum& s) {
  if (s.empty()) return true;
  return CyclotomicZeroTest(s.ring_order()).is_zero(s);
}

inline bool cyc_is_zero(const CycSum& s, CyclotomicCache& cache) {
  if (s.empty()) return true;
  return cache.get(s.ring_order()).is_zero(s);
}

// ---------------------------------------------------------------------------
// Sine-product identity
//
// sin(pi U) sin(pi V) sin(pi W) = sin(pi X) sin(pi Y) sin(pi Z), U+...+Z = 1,
// holds iff sum_j e^(i pi a_j) + e^(-i pi a_j) = 0 with
//   a1 = V+W-U-1/2, a2 = W+U-V-1/2, a3 = U+V-W-1/2,
//   a4 = Y+Z-X+1/2, a5 = Z+X-Y+1/2, a6 = X+Y-Z+1/2.
// e^(i pi p/q) is z_{2q}^p; all twelve terms share the ring of order 2*D where
// D is the lcm of 2 and every input denominator.

inline void check_arc_partition(const std::array<Rational, 6>& arcs) {
  Rational total;
  for (const Rational& a : arcs) {
    if (a.sign() <= 0 || a >= Rational(1)) {
      throw std::invalid_argument("arc " + a.str() + " is not in (0,1)");
    }
    total += a;
  }
  if (total != Rational(1)) throw std::invalid_argument("arcs sum to " + total.str() + ", not 1");
}

// Twelve-term sum whose vanishing is equivalent to the sine-product identity.
inline CycSum sine_identity_sum(const Rational& u, const Rational& v, const Rational& w,
                                const Rational& x, const Rational& y, const Rational& z) {
  BigInt lcm_den = 2;
  for (const Rational* r : {&u, &v, &w, &x, &y, &z}) {
    lcm_den = boost::multiprecision::lcm(lcm_den, r->den());
  }
  const Rational half = rat(1, 2);
  const std::array<Rational, 6> alphas = {
      v + w - u - half, w + u - v - half, u + v - w - half,
      y + z - x + half, z + x - y + half, x + y - z + half,
  };
  if (lcm_den > BigInt(std::int64_t{1} << 40)) {
    throw std::invalid_argument("arc denominators too large for the cyclotomic ring");
  }
  const auto half_order = static_cast<std::int64_t>(lcm_den);
  CycSum sum(2 * half_order);
  for (const Rational& a : alphas) {
    const Rational scaled = a * Rational(BigInt(half_order));
    const auto e = static_cast<std::int64_t>(scaled.num());
    sum.add_term(e, 1);
    sum.add_term(-e, 1);
  }
  return sum;
}

inline bool sin_product_equal(const Rational& u, const Rational& v, const Rational& w,
                              const Rational& x, const Rational& y, const Rational& z,
                              CyclotomicCache& cache) {
  check_arc_partition({u, v, w, x, y, z});
  return cyc_is_zero(sine_identity_sum(u, v, w, x, y, z), cache);
}

inline bool sin_product_equal(const Rational& u, const Rational& v, const Rational& w,
                              const Rational& x, const Rational& y, const Rational& z) {
  CyclotomicCache cache;
  return sin_product_equal(u, v, w, x, y, z, cache);
}

}  // namespace exactnum
}  // namespace polydiag
