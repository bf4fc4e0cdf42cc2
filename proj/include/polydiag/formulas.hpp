#pragma once
// Closed forms for I(n), R(n), a_k(n), b_k(n), and tame functions: rational
// combinations of a fixed basis of polynomials and divisibility indicators.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polydiag/counts.hpp"
#include "polydiag/exactnum.hpp"

namespace polydiag::formulas {

using exactnum::Rational;
using exactnum::rat;

// delta_m(n) = 1 iff m divides n.
inline int delta(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("delta expects m, n >= 1");
  return n % m == 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Tame functions

enum class Tag {
  n3, n2, n1, one, n2_d2, n_d2, d2, d4, n_d6, d6, d12, d18, d24, d24_shift6,
  d30, d36, d42, d48, d60, d72, d84, d90, d96, d120, d168, d180, d210, d420,
};

inline constexpr std::size_t kBasisSize = 28;

inline constexpr std::array<Tag, kBasisSize> kBasis{
    Tag::n3,  Tag::n2,  Tag::n1,  Tag::one, Tag::n2_d2, Tag::n_d2, Tag::d2,  Tag::d4,  Tag::n_d6, Tag::d6,
    Tag::d12, Tag::d18, Tag::d24, Tag::d24_shift6, Tag::d30, Tag::d36, Tag::d42, Tag::d48, Tag::d60, Tag::d72,
    Tag::d84, Tag::d90, Tag::d96, Tag::d120, Tag::d168, Tag::d180, Tag::d210, Tag::d420,
};

inline std::string_view tag_name(Tag t) {
  static constexpr std::array<std::string_view, kBasisSize> names{
      "n^3",  "n^2",  "n",    "1",    "n^2*d2", "n*d2", "d2",   "d4",   "n*d6", "d6",
      "d12",  "d18",  "d24",  "d24(n-6)", "d30", "d36", "d42",  "d48",  "d60",  "d72",
      "d84",  "d90",  "d96",  "d120", "d168", "d180", "d210", "d420",
  };
  return names[static_cast<std::size_t>(t)];
}

inline Tag parse_tag(std::string_view s) {
  for (Tag t : kBasis) {
    if (tag_name(t) == s) return t;
  }
  throw std::invalid_argument("unknown tame basis tag: " + std::string(s));
}

inline Rational basis_value(Tag t, std::int64_t n) {
  auto d = [n](std::int64_t m) { return Rational(static_cast<long long>(n % m == 0)); };
  const Rational N(static_cast<long long>(n));
  switch (t) {
    case Tag::n3: return N * N * N;
    case Tag::n2: return N * N;
    case Tag::n1: return N;
    case Tag::one: return Rational(1);
    case Tag::n2_d2: return N * N * d(2);
    case Tag::n_d2: return N * d(2);
    case Tag::d2: return d(2);
    case Tag::d4: return d(4);
    case Tag::n_d6: return N * d(6);
    case Tag::d6: return d(6);
    case Tag::d12: return d(12);
    case Tag::d18: return d(18);
    case Tag::d24: return d(24);
    case Tag::d24_shift6: return Rational(static_cast<long long>(((n - 6) % 24 + 24) % 24 == 0));
    case Tag::d30: return d(30);
    case Tag::d36: return d(36);
    case Tag::d42: return d(42);
    case Tag::d48: return d(48);
    case Tag::d60: return d(60);
    case Tag::d72: return d(72);
    case Tag::d84: return d(84);
    case Tag::d90: return d(90);
    case Tag::d96: return d(96);
    case Tag::d120: return d(120);
    case Tag::d168: return d(168);
    case Tag::d180: return d(180);
    case Tag::d210: return d(210);
    case Tag::d420: return d(420);
  }
  throw std::logic_error("unknown tag");
}

struct TameFunction {
  std::map<Tag, Rational> coefficients;  // zero coefficients are not stored

  void set(Tag t, const Rational& c) {
    if (c.is_zero()) coefficients.erase(t);
    else coefficients[t] = c;
  }

  Rational coefficient(Tag t) const {
    auto it = coefficients.find(t);
    return it == coefficients.end() ? Rational() : it->second;
  }

  bool is_zero() const { return coefficients.empty(); }

  friend bool operator==(const TameFunction&, const TameFunction&) = default;
};

inline Rational tame_eval(const TameFunction& f, std::int64_t n) {
  if (n < 3) throw std::invalid_argument("tame functions are evaluated at n >= 3");
  Rational total;
  for (const auto& [tag, c] : f.coefficients) total += c * basis_value(tag, n);
  return total;
}

class FitError : public std::runtime_error {
 public:
  enum class Kind { insufficient_anchors, not_tame };
  FitError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Rank of the basis evaluated at the given n values.
inline std::size_t anchor_rank(const std::vector<std::int64_t>& ns) {
  std::vector<std::vector<Rational>> m;
  for (std::int64_t n : ns) {
    std::vector<Rational> row;
    for (Tag t : kBasis) row.push_back(basis_value(t, n));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < kBasisSize && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < kBasisSize; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Exact solve for the coefficients reproducing every sample.
inline TameFunction tame_fit(const std::map<std::int64_t, Rational>& samples) {
  const std::size_t cols = kBasisSize;
  std::vector<std::vector<Rational>> m;
  for (const auto& [n, value] : samples) {
    if (n < 3) throw std::invalid_argument("samples must have n >= 3");
    std::vector<Rational> row;
    row.reserve(cols + 1);
    for (Tag t : kBasis) row.push_back(basis_value(t, n));
    row.push_back(value);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const Rational inv = Rational(1) / m[rank][col];
    for (std::size_t c = col; c <= cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < m.size(); ++r) {
    if (!m[r][cols].is_zero()) throw FitError(FitError::Kind::not_tame, "not tame on samples");
  }
  if (rank < cols) {
    throw FitError(FitError::Kind::insufficient_anchors,
                   "insufficient anchors: rank " + std::to_string(rank) + " of " + std::to_string(cols));
  }
  TameFunction f;
  for (std::size_t r = 0; r < rank; ++r) f.set(kBasis[pivot_cols[r]], m[r][cols]);
  return f;
}

// Values at which a tame function is determined, plus 102 to reach full rank
// under a plain linear solve.
inline const std::vector<std::int64_t>& default_anchors() {
  static const std::vector<std::int64_t> anchors{3,  4,  5,  6,  7,  8,  9,   10,  12,  18,  24,  30,  36,  42,
                                                 48, 54, 60, 66, 72, 84, 90,  96,  120, 168, 180, 210, 420, 102};
  return anchors;
}

// ---------------------------------------------------------------------------
// Closed forms

// a_k(n)/n as a tame function, k = 2..7.
inline TameFunction ak_over_n(int k) {
  TameFunction f;
  auto put = [&f](Tag t, long long p, long long q = 1) { f.set(t, rat(p, q)); };
  switch (k) {
    case 2:
      put(Tag::n3, 1, 24); put(Tag::n2, -1, 4); put(Tag::n1, 11, 24); put(Tag::one, -1, 4);
      put(Tag::n2_d2, -5, 16); put(Tag::n_d2, 23, 8); put(Tag::d2, -9, 2);
      put(Tag::d4, -9, 4);
      put(Tag::n_d6, -19, 2); put(Tag::d6, 55);
      put(Tag::d12, 54); put(Tag::d18, 84); put(Tag::d24, 50); put(Tag::d30, -24); put(Tag::d42, -100);
      put(Tag::d60, -432); put(Tag::d84, -204); put(Tag::d90, -144); put(Tag::d120, -204); put(Tag::d210, -144);
      break;
    case 3:
      put(Tag::n2_d2, 5, 48); put(Tag::n_d2, -1); put(Tag::d2, 19, 12);
      put(Tag::d4, 3, 4);
      put(Tag::n_d6, 7, 6); put(Tag::d6, -19, 3);
      put(Tag::d12, -8); put(Tag::d18, -20); put(Tag::d24, -16); put(Tag::d30, -19); put(Tag::d42, 8);
      put(Tag::d60, 68); put(Tag::d84, 60); put(Tag::d90, 48); put(Tag::d120, 60); put(Tag::d210, 48);
      break;
    case 4:
      put(Tag::n_d6, 7, 12); put(Tag::d6, -7, 2);
      put(Tag::d12, -5, 2); put(Tag::d18, -4); put(Tag::d24, 3); put(Tag::d42, 6); put(Tag::d60, 34);
      put(Tag::d84, -6); put(Tag::d120, -6);
      break;
    case 5:
      put(Tag::n_d6, 1, 4); put(Tag::d6, -3, 2);
      put(Tag::d12, -3, 2); put(Tag::d24, -2); put(Tag::d42, 4); put(Tag::d84, 6); put(Tag::d120, 6);
      break;
    case 6:
      put(Tag::d30, 4); put(Tag::d60, -4);
      break;
    case 7:
      put(Tag::d30, 1); put(Tag::d60, 4);
      break;
    default:
      throw std::out_of_range("closed forms exist for k = 2..7");
  }
  return f;
}

namespace detail {

inline std::int64_t to_integer(const Rational& r, const std::string& what) {
  if (!r.is_integer()) throw std::logic_error(what + " is not an integer: " + r.str());
  return r.num().convert_to<std::int64_t>();
}

inline void require_n(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
}

}  // namespace detail

inline std::int64_t ak_closed(int k, std::int64_t n) {
  detail::require_n(n);
  const Rational v = tame_eval(ak_over_n(k), n) * Rational(static_cast<long long>(n));
  const std::int64_t out = detail::to_integer(v, "a_" + std::to_string(k) + "(" + std::to_string(n) + ")");
  if (out < 0) throw std::logic_error("a_" + std::to_string(k) + "(" + std::to_string(n) + ") is negative");
  return out;
}

inline std::int64_t I_closed(std::int64_t n) {
  detail::require_n(n);
  const Rational N(static_cast<long long>(n));
  auto d = [n](std::int64_t m) { return Rational(static_cast<long long>(n % m == 0)); };
  Rational v = Rational(static_cast<long long>(choose(n, 4)));
  v += (rat(-5, 1) * N * N * N + Rational(45) * N * N - Rational(70) * N + Rational(24)) / Rational(24) * d(2);
  v -= rat(3, 2) * N * d(4);
  v += (rat(-45, 1) * N * N + Rational(262) * N) / Rational(6) * d(6);
  v += N * (Rational(42) * d(12) + Rational(60) * d(18) + Rational(35) * d(24) - Rational(38) * d(30) -
            Rational(82) * d(42) - Rational(330) * d(60) - Rational(144) * d(84) - Rational(96) * d(90) -
            Rational(144) * d(120) - Rational(96) * d(210));
  return detail::to_integer(v, "I(" + std::to_string(n) + ")");
}

inline std::int64_t R_closed(std::int64_t n) {
  detail::require_n(n);
  const Rational N(static_cast<long long>(n));
  auto d = [n](std::int64_t m) { return Rational(static_cast<long long>(n % m == 0)); };
  Rational v = (N * N * N * N - Rational(6) * N * N * N + Rational(23) * N * N - Rational(42) * N + Rational(24)) /
               Rational(24);
  v += (rat(-5, 1) * N * N * N + Rational(42) * N * N - Rational(40) * N - Rational(48)) / Rational(48) * d(2);
  v -= rat(3, 4) * N * d(4);
  v += (rat(-53, 1) * N * N + Rational(310) * N) / Rational(12) * d(6);
  v += N * (rat(49, 2) * d(12) + Rational(32) * d(18) + Rational(19) * d(24) - Rational(36) * d(30) -
            Rational(50) * d(42) - Rational(190) * d(60) - Rational(78) * d(84) - Rational(48) * d(90) -
            Rational(78) * d(120) - Rational(48) * d(210));
  return detail::to_integer(v, "R(" + std::to_string(n) + ")");
}

// Pairs of diagonals crossing at an interior point other than the center.
inline std::int64_t b2_closed(std::int64_t n) {
  detail::require_n(n);
  return choose(n, 4) - choose(n / 2, 2) * delta(2, n);
}

// b_k = sum_{m >= k} C(m, k) a_m
inline std::int64_t bk_from_ak(const std::map<int, std::int64_t>& a, int k) {
  std::int64_t total = 0;
  for (const auto& [m, count] : a) {
    if (m >= k) total += choose(m, k) * count;
  }
  return total;
}

// Inverse transform by descending k. Throws std::domain_error when the input
// is not the image of a nonnegative a.
inline std::map<int, std::int64_t> ak_from_bk(const std::map<int, std::int64_t>& b) {
  std::map<int, std::int64_t> a;
  if (b.empty()) return a;
  const int top = b.rbegin()->first;
  const int bottom = b.begin()->first;
  for (int k = top; k >= bottom; --k) {
    auto it = b.find(k);
    std::int64_t v = it == b.end() ? 0 : it->second;
    for (const auto& [m, count] : a) v -= choose(m, k) * count;
    if (v < 0) throw std::domain_error("inconsistent b_k: a_" + std::to_string(k) + " would be negative");
    a[k] = v;
  }
  return a;
}

// Closed-form counts, with E and R derived from the a_k and checked against
// the direct formula for R.
inline CountsRecord closed_counts(std::int64_t n) {
  detail::require_n(n);
  CountsRecord rec;
  rec.n = n;
  rec.provenance = Provenance::closed_form;
  for (int k = 2; k <= 7; ++k) rec.a[k] = ak_closed(k, n);
  complete_from_ak(rec);
  if (rec.I != I_closed(n) || rec.R != R_closed(n)) {
    throw std::logic_error("closed forms disagree at n=" + std::to_string(n));
  }
  return rec;
}

}  // namespace polydiag::formulas
