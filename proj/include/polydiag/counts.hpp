#pragma once
// Per-n intersection and region counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

namespace polydiag {

enum class Provenance { geometric, closed_form };

inline std::string to_string(Provenance p) { return p == Provenance::geometric ? "geometric" : "closed_form"; }

struct CountsRecord {
  std::int64_t n = 0;
  std::map<int, std::int64_t> a;  // k -> interior non-center points with exactly k diagonals
  std::int64_t I = 0;
  std::int64_t R = 0;
  std::int64_t E = 0;
  Provenance provenance = Provenance::geometric;
  double elapsed_ms = 0.0;

  std::int64_t a_k(int k) const {
    auto it = a.find(k);
    return it == a.end() ? 0 : it->second;
  }

  // Same counts, ignoring provenance and timing.
  bool same_counts(const CountsRecord& o) const {
    for (int k = 2; k <= std::max(max_k(), o.max_k()); ++k) {
      if (a_k(k) != o.a_k(k)) return false;
    }
    return n == o.n && I == o.I && R == o.R && E == o.E;
  }

  int max_k() const {
    int m = 0;
    for (const auto& [k, c] : a) {
      if (c != 0) m = std::max(m, k);
    }
    return m;
  }
};

inline std::int64_t delta(std::int64_t m, std::int64_t n) { return n % m == 0 ? 1 : 0; }

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Fills I, E and R from n and the a_k: V = n + I,
// 2E = n(n-1) + n*delta_2(n) + sum 2k a_k, R = E - V + 1.
inline void complete_from_ak(CountsRecord& rec) {
  const std::int64_t n = rec.n;
  std::int64_t sum_a = 0, sum_ka = 0;
  for (const auto& [k, c] : rec.a) {
    sum_a += c;
    sum_ka += static_cast<std::int64_t>(k) * c;
  }
  rec.I = delta(2, n) + sum_a;
  const std::int64_t two_e = n * (n - 1) + n * delta(2, n) + 2 * sum_ka;
  rec.E = two_e / 2;
  rec.R = rec.E - (n + rec.I) + 1;
}

}  // namespace polydiag
