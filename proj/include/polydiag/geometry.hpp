#pragma once
// Diagonals of the regular n-gon, exact concurrency of diagonal triples, and
// the exhaustive triple scan used to audit the catalog.

#include <algorithm>
#include <array>
#include <atomic>
#include <compare>
#include <exception>
#include <mutex>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polydiag/catalog.hpp"
#include "polydiag/exactnum.hpp"

namespace polydiag::geometry {

// Chord between vertices a < b; vertex j sits at angle 2*pi*j/n.
struct Diagonal {
  int a = 0;
  int b = 0;

  Diagonal() = default;
  Diagonal(int p, int q) : a(std::min(p, q)), b(std::max(p, q)) {}

  bool is_diameter(int n) const { return 2 * (b - a) == n; }
  bool has_endpoint(int v) const { return a == v || b == v; }

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

inline std::string to_string(const Diagonal& d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

inline bool is_diagonal(const Diagonal& d, int n) {
  const int gap = d.b - d.a;
  return d.a >= 0 && d.b < n && gap >= 2 && gap <= n - 2;
}

inline Diagonal rotate(const Diagonal& d, int r, int n) {
  return Diagonal(((d.a + r) % n + n) % n, ((d.b + r) % n + n) % n);
}

// Endpoints are four distinct vertices that interleave around the circle.
inline bool crossing(const Diagonal& d1, const Diagonal& d2, int /*n*/) {
  if (d1.has_endpoint(d2.a) || d1.has_endpoint(d2.b)) return false;
  const bool a_inside = d1.a < d2.a && d2.a < d1.b;
  const bool b_inside = d1.a < d2.b && d2.b < d1.b;
  return a_inside != b_inside;
}

inline bool is_center_pair(const Diagonal& d1, const Diagonal& d2, int n) {
  return n % 2 == 0 && d1.is_diameter(n) && d2.is_diameter(n);
}

using Triple = std::array<Diagonal, 3>;

inline Triple sorted_triple(Diagonal a, Diagonal b, Diagonal c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Arc counts (multiples of 1/n) in circular order starting at the smallest
// endpoint. The chords pair endpoints p0-p3, p1-p4, p2-p5.
inline std::array<std::int64_t, 6> arc_counts_of_triple(const Diagonal& d1, const Diagonal& d2,
                                                        const Diagonal& d3, int n) {
  std::array<int, 6> p{d1.a, d1.b, d2.a, d2.b, d3.a, d3.b};
  std::sort(p.begin(), p.end());
  for (int i = 1; i < 6; ++i) {
    if (p[i] == p[i - 1]) throw std::invalid_argument("diagonals share an endpoint");
  }
  if (!crossing(d1, d2, n) || !crossing(d1, d3, n) || !crossing(d2, d3, n)) {
    throw std::invalid_argument("diagonals do not pairwise cross");
  }
  std::array<std::int64_t, 6> c;
  for (int i = 0; i < 5; ++i) c[i] = p[i + 1] - p[i];
  c[5] = n - p[5] + p[0];
  return c;
}

inline catalog::ArcSextuple arcs_of_triple(const Diagonal& d1, const Diagonal& d2, const Diagonal& d3,
                                           int n) {
  return catalog::ArcSextuple::from_counts(arc_counts_of_triple(d1, d2, d3, n), n);
}

// Exact concurrency decisions for one n, memoized by the canonical arc key.
// Not thread-safe; each worker owns one.
class ConcurrencyOracle {
 public:
  explicit ConcurrencyOracle(int n) : n_(n), test_(4 * static_cast<std::int64_t>(n)) {
    terms_.reserve(12);
  }

  int n() const { return n_; }
  std::uint64_t evaluations() const { return evaluations_; }

  // counts: arcs u,x,v,y,w,z as multiples of 1/n.
  bool concurrent_counts(const std::array<std::int64_t, 6>& c) {
    std::array<std::int64_t, 3> a{c[0], c[2], c[4]};
    std::array<std::int64_t, 3> b{c[1], c[3], c[5]};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (b < a) std::swap(a, b);
    const bool packable = n_ < 1024;
    std::uint64_t key = 0;
    if (packable) {
      for (std::int64_t v : {a[0], a[1], a[2], b[0], b[1], b[2]}) key = (key << 10) | static_cast<std::uint64_t>(v);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const bool result = evaluate(a, b);
    if (packable) memo_.emplace(key, result);
    return result;
  }

  // False for triples that share endpoints or do not pairwise cross.
  bool concurrent(const Diagonal& d1, const Diagonal& d2, const Diagonal& d3) {
    if (!crossing(d1, d2, n_) || !crossing(d1, d3, n_) || !crossing(d2, d3, n_)) return false;
    return concurrent_counts(arc_counts_of_triple(d1, d2, d3, n_));
  }

 private:
  // 2n * alpha_j for the six alphas; e^(i pi alpha) is z_{4n}^(2n alpha).
  bool evaluate(const std::array<std::int64_t, 3>& a, const std::array<std::int64_t, 3>& b) {
    ++evaluations_;
    const std::int64_t n = n_;
    const std::int64_t u = a[0], v = a[1], w = a[2], x = b[0], y = b[1], z = b[2];
    const std::array<std::int64_t, 6> k{
        2 * (v + w - u) - n, 2 * (w + u - v) - n, 2 * (u + v - w) - n,
        2 * (y + z - x) + n, 2 * (z + x - y) + n, 2 * (x + y - z) + n,
    };
    terms_.clear();
    for (std::int64_t e : k) {
      terms_.emplace_back(e, 1);
      terms_.emplace_back(-e, 1);
    }
    return test_.is_zero_terms(terms_);
  }

  int n_;
  exactnum::CyclotomicZeroTest test_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::vector<std::pair<std::int64_t, std::int64_t>> terms_;
  std::uint64_t evaluations_ = 0;
};

// Exact test through the general rational path.
inline bool concurrent_exact(const Diagonal& d1, const Diagonal& d2, const Diagonal& d3, int n) {
  return arcs_of_triple(d1, d2, d3, n).satisfies_identity();
}

inline int resolve_jobs(int jobs) {
  if (jobs < 0) throw std::invalid_argument("jobs must be >= 0");
  if (jobs == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  return jobs;
}

// Runs body(worker, item) for item in [0, count) on `jobs` threads.
template <class Body>
void parallel_for(int jobs, int count, Body body) {
  std::atomic<int> next{0};
  auto worker = [&](int w) {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(w, i);
  };
  if (jobs <= 1 || count <= 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < jobs; ++w) {
    threads.emplace_back([&, w] {
      try {
        worker(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

// Every concurrent triple of diagonals, found by testing each set of six
// vertices containing vertex 0 and expanding by rotation.
inline std::set<Triple> concurrent_triples(int n, int jobs = 1) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  jobs = resolve_jobs(jobs);
  std::vector<std::vector<std::array<int, 6>>> found(static_cast<std::size_t>(jobs));
  std::vector<ConcurrencyOracle> oracles;
  for (int w = 0; w < jobs; ++w) oracles.emplace_back(n);
  parallel_for(jobs, n, [&](int w, int p1) {
    if (p1 == 0) return;
    auto& oracle = oracles[static_cast<std::size_t>(w)];
    for (int p2 = p1 + 1; p2 < n; ++p2) {
      for (int p3 = p2 + 1; p3 < n; ++p3) {
        for (int p4 = p3 + 1; p4 < n; ++p4) {
          for (int p5 = p4 + 1; p5 < n; ++p5) {
            const std::array<std::int64_t, 6> c{p1, p2 - p1, p3 - p2, p4 - p3, p5 - p4, n - p5};
            if (oracle.concurrent_counts(c)) found[static_cast<std::size_t>(w)].push_back({0, p1, p2, p3, p4, p5});
          }
        }
      }
    }
  });
  std::set<Triple> out;
  for (const auto& list : found) {
    for (const auto& p : list) {
      const Triple base{Diagonal(p[0], p[3]), Diagonal(p[1], p[4]), Diagonal(p[2], p[5])};
      for (int r = 0; r < n; ++r) {
        out.insert(sorted_triple(rotate(base[0], r, n), rotate(base[1], r, n), rotate(base[2], r, n)));
      }
    }
  }
  return out;
}

// All literal triples obtained by placing each arc pattern at every vertex.
inline std::set<Triple> rotation_expansion(const std::vector<catalog::TripleClass>& classes, int n) {
  std::set<Triple> out;
  for (const auto& tc : classes) {
    std::array<int, 6> p{};
    for (int i = 1; i < 6; ++i) p[i] = p[i - 1] + static_cast<int>(tc.counts[i - 1]);
    for (int r = 0; r < n; ++r) {
      out.insert(sorted_triple(Diagonal((p[0] + r) % n, (p[3] + r) % n), Diagonal((p[1] + r) % n, (p[4] + r) % n),
                               Diagonal((p[2] + r) % n, (p[5] + r) % n)));
    }
  }
  return out;
}

}  // namespace polydiag::geometry
