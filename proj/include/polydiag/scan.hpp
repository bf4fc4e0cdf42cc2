#pragma once
// Numeric scan of all diagonal crossings with exact confirmation of every
// coincidence. Slice mode visits one representative per rotation orbit of
// crossing pairs and reports one cluster per rotation orbit of points.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "polydiag/counts.hpp"
#include "polydiag/geometry.hpp"

namespace polydiag::geometry {

enum class ScanMode { full, slice };

inline std::string to_string(ScanMode m) { return m == ScanMode::full ? "full" : "slice"; }

inline ScanMode parse_scan_mode(const std::string& s) {
  if (s == "full") return ScanMode::full;
  if (s == "slice") return ScanMode::slice;
  throw std::invalid_argument("unknown scan mode: " + s);
}

struct Cluster {
  std::vector<Diagonal> diagonals;  // sorted
  double x = 0.0;
  double y = 0.0;
  bool is_center = false;

  int k() const { return static_cast<int>(diagonals.size()); }
};

struct ScanStats {
  std::uint64_t candidates = 0;      // crossing pairs placed, margin copies included
  std::uint64_t numeric_groups = 0;  // groups formed by the tolerance sweep
  std::uint64_t near_misses = 0;     // numeric groups that split under the exact test
  double min_near_miss_separation = std::numeric_limits<double>::infinity();
  double max_cluster_spread = 0.0;   // largest member distance inside a confirmed cluster
  double min_cluster_separation = std::numeric_limits<double>::infinity();  // within 10 tau only
  std::uint64_t exact_evaluations = 0;
};

struct ScanResult {
  int n = 0;
  ScanMode mode = ScanMode::slice;
  std::vector<Cluster> clusters;  // sorted by diagonal set; center last when present
  ScanStats stats;
};

class ScanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kClusterTolerance = 1e-9;
inline constexpr double kSliceMargin = 1e-7;

namespace detail {

struct Candidate {
  double x;
  double y;
  Diagonal d1;
  Diagonal d2;
};

class Vertices {
 public:
  explicit Vertices(int n) : n_(n), xs_(static_cast<std::size_t>(n)), ys_(static_cast<std::size_t>(n)) {
    const long double two_pi = 2.0L * 3.141592653589793238462643383279502884L;
    for (int j = 0; j < n; ++j) {
      const long double t = two_pi * j / n;
      xs_[static_cast<std::size_t>(j)] = std::cos(t);
      ys_[static_cast<std::size_t>(j)] = std::sin(t);
    }
  }

  // Intersection of the two chords' supporting lines.
  std::pair<double, double> intersect(const Diagonal& p, const Diagonal& q) const {
    const long double x1 = xs_[p.a], y1 = ys_[p.a], x2 = xs_[p.b], y2 = ys_[p.b];
    const long double x3 = xs_[q.a], y3 = ys_[q.a], x4 = xs_[q.b], y4 = ys_[q.b];
    const long double d = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4);
    const long double c12 = x1 * y2 - y1 * x2;
    const long double c34 = x3 * y4 - y3 * x4;
    return {static_cast<double>((c12 * (x3 - x4) - (x1 - x2) * c34) / d),
            static_cast<double>((c12 * (y3 - y4) - (y1 - y2) * c34) / d)};
  }

  int n() const { return n_; }

 private:
  int n_;
  std::vector<long double> xs_;
  std::vector<long double> ys_;
};

inline Candidate make_candidate(const Vertices& v, Diagonal d1, Diagonal d2) {
  if (d2 < d1) std::swap(d1, d2);
  auto [x, y] = v.intersect(d1, d2);
  return {x, y, d1, d2};
}

inline double angle_of(double x, double y) {
  double a = std::atan2(y, x);
  if (a < 0) a += 2.0 * std::numbers::pi;
  return a;
}

// Gap sequence is strictly below its other three cyclic shifts.
inline bool is_orbit_representative(int g0, int g1, int g2, int g3) {
  const std::array<int, 4> g{g0, g1, g2, g3};
  for (int r = 1; r < 4; ++r) {
    const std::array<int, 4> s{g[r % 4], g[(r + 1) % 4], g[(r + 2) % 4], g[(r + 3) % 4]};
    if (!(g < s)) return false;
  }
  return true;
}

inline void slice_candidates(const Vertices& v, int b, std::vector<Candidate>& out) {
  const int n = v.n();
  const double width = 2.0 * std::numbers::pi / n;
  for (int c = b + 1; c < n - 1; ++c) {
    for (int d = c + 1; d < n; ++d) {
      if (!is_orbit_representative(b, c - b, d - c, n - d)) continue;
      const Candidate raw = make_candidate(v, Diagonal(0, c), Diagonal(b, d));
      const double theta = angle_of(raw.x, raw.y);
      int j = static_cast<int>(std::floor(theta / width));
      j = ((j % n) + n) % n;
      Candidate cand = make_candidate(v, rotate(raw.d1, -j, n), rotate(raw.d2, -j, n));
      const double phi = std::atan2(cand.y, cand.x);
      out.push_back(cand);
      if (phi < kSliceMargin) {
        out.push_back(make_candidate(v, rotate(cand.d1, 1, n), rotate(cand.d2, 1, n)));
      }
      if (phi > width - kSliceMargin) {
        out.push_back(make_candidate(v, rotate(cand.d1, -1, n), rotate(cand.d2, -1, n)));
      }
    }
  }
}

inline void full_candidates(const Vertices& v, int a, std::vector<Candidate>& out) {
  const int n = v.n();
  for (int b = a + 1; b < n; ++b) {
    for (int c = b + 1; c < n; ++c) {
      for (int d = c + 1; d < n; ++d) {
        const Diagonal d1(a, c), d2(b, d);
        if (is_center_pair(d1, d2, n)) continue;
        out.push_back(make_candidate(v, d1, d2));
      }
    }
  }
}

inline bool candidate_less(const Candidate& p, const Candidate& q) {
  if (p.x != q.x) return p.x < q.x;
  if (p.y != q.y) return p.y < q.y;
  if (p.d1 != q.d1) return p.d1 < q.d1;
  return p.d2 < q.d2;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t size) : parent(size) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Subgroup {
  Diagonal l1, l2;
  std::vector<Diagonal> diagonals;
  std::vector<std::uint32_t> members;
};

struct BucketOutput {
  std::vector<Cluster> clusters;
  std::uint64_t groups = 0;
  std::uint64_t near_misses = 0;
  double min_near_miss = std::numeric_limits<double>::infinity();
  double max_spread = 0.0;
};

inline double distance(double x0, double y0, double x1, double y1) { return std::hypot(x0 - x1, y0 - y1); }

// Splits one numeric group into exactly concurrent subgroups.
inline void confirm_group(const std::vector<Candidate>& cands, const std::vector<std::uint32_t>& group,
                          const Vertices& verts, ConcurrencyOracle& oracle, BucketOutput& out) {
  const int n = verts.n();
  std::vector<Subgroup> subs;
  for (std::uint32_t idx : group) {
    const Candidate& c = cands[idx];
    Subgroup* home = nullptr;
    for (Subgroup& s : subs) {
      bool same = true;
      for (const Diagonal& d : {c.d1, c.d2}) {
        if (d == s.l1 || d == s.l2) continue;
        if (!oracle.concurrent(s.l1, s.l2, d)) {
          same = false;
          break;
        }
      }
      if (same) {
        home = &s;
        break;
      }
    }
    if (home == nullptr) {
      subs.push_back(Subgroup{c.d1, c.d2, {}, {}});
      home = &subs.back();
    }
    home->members.push_back(idx);
    for (const Diagonal& d : {c.d1, c.d2}) {
      if (std::find(home->diagonals.begin(), home->diagonals.end(), d) == home->diagonals.end()) {
        home->diagonals.push_back(d);
      }
    }
  }

  if (subs.size() > 1) {
    out.near_misses += subs.size() - 1;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (std::size_t j = i + 1; j < subs.size(); ++j) {
        const Candidate& p = cands[subs[i].members.front()];
        const Candidate& q = cands[subs[j].members.front()];
        out.min_near_miss = std::min(out.min_near_miss, distance(p.x, p.y, q.x, q.y));
      }
    }
  }

  for (Subgroup& s : subs) {
    const auto k = static_cast<std::int64_t>(s.diagonals.size());
    if (static_cast<std::int64_t>(s.members.size()) != choose(k, 2)) {
      throw ScanError("n=" + std::to_string(n) + ": " + std::to_string(s.members.size()) +
                      " crossing pairs at a point with " + std::to_string(k) + " diagonals near " +
                      to_string(s.l1) + " x " + to_string(s.l2));
    }
    if (k >= 8) {
      throw ScanError("n=" + std::to_string(n) + ": " + std::to_string(k) +
                      " diagonals meet off center at " + to_string(s.l1) + " x " + to_string(s.l2));
    }
    for (std::size_t i = 0; i < s.diagonals.size(); ++i) {
      for (std::size_t j = i + 1; j < s.diagonals.size(); ++j) {
        for (std::size_t m = j + 1; m < s.diagonals.size(); ++m) {
          if (!oracle.concurrent(s.diagonals[i], s.diagonals[j], s.diagonals[m])) {
            throw ScanError("n=" + std::to_string(n) + ": triple " + to_string(s.diagonals[i]) + " " +
                            to_string(s.diagonals[j]) + " " + to_string(s.diagonals[m]) +
                            " failed exact confirmation");
          }
        }
      }
    }
    for (std::uint32_t a : s.members) {
      for (std::uint32_t b : s.members) {
        if (a < b) {
          out.max_spread = std::max(out.max_spread, distance(cands[a].x, cands[a].y, cands[b].x, cands[b].y));
        }
      }
    }
    Cluster cl;
    cl.diagonals = std::move(s.diagonals);
    std::sort(cl.diagonals.begin(), cl.diagonals.end());
    const Candidate& first = cands[s.members.front()];
    cl.x = first.x;
    cl.y = first.y;
    out.clusters.push_back(std::move(cl));
  }
}

// Lexicographically least rotation of a sorted diagonal set.
inline std::vector<Diagonal> canonical_rotation(const std::vector<Diagonal>& ds, int n) {
  std::vector<Diagonal> best = ds;
  std::vector<Diagonal> cand(ds.size());
  for (const Diagonal& d : ds) {
    for (int e : {d.a, d.b}) {
      for (std::size_t i = 0; i < ds.size(); ++i) cand[i] = rotate(ds[i], -e, n);
      std::sort(cand.begin(), cand.end());
      if (cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace detail

inline ScanResult scan(int n, ScanMode mode, int jobs = 1) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  jobs = resolve_jobs(jobs);
  const detail::Vertices verts(n);

  // 1. Candidate crossings.
  std::vector<std::vector<detail::Candidate>> local(static_cast<std::size_t>(jobs));
  parallel_for(jobs, n, [&](int w, int i) {
    if (mode == ScanMode::slice) {
      if (i >= 1) detail::slice_candidates(verts, i, local[static_cast<std::size_t>(w)]);
    } else {
      detail::full_candidates(verts, i, local[static_cast<std::size_t>(w)]);
    }
  });
  std::vector<detail::Candidate> cands;
  {
    std::size_t total = 0;
    for (const auto& l : local) total += l.size();
    cands.reserve(total);
    for (auto& l : local) {
      cands.insert(cands.end(), l.begin(), l.end());
      std::vector<detail::Candidate>().swap(l);
    }
  }
  std::sort(cands.begin(), cands.end(), detail::candidate_less);

  ScanResult result;
  result.n = n;
  result.mode = mode;
  result.stats.candidates = cands.size();

  // 2. Buckets: maximal x-runs with consecutive gaps <= tau.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> buckets;
  for (std::size_t i = 0; i < cands.size();) {
    std::size_t j = i + 1;
    while (j < cands.size() && cands[j].x - cands[j - 1].x <= kClusterTolerance) ++j;
    buckets.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    i = j;
  }

  // 3. Numeric groups per bucket, then exact confirmation.
  std::vector<detail::BucketOutput> outputs(buckets.size());
  std::vector<ConcurrencyOracle> oracles;
  for (int w = 0; w < jobs; ++w) oracles.emplace_back(n);
  parallel_for(jobs, static_cast<int>(buckets.size()), [&](int w, int bi) {
    const auto [lo, hi] = buckets[static_cast<std::size_t>(bi)];
    auto& out = outputs[static_cast<std::size_t>(bi)];
    if (hi - lo == 1) {
      detail::confirm_group(cands, {lo}, verts, oracles[static_cast<std::size_t>(w)], out);
      out.groups = 1;
      return;
    }
    std::vector<std::uint32_t> order(hi - lo);
    std::iota(order.begin(), order.end(), lo);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (cands[a].y != cands[b].y) return cands[a].y < cands[b].y;
      return a < b;
    });
    detail::UnionFind uf(hi - lo);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const auto& p = cands[order[i]];
        const auto& q = cands[order[j]];
        if (q.y - p.y > kClusterTolerance) break;
        if (std::abs(q.x - p.x) <= kClusterTolerance) uf.unite(order[i] - lo, order[j] - lo);
      }
    }
    std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t i = lo; i < hi; ++i) groups[uf.find(i - lo)].push_back(i);
    out.groups = groups.size();
    for (const auto& [root, members] : groups) {
      detail::confirm_group(cands, members, verts, oracles[static_cast<std::size_t>(w)], out);
    }
  });

  // 4. Merge.
  std::vector<Cluster> clusters;
  for (auto& out : outputs) {
    result.stats.numeric_groups += out.groups;
    result.stats.near_misses += out.near_misses;
    result.stats.min_near_miss_separation = std::min(result.stats.min_near_miss_separation, out.min_near_miss);
    result.stats.max_cluster_spread = std::max(result.stats.max_cluster_spread, out.max_spread);
    for (auto& c : out.clusters) clusters.push_back(std::move(c));
  }
  for (const auto& o : oracles) result.stats.exact_evaluations += o.evaluations();

  // Separation audit on the numeric positions of distinct clusters.
  {
    std::vector<std::pair<double, double>> pos;
    pos.reserve(clusters.size());
    for (const auto& c : clusters) pos.emplace_back(c.x, c.y);
    std::sort(pos.begin(), pos.end());
    const double window = 10 * kClusterTolerance;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = i + 1; j < pos.size() && pos[j].first - pos[i].first <= window; ++j) {
        if (std::abs(pos[j].second - pos[i].second) <= window) {
          result.stats.min_cluster_separation = std::min(
              result.stats.min_cluster_separation,
              detail::distance(pos[i].first, pos[i].second, pos[j].first, pos[j].second));
        }
      }
    }
  }

  if (mode == ScanMode::slice) {
    for (auto& c : clusters) c.diagonals = detail::canonical_rotation(c.diagonals, n);
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.diagonals < b.diagonals; });
    clusters.erase(std::unique(clusters.begin(), clusters.end(),
                               [](const Cluster& a, const Cluster& b) { return a.diagonals == b.diagonals; }),
                   clusters.end());
  } else {
    std::sort(clusters.begin(), clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.diagonals < b.diagonals; });
  }
  for (auto& c : clusters) {
    auto [x, y] = verts.intersect(c.diagonals[0], c.diagonals[1]);
    c.x = x;
    c.y = y;
  }

  std::int64_t pairs = 0;
  for (const auto& c : clusters) pairs += choose(c.k(), 2);
  const std::int64_t off_center_pairs = choose(n, 4) - choose(n / 2, 2) * delta(2, n);
  const std::int64_t expected = mode == ScanMode::slice ? off_center_pairs / n : off_center_pairs;
  if (pairs != expected) {
    throw ScanError("n=" + std::to_string(n) + ": found " + std::to_string(pairs) + " crossing pairs, expected " +
                    std::to_string(expected));
  }

  if (n % 2 == 0 && n >= 4) {
    Cluster center;
    for (int j = 0; j < n / 2; ++j) center.diagonals.emplace_back(j, j + n / 2);
    center.is_center = true;
    clusters.push_back(std::move(center));
  }
  result.clusters = std::move(clusters);
  return result;
}

// Counts a_k from a scan; slice-mode orbit counts are multiplied by n.
inline CountsRecord counts_from_scan(const ScanResult& scan) {
  CountsRecord rec;
  rec.n = scan.n;
  rec.provenance = Provenance::geometric;
  for (int k = 2; k <= 7; ++k) rec.a[k] = 0;
  const std::int64_t factor = scan.mode == ScanMode::slice ? scan.n : 1;
  for (const auto& c : scan.clusters) {
    if (c.is_center) continue;
    rec.a[c.k()] += factor;
  }
  complete_from_ak(rec);
  return rec;
}

inline CountsRecord count_all(int n, ScanMode mode = ScanMode::slice, int jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  CountsRecord rec = counts_from_scan(scan(n, mode, jobs));
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace polydiag::geometry
