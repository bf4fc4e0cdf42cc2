#pragma once
// Catalog of concurrent-diagonal configurations: the trivial solutions, the
// one-parameter families, the sporadic solutions, and the four- and
// five-diagonal families. Classification and per-n enumeration of triples.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polydiag/catalog_tables.hpp"
#include "polydiag/exactnum.hpp"

namespace polydiag::catalog {

using exactnum::Rational;
using exactnum::rat;

// a + b*t
struct AffineForm {
  Rational a;
  Rational b;

  Rational at(const Rational& t) const { return a + b * t; }

  std::string str() const {
    if (b.is_zero()) return a.str();
    std::string coef;
    const Rational mag = b.sign() < 0 ? -b : b;
    if (mag != Rational(1)) coef = mag.str();
    std::string out;
    if (!a.is_zero()) out = a.str() + (b.sign() < 0 ? "-" : "+");
    else if (b.sign() < 0) out = "-";
    return out + coef + "t";
  }

  // Accepts forms like "1/6", "t", "2t", "1/3-2t", "-1/6+4t".
  static AffineForm parse(std::string_view text) {
    AffineForm f;
    std::size_t i = 0;
    while (i < text.size()) {
      int sign = 1;
      if (text[i] == '+' || text[i] == '-') {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && text[j] != '+' && text[j] != '-') ++j;
      std::string_view term = text.substr(i, j - i);
      if (term.empty()) throw std::invalid_argument("bad affine form: " + std::string(text));
      if (term.back() == 't') {
        term.remove_suffix(1);
        const Rational c = term.empty() ? Rational(1) : Rational::parse(term);
        f.b += sign < 0 ? -c : c;
      } else {
        const Rational c = Rational::parse(term);
        f.a += sign < 0 ? -c : c;
      }
      i = j;
    }
    return f;
  }

  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// Six arcs in circular order u, x, v, y, w, z. Positions 0, 2, 4 form the
// (U, V, W) class and positions 1, 3, 5 the (X, Y, Z) class.
struct ArcSextuple {
  std::array<Rational, 6> arcs;

  static ArcSextuple from_uvwxyz(const std::array<Rational, 6>& t) {
    return ArcSextuple{{t[0], t[3], t[1], t[4], t[2], t[5]}};
  }

  static ArcSextuple from_counts(const std::array<std::int64_t, 6>& c, std::int64_t n) {
    ArcSextuple s;
    for (int i = 0; i < 6; ++i) s.arcs[i] = rat(c[i], n);
    return s;
  }

  void validate() const { exactnum::check_arc_partition(arcs); }

  bool satisfies_identity() const {
    return exactnum::sin_product_equal(arcs[0], arcs[2], arcs[4], arcs[1], arcs[3], arcs[5]);
  }

  std::string str() const {
    std::string out = "(";
    for (int i = 0; i < 6; ++i) {
      if (i) out += ", ";
      out += arcs[i].str();
    }
    return out + ")";
  }

  friend bool operator==(const ArcSextuple&, const ArcSextuple&) = default;
};

struct CanonicalSextuple {
  std::array<Rational, 3> uvw;
  std::array<Rational, 3> xyz;

  std::array<Rational, 6> flat() const { return {uvw[0], uvw[1], uvw[2], xyz[0], xyz[1], xyz[2]}; }

  friend bool operator==(const CanonicalSextuple&, const CanonicalSextuple&) = default;
};

// Sort each class; interchange the classes if (U,V,W) > (X,Y,Z)
// lexicographically (so U <= X always holds).
inline CanonicalSextuple canonical_from_classes(std::array<Rational, 3> a, std::array<Rational, 3> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) std::swap(a, b);
  return {a, b};
}

inline CanonicalSextuple canonical_sextuple(const ArcSextuple& s) {
  return canonical_from_classes({s.arcs[0], s.arcs[2], s.arcs[4]}, {s.arcs[1], s.arcs[3], s.arcs[5]});
}

struct FamilyPattern {
  std::array<AffineForm, 6> forms;  // U V W X Y Z
  Rational t_min;
  Rational t_max;

  bool in_range(const Rational& t) const { return t_min < t && t < t_max; }

  std::array<Rational, 6> at(const Rational& t) const {
    std::array<Rational, 6> out;
    for (int i = 0; i < 6; ++i) out[i] = forms[i].at(t);
    return out;
  }
};

struct SporadicSolution {
  int denominator = 0;
  std::array<Rational, 6> uvwxyz;
  std::string relation_type;
};

struct MultiFamily {
  int k = 0;
  std::vector<AffineForm> forms;  // 2k arcs, counterclockwise
  Rational t_min;
  Rational t_max;

  bool in_range(const Rational& t) const { return t_min < t && t < t_max; }

  std::vector<Rational> at(const Rational& t) const {
    std::vector<Rational> out;
    for (const auto& f : forms) out.push_back(f.at(t));
    return out;
  }
};

struct ClassLabel {
  enum class Kind { trivial, family, sporadic, not_concurrent };
  Kind kind = Kind::not_concurrent;
  int index = 0;  // 1-based family or sporadic row
  Rational t;     // family parameter

  static ClassLabel trivial() { return {Kind::trivial, 0, Rational()}; }
  static ClassLabel family(int i, Rational t) { return {Kind::family, i, std::move(t)}; }
  static ClassLabel sporadic(int i) { return {Kind::sporadic, i, Rational()}; }
  static ClassLabel not_concurrent() { return {}; }

  std::string str() const;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

namespace detail {

inline std::optional<Rational> solve_parameter(const AffineForm* forms, const Rational* values,
                                               std::size_t count) {
  std::optional<Rational> t;
  for (std::size_t j = 0; j < count; ++j) {
    const AffineForm& f = forms[j];
    if (f.b.is_zero()) {
      if (f.a != values[j]) return std::nullopt;
      continue;
    }
    Rational tj = (values[j] - f.a) / f.b;
    if (t && *t != tj) return std::nullopt;
    t = std::move(tj);
  }
  return t;
}

inline std::array<Rational, 6> parse_six(const std::array<std::string_view, 6>& row) {
  std::array<Rational, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = Rational::parse(row[i]);
  return out;
}

inline std::int64_t to_int64(const polydiag::BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace detail

class Catalog {
 public:
  const std::vector<FamilyPattern>& families() const { return families_; }
  const std::vector<SporadicSolution>& sporadics() const { return sporadics_; }
  const std::vector<MultiFamily>& multi_families(int k) const {
    if (k == 4) return four_;
    if (k == 5) return five_;
    throw std::invalid_argument("multi-diagonal families exist only for k = 4 or 5");
  }
  const std::vector<CanonicalSextuple>& sporadic_keys() const { return sporadic_keys_; }

  // Throws std::logic_error naming the first row that fails.
  void self_check() const {
    for (std::size_t i = 0; i < sporadics_.size(); ++i) {
      const auto& row = sporadics_[i].uvwxyz;
      Rational total;
      for (const auto& v : row) total += v;
      if (total != Rational(1)) throw std::logic_error("sporadic row " + std::to_string(i + 1) + " does not sum to 1");
      if (!exactnum::sin_product_equal(row[0], row[1], row[2], row[3], row[4], row[5])) {
        throw std::logic_error("sporadic row " + std::to_string(i + 1) + " fails the sine identity");
      }
    }
    for (std::size_t i = 0; i < families_.size(); ++i) {
      check_forms(families_[i].forms.data(), 6, "family " + std::to_string(i + 1));
      const Rational mid = (families_[i].t_min + families_[i].t_max) / Rational(2);
      const auto v = families_[i].at(mid);
      if (!exactnum::sin_product_equal(v[0], v[1], v[2], v[3], v[4], v[5])) {
        throw std::logic_error("family " + std::to_string(i + 1) + " fails the sine identity");
      }
    }
    for (int k : {4, 5}) {
      const auto& rows = multi_families(k);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        check_forms(rows[i].forms.data(), rows[i].forms.size(),
                    std::to_string(k) + "-diagonal family " + std::to_string(i + 1));
      }
    }
  }

  static const Catalog& instance() {
    static const Catalog cat = [] {
      Catalog c;
      c.load();
      c.self_check();
      return c;
    }();
    return cat;
  }

 private:
  Catalog() = default;

  static void check_forms(const AffineForm* forms, std::size_t count, const std::string& what) {
    Rational a, b;
    for (std::size_t i = 0; i < count; ++i) {
      a += forms[i].a;
      b += forms[i].b;
    }
    if (a != Rational(1) || !b.is_zero()) throw std::logic_error(what + " does not sum to 1");
  }

  void load() {
    for (const auto& row : tables::kFamilies) {
      FamilyPattern f;
      for (int i = 0; i < 6; ++i) f.forms[i] = AffineForm::parse(row.uvwxyz[i]);
      f.t_min = Rational::parse(row.t_min);
      f.t_max = Rational::parse(row.t_max);
      families_.push_back(std::move(f));
    }
    for (const auto& row : tables::kSporadics) {
      SporadicSolution s{row.denominator, detail::parse_six(row.uvwxyz), std::string(row.relation_type)};
      sporadic_keys_.push_back(canonical_from_classes({s.uvwxyz[0], s.uvwxyz[1], s.uvwxyz[2]},
                                                      {s.uvwxyz[3], s.uvwxyz[4], s.uvwxyz[5]}));
      sporadics_.push_back(std::move(s));
    }
    auto load_multi = [](const auto& rows, int k, std::vector<MultiFamily>& out) {
      for (const auto& row : rows) {
        MultiFamily m;
        m.k = k;
        for (const auto& cell : row.arcs) m.forms.push_back(AffineForm::parse(cell));
        m.t_min = Rational::parse(row.t_min);
        m.t_max = Rational::parse(row.t_max);
        out.push_back(std::move(m));
      }
    };
    load_multi(tables::kFourDiagonalFamilies, 4, four_);
    load_multi(tables::kFiveDiagonalFamilies, 5, five_);
  }

  std::vector<FamilyPattern> families_;
  std::vector<SporadicSolution> sporadics_;
  std::vector<CanonicalSextuple> sporadic_keys_;
  std::vector<MultiFamily> four_;
  std::vector<MultiFamily> five_;
};

inline const Catalog& catalog() { return Catalog::instance(); }

inline std::string ClassLabel::str() const {
  switch (kind) {
    case Kind::trivial:
      return "Trivial";
    case Kind::family:
      return "Family #" + std::to_string(index) + " (t = " + t.str() + ")";
    case Kind::sporadic:
      return "Sporadic #" + std::to_string(index) + " (denominator " +
             std::to_string(catalog().sporadics().at(static_cast<std::size_t>(index - 1)).denominator) + ")";
    case Kind::not_concurrent:
      return "NotConcurrent";
  }
  return "?";
}

// Every catalog entry matching the sextuple, in priority order:
// Trivial, then families by index (and t), then sporadics.
inline std::vector<ClassLabel> classify_all(const ArcSextuple& s) {
  s.validate();
  const CanonicalSextuple c = canonical_sextuple(s);
  std::vector<ClassLabel> out;

  if (c.uvw == c.xyz && c.uvw[0] + c.uvw[1] + c.uvw[2] == rat(1, 2)) out.push_back(ClassLabel::trivial());

  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const auto& fams = catalog().families();
  for (std::size_t i = 0; i < fams.size(); ++i) {
    std::vector<Rational> ts;
    for (int swap = 0; swap < 2; ++swap) {
      const auto& first = swap ? c.xyz : c.uvw;
      const auto& second = swap ? c.uvw : c.xyz;
      for (const auto& p : kPerms) {
        for (const auto& q : kPerms) {
          std::array<Rational, 6> values{first[p[0]], first[p[1]], first[p[2]],
                                         second[q[0]], second[q[1]], second[q[2]]};
          auto t = detail::solve_parameter(fams[i].forms.data(), values.data(), 6);
          if (t && fams[i].in_range(*t) && std::find(ts.begin(), ts.end(), *t) == ts.end()) {
            ts.push_back(*t);
          }
        }
      }
    }
    std::sort(ts.begin(), ts.end());
    for (auto& t : ts) out.push_back(ClassLabel::family(static_cast<int>(i + 1), t));
  }

  const auto& keys = catalog().sporadic_keys();
  for (std::size_t j = 0; j < keys.size(); ++j) {
    if (keys[j] == c) out.push_back(ClassLabel::sporadic(static_cast<int>(j + 1)));
  }
  return out;
}

inline ClassLabel classify(const ArcSextuple& s) {
  auto all = classify_all(s);
  return all.empty() ? ClassLabel::not_concurrent() : all.front();
}

// ---------------------------------------------------------------------------
// Per-n enumeration of concurrent triples

struct TripleClass {
  std::array<std::int64_t, 6> counts;  // arcs as multiples of 1/n, circular order
  ArcSextuple arcs;
  ClassLabel label;
};

namespace detail {

inline std::array<std::int64_t, 6> least_cyclic_shift(const std::array<std::int64_t, 6>& c) {
  std::array<std::int64_t, 6> best = c;
  for (int r = 1; r < 6; ++r) {
    std::array<std::int64_t, 6> cand;
    for (int i = 0; i < 6; ++i) cand[i] = c[(i + r) % 6];
    if (cand < best) best = cand;
  }
  return best;
}

// Places each class in alternate positions in every order.
inline void add_arrangements(const std::array<Rational, 6>& uvwxyz, std::int64_t n,
                             std::map<std::array<std::int64_t, 6>, bool>& out) {
  std::array<std::int64_t, 6> v;
  for (int i = 0; i < 6; ++i) {
    const Rational scaled = uvwxyz[i] * Rational(n);
    if (!scaled.is_integer() || scaled.sign() <= 0) return;
    v[i] = to_int64(scaled.num());
  }
  std::array<int, 3> p{0, 1, 2};
  do {
    std::array<int, 3> q{0, 1, 2};
    do {
      std::array<std::int64_t, 6> c{v[p[0]], v[3 + q[0]], v[p[1]], v[3 + q[1]], v[p[2]], v[3 + q[2]]};
      out.emplace(least_cyclic_shift(c), true);
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace detail

// All concurrent triples of diagonals of the regular n-gon, one entry per
// rotation class, sorted by the least cyclic shift of the arc counts.
inline std::vector<TripleClass> enumerate_triples(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  std::map<std::array<std::int64_t, 6>, bool> found;

  if (n % 2 == 0) {
    const std::int64_t half = n / 2;
    for (std::int64_t a = 1; 3 * a <= half; ++a) {
      for (std::int64_t b = a; a + 2 * b <= half; ++b) {
        const std::int64_t c = half - a - b;
        std::array<Rational, 6> t{rat(a, n), rat(b, n), rat(c, n), rat(a, n), rat(b, n), rat(c, n)};
        detail::add_arrangements(t, n, found);
      }
    }
  }
  if (n % 6 == 0) {
    for (const auto& fam : catalog().families()) {
      for (std::int64_t m = 1; m < n; ++m) {
        const Rational t = rat(m, n);
        if (fam.in_range(t)) detail::add_arrangements(fam.at(t), n, found);
      }
    }
  }
  for (const auto& sp : catalog().sporadics()) {
    if (n % sp.denominator == 0) detail::add_arrangements(sp.uvwxyz, n, found);
  }

  std::vector<TripleClass> out;
  out.reserve(found.size());
  for (const auto& [counts, unused] : found) {
    TripleClass tc{counts, ArcSextuple::from_counts(counts, n), {}};
    tc.label = classify(tc.arcs);
    out.push_back(std::move(tc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configurations of four or more diagonals

struct MultiResult {
  enum class Kind { in_family, exceptional, invalid };
  Kind kind = Kind::invalid;
  int index = 0;  // 1-based family row
  Rational t;
  std::int64_t denominator = 0;
  bool denominator_listed = false;  // denominator appears in the exceptional list

  std::string str() const {
    switch (kind) {
      case Kind::in_family:
        return "InFamily #" + std::to_string(index) + " (t = " + t.str() + ")";
      case Kind::exceptional:
        return "Exceptional (denominator " + std::to_string(denominator) + ")";
      case Kind::invalid:
        return "Invalid";
    }
    return "?";
  }
};

inline bool is_exceptional_denominator(std::int64_t d) {
  const auto& list = tables::kExceptionalDenominators;
  return std::find(list.begin(), list.end(), d) != list.end();
}

// 2k arcs in counterclockwise order around the point where k diagonals meet.
inline MultiResult validate_multi(const std::vector<Rational>& arcs, int k) {
  if (k < 4 || k > 7) throw std::invalid_argument("validate_multi expects 4 <= k <= 7");
  if (arcs.size() != static_cast<std::size_t>(2 * k)) {
    throw std::invalid_argument("expected " + std::to_string(2 * k) + " arcs");
  }
  MultiResult res;
  Rational total;
  for (const auto& a : arcs) {
    if (a.sign() <= 0) return res;
    total += a;
  }
  if (total != Rational(1)) return res;

  if (k <= 5) {
    const auto& rows = catalog().multi_families(k);
    const std::size_t len = arcs.size();
    std::vector<Rational> seq(len);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t r = 0; r < len; ++r) {
        for (int reflect = 0; reflect < 2; ++reflect) {
          for (std::size_t j = 0; j < len; ++j) {
            seq[j] = arcs[reflect ? (r + len - j) % len : (r + j) % len];
          }
          auto t = detail::solve_parameter(rows[i].forms.data(), seq.data(), len);
          if (t && rows[i].in_range(*t)) {
            res.kind = MultiResult::Kind::in_family;
            res.index = static_cast<int>(i + 1);
            res.t = *t;
            return res;
          }
        }
      }
    }
  }
  polydiag::BigInt d = 1;
  for (const auto& a : arcs) d = boost::multiprecision::lcm(d, a.den());
  res.kind = MultiResult::Kind::exceptional;
  res.denominator = detail::to_int64(d);
  res.denominator_listed = is_exceptional_denominator(res.denominator);
  return res;
}

// ---------------------------------------------------------------------------
// Export

inline void export_catalog_csv(std::ostream& os) {
  os << "table,index,k,denominator,t_min,t_max,relation_type,entries\n";
  auto join = [](const auto& forms) {
    std::string s;
    for (const auto& f : forms) {
      if (!s.empty()) s += ' ';
      s += f.str();
    }
    return s;
  };
  const auto& cat = catalog();
  for (std::size_t i = 0; i < cat.families().size(); ++i) {
    const auto& f = cat.families()[i];
    os << "family3," << i + 1 << ",3,," << f.t_min << ',' << f.t_max << ",," << join(f.forms) << '\n';
  }
  for (std::size_t i = 0; i < cat.sporadics().size(); ++i) {
    const auto& s = cat.sporadics()[i];
    os << "sporadic," << i + 1 << ",3," << s.denominator << ",,," << s.relation_type << ','
       << join(s.uvwxyz) << '\n';
  }
  for (int k : {4, 5}) {
    const auto& rows = cat.multi_families(k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << "family" << k << ',' << i + 1 << ',' << k << ",," << rows[i].t_min << ',' << rows[i].t_max
         << ",," << join(rows[i].forms) << '\n';
    }
  }
}

}  // namespace polydiag::catalog
