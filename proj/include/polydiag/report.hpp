#pragma once
// JSON and CSV output for counts, tame functions and relations, plus the
// on-disk counts cache.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "polydiag/counts.hpp"
#include "polydiag/formulas.hpp"
#include "polydiag/relations.hpp"
#include "polydiag/scan.hpp"
#include "polydiag/version.hpp"

namespace polydiag::report {

using exactnum::Rational;

using Json = nlohmann::ordered_json;

inline Provenance parse_provenance(const std::string& s) {
  if (s == "geometric") return Provenance::geometric;
  if (s == "closed_form") return Provenance::closed_form;
  throw std::invalid_argument("unknown provenance: " + s);
}

inline Json to_json(const CountsRecord& rec, bool with_elapsed = true) {
  Json a = Json::object();
  for (int k = 2; k <= std::max(7, rec.max_k()); ++k) a[std::to_string(k)] = rec.a_k(k);
  Json j;
  j["n"] = rec.n;
  j["a"] = std::move(a);
  j["I"] = rec.I;
  j["R"] = rec.R;
  j["E"] = rec.E;
  j["provenance"] = to_string(rec.provenance);
  if (with_elapsed) j["elapsed_ms"] = rec.elapsed_ms;
  return j;
}

inline CountsRecord counts_from_json(const Json& j) {
  CountsRecord rec;
  rec.n = j.at("n").get<std::int64_t>();
  for (const auto& [k, v] : j.at("a").items()) rec.a[std::stoi(k)] = v.get<std::int64_t>();
  rec.I = j.at("I").get<std::int64_t>();
  rec.R = j.at("R").get<std::int64_t>();
  rec.E = j.at("E").get<std::int64_t>();
  rec.provenance = parse_provenance(j.at("provenance").get<std::string>());
  if (j.contains("elapsed_ms")) rec.elapsed_ms = j.at("elapsed_ms").get<double>();
  return rec;
}

inline std::string csv_header(bool per_slice) {
  return per_slice ? "n,a2/n,a3/n,a4/n,a5/n,a6/n,a7/n,(I-1)/n" : "n,a2,a3,a4,a5,a6,a7,I,R";
}

// Per-slice rows divide by n. The last column is (I - delta_2(n))/n, the
// number of non-center points in one slice.
inline std::string csv_row(const CountsRecord& rec, bool per_slice) {
  std::ostringstream os;
  os << rec.n;
  if (!per_slice) {
    for (int k = 2; k <= 7; ++k) os << ',' << rec.a_k(k);
    os << ',' << rec.I << ',' << rec.R;
    return os.str();
  }
  auto slice = [&](std::int64_t v, const char* what) {
    if (v % rec.n != 0) {
      throw std::logic_error(std::string(what) + " is not divisible by n=" + std::to_string(rec.n));
    }
    return v / rec.n;
  };
  for (int k = 2; k <= 7; ++k) os << ',' << slice(rec.a_k(k), ("a" + std::to_string(k)).c_str());
  os << ',' << slice(rec.I - delta(2, rec.n), "I - delta_2");
  return os.str();
}

inline void write_table_text(std::ostream& os, const std::vector<CountsRecord>& rows, bool per_slice) {
  std::vector<std::string> head;
  if (per_slice) head = {"n", "a2/n", "a3/n", "a4/n", "a5/n", "a6/n", "a7/n", "(I-1)/n"};
  else head = {"n", "a2", "a3", "a4", "a5", "a6", "a7", "I", "R"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    std::stringstream ss(csv_row(r, per_slice));
    for (std::string cell; std::getline(ss, cell, ',');) line.push_back(cell);
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& line : cells) width[c] = std::max(width[c], line[c].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << line[c];
    }
    os << '\n';
  };
  emit(head);
  for (const auto& line : cells) emit(line);
}

inline Json to_json(const formulas::TameFunction& f) {
  Json j = Json::object();
  for (formulas::Tag t : formulas::kBasis) {
    const Rational c = f.coefficient(t);
    if (!c.is_zero()) j[std::string(formulas::tag_name(t))] = c.str();
  }
  return j;
}

inline formulas::TameFunction tame_from_json(const Json& j) {
  formulas::TameFunction f;
  for (const auto& [tag, value] : j.items()) f.set(formulas::parse_tag(tag), Rational::parse(value.get<std::string>()));
  return f;
}

// Each relation is a list of [order, exponent, multiplicity] with the root
// in lowest terms.
inline Json to_json(const std::vector<relations::ClassEntry>& classes) {
  Json out = Json::array();
  for (const auto& e : classes) {
    Json rels = Json::array();
    for (const auto& r : e.relations) {
      Json terms = Json::array();
      for (const auto& [root, mult] : r.terms()) {
        const auto red = root.reduced();
        terms.push_back(Json::array({red.order(), red.exponent(), mult}));
      }
      rels.push_back(std::move(terms));
    }
    Json c;
    c["class_label"] = e.cls.label;
    c["count"] = e.cls.count;
    c["relations"] = std::move(rels);
    out.push_back(std::move(c));
  }
  return out;
}

inline Json to_json(const geometry::ScanResult& s) {
  Json clusters = Json::array();
  for (const auto& c : s.clusters) {
    Json ds = Json::array();
    for (const auto& d : c.diagonals) ds.push_back(Json::array({d.a, d.b}));
    Json cj;
    cj["k"] = c.k();
    cj["center"] = c.is_center;
    cj["x"] = c.x;
    cj["y"] = c.y;
    cj["diagonals"] = std::move(ds);
    clusters.push_back(std::move(cj));
  }
  Json j;
  j["n"] = s.n;
  j["mode"] = to_string(s.mode);
  j["clusters"] = std::move(clusters);
  return j;
}

// Counts cache: one JSON file per (n, mode, version).
class CountsCache {
 public:
  explicit CountsCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  // --cache-dir wins over POLYDIAG_CACHE_DIR; no cache when neither is set.
  static std::optional<CountsCache> resolve(const std::string& flag) {
    if (!flag.empty()) return CountsCache(flag);
    if (const char* env = std::getenv("POLYDIAG_CACHE_DIR"); env != nullptr && *env != '\0') return CountsCache(env);
    return std::nullopt;
  }

  std::filesystem::path path_for(std::int64_t n, geometry::ScanMode mode) const {
    return dir_ / ("counts-n" + std::to_string(n) + "-" + to_string(mode) + "-v" + std::string(kVersion) + ".json");
  }

  std::optional<CountsRecord> load(std::int64_t n, geometry::ScanMode mode) const {
    std::ifstream f(path_for(n, mode));
    if (!f) return std::nullopt;
    try {
      Json j = Json::parse(f);
      if (j.at("version").get<std::string>() != kVersion || j.at("mode").get<std::string>() != to_string(mode)) {
        return std::nullopt;
      }
      CountsRecord rec = counts_from_json(j.at("record"));
      if (rec.n != n) return std::nullopt;
      return rec;
    } catch (const std::exception&) {
      return std::nullopt;  // unreadable entries are recomputed
    }
  }

  void store(const CountsRecord& rec, geometry::ScanMode mode) const {
    std::filesystem::create_directories(dir_);
    Json j;
    j["version"] = std::string(kVersion);
    j["mode"] = to_string(mode);
    j["record"] = to_json(rec, true);
    const auto target = path_for(rec.n, mode);
    const auto tmp = target.string() + ".tmp";
    {
      std::ofstream f(tmp, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write cache file " + tmp);
      f << j.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, target);
  }

 private:
  std::filesystem::path dir_;
};

// Geometric counts through the cache when one is given.
inline CountsRecord cached_count(std::int64_t n, geometry::ScanMode mode, int jobs, const std::optional<CountsCache>& cache) {
  if (cache) {
    if (auto hit = cache->load(n, mode)) return *hit;
  }
  CountsRecord rec = geometry::count_all(static_cast<int>(n), mode, jobs);
  if (cache) cache->store(rec, mode);
  return rec;
}

}  // namespace polydiag::report
