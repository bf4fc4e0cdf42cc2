#pragma once
// Command-line front end. run_cli is the whole program; tools/polydiag.cpp
// only forwards argv.
//
// Exit codes: 0 success, 1 usage or input error, 2 verification or internal
// failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polydiag/catalog.hpp"
#include "polydiag/counts.hpp"
#include "polydiag/formulas.hpp"
#include "polydiag/geometry.hpp"
#include "polydiag/relations.hpp"
#include "polydiag/report.hpp"
#include "polydiag/scan.hpp"
#include "polydiag/svg.hpp"
#include "polydiag/version.hpp"

namespace polydiag::cli {

using exactnum::Rational;
using exactnum::rat;

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

// Input the user can fix; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "3..30", "60", "6,12,18" or mixes such as "3..10,12".
inline std::vector<std::int64_t> parse_n_set(const std::string& text) {
  std::set<std::int64_t> out;
  std::stringstream ss(text);
  auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad n value: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("bad n value: '" + s + "'");
    if (v < 3) throw UsageError("n must be at least 3 (got " + s + ")");
    return static_cast<std::int64_t>(v);
  };
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) throw UsageError("empty item in n set '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.insert(number(item));
      continue;
    }
    const std::int64_t lo = number(item.substr(0, dots));
    const std::int64_t hi = number(item.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + item + "'");
    for (std::int64_t n = lo; n <= hi; ++n) out.insert(n);
  }
  if (out.empty()) throw UsageError("empty n set");
  return {out.begin(), out.end()};
}

// Largest k with a_k > 0 for the regular n-gon.
inline int expected_max_multiplicity(std::int64_t n) {
  if (n == 3 || n == 4) return 0;
  if (n == 6) return 2;
  if (n == 12) return 4;
  if (n % 2 == 1) return 2;
  if (n % 30 == 0) return 7;
  if (n % 6 == 0) return 5;
  return 3;
}

namespace detail {

struct Options {
  int n = 0;
  int n_to = 0;
  std::string source = "geometric";
  std::string mode = "slice";
  int jobs = 1;
  std::string format;
  std::string out_path;
  std::string cache_dir;
  bool per_slice = false;
  int multiples_of = 1;
  bool deterministic = false;
  int max_weight = relations::kMaxEnumerationWeight;
  bool expect_empty_triples = false;
  bool interleaved = false;
  bool all_labels = false;
  std::string n_set;
  std::vector<std::string> arcs;
  geometry::SvgOptions svg;
};

inline void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out_path);
  f << text;
  if (!f) throw UsageError("cannot write " + o.out_path);
}

inline geometry::ScanMode mode_of(const Options& o) { return geometry::parse_scan_mode(o.mode); }

inline CountsRecord geometric_counts(const Options& o, std::int64_t n) {
  return report::cached_count(n, mode_of(o), o.jobs, report::CountsCache::resolve(o.cache_dir));
}

inline CountsRecord timed_closed(std::int64_t n) {
  const auto start = std::chrono::steady_clock::now();
  CountsRecord rec = formulas::closed_counts(n);
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

inline std::string text_record(const CountsRecord& r, bool deterministic) {
  std::ostringstream os;
  os << "n=" << r.n << " source=" << to_string(r.provenance);
  if (!deterministic) os << " elapsed_ms=" << r.elapsed_ms;
  os << "\n ";
  for (int k = 2; k <= std::max(7, r.max_k()); ++k) os << " a" << k << "=" << r.a_k(k);
  os << "\n  I=" << r.I << " R=" << r.R << " E=" << r.E << "\n";
  return os.str();
}

inline std::string render_records(const Options& o, const std::vector<CountsRecord>& rows) {
  std::ostringstream os;
  if (o.format == "json") {
    report::Json arr = report::Json::array();
    for (const auto& r : rows) arr.push_back(report::to_json(r, !o.deterministic));
    os << arr.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << report::csv_header(o.per_slice) << '\n';
    for (const auto& r : rows) os << report::csv_row(r, o.per_slice) << '\n';
  } else {
    report::write_table_text(os, rows, o.per_slice);
  }
  return os.str();
}

inline int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 3) throw UsageError("n must be at least 3");
  const std::int64_t n = o.n;
  std::optional<CountsRecord> geo, closed;
  if (o.source != "closed") geo = geometric_counts(o, n);
  if (o.source != "geometric") closed = timed_closed(n);
  const bool both = geo && closed;
  const bool match = !both || geo->same_counts(*closed);

  std::ostringstream os;
  if (o.format == "json") {
    report::Json j;
    if (both) {
      j["geometric"] = report::to_json(*geo, !o.deterministic);
      j["closed_form"] = report::to_json(*closed, !o.deterministic);
      j["match"] = match;
    } else {
      j = report::to_json(geo ? *geo : *closed, !o.deterministic);
    }
    os << j.dump(2) << '\n';
  } else if (o.format == "csv") {
    os << report::csv_header(o.per_slice) << '\n';
    if (geo) os << report::csv_row(*geo, o.per_slice) << '\n';
    if (closed && (!geo || !match)) os << report::csv_row(*closed, o.per_slice) << '\n';
  } else {
    if (geo) os << text_record(*geo, o.deterministic);
    if (closed) os << text_record(*closed, o.deterministic);
    if (both) os << (match ? "match\n" : "MISMATCH\n");
  }
  emit(o, out, os.str());
  if (!match) {
    err << "geometric and closed-form counts differ for n=" << n << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

inline int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 3) throw UsageError("range start must be at least 3");
  if (o.n_to < o.n) throw UsageError("empty range");
  if (o.multiples_of < 1) throw UsageError("--multiples-of must be positive");
  std::vector<CountsRecord> rows;
  for (std::int64_t n = o.n; n <= o.n_to; ++n) {
    if (n % o.multiples_of != 0) continue;
    if (o.source == "closed") {
      rows.push_back(timed_closed(n));
      continue;
    }
    CountsRecord geo = geometric_counts(o, n);
    if (o.source == "both" && !geo.same_counts(formulas::closed_counts(n))) {
      err << "geometric and closed-form counts differ for n=" << n << '\n';
      emit(o, out, render_records(o, rows));
      return kExitFailure;
    }
    rows.push_back(std::move(geo));
  }
  emit(o, out, render_records(o, rows));
  return kExitOk;
}

struct CheckResult {
  std::string name;
  std::optional<bool> pass;  // nullopt: not applicable
  std::string detail;
};

inline std::vector<CheckResult> verify_one(const Options& o, std::int64_t n) {
  std::vector<CheckResult> checks;
  const int ni = static_cast<int>(n);
  const geometry::ScanResult s = geometry::scan(ni, mode_of(o), o.jobs);
  const CountsRecord geo = geometry::counts_from_scan(s);
  const CountsRecord closed = formulas::closed_counts(n);

  {
    std::string d;
    const bool ok = geo.same_counts(closed);
    if (!ok) d = "geometric I=" + std::to_string(geo.I) + " R=" + std::to_string(geo.R) + ", closed I=" +
                 std::to_string(closed.I) + " R=" + std::to_string(closed.R);
    checks.push_back({"counts", ok, d});
  }
  {
    std::int64_t pairs = choose(n / 2, 2) * delta(2, n);
    for (const auto& [k, c] : geo.a) pairs += choose(k, 2) * c;
    checks.push_back({"pairs", pairs == choose(n, 4),
                      pairs == choose(n, 4) ? "" : std::to_string(pairs) + " != C(n,4)=" + std::to_string(choose(n, 4))});
  }
  {
    const std::int64_t V = n + geo.I;
    const std::int64_t chi = V - geo.E + (formulas::R_closed(n) + 1);
    checks.push_back({"euler", chi == 2, chi == 2 ? "" : "V-E+F=" + std::to_string(chi)});
  }
  {
    std::int64_t sum = 0;
    for (const auto& [k, c] : geo.a) sum += c;
    const std::int64_t expect = formulas::I_closed(n) - delta(2, n);
    const bool ok = sum % n == 0 && sum == expect;
    checks.push_back({"slice-total", ok,
                      ok ? std::to_string(sum / n) : std::to_string(sum) + " points vs " + std::to_string(expect)});
  }
  {
    const int want = expected_max_multiplicity(n);
    const int got = geo.max_k();
    checks.push_back({"max-k", got == want,
                      got == want ? std::to_string(got) : "max k " + std::to_string(got) + ", expected " + std::to_string(want)});
  }
  {
    // Each triple inside a cluster must classify; each cluster of 4..7 must
    // validate as a multi-diagonal configuration.
    std::string bad;
    for (const auto& cl : s.clusters) {
      if (cl.is_center || cl.k() < 3 || !bad.empty()) continue;
      const auto& ds = cl.diagonals;
      for (std::size_t i = 0; i < ds.size() && bad.empty(); ++i) {
        for (std::size_t j = i + 1; j < ds.size() && bad.empty(); ++j) {
          for (std::size_t l = j + 1; l < ds.size() && bad.empty(); ++l) {
            const auto label = catalog::classify(geometry::arcs_of_triple(ds[i], ds[j], ds[l], ni));
            if (label.kind == catalog::ClassLabel::Kind::not_concurrent) {
              bad = "triple " + geometry::to_string(ds[i]) + geometry::to_string(ds[j]) + geometry::to_string(ds[l]) +
                    " unclassified";
            }
          }
        }
      }
      if (!bad.empty() || cl.k() < 4) continue;
      std::vector<int> ends;
      for (const auto& d : ds) {
        ends.push_back(d.a);
        ends.push_back(d.b);
      }
      std::sort(ends.begin(), ends.end());
      std::vector<Rational> arcs;
      for (std::size_t i = 0; i + 1 < ends.size(); ++i) arcs.push_back(rat(ends[i + 1] - ends[i], n));
      arcs.push_back(rat(n - ends.back() + ends.front(), n));
      const auto r = catalog::validate_multi(arcs, cl.k());
      if (r.kind == catalog::MultiResult::Kind::invalid ||
          (r.kind == catalog::MultiResult::Kind::exceptional && !r.denominator_listed)) {
        bad = "cluster of " + std::to_string(cl.k()) + " at " + geometry::to_string(ds.front()) + ": " + r.str();
      }
    }
    checks.push_back({"clusters", bad.empty(), bad});
  }
  if (n <= 60) {
    const auto found = geometry::concurrent_triples(ni, o.jobs);
    const auto listed = geometry::rotation_expansion(catalog::enumerate_triples(n), ni);
    std::string d;
    if (found != listed) {
      std::vector<geometry::Triple> diff;
      std::set_symmetric_difference(found.begin(), found.end(), listed.begin(), listed.end(), std::back_inserter(diff));
      const auto& t = diff.front();
      d = (found.count(t) ? "uncatalogued " : "spurious ") + geometry::to_string(t[0]) + geometry::to_string(t[1]) +
          geometry::to_string(t[2]);
    }
    checks.push_back({"catalog", found == listed, d});
  } else {
    checks.push_back({"catalog", std::nullopt, ""});
  }
  if (o.expect_empty_triples) {
    const bool ok = catalog::enumerate_triples(n).empty() && geo.max_k() <= 2;
    checks.push_back({"empty-triples", ok, ok ? "" : "max k " + std::to_string(geo.max_k())});
  }
  return checks;
}

inline int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::int64_t> ns = parse_n_set(o.n_set);
  if (o.multiples_of < 1) throw UsageError("--multiples-of must be positive");
  std::erase_if(ns, [&](std::int64_t n) { return n % o.multiples_of != 0; });
  if (ns.empty()) throw UsageError("no n left after --multiples-of filter");

  std::ostringstream os;
  std::string first_failure;
  bool header = false;
  for (std::int64_t n : ns) {
    const auto checks = verify_one(o, n);
    if (!header) {
      os << std::setw(6) << "n";
      for (const auto& c : checks) os << "  " << std::setw(13) << c.name;
      os << '\n';
      header = true;
    }
    os << std::setw(6) << n;
    for (const auto& c : checks) {
      const std::string cell = !c.pass ? "-" : (*c.pass ? "PASS" : "FAIL");
      os << "  " << std::setw(13) << cell;
      if (c.pass && !*c.pass && first_failure.empty()) first_failure = "n=" + std::to_string(n) + " " + c.name + ": " + c.detail;
    }
    os << '\n';
    for (const auto& c : checks) {
      if (c.name == "slice-total" && c.pass && *c.pass) os << "        slice total " << c.detail << '\n';
    }
  }
  if (first_failure.empty()) {
    os << "all checks passed for " << ns.size() << " value" << (ns.size() == 1 ? "" : "s") << " of n\n";
  } else {
    os << "FAILED: " << first_failure << '\n';
  }
  emit(o, out, os.str());
  if (!first_failure.empty()) {
    err << "verification failed: " << first_failure << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

inline int cmd_relations(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  if (o.max_weight < 2 || o.max_weight > relations::kMaxEnumerationWeight) {
    throw UsageError("--max-weight must be in 2.." + std::to_string(relations::kMaxEnumerationWeight));
  }
  const auto classes = relations::enumerate_minimal(o.max_weight);
  std::ostringstream os;
  if (o.format == "json") {
    os << report::to_json(classes).dump(2) << '\n';
  } else {
    std::size_t total = 0;
    os << "weight  count  class\n";
    for (const auto& e : classes) {
      os << std::setw(6) << e.cls.type.weight() << "  " << std::setw(5) << e.cls.count << "  " << e.cls.label << '\n';
      total += e.cls.count;
    }
    os << total << " relations\n";
  }
  emit(o, out, os.str());
  return kExitOk;
}

inline int cmd_classify(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  if (o.arcs.size() != 6) throw UsageError("classify takes exactly six arcs");
  std::array<Rational, 6> v;
  for (std::size_t i = 0; i < 6; ++i) {
    try {
      v[i] = Rational::parse(o.arcs[i]);
    } catch (const std::exception& e) {
      throw UsageError("bad arc '" + o.arcs[i] + "': " + e.what());
    }
  }
  const catalog::ArcSextuple s = o.interleaved ? catalog::ArcSextuple{v} : catalog::ArcSextuple::from_uvwxyz(v);
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream os;
  if (o.all_labels) {
    const auto labels = catalog::classify_all(s);
    if (labels.empty()) os << catalog::ClassLabel::not_concurrent().str() << '\n';
    for (const auto& l : labels) os << l.str() << '\n';
  } else {
    os << catalog::classify(s).str() << '\n';
  }
  emit(o, out, os.str());
  return kExitOk;
}

inline int cmd_render(const Options& o, std::ostream& /*out*/, std::ostream& /*err*/) {
  if (o.n < 3) throw UsageError("n must be at least 3");
  if (o.out_path.empty()) throw UsageError("render needs --out");
  if (o.svg.width <= 0 || o.svg.stroke <= 0) throw UsageError("width and stroke must be positive");
  if (!std::ofstream(o.out_path, std::ios::binary)) throw UsageError("cannot write " + o.out_path);
  geometry::render_svg(o.n, o.out_path, o.svg, o.jobs);
  return kExitOk;
}

inline int cmd_export_catalog(const Options& o, std::ostream& out, std::ostream& /*err*/) {
  std::ostringstream os;
  catalog::export_catalog_csv(os);
  emit(o, out, os.str());
  return kExitOk;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  detail::Options o;
  CLI::App app{"Intersection points and regions of the diagonals of a regular polygon"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::function<int(const detail::Options&, std::ostream&, std::ostream&)> action;
  auto jobs_opt = [&](CLI::App* c) {
    c->add_option("--jobs,-j", o.jobs, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  };
  auto out_opt = [&](CLI::App* c, const std::string& help = "write output to this file") {
    c->add_option("--out,-o", o.out_path, help);
  };
  auto mode_opt = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "geometric scan mode")->check(CLI::IsMember({"full", "slice"}));
  };

  auto* count = app.add_subcommand("count", "count intersection points and regions for one n");
  count->add_option("n", o.n, "number of polygon vertices")->required();
  count->add_option("--source", o.source)->check(CLI::IsMember({"geometric", "closed", "both"}));
  count->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "table"}));
  count->add_option("--cache-dir", o.cache_dir, "cache directory (default: $POLYDIAG_CACHE_DIR)");
  count->add_flag("--per-slice", o.per_slice, "divide counts by n");
  count->add_flag("--deterministic", o.deterministic, "omit timings");
  mode_opt(count);
  jobs_opt(count);
  out_opt(count);
  count->callback([&] { action = detail::cmd_count; });

  auto* table = app.add_subcommand("table", "counts for a range of n");
  table->add_option("from", o.n)->required();
  table->add_option("to", o.n_to)->required();
  table->add_option("--multiples-of", o.multiples_of, "keep only multiples of this value");
  table->add_option("--source", o.source)->check(CLI::IsMember({"geometric", "closed", "both"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "table"}));
  table->add_option("--cache-dir", o.cache_dir, "cache directory (default: $POLYDIAG_CACHE_DIR)");
  table->add_flag("--per-slice", o.per_slice, "divide counts by n");
  table->add_flag("--deterministic", o.deterministic, "omit timings");
  mode_opt(table);
  jobs_opt(table);
  out_opt(table);
  table->callback([&] { action = detail::cmd_table; });

  auto* verify = app.add_subcommand("verify", "check geometric counts against the closed forms and invariants");
  verify->add_option("nset", o.n_set, "e.g. 3..30, 60 or 6,12,18")->required();
  verify->add_option("--multiples-of", o.multiples_of, "keep only multiples of this value");
  verify->add_flag("--expect-empty-triples", o.expect_empty_triples, "require that no three diagonals meet");
  mode_opt(verify);
  jobs_opt(verify);
  out_opt(verify);
  verify->callback([&] { action = detail::cmd_verify; });

  auto* rel = app.add_subcommand("relations", "list minimal vanishing sums of roots of unity");
  rel->add_option("--max-weight", o.max_weight, "largest weight to enumerate");
  rel->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));
  out_opt(rel);
  rel->callback([&] { action = detail::cmd_relations; });

  auto* cls = app.add_subcommand("classify", "classify six arcs U V W X Y Z (in units of pi)");
  cls->add_option("arcs", o.arcs, "six rationals")->required()->expected(6);
  cls->add_flag("--interleaved", o.interleaved, "arcs are given in circular order u x v y w z");
  cls->add_flag("--all", o.all_labels, "print every matching label");
  out_opt(cls);
  cls->callback([&] { action = detail::cmd_classify; });

  auto* render = app.add_subcommand("render", "draw the polygon and its diagonals as SVG");
  render->add_option("n", o.n)->required();
  render->add_option("--width", o.svg.width, "image size in pixels");
  render->add_option("--stroke", o.svg.stroke, "diagonal stroke width");
  render->add_option("--highlight", o.svg.highlight, "mark points where at least this many diagonals meet");
  jobs_opt(render);
  out_opt(render, "SVG output path");
  render->callback([&] { action = detail::cmd_render; });

  auto* exp = app.add_subcommand("export-catalog", "write the catalog tables as CSV");
  out_opt(exp);
  exp->callback([&] { action = detail::cmd_export_catalog; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (o.format.empty()) o.format = table->parsed() ? "csv" : "table";

  try {
    return action(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace polydiag::cli
