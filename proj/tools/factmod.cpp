#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "factmod/boundbench.hpp"
#include "factmod/charspectrum.hpp"
#include "factmod/constructions.hpp"
#include "factmod/momentlab.hpp"
#include "factmod/parallel.hpp"
#include "factmod/refcheck.hpp"
#include "factmod/repcount.hpp"
#include "factmod/report.hpp"

using json = nlohmann::json;
using namespace factmod;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitInternal = 3;

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  bool quiet = false;
};

std::vector<std::uint64_t> parse_u64_list(const std::string& text,
                                          const char* what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoull(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(errc::bad_range,
           std::string(what) + ": '" + item + "' is not an unsigned integer");
    }
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto v = parse_u64_list(text, "--range");
  if (v.size() != 2 || v[0] > v[1])
    fail(errc::bad_range, "--range wants lo,hi with lo <= hi");
  return {v[0], v[1]};
}

// N = 0 stands for "the rest of the valid range past H".
Window resolve_window(const PrimeContext& ctx, std::uint64_t h,
                      std::uint64_t n) {
  if (n == 0) {
    std::uint64_t top = ctx.max_sequence_arg();
    if (h >= top)
      fail(errc::window_out_of_range,
           "H=" + std::to_string(h) + " leaves no room below " +
               std::to_string(top));
    n = top - h;
  }
  Window w{h, n};
  ctx.require_window(w);
  return w;
}

// Serializes per the chosen format and writes data plus manifest.
class Emitter {
 public:
  Emitter(const GlobalOpts& g, std::string command, std::string parameters)
      : opts_(g),
        command_(std::move(command)),
        parameters_(std::move(parameters)),
        start_(std::chrono::steady_clock::now()) {}

  const GlobalOpts& opts() const { return opts_; }
  bool csv() const { return opts_.format == "csv"; }

  void write(const report::Table& table, const json& payload) {
    std::string data =
        csv() ? report::to_csv(table) : payload.dump(2) + "\n";
    write_raw(data);
  }

  // JSON-lines for scans; CSV callers pass a table instead.
  void write_lines(const std::vector<json>& records) {
    std::string data;
    for (const auto& r : records) data += r.dump() + "\n";
    write_raw(data);
  }

  void write_raw(const std::string& data) {
    report::Manifest m;
    m.command = command_;
    m.parameters = parameters_;
    m.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start_)
            .count();
    report::emit(data, opts_.out, m);
  }

 private:
  GlobalOpts opts_;
  std::string command_;
  std::string parameters_;
  std::chrono::steady_clock::time_point start_;
};

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) s += ' ';
    s += argv[i];
  }
  return s;
}

// --- subcommand bodies ----------------------------------------------------

int run_ctx(Emitter& em, std::uint64_t p, const std::string& kind_name) {
  auto ctx = build_context(p, sequence_kind_from_string(kind_name));
  report::Table t;
  t.header = {"p", "g", "kind", "max_n"};
  t.rows.push_back({std::to_string(ctx.p), std::to_string(ctx.g),
                    to_string(ctx.kind),
                    std::to_string(ctx.max_sequence_arg())});
  json j{{"p", ctx.p},
         {"g", ctx.g},
         {"kind", to_string(ctx.kind)},
         {"max_n", ctx.max_sequence_arg()}};
  em.write(t, j);
  return kExitOk;
}

int run_spectrum(Emitter& em, std::uint64_t p, const std::string& kind_name,
                 std::uint64_t h, std::uint64_t n, const std::string& f_text,
                 const std::string& which, bool binary) {
  auto ctx = build_context(p, sequence_kind_from_string(kind_name));
  Window w = resolve_window(ctx, h, n);
  PhasePolynomial f{parse_u64_list(f_text, "--f")};
  f.validate(p);

  std::vector<cplx> spec;
  if (which == "mult") {
    spec = spectrum_T(ctx, f, w);
  } else if (which == "add") {
    if (!f.zero()) fail(errc::bad_range, "--f only applies to --which mult");
    spec = spectrum_S(ctx, w);
  } else {
    fail(errc::bad_range, "--which must be mult or add");
  }

  if (binary) {
    std::string data(spec.size() * 2 * sizeof(double), '\0');
    for (std::size_t i = 0; i < spec.size(); ++i) {
      double re = spec[i].real(), im = spec[i].imag();
      std::memcpy(&data[2 * i * sizeof(double)], &re, sizeof(double));
      std::memcpy(&data[(2 * i + 1) * sizeof(double)], &im, sizeof(double));
    }
    em.write_raw(data);
    return kExitOk;
  }

  report::Table t;
  t.header = {"p", "j_or_a", "re", "im", "magnitude2"};
  json rows = json::array();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    double re = spec[i].real(), im = spec[i].imag();
    double mag2 = std::norm(spec[i]);
    t.rows.push_back({std::to_string(p), std::to_string(i),
                      report::format_double(re), report::format_double(im),
                      report::format_double(mag2)});
    rows.push_back(json{{"p", p},
                        {"j_or_a", i},
                        {"re", re},
                        {"im", im},
                        {"magnitude2", mag2}});
  }
  em.write(t, rows);
  return kExitOk;
}

int run_moments(Emitter& em, std::uint64_t p, const std::string& kind_name,
                std::uint64_t h, std::uint64_t n, unsigned ell,
                const std::string& which, const std::string& f_text) {
  auto ctx = build_context(p, sequence_kind_from_string(kind_name));
  Window w = resolve_window(ctx, h, n);

  report::Table t;
  t.header = {"p", "H", "N", "ell", "which", "count", "bound_rhs", "ratio"};
  json j{{"p", p}, {"H", w.h}, {"N", w.n}, {"ell", ell}, {"which", which}};

  BoundParams bp;
  bp.p = p;
  bp.n = w.n;
  bp.h = w.h;
  bp.ell = ell;

  if (which == "I" || which == "J") {
    if (!f_text.empty()) fail(errc::bad_range, "--f only applies to T");
    CountScalar count = which == "I" ? count_I(ctx, w, ell)
                                     : count_J(ctx, w, ell);
    double rhs = eval_bound(
        which == "I" ? BoundKind::I_moment : BoundKind::J_moment, bp);
    double ratio = count.get_d() / rhs;
    t.rows.push_back({std::to_string(p), std::to_string(w.h),
                      std::to_string(w.n), std::to_string(ell), which,
                      report::decimal(count), report::format_double(rhs),
                      report::format_double(ratio)});
    j["count"] = report::decimal(count);
    j["bound_rhs"] = rhs;
    j["ratio"] = ratio;
  } else if (which == "T" || which == "S") {
    PhasePolynomial f{parse_u64_list(f_text, "--f")};
    f.validate(p);
    if (which == "S" && !f.zero())
      fail(errc::bad_range, "--f only applies to T");
    double value = which == "T" ? moment_T(ctx, f, w, ell)
                                : moment_S(ctx, w, ell);
    // the exact-count identity only covers T at f = 0
    double identity = -1.0, rel = -1.0;
    if (which == "S") {
      identity = count_J(ctx, w, ell).get_d() * static_cast<double>(p);
    } else if (f.zero()) {
      identity = count_I(ctx, w, ell).get_d() * static_cast<double>(p - 1);
    }
    if (identity > 0.0) rel = std::abs(value - identity) / identity;
    t.rows.push_back({std::to_string(p), std::to_string(w.h),
                      std::to_string(w.n), std::to_string(ell), which,
                      report::format_double(value),
                      report::format_double(identity),
                      report::format_double(rel)});
    j["value"] = value;
    j["identity_count"] = identity;
    j["rel_err"] = rel;
    t.header = {"p", "H", "N", "ell", "which", "value", "identity_count",
                "rel_err"};
  } else {
    fail(errc::bad_range, "--which must be one of I, J, T, S");
  }
  em.write(t, j);
  return kExitOk;
}

int run_counts(Emitter& em, std::uint64_t p, const std::string& kind_name,
               std::uint64_t h, std::uint64_t n, unsigned ell,
               const std::string& which, std::optional<std::uint64_t> a,
               std::optional<std::uint64_t> sum_n, bool lift) {
  auto ctx = build_context(p, sequence_kind_from_string(kind_name));

  if (which == "F") {
    Window w = resolve_window(ctx, h, n);
    auto table = table_F(ctx, w, ell);
    report::Table t;
    t.header = {"p", "a", "F_ell"};
    json rows = json::array();
    auto push = [&](std::uint64_t res) {
      t.rows.push_back({std::to_string(p), std::to_string(res),
                        report::decimal(table.at(res))});
      rows.push_back(json{{"p", p},
                          {"a", res},
                          {"count", report::decimal(table.at(res))}});
    };
    if (a) {
      if (*a >= p) fail(errc::out_of_range, "--a outside 0..p-1");
      push(*a);
    } else {
      for (std::uint64_t res = 0; res < p; ++res) push(res);
    }
    em.write(t, rows);
    return kExitOk;
  }

  if (which == "V") {
    Window w = resolve_window(ctx, h, n);
    std::uint64_t v = value_set_V(ctx, w, ell);
    report::Table t;
    t.header = {"p", "H", "N", "ell", "V"};
    t.rows.push_back({std::to_string(p), std::to_string(w.h),
                      std::to_string(w.n), std::to_string(ell),
                      std::to_string(v)});
    em.write(t, json{{"p", p},
                     {"H", w.h},
                     {"N", w.n},
                     {"ell", ell},
                     {"V", v}});
    return kExitOk;
  }

  if (which == "G") {
    if (!sum_n) fail(errc::bad_range, "--which G needs --sumN");
    auto g = table_G(ctx, *sum_n, ell, lift);
    report::Table t;
    t.header = {"p", "a", "sumN", "ell", "G_ell"};
    json rows = json::array();
    auto push = [&](std::uint64_t res) {
      t.rows.push_back({std::to_string(p), std::to_string(res),
                        std::to_string(*sum_n), std::to_string(ell),
                        report::decimal(g[res])});
      rows.push_back(json{{"p", p},
                          {"a", res},
                          {"sumN", *sum_n},
                          {"ell", ell},
                          {"count", report::decimal(g[res])}});
    };
    if (a) {
      if (*a >= p) fail(errc::out_of_range, "--a outside 0..p-1");
      push(*a);
    } else {
      for (std::uint64_t res = 0; res < p; ++res) push(res);
    }
    em.write(t, rows);
    return kExitOk;
  }

  if (which == "D") {
    Window w = resolve_window(ctx, h, n);
    if (!a) fail(errc::bad_range, "--which D needs --a");
    auto d = discrepancy_D(ctx, *a, w, ell);
    report::Table t;
    t.header = {"p", "a", "ell", "D", "alpha", "beta", "num", "den"};
    t.rows.push_back({std::to_string(p), std::to_string(*a),
                      std::to_string(ell), report::format_double(d.d),
                      report::format_double(d.alpha),
                      report::format_double(d.beta), report::decimal(d.num),
                      report::decimal(d.den)});
    em.write(t, json{{"p", p},
                     {"a", *a},
                     {"ell", ell},
                     {"D", d.d},
                     {"alpha", d.alpha},
                     {"beta", d.beta},
                     {"num", report::decimal(d.num)},
                     {"den", report::decimal(d.den)}});
    return kExitOk;
  }

  if (which == "maxF") {
    Window w = resolve_window(ctx, h, n);
    auto m = max_F1(ctx, w);
    report::Table t;
    t.header = {"p", "a", "count"};
    t.rows.push_back(
        {std::to_string(p), std::to_string(m.a), report::decimal(m.count)});
    em.write(t, json{{"p", p},
                     {"a", m.a},
                     {"count", report::decimal(m.count)}});
    return kExitOk;
  }

  fail(errc::bad_range, "--which must be one of F, V, G, D, maxF");
}

int run_repr(Emitter& em, std::uint64_t p, std::uint64_t a, unsigned ell,
             std::uint64_t max_n) {
  auto ctx = build_context(p);
  if (max_n == 0) max_n = ctx.max_sequence_arg();
  auto rep = search_representation(ctx, a, ell, max_n);

  report::Table t;
  t.header = {"p", "a", "ell", "max_n", "found", "tuple"};
  json j{{"p", p}, {"a", a}, {"ell", ell}, {"max_n", max_n}};
  std::string tuple_text;
  if (rep) {
    for (std::size_t i = 0; i < rep->size(); ++i) {
      if (i) tuple_text += ' ';
      tuple_text += std::to_string((*rep)[i]);
    }
    j["found"] = true;
    j["tuple"] = *rep;
  } else {
    j["found"] = false;
  }
  t.rows.push_back({std::to_string(p), std::to_string(a), std::to_string(ell),
                    std::to_string(max_n), rep ? "true" : "false",
                    tuple_text});
  em.write(t, j);
  return kExitOk;
}

int run_wilson(Emitter& em, std::uint64_t p, std::uint64_t a) {
  auto ctx = build_context(p);
  auto w = wilson_representation(ctx, a);
  report::Table t;
  t.header = {"p", "a", "b", "r_b", "factors", "product"};
  std::string factors = "(" + std::to_string(w.b - 1) + ")!*(" +
                        std::to_string(p - 1 - w.b) + ")!";
  if (w.r_b == 1) factors = "((p-1)!)^1*" + factors;
  t.rows.push_back({std::to_string(p), std::to_string(a), std::to_string(w.b),
                    std::to_string(w.r_b), factors,
                    std::to_string(w.product)});
  em.write(t, json{{"p", p},
                   {"a", a},
                   {"b", w.b},
                   {"r_b", w.r_b},
                   {"factors", factors},
                   {"product", w.product}});
  return kExitOk;
}

int run_spacings(Emitter& em, std::uint64_t p, std::uint64_t j_count) {
  auto ctx = build_context(p);
  if (j_count == 0) j_count = (p - 1) / 2;
  auto sp = nonresidue_spacings(ctx, j_count);
  report::Table t;
  t.header = {"p", "J", "n_J", "alt_sum", "legendre_sum", "gaps"};
  std::string gaps;
  for (std::size_t i = 0; i < sp.gaps.size(); ++i) {
    if (i) gaps += ' ';
    gaps += std::to_string(sp.gaps[i]);
  }
  t.rows.push_back({std::to_string(p), std::to_string(sp.j_count),
                    std::to_string(sp.n_j), std::to_string(sp.alt_sum),
                    std::to_string(sp.legendre_sum), gaps});
  em.write(t, json{{"p", p},
                   {"J", sp.j_count},
                   {"n_J", sp.n_j},
                   {"alt_sum", sp.alt_sum},
                   {"legendre_sum", sp.legendre_sum},
                   {"gaps", sp.gaps}});
  return kExitOk;
}

int run_primroot(Emitter& em, std::uint64_t p, std::uint64_t m,
                 const std::string& window_text, const std::string& range_text,
                 unsigned jobs) {
  if (!range_text.empty()) {
    auto [lo, hi] = parse_range(range_text);
    auto primes = primes_in_range(lo, hi);
    auto hits = parallel_map<PrimrootHit>(primes.size(), jobs, [&](auto i) {
      return find_primroot_factorial(build_context(primes[i]));
    });
    report::Table t;
    t.header = {"p", "found", "n", "ratio"};
    json rows = json::array();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      t.rows.push_back({std::to_string(primes[i]),
                        hits[i].found ? "true" : "false",
                        std::to_string(hits[i].n),
                        report::format_double(hits[i].ratio)});
      rows.push_back(json{{"p", primes[i]},
                          {"found", hits[i].found},
                          {"n", hits[i].n},
                          {"ratio", hits[i].ratio}});
    }
    em.write(t, rows);
    return kExitOk;
  }

  if (p == 0) fail(errc::bad_range, "pass --p or --range");
  auto ctx = build_context(p);
  Window w{0, 0};
  if (!window_text.empty()) {
    auto v = parse_u64_list(window_text, "--window");
    if (v.size() != 2) fail(errc::bad_range, "--window wants H,N");
    w = resolve_window(ctx, v[0], v[1]);
  } else {
    w = resolve_window(ctx, 0, 0);
  }
  std::uint64_t count = count_Qm(ctx, m, w);
  // the density heuristic N phi(p-1)/(p-1) covers single hits only
  double main = 0.0;
  if (m == 1) {
    BoundParams bp;
    bp.p = p;
    bp.n = w.n;
    bp.h = w.h;
    main = eval_main_term(BoundKind::Q_primroot, bp).value();
  }
  report::Table t;
  t.header = {"p", "H", "N", "m", "count", "main_term"};
  t.rows.push_back({std::to_string(p), std::to_string(w.h),
                    std::to_string(w.n), std::to_string(m),
                    std::to_string(count), report::format_double(main)});
  em.write(t, json{{"p", p},
                   {"H", w.h},
                   {"N", w.n},
                   {"m", m},
                   {"count", count},
                   {"main_term", main}});
  return kExitOk;
}

int run_power_classes(Emitter& em, std::uint64_t p, const std::string& r_text,
                      std::uint64_t h, std::uint64_t n) {
  auto ctx = build_context(p);
  Window w = resolve_window(ctx, h, n);
  auto subset = parse_u64_list(r_text, "--R");
  auto rep = classify_power_residues(ctx, subset, w);
  report::Table t;
  t.header = {"p", "H", "N", "subset", "count", "main_term"};
  std::string sub;
  for (std::size_t i = 0; i < rep.subset.size(); ++i) {
    if (i) sub += ' ';
    sub += std::to_string(rep.subset[i]);
  }
  t.rows.push_back({std::to_string(p), std::to_string(w.h),
                    std::to_string(w.n), sub, std::to_string(rep.count),
                    report::format_double(rep.main_term)});
  em.write(t, json{{"p", p},
                   {"H", w.h},
                   {"N", w.n},
                   {"subset", rep.subset},
                   {"count", rep.count},
                   {"main_term", rep.main_term}});
  return kExitOk;
}

int run_scan_distinct(Emitter& em, const std::string& range_text,
                      unsigned jobs) {
  auto [lo, hi] = parse_range(range_text);
  auto records = distinct_factorial_scan(lo, hi, jobs);

  if (em.csv()) {
    report::Table t;
    t.header = {"p", "distinct", "missing", "missing_matches", "mod8_matches"};
    for (const auto& r : records)
      t.rows.push_back({std::to_string(r.p), r.is_distinct ? "true" : "false",
                        std::to_string(r.missing_residue),
                        r.missing_matches_prediction ? "true" : "false",
                        r.mod8_matches_prediction ? "true" : "false"});
    em.write(t, json::array());
    return kExitOk;
  }

  std::vector<json> lines;
  lines.reserve(records.size());
  for (const auto& r : records) {
    json j{{"p", r.p}, {"distinct", r.is_distinct}};
    if (r.is_distinct) {
      j["missing"] = r.missing_residue;
      j["missing_matches"] = r.missing_matches_prediction;
      j["mod8_matches"] = r.mod8_matches_prediction;
    }
    lines.push_back(std::move(j));
  }
  em.write_lines(lines);
  return kExitOk;
}

int run_bounds(Emitter& em, const std::string& kind_name,
               const std::string& range_text, unsigned ell, unsigned r,
               double eps, std::optional<std::uint64_t> a, std::uint64_t h,
               std::uint64_t n, std::uint64_t j_gaps, unsigned jobs) {
  auto kind = bound_kind_from_string(kind_name);
  auto [lo, hi] = parse_range(range_text);
  auto primes = primes_in_range(lo, hi);
  if (primes.empty()) fail(errc::bad_range, "no primes in the range");

  BoundParams params;
  params.ell = ell;
  params.r = r;
  params.eps = eps;
  params.j_gaps = j_gaps;
  params.a = a;
  if (n != 0) {
    params.h = h;
    params.n = n;
    params.explicit_window = true;
  }
  auto reports = ratio_sweep(kind, primes, params, jobs);

  report::Table t;
  t.header = {"kind", "p", "H", "N", "ell", "r",
              "lhs",  "main_term", "rhs", "ratio"};
  json rows = json::array();
  for (const auto& rep : reports) {
    t.rows.push_back({to_string(rep.kind), std::to_string(rep.p),
                      std::to_string(rep.h), std::to_string(rep.n),
                      std::to_string(rep.ell), std::to_string(rep.r), rep.lhs,
                      report::format_double(rep.main_term),
                      report::format_double(rep.rhs),
                      report::format_double(rep.ratio)});
    rows.push_back(json{{"kind", to_string(rep.kind)},
                        {"p", rep.p},
                        {"H", rep.h},
                        {"N", rep.n},
                        {"ell", rep.ell},
                        {"r", rep.r},
                        {"lhs", rep.lhs},
                        {"main_term", rep.main_term},
                        {"rhs", rep.rhs},
                        {"ratio", rep.ratio}});
  }
  em.write(t, rows);
  return kExitOk;
}

int run_guy_f11(Emitter& em, const std::string& range_text, unsigned jobs) {
  auto [lo, hi] = parse_range(range_text);
  auto rep = guy_f11_report(lo, hi, jobs);

  report::Table t;
  t.header = {"p", "V1", "ratio"};
  json rows = json::array();
  for (const auto& row : rep.rows) {
    t.rows.push_back({std::to_string(row.p), std::to_string(row.v1),
                      report::format_double(row.ratio)});
    rows.push_back(json{{"p", row.p}, {"V1", row.v1}, {"ratio", row.ratio}});
  }
  json j{{"rows", rows},
         {"count", rep.rows.size()},
         {"mean", rep.mean},
         {"stddev", rep.stddev},
         {"target", rep.target}};
  if (!em.opts().quiet && em.csv())
    std::cerr << "mean " << report::format_double(rep.mean) << " stddev "
              << report::format_double(rep.stddev) << " target "
              << report::format_double(rep.target) << "\n";
  em.write(t, j);
  return kExitOk;
}

int run_oracle_diff(Emitter& em, std::uint64_t p, std::uint64_t h,
                    std::uint64_t n, unsigned ell, const std::string& which,
                    std::optional<std::uint64_t> sum_n) {
  auto ctx = build_context(p);
  Window w = resolve_window(ctx, h, n);

  report::Table t;
  t.header = {"op", "p", "H", "N", "ell", "a", "fast", "oracle", "status"};
  json rows = json::array();
  bool all_ok = true;

  auto add_row = [&](const std::string& op, const std::string& a_text,
                     const std::string& fast, const std::string& oracle) {
    bool ok = fast == oracle;
    all_ok = all_ok && ok;
    t.rows.push_back({op, std::to_string(p), std::to_string(w.h),
                      std::to_string(w.n), std::to_string(ell), a_text, fast,
                      oracle, ok ? "PASS" : "FAIL"});
    rows.push_back(json{{"op", op},
                        {"p", p},
                        {"H", w.h},
                        {"N", w.n},
                        {"ell", ell},
                        {"a", a_text},
                        {"fast", fast},
                        {"oracle", oracle},
                        {"status", ok ? "PASS" : "FAIL"}});
  };

  bool all = which == "all";
  if (all || which == "I")
    add_row("I", "", report::decimal(count_I(ctx, w, ell)),
            report::decimal(refcheck::oracle_I(ctx, w, ell)));
  if (all || which == "J")
    add_row("J", "", report::decimal(count_J(ctx, w, ell)),
            report::decimal(refcheck::oracle_J(ctx, w, ell)));
  if (all || which == "F") {
    auto table = table_F(ctx, w, ell);
    for (std::uint64_t a = 0; a < p; ++a)
      add_row("F", std::to_string(a), report::decimal(table.at(a)),
              report::decimal(refcheck::oracle_F(ctx, a, w, ell)));
  }
  if (all || which == "V")
    add_row("V", "", std::to_string(value_set_V(ctx, w, ell)),
            std::to_string(refcheck::oracle_V(ctx, w, ell)));
  if (all || which == "G") {
    if (!sum_n) {
      if (!all) fail(errc::bad_range, "--which G needs --sumN");
    } else {
      auto g = table_G(ctx, *sum_n, ell, true);
      for (std::uint64_t a = 0; a < p; ++a)
        add_row("G", std::to_string(a), report::decimal(g[a]),
                report::decimal(refcheck::oracle_G(ctx, a, *sum_n, ell)));
    }
  }
  if (all || which == "D") {
    auto table = table_F(ctx, w, ell);
    for (std::uint64_t a = 1; a < p; ++a) {
      auto fast = discrepancy_from_table(ctx, a, table);
      auto slow = refcheck::oracle_D(ctx, a, w, ell);
      add_row("D", std::to_string(a),
              report::decimal(fast.num) + "/" + report::decimal(fast.den),
              report::decimal(slow.num) + "/" + report::decimal(slow.den));
    }
  }
  if (t.rows.empty())
    fail(errc::bad_range, "--which must be one of I, J, F, V, G, D, all");

  em.write(t, rows);
  if (!em.opts().quiet)
    std::cerr << (all_ok ? "all comparisons PASS" : "MISMATCH detected")
              << "\n";
  return all_ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distribution toolkit for factorials modulo a prime"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write data here plus <out>.manifest.json");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_flag("--quiet", g.quiet, "suppress stderr notes");

  std::uint64_t p = 0, h = 0, n = 0, m = 1, j_count = 0, max_n = 0;
  std::uint64_t sum_n_raw = 0, a_raw = 0, j_gaps = 0;
  unsigned ell = 1, r = 1;
  double eps = 0.01;
  bool lift = false, binary = false;
  std::string kind_name = "factorial", which, f_text, range_text, window_text,
              subset_text;

  auto* ctx_cmd = app.add_subcommand("ctx", "prime context summary");
  ctx_cmd->add_option("--p", p, "odd prime modulus")->required();
  ctx_cmd->add_option("--kind", kind_name, "sequence kind")
      ->capture_default_str();

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "character or exponential sum spectrum");
  spectrum_cmd->add_option("--p", p)->required();
  spectrum_cmd->add_option("--kind", kind_name)->capture_default_str();
  spectrum_cmd->add_option("--H", h, "window offset");
  spectrum_cmd->add_option("--N", n, "window length, 0 = rest of range");
  spectrum_cmd->add_option("--f", f_text, "phase polynomial c0,c1,...");
  spectrum_cmd->add_option("--which", which, "mult or add")->required();
  spectrum_cmd->add_flag("--binary", binary,
                         "raw little-endian re,im doubles");

  auto* moments_cmd =
      app.add_subcommand("moments", "moment counts and spectral moments");
  moments_cmd->add_option("--p", p)->required();
  moments_cmd->add_option("--kind", kind_name)->capture_default_str();
  moments_cmd->add_option("--H", h);
  moments_cmd->add_option("--N", n);
  moments_cmd->add_option("--ell", ell)->check(CLI::Range(1u, 8u));
  moments_cmd->add_option("--which", which, "I, J, T or S")->required();
  moments_cmd->add_option("--f", f_text, "phase polynomial for T");

  auto* counts_cmd =
      app.add_subcommand("counts", "representation and value-set statistics");
  counts_cmd->add_option("--p", p)->required();
  counts_cmd->add_option("--kind", kind_name)->capture_default_str();
  counts_cmd->add_option("--H", h);
  counts_cmd->add_option("--N", n);
  counts_cmd->add_option("--ell", ell)->check(CLI::Range(1u, 8u));
  counts_cmd->add_option("--which", which, "F, V, G, D or maxF")->required();
  auto* counts_a = counts_cmd->add_option("--a", a_raw, "residue");
  auto* counts_sumn =
      counts_cmd->add_option("--sumN", sum_n_raw, "part sum for G");
  counts_cmd->add_flag("--lift", lift, "drop the N < p/ell cap for G");

  auto* repr_cmd =
      app.add_subcommand("repr", "smallest factorial product witness");
  repr_cmd->add_option("--p", p)->required();
  repr_cmd->add_option("--a", a_raw, "target residue")->required();
  repr_cmd->add_option("--ell", ell)->check(CLI::Range(1u, 8u));
  repr_cmd->add_option("--max-n", max_n, "largest factorial argument");

  auto* wilson_cmd =
      app.add_subcommand("wilson", "factorial-pair representation of a");
  wilson_cmd->add_option("--p", p)->required();
  wilson_cmd->add_option("--a", a_raw, "target residue")->required();

  auto* spacings_cmd =
      app.add_subcommand("spacings", "quadratic nonresidue gaps");
  spacings_cmd->add_option("--p", p)->required();
  spacings_cmd->add_option("--J", j_count, "gap count, 0 = all");

  auto* primroot_cmd =
      app.add_subcommand("primroot", "primitive-root factorial statistics");
  primroot_cmd->add_option("--p", p);
  primroot_cmd->add_option("--m", m, "consecutive run length");
  primroot_cmd->add_option("--window", window_text, "H,N");
  primroot_cmd->add_option("--range", range_text, "lo,hi prime sweep");

  auto* power_cmd =
      app.add_subcommand("power-classes", "power residue classification");
  power_cmd->add_option("--p", p)->required();
  power_cmd->add_option("--R", subset_text, "prime divisors of p-1");
  power_cmd->add_option("--H", h);
  power_cmd->add_option("--N", n);

  auto* scan_cmd =
      app.add_subcommand("scan-distinct", "distinct factorial scan");
  scan_cmd->add_option("--range", range_text, "lo,hi")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "bound ratio sweep");
  bounds_cmd->add_option("--kind", which, "bound kind")->required();
  bounds_cmd->add_option("--range", range_text, "lo,hi")->required();
  bounds_cmd->add_option("--ell", ell)->check(CLI::Range(1u, 8u));
  bounds_cmd->add_option("--r", r)->check(CLI::Range(0u, 8u));
  bounds_cmd->add_option("--eps", eps);
  auto* bounds_a = bounds_cmd->add_option("--a", a_raw, "fixed residue");
  bounds_cmd->add_option("--H", h, "explicit window offset");
  bounds_cmd->add_option("--N", n, "explicit window length");
  bounds_cmd->add_option("--J", j_gaps, "gap count for spacing sweeps");

  auto* guy_cmd = app.add_subcommand("guy-f11", "value-set ratio statistics");
  guy_cmd->add_option("--range", range_text, "lo,hi")->required();

  auto* diff_cmd =
      app.add_subcommand("oracle-diff", "fast paths against brute force");
  diff_cmd->add_option("--p", p)->required();
  diff_cmd->add_option("--H", h);
  diff_cmd->add_option("--N", n);
  diff_cmd->add_option("--ell", ell)->check(CLI::Range(1u, 8u));
  diff_cmd->add_option("--which", which, "I, J, F, V, G, D or all")
      ->required();
  auto* diff_sumn = diff_cmd->add_option("--sumN", sum_n_raw, "part sum for G");

  // let --format/--out/--jobs/--quiet ride after the subcommand name too
  for (auto* s : app.get_subcommands(nullptr)) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitDomain;
  }

  auto* sub = app.get_subcommands().front();
  Emitter em(g, sub->get_name(), join_args(argc, argv));

  try {
    if (sub == ctx_cmd) return run_ctx(em, p, kind_name);
    if (sub == spectrum_cmd)
      return run_spectrum(em, p, kind_name, h, n, f_text, which, binary);
    if (sub == moments_cmd)
      return run_moments(em, p, kind_name, h, n, ell, which, f_text);
    if (sub == counts_cmd) {
      std::optional<std::uint64_t> a, sum_n;
      if (counts_a->count()) a = a_raw;
      if (counts_sumn->count()) sum_n = sum_n_raw;
      return run_counts(em, p, kind_name, h, n, ell, which, a, sum_n, lift);
    }
    if (sub == repr_cmd) return run_repr(em, p, a_raw, ell, max_n);
    if (sub == wilson_cmd) return run_wilson(em, p, a_raw);
    if (sub == spacings_cmd) return run_spacings(em, p, j_count);
    if (sub == primroot_cmd)
      return run_primroot(em, p, m, window_text, range_text, g.jobs);
    if (sub == power_cmd) return run_power_classes(em, p, subset_text, h, n);
    if (sub == scan_cmd) return run_scan_distinct(em, range_text, g.jobs);
    if (sub == bounds_cmd) {
      std::optional<std::uint64_t> a;
      if (bounds_a->count()) a = a_raw;
      return run_bounds(em, which, range_text, ell, r, eps, a, h, n, j_gaps,
                        g.jobs);
    }
    if (sub == guy_cmd) return run_guy_f11(em, range_text, g.jobs);
    if (sub == diff_cmd) {
      std::optional<std::uint64_t> sum_n;
      if (diff_sumn->count()) sum_n = sum_n_raw;
      return run_oracle_diff(em, p, h, n, ell, which, sum_n);
    }
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const internal_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitDomain;
}
