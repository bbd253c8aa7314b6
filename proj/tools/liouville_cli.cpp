// liouville: command-line front end for the lambda/tower/chi2 library.
// Machine output is CSV by default (--format json for the JSON mirror);
// scalar queries print a short human line instead unless a format is forced.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liouville/liouville.hpp"

using namespace liouville;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string double_str(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string chi2_str(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct GlobalOptions {
  std::string format = "csv";
  bool format_forced = false;
  unsigned threads = 0;
};

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void progress_to_stderr(u64 n, i64 l) {
  std::fprintf(stderr, "progress: N=%llu L=%lld\n", static_cast<unsigned long long>(n),
               static_cast<long long>(l));
}

// ---- subcommand bodies ----------------------------------------------------

void run_lambda(const GlobalOptions& g, u64 start, u64 end) {
  SegmentOptions opt;
  opt.threads = g.threads;
  json rows = json::array();
  u64 lo = start;
  if (g.format == "csv") std::cout << "n,lambda\n";
  while (lo <= end) {
    const u64 hi = std::min(end, lo + opt.cap - 1);
    const LambdaTable t = lambda_segment(lo, hi, opt);
    for (u64 n = lo; n <= hi; ++n) {
      if (g.format == "csv")
        std::cout << n << "," << int(t.at(n)) << "\n";
      else
        rows.push_back({{"n", n}, {"lambda", t.at(n)}});
    }
    if (hi == end) break;
    lo = hi + 1;
  }
  if (g.format == "json") emit_json(rows);
}

void run_L(const GlobalOptions& g, u64 n, bool by_towers, const std::string& checkpoint,
           u64 stride) {
  i64 value = 0;
  PeakCount peaks;
  if (by_towers) {
    auto [l, p] = summatory_by_towers(n);
    value = l;
    peaks = p;
  } else {
    SummatoryOptions opt;
    opt.threads = g.threads;
    opt.checkpoint_path = checkpoint;
    opt.checkpoint_stride = stride;
    if (n >= opt.checkpoint_stride) opt.progress = progress_to_stderr;
    value = summatory_L(n, opt);
  }
  if (!g.format_forced) {
    std::cout << "L(" << n << ") = " << value << "\n";
    if (by_towers)
      std::cout << "peaks: P = " << peaks.positive << ", Q = " << peaks.negative << "\n";
    return;
  }
  if (g.format == "csv") {
    if (by_towers)
      std::cout << "N,L,P,Q\n" << n << "," << value << "," << peaks.positive << "," << peaks.negative << "\n";
    else
      std::cout << "N,L\n" << n << "," << value << "\n";
  } else {
    json j{{"N", n}, {"L", value}};
    if (by_towers) {
      j["P"] = peaks.positive;
      j["Q"] = peaks.negative;
    }
    emit_json(j);
  }
}

void run_towers(const GlobalOptions& g, u64 n) {
  const auto towers = towers_up_to(n);
  if (g.format == "csv") {
    std::cout << "label,base,kappa,count\n";
    for (const auto& [label, count] : towers) {
      const auto [base, kappa] = base_of(label);
      std::cout << format_label(label) << "," << base << "," << kappa << "," << count << "\n";
    }
    return;
  }
  json rows = json::array();
  for (const auto& [label, count] : towers) {
    const auto [base, kappa] = base_of(label);
    rows.push_back({{"label", format_label(label)},
                    {"m", label.m},
                    {"p", label.p},
                    {"u", label.u},
                    {"base", base},
                    {"kappa", kappa},
                    {"count", count}});
  }
  emit_json(rows);
}

std::string triad_line(u64 n, const Triad& t, u64 base) {
  std::string s = "m=" + std::to_string(t.m) + " p=" + std::to_string(t.p) +
                  " k=" + std::to_string(t.k) + " u=" + std::to_string(t.u) +
                  " class=" + (t.trivial() ? "trivial" : (t.class_two() ? "II" : "I")) +
                  " tower_base=" + std::to_string(base);
  (void)n;
  return s;
}

u64 parse_inverse_triad(const std::string& text) {
  // accepts the `triad N` output (m=.. p=.. k=.. u=..) or the compact m:p:k:u
  Triad t;
  const auto grab = [&](const char* key) -> std::optional<u64> {
    const std::string needle = std::string(key) + "=";
    const auto pos = text.find(needle);
    if (pos == std::string::npos) return std::nullopt;
    return std::stoull(text.substr(pos + needle.size()));
  };
  if (const auto m = grab("m")) {
    t.m = *m;
    const auto p = grab("p"), k = grab("k"), u = grab("u");
    if (!p || !k || !u) throw std::invalid_argument("triad --inverse: expected m= p= k= u=");
    t.p = *p;
    t.k = static_cast<u32>(*k);
    t.u = *u;
  } else {
    unsigned long long cm, cp, ck, cu;
    if (std::sscanf(text.c_str(), "%llu:%llu:%llu:%llu", &cm, &cp, &ck, &cu) != 4)
      throw std::invalid_argument("triad --inverse: expected m= p= k= u= tokens or m:p:k:u");
    t = Triad{cm, cp, static_cast<u32>(ck), cu};
  }
  return integer_of(t);
}

void run_triad(const GlobalOptions& g, const std::string& inverse, u64 n) {
  if (!inverse.empty()) {
    std::cout << parse_inverse_triad(inverse) << "\n";
    return;
  }
  const Triad t = triad_of(n);
  const u64 base = t.trivial() ? 1 : base_of(TowerLabel{t.m, t.p, t.u}).first;
  if (!g.format_forced) {
    std::cout << triad_line(n, t, base) << "\n";
    return;
  }
  if (g.format == "csv") {
    std::cout << "n,m,p,k,u,class,tower_base\n";
    std::cout << n << "," << t.m << "," << t.p << "," << t.k << "," << t.u << ","
              << (t.trivial() ? "trivial" : (t.class_two() ? "II" : "I")) << "," << base << "\n";
  } else {
    emit_json(json{{"n", n},
                   {"m", t.m},
                   {"p", t.p},
                   {"k", t.k},
                   {"u", t.u},
                   {"class", t.trivial() ? "trivial" : (t.class_two() ? "II" : "I")},
                   {"tower_base", base}});
  }
}

void run_twin(const GlobalOptions& g, const std::string& tower, u64 n, bool has_n) {
  if (!tower.empty()) {
    const TowerLabel twin = twin_tower(parse_label(tower));
    if (g.format == "json")
      emit_json(json{{"tower", tower}, {"twin", format_label(twin)}});
    else
      std::cout << format_label(twin) << "\n";
    return;
  }
  if (!has_n) throw CLI::ValidationError("twin", "expected an integer or --tower m:p:u");
  const u64 t = twin_integer(n);
  if (!g.format_forced) {
    std::cout << "twin(" << n << ") = " << t << "\n";
    return;
  }
  if (g.format == "csv")
    std::cout << "n,twin\n" << n << "," << t << "\n";
  else
    emit_json(json{{"n", n}, {"twin", t}});
}

void run_waves(const GlobalOptions& g, u64 max_n, const std::string& svg_path, u64 page) {
  constexpr u64 kTowersPerPage = 40;
  const auto towers = towers_up_to(max_n);
  const u64 bands = towers.size() + 1;  // trivial tower first
  const u64 pages = (bands + kTowersPerPage - 1) / kTowersPerPage;
  if (page >= pages)
    throw CLI::ValidationError("waves", "--page out of range (have " + std::to_string(pages) +
                                            " pages of up to 40 towers)");
  const u64 begin = page * kTowersPerPage;
  const u64 end = std::min(bands, begin + kTowersPerPage);
  std::vector<WaveTrace> shown;
  shown.reserve(static_cast<std::size_t>(end - begin));
  for (u64 i = begin; i < end; ++i)
    shown.push_back(i == 0 ? wave_trace(kTrivialTower, max_n)
                           : wave_trace(towers[static_cast<std::size_t>(i - 1)].first, max_n));

  if (!svg_path.empty()) {
    const LambdaTable lam = lambda_segment(1, max_n);
    std::vector<i64> l_trace(max_n);
    i64 acc = 0;
    for (u64 i = 0; i < max_n; ++i) {
      acc += lam.values[i];
      l_trace[i] = acc;
    }
    std::ofstream out(svg_path);
    if (!out) throw resource_error("waves: cannot open " + svg_path);
    write_wave_svg(out, max_n, shown, l_trace);
    std::cerr << "wrote " << svg_path << " (" << shown.size() << " towers, page " << page + 1
              << "/" << pages << ")\n";
    return;
  }
  if (g.format == "csv") {
    std::cout << "label,n,cumulative\n";
    for (const WaveTrace& t : shown)
      for (const auto& [n, c] : t.steps)
        std::cout << format_label(t.label) << "," << n << "," << c << "\n";
    return;
  }
  json rows = json::array();
  for (const WaveTrace& t : shown) {
    json steps = json::array();
    for (const auto& [n, c] : t.steps) steps.push_back({{"n", n}, {"cumulative", c}});
    rows.push_back({{"label", format_label(t.label)}, {"steps", steps}});
  }
  emit_json(rows);
}

void emit_chi2_rows(const GlobalOptions& g, const std::vector<ReportRow>& rows,
                    std::optional<double> mean, const json& meta) {
  if (g.format == "csv") {
    std::cout << "no,kind,length,from,to,L,chi2\n";
    for (const ReportRow& r : rows) {
      const char* kind = r.computed ? segment_kind_token(r.kind) : "cited";
      std::cout << r.no << "," << kind << "," << (r.to - r.from + 1) << "," << r.from << ","
                << r.to << "," << r.L << "," << chi2_str(r.chi2) << "\n";
    }
    if (mean) std::cout << "mean,,,,,," << chi2_str(*mean) << "\n";
    return;
  }
  json out = meta;
  json jrows = json::array();
  for (const ReportRow& r : rows) {
    jrows.push_back({{"no", r.no},
                     {"kind", segment_kind_token(r.kind)},
                     {"length", r.to - r.from + 1},
                     {"from", r.from},
                     {"to", r.to},
                     {"L", r.L},
                     {"chi2", r.chi2},
                     {"computed", r.computed}});
  }
  out["rows"] = jrows;
  if (mean) out["mean_chi2"] = *mean;
  emit_json(out);
}

void run_chi2(const GlobalOptions& g, u64 start, u64 len, const std::string& kind) {
  SegmentSpec spec{start, len, SegmentKind::arbitrary};
  if (kind == "S-")
    spec.kind = SegmentKind::s_minus;
  else if (kind == "S+")
    spec.kind = SegmentKind::s_plus;
  else if (kind != "arb")
    throw CLI::ValidationError("chi2", "--kind must be one of S-, S+, arb");
  const ChiSquareRow row = chi_square_segment(spec, g.threads);
  ReportRow r;
  r.no = 1;
  r.kind = spec.kind;
  r.from = spec.start;
  r.to = spec.last();
  r.L = row.L;
  r.chi2 = row.chi2;
  r.computed = true;
  emit_chi2_rows(g, {r}, std::nullopt, json{{"kind", "chi2"}});
}

void run_tables(const GlobalOptions& g, const std::string& id, bool slow) {
  TableReportOptions opt;
  opt.slow = slow;
  opt.threads = g.threads;
  opt.progress = progress_to_stderr;
  const TableReport report = table_report(id, opt);
  for (const ReportRow& r : report.rows)
    if (!r.computed)
      std::fprintf(stderr, "note: row %d cited, not recomputed%s\n", r.no,
                   slow ? "" : " (pass --slow to compute more)");
  std::fprintf(stderr, "mean chi2 %.4f vs fair-coin reference 2/pi = %.4f\n", report.mean_chi2,
               report.coin_reference);
  emit_chi2_rows(g, report.rows, report.mean_chi2,
                 json{{"table", report.id},
                      {"title", report.title},
                      {"note", report.note},
                      {"coin_toss_reference_mean", report.coin_reference}});
}

void run_fs(const GlobalOptions& g, double re, double im, u64 n) {
  const complex_t s{re, im};
  if (re <= 1.0)
    std::fprintf(stderr, "warning: Re(s) <= 1, the series does not converge there\n");
  const complex_t direct = F_direct(s, n);
  const complex_t towers = F_by_towers(s, n, TowerSumMode::truncated);
  const complex_t tails = F_by_towers(s, n, TowerSumMode::closed_tail);
  std::optional<complex_t> reference;
  if (re > 1.0) reference = zeta_ratio_reference(s);
  const double err_towers = std::abs(towers - direct);
  const double err_ref = reference ? std::abs(direct - *reference) : 0.0;
  if (g.format == "csv") {
    std::cout << "s_re,s_im,N,F_direct_re,F_direct_im,F_towers_re,F_towers_im,F_towers_tail_re,"
                 "F_towers_tail_im,reference_re,reference_im,abs_err_towers,abs_err_reference\n";
    std::cout << double_str(re) << "," << double_str(im) << "," << n << ","
              << double_str(direct.real()) << "," << double_str(direct.imag()) << ","
              << double_str(towers.real()) << "," << double_str(towers.imag()) << ","
              << double_str(tails.real()) << "," << double_str(tails.imag()) << ","
              << (reference ? double_str(reference->real()) : "") << ","
              << (reference ? double_str(reference->imag()) : "") << ","
              << double_str(err_towers) << "," << (reference ? double_str(err_ref) : "") << "\n";
    return;
  }
  json j{{"s", {{"re", re}, {"im", im}}},
         {"N", n},
         {"F_direct", {{"re", direct.real()}, {"im", direct.imag()}}},
         {"F_by_towers_truncated", {{"re", towers.real()}, {"im", towers.imag()}}},
         {"F_by_towers_closed_tail", {{"re", tails.real()}, {"im", tails.imag()}}},
         {"abs_err_towers_vs_direct", err_towers}};
  if (reference) {
    j["reference_zeta_ratio"] = {{"re", reference->real()}, {"im", reference->imag()}};
    j["abs_err_direct_vs_reference"] = err_ref;
  }
  emit_json(j);
}

void run_width(const GlobalOptions& g, double n) {
  const double w = critical_line_width(n);
  if (!g.format_forced) {
    std::printf("epsilon(%g) = %.6g\n", n, w);
    return;
  }
  if (g.format == "csv")
    std::cout << "n,width\n" << double_str(n) << "," << double_str(w) << "\n";
  else
    emit_json(json{{"n", n}, {"width", w}});
}

void run_generate(const GlobalOptions& g, u64 n, bool primes_only) {
  const GeneratedTable gen = generate_to(n);
  if (primes_only) {
    if (g.format == "csv") {
      std::cout << "prime\n";
      for (u64 p : gen.primes) std::cout << p << "\n";
    } else {
      emit_json(json(gen.primes));
    }
    return;
  }
  if (g.format == "csv") {
    std::cout << "n,lambda\n";
    for (u64 i = 0; i < gen.table.size(); ++i)
      std::cout << (i + 1) << "," << int(gen.table.values[i]) << "\n";
  } else {
    json rows = json::array();
    for (u64 i = 0; i < gen.table.size(); ++i)
      rows.push_back({{"n", i + 1}, {"lambda", gen.table.values[i]}});
    emit_json(rows);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouville lambda, tower partitions, summatory sums and chi-square reports"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--format", g.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->each([&](const std::string&) { g.format_forced = true; });
  app.add_option("--threads", g.threads,
                 "worker threads (default: LIOUVILLE_THREADS or hardware count)");

  // lambda
  auto* c_lambda = app.add_subcommand("lambda", "lambda values over a range");
  u64 la_start = 1, la_end = 0;
  c_lambda->add_option("--start", la_start, "first n (default 1)");
  c_lambda->add_option("--end", la_end, "last n")->required();

  // L
  auto* c_L = app.add_subcommand("L", "summatory L(N)");
  u64 L_n = 0;
  bool L_towers = false;
  std::string L_checkpoint;
  u64 L_stride = 10'000'000;
  c_L->add_option("N", L_n, "upper bound")->required();
  c_L->add_flag("--towers", L_towers, "compute via tower peak counting");
  c_L->add_option("--checkpoint", L_checkpoint, "checkpoint file (plain N,L lines)");
  c_L->add_option("--stride", L_stride, "checkpoint stride (default 1e7)");

  // towers
  auto* c_towers = app.add_subcommand("towers", "towers with members below N");
  u64 t_n = 0;
  c_towers->add_option("N", t_n, "upper bound")->required();

  // triad
  auto* c_triad = app.add_subcommand("triad", "triad label of an integer");
  u64 tr_n = 0;
  std::string tr_inverse;
  c_triad->add_option("N", tr_n, "integer to label");
  c_triad->add_option("--inverse", tr_inverse, "reconstruct the integer from a triad line");

  // twin
  auto* c_twin = app.add_subcommand("twin", "opposite-lambda twin of an integer or tower");
  u64 tw_n = 0;
  bool tw_has_n = false;
  std::string tw_tower;
  c_twin->add_option("N", tw_n, "integer")->each([&](const std::string&) { tw_has_n = true; });
  c_twin->add_option("--tower", tw_tower, "tower label m:p:u instead of an integer");

  // waves
  auto* c_waves = app.add_subcommand("waves", "rectangular tower waves");
  u64 w_max_n = 30;
  std::string w_svg;
  u64 w_page = 0;
  c_waves->add_option("--max-n", w_max_n, "plot integers up to N (default 30)");
  c_waves->add_option("--svg", w_svg, "write an SVG step plot to this path");
  c_waves->add_option("--page", w_page, "page index (40 towers per page)");

  // chi2
  auto* c_chi2 = app.add_subcommand("chi2", "chi-square of one lambda window");
  u64 x_start = 0, x_len = 0;
  std::string x_kind = "arb";
  c_chi2->add_option("--start", x_start, "window start")->required();
  c_chi2->add_option("--len", x_len, "window length")->required();
  c_chi2->add_option("--kind", x_kind, "S-, S+ or arb (default arb)");

  // tables
  auto* c_tables = app.add_subcommand("tables", "reproduce a built-in reference table");
  std::string tb_id;
  bool tb_slow = false;
  c_tables->add_option("--id", tb_id, "table id: 1.1 1.2 1.3 1.4 2.1 3.1 3.2")->required();
  c_tables->add_flag("--slow", tb_slow, "also compute the expensive rows");

  // fs
  auto* c_fs = app.add_subcommand("fs", "F(s) three ways");
  double f_re = 2.0, f_im = 0.0;
  u64 f_n = 100000;
  c_fs->add_option("--re", f_re, "Re(s) (default 2)");
  c_fs->add_option("--im", f_im, "Im(s) (default 0)");
  c_fs->add_option("--n", f_n, "truncation bound (default 1e5)");

  // width
  auto* c_width = app.add_subcommand("width", "iterated-logarithm width estimate");
  double wd_n = 0.0;
  c_width->add_option("N", wd_n, "evaluation point (> e^e)")->required();

  // generate
  auto* c_gen = app.add_subcommand("generate", "lambda by deterministic doubling");
  u64 g_n = 0;
  bool g_primes = false;
  c_gen->add_option("N", g_n, "table length")->required();
  c_gen->add_flag("--primes", g_primes, "dump the discovered primes instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cout, std::cerr);
    return kExitUsage;
  }

  try {
    if (*c_lambda) run_lambda(g, la_start, la_end);
    if (*c_L) run_L(g, L_n, L_towers, L_checkpoint, L_stride);
    if (*c_towers) run_towers(g, t_n);
    if (*c_triad) {
      if (tr_inverse.empty() && tr_n == 0)
        throw CLI::ValidationError("triad", "expected an integer or --inverse");
      run_triad(g, tr_inverse, tr_n);
    }
    if (*c_twin) run_twin(g, tw_tower, tw_n, tw_has_n);
    if (*c_waves) run_waves(g, w_max_n, w_svg, w_page);
    if (*c_chi2) run_chi2(g, x_start, x_len, x_kind);
    if (*c_tables) run_tables(g, tb_id, tb_slow);
    if (*c_fs) run_fs(g, f_re, f_im, f_n);
    if (*c_width) run_width(g, wd_n);
    if (*c_gen) run_generate(g, g_n, g_primes);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource error: out of memory\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "out of domain: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::range_error& e) {
    std::cerr << "out of range: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
