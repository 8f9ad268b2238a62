#include "adsharvest/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "adsharvest/quantify.hpp"

namespace adsh {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double axis_value(const AxisSpec& ax, int i) {
  return ax.min + (ax.max - ax.min) * static_cast<double>(i) /
                      static_cast<double>(ax.count - 1);
}

void append_flag(std::string* flags, const char* name) {
  if (!flags->empty()) *flags += ';';
  *flags += name;
}

void collect_truncation_flags(const TruncationReport& r, std::string* flags) {
  struct Named {
    const SumReport* rep;
    const char* name;
  };
  const Named sums[] = {
      {&r.l_aa, "l_aa_trunc"},       {&r.l_bb, "l_bb_trunc"},
      {&r.l_ab, "l_ab_trunc"},       {&r.m_plus, "m_plus_trunc"},
      {&r.m_minus, "m_minus_trunc"}, {&r.c_ab, "c_ab_trunc"},
      {&r.c_ba, "c_ba_trunc"},
  };
  for (const auto& s : sums)
    if (s.rep->terms > 0 && !s.rep->converged) append_flag(flags, s.name);
}

// Returns the formatted data line; sets *clean to false when the flags
// column carries anything other than "ok".
std::string evaluate_row(const SweepConfig& cfg,
                         const std::vector<double>& values, bool* clean) {
  std::string row;
  for (double v : values) row += fmt(v) + ",";
  *clean = true;

  try {
    const Scenario sc = scenario_at(cfg, values);
    const ElementSet es = element_set(sc, cfg.trunc);
    const TwoDetectorState st =
        density_matrix(es, sc.a.coupling, sc.b.coupling);
    const double n2 = negativity2(es);
    const double neg = negativity(es, sc.a.coupling, sc.b.coupling);
    const double mi = mutual_information(es);

    std::string flags;
    collect_truncation_flags(es.report, &flags);
    if (!es.identity_ok) append_flag(&flags, "identity");
    if (es.coincident) append_flag(&flags, "coincident");
    if (st.perturbative_warning) append_flag(&flags, "perturbative");
    if (flags.empty()) flags = "ok";
    else *clean = false;

    const double cols[] = {es.l_aa,
                           es.l_bb,
                           es.l_ab.real(),
                           es.l_ab.imag(),
                           es.m_plus.real(),
                           es.m_plus.imag(),
                           es.m_minus.real(),
                           es.m_minus.imag(),
                           es.m.real(),
                           es.m.imag(),
                           n2,
                           neg,
                           mi,
                           std::abs(es.c_ab),
                           std::abs(es.c_ba),
                           n2 - std::abs(es.c_ab)};
    for (double c : cols) row += fmt(c) + ",";
    row += flags;
  } catch (const std::exception& e) {
    *clean = false;
    for (int i = 0; i < 16; ++i) row += "nan,";
    std::string what = e.what();
    for (char& c : what)
      if (c == ',' || c == '\n' || c == '\r') c = ' ';
    row += "error=" + what;
  }
  return row;
}

struct Grid {
  std::vector<std::string> rows;
  long flagged = 0;
};

Grid evaluate_grid(const SweepConfig& cfg, int workers) {
  if (workers < 1) throw std::invalid_argument("sweep: workers must be >= 1");
  long total = 1;
  for (const auto& ax : cfg.axes) total *= ax.count;

  Grid grid;
  grid.rows.resize(static_cast<size_t>(total));
  std::vector<char> clean(static_cast<size_t>(total), 1);

  std::atomic<long> next{0};
  auto work = [&]() {
    for (;;) {
      const long i = next.fetch_add(1);
      if (i >= total) return;
      std::vector<double> values;
      if (cfg.axes.size() == 1) {
        values = {axis_value(cfg.axes[0], static_cast<int>(i))};
      } else if (cfg.axes.size() == 2) {
        const int inner = cfg.axes[1].count;
        values = {axis_value(cfg.axes[0], static_cast<int>(i / inner)),
                  axis_value(cfg.axes[1], static_cast<int>(i % inner))};
      }
      bool ok = true;
      grid.rows[static_cast<size_t>(i)] = evaluate_row(cfg, values, &ok);
      clean[static_cast<size_t>(i)] = ok ? 1 : 0;
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (char c : clean)
    if (!c) ++grid.flagged;
  return grid;
}

std::string csv_head(const SweepConfig& cfg) {
  std::ostringstream head;
  head << "# two-detector sweep v1\n";
  head << "# scenario: kind="
       << (cfg.kind == PairKind::geodesic ? "geodesic" : "static")
       << " epsilon=" << cfg.eps << " curvature=" << fmt(cfg.curvature)
       << " gap=" << fmt(cfg.gap) << " sigma=" << fmt(cfg.sigma)
       << " separation=" << fmt(cfg.separation) << " delay=" << fmt(cfg.delay)
       << " coupling=" << fmt(cfg.coupling) << "\n";
  head << "# truncation: tol=" << fmt(cfg.trunc.tol)
       << " n_max=" << cfg.trunc.n_max << " l_max=" << cfg.trunc.l_max
       << " image_n_max=" << cfg.trunc.image_n_max
       << " consecutive_below=" << cfg.trunc.consecutive_below << "\n";
  for (size_t i = 0; i < cfg.axes.size(); ++i)
    head << "# axis" << (i + 1) << ": " << cfg.axes[i].name << " "
         << fmt(cfg.axes[i].min) << " " << fmt(cfg.axes[i].max) << " "
         << cfg.axes[i].count << "\n";
  head << "# units: matrix elements, n2 and mutual_info per"
          " lambda_a*lambda_b; negativity physical\n";
  for (const auto& ax : cfg.axes) head << ax.name << ",";
  head << "l_aa,l_bb,re_l_ab,im_l_ab,re_m_plus,im_m_plus,re_m_minus,"
          "im_m_minus,re_m,im_m,n2,negativity,mutual_info,abs_c_ab,abs_c_ba,"
          "n2_minus_abs_c_ab,flags\n";
  return head.str();
}

}  // namespace

std::string sweep_csv(const SweepConfig& cfg, int workers) {
  const Grid grid = evaluate_grid(cfg, workers);
  std::string out = csv_head(cfg);
  for (const auto& r : grid.rows) {
    out += r;
    out += '\n';
  }
  return out;
}

SweepResult sweep_to_file(const SweepConfig& cfg,
                          const std::string& path_override, int workers) {
  const std::string path =
      path_override.empty() ? cfg.output_path : path_override;
  if (path.empty())
    throw std::runtime_error(
        "sweep: no output path (set [output] path or pass one explicitly)");

  const Grid grid = evaluate_grid(cfg, workers);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("sweep: cannot write " + path);
  out << csv_head(cfg);
  for (const auto& r : grid.rows) out << r << '\n';
  if (!out) throw std::runtime_error("sweep: write failed for " + path);

  return {static_cast<long>(grid.rows.size()), grid.flagged};
}

}  // namespace adsh
