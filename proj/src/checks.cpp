#include "adsharvest/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "adsharvest/oracle.hpp"
#include "adsharvest/pins.hpp"
#include "adsharvest/quantify.hpp"

namespace adsh {

namespace {

constexpr const char* kPinElements[] = {"l_aa", "l_bb", "l_ab", "m_plus",
                                        "m_minus"};

double rel(cplx a, cplx b, double floor = 1e-15) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), floor});
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct Worst {
  double value = 0.0;
  std::string where = "-";
  void add(double v, const std::string& w) {
    if (v > value) {
      value = v;
      where = w;
    }
  }
  std::string detail(const char* kind = "max rel dev ") const {
    return kind + fmt(value) + " at " + where;
  }
};

// Deterministic uniform draw (distribution objects are not pinned across
// standard library implementations).
double unif(std::mt19937& rng, double lo, double hi) {
  const double u = std::ldexp(static_cast<double>(rng()), -32);
  return lo + (hi - lo) * u;
}

Scenario random_scenario(std::mt19937& rng, PairKind kind) {
  const double L = unif(rng, 0.8, 5.0);
  const double gap = unif(rng, 0.5, 3.5);
  const double dx = unif(rng, 0.3, 2.5);
  const double tau0 = unif(rng, -3.0, 3.0);
  return kind == PairKind::geodesic
             ? Scenario::geodesic_pair(L, -1 + static_cast<int>(rng() % 3),
                                       gap, 1.0, dx, tau0)
             : Scenario::static_pair_at(L, -1 + static_cast<int>(rng() % 3),
                                        gap, 1.0, dx, tau0);
}

cplx oracle_value(const Scenario& sc, const std::string& element) {
  if (element == "l_aa") return quad_local_response(sc, Leg::a);
  if (element == "l_bb") return quad_local_response(sc, Leg::b);
  if (element == "l_ab") return quad_cross_response(sc);
  if (element == "m_plus") return quad_m_plus(sc);
  return quad_m_minus(sc);
}

cplx closed_value(const ElementSet& es, const std::string& element) {
  if (element == "l_aa") return es.l_aa;
  if (element == "l_bb") return es.l_bb;
  if (element == "l_ab") return es.l_ab;
  if (element == "m_plus") return es.m_plus;
  return es.m_minus;
}

template <class Fn>
void gate(std::vector<CheckResult>* out, const char* name, Fn&& fn) {
  CheckResult r;
  r.name = name;
  try {
    fn(&r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out->push_back(std::move(r));
}

}  // namespace

std::vector<CheckResult> run_checks(const std::string& pins_path, bool regen) {
  std::vector<CheckResult> results;

  // Reference values recomputed once and shared by the first two gates.
  PinMap fresh;
  std::string fresh_error;
  try {
    for (const Checkpoint& cp : pinned_checkpoints()) {
      const Scenario sc = make_scenario(cp);
      for (const char* el : kPinElements)
        fresh[checkpoint_key(cp, el)] = oracle_value(sc, el);
    }
  } catch (const std::exception& e) {
    fresh_error = e.what();
  }

  gate(&results, "reference-pins", [&](CheckResult* r) {
    if (!fresh_error.empty()) {
      r->pass = false;
      r->detail = "reference evaluation failed: " + fresh_error;
      return;
    }
    if (regen) {
      write_pins(pins_path, fresh);
      r->pass = true;
      r->detail = "regenerated " + std::to_string(fresh.size()) +
                  " values -> " + pins_path;
      return;
    }
    const PinMap stored = read_pins(pins_path);
    Worst w;
    int missing = 0;
    for (const auto& [key, value] : fresh) {
      const auto it = stored.find(key);
      if (it == stored.end()) {
        ++missing;
        continue;
      }
      w.add(rel(value, it->second), key);
    }
    r->pass = (missing == 0) && w.value <= 1e-12;
    r->detail = w.detail();
    if (missing > 0)
      r->detail += "; " + std::to_string(missing) + " keys missing";
  });

  gate(&results, "closed-vs-reference", [&](CheckResult* r) {
    if (!fresh_error.empty()) {
      r->pass = false;
      r->detail = "reference evaluation failed: " + fresh_error;
      return;
    }
    Worst w;
    for (const Checkpoint& cp : pinned_checkpoints()) {
      const ElementSet es = element_set(make_scenario(cp));
      for (const char* el : kPinElements)
        w.add(rel(closed_value(es, el), fresh.at(checkpoint_key(cp, el))),
              checkpoint_key(cp, el));
    }
    r->pass = w.value <= 1e-3;
    r->detail = w.detail();
  });

  gate(&results, "swap-identity", [&](CheckResult* r) {
    std::mt19937 rng(0xad540001u);
    Truncation tight{1e-13, 1024, 512, 128, 3};
    Worst w;
    for (PairKind kind : {PairKind::geodesic, PairKind::static_pair}) {
      for (int i = 0; i < 20; ++i) {
        const Scenario sc = random_scenario(rng, kind);
        const cplx direct = m_plus(sc, tight);
        const cplx via = m_plus_identity(sc, tight);
        w.add(rel(direct, via, 1e-25),
              (kind == PairKind::geodesic ? "geodesic#" : "static#") +
                  std::to_string(i));
      }
    }
    r->pass = w.value <= 1e-10;
    r->detail = w.detail();
  });

  gate(&results, "purity", [&](CheckResult* r) {
    std::mt19937 rng(0xad540002u);
    Truncation tight{1e-13, 1024, 512, 128, 3};
    Worst w;
    for (int i = 0; i < 10; ++i) {
      const Scenario sc = random_scenario(rng, PairKind::geodesic);
      const cplx mp = m_plus_identity(sc, tight);
      w.add(std::abs(mp.imag()) / std::max(std::abs(mp), 1e-25),
            "im(m_plus)#" + std::to_string(i));
    }
    r->pass = w.value <= 1e-12;
    Worst w2;
    for (int i = 0; i < 4; ++i) {
      const Scenario sc = random_scenario(rng, PairKind::geodesic);
      const cplx mm = quad_m_minus(sc);
      w2.add(std::abs(mm.real()) / std::max(std::abs(mm), 1e-25),
             "re(m_minus)#" + std::to_string(i));
    }
    r->pass = r->pass && w2.value <= 1e-9;
    r->detail = w.detail("m_plus ") + "; " + w2.detail("m_minus ");
  });

  gate(&results, "spacelike-suppression", [&](CheckResult* r) {
    // Switching reach well inside the lightcone-crossing distance.
    const Scenario sc = Scenario::static_pair_at(10.0, -1, 2.0, 1.0, 16.738,
                                                 0.0);
    const ElementSet es = element_set(sc);
    const double scale = std::abs(es.m_plus);
    const double worst = std::max(
        {std::abs(es.m_minus), std::abs(es.c_ab), std::abs(es.c_ba)});
    r->pass = worst <= 1e-12 * scale && scale > 0.0;
    r->detail = "max(|m_minus|,|c|)/|m_plus| = " + fmt(worst / scale);
  });

  gate(&results, "static-geodesic-continuity", [&](CheckResult* r) {
    const double dx = 1e-4;
    const Scenario g = Scenario::geodesic_pair(1.0, -1, 2.0, 1.0, dx, 1.0);
    const Scenario st = Scenario::static_pair_at(1.0, -1, 2.0, 1.0, dx, 1.0);
    const ElementSet eg = element_set(g);
    const ElementSet es = element_set(st);
    Worst w;
    w.add(rel(eg.l_aa, es.l_aa), "l_aa");
    w.add(rel(eg.l_bb, es.l_bb), "l_bb");
    w.add(rel(eg.l_ab, es.l_ab), "l_ab");
    w.add(rel(eg.m_plus, es.m_plus), "m_plus");
    w.add(rel(eg.m_minus, es.m_minus), "m_minus");
    w.add(rel(eg.c_ab, es.c_ab), "c_ab");
    w.add(rel(eg.c_ba, es.c_ba), "c_ba");
    r->pass = w.value <= 1e-5;
    r->detail = w.detail();
  });

  gate(&results, "spectrum-partition", [&](CheckResult* r) {
    bool ok = true;
    for (int l = 0; l <= 20 && ok; ++l) {
      std::set<int> neumann, dirichlet, transparent;
      for (int n = 0; n < 200; ++n) {
        const int wn = mode_frequency(BoundaryCondition::neumann, n, l);
        const int wd = mode_frequency(BoundaryCondition::dirichlet, n, l);
        const int wt = mode_frequency(BoundaryCondition::transparent, n, l);
        if (wn <= 100) neumann.insert(wn);
        if (wd <= 100) dirichlet.insert(wd);
        if (wt <= 100) transparent.insert(wt);
      }
      std::set<int> both;
      std::set_intersection(neumann.begin(), neumann.end(), dirichlet.begin(),
                            dirichlet.end(),
                            std::inserter(both, both.begin()));
      std::set<int> merged = neumann;
      merged.insert(dirichlet.begin(), dirichlet.end());
      ok = both.empty() && merged == transparent;
    }
    r->pass = ok;
    r->detail = ok ? "reflecting spectra partition the transparent one"
                   : "partition violated";
  });

  gate(&results, "truncation-doubling", [&](CheckResult* r) {
    Worst w;
    for (const Checkpoint& cp : pinned_checkpoints()) {
      Truncation tr;  // defaults
      Truncation tr2{tr.tol, tr.n_max * 2, tr.l_max * 2, tr.image_n_max * 2,
                     tr.consecutive_below};
      const Scenario sc = make_scenario(cp);
      const ElementSet a = element_set(sc, tr);
      const ElementSet b = element_set(sc, tr2);
      w.add(rel(a.l_aa, b.l_aa, 1e-20), checkpoint_key(cp, "l_aa"));
      w.add(rel(a.l_bb, b.l_bb, 1e-20), checkpoint_key(cp, "l_bb"));
      w.add(rel(a.l_ab, b.l_ab, 1e-20), checkpoint_key(cp, "l_ab"));
      w.add(rel(a.m_plus, b.m_plus, 1e-20), checkpoint_key(cp, "m_plus"));
      w.add(rel(a.m_minus, b.m_minus, 1e-20), checkpoint_key(cp, "m_minus"));
      w.add(rel(a.c_ab, b.c_ab, 1e-20), checkpoint_key(cp, "c_ab"));
      w.add(rel(a.c_ba, b.c_ba, 1e-20), checkpoint_key(cp, "c_ba"));
    }
    r->pass = w.value <= 1e-8;
    r->detail = w.detail();
  });

  gate(&results, "density-health", [&](CheckResult* r) {
    Worst wt, wh, we;
    for (const Checkpoint& cp : pinned_checkpoints()) {
      const Scenario sc = make_scenario(cp);
      const ElementSet es = element_set(sc);
      const TwoDetectorState st =
          density_matrix(es, sc.a.coupling, sc.b.coupling);
      const std::string key = checkpoint_key(cp, "state");
      wt.add(std::abs(st.trace() - 1.0), key);
      double h = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          h = std::max(h, std::abs(st.at(i, j) - std::conj(st.at(j, i))));
      wh.add(h, key);
      we.add(std::max(0.0, -st.min_eigenvalue()), key);
    }
    r->pass = wt.value == 0.0 && wh.value <= 1e-16 && we.value <= 1e-10;
    r->detail = "trace dev " + fmt(wt.value) + ", hermiticity dev " +
                fmt(wh.value) + ", eigenvalue floor " + fmt(we.value);
  });

  gate(&results, "hermitian-pairing", [&](CheckResult* r) {
    Truncation tight{1e-13, 1024, 512, 128, 3};
    Worst w;
    for (const Checkpoint& cp : pinned_checkpoints()) {
      const Scenario sc = make_scenario(cp);
      const cplx ab = cross_response_gaps(sc, Order::ab, sc.a.gap, sc.b.gap,
                                          tight);
      const cplx ba = cross_response_gaps(sc, Order::ba, sc.a.gap, sc.b.gap,
                                          tight);
      w.add(rel(ba, std::conj(ab), 1e-25), checkpoint_key(cp, "conj"));

      Checkpoint flipped = cp;
      flipped.tau0 = -cp.tau0;
      const Scenario sf = make_scenario(flipped);
      const cplx ba_flip = cross_response_gaps(sf, Order::ba, sf.a.gap,
                                               sf.b.gap, tight);
      w.add(rel(ba_flip, ab, 1e-25), checkpoint_key(cp, "delay-swap"));
    }
    r->pass = w.value <= 1e-12;
    r->detail = w.detail();
  });

  gate(&results, "mutual-information-floor", [&](CheckResult* r) {
    ElementSet es;
    es.l_aa = 0.31;
    es.l_bb = 0.74;
    es.l_ab = 0.0;
    const double uncorrelated = mutual_information(es);
    es.l_ab = 0.9 * std::sqrt(es.l_aa * es.l_bb);
    const double correlated = mutual_information(es);
    r->pass = std::abs(uncorrelated) <= 1e-15 && correlated > 0.0;
    r->detail = "uncorrelated " + fmt(uncorrelated) + ", correlated " +
                fmt(correlated);
  });

  gate(&results, "kernel-quadrature", [&](CheckResult* r) {
    const auto& cps = pinned_checkpoints();
    Worst w;
    {  // geodesic local + cross + symmetrised overlap
      const Scenario sc = make_scenario(cps[0]);
      w.add(rel(quad_local_response_kernel(sc, Leg::a),
                quad_local_response(sc, Leg::a)),
            "l_aa geodesic");
      w.add(rel(quad_cross_response_kernel(sc), quad_cross_response(sc)),
            "l_ab geodesic");
    }
    {
      const Scenario sc = make_scenario(cps[4]);  // nonzero delay
      w.add(rel(quad_m_plus_kernel(sc), quad_m_plus(sc)), "m_plus delayed");
    }
    {
      const Scenario sc = make_scenario(cps[6]);  // static pair
      w.add(rel(quad_local_response_kernel(sc, Leg::b),
                quad_local_response(sc, Leg::b)),
            "l_bb static");
    }
    r->pass = w.value <= 1e-3;
    r->detail = w.detail();
  });

  gate(&results, "wightman-closed-form", [&](CheckResult* r) {
    const Geometry g{1.0};
    Worst w;
    for (int eps : {-1, 0, +1}) {
      const BoundaryCondition bc = boundary_from_epsilon(eps);
      for (double t : {0.7, 3.5}) {
        const cplx dt{t, -0.02};
        // e^{-0.02 omega} tail: 1500 modes leave a residue below e^{-55}
        const cplx direct = wightman_mode_sum(g, bc, dt, 0.3, 1500);
        const cplx closed =
            wightman_closed_form(g, bc, sigma0_center(dt, 0.3));
        w.add(rel(direct, closed),
              "eps=" + std::to_string(eps) + ",dt=" + fmt(t));
      }
    }
    r->pass = w.value <= 1e-8;
    r->detail = w.detail();
  });

  return results;
}

}  // namespace adsh
