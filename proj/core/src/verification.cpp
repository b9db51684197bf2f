#include "cuspsys/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "cuspsys/bounds.hpp"
#include "cuspsys/curve_topology.hpp"
#include "cuspsys/error.hpp"
#include "cuspsys/geodesics.hpp"
#include "cuspsys/hplane.hpp"
#include "cuspsys/presets.hpp"

namespace cuspsys {

namespace {

struct Surface {
  std::string name;
  Signature signature;
  RibbonGraph graph;
};

Surface make_surface(const std::string& name, std::optional<int> genus = std::nullopt) {
  const IdealTriangulation tri = preset(name, genus);
  const SurfaceTopology top = topology(tri);
  return {genus ? name + "(" + std::to_string(*genus) + ")" : name, {top.genus, top.cusps},
          RibbonGraph(tri)};
}

std::vector<Turn> random_letters(std::mt19937_64& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  std::vector<Turn> out(static_cast<std::size_t>(len(rng)));
  for (Turn& t : out) t = coin(rng) ? Turn::kRight : Turn::kLeft;
  return out;
}

using Runner = std::function<void(Check&)>;

void run_check(VerificationReport& report, int criterion, std::string name, const Runner& body) {
  Check check;
  check.criterion = criterion;
  check.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    check.passed = true;
    body(check);
  } catch (const std::exception& e) {
    check.passed = false;
    check.detail = std::string("error: ") + e.what();
  }
  check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.checks.push_back(std::move(check));
}

void require(Check& c, bool ok, const std::string& why) {
  if (!ok) {
    c.passed = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += why;
  }
}

void note_deviation(Check& c, double dev, double tol, const std::string& what) {
  c.max_deviation = std::max(c.max_deviation, dev);
  require(c, dev <= tol, what + " off by " + std::to_string(dev));
}

SystoleOptions systole_options(const VerificationOptions& o) {
  SystoleOptions s;
  s.threads = o.threads;
  return s;
}

std::set<std::vector<Dart>> class_keys(const std::vector<GeodesicClass>& classes) {
  std::set<std::vector<Dart>> keys;
  for (const auto& c : classes) keys.insert(c.walk.darts());
  return keys;
}

}  // namespace

std::vector<SysboundRow> sysbound_audit(int max_genus) {
  std::vector<SysboundRow> rows;
  for (int g = 1; g <= max_genus; ++g) {
    const SysUpper s = sys_upper({g, 1});
    SysboundRow row;
    row.genus = g;
    row.case_many_cusps = *s.case_many_cusps.value;
    row.case_close_pair = *s.case_close_pair.value;
    row.case_self_loop = *s.case_self_loop.value;
    row.three_case_max = *s.three_case_max.value;
    row.packaged = *s.packaged.value;
    row.close_pair_exceeds = row.case_close_pair > row.packaged;
    rows.push_back(row);
  }
  return rows;
}

SubwordTrial random_subword_trial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> block_count(1, 5);
  std::bernoulli_distribution empty_gap(0.3);
  const int k = block_count(rng);
  std::vector<std::vector<Turn>> blocks;
  std::vector<Turn> word;
  for (int i = 0; i < k; ++i) {
    if (!empty_gap(rng)) {
      const auto gap = random_letters(rng, 1, 6);
      word.insert(word.end(), gap.begin(), gap.end());
    }
    blocks.push_back(random_letters(rng, 1, 6));
    word.insert(word.end(), blocks.back().begin(), blocks.back().end());
  }
  if (!empty_gap(rng)) {
    const auto gap = random_letters(rng, 1, 6);
    word.insert(word.end(), gap.begin(), gap.end());
  }
  const int shift = std::uniform_int_distribution<int>(0, k - 1)(rng);
  std::vector<Turn> sub;
  for (int i = 0; i < k; ++i) {
    const auto& b = blocks[static_cast<std::size_t>((i + shift) % k)];
    sub.insert(sub.end(), b.begin(), b.end());
  }
  return {TurnWord(std::move(word)), TurnWord(std::move(sub))};
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport run_verification(const VerificationOptions& options) {
  VerificationReport report;
  report.sysbound_table = sysbound_audit(10);
  std::mt19937_64 rng(options.seed);

  if (options.surfaces) {
    run_check(report, 1, "torus16 systole equals the (1,16) bound", [&](Check& c) {
      const Surface s = make_surface("torus16");
      const SystoleResult sys = systole(s.graph, systole_options(options));
      note_deviation(c, std::abs(sys.length - std::acosh(17.0) * 2.0), kClosedFormTolerance, "systole");
      note_deviation(c, std::abs(sys.length - *sys_upper(s.signature).schmutz.value),
                     kClosedFormTolerance, "bound");
      const TurnWord w0 = canonical(TurnWord::parse("RL4RL4"));
      for (const auto& cls : sys.systoles) require(c, cls.word == w0, "systole word " + cls.word.compact());
      c.detail = c.passed ? "trace " + std::to_string(sys.trace) + ", kiss " +
                                std::to_string(sys.systoles.size())
                          : c.detail;
    });

    for (int g = 2; g <= options.max_genus; ++g) {
      run_check(report, 2, "genus(" + std::to_string(g) + ") topology, census, systole", [&](Check& c) {
        const IdealTriangulation tri = preset("genus", g);
        const SurfaceTopology top = topology(tri);
        require(c, top.genus == g && top.cusps == 46 * g - 46, "topology");
        const RibbonGraph graph(tri);
        const std::map<int, int> expected{{6, 46 * g - 47}, {12 * g - 6, 1}};
        require(c, graph.face_census() == expected, "face census");
        const SystoleResult sys = systole(graph, systole_options(options));
        require(c, sys.trace == 34, "systole trace " + std::to_string(sys.trace));
        if (c.passed) c.detail = "kiss " + std::to_string(sys.systoles.size());
      });
    }

    run_check(report, 3, "genus(2) has no essential class of trace <= 33", [&](Check& c) {
      const Surface s = make_surface("genus", 2);
      EnumerationOptions eo;
      eo.trace_max = 33;
      eo.threads = options.threads;
      const EnumerationResult r = enumerate_classes(s.graph, eo);
      const auto essential = std::count_if(r.classes.begin(), r.classes.end(),
                                           [](const GeodesicClass& k) { return !k.peripheral; });
      require(c, essential == 0, std::to_string(essential) + " essential classes");
      require(c, r.classes.size() == static_cast<std::size_t>(s.graph.face_count()),
              "peripheral classes differ from faces");
    });

    for (const auto& [name, genus] :
         {std::pair<std::string, std::optional<int>>{"torus16", std::nullopt}, {"genus", 2},
          {"sphere4", std::nullopt}}) {
      const std::string label = genus ? name + "(" + std::to_string(*genus) + ")" : name;
      run_check(report, 4, label + " systoles cross at most twice", [&](Check& c) {
        const Surface s = make_surface(name, genus);
        const SystoleResult sys = systole(s.graph, systole_options(options));
        const ClassificationResult cl = classify_systoles(s.graph, sys.systoles);
        int twice = 0, worst = 0;
        for (std::size_t i = 0; i < sys.systoles.size(); ++i) {
          for (std::size_t j = i + 1; j < sys.systoles.size(); ++j) {
            const int x = cl.crossings[i][j];
            worst = std::max(worst, x);
            if (x == 2) {
              ++twice;
              require(c, cl.labels[i].label == SystoleLabel::kA || cl.labels[j].label == SystoleLabel::kA,
                      "crossing pair without an A class");
            }
          }
        }
        require(c, twice > 0, "no twice-crossing pair");
        require(c, worst <= 2, "crossing number " + std::to_string(worst));
        if (c.passed) c.detail = std::to_string(twice) + " pairs cross twice";
      });
    }

    run_check(report, 5, "sphere4 systole and kissing number", [&](Check& c) {
      const Surface s = make_surface("sphere4");
      const SystoleResult sys = systole(s.graph, systole_options(options));
      note_deviation(c, std::abs(sys.length - 2.0 * std::acosh(3.5)), kClosedFormTolerance, "systole");
      note_deviation(c, std::abs(sys.length - *sys_upper(s.signature).schmutz.value),
                     kClosedFormTolerance, "bound");
      require(c, sys.systoles.size() == 3, "kissing number " + std::to_string(sys.systoles.size()));
      const KissUpper k = kiss_upper(s.signature, SystoleLength::from_trace(sys.trace));
      require(c, static_cast<double>(sys.systoles.size()) <= *k.sphere.value, "sphere cap");
    });
  }

  run_check(report, 6, "subword trace inequality, 1000 trials", [&](Check& c) {
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
      const SubwordTrial t = random_subword_trial(rng);
      if (trace_exact(t.word) < trace_exact(t.subword)) ++violations;
    }
    require(c, violations == 0, std::to_string(violations) + " violations");
  });

  run_check(report, 7, "two-cusp pants, 100 random r", [&](Check& c) {
    std::uniform_real_distribution<double> r(0.1, 5.0);
    for (int i = 0; i < 100; ++i) {
      const double v = r(rng);
      note_deviation(c, std::abs(verify_two_cusp_pants(v).length - horoball_tangency_lengths(v).two_cusp),
                     kClosedFormTolerance, "length");
    }
  });
  run_check(report, 7, "self-tangency pants, 100 random (r, a)", [&](Check& c) {
    std::uniform_real_distribution<double> r(std::log(2.0), 5.0);
    std::uniform_real_distribution<double> a(0.01, 0.5);
    for (int i = 0; i < 100; ++i) {
      const SelfTangency st = verify_self_tangency(r(rng), a(rng));
      note_deviation(c, st.deviation, kClosedFormTolerance, "lengths");
    }
    std::uniform_real_distribution<double> r2(1.0, 5.0);
    for (int i = 0; i < 100; ++i) {
      const SelfTangency st = verify_self_tangency(r2(rng), 0.5);
      note_deviation(c, std::abs(*st.cusp_to_alpha - *st.cusp_to_alpha_closed_form), kClosedFormTolerance,
                     "cusp distance");
    }
  });
  run_check(report, 7, "horocyclic arc lower bound on l in [2, 12]", [&](Check& c) {
    for (int i = 0; i <= 100; ++i) {
      const double l = 2.0 + 0.1 * i;
      const HorocyclicArc eq = horocyclic_arc(l);
      note_deviation(c, std::abs(eq.arc - eq.lower_bound), kOptimizationTolerance, "equality case");
      const HorocyclicArc loose = horocyclic_arc(l, 0.5);
      require(c, loose.arc >= loose.lower_bound - kOptimizationTolerance, "bound violated");
    }
  });
  run_check(report, 0, "right-triangle angle relation", [&](Check& c) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double l = 0.2 + 10.0 * u(rng);
      const double h = l * u(rng);
      note_deviation(c, verify_angle_relation(l, h).deviation, kClosedFormTolerance, "angle");
    }
  });
  run_check(report, 0, "hdist triangle inequality and Mobius invariance", [&](Check& c) {
    std::uniform_real_distribution<double> x(-5.0, 5.0), y(0.05, 5.0), k(0.1, 10.0);
    for (int i = 0; i < 1000; ++i) {
      const HPoint p{x(rng), y(rng)}, q{x(rng), y(rng)}, r{x(rng), y(rng)};
      require(c, hdist(p, r) <= hdist(p, q) + hdist(q, r) + 1e-12, "triangle inequality");
      const Mobius m = Mobius::translation(x(rng)).then(Mobius::dilation(k(rng)));
      note_deviation(c, std::abs(hdist(m.apply(p), m.apply(q)) - hdist(p, q)), 1e-9, "invariance");
    }
  });
  run_check(report, 0, "tangent horoballs: d(4 arccosh e^r) = 2r", [&](Check& c) {
    for (int i = 1; i <= 100; ++i) {
      const double r = 0.05 * i;
      note_deviation(c, std::abs(pants_quantities(4.0 * std::acosh(std::exp(r))).horoball_distance - 2.0 * r),
                     1e-12 * std::max(1.0, r), "d");
    }
  });

  if (options.surfaces) {
    std::vector<std::pair<std::string, std::optional<int>>> presets{{"torus16", std::nullopt},
                                                                    {"sphere4", std::nullopt}};
    for (int g = 2; g <= std::min(options.max_genus, 3); ++g) presets.emplace_back("genus", g);
    for (const auto& [name, genus] : presets) {
      const std::string label = genus ? name + "(" + std::to_string(*genus) + ")" : name;
      run_check(report, 8, label + " against the bound formulas", [&](Check& c) {
        const Surface s = make_surface(name, genus);
        const SystoleResult sys = systole(s.graph, systole_options(options));
        const SysUpper up = sys_upper(s.signature);
        // The three cases are only a bound jointly, through their maximum.
        for (const BoundValue* b : {&up.closed_case, &up.three_case_max, &up.schmutz, &up.packaged}) {
          if (b->applicable()) require(c, sys.length <= *b->value + kClosedFormTolerance, "systole bound");
        }
        const KissUpper k = kiss_upper(s.signature, SystoleLength::from_trace(sys.trace));
        const auto kiss = static_cast<double>(sys.systoles.size());
        for (const BoundValue* b : {&k.kissbound, &k.kissbound_universal, &k.sphere}) {
          if (b->applicable()) require(c, kiss <= *b->value, "kissing bound");
        }
      });
    }
  }
  run_check(report, 8, "A caps coincide at (1,16), l = 2 arccosh 17", [&](Check& c) {
    const KissUpper k = kiss_upper({1, 16}, SystoleLength::from_trace(34));
    require(c, k.cosh_floor == 6, "floor(2 cosh(l/4)) = " + std::to_string(k.cosh_floor));
    require(c, *k.a_cap_horoball.value == 48.0 && *k.a_cap_euler.value == 48.0, "caps differ");
  });

  run_check(report, 9, "sysbound three-case audit, g = 1..10", [&](Check& c) {
    std::string flagged;
    for (const SysboundRow& row : report.sysbound_table) {
      if (!row.close_pair_exceeds) continue;
      flagged += (flagged.empty() ? "" : ", ") + std::to_string(row.genus);
    }
    require(c, !report.sysbound_table.empty() && report.sysbound_table.front().close_pair_exceeds,
            "g = 1 not flagged");
    if (c.passed) c.detail = "case 2 exceeds 2 log g + 8 at g = " + flagged + " (flagged, not a failure)";
  });

  if (options.surfaces) {
    for (const std::string name : {"sphere4", "torus16"}) {
      run_check(report, 10, name + " pruning on/off and all-walks agreement", [&](Check& c) {
        const Surface s = make_surface(name);
        EnumerationOptions on;
        on.trace_max = 40;
        on.threads = options.threads;
        EnumerationOptions off = on;
        off.prune = false;
        const auto a = enumerate_classes(s.graph, on);
        const auto b = enumerate_classes(s.graph, off);
        require(c, class_keys(a.classes) == class_keys(b.classes), "pruning changed the result");
        on.trace_max = 13;
        const auto pruned = class_keys(enumerate_classes(s.graph, on).classes);
        std::set<std::vector<Dart>> brute;
        for (const auto& cls : enumerate_by_length(s.graph, 12)) {
          if (cls.trace <= 13) brute.insert(cls.walk.darts());
        }
        require(c, pruned == brute, "all-walks oracle disagrees");
        if (c.passed) {
          c.detail = std::to_string(a.classes.size()) + " classes; nodes " + std::to_string(a.nodes) +
                     " vs " + std::to_string(b.nodes);
        }
      });
    }
  }
  return report;
}

}  // namespace cuspsys
