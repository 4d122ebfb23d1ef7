// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vdfi/vdfi.hpp"

namespace {

using namespace vdfi;

constexpr double kSoundnessRel = 1e-9;
constexpr double kClosedFormRel = 1e-12;
constexpr double kSoundnessSeconds = 60.0;
constexpr int kSamplesPerRange = 1000;
constexpr std::uint64_t kSeed = 20240611;

const std::vector<std::string> kFunctions{"power:2", "power:3", "power:0.5", "sei:2",
                                          "sli:1",   "lnpi1:-1", "lnpi2:1"};

using Atlas = std::map<int, std::map<int, std::vector<ChemGraph>>>;

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)}); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const Outcome& o, const std::string& summary) {
  std::printf("criterion %d %s: %s\n", id, o.pass ? "PASS" : "FAIL", o.pass ? summary.c_str() : o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string where(int n, int m, const std::string& f) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", f=" + f + ")";
}

Outcome soundness(const Atlas& atlas, std::size_t& checks) {
  Outcome o;
  for (const auto& spec : kFunctions) {
    const DegreeFunction f = parse_function_spec(spec);
    const Verdict v = classify(f).verdict;
    for (const auto& [n, levels] : atlas) {
      for (const auto& [m, graphs] : levels) {
        const auto rep = verify_bound_on(graphs, n, m, f);
        ++checks;
        if (!rep.violations.empty()) o.fail(where(n, m, spec) + ": " + rep.violations.front());
        const Direction want = v == Verdict::CaseI ? Direction::UpperBound : Direction::LowerBound;
        if (rep.bound.direction != want) o.fail(where(n, m, spec) + ": direction disagrees with classification");
        const bool beyond = !close(rep.extremal_value, rep.bound.total, kSoundnessRel) &&
                            (rep.bound.direction == Direction::UpperBound ? rep.extremal_value > rep.bound.total
                                                                          : rep.extremal_value < rep.bound.total);
        if (beyond) o.fail(where(n, m, spec) + ": extremal value beyond the bound");
      }
    }
  }
  return o;
}

Outcome point_values(const Atlas& atlas) {
  Outcome o;
  const DegreeFunction f = DegreeFunction::power(2);
  auto rep = [&](int n, int m) { return verify_bound_on(atlas.at(n).at(m), n, m, f); };

  const auto r54 = rep(5, 4);
  const std::string star = canonical_code(ChemGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).bytes;
  if (r54.bound.total != 20 || !r54.attained || r54.attaining_graphs != std::vector<std::string>{star})
    o.fail("(5,4): expected bound 20 attained only by the star");

  const auto r65 = rep(6, 5);
  if (r65.bound.total != 24 || !r65.attained || r65.attaining_degree_sets != std::vector<std::string>{"{1,2,4}"})
    o.fail("(6,5): expected bound 24 attained with degree set {1,2,4}");
  for (const auto& g6 : r65.attaining_graphs) {
    if (degree_vector(parse_graph6(g6)).n2 != 1) o.fail("(6,5): attaining graph without exactly one degree-2 vertex");
  }

  const auto r76 = rep(7, 6);
  if (r76.bound.total != 30 || !r76.attained || r76.attaining_degree_sets != std::vector<std::string>{"{1,3,4}"})
    o.fail("(7,6): expected bound 30 attained with degree set {1,3,4}");

  const auto r55 = rep(5, 5);
  if (r55.bound.total != 28 || r55.extremal_value != 26 || r55.attained)
    o.fail("(5,5): expected bound 28 with enumerated maximum 26, not attained");
  return o;
}

Outcome closed_forms(std::size_t& checks) {
  Outcome o;
  const std::map<Family, std::vector<double>> params{
      {Family::Power, {-2, -1, 0.5, 2, 3}},
      {Family::SumExdeg, {0.25, 0.75, 2}},
      {Family::SumLodeg, {0.75, 2}},
      {Family::LnMultZagreb1, {-2, -0.5, 0.25, 0.75, 2}},
      {Family::LnMultZagreb2, {-2, -0.5, 0.25, 0.75, 2}},
  };
  auto compare = [&](Family family, double p, int n, int m, const DegreeFunction& f) {
    const double printed = corollary_closed_form(family, p, n, m);
    const double generic = theorem1_bound(n, m, f).total;
    ++checks;
    if (!close(printed, generic, kClosedFormRel))
      o.fail(where(n, m, f.spec()) + ": closed form " + format_number(printed) + " vs " + format_number(generic));
  };
  for (const auto& [family, ps] : params) {
    for (double p : ps) {
      const DegreeFunction f = make_function(family, p);
      for (int n = 5; n <= 30; ++n) {
        for (int m = n - 1; m <= std::min(2 * n, n * (n - 1) / 2); ++m) compare(family, p, n, m, f);
      }
    }
  }
  for (int n = 11; n <= 30; ++n) {
    const DegreeFunction f = DegreeFunction::forgotten_coindex(n);
    for (int m = n - 1; m <= 2 * n; ++m) compare(Family::ForgottenCoindex, n, n, m, f);
  }
  const double fbar = theorem1_bound(11, 10, DegreeFunction::forgotten_coindex(11)).total;
  if (fbar != 360 || corollary_closed_form(Family::ForgottenCoindex, 11, 11, 10) != 360)
    o.fail("F-bar(11,10) is not 360");
  return o;
}

Outcome classification(std::size_t& samples) {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  const double a_star = sum_lodeg_threshold();
  struct Range {
    Family family;
    double lo;
    double hi;
    Verdict want;
  };
  const std::vector<Range> ranges{
      {Family::Power, 1, 6, Verdict::CaseI},           {Family::Power, -6, 0, Verdict::CaseI},
      {Family::Power, 0, 1, Verdict::CaseII},          {Family::SumExdeg, 1, 5, Verdict::CaseI},
      {Family::SumExdeg, 0, 1.0 / 3, Verdict::CaseI},  {Family::SumExdeg, 0.5, 1, Verdict::CaseII},
      {Family::SumLodeg, a_star, 10, Verdict::CaseI},  {Family::LnMultZagreb1, -5, 0, Verdict::CaseI},
      {Family::LnMultZagreb1, 0, 5, Verdict::CaseII},  {Family::LnMultZagreb2, -5, 0, Verdict::CaseII},
      {Family::LnMultZagreb2, 0, 5, Verdict::CaseI},
  };
  for (const auto& r : ranges) {
    std::uniform_real_distribution<double> dist(r.lo, r.hi);
    for (int i = 0; i < kSamplesPerRange; ++i) {
      double p = dist(rng);
      while (p == r.lo) p = dist(rng);
      ++samples;
      const Verdict got = classify(make_function(r.family, p)).verdict;
      if (got != r.want || printed_range_check(r.family, p) != r.want) {
        o.fail(std::string(family_tag(r.family)) + ":" + format_number(p) + " classified " +
               std::string(verdict_name(got)) + ", expected " + std::string(verdict_name(r.want)));
      }
    }
  }
  if (classify(DegreeFunction::sum_lodeg(a_star + 0.01)).verdict != Verdict::CaseI ||
      classify(DegreeFunction::sum_lodeg(a_star - 0.01)).verdict == Verdict::CaseI)
    o.fail("sum lodeg verdict does not flip at the threshold");
  for (int n = 11; n <= 40; ++n) {
    if (classify(DegreeFunction::forgotten_coindex(n)).verdict != Verdict::CaseI)
      o.fail("F-bar not CaseI at n=" + std::to_string(n));
  }
  if (classify(DegreeFunction::forgotten_coindex(10)).verdict == Verdict::CaseI) o.fail("F-bar CaseI at n=10");
  return o;
}

Outcome lemma1() {
  Outcome o;
  for (const auto& spec : kFunctions) {
    const auto c = classify(parse_function_spec(spec));
    if (!verify_lemma1(c.xi1, c.xi2, 100)) o.fail("lemma fails for " + spec);
  }
  return o;
}

Outcome identities(const Atlas& atlas, std::size_t& graphs) {
  Outcome o;
  for (const auto& spec : kFunctions) {
    const DegreeFunction f = parse_function_spec(spec);
    for (const auto& [n, levels] : atlas) {
      for (const auto& [m, list] : levels) {
        const IndexValue base = linear_base(n, m, f);
        for (const auto& g : list) {
          ++graphs;
          const IndexValue h = h_f(g, f);
          const TiPair tp = ti_pair(g, f);
          const IndexValue gamma = gamma_f(g, f);
          bool ok;
          if (h.exact) {
            ok = *tp.ti.exact + *tp.coindex.exact == Rational(n - 1) * *h.exact &&
                 *h.exact == *base.exact + *gamma.exact;
          } else {
            ok = close(tp.ti.value + tp.coindex.value, (n - 1) * h.value, kSoundnessRel) &&
                 close(h.value, base.value + gamma.value, kSoundnessRel);
          }
          if (!ok) o.fail(where(n, m, spec) + ": identity fails on " + to_graph6(g.graph()));
        }
      }
    }
  }
  return o;
}

Outcome extremal(const Atlas& atlas, int& feasible) {
  Outcome o;
  const std::vector<DegreeFunction> fs = [] {
    std::vector<DegreeFunction> out;
    for (const auto& s : kFunctions) out.push_back(parse_function_spec(s));
    return out;
  }();
  for (const auto& [n, levels] : atlas) {
    for (const auto& [m, list] : levels) {
      const auto sol = construct_extremal(n, m);
      for (const auto& f : fs) {
        const auto rep = verify_bound_on(list, n, m, f);
        if (sol.feasible != rep.attained) o.fail(where(n, m, f.spec()) + ": feasibility disagrees with attainment");
        if (!sol.feasible) continue;
        const IndexValue h = h_f(*sol.witness, f);
        const bool meets = h.exact ? *h.exact == *rep.bound.exact_total : close(h.value, rep.bound.total, kSoundnessRel);
        if (!meets) o.fail(where(n, m, f.spec()) + ": witness does not meet the bound");
        const std::string code = canonical_code(*sol.witness).bytes;
        if (std::find(rep.attaining_graphs.begin(), rep.attaining_graphs.end(), code) == rep.attaining_graphs.end())
          o.fail(where(n, m, f.spec()) + ": witness not among enumerated attaining graphs");
      }
      if (sol.feasible) ++feasible;
    }
  }
  for (auto [n, m] : {std::pair{6, 6}, std::pair{5, 9}}) {
    const auto sol = construct_extremal(n, m);
    if (sol.feasible || sol.reason != Infeasibility::ErdosGallai)
      o.fail("(" + std::to_string(n) + "," + std::to_string(m) + ") not reported Erdos-Gallai infeasible");
  }
  return o;
}

Outcome infrastructure(const Atlas& atlas, int workers, std::size_t& graphs) {
  Outcome o;
  for (const auto& [n, levels] : atlas) {
    for (const auto& [m, list] : levels) {
      for (const auto& g : list) {
        ++graphs;
        const std::string g6 = to_graph6(g.graph());
        const ChemGraph back = parse_graph6(g6);
        if (!(back.graph() == g.graph()) || to_graph6(back.graph()) != g6) o.fail("graph6 round trip fails on " + g6);
      }
    }
  }
  std::size_t at5 = 0;
  for (const auto& [m, list] : atlas.at(5)) at5 += list.size();
  if (at5 != 21) o.fail("n=5 class count is " + std::to_string(at5) + ", expected 21");
  const int other = workers == 1 ? 4 : 1;
  for (int n = 5; n <= 8; ++n) {
    if (enumerate_connected_levels(n, 2 * n, 1) != enumerate_connected_levels(n, 2 * n, 4))
      o.fail("worker count changes enumeration at n=" + std::to_string(n));
  }
  for (const auto& [n, levels] : atlas) {
    const auto again = enumerate_connected_chemical_all(n, {other, std::nullopt});
    for (const auto& [m, list] : levels) {
      const auto& alt = again.at(m);
      if (alt.size() != list.size()) o.fail("worker count changes class count at n=" + std::to_string(n));
      for (std::size_t i = 0; i < std::min(alt.size(), list.size()); ++i) {
        if (!(alt[i].graph() == list[i].graph())) {
          o.fail("worker count changes output order at n=" + std::to_string(n));
          break;
        }
      }
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int workers = 1;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
      workers = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--workers N]\n", argv[0]);
      return 2;
    }
  }
  if (workers < 1) workers = 1;

  try {
    const auto start = std::chrono::steady_clock::now();
    Atlas atlas;
    std::size_t total = 0;
    for (int n = 5; n <= 8; ++n) {
      atlas[n] = enumerate_connected_chemical_all(n, {workers, std::nullopt});
      for (const auto& [m, list] : atlas[n]) total += list.size();
    }
    std::size_t checks = 0;
    Outcome c1 = soundness(atlas, checks);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds >= kSoundnessSeconds) c1.fail("runtime " + std::to_string(seconds) + " s exceeds the limit");
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu (n,m,f) cells over %zu graphs, no violations, %.2f s", checks, total, seconds);
    report(1, c1, buf);

    report(2, point_values(atlas), "(5,4)=20 star, (6,5)=24 {1,2,4}, (7,6)=30 {1,3,4}, (5,5)=28 vs 26");

    std::size_t cf = 0;
    const Outcome c3 = closed_forms(cf);
    report(3, c3, std::to_string(cf) + " closed-form evaluations within 1e-12, F-bar(11,10)=360");

    std::size_t samples = 0;
    const Outcome c4 = classification(samples);
    report(4, c4, std::to_string(samples) + " sampled parameters, threshold flip, F-bar n=10..40");

    report(5, lemma1(), std::to_string(kFunctions.size()) + " functions, max_total=100");

    std::size_t identity_checks = 0;
    const Outcome c6 = identities(atlas, identity_checks);
    report(6, c6, std::to_string(identity_checks) + " graph/function pairs");

    int feasible = 0;
    const Outcome c7 = extremal(atlas, feasible);
    report(7, c7, std::to_string(feasible) + " feasible cells matched, (6,6) and (5,9) Erdos-Gallai");

    std::size_t round_trips = 0;
    const Outcome c8 = infrastructure(atlas, workers, round_trips);
    report(8, c8, std::to_string(round_trips) + " round trips, 21 classes at n=5, workers 1 and 4 agree");
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
