#include "csmabound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "csmabound/channel.hpp"
#include "csmabound/validation.hpp"
#include "lattice_oracle.hpp"

using namespace csmabound;

namespace {

RadioEnvironment env_sigma(double sigma_db) {
  return {1.0, 2.2, sigma_db, 6.0, 18.0};
}

std::vector<double> sorted_copy(std::span<const double> v) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("correction factor") {
  CHECK(correction_factor(36, 38) == doctest::Approx(38.0 / 36.0));
  CHECK(correction_factor(40, 38) == 1.0);
  CHECK(correction_factor(17, 17) == 1.0);
  CHECK_THROWS(correction_factor(0, 38));
  CHECK_THROWS(correction_factor(36, 0));
}

TEST_CASE("no-fading interference sums") {
  const auto env = env_sigma(0.0);
  const InterferenceSetCover empty{CoverLabel::kRandom, env, {}};
  CHECK(interference_no_fading(1.0, empty, 1.0) == 0.0);

  const RadioEnvironment env_eta2{1.0, 2.0, 0.0, 6.0, 18.0};
  const InterferenceSetCover one{CoverLabel::kRandom, env_eta2, {{6.0, 0.0}}};
  CHECK(interference_no_fading(1.0, one, 1.0) ==
        doctest::Approx(0.04).epsilon(1e-12));
  CHECK(interference_no_fading(1.0, one, 1.5) ==
        doctest::Approx(0.06).epsilon(1e-12));

  // Config-1 total checked against the independent enumeration and the
  // frozen regression value.
  const auto c1 = build_config1(env_sigma(2.0));
  const double via_library = interference_no_fading(1.0, c1, 1.0);
  const double via_oracle = lattice_oracle::interference_sum(
      lattice_oracle::config1(6.0, 18.0), 1.0, 2.2);
  CHECK(via_library == doctest::Approx(via_oracle).epsilon(1e-12));
  CHECK(via_library == doctest::Approx(0.2192098630166445).epsilon(1e-12));

  CHECK_THROWS(interference_no_fading(0.0, one, 1.0));
  CHECK_THROWS(interference_no_fading(6.0, one, 1.0));
}

TEST_CASE("interference sampling") {
  SUBCASE("zero fading reproduces the deterministic sum") {
    const auto c1 = build_config1(env_sigma(0.0));
    RngStream rng(3);
    const auto samples = sample_interference(2.0, c1, 1.2, rng, 16);
    const double expected = interference_no_fading(2.0, c1, 1.2);
    for (double s : samples) CHECK(s == expected);
  }
  SUBCASE("log-normal moment at sigma = 2 dB") {
    // E[10^(psi/10)] = exp((sigma ln10 / 10)^2 / 2) = 1.111864
    const auto env = env_sigma(2.0);
    const InterferenceSetCover one{CoverLabel::kRandom, env, {{6.0, 0.0}}};
    RngStream rng(11);
    const auto samples = sample_interference(1.0, one, 1.0, rng, 50000);
    const double base = interference_no_fading(1.0, one, 1.0);
    double mean = 0.0;
    for (double s : samples) mean += s / base;
    mean /= static_cast<double>(samples.size());
    CHECK(mean == doctest::Approx(1.1118640845).epsilon(0.008));
  }
  SUBCASE("multi-node mean scales by the same moment") {
    const auto c1 = build_config1(env_sigma(2.0));
    RngStream rng(211);
    const auto samples = sample_interference(1.0, c1, 1.0, rng, 50000);
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    const double expected =
        1.1118640845 * interference_no_fading(1.0, c1, 1.0);
    CHECK(mean == doctest::Approx(expected).epsilon(0.01));
  }
}

TEST_CASE("worst-case SIR sampling protocol") {
  const auto env0 = env_sigma(0.0);
  const std::vector<InterferenceSetCover> pair{build_config1(env0),
                                               build_config2(env0)};
  SUBCASE("zero fading keeps the pairwise minimum") {
    RngStream rng(1);
    const auto dist = sample_sir(1.0, pair, 1.0, rng, 64);
    const double sir1 =
        to_db(mean_power(1.0, env0)) -
        to_db(interference_no_fading(1.0, pair[0], 1.0));
    const double sir2 =
        to_db(mean_power(1.0, env0)) -
        to_db(interference_no_fading(1.0, pair[1], 1.0));
    const double expected = std::min(sir1, sir2);
    for (double s : dist.sorted_samples()) {
      CHECK(s == doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("identical covers collapse to the single-cover distribution") {
    const auto env = env_sigma(2.0);
    const std::vector<InterferenceSetCover> twin{build_config1(env),
                                                 build_config1(env)};
    const std::vector<InterferenceSetCover> single{build_config1(env)};
    RngStream a(77), b(77);
    const auto twin_dist = sample_sir(2.0, twin, 1.0, a, 500);
    const auto single_dist = sample_sir(2.0, single, 1.0, b, 500);
    const auto ts = twin_dist.sorted_samples();
    const auto ss = single_dist.sorted_samples();
    REQUIRE(ts.size() == ss.size());
    for (std::size_t i = 0; i < ts.size(); ++i) CHECK(ts[i] == ss[i]);
  }
  SUBCASE("an empty cover alongside a real one changes nothing") {
    const auto env = env_sigma(2.0);
    const std::vector<InterferenceSetCover> with_empty{
        InterferenceSetCover{CoverLabel::kRandom, env, {}},
        build_config1(env)};
    const std::vector<InterferenceSetCover> single{build_config1(env)};
    RngStream a(5), b(5);
    const auto da = sample_sir(2.0, with_empty, 1.0, a, 200);
    const auto db = sample_sir(2.0, single, 1.0, b, 200);
    for (std::size_t i = 0; i < da.sample_count(); ++i) {
      CHECK(da.sorted_samples()[i] == db.sorted_samples()[i]);
    }
  }
  SUBCASE("degenerate cover lists are rejected") {
    RngStream rng(1);
    const std::vector<InterferenceSetCover> none;
    CHECK_THROWS(sample_sir(1.0, none, 1.0, rng, 10));
    const std::vector<InterferenceSetCover> all_empty{
        InterferenceSetCover{CoverLabel::kRandom, env0, {}}};
    CHECK_THROWS(sample_sir(1.0, all_empty, 1.0, rng, 10));
  }
}

TEST_CASE("distance grids") {
  const auto grid = make_grid(1.0, 5.0, 0.1);
  CHECK(grid.size() == 41);
  CHECK(grid.front() == doctest::Approx(1.0));
  CHECK(grid.back() == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(make_grid(1.0, 5.0, 10.0).size() == 1);
  CHECK_THROWS(make_grid(1.0, 5.0, 0.0));
  CHECK_THROWS(make_grid(5.0, 1.0, 0.1));
}

TEST_CASE("scenario covers and correction factors") {
  const auto env = env_sigma(0.0);
  const auto dense = scenario_covers(env, Scenario::dense(), 1.0, {});
  CHECK(dense.covers.size() == 2);
  CHECK(dense.n_max == 36);
  CHECK(dense.zeta == 1.0);
  const auto dense38 = scenario_covers(env, Scenario::dense(), 1.0, 38);
  CHECK(dense38.zeta == doctest::Approx(38.0 / 36.0));

  const auto flow1 = scenario_covers(env, Scenario::flow(1), 1.0, {});
  CHECK(flow1.n_max == 6);
  CHECK(flow1.zeta == 1.0);
  const auto flow4 = scenario_covers(env, Scenario::flow(4), 1.0, {});
  CHECK(flow4.n_max ==
        static_cast<int>(std::max(flow4.covers[0].nodes.size(),
                                  flow4.covers[1].nodes.size())));
}

TEST_CASE("bound curve behaviour") {
  const auto env0 = env_sigma(0.0);
  const auto grid = make_grid(1.0, 5.0, 0.5);
  SUBCASE("grid validation") {
    RngStream rng(3);
    const std::vector<double> bad{1.0, 6.5};
    CHECK_THROWS(bound_curve(env0, Scenario::dense(), bad, rng, 1));
    const std::vector<double> unordered{2.0, 1.0};
    CHECK_THROWS(bound_curve(env0, Scenario::dense(), unordered, rng, 1));
  }
  SUBCASE("deterministic SIR decreases with distance") {
    RngStream rng(3);
    const auto curve = bound_curve(env0, Scenario::dense(), grid, rng, 1);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      CHECK(curve.points[i].sir.mean() < curve.points[i - 1].sir.mean());
    }
  }
  SUBCASE("identical seeds give bit-identical curves") {
    const auto env = env_sigma(2.0);
    RngStream a(99), b(99);
    const auto ca = bound_curve(env, Scenario::dense(), grid, a, 400);
    const auto cb = bound_curve(env, Scenario::dense(), grid, b, 400);
    REQUIRE(ca.points.size() == cb.points.size());
    for (std::size_t i = 0; i < ca.points.size(); ++i) {
      CHECK(ca.points[i].interference_mean == cb.points[i].interference_mean);
      const auto sa = ca.points[i].sir.sorted_samples();
      const auto sb = cb.points[i].sir.sorted_samples();
      REQUIRE(sa.size() == sb.size());
      for (std::size_t j = 0; j < sa.size(); ++j) CHECK(sa[j] == sb[j]);
    }
  }
  SUBCASE("flow bounds dominate the dense bound and saturate") {
    RngStream r1(5), r2(5), r3(5);
    const auto dense = bound_curve(env0, Scenario::dense(), grid, r1, 1);
    const auto flow1 = bound_curve(env0, Scenario::flow(1), grid, r2, 1);
    const auto flow7 = bound_curve(env0, Scenario::flow(7), grid, r3, 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(flow1.points[i].sir.mean() >= dense.points[i].sir.mean());
      CHECK(std::fabs(flow7.points[i].sir.mean() -
                      dense.points[i].sir.mean()) < 1.0);
    }
  }
  SUBCASE("mean SIR differs from the ratio of mean powers under fading") {
    const auto env = env_sigma(2.0);
    RngStream rng(17);
    const auto sc = scenario_covers(env, Scenario::dense(), 1.0, {});
    const auto dist = sample_sir(1.0, sc.covers, sc.zeta, rng, 50000);
    double worst = 0.0;
    for (const auto& cover : sc.covers) {
      worst = std::max(worst, interference_no_fading(1.0, cover, sc.zeta));
    }
    const double ratio_db = to_db(mean_power(1.0, env)) - to_db(worst);
    const double se = dist.std_dev() / std::sqrt(50000.0);
    CHECK(std::fabs(dist.mean() - ratio_db) > 3.0 * se);
  }
}

TEST_CASE("d_max selection") {
  const auto env0 = env_sigma(0.0);
  const auto grid = make_grid(1.0, 5.0, 0.1);
  RngStream rng(3);
  const auto curve = bound_curve(env0, Scenario::dense(), grid, rng, 1);
  SUBCASE("threshold below every sample returns the last grid point") {
    const auto d = select_dmax(curve, -80.0, 0.1);
    REQUIRE(d.has_value());
    CHECK(*d == doctest::Approx(5.0));
  }
  SUBCASE("threshold above every sample is infeasible") {
    CHECK_FALSE(select_dmax(curve, 60.0, 0.1).has_value());
  }
  SUBCASE("gamma domain is enforced") {
    CHECK_THROWS(select_dmax(curve, 0.0, 0.0));
    CHECK_THROWS(select_dmax(curve, 0.0, 0.6));
    CHECK_NOTHROW(select_dmax(curve, 0.0, 0.5));
  }
  SUBCASE("selection is stable across seeds") {
    const auto env = env_sigma(2.0);
    RngStream a(12345), b(987654321);
    const auto ca = bound_curve(env, Scenario::dense(), grid, a, 20000);
    const auto cb = bound_curve(env, Scenario::dense(), grid, b, 20000);
    const auto da = select_dmax(ca, -5.0, 0.1);
    const auto db = select_dmax(cb, -5.0, 0.1);
    REQUIRE(da.has_value());
    REQUIRE(db.has_value());
    CHECK(std::fabs(*da - *db) <= 0.1 + 1e-9);
    CHECK(outage_monotone(ca, -5.0));
  }
}

TEST_CASE("random covers never beat the no-fading bound") {
  const auto env = env_sigma(0.0);
  const auto sc = scenario_covers(env, Scenario::dense(), 1.0, {});
  RngStream rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    RngStream stream = rng.spawn();
    const auto cover = generate_random_cover(
        env,
        dense_candidates(env, 1000.0 / (std::numbers::pi * (324.0 - 36.0)),
                         stream),
        stream);
    for (double d : {1.0, 2.5, 4.0}) {
      double bound = 0.0;
      for (const auto& c : sc.covers) {
        bound = std::max(bound, interference_no_fading(d, c, sc.zeta));
      }
      CHECK(interference_no_fading(d, cover, 1.0) <= bound);
    }
  }
}
