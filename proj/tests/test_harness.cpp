#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "invsq/harness.hpp"

using namespace invsq;
namespace hn = invsq::harness;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
    return v;
}

}  // namespace

TEST_CASE("compare_spectra on a converged configuration") {
    const PotentialSpec spec{50.0, 0.1};
    const auto report = hn::compare_spectra(spec, 3, 400);
    REQUIRE(report.pairs.size() == 3);
    for (const auto& p : report.pairs) {
        CHECK_FALSE(p.wall_affected);
        CHECK(p.rel_diff < 2e-3);
        CHECK(p.rel_diff ==
              std::fabs(p.rho_eps_sq_analytic - p.rho_eps_sq_matrix) /
                  std::max(std::fabs(p.rho_eps_sq_analytic), std::fabs(p.rho_eps_sq_matrix)));
    }
    // Config echo carries the actual knobs used.
    CHECK(report.config.rho0_sq == 50.0);
    CHECK(report.config.eps_over_a == 0.1);
    CHECK(report.config.n_max == 400);
    CHECK(report.config.n_states == 3);
}

TEST_CASE("compare_spectra flags wall-affected states") {
    // A coarse cutoff in a narrow box: the surviving bound state is flagged.
    const auto report = hn::compare_spectra(PotentialSpec{2.0, 0.2}, 2, 200);
    REQUIRE(!report.pairs.empty());
    CHECK(report.pairs.front().wall_affected);

    // Weaker strength in the same box: the matrix route loses the state to
    // the wall entirely, leaving nothing to pair.
    const auto lost = hn::compare_spectra(PotentialSpec{1.0, 0.2}, 2, 200);
    CHECK(lost.pairs.empty());
}

TEST_CASE("compare_spectra surfaces solver preconditions with context") {
    CHECK_THROWS_WITH_AS(hn::compare_spectra(PotentialSpec{0.0, 0.01}, 2, 100),
                         doctest::Contains("below critical strength"), std::runtime_error);
}

TEST_CASE("compare_spectra is deterministic") {
    const PotentialSpec spec{50.0, 0.1};
    const auto a = hn::compare_spectra(spec, 2, 200);
    const auto b = hn::compare_spectra(spec, 2, 200);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].rho_eps_sq_analytic == b.pairs[i].rho_eps_sq_analytic);
        CHECK(a.pairs[i].rho_eps_sq_matrix == b.pairs[i].rho_eps_sq_matrix);
    }
}

TEST_CASE("collapse metric") {
    const PotentialSpec spec{50.0, 0.01};
    const auto grid = linspace(0.0, 8.0, 201);

    SUBCASE("identical cutoffs give zero pairwise deviation") {
        const std::vector<double> eps{0.01, 0.01};
        const auto rep = hn::collapse_metric(spec, eps, grid, 400);
        CHECK(rep.max_pairwise_dev == 0.0);
        CHECK(rep.max_dev_vs_analytic < 0.02);
        REQUIRE(rep.curves.size() == 2);
        CHECK(rep.curves[0] == rep.curves[1]);
    }
    SUBCASE("distinct cutoffs collapse onto the universal curve") {
        const std::vector<double> eps{0.02, 0.01};
        const auto rep = hn::collapse_metric(spec, eps, grid, 600);
        CHECK(rep.max_pairwise_dev < 0.01);
        CHECK(rep.max_dev_vs_analytic < 0.02);
    }
    SUBCASE("needs at least two cutoffs") {
        const std::vector<double> eps{0.01};
        CHECK_THROWS_AS(hn::collapse_metric(spec, eps, grid, 400), std::invalid_argument);
    }
    SUBCASE("wall-contaminated ground state is refused with a diagnostic") {
        const std::vector<double> eps{0.2, 0.1};
        const auto short_grid = linspace(0.0, 4.0, 81);
        CHECK_THROWS_WITH_AS(
            hn::collapse_metric(PotentialSpec{2.0, 0.2}, eps, short_grid, 200),
            doctest::Contains("wall"), std::runtime_error);
    }
    SUBCASE("grid beyond the well is rejected") {
        const std::vector<double> eps{0.2, 0.1};
        const auto wide = linspace(0.0, 20.0, 41);
        CHECK_THROWS_AS(hn::collapse_metric(PotentialSpec{50.0, 0.2}, eps, wide, 150),
                        std::invalid_argument);
    }
}

TEST_CASE("ladder check") {
    SUBCASE("strength 50: deviations shrink monotonically") {
        const auto rep = hn::ladder_check(PotentialSpec{50.0, 0.001}, 1, 5);
        REQUIRE(rep.rows.size() == 4);
        CHECK_FALSE(rep.truncated);
        const double asym = std::exp(-2.0 * std::numbers::pi / std::sqrt(49.75));
        double prev = 1e9;
        for (const auto& row : rep.rows) {
            CHECK(row.asymptotic_ratio == doctest::Approx(asym).epsilon(1e-14));
            CHECK(row.deviation ==
                  doctest::Approx(std::fabs(row.ratio - asym) / asym).epsilon(1e-12));
            if (row.n >= 2) CHECK(row.deviation < prev);
            prev = row.deviation;
        }
        // Frozen: the last tracked deviation (states 4 and 5) is ~4.7%.
        CHECK(rep.rows.back().deviation == doctest::Approx(0.046942).epsilon(1e-3));
    }
    SUBCASE("minimal range yields one row") {
        const auto rep = hn::ladder_check(PotentialSpec{50.0, 0.001}, 1, 2);
        CHECK(rep.rows.size() == 1);
        CHECK(rep.rows.front().n == 1);
    }
    SUBCASE("tiny g: the ladder is immediately geometric and truncates") {
        const auto rep = hn::ladder_check(PotentialSpec{0.26, 0.01}, 1, 15);
        CHECK(rep.truncated);
        CHECK(rep.rows.size() < 14);
        REQUIRE(!rep.rows.empty());
        // e^{-2 pi/0.1} ~ 5.16e-28; at this strength every state is deep in
        // the log-periodic regime so the first ratio is already exact.
        CHECK(rep.rows.front().deviation < 1e-6);
    }
    SUBCASE("range validation") {
        CHECK_THROWS_AS(hn::ladder_check(PotentialSpec{50.0, 0.001}, 2, 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(hn::ladder_check(PotentialSpec{50.0, 0.001}, 0, 3),
                        std::invalid_argument);
    }
}
