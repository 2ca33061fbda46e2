#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ebmin/placement.hpp"
#include "ebmin/rng.hpp"
#include "oracles.hpp"

using namespace ebmin;
using oracle::good_cells;

TEST_CASE("dense good placement on a one-cell network") {
    Network net;
    net.area_side = 1.0;
    net.nodes = {{0.0, 0.0}, {0.4, 0.4}};
    // count 2 against bounds [0.5, 2.5)
    CHECK(check_dense_good(net, 1.0, 0.5));
}

TEST_CASE("an empty cell breaks dense goodness when the floor is positive") {
    Network net;
    net.area_side = 2.0;
    net.nodes = {{0.0, 0.0}, {1.5, 1.5}, {1.2, 1.7}, {0.2, 1.8}, {1.9, 0.1}};
    // mean per cell = 4/4 = 1, floor (1-delta) > 0, but cell (1,0) holds 2 and (0,0) holds 1...
    const CellGrid grid = cell_grid(net, 1.0);
    REQUIRE(grid.min_count() == 1); // no empty cell in this layout; tighten delta instead
    CHECK(check_dense_good(net, 1.0, 0.99));

    Network empty;
    empty.area_side = 2.0;
    empty.nodes = {{0.0, 0.0}, {0.2, 0.1}, {0.3, 0.8}, {1.5, 1.5}};
    // cell (1,0) and (0,1) are empty, floor = (1-0.5)*3/4 > 0
    CHECK_FALSE(check_dense_good(empty, 1.0, 0.5));
}

TEST_CASE("dense goodness is monotone in delta") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const Network net = generate_dense(60, 4.0, rng.next());
        bool prev = check_dense_good(net, 1.0, 0.1);
        for (double delta : {0.3, 0.5, 0.7, 0.9}) {
            const bool now = check_dense_good(net, 1.0, delta);
            if (prev) CHECK(now);
            prev = now;
        }
    }
}

TEST_CASE("dense good bound, worked point") {
    const double b = dense_good_bound(101, 25.0, 1.0, 0.5);
    CHECK(b == doctest::Approx(50.0 * std::exp(-0.25)).epsilon(1e-12));
    CHECK(b == doctest::Approx(38.94).epsilon(1e-3)); // vacuous bounds come back as-is
}

TEST_CASE("dense good bound decreases in occupancy and along the area rule") {
    CHECK(dense_good_bound(201, 25.0, 1.0, 0.5) < dense_good_bound(101, 25.0, 1.0, 0.5));
    auto rule_bound = [](double k) {
        const double area = k / std::pow(std::log(k), 2.0);
        return dense_good_bound(static_cast<int>(k), area, 1.0, 0.5);
    };
    CHECK(rule_bound(1e8) < rule_bound(1e6));
    CHECK(rule_bound(1e6) < rule_bound(1e4));
    CHECK(rule_bound(1e8) < 1e-3);
}

TEST_CASE("good cells of a regular-style placement") {
    const Network net = generate_regular({4, 1.0, 0.0, PlacementPolicy::center}, 1);
    // every node sits at its cell center; the origin cell is excluded
    CHECK(count_good_cells(net, 1.0, 0.5) == 3);
    CHECK(good_cells(net, 1.0, 0.5) == 3);
}

TEST_CASE("good cells when everyone crowds one cell") {
    Network net;
    net.area_side = 2.0;
    net.nodes = {{0.0, 0.0}, {1.5, 1.5}, {1.52, 1.48}, {1.45, 1.55}};
    CHECK(count_good_cells(net, 1.0, 1.0) == 0);
    CHECK(good_cells(net, 1.0, 1.0) == 0);

    Network one;
    one.area_side = 2.0;
    one.nodes = {{0.0, 0.0}, {1.5, 1.5}, {0.2, 0.2}, {0.3, 0.3}};
    CHECK(count_good_cells(one, 1.0, 1.0) == 1);
    CHECK(good_cells(one, 1.0, 1.0) == 1);
}

TEST_CASE("good-cell count matches the enumeration oracle on random networks") {
    SplitMix64 rng(555);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 2 + static_cast<int>(rng.next() % 4); // k = 4..25
        const int k = dim * dim;
        const double lambda = 0.25 + 3.0 * rng.uniform01();
        const Network net = generate_extended(k, lambda, rng.next());
        const double beta = rng.uniform01();
        CHECK(count_good_cells(net, lambda, beta) == good_cells(net, lambda, beta));
    }
}

TEST_CASE("expected good cells, closed points") {
    CHECK(expected_good_cells(2, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(expected_good_cells(10, 0.0) == 0.0);
    // naive evaluation agrees with the log-domain path while it cannot overflow
    for (int k : {2, 5, 10, 25, 50}) {
        for (double beta : {0.2, 1.0}) {
            const double naive = beta * beta *
                                 std::pow(static_cast<double>(k - 1), static_cast<double>(k)) /
                                 std::pow(static_cast<double>(k), static_cast<double>(k - 1));
            CHECK(expected_good_cells(k, beta) == doctest::Approx(naive).epsilon(1e-9));
        }
    }
}

TEST_CASE("expected good cells, asymptotic form at k = 10^4") {
    const int k = 10000;
    const double beta = 1.0 / 3.0;
    const double asym = beta * beta * (k - 1) / std::numbers::e * (1.0 + 1.0 / (2.0 * k));
    CHECK(std::abs(expected_good_cells(k, beta) / asym - 1.0) < 1e-3);
}

TEST_CASE("expected good cells matches the Monte Carlo mean") {
    const int k = 100;
    const double beta = 1.0 / 3.0;
    const long trials = 20000;
    double sum = 0.0, sumsq = 0.0;
    for (long t = 0; t < trials; ++t) {
        const Network net = generate_extended(k, 1.0, trial_seed(2026, t));
        const double c = count_good_cells(net, 1.0, beta);
        sum += c;
        sumsq += c * c;
    }
    const double mean = sum / trials;
    const double sd = std::sqrt((sumsq / trials - mean * mean) / (trials - 1));
    CHECK(std::abs(mean - expected_good_cells(k, beta)) <= 3.0 * sd);
}

TEST_CASE("extended good bound, worked point and overflow safety") {
    CHECK(extended_good_bound(2, 1.0, 1.0) == doctest::Approx(2.0 * std::exp(-0.125)).epsilon(1e-12));
    CHECK(extended_good_bound(2, 1.0, 1.0) == doctest::Approx(1.765).epsilon(1e-3));
    for (int k : {2, 10, 25, 50}) {
        const double naive =
            2.0 * std::exp(-0.5 * 0.25 * std::pow(1.0 / 3.0, 4.0) *
                           std::pow(static_cast<double>(k - 1), 2.0 * k - 1.0) /
                           std::pow(static_cast<double>(k), 2.0 * k - 2.0));
        CHECK(extended_good_bound(k, 1.0 / 3.0, 0.5) == doctest::Approx(naive).epsilon(1e-9));
    }
    // far beyond the naive overflow point the bound stays finite and <= 2
    const double big = extended_good_bound(100000, 1.0, 0.5);
    CHECK(std::isfinite(big));
    CHECK(big <= 2.0);
    CHECK(extended_good_bound(50, 0.5, 0.5) <= 2.0);
}

TEST_CASE("extended goodness event threshold") {
    const Network net = generate_regular({100, 1.0, 0.0, PlacementPolicy::center}, 1);
    // all cells singly occupied at their centers: k1 = 99 >= any fraction of E[f]
    CHECK(check_extended_good(net, 1.0, 0.5, 0.5));
    Network crowd;
    crowd.area_side = 10.0;
    crowd.nodes.assign(100, {0.2, 0.2});
    crowd.nodes[0] = {0.0, 0.0};
    // no good cell at all
    CHECK_FALSE(check_extended_good(crowd, 1.0, 0.5, 0.5));
}

TEST_CASE("no-empty-cell check") {
    CHECK(check_no_empty_cell(generate_regular({16, 1.0, 0.0, PlacementPolicy::center}, 1), 1.0));
    Network net;
    net.area_side = 2.0;
    net.nodes = {{0.0, 0.0}, {0.5, 0.5}};
    CHECK_FALSE(check_no_empty_cell(net, 1.0));
}

TEST_CASE("empty-cell union bound, formula points") {
    CHECK(empty_cell_union_bound(2, 4.0, std::sqrt(2.0)) == doctest::Approx(0.5).epsilon(1e-12));
    auto rule_bound = [](double k) {
        const double sk = std::sqrt(2.1 * std::log(k));
        return empty_cell_union_bound(static_cast<int>(k), k, sk);
    };
    CHECK(rule_bound(1e5) < rule_bound(1e3));
    CHECK(rule_bound(1e5) < 1e-3);
    CHECK_THROWS_AS(empty_cell_union_bound(10, 4.0, 3.0), std::invalid_argument);
}

TEST_CASE("empty-cell union bound dominates the exact probability on a 2x2 grid") {
    // k - 1 free nodes over 4 cells; inclusion-exclusion over the 3 non-origin
    // cells gives the exact P[some cell empty]
    const int k = 6;
    const double exact = 3.0 * std::pow(0.75, k - 1) - 3.0 * std::pow(0.5, k - 1) +
                         std::pow(0.25, k - 1);
    const double bound = empty_cell_union_bound(k, 4.0, 1.0);
    CHECK(bound >= exact);

    EventSpec event{PlacementEvent::no_empty_cell, 1.0, 0.0, 0.0};
    GeneratorSpec gen{NetworkClass::dense, k, 4.0, 0.0};
    const McResult mc = mc_estimate(event, gen, 20000, 99);
    CHECK(std::abs(mc.frequency - exact) <= 3.0 * std::max(mc.standard_error, 1e-4));
    CHECK(mc.analytic_bound == doctest::Approx(bound));
}

TEST_CASE("mc_estimate basics") {
    EventSpec event{PlacementEvent::dense_good, 1.0, 0.0, 0.5};
    GeneratorSpec gen{NetworkClass::dense, 50, 4.0, 0.0};
    const McResult one = mc_estimate(event, gen, 1, 7);
    CHECK((one.frequency == 0.0 || one.frequency == 1.0));
    const McResult a = mc_estimate(event, gen, 500, 11);
    const McResult b = mc_estimate(event, gen, 500, 11);
    CHECK(a.failures == b.failures);
    CHECK(a.frequency == b.frequency);
    CHECK(a.analytic_bound == doctest::Approx(dense_good_bound(50, 4.0, 1.0, 0.5)));
    CHECK_THROWS_AS(mc_estimate(event, gen, 0, 1), std::invalid_argument);
}

TEST_CASE("dense good bound dominates the observed failure rate where it bites") {
    EventSpec event{PlacementEvent::dense_good, 1.0, 0.0, 0.4};
    GeneratorSpec gen{NetworkClass::dense, 200, 4.0, 0.0};
    const McResult mc = mc_estimate(event, gen, 1000, 31);
    CHECK(mc.analytic_bound < 1.0);
    CHECK(mc.frequency <= mc.analytic_bound + 3.0 * mc.standard_error);
}
