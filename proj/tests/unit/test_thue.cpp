#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "binform/area.hpp"
#include "binform/families.hpp"
#include "binform/parse.hpp"
#include "binform/thue.hpp"
#include "support.hpp"

using namespace binform;

TEST_SUITE("thue") {
  TEST_CASE("minimum on the circle") {
    CHECK(min_on_circle(parse_form("X^2+Y^2")) == doctest::Approx(1.0));
    CHECK(min_on_circle(parse_form("X^4+Y^4")) == doctest::Approx(0.5).epsilon(1e-12));
    // Numerically awkward: P_7 dips along the narrow spikes near (1, j).
    const double m7 = min_on_circle(make_pk(7));
    CHECK(m7 > 0.0);
    for (int j = 1; j <= 7; ++j) {
      const double r = std::hypot(1.0, j);
      CHECK(m7 <= 1.0 / std::pow(r, 14) * (1 + 1e-9));
    }
  }

  TEST_CASE("definiteness") {
    CHECK(is_definite(make_pk(3)));
    CHECK(is_definite(parse_form("X^2+Y^2")));
    CHECK_FALSE(is_definite(parse_form("X^2-Y^2")));
    CHECK_FALSE(is_definite(parse_form("X^3+Y^3")));
    CHECK_THROWS_AS(count_definite(parse_form("XY(X-Y)"), 1), Error);
    CHECK_THROWS_AS(count_definite(parse_form("[1/2, 0, 1]"), 1), Error);
  }

  TEST_CASE("P_k solutions at h = 1") {
    for (int k = 2; k <= 7; ++k) {
      const auto c = count_definite(make_pk(k), 1);
      const std::set<std::array<long, 2>> pts(c.points.begin(), c.points.end());
      for (long j = 1; j <= k; ++j) {
        CHECK(pts.count({1, j}) == 1);
        CHECK(pts.count({-1, -j}) == 1);
      }
      CHECK(c.count >= 2 * k);
    }
  }

  TEST_CASE("definite count agrees with brute force") {
    for (int k = 1; k <= 3; ++k)
      for (long h : {0L, 1L, 5L, 25L, 100L}) {
        CAPTURE(k);
        CAPTURE(h);
        CHECK(count_definite(make_pk(k), h).count == testing::brute_count(make_pk(k), h, 16));
      }
    const auto q = parse_form("3X^4 - X^3Y + 2X^2Y^2 + 5Y^4");
    CHECK(count_definite(q, 40).count == testing::brute_count(q, 40, 12));
  }

  TEST_CASE("box count agrees with brute force on random forms") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = testing::random_integer_form(rng, 3 + trial % 4, 6);
      const long h = 1 + trial * 7;
      CHECK(count_box(f, h, 15).count == testing::brute_count(f, h, 15));
    }
  }

  TEST_CASE("box count handles flat columns and tangencies") {
    // Y^3 - X^2 Y has whole columns and lines of solutions.
    for (const char* text : {"XY(X-Y)", "X^3 - 2Y^3", "Y^3 - X^2 Y", "(X-Y)(X-2Y)(X-3Y)(X+Y)"}) {
      const auto f = parse_form(text);
      for (long h : {0L, 1L, 6L, 30L}) {
        CAPTURE(text);
        CAPTURE(h);
        CHECK(count_box(f, h, 25).count == testing::brute_count(f, h, 25));
      }
    }
  }

  TEST_CASE("counts are monotone in h and symmetric") {
    const auto f = make_pk(2);
    long prev = 0;
    for (long h = 0; h <= 64; ++h) {
      const auto c = count_definite(f, h);
      CHECK(c.count >= prev);
      prev = c.count;
      // Even degree: (x, y) and (-x, -y) are both solutions.
      const std::set<std::array<long, 2>> pts(c.points.begin(), c.points.end());
      for (const auto& p : pts) CHECK(pts.count({-p[0], -p[1]}) == 1);
    }
    const auto g = parse_form("X^3 - 2Y^3");
    long prev_box = 0;
    for (long h = 0; h <= 64; h += 4) {
      const long c = count_box(g, h, 20).count;
      CHECK(c >= prev_box);
      prev_box = c;
    }
  }

  TEST_CASE("count results do not depend on the thread count") {
    const auto f = parse_form("X^3 - 5XY^2 + 2Y^3");
    setenv("THUE_AREA_THREADS", "1", 1);
    const long one = count_box(f, 50, 200).count;
    setenv("THUE_AREA_THREADS", "7", 1);
    const long seven = count_box(f, 50, 200).count;
    unsetenv("THUE_AREA_THREADS");
    CHECK(one == seven);
  }

  TEST_CASE("Mahler table") {
    const long hs[] = {1, 2, 4, 8, 16, 32, 64, 128, 256};
    const auto t = mahler_table(make_pk(2), hs, CountStrategy::DefiniteExact);
    REQUIRE(t.rows.size() == 9);
    CHECK(t.area == doctest::Approx(3.88710547980954).epsilon(1e-10));
    CHECK(t.caveat.empty());
    for (const auto& r : t.rows) {
      CHECK(r.area_term == doctest::Approx(t.area * std::pow(r.h, 0.5)));
      CHECK(r.scaled_error == doctest::Approx(std::abs(r.n_count - r.area_term) / std::pow(r.h, 1.0 / 3.0)));
      CHECK(r.scaled_error <= t.empirical_c);
    }
    CHECK(t.rows[0].n_count == 7);

    const long box_hs[] = {1, 10};
    const auto b = mahler_table(parse_form("X^3-2Y^3"), box_hs, CountStrategy::BoxRestricted, 30);
    CHECK_FALSE(b.caveat.empty());
    CHECK(b.box == 30);
    CHECK_THROWS_AS(mahler_table(make_pk(2), std::vector<long>{0}, CountStrategy::DefiniteExact), Error);
  }
}
