#include <doctest.h>

#include <cmath>
#include <random>

#include "binform/families.hpp"
#include "binform/forms.hpp"
#include "binform/parse.hpp"
#include "support.hpp"

using namespace binform;

namespace {

std::vector<Rational> Q(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* s : xs) out.emplace_back(s);
  return out;
}

}  // namespace

TEST_SUITE("forms") {
  TEST_CASE("construction rejects degenerate input") {
    CHECK_THROWS_AS(BinaryForm::exact({Rational(1)}), Error);
    CHECK_THROWS_AS(BinaryForm::integer({0, 0, 0}), Error);
    const auto f = BinaryForm::integer({0, 1, -1, 0});
    CHECK(f.degree() == 3);
    CHECK(f.is_exact());
    CHECK(f.has_integer_coeffs());
    CHECK_FALSE(BinaryForm::exact(Q({"1/2", "0", "1"})).has_integer_coeffs());
    CHECK_FALSE(BinaryForm::complex({{1, 1}, {0, 0}, {1, 0}}).is_real());
  }

  TEST_CASE("homogeneous evaluation") {
    const auto f = BinaryForm::integer({1, 0, 0, -2});  // X^3 - 2Y^3
    CHECK(eval_form(f, Rational(3), Rational(2)) == 27 - 16);
    CHECK(eval_form(f, Rational(1, 2), Rational(-1)) == Rational(1, 8) + 2);
    const Complex v = eval_form(f, Complex(0.5), Complex(-1.0));
    CHECK(v.real() == doctest::Approx(2.125));
  }

  TEST_CASE("transform expands F(aX+bY, cX+dY)") {
    const auto f = BinaryForm::integer({1, 0, 0, 1});  // X^3 + Y^3
    const auto g = transform(f, LinearMap::integer(1, 1, 0, 1));
    // (X + Y)^3 + Y^3
    CHECK(g == BinaryForm::integer({1, 3, 3, 2}));
    const auto swap = transform(BinaryForm::integer({1, 2, 3}), LinearMap::integer(0, 1, 1, 0));
    CHECK(swap == BinaryForm::integer({3, 2, 1}));
    CHECK_THROWS_AS(transform(f, LinearMap::integer(1, 2, 2, 4)), Error);
  }

  TEST_CASE("transform composes as the matrix product") {
    const auto f = BinaryForm::integer({2, -1, 0, 3, 1});
    const auto s = LinearMap::integer(1, 2, 0, 1);
    const auto t = LinearMap::integer(1, 0, 3, 1);
    // s and t do not commute, so the order is actually exercised.
    CHECK_FALSE(compose(s, t).exact_entries() == compose(t, s).exact_entries());
    CHECK(transform(transform(f, s), t) == transform(f, compose(s, t)));
  }

  TEST_CASE("composition law on random maps") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
      const auto f = testing::random_integer_form(rng, 3 + trial % 4);
      const auto s = testing::random_integer_map(rng);
      const auto t = testing::random_integer_map(rng);
      CHECK(transform(transform(f, s), t) == transform(f, compose(s, t)));
    }
  }

  TEST_CASE("map predicates") {
    CHECK(LinearMap::integer(2, 1, 1, 1).in_gl2z());
    CHECK_FALSE(LinearMap::integer(2, 0, 0, 1).in_gl2z());
    CHECK(LinearMap::integer(2, 0, 0, 1).in_gl2r());
    CHECK_FALSE(LinearMap(1.0, 2.0, 0.5, 1.0).in_gl2r());
    CHECK(LinearMap::exact(Rational(1, 2), 0, 0, 4).exact_det() == 2);
  }

  TEST_CASE("double entries are exact binary fractions") {
    const LinearMap t(0.1, 0.0, 0.0, 1.0);
    REQUIRE(t.is_exact());
    CHECK(t.exact_entries()[0] == Rational(3602879701896397, mpz_class(1) << 55));
    CHECK(transform(BinaryForm::integer({1, 0}), t).is_exact());
    CHECK_FALSE(LinearMap(NAN, 0.0, 0.0, 1.0).is_exact());
  }

  TEST_CASE("floating transform agrees with exact transform") {
    const auto f = BinaryForm::integer({1, -3, 0, 5});
    const auto exact = transform(f, LinearMap::integer(2, -1, 1, 3));
    const auto approx = transform(BinaryForm::real({1, -3, 0, 5}), LinearMap(2.0, -1.0, 1.0, 3.0));
    const auto a = exact.complex_coeffs();
    const auto b = approx.complex_coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12 * std::abs(a[0]) + 1e-12);
  }

  TEST_CASE("scaled forms") {
    const auto f = BinaryForm::integer({1, 2, 3});
    CHECK(f.scaled(Rational(-2)) == BinaryForm::integer({-2, -4, -6}));
  }
}

TEST_SUITE("families") {
  TEST_CASE("P_k coefficients") {
    CHECK(make_pk(1) == BinaryForm::integer({2, -2, 1}));
    CHECK(make_pk(2) == BinaryForm::integer({5, -12, 13, -6, 1}));
    CHECK(make_pk(3) == BinaryForm::integer({37, -132, 193, -144, 58, -12, 1}));
    CHECK_THROWS_AS(make_pk(0), Error);
  }

  TEST_CASE("P_k takes the value 1 at (1, j)") {
    for (int k = 1; k <= 7; ++k) {
      const auto p = make_pk(k);
      CHECK(p.degree() == 2 * k);
      for (int j = 1; j <= k; ++j) CHECK(eval_form(p, Rational(1), Rational(j)) == 1);
    }
  }

  TEST_CASE("F_n* coefficients") {
    CHECK(make_fstar(3) == BinaryForm::exact(Q({"0", "3/4", "0", "-1/4"})));
    CHECK(make_fstar(4) == BinaryForm::exact(Q({"0", "1/2", "0", "-1/2", "0"})));
    CHECK_THROWS_AS(make_fstar(2), Error);
  }

  TEST_CASE("F_n* matches the trigonometric product") {
    for (int n = 3; n <= 10; ++n) {
      std::vector<double> prod{1.0};
      for (int k = 1; k <= n; ++k) {
        const double s = std::sin(k * M_PI / n), c = std::cos(k * M_PI / n);
        std::vector<double> next(prod.size() + 1, 0.0);
        for (std::size_t i = 0; i < prod.size(); ++i) {
          next[i] += prod[i] * s;
          next[i + 1] -= prod[i] * c;
        }
        prod = next;
      }
      const auto exact = make_fstar(n).complex_coeffs();
      for (int j = 0; j <= n; ++j) CHECK(std::abs(exact[j].real() - prod[j]) < 1e-14);
    }
  }
}

TEST_SUITE("parse") {
  TEST_CASE("expressions") {
    CHECK(parse_form("X*Y*(X-Y)") == BinaryForm::integer({0, 1, -1, 0}));
    CHECK(parse_form("XY(X-Y)") == BinaryForm::integer({0, 1, -1, 0}));
    CHECK(parse_form("2xy(x - y)") == BinaryForm::integer({0, 2, -2, 0}));
    CHECK(parse_form("X^2 - Y^2") == BinaryForm::integer({1, 0, -1}));
    CHECK(parse_form("X^3 + X*Y^2") == BinaryForm::integer({1, 0, 1, 0}));
    CHECK(parse_form("-(X - 2Y)^2 Y") == BinaryForm::integer({0, -1, 4, -4}));
    CHECK(parse_form("(X+Y)^3/2") == BinaryForm::exact(Q({"1/2", "3/2", "3/2", "1/2"})));
    CHECK(parse_form("0.5X^3 + 1e-1 Y^3") == BinaryForm::exact(Q({"1/2", "0", "0", "1/10"})));
  }

  TEST_CASE("coefficient lists") {
    CHECK(parse_form("[1,0,1,0]") == BinaryForm::integer({1, 0, 1, 0}));
    CHECK(parse_form("[ 0, 3/4, 0, -1/4 ]") == make_fstar(3));
    CHECK(parse_form("[0, 0, 1]") == BinaryForm::integer({0, 0, 1}));
    CHECK(parse_form("[-2.5e1, +1]") == BinaryForm::integer({-25, 1}));
  }

  TEST_CASE("shorthands") {
    CHECK(parse_form("P(3)") == make_pk(3));
    CHECK(parse_form("FSTAR(5)") == make_fstar(5));
    CHECK(parse_form("fstar(4)") == make_fstar(4));
    CHECK(parse_form("2 P(1)") == make_pk(1).scaled(Rational(2)));
  }

  TEST_CASE("errors carry ParseError") {
    for (const char* bad : {"", "X^2 + Y", "X/Y", "[1]", "X^3 +", "Z^2", "(X+Y", "[1, 2", "P(0)",
                            "FSTAR(2)", "X^-2", "3", "X/0", "1e"}) {
      CAPTURE(bad);
      try {
        parse_form(bad);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
      }
    }
  }

  TEST_CASE("format round trip") {
    for (const char* text : {"XY(X-Y)", "[1/3, -2, 0, 7/5]", "P(4)", "FSTAR(6)", "[0.125, 3, 0.1]"}) {
      const auto f = parse_form(text);
      CHECK(parse_form(format_form(f)) == f);
    }
    CHECK(format_form(parse_form("[0.1, 1]")) == "[1/10, 1]");
    CHECK(format_form(BinaryForm::real({0.75, -0.25})) == "[0.75, -0.25]");
  }

  TEST_CASE("floating forms round trip to 1e-12") {
    const auto f = BinaryForm::real({0.1, 1.0 / 3.0, -2.718281828459045, 1e-7});
    const auto g = parse_form(format_form(f));
    const auto a = f.complex_coeffs(), b = g.complex_coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12 * std::abs(a[i]));
  }
}
