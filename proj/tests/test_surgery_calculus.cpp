#include <catch_amalgamated.hpp>

#include "knotd/surgery_calculus.hpp"
#include "oracles.hpp"

using namespace knotd;

TEST_CASE("slam-dunk") {
  CHECK(slam_dunk(3, Slope::integer(2)).str() == "5/2");
  CHECK(slam_dunk(0, Slope::reduce(-1, 2)).str() == "2/1");
  CHECK_THROWS_AS(slam_dunk(-2, Slope::reduce(0, 1)), DomainError);
  CHECK_THROWS_AS(slam_dunk(1, Slope::infinity()), DomainError);
}

TEST_CASE("slam-dunk inverse recovers r") {
  for (int n = -4; n <= 4; ++n)
    for (int p = -9; p <= 9; ++p)
      for (int q = 1; q <= 5; ++q) {
        if (p == 0) continue;
        const Slope r = Slope::reduce(p, q);
        const Slope out = slam_dunk(n, r);
        if (out.is_infinite()) continue;
        CHECK(slam_dunk_inverse(n, out) == r);
      }
}

TEST_CASE("slap-shot") {
  CHECK(slap_shot(0, Slope::integer(1), 1).str() == "1/2");
  CHECK(slap_shot(0, Slope::reduce(7, 3), 0).str() == "7/3");
  CHECK(slap_shot(-1, Slope::reduce(3, 2), 2).str() == "-5/8");
  CHECK_THROWS_AS(slap_shot(0, Slope::integer(1), -1), DomainError);
}

TEST_CASE("slap-shot keeps the numerator and shifts q by q'p") {
  for (int p = 1; p <= 15; ++p)
    for (int q = 1; q <= 4; ++q)
      for (int qp = 0; qp <= 3; ++qp) {
        const Slope pq = Slope::reduce(p, q);
        if (pq.p() != p) continue;
        const Slope out = slap_shot(0, pq, qp);
        CHECK(out.p() == p);
        CHECK(mod_floor(out.q(), p) == mod_floor(q, p));
      }
}

TEST_CASE("chain determinants") {
  auto cert = [](const Slope& s) { return chain_certificate(chain_for_slope(s)); };
  const auto a = cert(Slope::reduce(5, 2));
  CHECK(a.det_a == 5);
  CHECK(a.det_b == 2);
  const auto b = cert(Slope::integer(7));
  CHECK(b.det_a == 7);
  CHECK(b.det_b == 1);
  const auto c = cert(Slope::reduce(7, 3));
  CHECK(c.det_a == 7);
  CHECK(c.det_b == 3);
  CHECK(c.matrix == IntMatrix{{3, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  CHECK_THROWS_AS(chain_linking_matrix(ChainDiagram{}), DomainError);
}

TEST_CASE("|det A| = a and |det B| = b for every positive slope") {
  for (int a = 1; a <= 40; ++a)
    for (int b = 1; b <= 9; ++b) {
      const Slope s = Slope::reduce(a, b);
      if (s.p() != a) continue;
      const auto cert = chain_certificate(chain_for_slope(s));
      CHECK(cert.abs_det_a() == a);
      CHECK(cert.abs_det_b() == b);
      CHECK(cert.det_a == oracle::cofactor_det(cert.matrix));
    }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  const IntMatrix m{{0, 2, -1, 3}, {1, 0, 4, 2}, {5, -2, 0, 1}, {2, 2, 1, 0}};
  CHECK(determinant(m) == oracle::cofactor_det(m));
  CHECK(determinant({}) == 1);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(determinant({{1, 2}}), DomainError);
}

TEST_CASE("negative definiteness") {
  CHECK(is_negative_definite({{-1, 0}, {0, -1}}));
  CHECK_FALSE(is_negative_definite({{1}}));
  CHECK(is_negative_definite({{-3, -1}, {-1, -2}}));
  CHECK(is_negative_definite({{-3, 1}, {1, -2}}));
  CHECK_FALSE(is_negative_definite({{0, 1}, {1, -2}}));
  CHECK_THROWS_AS(is_negative_definite({{-1, 1}, {0, -1}}), DomainError);
}

TEST_CASE("crossing cobordism determinant") {
  CHECK(crossing_cobordism_det(Slope::integer(1), CrossingSign::Negative) == -5);
  CHECK(crossing_cobordism_det(Slope::reduce(3, 2), CrossingSign::Negative) == -11);
  CHECK(crossing_cobordism_det(Slope::integer(-4), CrossingSign::Negative) == 0);
  CHECK_THROWS_AS(crossing_cobordism_det(Slope::infinity(), CrossingSign::Negative), DomainError);
  // -a - 4b for r = a/b > 0; (-1)^k b (r + 4) for r < 0 with k the chain length
  for (int a = 1; a <= 25; ++a)
    for (int b = 1; b <= 6; ++b) {
      const Slope r = Slope::reduce(a, b);
      if (r.p() != a) continue;
      CHECK(crossing_cobordism_det(r, CrossingSign::Negative) == Rational(-a - 4 * b));
      const Slope neg = Slope::reduce(-a, b);
      const auto k = neg_continued_fraction(r).size();
      const Rational expected = Rational(b) * (neg.value() + 4) * (k % 2 == 0 ? 1 : -1);
      CHECK(crossing_cobordism_det(neg, CrossingSign::Negative) == expected);
    }
}

TEST_CASE("positive crossing leaves the chain determinant times -1") {
  CHECK(crossing_cobordism_det(Slope::reduce(5, 2), CrossingSign::Positive) == -5);
  CHECK(crossing_cobordism_det(Slope::integer(-3), CrossingSign::Positive) == 3);
}

TEST_CASE("generator self-intersection") {
  CHECK(generator_self_intersection(Slope::integer(1)) == -5);
  CHECK(generator_self_intersection(Slope::integer(-4)) == 0);
  CHECK(generator_self_intersection(Slope::reduce(8, 3)) == Rational(-5, 2));
  CHECK_THROWS_AS(generator_self_intersection(Slope::reduce(0, 1)), DomainError);
  for (int p = -60; p <= 60; ++p)
    for (int q = 1; q <= 6; ++q) {
      if (p == 0) continue;
      const Slope r = Slope::reduce(p, q);
      const bool outside = r.value() < -4 || r.value() > 0;
      CHECK((generator_self_intersection(r) < 0) == outside);
    }
}

TEST_CASE("branched double covers") {
  const KnotExpr k = parse_knot_expr("T(2,5)");
  const auto p = branched_double_cover(KnotExpr::cable(-1, k));
  CHECK(p.slope == Slope::integer(-2));
  CHECK(p.knot == KnotExpr::sum(k, KnotExpr::reverse(k)));
  CHECK(p.str() == "S^3_{-2/1}(T(2,5) # rev(T(2,5)))");

  const auto w = branched_double_cover(parse_knot_expr("wh+(T(2,3))"));
  CHECK(w.slope == Slope::reduce(1, 2));
  CHECK(w.knot.str() == "T(2,3) # rev(T(2,3))");

  CHECK(branched_double_cover(parse_knot_expr("rev(wh+(U))")).knot.str() == "U # rev(U)");

  try {
    branched_double_cover(parse_knot_expr("P[0](U)"));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("0-surgery out of scope") != std::string::npos);
  }
  try {
    branched_double_cover(parse_knot_expr("T(2,3)"));
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("no surgery presentation implemented") != std::string::npos);
  }
}
