#include <doctest.h>

#include "shtk/liealg.hpp"

using namespace shtk;

namespace {

ScalarMatrix e(std::size_t n, std::size_t r, std::size_t c) {
  ScalarMatrix m(n, n);
  m(r, c) = 1;
  return m;
}

std::size_t dim_of(const char* name) { return construct_classical(parse_algebra_name(name)).dim(); }

}  // namespace

TEST_CASE("algebra names round trip") {
  for (const char* s : {"sl(3,R)", "gl(2,R)", "so(3,1)", "so(4)", "su(2,1)", "u(1,1)", "sp(2,R)",
                        "sl(2,C)", "gl(1,C)", "so(3,C)", "sp(1,C)", "sp(1,1)", "sp(2)", "su*(4)",
                        "so*(6)", "R"})
    CHECK(to_string(parse_algebra_name(s)) == s);
  CHECK(parse_algebra_name("o(2,1)") == parse_algebra_name("so(2,1)"));
  CHECK(parse_algebra_name(" sl( 2 , R ) ") == parse_algebra_name("sl(2,R)"));
  CHECK_THROWS_AS(parse_algebra_name("e6(-26)"), DomainError);
  CHECK_THROWS_AS(parse_algebra_name("g2"), DomainError);
  CHECK_THROWS_AS(parse_algebra_name("foo(2)"), DomainError);
  CHECK_THROWS_AS(parse_algebra_name("su*(3)"), DomainError);
  CHECK_THROWS_AS(parse_algebra_name("sl(1,R)"), DomainError);
}

TEST_CASE("constructor dimensions") {
  CHECK(dim_of("sl(2,R)") == 3);
  CHECK(dim_of("so(3,1)") == 6);
  CHECK(dim_of("su(2,1)") == 8);
  CHECK(dim_of("sp(2,1)") == 21);
  CHECK(dim_of("su*(4)") == 15);
  CHECK(dim_of("so*(6)") == 15);
  CHECK(dim_of("sl(2,C)") == 6);
  CHECK(construct_classical(parse_algebra_name("sl(3,C)")).natural_dim() == 8);
}

TEST_CASE("closed-form dimensions and structural invariants for small families") {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q) {
      if (p + q < 1) continue;
      for (Family f : {Family::So, Family::Su, Family::U, Family::SpPQ}) {
        if (f == Family::SpPQ && p + q > 3) continue;
        auto l = construct_classical(f, p, q);
        CAPTURE(l.name());
        CHECK(l.dim() == dimension_formula({f, p, q}));
        CHECK(check_algebra(l).all());
      }
    }
  const auto N = [](int p, int q) { return static_cast<std::size_t>(p + q); };
  CHECK(construct_classical(Family::So, 3, 2).dim() == N(3, 2) * (N(3, 2) - 1) / 2);
  CHECK(construct_classical(Family::Su, 2, 2).dim() == N(2, 2) * N(2, 2) - 1);
  for (int n = 1; n <= 3; ++n) {
    auto l = construct_classical(Family::SpR, n);
    CHECK(l.dim() == static_cast<std::size_t>(n * (2 * n + 1)));
    CHECK(check_algebra(l).all());
  }
  for (Family f : {Family::SlR, Family::GlR, Family::SlC, Family::GlC, Family::SoC, Family::SpC,
                   Family::SuStar, Family::SoStar})
    for (int n = 1; n <= 3; ++n) {
      if ((f == Family::SlR || f == Family::SlC) && n < 2) continue;
      AlgebraName name{f, n, 0};
      auto l = construct_classical(name);
      CAPTURE(l.name());
      CHECK(l.dim() == dimension_formula(name));
      CHECK(check_algebra(l).all());
    }
}

TEST_CASE("coordinates") {
  auto l = construct_classical(Family::SlR, 2);
  const ScalarMatrix h = e(2, 0, 0) - e(2, 1, 1);
  auto c = l.coordinates(h);
  CHECK(l.element(c) == h);
  CHECK_FALSE(l.contains(e(2, 0, 0)));
  CHECK_THROWS_AS(l.coordinates(e(2, 0, 0)), DomainError);
}

TEST_CASE("ad_action") {
  auto l = construct_classical(Family::SlR, 2);
  const ScalarMatrix h = e(2, 0, 0) - e(2, 1, 1);
  auto ad = ad_action(l, h);
  // eigenvalues 2, 0, -2: on E12, H, E21
  auto e12 = l.coordinates(e(2, 0, 1));
  RationalMatrix v(3, 1, e12);
  CHECK(ad * v == v * Rational(2));
  Rational tr = 0;
  for (std::size_t i = 0; i < 3; ++i) tr += ad(i, i);
  CHECK(tr == 0);
  CHECK(ad_action(l, l.zero()).is_zero());
  CHECK_THROWS_AS(ad_action(l, e(2, 0, 0)), DomainError);
  auto su = construct_classical(Family::Su, 2, 1);
  for (const auto& b : su.basis()) {
    auto a = ad_action(su, b);
    Rational t = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    CHECK(t == 0);
  }
}

TEST_CASE("direct sums and diagonal embeddings") {
  auto sl2 = construct_classical(Family::SlR, 2);
  CHECK(direct_sum(sl2, sl2).dim() == 6);
  CHECK(direct_sum(construct_classical(Family::So, 2, 1), construct_classical(Family::AbelianR, 1)).dim() == 4);
  auto so31 = construct_classical(Family::So, 3, 1);
  CHECK(direct_sum(so31, so31).dim() == 12);
  CHECK(direct_sum(sl2, construct_classical(Family::SlC, 2)).field() == Field::Real);

  auto d = diagonal_embedding(sl2);
  CHECK(d.big().dim() == 6);
  CHECK(d.small().dim() == 3);
  const ScalarMatrix x = e(2, 0, 1);
  ScalarMatrix xx(4, 4);
  xx(0, 1) = 1;
  xx(2, 3) = 1;
  CHECK(d.small().contains(xx));
  CHECK_FALSE(d.small().contains(e(4, 0, 1)));
  (void)x;
  auto d41 = diagonal_embedding(construct_classical(Family::So, 4, 1));
  CHECK(d41.big().dim() == 20);
  CHECK(d41.small().dim() == 10);
  auto t = triple_diagonal_embedding(sl2);
  CHECK(t.big().dim() == 9);
  CHECK(t.small().dim() == 3);
}

TEST_CASE("standard embeddings of table cases") {
  auto check = [](CaseSummand c, std::size_t big, std::size_t small) {
    auto emb = standard_embedding(c);
    CAPTURE(to_string(c));
    CHECK(emb.big().dim() == big);
    CHECK(emb.small().dim() == small);
    CHECK(check_algebra(emb.small()).all());
    CHECK(check_algebra(emb.big()).all());
  };
  check({CaseTag::F5, 2, 1}, 6, 3);
  check({CaseTag::F3, {}, {}, 2}, 8, 4);
  check({CaseTag::F1, {}, {}, 2}, 16, 8);
  check({CaseTag::F2, {}, {}, 3}, 12, 6);
  check({CaseTag::F4, 1, 1}, 8, 4);
  check({CaseTag::E1, 1, 1}, 3, 1);
  check({CaseTag::E1, 2, 1}, 6, 2);
  check({CaseTag::E2, 1, 1}, 8, 4);
  check({CaseTag::E2, 0, 1}, 3, 3);
  check({CaseTag::E3, 0, 1}, 10, 10);
  check({CaseTag::E3, 1, 0}, 10, 6);
  check({CaseTag::H1, {}, {}, 1}, 6, 4);
  check({CaseTag::H2, {}, {}, 1}, 15, 7);
  check({CaseTag::H3, {}, {}, 1}, 6, 2);
  check({CaseTag::H4, 0, 1}, 10, 6);
  check({CaseTag::H4, 1, 1}, 21, 13);
  check({CaseTag::G2, {}, {}, 2}, 6, 3);
  check({CaseTag::B}, 1, 0);
  check({CaseTag::A, {}, {}, {}, "sl(2,R)"}, 3, 3);
  check({CaseTag::C, {}, {}, {}, "so(3)"}, 3, 1);
  check({CaseTag::C, {}, {}, {}, "su(3)"}, 8, 4);
  check({CaseTag::C, {}, {}, {}, "sp(2)"}, 10, 6);
  check({CaseTag::D, {}, {}, {}, "so(3,1)"}, 6, 3);
  check({CaseTag::D, {}, {}, {}, "su(2,1)"}, 8, 4);
  check({CaseTag::G1, {}, {}, {}, "su(2)"}, 6, 3);
  CHECK_THROWS_AS(standard_embedding({CaseTag::E4}), DomainError);
  CHECK_THROWS_AS(standard_embedding({CaseTag::H5}), DomainError);
  CHECK_THROWS_AS(standard_embedding({CaseTag::F5, 1, 0}), DomainError);
  CHECK_THROWS_AS(standard_embedding({CaseTag::D, {}, {}, {}, "so(3)"}), DomainError);
}

TEST_CASE("complexification") {
  auto l = complexify(construct_classical(Family::SlR, 2));
  CHECK(l.field() == Field::Complex);
  CHECK(l.dim() == 6);
  CHECK(check_algebra(l).all());
  auto emb = complexify(standard_embedding({CaseTag::F5, 2, 1}));
  CHECK(emb.big().natural_dim() == 6);
  CHECK(emb.small().natural_dim() == 3);

  // a complex algebra complexifies to two copies of itself
  auto ll = complexify(l);
  CHECK(ll.ambient_size() == 4);
  CHECK(ll.dim() == 12);
  CHECK(check_algebra(ll).all());
  CHECK(is_complex_subspace(ll.basis()));
  auto d = complexify(standard_embedding({CaseTag::D, {}, {}, {}, "sl(3,C)"}));
  CHECK(d.big().natural_dim() == 16);
  CHECK(d.small().natural_dim() == 8);
}

TEST_CASE("field of fixed-point subalgebras") {
  auto k = standard_embedding({CaseTag::D, {}, {}, {}, "sl(3,C)"}).small();
  CHECK(k.field() == Field::Real);
  CHECK_FALSE(is_complex_subspace(k.basis()));
  auto f = standard_embedding({CaseTag::F2, {}, {}, 3}).small();
  CHECK(f.field() == Field::Complex);
  auto mixed = direct_sum(construct_classical(Family::SlC, 2), construct_classical(Family::SlR, 2));
  CHECK(mixed.field() == Field::Real);
}

TEST_CASE("exp of nilpotent matrices") {
  ScalarMatrix y = e(2, 0, 1);
  ScalarMatrix yb = e(2, 1, 0);
  CHECK(exp_nilpotent(ScalarMatrix(2, 2)) == ScalarMatrix::identity(2));
  ScalarMatrix g = exp_nilpotent(yb) * exp_nilpotent(y);
  CHECK(g == ScalarMatrix(2, 2, {1, 1, 1, 2}));
  CHECK(exp_nilpotent(y) * exp_nilpotent(-y) == ScalarMatrix::identity(2));
  ScalarMatrix n3(3, 3);
  n3(0, 1) = 2;
  n3(1, 2) = 3;
  ScalarMatrix ex = exp_nilpotent(n3);
  CHECK(ex(0, 2) == Scalar(3));
  CHECK_THROWS_AS(exp_nilpotent(ScalarMatrix::identity(2)), DomainError);
}
