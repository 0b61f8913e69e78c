#include <doctest.h>

#include "shtk/sphericity.hpp"

using namespace shtk;

namespace {

MatrixLieAlgebra alg(const char* name) { return construct_classical(parse_algebra_name(name)); }

ScalarMatrix diag(const std::vector<int>& d) {
  ScalarMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

ReductiveEmbedding split_sp(int n, Family f) {
  auto big = construct_classical(f, n + 1);
  std::vector<int> s0(static_cast<std::size_t>(n + 1), 1);
  s0.back() = -1;
  std::vector<int> s = s0;
  s.insert(s.end(), s0.begin(), s0.end());
  auto small = centralizer_of_involution(big, diag(s), "sp(n)+sp(1)");
  return ReductiveEmbedding(big, small);
}

const OrbitCheckConfig kCfg{};

}  // namespace

TEST_CASE("orbit codimension for G = G'") {
  auto sl2 = alg("sl(2,R)");
  ReductiveEmbedding same(sl2, sl2);
  const auto id = ScalarMatrix::identity(2);
  CHECK(orbit_codim(same, id, id) == 1);
  OrbitProblem prob(same);
  auto g = big_cell_element(sl2, prob.big_datum(), {1}, {1});
  CHECK(orbit_codim(same, g.g, g.g_inv) == 0);
  auto in_p = big_cell_element(sl2, prob.big_datum(), {0}, {3});
  CHECK(orbit_codim(same, in_p.g, in_p.g_inv) == 1);
  CHECK_THROWS_AS(orbit_codim(same, g.g, id), DomainError);
}

TEST_CASE("big cell element example") {
  auto sl2 = alg("sl(2,R)");
  auto d = restricted_roots(sl2);
  auto zero = big_cell_element(sl2, d, {0}, {0});
  CHECK(zero.g == ScalarMatrix::identity(2));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 5; ++k) {
    auto c = big_cell_element(sl2, d, rng, 3);
    CHECK(c.g * c.g_inv == ScalarMatrix::identity(2));
    // Ad(g) Ad(g^-1) = identity on coordinates
    for (const auto& b : sl2.basis()) CHECK(c.g * (c.g_inv * b * c.g) * c.g_inv == b);
  }
}

TEST_CASE("check_pp on the documented examples") {
  auto f5 = standard_embedding({CaseTag::F5, 2, 1});
  auto v = check_pp(f5, kCfg);
  CHECK(v.holds);
  CHECK(v.best_codim == 0);
  CHECK_FALSE(v.deterministic);

  auto sp = check_pp(split_sp(2, Family::SpR), kCfg);
  CHECK_FALSE(sp.holds);
  CHECK(sp.deterministic);
  CHECK(sp.dim_p + sp.dim_p_prime == 20);
  CHECK(sp.dim_g == 21);

  auto t = check_triple(alg("sl(3,R)"), kCfg);
  CHECK_FALSE(t.holds);
  CHECK(t.deterministic);
  CHECK(t.best_codim >= 1);
  CHECK(check_triple(alg("so(2,1)"), kCfg).holds);
  CHECK(check_triple(alg("so(4,1)"), kCfg).holds);
}

TEST_CASE("check_bb on the documented examples") {
  // sl(2,C) > gl(1,C)
  auto sl2c = alg("sl(2,C)");
  auto gl1 = centralizer_of_involution(sl2c, diag({1, -1}), "gl(1,C)");
  auto v = check_bb(ReductiveEmbedding(sl2c, gl1), kCfg);
  CHECK(v.holds);
  auto sp = check_bb(split_sp(2, Family::SpC), kCfg);
  CHECK_FALSE(sp.holds);
  CHECK(sp.deterministic);
  CHECK(check_bb(standard_embedding({CaseTag::F2, {}, {}, 3}), kCfg).holds);
  CHECK_THROWS_AS(check_bb(standard_embedding({CaseTag::F5, 2, 1}), kCfg), DomainError);
}

TEST_CASE("verdict properties") {
  for (const auto& e : {standard_embedding({CaseTag::F5, 1, 1}), standard_embedding({CaseTag::F4, 1, 1}),
                        standard_embedding({CaseTag::E2, 1, 1}), standard_embedding({CaseTag::H1, {}, {}, 1})}) {
    CAPTURE(e.label());
    OrbitProblem prob(e);
    auto v = check_pp(prob, kCfg);
    REQUIRE(v.holds);
    // witness reproduces codimension 0
    ScalarMatrix w = v.witness;
    std::mt19937_64 rng(kCfg.seed);
    // recompute the inverse by replaying the stream
    bool reproduced = false;
    for (std::size_t s = 0; s < v.samples; ++s) {
      auto c = big_cell_element(e.big(), prob.big_datum(), rng, kCfg.bound);
      if (c.g == w) reproduced = prob.codim(c.g, c.g_inv) == 0;
    }
    CHECK(reproduced);
    // swapping the roles gives the same verdict
    CHECK(check_pp(prob, kCfg, true).holds);
  }
  // G = G' always holds
  for (const char* n : {"sl(2,R)", "sl(3,R)", "so(3,1)", "su(2,1)", "sp(2,R)"}) {
    auto l = alg(n);
    CHECK(check_pp(ReductiveEmbedding(l, l), kCfg).holds);
  }
}

TEST_CASE("best_codim is non-increasing in the sample count") {
  auto e = ReductiveEmbedding(alg("su(2,2)"), fixed_subalgebra(alg("su(2,2)"), [](const ScalarMatrix& x) {
    ScalarMatrix c(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) c(i, j) = x(i, j).conj();
    return c;
  }, "so(2,2)"));
  OrbitProblem prob(e);
  std::size_t prev = prob.embedding().big().dim() + 1;
  for (std::size_t s = 1; s <= 6; ++s) {
    auto v = check_pp(prob, {s, 2, 7});
    CHECK(v.best_codim <= prev);
    prev = v.best_codim;
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(check_pp(standard_embedding({CaseTag::F5, 1, 1}), {0, 5, 0}), DomainError);
  CHECK_THROWS_AS(check_pp(standard_embedding({CaseTag::F5, 1, 1}), {5, 0, 0}), DomainError);
}
