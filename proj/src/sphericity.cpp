#include "shtk/sphericity.hpp"

namespace shtk {

void OrbitCheckConfig::validate() const {
  if (samples < 1) throw DomainError("samples must be at least 1");
  if (bound < 1) throw DomainError("bound must be at least 1");
}

namespace {

ScalarMatrix combination(const std::vector<ScalarMatrix>& basis, const std::vector<long>& c, std::size_t n) {
  ScalarMatrix x(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) x += basis[k] * Scalar(c[k]);
  return x;
}

std::vector<long> draw(std::mt19937_64& rng, std::size_t count, int bound) {
  std::vector<long> out(count);
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  for (auto& x : out) x = static_cast<long>(rng() % width) - bound;
  return out;
}

void check_ad_preserves(const MatrixLieAlgebra& l, const ScalarMatrix& g, const ScalarMatrix& g_inv) {
  if (!(g * g_inv == ScalarMatrix::identity(l.ambient_size())))
    throw DomainError("supplied inverse does not invert g");
  for (const auto& b : l.basis())
    if (!l.contains(g * b * g_inv)) throw DomainError("Ad(g) does not preserve " + l.name());
}

// Second stream for the Borel fallback, kept separate so both are prefix-closed.
constexpr std::uint64_t kFallbackSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

BigCellElement big_cell_element(const MatrixLieAlgebra& l, const RestrictedRootDatum& d,
                                const std::vector<long>& ybar, const std::vector<long>& y) {
  if (ybar.size() != d.nbar_basis.size() || y.size() != d.n_basis.size())
    throw DomainError("big_cell_element: coordinate count does not match n / nbar");
  const std::size_t n = l.ambient_size();
  const ScalarMatrix yb = combination(d.nbar_basis, ybar, n);
  const ScalarMatrix yy = combination(d.n_basis, y, n);
  BigCellElement out;
  out.g = exp_nilpotent(yb) * exp_nilpotent(yy);
  out.g_inv = exp_nilpotent(-yy) * exp_nilpotent(-yb);
  out.ybar = ybar;
  out.y = y;
  try {
    check_ad_preserves(l, out.g, out.g_inv);
  } catch (const DomainError& e) {
    throw InternalError(std::string("inconsistent root datum: ") + e.what());
  }
  return out;
}

BigCellElement big_cell_element(const MatrixLieAlgebra& l, const RestrictedRootDatum& d,
                                std::mt19937_64& rng, int bound) {
  auto yb = draw(rng, d.nbar_basis.size(), bound);
  auto y = draw(rng, d.n_basis.size(), bound);
  return big_cell_element(l, d, yb, y);
}

OrbitProblem::OrbitProblem(ReductiveEmbedding e)
    : e_(std::move(e)), big_(restricted_roots(e_.big())), small_(restricted_roots(e_.small())) {
  p_big_ = minimal_parabolic(big_);
  p_small_ = minimal_parabolic(small_);
}

std::size_t OrbitProblem::codim(const ScalarMatrix& g, const ScalarMatrix& g_inv, bool swapped) const {
  const auto& fixed = swapped ? p_small_ : p_big_;
  const auto& moved = swapped ? p_big_ : p_small_;
  std::vector<ScalarMatrix> all = fixed;
  all.reserve(fixed.size() + moved.size());
  for (const auto& x : moved) all.push_back(g * x * g_inv);
  const std::size_t dim_g = e_.big().dim();
  if (all.empty()) return dim_g;
  const std::size_t span = real_span_dim(all);
  if (span > dim_g) throw InternalError("parabolic sum exceeds dim g");
  return dim_g - span;
}

std::size_t orbit_codim(const ReductiveEmbedding& e, const ScalarMatrix& g, const ScalarMatrix& g_inv) {
  check_ad_preserves(e.big(), g, g_inv);
  return OrbitProblem(e).codim(g, g_inv);
}

namespace {

OrbitVerdict run(const OrbitProblem& prob, const OrbitCheckConfig& cfg, bool swapped, bool fallback) {
  cfg.validate();
  OrbitVerdict v;
  v.seed = cfg.seed;
  v.swapped = swapped;
  v.dim_g = prob.embedding().big().dim();
  v.dim_p = prob.p_big().size();
  v.dim_p_prime = prob.p_small().size();
  v.deterministic = prob.dimension_obstructed();
  v.best_codim = v.dim_g + 1;

  const auto& big = prob.embedding().big();
  std::mt19937_64 rng(cfg.seed);
  auto consider = [&](const ScalarMatrix& g, const ScalarMatrix& g_inv) {
    ++v.samples;
    const std::size_t c = prob.codim(g, g_inv, swapped);
    if (c < v.best_codim) {
      v.best_codim = c;
      v.witness = g;
    }
    return c == 0;
  };
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    auto cell = big_cell_element(big, prob.big_datum(), rng, cfg.bound);
    if (consider(cell.g, cell.g_inv)) break;
  }
  if (fallback && v.best_codim != 0) {
    // g exp(ybar2): moves the second Borel once more off the big cell
    std::mt19937_64 rng1(cfg.seed);
    std::mt19937_64 rng2(cfg.seed ^ kFallbackSalt);
    for (std::size_t s = 0; s < cfg.samples; ++s) {
      auto cell = big_cell_element(big, prob.big_datum(), rng1, cfg.bound);
      auto yb = draw(rng2, prob.big_datum().nbar_basis.size(), cfg.bound);
      auto extra = big_cell_element(big, prob.big_datum(), yb, std::vector<long>(prob.big_datum().n_basis.size(), 0));
      if (consider(cell.g * extra.g, extra.g_inv * cell.g_inv)) break;
    }
  }
  v.holds = v.best_codim == 0;
  return v;
}

}  // namespace

OrbitVerdict check_pp(const OrbitProblem& prob, const OrbitCheckConfig& cfg, bool swapped) {
  return run(prob, cfg, swapped, false);
}

OrbitVerdict check_pp(const ReductiveEmbedding& e, const OrbitCheckConfig& cfg, bool swapped) {
  cfg.validate();
  return check_pp(OrbitProblem(e), cfg, swapped);
}

bool is_complex_pair(const ReductiveEmbedding& e) {
  return e.big().field() == Field::Complex && (e.small().dim() == 0 || e.small().field() == Field::Complex);
}

OrbitVerdict check_bb(const OrbitProblem& prob, const OrbitCheckConfig& cfg) {
  const auto& e = prob.embedding();
  if (!is_complex_pair(e))
    throw DomainError("check_bb needs a complex pair (" + e.label() + " is real): complexify first");
  return run(prob, cfg, false, true);
}

OrbitVerdict check_bb(const ReductiveEmbedding& e, const OrbitCheckConfig& cfg) {
  cfg.validate();
  if (!is_complex_pair(e))
    throw DomainError("check_bb needs a complex pair (" + e.label() + " is real): complexify first");
  return check_bb(OrbitProblem(e), cfg);
}

OrbitVerdict check_triple(const MatrixLieAlgebra& l, const OrbitCheckConfig& cfg) {
  return check_pp(diagonal_embedding(l), cfg);
}

}  // namespace shtk
