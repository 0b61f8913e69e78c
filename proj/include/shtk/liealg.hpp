#pragma once

// Real matrix Lie algebras inside gl(N, C), presented by an R-basis.
//
// Every realization shipped here is closed under conjugate transpose, so the
// Cartan involution is always theta(X) = -X^*. Complex algebras are carried as
// real Lie algebras whose basis contains both b and i*b; in that case theta is
// the involution of a compact real form and the minimal parabolic computed by
// the restricted-root machinery is a Borel subalgebra.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shtk/cases.hpp"
#include "shtk/exactmath.hpp"

namespace shtk {

enum class Field { Real, Complex };

std::string to_string(Field f);

class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(std::string name, Field field, std::size_t ambient,
                   std::vector<ScalarMatrix> basis);

  const std::string& name() const noexcept { return name_; }
  Field field() const noexcept { return field_; }
  std::size_t ambient_size() const noexcept { return ambient_; }
  /// Real dimension.
  std::size_t dim() const noexcept { return basis_.size(); }
  /// Complex dimension for complex algebras, real dimension otherwise.
  std::size_t natural_dim() const noexcept { return field_ == Field::Complex ? dim() / 2 : dim(); }
  const std::vector<ScalarMatrix>& basis() const noexcept { return basis_; }

  /// Real coordinates of X in the basis, or nullopt when X is outside the span.
  std::optional<RationalVector> try_coordinates(const ScalarMatrix& x) const;
  /// Throws DomainError when X is outside the span.
  RationalVector coordinates(const ScalarMatrix& x) const;
  bool contains(const ScalarMatrix& x) const { return try_coordinates(x).has_value(); }
  ScalarMatrix element(std::span<const Rational> coords) const;

  static ScalarMatrix theta(const ScalarMatrix& x) { return -conjugate_transpose(x); }
  /// Matrix of theta in basis coordinates (columns are images of basis elements).
  RationalMatrix theta_matrix() const;
  /// Matrix of ad(X) = [X, .] in basis coordinates.
  RationalMatrix ad_matrix(const ScalarMatrix& x) const;

  ScalarMatrix zero() const { return ScalarMatrix(ambient_, ambient_); }

 private:
  std::string name_;
  Field field_;
  std::size_t ambient_;
  std::vector<ScalarMatrix> basis_;
  // coordinates are read off a fixed set of independent realified entries
  std::vector<std::size_t> pivot_entries_;
  RationalMatrix pivot_inverse_;
};

/// Results of the structural self-checks on an algebra.
struct AlgebraChecks {
  bool independent = false;
  bool closed = false;
  bool theta_stable = false;
  bool theta_involutive = false;
  bool theta_homomorphism = false;
  bool all() const {
    return independent && closed && theta_stable && theta_involutive && theta_homomorphism;
  }
};

AlgebraChecks check_algebra(const MatrixLieAlgebra& l);
/// Throws InternalError naming the first failed check.
void validate_algebra(const MatrixLieAlgebra& l);

// ---------------------------------------------------------------------------
// classical families

enum class Family {
  GlR,
  SlR,
  So,      // so(p,q)
  Su,      // su(p,q)
  U,       // u(p,q)
  SpR,     // sp(n,R)
  SlC,
  GlC,
  SoC,
  SpC,
  SpPQ,    // sp(p,q), quaternionic unitary
  SuStar,  // su*(2n)
  SoStar,  // so*(2n)
  AbelianR,
};

/// A family together with its parameters; for one-parameter families `a` is n
/// (for su*(2n)/so*(2n) it is n, not 2n) and `b` is unused.
struct AlgebraName {
  Family family = Family::SlR;
  int a = 0;
  int b = 0;
  friend bool operator==(const AlgebraName&, const AlgebraName&) = default;
};

/// Parses "sl(3,R)", "so(3,1)", "su*(4)", "sp(2,1)", "R", ...; exceptional
/// names raise DomainError("no matrix model available ...").
AlgebraName parse_algebra_name(std::string_view text);
std::string to_string(const AlgebraName& n);
Field field_of(Family f);
bool is_compact(const AlgebraName& n);
/// Simple (non-abelian, no centre, irreducible root system over C for the
/// complex families and over R otherwise).
bool is_simple(const AlgebraName& n);
/// Real dimension from the closed-form formula.
std::size_t dimension_formula(const AlgebraName& n);

MatrixLieAlgebra construct_classical(const AlgebraName& n);
MatrixLieAlgebra construct_classical(Family f, int a, int b = 0);

/// Zero-dimensional algebra in the given ambient size.
MatrixLieAlgebra zero_algebra(std::size_t ambient, Field field = Field::Real);

MatrixLieAlgebra direct_sum(const MatrixLieAlgebra& a, const MatrixLieAlgebra& b);

/// Fixed points of a real-linear involution sigma of L (sigma must commute with theta).
MatrixLieAlgebra fixed_subalgebra(const MatrixLieAlgebra& l,
                                  const std::function<ScalarMatrix(const ScalarMatrix&)>& sigma,
                                  std::string name);

/// Fixed points of X -> S X S^{-1} for S with S^2 = +-1.
MatrixLieAlgebra centralizer_of_involution(const MatrixLieAlgebra& l, const ScalarMatrix& s,
                                           std::string name);

/// True when the real span of the basis is closed under multiplication by i.
bool is_complex_subspace(const std::vector<ScalarMatrix>& basis);
/// True when l meets i*l, so l + i*l is not a complexification inside gl(N, C).
bool needs_scalar_restriction(const MatrixLieAlgebra& l);

/// Complexification g (x)_R C of g viewed as a real Lie algebra. When g has a
/// complex-linear part it is first moved to X -> diag(X, conj X) in gl(2N, C),
/// so a complex g yields g + conj(g).
MatrixLieAlgebra complexify(const MatrixLieAlgebra& l);

// ---------------------------------------------------------------------------
// embeddings

/// big contains small; both share the ambient size and the Cartan involution.
class ReductiveEmbedding {
 public:
  ReductiveEmbedding(MatrixLieAlgebra big, MatrixLieAlgebra small, std::string label = {});

  const MatrixLieAlgebra& big() const noexcept { return big_; }
  const MatrixLieAlgebra& small() const noexcept { return small_; }
  const std::string& label() const noexcept { return label_; }
  /// Images of the small basis (already ambient matrices).
  const std::vector<ScalarMatrix>& inclusion() const noexcept { return small_.basis(); }

 private:
  MatrixLieAlgebra big_;
  MatrixLieAlgebra small_;
  std::string label_;
};

/// a -> a + a, X -> (X, X).
ReductiveEmbedding diagonal_embedding(const MatrixLieAlgebra& a);
/// a -> a + a + a, X -> (X, X, X).
ReductiveEmbedding triple_diagonal_embedding(const MatrixLieAlgebra& a);
/// Block-diagonal sum of embeddings.
ReductiveEmbedding direct_sum(const ReductiveEmbedding& a, const ReductiveEmbedding& b);
ReductiveEmbedding complexify(const ReductiveEmbedding& e);

/// Matrix realization of a table case. Throws DomainError for cases without a
/// matrix model (E4, H5) and for parameters violating the side conditions.
ReductiveEmbedding standard_embedding(const CaseSummand& c);

// ---------------------------------------------------------------------------

/// ad(X) in the basis of L; throws DomainError when X is outside L.
RationalMatrix ad_action(const MatrixLieAlgebra& l, const ScalarMatrix& x);

/// exp of a nilpotent matrix (finite sum); throws DomainError if X is not nilpotent.
ScalarMatrix exp_nilpotent(const ScalarMatrix& x);

/// g X g^{-1} given both g and its inverse.
ScalarMatrix conjugate(const ScalarMatrix& g, const ScalarMatrix& x, const ScalarMatrix& g_inv);

}  // namespace shtk
