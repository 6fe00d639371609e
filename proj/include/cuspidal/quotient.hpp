#pragma once

#include <memory>

#include "cuspidal/groebner.hpp"
#include "cuspidal/matrix.hpp"

namespace cuspidal {

// Exactly symmetric rational matrix (Gram matrix of a quadratic form).
class SymmetricForm {
 public:
  explicit SymmetricForm(RationalMatrix m);

  std::size_t dimension() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }

 private:
  RationalMatrix m_;
};

struct SignatureRank {
  long signature = 0;  // #positive - #negative eigenvalues
  long rank = 0;
};

// Exact signature and rank of a symmetric rational matrix: characteristic
// polynomial by division-free Berkowitz, then Descartes sign-variation
// counts (exact because the spectrum is all-real); the multiplicity of the
// zero eigenvalue is the number of trailing zero coefficients.
SignatureRank signature_and_rank(const SymmetricForm& q);

// The finite-dimensional algebra R[x]/J presented by a reduced Groebner
// basis and its standard monomial basis. Immutable after construction; the
// structure table and trace vector are built eagerly.
class QuotientAlgebra {
 public:
  // Throws ErrorCode::infinite_dimensional when dim R[x]/J is infinite.
  static QuotientAlgebra build(GroebnerBasis gb);
  ~QuotientAlgebra();
  QuotientAlgebra(QuotientAlgebra&&) noexcept;
  QuotientAlgebra& operator=(QuotientAlgebra&&) noexcept;

  std::size_t dimension() const;
  const StandardMonomialBasis& basis() const;
  const GroebnerBasis& gb() const;

  // D x D matrix of a -> g*a in the standard basis (column j is the image of
  // the j-th basis monomial).
  RationalMatrix multiplication_matrix(const Polynomial& g) const;

  // Trace of the multiplication-by-g endomorphism.
  Rational trace(const Polynomial& g) const;

  // Gram matrix of the quadratic form a -> trace(delta * a^2), entries
  // trace(delta * b_i * b_j).
  SymmetricForm theta_matrix(const Polynomial& delta) const;

 private:
  struct Impl;
  explicit QuotientAlgebra(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace cuspidal
