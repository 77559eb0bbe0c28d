#pragma once

#include <cstddef>
#include <vector>

#include "folcan/rational.hpp"

namespace folcan {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalVector apply(const RationalVector& x) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A symmetric bilinear form on Q^n. Symmetry is checked on construction.
class SymmetricPairing {
 public:
  SymmetricPairing() = default;
  explicit SymmetricPairing(RationalMatrix gram);
  static SymmetricPairing from_rows(const std::vector<std::vector<Rational>>& rows);
  static SymmetricPairing diagonal(const std::vector<Rational>& diag);

  std::size_t dimension() const noexcept { return gram_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }
  const RationalMatrix& gram() const noexcept { return gram_; }

  /// x . y under the form.
  Rational pair(const RationalVector& x, const RationalVector& y) const;
  Rational square(const RationalVector& x) const { return pair(x, x); }

  /// Restriction to the coordinate subspace spanned by `indices`.
  SymmetricPairing restrict_to(const std::vector<std::size_t>& indices) const;

  /// The form P^T A P.
  SymmetricPairing congruent(const RationalMatrix& p) const;

  friend bool operator==(const SymmetricPairing&, const SymmetricPairing&) = default;

 private:
  RationalMatrix gram_;
};

struct Inertia {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Unique solution of A x = b by exact Gaussian elimination with row
/// exchanges. Throws SingularMatrix when no nonzero pivot exists.
RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b);
RationalVector solve_linear(const SymmetricPairing& a, const RationalVector& b);

Rational determinant(const RationalMatrix& a);

/// Inertia by exact symmetric (congruence) reduction.
Inertia signature(const SymmetricPairing& a);

bool is_negative_definite(const SymmetricPairing& a);

struct HodgeVerdict {
  bool hypothesis_met = false;
  bool inequality_holds = false;
  bool equality = false;
};

/// Hodge index check: if (a1 D1 + a2 D2)^2 > 0 then D1^2 D2^2 <= (D1.D2)^2.
/// `inequality_holds` and `equality` are only meaningful when the hypothesis
/// is met; otherwise they are left false.
HodgeVerdict hodge_check(const SymmetricPairing& form, const RationalVector& d1,
                         const RationalVector& d2, const Rational& a1, const Rational& a2);

}  // namespace folcan
