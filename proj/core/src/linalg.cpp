#include "folcan/linalg.hpp"

#include <string>
#include <utility>

#include "folcan/error.hpp"

namespace folcan {

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch, what,
                std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same(rows[r].size(), cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  require_same(x.size(), cols_, "matrix-vector dimension mismatch");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero() && !x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
    }
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same(a.cols(), b.rows(), "matrix product dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

SymmetricPairing::SymmetricPairing(RationalMatrix gram) : gram_(std::move(gram)) {
  require_same(gram_.rows(), gram_.cols(), "pairing matrix is not square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j) {
      if (gram_(i, j) != gram_(j, i)) {
        throw Error(ErrorCode::InvalidInput, "pairing matrix is not symmetric",
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
}

SymmetricPairing SymmetricPairing::from_rows(const std::vector<std::vector<Rational>>& rows) {
  return SymmetricPairing(RationalMatrix::from_rows(rows));
}

SymmetricPairing SymmetricPairing::diagonal(const std::vector<Rational>& diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return SymmetricPairing(std::move(m));
}

Rational SymmetricPairing::pair(const RationalVector& x, const RationalVector& y) const {
  require_same(x.size(), dimension(), "class length does not match pairing dimension");
  require_same(y.size(), dimension(), "class length does not match pairing dimension");
  Rational sum;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dimension(); ++j) {
      if (y[j].is_zero() || gram_(i, j).is_zero()) continue;
      sum += x[i] * gram_(i, j) * y[j];
    }
  }
  return sum;
}

SymmetricPairing SymmetricPairing::restrict_to(const std::vector<std::size_t>& indices) const {
  RationalMatrix m(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) {
      if (indices[a] >= dimension() || indices[b] >= dimension()) {
        throw Error(ErrorCode::DimensionMismatch, "restriction index out of range",
                    std::to_string(std::max(indices[a], indices[b])));
      }
      m(a, b) = gram_(indices[a], indices[b]);
    }
  return SymmetricPairing(std::move(m));
}

SymmetricPairing SymmetricPairing::congruent(const RationalMatrix& p) const {
  require_same(p.rows(), dimension(), "congruence matrix has wrong row count");
  return SymmetricPairing(p.transpose() * gram_ * p);
}

RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b) {
  require_same(a.rows(), a.cols(), "solve_linear needs a square matrix");
  require_same(b.size(), a.rows(), "right-hand side length mismatch");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  RationalVector rhs = b;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) {
      throw Error(ErrorCode::SingularMatrix, "zero pivot with no row exchange available",
                  "column " + std::to_string(k));
    }
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      std::swap(rhs[k], rhs[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
      rhs[r] -= factor * rhs[k];
    }
  }

  RationalVector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = rhs[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= m(k, c) * x[c];
    x[k] = acc / m(k, k);
  }
  return x;
}

RationalVector solve_linear(const SymmetricPairing& a, const RationalVector& b) {
  return solve_linear(a.gram(), b);
}

Rational determinant(const RationalMatrix& a) {
  require_same(a.rows(), a.cols(), "determinant needs a square matrix");
  const std::size_t n = a.rows();
  RationalMatrix m = a;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational factor = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return det;
}

Inertia signature(const SymmetricPairing& a) {
  // Congruence reduction on the trailing block. Each step either finds a
  // nonzero diagonal pivot or manufactures one from a nonzero off-diagonal
  // entry via e_i -> e_i + e_j, which sets a_ii to 2 a_ij.
  const std::size_t n = a.dimension();
  RationalMatrix m = a.gram();
  Inertia out;

  auto swap_index = [&m, n](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, i), m(r, j));
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (!m(i, i).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!m(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        }
      if (pi == n) {
        out.zeros += static_cast<int>(n - k);
        break;
      }
      // row_i += row_j, then col_i += col_j
      for (std::size_t c = 0; c < n; ++c) m(pi, c) += m(pj, c);
      for (std::size_t r = 0; r < n; ++r) m(r, pi) += m(r, pj);
      pivot = pi;
    }
    swap_index(k, pivot);

    const Rational d = m(k, k);
    (d.sign() > 0 ? out.positives : out.negatives) += 1;
    // Schur complement on the trailing block; row and column k stay intact
    // until the block update is finished.
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational factor = m(r, k) / d;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (!m(k, c).is_zero()) m(r, c) -= factor * m(k, c);
      }
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      m(r, k) = 0;
      m(k, r) = 0;
    }
  }
  return out;
}

bool is_negative_definite(const SymmetricPairing& a) {
  const Inertia s = signature(a);
  return s.negatives == static_cast<int>(a.dimension());
}

HodgeVerdict hodge_check(const SymmetricPairing& form, const RationalVector& d1,
                         const RationalVector& d2, const Rational& a1, const Rational& a2) {
  HodgeVerdict v;
  const RationalVector combo = a1 * d1 + a2 * d2;
  v.hypothesis_met = form.square(combo).sign() > 0;
  if (!v.hypothesis_met) return v;
  const Rational lhs = form.square(d1) * form.square(d2);
  const Rational cross = form.pair(d1, d2);
  const Rational rhs = cross * cross;
  v.inequality_holds = lhs <= rhs;
  v.equality = lhs == rhs;
  return v;
}

}  // namespace folcan
