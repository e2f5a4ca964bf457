#pragma once

#include <vector>

#include "badred/mpoly/matrix.hpp"
#include "badred/mpoly/mpoly.hpp"

namespace badred {

// Coefficients of a binary form of degree d: a[i] multiplies s^{d-i} t^i.

// Sylvester matrix of a (degree dA = a.size()-1) and b (degree dB).
template <class R>
Matrix<R> sylvester_matrix(const std::vector<R>& a, const std::vector<R>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1, n = da + db;
  Matrix<R> m(n, n);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) m(r, r + i) = a[i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) m(db + r, r + i) = b[i];
  return m;
}

template <class R>
R sylvester_resultant(const std::vector<R>& a, const std::vector<R>& b, const R& one) {
  if (a.size() + b.size() == 2) return one;
  return det_bareiss(sylvester_matrix(a, b));
}

// Integer structure constants of the Bezout matrix in degree e:
// beta[k][l] lists (i, j, c) with entry (k, l) = sum c * (a_i b_j - a_j b_i).
struct BezoutStructure {
  struct Entry {
    int i, j;
    Integer c;
  };
  int e = 0;
  std::vector<std::vector<std::vector<Entry>>> beta;
};
const BezoutStructure& bezout_structure(int e);

// Entries defined by (A(s,t)B(s',t') - A(s',t')B(s,t)) / (st' - s't)
//   = sum_{k,l} c_{kl} s^k t^{e-1-k} s'^l t'^{e-1-l}.
template <class R>
Matrix<R> bezout_matrix(const std::vector<R>& a, const std::vector<R>& b) {
  if (a.size() != b.size() || a.size() < 2) throw Error(ErrorCode::DegreeMismatch, "Bezout needs equal degrees >= 1");
  const int e = static_cast<int>(a.size()) - 1;
  const BezoutStructure& st = bezout_structure(e);
  Matrix<R> m(e, e);
  std::vector<std::vector<R>> bracket(e + 1, std::vector<R>(e + 1));
  for (int i = 0; i <= e; ++i)
    for (int j = i + 1; j <= e; ++j) bracket[i][j] = a[i] * b[j] - a[j] * b[i];
  for (int k = 0; k < e; ++k)
    for (int l = 0; l < e; ++l) {
      R acc{};
      for (auto& en : st.beta[k][l]) acc = acc + scale(bracket[en.i][en.j], en.c.get_si());
      m(k, l) = acc;
    }
  return m;
}

// Coefficient vector of a binary form in a two-variable MPoly (s = var 0).
template <class C>
std::vector<C> binary_form_coefficients(const MPoly<C>& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::NonBinary, "expected a form in two variables");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero binary form");
  auto d = f.homogeneous_degree();
  if (!d) throw Error(ErrorCode::NonHomogeneous, "binary form is not homogeneous");
  std::vector<C> a(*d + 1);
  for (auto& [m, c] : f.terms()) a[m.e[1]] = c;
  return a;
}

template <class C>
C sylvester_resultant(const MPoly<C>& A, const MPoly<C>& B, const C& one) {
  return sylvester_resultant(binary_form_coefficients(A), binary_form_coefficients(B), one);
}

template <class C>
Matrix<C> bezout_matrix(const MPoly<C>& A, const MPoly<C>& B) {
  auto a = binary_form_coefficients(A), b = binary_form_coefficients(B);
  if (a.size() != b.size()) throw Error(ErrorCode::DegreeMismatch, "forms of different degree");
  return bezout_matrix(a, b);
}

}  // namespace badred
