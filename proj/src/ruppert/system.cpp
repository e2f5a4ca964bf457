#include <algorithm>

#include "badred/kernels/rowops.hpp"
#include "badred/ruppert/ruppert.hpp"

namespace badred {

RuppertSystem build_ruppert(const NFPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Ruppert system of the zero polynomial");
  if (f.nvars() != 2) throw Error(ErrorCode::InvalidInput, "Ruppert system needs a bivariate polynomial");
  const NumberField& K = *f.lead().second.field;
  RuppertSystem s;
  s.f = f;
  s.m = f.degree_in(0);
  s.n = f.degree_in(1);
  if (s.m < 1 || s.n < 2)
    throw Error(ErrorCode::DegenerateShape, "bidegree (" + std::to_string(s.m) + "," + std::to_string(s.n) +
                                                ") needs m >= 1 and n >= 2");
  const int m = s.m, n = s.n;
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * n; ++b) s.rows.emplace_back(a, b);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s.cols.push_back({'g', i, j});
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n - 2; ++j) s.cols.push_back({'h', i, j});

  s.M = Matrix<NFElem>(s.rows.size(), s.cols.size());
  for (std::size_t r = 0; r < s.rows.size(); ++r)
    for (std::size_t c = 0; c < s.cols.size(); ++c) s.M(r, c) = K.zero();
  auto row_of = [&](int a, int b) { return static_cast<std::size_t>(a * 2 * n + b); };
  for (std::size_t c = 0; c < s.cols.size(); ++c) {
    const auto [block, i, j] = s.cols[c];
    for (auto& [mono, coef] : f.terms()) {
      const int u = mono.e[0], v = mono.e[1];
      if (block == 'g') {
        if (v + j >= 1 && j != v) s.M(row_of(u + i, v + j - 1), c) += scale(coef, j - v);
      } else {
        if (u + i >= 1 && u != i) s.M(row_of(u + i - 1, v + j), c) += scale(coef, u - i);
      }
    }
  }
  return s;
}

Matrix<Integer> integer_expansion(const RuppertSystem& sys) {
  const NumberField& K = *sys.f.lead().second.field;
  const int d = K.degree();
  std::vector<Integer> theta(d);
  if (d > 1) theta[1] = 1;
  Matrix<Integer> Z(sys.M.rows() * d, sys.M.cols() * d);
  for (std::size_t r = 0; r < sys.M.rows(); ++r)
    for (std::size_t c = 0; c < sys.M.cols(); ++c) {
      const NFElem& a = sys.M(r, c);
      if (a.is_zero()) continue;
      auto [col, den] = a.split_denominator();
      if (den != 1) throw Error(ErrorCode::NonIntegral, "Ruppert entry " + K.to_string(a) + " is not integral");
      for (int l = 0; l < d; ++l) {
        if (l) col = K.mul_integral(col, theta);
        for (int k = 0; k < d; ++k) Z(r * d + k, c * d + l) = col[k];
      }
    }
  return Z;
}

std::size_t rank_mod(const RuppertSystem& sys, const PrimeIdeal& P) {
  const FiniteField& F = P.residue_field();
  const std::size_t R = sys.M.rows(), C = sys.M.cols();
  if (F.degree() == 1) {
    std::vector<std::uint64_t> e(R * C, 0);
    for (std::size_t r = 0; r < R; ++r)
      for (std::size_t c = 0; c < C; ++c)
        if (!sys.M(r, c).is_zero()) e[r * C + c] = P.residue_reduce(sys.M(r, c)).c[0];
    return kernels::rank_mod_p(std::move(e), R, C, F.characteristic());
  }
  Matrix<FFElem> A(R, C);
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < C; ++c)
      A(r, c) = sys.M(r, c).is_zero() ? F.zero() : P.residue_reduce(sys.M(r, c));
  return rank_field(std::move(A));
}

namespace {

Rational pivot_key(const NumberField& K, const NFElem& a) {
  if (K.is_rational()) return abs(a.c[0]);
  return abs(K.norm(a));
}

}  // namespace

MinorCertificate minor_certificate(const RuppertSystem& sys) {
  const NumberField& K = *sys.f.lead().second.field;
  Matrix<NFElem> W = sys.M;
  const std::size_t R = W.rows(), C = W.cols();
  if (R < C) throw Error(ErrorCode::AllMinorsZero, "fewer rows than columns");
  std::vector<std::size_t> order(R);
  for (std::size_t i = 0; i < R; ++i) order[i] = i;
  NFElem prev = K.one();
  for (std::size_t k = 0; k < C; ++k) {
    std::size_t best = R;
    Rational best_key;
    for (std::size_t r = k; r < R; ++r) {
      if (W(r, k).is_zero()) continue;
      Rational key = pivot_key(K, W(r, k));
      if (best == R || key > best_key || (key == best_key && order[r] < order[best])) {
        best = r;
        best_key = key;
      }
    }
    if (best == R) throw Error(ErrorCode::AllMinorsZero, "every maximal minor vanishes");
    W.swap_rows(k, best);
    std::swap(order[k], order[best]);
    const NFElem inv = K.inverse(prev);
    for (std::size_t i = k + 1; i < R; ++i) {
      for (std::size_t j = k + 1; j < C; ++j) W(i, j) = (W(k, k) * W(i, j) - W(i, k) * W(k, j)) * inv;
      W(i, k) = K.zero();
    }
    prev = W(k, k);
  }
  MinorCertificate cert;
  cert.size = C;
  cert.rows.assign(order.begin(), order.begin() + C);
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < C; ++i)
    for (std::size_t j = i + 1; j < C; ++j)
      if (cert.rows[i] > cert.rows[j]) ++inversions;
  std::sort(cert.rows.begin(), cert.rows.end());
  cert.value = inversions % 2 ? K.sub(K.zero(), prev) : prev;

  Rational nrm = abs(K.norm(cert.value));
  if (nrm.get_den() != 1) throw Error(ErrorCode::NonIntegral, "minor of an integral system has a denominator");
  cert.norm = nrm.get_num();
  FactorBudget light;
  light.rho_iterations = 200'000;
  auto part = factor_integer_partial(cert.norm, light);
  cert.norm_factors = std::move(part.factors);
  cert.norm_cofactor = part.cofactor;

  Matrix<Integer> Z = integer_expansion(sys);
  std::vector<std::vector<Integer>> gens(Z.rows(), std::vector<Integer>(Z.cols()));
  for (std::size_t r = 0; r < Z.rows(); ++r)
    for (std::size_t c = 0; c < Z.cols(); ++c) gens[r][c] = Z(r, c);
  auto H = hnf_modular(std::move(gens), cert.norm, static_cast<int>(Z.cols()));
  cert.divisor = 1;
  for (std::size_t c = 0; c < H.size(); ++c) cert.divisor *= H[c][c];
  if (cert.divisor > 1) cert.divisor_factors = factor_integer(cert.divisor);
  return cert;
}

}  // namespace badred
