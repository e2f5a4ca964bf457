#include "badred/ffalg/ffalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>

namespace badred {

namespace {

FieldPtr cached_field(std::uint64_t p, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, degree}];
  if (!slot) slot = degree == 1 ? FiniteField::prime_field(p) : FiniteField::extension(p, degree);
  return slot;
}

int homogeneous_degree_or_throw(const FFMPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "finite field oracle on the zero polynomial");
  auto d = f.homogeneous_degree();
  if (!d) throw Error(ErrorCode::NonHomogeneous, "finite field oracle needs a homogeneous polynomial");
  return *d;
}

std::vector<Monomial> monomials_of_degree(int nv, int d) {
  std::vector<Monomial> out;
  Monomial m;
  m.deg = d;
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nv - 1) {
      m.e[i] = static_cast<std::uint16_t>(left);
      out.push_back(m);
      return;
    }
    for (int k = left; k >= 0; --k) {
      m.e[i] = static_cast<std::uint16_t>(k);
      self(self, i + 1, left - k);
    }
    m.e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; });
  return out;
}

// Gauss-Jordan inverse; nullopt when singular.
std::optional<std::vector<std::vector<FFElem>>> invert(std::vector<std::vector<FFElem>> a, const FiniteField& W) {
  const std::size_t n = a.size();
  std::vector<std::vector<FFElem>> inv(n, std::vector<FFElem>(n, W.zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = W.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    FFElem s = W.inverse(a[c][c]);
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] = a[c][j] * s;
      inv[c][j] = inv[c][j] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero()) continue;
      FFElem t = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = a[i][j] - t * a[c][j];
        inv[i][j] = inv[i][j] - t * inv[c][j];
      }
    }
  }
  return inv;
}

FFMPoly linear_form(VarNames vars, const std::vector<FFElem>& c) {
  std::vector<FFMPoly::Term> t;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) t.emplace_back(Monomial::var(static_cast<int>(i)), c[i]);
  return FFMPoly::from_terms(std::move(vars), std::move(t));
}

FFMPoly change_coordinates(const FFMPoly& f, const std::vector<std::vector<FFElem>>& A, const FiniteField& W) {
  std::vector<FFMPoly> images;
  for (auto& row : A) images.push_back(linear_form(f.vars(), row));
  return f.compose(images, W.one()).with_vars(f.vars());
}

bool in_subfield(const FFElem& x, const FiniteField& W, const Integer& qk) { return W.equal(W.pow(x, qk), x); }

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Smallest degree-d divisor of g over W in candidate order, charging budget.
std::optional<FFMPoly> find_divisor(const FFMPoly& g, const FiniteField& W, int d, std::uint64_t& budget,
                                    std::uint64_t& spent) {
  const int nv = g.nvars();
  auto mons = monomials_of_degree(nv, d);
  const Integer q = W.size();
  const std::size_t M = mons.size();
  Integer space = 0;
  for (std::size_t i = 0; i < M; ++i) space += ipow(q, M - 1 - i);
  if (space > Integer(static_cast<unsigned long>(budget)))
    throw Error(ErrorCode::BudgetExceeded, "degree-" + std::to_string(d) + " search over " + W.describe() + " has " +
                                               space.get_str() + " candidates, budget " + std::to_string(budget));
  const std::uint64_t qq = to_u64(q);
  for (std::size_t i = 0; i < M; ++i) {
    const std::size_t free = M - 1 - i;
    std::vector<std::uint64_t> digit(free, 0);
    while (true) {
      std::vector<FFMPoly::Term> t;
      t.emplace_back(mons[i], W.one());
      for (std::size_t s = 0; s < free; ++s)
        if (digit[s]) t.emplace_back(mons[i + 1 + s], W.from_index(digit[s]));
      FFMPoly cand = FFMPoly::from_terms(g.vars(), std::move(t));
      --budget;
      ++spent;
      if (try_divide(g, cand)) return cand;
      std::size_t s = 0;
      while (s < free && ++digit[s] == qq) digit[s++] = 0;
      if (s == free) break;
    }
  }
  return std::nullopt;
}

}  // namespace

FFMPoly reduce_mod(const NFPoly& f, const PrimeIdeal& P) {
  P.residue_field();
  std::vector<FFMPoly::Term> t;
  for (auto& [m, a] : f.terms()) {
    FFElem r = P.residue_reduce(a);
    if (!r.is_zero()) t.emplace_back(m, r);
  }
  return FFMPoly::from_terms(f.vars(), std::move(t));
}

FFMPoly p_part_reduction(const NFPoly& f, const PrimeIdeal& P) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "P-part of the zero polynomial");
  long c = 0;
  bool first = true;
  for (auto& [m, a] : f.terms()) {
    long v = P.valuation(a);
    c = first ? v : std::min(c, v);
    first = false;
  }
  if (c == 0) return reduce_mod(f, P);
  NFElem s = c > 0 ? P.inverse_uniformizer_power(c) : P.field().inverse(P.inverse_uniformizer_power(-c));
  return reduce_mod(f.mul_scalar(s), P);
}

FFMPoly lift(const FFMPoly& f, const FieldEmbedding& emb) {
  return map_coeffs<FFElem>(f, [&](const FFElem& a) { return emb(a); });
}

FFMPoly monic(const FFMPoly& f) {
  if (f.is_zero()) return f;
  const FFElem& lc = f.lead().second;
  return f.mul_scalar(lc.field->inverse(lc));
}

LinearFactors linear_factors(const FFMPoly& f, const FiniteField& F, int k) {
  const int delta = homogeneous_degree_or_throw(f);
  const int nv = f.nvars();
  const Integer q = F.size();
  const Integer qk = ipow(q, k);
  int r = 1;
  while (ipow(qk, r) <= delta + 1) ++r;
  const int D = F.degree() * k * r;
  if (D > kMaxExtDegree)
    throw Error(ErrorCode::BudgetExceeded, "linear factor search needs a degree-" + std::to_string(D) +
                                               " extension of F_" + std::to_string(F.characteristic()));
  LinearFactors out;
  out.degree_over_base = k * r;
  out.field = D == F.degree() ? F.shared_from_this() : cached_field(F.characteristic(), D);
  const FiniteField& W = *out.field;
  FFMPoly g = f;
  if (&W != &F) g = lift(f, FieldEmbedding(F, W));
  if (delta == 0) return out;
  if (nv == 1) {
    out.forms.push_back(linear_form(f.vars(), {W.one()}));
    return out;
  }

  std::mt19937_64 rng(0x6c696e65ULL ^ (static_cast<std::uint64_t>(D) << 32) ^ static_cast<std::uint64_t>(delta));
  const std::uint64_t p = W.characteristic();
  auto random_elem = [&] {
    std::vector<std::uint64_t> c(W.degree());
    for (auto& x : c) x = rng() % p;
    return W.from_coefficients(c);
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<FFElem>> A(nv, std::vector<FFElem>(nv, W.zero()));
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) A[i][j] = attempt == 0 ? (i == j ? W.one() : W.zero()) : random_elem();
    auto Ainv = invert(A, W);
    if (!Ainv) continue;
    FFMPoly h = attempt == 0 ? g : change_coordinates(g, A, W);
    bool generic = true;
    for (int i = 0; i < nv && generic; ++i) generic = !h.coefficient(Monomial::var(i, delta)).is_zero();
    if (!generic) continue;

    // a factor T0 - sum a_j T_j forces h(a_j e0 + e_j) = 0
    std::vector<std::vector<FFElem>> roots(nv);
    for (int j = 1; j < nv; ++j) {
      std::vector<FFElem> u(delta + 1, W.zero());
      for (auto& [m, c] : h.terms())
        if (m.e[0] + m.e[j] == static_cast<int>(m.deg)) u[m.e[0]] += c;
      roots[j] = roots_ff(W, FFPoly(u));
      if (roots[j].empty()) return out;
    }
    std::vector<std::size_t> idx(nv, 0);
    while (true) {
      std::vector<FFElem> t0(nv, W.zero());
      for (int j = 1; j < nv; ++j) t0[j] = roots[j][idx[j]];
      std::vector<FFMPoly> images{linear_form(h.vars(), t0)};
      for (int j = 1; j < nv; ++j) images.push_back(FFMPoly::variable(h.vars(), j, W.one()));
      if (h.compose(images, W.one()).is_zero()) {
        std::vector<FFElem> cp(nv);
        cp[0] = W.one();
        for (int j = 1; j < nv; ++j) cp[j] = -t0[j];
        std::vector<FFElem> c(nv, W.zero());
        for (int l = 0; l < nv; ++l)
          for (int i = 0; i < nv; ++i) c[l] += cp[i] * (*Ainv)[i][l];
        std::size_t lead = 0;
        while (c[lead].is_zero()) ++lead;
        FFElem s = W.inverse(c[lead]);
        bool defined = true;
        for (auto& x : c) {
          x = x * s;
          if (r > 1 && !in_subfield(x, W, qk)) defined = false;
        }
        if (defined) {
          FFMPoly form = linear_form(f.vars(), c);
          if (std::find(out.forms.begin(), out.forms.end(), form) == out.forms.end()) out.forms.push_back(form);
        }
      }
      int j = 1;
      while (j < nv && ++idx[j] == roots[j].size()) idx[j++] = 0;
      if (j == nv) break;
    }
    std::sort(out.forms.begin(), out.forms.end(), [](const FFMPoly& a, const FFMPoly& b) {
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = grlex_cmp(a.terms()[i].first, b.terms()[i].first);
        if (c) return c > 0;
        auto& F2 = *a.terms()[i].second.field;
        auto x = F2.to_index(a.terms()[i].second), y = F2.to_index(b.terms()[i].second);
        if (x != y) return x < y;
      }
      return a.size() < b.size();
    });
    return out;
  }
  throw Error(ErrorCode::BudgetExceeded, "no generic coordinate change found over " + W.describe());
}

FFFactorization factor_exhaustive(const FFMPoly& f, const FiniteField& F, std::uint64_t budget) {
  int deg = homogeneous_degree_or_throw(f);
  FFFactorization res;
  res.unit = f.lead().second;
  FFMPoly g = monic(f);
  auto divide_out = [&](const FFMPoly& cand) {
    int mult = 0;
    while (auto qt = try_divide(g, cand)) {
      ++res.divisions;
      g = std::move(*qt);
      ++mult;
    }
    ++res.divisions;
    if (mult) res.factors.push_back({cand, mult});
    deg = g.total_degree();
  };

  if (deg >= 1) {
    if (F.size() > deg + 1) {
      for (auto& l : linear_factors(g, F, 1).forms) divide_out(l);
    } else {
      for (int i = 0; i < g.nvars() && deg >= 1; ++i) {
        const int free = g.nvars() - 1 - i;
        const std::uint64_t q = to_u64(F.size());
        std::vector<std::uint64_t> digit(free, 0);
        while (deg >= 1) {
          std::vector<FFElem> c(g.nvars(), F.zero());
          c[i] = F.one();
          for (int s = 0; s < free; ++s) c[i + 1 + s] = F.from_index(digit[s]);
          divide_out(linear_form(g.vars(), c));
          int s = 0;
          while (s < free && ++digit[s] == q) digit[s++] = 0;
          if (s == free) break;
        }
      }
    }
  }
  std::uint64_t left = budget;
  for (int d = 2; 2 * d <= deg; ++d) {
    while (2 * d <= deg) {
      std::uint64_t spent = 0;
      auto cand = find_divisor(g, F, d, left, spent);
      res.divisions += spent;
      if (!cand) break;
      divide_out(*cand);
    }
  }
  if (deg >= 1) res.factors.push_back({g, 1});
  std::stable_sort(res.factors.begin(), res.factors.end(),
                   [](const FFFactor& a, const FFFactor& b) { return a.factor.total_degree() < b.factor.total_degree(); });
  return res;
}

AbsIrreducibleFF abs_irreducible_ff(const FFMPoly& f, const FiniteField& F, std::uint64_t budget) {
  const int delta = homogeneous_degree_or_throw(f);
  AbsIrreducibleFF res;
  if (delta <= 1) return res;
  for (int k = 1; k <= delta; ++k) {
    LinearFactors lf = linear_factors(f, F, k);
    if (!lf.forms.empty()) {
      res.absolutely_irreducible = false;
      res.witness = lf.forms.front();
      res.witness_field = lf.field;
      res.extension_degree = k;
      return res;
    }
  }
  std::uint64_t left = budget;
  for (int d = 2; 2 * d <= delta; ++d)
    for (int e = 1; e * d <= delta; ++e) {
      const int D = F.degree() * e;
      if (D > kMaxExtDegree) throw Error(ErrorCode::BudgetExceeded, "extension degree beyond 12");
      FieldPtr W = e == 1 ? F.shared_from_this() : cached_field(F.characteristic(), D);
      FFMPoly g = e == 1 ? f : lift(f, FieldEmbedding(F, *W));
      std::uint64_t spent = 0;
      if (auto cand = find_divisor(monic(g), *W, d, left, spent)) {
        res.absolutely_irreducible = false;
        res.witness = *cand;
        res.witness_field = W;
        res.extension_degree = e;
        return res;
      }
    }
  return res;
}

ReductionType classify_reduction(const FFMPoly& f, const FiniteField& F, std::uint64_t budget) {
  ReductionType t;
  t.factorization = factor_exhaustive(f, F, budget);
  const auto& fs = t.factorization.factors;
  t.is_reduced = std::all_of(fs.begin(), fs.end(), [](const FFFactor& x) { return x.multiplicity == 1; });
  t.is_irreducible = fs.size() == 1;
  t.witness_kind = "none";
  if (!t.is_reduced) {
    for (auto& x : fs)
      if (x.multiplicity > 1) {
        t.witness_kind = "square factor";
        t.witness = to_string(x.factor);
        break;
      }
    t.witness_extension = 1;
  } else if (!t.is_irreducible) {
    t.witness_kind = "proper factor";
    t.witness = to_string(fs.front().factor);
    t.witness_extension = 1;
  }
  if (t.is_reduced && t.is_irreducible) {
    AbsIrreducibleFF a = abs_irreducible_ff(f, F, budget);
    t.is_geometrically_integral = a.absolutely_irreducible;
    if (!a.absolutely_irreducible) {
      t.witness_kind = "geometric factor";
      t.witness = to_string(a.witness) + " over " + a.witness_field->describe();
      t.witness_extension = a.extension_degree;
    }
  }
  return t;
}

}  // namespace badred
