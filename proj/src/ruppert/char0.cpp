#include "badred/kernels/rowops.hpp"
#include "badred/ruppert/ruppert.hpp"

namespace badred {

namespace {

constexpr int kMaxSections = 6;

const std::vector<std::uint64_t>& probe_primes() {
  static const std::vector<std::uint64_t> ps = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = kernels::kSimdMaxPrime - 1; out.size() < 3; --p)
      if (is_prime_u64(p)) out.push_back(p);
    return out;
  }();
  return ps;
}

bool full_rank_mod_probe(const Matrix<Integer>& Z) {
  for (std::uint64_t p : probe_primes()) {
    std::vector<std::uint64_t> e(Z.data().size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod_u64(Z.data()[i], p);
    if (kernels::rank_mod_p(std::move(e), Z.rows(), Z.cols(), p) == Z.cols()) return true;
  }
  return false;
}

RuppertView make_view(const NFPoly& affine, LinearSubstitution change, std::optional<PlaneSection> section,
                      bool want_minor) {
  const NumberField& K = *affine.lead().second.field;
  RuppertView v;
  v.section = std::move(section);
  v.change = std::move(change);
  v.system = build_ruppert(affine);
  const RuppertSystem& sys = v.system;
  v.full_rank = full_rank_mod_probe(integer_expansion(sys));
  if (!v.full_rank) {
    Matrix<NFElem> A = sys.M;
    auto kv = kernel_vector(A, K.one());
    if (kv.empty()) {
      v.full_rank = true;
    } else {
      Integer den = 1;
      for (auto& x : kv)
        for (auto& q : x.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      const NFElem s = K.from_rational(Rational(den));
      std::vector<NFPoly::Term> gt, ht;
      for (std::size_t c = 0; c < kv.size(); ++c) {
        if (kv[c].is_zero()) continue;
        Monomial mono = Monomial::var(0, sys.cols[c].i) * Monomial::var(1, sys.cols[c].j);
        (sys.cols[c].block == 'g' ? gt : ht).emplace_back(mono, kv[c] * s);
      }
      v.g = NFPoly::from_terms(sys.f.vars(), std::move(gt));
      v.h = NFPoly::from_terms(sys.f.vars(), std::move(ht));
      if (!ruppert_residual(sys.f, v.g, v.h).is_zero())
        throw Error(ErrorCode::InvalidInput, "internal: Ruppert kernel witness does not satisfy the system");
    }
  }
  if (v.full_rank && want_minor) v.minor = minor_certificate(sys);
  return v;
}

}  // namespace

NFPoly ruppert_residual(const NFPoly& f, const NFPoly& g, const NFPoly& h) {
  return f * g.derivative(1) - g * f.derivative(1) - f * h.derivative(0) + h * f.derivative(0);
}

CharZeroResult abs_irreducible_char0(const NFPoly& f, std::uint64_t seed, bool want_candidates) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial");
  auto d = f.homogeneous_degree();
  if (!d) throw Error(ErrorCode::NonHomogeneous, "polynomial is not homogeneous");
  CharZeroResult res;
  res.degree = *d;
  if (res.degree < 1) throw Error(ErrorCode::InvalidInput, "degree 0 defines no hypersurface");
  if (f.nvars() < 2) throw Error(ErrorCode::InvalidInput, "need at least two variables");
  if (res.degree == 1) {
    res.absolutely_irreducible = true;
    res.reason = "hyperplane";
    return res;
  }
  if (f.nvars() == 2) {
    res.reason = "binary form of degree >= 2 splits into linear factors";
    return res;
  }
  const NFPoly g = integral_primitive(f);
  const std::size_t wanted = want_candidates ? 2 : 1;
  std::size_t good = 0;

  if (g.nvars() == 3) {
    int attempt = 0;
    while (good < wanted) {
      Dehomogenization dh;
      try {
        dh = dehomogenize_generic(g, attempt);
      } catch (const Error& e) {
        if (good == 0 || e.code() != ErrorCode::DegenerateDirectionExhausted) throw;
        break;
      }
      attempt = dh.change.attempt + 1;
      RuppertView v = make_view(dh.affine, dh.change, std::nullopt, want_candidates);
      const bool full = v.full_rank;
      res.views.push_back(std::move(v));
      if (!full) {
        res.reason = "Ruppert system has a nonzero kernel";
        return res;
      }
      ++good;
    }
    res.reason = "Ruppert system has full column rank";
  } else {
    int attempt = 0;
    std::optional<RuppertView> last_bad;
    for (int tries = 0; tries < kMaxSections && good < wanted; ++tries) {
      PlaneSection sec = plane_section(g, seed, attempt);
      attempt = sec.map.attempt + 1;
      Dehomogenization dh = dehomogenize_generic(sec.ternary);
      RuppertView v = make_view(dh.affine, dh.change, sec, want_candidates);
      if (v.full_rank) {
        res.views.push_back(std::move(v));
        ++good;
      } else {
        last_bad = std::move(v);
      }
    }
    if (good == 0) {
      res.views.push_back(std::move(*last_bad));
      res.reason = "every tried plane section is reducible";
      return res;
    }
    res.reason = "a plane section has full Ruppert rank";
  }
  res.absolutely_irreducible = true;
  if (want_candidates) {
    res.divisor = 0;
    for (auto& v : res.views) mpz_gcd(res.divisor.get_mpz_t(), res.divisor.get_mpz_t(), v.minor->divisor.get_mpz_t());
    if (res.divisor > 1)
      for (auto& pp : factor_integer(res.divisor)) res.candidate_primes.push_back(pp.prime);
  }
  return res;
}

}  // namespace badred
