#include "badred/exactmath/primes.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "badred/error.hpp"

namespace badred {

Rational inverse(const Rational& a) {
  if (sgn(a) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(1 / a);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

unsigned long valuation(const Integer& a, const Integer& p) {
  if (a == 0) throw Error(ErrorCode::ZeroInput, "valuation of zero");
  Integer t = a;
  return mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw Error(ErrorCode::DivisionByZero, "element not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, const Integer& base) {
  Integer a = base % n;
  if (a == 0) return true;
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

const unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  // The first twelve prime bases are a proof below 3.3e24.
  static const Integer kDeterministicBound("3317044064679887385961981");
  for (unsigned p : kSmallPrimes)
    if (!miller_rabin_round(n, d, s, Integer(p))) return false;
  if (n < kDeterministicBound) return true;

  std::mt19937_64 gen(0x5eed0f5eedULL);
  Integer span = n - 3;
  for (int round = 0; round < 64; ++round) {
    Integer base = from_u64(gen());
    base = base % span + 2;
    if (!miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

bool is_prime_u64(std::uint64_t n) { return is_prime(from_u64(n)); }

namespace {

// Brent's variant; returns a nontrivial factor or 0 when the budget runs out.
Integer pollard_brent(const Integer& n, std::uint64_t& iterations_left, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  while (iterations_left > 0) {
    Integer c = from_u64(gen()) % (n - 1) + 1;
    Integer y = from_u64(gen()) % n;
    Integer g = 1, q = 1, x, ys;
    std::uint64_t r = 1;
    const std::uint64_t m = 128;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        std::uint64_t steps = std::min(m, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += steps;
        if (iterations_left <= steps) {
          iterations_left = 0;
          break;
        }
        iterations_left -= steps;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && iterations_left > 0);
    if (g == 1) return 0;
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

void split_into(const Integer& n, std::map<Integer, unsigned>& out, Integer& stuck,
                std::uint64_t& budget, std::uint64_t& seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    split_into(root, out, stuck, budget, seed);
    split_into(root, out, stuck, budget, seed);
    return;
  }
  Integer d = pollard_brent(n, budget, seed++);
  if (d == 0) {
    stuck *= n;
    return;
  }
  split_into(d, out, stuck, budget, seed);
  split_into(Integer(n / d), out, stuck, budget, seed);
}

}  // namespace

PartialFactorization factor_integer_partial(const Integer& n, const FactorBudget& budget) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor zero");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  static const std::vector<std::uint64_t> kTrialPrimes = primes_up_to(1'000'000);
  for (std::uint64_t p : kTrialPrimes) {
    if (m == 1 || p > budget.trial_limit) break;
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      found[Integer(p)] += 1;
    }
  }
  PartialFactorization out;
  std::uint64_t iters = budget.rho_iterations;
  std::uint64_t seed = 0x0ddba11ULL;
  split_into(m, found, out.cofactor, iters, seed);
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

std::vector<PrimePower> factor_integer(const Integer& n, const FactorBudget& budget) {
  PartialFactorization pf = factor_integer_partial(n, budget);
  if (pf.cofactor != 1)
    throw Error(ErrorCode::BudgetExceeded, "unfactored cofactor " + pf.cofactor.get_str());
  return pf.factors;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace badred
