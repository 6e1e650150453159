#include <algorithm>
#include <random>

#include "factor_internal.hpp"

namespace keller::detail {

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  ztrim(out);
  return out;
}

namespace {

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  ztrim(out);
  return out;
}

BigInt zcontent(const ZPoly& f) {
  BigInt g(0);
  for (const BigInt& c : f) g = gcd(g, c);
  return g;
}

ZPoly zprimitive(const ZPoly& f) {
  BigInt c = zcontent(f);
  if (!f.empty() && f.back().sign() < 0) c = -c;
  ZPoly out = f;
  for (BigInt& x : out) x = x / c;
  return out;
}

// Long division over Z with early abort; succeeds exactly when b | a.
std::optional<ZPoly> zdivide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw division_by_zero();
  ZPoly r = a;
  ztrim(r);
  ZPoly q(r.size() > b.size() ? r.size() - b.size() + 1 : 1, BigInt(0));
  const BigInt& lead = b.back();
  while (zdeg(r) >= zdeg(b)) {
    BigInt c = r.back() / lead;
    if (r.back() != c * lead) return std::nullopt;
    int shift = zdeg(r) - zdeg(b);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
    ztrim(r);
  }
  if (!r.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

// ---- arithmetic mod a word-sized prime ----

using MPoly = std::vector<long long>;

void mp_trim(MPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mp_deg(const MPoly& f) { return static_cast<int>(f.size()) - 1; }

long long mod_pow(long long base, long long e, long long p) {
  long long r = 1;
  base %= p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow((a % p + p) % p, p - 2, p); }

MPoly mp_mul(const MPoly& a, const MPoly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  MPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(out);
  return out;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, long long p) {
  MPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = ((out[i] - b[i]) % p + p) % p;
  mp_trim(out);
  return out;
}

MPoly mp_rem(MPoly r, const MPoly& b, long long p) {
  long long inv = mod_inv(b.back(), p);
  mp_trim(r);
  while (mp_deg(r) >= mp_deg(b)) {
    long long c = r.back() * inv % p;
    int shift = mp_deg(r) - mp_deg(b);
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[i + shift] = ((r[i + shift] - c * b[i]) % p + p) % p;
    }
    mp_trim(r);
  }
  return r;
}

MPoly mp_divq(MPoly r, const MPoly& b, long long p) {
  long long inv = mod_inv(b.back(), p);
  mp_trim(r);
  MPoly q(r.size() > b.size() ? r.size() - b.size() + 1 : 1, 0);
  while (mp_deg(r) >= mp_deg(b)) {
    long long c = r.back() * inv % p;
    int shift = mp_deg(r) - mp_deg(b);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      r[i + shift] = ((r[i + shift] - c * b[i]) % p + p) % p;
    }
    mp_trim(r);
  }
  mp_trim(q);
  return q;
}

MPoly mp_monic(MPoly f, long long p) {
  if (f.empty()) return f;
  long long inv = mod_inv(f.back(), p);
  for (auto& c : f) c = c * inv % p;
  return f;
}

MPoly mp_gcd(MPoly a, MPoly b, long long p) {
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    MPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

MPoly mp_derivative(const MPoly& f, long long p) {
  MPoly out;
  for (std::size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * static_cast<long long>(i % p) % p);
  mp_trim(out);
  return out;
}

MPoly mp_powmod(const MPoly& base, const BigInt& e, const MPoly& m, long long p) {
  MPoly result{1};
  MPoly b = mp_rem(base, m, p);
  std::size_t bits = mpz_sizeinbase(e.raw().get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_rem(mp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.raw().get_mpz_t(), i)) result = mp_rem(mp_mul(result, b, p), m, p);
  }
  return result;
}

// Extended Euclid mod p: s*a + t*b = 1 for coprime a, b.
void mp_bezout(const MPoly& a, const MPoly& b, long long p, MPoly& s, MPoly& t) {
  MPoly r0 = a, r1 = b;
  MPoly s0{1}, s1{}, t0{}, t1{1};
  mp_trim(r0);
  mp_trim(r1);
  while (!r1.empty()) {
    MPoly q = mp_divq(r0, r1, p);
    MPoly r2 = mp_sub(r0, mp_mul(q, r1, p), p);
    MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  if (mp_deg(r0) != 0) throw error("internal: expected coprime modular factors");
  long long inv = mod_inv(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = std::move(s0);
  t = std::move(t0);
}

uint64_t mp_hash(const MPoly& f, long long p, int d) {
  uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(p) ^ (static_cast<uint64_t>(d) << 32);
  for (long long c : f) {
    h ^= static_cast<uint64_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Cantor-Zassenhaus equal-degree splitting of a monic square-free product
// of irreducibles of degree d (p odd).
void mp_equal_degree(const MPoly& g, int d, long long p, std::vector<MPoly>& out) {
  if (mp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt exponent = (pow(BigInt(p), static_cast<unsigned long>(d)) - BigInt(1)) / BigInt(2);
  std::mt19937_64 rng(mp_hash(g, p, d));
  for (int tries = 0; tries < 1000; ++tries) {
    MPoly a(static_cast<std::size_t>(mp_deg(g)), 0);
    for (auto& c : a) c = static_cast<long long>(rng() % static_cast<uint64_t>(p));
    mp_trim(a);
    if (mp_deg(a) < 1) continue;
    MPoly b = mp_powmod(a, exponent, g, p);
    if (b.empty()) continue;
    b[0] = ((b[0] - 1) % p + p) % p;
    mp_trim(b);
    MPoly t = mp_gcd(b, g, p);
    if (mp_deg(t) > 0 && mp_deg(t) < mp_deg(g)) {
      mp_equal_degree(t, d, p, out);
      mp_equal_degree(mp_divq(g, t, p), d, p, out);
      return;
    }
  }
  throw error("internal: equal-degree splitting did not converge");
}

// Full factorization of a monic square-free polynomial mod p.
std::vector<MPoly> mp_factor_squarefree(MPoly f, long long p) {
  std::vector<MPoly> out;
  MPoly x{0, 1};
  MPoly h = x;
  int d = 0;
  while (mp_deg(f) > 2 * d) {
    ++d;
    h = mp_powmod(h, BigInt(p), f, p);
    MPoly hx = mp_sub(h, x, p);
    MPoly g = mp_gcd(hx, f, p);
    if (mp_deg(g) > 0) {
      mp_equal_degree(g, d, p, out);
      f = mp_divq(f, g, p);
      h = mp_rem(h, f, p);
    }
  }
  if (mp_deg(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- Hensel lifting with big-integer coefficients ----

void zp_reduce(ZPoly& f, const BigInt& m) {
  for (BigInt& c : f) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.raw().get_mpz_t(), m.raw().get_mpz_t());
    c = BigInt(std::move(r));
  }
  ztrim(f);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out = zmul(a, b);
  zp_reduce(out, m);
  return out;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out = zsub(a, b);
  zp_reduce(out, m);
  return out;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  zp_reduce(out, m);
  return out;
}

// Division by a monic divisor with coefficients mod m.
void zp_divmod_monic(const ZPoly& f, const ZPoly& g, const BigInt& m, ZPoly& q, ZPoly& r) {
  r = f;
  zp_reduce(r, m);
  q.assign(r.size() > g.size() ? r.size() - g.size() + 1 : 1, BigInt(0));
  while (zdeg(r) >= zdeg(g)) {
    BigInt c = r.back();
    int shift = zdeg(r) - zdeg(g);
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) {
      mpz_class x = (r[i + shift] - c * g[i]).raw();
      mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.raw().get_mpz_t());
      r[i + shift] = BigInt(std::move(x));
    }
    ztrim(r);
  }
  ztrim(q);
}

struct HenselPair {
  ZPoly g, h, s, t;  // f = g*h, s*g + t*h = 1 (mod m); h monic
};

// One quadratic step to the same congruences mod m^2. The remainder
// correction goes to the monic factor h, which keeps its degree and
// leading coefficient; g absorbs the rest.
void hensel_step(const ZPoly& f, HenselPair& pr, const BigInt& m) {
  BigInt m2 = m * m;
  ZPoly e = zp_sub(f, zmul(pr.g, pr.h), m2);
  ZPoly q, r;
  zp_divmod_monic(zp_mul(pr.s, e, m2), pr.h, m2, q, r);
  ZPoly g1 = zp_add(pr.g, zp_add(zp_mul(pr.t, e, m2), zp_mul(q, pr.g, m2), m2), m2);
  ZPoly h1 = zp_add(pr.h, r, m2);
  ZPoly b = zp_sub(zp_add(zp_mul(pr.s, g1, m2), zp_mul(pr.t, h1, m2), m2), ZPoly{BigInt(1)}, m2);
  ZPoly c, d;
  zp_divmod_monic(zp_mul(pr.s, b, m2), h1, m2, c, d);
  ZPoly s1 = zp_sub(pr.s, d, m2);
  ZPoly t1 = zp_sub(pr.t, zp_add(zp_mul(pr.t, b, m2), zp_mul(c, g1, m2), m2), m2);
  pr = {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

ZPoly mp_to_z(const MPoly& f) {
  ZPoly out;
  out.reserve(f.size());
  for (long long c : f) out.push_back(BigInt(static_cast<long>(c)));
  ztrim(out);
  return out;
}

// Peel-lift the modular factors of f to a common modulus M = p^(2^J) >= target.
// Returns monic factors mod M with f = lc(f) * prod (mod M).
std::vector<ZPoly> hensel_lift_all(const ZPoly& f, const std::vector<MPoly>& modular,
                                   long long p, const BigInt& target, BigInt& modulus_out) {
  BigInt M(p);
  int steps = 0;
  while (M < target) {
    M *= M;
    ++steps;
  }
  modulus_out = M;

  std::vector<ZPoly> lifted;
  ZPoly work = f;
  zp_reduce(work, M);
  for (std::size_t i = 0; i + 1 < modular.size(); ++i) {
    // work = g * h (mod p) with h = modular[i] monic and g carrying lc.
    long long lcp = (work.back() % BigInt(p)).to_long();
    if (lcp < 0) lcp += p;
    MPoly g0{lcp % p};
    for (std::size_t j = i + 1; j < modular.size(); ++j) g0 = mp_mul(g0, modular[j], p);
    MPoly s0, t0;
    mp_bezout(g0, modular[i], p, s0, t0);

    HenselPair pr{mp_to_z(g0), mp_to_z(modular[i]), mp_to_z(s0), mp_to_z(t0)};
    BigInt m(p);
    for (int k = 0; k < steps; ++k) {
      hensel_step(work, pr, m);
      m *= m;
    }
    lifted.push_back(pr.h);
    work = pr.g;
  }
  // Remaining cofactor, made monic mod M.
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), work.back().raw().get_mpz_t(), M.raw().get_mpz_t()) == 0) {
    throw error("internal: leading coefficient not invertible in Hensel lift");
  }
  ZPoly last = work;
  for (BigInt& c : last) c = c * BigInt(mpz_class(inv));
  zp_reduce(last, M);
  lifted.push_back(last);
  return lifted;
}

// ---- prime selection, bounds, recombination ----

bool small_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

MPoly z_to_mp(const ZPoly& f, long long p) {
  MPoly out;
  out.reserve(f.size());
  for (const BigInt& c : f) {
    BigInt r = c % BigInt(p);
    long long v = r.to_long();
    if (v < 0) v += p;
    out.push_back(v);
  }
  mp_trim(out);
  return out;
}

long long choose_prime(const ZPoly& f) {
  for (long long p = 3; p < 100000; p += 2) {
    if (!small_prime(p)) continue;
    if ((f.back() % BigInt(p)).is_zero()) continue;
    MPoly fp = z_to_mp(f, p);
    if (mp_deg(fp) != zdeg(f)) continue;
    MPoly g = mp_gcd(fp, mp_derivative(fp, p), p);
    if (mp_deg(g) == 0) return p;
  }
  throw error("no suitable factorization prime below 100000");
}

BigInt isqrt_ceil(const BigInt& n) {
  mpz_class s, r;
  mpz_sqrtrem(s.get_mpz_t(), r.get_mpz_t(), n.raw().get_mpz_t());
  if (sgn(r) != 0) s += 1;
  return BigInt(std::move(s));
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r(1);
  for (long i = 0; i < k; ++i) {
    r *= BigInt(n - i);
    r = r / BigInt(i + 1);
  }
  return r;
}

// Factor coefficient bound (Mignotte): C(n, n/2) * l2-norm of f.
BigInt mignotte_bound(const ZPoly& f) {
  BigInt norm_sq(0);
  for (const BigInt& c : f) norm_sq += c * c;
  long n = zdeg(f);
  return binomial(n, n / 2) * isqrt_ceil(norm_sq);
}

void symmetric_lift(ZPoly& f, const BigInt& m) {
  BigInt half = m / BigInt(2);
  for (BigInt& c : f) {
    if (c > half) c -= m;
  }
  ztrim(f);
}

}  // namespace

std::vector<ZPoly> factor_squarefree_integer(const ZPoly& f) {
  if (zdeg(f) < 1) throw error("internal: factorization input must be nonconstant");
  if (zdeg(f) == 1) return {zprimitive(f)};

  long long p = choose_prime(f);
  MPoly fbar = mp_monic(z_to_mp(f, p), p);
  std::vector<MPoly> modular = mp_factor_squarefree(fbar, p);
  if (modular.size() == 1) return {zprimitive(f)};

  BigInt lc = f.back();
  BigInt target = BigInt(2) * abs(lc) * mignotte_bound(f) + BigInt(1);
  BigInt M(0);
  std::vector<ZPoly> lifted = hensel_lift_all(f, modular, p, target, M);

  std::vector<ZPoly> out;
  ZPoly current = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < lifted.size(); ++i) remaining[i] = i;

  std::size_t subset_size = 1;
  while (2 * subset_size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(subset_size);
    for (std::size_t i = 0; i < subset_size; ++i) pick[i] = i;
    while (true) {
      ZPoly cand{current.back()};
      for (std::size_t idx : pick) cand = zp_mul(cand, lifted[remaining[idx]], M);
      symmetric_lift(cand, M);
      ZPoly candP = zprimitive(cand);
      auto quotient = zdivide_exact(current, candP);
      if (quotient && zdeg(candP) >= 1) {
        out.push_back(candP);
        current = zprimitive(*quotient);
        std::vector<std::size_t> next;
        for (std::size_t i = 0, j = 0; i < remaining.size(); ++i) {
          if (j < pick.size() && pick[j] == i) {
            ++j;
            continue;
          }
          next.push_back(remaining[i]);
        }
        remaining = std::move(next);
        found = true;
        break;
      }
      // Next combination of `remaining` indices.
      std::size_t k = subset_size;
      while (k > 0 && pick[k - 1] == remaining.size() - subset_size + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t i = k; i < subset_size; ++i) pick[i] = pick[i - 1] + 1;
    }
    if (!found) ++subset_size;
  }
  if (zdeg(current) >= 1) out.push_back(zprimitive(current));
  return out;
}

}  // namespace keller::detail
