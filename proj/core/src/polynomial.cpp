#include "sgspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace sgspec {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_longs(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<BigInt> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::primitive_part() const {
  if (c_.empty()) return IntPoly();
  BigInt g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  std::vector<BigInt> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPoly(std::move(out));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Rational(c_[i]);
  return acc;
}

Quad IntPoly::eval(const Quad& x) const {
  Quad acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + Quad(Rational(c_[i]));
  return acc;
}

int IntPoly::sign_at(const Quad& x) const { return eval(x).sign(); }

int IntPoly::sign_at_plus_infinity() const {
  if (c_.empty()) return 0;
  return sgn(c_.back());
}

IntPoly operator+(const IntPoly& l, const IntPoly& r) {
  std::vector<BigInt> c(std::max(l.c_.size(), r.c_.size()), BigInt(0));
  for (size_t i = 0; i < l.c_.size(); ++i) c[i] += l.c_[i];
  for (size_t i = 0; i < r.c_.size(); ++i) c[i] += r.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& l, const IntPoly& r) {
  std::vector<BigInt> c(std::max(l.c_.size(), r.c_.size()), BigInt(0));
  for (size_t i = 0; i < l.c_.size(); ++i) c[i] += l.c_[i];
  for (size_t i = 0; i < r.c_.size(); ++i) c[i] -= r.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& l, const IntPoly& r) {
  if (l.is_zero() || r.is_zero()) return IntPoly();
  std::vector<BigInt> c(l.c_.size() + r.c_.size() - 1, BigInt(0));
  for (size_t i = 0; i < l.c_.size(); ++i)
    for (size_t j = 0; j < r.c_.size(); ++j) c[i + j] += l.c_[i] * r.c_[j];
  return IntPoly(std::move(c));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& r) const {
  if (r.is_zero()) return std::nullopt;
  if (is_zero()) return IntPoly();
  if (degree() < r.degree()) return std::nullopt;
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> quot(degree() - r.degree() + 1, BigInt(0));
  for (int k = degree() - r.degree(); k >= 0; --k) {
    BigInt& lead = rem[k + r.degree()];
    if (lead == 0) continue;
    BigInt q, m;
    mpz_tdiv_qr(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t(), r.leading().get_mpz_t());
    if (m != 0) return std::nullopt;
    quot[k] = q;
    for (int i = 0; i <= r.degree(); ++i) rem[k + i] -= q * r[i];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    BigInt mag = abs(a);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i > 0) {
      if (mag != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly scaled_minimal_polynomial(const Quad& value) {
  if (value.is_rational()) {
    // q*x - p
    const Rational& v = value.a();
    return IntPoly({-v.get_num(), v.get_den()});
  }
  // x^2 - 2a x + (a^2 - m b^2), cleared to integer coefficients.
  Rational c1 = Rational(-2) * value.a();
  Rational c0 = value.a() * value.a() - Rational(value.m()) * value.b() * value.b();
  BigInt den;
  mpz_lcm(den.get_mpz_t(), c1.get_den().get_mpz_t(), c0.get_den().get_mpz_t());
  Rational scale(den);
  Rational s0 = c0 * scale, s1 = c1 * scale;
  return IntPoly({s0.get_num(), s1.get_num(), den});
}

namespace {

// Pseudo-remainder of f by g scaled by a positive power of lc(g), so the
// result is a positive rational multiple of the true remainder.
IntPoly prem_positive(const IntPoly& f, const IntPoly& g) {
  std::vector<BigInt> r(f.coeffs());
  const int dg = g.degree();
  const BigInt& lc = g.leading();
  int steps = 0;
  while (static_cast<int>(r.size()) - 1 >= dg) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    const int dr = static_cast<int>(r.size()) - 1;
    if (dr < dg) break;
    BigInt lead = r.back();
    for (auto& v : r) v *= lc;
    const int shift = dr - dg;
    for (int i = 0; i <= dg; ++i) r[shift + i] -= lead * g[i];
    ++steps;
  }
  IntPoly rem((std::vector<BigInt>(r)));
  if (sgn(lc) < 0 && (steps % 2) == 1) rem = IntPoly() - rem;
  return rem;
}

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
  std::vector<IntPoly> chain;
  chain.push_back(squarefree.primitive_part());
  IntPoly d = squarefree.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive_part());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    IntPoly nxt = IntPoly() - prem_positive(chain[chain.size() - 2], chain.back());
    if (nxt.is_zero()) break;  // only for non-squarefree input
    chain.push_back(nxt.primitive_part());
  }
  return chain;
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at(const std::vector<IntPoly>& chain, const Quad& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) s.push_back(p.sign_at(x));
  return variations(s);
}

int variations_at_infinity(const std::vector<IntPoly>& chain, int direction) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& p : chain) {
    int lead = p.sign_at_plus_infinity();
    if (direction < 0 && (p.degree() % 2) == 1) lead = -lead;
    s.push_back(lead);
  }
  return variations(s);
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly r0 = a.primitive_part(), r1 = b.primitive_part();
  if (r0.is_zero()) return r1;
  if (r1.is_zero()) return r0;
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  while (!r1.is_zero()) {
    IntPoly r2 = prem_positive(r0, r1).primitive_part();
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  if (!r0.is_zero() && sgn(r0.leading()) < 0) r0 = IntPoly() - r0;
  return r0;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  IntPoly w = p.primitive_part();
  IntPoly g = poly_gcd(w, w.derivative());
  if (g.degree() == 0) {
    out.push_back({w, 1});
    return out;
  }
  // Yun's algorithm; every division below is exact over the integers by
  // Gauss's lemma (all divisors are primitive).
  IntPoly a = *w.divide_exact(g);
  IntPoly y = *w.derivative().divide_exact(g);
  IntPoly z = y - a.derivative();
  int i = 1;
  while (a.degree() > 0) {
    IntPoly h = poly_gcd(a, z);
    if (h.degree() > 0) out.push_back({h, i});
    a = *a.divide_exact(h);
    y = *z.divide_exact(h);
    z = y - a.derivative();
    ++i;
  }
  return out;
}

int sturm_count_above(const IntPoly& squarefree, const Quad& threshold) {
  IntPoly q = squarefree.primitive_part();
  if (q.degree() <= 0) return 0;
  if (q.sign_at(threshold) == 0) {
    // Deflate the threshold's minimal polynomial so the chain endpoint is not
    // a root; re-add the conjugate root when it lies strictly above.
    IntPoly mp = scaled_minimal_polynomial(threshold).primitive_part();
    IntPoly q2 = *q.divide_exact(mp);
    int extra = 0;
    if (!threshold.is_rational() && threshold.conjugate() > threshold) extra = 1;
    return sturm_count_above(q2, threshold) + extra;
  }
  auto chain = sturm_chain(q);
  return variations_at(chain, threshold) - variations_at_infinity(chain, +1);
}

int sturm_count_interval(const IntPoly& squarefree, const Rational& lo, const Rational& hi) {
  IntPoly q = squarefree.primitive_part();
  if (q.degree() <= 0) return 0;
  auto chain = sturm_chain(q);
  return variations_at(chain, Quad(lo)) - variations_at(chain, Quad(hi));
}

int real_root_count(const IntPoly& squarefree) {
  IntPoly q = squarefree.primitive_part();
  if (q.degree() <= 0) return 0;
  auto chain = sturm_chain(q);
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

int roots_above(const IntPoly& p, const Quad& threshold) {
  int total = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    total += mult * sturm_count_above(factor, threshold);
  return total;
}

namespace {

// --- GF(p)[x] helpers for the mod-p irreducibility certificate ---

using GfPoly = std::vector<long>;  // constant term first, entries in [0,p)

void gf_trim(GfPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

GfPoly gf_reduce(const IntPoly& p, long q) {
  GfPoly f(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    BigInt r;
    mpz_mod_ui(r.get_mpz_t(), p[i].get_mpz_t(), q);
    f[i] = r.get_si();
  }
  gf_trim(f);
  return f;
}

GfPoly gf_mulmod(const GfPoly& a, const GfPoly& b, const GfPoly& mod, long q) {
  if (a.empty() || b.empty()) return {};
  GfPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % q;
  // reduce mod the monic-normalized modulus
  long inv_lead = 1;
  for (long t = 1; t < q; ++t)
    if (mod.back() * t % q == 1) inv_lead = t;
  while (c.size() >= mod.size()) {
    long lead = c.back() % q;
    if (lead != 0) {
      long scale = lead * inv_lead % q;
      size_t shift = c.size() - mod.size();
      for (size_t i = 0; i < mod.size(); ++i)
        c[shift + i] = ((c[shift + i] - scale * mod[i]) % q + q) % q;
    }
    c.pop_back();
    gf_trim(c);
    if (c.empty()) break;
  }
  return c;
}

GfPoly gf_powmod(GfPoly base, long e, const GfPoly& mod, long q) {
  GfPoly r = {1};
  while (e > 0) {
    if (e & 1) r = gf_mulmod(r, base, mod, q);
    base = gf_mulmod(base, base, mod, q);
    e >>= 1;
  }
  return r;
}

GfPoly gf_gcd(GfPoly a, GfPoly b, long q) {
  while (!b.empty()) {
    // a mod b
    long inv_lead = 1;
    for (long t = 1; t < q; ++t)
      if (b.back() * t % q == 1) inv_lead = t;
    while (a.size() >= b.size()) {
      long lead = a.back() % q;
      if (lead != 0) {
        long scale = lead * inv_lead % q;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
          a[shift + i] = ((a[shift + i] - scale * b[i]) % q + q) % q;
      }
      a.pop_back();
      gf_trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

GfPoly gf_derivative(const GfPoly& f, long q) {
  if (f.size() <= 1) return {};
  GfPoly d(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) d[i - 1] = (f[i] * static_cast<long>(i % q)) % q;
  gf_trim(d);
  return d;
}

// f irreducible over GF(q)? Requires deg f = deg of the input (monic input,
// so reduction never drops the degree).
bool gf_irreducible(const GfPoly& f, long q) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 0) return false;
  if (n == 1) return true;
  GfPoly d = gf_derivative(f, q);
  if (d.empty()) return false;  // p-th power, not squarefree
  if (gf_gcd(f, d, q).size() > 1) return false;
  // x^(q^n) == x mod f, and gcd(x^(q^(n/r)) - x, f) == 1 for prime r | n.
  GfPoly x = {0, 1};
  GfPoly frob = x;  // x^(q^k) after k steps
  std::vector<GfPoly> powers;  // frobenius iterates, 1-indexed by k
  for (int k = 1; k <= n; ++k) {
    frob = gf_powmod(frob, q, f, q);
    powers.push_back(frob);
  }
  GfPoly diff_n = powers[n - 1];
  // subtract x
  if (diff_n.size() < 2) diff_n.resize(2, 0);
  diff_n[1] = ((diff_n[1] - 1) % q + q) % q;
  gf_trim(diff_n);
  if (!diff_n.empty()) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    GfPoly g = powers[n / r - 1];
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % q + q) % q;
    gf_trim(g);
    if (gf_gcd(f, g, q).size() != 1) return false;
  }
  return true;
}

// Signed divisors of v (both signs), capped; empty when v cannot be fully
// factored by trial division within the cap.
std::vector<BigInt> signed_divisors(const BigInt& v, size_t cap = 4096) {
  std::vector<BigInt> divs;
  BigInt n = abs(v);
  if (n == 0) return divs;
  std::vector<std::pair<BigInt, int>> fac;
  BigInt d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.push_back({d, e});
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (n >= BigInt(1000000) * BigInt(1000000)) return {};  // possibly composite tail
    fac.push_back({n, 1});
  }
  divs.push_back(1);
  for (const auto& [prime, e] : fac) {
    std::vector<BigInt> next;
    BigInt pk = 1;
    for (int k = 0; k <= e; ++k) {
      for (const auto& b : divs) {
        next.push_back(b * pk);
        if (next.size() > cap) return {};
      }
      pk *= prime;
    }
    divs = std::move(next);
  }
  std::vector<BigInt> out;
  out.reserve(divs.size() * 2);
  for (const auto& b : divs) {
    out.push_back(b);
    out.push_back(-b);
  }
  return out;
}

}  // namespace

IrreducibilityResult irreducibility_probe(const IntPoly& p) {
  if (!p.is_monic()) throw Error(Errc::BAD_PARAMS, "irreducibility probe requires a monic polynomial");
  const int n = p.degree();
  if (n <= 0) return {Irreducibility::UNKNOWN, 0, std::nullopt};
  if (n == 1) return {Irreducibility::IRREDUCIBLE, 0, std::nullopt};
  if (p[0] == 0) return {Irreducibility::REDUCIBLE, 0, IntPoly::from_longs({0, 1})};

  // Integer roots divide the constant term (monic polynomial).
  for (const auto& r : signed_divisors(p[0])) {
    if (p.eval(r) == 0)
      return {Irreducibility::REDUCIBLE, 0, IntPoly({-r, BigInt(1)})};
  }

  for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
    GfPoly f = gf_reduce(p, q);
    if (static_cast<int>(f.size()) - 1 != n) continue;  // degree dropped (never for monic)
    if (gf_irreducible(f, q)) return {Irreducibility::IRREDUCIBLE, q, std::nullopt};
  }

  // Monic factors of degree 2 and 3, matched through divisors of p(0), p(1),
  // p(-1). Any monic factor g satisfies g(e) | p(e) at integer points.
  const BigInt p0 = p.eval(BigInt(0)), p1 = p.eval(BigInt(1)), pm1 = p.eval(BigInt(-1));
  auto d1 = signed_divisors(p1);
  auto dm1 = signed_divisors(pm1);
  if (!d1.empty() && !dm1.empty()) {
    if (n >= 4) {
      for (const auto& s : d1) {
        for (const auto& t : dm1) {
          BigInt su = s - t, sv = s + t - 2;
          if (su % 2 != 0 || sv % 2 != 0) continue;
          // g = x^2 + u x + v with g(1) = s, g(-1) = t
          IntPoly g({sv / 2, su / 2, BigInt(1)});
          if (g[0] == 0 || p0 % g[0] != 0) continue;
          if (p.divide_exact(g).has_value())
            return {Irreducibility::REDUCIBLE, 0, g};
        }
      }
    }
    auto d0 = signed_divisors(p0);
    if (n >= 6 && !d0.empty()) {
      for (const auto& c : d0) {
        for (const auto& s : d1) {
          for (const auto& t : dm1) {
            BigInt a2 = s + t - 2 * c, b2 = s - t - 2;
            if (a2 % 2 != 0 || b2 % 2 != 0) continue;
            // g = x^3 + a x^2 + b x + c with g(0) = c, g(1) = s, g(-1) = t
            IntPoly g({c, b2 / 2, a2 / 2, BigInt(1)});
            if (p.divide_exact(g).has_value())
              return {Irreducibility::REDUCIBLE, 0, g};
          }
        }
      }
    }
  }
  return {Irreducibility::UNKNOWN, 0, std::nullopt};
}

std::vector<BigInt> power_sums(const IntPoly& monic, int k) {
  if (!monic.is_monic()) throw Error(Errc::BAD_PARAMS, "power sums require a monic polynomial");
  const int n = monic.degree();
  // e_i with sign: e[i] = (-1)^i * coeff(x^{n-i})
  std::vector<BigInt> e(k + 1, BigInt(0));
  for (int i = 1; i <= k && i <= n; ++i) {
    e[i] = monic[n - i];
    if (i % 2 == 1) e[i] = -e[i];
  }
  std::vector<BigInt> s(k + 1, BigInt(0));
  for (int m = 1; m <= k; ++m) {
    BigInt acc = 0;
    for (int i = 1; i < m; ++i) {
      BigInt term = e[i] * s[m - i];
      acc += (i % 2 == 1) ? term : -term;
    }
    BigInt last = e[m] * m;
    acc += (m % 2 == 1) ? last : -last;
    s[m] = acc;
  }
  s.erase(s.begin());
  return s;
}

}  // namespace sgspec
