#include "sgspec/matrix.hpp"

#include <cassert>

#include "sgspec/error.hpp"

namespace sgspec {

QuadMatrix QuadMatrix::identity(int n) {
  QuadMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Quad(1);
  return m;
}

bool QuadMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool QuadMatrix::is_integer() const {
  for (const auto& v : e_)
    if (!v.is_rational() || v.a().get_den() != 1) return false;
  return true;
}

long QuadMatrix::field() const {
  long m = 0;
  for (const auto& v : e_) {
    if (v.m() == 0) continue;
    if (m == 0) m = v.m();
    else if (m != v.m())
      throw Error(Errc::FIELD_MISMATCH, "matrix entries span two quadratic fields");
  }
  return m;
}

QuadMatrix operator+(const QuadMatrix& l, const QuadMatrix& r) {
  if (l.rows_ != r.rows_ || l.cols_ != r.cols_) throw Error(Errc::BAD_PARAMS, "matrix shape mismatch");
  QuadMatrix out(l.rows_, l.cols_);
  for (size_t i = 0; i < l.e_.size(); ++i) out.e_[i] = l.e_[i] + r.e_[i];
  return out;
}

QuadMatrix operator-(const QuadMatrix& l, const QuadMatrix& r) {
  if (l.rows_ != r.rows_ || l.cols_ != r.cols_) throw Error(Errc::BAD_PARAMS, "matrix shape mismatch");
  QuadMatrix out(l.rows_, l.cols_);
  for (size_t i = 0; i < l.e_.size(); ++i) out.e_[i] = l.e_[i] - r.e_[i];
  return out;
}

QuadMatrix operator*(const QuadMatrix& l, const QuadMatrix& r) {
  if (l.cols_ != r.rows_) throw Error(Errc::BAD_PARAMS, "matrix shape mismatch");
  QuadMatrix out(l.rows_, r.cols_);
  for (int i = 0; i < l.rows_; ++i)
    for (int k = 0; k < l.cols_; ++k) {
      const Quad& lv = l.at(i, k);
      if (lv.is_zero()) continue;
      for (int j = 0; j < r.cols_; ++j) out.at(i, j) += lv * r.at(k, j);
    }
  return out;
}

QuadMatrix QuadMatrix::scaled(const Quad& s) const {
  QuadMatrix out(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
  return out;
}

namespace {

// Element of Z[sqrt m]; m is carried by the elimination context.
struct ZQ {
  BigInt a, b;
  bool is_zero() const { return a == 0 && b == 0; }
};

struct ZCtx {
  long m;

  ZQ mul(const ZQ& x, const ZQ& y) const {
    ZQ r;
    r.a = x.a * y.a + x.b * y.b * m;
    r.b = x.a * y.b + x.b * y.a;
    return r;
  }
  ZQ sub(const ZQ& x, const ZQ& y) const { return {x.a - y.a, x.b - y.b}; }

  int sign(const ZQ& x) const {
    const int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    BigInt a2 = x.a * x.a, mb2 = x.b * x.b * m;
    const int c = cmp(a2, mb2);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
  }

  // Exact division in Z[sqrt m]; Bareiss guarantees exactness (quotients are
  // minors of the cleared matrix), asserted here.
  ZQ divexact(const ZQ& x, const ZQ& y) const {
    BigInt norm = y.a * y.a - y.b * y.b * m;
    ZQ conj{y.a, -y.b};
    ZQ num = mul(x, conj);
    ZQ r;
    BigInt rem;
    mpz_tdiv_qr(r.a.get_mpz_t(), rem.get_mpz_t(), num.a.get_mpz_t(), norm.get_mpz_t());
    assert(rem == 0 && "non-exact Bareiss division");
    mpz_tdiv_qr(r.b.get_mpz_t(), rem.get_mpz_t(), num.b.get_mpz_t(), norm.get_mpz_t());
    assert(rem == 0 && "non-exact Bareiss division");
    return r;
  }

  Quad to_quad(const ZQ& x) const { return Quad(Rational(x.a), Rational(x.b), x.b == 0 ? 0 : m); }
};

// Denominator-cleared copy: entries scaled by the (positive) lcm of all
// denominators, which changes neither rank nor PSD-ness.
std::vector<std::vector<ZQ>> cleared(const QuadMatrix& mat, ZCtx& ctx) {
  ctx.m = mat.field();
  BigInt den = 1;
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = 0; j < mat.cols(); ++j) {
      const Quad& v = mat.at(i, j);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.a().get_den().get_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.b().get_den().get_mpz_t());
    }
  std::vector<std::vector<ZQ>> z(mat.rows(), std::vector<ZQ>(mat.cols()));
  Rational scale((den));
  for (int i = 0; i < mat.rows(); ++i)
    for (int j = 0; j < mat.cols(); ++j) {
      Rational a = mat.at(i, j).a() * scale;
      Rational b = mat.at(i, j).b() * scale;
      assert(a.get_den() == 1 && b.get_den() == 1);
      z[i][j] = {a.get_num(), b.get_num()};
    }
  return z;
}

}  // namespace

int rank_exact(const QuadMatrix& mat) {
  if (mat.rows() == 0 || mat.cols() == 0) return 0;
  ZCtx ctx{};
  auto M = cleared(mat, ctx);
  const int rows = mat.rows(), cols = mat.cols();
  ZQ prev{BigInt(1), BigInt(0)};
  int r = 0;
  std::vector<int> colperm(cols);
  for (int j = 0; j < cols; ++j) colperm[j] = j;
  while (r < rows && r < cols) {
    int pi = -1, pj = -1;
    for (int i = r; i < rows && pi < 0; ++i)
      for (int j = r; j < cols; ++j)
        if (!M[i][colperm[j]].is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    std::swap(M[r], M[pi]);
    std::swap(colperm[r], colperm[pj]);
    const ZQ pivot = M[r][colperm[r]];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = r + 1; j < cols; ++j) {
        ZQ& t = M[i][colperm[j]];
        t = ctx.divexact(ctx.sub(ctx.mul(pivot, t), ctx.mul(M[i][colperm[r]], M[r][colperm[j]])), prev);
      }
      M[i][colperm[r]] = ZQ{BigInt(0), BigInt(0)};
    }
    prev = pivot;
    ++r;
  }
  return r;
}

namespace {

// Exact field LDLT on a small principal submatrix to extract an explicit
// negative-direction witness once the fast Bareiss scan fails.
// Returns x (length = sub.size()) with x^T M_sub x = value < 0.
std::pair<std::vector<Quad>, Quad> negative_witness(const QuadMatrix& orig,
                                                    const std::vector<int>& sub,
                                                    bool indefinite_pair) {
  const int k = static_cast<int>(sub.size());
  QuadMatrix w(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) w.at(i, j) = orig.at(sub[i], sub[j]);
  // transform: w' = E w E^T, E starts as identity
  QuadMatrix e = QuadMatrix::identity(k);
  int last = k - 1 - (indefinite_pair ? 1 : 0);
  for (int t = 0; t < last; ++t) {
    const Quad d = w.at(t, t);
    for (int i = t + 1; i < k; ++i) {
      if (w.at(i, t).is_zero()) continue;
      Quad f = w.at(i, t) / d;
      for (int j = 0; j < k; ++j) {
        w.at(i, j) = w.at(i, j) - f * w.at(t, j);
        e.at(i, j) = e.at(i, j) - f * e.at(t, j);
      }
      for (int j = 0; j < k; ++j) w.at(j, i) = w.at(j, i) - f * w.at(j, t);
    }
  }
  std::vector<Quad> y(k);
  if (!indefinite_pair) {
    y[k - 1] = Quad(1);
  } else {
    // trailing 2x2 block [[0, r],[r, s]]: (alpha, 1) with alpha = -(s+1)/(2r)
    const Quad r = w.at(k - 2, k - 1);
    const Quad s = w.at(k - 1, k - 1);
    y[k - 2] = -(s + Quad(1)) / (Quad(2) * r);
    y[k - 1] = Quad(1);
  }
  // x = E^T y
  std::vector<Quad> x(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) x[i] += e.at(j, i) * y[j];
  // exact check of the certificate value
  Quad val;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) val += x[i] * orig.at(sub[i], sub[j]) * x[j];
  return {std::move(x), val};
}

}  // namespace

PsdOutcome psd_ldlt(const QuadMatrix& mat) {
  if (!mat.is_symmetric()) throw Error(Errc::NOT_SYMMETRIC, "psd_ldlt requires a symmetric matrix");
  PsdOutcome out;
  const int n = mat.rows();
  if (n == 0) {
    out.psd = true;
    return out;
  }
  ZCtx ctx{};
  auto M = cleared(mat, ctx);
  ZQ prev{BigInt(1), BigInt(0)};
  std::vector<int> used;  // pivot indices, in processing order
  auto fail = [&](const std::vector<int>& sub, bool pair) {
    auto [x, val] = negative_witness(mat, sub, pair);
    out.psd = false;
    out.witness.assign(n, Quad());
    for (size_t i = 0; i < sub.size(); ++i) out.witness[sub[i]] = x[i];
    out.witness_value = val;
    assert(out.witness_value.sign() < 0);
  };

  for (int k = 0; k < n; ++k) {
    const int sd = ctx.sign(M[k][k]);
    if (sd < 0) {
      auto sub = used;
      sub.push_back(k);
      fail(sub, false);
      return out;
    }
    if (sd == 0) {
      int bad = -1;
      for (int j = k + 1; j < n && bad < 0; ++j)
        if (!M[k][j].is_zero()) bad = j;
      if (bad >= 0) {
        // [[0, r],[r, *]] minor is indefinite
        auto sub = used;
        sub.push_back(k);
        sub.push_back(bad);
        fail(sub, true);
        return out;
      }
      continue;  // zero row: PSD-compatible, skip without touching prev
    }
    const ZQ pivot = M[k][k];
    out.pivots.push_back(ctx.to_quad(pivot) / ctx.to_quad(prev));
    for (int i = k + 1; i < n; ++i) {
      if (M[i][k].is_zero() && M[k][i].is_zero()) continue;
      for (int j = k + 1; j < n; ++j)
        M[i][j] = ctx.divexact(ctx.sub(ctx.mul(pivot, M[i][j]), ctx.mul(M[i][k], M[k][j])), prev);
      M[i][k] = ZQ{BigInt(0), BigInt(0)};
    }
    prev = pivot;
    used.push_back(k);
  }
  out.psd = true;
  out.rank = static_cast<int>(used.size());
  return out;
}

IntPoly char_poly(const QuadMatrix& mat) {
  if (mat.rows() != mat.cols()) throw Error(Errc::BAD_PARAMS, "char_poly requires a square matrix");
  if (!mat.is_integer()) throw Error(Errc::NON_INTEGER_ENTRIES, "char_poly requires integer entries");
  const int n = mat.rows();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = mat.at(i, j).a().get_num();

  // Faddeev-LeVerrier: M_k = A*N_{k-1}, c_k = -tr(M_k)/k, N_k = M_k + c_k I.
  std::vector<BigInt> coeff(n + 1, BigInt(0));
  coeff[n] = 1;
  std::vector<std::vector<BigInt>> nmat(n, std::vector<BigInt>(n, BigInt(0)));
  for (int i = 0; i < n; ++i) nmat[i][i] = 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt acc = 0;
        for (int t = 0; t < n; ++t)
          if (a[i][t] != 0) acc += a[i][t] * nmat[t][j];
        m[i][j] = acc;
      }
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    BigInt ck, rem;
    BigInt divisor(k);
    mpz_tdiv_qr(ck.get_mpz_t(), rem.get_mpz_t(), tr.get_mpz_t(), divisor.get_mpz_t());
    assert(rem == 0 && "Faddeev-LeVerrier trace division must be exact");
    ck = -ck;
    coeff[n - k] = ck;
    nmat = m;
    for (int i = 0; i < n; ++i) nmat[i][i] += ck;
  }
  return IntPoly(std::move(coeff));
}

}  // namespace sgspec
