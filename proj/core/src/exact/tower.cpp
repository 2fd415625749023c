#include "curvcert/exact/tower.hpp"

#include <cmath>
#include <utility>

#include "curvcert/errors.hpp"

namespace curvcert::exact {

TowerContext::TowerContext(GaussRational a, GaussRational b) {
  GaussRational ab = a * b;
  auto k = a.sqrt();
  auto l = b.sqrt();
  std::optional<GaussRational> kl;
  if (!k && !l) {
    if (auto t = ab.sqrt()) {
      // sign of kappa lambda from the principal roots
      const auto prod = std::sqrt(a.to_complex()) * std::sqrt(b.to_complex());
      const auto tc = t->to_complex();
      kl = std::abs(prod - tc) < std::abs(prod + tc) ? *t : -*t;
    }
  }
  d_ = std::make_shared<const Data>(Data{std::move(a), std::move(b), std::move(ab), k, l, kl});
}

TowerContext make_context(const GaussRational& a, const GaussRational& b) {
  if (a.is_zero()) throw DegenerateTower("kappa^2 = 0: singular points collide at the origin");
  if (b.is_zero()) throw DegenerateTower("lambda^2 = 0: singular points collide at the origin");
  if (a == b) throw DegenerateTower("kappa^2 = lambda^2: singular points collide");
  return TowerContext(a, b);
}

TowerScalar::TowerScalar(TowerContext ctx) : ctx_(std::move(ctx)) {}

TowerScalar::TowerScalar(TowerContext ctx, GaussRational c00) : ctx_(std::move(ctx)) {
  c_[0] = std::move(c00);
}

TowerScalar::TowerScalar(TowerContext ctx, GaussRational c00, GaussRational c10, GaussRational c01,
                         GaussRational c11)
    : ctx_(std::move(ctx)), c_{std::move(c00), std::move(c10), std::move(c01), std::move(c11)} {
  reduce();
}

void TowerScalar::reduce() {
  if (!ctx_.split()) return;
  auto& c = c_;
  if (const auto& k = ctx_.kappa_value()) {
    c[0] += c[1] * *k;
    c[2] += c[3] * *k;
    c[1] = c[3] = GaussRational();
  }
  if (const auto& l = ctx_.lambda_value()) {
    c[0] += c[2] * *l;
    c[1] += c[3] * *l;
    c[2] = c[3] = GaussRational();
  }
  if (const auto& t = ctx_.kappa_lambda_value()) {
    // lambda = (t / a) kappa
    c[0] += c[3] * *t;
    c[1] += c[2] * (*t / ctx_.a());
    c[2] = c[3] = GaussRational();
  }
}

TowerScalar TowerScalar::kappa(const TowerContext& ctx) { return {ctx, 0, 1, 0, 0}; }
TowerScalar TowerScalar::lambda(const TowerContext& ctx) { return {ctx, 0, 0, 1, 0}; }

bool TowerScalar::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool TowerScalar::is_one() const {
  return c_[0] == GaussRational(1) && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

std::optional<GaussRational> TowerScalar::as_gauss() const {
  if (c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero()) return c_[0];
  return std::nullopt;
}

void TowerScalar::check_same(const TowerScalar& o) const {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch("tower scalars from different contexts");
}

bool operator==(const TowerScalar& x, const TowerScalar& y) {
  x.check_same(y);
  return x.c_ == y.c_;
}

TowerScalar TowerScalar::operator-() const {
  TowerScalar r(ctx_);
  for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
  return r;
}

TowerScalar& TowerScalar::operator+=(const TowerScalar& o) {
  check_same(o);
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

TowerScalar& TowerScalar::operator-=(const TowerScalar& o) {
  check_same(o);
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

TowerScalar& TowerScalar::operator*=(const GaussRational& g) {
  for (auto& c : c_) c *= g;
  return *this;
}

TowerScalar& TowerScalar::operator*=(const TowerScalar& o) {
  check_same(o);
  if (auto g = o.as_gauss()) return *this *= *g;
  if (auto g = as_gauss()) {
    GaussRational s = *g;
    c_ = o.c_;
    return *this *= s;
  }
  const auto& x = c_;
  const auto& y = o.c_;
  const auto& a = ctx_.a();
  const auto& b = ctx_.b();
  GaussRational r00 = x[0] * y[0] + a * (x[1] * y[1]) + b * (x[2] * y[2]) + ctx_.ab() * (x[3] * y[3]);
  GaussRational r10 = x[0] * y[1] + x[1] * y[0] + b * (x[2] * y[3] + x[3] * y[2]);
  GaussRational r01 = x[0] * y[2] + x[2] * y[0] + a * (x[1] * y[3] + x[3] * y[1]);
  GaussRational r11 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
  c_ = {std::move(r00), std::move(r10), std::move(r01), std::move(r11)};
  reduce();
  return *this;
}

TowerScalar TowerScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("tower division by zero");
  if (auto g = as_gauss()) return TowerScalar(ctx_, g->inverse());
  if (ctx_.split()) {
    // reduced: c0 + c g with a single generator g left, g^2 = G not a square
    const int k = c_[1].is_zero() ? 2 : 1;
    const GaussRational& G = k == 1 ? ctx_.a() : ctx_.b();
    const GaussRational n = c_[0] * c_[0] - c_[k] * c_[k] * G;
    TowerScalar r(ctx_, c_[0] / n);
    r.c_[k] = -c_[k] / n;
    return r;
  }
  const auto& x = c_;
  const auto& a = ctx_.a();
  const auto& b = ctx_.b();
  const auto& ab = ctx_.ab();
  // Column j holds the coordinates of x * basis_j; solve M y = e0.
  std::array<std::array<GaussRational, 5>, 4> m;
  std::array<std::array<GaussRational, 4>, 4> cols = {{
      {x[0], x[1], x[2], x[3]},
      {a * x[1], x[0], a * x[3], x[2]},
      {b * x[2], b * x[3], x[0], x[1]},
      {ab * x[3], b * x[2], a * x[1], x[0]},
  }};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = cols[c][r];
    m[r][4] = GaussRational(r == 0 ? 1 : 0);
  }
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw NotInvertible("tower element is a zero divisor: " + to_string());
    std::swap(m[c], m[piv]);
    GaussRational inv = m[c][c].inverse();
    for (int k = c; k < 5; ++k) m[c][k] *= inv;
    for (int r = 0; r < 4; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      GaussRational f = m[r][c];
      for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return {ctx_, m[0][4], m[1][4], m[2][4], m[3][4]};
}

bool TowerScalar::is_unit() const {
  if (is_zero()) return false;
  try {
    (void)inverse();
    return true;
  } catch (const NotInvertible&) {
    return false;
  }
}

TowerScalar& TowerScalar::operator/=(const TowerScalar& o) {
  check_same(o);
  if (auto g = o.as_gauss()) {
    if (g->is_zero()) throw DivisionByZero("tower division by zero");
    return *this *= g->inverse();
  }
  return *this *= o.inverse();
}

std::string TowerScalar::to_string() const {
  return c_[0].to_string() + " + " + c_[1].to_string() + "κ + " + c_[2].to_string() + "λ + " +
         c_[3].to_string() + "κλ";
}

TowerScalar pow(const TowerScalar& x, int k) {
  if (k < 0) return pow(x.inverse(), -k);
  TowerScalar r(x.context(), 1), b = x;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::optional<Rational> is_real_rational(const TowerScalar& x) {
  auto g = x.as_gauss();
  if (!g || !g->is_real()) return std::nullopt;
  return g->re();
}

std::complex<double> embed_complex(const TowerScalar& x, Branch branch) {
  std::complex<double> k = std::sqrt(x.context().a().to_complex()) * double(branch.kappa_sign);
  std::complex<double> l = std::sqrt(x.context().b().to_complex()) * double(branch.lambda_sign);
  return x.c00().to_complex() + x.c10().to_complex() * k + x.c01().to_complex() * l +
         x.c11().to_complex() * k * l;
}

std::optional<GaussRational> embed_exact(const TowerScalar& x, Branch branch) {
  auto k = x.context().a().sqrt();
  auto l = x.context().b().sqrt();
  if (!k || !l) return std::nullopt;
  GaussRational kk = *k * GaussRational(branch.kappa_sign);
  GaussRational ll = *l * GaussRational(branch.lambda_sign);
  return x.c00() + x.c10() * kk + x.c01() * ll + x.c11() * kk * ll;
}

TowerScalar apply_signs(const TowerScalar& x, int sk, int sl, bool conjugate_i) {
  const auto& ctx = x.context();
  if (conjugate_i && (!ctx.a().is_real() || !ctx.b().is_real()))
    throw ContextMismatch("complex conjugation is an automorphism only for real kappa^2, lambda^2");
  auto f = [&](const GaussRational& g) { return conjugate_i ? g.conj() : g; };
  return {ctx, f(x.c00()), f(x.c10()) * GaussRational(sk), f(x.c01()) * GaussRational(sl),
          f(x.c11()) * GaussRational(sk * sl)};
}

}  // namespace curvcert::exact
