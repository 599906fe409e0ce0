#include "pluri/core.hpp"

#include <cmath>
#include <sstream>

namespace pluri {

CPoint::CPoint(CVec coords) : coords_(std::move(coords)) {
  if (coords_.size() < 1) throw DomainError("CPoint: dimension must be >= 1");
  for (Eigen::Index j = 0; j < coords_.size(); ++j) {
    const cplx c = coords_[j];
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      std::ostringstream os;
      os << "CPoint: non-finite coordinate at index " << j;
      throw DomainError(os.str());
    }
    normSq_ += std::norm(c);
    quadSum_ += c * c;
  }
}

CPoint CPoint::fromReal(const RVec& x) { return CPoint(x.cast<cplx>()); }

CPoint CPoint::fromParts(const RVec& re, const RVec& im) {
  if (re.size() != im.size()) throw DomainError("CPoint: real/imag size mismatch");
  CVec c(re.size());
  for (Eigen::Index j = 0; j < re.size(); ++j) c[j] = cplx(re[j], im[j]);
  return CPoint(std::move(c));
}

CPoint quadAndNorm(std::span<const cplx> z) {
  CVec c(static_cast<Eigen::Index>(z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) c[static_cast<Eigen::Index>(j)] = z[j];
  return CPoint(std::move(c));
}

double joukowskiInverse(double t) {
  if (!(t >= 1.0)) throw DomainError("joukowskiInverse: requires t >= 1");
  if (std::isinf(t)) return t;
  // (t-1)(t+1) keeps full relative accuracy near t = 1.
  return t + std::sqrt((t - 1.0) * (t + 1.0));
}

double logJoukowskiInverse1p(double delta) {
  if (delta <= 0.0) return 0.0;
  return std::log1p(delta + std::sqrt(delta * (2.0 + delta)));
}

double gramDefect(const RVec& a, const RVec& b) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j)
    for (Eigen::Index k = j + 1; k < a.size(); ++k) {
      const double m = a[j] * b[k] - a[k] * b[j];
      s += m * m;
    }
  return s;
}

HermitianForm makeHermitianForm(Eigen::MatrixXcd raw) {
  HermitianForm out;
  out.hermitianDefect = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  out.entries = 0.5 * (raw + raw.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(out.entries, Eigen::EigenvaluesOnly);
  out.eigenvalues = es.eigenvalues();
  return out;
}

namespace {

// Real Hessian in the 2n coordinates (x_1..x_n, y_1..y_n).
Eigen::MatrixXd realHessian(const Evaluator& f, const CPoint& z, double h) {
  const Eigen::Index n = z.dim();
  const Eigen::Index m = 2 * n;
  RVec base(m);
  base << z.re(), z.im();

  auto eval = [&](const RVec& p) {
    CPoint node = CPoint::fromParts(p.head(n), p.tail(n));
    const double v = f(node);
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "wirtingerHessianFD: evaluator is non-finite at a stencil node (step " << h << ")";
      throw SingularityError(os.str(), std::move(node));
    }
    return v;
  };

  const double f0 = eval(base);
  Eigen::MatrixXd H(m, m);
  RVec p = base;
  for (Eigen::Index a = 0; a < m; ++a) {
    p[a] = base[a] + h;
    const double fp = eval(p);
    p[a] = base[a] - h;
    const double fm = eval(p);
    p[a] = base[a];
    H(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = a + 1; b < m; ++b) {
      p[a] = base[a] + h; p[b] = base[b] + h;
      const double fpp = eval(p);
      p[b] = base[b] - h;
      const double fpm = eval(p);
      p[a] = base[a] - h;
      const double fmm = eval(p);
      p[b] = base[b] + h;
      const double fmp = eval(p);
      p[a] = base[a]; p[b] = base[b];
      H(a, b) = H(b, a) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  }
  return H;
}

Eigen::MatrixXcd wirtingerFromReal(const Eigen::MatrixXd& R, Eigen::Index n) {
  Eigen::MatrixXcd W(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) {
      const double re = 0.25 * (R(j, k) + R(n + j, n + k));
      const double im = 0.25 * (R(j, n + k) - R(n + j, k));
      W(j, k) = cplx(re, im);
    }
  return W;
}

}  // namespace

HermitianForm wirtingerHessianFD(const Evaluator& f, const CPoint& z, FdOptions opt) {
  if (!(opt.step > 0.0) || !std::isfinite(opt.step))
    throw DomainError("wirtingerHessianFD: step must be positive");
  const Eigen::Index n = z.dim();
  Eigen::MatrixXd R = realHessian(f, z, opt.step);
  if (opt.richardson) {
    const Eigen::MatrixXd R2 = realHessian(f, z, 0.5 * opt.step);
    R = (4.0 * R2 - R) / 3.0;
  }
  return makeHermitianForm(wirtingerFromReal(R, n));
}

}  // namespace pluri
