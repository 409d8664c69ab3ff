#include "nehari/profile.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nehari {

PsiProfile PsiProfile::euclidean() {
  PsiProfile p;
  p.kind_ = ProfileKind::Euclidean;
  return p;
}

PsiProfile PsiProfile::hyperbolic(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("hyperbolic profile needs alpha > 0");
  PsiProfile p;
  p.kind_ = ProfileKind::Hyperbolic;
  p.alpha_ = alpha;
  return p;
}

PsiProfile PsiProfile::blended(GrowthLaw law, double a, double b, double r0) {
  if (!(a >= 1.0)) throw std::invalid_argument("blended profile needs a >= 1");
  const bool uses_b = (law == GrowthLaw::PolyExp || law == GrowthLaw::PolyExpPower);
  if (uses_b && !(b > 0.0))
    throw std::invalid_argument("polynomial-prefactor laws need b > 0");
  if (!uses_b && b != 0.0)
    throw std::invalid_argument("this growth law takes no polynomial exponent b");
  if (!(r0 > 0.0)) throw std::invalid_argument("blended profile needs r0 > 0");
  PsiProfile p;
  p.kind_ = ProfileKind::Blended;
  p.law_ = law;
  p.a_ = a;
  p.b_ = b;
  p.r0_ = r0;
  return p;
}

double PsiProfile::target(double r) const {
  switch (law_) {
    case GrowthLaw::ExpLinear: return std::exp(a_ * r);
    case GrowthLaw::ExpPower: return std::exp(std::pow(r, a_));
    case GrowthLaw::PolyExp: return std::pow(r, b_) * std::exp(a_ * r);
    case GrowthLaw::PolyExpPower: return std::pow(r, b_) * std::exp(std::pow(r, a_));
  }
  return 0.0;
}

double PsiProfile::dtarget(double r) const {
  switch (law_) {
    case GrowthLaw::ExpLinear:
      return a_ * std::exp(a_ * r);
    case GrowthLaw::ExpPower:
      return a_ * std::pow(r, a_ - 1.0) * std::exp(std::pow(r, a_));
    case GrowthLaw::PolyExp:
      return (b_ / r + a_) * target(r);
    case GrowthLaw::PolyExpPower:
      return (b_ / r + a_ * std::pow(r, a_ - 1.0)) * target(r);
  }
  return 0.0;
}

double PsiProfile::ddtarget(double r) const {
  switch (law_) {
    case GrowthLaw::ExpLinear:
      return a_ * a_ * std::exp(a_ * r);
    case GrowthLaw::ExpPower: {
      const double q = a_ * std::pow(r, a_ - 1.0);  // (r^a)'
      return (q * q + a_ * (a_ - 1.0) * std::pow(r, a_ - 2.0)) * target(r);
    }
    case GrowthLaw::PolyExp: {
      const double q = b_ / r + a_;  // (log target)'
      return (q * q - b_ / (r * r)) * target(r);
    }
    case GrowthLaw::PolyExpPower: {
      const double q = b_ / r + a_ * std::pow(r, a_ - 1.0);
      const double dq = -b_ / (r * r) + a_ * (a_ - 1.0) * std::pow(r, a_ - 2.0);
      return (q * q + dq) * target(r);
    }
  }
  return 0.0;
}

namespace {

// Quintic smoothstep on [0,1]: s(0)=0, s(1)=1, s'=s''=0 at both ends.
inline double smooth5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }
inline double dsmooth5(double t) { return 30.0 * t * t * (1.0 + t * (-2.0 + t)); }
inline double ddsmooth5(double t) { return 60.0 * t * (1.0 + t * (-3.0 + 2.0 * t)); }

}  // namespace

double PsiProfile::psi(double r) const {
  switch (kind_) {
    case ProfileKind::Euclidean:
      return r;
    case ProfileKind::Hyperbolic:
      return std::sinh(alpha_ * r) / alpha_;
    case ProfileKind::Blended: {
      if (r <= r0_) return std::sinh(r);
      if (r >= 2.0 * r0_) return target(r);
      const double t = (r - r0_) / r0_;
      const double s = smooth5(t);
      return (1.0 - s) * std::sinh(r) + s * target(r);
    }
  }
  return 0.0;
}

double PsiProfile::dpsi(double r) const {
  switch (kind_) {
    case ProfileKind::Euclidean:
      return 1.0;
    case ProfileKind::Hyperbolic:
      return std::cosh(alpha_ * r);
    case ProfileKind::Blended: {
      if (r <= r0_) return std::cosh(r);
      if (r >= 2.0 * r0_) return dtarget(r);
      const double t = (r - r0_) / r0_;
      const double s = smooth5(t);
      const double ds = dsmooth5(t) / r0_;
      return (1.0 - s) * std::cosh(r) + s * dtarget(r) + ds * (target(r) - std::sinh(r));
    }
  }
  return 0.0;
}

double PsiProfile::ddpsi(double r) const {
  switch (kind_) {
    case ProfileKind::Euclidean:
      return 0.0;
    case ProfileKind::Hyperbolic:
      return alpha_ * std::sinh(alpha_ * r);
    case ProfileKind::Blended: {
      if (r <= r0_) return std::sinh(r);
      if (r >= 2.0 * r0_) return ddtarget(r);
      const double t = (r - r0_) / r0_;
      const double s = smooth5(t);
      const double ds = dsmooth5(t) / r0_;
      const double dds = ddsmooth5(t) / (r0_ * r0_);
      return (1.0 - s) * std::sinh(r) + s * ddtarget(r) +
             2.0 * ds * (dtarget(r) - std::cosh(r)) + dds * (target(r) - std::sinh(r));
    }
  }
  return 0.0;
}

double PsiProfile::phi(double r) const {
  if (r < 1e-12) return 1.0;
  return psi(r) / r;
}

std::string PsiProfile::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ProfileKind::Euclidean:
      os << "euclidean";
      break;
    case ProfileKind::Hyperbolic:
      os << "hyperbolic(alpha=" << alpha_ << ")";
      break;
    case ProfileKind::Blended:
      os << "blended(";
      switch (law_) {
        case GrowthLaw::ExpLinear: os << "e^{a r}"; break;
        case GrowthLaw::ExpPower: os << "e^{r^a}"; break;
        case GrowthLaw::PolyExp: os << "r^b e^{a r}"; break;
        case GrowthLaw::PolyExpPower: os << "r^b e^{r^a}"; break;
      }
      os << ", a=" << a_ << ", b=" << b_ << ", r0=" << r0_ << ")";
      break;
  }
  return os.str();
}

}  // namespace nehari
