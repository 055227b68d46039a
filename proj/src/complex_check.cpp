#include "halving/complex_check.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>
#include <stdexcept>

#include "halving/errors.hpp"

namespace halving {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex checked(Complex z, const char* what) {
  if (!finite(z)) throw DomainError(std::string("non-finite value in ") + what);
  return z;
}

}  // namespace

Complex resolvent_r(Complex a4, Complex a6) {
  const Complex disc = 4.0 * a4 * a4 * a4 + 27.0 * a6 * a6;
  if (disc == 0.0) throw SingularCurve("singular curve: 4 a4^3 + 27 a6^2 = 0");
  const Complex root = std::sqrt(3.0) * std::sqrt(disc);
  const Complex plus = -9.0 * a6 + root;
  const Complex minus = -9.0 * a6 - root;
  return checked(std::abs(minus) > std::abs(plus) ? minus : plus, "resolvent_r");
}

CubeRootPair cube_root_pair(Complex r) {
  if (r == 0.0) throw DomainError("cube_root_pair needs r != 0");
  const Complex v = std::pow(r / 18.0, 1.0 / 3.0);
  return {v, 1.0 / (3.0 * v)};
}

double cubic_residual(Complex d, Complex a4, Complex a6) {
  return std::abs(d * d * d + a4 * d + a6);
}

double cardano_tolerance(Complex a4, Complex a6) {
  return 1e-9 * (1.0 + std::abs(a4) + std::abs(a6));
}

Complex cardano_d(Complex r, Complex a4, Complex a6) {
  const auto [v, paired] = cube_root_pair(r);
  const Complex d = checked(-a4 * paired + v, "cardano_d");
  const double res = cubic_residual(d, a4, a6);
  if (!(res <= cardano_tolerance(a4, a6))) {
    throw DomainError("cube-root branch pairing failed: residual " + std::to_string(res));
  }
  return d;
}

std::array<Complex, 3> numeric_roots(Complex a4, Complex a6) {
  const Complex d = cardano_d(resolvent_r(a4, a6), a4, a6);
  const Complex k = -(a4 + 3.0 * d * d);
  const Complex s = std::sqrt(9.0 * d * d + 4.0 * k);
  return {d, (-d + s) / 2.0, (-d - s) / 2.0};
}

NumericHalving verify_halving_numeric(Complex a4, Complex a6, Complex x0, Complex y0) {
  auto rhs = [&](Complex x) { return (x * x + a4) * x + a6; };
  const double scale = 1.0 + std::norm(y0) + std::pow(std::abs(x0), 3) +
                       std::abs(a4) * std::abs(x0) + std::abs(a6);
  if (std::abs(y0 * y0 - rhs(x0)) > 1e-12 * scale) {
    throw NotOnCurve("point is not on the curve within 1e-12 relative");
  }

  NumericHalving out;
  out.roots = numeric_roots(a4, a6);
  const auto& [e0, e1, e2] = out.roots;
  const Complex gamma = std::sqrt(x0 - e0);
  const Complex alpha = std::sqrt(x0 - e1);
  const Complex beta = std::sqrt(x0 - e2);
  const Complex ab = alpha * beta;
  const Complex plus = gamma * (alpha + beta);
  const Complex minus = gamma * (alpha - beta);
  out.candidates = {x0 + ab + plus, x0 + ab - plus, x0 - ab + minus, x0 - ab - minus};

  const Complex disc = 4.0 * a4 * a4 * a4 + 27.0 * a6 * a6;
  const double disc_scale = 4.0 * std::pow(std::abs(a4), 3) + 27.0 * std::norm(a6);
  if (std::abs(disc) < 1e-8 * disc_scale) {
    out.ill_conditioned = true;
    out.note = "curve is close to singular";
  }

  auto residual_of = [&](Complex x, Complex y) {
    if (y == 0.0) return y0 == 0.0 ? 0.0 : INFINITY;  // 2Q would be infinity
    const Complex lambda = (3.0 * x * x + a4) / (2.0 * y);
    const Complex x2 = lambda * lambda - 2.0 * x;
    const Complex y2 = lambda * (x - x2) - y;
    const double rx = std::abs(x2 - x0) / std::max(1.0, std::abs(x0));
    const double ry = std::abs(y2 - y0) / std::max(1.0, std::abs(y0));
    return std::max(rx, ry);
  };

  for (std::size_t i = 0; i < 4; ++i) {
    const Complex x = out.candidates[i];
    const Complex y = std::sqrt(rhs(x));
    if (std::abs(y) < 1e-8 * (1.0 + std::abs(x)) && y0 != 0.0) {
      out.ill_conditioned = true;
      out.note = "candidate close to a 2-torsion point";
    }
    const double r_pos = residual_of(x, y);
    const double r_neg = residual_of(x, -y);
    out.ys[i] = r_pos <= r_neg ? y : -y;
    out.residual = std::max(out.residual, std::min(r_pos, r_neg));
  }
  if (!std::isfinite(out.residual)) throw DomainError("numeric halving produced a non-finite residual");
  return out;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s), [](char c) { return c != ' '; });
  if (s.empty()) throw std::invalid_argument("empty complex number");

  auto parse_real = [&](const std::string& part) {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t used = 0;
    const double v = std::stod(part, &used);
    if (used != part.size()) throw std::invalid_argument("bad complex number: '" + text + "'");
    return v;
  };

  if (s.back() != 'i') return {parse_real(s), 0.0};
  s.pop_back();
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(s)};
  return {parse_real(s.substr(0, split)), parse_real(s.substr(split))};
}

}  // namespace halving
