#pragma once

// Double-precision complex evaluation of the closed-form halving formulas,
// including the radical expression for d:
//
//   r = -9 a6 + sqrt(3) sqrt(4 a4^3 + 27 a6^2)
//   d = -a4 (2 / (3r))^(1/3) + (r / 18)^(1/3)
//
// Branches: principal square roots; v is the principal cube root of r / 18
// and the other cube root is paired as 1 / (3v), so the two multiply to 1/3
// and d = -a4 / (3v) + v satisfies d^3 + a4 d + a6 = 0.

#include <array>
#include <complex>
#include <string>

namespace halving {

using Complex = std::complex<double>;

/// -9 a6 +- sqrt(3) sqrt(4 a4^3 + 27 a6^2), principal roots. The minus sign is
/// taken only when it gives the larger |r|; that covers r = 0 and avoids
/// cancellation when |a4| is small next to |a6|. Throws SingularCurve when
/// 4 a4^3 + 27 a6^2 = 0.
Complex resolvent_r(Complex a4, Complex a6);

/// The cube-root pair (v, 1 / (3v)) for a given r.
struct CubeRootPair {
  Complex v;       // principal cube root of r / 18
  Complex paired;  // 1 / (3v), standing for (2 / (3r))^(1/3)
};
CubeRootPair cube_root_pair(Complex r);

/// |d^3 + a4 d + a6|.
double cubic_residual(Complex d, Complex a4, Complex a6);
/// Tolerance used by cardano_d: 1e-9 (1 + |a4| + |a6|).
double cardano_tolerance(Complex a4, Complex a6);

/// Throws DomainError (branch pairing failure) when the residual exceeds
/// cardano_tolerance.
Complex cardano_d(Complex r, Complex a4, Complex a6);

/// e0 = d, e1,2 = (-d +- sqrt(9 d^2 + 4k)) / 2 with k = -(a4 + 3 d^2).
std::array<Complex, 3> numeric_roots(Complex a4, Complex a6);

struct NumericHalving {
  std::array<Complex, 3> roots;       // e0, e1, e2
  std::array<Complex, 4> candidates;  // x11, x12, x21, x22
  std::array<Complex, 4> ys;          // recovered y per candidate
  double residual = 0.0;              // max relative |2Q - P| over candidates
  bool ill_conditioned = false;
  std::string note;
};

/// Runs the whole halving pipeline numerically on y^2 = x^3 + a4 x + a6 and
/// doubles each candidate back. Throws NotOnCurve if P misses the curve by
/// more than 1e-12 relative.
NumericHalving verify_halving_numeric(Complex a4, Complex a6, Complex x0, Complex y0);

/// Parses "1.5", "-2i", "3-4i", "2+0.5i".
Complex parse_complex(const std::string& s);

}  // namespace halving
