#pragma once

// Riemann-Roch space L(G) for G = m(P_2 + ... + P_q), the interior chord
// points taken with multiplicity m. Every function has the shape
//
//   f = (y * g(x, y) + eps * x^m) / x^m,   deg g <= m - 2,
//
// so it is stored by the coefficients of g and the constant eps.

#include <vector>

#include "hermicode/curve.hpp"
#include "hermicode/gf.hpp"

namespace hermicode {

/// x^i y^j.
struct Monomial {
  int i;
  int j;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Monomials with i + j <= m - 2, ordered by total degree, then x-power
/// descending: 1, x, y, x^2, xy, y^2, ...
std::vector<Monomial> monomials(int m);

/// Throws UsageError unless 2 <= m <= q - 1.
void check_multiplicity(int q, int m);

/// m(q - 1).
int divisor_degree(int q, int m);
/// m(m - 1)/2 + 1.
int rr_dimension(int m);

struct RRFunction {
  int m = 2;
  std::vector<Elem> g;  // indexed like monomials(m)
  Elem eps;

  /// Coordinates (eps, g_0, g_1, ...), the message layout used by codes.
  std::vector<Elem> coordinates() const;
  static RRFunction from_coordinates(int m, const std::vector<Elem>& coords);
};

/// The constant 1 followed by y x^i y^j / x^m for each monomial.
std::vector<RRFunction> basis(int q, int m);

/// f(u, v) at P = (u:v:1). Throws UsageError at a pole (u = 0) or a point
/// at infinity.
Elem evaluate(const Field& field, const RRFunction& f, const CurvePoint& pt);

}  // namespace hermicode
