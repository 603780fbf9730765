#pragma once

// The Hermitian curve X2^q X3 + X2 X3^q - X1^{q+1} = 0 over F_{q^2}, the
// cyclic two-point stabilizer acting as diag(lambda, lambda^{q+1}, 1), and
// the rational curves C_tau : X2 X3^q = tau X1^{q+1} carrying its orbits.

#include <compare>
#include <vector>

#include "hermicode/gf.hpp"

namespace hermicode {

/// Projective point, normalized so that the last nonzero coordinate is 1.
struct CurvePoint {
  Elem x1;
  Elem x2;
  Elem x3;

  bool is_affine() const { return x3 == Field::one(); }
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

/// Scales (a:b:c) to canonical form. Throws UsageError on (0:0:0).
CurvePoint normalize_point(const Field& field, Elem a, Elem b, Elem c);

/// Affine base point (u:v:1) of an evaluation orbit, with tau = 1/(v^{q-1}+1).
struct OrbitSpec {
  Elem u;
  Elem v;
  Elem tau;

  /// Validates u != 0 and v^q + v = u^{q+1}, then derives tau.
  static OrbitSpec make(const Field& field, Elem u, Elem v);
};

class HermitianCurve {
 public:
  explicit HermitianCurve(FieldPtr field);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int q() const { return field_->q(); }
  int genus() const { return q() * (q() - 1) / 2; }

  CurvePoint origin() const { return {Field::zero(), Field::zero(), Field::one()}; }
  CurvePoint y_infinity() const { return {Field::zero(), Field::one(), Field::zero()}; }

  bool contains(const CurvePoint& pt) const;

  /// All q^3 + 1 rational points: affine points ordered by (x, y) encoding,
  /// then the point at infinity.
  std::vector<CurvePoint> points() const;

  /// P_1 = O, the q - 1 interior points (0:b:1) with b^q + b = 0, b != 0
  /// ordered by encoding of b, then P_{q+1} = Y_inf.
  std::vector<CurvePoint> chord_points() const;

  /// Image under diag(lambda, lambda^{q+1}, 1). Throws UsageError on lambda = 0.
  CurvePoint gamma_apply(Elem lambda, const CurvePoint& pt) const;

  /// Q_1..Q_{q^2-1} with Q_i = gamma_apply(omega^i, (u:v:1)).
  std::vector<CurvePoint> orbit(const OrbitSpec& spec) const;

  /// One base point per orbit off the chord: (1:v:1) for each solution of
  /// v^q + v = 1, in encoding order of v. There are exactly q of them.
  std::vector<OrbitSpec> orbit_base_points() const;

  /// The first entry of orbit_base_points(): u = 1, smallest v.
  OrbitSpec canonical_base_point() const;

  /// Splits the affine points off the chord into stabilizer orbits, each
  /// listed in generation order starting from its smallest point.
  std::vector<std::vector<CurvePoint>> off_chord_orbits() const;

 private:
  FieldPtr field_;
};

/// x2 * x3^q - tau * x1^{q+1} == 0.
bool on_c_tau(const Field& field, Elem tau, const CurvePoint& pt);

/// Intersection multiplicity of H_q and C_tau at the origin, read off as the
/// lowest exponent with nonzero coefficient after substituting Y = tau X^{q+1}
/// into Y^q + Y - X^{q+1}. Throws UsageError on tau = 0.
int imult_at_origin(const Field& field, Elem tau);

}  // namespace hermicode
