#include "hermicode/curve.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hermicode/errors.hpp"

namespace hermicode {

CurvePoint normalize_point(const Field& field, Elem a, Elem b, Elem c) {
  Elem last;
  if (!c.is_zero()) {
    last = c;
  } else if (!b.is_zero()) {
    last = b;
  } else if (!a.is_zero()) {
    last = a;
  } else {
    throw UsageError("(0:0:0) is not a projective point");
  }
  const Elem s = field.inv(last);
  return {field.mul(a, s), field.mul(b, s), field.mul(c, s)};
}

OrbitSpec OrbitSpec::make(const Field& field, Elem u, Elem v) {
  if (u.is_zero()) throw UsageError("orbit base point needs u != 0");
  const int q = field.q();
  if (field.add(field.pow(v, q), v) != field.pow(u, q + 1)) {
    throw UsageError("base point (u:v:1) is not on the Hermitian curve");
  }
  const Elem denom = field.add(field.pow(v, q - 1), Field::one());
  if (v.is_zero() || denom.is_zero()) throw InternalError("u != 0 should force v^{q-1} + 1 != 0");
  return {u, v, field.inv(denom)};
}

HermitianCurve::HermitianCurve(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw UsageError("null field");
}

bool HermitianCurve::contains(const CurvePoint& pt) const {
  const Field& f = *field_;
  const int q = f.q();
  const Elem lhs = f.add(f.mul(f.pow(pt.x2, q), pt.x3), f.mul(pt.x2, f.pow(pt.x3, q)));
  return lhs == f.pow(pt.x1, q + 1);
}

std::vector<CurvePoint> HermitianCurve::points() const {
  const Field& f = *field_;
  const int q = f.q();
  // y^q + y depends only on y; bucket y by it to avoid the q^4 double loop.
  std::map<Elem, std::vector<Elem>> by_trace;
  for (Elem y : f.elements()) by_trace[f.trace(y)].push_back(y);

  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(q) * q * q + 1);
  for (Elem x : f.elements()) {
    auto it = by_trace.find(f.pow(x, q + 1));
    if (it == by_trace.end()) continue;
    for (Elem y : it->second) out.push_back({x, y, Field::one()});
  }
  out.push_back(y_infinity());
  return out;
}

std::vector<CurvePoint> HermitianCurve::chord_points() const {
  const Field& f = *field_;
  std::vector<CurvePoint> out{origin()};
  for (Elem b : f.elements()) {
    if (!b.is_zero() && f.trace(b).is_zero()) out.push_back({Field::zero(), b, Field::one()});
  }
  out.push_back(y_infinity());
  return out;
}

CurvePoint HermitianCurve::gamma_apply(Elem lambda, const CurvePoint& pt) const {
  if (lambda.is_zero()) throw UsageError("stabilizer element needs lambda != 0");
  const Field& f = *field_;
  return normalize_point(f, f.mul(lambda, pt.x1), f.mul(f.pow(lambda, q() + 1), pt.x2), pt.x3);
}

std::vector<CurvePoint> HermitianCurve::orbit(const OrbitSpec& spec) const {
  const Field& f = *field_;
  const CurvePoint base{spec.u, spec.v, Field::one()};
  std::vector<CurvePoint> out;
  out.reserve(f.group_order());
  for (int i = 1; i <= f.group_order(); ++i) out.push_back(gamma_apply(f.exp(i), base));
  return out;
}

std::vector<OrbitSpec> HermitianCurve::orbit_base_points() const {
  const Field& f = *field_;
  std::vector<OrbitSpec> out;
  for (Elem v : f.elements()) {
    if (f.trace(v) == Field::one()) out.push_back(OrbitSpec::make(f, Field::one(), v));
  }
  return out;
}

OrbitSpec HermitianCurve::canonical_base_point() const { return orbit_base_points().front(); }

std::vector<std::vector<CurvePoint>> HermitianCurve::off_chord_orbits() const {
  const Field& f = *field_;
  std::set<CurvePoint> remaining;
  for (const CurvePoint& pt : points()) {
    if (pt.is_affine() && !pt.x1.is_zero()) remaining.insert(pt);
  }
  std::vector<std::vector<CurvePoint>> orbits;
  while (!remaining.empty()) {
    const CurvePoint start = *remaining.begin();
    std::vector<CurvePoint> orb;
    CurvePoint cur = start;
    do {
      if (remaining.erase(cur) != 1) throw InternalError("stabilizer orbit left the curve");
      orb.push_back(cur);
      cur = gamma_apply(f.omega(), cur);
    } while (cur != start);
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

bool on_c_tau(const Field& field, Elem tau, const CurvePoint& pt) {
  const int q = field.q();
  const Elem lhs = field.mul(pt.x2, field.pow(pt.x3, q));
  const Elem rhs = field.mul(tau, field.pow(pt.x1, q + 1));
  return lhs == rhs;
}

int imult_at_origin(const Field& field, Elem tau) {
  if (tau.is_zero()) throw UsageError("C_tau needs tau != 0");
  const int q = field.q();
  // (tau - 1) X^{q+1} + tau^q X^{(q+1)q}
  const std::vector<std::pair<int, Elem>> terms{
      {q + 1, field.sub(tau, Field::one())},
      {(q + 1) * q, field.pow(tau, q)},
  };
  for (const auto& [exponent, coeff] : terms) {
    if (!coeff.is_zero()) return exponent;
  }
  throw InternalError("substituted polynomial vanished identically");
}

}  // namespace hermicode
