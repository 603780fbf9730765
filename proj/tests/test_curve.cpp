#include <algorithm>
#include <set>

#include "doctest.h"
#include "hermicode/curve.hpp"
#include "hermicode/errors.hpp"

using namespace hermicode;

namespace {

// Points of H_q by testing every normalized triple of PG(2, q^2).
std::set<CurvePoint> projective_scan(const Field& f) {
  const int q = f.q();
  std::set<CurvePoint> out;
  auto on_curve = [&](Elem x1, Elem x2, Elem x3) {
    const Elem lhs = f.add(f.mul(f.pow(x2, q), x3), f.mul(x2, f.pow(x3, q)));
    return lhs == f.pow(x1, q + 1);
  };
  for (Elem a : f.elements())
    for (Elem b : f.elements())
      if (on_curve(a, b, f.one())) out.insert({a, b, f.one()});
  for (Elem a : f.elements())
    if (on_curve(a, f.one(), f.zero())) out.insert({a, f.one(), f.zero()});
  if (on_curve(f.one(), f.zero(), f.zero())) out.insert({f.one(), f.zero(), f.zero()});
  return out;
}

}  // namespace

TEST_CASE("point census against a projective scan") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    HermitianCurve c(Field::for_q(q));
    CAPTURE(q);
    const auto pts = c.points();
    CHECK(pts.size() == static_cast<std::size_t>(q * q * q + 1));
    const std::set<CurvePoint> as_set(pts.begin(), pts.end());
    CHECK(as_set.size() == pts.size());
    CHECK(as_set == projective_scan(c.field()));
    CHECK(pts.back() == c.y_infinity());
    for (const auto& p : pts) CHECK(c.contains(p));
  }
}

TEST_CASE("chord points") {
  for (int q : {3, 4, 5, 7, 8}) {
    HermitianCurve c(Field::for_q(q));
    const Field& f = c.field();
    const auto chord = c.chord_points();
    CAPTURE(q);
    REQUIRE(chord.size() == static_cast<std::size_t>(q + 1));
    CHECK(chord.front() == c.origin());
    CHECK(chord.back() == c.y_infinity());
    for (std::size_t i = 1; i + 1 < chord.size(); ++i) {
      CHECK(chord[i].x1.is_zero());
      CHECK(!chord[i].x2.is_zero());
      CHECK(f.trace(chord[i].x2).is_zero());
      CHECK(c.contains(chord[i]));
    }
  }
}

TEST_CASE("normalize_point") {
  auto f = Field::for_q(4);
  const Elem w = f->omega();
  const CurvePoint p = normalize_point(*f, w, f->mul(w, w), w);
  CHECK(p == CurvePoint{f->one(), w, f->one()});
  CHECK(normalize_point(*f, w, w, f->zero()) == CurvePoint{f->one(), f->one(), f->zero()});
  CHECK_THROWS_AS(normalize_point(*f, f->zero(), f->zero(), f->zero()), UsageError);
}

TEST_CASE("stabilizer orbits partition the affine points off the chord") {
  for (int q : {3, 4, 5}) {
    HermitianCurve c(Field::for_q(q));
    CAPTURE(q);
    const auto orbits = c.off_chord_orbits();
    CHECK(orbits.size() == static_cast<std::size_t>(q));
    std::set<CurvePoint> seen;
    for (const auto& o : orbits) {
      CHECK(o.size() == static_cast<std::size_t>(q * q - 1));
      for (const auto& p : o) {
        CHECK(!p.x1.is_zero());
        CHECK(seen.insert(p).second);
      }
    }
    CHECK(seen.size() == static_cast<std::size_t>(q * q * q - q));
  }
}

TEST_CASE("gamma fixes the chord endpoints and preserves the curve") {
  HermitianCurve c(Field::for_q(5));
  const Field& f = c.field();
  for (Elem l : f.elements()) {
    if (l.is_zero()) continue;
    CHECK(c.gamma_apply(l, c.origin()) == c.origin());
    CHECK(c.gamma_apply(l, c.y_infinity()) == c.y_infinity());
    for (const auto& p : c.chord_points()) CHECK(c.contains(c.gamma_apply(l, p)));
  }
  CHECK_THROWS_AS(c.gamma_apply(f.zero(), c.origin()), UsageError);
}

TEST_CASE("orbit of a base point lies on C_tau and has full length") {
  for (int q : {3, 4, 5, 7, 8}) {
    HermitianCurve c(Field::for_q(q));
    const Field& f = c.field();
    CAPTURE(q);
    const auto bases = c.orbit_base_points();
    CHECK(bases.size() == static_cast<std::size_t>(q));
    for (const auto& spec : bases) {
      CHECK(spec.u == f.one());
      CHECK(f.trace(spec.v) == f.one());
      const auto orbit = c.orbit(spec);
      CHECK(orbit.size() == static_cast<std::size_t>(q * q - 1));
      CHECK(std::set<CurvePoint>(orbit.begin(), orbit.end()).size() == orbit.size());
      // Generation order: Q_1 is the image under omega, Q_{q^2-1} the base point.
      CHECK(orbit.front() == c.gamma_apply(f.omega(), {spec.u, spec.v, f.one()}));
      CHECK(orbit.back() == CurvePoint{spec.u, spec.v, f.one()});
      for (const auto& p : orbit) {
        CHECK(c.contains(p));
        CHECK(on_c_tau(f, spec.tau, p));
      }
    }
    CHECK(c.canonical_base_point().v == bases.front().v);
  }
}

TEST_CASE("tau = 1 / (v^{q-1} + 1) and the intersection at the origin") {
  for (int q : {3, 4, 5, 7, 8}) {
    HermitianCurve c(Field::for_q(q));
    const Field& f = c.field();
    CAPTURE(q);
    for (const auto& spec : c.orbit_base_points()) {
      CHECK(spec.tau == f.inv(f.add(f.pow(spec.v, q - 1), f.one())));
      CHECK(spec.tau != f.one());
      CHECK(imult_at_origin(f, spec.tau) == q + 1);
    }
    // tau = 1 makes Y = X^{q+1} cancel the X^{q+1} term of Y^q + Y - X^{q+1}.
    CHECK(imult_at_origin(f, f.one()) == q * (q + 1));
    CHECK_THROWS_AS(imult_at_origin(f, f.zero()), UsageError);
  }
}

TEST_CASE("invalid base points are rejected") {
  auto f = Field::for_q(4);
  CHECK_THROWS_AS(OrbitSpec::make(*f, f->zero(), f->zero()), UsageError);
  // (1, 0) is not on the curve: 0 != 1.
  CHECK_THROWS_AS(OrbitSpec::make(*f, f->one(), f->zero()), UsageError);
}
