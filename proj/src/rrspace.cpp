#include "hermicode/rrspace.hpp"

#include <string>

#include "hermicode/errors.hpp"

namespace hermicode {

std::vector<Monomial> monomials(int m) {
  std::vector<Monomial> out;
  for (int d = 0; d <= m - 2; ++d) {
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
  }
  return out;
}

void check_multiplicity(int q, int m) {
  if (m < 2 || m > q - 1) {
    throw UsageError("multiplicity m=" + std::to_string(m) + " outside [2, " + std::to_string(q - 1) +
                     "] for q=" + std::to_string(q));
  }
}

int divisor_degree(int q, int m) { return m * (q - 1); }

int rr_dimension(int m) { return m * (m - 1) / 2 + 1; }

std::vector<Elem> RRFunction::coordinates() const {
  std::vector<Elem> out{eps};
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

RRFunction RRFunction::from_coordinates(int m, const std::vector<Elem>& coords) {
  if (static_cast<int>(coords.size()) != rr_dimension(m)) {
    throw UsageError("expected " + std::to_string(rr_dimension(m)) + " coordinates, got " +
                     std::to_string(coords.size()));
  }
  return {m, std::vector<Elem>(coords.begin() + 1, coords.end()), coords.front()};
}

std::vector<RRFunction> basis(int q, int m) {
  check_multiplicity(q, m);
  const int dim = rr_dimension(m);
  std::vector<RRFunction> out;
  out.reserve(dim);
  for (int r = 0; r < dim; ++r) {
    std::vector<Elem> coords(dim, Field::zero());
    coords[r] = Field::one();
    out.push_back(RRFunction::from_coordinates(m, coords));
  }
  return out;
}

Elem evaluate(const Field& field, const RRFunction& f, const CurvePoint& pt) {
  if (!pt.is_affine()) throw UsageError("evaluation at a point at infinity");
  if (pt.x1.is_zero()) throw UsageError("evaluation on the pole locus x = 0");
  const Elem x = pt.x1;
  const Elem y = pt.x2;
  const auto mons = monomials(f.m);
  Elem gval = Field::zero();
  for (std::size_t t = 0; t < mons.size(); ++t) {
    if (f.g[t].is_zero()) continue;
    gval = field.add(gval, field.mul(f.g[t], field.mul(field.pow(x, mons[t].i), field.pow(y, mons[t].j))));
  }
  const Elem xm = field.pow(x, f.m);
  const Elem num = field.add(field.mul(y, gval), field.mul(f.eps, xm));
  return field.div(num, xm);
}

}  // namespace hermicode
