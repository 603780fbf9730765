#include "hermicode/agcode.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "hermicode/errors.hpp"

namespace hermicode {
namespace {

// Row-reduces `mat` in place over its first `pivot_cols` columns and returns
// the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(const Field& f, Matrix& mat, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < mat.rows(); ++c) {
    std::size_t sel = r;
    while (sel < mat.rows() && mat(sel, c).is_zero()) ++sel;
    if (sel == mat.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < mat.cols(); ++j) std::swap(mat(sel, j), mat(r, j));
    }
    const Elem s = f.inv(mat(r, c));
    for (std::size_t j = 0; j < mat.cols(); ++j) mat(r, j) = f.mul(mat(r, j), s);
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      if (i == r || mat(i, c).is_zero()) continue;
      const Elem factor = mat(i, c);
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        mat(i, j) = f.sub(mat(i, j), f.mul(factor, mat(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Field& field, Matrix mat) { return row_reduce(field, mat, mat.cols()).size(); }

Matrix cyclic_shift(const Matrix& mat) {
  Matrix out(mat.rows(), mat.cols());
  const std::size_t n = mat.cols();
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = mat(r, (c + 1) % n);
  }
  return out;
}

bool is_shift_closed(const Field& field, const Matrix& gen) {
  const Matrix shifted = cyclic_shift(gen);
  Matrix stacked(2 * gen.rows(), gen.cols());
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    for (std::size_t c = 0; c < gen.cols(); ++c) {
      stacked(r, c) = gen(r, c);
      stacked(gen.rows() + r, c) = shifted(r, c);
    }
  }
  return rank(field, stacked) == rank(field, gen);
}

int Codeword::weight() const {
  return static_cast<int>(std::count_if(symbols.begin(), symbols.end(), [](Elem e) { return !e.is_zero(); }));
}

LinearCode build_code(FieldPtr field, int m, const OrbitSpec& spec) {
  if (!field) throw UsageError("null field");
  const Field& f = *field;
  check_multiplicity(f.q(), m);
  const HermitianCurve curve(field);

  LinearCode code;
  code.field_ = field;
  code.m_ = m;
  code.spec_ = OrbitSpec::make(f, spec.u, spec.v);
  code.points_ = curve.orbit(code.spec_);

  const auto funcs = basis(f.q(), m);
  code.gen_ = Matrix(funcs.size(), code.points_.size());
  for (std::size_t r = 0; r < funcs.size(); ++r) {
    for (std::size_t c = 0; c < code.points_.size(); ++c) {
      code.gen_(r, c) = evaluate(f, funcs[r], code.points_[c]);
    }
  }

  const std::size_t rk = rank(f, code.gen_);
  if (rk != funcs.size()) {
    std::ostringstream msg;
    msg << "evaluation map not injective: q=" << f.q() << " m=" << m << " rank " << rk << " < k="
        << funcs.size() << " (base point u=" << spec.u.enc << " v=" << spec.v.enc << ")";
    throw InternalError(msg.str());
  }
  return code;
}

LinearCode build_code(int q, int m) {
  FieldPtr field = Field::for_q(q);
  check_multiplicity(q, m);
  const HermitianCurve curve(field);
  return build_code(field, m, curve.canonical_base_point());
}

Codeword encode(const LinearCode& code, std::span<const Elem> msg) {
  if (static_cast<int>(msg.size()) != code.k()) {
    throw UsageError("message length " + std::to_string(msg.size()) + " != k=" + std::to_string(code.k()));
  }
  const Field& f = code.field();
  const Matrix& gen = code.generator();
  Codeword out{std::vector<Elem>(code.n(), Field::zero())};
  for (std::size_t r = 0; r < msg.size(); ++r) {
    if (msg[r].is_zero()) continue;
    for (int c = 0; c < code.n(); ++c) out.symbols[c] = f.add(out.symbols[c], f.mul(msg[r], gen(r, c)));
  }
  return out;
}

bool check_cyclic(const LinearCode& code) { return is_shift_closed(code.field(), code.generator()); }

bool solve_left(const Field& field, const Matrix& a, const Matrix& b, Matrix& x) {
  // X a = b  <=>  a^T X^T = b^T; reduce [a^T | b^T].
  const std::size_t k = a.rows();
  const std::size_t n = a.cols();
  const std::size_t r = b.rows();
  Matrix aug(n, k + r);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug(i, j) = a(j, i);
    for (std::size_t j = 0; j < r; ++j) aug(i, k + j) = b(j, i);
  }
  const auto pivots = row_reduce(field, aug, k);
  if (pivots.size() != k) return false;
  for (std::size_t i = k; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!aug(i, k + j).is_zero()) return false;
    }
  }
  x = Matrix(r, k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t j = 0; j < r; ++j) x(j, pivots[p]) = aug(p, k + j);
  }
  return true;
}

Matrix shift_matrix(const LinearCode& code) {
  Matrix s;
  if (!solve_left(code.field(), code.generator(), cyclic_shift(code.generator()), s)) {
    throw InternalError("code is not closed under the cyclic shift");
  }
  return s;
}

}  // namespace hermicode
