#pragma once

// Evaluation codes C_L(D, G) with D a full stabilizer orbit, and the small
// amount of linear algebra over F_{q^2} they need.

#include <cstddef>
#include <span>
#include <vector>

#include "hermicode/curve.hpp"
#include "hermicode/gf.hpp"
#include "hermicode/rrspace.hpp"

namespace hermicode {

/// Dense row-major matrix over F_{q^2}.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

std::size_t rank(const Field& field, Matrix mat);

/// Moves every column one step left: column i of the result is column i+1
/// of the input (indices mod cols), i.e. s(c_1..c_n) = (c_2..c_n, c_1).
Matrix cyclic_shift(const Matrix& mat);

/// True iff the row space is closed under cyclic_shift.
bool is_shift_closed(const Field& field, const Matrix& gen);

struct Codeword {
  std::vector<Elem> symbols;
  int weight() const;
};

class LinearCode {
 public:
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int q() const { return field_->q(); }
  int m() const { return m_; }
  int n() const { return static_cast<int>(gen_.cols()); }
  int k() const { return static_cast<int>(gen_.rows()); }
  const Matrix& generator() const { return gen_; }
  const OrbitSpec& orbit_spec() const { return spec_; }
  /// Evaluation points Q_1..Q_n, column order of the generator.
  const std::vector<CurvePoint>& points() const { return points_; }

 private:
  friend LinearCode build_code(FieldPtr field, int m, const OrbitSpec& spec);

  FieldPtr field_;
  int m_ = 0;
  OrbitSpec spec_{};
  std::vector<CurvePoint> points_;
  Matrix gen_;
};

/// Row r evaluates basis(q, m)[r] at Q_1..Q_{q^2-1}. Throws InternalError if
/// the evaluation map is not injective.
LinearCode build_code(FieldPtr field, int m, const OrbitSpec& spec);
/// Same, on the canonical orbit.
LinearCode build_code(int q, int m);

/// msg * G. Throws UsageError if msg.size() != k.
Codeword encode(const LinearCode& code, std::span<const Elem> msg);

bool check_cyclic(const LinearCode& code);

/// The k x k matrix S with S * G = cyclic_shift(G), so the shift of the
/// encoding of x is the encoding of x * S.
/// Throws InternalError when the code is not shift-closed.
Matrix shift_matrix(const LinearCode& code);

/// Solves X * a = b for X, where a has full row rank. Returns false when no
/// solution exists.
bool solve_left(const Field& field, const Matrix& a, const Matrix& b, Matrix& x);

}  // namespace hermicode
