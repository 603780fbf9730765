#include <random>

#include "doctest.h"
#include "hermicode/agcode.hpp"
#include "hermicode/errors.hpp"

using namespace hermicode;

namespace {

std::vector<Elem> random_message(const Field& f, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, f.size() - 1);
  std::vector<Elem> msg(k);
  for (auto& e : msg) e = f.from_enc(pick(rng));
  return msg;
}

}  // namespace

TEST_CASE("rank of small matrices") {
  auto f = Field::for_q(3);
  Matrix m(3, 3);
  CHECK(rank(*f, m) == 0);
  for (int i = 0; i < 3; ++i) m(i, i) = f->one();
  CHECK(rank(*f, m) == 3);
  for (int c = 0; c < 3; ++c) m(2, c) = f->add(m(0, c), f->mul(f->omega(), m(1, c)));
  CHECK(rank(*f, m) == 2);
}

TEST_CASE("cyclic_shift moves columns left") {
  auto f = Field::for_q(3);
  Matrix m(1, 4);
  for (int c = 0; c < 4; ++c) m(0, c) = f->from_enc(c + 1);
  const Matrix s = cyclic_shift(m);
  CHECK(s(0, 0).enc == 2);
  CHECK(s(0, 1).enc == 3);
  CHECK(s(0, 2).enc == 4);
  CHECK(s(0, 3).enc == 1);
}

TEST_CASE("code parameters and full rank") {
  for (int q : {3, 4, 5, 7, 8}) {
    for (int m = 2; m <= q - 1; ++m) {
      const LinearCode code = build_code(q, m);
      CAPTURE(q);
      CAPTURE(m);
      CHECK(code.n() == q * q - 1);
      CHECK(code.k() == m * (m - 1) / 2 + 1);
      CHECK(rank(code.field(), code.generator()) == static_cast<std::size_t>(code.k()));
      CHECK(code.points().size() == static_cast<std::size_t>(code.n()));
    }
  }
}

TEST_CASE("generator row 0 is the all-ones word") {
  const LinearCode code = build_code(4, 3);
  for (Elem e : code.generator().row(0)) CHECK(e == Field::one());
}

TEST_CASE("generator entries are basis evaluations at the orbit") {
  const LinearCode code = build_code(5, 3);
  const auto b = basis(5, 3);
  for (int r = 0; r < code.k(); ++r)
    for (int c = 0; c < code.n(); ++c) CHECK(code.generator()(r, c) == evaluate(code.field(), b[r], code.points()[c]));
}

TEST_CASE("cyclicity for every orbit choice") {
  for (int q : {3, 4, 5}) {
    auto f = Field::for_q(q);
    HermitianCurve curve(f);
    for (const auto& spec : curve.orbit_base_points()) {
      for (int m = 2; m <= q - 1; ++m) {
        const LinearCode code = build_code(f, m, spec);
        CHECK(check_cyclic(code));
      }
    }
  }
}

TEST_CASE("shifts of random codewords stay in the code") {
  std::mt19937_64 rng(20240611);
  for (int q : {4, 5, 7}) {
    const LinearCode code = build_code(q, 3);
    const Field& f = code.field();
    const Matrix s = shift_matrix(code);
    for (int t = 0; t < 100; ++t) {
      const auto msg = random_message(f, code.k(), rng);
      const Codeword cw = encode(code, msg);
      // msg * S encodes the shifted word.
      std::vector<Elem> next(code.k(), f.zero());
      for (int c = 0; c < code.k(); ++c)
        for (int r = 0; r < code.k(); ++r) next[c] = f.add(next[c], f.mul(msg[r], s(r, c)));
      const Codeword shifted = encode(code, next);
      bool ok = true;
      for (int i = 0; i < code.n(); ++i) ok = ok && shifted.symbols[i] == cw.symbols[(i + 1) % code.n()];
      CHECK(ok);
      CHECK(shifted.weight() == cw.weight());
    }
  }
}

TEST_CASE("a perturbed column breaks shift closure") {
  const LinearCode code = build_code(5, 3);
  const Field& f = code.field();
  Matrix g = code.generator();
  CHECK(is_shift_closed(f, g));
  g(1, 3) = f.add(g(1, 3), f.one());
  CHECK(!is_shift_closed(f, g));
}

TEST_CASE("solve_left") {
  const LinearCode code = build_code(4, 3);
  const Field& f = code.field();
  Matrix x;
  REQUIRE(solve_left(f, code.generator(), cyclic_shift(code.generator()), x));
  CHECK(x == shift_matrix(code));
  Matrix bad(1, code.n());
  bad(0, 0) = f.one();
  CHECK(!solve_left(f, code.generator(), bad, x));
}

TEST_CASE("encode checks message length") {
  const LinearCode code = build_code(3, 2);
  std::vector<Elem> msg(code.k() + 1);
  CHECK_THROWS_AS(encode(code, msg), UsageError);
}
