#pragma once

// Exact arithmetic in F_{q^2}, q = p^k, with F_q embedded as the
// Frobenius-fixed subfield.
//
// Elements are encoded as integers in [0, q^2): the little-endian base-p
// digits are the coefficients over F_p in the polynomial basis of a fixed
// monic irreducible of degree 2k. Encoding 0 is zero, 1 is one.

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace hermicode {

struct Elem {
  std::uint16_t enc = 0;

  constexpr bool is_zero() const { return enc == 0; }
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Builds F_{p^{2k}}. Deterministic: the irreducible is the smallest monic
  /// one (low-to-high coefficients read as a base-p integer) and omega is
  /// the smallest-encoded primitive element.
  static FieldPtr make(int p, int k);

  /// Field for a subfield order q (a prime power >= 3).
  static FieldPtr for_q(int q);

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// q^2, the number of elements.
  int size() const { return size_; }
  /// q^2 - 1, the order of the multiplicative group.
  int group_order() const { return size_ - 1; }

  /// Coefficients c_0..c_{2k} of the defining polynomial, c_{2k} = 1.
  const std::vector<int>& irreducible() const { return irreducible_; }
  Elem omega() const { return omega_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  /// Element with the given encoding; throws UsageError when out of range.
  Elem from_enc(int enc) const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{static_cast<std::uint16_t>(a.enc ^ b.enc)};
    if (!add_table_.empty()) return Elem{add_table_[a.enc * size_ + b.enc]};
    return add_digitwise(a, b);
  }
  Elem neg(Elem a) const { return Elem{neg_table_[a.enc]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    int s = log_[a.enc] + log_[b.enc];
    if (s >= size_ - 1) s -= size_ - 1;
    return Elem{exp_[s]};
  }

  /// Throws std::domain_error for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// a^e. For a != 0 the exponent is reduced mod q^2 - 1, so negative
  /// exponents are allowed; 0^e with e < 0 throws std::domain_error.
  Elem pow(Elem a, long long e) const;

  /// omega^i for any integer i.
  Elem exp(long long i) const;
  /// Discrete log base omega in [0, q^2 - 1). Throws std::domain_error on 0.
  int log(Elem a) const;

  /// x -> x^q.
  Elem frobenius(Elem a) const { return pow(a, q_); }
  /// N(x) = x^{q+1}, lands in F_q.
  Elem norm(Elem a) const { return pow(a, q_ + 1); }
  /// Tr(x) = x^q + x, lands in F_q.
  Elem trace(Elem a) const { return add(frobenius(a), a); }
  bool in_subfield(Elem a) const { return frobenius(a) == a; }

  /// Embeds an integer via its residue mod p.
  Elem from_int(long long v) const;

  /// All q^2 elements in encoding order.
  std::vector<Elem> elements() const;
  /// The q elements of F_q in encoding order.
  std::vector<Elem> subfield_elements() const;

 private:
  Field(int p, int k, std::vector<int> irreducible);
  Elem add_digitwise(Elem a, Elem b) const;

  int p_;
  int k_;
  int q_;
  int size_;
  std::vector<int> irreducible_;
  Elem omega_;
  std::vector<std::uint16_t> exp_;
  std::vector<int> log_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint16_t> add_table_;
};

/// Smallest monic irreducible of degree `degree` over F_p, same ordering as Field::make.
std::vector<int> smallest_irreducible(int p, int degree);

/// True iff the monic polynomial (coefficients low-to-high) has no monic
/// factor of degree 1..deg/2 over F_p.
bool is_irreducible(int p, const std::vector<int>& poly);

bool is_prime(int n);

}  // namespace hermicode
