#include "hermicode/gf.hpp"

#include <stdexcept>
#include <string>

#include "hermicode/errors.hpp"

namespace hermicode {
namespace {

constexpr int kMaxFieldSize = 1 << 16;
constexpr int kMaxAddTable = 1024;

using Poly = std::vector<int>;  // coefficients over F_p, low to high

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, int p) {
  const std::size_t dm = m.size() - 1;
  trim(a);
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits_of(int enc, int p, int len) {
  Poly d(len, 0);
  for (int i = 0; i < len; ++i) {
    d[i] = enc % p;
    enc /= p;
  }
  return d;
}

int enc_of(const Poly& d, int p) {
  int enc = 0;
  for (std::size_t i = d.size(); i-- > 0;) enc = enc * p + d[i];
  return enc;
}

// Multiplication of encoded elements through polynomial arithmetic; only
// used while the log tables are being built.
int slow_mul(int a, int b, const Poly& modulus, int p) {
  const int len = static_cast<int>(modulus.size()) - 1;
  const Poly da = digits_of(a, p, len);
  const Poly db = digits_of(b, p, len);
  Poly prod(2 * len, 0);
  for (int i = 0; i < len; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < len; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  Poly r = poly_mod(std::move(prod), modulus, p);
  r.resize(len, 0);
  return enc_of(r, p);
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1 || poly.back() != 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    const int count = ipow(p, d);
    for (int low = 0; low < count; ++low) {
      Poly factor = digits_of(low, p, d);
      factor.push_back(1);
      if (poly_mod(poly, factor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> smallest_irreducible(int p, int degree) {
  const int count = ipow(p, degree);
  for (int low = 0; low < count; ++low) {
    Poly cand = digits_of(low, p, degree);
    cand.push_back(1);
    if (is_irreducible(p, cand)) return cand;
  }
  throw InternalError("no irreducible polynomial of degree " + std::to_string(degree));
}

FieldPtr Field::make(int p, int k) {
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw UsageError("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q * q > kMaxFieldSize) throw SizeGuardError("field F_{q^2} too large for table arithmetic");
  }
  if (q < 3) throw UsageError("subfield order q must be at least 3");
  return FieldPtr(new Field(p, k, smallest_irreducible(p, 2 * k)));
}

FieldPtr Field::for_q(int q) {
  if (q < 3) throw UsageError("q must be a prime power >= 3, got " + std::to_string(q));
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int k = 0;
    int r = q;
    while (r % p == 0) {
      r /= p;
      ++k;
    }
    if (r != 1 || !is_prime(p)) break;
    return make(p, k);
  }
  throw UsageError("q must be a prime power >= 3, got " + std::to_string(q));
}

Field::Field(int p, int k, std::vector<int> irreducible)
    : p_(p), k_(k), q_(ipow(p, k)), size_(ipow(p, 2 * k)), irreducible_(std::move(irreducible)) {
  const int order = size_ - 1;

  int omega = -1;
  for (int cand = 2; cand < size_ && omega < 0; ++cand) {
    int x = 1;
    int ord = 0;
    do {
      x = slow_mul(x, cand, irreducible_, p_);
      ++ord;
    } while (x != 1 && ord <= order);
    if (ord == order) omega = cand;
  }
  if (omega < 0) throw InternalError("no primitive element found");
  omega_ = Elem{static_cast<std::uint16_t>(omega)};

  exp_.resize(order);
  log_.assign(size_, -1);
  int x = 1;
  for (int i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    log_[x] = i;
    x = slow_mul(x, omega, irreducible_, p_);
  }

  neg_table_.resize(size_);
  const int len = 2 * k_;
  for (int a = 0; a < size_; ++a) {
    Poly d = digits_of(a, p_, len);
    for (int& c : d) c = (p_ - c) % p_;
    neg_table_[a] = static_cast<std::uint16_t>(enc_of(d, p_));
  }

  if (p_ != 2 && size_ <= kMaxAddTable) {
    add_table_.resize(static_cast<std::size_t>(size_) * size_);
    for (int a = 0; a < size_; ++a) {
      for (int b = 0; b < size_; ++b) {
        add_table_[a * size_ + b] = add_digitwise(Elem{static_cast<std::uint16_t>(a)},
                                                  Elem{static_cast<std::uint16_t>(b)})
                                        .enc;
      }
    }
  }
}

Elem Field::add_digitwise(Elem a, Elem b) const {
  int x = a.enc;
  int y = b.enc;
  int out = 0;
  int scale = 1;
  for (int i = 0; i < 2 * k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return Elem{static_cast<std::uint16_t>(out)};
}

Elem Field::from_enc(int enc) const {
  if (enc < 0 || enc >= size_) {
    throw UsageError("encoding " + std::to_string(enc) + " outside [0, " + std::to_string(size_) + ")");
  }
  return Elem{static_cast<std::uint16_t>(enc)};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw std::domain_error("inverse of zero in F_" + std::to_string(size_));
  const int l = log_[a.enc];
  return Elem{exp_[l == 0 ? 0 : size_ - 1 - l]};
}

Elem Field::pow(Elem a, long long e) const {
  if (a.is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return e == 0 ? one() : zero();
  }
  const long long n = size_ - 1;
  long long r = (static_cast<long long>(log_[a.enc]) * (((e % n) + n) % n)) % n;
  return Elem{exp_[r]};
}

Elem Field::exp(long long i) const {
  const long long n = size_ - 1;
  return Elem{exp_[((i % n) + n) % n]};
}

int Field::log(Elem a) const {
  if (a.is_zero()) throw std::domain_error("logarithm of zero");
  return log_[a.enc];
}

Elem Field::from_int(long long v) const {
  return Elem{static_cast<std::uint16_t>(((v % p_) + p_) % p_)};
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(size_);
  for (int i = 0; i < size_; ++i) out[i] = Elem{static_cast<std::uint16_t>(i)};
  return out;
}

std::vector<Elem> Field::subfield_elements() const {
  std::vector<Elem> out;
  for (Elem x : elements()) {
    if (in_subfield(x)) out.push_back(x);
  }
  return out;
}

}  // namespace hermicode
