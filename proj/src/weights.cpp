#include "hermicode/weights.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "hermicode/errors.hpp"

namespace hermicode {
namespace {

// Table of a * G[r][j] for every row r and scalar a, stored as encodings
// so the inner loops touch only flat uint16 arrays.
class ScaledRows {
 public:
  explicit ScaledRows(const LinearCode& code)
      : q2_(code.field().size()), n_(code.n()), k_(code.k()),
        data_(static_cast<std::size_t>(k_) * q2_ * n_) {
    const Field& f = code.field();
    for (int r = 0; r < k_; ++r) {
      for (int a = 0; a < q2_; ++a) {
        std::uint16_t* dst = &data_[(static_cast<std::size_t>(r) * q2_ + a) * n_];
        for (int j = 0; j < n_; ++j) dst[j] = f.mul(Elem{static_cast<std::uint16_t>(a)}, code.generator()(r, j)).enc;
      }
    }
  }
  const std::uint16_t* row(int r, int a) const { return &data_[(static_cast<std::size_t>(r) * q2_ + a) * n_]; }

 private:
  int q2_;
  int n_;
  int k_;
  std::vector<std::uint16_t> data_;
};

std::uint64_t saturating_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Runs body(worker, chunk) for chunk in [0, chunks) on `jobs` threads.
template <class Body>
void parallel_chunks(std::uint64_t chunks, int jobs, Body&& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || chunks <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) body(0, c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t c = next++; c < chunks; c = next++) body(w, c);
    });
  }
  for (auto& t : pool) t.join();
}

// Visits every message of the code. leaf(worker, digits, zeros) sees the
// full digit vector (most significant coordinate first) of each message and
// the number of zero symbols of its codeword. Message index order within a
// chunk; chunks are the values of the leading `prefix` coordinates.
template <class Leaf>
void scan_all_messages(const LinearCode& code, int jobs, Leaf&& leaf) {
  if (!exhaustive_feasible(code)) {
    throw SizeGuardError("exhaustive enumeration of " + std::to_string(code.field().size()) + "^" +
                         std::to_string(code.k()) + " messages exceeds guard 2^26");
  }
  const Field& f = code.field();
  const ScaledRows rows(code);
  const int k = code.k();
  const int n = code.n();
  const int q2 = f.size();
  const int prefix = std::min(k - 1, 2);
  const std::uint64_t chunks = saturating_pow(q2, prefix);

  std::vector<std::uint16_t> neg(q2);
  for (int a = 0; a < q2; ++a) neg[a] = f.neg(Elem{static_cast<std::uint16_t>(a)}).enc;

  parallel_chunks(chunks, jobs, [&](int worker, std::uint64_t chunk) {
    std::vector<int> digits(k, 0);
    // partial[r] = sum of the first r scaled rows
    std::vector<std::vector<std::uint16_t>> partial(k, std::vector<std::uint16_t>(n, 0));
    auto accumulate = [&](int r) {
      const std::uint16_t* src = rows.row(r, digits[r]);
      for (int j = 0; j < n; ++j) {
        partial[r + 1][j] = f.add(Elem{partial[r][j]}, Elem{src[j]}).enc;
      }
    };
    std::uint64_t c = chunk;
    for (int r = prefix - 1; r >= 0; --r) {
      digits[r] = static_cast<int>(c % q2);
      c /= q2;
    }
    for (int r = 0; r < prefix; ++r) accumulate(r);

    const int last = k - 1;
    // Depth-first over coordinates prefix..last-1; the last coordinate is
    // handled inline.
    auto recurse = [&](auto&& self, int r) -> void {
      if (r == last) {
        const std::uint16_t* base = partial[last].data();
        for (int a = 0; a < q2; ++a) {
          // symbol j vanishes iff base[j] == -a * G[last][j]
          const std::uint16_t* target = rows.row(last, neg[a]);
          int zeros = 0;
          for (int j = 0; j < n; ++j) zeros += (base[j] == target[j]);
          digits[last] = a;
          leaf(worker, digits, zeros);
        }
        return;
      }
      for (int a = 0; a < q2; ++a) {
        digits[r] = a;
        accumulate(r);
        self(self, r + 1);
      }
    };
    recurse(recurse, prefix);
  });
}

std::uint64_t message_index(const std::vector<int>& digits, int q2) {
  std::uint64_t idx = 0;
  for (int d : digits) idx = idx * q2 + d;
  return idx;
}

// Messages with leading nonzero coordinate equal to one, indexed densely:
// block r holds the vectors whose first nonzero coordinate is r, ordered
// by the remaining k-1-r coordinates read as a base-q^2 number.
class ProjectiveIndex {
 public:
  ProjectiveIndex(int k, int q2) : k_(k), q2_(q2), block_start_(k + 1, 0) {
    for (int r = 0; r < k; ++r) block_start_[r + 1] = block_start_[r] + saturating_pow(q2, k - 1 - r);
  }
  std::uint64_t size() const { return block_start_[k_]; }

  std::uint64_t index_of(const std::vector<Elem>& v) const {
    int r = 0;
    while (v[r].is_zero()) ++r;
    std::uint64_t off = 0;
    for (int i = r + 1; i < k_; ++i) off = off * q2_ + v[i].enc;
    return block_start_[r] + off;
  }

  void vector_of(std::uint64_t idx, std::vector<Elem>& v) const {
    int r = 0;
    while (idx >= block_start_[r + 1]) ++r;
    std::uint64_t off = idx - block_start_[r];
    std::fill(v.begin(), v.end(), Field::zero());
    v[r] = Field::one();
    for (int i = k_ - 1; i > r; --i) {
      v[i] = Elem{static_cast<std::uint16_t>(off % q2_)};
      off /= q2_;
    }
  }

 private:
  int k_;
  int q2_;
  std::vector<std::uint64_t> block_start_;
};

}  // namespace

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::uint64_t WeightEnumerator::count(int w) const {
  return (w >= 0 && w < static_cast<int>(counts.size())) ? counts[w] : 0;
}

std::vector<int> WeightEnumerator::nonzero_weights() const {
  std::vector<int> out;
  for (int w = 1; w < static_cast<int>(counts.size()); ++w) {
    if (counts[w] != 0) out.push_back(w);
  }
  return out;
}

int WeightEnumerator::min_distance() const {
  const auto ws = nonzero_weights();
  return ws.empty() ? 0 : ws.front();
}

std::string to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::reduced: return "reduced";
    case Method::automatic: return "auto";
  }
  return "auto";
}

Method method_from_string(const std::string& name) {
  if (name == "exhaustive") return Method::exhaustive;
  if (name == "reduced") return Method::reduced;
  if (name == "auto") return Method::automatic;
  throw UsageError("unknown method '" + name + "' (expected exhaustive|reduced|auto)");
}

std::uint64_t message_count(const LinearCode& code) {
  return saturating_pow(code.field().size(), code.k());
}

bool exhaustive_feasible(const LinearCode& code) { return message_count(code) <= kExhaustiveGuard; }

bool reduced_feasible(const LinearCode& code) {
  return ProjectiveIndex(code.k(), code.field().size()).size() <= kReducedGuard;
}

bool enumeration_feasible(const LinearCode& code) { return exhaustive_feasible(code) || reduced_feasible(code); }

WeightEnumerator weight_enumerator_exhaustive(const LinearCode& code, int jobs) {
  const int n = code.n();
  std::vector<std::vector<std::uint64_t>> local(std::max(1, jobs), std::vector<std::uint64_t>(n + 1, 0));
  scan_all_messages(code, jobs, [&](int worker, const std::vector<int>&, int zeros) {
    ++local[worker][n - zeros];
  });
  WeightEnumerator out{std::vector<std::uint64_t>(n + 1, 0)};
  for (const auto& l : local) {
    for (int w = 0; w <= n; ++w) out.counts[w] += l[w];
  }
  return out;
}

WeightEnumerator weight_enumerator_reduced(const LinearCode& code, int jobs) {
  const Field& f = code.field();
  const int k = code.k();
  const int n = code.n();
  const int q2 = f.size();
  const ProjectiveIndex index(k, q2);
  if (!reduced_feasible(code)) return weight_enumerator_exhaustive(code, jobs);

  const Matrix shift = shift_matrix(code);
  bool diagonal = true;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      if (r != c && !shift(r, c).is_zero()) diagonal = false;
    }
  }

  // x -> x * S, then rescale so the leading nonzero coordinate is one.
  auto step = [&](const std::vector<Elem>& v, std::vector<Elem>& out) {
    if (diagonal) {
      for (int c = 0; c < k; ++c) out[c] = f.mul(v[c], shift(c, c));
    } else {
      for (int c = 0; c < k; ++c) {
        Elem acc = Field::zero();
        for (int r = 0; r < k; ++r) acc = f.add(acc, f.mul(v[r], shift(r, c)));
        out[c] = acc;
      }
    }
    int lead = 0;
    while (out[lead].is_zero()) ++lead;
    const Elem s = f.inv(out[lead]);
    for (int c = lead; c < k; ++c) out[c] = f.mul(out[c], s);
  };

  struct Rep {
    std::uint64_t index;
    std::uint64_t orbit_size;  // projective orbit size under the shift
  };
  std::vector<Rep> reps;
  std::vector<std::uint64_t> seen((index.size() + 63) / 64, 0);
  auto mark = [&](std::uint64_t i) { seen[i / 64] |= std::uint64_t{1} << (i % 64); };
  auto marked = [&](std::uint64_t i) { return (seen[i / 64] >> (i % 64)) & 1; };
  std::vector<Elem> v(k), w(k);
  if (diagonal) {
    // The support and leading coordinate are invariant, so walk the
    // discrete logs of the trailing coordinates directly.
    const int order = f.group_order();
    std::vector<int> shift_log(k);
    for (int r = 0; r < k; ++r) shift_log[r] = f.log(shift(r, r));
    std::vector<std::uint64_t> place(k, 1);
    for (int r = k - 2; r >= 0; --r) place[r] = place[r + 1] * q2;
    std::vector<int> pos, logs, delta;
    for (std::uint64_t idx = 0; idx < index.size(); ++idx) {
      if (marked(idx)) continue;
      index.vector_of(idx, v);
      int lead = 0;
      while (v[lead].is_zero()) ++lead;
      pos.clear();
      logs.clear();
      delta.clear();
      for (int r = lead + 1; r < k; ++r) {
        if (v[r].is_zero()) continue;
        pos.push_back(r);
        logs.push_back(f.log(v[r]));
        delta.push_back(((shift_log[r] - shift_log[lead]) % order + order) % order);
      }
      const std::uint64_t block = idx - [&] {
        std::uint64_t off = 0;
        for (std::size_t t = 0; t < pos.size(); ++t) off += v[pos[t]].enc * place[pos[t]];
        return off;
      }();
      std::uint64_t size = 0;
      std::uint64_t cur = idx;
      do {
        mark(cur);
        ++size;
        std::uint64_t off = 0;
        for (std::size_t t = 0; t < pos.size(); ++t) {
          logs[t] += delta[t];
          if (logs[t] >= order) logs[t] -= order;
          off += f.exp(logs[t]).enc * place[pos[t]];
        }
        cur = block + off;
      } while (cur != idx);
      reps.push_back({idx, size});
    }
  } else {
    for (std::uint64_t idx = 0; idx < index.size(); ++idx) {
      if (marked(idx)) continue;
      index.vector_of(idx, v);
      std::uint64_t size = 0;
      std::uint64_t cur = idx;
      do {
        mark(cur);
        ++size;
        step(v, w);
        std::swap(v, w);
        cur = index.index_of(v);
      } while (cur != idx);
      reps.push_back({idx, size});
    }
  }
  seen = {};

  const ScaledRows rows(code);
  const int workers = std::max(1, jobs);
  std::vector<std::vector<std::uint64_t>> local(workers, std::vector<std::uint64_t>(n + 1, 0));
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (reps.size() + kChunk - 1) / kChunk;
  const std::uint64_t scalars = static_cast<std::uint64_t>(f.group_order());
  parallel_chunks(chunks, jobs, [&](int worker, std::uint64_t chunk) {
    std::vector<Elem> v(k);
    std::vector<std::uint16_t> acc(n);
    const std::uint64_t end = std::min<std::uint64_t>(reps.size(), (chunk + 1) * kChunk);
    for (std::uint64_t t = chunk * kChunk; t < end; ++t) {
      index.vector_of(reps[t].index, v);
      std::fill(acc.begin(), acc.end(), 0);
      for (int r = 0; r < k; ++r) {
        if (v[r].is_zero()) continue;
        const std::uint16_t* src = rows.row(r, v[r].enc);
        for (int j = 0; j < n; ++j) acc[j] = f.add(Elem{acc[j]}, Elem{src[j]}).enc;
      }
      int weight = 0;
      for (int j = 0; j < n; ++j) weight += (acc[j] != 0);
      local[worker][weight] += reps[t].orbit_size * scalars;
    }
  });

  WeightEnumerator out{std::vector<std::uint64_t>(n + 1, 0)};
  out.counts[0] = 1;
  for (const auto& l : local) {
    for (int w = 0; w <= n; ++w) out.counts[w] += l[w];
  }
  return out;
}

WeightEnumerator weight_enumerator(const LinearCode& code, Method method, int jobs, Method* used) {
  if (method == Method::automatic) {
    method = message_count(code) <= kAutoExhaustiveLimit ? Method::exhaustive : Method::reduced;
  }
  if (method == Method::reduced && !reduced_feasible(code)) method = Method::exhaustive;
  if (used != nullptr) *used = method;
  return method == Method::exhaustive ? weight_enumerator_exhaustive(code, jobs)
                                      : weight_enumerator_reduced(code, jobs);
}

int min_distance(const LinearCode& code, Method method, int jobs) {
  return weight_enumerator(code, method, jobs).min_distance();
}

std::vector<std::vector<Elem>> messages_of_weight(const LinearCode& code, int weight, int jobs) {
  const int n = code.n();
  const int q2 = code.field().size();
  std::vector<std::vector<std::uint64_t>> local(std::max(1, jobs));
  scan_all_messages(code, jobs, [&](int worker, const std::vector<int>& digits, int zeros) {
    if (n - zeros == weight) local[worker].push_back(message_index(digits, q2));
  });
  std::vector<std::uint64_t> all;
  for (const auto& l : local) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end());

  std::vector<std::vector<Elem>> out;
  out.reserve(all.size());
  for (std::uint64_t idx : all) {
    std::vector<Elem> msg(code.k());
    for (int r = code.k() - 1; r >= 0; --r) {
      msg[r] = Elem{static_cast<std::uint16_t>(idx % q2)};
      idx /= q2;
    }
    out.push_back(std::move(msg));
  }
  return out;
}

DistanceBounds distance_bounds(int q, int m) {
  return {q * q - q * (m - 1), q * q - 1 - (m - 2) * (q + 1)};
}

Witness upper_bound_witness(const LinearCode& code) {
  const Field& f = code.field();
  const int m = code.m();
  const Elem tau = code.orbit_spec().tau;

  std::vector<Elem> constants;
  for (Elem c : f.subfield_elements()) {
    if (!c.is_zero() && static_cast<int>(constants.size()) < m - 2) constants.push_back(c);
  }

  // prod (Y - tau c_i), coefficients of Y^0..Y^{m-2}
  std::vector<Elem> poly{Field::one()};
  for (Elem c : constants) {
    const Elem root = f.mul(tau, c);
    std::vector<Elem> next(poly.size() + 1, Field::zero());
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = f.add(next[j + 1], poly[j]);
      next[j] = f.sub(next[j], f.mul(root, poly[j]));
    }
    poly = std::move(next);
  }

  const auto mons = monomials(m);
  RRFunction fn{m, std::vector<Elem>(mons.size(), Field::zero()), Field::zero()};
  for (std::size_t t = 0; t < mons.size(); ++t) {
    if (mons[t].i == 0) fn.g[t] = poly[mons[t].j];
  }
  const auto coords = fn.coordinates();
  return {fn, encode(code, coords)};
}

std::vector<Elem> roots_of_lacunary(const Field& field, const LacunaryPoly& poly) {
  const int q = field.q();
  auto scan = [&](auto&& value_at) {
    std::vector<Elem> roots;
    for (Elem x : field.elements()) {
      if (value_at(x).is_zero()) roots.push_back(x);
    }
    return roots;
  };
  return std::visit(
      [&](const auto& p) -> std::vector<Elem> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GeneralLacunary>) {
          return scan([&](Elem x) {
            return field.add(field.add(field.pow(x, q + 1), field.mul(p.a, x)), p.b);
          });
        } else if constexpr (std::is_same_v<T, ScaledLacunary>) {
          const Elem lead = field.mul(p.tau, p.b2);
          if (lead.is_zero()) throw UsageError("scaled lacunary polynomial needs tau*b2 != 0");
          return scan([&](Elem x) {
            return field.add(field.add(field.mul(lead, field.pow(x, q + 1)), field.mul(p.b1, x)), p.b0);
          });
        } else {
          const Elem lead = field.mul(p.b1, p.tau);
          if (lead.is_zero()) throw UsageError("shifted lacunary polynomial needs b1*tau != 0");
          return scan([&](Elem x) { return field.add(field.mul(lead, field.pow(x, q - 1)), Field::one()); });
        }
      },
      poly);
}

}  // namespace hermicode
