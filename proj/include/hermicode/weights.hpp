#pragma once

// Weight enumerators of evaluation codes, by brute force over all messages
// and by enumerating one message per orbit of the group generated by
// nonzero scalars and the coordinate shift.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hermicode/agcode.hpp"
#include "hermicode/rrspace.hpp"

namespace hermicode {

struct WeightEnumerator {
  std::vector<std::uint64_t> counts;  // counts[w] for w = 0..n

  int n() const { return static_cast<int>(counts.size()) - 1; }
  std::uint64_t total() const;
  std::uint64_t count(int w) const;
  /// Distinct nonzero weights with a nonzero count, ascending.
  std::vector<int> nonzero_weights() const;
  /// Smallest nonzero weight; 0 for the zero code.
  int min_distance() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

enum class Method { exhaustive, reduced, automatic };

std::string to_string(Method m);
/// Throws UsageError on an unknown name.
Method method_from_string(const std::string& name);

/// q^{2k} above which the exhaustive method refuses to run.
inline constexpr std::uint64_t kExhaustiveGuard = std::uint64_t{1} << 26;
/// Projective message count above which orbit bookkeeping is refused.
inline constexpr std::uint64_t kReducedGuard = std::uint64_t{1} << 30;
/// q^{2k} up to which Method::automatic picks the exhaustive method.
inline constexpr std::uint64_t kAutoExhaustiveLimit = std::uint64_t{1} << 22;

/// Number of messages q^{2k}, saturated at UINT64_MAX.
std::uint64_t message_count(const LinearCode& code);

/// True iff the exhaustive method runs within its guard.
bool exhaustive_feasible(const LinearCode& code);
/// True iff the orbit bookkeeping of the reduced method fits its guard.
bool reduced_feasible(const LinearCode& code);
/// True iff some enumeration method runs within its guard.
bool enumeration_feasible(const LinearCode& code);

/// Every message, counting zeros per codeword. Throws SizeGuardError above
/// kExhaustiveGuard. Results do not depend on `jobs`.
WeightEnumerator weight_enumerator_exhaustive(const LinearCode& code, int jobs = 1);

/// One message per orbit, weighted by the exact orbit size. Falls back to
/// the exhaustive method when the bookkeeping would exceed kReducedGuard.
WeightEnumerator weight_enumerator_reduced(const LinearCode& code, int jobs = 1);

/// Dispatches on `method`; `used` receives the method that actually ran.
WeightEnumerator weight_enumerator(const LinearCode& code, Method method, int jobs = 1,
                                   Method* used = nullptr);

/// Smallest positive weight, by the selected method.
int min_distance(const LinearCode& code, Method method = Method::automatic, int jobs = 1);

/// All messages whose codeword has weight exactly `weight`, in message
/// index order. Exhaustive scan; same size guard.
std::vector<std::vector<Elem>> messages_of_weight(const LinearCode& code, int weight, int jobs = 1);

/// Distance bounds [q^2 - q(m-1), q^2 - 1 - (m-2)(q+1)].
struct DistanceBounds {
  int lower;
  int upper;
};
DistanceBounds distance_bounds(int q, int m);

struct Witness {
  RRFunction function;
  Codeword word;
};

/// f = y * prod_{i=1}^{m-2} (y - tau c_i) / x^m with c_1 < c_2 < ... the
/// smallest-encoded elements of F_q^*. Its codeword has weight
/// q^2 - 1 - (m-2)(q+1).
Witness upper_bound_witness(const LinearCode& code);

/// X^{q+1} + a X + b.
struct GeneralLacunary {
  Elem a;
  Elem b;
};
/// tau b2 X^{q+1} + b1 X + b0, requires tau b2 != 0.
struct ScaledLacunary {
  Elem tau;
  Elem b2;
  Elem b1;
  Elem b0;
};
/// b1 tau X^{q-1} + 1, requires b1 tau != 0.
struct ShiftedLacunary {
  Elem b1;
  Elem tau;
};
using LacunaryPoly = std::variant<GeneralLacunary, ScaledLacunary, ShiftedLacunary>;

/// Roots in F_{q^2} by direct scan, ascending encoding. Throws UsageError
/// on a vanishing leading coefficient.
std::vector<Elem> roots_of_lacunary(const Field& field, const LacunaryPoly& poly);

}  // namespace hermicode
