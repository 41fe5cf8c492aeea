#ifndef RPS_CORE_HPP
#define RPS_CORE_HPP

#include <cstdint>

#include "rps/enumeration.hpp"
#include "rps/flow.hpp"
#include "rps/instance.hpp"
#include "rps/payment.hpp"

namespace rps {

/// Each player node sits between the two auxiliary edges (s-bar, i) and
/// (i, t-bar); a payment is the imbalance carried by this pair. The
/// orientation fixes which direction encodes a positive payment, and it
/// must be applied consistently to both reading payments out of a flow and
/// rebuilding a flow from payments:
///
///   PaymentToAuxSink (default):
///     extraction       p_i = f(i, t-bar) - f(s-bar, i)
///     reconstruction   cap(i, t-bar) = max(p_i, 0),
///                      cap(s-bar, i) = max(-p_i, 0)
///   PaymentFromAuxSource (mirror image):
///     extraction       p_i = f(s-bar, i) - f(i, t-bar)
///     reconstruction   cap(s-bar, i) = max(p_i, 0),
///                      cap(i, t-bar) = max(-p_i, 0)
///
/// Only the default orientation produces core vectors in the forward
/// direction and closes the reconstruction round trip; the mirrored one is
/// kept selectable so the asymmetry stays visible and under test.
enum class FlowOrientation { PaymentToAuxSink, PaymentFromAuxSource };

inline constexpr FlowOrientation kDefaultOrientation =
    FlowOrientation::PaymentToAuxSink;

/// Reads the payment vector out of a solved profit-sharing graph. The flow
/// must have value H (every maximum flow does); otherwise
/// Error(FlowNotMaximal). The resulting vector is integral and satisfies
/// the core conditions under the default orientation.
PaymentVector payment_from_flow(const RpsInstance& instance,
                                const ProfitSharingGraph& graph,
                                FlowOrientation orientation =
                                    kDefaultOrientation);

/// One core element, computed in polynomial time: build the profit-sharing
/// graph, push a maximum flow through it, read the payments back.
/// No 2^n enumeration on this path.
PaymentVector core_element(const RpsInstance& instance,
                           FlowOrientation orientation = kDefaultOrientation);

/// Result of the exhaustive core membership check.
struct CoreCheck {
  enum class Property { Efficiency, CoalitionalRationality };

  bool in_core = false;
  Property violated = Property::Efficiency;
  Coalition witness;  // offending coalition (N for efficiency)
  Rational gap;       // v(S) - p(S); how far the property is missed

  static CoreCheck ok() { return CoreCheck{true, Property::Efficiency, {}, 0}; }
};

/// p is in the core iff p(N) = v(N) and p(S) >= v(S) for every coalition
/// (individual rationality is the one-member case). Efficiency is checked
/// first; a coalitional violation reports the lexicographically least
/// witness. Errors: TooLarge.
CoreCheck is_core(const RpsInstance& instance, const PaymentVector& payments,
                  int max_n = kDefaultEnumLimit, Exec exec = Exec::Parallel);

/// The unique core element of an instance whose reward and penalty sets
/// all have exactly one member: p_k = (rewards on {k}) - (penalties on
/// {k}). Errors: NotSingletonInstance.
PaymentVector singleton_core(const RpsInstance& instance);

/// What to do when the computed capacity of the (s-bar, t-bar) bypass edge
/// comes out negative during reconstruction (possible only for payment
/// vectors outside the core under the default orientation).
enum class ClampPolicy { ClampToZero, Reject };

/// A feasible flow of value H realizing a given core vector.
struct FlowReconstruction {
  ProfitSharingGraph graph;     // finite capacities, solved to value H
  RpsInstance scaled_instance;  // weights multiplied by scale
  BigInt scale;                 // common denominator of the input payments
  std::int64_t value = 0;       // achieved flow value = H(scaled_instance)
  bool bypass_clamped = false;  // negative bypass capacity clamped to zero
  FlowOrientation orientation = kDefaultOrientation;

  /// Payments read back from the reconstructed flow, rescaled; equals the
  /// input vector.
  PaymentVector payments() const;
};

/// Rebuilds a feasible flow of value H that induces a given core vector,
/// by replacing the unbounded auxiliary capacities with the finite ones
/// determined by p (see FlowOrientation) and solving for a maximum flow.
///
/// Non-integral vectors are handled exactly: the instance and payments are
/// scaled by the common denominator, solved integrally, and the readback
/// divides the factor out again.
///
/// Errors: NotInCore (p fails is_core; checked when n is within max_n),
/// NegativeAuxCapacity (bypass went negative under ClampPolicy::Reject),
/// Overflow (scaling leaves the 64-bit range), ReconstructionFailed (the
/// maximum flow fell short of H - impossible for a core vector under the
/// default orientation and treated as an internal consistency failure).
FlowReconstruction flow_from_core(const RpsInstance& instance,
                                  const PaymentVector& payments,
                                  FlowOrientation orientation =
                                      kDefaultOrientation,
                                  ClampPolicy clamp = ClampPolicy::ClampToZero,
                                  int max_n = kDefaultEnumLimit);

}  // namespace rps

#endif  // RPS_CORE_HPP
