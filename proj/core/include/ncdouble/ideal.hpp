#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ncdouble/ncpoly.hpp"

namespace ncd {

/// NotDetected is not a proof of non-membership: the test is truncated at a
/// degree bound and non-homogeneous relations may need higher cancellations.
enum class Membership { Member, NotDetected };

enum class MembershipMode { Symbolic, Specialized };

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct MembershipOptions {
  MembershipMode mode = MembershipMode::Specialized;
  std::uint64_t seed = kDefaultSeed;
  unsigned trials = 3;
  /// Fresh points drawn per trial after a pole before giving up.
  unsigned retry_cap = 32;
};

const char* to_string(Membership m);
const char* to_string(MembershipMode m);

/// The degree-truncated span of {u r v : deg(u r v) <= bound}, eliminated
/// once and reused for any number of membership queries. In specialized mode
/// one echelon basis is kept per trial, each at its own random point.
class IdealSpan {
 public:
  IdealSpan(const std::vector<NCPoly>& relations, int degree_bound, const MembershipOptions& options = {});
  ~IdealSpan();
  IdealSpan(IdealSpan&&) noexcept;
  IdealSpan& operator=(IdealSpan&&) noexcept;

  /// Throws BoundTooSmall when deg(p) exceeds the bound.
  Membership contains(const NCPoly& p) const;
  int degree_bound() const { return bound_; }
  /// Number of independent rows in the span (first trial in specialized mode).
  std::size_t rank() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  int bound_;
};

Membership ideal_membership(const std::vector<NCPoly>& relations, const NCPoly& p, int degree_bound,
                            const MembershipOptions& options = {});

}  // namespace ncd
