#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omega/gcore/globset.hpp"
#include "omega/monads/monad.hpp"
#include "omega/opweak/space.hpp"

namespace omega::opweak {

inline constexpr std::size_t kMaxTrimbleDepth = 2;

struct TrimbleLevel {
  std::size_t n = 0;
  Mode mode = Mode::Incoherent;
  BasePtr base;
  MonadPtr monad;                   // iT_n
  std::optional<FinOperad> operad;  // Π_{n-1}(seed), from level 1 on

  /// The fundamental n-structure of a space: carrier of an iT_n-algebra.
  [[nodiscard]] Obj fundamental(const Space& x, std::size_t bound) const { return pi_n(x, n, mode, bound); }
  [[nodiscard]] gcore::CellFn action() const { return fundamental_action(n, mode); }
};

/// T⁺ = fc weighted by the operad, composed with T applied locally.
MonadPtr dm_step(MonadPtr t, const FinOperad& weights);

/// Levels 0..n.  Level 0 is the identity monad on sets; level k applies
/// dm_step to level k-1 with weights Π_{k-1}(seed).  The seed is an operad
/// of discrete spaces given by its points; its cap bounds the path lengths
/// that can be composed.  n > 2 throws monads::UnsupportedDepth.
std::vector<TrimbleLevel> trimble_tower(const FinOperad& seed, std::size_t n, Mode mode);

/// iT_n cells to T_n cells: the weight factor is dropped at every level.
gcore::CellFn relabel_to_strict(std::size_t n);

/// iT_n against the strict T_n on x: relabel_to_strict is a size-preserving
/// bijection in each dimension and carries units and multiplications across.
std::optional<std::string> check_strict_collapse(const FinOperad& seed, Mode mode, std::size_t n, const Obj& x,
                                                 std::size_t bound);

/// P_k for the depth-n composite: fc weighted by Π_{n-1-k}(seed), applied
/// locally k times.
MonadPtr pk_monad(const FinOperad& seed, Mode mode, std::size_t n, std::size_t k);

struct CompositeReport {
  std::size_t n = 0;
  std::size_t bound = 0;
  std::vector<std::size_t> towerCounts;      // per dimension, iT_n(x)
  std::vector<std::size_t> compositeCounts;  // per dimension, P_0 ... P_{n-1}(x)
  std::optional<std::string> witness;        // first cell found on one side only
  [[nodiscard]] bool ok() const { return !witness.has_value(); }
};

/// Cells of dimension <= n of iT_n(x) and P_0 P_1 ... P_{n-1}(x) of size
/// <= bound coincide.  x is truncated to n first.
CompositeReport composite_check(const FinOperad& seed, Mode mode, const gcore::GlobSet& x, std::size_t n,
                                std::size_t bound);

nlohmann::json to_json(const CompositeReport& r);

}  // namespace omega::opweak
