#pragma once

#include <cstdint>

namespace f5b {

/// Work counters shared by all engines.
struct RunStats {
  std::uint64_t pairs_created = 0;
  std::uint64_t rejected_syzygy = 0;
  std::uint64_t rejected_rewritten = 0;
  std::uint64_t rejected_sig_tie = 0;  ///< pairs whose two multiplied signatures coincide
  std::uint64_t reduction_steps = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t basis_size = 0;
  std::uint64_t elapsed_ms = 0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

}  // namespace f5b
