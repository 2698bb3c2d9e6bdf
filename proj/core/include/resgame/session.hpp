#pragma once

#include <cstddef>
#include <cstdint>

#include "resgame/prover.hpp"

namespace resgame {

struct EnumerationCaps {
  std::size_t max_pool = 12;
  std::uint64_t max_profiles = std::uint64_t{1} << 20;
};

struct SessionOptions {
  ProverLimits prover;
  EnumerationCaps caps;
  unsigned jobs = 1;
};

// One analysis: a prover whose memo table is shared by every query, plus
// the enumeration caps and worker count used by the game algorithms.
class Session {
 public:
  explicit Session(SessionOptions options = {});

  Prover& prover() noexcept { return prover_; }
  const EnumerationCaps& caps() const noexcept { return options_.caps; }
  unsigned jobs() const noexcept { return options_.jobs; }
  const SessionOptions& options() const noexcept { return options_; }

  bool entails(const ResourceBag& context, const Formula& goal, LogicMode mode) {
    return prover_.entails_goal(context, goal, mode);
  }
  std::uint64_t queries() const noexcept { return prover_.queries(); }

 private:
  SessionOptions options_;
  Prover prover_;
};

}  // namespace resgame
