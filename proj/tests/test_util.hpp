#pragma once

#include <stdexcept>
#include <vector>

#include "loopsmith/core.hpp"
#include "loopsmith/generation.hpp"

namespace lst {

inline loopsmith::LoopTable z4() { return loopsmith::cyclic_group(4); }

inline std::vector<loopsmith::LoopTable> loops_up_to(int max_order) {
  std::vector<loopsmith::LoopTable> out;
  for (int n = 1; n <= max_order; ++n)
    for (auto& L : loopsmith::all_loops_vec({n, true, std::nullopt}))
      out.push_back(std::move(L));
  return out;
}

template <typename Fn>
loopsmith::Err error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const loopsmith::LoopError& e) {
    return e.kind;
  }
  throw std::runtime_error("expected a LoopError");
}

}  // namespace lst
