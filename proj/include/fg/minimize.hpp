#pragma once

#include <cstdint>

#include "fg/automorphism.hpp"
#include "fg/word.hpp"

namespace fg {

struct MinimizationResult {
  CyclicWord minimal;
  AutWitness witness;            // replays the input to `minimal`
  std::size_t rounds = 0;        // strict length reductions performed
  std::uint64_t letters_examined = 0;
};

// Greedy descent over the automorphic orbit: each round scans the type II
// automorphisms in enumeration order and applies the first one that
// strictly shortens the cyclic word. By peak reduction the fixed point is
// the minimum length in the orbit.
MinimizationResult greedy_minimize(const CyclicWord& w);

// True iff no type II automorphism strictly shortens w. One scan of E.
bool is_minimal(const CyclicWord& w, std::uint64_t* letters_examined = nullptr);

// Strict minimality: every type II automorphism either strictly lengthens
// the cyclic word or fixes its canonical form (letter permutations and
// rotations are always allowed). Implies minimality; a single scan of E,
// linear in |w| for fixed rank.
bool is_strictly_minimal(const CyclicWord& w,
                         std::uint64_t* letters_examined = nullptr);

}  // namespace fg
