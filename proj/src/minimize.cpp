#include "fg/minimize.hpp"

namespace fg {

MinimizationResult greedy_minimize(const CyclicWord& w) {
  const auto moves = enumerate_type_II(w.rank());
  MinimizationResult res{w, {}, 0, 0};
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& move : moves) {
      res.letters_examined += res.minimal.size();
      CyclicWord image = apply_cyclic(move, res.minimal);
      if (image.size() < res.minimal.size()) {
        res.minimal = std::move(image);
        res.witness.push(move);
        ++res.rounds;
        progress = true;
        break;
      }
    }
  }
  return res;
}

bool is_minimal(const CyclicWord& w, std::uint64_t* letters_examined) {
  for (const auto& move : enumerate_type_II(w.rank())) {
    if (letters_examined) *letters_examined += w.size();
    if (apply_cyclic(move, w).size() < w.size()) return false;
  }
  return true;
}

bool is_strictly_minimal(const CyclicWord& w, std::uint64_t* letters_examined) {
  for (const auto& move : enumerate_type_II(w.rank())) {
    if (letters_examined) *letters_examined += w.size();
    const CyclicWord image = apply_cyclic(move, w);
    if (image.size() < w.size()) return false;           // not even minimal
    if (image.size() == w.size() && !(image == w)) return false;
  }
  return true;
}

}  // namespace fg
