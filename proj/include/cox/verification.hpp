#pragma once

#include <string>
#include <vector>

namespace cox {

struct CheckReport {
  bool pass = false;
  std::vector<std::string> lines;
};

// Named verification drivers over the built-in instances.
CheckReport check_f4_roots();
// Marking halfspaces are invariant under M1/M2 moves, exhaustively.
CheckReport check_move_invariance(int cutoff = 100);
// Folded maps are 1-Lipschitz with equality per the injective-arc criterion.
CheckReport check_fold_lemma(int ball_radius = 4);
// Twisting preserves exposedness of maximal irreducible triples.
CheckReport check_exposed_preserved();
// Standard sets have consistent doubles; the twisted path434 set does not,
// its unique peripheral double being {s,t}, and the partition twist descends.
CheckReport check_doubles(int radius = 10, int cutoff = 100);

CheckReport run_named_check(const std::string& name, int radius, int cutoff);

}  // namespace cox
