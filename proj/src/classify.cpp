#include "lck/lck.hpp"

namespace lck {

std::string to_string(Admits a) {
  switch (a) {
    case Admits::Yes: return "yes";
    case Admits::No: return "no";
    case Admits::Inconclusive: return "inconclusive";
  }
  return "?";
}

Classification classify_reductive(const LieAlgebra& g, const RankOptions& opts) {
  const ReductiveSplit split = reductive_split(g);
  Classification out;
  out.center_dim = static_cast<int>(split.t.dim());
  bool no = false;
  if (g.dim() % 2 != 0) {
    no = true;
    out.reasons.push_back("odd dimension " + std::to_string(g.dim()));
  }
  if (out.center_dim != 1) {
    no = true;
    out.reasons.push_back("dim center = " + std::to_string(out.center_dim));
  }
  if (split.s.dim() == 0) {
    out.reasons.push_back("[g, g] = 0");
    out.admits = Admits::No;
    return out;
  }
  out.rank = rank_estimate(g, split.s, opts);
  const int r = out.rank.upper_bound;
  if (r == 1) {
    out.reasons.push_back("rank [g, g] = 1");
  } else if (out.rank.certified) {
    no = true;
    out.reasons.push_back("rank [g, g] = " + std::to_string(r) + " (certified)");
  } else {
    out.reasons.push_back("rank [g, g] <= " + std::to_string(r) + " (uncertified)");
  }
  if (no)
    out.admits = Admits::No;
  else
    out.admits = r == 1 ? Admits::Yes : Admits::Inconclusive;
  return out;
}

}  // namespace lck
