#include "ponyexpress/validate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "ponyexpress/error.hpp"

namespace pony {

double domain_lo(Variant v) { return v == Variant::kPony ? 0.0 : -1.0; }
double domain_hi(Variant) { return 1.0; }

bool robot_less(const Robot& a, const Robot& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.v != b.v) return a.v > b.v;  // faster first among position ties
  return a.id < b.id;
}

ValidatedInstance validate(const ProblemInstance& inst) {
  if (inst.robots.empty()) fail(Errc::kEmptyRobotSet, "instance has no robots");
  const double lo = domain_lo(inst.variant);
  const double hi = domain_hi(inst.variant);
  std::unordered_set<int> seen;
  for (const Robot& r : inst.robots) {
    if (!std::isfinite(r.p) || r.p < lo || r.p > hi) {
      fail(Errc::kPositionOutOfDomain,
           "robot " + std::to_string(r.id) + " at p=" + std::to_string(r.p) +
               " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
               "]");
    }
    if (!std::isfinite(r.v) || r.v <= 0.0) {
      fail(Errc::kNonPositiveSpeed,
           "robot " + std::to_string(r.id) + " has v=" + std::to_string(r.v));
    }
    if (!seen.insert(r.id).second) {
      fail(Errc::kDuplicateId, "robot id " + std::to_string(r.id) + " repeats");
    }
  }
  ProblemInstance sorted = inst;
  for (Robot& r : sorted.robots) r.release = 0.0;  // user robots start active
  std::sort(sorted.robots.begin(), sorted.robots.end(), robot_less);
  return ValidatedInstance(std::move(sorted));
}

}  // namespace pony
