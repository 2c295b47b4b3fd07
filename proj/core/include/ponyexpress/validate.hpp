#pragma once

#include "ponyexpress/types.hpp"

namespace pony {

// Position domain for initial placements: [0,1] for pony, [-1,1] otherwise.
double domain_lo(Variant v);
double domain_hi(Variant v);

// Canonical robot order used everywhere: position ascending, then speed
// descending, then id ascending.
bool robot_less(const Robot& a, const Robot& b);

// An instance that went through validate(): nonempty, ids unique, speeds
// positive, positions inside the variant domain, robots in canonical order.
class ValidatedInstance {
 public:
  const ProblemInstance& get() const { return inst_; }
  Variant variant() const { return inst_.variant; }
  const std::vector<Robot>& robots() const { return inst_.robots; }
  // Dense speed column in robot order; solver filter scans stream this
  // instead of striding over whole Robot records.
  const std::vector<double>& speeds() const { return speeds_; }

 private:
  friend ValidatedInstance validate(const ProblemInstance& inst);
  explicit ValidatedInstance(ProblemInstance inst) : inst_(std::move(inst)) {
    speeds_.reserve(inst_.robots.size());
    for (const Robot& r : inst_.robots) speeds_.push_back(r.v);
  }
  ProblemInstance inst_;
  std::vector<double> speeds_;
};

ValidatedInstance validate(const ProblemInstance& inst);

}  // namespace pony
