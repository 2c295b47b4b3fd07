#include "ponyexpress/transform.hpp"

#include "ponyexpress/error.hpp"

namespace pony {

ValidatedInstance reflect(const ValidatedInstance& inst) {
  if (inst.variant() == Variant::kPony) {
    fail(Errc::kVariantMismatch, "pony instances live on [0,1]; cannot reflect");
  }
  ProblemInstance mirrored = inst.get();
  // p == 0 stays +0.0 so reflected instances serialize identically there.
  for (Robot& r : mirrored.robots) r.p = r.p == 0.0 ? 0.0 : -r.p;
  return validate(mirrored);
}

}  // namespace pony
