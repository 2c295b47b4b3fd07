#include "ponyexpress/meet.hpp"

#include "ponyexpress/types.hpp"

namespace pony {

double meet_time_converging(double pa, double va, double pb, double vb) {
  if (pb < pa) return kInf;  // already crossed; moving apart
  return (pb - pa) / (va + vb);
}

double meet_time_catch_up(double pa, double va, double pb, double vb) {
  if (vb <= va) return kInf;
  return (pb - pa) / (vb - va);
}

double meet_time_carrier(double carrier_p, double carrier_v, double carrier_acq,
                         double next_p, double next_v) {
  // The carrier's post-turn trajectory is carrier_p + carrier_v*(t - 2*acq);
  // equate with next_p - next_v*t.
  return (next_p - carrier_p + 2.0 * carrier_acq * carrier_v) /
         (carrier_v + next_v);
}

}  // namespace pony
