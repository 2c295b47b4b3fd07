#pragma once

namespace pony {

// All functions take positions at a common reference time 0 and return the
// elapsed time until the pair occupies one point, or +infinity if they never
// do. Positions are 1-D; pa <= pb is required where stated.

// a at pa moving right, b at pb >= pa moving left (head-on closing).
double meet_time_converging(double pa, double va, double pb, double vb);

// Both moving left toward the source; b starts at pb >= pa and chases a.
// +infinity unless b is strictly faster (coincident starts then meet at 0).
double meet_time_catch_up(double pa, double va, double pb, double vb);

// Carrier started at carrier_p at time 0 moving toward the source, turned
// around at acquisition time carrier_acq, and now moves right; next started
// at next_p >= carrier_p moving left the whole time. Returns their meeting
// time measured from time 0.
double meet_time_carrier(double carrier_p, double carrier_v, double carrier_acq,
                         double next_p, double next_v);

}  // namespace pony
