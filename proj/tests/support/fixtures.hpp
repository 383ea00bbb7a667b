#pragma once

#include "mfl/instance.hpp"

namespace mfl::test {

// Hand-built micro-instances. Every expected objective and move delta used in
// the tests was computed on paper from these exact numbers, so treat the data
// as frozen: changing any cost invalidates dozens of assertions.

// Two stores, one facility per layer, everything connected.
//   revenue [100, 80]; store fixed [10, 10]; plant 40; warehouse 30; dc 20;
//   legs plant->warehouse 3, warehouse->dc 4, dc->store 5 resp. 6.
// Objectives: both open 45, only store 0 open -12, empty 0.
Instance tiny_two_stores();

// Same, but store 0 earns 120: opening store 0 from empty is worth +8, so a
// greedy first-improvement search can reach the optimum 65.
Instance tiny_two_stores_rich();

// tiny_two_stores plus a second dc (fixed 25, legs warehouse->dc 1 and
// dc->store0 2, dc bound 2): swapping store 0's dc is worth +1.
Instance tiny_second_dc();

// tiny_two_stores plus a second warehouse (fixed 25, legs plant->warehouse 1
// and warehouse->dc0 2, warehouse bound 2): swapping the warehouse is +9.
Instance tiny_second_warehouse();

// tiny_two_stores plus a second plant (fixed 35, leg plant->warehouse0 2,
// store 0 may use either plant, plant bound 2): swapping the plant is +6.
Instance tiny_second_plant();

}  // namespace mfl::test
