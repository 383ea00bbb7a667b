#include "support/fixtures.hpp"

namespace mfl::test {

Instance tiny_two_stores() {
  Instance inst;
  inst.name = "tiny-two-stores";
  inst.num_stores = 2;
  inst.num_plants = 1;
  inst.num_warehouses = 1;
  inst.num_dcs = 1;
  inst.revenue = {100, 80};
  inst.fixed_store = {10, 10};
  inst.fixed_plant = {40};
  inst.fixed_warehouse = {30};
  inst.fixed_dc = {20};
  inst.bound_stores = 2;
  inst.bound_plants = 1;
  inst.bound_warehouses = 1;
  inst.bound_dcs = 1;
  inst.eligibility = {{0}, {0}};
  inst.pw_arcs = {{0, 0, 3}};
  inst.wd_arcs = {{0, 0, 4}};
  inst.ds_arcs = {{0, 0, 5}, {0, 1, 6}};
  inst.reindex();
  return inst;
}

Instance tiny_two_stores_rich() {
  Instance inst = tiny_two_stores();
  inst.name = "tiny-two-stores-rich";
  inst.revenue[0] = 120;
  return inst;
}

Instance tiny_second_dc() {
  Instance inst = tiny_two_stores();
  inst.name = "tiny-second-dc";
  inst.num_dcs = 2;
  inst.fixed_dc = {20, 25};
  inst.bound_dcs = 2;
  inst.wd_arcs.push_back({0, 1, 1});
  inst.ds_arcs.push_back({1, 0, 2});
  inst.reindex();
  return inst;
}

Instance tiny_second_warehouse() {
  Instance inst = tiny_two_stores();
  inst.name = "tiny-second-warehouse";
  inst.num_warehouses = 2;
  inst.fixed_warehouse = {30, 25};
  inst.bound_warehouses = 2;
  inst.pw_arcs.push_back({0, 1, 1});
  inst.wd_arcs.push_back({1, 0, 2});
  inst.reindex();
  return inst;
}

Instance tiny_second_plant() {
  Instance inst = tiny_two_stores();
  inst.name = "tiny-second-plant";
  inst.num_plants = 2;
  inst.fixed_plant = {40, 35};
  inst.bound_plants = 2;
  inst.eligibility[0] = {0, 1};
  inst.pw_arcs.push_back({1, 0, 2});
  inst.reindex();
  return inst;
}

}  // namespace mfl::test
