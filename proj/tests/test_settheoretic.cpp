#include <doctest.h>

#include "caryb/settheoretic.hpp"
#include "caryb/ybe.hpp"

using namespace caryb;

namespace {
const Field F = Field::rationals();
}

TEST_CASE("trivial quandle: rack and quandle") {
  FiniteRack r = trivial_quandle(4);
  CHECK(check_rack_axioms(r).all_passed());
  CHECK(is_quandle(r));
}

TEST_CASE("cyclic rack on Z3: a rack that is not a quandle") {
  FiniteRack r = cyclic_rack(3);
  CHECK(check_rack_axioms(r).all_passed());
  CHECK_FALSE(is_quandle(r));
}

TEST_CASE("conjugation, core and Alexander fixtures are quandles") {
  for (const GroupTable& g : {GroupTable::symmetric(3), GroupTable::dihedral(4)}) {
    FiniteRack conj = conjugation_quandle(g);
    CHECK(check_rack_axioms(conj).all_passed());
    CHECK(is_quandle(conj));
    FiniteRack conj2 = conjugation_quandle(g, 2);
    CHECK(check_rack_axioms(conj2).all_passed());
    CHECK(is_quandle(conj2));
    FiniteRack core = core_quandle(g);
    CHECK(check_rack_axioms(core).all_passed());
    CHECK(is_quandle(core));
  }
  FiniteRack alex = alexander_quandle(5, 2);
  CHECK(check_rack_axioms(alex).all_passed());
  CHECK(is_quandle(alex));
  // spot value: x*y = 2x + 4y mod 5 at (1,2): 2 + 8 = 10 = 0
  CHECK(alex.op[1][2] == 0);
  CHECK_THROWS_AS(alexander_quandle(5, 5), InputError);
}

TEST_CASE("a non-bijective column is caught with a witness") {
  FiniteRack bad = trivial_quandle(3);
  bad.op[0][1] = 1;
  bad.op[1][1] = 1;  // column y=1 no longer a bijection
  Report rep = check_rack_axioms(bad);
  CHECK_FALSE(rep.all_passed());
  const CheckResult* c = rep.find("set.translation_bijective");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
  REQUIRE(c->witness.has_value());
  CHECK(c->witness->basis_label == "column y=1");
}

TEST_CASE("conjugation augmented rack: abelian action is trivial") {
  SetAugRack z2 = conj_aug_rack(GroupTable::cyclic(2));
  CHECK(check_set_aug_rack(z2).all_passed());
  FiniteRack induced = induced_rack(z2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) CHECK(induced.op[x][y] == x);
}

TEST_CASE("S3 conjugation augmented rack matches the group table") {
  GroupTable s3 = GroupTable::symmetric(3);
  SetAugRack r = conj_aug_rack(s3);
  CHECK(check_set_aug_rack(r).all_passed());
  FiniteRack induced = induced_rack(r);
  CHECK(check_rack_axioms(induced).all_passed());
  for (int s = 0; s < 6; ++s)
    for (int t = 0; t < 6; ++t)
      CHECK(induced.op[s][t] == s3.mul(s3.mul(s3.inverse(t), s), t));
}

TEST_CASE("induced racks of every augmented fixture pass the rack axioms") {
  for (const GroupTable& g :
       {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3), GroupTable::dihedral(4)}) {
    CHECK(check_set_aug_rack(heap_aug_rack(g)).all_passed());
    CHECK(check_set_aug_rack(adjoint_aug_rack(g)).all_passed());
    CHECK(check_set_aug_rack(conj_aug_rack(g)).all_passed());
    CHECK(check_rack_axioms(induced_rack(heap_aug_rack(g))).all_passed());
    CHECK(check_rack_axioms(induced_rack(adjoint_aug_rack(g))).all_passed());
    CHECK(check_rack_axioms(induced_rack(conj_aug_rack(g))).all_passed());
  }
}

TEST_CASE("heap tables: frozen Z2 values") {
  SetAugRack r = heap_aug_rack(GroupTable::cyclic(2));
  // ν(a,e) = a⁻¹e = a (index 1); (e,a)·a = (a,e)
  CHECK(r.nu[2] == 1);            // carrier index 2 = (a,e)
  CHECK(r.action[1][1] == 2);     // (e,a)·a = (a,e)
  CHECK(check_set_aug_rack(r).all_passed());
}

TEST_CASE("set-theoretic YBE holds by enumeration for all fixtures") {
  for (const GroupTable& g : {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3)}) {
    CHECK(check_set_ybe(induced_rack(heap_aug_rack(g))).passed);
    CHECK(check_set_ybe(induced_rack(adjoint_aug_rack(g))).passed);
    CHECK(check_set_ybe(induced_rack(conj_aug_rack(g))).passed);
  }
  CHECK(check_set_ybe(cyclic_rack(5)).passed);
  CHECK(check_set_ybe(alexander_quandle(5, 2)).passed);
}

TEST_CASE("linearize certifies and lands on the same maps as the categorical heap") {
  GroupTable z3 = GroupTable::cyclic(3);
  RackBuildResult lin = linearize(heap_aug_rack(z3), F);
  REQUIRE(lin.rack.has_value());
  RackBuildResult cat = heap_rack(group_algebra(z3, F));
  REQUIRE(cat.rack.has_value());
  CHECK(lin.rack->nu == cat.rack->nu);
  CHECK(lin.rack->X.action == cat.rack->X.action);
  CHECK(lin.rack->X.delta == cat.rack->X.delta);

  RackBuildResult lin_conj = linearize(conj_aug_rack(GroupTable::cyclic(2)), F);
  CHECK(lin_conj.rack.has_value());
  RackBuildResult lin_pt = linearize(heap_aug_rack(GroupTable::trivial()), F);
  REQUIRE(lin_pt.rack.has_value());
  CHECK(lin_pt.rack->space().dim() == 1);
}

TEST_CASE("oracle_compare matches heap and adjoint families over Z2, Z3, S3") {
  for (const GroupTable& g : {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3)}) {
    HopfPtr h = group_algebra(g, F);
    RackBuildResult heap = heap_rack(h);
    REQUIRE(heap.rack.has_value());
    CHECK(oracle_compare(heap_aug_rack(g), *heap.rack).all_passed());
    RackBuildResult adj = adjoint_rack(h);
    REQUIRE(adj.rack.has_value());
    CHECK(oracle_compare(adjoint_aug_rack(g), *adj.rack).all_passed());
  }
  // trivial group: both sides are the one-point rack
  RackBuildResult pt = heap_rack(group_algebra(GroupTable::trivial(), F));
  CHECK(oracle_compare(heap_aug_rack(GroupTable::trivial()), *pt.rack).all_passed());
}

TEST_CASE("oracle_compare flags a deliberate table mismatch") {
  GroupTable z3 = GroupTable::cyclic(3);
  RackBuildResult cat = heap_rack(group_algebra(z3, F));
  REQUIRE(cat.rack.has_value());
  SetAugRack tampered = heap_aug_rack(z3);
  std::swap(tampered.nu[1], tampered.nu[2]);  // breaks ν but not the labels
  Report rep = oracle_compare(tampered, *cat.rack);
  CHECK_FALSE(rep.all_passed());
  const CheckResult* c = rep.find("oracle.nu");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed);
}
