#include <catch2/catch_amalgamated.hpp>

#include "sextor/exactness.hpp"
#include "sextor/fixtures.hpp"

using namespace sextor;

namespace {
Ideal of_names(const FinCategory& c, std::initializer_list<const char*> names) {
  std::vector<MorId> ms;
  for (auto n : names) ms.push_back(*c.find_mor(n));
  return Ideal::from_morphisms(c, ms);
}
}  // namespace

TEST_CASE("absorption holds for the zero-map ideal and fails for {i}") {
  auto [ps2, n] = fixtures::ps2();
  CHECK(is_ideal(ps2, n).ok);
  CHECK(n.size() == 4);  // id1, i, r, c
  for (auto name : {"id1", "i", "r", "c"}) CHECK(n.contains(*ps2.find_mor(name)));

  Ideal just_i = of_names(ps2, {"i"});
  auto chk = is_ideal(ps2, just_i);
  CHECK_FALSE(chk.ok);
  CHECK(chk.witness == "r . i = id1");

  CHECK(is_ideal(ps2, Ideal::all(ps2)).ok);
}

TEST_CASE("null objects are those with null identity") {
  auto [ps2, n] = fixtures::ps2();
  auto nulls = null_objects(ps2, n);
  REQUIRE(nulls.size() == 1);
  CHECK(ps2.obj_name(nulls[0]) == "P1");

  auto z = fixtures::z1();
  CHECK(null_objects(z.cat, z.null_ideal).size() == 1);

  FinCategory ch3 = build_chain(3);
  CHECK(null_objects(ch3, Ideal::none(ch3)).empty());
}

TEST_CASE("closedness demands factorizations through null objects") {
  auto [ps2, n] = fixtures::ps2();
  CHECK(is_closed(ps2, n).ok);

  // {m1_2} on the chain absorbs (nothing escapes) but has no null object
  FinCategory ch2 = build_chain(2);
  Ideal m12 = of_names(ch2, {"m1_2"});
  CHECK(is_ideal(ch2, m12).ok);
  auto closed = is_closed(ch2, m12);
  CHECK_FALSE(closed.ok);
  CHECK(ch2.mor_name(closed.failing) == "m1_2");

  CHECK(is_closed(ch2, Ideal::none(ch2)).ok);
}

TEST_CASE("ideals generated by objects carry witnesses and pass both checks") {
  FinCategory ps2 = build_pointed_sets(2);
  Ideal through_p1 = ideal_from_objects(ps2, {*ps2.find_obj("P1")});
  CHECK(through_p1.size() == 4);
  CHECK_FALSE(through_p1.contains(*ps2.find_mor("id2")));
  CHECK(is_ideal(ps2, through_p1).ok);
  CHECK(is_closed(ps2, through_p1).ok);
  // c factors as i ∘ r through P1
  auto w = through_p1.closure_witness(*ps2.find_mor("c"));
  REQUIRE(w.has_value());
  CHECK(ps2.try_compose(w->second, w->first) == *ps2.find_mor("c"));

  // everything factors through P2 (id1 = r ∘ i)
  Ideal through_p2 = ideal_from_objects(ps2, {*ps2.find_obj("P2")});
  CHECK(through_p2.size() == 5);

  CHECK(ideal_from_objects(ps2, {}).size() == 0);

  // agreement with the compositional closure of the generators
  Ideal closure = ideal_closure(ps2, of_names(ps2, {"id1"}));
  CHECK(closure == through_p1);
}

TEST_CASE("reflecting and coreflecting null morphisms") {
  auto [ps2, n] = fixtures::ps2();
  MorId i = *ps2.find_mor("i"), r = *ps2.find_mor("r"), id2 = *ps2.find_mor("id2");
  CHECK_FALSE(reflects_null(ps2, n, r));  // r∘id2 = r is null, id2 is not
  CHECK(reflects_null(ps2, n, i));        // every morphism into P1 is null
  CHECK(reflects_null(ps2, n, id2));

  CHECK_FALSE(coreflects_null(ps2, n, i));  // id2∘i = i null but id2 not
  CHECK(coreflects_null(ps2, n, r));
}

TEST_CASE("reflects-null agrees with kernel-domain nullity everywhere") {
  for (auto inst : {fixtures::ps2(), fixtures::ps3()}) {
    const FinCategory& c = inst.cat;
    const Ideal& n = inst.null_ideal;
    for (MorId m = 0; m < c.n_morphisms(); ++m) {
      auto via_kernel = reflects_null_via_kernel(c, n, m);
      REQUIRE(via_kernel.has_value());
      CHECK(*via_kernel == reflects_null(c, n, m));
      auto via_cokernel = coreflects_null_via_cokernel(c, n, m);
      REQUIRE(via_cokernel.has_value());
      CHECK(*via_cokernel == coreflects_null(c, n, m));
    }
  }

  // kernel of i has null domain, kernel of r does not
  auto [ps2, n] = fixtures::ps2();
  CHECK(*reflects_null_via_kernel(ps2, n, *ps2.find_mor("i")));
  CHECK_FALSE(*reflects_null_via_kernel(ps2, n, *ps2.find_mor("r")));
}

TEST_CASE("kernels reflect and cokernels coreflect on the fixtures") {
  for (auto inst : {fixtures::ps2(), fixtures::ps3(), fixtures::z1()}) {
    const FinCategory& c = inst.cat;
    const Ideal& n = inst.null_ideal;
    for (MorId m = 0; m < c.n_morphisms(); ++m) {
      if (auto k = kernel(c, n, m)) CHECK(reflects_null(c, n, k->kernel));
      if (auto q = cokernel(c, n, m)) CHECK(coreflects_null(c, n, q->kernel));
    }
  }
}

TEST_CASE("morphisms into null objects are absorbed") {
  auto [ps2, n] = fixtures::ps2();
  for (MorId m = 0; m < ps2.n_morphisms(); ++m)
    if (is_null_object(ps2, n, ps2.cod(m))) CHECK(n.contains(m));
}
