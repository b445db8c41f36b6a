#include <stdexcept>

#include "doctest.h"
#include "fpcat/chain.hpp"
#include "fpcat/finvect.hpp"
#include "fpcat/target.hpp"
#include "fpcat/vcategory.hpp"

using namespace fpcat;

namespace {

// F_p[x]/(x^2), basis (1, x)
VCategory<FinVect> dual_numbers(const FinVect& k) {
  auto p = k.modulus();
  auto mult = FpMatrix::from_rows(p, 2, 4, {1, 0, 0, 0, 0, 1, 1, 0});
  auto unit = FpMatrix::from_rows(p, 2, 1, {1, 0});
  return one_object_category(k, k.obj(2), mult, unit);
}

// upper triangular 2x2 matrices over F_p, basis (E11, E12, E22); noncommutative
VCategory<FinVect> upper_triangular(const FinVect& k) {
  auto p = k.modulus();
  auto mult = FpMatrix::from_rows(p, 3, 9,
                                  {1, 0, 0, 0, 0, 0, 0, 0, 0,
                                   0, 1, 0, 0, 0, 1, 0, 0, 0,
                                   0, 0, 0, 0, 0, 0, 0, 0, 1});
  auto unit = FpMatrix::from_rows(p, 3, 1, {1, 0, 1});
  return one_object_category(k, k.obj(3), mult, unit);
}

// F_2[x]/(x^3) with one product entry corrupted so that associativity fails
VCategory<FinVect> corrupted_algebra(const FinVect& k) {
  auto p = k.modulus();
  // honest table: 1·v = v·1 = v, x·x = x², x·x² = x²·x = x²·x² = 0
  FpMatrix mult(p, 3, 9);
  auto set_col = [&](int col, int basis) { mult.set(basis, col, 1); };
  set_col(0, 0);  // 1·1 = 1
  set_col(1, 1);  // 1·x = x
  set_col(2, 2);  // 1·x² = x²
  set_col(3, 1);  // x·1 = x
  set_col(4, 2);  // x·x = x²
  set_col(6, 2);  // x²·1 = x²
  // corruption: x²·x = x  (so (x·x)·x = x but x·(x·x) = x·x² = 0)
  set_col(7, 1);
  auto unit = FpMatrix::from_rows(p, 3, 1, {1, 0, 0});
  return one_object_category(k, k.obj(3), mult, unit);
}

}  // namespace

TEST_CASE("unit V-category is valid over both cosmoi") {
  FinVect k(2);
  CHECK(check_vcategory(k, unit_vcategory(k)).ok());
  ChainCosmos w(3);
  CHECK(check_vcategory(w, unit_vcategory(w)).ok());
}

TEST_CASE("dual numbers and upper triangular algebras pass the axioms") {
  for (std::int64_t p : {2, 3}) {
    FinVect k(p);
    CHECK(check_vcategory(k, dual_numbers(k)).ok());
    CHECK(check_vcategory(k, upper_triangular(k)).ok());
  }
}

TEST_CASE("corrupted composition fails associativity at a named triple") {
  FinVect k(2);
  auto rep = check_vcategory(k, corrupted_algebra(k));
  REQUIRE_FALSE(rep.ok());
  bool assoc_failure = false;
  for (const auto& f : rep.failures)
    if (f.diagram == "associativity" && f.location == "(*,*,*,*)") assoc_failure = true;
  CHECK(assoc_failure);
}

TEST_CASE("opposite: involution, unit fixed, commutative algebra fixed") {
  FinVect k(2);
  auto u = unit_vcategory(k);
  CHECK(opposite(k, u) == u);
  auto r = dual_numbers(k);
  CHECK(opposite(k, r) == r);                // commutative: m∘swap = m
  CHECK(opposite(k, opposite(k, r)) == r);   // double symmetry cancels on the nose
  auto t = upper_triangular(k);
  CHECK_FALSE(opposite(k, t) == t);          // noncommutative
  CHECK(check_vcategory(k, opposite(k, t)).ok());
  CHECK(opposite(k, opposite(k, t)) == t);
}

TEST_CASE("tensor of V-categories") {
  FinVect k(2);
  auto r = dual_numbers(k);
  auto q = free_vcategory(k, OrdCategory::span()).cat;
  auto t = tensor_vcat(k, q, q);
  CHECK(t.objects.size() == 9);
  CHECK(check_vcategory(k, t).ok());
  CHECK(check_vcategory(k, tensor_vcat(k, r, r)).ok());
  // unit ⊗ c has the same homs as c up to the unit isomorphism: check axioms only
  CHECK(check_vcategory(k, tensor_vcat(k, unit_vcategory(k), r)).ok());
}

TEST_CASE("underlying categories: points, identities, composition") {
  FinVect k(2);
  auto u = underlying(k, unit_vcategory(k), 1000);
  CHECK(u.cat.arrows.size() == 2);  // zero and identity in Hom(I, I)
  CHECK_FALSE(u.cat.validate().has_value());

  auto r = underlying(k, dual_numbers(k), 1000);
  CHECK(r.cat.arrows.size() == 4);  // enumerate maps F_2 → F_2²
  CHECK_FALSE(r.cat.validate().has_value());

  auto t = underlying(k, upper_triangular(k), 1000);
  CHECK(t.cat.arrows.size() == 8);
  CHECK_FALSE(t.cat.validate().has_value());

  // underlying of opposite = opposite of underlying: same hom sets, flipped table
  auto topp = underlying(k, opposite(k, upper_triangular(k)), 1000);
  CHECK(topp.cat.arrows.size() == 8);
  for (int g = 0; g < 8; ++g)
    for (int f = 0; f < 8; ++f) {
      // elements are identical (hom objects coincide); composition is reversed
      CHECK(topp.elements[static_cast<std::size_t>(g)] == t.elements[static_cast<std::size_t>(g)]);
      CHECK(topp.cat.table.at({g, f}) == t.cat.table.at({f, g}));
    }

  ChainCosmos w(2);
  auto wu = underlying(w, unit_vcategory(w), 1000);
  CHECK(wu.cat.arrows.size() == 2);
}

TEST_CASE("free V-categories") {
  FinVect k(2);
  auto term = free_vcategory(k, OrdCategory::terminal());
  CHECK(term.cat == unit_vcategory(k));

  auto arrow = free_vcategory(k, OrdCategory::chain_poset(1));
  CHECK(arrow.cat.hom_at("a0", "a0").dim == 1);
  CHECK(arrow.cat.hom_at("a0", "a1").dim == 1);
  CHECK(arrow.cat.hom_at("a1", "a0").dim == 0);
  CHECK(check_vcategory(k, arrow.cat).ok());

  CHECK(check_vcategory(k, free_vcategory(k, OrdCategory::square_poset()).cat).ok());
  CHECK(check_vcategory(k, free_vcategory(k, OrdCategory::chain_poset(4)).cat).ok());
  CHECK(check_vcategory(k, free_vcategory(k, OrdCategory::split_idempotent()).cat).ok());
  CHECK(check_vcategory(k, free_vcategory(k, OrdCategory::parallel_pair()).cat).ok());

  ChainCosmos w(3);
  CHECK(check_vcategory(w, free_vcategory(w, OrdCategory::span()).cat).ok());
}

TEST_CASE("free-enrichment adjunction on samples: functors out of L_V = ordinary functors") {
  FinVect k(2);
  auto fc = free_vcategory(k, OrdCategory::chain_poset(1));
  auto r = dual_numbers(k);
  FiniteCatTarget<FinVect> target(k, r);
  // ordinary functor a0,a1 ↦ *, arrow ↦ multiplication-by-x element
  auto x_elt = FpMatrix::from_rows(2, 2, 1, {0, 1});
  std::map<std::string, std::string> objs{{"a0", "*"}, {"a1", "*"}};
  std::map<std::string, FiniteCatTarget<FinVect>::Mor> arrows;
  for (const auto& ar : fc.base.arrows) {
    if (ar.src == ar.dst)
      arrows[ar.name] = target.identity("*");
    else
      arrows[ar.name] = target.elem_to_mor(x_elt, "*", "*");
  }
  auto f = free_lift(k, target, fc, objs, arrows);
  CHECK(check_functor(k, target, f).ok());
  // corrupting the image of the identity arrow breaks the functor axioms
  arrows[fc.base.arrows[static_cast<std::size_t>(fc.base.identity.at("a0"))].name] =
      target.elem_to_mor(x_elt, "*", "*");
  auto bad = free_lift(k, target, fc, objs, arrows);
  CHECK_FALSE(check_functor(k, target, bad).ok());
}

TEST_CASE("V-naturality: central elements pass, non-central elements fail") {
  FinVect k(2);
  auto u = upper_triangular(k);
  FiniteCatTarget<FinVect> m(k, u);
  TargetFunctor<FinVect, FiniteCatTarget<FinVect>> id_f;
  id_f.source = u;
  id_f.obj["*"] = "*";
  id_f.hom_cmp[{"*", "*"}] = k.identity(u.hom_at("*", "*"));
  CHECK(check_functor(k, m, id_f).ok());

  VNat<FinVect, FiniteCatTarget<FinVect>> center;
  center.comps["*"] = u.ident_at("*");  // the unit is central
  CHECK(check_vnat(k, m, id_f, id_f, center).ok());

  VNat<FinVect, FiniteCatTarget<FinVect>> offcenter;
  offcenter.comps["*"] = FpMatrix::from_rows(2, 3, 1, {0, 1, 0});  // E12 is not central
  CHECK_FALSE(check_vnat(k, m, id_f, id_f, offcenter).ok());
}

TEST_CASE("full subcategory of the cosmos is a valid V-category (dg-category of complexes)") {
  FinVect k(3);
  SelfTarget<FinVect> sv(k);
  auto c = full_subcategory(k, sv, {{"A", k.obj(2)}, {"B", k.obj(1)}, {"Z", k.obj(0)}});
  CHECK(check_vcategory(k, c).ok());

  ChainCosmos w(3);
  SelfTarget<ChainCosmos> sw(w);
  auto dg = full_subcategory(
      w, sw, {{"D", w.disk(1)}, {"S", w.sphere(1)}, {"DD", w.tensor(w.disk(1), w.disk(1))}});
  CHECK(check_vcategory(w, dg).ok());
}

TEST_CASE("hom-set enumeration cap is reported") {
  FinVect k(3);
  SelfTarget<FinVect> sv(k);
  auto big = full_subcategory(k, sv, {{"X", k.obj(4)}});
  CHECK_THROWS_AS(underlying(k, big, 100), cap_exceeded);
}
