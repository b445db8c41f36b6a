#include "fpcat/presheaf_cat.hpp"

#include <random>

#include "doctest.h"
#include "fpcat/chain.hpp"
#include "test_support.hpp"

using namespace fpcat;
using namespace fpcat::testing;

namespace {

bool same_subspace(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) return false;
  std::vector<FpMatrix> both{a, b};
  int r = rank(hstack(both));
  return r == rank(a) && r == rank(b);
}

}  // namespace

TEST_CASE("free category on the reversed base is the opposite free category") {
  FinVect k(2);
  for (const auto& l : {OrdCategory::chain_poset(1), OrdCategory::span(),
                        OrdCategory::split_idempotent(), OrdCategory::square_poset()}) {
    CHECK(free_vcategory(k, l.reversed()).cat == opposite(k, free_vcategory(k, l).cat));
  }
}

TEST_CASE("functor hom agrees with the end over the opposite category") {
  FinVect k(2);
  std::mt19937_64 rng(11);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto reg = representable(k, r, "*");
  auto triv = module_presheaf(k, r, 1, FpMatrix(2, 1, 1));
  auto rnd = random_module_presheaf(rng, k, r, 3);
  for (const auto& p : {reg, triv, rnd})
    for (const auto& q : {reg, triv, rnd}) {
      auto h = pc.hom(p, q);
      auto e = end_of(k, pc.base_op(), cotensor_bifunctor(k, pc.base_op(), p, q));
      CHECK(h.obj.dim == e.obj.dim);
      CHECK(same_subspace(h.incl, e.incl));
    }

  auto fc = quiver_arrow(k);
  PresheafCat<FinVect> pq(k, fc.cat);
  auto p1 = random_free_presheaf(rng, k, fc, 2);
  auto q1 = random_free_presheaf(rng, k, fc, 2);
  auto h = pq.hom(p1, q1);
  auto e = end_of(k, pq.base_op(), cotensor_bifunctor(k, pq.base_op(), p1, q1));
  CHECK(h.obj.dim == e.obj.dim);
  CHECK(same_subspace(h.incl, e.incl));
}

TEST_CASE("endomorphisms of the regular representable over the dual numbers") {
  FinVect k(2);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto y = representable(k, r, "*");
  CHECK(pc.hom_obj(y, y).dim == 2);  // module endomorphisms of R over itself
}

TEST_CASE("corrupted naturality data shrinks the functor-hom equalizer strictly") {
  FinVect k(2);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto y = representable(k, r, "*");
  // x acting as the identity cannot happen in a module (x² = 0); the hom shrinks
  auto bad = module_presheaf(k, r, 2, FpMatrix::identity(2, 2));
  CHECK(pc.hom_obj(y, bad).dim < pc.hom_obj(y, y).dim);
  CHECK(pc.hom_obj(y, bad).dim == 0);
}

TEST_CASE("the presheaf category composes associatively on probe objects") {
  FinVect k(2);
  std::mt19937_64 rng(17);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto y = representable(k, r, "*");
  auto m = random_module_presheaf(rng, k, r, 2);
  auto b = pc.biproduct({y, m});
  auto sub = full_subcategory(k, pc, {{"y", y}, {"m", m}, {"s", b.obj}});
  CHECK(check_vcategory(k, sub).ok());

  auto fc = quiver_arrow(k);
  PresheafCat<FinVect> pq(k, fc.cat);
  auto yu = representable(k, fc.cat, "a0");
  auto yv = representable(k, fc.cat, "a1");
  auto sub2 = full_subcategory(k, pq, {{"yu", yu}, {"yv", yv}});
  CHECK(check_vcategory(k, sub2).ok());
}

TEST_CASE("Yoneda embedding: valid functor, fully faithful") {
  FinVect k(2);
  for (const auto& c : {unit_vcategory(k), dual_numbers(k), quiver_arrow(k).cat}) {
    PresheafCat<FinVect> pc(k, c);
    auto y = yoneda(k, pc);
    CHECK(check_functor(k, pc, y).ok());
    for (const auto& a : c.objects)
      for (const auto& b : c.objects) CHECK(k.is_iso(y.hom_at(a, b)).has_value());
  }
}

TEST_CASE("representables match hand-computed values on the quiver") {
  FinVect k(2);
  auto fc = quiver_arrow(k);
  auto yu = representable(k, fc.cat, "a0");
  auto yv = representable(k, fc.cat, "a1");
  CHECK(yu.obj_at("a0").dim == 1);
  CHECK(yu.obj_at("a1").dim == 0);
  CHECK(yv.obj_at("a0").dim == 1);
  CHECK(yv.obj_at("a1").dim == 1);
}

TEST_CASE("enriched Yoneda isomorphism: explicit two-sided inverse") {
  for (std::int64_t p : {2, 3}) {
    FinVect k(p);
    std::mt19937_64 rng(23 + p);
    auto r = dual_numbers(k);
    PresheafCat<FinVect> pc(k, r);
    std::vector<Presheaf<FinVect>> sheaves;
    sheaves.push_back(representable(k, r, "*"));
    sheaves.push_back(pc.zero_object());
    for (int i = 0; i < 5; ++i) sheaves.push_back(random_module_presheaf(rng, k, r, 3));
    for (const auto& f : sheaves) {
      auto iso = yoneda_iso(k, pc, f, "*");
      CHECK(k.compose(iso.to_value, iso.from_value).is_identity());
      CHECK(k.compose(iso.from_value, iso.to_value).is_identity());
    }

    auto fc = quiver_arrow(k);
    PresheafCat<FinVect> pq(k, fc.cat);
    std::vector<Presheaf<FinVect>> sheaves2;
    sheaves2.push_back(representable(k, fc.cat, "a0"));
    sheaves2.push_back(representable(k, fc.cat, "a1"));
    for (int i = 0; i < 5; ++i) sheaves2.push_back(random_free_presheaf(rng, k, fc, 3));
    for (const auto& f : sheaves2)
      for (const auto& c : fc.cat.objects) {
        auto iso = yoneda_iso(k, pq, f, c);
        CHECK(k.compose(iso.to_value, iso.from_value).is_identity());
        CHECK(k.compose(iso.from_value, iso.to_value).is_identity());
      }
  }
}

TEST_CASE("hom basis consists of natural transformations; element round trip") {
  FinVect k(3);
  std::mt19937_64 rng(29);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto p = random_module_presheaf(rng, k, r, 3);
  auto q = random_module_presheaf(rng, k, r, 3);
  for (const auto& f : pc.hom_basis(p, q)) {
    CHECK(pc.is_natural(f));
    auto u = pc.mor_to_elem(f);
    auto f2 = pc.elem_to_mor(u, p, q);
    CHECK(f2 == f);
  }
}

TEST_CASE("kernels, cokernels, biproducts of presheaf morphisms") {
  FinVect k(2);
  std::mt19937_64 rng(31);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  for (int trial = 0; trial < 8; ++trial) {
    auto p = random_module_presheaf(rng, k, r, 3);
    auto q = random_module_presheaf(rng, k, r, 3);
    auto f = random_psh_mor(rng, k, pc, p, q);
    auto ker = pc.kernel(f);
    CHECK(pc.is_natural(ker.incl));
    CHECK(pc.compose(f, ker.incl) == pc.zero_mor(ker.obj, q));
    auto cok = pc.cokernel(f);
    CHECK(pc.is_natural(cok.proj));
    CHECK(pc.compose(cok.proj, f) == pc.zero_mor(p, cok.obj));
    auto b = pc.biproduct({p, q});
    CHECK(pc.compose(b.proj[0], b.inj[0]) == pc.identity(p));
    CHECK(pc.compose(b.proj[1], b.inj[0]) == pc.zero_mor(p, q));
  }
}

TEST_CASE("tensor and cotensor transposes round-trip") {
  FinVect k(2);
  std::mt19937_64 rng(37);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto p = random_module_presheaf(rng, k, r, 2);
  auto q = random_module_presheaf(rng, k, r, 2);
  auto x = k.obj(2);
  auto h = pc.hom(p, q);
  // random u : X → hom(P,Q)
  for (int trial = 0; trial < 6; ++trial) {
    auto raw = random_matrix(rng, 2, h.obj.dim, x.dim);
    auto g = pc.tensor_transpose(raw, p, q);
    CHECK(pc.is_natural(g));
    CHECK(pc.tensor_transpose_inv(g, x, p, q) == raw);
    auto c = pc.cotensor_transpose(raw, p, q);
    CHECK(pc.is_natural(c));
  }
  // the tensored object is a presheaf again
  CHECK(pc.tensor_by(x, p).obj_at("*").dim == 2 * p.obj_at("*").dim);
  CHECK(pc.cotensor_by(x, p).obj_at("*").dim == 2 * p.obj_at("*").dim);
}

TEST_CASE("cotensor defining isomorphism A(c, X⋔d) ≅ [X, A(c,d)] on probes") {
  FinVect k(2);
  std::mt19937_64 rng(41);
  auto r = dual_numbers(k);
  PresheafCat<FinVect> pc(k, r);
  auto cs = representable(k, r, "*");
  auto d = random_module_presheaf(rng, k, r, 2);
  auto x = k.obj(2);
  auto xd = pc.cotensor_by(x, d);
  auto nu = pc.cotensor_counit(x, d);  // X → A(X⋔d, d)
  auto lhs = pc.hom_obj(cs, xd);
  auto body = k.compose(pc.comp_mor(cs, xd, d),
                        k.compose(k.tensor_mor(nu, k.identity(lhs)), k.symmetry(lhs, x)));
  auto comparison = k.curry(body, lhs, x);
  auto rhs = k.internal_hom(x, pc.hom_obj(cs, d));
  CHECK(k.dst(comparison) == rhs);
  CHECK(k.is_iso(comparison).has_value());
}

TEST_CASE("presheaves over the chain cosmos: Yoneda on the unit dg-category") {
  ChainCosmos w(3);
  auto u = unit_vcategory(w);
  PresheafCat<ChainCosmos> pc(w, u);
  auto y = yoneda(w, pc);
  CHECK(check_functor(w, pc, y).ok());
  // a presheaf on the unit category is a complex; Yoneda evaluates it
  Presheaf<ChainCosmos> f;
  f.source = pc.base_op();
  f.obj["*"] = w.disk(1);
  f.hom_cmp[{"*", "*"}] = element_of_mor(w, w.identity(w.disk(1)));
  auto iso = yoneda_iso(w, pc, f, "*");
  CHECK(w.compose(iso.to_value, iso.from_value) == w.identity(f.obj_at("*")));
  CHECK(w.compose(iso.from_value, iso.to_value) == w.identity(w.src(iso.from_value)));
}
