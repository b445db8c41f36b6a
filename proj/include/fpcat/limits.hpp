#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpcat/target.hpp"

namespace fpcat {

/// V-valued bifunctors C^op ⊗ C → V are target functors whose source is
/// tensor_vcat(opposite(C), C); the first index is the contravariant one.
/// The helpers below extract their one-sided actions.

/// C(c,d) → [G(c,c), G(c,d)]  (covariant action at fixed first index c).
template <Cosmos V>
typename V::Morphism bifunctor_cov_action(const V& k, const VCategory<V>& c,
                                          const Presheaf<V>& g, const std::string& cc,
                                          const std::string& dd) {
  auto pre = k.compose(k.tensor_mor(c.ident_at(cc), k.identity(c.hom_at(cc, dd))),
                       inverse_of(k, k.left_unitor(c.hom_at(cc, dd))));
  return k.compose(g.hom_at(pair_label(cc, cc), pair_label(cc, dd)), pre);
}

/// C(c,d) → [G(d,d), G(c,d)]  (contravariant action at fixed second index d).
template <Cosmos V>
typename V::Morphism bifunctor_contra_action(const V& k, const VCategory<V>& c,
                                             const Presheaf<V>& g, const std::string& cc,
                                             const std::string& dd) {
  auto pre = k.compose(k.tensor_mor(k.identity(c.hom_at(cc, dd)), c.ident_at(dd)),
                       inverse_of(k, k.right_unitor(c.hom_at(cc, dd))));
  return k.compose(g.hom_at(pair_label(dd, dd), pair_label(cc, dd)), pre);
}

/// Transport a point f : I → C(c,d) covariantly: G(c,c) → G(c,d).
template <Cosmos V>
typename V::Morphism bifunctor_transport_cov(const V& k, const VCategory<V>& c, const Presheaf<V>& g,
                                             const std::string& cc, const std::string& dd,
                                             const typename V::Morphism& f) {
  auto rho = bifunctor_cov_action(k, c, g, cc, dd);
  return mor_of_element(k, k.compose(rho, f), g.obj_at(pair_label(cc, cc)),
                        g.obj_at(pair_label(cc, dd)));
}

/// Transport a point f : I → C(c,d) contravariantly: G(d,d) → G(c,d).
template <Cosmos V>
typename V::Morphism bifunctor_transport_contra(const V& k, const VCategory<V>& c,
                                                const Presheaf<V>& g, const std::string& cc,
                                                const std::string& dd,
                                                const typename V::Morphism& f) {
  auto rho = bifunctor_contra_action(k, c, g, cc, dd);
  return mor_of_element(k, k.compose(rho, f), g.obj_at(pair_label(dd, dd)),
                        g.obj_at(pair_label(cc, dd)));
}

template <Cosmos V>
struct EndResult {
  typename V::Object obj;
  typename V::Morphism incl;  // into the product of the diagonal values
  typename V::Biprod prod;    // ∏_c G(c,c), in sorted object order
  std::map<std::string, typename V::Morphism> proj;
};

template <Cosmos V>
struct CoendResult {
  typename V::Object obj;
  typename V::Morphism proj;  // from the coproduct of the diagonal values
  typename V::Biprod coprod;  // ⊕_c G(c,c), in sorted object order
  std::map<std::string, typename V::Morphism> inj;
};

/// End of a bifunctor as the equalizer of the two canonical maps
///   ∏_c G(c,c) ⇉ ∏_{c,d} [C(c,d), G(c,d)].
template <Cosmos V>
EndResult<V> end_of(const V& k, const VCategory<V>& c, const Presheaf<V>& g) {
  std::vector<typename V::Object> diag;
  for (const auto& cc : c.objects) diag.push_back(g.obj_at(pair_label(cc, cc)));
  auto b1 = k.biproduct(diag);
  std::vector<typename V::Object> cot;
  for (const auto& cc : c.objects)
    for (const auto& dd : c.objects)
      cot.push_back(k.internal_hom(c.hom_at(cc, dd), g.obj_at(pair_label(cc, dd))));
  auto b2 = k.biproduct(cot);
  auto map1 = k.zero_mor(b1.obj, b2.obj);
  auto map2 = k.zero_mor(b1.obj, b2.obj);
  std::size_t pair_idx = 0;
  for (std::size_t ci = 0; ci < c.objects.size(); ++ci)
    for (std::size_t di = 0; di < c.objects.size(); ++di, ++pair_idx) {
      const auto& cc = c.objects[ci];
      const auto& dd = c.objects[di];
      auto gcc = g.obj_at(pair_label(cc, cc));
      auto gdd = g.obj_at(pair_label(dd, dd));
      auto gcd = g.obj_at(pair_label(cc, dd));
      auto homcd = c.hom_at(cc, dd);
      // τ : G(c,c) → [C(c,d), G(c,d)]
      auto tau_body = k.compose(
          k.eval(gcc, gcd),
          k.compose(k.tensor_mor(bifunctor_cov_action(k, c, g, cc, dd), k.identity(gcc)),
                    k.symmetry(gcc, homcd)));
      auto tau = k.curry(tau_body, gcc, homcd);
      // ξ : G(d,d) → [C(c,d), G(c,d)]
      auto xi_body = k.compose(
          k.eval(gdd, gcd),
          k.compose(k.tensor_mor(bifunctor_contra_action(k, c, g, cc, dd), k.identity(gdd)),
                    k.symmetry(gdd, homcd)));
      auto xi = k.curry(xi_body, gdd, homcd);
      map1 = k.add(map1, k.compose(b2.inj[pair_idx], k.compose(tau, b1.proj[ci])));
      map2 = k.add(map2, k.compose(b2.inj[pair_idx], k.compose(xi, b1.proj[di])));
    }
  auto eq = k.equalizer(map1, map2);
  EndResult<V> out{eq.obj, eq.incl, b1, {}};
  for (std::size_t ci = 0; ci < c.objects.size(); ++ci)
    out.proj[c.objects[ci]] = k.compose(b1.proj[ci], eq.incl);
  return out;
}

/// Coend of a bifunctor as the coequalizer of the two action maps
///   ⊕_{c,d} G(d,c) ⊗ C(c,d) ⇉ ⊕_c G(c,c).
template <Cosmos V>
CoendResult<V> coend_of(const V& k, const VCategory<V>& c, const Presheaf<V>& g) {
  std::vector<typename V::Object> diag;
  for (const auto& cc : c.objects) diag.push_back(g.obj_at(pair_label(cc, cc)));
  auto b1 = k.biproduct(diag);
  std::vector<typename V::Object> rel;
  for (const auto& cc : c.objects)
    for (const auto& dd : c.objects)
      rel.push_back(k.tensor(g.obj_at(pair_label(dd, cc)), c.hom_at(cc, dd)));
  auto b2 = k.biproduct(rel);
  auto map1 = k.zero_mor(b2.obj, b1.obj);
  auto map2 = k.zero_mor(b2.obj, b1.obj);
  std::size_t pair_idx = 0;
  for (std::size_t ci = 0; ci < c.objects.size(); ++ci)
    for (std::size_t di = 0; di < c.objects.size(); ++di, ++pair_idx) {
      const auto& cc = c.objects[ci];
      const auto& dd = c.objects[di];
      auto gdc = g.obj_at(pair_label(dd, cc));
      auto gcc = g.obj_at(pair_label(cc, cc));
      auto gdd = g.obj_at(pair_label(dd, dd));
      auto homcd = c.hom_at(cc, dd);
      // left action λ : G(d,c)⊗C(c,d) → G(c,c), through the contravariant slot
      auto rho_l = k.compose(
          g.hom_at(pair_label(dd, cc), pair_label(cc, cc)),
          k.compose(k.tensor_mor(k.identity(homcd), c.ident_at(cc)),
                    inverse_of(k, k.right_unitor(homcd))));
      auto lambda = k.compose(k.eval(gdc, gcc),
                              k.compose(k.tensor_mor(rho_l, k.identity(gdc)), k.symmetry(gdc, homcd)));
      // right action μ : G(d,c)⊗C(c,d) → G(d,d), through the covariant slot
      auto rho_r = k.compose(
          g.hom_at(pair_label(dd, cc), pair_label(dd, dd)),
          k.compose(k.tensor_mor(c.ident_at(dd), k.identity(homcd)),
                    inverse_of(k, k.left_unitor(homcd))));
      auto mu = k.compose(k.eval(gdc, gdd),
                          k.compose(k.tensor_mor(rho_r, k.identity(gdc)), k.symmetry(gdc, homcd)));
      map1 = k.add(map1, k.compose(b1.inj[ci], k.compose(lambda, b2.proj[pair_idx])));
      map2 = k.add(map2, k.compose(b1.inj[di], k.compose(mu, b2.proj[pair_idx])));
    }
  auto coeq = k.coequalizer(map1, map2);
  CoendResult<V> out{coeq.obj, coeq.proj, b1, {}};
  for (std::size_t ci = 0; ci < c.objects.size(); ++ci)
    out.inj[c.objects[ci]] = k.compose(coeq.proj, b1.inj[ci]);
  return out;
}

/// Factor a dinatural family (w_c : T → G(c,c)) through the end.
template <Cosmos V>
std::optional<typename V::Morphism> factor_wedge(const V& k, const VCategory<V>& c,
                                                 const EndResult<V>& e,
                                                 const std::map<std::string, typename V::Morphism>& w) {
  typename V::Morphism tuple = k.zero_mor(k.src(w.begin()->second), e.prod.obj);
  for (std::size_t ci = 0; ci < c.objects.size(); ++ci)
    tuple = k.add(tuple, k.compose(e.prod.inj[ci], w.at(c.objects[ci])));
  return factor_through_mono(k, e.incl, tuple);
}

/// Factor a co-dinatural family (w_c : G(c,c) → T) through the coend.
template <Cosmos V>
std::optional<typename V::Morphism> factor_cowedge(
    const V& k, const VCategory<V>& c, const CoendResult<V>& e,
    const std::map<std::string, typename V::Morphism>& w) {
  typename V::Morphism total = k.zero_mor(e.coprod.obj, k.dst(w.begin()->second));
  for (std::size_t ci = 0; ci < c.objects.size(); ++ci)
    total = k.add(total, k.compose(w.at(c.objects[ci]), e.coprod.proj[ci]));
  return factor_through_epi(k, e.proj, total);
}

/// The hom bifunctor of a finite V-category, as a functor on C^op ⊗ C.
template <Cosmos V>
Presheaf<V> hom_bifunctor(const V& k, const VCategory<V>& c) {
  Presheaf<V> g;
  g.source = tensor_vcat(k, opposite(k, c), c);
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) g.obj[pair_label(a, b)] = c.hom_at(a, b);
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& ap : c.objects)
        for (const auto& bp : c.objects) {
          // C(a',a)⊗C(b,b') → [C(a,b), C(a',b')] : (f,g')·h = g'∘h∘f
          auto A = c.hom_at(ap, a), B = c.hom_at(b, bp), C0 = c.hom_at(a, b);
          auto shuffle = k.compose(
              k.tensor_mor(k.identity(B), k.symmetry(A, C0)),
              k.compose(k.associator(B, A, C0), k.tensor_mor(k.symmetry(A, B), k.identity(C0))));
          auto body = k.compose(c.comp_at(ap, b, bp),
                                k.compose(k.tensor_mor(k.identity(B), c.comp_at(ap, a, b)), shuffle));
          g.hom_cmp[{pair_label(a, b), pair_label(ap, bp)}] = k.curry(body, k.tensor(A, B), C0);
        }
  return g;
}

/// Bifunctor (a,b) ↦ [W a, F b] for a weight W : J → V and F : J → V.
template <Cosmos V>
Presheaf<V> cotensor_bifunctor(const V& k, const VCategory<V>& j, const Presheaf<V>& w,
                               const Presheaf<V>& f) {
  Presheaf<V> g;
  g.source = tensor_vcat(k, opposite(k, j), j);
  for (const auto& a : j.objects)
    for (const auto& b : j.objects)
      g.obj[pair_label(a, b)] = k.internal_hom(w.obj_at(a), f.obj_at(b));
  for (const auto& a : j.objects)
    for (const auto& b : j.objects)
      for (const auto& ap : j.objects)
        for (const auto& bp : j.objects) {
          // J(a',a)⊗J(b,b') → [Wa',Wa]⊗[Fb,Fb'] → [[Wa,Fb],[Wa',Fb']]
          auto pieces = k.tensor_mor(w.hom_at(ap, a), f.hom_at(b, bp));
          auto combine = hom_internal(k, w.obj_at(ap), w.obj_at(a), f.obj_at(b), f.obj_at(bp));
          g.hom_cmp[{pair_label(a, b), pair_label(ap, bp)}] = k.compose(combine, pieces);
        }
  return g;
}

/// Bifunctor (a,b) ↦ W a ⊗ F b for a weight W : J^op → V and F : J → V.
/// W must be given with source opposite(J).
template <Cosmos V>
Presheaf<V> tensor_bifunctor(const V& k, const VCategory<V>& j, const Presheaf<V>& w,
                             const Presheaf<V>& f) {
  Presheaf<V> g;
  g.source = tensor_vcat(k, opposite(k, j), j);
  for (const auto& a : j.objects)
    for (const auto& b : j.objects) g.obj[pair_label(a, b)] = k.tensor(w.obj_at(a), f.obj_at(b));
  for (const auto& a : j.objects)
    for (const auto& b : j.objects)
      for (const auto& ap : j.objects)
        for (const auto& bp : j.objects) {
          // W's hom component at (a,a') already lives on J^op(a,a') = J(a',a)
          auto pieces = k.tensor_mor(w.hom_at(a, ap), f.hom_at(b, bp));
          auto combine = tensor_internal(k, w.obj_at(a), w.obj_at(ap), f.obj_at(b), f.obj_at(bp));
          g.hom_cmp[{pair_label(a, b), pair_label(ap, bp)}] = k.compose(combine, pieces);
        }
  return g;
}

/// The dual bifunctor (a,b) ↦ [G(b,a), I]; its end has the dimension of
/// the coend of G over FinVect-like cosmoi.
template <Cosmos V>
Presheaf<V> dual_bifunctor(const V& k, const VCategory<V>& c, const Presheaf<V>& g) {
  Presheaf<V> h;
  h.source = g.source;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      h.obj[pair_label(a, b)] = k.internal_hom(g.obj_at(pair_label(b, a)), k.unit());
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& ap : c.objects)
        for (const auto& bp : c.objects) {
          auto hom_ab = c.hom_at(ap, a);  // opC(a,a')
          auto hom_bb = c.hom_at(b, bp);
          auto y = g.obj_at(pair_label(b, a));
          auto yp = g.obj_at(pair_label(bp, ap));
          // G's action on the swapped pair: opC(b,b')⊗C(a',a) → [G(b',a'), G(b,a)]
          auto u = g.hom_at(pair_label(bp, ap), pair_label(b, a));
          auto act = k.compose(u, k.symmetry(hom_ab, hom_bb));
          // dualize: [Y',Y] → [[Y,I],[Y',I]]
          auto dualize_body =
              k.compose(comp_internal(k, yp, y, k.unit()),
                        k.symmetry(k.internal_hom(yp, y), k.internal_hom(y, k.unit())));
          auto dualize = k.curry(dualize_body, k.internal_hom(yp, y), k.internal_hom(y, k.unit()));
          h.hom_cmp[{pair_label(a, b), pair_label(ap, bp)}] = k.compose(dualize, act);
        }
  return h;
}

template <Cosmos V>
struct WeightedLimitResult {
  typename V::Object obj;
  std::map<std::string, typename V::Morphism> proj;  // {W,F} → [Wj, Fj]
  EndResult<V> end;
};

template <Cosmos V>
struct WeightedColimitResult {
  typename V::Object obj;
  std::map<std::string, typename V::Morphism> inj;  // Wj ⊗ Fj → W⋆F
  CoendResult<V> coend;
};

/// {W,F} = ∫_j [W j, F j] for V-valued W, F on a finite V-category J.
template <Cosmos V>
WeightedLimitResult<V> weighted_limit(const V& k, const VCategory<V>& j, const Presheaf<V>& w,
                                      const Presheaf<V>& f) {
  auto g = cotensor_bifunctor(k, j, w, f);
  auto e = end_of(k, j, g);
  WeightedLimitResult<V> out{e.obj, {}, e};
  for (const auto& a : j.objects) out.proj[a] = e.proj.at(a);
  return out;
}

/// W ⋆ F = ∫^j W j ⊗ F j for a weight W on J^op (source opposite(J)).
template <Cosmos V>
WeightedColimitResult<V> weighted_colimit(const V& k, const VCategory<V>& j, const Presheaf<V>& w,
                                          const Presheaf<V>& f) {
  auto g = tensor_bifunctor(k, j, w, f);
  auto e = coend_of(k, j, g);
  WeightedColimitResult<V> out{e.obj, {}, e};
  for (const auto& a : j.objects) out.inj[a] = e.inj.at(a);
  return out;
}

/// Constant weight at the unit over the opposite of a free V-category
/// (the shape of conical colimits).
template <Cosmos V>
Presheaf<V> constant_unit_weight_op(const V& k, const FreeVCat<V>& fc) {
  Presheaf<V> w;
  w.source = opposite(k, fc.cat);
  for (const auto& a : fc.cat.objects) w.obj[a] = k.unit();
  for (const auto& a : w.source.objects)
    for (const auto& b : w.source.objects) {
      // opposite hom (a,b) = free hom (b,a): send every arrow copy to id_I
      auto arrows = fc.base.arrows_between(b, a);
      std::vector<typename V::Object> copies(arrows.size(), k.unit());
      auto power = k.biproduct(copies);
      auto cmp = k.zero_mor(w.source.hom_at(a, b), k.internal_hom(k.unit(), k.unit()));
      for (std::size_t i = 0; i < arrows.size(); ++i)
        cmp = k.add(cmp, k.compose(ident_internal(k, k.unit()), power.proj[i]));
      w.hom_cmp[{a, b}] = cmp;
    }
  return w;
}

/// Constant covariant unit weight on a free V-category (conical limits).
template <Cosmos V>
Presheaf<V> constant_unit_weight(const V& k, const FreeVCat<V>& fc) {
  SelfTarget<V> sv(k);
  return constant_functor(k, sv, fc, k.unit());
}

template <Cosmos V>
struct ConicalColimitResult {
  typename V::Object obj;
  std::map<std::string, typename V::Morphism> inj;  // H(a) → colim
  WeightedColimitResult<V> weighted;
};

/// Conical colimit of a diagram on a free V-category, computed as the
/// colimit weighted by the constant unit weight.
template <Cosmos V>
ConicalColimitResult<V> conical_colimit(const V& k, const FreeVCat<V>& fc, const Presheaf<V>& h) {
  auto w = constant_unit_weight_op(k, fc);
  auto wc = weighted_colimit(k, fc.cat, w, h);
  ConicalColimitResult<V> out{wc.obj, {}, wc};
  for (const auto& a : fc.cat.objects)
    out.inj[a] = k.compose(wc.inj.at(a), inverse_of(k, k.left_unitor(h.obj_at(a))));
  return out;
}

template <Cosmos V>
struct ConicalLimitResult {
  typename V::Object obj;
  std::map<std::string, typename V::Morphism> proj;  // lim → H(a)
  WeightedLimitResult<V> weighted;
};

template <Cosmos V>
ConicalLimitResult<V> conical_limit(const V& k, const FreeVCat<V>& fc, const Presheaf<V>& h) {
  auto w = constant_unit_weight(k, fc);
  auto wl = weighted_limit(k, fc.cat, w, h);
  ConicalLimitResult<V> out{wl.obj, {}, wl};
  for (const auto& a : fc.cat.objects) {
    // lim → [I, H(a)] → H(a): evaluate at the unit element
    auto ha = h.obj_at(a);
    auto ev_unit = k.compose(k.eval(k.unit(), ha),
                             k.compose(k.tensor_mor(k.identity(k.internal_hom(k.unit(), ha)),
                                                    k.identity(k.unit())),
                                       inverse_of(k, k.right_unitor(k.internal_hom(k.unit(), ha)))));
    out.proj[a] = k.compose(ev_unit, wl.proj.at(a));
  }
  return out;
}

/// The canonical swap [c,[x,d]] → [x,[c,d]]: the defining comparison of
/// the cotensor in the self-enriched cosmos.
template <Cosmos V>
typename V::Morphism cotensor_swap(const V& k, typename V::Object c, typename V::Object x,
                                   typename V::Object d) {
  auto xd = k.internal_hom(x, d);
  // counit x → [[x,d],d]
  auto nu = k.curry(k.compose(k.eval(x, d), k.symmetry(x, xd)), x, xd);
  auto lhs = k.internal_hom(c, xd);
  auto body = k.compose(comp_internal(k, c, xd, d),
                        k.compose(k.tensor_mor(nu, k.identity(lhs)), k.symmetry(lhs, x)));
  return k.curry(body, lhs, x);
}

}  // namespace fpcat
