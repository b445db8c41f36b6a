#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "fpcat/presheaf_cat.hpp"

namespace fpcat {

/// Pointwise left Kan extension of a V-valued functor along a functor
/// between finite V-categories: Lan_K F(d) = ∫^c D(Kc,d) ⊗ F(c), with the
/// functorial action induced through the coequalizers.
template <Cosmos V>
struct LanResult {
  Presheaf<V> functor;  // covariant on D (source D)
  std::map<std::string, CoendResult<V>> coends;
};

template <Cosmos V>
LanResult<V> lan_pointwise(const V& k, const VCategory<V>& d, const VFunctor<V>& kk,
                           const Presheaf<V>& f) {
  const auto& c = kk.source;
  LanResult<V> out;
  out.functor.source = d;
  // weight at d0: c ↦ D(Kc, d0), contravariant on C
  auto weight_at = [&](const std::string& d0) {
    Presheaf<V> w;
    w.source = opposite(k, c);
    for (const auto& cc : c.objects) w.obj[cc] = d.hom_at(kk.obj_at(cc), d0);
    for (const auto& cc : c.objects)
      for (const auto& cp : c.objects) {
        // C(c',c) → [D(Kc,d0), D(Kc',d0)] by precomposition with K
        auto hcc = c.hom_at(cp, cc);
        auto dk = d.hom_at(kk.obj_at(cc), d0);
        auto body = k.compose(
            d.comp_at(kk.obj_at(cp), kk.obj_at(cc), d0),
            k.compose(k.symmetry(d.hom_at(kk.obj_at(cp), kk.obj_at(cc)), dk),
                      k.tensor_mor(kk.hom_at(cp, cc), k.identity(dk))));
        w.hom_cmp[{cc, cp}] = k.curry(body, hcc, dk);
      }
    return w;
  };
  for (const auto& d0 : d.objects) {
    auto g = tensor_bifunctor(k, c, weight_at(d0), f);
    out.coends.emplace(d0, coend_of(k, c, g));
    out.functor.obj[d0] = out.coends.at(d0).obj;
  }
  for (const auto& d0 : d.objects)
    for (const auto& d1 : d.objects) {
      // D(d0,d1) ⊗ Lan(d0) → Lan(d1), defined on coend generators
      auto x = d.hom_at(d0, d1);
      const auto& co0 = out.coends.at(d0);
      const auto& co1 = out.coends.at(d1);
      std::vector<typename V::Object> tensored;
      for (const auto& cc : c.objects)
        tensored.push_back(k.tensor(x, k.tensor(d.hom_at(kk.obj_at(cc), d0), f.obj_at(cc))));
      auto bt = k.biproduct(tensored);
      auto g = k.zero_mor(bt.obj, co1.obj);
      for (std::size_t ci = 0; ci < c.objects.size(); ++ci) {
        const auto& cc = c.objects[ci];
        auto hk = d.hom_at(kk.obj_at(cc), d0);
        auto fc = f.obj_at(cc);
        // x⊗(hk⊗fc) → (x⊗hk)⊗fc → D(Kc,d1)⊗fc → Lan(d1)
        auto step = k.compose(k.tensor_mor(d.comp_at(kk.obj_at(cc), d0, d1), k.identity(fc)),
                              inverse_of(k, k.associator(x, hk, fc)));
        g = k.add(g, k.compose(co1.inj.at(cc), k.compose(step, bt.proj[ci])));
      }
      // transport along the distributor and descend through 1⊗q
      std::vector<typename V::Object> plain;
      for (const auto& cc : c.objects)
        plain.push_back(k.tensor(d.hom_at(kk.obj_at(cc), d0), f.obj_at(cc)));
      auto bp = k.biproduct(plain);
      auto delta = distribute_tensor(k, x, plain, bt, bp);
      auto g_on_tensor = k.compose(g, inverse_of(k, delta));
      auto epi = k.tensor_mor(k.identity(x), co0.proj);
      auto act = must_factor_through_epi(k, epi, g_on_tensor, "Lan action");
      out.functor.hom_cmp[{d0, d1}] = k.curry(act, x, co0.obj);
    }
  return out;
}

/// The nerve-and-realization pair attached to a functor F : C → A, where
/// A is a presheaf category: realization S = Lan_y F on presheaves over C,
/// nerve T = A(F−, −). Objects of A are presheaves on A's own base.
template <Cosmos V>
class NerveRealization {
 public:
  struct RealizationData {
    Presheaf<V> value;                             // S(P), a presheaf on A's base
    std::map<std::string, CoendResult<V>> coends;  // per object of A's base
  };
  struct HomIso {
    typename V::Morphism fwd, bwd;  // A(SP, a) ⇄ [C^op,V](P, Ta)
  };

  NerveRealization(const V& cosmos, const PresheafCat<V>& pc, const PresheafCat<V>& a,
                   TargetFunctor<V, PresheafCat<V>> f)
      : k(cosmos), pc_(pc), a_(a), f_(std::move(f)), y_(yoneda(cosmos, pc_)) {}

  const PresheafCat<V>& presheaves() const { return pc_; }
  const PresheafCat<V>& target() const { return a_; }
  const TargetFunctor<V, PresheafCat<V>>& functor() const { return f_; }
  const TargetFunctor<V, PresheafCat<V>>& yoneda_functor() const { return y_; }

  /// c ↦ [C^op,V](y c, P), the restricted-Yoneda weight of P.
  Presheaf<V> restricted_yoneda(const Presheaf<V>& p) const {
    const auto& c = pc_.base();
    Presheaf<V> w;
    w.source = pc_.base_op();
    for (const auto& cc : c.objects) w.obj[cc] = pc_.hom_obj(y_.obj_at(cc), p);
    for (const auto& cc : c.objects)
      for (const auto& cp : c.objects) {
        auto hcc = pc_.hom_obj(y_.obj_at(cp), y_.obj_at(cc));
        auto hcp = pc_.hom_obj(y_.obj_at(cc), p);
        auto body = k.compose(pc_.comp_mor(y_.obj_at(cp), y_.obj_at(cc), p), k.symmetry(hcc, hcp));
        auto precomp = k.curry(body, hcc, hcp);
        w.hom_cmp[{cc, cp}] = k.compose(precomp, y_.hom_at(cp, cc));
      }
    return w;
  }

  /// The evaluation of F at a base object b of A, as a functor C → V.
  Presheaf<V> evaluation_functor(const std::string& b) const {
    const auto& c = pc_.base();
    Presheaf<V> fb;
    fb.source = c;
    for (const auto& cc : c.objects) fb.obj[cc] = f_.obj_at(cc).obj_at(b);
    std::size_t bi = index_of(a_.base().objects, b);
    for (const auto& cc : c.objects)
      for (const auto& dd : c.objects) {
        auto h = a_.hom(f_.obj_at(cc), f_.obj_at(dd));
        fb.hom_cmp[{cc, dd}] =
            k.compose(h.prod.proj[bi], k.compose(h.incl, f_.hom_at(cc, dd)));
      }
    return fb;
  }

  RealizationData realize(const Presheaf<V>& p) const {
    for (const auto& e : realize_cache_)
      if (e.first == p) return e.second;
    RealizationData out = realize_uncached(p);
    realize_cache_.emplace_back(p, out);
    return out;
  }

  PshMor<V> realize_mor(const PshMor<V>& phi) const {
    const auto& c = pc_.base();
    auto rp = realize(phi.src), rq = realize(phi.dst);
    PshMor<V> out{rp.value, rq.value, {}};
    for (const auto& b : a_.base().objects) {
      const auto& co_p = rp.coends.at(b);
      const auto& co_q = rq.coends.at(b);
      auto total = k.zero_mor(co_p.coprod.obj, co_q.obj);
      auto fb = evaluation_functor(b);
      for (std::size_t ci = 0; ci < c.objects.size(); ++ci) {
        const auto& cc = c.objects[ci];
        auto post = post_internal(k, pc_, y_.obj_at(cc), phi);
        total = k.add(total, k.compose(co_q.inj.at(cc),
                                       k.compose(k.tensor_mor(post, k.identity(fb.obj_at(cc))),
                                                 co_p.coprod.proj[ci])));
      }
      out.comps[b] = must_factor_through_epi(k, co_p.proj, total, "realization on morphisms");
    }
    return out;
  }

  /// Internal action of S on hom objects: [C^op,V](P,Q) → A(SP, SQ).
  typename V::Morphism realize_hom_action(const Presheaf<V>& p, const Presheaf<V>& q) const {
    const auto& c = pc_.base();
    auto rp = realize(p), rq = realize(q);
    auto hpq = pc_.hom_obj(p, q);
    auto ha = a_.hom(rp.value, rq.value);
    std::vector<typename V::Morphism> comps;
    for (std::size_t bi = 0; bi < a_.base().objects.size(); ++bi) {
      const auto& b = a_.base().objects[bi];
      const auto& co_p = rp.coends.at(b);
      const auto& co_q = rq.coends.at(b);
      auto fb = evaluation_functor(b);
      std::vector<typename V::Object> plain, tensored;
      for (const auto& cc : c.objects) {
        auto s = k.tensor(pc_.hom_obj(y_.obj_at(cc), p), fb.obj_at(cc));
        plain.push_back(s);
        tensored.push_back(k.tensor(hpq, s));
      }
      auto bt = k.biproduct(tensored);
      auto bp = k.biproduct(plain);
      auto g = k.zero_mor(bt.obj, co_q.obj);
      for (std::size_t ci = 0; ci < c.objects.size(); ++ci) {
        const auto& cc = c.objects[ci];
        auto wc = pc_.hom_obj(y_.obj_at(cc), p);
        auto fc = fb.obj_at(cc);
        auto step = k.compose(k.tensor_mor(pc_.comp_mor(y_.obj_at(cc), p, q), k.identity(fc)),
                              inverse_of(k, k.associator(hpq, wc, fc)));
        g = k.add(g, k.compose(co_q.inj.at(cc), k.compose(step, bt.proj[ci])));
      }
      auto delta = distribute_tensor(k, hpq, plain, bt, bp);
      auto g_on_tensor = k.compose(g, inverse_of(k, delta));
      auto epi = k.tensor_mor(k.identity(hpq), co_p.proj);
      auto act = must_factor_through_epi(k, epi, g_on_tensor, "realization hom action");
      comps.push_back(k.curry(act, hpq, rp.value.obj_at(b)));
    }
    return a_.factor_tuple(ha, comps);
  }

  /// The canonical isomorphism S(y c) → F c.
  PshMor<V> kappa(const std::string& cc) const {
    const auto& c = pc_.base();
    auto yc = y_.obj_at(cc);
    auto r = realize(yc);
    PshMor<V> out{r.value, f_.obj_at(cc), {}};
    for (std::size_t bi = 0; bi < a_.base().objects.size(); ++bi) {
      const auto& b = a_.base().objects[bi];
      std::map<std::string, typename V::Morphism> cowedge;
      for (const auto& cp : c.objects) {
        auto iso = yoneda_iso(k, pc_, yc, cp);  // H(y c', y c) → C(c', c)
        auto h = a_.hom(f_.obj_at(cp), f_.obj_at(cc));
        auto point = k.compose(h.prod.proj[bi],
                               k.compose(h.incl, k.compose(f_.hom_at(cp, cc), iso.to_value)));
        cowedge[cp] =
            k.uncurry(point, f_.obj_at(cp).obj_at(b), f_.obj_at(cc).obj_at(b));
      }
      auto u = factor_cowedge(k, c, r.coends.at(b), cowedge);
      if (!u) throw internal_error("kappa: cowedge does not descend");
      out.comps[b] = *u;
    }
    return out;
  }

  Presheaf<V> nerve_obj(const Presheaf<V>& a) const {
    const auto& c = pc_.base();
    Presheaf<V> t;
    t.source = pc_.base_op();
    for (const auto& cc : c.objects) t.obj[cc] = a_.hom_obj(f_.obj_at(cc), a);
    for (const auto& cc : c.objects)
      for (const auto& cp : c.objects) {
        auto hcc = pc_.base().hom_at(cp, cc);  // C^op(c,c')
        auto hf = a_.hom_obj(f_.obj_at(cc), a);
        auto body = k.compose(
            a_.comp_mor(f_.obj_at(cp), f_.obj_at(cc), a),
            k.compose(k.symmetry(a_.hom_obj(f_.obj_at(cp), f_.obj_at(cc)), hf),
                      k.tensor_mor(f_.hom_at(cp, cc), k.identity(hf))));
        t.hom_cmp[{cc, cp}] = k.curry(body, hcc, hf);
      }
    return t;
  }

  PshMor<V> nerve_mor(const PshMor<V>& g) const {
    PshMor<V> out{nerve_obj(g.src), nerve_obj(g.dst), {}};
    for (const auto& cc : pc_.base().objects)
      out.comps[cc] = post_internal(k, a_, f_.obj_at(cc), g);
    return out;
  }

  /// Internal action of T on hom objects: A(a,a') → [C^op,V](Ta, Ta').
  typename V::Morphism nerve_hom_action(const Presheaf<V>& a, const Presheaf<V>& ap) const {
    auto ta = nerve_obj(a), tap = nerve_obj(ap);
    auto h = pc_.hom(ta, tap);
    std::vector<typename V::Morphism> comps;
    for (const auto& cc : pc_.base().objects)
      comps.push_back(k.curry(a_.comp_mor(f_.obj_at(cc), a, ap), a_.hom_obj(a, ap),
                              a_.hom_obj(f_.obj_at(cc), a)));
    return pc_.factor_tuple(h, comps);
  }

  /// Unit η_P : P → T S P.
  PshMor<V> unit_at(const Presheaf<V>& p) const {
    auto sp = realize(p).value;
    PshMor<V> out{p, nerve_obj(sp), {}};
    for (const auto& cc : pc_.base().objects) {
      auto iso = yoneda_iso(k, pc_, p, cc);
      auto s_act = realize_hom_action(y_.obj_at(cc), p);
      auto kap = kappa(cc);
      auto kap_inv = a_.is_iso(kap);
      if (!kap_inv) throw internal_error("unit: kappa is not invertible");
      auto pre = pre_internal(k, a_, *kap_inv, sp);
      out.comps[cc] = k.compose(pre, k.compose(s_act, iso.from_value));
    }
    return out;
  }

  /// Counit ε_a : S T a → a.
  PshMor<V> counit_at(const Presheaf<V>& a) const {
    auto ta = nerve_obj(a);
    auto r = realize(ta);
    PshMor<V> out{r.value, a, {}};
    for (std::size_t bi = 0; bi < a_.base().objects.size(); ++bi) {
      const auto& b = a_.base().objects[bi];
      std::map<std::string, typename V::Morphism> cowedge;
      for (const auto& cc : pc_.base().objects) {
        auto iso = yoneda_iso(k, pc_, ta, cc);  // H(y c, Ta) → Ta(c) = A(Fc, a)
        auto h = a_.hom(f_.obj_at(cc), a);
        auto point = k.compose(h.prod.proj[bi], k.compose(h.incl, iso.to_value));
        cowedge[cc] = k.uncurry(point, f_.obj_at(cc).obj_at(b), a.obj_at(b));
      }
      auto u = factor_cowedge(k, pc_.base(), r.coends.at(b), cowedge);
      if (!u) throw internal_error("counit: cowedge does not descend");
      out.comps[b] = *u;
    }
    return out;
  }

  HomIso hom_iso(const Presheaf<V>& p, const Presheaf<V>& a) const {
    auto sp = realize(p).value;
    auto ta = nerve_obj(a);
    auto eta = unit_at(p);
    auto eps = counit_at(a);
    auto fwd = k.compose(pre_internal(k, pc_, eta, ta), nerve_hom_action(sp, a));
    auto bwd = k.compose(post_internal(k, a_, sp, eps), realize_hom_action(p, ta));
    return {fwd, bwd};
  }

  V k;

 private:
  static std::size_t index_of(const std::vector<std::string>& v, const std::string& s) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == s) return i;
    throw std::invalid_argument("index_of: missing " + s);
  }

  RealizationData realize_uncached(const Presheaf<V>& p) const {
    const auto& c = pc_.base();
    auto w = restricted_yoneda(p);
    RealizationData out;
    std::map<std::string, typename V::Object> values;
    for (const auto& b : a_.base().objects) {
      auto g = tensor_bifunctor(k, c, w, evaluation_functor(b));
      out.coends.emplace(b, coend_of(k, c, g));
      values[b] = out.coends.at(b).obj;
    }
    std::map<std::pair<std::string, std::string>, typename V::Morphism> act;
    const auto& bop = a_.base_op();
    for (const auto& b0 : a_.base().objects)
      for (const auto& b1 : a_.base().objects) {
        auto x = bop.hom_at(b0, b1);
        const auto& co0 = out.coends.at(b0);
        const auto& co1 = out.coends.at(b1);
        auto fb0 = evaluation_functor(b0);
        std::vector<typename V::Object> plain, tensored;
        for (const auto& cc : c.objects) {
          auto s = k.tensor(w.obj_at(cc), fb0.obj_at(cc));
          plain.push_back(s);
          tensored.push_back(k.tensor(x, s));
        }
        auto bt = k.biproduct(tensored);
        auto bp = k.biproduct(plain);
        auto g = k.zero_mor(bt.obj, co1.obj);
        for (std::size_t ci = 0; ci < c.objects.size(); ++ci) {
          const auto& cc = c.objects[ci];
          auto wc = w.obj_at(cc);
          auto fcb0 = fb0.obj_at(cc);
          // x⊗(wc⊗fcb0) → wc⊗(x⊗fcb0) → wc⊗fcb1 → coend(b1)
          auto shuffle = k.compose(
              k.associator(wc, x, fcb0),
              k.compose(k.tensor_mor(k.symmetry(x, wc), k.identity(fcb0)),
                        inverse_of(k, k.associator(x, wc, fcb0))));
          auto apply = k.tensor_mor(k.identity(wc), a_.action(f_.obj_at(cc), b0, b1));
          g = k.add(g, k.compose(co1.inj.at(cc),
                                 k.compose(apply, k.compose(shuffle, bt.proj[ci]))));
        }
        auto delta = distribute_tensor(k, x, plain, bt, bp);
        auto g_on_tensor = k.compose(g, inverse_of(k, delta));
        auto epi = k.tensor_mor(k.identity(x), co0.proj);
        act[{b0, b1}] = must_factor_through_epi(k, epi, g_on_tensor, "realization action");
      }
    out.value = a_.from_actions(values, act);
    return out;
  }

  PresheafCat<V> pc_;
  PresheafCat<V> a_;
  TargetFunctor<V, PresheafCat<V>> f_;
  TargetFunctor<V, PresheafCat<V>> y_;
  mutable std::vector<std::pair<Presheaf<V>, RealizationData>> realize_cache_;
};

/// Per-pair invertibility report for the hom components of a functor.
struct FullyFaithfulReport {
  struct Entry {
    std::string pair;
    bool iso;
  };
  std::vector<Entry> entries;
  bool all() const {
    for (const auto& e : entries)
      if (!e.iso) return false;
    return !entries.empty();
  }
};

template <Cosmos V, class M>
FullyFaithfulReport is_fully_faithful(const V& k, const M&, const TargetFunctor<V, M>& f) {
  FullyFaithfulReport rep;
  for (const auto& a : f.source.objects)
    for (const auto& b : f.source.objects)
      rep.entries.push_back({"(" + a + "," + b + ")", k.is_iso(f.hom_at(a, b)).has_value()});
  return rep;
}

/// Adjunction certificate over declared probe families.
template <Cosmos V>
struct AdjunctionWitness {
  std::vector<Presheaf<V>> left_probes, right_probes;
  std::map<std::pair<std::size_t, std::size_t>, typename NerveRealization<V>::HomIso> hom_iso;
  std::vector<PshMor<V>> unit, counit;
  std::vector<std::string> failures;
  bool verified() const { return failures.empty(); }
};

/// Build and verify the nerve-and-realization adjunction on probes:
/// every hom iso is two-sided, natural in both variables over a basis of
/// morphisms between probes (exhaustive by linearity), the unit and
/// counit are natural transformations, and both triangle identities hold.
template <Cosmos V>
AdjunctionWitness<V> verify_nerve_realization(const V& k, const NerveRealization<V>& nr,
                                              std::vector<Presheaf<V>> left_probes,
                                              std::vector<Presheaf<V>> right_probes) {
  const auto& pc = nr.presheaves();
  const auto& a = nr.target();
  AdjunctionWitness<V> w;
  w.left_probes = left_probes;
  w.right_probes = right_probes;
  auto fail = [&](const std::string& msg) { w.failures.push_back(msg); };

  for (std::size_t pi = 0; pi < left_probes.size(); ++pi) {
    auto eta = nr.unit_at(left_probes[pi]);
    if (!pc.is_natural(eta)) fail("unit not natural at left probe " + std::to_string(pi));
    w.unit.push_back(eta);
  }
  for (std::size_t ai = 0; ai < right_probes.size(); ++ai) {
    auto eps = nr.counit_at(right_probes[ai]);
    if (!a.is_natural(eps)) fail("counit not natural at right probe " + std::to_string(ai));
    w.counit.push_back(eps);
  }

  for (std::size_t pi = 0; pi < left_probes.size(); ++pi)
    for (std::size_t ai = 0; ai < right_probes.size(); ++ai) {
      auto iso = nr.hom_iso(left_probes[pi], right_probes[ai]);
      auto rt1 = k.compose(iso.fwd, iso.bwd);
      auto rt2 = k.compose(iso.bwd, iso.fwd);
      if (!(rt1 == k.identity(k.src(iso.bwd))) || !(rt2 == k.identity(k.src(iso.fwd))))
        fail("hom iso round trip fails at probe pair (" + std::to_string(pi) + "," +
             std::to_string(ai) + ")");
      w.hom_iso[{pi, ai}] = iso;
    }

  // naturality in the right variable, over a basis of morphisms a → a'
  for (std::size_t pi = 0; pi < left_probes.size(); ++pi) {
    auto sp = nr.realize(left_probes[pi]).value;
    for (std::size_t ai = 0; ai < right_probes.size(); ++ai)
      for (std::size_t aj = 0; aj < right_probes.size(); ++aj)
        for (const auto& alpha : a.hom_basis(right_probes[ai], right_probes[aj])) {
          auto lhs = k.compose(w.hom_iso.at({pi, aj}).fwd, post_internal(k, a, sp, alpha));
          auto rhs = k.compose(post_internal(k, pc, left_probes[pi], nr.nerve_mor(alpha)),
                               w.hom_iso.at({pi, ai}).fwd);
          if (!(lhs == rhs))
            fail("naturality in the target variable fails at probes (" + std::to_string(pi) + "," +
                 std::to_string(ai) + "→" + std::to_string(aj) + ")");
        }
  }
  // naturality in the left variable, over a basis of morphisms P' → P
  for (std::size_t ai = 0; ai < right_probes.size(); ++ai) {
    auto ta = nr.nerve_obj(right_probes[ai]);
    for (std::size_t pi = 0; pi < left_probes.size(); ++pi)
      for (std::size_t pj = 0; pj < left_probes.size(); ++pj)
        for (const auto& beta : pc.hom_basis(left_probes[pj], left_probes[pi])) {
          auto lhs = k.compose(w.hom_iso.at({pj, ai}).fwd,
                               pre_internal(k, a, nr.realize_mor(beta), right_probes[ai]));
          auto rhs = k.compose(pre_internal(k, pc, beta, ta), w.hom_iso.at({pi, ai}).fwd);
          if (!(lhs == rhs))
            fail("naturality in the source variable fails at probes (" + std::to_string(pj) + "→" +
                 std::to_string(pi) + "," + std::to_string(ai) + ")");
        }
  }

  // triangle identities
  for (std::size_t pi = 0; pi < left_probes.size(); ++pi) {
    auto sp = nr.realize(left_probes[pi]).value;
    auto tri = a.compose(nr.counit_at(sp), nr.realize_mor(w.unit[pi]));
    if (!(tri == a.identity(sp))) fail("triangle (εS)(Sη) fails at left probe " + std::to_string(pi));
  }
  for (std::size_t ai = 0; ai < right_probes.size(); ++ai) {
    auto ta = nr.nerve_obj(right_probes[ai]);
    auto tri = pc.compose(nr.nerve_mor(w.counit[ai]), nr.unit_at(ta));
    if (!(tri == pc.identity(ta))) fail("triangle (Tε)(ηT) fails at right probe " + std::to_string(ai));
  }
  return w;
}

/// A functor between presheaf categories given extensionally by closures;
/// hom_action may be empty when the internal action is not available.
template <Cosmos V>
struct PshFunctor {
  std::function<Presheaf<V>(const Presheaf<V>&)> obj;
  std::function<PshMor<V>(const PshMor<V>&)> mor;
  std::function<typename V::Morphism(const Presheaf<V>&, const Presheaf<V>&)> hom_action;
};

template <Cosmos V>
PshFunctor<V> realization_functor(const NerveRealization<V>& nr) {
  PshFunctor<V> s;
  s.obj = [&nr](const Presheaf<V>& p) { return nr.realize(p).value; };
  s.mor = [&nr](const PshMor<V>& f) { return nr.realize_mor(f); };
  s.hom_action = [&nr](const Presheaf<V>& p, const Presheaf<V>& q) {
    return nr.realize_hom_action(p, q);
  };
  return s;
}

template <Cosmos V>
PshFunctor<V> nerve_functor(const NerveRealization<V>& nr) {
  PshFunctor<V> t;
  t.obj = [&nr](const Presheaf<V>& a) { return nr.nerve_obj(a); };
  t.mor = [&nr](const PshMor<V>& f) { return nr.nerve_mor(f); };
  t.hom_action = [&nr](const Presheaf<V>& a, const Presheaf<V>& ap) {
    return nr.nerve_hom_action(a, ap);
  };
  return t;
}

/// Colimit probes a functor must preserve to qualify as cocontinuous at
/// desk scale: coequalizers and biproducts (over FinVect these generate
/// all finite colimits, every object being a sum of units).
template <Cosmos V>
struct ColimitProbes {
  std::vector<std::pair<PshMor<V>, PshMor<V>>> coequalizers;  // parallel pairs
  std::vector<std::pair<Presheaf<V>, Presheaf<V>>> biproducts;
};

template <Cosmos V>
struct RightAdjointResult {
  std::vector<std::string> preservation_failures;  // nonempty: construction not attempted
  TargetFunctor<V, PresheafCat<V>> composed;       // s∘y : C → A
  AdjunctionWitness<V> witness;
  std::vector<PshMor<V>> comparisons;  // s(P) ← S'(P) on left probes, all isomorphisms
};

/// Given a functor s : [C^op,V] → A that preserves the supplied colimit
/// probes, build its right adjoint as the nerve of s∘y and verify the
/// adjunction; also certify s(P) ≅ Lan_y(s∘y)(P) on the left probes.
template <Cosmos V>
RightAdjointResult<V> right_adjoint_from_cocontinuous(
    const V& k, const PresheafCat<V>& pc, const PresheafCat<V>& a, const PshFunctor<V>& s,
    const ColimitProbes<V>& probes, const std::vector<Presheaf<V>>& left_probes,
    const std::vector<Presheaf<V>>& right_probes) {
  RightAdjointResult<V> out;
  for (std::size_t i = 0; i < probes.coequalizers.size(); ++i) {
    const auto& [f, g] = probes.coequalizers[i];
    auto q = pc.coequalizer(f, g);
    auto qa = a.coequalizer(s.mor(f), s.mor(g));
    auto u = a.factor_through_epi_mor(qa.proj, s.mor(q.proj));
    if (!u || !a.is_iso(*u))
      out.preservation_failures.push_back("coequalizer probe " + std::to_string(i) +
                                          " is not preserved");
  }
  for (std::size_t i = 0; i < probes.biproducts.size(); ++i) {
    const auto& [p1, p2] = probes.biproducts[i];
    auto b = pc.biproduct({p1, p2});
    auto ba = a.biproduct({s.obj(p1), s.obj(p2)});
    auto cmp = a.add(a.compose(ba.inj[0], s.mor(b.proj[0])), a.compose(ba.inj[1], s.mor(b.proj[1])));
    if (!a.is_iso(cmp))
      out.preservation_failures.push_back("biproduct probe " + std::to_string(i) +
                                          " is not preserved");
  }
  if (!out.preservation_failures.empty()) return out;

  auto y = yoneda(k, pc);
  TargetFunctor<V, PresheafCat<V>> sy;
  sy.source = pc.base();
  for (const auto& c : pc.base().objects) sy.obj[c] = s.obj(y.obj_at(c));
  for (const auto& c : pc.base().objects)
    for (const auto& d : pc.base().objects)
      sy.hom_cmp[{c, d}] = k.compose(s.hom_action(y.obj_at(c), y.obj_at(d)), y.hom_at(c, d));
  out.composed = sy;
  NerveRealization<V> nr(k, pc, a, sy);
  out.witness = verify_nerve_realization(k, nr, left_probes, right_probes);

  // certify that the realization of s∘y agrees with s on the left probes
  for (const auto& p : left_probes) {
    auto r = nr.realize(p);
    auto sp = s.obj(p);
    PshMor<V> cmp{r.value, sp, {}};
    for (std::size_t bi = 0; bi < a.base().objects.size(); ++bi) {
      const auto& b = a.base().objects[bi];
      std::map<std::string, typename V::Morphism> cowedge;
      for (const auto& c : pc.base().objects) {
        auto h = a.hom(sy.obj.at(c), sp);
        auto point = k.compose(h.prod.proj[bi],
                               k.compose(h.incl, s.hom_action(y.obj_at(c), p)));
        cowedge[c] = k.uncurry(point, sy.obj.at(c).obj_at(b), sp.obj_at(b));
      }
      auto u = factor_cowedge(k, pc.base(), r.coends.at(b), cowedge);
      if (!u) {
        out.witness.failures.push_back("comparison with the given functor does not descend");
        return out;
      }
      cmp.comps[b] = *u;
    }
    if (!a.is_iso(cmp))
      out.witness.failures.push_back("realization does not agree with the given functor on a probe");
    out.comparisons.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace fpcat
