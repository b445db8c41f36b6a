#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpcat/limits.hpp"
#include "fpcat/target.hpp"

namespace fpcat {

/// A morphism of presheaves: one component per object of the base, natural
/// with respect to the contravariant actions.
template <Cosmos V>
struct PshMor {
  Presheaf<V> src, dst;
  std::map<std::string, typename V::Morphism> comps;

  const typename V::Morphism& at(const std::string& c) const {
    auto it = comps.find(c);
    if (it == comps.end()) throw std::invalid_argument("PshMor: missing component " + c);
    return it->second;
  }
  bool operator==(const PshMor&) const = default;
};

/// The presheaf V-category [C^op, V] on a finite V-category C, as a
/// computable target: hom objects are the functor-hom equalizers
///   [C^op,V](P,Q) → ∏_c [P(c),Q(c)] ⇉ ∏_{c,d} [C^op(c,d), [P(c),Q(d)]],
/// composition and identities are induced by factorization through them,
/// and finite (co)limits and (co)tensors are computed pointwise with the
/// induced actions solved exactly.
template <Cosmos V>
class PresheafCat {
 public:
  using Obj = Presheaf<V>;
  using Mor = PshMor<V>;

  struct Hom {
    typename V::Object obj;
    typename V::Morphism incl;  // into ∏_c [P(c), Q(c)], base objects sorted
    typename V::Biprod prod;
  };
  struct Sub {
    Obj obj;
    Mor incl;
  };
  struct Quot {
    Obj obj;
    Mor proj;
  };
  struct Biprod {
    Obj obj;
    std::vector<Mor> inj;
    std::vector<Mor> proj;
  };

  PresheafCat(const V& cosmos, const VCategory<V>& base)
      : k(cosmos), base_(base), base_op_(opposite(cosmos, base)) {}

  const V& cosmos() const { return k; }
  const VCategory<V>& base() const { return base_; }
  const VCategory<V>& base_op() const { return base_op_; }

  bool obj_eq(const Obj& p, const Obj& q) const { return p == q; }

  /// Uncurried action of a presheaf: C^op(a,b) ⊗ P(a) → P(b).
  typename V::Morphism action(const Obj& p, const std::string& a, const std::string& b) const {
    return k.uncurry(p.hom_at(a, b), p.obj_at(a), p.obj_at(b));
  }

  Hom hom(const Obj& p, const Obj& q) const {
    for (const auto& e : hom_cache_)
      if (std::get<0>(e) == p && std::get<1>(e) == q) return std::get<2>(e);
    Hom h = hom_uncached(p, q);
    hom_cache_.emplace_back(p, q, h);
    return h;
  }

  Hom hom_uncached(const Obj& p, const Obj& q) const {
    std::vector<typename V::Object> diag;
    for (const auto& c : base_.objects) diag.push_back(k.internal_hom(p.obj_at(c), q.obj_at(c)));
    auto b1 = k.biproduct(diag);
    std::vector<typename V::Object> targets;
    for (const auto& c : base_.objects)
      for (const auto& d : base_.objects)
        targets.push_back(
            k.internal_hom(base_op_.hom_at(c, d), k.internal_hom(p.obj_at(c), q.obj_at(d))));
    auto b2 = k.biproduct(targets);
    auto tau_map = k.zero_mor(b1.obj, b2.obj);
    auto xi_map = k.zero_mor(b1.obj, b2.obj);
    std::size_t pair_idx = 0;
    for (std::size_t ci = 0; ci < base_.objects.size(); ++ci)
      for (std::size_t di = 0; di < base_.objects.size(); ++di, ++pair_idx) {
        const auto& c = base_.objects[ci];
        const auto& d = base_.objects[di];
        auto pc = p.obj_at(c), qc = q.obj_at(c), pd = p.obj_at(d), qd = q.obj_at(d);
        auto homcd = base_op_.hom_at(c, d);
        // τ : [Pc,Qc] → [C^op(c,d), [Pc,Qd]] through Q's action
        auto tau_body = k.compose(
            comp_internal(k, pc, qc, qd),
            k.compose(k.symmetry(k.internal_hom(pc, qc), k.internal_hom(qc, qd)),
                      k.tensor_mor(k.identity(k.internal_hom(pc, qc)), q.hom_at(c, d))));
        auto tau = k.curry(tau_body, k.internal_hom(pc, qc), homcd);
        // ξ : [Pd,Qd] → [C^op(c,d), [Pc,Qd]] through P's action
        auto xi_body = k.compose(comp_internal(k, pc, pd, qd),
                                 k.tensor_mor(k.identity(k.internal_hom(pd, qd)), p.hom_at(c, d)));
        auto xi = k.curry(xi_body, k.internal_hom(pd, qd), homcd);
        tau_map = k.add(tau_map, k.compose(b2.inj[pair_idx], k.compose(tau, b1.proj[ci])));
        xi_map = k.add(xi_map, k.compose(b2.inj[pair_idx], k.compose(xi, b1.proj[di])));
      }
    auto eq = k.equalizer(tau_map, xi_map);
    return {eq.obj, eq.incl, b1};
  }

  typename V::Object hom_obj(const Obj& p, const Obj& q) const { return hom(p, q).obj; }

  /// Factor a compatible tuple (components into each [P(c),Q(c)]) through
  /// the functor-hom equalizer.
  typename V::Morphism factor_tuple(const Hom& h,
                                    const std::vector<typename V::Morphism>& comps) const {
    typename V::Morphism tuple = k.zero_mor(k.src(comps.at(0)), h.prod.obj);
    for (std::size_t i = 0; i < comps.size(); ++i)
      tuple = k.add(tuple, k.compose(h.prod.inj[i], comps[i]));
    return must_factor_through_mono(k, h.incl, tuple, "presheaf hom tuple");
  }

  typename V::Morphism comp_mor(const Obj& p, const Obj& q, const Obj& r) const {
    auto hpq = hom(p, q), hqr = hom(q, r), hpr = hom(p, r);
    std::vector<typename V::Morphism> comps;
    for (std::size_t ci = 0; ci < base_.objects.size(); ++ci) {
      const auto& c = base_.objects[ci];
      auto pc = p.obj_at(c), qc = q.obj_at(c), rc = r.obj_at(c);
      auto piece = k.compose(comp_internal(k, pc, qc, rc),
                             k.tensor_mor(k.compose(hqr.prod.proj[ci], hqr.incl),
                                          k.compose(hpq.prod.proj[ci], hpq.incl)));
      comps.push_back(piece);
    }
    return factor_tuple(hpr, comps);
  }

  typename V::Morphism ident_mor(const Obj& p) const {
    auto h = hom(p, p);
    std::vector<typename V::Morphism> comps;
    for (const auto& c : base_.objects) comps.push_back(ident_internal(k, p.obj_at(c)));
    return factor_tuple(h, comps);
  }

  Mor elem_to_mor(const typename V::Morphism& u, const Obj& p, const Obj& q) const {
    auto h = hom(p, q);
    Mor f{p, q, {}};
    for (std::size_t ci = 0; ci < base_.objects.size(); ++ci) {
      const auto& c = base_.objects[ci];
      auto point = k.compose(h.prod.proj[ci], k.compose(h.incl, u));
      f.comps[c] = mor_of_element(k, point, p.obj_at(c), q.obj_at(c));
    }
    return f;
  }

  typename V::Morphism mor_to_elem(const Mor& f) const {
    auto h = hom(f.src, f.dst);
    std::vector<typename V::Morphism> comps;
    for (const auto& c : base_.objects) comps.push_back(element_of_mor(k, f.at(c)));
    return factor_tuple(h, comps);
  }

  bool is_natural(const Mor& f) const {
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects) {
        auto lhs = k.compose(f.at(b), action(f.src, a, b));
        auto rhs = k.compose(action(f.dst, a, b),
                             k.tensor_mor(k.identity(base_op_.hom_at(a, b)), f.at(a)));
        if (!(lhs == rhs)) return false;
      }
    return true;
  }

  Mor make_mor(const Obj& p, const Obj& q, std::map<std::string, typename V::Morphism> comps) const {
    Mor f{p, q, std::move(comps)};
    if (!is_natural(f)) throw std::invalid_argument("PresheafCat::make_mor: components not natural");
    return f;
  }

  Obj src(const Mor& f) const { return f.src; }
  Obj dst(const Mor& f) const { return f.dst; }

  Mor compose(const Mor& g, const Mor& f) const {
    Mor out{f.src, g.dst, {}};
    for (const auto& c : base_.objects) out.comps[c] = k.compose(g.at(c), f.at(c));
    return out;
  }
  Mor identity(const Obj& p) const {
    Mor out{p, p, {}};
    for (const auto& c : base_.objects) out.comps[c] = k.identity(p.obj_at(c));
    return out;
  }
  Mor zero_mor(const Obj& p, const Obj& q) const {
    Mor out{p, q, {}};
    for (const auto& c : base_.objects) out.comps[c] = k.zero_mor(p.obj_at(c), q.obj_at(c));
    return out;
  }
  Mor add(const Mor& f, const Mor& g) const {
    Mor out{f.src, f.dst, {}};
    for (const auto& c : base_.objects) out.comps[c] = k.add(f.at(c), g.at(c));
    return out;
  }
  Mor sub(const Mor& f, const Mor& g) const {
    Mor out{f.src, f.dst, {}};
    for (const auto& c : base_.objects) out.comps[c] = k.sub(f.at(c), g.at(c));
    return out;
  }
  Mor scale(const Mor& f, std::int64_t s) const {
    Mor out{f.src, f.dst, {}};
    for (const auto& c : base_.objects) out.comps[c] = k.scale(f.at(c), s);
    return out;
  }

  std::optional<Mor> is_iso(const Mor& f) const {
    Mor inv{f.dst, f.src, {}};
    for (const auto& c : base_.objects) {
      auto i = k.is_iso(f.at(c));
      if (!i) return std::nullopt;
      inv.comps[c] = *i;
    }
    return inv;
  }

  Obj zero_object() const {
    Obj p;
    p.source = base_op_;
    for (const auto& c : base_.objects) p.obj[c] = k.zero_object();
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects)
        p.hom_cmp[{a, b}] = k.zero_mor(base_op_.hom_at(a, b),
                                       k.internal_hom(k.zero_object(), k.zero_object()));
    return p;
  }

  /// Assemble a presheaf from values and uncurried actions solved against
  /// the given per-object data. `act` maps (a,b) to C^op(a,b)⊗P(a) → P(b).
  Obj from_actions(const std::map<std::string, typename V::Object>& values,
                   const std::map<std::pair<std::string, std::string>, typename V::Morphism>& act)
      const {
    Obj p;
    p.source = base_op_;
    for (const auto& c : base_.objects) p.obj[c] = values.at(c);
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects)
        p.hom_cmp[{a, b}] = k.curry(act.at({a, b}), base_op_.hom_at(a, b), values.at(a));
    return p;
  }

  Biprod biproduct(const std::vector<Obj>& ps) const {
    std::map<std::string, typename V::Object> values;
    std::map<std::string, typename V::Biprod> pointwise;
    for (const auto& c : base_.objects) {
      std::vector<typename V::Object> xs;
      for (const auto& p : ps) xs.push_back(p.obj_at(c));
      pointwise[c] = k.biproduct(xs);
      values[c] = pointwise[c].obj;
    }
    std::map<std::pair<std::string, std::string>, typename V::Morphism> act;
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects) {
        auto total = k.zero_mor(k.tensor(base_op_.hom_at(a, b), values.at(a)), values.at(b));
        for (std::size_t i = 0; i < ps.size(); ++i) {
          auto piece = k.compose(
              pointwise.at(b).inj[i],
              k.compose(action(ps[i], a, b),
                        k.tensor_mor(k.identity(base_op_.hom_at(a, b)), pointwise.at(a).proj[i])));
          total = k.add(total, piece);
        }
        act[{a, b}] = total;
      }
    Obj total = from_actions(values, act);
    Biprod out{total, {}, {}};
    for (std::size_t i = 0; i < ps.size(); ++i) {
      Mor inj{ps[i], total, {}}, proj{total, ps[i], {}};
      for (const auto& c : base_.objects) {
        inj.comps[c] = pointwise.at(c).inj[i];
        proj.comps[c] = pointwise.at(c).proj[i];
      }
      out.inj.push_back(std::move(inj));
      out.proj.push_back(std::move(proj));
    }
    return out;
  }

  Sub equalizer(const Mor& f, const Mor& g) const {
    std::map<std::string, typename V::Object> values;
    std::map<std::string, typename V::Morphism> incl;
    for (const auto& c : base_.objects) {
      auto e = k.equalizer(f.at(c), g.at(c));
      values[c] = e.obj;
      incl[c] = e.incl;
    }
    std::map<std::pair<std::string, std::string>, typename V::Morphism> act;
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects) {
        auto into_p = k.compose(action(f.src, a, b),
                                k.tensor_mor(k.identity(base_op_.hom_at(a, b)), incl.at(a)));
        act[{a, b}] = must_factor_through_mono(k, incl.at(b), into_p, "equalizer presheaf action");
      }
    Obj e = from_actions(values, act);
    Mor m{e, f.src, incl};
    return {e, m};
  }

  Quot coequalizer(const Mor& f, const Mor& g) const {
    std::map<std::string, typename V::Object> values;
    std::map<std::string, typename V::Morphism> proj;
    for (const auto& c : base_.objects) {
      auto q = k.coequalizer(f.at(c), g.at(c));
      values[c] = q.obj;
      proj[c] = q.proj;
    }
    std::map<std::pair<std::string, std::string>, typename V::Morphism> act;
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects) {
        auto down = k.compose(proj.at(b), action(f.dst, a, b));
        auto epi = k.tensor_mor(k.identity(base_op_.hom_at(a, b)), proj.at(a));
        act[{a, b}] = must_factor_through_epi(k, epi, down, "coequalizer presheaf action");
      }
    Obj q = from_actions(values, act);
    Mor m{f.dst, q, proj};
    return {q, m};
  }

  Sub kernel(const Mor& f) const { return equalizer(f, zero_mor(f.src, f.dst)); }
  Quot cokernel(const Mor& f) const { return coequalizer(f, zero_mor(f.src, f.dst)); }

  /// X ⊗ P pointwise, with the action shuffled past X.
  Obj tensor_by(const typename V::Object& x, const Obj& p) const {
    std::map<std::string, typename V::Object> values;
    for (const auto& c : base_.objects) values[c] = k.tensor(x, p.obj_at(c));
    std::map<std::pair<std::string, std::string>, typename V::Morphism> act;
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects) {
        auto h = base_op_.hom_at(a, b);
        auto pa = p.obj_at(a);
        auto shuffle = k.compose(
            k.associator(x, h, pa),
            k.compose(k.tensor_mor(k.symmetry(h, x), k.identity(pa)),
                      inverse_of(k, k.associator(h, x, pa))));
        act[{a, b}] = k.compose(k.tensor_mor(k.identity(x), action(p, a, b)), shuffle);
      }
    return from_actions(values, act);
  }

  /// X ⋔ P = [X, P(−)] pointwise.
  Obj cotensor_by(const typename V::Object& x, const Obj& p) const {
    std::map<std::string, typename V::Object> values;
    for (const auto& c : base_.objects) values[c] = k.internal_hom(x, p.obj_at(c));
    std::map<std::pair<std::string, std::string>, typename V::Morphism> act;
    for (const auto& a : base_.objects)
      for (const auto& b : base_.objects) {
        auto h = base_op_.hom_at(a, b);
        auto pa = p.obj_at(a), pb = p.obj_at(b);
        auto hx = k.internal_hom(x, pa);
        (void)pb;
        // (C^op(a,b)⊗[X,Pa])⊗X → Pb, curried back over X
        auto body2 = k.compose(action(p, a, b),
                               k.compose(k.tensor_mor(k.identity(h), k.eval(x, pa)),
                                         k.associator(h, hx, x)));
        act[{a, b}] = k.curry(body2, k.tensor(h, hx), x);
      }
    return from_actions(values, act);
  }

  /// Transpose u : X → [C^op,V](P,Q) into X ⊗ P → Q.
  Mor tensor_transpose(const typename V::Morphism& u, const Obj& p, const Obj& q) const {
    auto h = hom(p, q);
    auto x = k.src(u);
    Mor out{tensor_by(x, p), q, {}};
    for (std::size_t ci = 0; ci < base_.objects.size(); ++ci) {
      const auto& c = base_.objects[ci];
      auto point = k.compose(h.prod.proj[ci], k.compose(h.incl, u));  // X → [Pc,Qc]
      out.comps[c] = k.uncurry(point, p.obj_at(c), q.obj_at(c));
    }
    return out;
  }

  /// Transpose g : X ⊗ P → Q into X → [C^op,V](P,Q).
  typename V::Morphism tensor_transpose_inv(const Mor& g, const typename V::Object& x,
                                            const Obj& p, const Obj& q) const {
    auto h = hom(p, q);
    std::vector<typename V::Morphism> comps;
    for (const auto& c : base_.objects) comps.push_back(k.curry(g.at(c), x, p.obj_at(c)));
    return factor_tuple(h, comps);
  }

  /// Transpose u : X → [C^op,V](P,Q) into P → X ⋔ Q.
  Mor cotensor_transpose(const typename V::Morphism& u, const Obj& p, const Obj& q) const {
    auto h = hom(p, q);
    auto x = k.src(u);
    Mor out{p, cotensor_by(x, q), {}};
    for (std::size_t ci = 0; ci < base_.objects.size(); ++ci) {
      const auto& c = base_.objects[ci];
      auto pc = p.obj_at(c), qc = q.obj_at(c);
      auto point = k.compose(h.prod.proj[ci], k.compose(h.incl, u));  // X → [Pc,Qc]
      auto body = k.compose(k.eval(pc, qc),
                            k.compose(k.tensor_mor(point, k.identity(pc)), k.symmetry(pc, x)));
      out.comps[c] = k.curry(body, pc, x);
    }
    return out;
  }

  /// The counit X → [C^op,V](X ⋔ P, P) of the cotensor.
  typename V::Morphism cotensor_counit(const typename V::Object& x, const Obj& p) const {
    auto xp = cotensor_by(x, p);
    auto h = hom(xp, p);
    std::vector<typename V::Morphism> comps;
    for (const auto& c : base_.objects) {
      auto pc = p.obj_at(c);
      auto hx = k.internal_hom(x, pc);
      comps.push_back(k.curry(k.compose(k.eval(x, pc), k.symmetry(x, hx)), x, hx));
    }
    return factor_tuple(h, comps);
  }

  /// Unique u with mono∘u = h, componentwise.
  std::optional<Mor> factor_through_mono_mor(const Mor& mono, const Mor& h) const {
    Mor out{h.src, mono.src, {}};
    for (const auto& c : base_.objects) {
      auto u = factor_through_mono(k, mono.at(c), h.at(c));
      if (!u) return std::nullopt;
      out.comps[c] = *u;
    }
    if (!is_natural(out)) return std::nullopt;
    return out;
  }

  /// Unique u with u∘epi = h, componentwise.
  std::optional<Mor> factor_through_epi_mor(const Mor& epi, const Mor& h) const {
    Mor out{epi.dst, h.dst, {}};
    for (const auto& c : base_.objects) {
      auto u = factor_through_epi(k, epi.at(c), h.at(c));
      if (!u) return std::nullopt;
      out.comps[c] = *u;
    }
    if (!is_natural(out)) return std::nullopt;
    return out;
  }

  /// All natural transformations P → Q (the underlying hom-set), capped.
  std::vector<Mor> underlying_homset(const Obj& p, const Obj& q, std::int64_t cap) const {
    std::vector<Mor> out;
    for (const auto& u : k.global_elements(hom_obj(p, q), cap)) out.push_back(elem_to_mor(u, p, q));
    return out;
  }

  /// A basis of natural transformations P → Q.
  std::vector<Mor> hom_basis(const Obj& p, const Obj& q) const {
    std::vector<Mor> out;
    for (const auto& u : k.point_basis(hom_obj(p, q))) out.push_back(elem_to_mor(u, p, q));
    return out;
  }

  V k;

 private:
  VCategory<V> base_;
  VCategory<V> base_op_;
  mutable std::vector<std::tuple<Obj, Obj, Hom>> hom_cache_;
};

/// The representable presheaf C(−, c).
template <Cosmos V>
Presheaf<V> representable(const V& k, const VCategory<V>& c, const std::string& j) {
  Presheaf<V> y;
  y.source = opposite(k, c);
  for (const auto& a : c.objects) y.obj[a] = c.hom_at(a, j);
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      // C^op(a,b) = C(b,a) → [C(a,j), C(b,j)] by precomposition
      auto body = k.compose(c.comp_at(b, a, j), k.symmetry(c.hom_at(b, a), c.hom_at(a, j)));
      y.hom_cmp[{a, b}] = k.curry(body, c.hom_at(b, a), c.hom_at(a, j));
    }
  return y;
}

/// The Yoneda embedding as a functor C → [C^op, V].
template <Cosmos V>
TargetFunctor<V, PresheafCat<V>> yoneda(const V& k, const PresheafCat<V>& pc) {
  const auto& c = pc.base();
  TargetFunctor<V, PresheafCat<V>> y;
  y.source = c;
  for (const auto& j : c.objects) y.obj[j] = representable(k, c, j);
  for (const auto& cc : c.objects)
    for (const auto& dd : c.objects) {
      auto h = pc.hom(y.obj.at(cc), y.obj.at(dd));
      std::vector<typename V::Morphism> comps;
      for (const auto& a : c.objects)
        comps.push_back(k.curry(c.comp_at(a, cc, dd), c.hom_at(cc, dd), c.hom_at(a, cc)));
      y.hom_cmp[{cc, dd}] = pc.factor_tuple(h, comps);
    }
  return y;
}

template <Cosmos V>
struct YonedaIso {
  typename V::Morphism to_value;    // [C^op,V](y(c), F) → F(c)
  typename V::Morphism from_value;  // F(c) → [C^op,V](y(c), F)
};

/// The enriched Yoneda isomorphism with both directions explicit; the
/// round trips are not asserted here so callers can certify them.
template <Cosmos V>
YonedaIso<V> yoneda_iso(const V& k, const PresheafCat<V>& pc, const Presheaf<V>& f,
                        const std::string& c) {
  const auto& base = pc.base();
  auto yc = representable(k, base, c);
  auto h = pc.hom(yc, f);
  auto fc = f.obj_at(c);
  // forward: project to the c-component and evaluate at the identity
  std::size_t ci = 0;
  for (; ci < base.objects.size(); ++ci)
    if (base.objects[ci] == c) break;
  auto hom_cc = k.internal_hom(base.hom_at(c, c), fc);
  auto ev_at_id = k.compose(
      k.eval(base.hom_at(c, c), fc),
      k.compose(k.tensor_mor(k.identity(hom_cc), base.ident_at(c)),
                inverse_of(k, k.right_unitor(hom_cc))));
  auto to_value = k.compose(ev_at_id, k.compose(h.prod.proj[ci], h.incl));
  // backward: the canonical wedge F(c) → [C(a,c), F(a)]
  std::vector<typename V::Morphism> comps;
  for (const auto& a : base.objects) {
    auto body = k.compose(k.eval(fc, f.obj_at(a)),
                          k.compose(k.tensor_mor(f.hom_at(c, a), k.identity(fc)),
                                    k.symmetry(fc, base.hom_at(a, c))));
    comps.push_back(k.curry(body, fc, base.hom_at(a, c)));
  }
  auto from_value = pc.factor_tuple(h, comps);
  return {to_value, from_value};
}

}  // namespace fpcat
