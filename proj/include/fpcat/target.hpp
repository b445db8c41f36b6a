#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpcat/vcategory.hpp"

namespace fpcat {

/// Functors out of a finite V-category land in a "target": a V-category
/// that may be too large to enumerate but whose hom objects, composition
/// and identities are computable, and whose morphisms convert to and from
/// points of the hom objects. Models: the cosmos itself (SelfTarget), a
/// finite V-category (FiniteCatTarget), and presheaf categories.
template <Cosmos V>
struct SelfTarget {
  using Obj = typename V::Object;
  using Mor = typename V::Morphism;

  V k;

  explicit SelfTarget(const V& cosmos) : k(cosmos) {}

  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  typename V::Object hom_obj(const Obj& x, const Obj& y) const { return k.internal_hom(x, y); }
  typename V::Morphism comp_mor(const Obj& x, const Obj& y, const Obj& z) const {
    return comp_internal(k, x, y, z);
  }
  typename V::Morphism ident_mor(const Obj& x) const { return ident_internal(k, x); }
  Mor elem_to_mor(const typename V::Morphism& u, const Obj& x, const Obj& y) const {
    return mor_of_element(k, u, x, y);
  }
  typename V::Morphism mor_to_elem(const Mor& f) const { return element_of_mor(k, f); }

  Mor compose(const Mor& g, const Mor& f) const { return k.compose(g, f); }
  Mor identity(const Obj& x) const { return k.identity(x); }
  Obj src(const Mor& f) const { return k.src(f); }
  Obj dst(const Mor& f) const { return k.dst(f); }
};

/// A finite V-category as a target. Morphisms are points of hom objects
/// with remembered endpoints.
template <Cosmos V>
struct FiniteCatTarget {
  struct Mor_ {
    std::string src, dst;
    typename V::Morphism elt;  // I → hom(src,dst)
    bool operator==(const Mor_&) const = default;
  };
  using Obj = std::string;
  using Mor = Mor_;

  V k;
  VCategory<V> cat;

  FiniteCatTarget(const V& cosmos, VCategory<V> c) : k(cosmos), cat(std::move(c)) {}

  bool obj_eq(const Obj& x, const Obj& y) const { return x == y; }
  typename V::Object hom_obj(const Obj& x, const Obj& y) const { return cat.hom_at(x, y); }
  typename V::Morphism comp_mor(const Obj& x, const Obj& y, const Obj& z) const {
    return cat.comp_at(x, y, z);
  }
  typename V::Morphism ident_mor(const Obj& x) const { return cat.ident_at(x); }
  Mor elem_to_mor(const typename V::Morphism& u, const Obj& x, const Obj& y) const {
    return {x, y, u};
  }
  typename V::Morphism mor_to_elem(const Mor& f) const { return f.elt; }

  Mor compose(const Mor& g, const Mor& f) const {
    return {f.src, g.dst, compose_elements(k, cat, f.src, f.dst, g.dst, g.elt, f.elt)};
  }
  Mor identity(const Obj& x) const { return {x, x, cat.ident_at(x)}; }
  Obj src(const Mor& f) const { return f.src; }
  Obj dst(const Mor& f) const { return f.dst; }
};

/// A V-functor from a finite V-category into a target M: an object map
/// plus hom components F_ab : C(a,b) → M.hom(Fa, Fb) in V.
template <Cosmos V, class M>
struct TargetFunctor {
  VCategory<V> source;
  std::map<std::string, typename M::Obj> obj;
  std::map<std::pair<std::string, std::string>, typename V::Morphism> hom_cmp;

  const typename M::Obj& obj_at(const std::string& a) const {
    auto it = obj.find(a);
    if (it == obj.end()) throw std::invalid_argument("TargetFunctor: missing object " + a);
    return it->second;
  }
  const typename V::Morphism& hom_at(const std::string& a, const std::string& b) const {
    auto it = hom_cmp.find({a, b});
    if (it == hom_cmp.end())
      throw std::invalid_argument("TargetFunctor: missing hom component (" + a + "," + b + ")");
    return it->second;
  }

  bool operator==(const TargetFunctor&) const = default;
};

template <Cosmos V>
using Presheaf = TargetFunctor<V, SelfTarget<V>>;

template <Cosmos V>
using VFunctor = TargetFunctor<V, FiniteCatTarget<V>>;

template <Cosmos V, class M>
CheckReport check_functor(const V& k, const M& m, const TargetFunctor<V, M>& f) {
  CheckReport rep;
  const auto& c = f.source;
  for (const auto& a : c.objects)
    if (!f.obj.count(a)) {
      rep.failures.push_back({"structure", "object " + a, "missing image", ""});
      return rep;
    }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto it = f.hom_cmp.find({a, b});
      if (it == f.hom_cmp.end()) {
        rep.failures.push_back({"structure", "hom component (" + a + "," + b + ")", "missing", ""});
        return rep;
      }
      if (!(k.src(it->second) == c.hom_at(a, b)) ||
          !(k.dst(it->second) == m.hom_obj(f.obj_at(a), f.obj_at(b)))) {
        rep.failures.push_back(
            {"structure", "hom component (" + a + "," + b + ")", "endpoint mismatch", ""});
        return rep;
      }
    }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects) {
        auto lhs = k.compose(f.hom_at(a, d), c.comp_at(a, b, d));
        auto rhs = k.compose(m.comp_mor(f.obj_at(a), f.obj_at(b), f.obj_at(d)),
                             k.tensor_mor(f.hom_at(b, d), f.hom_at(a, b)));
        if (!(lhs == rhs))
          rep.failures.push_back({"functor composition", "(" + a + "," + b + "," + d + ")",
                                  k.describe_mor(lhs), k.describe_mor(rhs)});
      }
  for (const auto& a : c.objects) {
    auto lhs = k.compose(f.hom_at(a, a), c.ident_at(a));
    auto rhs = m.ident_mor(f.obj_at(a));
    if (!(lhs == rhs))
      rep.failures.push_back({"functor identity", a, k.describe_mor(lhs), k.describe_mor(rhs)});
  }
  return rep;
}

/// A V-natural transformation between parallel functors into M, given by
/// component points α_c : I → M.hom(Fc, Gc).
template <Cosmos V, class M>
struct VNat {
  std::map<std::string, typename V::Morphism> comps;

  const typename V::Morphism& at(const std::string& c) const {
    auto it = comps.find(c);
    if (it == comps.end()) throw std::invalid_argument("VNat: missing component " + c);
    return it->second;
  }
};

template <Cosmos V, class M>
CheckReport check_vnat(const V& k, const M& m, const TargetFunctor<V, M>& f,
                       const TargetFunctor<V, M>& g, const VNat<V, M>& alpha) {
  CheckReport rep;
  const auto& c = f.source;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto lhs = k.compose(
          m.comp_mor(f.obj_at(a), f.obj_at(b), g.obj_at(b)),
          k.compose(k.tensor_mor(alpha.at(b), f.hom_at(a, b)),
                    inverse_of(k, k.left_unitor(c.hom_at(a, b)))));
      auto rhs = k.compose(
          m.comp_mor(f.obj_at(a), g.obj_at(a), g.obj_at(b)),
          k.compose(k.tensor_mor(g.hom_at(a, b), alpha.at(a)),
                    inverse_of(k, k.right_unitor(c.hom_at(a, b)))));
      if (!(lhs == rhs))
        rep.failures.push_back(
            {"V-naturality", "(" + a + "," + b + ")", k.describe_mor(lhs), k.describe_mor(rhs)});
    }
  return rep;
}

/// Internal postcomposition M.hom(x,y) → M.hom(x,y') with f : y → y'.
template <Cosmos V, class M>
typename V::Morphism post_internal(const V& k, const M& m, const typename M::Obj& x,
                                   const typename M::Mor& f) {
  auto y = m.src(f), yp = m.dst(f);
  auto h = m.hom_obj(x, y);
  return k.compose(m.comp_mor(x, y, yp),
                   k.compose(k.tensor_mor(m.mor_to_elem(f), k.identity(h)),
                             inverse_of(k, k.left_unitor(h))));
}

/// Internal precomposition M.hom(x,y) → M.hom(x',y) with f : x' → x.
template <Cosmos V, class M>
typename V::Morphism pre_internal(const V& k, const M& m, const typename M::Mor& f,
                                  const typename M::Obj& y) {
  auto xp = m.src(f), x = m.dst(f);
  auto h = m.hom_obj(x, y);
  return k.compose(m.comp_mor(xp, x, y),
                   k.compose(k.tensor_mor(k.identity(h), m.mor_to_elem(f)),
                             inverse_of(k, k.right_unitor(h))));
}

/// Full sub-V-category of a target on finitely many chosen objects.
template <Cosmos V, class M>
VCategory<V> full_subcategory(const V& k, const M& m,
                              const std::vector<std::pair<std::string, typename M::Obj>>& objs) {
  (void)k;
  VCategory<V> c;
  for (const auto& [label, _] : objs) c.objects.push_back(label);
  std::sort(c.objects.begin(), c.objects.end());
  auto find = [&](const std::string& l) -> const typename M::Obj& {
    for (const auto& [label, o] : objs)
      if (label == l) return o;
    throw std::invalid_argument("full_subcategory: unknown label " + l);
  };
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) c.hom[{a, b}] = m.hom_obj(find(a), find(b));
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects) c.comp[{a, b, d}] = m.comp_mor(find(a), find(b), find(d));
  for (const auto& a : c.objects) c.ident[a] = m.ident_mor(find(a));
  return c;
}

/// The inclusion of a full subcategory as a TargetFunctor.
template <Cosmos V, class M>
TargetFunctor<V, M> full_subcategory_inclusion(
    const V& k, const M& m, const VCategory<V>& sub,
    const std::vector<std::pair<std::string, typename M::Obj>>& objs) {
  TargetFunctor<V, M> f;
  f.source = sub;
  for (const auto& [label, o] : objs) f.obj[label] = o;
  for (const auto& a : sub.objects)
    for (const auto& b : sub.objects)
      f.hom_cmp[{a, b}] = k.identity(sub.hom_at(a, b));
  return f;
}

/// Precompose a target functor with a functor between finite categories:
/// (F ∘ K)(c) = F(Kc).
template <Cosmos V, class M>
TargetFunctor<V, M> precompose(const V& k, const TargetFunctor<V, M>& f, const VFunctor<V>& kk) {
  TargetFunctor<V, M> out;
  out.source = kk.source;
  for (const auto& a : kk.source.objects) out.obj[a] = f.obj_at(kk.obj_at(a));
  for (const auto& a : kk.source.objects)
    for (const auto& b : kk.source.objects)
      out.hom_cmp[{a, b}] = k.compose(f.hom_at(kk.obj_at(a), kk.obj_at(b)), kk.hom_at(a, b));
  return out;
}

/// Lift an ordinary functor L → (underlying of M) through the free
/// V-category on L: arrows become points of hom objects.
template <Cosmos V, class M>
TargetFunctor<V, M> free_lift(const V& k, const M& m, const FreeVCat<V>& fc,
                              const std::map<std::string, typename M::Obj>& on_objects,
                              const std::map<std::string, typename M::Mor>& on_arrows) {
  TargetFunctor<V, M> f;
  f.source = fc.cat;
  for (const auto& a : fc.cat.objects) f.obj[a] = on_objects.at(a);
  for (const auto& a : fc.cat.objects)
    for (const auto& b : fc.cat.objects) {
      auto arrows = fc.base.arrows_between(a, b);
      std::vector<typename V::Object> copies(arrows.size(), k.unit());
      auto power = k.biproduct(copies);
      auto cmp = k.zero_mor(fc.cat.hom_at(a, b), m.hom_obj(f.obj.at(a), f.obj.at(b)));
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        const auto& mor = on_arrows.at(fc.base.arrows[arrows[i]].name);
        cmp = k.add(cmp, k.compose(m.mor_to_elem(mor), power.proj[i]));
      }
      f.hom_cmp[{a, b}] = cmp;
    }
  return f;
}

/// Constant functor at an object of M over a free V-category.
template <Cosmos V, class M>
TargetFunctor<V, M> constant_functor(const V& k, const M& m, const FreeVCat<V>& fc,
                                     const typename M::Obj& y) {
  std::map<std::string, typename M::Obj> objs;
  std::map<std::string, typename M::Mor> arrows;
  for (const auto& a : fc.cat.objects) objs[a] = y;
  for (const auto& ar : fc.base.arrows) arrows[ar.name] = m.identity(y);
  return free_lift(k, m, fc, objs, arrows);
}

}  // namespace fpcat
