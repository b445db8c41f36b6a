#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "fpcat/cosmos_ops.hpp"
#include "fpcat/ord_category.hpp"

namespace fpcat {

/// A finite category enriched in the cosmos V: hom objects together with
/// explicit composition and identity morphisms of V. Construction is
/// permissive; check_vcategory reports which axiom diagrams fail.
template <Cosmos V>
struct VCategory {
  using Obj = typename V::Object;
  using Mor = typename V::Morphism;

  std::vector<std::string> objects;  // kept sorted
  std::map<std::pair<std::string, std::string>, Obj> hom;
  std::map<std::array<std::string, 3>, Mor> comp;  // m_abc : C(b,c)⊗C(a,b) → C(a,c)
  std::map<std::string, Mor> ident;                // j_c : I → C(c,c)

  const Obj& hom_at(const std::string& a, const std::string& b) const {
    auto it = hom.find({a, b});
    if (it == hom.end()) throw std::invalid_argument("VCategory: missing hom (" + a + "," + b + ")");
    return it->second;
  }
  const Mor& comp_at(const std::string& a, const std::string& b, const std::string& c) const {
    auto it = comp.find({a, b, c});
    if (it == comp.end())
      throw std::invalid_argument("VCategory: missing composition (" + a + "," + b + "," + c + ")");
    return it->second;
  }
  const Mor& ident_at(const std::string& c) const {
    auto it = ident.find(c);
    if (it == ident.end()) throw std::invalid_argument("VCategory: missing identity " + c);
    return it->second;
  }

  bool operator==(const VCategory&) const = default;
};

struct DiagramFailure {
  std::string diagram;   // which axiom
  std::string location;  // at which objects
  std::string lhs, rhs;  // the two unequal composites (or a structural message)
};

struct CheckReport {
  std::vector<DiagramFailure> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    if (ok()) return "all diagrams commute";
    std::string s;
    for (const auto& f : failures) {
      s += f.diagram + " fails at " + f.location;
      if (!f.lhs.empty()) s += ": " + f.lhs + " != " + f.rhs;
      s += "\n";
    }
    return s;
  }
};

template <Cosmos V>
CheckReport check_vcategory(const V& k, const VCategory<V>& c) {
  CheckReport rep;
  // structural pass first: shapes must line up before diagrams make sense
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      if (!c.hom.count({a, b})) {
        rep.failures.push_back({"structure", "hom(" + a + "," + b + ")", "missing", ""});
        return rep;
      }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects) {
        auto it = c.comp.find({a, b, d});
        if (it == c.comp.end()) {
          rep.failures.push_back({"structure", "comp(" + a + "," + b + "," + d + ")", "missing", ""});
          return rep;
        }
        if (!(k.src(it->second) == k.tensor(c.hom_at(b, d), c.hom_at(a, b))) ||
            !(k.dst(it->second) == c.hom_at(a, d))) {
          rep.failures.push_back(
              {"structure", "comp(" + a + "," + b + "," + d + ")", "endpoint mismatch", ""});
          return rep;
        }
      }
  for (const auto& a : c.objects) {
    auto it = c.ident.find(a);
    if (it == c.ident.end() || !(k.src(it->second) == k.unit()) ||
        !(k.dst(it->second) == c.hom_at(a, a))) {
      rep.failures.push_back({"structure", "ident(" + a + ")", "missing or endpoint mismatch", ""});
      return rep;
    }
  }

  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects)
        for (const auto& e : c.objects) {
          // associativity square on (C(d,e)⊗C(b,d))⊗C(a,b)
          auto top = k.compose(c.comp_at(a, d, e),
                               k.compose(k.tensor_mor(k.identity(c.hom_at(d, e)), c.comp_at(a, b, d)),
                                         k.associator(c.hom_at(d, e), c.hom_at(b, d), c.hom_at(a, b))));
          auto left = k.compose(c.comp_at(a, b, e),
                                k.tensor_mor(c.comp_at(b, d, e), k.identity(c.hom_at(a, b))));
          if (!(top == left))
            rep.failures.push_back({"associativity", "(" + a + "," + b + "," + d + "," + e + ")",
                                    k.describe_mor(top), k.describe_mor(left)});
        }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto lu = k.compose(c.comp_at(a, b, b),
                          k.tensor_mor(c.ident_at(b), k.identity(c.hom_at(a, b))));
      if (!(lu == k.left_unitor(c.hom_at(a, b))))
        rep.failures.push_back({"left unit", "(" + a + "," + b + ")", k.describe_mor(lu),
                                k.describe_mor(k.left_unitor(c.hom_at(a, b)))});
      auto ru = k.compose(c.comp_at(a, a, b),
                          k.tensor_mor(k.identity(c.hom_at(a, b)), c.ident_at(a)));
      if (!(ru == k.right_unitor(c.hom_at(a, b))))
        rep.failures.push_back({"right unit", "(" + a + "," + b + ")", k.describe_mor(ru),
                                k.describe_mor(k.right_unitor(c.hom_at(a, b)))});
    }
  return rep;
}

template <Cosmos V>
VCategory<V> unit_vcategory(const V& k) {
  VCategory<V> c;
  c.objects = {"*"};
  c.hom[{"*", "*"}] = k.unit();
  c.comp[{"*", "*", "*"}] = k.left_unitor(k.unit());
  c.ident["*"] = k.identity(k.unit());
  return c;
}

/// One-object V-category from a monoid object (an algebra): comp is the
/// multiplication, ident picks the unit element.
template <Cosmos V>
VCategory<V> one_object_category(const V& k, typename V::Object x, typename V::Morphism mult,
                                 typename V::Morphism unit_elem) {
  if (!(k.src(mult) == k.tensor(x, x)) || !(k.dst(mult) == x))
    throw std::invalid_argument("one_object_category: multiplication has wrong shape");
  if (!(k.src(unit_elem) == k.unit()) || !(k.dst(unit_elem) == x))
    throw std::invalid_argument("one_object_category: unit has wrong shape");
  VCategory<V> c;
  c.objects = {"*"};
  c.hom[{"*", "*"}] = x;
  c.comp[{"*", "*", "*"}] = mult;
  c.ident["*"] = unit_elem;
  return c;
}

template <Cosmos V>
VCategory<V> opposite(const V& k, const VCategory<V>& c) {
  VCategory<V> o;
  o.objects = c.objects;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) o.hom[{a, b}] = c.hom_at(b, a);
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects)
        o.comp[{a, b, d}] =
            k.compose(c.comp_at(d, b, a), k.symmetry(c.hom_at(d, b), c.hom_at(b, a)));
  o.ident = c.ident;
  return o;
}

inline std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "|" + b + ")";
}

/// C ⊗ D with composition through the middle-four interchange.
template <Cosmos V>
VCategory<V> tensor_vcat(const V& k, const VCategory<V>& c, const VCategory<V>& d) {
  VCategory<V> t;
  for (const auto& a : c.objects)
    for (const auto& x : d.objects) t.objects.push_back(pair_label(a, x));
  std::sort(t.objects.begin(), t.objects.end());
  for (const auto& a : c.objects)
    for (const auto& x : d.objects)
      for (const auto& b : c.objects)
        for (const auto& y : d.objects)
          t.hom[{pair_label(a, x), pair_label(b, y)}] = k.tensor(c.hom_at(a, b), d.hom_at(x, y));
  for (const auto& a : c.objects)
    for (const auto& x : d.objects)
      for (const auto& b : c.objects)
        for (const auto& y : d.objects)
          for (const auto& e : c.objects)
            for (const auto& z : d.objects) {
              auto m4 = middle_four(k, c.hom_at(b, e), d.hom_at(y, z), c.hom_at(a, b), d.hom_at(x, y));
              t.comp[{pair_label(a, x), pair_label(b, y), pair_label(e, z)}] =
                  k.compose(k.tensor_mor(c.comp_at(a, b, e), d.comp_at(x, y, z)), m4);
            }
  for (const auto& a : c.objects)
    for (const auto& x : d.objects)
      t.ident[pair_label(a, x)] =
          k.compose(k.tensor_mor(c.ident_at(a), d.ident_at(x)),
                    inverse_of(k, k.left_unitor(k.unit())));
  return t;
}

/// Composition of points I → C(b,c) and I → C(a,b) in the underlying
/// category, through m and the unitor on I.
template <Cosmos V>
typename V::Morphism compose_elements(const V& k, const VCategory<V>& c, const std::string& a,
                                      const std::string& b, const std::string& d,
                                      const typename V::Morphism& u, const typename V::Morphism& v) {
  return k.compose(c.comp_at(a, b, d),
                   k.compose(k.tensor_mor(u, v), inverse_of(k, k.left_unitor(k.unit()))));
}

template <Cosmos V>
struct UnderlyingCat {
  OrdCategory cat;
  std::vector<typename V::Morphism> elements;  // one per arrow, I → C(a,b)
};

/// The ordinary category with Hom(a,b) = all points I → C(a,b). Hom-set
/// enumeration is capped; exceeding the cap throws cap_exceeded.
template <Cosmos V>
UnderlyingCat<V> underlying(const V& k, const VCategory<V>& c, std::int64_t cap) {
  UnderlyingCat<V> u;
  u.cat.objects = c.objects;
  std::map<std::pair<std::string, std::string>, std::vector<int>> index;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      auto els = k.global_elements(c.hom_at(a, b), cap);
      std::vector<int> idx;
      for (std::size_t i = 0; i < els.size(); ++i) {
        idx.push_back(static_cast<int>(u.cat.arrows.size()));
        u.cat.arrows.push_back({a + "->" + b + "[" + std::to_string(i) + "]", a, b});
        u.elements.push_back(els[i]);
      }
      index[{a, b}] = std::move(idx);
    }
  for (const auto& a : c.objects) {
    const auto& idx = index.at({a, a});
    bool found = false;
    for (int i : idx)
      if (u.elements[static_cast<std::size_t>(i)] == c.ident_at(a)) {
        u.cat.identity[a] = i;
        found = true;
      }
    if (!found) throw internal_error("underlying: identity element not found among points");
  }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects)
        for (int g : index.at({b, d}))
          for (int f : index.at({a, b})) {
            auto gf = compose_elements(k, c, a, b, d, u.elements[static_cast<std::size_t>(g)],
                                       u.elements[static_cast<std::size_t>(f)]);
            bool found = false;
            for (int h : index.at({a, d}))
              if (u.elements[static_cast<std::size_t>(h)] == gf) {
                u.cat.table[{g, f}] = h;
                found = true;
              }
            if (!found) throw internal_error("underlying: composite element not found");
          }
  return u;
}

template <Cosmos V>
struct FreeVCat {
  VCategory<V> cat;
  OrdCategory base;
};

/// The free V-category on a finite ordinary category: hom objects are
/// coproducts of copies of the unit indexed by the arrows.
template <Cosmos V>
FreeVCat<V> free_vcategory(const V& k, const OrdCategory& l) {
  if (auto err = l.validate())
    throw std::invalid_argument("free_vcategory: input is not a category: " + *err);
  FreeVCat<V> out;
  out.base = l;
  VCategory<V>& c = out.cat;
  c.objects = l.objects;
  std::sort(c.objects.begin(), c.objects.end());
  std::map<std::pair<std::string, std::string>, typename V::Biprod> powers;
  for (const auto& a : c.objects)
    for (const auto& b : c.objects) {
      std::vector<typename V::Object> copies(l.arrows_between(a, b).size(), k.unit());
      powers[{a, b}] = k.biproduct(copies);
      c.hom[{a, b}] = powers[{a, b}].obj;
    }
  for (const auto& a : c.objects)
    for (const auto& b : c.objects)
      for (const auto& d : c.objects) {
        auto gs = l.arrows_between(b, d);
        auto fs = l.arrows_between(a, b);
        const auto& pg = powers.at({b, d});
        const auto& pf = powers.at({a, b});
        const auto& ph = powers.at({a, d});
        auto m = k.zero_mor(k.tensor(c.hom_at(b, d), c.hom_at(a, b)), c.hom_at(a, d));
        for (std::size_t gi = 0; gi < gs.size(); ++gi)
          for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            int comp = l.compose(gs[gi], fs[fi]);
            int target = l.index_in_hom(comp);
            // U^n⊗U^m --proj_g⊗proj_f--> I⊗I --l--> I --inj_{g∘f}--> U^k
            auto piece = k.compose(ph.inj[static_cast<std::size_t>(target)],
                                   k.compose(k.left_unitor(k.unit()),
                                             k.tensor_mor(pg.proj[gi], pf.proj[fi])));
            m = k.add(m, piece);
          }
        c.comp[{a, b, d}] = m;
      }
  for (const auto& a : c.objects) {
    int id_idx = l.index_in_hom(l.identity.at(a));
    c.ident[a] = powers.at({a, a}).inj[static_cast<std::size_t>(id_idx)];
  }
  return out;
}

}  // namespace fpcat
