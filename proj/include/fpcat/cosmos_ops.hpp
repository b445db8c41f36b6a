#pragma once

#include <concepts>
#include <optional>
#include <vector>

#include "fpcat/fp_matrix.hpp"

namespace fpcat {

/// The structure a base of enrichment must provide: a symmetric monoidal
/// closed category with finite (co)limits whose morphism spaces can be
/// coordinatized over F_p. FinVect and ChainCosmos both model this.
template <class V>
concept Cosmos = requires(const V k, const typename V::Object x, const typename V::Morphism f) {
  { k.unit() } -> std::same_as<typename V::Object>;
  { k.tensor(x, x) } -> std::same_as<typename V::Object>;
  { k.internal_hom(x, x) } -> std::same_as<typename V::Object>;
  { k.compose(f, f) } -> std::same_as<typename V::Morphism>;
  { k.raw_coords(f) } -> std::same_as<FpMatrix>;
};

template <Cosmos V>
typename V::Morphism inverse_of(const V& k, const typename V::Morphism& f) {
  auto inv = k.is_iso(f);
  if (!inv) throw internal_error("expected isomorphism is not invertible");
  return *inv;
}

/// Unique u with mono∘u = h, if it exists. Solved exactly over the
/// coordinate space of morphisms src(h) → src(mono).
template <Cosmos V>
std::optional<typename V::Morphism> factor_through_mono(const V& k, const typename V::Morphism& mono,
                                                        const typename V::Morphism& h) {
  auto basis = k.hom_space_basis(k.src(h), k.src(mono));
  std::vector<FpMatrix> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(k.raw_coords(k.compose(mono, b)));
  FpMatrix target = k.raw_coords(h);
  FpMatrix a = cols.empty() ? FpMatrix(k.modulus(), target.rows(), 0) : hstack(cols);
  auto s = solve(a, target);
  if (!s) return std::nullopt;
  typename V::Morphism u = k.zero_mor(k.src(h), k.src(mono));
  for (std::size_t i = 0; i < basis.size(); ++i)
    u = k.add(u, k.scale(basis[i], (*s)(static_cast<int>(i), 0)));
  if (!(k.compose(mono, u) == h)) return std::nullopt;
  return u;
}

/// Unique u with u∘epi = h, if it exists.
template <Cosmos V>
std::optional<typename V::Morphism> factor_through_epi(const V& k, const typename V::Morphism& epi,
                                                       const typename V::Morphism& h) {
  auto basis = k.hom_space_basis(k.dst(epi), k.dst(h));
  std::vector<FpMatrix> cols;
  cols.reserve(basis.size());
  for (const auto& b : basis) cols.push_back(k.raw_coords(k.compose(b, epi)));
  FpMatrix target = k.raw_coords(h);
  FpMatrix a = cols.empty() ? FpMatrix(k.modulus(), target.rows(), 0) : hstack(cols);
  auto s = solve(a, target);
  if (!s) return std::nullopt;
  typename V::Morphism u = k.zero_mor(k.dst(epi), k.dst(h));
  for (std::size_t i = 0; i < basis.size(); ++i)
    u = k.add(u, k.scale(basis[i], (*s)(static_cast<int>(i), 0)));
  if (!(k.compose(u, epi) == h)) return std::nullopt;
  return u;
}

template <Cosmos V>
typename V::Morphism must_factor_through_mono(const V& k, const typename V::Morphism& mono,
                                              const typename V::Morphism& h, const char* what) {
  auto u = factor_through_mono(k, mono, h);
  if (!u) throw internal_error(std::string("factorization through mono failed: ") + what);
  return *u;
}

template <Cosmos V>
typename V::Morphism must_factor_through_epi(const V& k, const typename V::Morphism& epi,
                                             const typename V::Morphism& h, const char* what) {
  auto u = factor_through_epi(k, epi, h);
  if (!u) throw internal_error(std::string("factorization through epi failed: ") + what);
  return *u;
}

/// Internal composition [y,z] ⊗ [x,y] → [x,z] of the self-enrichment.
template <Cosmos V>
typename V::Morphism comp_internal(const V& k, typename V::Object x, typename V::Object y,
                                   typename V::Object z) {
  auto hyz = k.internal_hom(y, z);
  auto hxy = k.internal_hom(x, y);
  // ([y,z]⊗[x,y])⊗x → [y,z]⊗([x,y]⊗x) → [y,z]⊗y → z
  auto step = k.compose(k.tensor_mor(k.identity(hyz), k.eval(x, y)), k.associator(hyz, hxy, x));
  auto apply = k.compose(k.eval(y, z), step);
  return k.curry(apply, k.tensor(hyz, hxy), x);
}

/// I → [x,x] picking the identity.
template <Cosmos V>
typename V::Morphism ident_internal(const V& k, typename V::Object x) {
  return k.curry(k.left_unitor(x), k.unit(), x);
}

/// f : x → y as a point I → [x,y].
template <Cosmos V>
typename V::Morphism element_of_mor(const V& k, const typename V::Morphism& f) {
  return k.curry(k.compose(f, k.left_unitor(k.src(f))), k.unit(), k.src(f));
}

/// A point I → [x,y] as a morphism x → y.
template <Cosmos V>
typename V::Morphism mor_of_element(const V& k, const typename V::Morphism& u, typename V::Object x,
                                    typename V::Object y) {
  return k.compose(k.uncurry(u, x, y), inverse_of(k, k.left_unitor(x)));
}

/// Postcomposition [w,x] → [w,y] with f : x → y.
template <Cosmos V>
typename V::Morphism postcompose_hom(const V& k, const typename V::Morphism& f, typename V::Object w) {
  return k.hom_mor(k.identity(w), f);
}

/// Precomposition [y,w] → [x,w] with f : x → y.
template <Cosmos V>
typename V::Morphism precompose_hom(const V& k, const typename V::Morphism& f, typename V::Object w) {
  return k.hom_mor(f, k.identity(w));
}

/// [x',x] ⊗ [y,y'] → [[x,y],[x',y']], a pair (h',h'') acting by h ↦ h''∘h∘h'.
template <Cosmos V>
typename V::Morphism hom_internal(const V& k, typename V::Object xp, typename V::Object x,
                                  typename V::Object y, typename V::Object yp) {
  auto a = k.internal_hom(xp, x), b = k.internal_hom(y, yp), c = k.internal_hom(x, y);
  // (a⊗b)⊗c → b⊗(c⊗a), then compose twice internally
  auto shuffle = k.compose(k.tensor_mor(k.identity(b), k.symmetry(a, c)),
                           k.compose(k.associator(b, a, c),
                                     k.tensor_mor(k.symmetry(a, b), k.identity(c))));
  auto inner = comp_internal(k, xp, x, y);   // c⊗a → [x',y]
  auto outer = comp_internal(k, xp, y, yp);  // b⊗[x',y] → [x',y']
  auto body = k.compose(outer, k.tensor_mor(k.identity(b), inner));
  return k.curry(k.compose(body, shuffle), k.tensor(a, b), c);
}

/// [x,x'] ⊗ [y,y'] → [x⊗y, x'⊗y'] (tensoring of internal homs).
template <Cosmos V>
typename V::Morphism tensor_internal(const V& k, typename V::Object x, typename V::Object xp,
                                     typename V::Object y, typename V::Object yp) {
  auto a = k.internal_hom(x, xp), b = k.internal_hom(y, yp);
  auto ab = k.tensor(a, b), xy = k.tensor(x, y);
  // ((a⊗b)⊗(x⊗y)) → (a⊗x)⊗(b⊗y) → x'⊗y'
  auto m4 = middle_four(k, a, b, x, y);
  auto evs = k.tensor_mor(k.eval(x, xp), k.eval(y, yp));
  return k.curry(k.compose(evs, m4), ab, xy);
}

/// The middle-four interchange (a⊗b)⊗(c⊗d) → (a⊗c)⊗(b⊗d), built from the
/// associator and the symmetry.
template <Cosmos V>
typename V::Morphism middle_four(const V& k, typename V::Object a, typename V::Object b,
                                 typename V::Object c, typename V::Object d) {
  auto s1 = k.associator(a, b, k.tensor(c, d));                       // → a⊗(b⊗(c⊗d))
  auto s2 = k.tensor_mor(k.identity(a), inverse_of(k, k.associator(b, c, d)));  // → a⊗((b⊗c)⊗d)
  auto s3 = k.tensor_mor(k.identity(a), k.tensor_mor(k.symmetry(b, c), k.identity(d)));
  auto s4 = k.tensor_mor(k.identity(a), k.associator(c, b, d));       // → a⊗(c⊗(b⊗d))
  auto s5 = inverse_of(k, k.associator(a, c, k.tensor(b, d)));        // → (a⊗c)⊗(b⊗d)
  return k.compose(s5, k.compose(s4, k.compose(s3, k.compose(s2, s1))));
}

/// Canonical isomorphism ⊕_i (x⊗y_i) → x⊗(⊕_i y_i).
template <Cosmos V>
typename V::Morphism distribute_tensor(const V& k, typename V::Object x,
                                       const std::vector<typename V::Object>& ys,
                                       const typename V::Biprod& tensored,
                                       const typename V::Biprod& plain) {
  auto total = k.zero_mor(tensored.obj, k.tensor(x, plain.obj));
  for (std::size_t i = 0; i < ys.size(); ++i)
    total = k.add(total, k.compose(k.tensor_mor(k.identity(x), plain.inj[i]), tensored.proj[i]));
  return total;
}

/// Both zig-zag identities of a dual pair, checked exactly.
template <Cosmos V>
bool dual_pair_triangles_hold(const V& k, const typename V::DualPair& dp) {
  auto x = dp.x, y = dp.dual;
  // x → x⊗I → x⊗(y⊗x) → (x⊗y)⊗x → I⊗x → x
  auto t1 = k.compose(k.left_unitor(x),
            k.compose(k.tensor_mor(dp.eps, k.identity(x)),
            k.compose(inverse_of(k, k.associator(x, y, x)),
            k.compose(k.tensor_mor(k.identity(x), dp.eta), inverse_of(k, k.right_unitor(x))))));
  if (!(t1 == k.identity(x))) return false;
  // y → I⊗y → (y⊗x)⊗y → y⊗(x⊗y) → y⊗I → y
  auto t2 = k.compose(k.right_unitor(y),
            k.compose(k.tensor_mor(k.identity(y), dp.eps),
            k.compose(k.associator(y, x, y),
            k.compose(k.tensor_mor(dp.eta, k.identity(y)), inverse_of(k, k.left_unitor(y))))));
  return t2 == k.identity(y);
}

}  // namespace fpcat
