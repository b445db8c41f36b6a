#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpcat/fp_matrix.hpp"

namespace fpcat {

/// An object of FinVect: F_p^dim with its canonical basis. The modulus
/// lives on the cosmos instance, not the object.
struct FinObj {
  int dim = 0;
  auto operator<=>(const FinObj&) const = default;
};

/// The cosmos V of finite-dimensional F_p-vector spaces: symmetric
/// monoidal closed, finitely complete and cocomplete, every object
/// dualizable. Morphisms are plain FpMatrix values (rows = dst.dim,
/// cols = src.dim).
///
/// Conventions fixed once and used by every higher layer:
///   - tensor basis is Kronecker order, e_i ⊗ e_j at index i·dim(y)+j;
///   - [x,y] has the matrix-unit basis in row-major order, the morphism
///     sending e_b to e_a sits at index a·dim(x)+b;
///   - structural isomorphisms are explicit matrices (the associator and
///     unitors happen to be identity permutations in this basis, the
///     symmetry is a genuine transposition permutation).
class FinVect {
 public:
  using Object = FinObj;
  using Morphism = FpMatrix;

  struct Subobject {
    Object obj;
    Morphism incl;
  };
  struct Quotient {
    Object obj;
    Morphism proj;
  };
  struct Biprod {
    Object obj;
    std::vector<Morphism> inj;
    std::vector<Morphism> proj;
  };
  struct DualPair {
    Object x;
    Object dual;
    Morphism eta;  // I → dual ⊗ x
    Morphism eps;  // x ⊗ dual → I
  };

  explicit FinVect(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  Object obj(int dim) const { return {dim}; }
  Object unit() const { return {1}; }
  Object zero_object() const { return {0}; }
  bool is_zero(Object x) const { return x.dim == 0; }

  Object src(const Morphism& f) const { return {f.cols()}; }
  Object dst(const Morphism& f) const { return {f.rows()}; }

  Morphism identity(Object x) const { return FpMatrix::identity(p_, x.dim); }
  Morphism zero_mor(Object x, Object y) const { return FpMatrix(p_, y.dim, x.dim); }
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism add(const Morphism& f, const Morphism& g) const { return f + g; }
  Morphism sub(const Morphism& f, const Morphism& g) const { return f - g; }
  Morphism scale(const Morphism& f, std::int64_t c) const { return f.scaled(c); }

  Object tensor(Object x, Object y) const { return {x.dim * y.dim}; }
  Morphism tensor_mor(const Morphism& f, const Morphism& g) const { return kron(f, g); }
  Morphism associator(Object x, Object y, Object z) const;
  Morphism left_unitor(Object x) const;
  Morphism right_unitor(Object x) const;
  Morphism symmetry(Object x, Object y) const;

  Object internal_hom(Object x, Object y) const { return {x.dim * y.dim}; }
  /// [x,y] → [x',y'] for f : x' → x, g : y → y' (h ↦ g∘h∘f).
  Morphism hom_mor(const Morphism& f, const Morphism& g) const;
  /// f : x⊗y → z becomes x → [y,z].
  Morphism curry(const Morphism& f, Object x, Object y) const;
  /// g : x → [y,z] becomes x⊗y → z.
  Morphism uncurry(const Morphism& g, Object y, Object z) const;
  Morphism eval(Object y, Object z) const;

  Subobject equalizer(const Morphism& f, const Morphism& g) const;
  Quotient coequalizer(const Morphism& f, const Morphism& g) const;
  Subobject kernel(const Morphism& f) const;
  Quotient cokernel(const Morphism& f) const;
  Biprod biproduct(const std::vector<Object>& xs) const;

  std::optional<Morphism> is_iso(const Morphism& f) const { return is_isomorphism(f); }

  /// Every object of FinVect is dualizable; both zig-zag identities are
  /// verified before the witness is returned.
  DualPair dual_pair(Object x) const;

  /// Matrix-unit basis of the space of morphisms x → y.
  std::vector<Morphism> hom_space_basis(Object x, Object y) const;
  /// Coordinates of f in that basis (row-major flattening).
  FpMatrix raw_coords(const Morphism& f) const;
  /// All morphisms I → x, i.e. the p^dim vectors of x.
  std::vector<Morphism> global_elements(Object x, std::int64_t cap) const;
  /// A basis of the space of points I → x (the standard basis vectors).
  std::vector<Morphism> point_basis(Object x) const;

  std::string describe(Object x) const;
  std::string describe_mor(const Morphism& f) const { return f.to_string(); }

 private:
  std::int64_t p_;
};

}  // namespace fpcat
