#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpcat/finvect.hpp"
#include "fpcat/fp_matrix.hpp"

namespace fpcat {

/// A bounded cochain complex of finite-dimensional F_p-spaces with
/// differentials of degree +1. d∘d = 0 is validated at construction and
/// zero-dimensional boundary terms are trimmed so equality is canonical.
class ChainComplex {
 public:
  ChainComplex() : ChainComplex(2) {}
  explicit ChainComplex(std::int64_t p);  // the zero complex
  ChainComplex(std::int64_t p, int lo, std::vector<int> dims, std::vector<FpMatrix> diffs);

  std::int64_t p() const { return p_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool is_zero() const { return dims_.empty(); }
  int dim_at(int n) const;
  /// Materialized (dim_at(n+1) x dim_at(n)) matrix, zero outside bounds.
  FpMatrix diff_at(int n) const;
  int total_dim() const;

  bool operator==(const ChainComplex&) const = default;
  std::string to_string() const;

 private:
  std::int64_t p_;
  int lo_;
  std::vector<int> dims_;
  std::vector<FpMatrix> diffs_;  // diffs_[k] : degree lo_+k → lo_+k+1
};

/// A degreewise family of matrices commuting with the differentials.
/// Components are stored exactly at the degrees where both endpoints are
/// nonzero, so equality is canonical.
struct ChainMap {
  ChainComplex src, dst;
  std::map<int, FpMatrix> comps;

  FpMatrix comp_at(int n) const;
  bool operator==(const ChainMap&) const = default;
  std::string to_string() const;
};

/// The cosmos W of bounded chain complexes over F_p with the total tensor
/// product and the total hom complex. The unit is the sphere complex on
/// the field. Degree bounds are capped; operations that would leave the
/// configured window throw instead of truncating.
class ChainCosmos {
 public:
  using Object = ChainComplex;
  using Morphism = ChainMap;

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
    Morphism eta;
    Morphism eps;
  };

  explicit ChainCosmos(std::int64_t p, int deg_lo = -8, int deg_hi = 8);

  std::int64_t modulus() const { return p_; }
  int deg_lo() const { return deg_lo_; }
  int deg_hi() const { return deg_hi_; }

  /// Validates the chain-map condition; throws std::invalid_argument on
  /// a family that does not commute with the differentials.
  Morphism make_mor(const Object& x, const Object& y, std::map<int, FpMatrix> comps) const;

  Object sphere(int dim) const;
  Object disk(int dim) const;
  Object shift(const Object& c, int n) const;

  Object unit() const { return sphere(1); }
  Object zero_object() const { return ChainComplex(p_); }
  bool is_zero(const Object& x) const { return x.is_zero(); }

  Object src(const Morphism& f) const { return f.src; }
  Object dst(const Morphism& f) const { return f.dst; }

  Morphism identity(const Object& x) const;
  Morphism zero_mor(const Object& x, const Object& y) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism add(const Morphism& f, const Morphism& g) const;
  Morphism sub(const Morphism& f, const Morphism& g) const;
  Morphism scale(const Morphism& f, std::int64_t c) const;

  Object tensor(const Object& x, const Object& y) const;
  Morphism tensor_mor(const Morphism& f, const Morphism& g) const;
  Morphism associator(const Object& x, const Object& y, const Object& z) const;
  Morphism left_unitor(const Object& x) const;
  Morphism right_unitor(const Object& x) const;
  /// Koszul symmetry: the (i,j) summand carries the sign (-1)^{ij}.
  Morphism symmetry(const Object& x, const Object& y) const;

  Object internal_hom(const Object& x, const Object& y) const;
  Morphism hom_mor(const Morphism& f, const Morphism& g) const;
  Morphism curry(const Morphism& f, const Object& x, const Object& y) const;
  Morphism uncurry(const Morphism& g, const Object& y, const Object& z) const;
  Morphism eval(const Object& y, const Object& z) const;

  Subobject equalizer(const Morphism& f, const Morphism& g) const;
  Quotient coequalizer(const Morphism& f, const Morphism& g) const;
  Subobject kernel(const Morphism& f) const;
  Quotient cokernel(const Morphism& f) const;
  Biprod biproduct(const std::vector<Object>& xs) const;

  std::optional<Morphism> is_iso(const Morphism& f) const;

  /// Every bounded complex of finite-dimensional terms is dualizable;
  /// the dual is the total hom into the unit and the unit/counit carry
  /// the degreewise signs needed for the zig-zag identities, which are
  /// checked before returning.
  DualPair dual_pair(const Object& x) const;

  std::vector<Morphism> hom_space_basis(const Object& x, const Object& y) const;
  FpMatrix raw_coords(const Morphism& f) const;
  /// Hom(S(I), x): the degree-zero cocycles of x, enumerated.
  std::vector<Morphism> global_elements(const Object& x, std::int64_t cap) const;
  /// A basis of the space of points S(I) → x.
  std::vector<Morphism> point_basis(const Object& x) const;

  std::string describe(const Object& x) const { return x.to_string(); }
  std::string describe_mor(const Morphism& f) const { return f.to_string(); }

  /// Basis of the degree-zero cocycle space Z^0(x) as columns.
  FpMatrix cocycle_basis_deg0(const Object& x) const;

 private:
  void check_window(int lo, int hi, const char* op) const;

  std::int64_t p_;
  int deg_lo_, deg_hi_;
  FinVect fv_;
};

}  // namespace fpcat
