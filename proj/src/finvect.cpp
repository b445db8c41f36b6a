#include "fpcat/finvect.hpp"

#include <stdexcept>

#include "fpcat/cosmos_ops.hpp"

namespace fpcat {

FinVect::FinVect(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("FinVect: modulus " + std::to_string(p) + " is not prime");
}

FpMatrix FinVect::compose(const Morphism& g, const Morphism& f) const {
  if (g.p() != p_ || f.p() != p_) throw std::invalid_argument("FinVect::compose: modulus mismatch");
  return g * f;
}

FpMatrix FinVect::associator(Object x, Object y, Object z) const {
  // ((i·dy + j)·dz + k) and (i·(dy·dz) + (j·dz + k)) are the same index
  return FpMatrix::identity(p_, x.dim * y.dim * z.dim);
}

FpMatrix FinVect::left_unitor(Object x) const { return FpMatrix::identity(p_, x.dim); }
FpMatrix FinVect::right_unitor(Object x) const { return FpMatrix::identity(p_, x.dim); }

FpMatrix FinVect::symmetry(Object x, Object y) const {
  FpMatrix c(p_, y.dim * x.dim, x.dim * y.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < y.dim; ++j) c.set(j * x.dim + i, i * y.dim + j, 1);
  return c;
}

FpMatrix FinVect::hom_mor(const Morphism& f, const Morphism& g) const {
  return kron(g, f.transpose());
}

FpMatrix FinVect::curry(const Morphism& f, Object x, Object y) const {
  if (f.cols() != x.dim * y.dim)
    throw std::invalid_argument("FinVect::curry: domain is not the stated tensor");
  int dz = f.rows();
  FpMatrix c(p_, dz * y.dim, x.dim);
  for (int a = 0; a < dz; ++a)
    for (int b = 0; b < y.dim; ++b)
      for (int j = 0; j < x.dim; ++j) c.set(a * y.dim + b, j, f(a, j * y.dim + b));
  return c;
}

FpMatrix FinVect::uncurry(const Morphism& g, Object y, Object z) const {
  if (g.rows() != y.dim * z.dim)
    throw std::invalid_argument("FinVect::uncurry: codomain is not the stated internal hom");
  int dx = g.cols();
  FpMatrix u(p_, z.dim, dx * y.dim);
  for (int a = 0; a < z.dim; ++a)
    for (int b = 0; b < y.dim; ++b)
      for (int j = 0; j < dx; ++j) u.set(a, j * y.dim + b, g(a * y.dim + b, j));
  return u;
}

FpMatrix FinVect::eval(Object y, Object z) const {
  return uncurry(identity(internal_hom(y, z)), y, z);
}

FinVect::Subobject FinVect::equalizer(const Morphism& f, const Morphism& g) const {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("FinVect::equalizer: morphisms are not parallel");
  FpMatrix incl = kernel_basis(f - g);
  return {Object{incl.cols()}, incl};
}

FinVect::Quotient FinVect::coequalizer(const Morphism& f, const Morphism& g) const {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw std::invalid_argument("FinVect::coequalizer: morphisms are not parallel");
  FpMatrix proj = cokernel_projection(f - g);
  return {Object{proj.rows()}, proj};
}

FinVect::Subobject FinVect::kernel(const Morphism& f) const {
  return equalizer(f, zero_mor(src(f), dst(f)));
}

FinVect::Quotient FinVect::cokernel(const Morphism& f) const {
  return coequalizer(f, zero_mor(src(f), dst(f)));
}

FinVect::Biprod FinVect::biproduct(const std::vector<Object>& xs) const {
  int total = 0;
  for (auto x : xs) total += x.dim;
  Biprod b{Object{total}, {}, {}};
  int off = 0;
  for (auto x : xs) {
    FpMatrix inj(p_, total, x.dim), proj(p_, x.dim, total);
    for (int i = 0; i < x.dim; ++i) {
      inj.set(off + i, i, 1);
      proj.set(i, off + i, 1);
    }
    b.inj.push_back(std::move(inj));
    b.proj.push_back(std::move(proj));
    off += x.dim;
  }
  return b;
}

FinVect::DualPair FinVect::dual_pair(Object x) const {
  Object y{x.dim};  // [x, I] with the dual basis
  FpMatrix eta(p_, y.dim * x.dim, 1);
  FpMatrix eps(p_, 1, x.dim * y.dim);
  for (int j = 0; j < x.dim; ++j) {
    eta.set(j * x.dim + j, 0, 1);
    eps.set(0, j * y.dim + j, 1);
  }
  DualPair dp{x, y, eta, eps};
  if (!dual_pair_triangles_hold(*this, dp))
    throw internal_error("FinVect::dual_pair: zig-zag identities failed");
  return dp;
}

std::vector<FpMatrix> FinVect::hom_space_basis(Object x, Object y) const {
  std::vector<FpMatrix> basis;
  basis.reserve(static_cast<std::size_t>(x.dim) * y.dim);
  for (int a = 0; a < y.dim; ++a)
    for (int b = 0; b < x.dim; ++b) {
      FpMatrix e(p_, y.dim, x.dim);
      e.set(a, b, 1);
      basis.push_back(std::move(e));
    }
  return basis;
}

FpMatrix FinVect::raw_coords(const Morphism& f) const {
  FpMatrix v(p_, f.rows() * f.cols(), 1);
  for (int a = 0; a < f.rows(); ++a)
    for (int b = 0; b < f.cols(); ++b) v.set(a * f.cols() + b, 0, f(a, b));
  return v;
}

std::vector<FpMatrix> FinVect::global_elements(Object x, std::int64_t cap) const {
  return all_column_vectors(p_, x.dim, cap);
}

std::vector<FpMatrix> FinVect::point_basis(Object x) const {
  std::vector<FpMatrix> out;
  for (int i = 0; i < x.dim; ++i) {
    FpMatrix v(p_, x.dim, 1);
    v.set(i, 0, 1);
    out.push_back(std::move(v));
  }
  return out;
}

std::string FinVect::describe(Object x) const {
  return "F_" + std::to_string(p_) + "^" + std::to_string(x.dim);
}

}  // namespace fpcat
