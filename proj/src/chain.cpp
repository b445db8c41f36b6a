#include "fpcat/chain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fpcat/cosmos_ops.hpp"

namespace fpcat {

namespace {

// One direct summand inside a degree of a tensor or hom complex.
struct Span {
  int i;    // index of the summand (degree taken in the first factor)
  int off;  // column/row offset inside the degree
  int w;    // width
};

std::vector<Span> tensor_spans(const ChainComplex& a, const ChainComplex& b, int n) {
  std::vector<Span> out;
  if (a.is_zero() || b.is_zero()) return out;
  int off = 0;
  for (int i = std::max(a.lo(), n - b.hi()); i <= std::min(a.hi(), n - b.lo()); ++i) {
    int w = a.dim_at(i) * b.dim_at(n - i);
    out.push_back({i, off, w});
    off += w;
  }
  return out;
}

int tensor_dim(const ChainComplex& a, const ChainComplex& b, int n) {
  int d = 0;
  for (const auto& s : tensor_spans(a, b, n)) d += s.w;
  return d;
}

// summands [a^i, b^{i+n}] of the hom complex
std::vector<Span> hom_spans(const ChainComplex& a, const ChainComplex& b, int n) {
  std::vector<Span> out;
  if (a.is_zero() || b.is_zero()) return out;
  int off = 0;
  for (int i = std::max(a.lo(), b.lo() - n); i <= std::min(a.hi(), b.hi() - n); ++i) {
    int w = a.dim_at(i) * b.dim_at(i + n);
    out.push_back({i, off, w});
    off += w;
  }
  return out;
}

int hom_dim(const ChainComplex& a, const ChainComplex& b, int n) {
  int d = 0;
  for (const auto& s : hom_spans(a, b, n)) d += s.w;
  return d;
}

void put_block(FpMatrix& m, int r0, int c0, const FpMatrix& blk) {
  for (int i = 0; i < blk.rows(); ++i)
    for (int j = 0; j < blk.cols(); ++j) m.set(r0 + i, c0 + j, blk(i, j));
}

FpMatrix get_cols(const FpMatrix& m, int c0, int w) {
  FpMatrix out(m.p(), m.rows(), w);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < w; ++j) out.set(i, j, m(i, c0 + j));
  return out;
}

FpMatrix get_rows(const FpMatrix& m, int r0, int h) {
  FpMatrix out(m.p(), h, m.cols());
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, m(r0 + i, j));
  return out;
}

std::int64_t sign_of(int e, std::int64_t p) { return (e % 2 == 0) ? 1 : p - 1; }

}  // namespace

ChainComplex::ChainComplex(std::int64_t p) : p_(p), lo_(0) {
  if (!is_prime(p)) throw std::invalid_argument("ChainComplex: modulus is not prime");
}

ChainComplex::ChainComplex(std::int64_t p, int lo, std::vector<int> dims, std::vector<FpMatrix> diffs)
    : p_(p), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (!is_prime(p)) throw std::invalid_argument("ChainComplex: modulus is not prime");
  if (!dims_.empty() && diffs_.size() + 1 != dims_.size())
    throw std::invalid_argument("ChainComplex: need one differential per adjacent pair of terms");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].p() != p_) throw std::invalid_argument("ChainComplex: differential modulus mismatch");
    if (diffs_[k].rows() != dims_[k + 1] || diffs_[k].cols() != dims_[k])
      throw std::invalid_argument("ChainComplex: differential shape mismatch at degree " +
                                  std::to_string(lo_ + static_cast<int>(k)));
  }
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!(diffs_[k + 1] * diffs_[k]).is_zero())
      throw std::invalid_argument("ChainComplex: d∘d ≠ 0 at degree " +
                                  std::to_string(lo_ + static_cast<int>(k)));
  // trim zero-dimensional ends so equality is canonical
  while (!dims_.empty() && dims_.front() == 0) {
    dims_.erase(dims_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    ++lo_;
  }
  while (!dims_.empty() && dims_.back() == 0) {
    dims_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  if (dims_.empty()) {
    lo_ = 0;
    diffs_.clear();
  }
}

int ChainComplex::dim_at(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return dims_[static_cast<std::size_t>(n - lo_)];
}

FpMatrix ChainComplex::diff_at(int n) const {
  if (n >= lo_ && n < hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
  return FpMatrix(p_, dim_at(n + 1), dim_at(n));
}

int ChainComplex::total_dim() const {
  int t = 0;
  for (int d : dims_) t += d;
  return t;
}

std::string ChainComplex::to_string() const {
  if (is_zero()) return "Ch(F_" + std::to_string(p_) + ") 0";
  std::ostringstream os;
  os << "Ch(F_" << p_ << ")[" << lo_ << ".." << hi() << ": ";
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (k) os << ",";
    os << dims_[k];
  }
  os << "]";
  return os.str();
}

FpMatrix ChainMap::comp_at(int n) const {
  auto it = comps.find(n);
  if (it != comps.end()) return it->second;
  return FpMatrix(src.p(), dst.dim_at(n), src.dim_at(n));
}

std::string ChainMap::to_string() const {
  std::ostringstream os;
  os << "chain map " << src.to_string() << " -> " << dst.to_string() << " {";
  bool first = true;
  for (const auto& [n, m] : comps) {
    if (!first) os << ", ";
    first = false;
    os << n << ": " << m.to_string();
  }
  os << "}";
  return os.str();
}

ChainCosmos::ChainCosmos(std::int64_t p, int deg_lo, int deg_hi)
    : p_(p), deg_lo_(deg_lo), deg_hi_(deg_hi), fv_(p) {
  if (deg_lo > deg_hi) throw std::invalid_argument("ChainCosmos: empty degree window");
}

void ChainCosmos::check_window(int lo, int hi, const char* op) const {
  if (lo < deg_lo_ || hi > deg_hi_)
    throw cap_exceeded(std::string(op) + ": degrees [" + std::to_string(lo) + "," + std::to_string(hi) +
                       "] exceed the configured window [" + std::to_string(deg_lo_) + "," +
                       std::to_string(deg_hi_) + "]");
}

ChainMap ChainCosmos::make_mor(const Object& x, const Object& y, std::map<int, FpMatrix> comps) const {
  std::map<int, FpMatrix> canon;
  for (int n = std::min(x.lo(), y.lo()); n <= std::max(x.hi(), y.hi()); ++n) {
    int sd = x.dim_at(n), dd = y.dim_at(n);
    auto it = comps.find(n);
    if (sd == 0 || dd == 0) {
      if (it != comps.end() && !it->second.is_zero())
        throw std::invalid_argument("ChainCosmos::make_mor: nonzero component at a zero term");
      continue;
    }
    FpMatrix m = (it != comps.end()) ? it->second : FpMatrix(p_, dd, sd);
    if (m.rows() != dd || m.cols() != sd)
      throw std::invalid_argument("ChainCosmos::make_mor: component shape mismatch at degree " +
                                  std::to_string(n));
    canon.emplace(n, std::move(m));
  }
  ChainMap f{x, y, std::move(canon)};
  for (int n = std::min(x.lo(), y.lo()) - 1; n <= std::max(x.hi(), y.hi()); ++n) {
    if (!(y.diff_at(n) * f.comp_at(n) == f.comp_at(n + 1) * x.diff_at(n)))
      throw std::invalid_argument("ChainCosmos::make_mor: family does not commute with d at degree " +
                                  std::to_string(n));
  }
  return f;
}

ChainComplex ChainCosmos::sphere(int dim) const {
  if (dim == 0) return ChainComplex(p_);
  return ChainComplex(p_, 0, {dim}, {});
}

ChainComplex ChainCosmos::disk(int dim) const {
  if (dim == 0) return ChainComplex(p_);
  return ChainComplex(p_, -1, {dim, dim}, {FpMatrix::identity(p_, dim)});
}

ChainComplex ChainCosmos::shift(const Object& c, int n) const {
  if (c.is_zero()) return c;
  check_window(c.lo() - n, c.hi() - n, "shift");
  std::vector<int> dims;
  std::vector<FpMatrix> diffs;
  for (int k = c.lo() - n; k <= c.hi() - n; ++k) dims.push_back(c.dim_at(k + n));
  for (int k = c.lo() - n; k < c.hi() - n; ++k) diffs.push_back(c.diff_at(k + n).scaled(sign_of(n, p_)));
  return ChainComplex(p_, c.lo() - n, std::move(dims), std::move(diffs));
}

ChainMap ChainCosmos::identity(const Object& x) const {
  std::map<int, FpMatrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.dim_at(n) > 0) comps.emplace(n, FpMatrix::identity(p_, x.dim_at(n)));
  return make_mor(x, x, std::move(comps));
}

ChainMap ChainCosmos::zero_mor(const Object& x, const Object& y) const {
  return make_mor(x, y, {});
}

ChainMap ChainCosmos::compose(const Morphism& g, const Morphism& f) const {
  if (!(g.src == f.dst)) throw std::invalid_argument("ChainCosmos::compose: endpoint mismatch");
  std::map<int, FpMatrix> comps;
  for (int n = f.src.lo(); n <= f.src.hi(); ++n)
    if (f.src.dim_at(n) > 0 && g.dst.dim_at(n) > 0) comps.emplace(n, g.comp_at(n) * f.comp_at(n));
  return make_mor(f.src, g.dst, std::move(comps));
}

ChainMap ChainCosmos::add(const Morphism& f, const Morphism& g) const {
  if (!(f.src == g.src && f.dst == g.dst)) throw std::invalid_argument("ChainCosmos::add: not parallel");
  std::map<int, FpMatrix> comps;
  for (const auto& [n, m] : f.comps) comps.emplace(n, m + g.comp_at(n));
  return make_mor(f.src, f.dst, std::move(comps));
}

ChainMap ChainCosmos::sub(const Morphism& f, const Morphism& g) const {
  return add(f, scale(g, p_ - 1));
}

ChainMap ChainCosmos::scale(const Morphism& f, std::int64_t c) const {
  std::map<int, FpMatrix> comps;
  for (const auto& [n, m] : f.comps) comps.emplace(n, m.scaled(c));
  return make_mor(f.src, f.dst, std::move(comps));
}

ChainComplex ChainCosmos::tensor(const Object& x, const Object& y) const {
  if (x.is_zero() || y.is_zero()) return ChainComplex(p_);
  int lo = x.lo() + y.lo(), hi = x.hi() + y.hi();
  check_window(lo, hi, "total tensor");
  std::vector<int> dims;
  std::vector<FpMatrix> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(tensor_dim(x, y, n));
  for (int n = lo; n < hi; ++n) {
    FpMatrix d(p_, tensor_dim(x, y, n + 1), tensor_dim(x, y, n));
    auto srcs = tensor_spans(x, y, n);
    auto dsts = tensor_spans(x, y, n + 1);
    auto dst_off = [&](int i) -> int {
      for (const auto& s : dsts)
        if (s.i == i) return s.off;
      return -1;
    };
    for (const auto& s : srcs) {
      int i = s.i, j = n - i;
      // d(a⊗b) = da⊗b + (-1)^i a⊗db
      int o1 = dst_off(i + 1);
      if (o1 >= 0 && x.dim_at(i + 1) > 0)
        put_block(d, o1, s.off, kron(x.diff_at(i), FpMatrix::identity(p_, y.dim_at(j))));
      int o2 = dst_off(i);
      if (o2 >= 0 && y.dim_at(j + 1) > 0)
        put_block(d, o2, s.off,
                  kron(FpMatrix::identity(p_, x.dim_at(i)), y.diff_at(j)).scaled(sign_of(i, p_)));
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(p_, lo, std::move(dims), std::move(diffs));
}

ChainMap ChainCosmos::tensor_mor(const Morphism& f, const Morphism& g) const {
  Object s = tensor(f.src, g.src), d = tensor(f.dst, g.dst);
  std::map<int, FpMatrix> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    if (s.dim_at(n) == 0 || d.dim_at(n) == 0) continue;
    FpMatrix m(p_, d.dim_at(n), s.dim_at(n));
    auto srcs = tensor_spans(f.src, g.src, n);
    auto dsts = tensor_spans(f.dst, g.dst, n);
    for (const auto& ss : srcs)
      for (const auto& ds : dsts)
        if (ss.i == ds.i)
          put_block(m, ds.off, ss.off, kron(f.comp_at(ss.i), g.comp_at(n - ss.i)));
    comps.emplace(n, std::move(m));
  }
  return make_mor(s, d, std::move(comps));
}

ChainMap ChainCosmos::associator(const Object& x, const Object& y, const Object& z) const {
  Object s = tensor(tensor(x, y), z), d = tensor(x, tensor(y, z));
  Object yz = tensor(y, z), xy = tensor(x, y);
  std::map<int, FpMatrix> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    if (s.dim_at(n) == 0) continue;
    FpMatrix m(p_, d.dim_at(n), s.dim_at(n));
    // source cell ((i,j),k) of ((x⊗y)⊗z)^n goes to cell (i,(j,k)) of (x⊗(y⊗z))^n
    for (const auto& outer : tensor_spans(xy, z, n)) {
      int k = n - outer.i;
      int dz = z.dim_at(k);
      if (dz == 0) continue;
      for (const auto& inner : tensor_spans(x, y, outer.i)) {
        int i = inner.i, j = outer.i - i;
        int dx = x.dim_at(i), dy = y.dim_at(j);
        if (dx == 0 || dy == 0) continue;
        int to_off = -1, ti_off = -1;
        for (const auto& to : tensor_spans(x, yz, n))
          if (to.i == i) to_off = to.off;
        for (const auto& ti : tensor_spans(y, z, n - i))
          if (ti.i == j) ti_off = ti.off;
        if (to_off < 0 || ti_off < 0) throw internal_error("associator: missing target summand");
        int slot = yz.dim_at(n - i);
        for (int a = 0; a < dx; ++a)
          for (int b = 0; b < dy; ++b)
            for (int c = 0; c < dz; ++c)
              m.set(to_off + a * slot + ti_off + b * dz + c,
                    outer.off + (inner.off + a * dy + b) * dz + c, 1);
      }
    }
    comps.emplace(n, std::move(m));
  }
  return make_mor(s, d, std::move(comps));
}

ChainMap ChainCosmos::left_unitor(const Object& x) const {
  Object s = tensor(unit(), x);
  std::map<int, FpMatrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.dim_at(n) > 0) comps.emplace(n, FpMatrix::identity(p_, x.dim_at(n)));
  return make_mor(s, x, std::move(comps));
}

ChainMap ChainCosmos::right_unitor(const Object& x) const {
  Object s = tensor(x, unit());
  std::map<int, FpMatrix> comps;
  for (int n = x.lo(); n <= x.hi(); ++n)
    if (x.dim_at(n) > 0) comps.emplace(n, FpMatrix::identity(p_, x.dim_at(n)));
  return make_mor(s, x, std::move(comps));
}

ChainMap ChainCosmos::symmetry(const Object& x, const Object& y) const {
  Object s = tensor(x, y), d = tensor(y, x);
  std::map<int, FpMatrix> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    if (s.dim_at(n) == 0) continue;
    FpMatrix m(p_, d.dim_at(n), s.dim_at(n));
    for (const auto& ss : tensor_spans(x, y, n)) {
      int i = ss.i, j = n - i;
      if (ss.w == 0) continue;
      int doff = -1;
      for (const auto& ds : tensor_spans(y, x, n))
        if (ds.i == j) doff = ds.off;
      if (doff < 0) throw internal_error("symmetry: missing target summand");
      FpMatrix swap = fv_.symmetry(FinObj{x.dim_at(i)}, FinObj{y.dim_at(j)});
      put_block(m, doff, ss.off, swap.scaled(sign_of(i * j, p_)));
    }
    comps.emplace(n, std::move(m));
  }
  return make_mor(s, d, std::move(comps));
}

ChainComplex ChainCosmos::internal_hom(const Object& x, const Object& y) const {
  if (x.is_zero() || y.is_zero()) return ChainComplex(p_);
  int lo = y.lo() - x.hi(), hi = y.hi() - x.lo();
  check_window(lo, hi, "total hom");
  std::vector<int> dims;
  std::vector<FpMatrix> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(hom_dim(x, y, n));
  for (int n = lo; n < hi; ++n) {
    FpMatrix d(p_, hom_dim(x, y, n + 1), hom_dim(x, y, n));
    auto dsts = hom_spans(x, y, n + 1);
    auto dst_off = [&](int i) -> int {
      for (const auto& s : dsts)
        if (s.i == i) return s.off;
      return -1;
    };
    for (const auto& s : hom_spans(x, y, n)) {
      int i = s.i;
      // (dh)_i = d_y ∘ h_i − (−1)^n h_{i+1} ∘ d_x^i ; contributions of h_i:
      int o1 = dst_off(i);
      if (o1 >= 0 && y.dim_at(i + n + 1) > 0 && x.dim_at(i) > 0)
        put_block(d, o1, s.off, kron(y.diff_at(i + n), FpMatrix::identity(p_, x.dim_at(i))));
      int o0 = dst_off(i - 1);
      if (o0 >= 0 && x.dim_at(i - 1) > 0 && y.dim_at(i + n) > 0)
        put_block(d, o0, s.off,
                  kron(FpMatrix::identity(p_, y.dim_at(i + n)), x.diff_at(i - 1).transpose())
                      .scaled(sign_of(n + 1, p_)));
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(p_, lo, std::move(dims), std::move(diffs));
}

ChainMap ChainCosmos::hom_mor(const Morphism& f, const Morphism& g) const {
  // f : x' → x, g : y → y'  gives  [x,y] → [x',y']
  Object s = internal_hom(f.dst, g.src), d = internal_hom(f.src, g.dst);
  std::map<int, FpMatrix> comps;
  for (int n = std::min(s.lo(), d.lo()); n <= std::max(s.hi(), d.hi()); ++n) {
    if (s.dim_at(n) == 0 || d.dim_at(n) == 0) continue;
    FpMatrix m(p_, d.dim_at(n), s.dim_at(n));
    for (const auto& ss : hom_spans(f.dst, g.src, n))
      for (const auto& ds : hom_spans(f.src, g.dst, n))
        if (ss.i == ds.i)
          put_block(m, ds.off, ss.off, kron(g.comp_at(ss.i + n), f.comp_at(ss.i).transpose()));
    comps.emplace(n, std::move(m));
  }
  return make_mor(s, d, std::move(comps));
}

ChainMap ChainCosmos::curry(const Morphism& f, const Object& x, const Object& y) const {
  if (!(f.src == tensor(x, y)))
    throw std::invalid_argument("ChainCosmos::curry: domain is not the stated tensor");
  const Object& z = f.dst;
  Object h = internal_hom(y, z);
  std::map<int, FpMatrix> comps;
  for (int i = x.lo(); i <= x.hi(); ++i) {
    if (x.dim_at(i) == 0 || h.dim_at(i) == 0) continue;
    FpMatrix gi(p_, h.dim_at(i), x.dim_at(i));
    for (const auto& hs : hom_spans(y, z, i)) {
      int j = hs.i;  // summand [y^j, z^{i+j}]
      if (hs.w == 0) continue;
      int n = i + j;
      // block of f at level n, tensor summand (i,j)
      auto spans = tensor_spans(x, y, n);
      int soff = -1;
      for (const auto& sp : spans)
        if (sp.i == i) soff = sp.off;
      if (soff < 0) throw internal_error("curry: missing tensor summand");
      FpMatrix blk = get_cols(f.comp_at(n), soff, x.dim_at(i) * y.dim_at(j));
      FpMatrix cur = fv_.curry(blk, FinObj{x.dim_at(i)}, FinObj{y.dim_at(j)});
      put_block(gi, hs.off, 0, cur);
    }
    comps.emplace(i, std::move(gi));
  }
  return make_mor(x, h, std::move(comps));
}

ChainMap ChainCosmos::uncurry(const Morphism& g, const Object& y, const Object& z) const {
  const Object& x = g.src;
  if (!(g.dst == internal_hom(y, z)))
    throw std::invalid_argument("ChainCosmos::uncurry: codomain is not the stated internal hom");
  Object s = tensor(x, y);
  std::map<int, FpMatrix> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    if (s.dim_at(n) == 0 || z.dim_at(n) == 0) continue;
    FpMatrix un(p_, z.dim_at(n), s.dim_at(n));
    for (const auto& sp : tensor_spans(x, y, n)) {
      int i = sp.i, j = n - i;
      if (sp.w == 0) continue;
      int hoff = -1;
      for (const auto& hs : hom_spans(y, z, i))
        if (hs.i == j) hoff = hs.off;
      if (hoff < 0) continue;  // the hom summand may be absent when z^{i+j} = 0
      FpMatrix gi = g.comp_at(i);
      FpMatrix blk = get_rows(gi, hoff, y.dim_at(j) * z.dim_at(n));
      put_block(un, 0, sp.off, fv_.uncurry(blk, FinObj{y.dim_at(j)}, FinObj{z.dim_at(n)}));
    }
    comps.emplace(n, std::move(un));
  }
  return make_mor(s, z, std::move(comps));
}

ChainMap ChainCosmos::eval(const Object& y, const Object& z) const {
  return uncurry(identity(internal_hom(y, z)), y, z);
}

ChainCosmos::Subobject ChainCosmos::equalizer(const Morphism& f, const Morphism& g) const {
  if (!(f.src == g.src && f.dst == g.dst))
    throw std::invalid_argument("ChainCosmos::equalizer: morphisms are not parallel");
  Morphism h = sub(f, g);
  std::map<int, FpMatrix> kb;
  std::vector<int> dims;
  for (int n = f.src.lo(); n <= f.src.hi(); ++n) kb.emplace(n, kernel_basis(h.comp_at(n)));
  int lo = f.src.lo();
  std::vector<FpMatrix> diffs;
  for (int n = lo; n <= f.src.hi(); ++n) dims.push_back(kb.at(n).cols());
  for (int n = lo; n < f.src.hi(); ++n) {
    auto d = solve(kb.at(n + 1), f.src.diff_at(n) * kb.at(n));
    if (!d) throw internal_error("ChainCosmos::equalizer: differential does not restrict");
    diffs.push_back(*d);
  }
  ChainComplex e(p_, lo, std::move(dims), std::move(diffs));
  std::map<int, FpMatrix> comps;
  for (int n = e.lo(); n <= e.hi(); ++n)
    if (e.dim_at(n) > 0 && f.src.dim_at(n) > 0) comps.emplace(n, kb.at(n));
  return {e, make_mor(e, f.src, std::move(comps))};
}

ChainCosmos::Quotient ChainCosmos::coequalizer(const Morphism& f, const Morphism& g) const {
  if (!(f.src == g.src && f.dst == g.dst))
    throw std::invalid_argument("ChainCosmos::coequalizer: morphisms are not parallel");
  Morphism h = sub(f, g);
  std::map<int, FpMatrix> qs;
  for (int n = f.dst.lo(); n <= f.dst.hi(); ++n) qs.emplace(n, cokernel_projection(h.comp_at(n)));
  int lo = f.dst.lo();
  std::vector<int> dims;
  std::vector<FpMatrix> diffs;
  for (int n = lo; n <= f.dst.hi(); ++n) dims.push_back(qs.at(n).rows());
  for (int n = lo; n < f.dst.hi(); ++n) {
    auto dt = solve(qs.at(n).transpose(), (qs.at(n + 1) * f.dst.diff_at(n)).transpose());
    if (!dt) throw internal_error("ChainCosmos::coequalizer: differential does not descend");
    diffs.push_back(dt->transpose());
  }
  ChainComplex q(p_, lo, std::move(dims), std::move(diffs));
  std::map<int, FpMatrix> comps;
  for (int n = q.lo(); n <= q.hi(); ++n)
    if (q.dim_at(n) > 0 && f.dst.dim_at(n) > 0) comps.emplace(n, qs.at(n));
  return {q, make_mor(f.dst, q, std::move(comps))};
}

ChainCosmos::Subobject ChainCosmos::kernel(const Morphism& f) const {
  return equalizer(f, zero_mor(f.src, f.dst));
}

ChainCosmos::Quotient ChainCosmos::cokernel(const Morphism& f) const {
  return coequalizer(f, zero_mor(f.src, f.dst));
}

ChainCosmos::Biprod ChainCosmos::biproduct(const std::vector<Object>& xs) const {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& x : xs)
    if (!x.is_zero()) {
      lo = any ? std::min(lo, x.lo()) : x.lo();
      hi = any ? std::max(hi, x.hi()) : x.hi();
      any = true;
    }
  if (!any) return {ChainComplex(p_), std::vector<Morphism>(xs.size(), zero_mor(zero_object(), zero_object())),
                    std::vector<Morphism>(xs.size(), zero_mor(zero_object(), zero_object()))};
  std::vector<int> dims;
  std::vector<FpMatrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    int d = 0;
    for (const auto& x : xs) d += x.dim_at(n);
    dims.push_back(d);
  }
  for (int n = lo; n < hi; ++n) {
    FpMatrix d(p_, dims[static_cast<std::size_t>(n + 1 - lo)], dims[static_cast<std::size_t>(n - lo)]);
    int ro = 0, co = 0;
    for (const auto& x : xs) {
      put_block(d, ro, co, x.diff_at(n));
      ro += x.dim_at(n + 1);
      co += x.dim_at(n);
    }
    diffs.push_back(std::move(d));
  }
  ChainComplex total(p_, lo, std::move(dims), std::move(diffs));
  Biprod b{total, {}, {}};
  int off_at_n = 0;
  (void)off_at_n;
  std::vector<int> offsets(xs.size(), 0);
  for (std::size_t idx = 0; idx < xs.size(); ++idx) {
    std::map<int, FpMatrix> inj, proj;
    for (int n = lo; n <= hi; ++n) {
      int before = 0;
      for (std::size_t k = 0; k < idx; ++k) before += xs[k].dim_at(n);
      int w = xs[idx].dim_at(n);
      if (w == 0 || total.dim_at(n) == 0) continue;
      FpMatrix in(p_, total.dim_at(n), w), pr(p_, w, total.dim_at(n));
      for (int t = 0; t < w; ++t) {
        in.set(before + t, t, 1);
        pr.set(t, before + t, 1);
      }
      inj.emplace(n, std::move(in));
      proj.emplace(n, std::move(pr));
    }
    b.inj.push_back(make_mor(xs[idx], total, std::move(inj)));
    b.proj.push_back(make_mor(total, xs[idx], std::move(proj)));
  }
  return b;
}

std::optional<ChainMap> ChainCosmos::is_iso(const Morphism& f) const {
  for (int n = std::min(f.src.lo(), f.dst.lo()); n <= std::max(f.src.hi(), f.dst.hi()); ++n)
    if (f.src.dim_at(n) != f.dst.dim_at(n)) return std::nullopt;
  std::map<int, FpMatrix> comps;
  for (const auto& [n, m] : f.comps) {
    auto inv = is_isomorphism(m);
    if (!inv) return std::nullopt;
    comps.emplace(n, *inv);
  }
  return make_mor(f.dst, f.src, std::move(comps));
}

ChainCosmos::DualPair ChainCosmos::dual_pair(const Object& x) const {
  Object dual = internal_hom(x, unit());
  if (x.is_zero()) {
    DualPair dp{x, dual, zero_mor(unit(), zero_object()), zero_mor(zero_object(), unit())};
    if (!dual_pair_triangles_hold(*this, dp))
      throw internal_error("ChainCosmos::dual_pair: zig-zag identities failed on zero complex");
    return dp;
  }
  // dual^n = [x^{-n}, I]; eta(1) = Σ_i (-1)^i coev_i, eps(v⊗φ) = (-1)^i φ(v) on x^i⊗[x^i,I]
  Object dx = tensor(dual, x);
  FpMatrix eta0(p_, dx.dim_at(0), 1);
  for (const auto& sp : tensor_spans(dual, x, 0)) {
    int n = sp.i;         // degree in dual
    int i = -n;           // matching degree in x
    int di = x.dim_at(i);
    if (di == 0) continue;
    for (int a = 0; a < di; ++a) eta0.set(sp.off + a * di + a, 0, sign_of(i, p_));
  }
  Morphism eta = make_mor(unit(), dx, {{0, eta0}});
  Object xd = tensor(x, dual);
  FpMatrix eps0(p_, 1, xd.dim_at(0));
  for (const auto& sp : tensor_spans(x, dual, 0)) {
    int i = sp.i;
    int di = x.dim_at(i);
    if (di == 0 || -i < dual.lo() || -i > dual.hi()) continue;
    for (int a = 0; a < di; ++a) eps0.set(0, sp.off + a * di + a, sign_of(i, p_));
  }
  Morphism eps = make_mor(xd, unit(), {{0, eps0}});
  DualPair dp{x, dual, eta, eps};
  if (!dual_pair_triangles_hold(*this, dp))
    throw internal_error("ChainCosmos::dual_pair: zig-zag identities failed");
  return dp;
}

std::vector<ChainMap> ChainCosmos::hom_space_basis(const Object& x, const Object& y) const {
  // parameterize degreewise families, cut by the chain-map constraints
  std::vector<int> degs;
  std::vector<int> offs;
  int total = 0;
  for (int n = std::min(x.lo(), y.lo()); n <= std::max(x.hi(), y.hi()); ++n)
    if (x.dim_at(n) > 0 && y.dim_at(n) > 0) {
      degs.push_back(n);
      offs.push_back(total);
      total += x.dim_at(n) * y.dim_at(n);
    }
  auto block_of = [&](int n) -> int {
    for (std::size_t k = 0; k < degs.size(); ++k)
      if (degs[k] == n) return offs[static_cast<int>(k)];
    return -1;
  };
  // constraint rows per degree n: d_y f^n − f^{n+1} d_x = 0
  std::vector<FpMatrix> rows;
  for (int n = std::min(x.lo(), y.lo()) - 1; n <= std::max(x.hi(), y.hi()); ++n) {
    int r = y.dim_at(n + 1) * x.dim_at(n);
    if (r == 0) continue;
    FpMatrix row(p_, r, total);
    bool nonzero = false;
    int b0 = block_of(n);
    if (b0 >= 0 && y.dim_at(n) > 0) {
      put_block(row, 0, b0, kron(y.diff_at(n), FpMatrix::identity(p_, x.dim_at(n))));
      nonzero = true;
    }
    int b1 = block_of(n + 1);
    if (b1 >= 0 && x.dim_at(n + 1) > 0) {
      put_block(row, 0, b1,
                kron(FpMatrix::identity(p_, y.dim_at(n + 1)), x.diff_at(n).transpose()).scaled(p_ - 1));
      nonzero = true;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  FpMatrix constraint = rows.empty() ? FpMatrix(p_, 0, total) : vstack(rows);
  FpMatrix basis = kernel_basis(constraint);
  std::vector<ChainMap> out;
  for (int c = 0; c < basis.cols(); ++c) {
    std::map<int, FpMatrix> comps;
    for (std::size_t k = 0; k < degs.size(); ++k) {
      int n = degs[k];
      FpMatrix m(p_, y.dim_at(n), x.dim_at(n));
      for (int a = 0; a < y.dim_at(n); ++a)
        for (int b = 0; b < x.dim_at(n); ++b)
          m.set(a, b, basis(offs[k] + a * x.dim_at(n) + b, c));
      comps.emplace(n, std::move(m));
    }
    out.push_back(make_mor(x, y, std::move(comps)));
  }
  return out;
}

FpMatrix ChainCosmos::raw_coords(const Morphism& f) const {
  std::vector<FpMatrix> parts;
  for (int n = std::min(f.src.lo(), f.dst.lo()); n <= std::max(f.src.hi(), f.dst.hi()); ++n)
    if (f.src.dim_at(n) > 0 && f.dst.dim_at(n) > 0) parts.push_back(fv_.raw_coords(f.comp_at(n)));
  if (parts.empty()) return FpMatrix(p_, 0, 1);
  return vstack(parts);
}

FpMatrix ChainCosmos::cocycle_basis_deg0(const Object& x) const {
  return kernel_basis(x.diff_at(0));
}

std::vector<ChainMap> ChainCosmos::point_basis(const Object& x) const {
  FpMatrix z = cocycle_basis_deg0(x);
  std::vector<ChainMap> out;
  for (int c = 0; c < z.cols(); ++c) {
    std::map<int, FpMatrix> comps;
    if (x.dim_at(0) > 0) comps.emplace(0, z.column(c));
    out.push_back(make_mor(unit(), x, std::move(comps)));
  }
  return out;
}

std::vector<ChainMap> ChainCosmos::global_elements(const Object& x, std::int64_t cap) const {
  FpMatrix z = cocycle_basis_deg0(x);
  std::vector<ChainMap> out;
  for (const auto& c : all_column_vectors(p_, z.cols(), cap)) {
    FpMatrix v = z * c;
    std::map<int, FpMatrix> comps;
    if (x.dim_at(0) > 0) comps.emplace(0, v);
    out.push_back(make_mor(unit(), x, std::move(comps)));
  }
  return out;
}

}  // namespace fpcat
