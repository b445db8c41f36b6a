#include "fpcat/fp_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace fpcat {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::invalid_argument("inv_mod: zero has no inverse");
  // extended Euclid
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  std::int64_t inv = s0 % p;
  if (inv < 0) inv += p;
  return inv;
}

namespace {
std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}
void require_same_p(const FpMatrix& a, const FpMatrix& b, const char* op) {
  if (a.p() != b.p())
    throw std::invalid_argument(std::string(op) + ": modulus mismatch (" +
                                std::to_string(a.p()) + " vs " + std::to_string(b.p()) + ")");
}
}  // namespace

FpMatrix::FpMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, 0) {
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: modulus " + std::to_string(p) + " is not prime");
  if (rows < 0 || cols < 0) throw std::invalid_argument("FpMatrix: negative dimension");
}

FpMatrix::FpMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries)
    : FpMatrix(p, rows, cols) {
  if (entries.size() != e_.size())
    throw std::invalid_argument("FpMatrix: entry count " + std::to_string(entries.size()) +
                                " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  for (std::size_t i = 0; i < entries.size(); ++i) e_[i] = reduce(entries[i], p);
}

FpMatrix FpMatrix::identity(std::int64_t p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FpMatrix FpMatrix::from_rows(std::int64_t p, int rows, int cols,
                             std::initializer_list<std::int64_t> entries) {
  return FpMatrix(p, rows, cols, std::vector<std::int64_t>(entries));
}

void FpMatrix::set(int i, int j, std::int64_t v) {
  e_[static_cast<std::size_t>(i) * cols_ + j] = reduce(v, p_);
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  require_same_p(*this, rhs, "FpMatrix::operator*");
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("FpMatrix::operator*: shape mismatch " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                                std::to_string(rhs.cols_));
  FpMatrix out(p_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        std::size_t idx = static_cast<std::size_t>(i) * rhs.cols_ + j;
        out.e_[idx] = (out.e_[idx] + a * rhs(k, j)) % p_;
      }
    }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  require_same_p(*this, rhs, "FpMatrix::operator+");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("FpMatrix::operator+: shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = (e_[i] + rhs.e_[i]) % p_;
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
  require_same_p(*this, rhs, "FpMatrix::operator-");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("FpMatrix::operator-: shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = reduce(e_[i] - rhs.e_[i], p_);
  return out;
}

FpMatrix FpMatrix::scaled(std::int64_t c) const {
  c = reduce(c, p_);
  FpMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = (e_[i] * c) % p_;
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, (*this)(i, j));
  return out;
}

bool FpMatrix::is_zero() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

FpMatrix FpMatrix::column(int j) const {
  FpMatrix out(p_, rows_, 1);
  for (int i = 0; i < rows_; ++i) out.set(i, 0, (*this)(i, j));
  return out;
}

FpMatrix FpMatrix::select_columns(std::span<const int> idx) const {
  FpMatrix out(p_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.set(i, static_cast<int>(j), (*this)(i, idx[j]));
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " mod " << p_ << " [";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << (*this)(i, j);
    }
  }
  os << "]";
  return os.str();
}

RrefResult rref(const FpMatrix& m) {
  FpMatrix a = m;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) {
        std::int64_t t = a(row, j);
        a.set(row, j, a(piv, j));
        a.set(piv, j, t);
      }
    std::int64_t inv = inv_mod(a(row, col), a.p());
    for (int j = 0; j < a.cols(); ++j) a.set(row, j, a(row, j) * inv);
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      std::int64_t f = a(i, col);
      if (f == 0) continue;
      for (int j = 0; j < a.cols(); ++j) a.set(i, j, a(i, j) - f * a(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

int rank(const FpMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

FpMatrix kernel_basis(const FpMatrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  FpMatrix out(m.p(), m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    out.set(fc, static_cast<int>(k), 1);
    for (std::size_t pi = 0; pi < r.pivots.size(); ++pi)
      out.set(r.pivots[pi], static_cast<int>(k), -r.mat(static_cast<int>(pi), fc));
  }
  return out;
}

FpMatrix cokernel_projection(const FpMatrix& m) {
  // rows of q = canonical basis of the left kernel of m
  return kernel_basis(m.transpose()).transpose();
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b, "kron");
  FpMatrix out(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t v = a(i, j);
      if (v == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, v * b(k, l));
    }
  return out;
}

std::optional<FpMatrix> is_isomorphism(const FpMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::optional<FpMatrix> inv = solve(m, FpMatrix::identity(m.p(), m.rows()));
  if (!inv) return std::nullopt;
  if (!((*inv * m).is_identity())) return std::nullopt;
  return inv;
}

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b, "solve");
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  std::vector<FpMatrix> blocks{a, b};
  RrefResult r = rref(hstack(blocks));
  FpMatrix x(a.p(), a.cols(), b.cols());
  for (std::size_t pi = 0; pi < r.pivots.size(); ++pi) {
    int pc = r.pivots[pi];
    if (pc >= a.cols()) return std::nullopt;  // pivot in the augmented part: inconsistent
    for (int j = 0; j < b.cols(); ++j) x.set(pc, j, r.mat(static_cast<int>(pi), a.cols() + j));
  }
  return x;
}

FpMatrix hstack(std::span<const FpMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("hstack: empty");
  int rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    require_same_p(blocks[0], b, "hstack");
    if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
    cols += b.cols();
  }
  FpMatrix out(blocks[0].p(), rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) out.set(i, off + j, b(i, j));
    off += b.cols();
  }
  return out;
}

FpMatrix vstack(std::span<const FpMatrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("vstack: empty");
  std::vector<FpMatrix> t;
  t.reserve(blocks.size());
  for (const auto& b : blocks) t.push_back(b.transpose());
  return hstack(t).transpose();
}

std::vector<FpMatrix> all_column_vectors(std::int64_t p, int dim, std::int64_t cap) {
  std::int64_t count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= p;
    if (count > cap)
      throw cap_exceeded("enumeration of F_" + std::to_string(p) + "^" + std::to_string(dim) +
                         " exceeds cap " + std::to_string(cap));
  }
  std::vector<FpMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t n = 0; n < count; ++n) {
    FpMatrix v(p, dim, 1);
    std::int64_t rem = n;
    for (int i = dim - 1; i >= 0; --i) {
      v.set(i, 0, rem % p);
      rem /= p;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace fpcat
