#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fpcat {

bool is_prime(std::int64_t n);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

/// Dense row-major matrix over the prime field F_p.
///
/// Every morphism in the workbench ultimately reduces to one of these.
/// All entries are kept reduced to [0, p); the modulus is a runtime
/// parameter and mixing moduli in any binary operation throws.
class FpMatrix {
 public:
  FpMatrix() : p_(2), rows_(0), cols_(0) {}
  FpMatrix(std::int64_t p, int rows, int cols);
  FpMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries);

  static FpMatrix identity(std::int64_t p, int n);
  /// Row-major literal, e.g. from_rows(2, 2, 2, {1,1, 0,1}).
  static FpMatrix from_rows(std::int64_t p, int rows, int cols,
                            std::initializer_list<std::int64_t> entries);

  std::int64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, std::int64_t v);

  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpMatrix operator-(const FpMatrix& rhs) const;
  FpMatrix scaled(std::int64_t c) const;
  FpMatrix transpose() const;
  bool operator==(const FpMatrix& rhs) const = default;

  bool is_zero() const;
  bool is_identity() const;

  FpMatrix column(int j) const;
  /// Keep the listed columns, in the given order.
  FpMatrix select_columns(std::span<const int> idx) const;

  std::string to_string() const;

 private:
  std::int64_t p_;
  int rows_, cols_;
  std::vector<std::int64_t> e_;
};

struct RrefResult {
  FpMatrix mat;
  std::vector<int> pivots;  // pivot column indices, ascending
};

/// Reduced row echelon form with deterministic pivoting: leftmost nonzero
/// column, topmost row, pivot scaled to 1.
RrefResult rref(const FpMatrix& m);
int rank(const FpMatrix& m);

/// Columns form the canonical basis of {v : m v = 0} induced by rref
/// pivoting (free variables set to 1 in ascending column order).
FpMatrix kernel_basis(const FpMatrix& m);

/// A surjection q from the codomain of m whose kernel is exactly im(m);
/// rows(q) = rows(m) - rank(m).
FpMatrix cokernel_projection(const FpMatrix& m);

/// (a ⊗ b)[(i·rows(b)+k), (j·cols(b)+l)] = a[i,j]·b[k,l].
FpMatrix kron(const FpMatrix& a, const FpMatrix& b);

/// Two-sided inverse when m is square of full rank, otherwise empty.
std::optional<FpMatrix> is_isomorphism(const FpMatrix& m);

/// Any x with a·x = b (deterministic: free variables zero), or empty if
/// the system is inconsistent.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

FpMatrix hstack(std::span<const FpMatrix> blocks);
FpMatrix vstack(std::span<const FpMatrix> blocks);

/// All p^dim column vectors of F_p^dim in lexicographic order (last
/// coordinate fastest). Throws if p^dim would exceed `cap`.
std::vector<FpMatrix> all_column_vectors(std::int64_t p, int dim, std::int64_t cap);

/// Enumeration or degree bounds exceeded a configured resource cap.
class cap_exceeded : public std::exception {
 public:
  explicit cap_exceeded(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  std::string what_;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public std::exception {
 public:
  explicit internal_error(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }

 private:
  std::string what_;
};

}  // namespace fpcat
