#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fpcat {

/// A finite ordinary category given by an explicit composition table.
/// Identities are listed among the arrows. Used as the shape of conical
/// (co)limits and as the input of the free-enrichment construction.
struct OrdCategory {
  struct Arrow {
    std::string name, src, dst;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::map<std::string, int> identity;       // object → arrow index
  std::map<std::pair<int, int>, int> table;  // (g, f) → g∘f for dst(f) = src(g)

  int compose(int g, int f) const;
  std::vector<int> arrows_between(const std::string& a, const std::string& b) const;
  /// Position of an arrow inside arrows_between(src, dst); the basis index
  /// of the corresponding hom coordinate in the free enrichment.
  int index_in_hom(int arrow) const;

  /// Category axioms: composition closed and total, identities neutral,
  /// associativity. Returns a description of the first violation.
  std::optional<std::string> validate() const;

  /// Filteredness of a finite category. Returns the violated axiom
  /// ("nonempty", "upper bounds", "coequalizing arrows") or nothing.
  std::optional<std::string> filtered_violation() const;

  /// The same category with all arrows reversed.
  OrdCategory reversed() const;

  static OrdCategory terminal();
  /// Free category on arrows a0 → a1 → ... (a chain poset).
  static OrdCategory chain_poset(int n);
  /// Two objects a, b with two parallel arrows a ⇉ b (not filtered).
  static OrdCategory parallel_pair();
  /// One object with a single non-identity idempotent e, e∘e = e
  /// (filtered, no terminal object).
  static OrdCategory split_idempotent();
  /// The poset category of a commutative square.
  static OrdCategory square_poset();
  /// Span b ← a → c.
  static OrdCategory span();
};

}  // namespace fpcat
