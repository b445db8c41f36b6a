#include "fpcat/chain.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fpcat/cosmos_ops.hpp"

using namespace fpcat;

namespace {

// random complex with <= max_terms terms of dimension <= max_dim, built by
// rejection on d∘d = 0 via an upper-triangular-style construction
ChainComplex random_complex(std::mt19937_64& rng, const ChainCosmos& k, int max_terms, int max_dim) {
  int terms = 1 + static_cast<int>(rng() % max_terms);
  int lo = -static_cast<int>(rng() % 3);
  std::vector<int> dims;
  for (int i = 0; i < terms; ++i) dims.push_back(static_cast<int>(rng() % (max_dim + 1)));
  std::vector<FpMatrix> diffs;
  for (int i = 0; i + 1 < terms; ++i) diffs.emplace_back(k.modulus(), dims[i + 1], dims[i]);
  // only fill every second differential so squares vanish for free
  for (std::size_t i = 0; i < diffs.size(); i += 2)
    for (int r = 0; r < diffs[i].rows(); ++r)
      for (int c = 0; c < diffs[i].cols(); ++c)
        diffs[i].set(r, c, static_cast<std::int64_t>(rng() % k.modulus()));
  return ChainComplex(k.modulus(), lo, dims, diffs);
}

ChainMap random_chain_mor(std::mt19937_64& rng, const ChainCosmos& k, const ChainComplex& x,
                          const ChainComplex& y) {
  auto basis = k.hom_space_basis(x, y);
  auto f = k.zero_mor(x, y);
  for (const auto& b : basis) f = k.add(f, k.scale(b, static_cast<std::int64_t>(rng() % k.modulus())));
  return f;
}

}  // namespace

TEST_CASE("d∘d = 0 is enforced at construction") {
  auto bad = [] {
    return ChainComplex(2, 0, {1, 1, 1}, {FpMatrix::identity(2, 1), FpMatrix::identity(2, 1)});
  };
  CHECK_THROWS_AS(bad(), std::invalid_argument);
  auto good = [] {
    return ChainComplex(2, 0, {1, 1, 1}, {FpMatrix::identity(2, 1), FpMatrix(2, 1, 1)});
  };
  CHECK_NOTHROW(good());
}

TEST_CASE("sphere, disk, shift") {
  ChainCosmos k(2);
  auto s = k.sphere(1);
  CHECK(s.lo() == 0);
  CHECK(s.hi() == 0);
  CHECK(k.tensor(s, s) == s);  // S(I) is the unit

  auto d = k.disk(1);
  CHECK(d.lo() == -1);
  CHECK(d.hi() == 0);
  CHECK(d.diff_at(-1).is_identity());

  CHECK(k.shift(k.sphere(2), 0) == k.sphere(2));
  auto sh = k.shift(d, 1);
  CHECK(sh.lo() == -2);
  CHECK(sh.hi() == -1);
  ChainCosmos k3(3);
  auto d3 = k3.disk(2);
  auto sh3 = k3.shift(d3, 1);
  CHECK(sh3.diff_at(-2) == d3.diff_at(-1).scaled(2));  // odd shift flips the sign

  CHECK_THROWS_AS(k.shift(d, 20), cap_exceeded);
}

TEST_CASE("total tensor: unit laws and disk⊗disk over F_3") {
  ChainCosmos k(3);
  auto d = k.disk(1);
  auto dd = k.tensor(d, d);
  CHECK(dd.lo() == -2);
  CHECK(dd.hi() == 0);
  CHECK(dd.dim_at(-2) == 1);
  CHECK(dd.dim_at(-1) == 2);
  CHECK(dd.dim_at(0) == 1);
  // direct Koszul computation with summands ordered by first-factor degree:
  // x⊗dy lands in summand i=-1 with sign (-1)^{-1}, dx⊗y in summand i=0
  CHECK(dd.diff_at(-2) == FpMatrix::from_rows(3, 2, 1, {2, 1}));
  CHECK(dd.diff_at(-1) == FpMatrix::from_rows(3, 1, 2, {1, 1}));
  CHECK((dd.diff_at(-1) * dd.diff_at(-2)).is_zero());

  auto c = random_complex(*(new std::mt19937_64(3)), k, 3, 2);
  auto s = k.unit();
  CHECK(k.tensor(s, c) == c);
  CHECK(k.tensor(c, s) == c);
  CHECK(k.internal_hom(s, c) == c);
}

TEST_CASE("cap on degree window") {
  ChainCosmos k(2, -2, 2);
  auto d = k.disk(1);
  auto t = k.tensor(d, d);
  CHECK_THROWS_AS(k.tensor(t, t), cap_exceeded);
}

TEST_CASE("structural isomorphisms are chain isomorphisms; coherence on sampled complexes") {
  std::mt19937_64 rng(19);
  for (std::int64_t p : {2, 3}) {
    ChainCosmos k(p, -12, 12);
    for (int trial = 0; trial < 8; ++trial) {
      auto x = random_complex(rng, k, 3, 2);
      auto y = random_complex(rng, k, 3, 2);
      auto z = random_complex(rng, k, 2, 2);
      CHECK(k.is_iso(k.associator(x, y, z)).has_value());
      CHECK(k.is_iso(k.symmetry(x, y)).has_value());
      CHECK(k.compose(k.symmetry(y, x), k.symmetry(x, y)) == k.identity(k.tensor(x, y)));
      // triangle
      auto lhs = k.tensor_mor(k.right_unitor(x), k.identity(y));
      auto rhs = k.compose(k.tensor_mor(k.identity(x), k.left_unitor(y)),
                           k.associator(x, k.unit(), y));
      CHECK(lhs == rhs);
      // hexagon
      auto h1 = k.compose(k.associator(y, z, x),
                          k.compose(k.symmetry(x, k.tensor(y, z)), k.associator(x, y, z)));
      auto h2 = k.compose(k.tensor_mor(k.identity(y), k.symmetry(x, z)),
                          k.compose(k.associator(y, x, z),
                                    k.tensor_mor(k.symmetry(x, y), k.identity(z))));
      CHECK(h1 == h2);
      // pentagon on a fourth sampled complex
      auto w = random_complex(rng, k, 2, 1);
      auto p1 = k.compose(k.associator(w, x, k.tensor(y, z)), k.associator(k.tensor(w, x), y, z));
      auto p2 = k.compose(k.tensor_mor(k.identity(w), k.associator(x, y, z)),
                          k.compose(k.associator(w, k.tensor(x, y), z),
                                    k.tensor_mor(k.associator(w, x, y), k.identity(z))));
      CHECK(p1 == p2);
    }
  }
}

TEST_CASE("exhaustive small sweep over F_2: all complexes with 2 terms of dim <= 1") {
  ChainCosmos k(2, -8, 8);
  std::vector<ChainComplex> all;
  for (int d0 = 0; d0 <= 1; ++d0)
    for (int d1 = 0; d1 <= 1; ++d1)
      for (int e = 0; e <= (d0 * d1); ++e) {
        FpMatrix diff(2, d1, d0);
        if (e && d0 && d1) diff.set(0, 0, 1);
        all.push_back(ChainComplex(2, 0, {d0, d1}, {diff}));
      }
  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK(k.compose(k.symmetry(y, x), k.symmetry(x, y)) == k.identity(k.tensor(x, y)));
      for (const auto& z : all) {
        auto h1 = k.compose(k.associator(y, z, x),
                            k.compose(k.symmetry(x, k.tensor(y, z)), k.associator(x, y, z)));
        auto h2 = k.compose(k.tensor_mor(k.identity(y), k.symmetry(x, z)),
                            k.compose(k.associator(y, x, z),
                                      k.tensor_mor(k.symmetry(x, y), k.identity(z))));
        CHECK(h1 == h2);
      }
    }
}

TEST_CASE("total hom differential matches the bracket formula on elements") {
  // d(h) = d∘h − (−1)^n h∘d, verified by transporting basis elements
  std::mt19937_64 rng(29);
  ChainCosmos k(3, -12, 12);
  auto a = random_complex(rng, k, 3, 2);
  auto b = random_complex(rng, k, 3, 2);
  auto h = k.internal_hom(a, b);
  // elements of h at degree n are degreewise families {h_i : a^i → b^{i+n}}
  for (int n = h.lo(); n < h.hi(); ++n) {
    int dim = h.dim_at(n);
    for (int col = 0; col < dim; ++col) {
      FpMatrix v(3, dim, 1);
      v.set(col, 0, 1);
      FpMatrix dv = h.diff_at(n) * v;
      // unpack both v and dv into families and compare with the formula
      auto unpack = [&](const FpMatrix& vec, int deg) {
        std::map<int, FpMatrix> fam;
        int off = 0;
        for (int i = a.lo(); i <= a.hi(); ++i) {
          int w = a.dim_at(i) * b.dim_at(i + deg);
          if (w == 0) continue;
          FpMatrix m(3, b.dim_at(i + deg), a.dim_at(i));
          for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.set(r, c, vec(off + r * m.cols() + c, 0));
          fam[i] = m;
          off += w;
        }
        return fam;
      };
      auto hv = unpack(v, n), hdv = unpack(dv, n + 1);
      std::int64_t sign = (n % 2 == 0) ? 1 : 2;  // (−1)^n in F_3
      for (int i = a.lo(); i <= a.hi(); ++i) {
        if (a.dim_at(i) == 0 || b.dim_at(i + n + 1) == 0) continue;
        FpMatrix hi = hv.count(i) ? hv[i] : FpMatrix(3, b.dim_at(i + n), a.dim_at(i));
        FpMatrix hi1 = hv.count(i + 1) ? hv[i + 1] : FpMatrix(3, b.dim_at(i + 1 + n), a.dim_at(i + 1));
        FpMatrix expect = b.diff_at(i + n) * hi - (hi1 * a.diff_at(i)).scaled(sign);
        CHECK(hdv[i] == expect);
      }
    }
  }
}

TEST_CASE("curry/uncurry round trips over F_3") {
  std::mt19937_64 rng(31);
  ChainCosmos k(3, -12, 12);
  for (int trial = 0; trial < 12; ++trial) {
    auto x = random_complex(rng, k, 2, 2);
    auto y = random_complex(rng, k, 2, 2);
    auto z = random_complex(rng, k, 2, 2);
    auto f = random_chain_mor(rng, k, k.tensor(x, y), z);
    auto c = k.curry(f, x, y);
    CHECK(k.uncurry(c, y, z) == f);
    auto g = random_chain_mor(rng, k, x, k.internal_hom(y, z));
    CHECK(k.curry(k.uncurry(g, y, z), x, y) == g);
  }
}

TEST_CASE("equalizer and coequalizer with induced differentials") {
  std::mt19937_64 rng(37);
  for (std::int64_t p : {2, 3}) {
    ChainCosmos k(p, -12, 12);
    for (int trial = 0; trial < 10; ++trial) {
      auto x = random_complex(rng, k, 3, 2);
      auto y = random_complex(rng, k, 3, 2);
      auto f = random_chain_mor(rng, k, x, y);
      auto g = random_chain_mor(rng, k, x, y);
      auto e = k.equalizer(f, g);
      CHECK(k.compose(f, e.incl) == k.compose(g, e.incl));
      auto q = k.coequalizer(f, g);
      CHECK(k.compose(q.proj, f) == k.compose(q.proj, g));
      // universal property through the solves
      auto t = random_complex(rng, k, 2, 2);
      auto raw = random_chain_mor(rng, k, t, e.obj);
      auto u = factor_through_mono(k, e.incl, k.compose(e.incl, raw));
      REQUIRE(u.has_value());
      CHECK(*u == raw);
    }
  }
}

TEST_CASE("dual pairs: sphere, disks, shifts, and random complexes (p = 3 keeps signs honest)") {
  for (std::int64_t p : {2, 3}) {
    ChainCosmos k(p, -12, 12);
    CHECK(dual_pair_triangles_hold(k, k.dual_pair(k.unit())));
    for (int n = -1; n <= 1; ++n) {
      CHECK(dual_pair_triangles_hold(k, k.dual_pair(k.shift(k.disk(1), n))));
      CHECK(dual_pair_triangles_hold(k, k.dual_pair(k.shift(k.sphere(2), n))));
    }
    CHECK(dual_pair_triangles_hold(k, k.dual_pair(k.zero_object())));
    // rank-1 differential two-term complex
    ChainComplex c(p, 0, {2, 2}, {FpMatrix::from_rows(p, 2, 2, {1, 0, 0, 0})});
    CHECK(dual_pair_triangles_hold(k, k.dual_pair(c)));
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 6; ++trial)
      CHECK(dual_pair_triangles_hold(k, k.dual_pair(random_complex(rng, k, 3, 2))));
  }
}

TEST_CASE("hom space basis spans exactly the chain maps") {
  std::mt19937_64 rng(47);
  ChainCosmos k(2, -12, 12);
  auto x = k.disk(1);
  auto y = k.disk(1);
  auto basis = k.hom_space_basis(x, y);
  // chain maps disk → disk: f_0 = f_{-1}: one parameter
  CHECK(basis.size() == 1);
  auto s = k.sphere(1);
  // chain maps disk → sphere: f_0 arbitrary (no constraint from d since target flat)?
  // condition: f_0 ∘ d = 0, so f_0 = 0: no maps besides zero
  CHECK(k.hom_space_basis(x, s).empty());
  // sphere → disk: f_0 with d∘(nothing) ... f_0 : I → I arbitrary? need d_dst∘f_{-1} = f_0∘d_src:
  // src has no degree -1 term, so f_0 unconstrained
  CHECK(k.hom_space_basis(s, x).size() == 1);
  auto m = random_chain_mor(rng, k, x, y);
  CHECK(k.raw_coords(m).rows() == 2);
}

TEST_CASE("global elements are the degree-zero cocycles") {
  ChainCosmos k(2);
  auto d = k.disk(1);
  // Z^0(D) = ker(d^0 : I → 0) = I, two points over F_2... wait, D sits in degrees -1,0 so d^0 = 0
  auto els = k.global_elements(d, 100);
  CHECK(els.size() == 2);
  ChainComplex c(2, 0, {1, 1}, {FpMatrix::identity(2, 1)});  // disk in degrees 0,1
  CHECK(k.global_elements(c, 100).size() == 1);  // Z^0 = ker(id) = 0
}
