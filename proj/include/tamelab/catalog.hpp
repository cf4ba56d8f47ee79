#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tamelab/int_matrix.hpp"

namespace tamelab {

struct CatalogEntry {
  std::string name;
  IntMatrix tau;
};

namespace blocks {

inline IntMatrix identity() { return IntMatrix{{1, 0}, {0, 1}}; }
inline IntMatrix minus_identity() { return IntMatrix{{-1, 0}, {0, -1}}; }
inline IntMatrix order3() { return IntMatrix{{0, -1}, {1, -1}}; }
inline IntMatrix order3_inv() { return IntMatrix{{-1, 1}, {-1, 0}}; }
inline IntMatrix order4() { return IntMatrix{{0, -1}, {1, 0}}; }
inline IntMatrix order4_inv() { return IntMatrix{{0, 1}, {-1, 0}}; }
inline IntMatrix order6() { return IntMatrix{{0, 1}, {-1, 1}}; }
inline IntMatrix order6_inv() { return IntMatrix{{1, -1}, {1, 0}}; }
inline IntMatrix unipotent(long m) { return IntMatrix{{1, m}, {0, 1}}; }
inline IntMatrix neg_unipotent(long m) { return IntMatrix{{-1, -m}, {0, -1}}; }

/// The finite-order representatives of SL_2(Z) up to conjugacy.
inline std::vector<CatalogEntry> finite_order() {
  return {{"I", identity()},          {"-I", minus_identity()}, {"r3", order3()}, {"r3^-1", order3_inv()},
          {"r4", order4()},           {"r4^-1", order4_inv()},  {"r6", order6()}, {"r6^-1", order6_inv()}};
}

inline std::vector<CatalogEntry> unipotents() {
  std::vector<CatalogEntry> out;
  for (long m : {1L, -1L, 2L, 3L, 5L}) out.push_back({"U" + std::to_string(m), unipotent(m)});
  for (long m : {1L, 2L}) out.push_back({"-U" + std::to_string(m), neg_unipotent(m)});
  return out;
}

}  // namespace blocks

/// Direct sum of 2x2 blocks in symplectic coordinates: block i acts on
/// the plane spanned by e_i and e_(d+i).
inline IntMatrix block_sum(const std::vector<IntMatrix>& parts) {
  const std::size_t d = parts.size();
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "block sum needs at least one block");
  IntMatrix out(2 * d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    const IntMatrix& b = parts[i];
    if (b.rows() != 2 || b.cols() != 2) throw Error(ErrorKind::InvalidArgument, "blocks must be 2x2");
    const std::size_t idx[2] = {i, d + i};
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) out(idx[r], idx[c]) = b(r, c);
    }
  }
  return out;
}

/// Levi element diag(P, P^-T) for P in GL_2(Z).
inline IntMatrix levi(const IntMatrix& p) {
  const IntMatrix pinv_t = inverse_unimodular(p).transpose();
  IntMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      out(i, j) = p(i, j);
      out(2 + i, 2 + j) = pinv_t(i, j);
    }
  }
  return out;
}

/// [[I, S], [0, I]] with S symmetric 2x2.
inline IntMatrix siegel_unipotent(long s11, long s12, long s22) {
  return IntMatrix{{1, 0, s11, s12}, {0, 1, s12, s22}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

/// 2x2 entries: finite-order classes plus unipotent primitives.
inline std::vector<CatalogEntry> catalog_d1() {
  auto out = blocks::finite_order();
  for (auto& e : blocks::unipotents()) out.push_back(std::move(e));
  return out;
}

/// 4x4 finite-order entries: block sums of 2x2 classes, Levi elements,
/// and elements whose characteristic polynomial is Phi_5, Phi_8, Phi_10 or
/// Phi_12. Every characteristic-polynomial type of finite order in Sp_4(Z)
/// is represented at least once.
inline std::vector<CatalogEntry> catalog_d2_finite() {
  std::vector<CatalogEntry> out;
  const auto fo = blocks::finite_order();
  for (std::size_t i = 0; i < fo.size(); ++i) {
    for (std::size_t j = i; j < fo.size(); ++j) {
      out.push_back({fo[i].name + "+" + fo[j].name, block_sum({fo[i].tau, fo[j].tau})});
    }
  }
  out.push_back({"levi(swap)", levi(IntMatrix{{0, 1}, {1, 0}})});
  out.push_back({"levi(-swap)", levi(IntMatrix{{0, -1}, {-1, 0}})});
  out.push_back({"levi(r3)", levi(blocks::order3())});
  out.push_back({"levi(r4)", levi(blocks::order4())});
  out.push_back({"levi(r6)", levi(blocks::order6())});
  out.push_back({"o5", IntMatrix{{0, 0, -1, 0}, {0, 0, -1, -1}, {1, -1, 0, 0}, {0, 1, -1, -1}}});
  out.push_back({"o8", IntMatrix{{0, -1, 0, 0}, {-1, 0, -1, 0}, {0, 2, 0, -1}, {0, 0, -1, 0}}});
  out.push_back({"o10", IntMatrix{{0, 1, 0, 0}, {0, 0, -1, 0}, {0, 1, 1, 1}, {1, -1, 0, 0}}});
  out.push_back({"o12", IntMatrix{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 1}, {-1, 0, 0, 0}}});
  return out;
}

/// 4x4 entries of infinite order: unipotent and mixed block sums, plus
/// Siegel unipotents.
inline std::vector<CatalogEntry> catalog_d2_infinite() {
  std::vector<CatalogEntry> out;
  const auto fo = blocks::finite_order();
  const auto un = blocks::unipotents();
  for (const auto& u : un) {
    for (const auto& f : fo) out.push_back({u.name + "+" + f.name, block_sum({u.tau, f.tau})});
  }
  for (const auto& u1 : {un[0], un[2], un[5]}) {
    for (const auto& u2 : {un[0], un[3], un[6]}) out.push_back({u1.name + "+" + u2.name, block_sum({u1.tau, u2.tau})});
  }
  out.push_back({"siegel(1,0,1)", siegel_unipotent(1, 0, 1)});
  out.push_back({"siegel(1,1,1)", siegel_unipotent(1, 1, 1)});
  out.push_back({"siegel(2,1,3)", siegel_unipotent(2, 1, 3)});
  out.push_back({"siegel(0,1,0)", siegel_unipotent(0, 1, 0)});
  return out;
}

/// Full catalog for d <= dmax (dmax in {1, 2}).
inline std::vector<CatalogEntry> catalog(std::size_t dmax = 2, bool finite_only = false) {
  std::vector<CatalogEntry> out;
  for (auto& e : finite_only ? blocks::finite_order() : catalog_d1()) out.push_back(std::move(e));
  if (dmax >= 2) {
    for (auto& e : catalog_d2_finite()) out.push_back(std::move(e));
    if (!finite_only) {
      for (auto& e : catalog_d2_infinite()) out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace tamelab
