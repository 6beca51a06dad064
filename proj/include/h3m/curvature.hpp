#pragma once

// Curvature of left-invariant metrics, computed exactly from structure
// constants and a Gram matrix.  Conventions:
//   ∇_x y        = ½([x,y] - ad_x* y - ad_y* x),  ad_x* = G⁻¹ ad_xᵀ G
//   R(x,y)z      = ∇_x∇_y z - ∇_y∇_x z - ∇_[x,y] z
//   Ric(y,z)     = tr(x -> R(x,y)z)
//   scalar       = Σ G^{jk} Ric_jk

#include <cstddef>
#include <optional>
#include <vector>

#include "h3m/exact.hpp"
#include "h3m/lie_algebra.hpp"
#include "h3m/parallel.hpp"

namespace h3m {

struct ConnectionTable {
    std::size_t n = 0;
    std::vector<Vec> gamma;  // ∇_{e_i} e_j at i*n + j

    const Vec& at(std::size_t i, std::size_t j) const { return gamma[i * n + j]; }
};

// Throws PreconditionError for a degenerate Gram matrix.
ConnectionTable levi_civita(const LieAlgebra& alg, const Mat& gram);

struct RiemannTensor {
    std::size_t n = 0;
    std::vector<Vec> data;  // R(e_i, e_j) e_k at (i*n + j)*n + k

    const Vec& at(std::size_t i, std::size_t j, std::size_t k) const { return data[(i * n + j) * n + k]; }
};

RiemannTensor riemann(const ConnectionTable& conn, const LieAlgebra& alg, Exec exec = Exec::Parallel);
bool is_flat(const RiemannTensor& r);

struct RicciData {
    Mat ricci;      // symmetric bilinear form
    Mat op;         // G⁻¹ Ric
    Scalar scalar;
};

RicciData ricci(const RiemannTensor& r, const Mat& gram);

struct Soliton {
    Scalar c;
    Mat derivation;  // Ric_op - c·Id
    bool einstein = false;
};

// Solves Ric_op - c·Id ∈ Der(g).
std::optional<Soliton> soliton_check(const LieAlgebra& alg, const Mat& gram, const RicciData& ric);

struct CurvatureReport {
    ConnectionTable connection;
    RiemannTensor riemann;
    RicciData ricci;
    bool flat = false;
    std::optional<Soliton> soliton;
};

CurvatureReport curvature_report(const LieAlgebra& alg, const Mat& gram, Exec exec = Exec::Parallel);

bool is_metric_compatible(const ConnectionTable& conn, const Mat& gram);
bool is_torsion_free(const ConnectionTable& conn, const LieAlgebra& alg);
bool is_antisymmetric(const RiemannTensor& r);
bool satisfies_first_bianchi(const RiemannTensor& r);
bool has_pair_symmetry(const RiemannTensor& r, const Mat& gram);

} // namespace h3m
