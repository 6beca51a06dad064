#pragma once

#include <cstddef>
#include <vector>

#include "h3m/exact.hpp"

namespace h3m {

// Finite-dimensional real Lie algebra given by structure constants in a fixed
// basis e_1..e_n: bracket(i, j) = [e_i, e_j].
class LieAlgebra {
public:
    // `brackets` holds n*n vectors, row-major in (i, j).  Antisymmetry is checked.
    LieAlgebra(std::size_t n, std::vector<Vec> brackets);

    static LieAlgebra abelian(std::size_t n);

    std::size_t dim() const { return n_; }
    const Vec& bracket(std::size_t i, std::size_t j) const { return brackets_[i * n_ + j]; }
    Vec bracket(const Vec& x, const Vec& y) const;
    // Matrix of ad_x : y -> [x, y].
    Mat ad(const Vec& x) const;

    bool satisfies_jacobi() const;
    bool is_abelian() const;
    std::vector<Vec> center() const;
    std::vector<Vec> derived_ideal() const;

    // Basis of Der = {D | D[x,y] = [Dx,y] + [x,Dy]}.
    std::vector<Mat> derivations() const;
    bool is_derivation(const Mat& D) const;
    bool is_automorphism(const Mat& phi) const;

private:
    std::size_t n_;
    std::vector<Vec> brackets_;
};

} // namespace h3m
