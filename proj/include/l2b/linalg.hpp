#pragma once

#include "l2b/rational.hpp"

#include <optional>
#include <vector>

namespace l2b {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

RatMat zero_matrix(int rows, int cols);
RatMat identity_matrix(int n);
RatMat transpose(const RatMat& a);
RatMat mat_mul(const RatMat& a, const RatMat& b);
RatVec mat_apply(const RatMat& a, const RatVec& v);

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& a);

/// Exact inverse; nullopt when singular.
std::optional<RatMat> invert(const RatMat& a);

/// Solves a x = b for square or rectangular a; nullopt when inconsistent.
/// Free variables, if any, are set to zero.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

/// Coordinates of target in the span of the given vectors; nullopt when outside.
std::optional<RatVec> coordinates_in_span(const std::vector<RatVec>& span, const RatVec& target);

/// Rank-3 tensor with flat storage.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int d0, int d1, int d2) : d_{d0, d1, d2}, v_(size_t(d0) * d1 * d2) {}
    Rational& at(int i, int j, int k) { return v_[(size_t(i) * d_[1] + j) * d_[2] + k]; }
    const Rational& at(int i, int j, int k) const { return v_[(size_t(i) * d_[1] + j) * d_[2] + k]; }
    int dim(int axis) const { return d_[axis]; }
    bool operator==(const Tensor3&) const = default;

private:
    int d_[3] = {0, 0, 0};
    std::vector<Rational> v_;
};

/// Rank-4 tensor with flat storage.
class Tensor4 {
public:
    Tensor4() = default;
    Tensor4(int d0, int d1, int d2, int d3)
        : d_{d0, d1, d2, d3}, v_(size_t(d0) * d1 * d2 * d3) {}
    Rational& at(int i, int j, int k, int l) {
        return v_[((size_t(i) * d_[1] + j) * d_[2] + k) * d_[3] + l];
    }
    const Rational& at(int i, int j, int k, int l) const {
        return v_[((size_t(i) * d_[1] + j) * d_[2] + k) * d_[3] + l];
    }
    int dim(int axis) const { return d_[axis]; }
    bool operator==(const Tensor4&) const = default;

private:
    int d_[4] = {0, 0, 0, 0};
    std::vector<Rational> v_;
};

} // namespace l2b
