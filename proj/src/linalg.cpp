#include "l2b/linalg.hpp"

#include <stdexcept>

namespace l2b {

RatMat zero_matrix(int rows, int cols) { return RatMat(rows, RatVec(cols)); }

RatMat identity_matrix(int n) {
    RatMat a = zero_matrix(n, n);
    for (int i = 0; i < n; ++i) a[i][i] = Rational(1);
    return a;
}

RatMat transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat r(a[0].size(), RatVec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    RatMat r = zero_matrix(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

RatVec mat_apply(const RatMat& a, const RatVec& v) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw std::invalid_argument("mat_apply: shape mismatch");
        for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    }
    return r;
}

std::vector<int> rref(RatMat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int r = row; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        Rational inv = a[row][col].inverse();
        for (int c = col; c < cols; ++c) a[row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<RatMat> invert(const RatMat& a) {
    int n = static_cast<int>(a.size());
    RatMat aug = zero_matrix(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n) throw std::invalid_argument("invert: not square");
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = Rational(1);
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    RatMat r = zero_matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i][j] = aug[i][n + j];
    return r;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    int rows = static_cast<int>(a.size());
    if (rows != static_cast<int>(b.size())) throw std::invalid_argument("solve: shape mismatch");
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    RatMat aug = zero_matrix(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    RatVec x(cols);
    int row = 0;
    for (int p : pivots) {
        if (p == cols) return std::nullopt;  // inconsistent: pivot in the constant column
        x[p] = aug[row][cols];
        ++row;
    }
    return x;
}

std::optional<RatVec> coordinates_in_span(const std::vector<RatVec>& span, const RatVec& target) {
    if (span.empty()) {
        for (const auto& t : target)
            if (!t.is_zero()) return std::nullopt;
        return RatVec{};
    }
    int dim = static_cast<int>(span[0].size());
    RatMat a = zero_matrix(dim, static_cast<int>(span.size()));
    for (size_t j = 0; j < span.size(); ++j) {
        if (static_cast<int>(span[j].size()) != dim)
            throw std::invalid_argument("coordinates_in_span: ragged span");
        for (int i = 0; i < dim; ++i) a[i][j] = span[j][i];
    }
    auto x = solve(a, target);
    if (!x) return std::nullopt;
    // solve() zeroes free variables; confirm the combination reproduces target exactly
    RatVec back(dim);
    for (size_t j = 0; j < span.size(); ++j)
        for (int i = 0; i < dim; ++i) back[i] += (*x)[j] * span[j][i];
    if (back != target) return std::nullopt;
    return x;
}

} // namespace l2b
