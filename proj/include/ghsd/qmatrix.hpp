#pragma once

#include "ghsd/rational.hpp"

#include <optional>
#include <vector>

namespace ghsd {

// Dense matrix over Q. Small sizes only; everything is exact.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Q(0)) {}

    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Q& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Q& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Q& s) const;
    QMatrix& operator+=(const QMatrix& o);

    QMatrix transpose() const;

    friend QMatrix operator*(const Q& s, const QMatrix& m) { return m * s; }

private:
    int rows_, cols_;
    std::vector<Q> a_;
};

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(QMatrix& m);

int rank(const QMatrix& m);

// Solution of x * A = b for a row vector x is handled by callers via transpose.
// solve_linear solves A x = b (column convention). Returns particular solution
// with all free variables zero, plus a nullspace basis, or nullopt if inconsistent.
struct LinearSolution {
    std::vector<Q> particular;
    std::vector<std::vector<Q>> nullspace;
};
std::optional<LinearSolution> solve_linear(const QMatrix& A, const std::vector<Q>& b);

// Left kernel basis: rows y with y A = 0.
std::vector<std::vector<Q>> left_kernel(const QMatrix& A);

// Exact inverse; throws AnalysisError if singular.
QMatrix inverse(const QMatrix& m);

}  // namespace ghsd
