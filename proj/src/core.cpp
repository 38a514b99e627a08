#include "ghsd/multiindex.hpp"
#include "ghsd/qmatrix.hpp"
#include "ghsd/rational.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace ghsd {

Q parse_rational(const std::string& s) {
    auto fail = [&]() -> Q {
        throw ParseError("malformed rational: '" + s + "'");
    };
    if (s.empty()) return fail();
    size_t i = 0;
    if (s[0] == '-') i = 1;
    size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return fail();
    std::string num = s.substr(0, i);
    if (i == s.size()) return Q(Z(num));
    if (s[i] != '/') return fail();
    ++i;
    size_t den_begin = i;
    if (i >= s.size() || s[i] < '1' || s[i] > '9') return fail();
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i != s.size()) return fail();
    std::string den = s.substr(den_begin);
    return Q(Z(num), Z(den));
}

std::string format_rational(const Q& q) {
    Z n = boost::multiprecision::numerator(q);
    Z d = boost::multiprecision::denominator(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string format_double17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double to_double(const Q& q) {
    return q.convert_to<double>();
}

Q q_pow(const Q& base, long long e) {
    if (e < 0) {
        if (base == 0) throw AnalysisError("q_pow: zero base with negative exponent");
        return Q(1) / q_pow(base, -e);
    }
    Q r(1), b(base);
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Q factorial(long long n) {
    Z r(1);
    for (long long i = 2; i <= n; ++i) r *= i;
    return Q(r);
}

Q binomial(long long n, long long k) {
    if (k < 0 || k > n) return Q(0);
    Z r(1);
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return Q(r);
}

Q mi_factorial(const MIdx& mu) {
    Q r(1);
    for (int e : mu) r *= factorial(e);
    return r;
}

Q mi_binomial(const MIdx& mu, const MIdx& b) {
    Q r(1);
    for (size_t i = 0; i < mu.size(); ++i) {
        r *= binomial(mu[i], b[i]);
        if (r == 0) return r;
    }
    return r;
}

Q power(const std::vector<Q>& k, const MIdx& mu) {
    Q r(1);
    for (size_t i = 0; i < mu.size(); ++i) r *= q_pow(k[i], mu[i]);
    return r;
}

Q power(const Lat& k, const MIdx& mu) {
    Q r(1);
    for (size_t i = 0; i < mu.size(); ++i) r *= q_pow(Q(k[i]), mu[i]);
    return r;
}

namespace {

void gen_degree(int d, int k, MIdx& cur, int pos, std::vector<MIdx>& out) {
    if (pos == d - 1) {
        cur[pos] = k;
        out.push_back(cur);
        return;
    }
    for (int e = k; e >= 0; --e) {
        cur[pos] = e;
        gen_degree(d, k - e, cur, pos + 1, out);
    }
}

}  // namespace

std::vector<MIdx> multi_indices_of_degree(int d, int k) {
    std::vector<MIdx> out;
    MIdx cur(d, 0);
    gen_degree(d, k, cur, 0, out);
    return out;
}

std::vector<MIdx> multi_indices_up_to(int d, int order) {
    std::vector<MIdx> out;
    for (int k = 0; k <= order; ++k) {
        auto deg = multi_indices_of_degree(d, k);
        out.insert(out.end(), deg.begin(), deg.end());
    }
    return out;
}

std::vector<MIdx> multi_indices_below(const MIdx& mu) {
    std::vector<MIdx> out;
    for (const auto& b : multi_indices_up_to(int(mu.size()), mi_abs(mu)))
        if (mi_leq(b, mu)) out.push_back(b);
    return out;
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool QMatrix::is_zero() const {
    for (const Q& x : a_)
        if (x != 0) return false;
    return true;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw AnalysisError("QMatrix: dimension mismatch in product");
    QMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Q& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) m(i, j) += x * o(k, j);
        }
    return m;
}

QMatrix QMatrix::operator*(const Q& s) const {
    QMatrix m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

QMatrix QMatrix::transpose() const {
    QMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Q inv = Q(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Q f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const QMatrix& m) {
    QMatrix c = m;
    return int(rref(c).size());
}

std::optional<LinearSolution> solve_linear(const QMatrix& A, const std::vector<Q>& b) {
    QMatrix aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[size_t(i)];
    }
    std::vector<int> pivots = rref(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(size_t(A.cols()), Q(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr)
        sol.particular[size_t(pivots[pr])] = aug(int(pr), A.cols());
    std::vector<bool> is_pivot(size_t(A.cols()), false);
    for (int c : pivots) is_pivot[size_t(c)] = true;
    for (int free = 0; free < A.cols(); ++free) {
        if (is_pivot[size_t(free)]) continue;
        std::vector<Q> v(size_t(A.cols()), Q(0));
        v[size_t(free)] = 1;
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            v[size_t(pivots[pr])] = -aug(int(pr), free);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

std::vector<std::vector<Q>> left_kernel(const QMatrix& A) {
    QMatrix t = A.transpose();
    auto sol = solve_linear(t, std::vector<Q>(size_t(t.rows()), Q(0)));
    return sol->nullspace;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) throw AnalysisError("inverse: matrix not square");
    int n = m.rows();
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> pivots = rref(aug);
    if (int(pivots.size()) != n || pivots[size_t(n) - 1] != n - 1)
        throw AnalysisError("inverse: singular matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

}  // namespace ghsd
