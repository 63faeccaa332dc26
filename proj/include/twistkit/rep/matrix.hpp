#pragma once

// Small dense matrices over an exact field (Rational, RatFun) or over
// truncated series.

#include "twistkit/coeff/ratfun.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistkit {

inline bool value_is_zero(const Rational& x) { return x == 0; }
inline bool value_is_zero(const RatFun& x) { return x.is_zero(); }
inline bool value_is_zero(const TruncSeries& x) { return x.is_zero(); }
inline std::string value_string(const Rational& x) { return to_string(x); }
inline std::string value_string(const RatFun& x) { return x.to_string(); }
inline std::string value_string(const TruncSeries& x) { return x.to_string(); }

template <class T>
class Matrix {
public:
    Matrix(int rows, int cols, const T& zero = T()) : r_(rows), c_(cols), a_(static_cast<size_t>(rows * cols), zero) {}

    static Matrix identity(int n, const T& zero = T(), const T& one = T(1)) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }
    // unit matrix e_ij scaled by c
    static Matrix unit(int n, int i, int j, const T& c, const T& zero = T()) {
        Matrix m(n, n, zero);
        m(i, j) = c;
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows.at(0).size()), rows[0][0] - rows[0][0]);
        for (int i = 0; i < m.r_; ++i)
            for (int j = 0; j < m.c_; ++j) m(i, j) = rows[i].at(j);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i * c_ + j)]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i * c_ + j)]; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!value_is_zero(x)) return false;
        return true;
    }
    bool is_upper_triangular() const {
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < i; ++j)
                if (!value_is_zero((*this)(i, j))) return false;
        return true;
    }

    Matrix map(const std::function<T(const T&)>& f) const {
        Matrix m = *this;
        for (auto& x : m.a_) x = f(x);
        return m;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.same(b);
        for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] = a.a_[k] + b.a_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.same(b);
        for (size_t k = 0; k < a.a_.size(); ++k) a.a_[k] = a.a_[k] - b.a_[k];
        return a;
    }
    friend Matrix operator*(const T& c, Matrix a) {
        for (auto& x : a.a_) x = c * x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(a.r_, b.c_, a.a_.at(0) - a.a_.at(0));
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (value_is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j)
                    if (!value_is_zero(b(k, j))) m(i, j) = m(i, j) + x * b(k, j);
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    // Kronecker product; the first factor is the slow index.
    friend Matrix kron(const Matrix& a, const Matrix& b) {
        Matrix m(a.r_ * b.r_, a.c_ * b.c_, a.a_.at(0) - a.a_.at(0));
        for (int i = 0; i < a.r_; ++i)
            for (int j = 0; j < a.c_; ++j) {
                if (value_is_zero(a(i, j))) continue;
                for (int k = 0; k < b.r_; ++k)
                    for (int l = 0; l < b.c_; ++l) m(i * b.r_ + k, j * b.c_ + l) = a(i, j) * b(k, l);
            }
        return m;
    }

    // P M P^{-1} for the basis permutation e_k -> e_{perm[k]}.
    Matrix permute(const std::vector<int>& perm) const {
        Matrix m(r_, c_, a_.at(0) - a_.at(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(perm[i], perm[j]) = (*this)(i, j);
        return m;
    }

    // Gauss-Jordan; T must be a field.
    Matrix inverse() const {
        if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
        const T zero = a_.at(0) - a_.at(0);
        Matrix a = *this, inv = identity(r_, zero, T(1));
        for (int col = 0; col < r_; ++col) {
            int piv = -1;
            for (int i = col; i < r_; ++i)
                if (!value_is_zero(a(i, col))) {
                    piv = i;
                    break;
                }
            if (piv < 0) throw std::domain_error("singular matrix");
            if (piv != col)
                for (int j = 0; j < r_; ++j) {
                    std::swap(a(piv, j), a(col, j));
                    std::swap(inv(piv, j), inv(col, j));
                }
            T s = T(1) / a(col, col);
            for (int j = 0; j < r_; ++j) {
                a(col, j) = a(col, j) * s;
                inv(col, j) = inv(col, j) * s;
            }
            for (int i = 0; i < r_; ++i) {
                if (i == col || value_is_zero(a(i, col))) continue;
                T f = a(i, col);
                for (int j = 0; j < r_; ++j) {
                    a(i, j) = a(i, j) - f * a(col, j);
                    inv(i, j) = inv(i, j) - f * inv(col, j);
                }
            }
        }
        return inv;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (int i = 0; i < r_; ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int k = 0; k < c_; ++k) row.push_back(value_string((*this)(i, k)));
            j.push_back(row);
        }
        return j;
    }
    std::string to_string() const {
        std::vector<std::string> cells;
        size_t w = 1;
        for (const auto& x : a_) {
            cells.push_back(value_string(x));
            w = std::max(w, cells.back().size());
        }
        std::string out;
        for (int i = 0; i < r_; ++i) {
            out += "[ ";
            for (int j = 0; j < c_; ++j) {
                const std::string& s = cells[static_cast<size_t>(i * c_ + j)];
                out += s + std::string(w - s.size() + 2, ' ');
            }
            out += "]\n";
        }
        return out;
    }

private:
    void same(const Matrix& b) const {
        if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    int r_, c_;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using RepMatrix = Matrix<RatFun>;

// flip of two 2-dim tensor factors
inline const std::vector<int>& flip_perm4() {
    static const std::vector<int> p{0, 2, 1, 3};
    return p;
}

}  // namespace twistkit
