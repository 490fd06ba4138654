#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace nokit {

// Prime field modulo 2^61 - 1.
struct Fp {
    static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
    std::uint64_t v = 0;

    Fp() = default;
    Fp(std::uint64_t x) : v(x % P) {}
    static Fp from_signed(long long x) {
        long long m = x % static_cast<long long>(P);
        if (m < 0) m += static_cast<long long>(P);
        return Fp(static_cast<std::uint64_t>(m));
    }
    static Fp from(const mpz_class& z) {
        return Fp(static_cast<std::uint64_t>(mpz_fdiv_ui(z.get_mpz_t(), P)));
    }
    static Fp from(const mpq_class& q) { return from(q.get_num()) / from(q.get_den()); }

    static std::uint64_t reduce(unsigned __int128 x) {
        std::uint64_t lo = static_cast<std::uint64_t>(x & P);
        std::uint64_t hi = static_cast<std::uint64_t>(x >> 61);
        std::uint64_t s = lo + hi;
        if (s >= P) s -= P;
        return s;
    }
    friend Fp operator+(Fp a, Fp b) {
        std::uint64_t s = a.v + b.v;
        if (s >= P) s -= P;
        Fp r;
        r.v = s;
        return r;
    }
    friend Fp operator-(Fp a, Fp b) {
        Fp r;
        r.v = a.v >= b.v ? a.v - b.v : a.v + P - b.v;
        return r;
    }
    Fp operator-() const { return Fp() - *this; }
    friend Fp operator*(Fp a, Fp b) {
        Fp r;
        r.v = reduce(static_cast<unsigned __int128>(a.v) * b.v);
        return r;
    }
    Fp pow(std::uint64_t e) const {
        Fp b = *this, r(1);
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    bool is_zero() const { return v == 0; }
    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(P - 2);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    bool operator==(const Fp&) const = default;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline Fp field_inv(const Fp& x) { return x.inv(); }
inline mpq_class field_inv(const mpq_class& x) {
    if (sgn(x) == 0) throw std::domain_error("division by zero");
    return 1 / x;
}

class FpRng {
public:
    explicit FpRng(std::uint64_t seed) : gen_(seed) {}
    Fp nonzero() {
        for (;;) {
            Fp x(gen_() % Fp::P);
            if (!x.is_zero()) return x;
        }
    }
    Fp any() { return Fp(gen_() % Fp::P); }
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Row echelon in place; returns rank.
template <class F>
int row_reduce(Matrix<F>& a, std::vector<int>* pivots = nullptr) {
    int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(a[i][c])) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        F inv = field_inv(a[r][c]);
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c])) continue;
            F f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return r;
}

template <class F>
int rank(Matrix<F> a) {
    return row_reduce(a);
}

template <class F>
F determinant(Matrix<F> a) {
    int n = static_cast<int>(a.size());
    F det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(a[i][c])) {
                p = i;
                break;
            }
        if (p < 0) return F(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            det = F(0) - det;
        }
        det = det * a[c][c];
        F inv = field_inv(a[c][c]);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(a[i][c])) continue;
            F f = a[i][c] * inv;
            for (int j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
        }
    }
    return det;
}

// Solves a x = b for square nonsingular a.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
    int n = static_cast<int>(a.size());
    Matrix<F> m(n, std::vector<F>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n] = b[i];
    }
    std::vector<int> piv;
    if (row_reduce(m, &piv) < n || piv.back() >= n) return std::nullopt;
    std::vector<F> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

// Maximal minor on the given (0-based) columns.
template <class F>
F minor(const Matrix<F>& a, const std::vector<int>& cols) {
    Matrix<F> m(a.size(), std::vector<F>(cols.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = a[i][cols[j]];
    return determinant(m);
}

}  // namespace nokit
