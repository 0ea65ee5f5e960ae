#include "gcg/spectrum.hpp"

#include <algorithm>

#include "gcg/errors.hpp"

namespace gcg {

namespace {

constexpr int kMaxCharPolyOrder = 64;
constexpr int kMaxCofactorOrder = 10;

// Trace power sums p_k = tr(A^k), k = 1..n, over int64 (entries of A^k are
// bounded by r^k for r = max row sum, and n * r^n fits below 2^62 when this
// path is chosen).
std::vector<BigInt> power_sums_int64(const SimpleGraph& x) {
    const int n = x.size();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0)), b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = x.adjacent(i, j) ? 1 : 0;
    b = a;
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < n; ++t) {
                    const long long bit = b[i][t];
                    if (!bit) continue;
                    for (int j = 0; j < n; ++j) c[i][j] += bit * a[t][j];
                }
            b = std::move(c);
        }
        long long tr = 0;
        for (int i = 0; i < n; ++i) tr += b[i][i];
        p[static_cast<std::size_t>(k)] = tr;
    }
    return p;
}

std::vector<BigInt> power_sums_bigint(const SimpleGraph& x) {
    const int n = x.size();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0)), b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = x.adjacent(i, j) ? 1 : 0;
    b = a;
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<std::vector<BigInt>> c(n, std::vector<BigInt>(n, 0));
            for (int i = 0; i < n; ++i)
                for (int t = 0; t < n; ++t) {
                    if (b[i][t] == 0) continue;
                    for (int j = 0; j < n; ++j) c[i][j] += b[i][t] * a[t][j];
                }
            b = std::move(c);
        }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += b[i][i];
        p[static_cast<std::size_t>(k)] = tr;
    }
    return p;
}

BigInt det_cofactor(std::vector<std::vector<BigInt>>& m, std::vector<int>& cols, int row) {
    const int n = static_cast<int>(m.size());
    const int width = static_cast<int>(cols.size());
    if (width == 1) return m[row][cols[0]];
    BigInt det = 0;
    for (int c = 0; c < width; ++c) {
        const BigInt pivot = m[row][cols[c]];
        if (pivot == 0) continue;
        const int removed = cols[c];
        cols.erase(cols.begin() + c);
        const BigInt sub = det_cofactor(m, cols, row + 1);
        cols.insert(cols.begin() + c, removed);
        if (c % 2 == 0) det += pivot * sub;
        else det -= pivot * sub;
    }
    (void)n;
    return det;
}

}  // namespace

BigInt IntegerPoly::at(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntegerPoly::to_string() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs[static_cast<std::size_t>(i)];
        if (c == 0 && degree() > 0) continue;
        const BigInt mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const bool show_coeff = (mag != 1) || i == 0;
        if (show_coeff) out += mag.str();
        if (i > 0) out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

IntegerPoly char_poly(const SimpleGraph& x) {
    const int n = x.size();
    if (n > kMaxCharPolyOrder)
        throw SizeLimitExceeded("characteristic polynomial supports up to " +
                                std::to_string(kMaxCharPolyOrder) + " vertices, got " +
                                std::to_string(n));
    if (n == 0) return IntegerPoly{{BigInt(1)}};

    int r = 0;
    for (int i = 0; i < n; ++i) r = std::max(r, x.degree(i));
    BigInt bound = n;
    for (int k = 0; k < n; ++k) bound *= std::max(r, 1);
    const std::vector<BigInt> p =
        bound < (BigInt(1) << 62) ? power_sums_int64(x) : power_sums_bigint(x);

    std::vector<BigInt> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        BigInt acc = 0;
        for (int i = 1; i <= k; ++i) {
            const BigInt term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            if (i % 2 == 1) acc += term;
            else acc -= term;
        }
        if (acc % k != 0) throw Error("Newton recurrence produced a non-integer coefficient");
        e[static_cast<std::size_t>(k)] = acc / k;
    }

    IntegerPoly poly;
    poly.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k <= n; ++k) {
        BigInt c = e[static_cast<std::size_t>(k)];
        if (k % 2 == 1) c = -c;
        poly.coeffs[static_cast<std::size_t>(n - k)] = c;
    }
    return poly;
}

BigInt char_poly_at(const SimpleGraph& x, long long k) {
    const int n = x.size();
    if (n > kMaxCofactorOrder)
        throw SizeLimitExceeded("the cofactor-expansion oracle supports up to " +
                                std::to_string(kMaxCofactorOrder) + " vertices, got " +
                                std::to_string(n));
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = BigInt((i == j ? k : 0) - (x.adjacent(i, j) ? 1 : 0));
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    return det_cofactor(m, cols, 0);
}

SpectrumVerdict integral_spectrum(const SimpleGraph& x) {
    IntegerPoly p = char_poly(x);
    const int d = x.max_degree();
    std::vector<long long> roots;
    for (long long k = d; k >= -d; --k) {
        while (p.degree() > 0) {
            // Synthetic division by (x - k); adopt the quotient on zero remainder.
            std::vector<BigInt> q(p.coeffs.size() - 1);
            BigInt carry = 0;
            for (int i = p.degree(); i >= 1; --i) {
                carry = carry * k + p.coeffs[static_cast<std::size_t>(i)];
                q[static_cast<std::size_t>(i - 1)] = carry;
            }
            if (carry * k + p.coeffs[0] != 0) break;
            p.coeffs = std::move(q);
            roots.push_back(k);
        }
    }
    return SpectrumVerdict{p.degree() == 0, std::move(roots), std::move(p)};
}

}  // namespace gcg
