#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "gcg/graph.hpp"

namespace gcg {

using BigInt = boost::multiprecision::cpp_int;

// A monic polynomial with exact integer coefficients; coeffs[i] multiplies
// x^i and coeffs.back() == 1.
struct IntegerPoly {
    std::vector<BigInt> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt at(const BigInt& x) const;   // Horner evaluation
    std::string to_string() const;      // e.g. "x^4 - 2x^2 + 3"
    bool operator==(const IntegerPoly& o) const { return coeffs == o.coeffs; }
};

// Characteristic polynomial det(xI - A) of the adjacency matrix, computed
// exactly from the trace power sums p_k = tr(A^k) via the Newton recurrence
// k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.  Guard: n <= 64
// (SizeLimitExceeded).
IntegerPoly char_poly(const SimpleGraph& x);

// Independent oracle: det(kI - A) by cofactor expansion.  Guard: n <= 10.
BigInt char_poly_at(const SimpleGraph& x, long long k);

struct SpectrumVerdict {
    bool integral;
    // All integer roots with multiplicity, descending; the full spectrum
    // exactly when integral.
    std::vector<long long> roots;
    // The non-linear factor left after deflation (degree >= 2 when not
    // integral, the constant 1 otherwise).
    IntegerPoly remainder;
};

// Decides integrality by deflating integer roots out of char_poly(x).
// Candidate roots are the integers in [-d, d] for d = max degree, which
// bounds every adjacency eigenvalue.
SpectrumVerdict integral_spectrum(const SimpleGraph& x);

}  // namespace gcg
