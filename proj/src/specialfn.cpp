#include "edp/specialfn.hpp"

#include <cmath>
#include <string>

namespace edp::specialfn {

namespace {

void check_degree(int n) {
    if (n < 0)
        throw DomainError("polynomial degree must be nonnegative, got " + std::to_string(n));
    if (n > kDegreeCap)
        throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds cap " +
                                std::to_string(kDegreeCap));
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

Complex pochhammer(Complex a, int k) {
    Complex r(1.0);
    for (int i = 0; i < k; ++i) r *= a + static_cast<double>(i);
    return r;
}

Complex binomial(Complex x, int k) {
    return pochhammer(x - static_cast<double>(k - 1), k) / factorial(k);
}

// A&S 22.3.2: P_n^{(a,b)}(z) = 2^-n sum_m C(n+a,m) C(n+b,n-m) (z-1)^{n-m} (z+1)^m.
// Every factor is a polynomial in a and b, so the sum is total over C.
Complex jacobi_p(int n, Complex a, Complex b, Complex z) {
    check_degree(n);
    const Complex zm = z - 1.0;
    const Complex zp = z + 1.0;
    Complex sum(0.0);
    for (int m = 0; m <= n; ++m) {
        Complex term = binomial(a + static_cast<double>(n), m) *
                       binomial(b + static_cast<double>(n), n - m);
        for (int i = 0; i < n - m; ++i) term *= zm;
        for (int i = 0; i < m; ++i) term *= zp;
        sum += term;
    }
    return sum / std::pow(2.0, n);
}

// L_n^{alpha}(z) = sum_k (-1)^k C(n+alpha, n-k) z^k / k!.
Complex laguerre_l(int n, Complex alpha, Complex z) {
    check_degree(n);
    Complex sum(0.0);
    Complex zk(1.0);
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += sign * binomial(alpha + static_cast<double>(n), n - k) * zk / factorial(k);
        zk *= z;
        sign = -sign;
    }
    return sum;
}

Complex jacobi_p_derivative(int n, Complex a, Complex b, Complex z) {
    check_degree(n);
    if (n == 0) return Complex(0.0);
    return 0.5 * (static_cast<double>(n) + a + b + 1.0) * jacobi_p(n - 1, a + 1.0, b + 1.0, z);
}

Complex laguerre_l_derivative(int n, Complex alpha, Complex z) {
    check_degree(n);
    if (n == 0) return Complex(0.0);
    return -laguerre_l(n - 1, alpha + 1.0, z);
}

Complex poly_derivative_value(PolyKind kind, int n, Complex p1, Complex p2, Complex z) {
    switch (kind) {
        case PolyKind::Jacobi: return jacobi_p_derivative(n, p1, p2, z);
        case PolyKind::Laguerre: return laguerre_l_derivative(n, p1, z);
    }
    throw DomainError("unknown polynomial kind");
}

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw DomainError("ComplexPoly needs at least one coefficient");
    if (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0))
        throw DomainError("leading coefficient must be nonzero unless degree is 0");
}

Complex ComplexPoly::operator()(Complex z) const {
    Complex acc(0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() == 1) return ComplexPoly();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    while (d.size() > 1 && d.back() == Complex(0.0)) d.pop_back();
    return ComplexPoly(std::move(d));
}

namespace {

// Trim trailing zeros produced by exact cancellation so the leading
// coefficient invariant holds for degenerate parameter choices.
ComplexPoly make_poly(std::vector<Complex> c) {
    while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
    return ComplexPoly(std::move(c));
}

} // namespace

ComplexPoly jacobi_coefficients(int n, Complex a, Complex b) {
    check_degree(n);
    std::vector<Complex> acc(n + 1, Complex(0.0));
    const double inv2n = 1.0 / std::pow(2.0, n);
    for (int m = 0; m <= n; ++m) {
        const Complex cm = binomial(a + static_cast<double>(n), m) *
                           binomial(b + static_cast<double>(n), n - m) * inv2n;
        // expand (z-1)^{n-m} (z+1)^m
        std::vector<Complex> poly(1, cm);
        for (int i = 0; i < n - m; ++i) {
            std::vector<Complex> next(poly.size() + 1, Complex(0.0));
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= poly[j];
            }
            poly = std::move(next);
        }
        for (int i = 0; i < m; ++i) {
            std::vector<Complex> next(poly.size() + 1, Complex(0.0));
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] += poly[j];
            }
            poly = std::move(next);
        }
        for (size_t j = 0; j < poly.size(); ++j) acc[j] += poly[j];
    }
    return make_poly(std::move(acc));
}

ComplexPoly laguerre_coefficients(int n, Complex alpha) {
    check_degree(n);
    std::vector<Complex> c(n + 1);
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
        c[k] = sign * binomial(alpha + static_cast<double>(n), n - k) / factorial(k);
        sign = -sign;
    }
    return make_poly(std::move(c));
}

} // namespace edp::specialfn
