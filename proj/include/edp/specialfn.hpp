#ifndef EDP_SPECIALFN_HPP
#define EDP_SPECIALFN_HPP

#include <complex>
#include <vector>

#include "edp/errors.hpp"

// Jacobi and associated Laguerre polynomials with arbitrary complex
// parameters and complex arguments. Evaluation goes through explicit
// finite sums built from Pochhammer products, which stay well-defined
// at parameter combinations (e.g. a+b a negative integer) where the
// three-term recurrence coefficients become singular.

namespace edp::specialfn {

using Complex = std::complex<double>;

inline constexpr int kDegreeCap = 32;

// Rising factorial a (a+1) ... (a+k-1); 1 for k=0.
Complex pochhammer(Complex a, int k);

// Generalized binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k!.
Complex binomial(Complex x, int k);

// P_n^{(a,b)}(z) for complex a, b, z.
Complex jacobi_p(int n, Complex a, Complex b, Complex z);

// L_n^{alpha}(z) for complex alpha, z.
Complex laguerre_l(int n, Complex alpha, Complex z);

// d/dz P_n^{(a,b)}(z) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(z).
Complex jacobi_p_derivative(int n, Complex a, Complex b, Complex z);

// d/dz L_n^{alpha}(z) = -L_{n-1}^{alpha+1}(z).
Complex laguerre_l_derivative(int n, Complex alpha, Complex z);

enum class PolyKind { Jacobi, Laguerre };

// Unified derivative entry point: p1,p2 = (a,b) for Jacobi, p1 = alpha for
// Laguerre (p2 ignored).
Complex poly_derivative_value(PolyKind kind, int n, Complex p1, Complex p2, Complex z);

// Dense polynomial in one complex variable, coefficients in ascending power.
class ComplexPoly {
public:
    ComplexPoly() : coeffs_(1, Complex(0.0)) {}
    explicit ComplexPoly(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }

    Complex operator()(Complex z) const;
    ComplexPoly derivative() const;

private:
    std::vector<Complex> coeffs_;
};

// Monomial coefficients of P_n^{(a,b)} and L_n^{alpha}; these agree with the
// direct evaluators and feed closed-form integral oracles in the tests.
ComplexPoly jacobi_coefficients(int n, Complex a, Complex b);
ComplexPoly laguerre_coefficients(int n, Complex alpha);

} // namespace edp::specialfn

#endif
