#ifndef EDP_MODEL_HPP
#define EDP_MODEL_HPP

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "edp/errors.hpp"

// The three complex, energy-dependent potential families: hyperbolic Scarf,
// trigonometric Scarf and a Morse-type well. Each carries a complex coupling
// B(E) whose form is one of the closed set below, plus symmetry checkers
// (PT, pseudo-hermiticity via imaginary shift, unbroken-PT coupling bound).

namespace edp::model {

using Complex = std::complex<double>;

enum class Family { HyperbolicScarf, TrigScarf, Morse };

std::string family_name(Family f);

// --------------------------------------------------------------------------
// B(E) parameterizations
// --------------------------------------------------------------------------

class EnergyDependence {
public:
    enum class Variant {
        ImaginaryLinear,           // B = i k E
        ImaginarySqrtShift,        // B = i b sqrt(E+1)
        AffinePlusImaginaryLinear, // B = 1 + i k E
        YekkenPower,               // B = i E^{nu/2} sqrt(gamma lambda)
        Custom
    };

    static EnergyDependence imaginary_linear(double k);
    static EnergyDependence imaginary_sqrt_shift(double b);
    static EnergyDependence affine_plus_imaginary_linear(double k);
    static EnergyDependence yekken_power(double gamma, double nu, double lambda);
    static EnergyDependence custom(std::function<Complex(double)> value,
                                   std::function<Complex(double)> derivative);

    Complex value(double E) const;
    Complex derivative(double E) const; // analytic dB/dE

    Variant variant() const { return variant_; }
    double param(const std::string& name) const; // k, b, gamma, nu, lambda

private:
    EnergyDependence() = default;
    Variant variant_ = Variant::Custom;
    double k_ = 0.0, b_ = 0.0, gamma_ = 0.0, nu_ = 0.0, lambda_ = 0.0;
    std::function<Complex(double)> fn_, dfn_;
};

// --------------------------------------------------------------------------
// Model specification and bound states
// --------------------------------------------------------------------------

struct Domain {
    double lo;
    double hi;
};

struct ModelSpec {
    Family family;
    double A;      // sqrt-energy scale; > 0 for any bound state
    double alpha;  // inverse length, > 0
    EnergyDependence B;
    Domain domain;      // derived from the family
    int level_cap = 32; // enumeration guard for families without a natural cap

    static ModelSpec hyperbolic_scarf(double A, double alpha, EnergyDependence B);
    static ModelSpec trig_scarf(double A, double alpha, EnergyDependence B, int level_cap = 32);
    static ModelSpec morse(double A, double alpha, EnergyDependence B);

    bool is_pt_family() const { return family != Family::Morse; }
};

enum class Inadmissible { None, LevelCap, TrigRealPartBound, MorsePositiveRealPart };

std::string inadmissible_name(Inadmissible r);

struct BoundState {
    int n;
    double energy;
    Complex b_at_energy; // B(E_n)
    bool admissible;
    Inadmissible reason; // None when admissible
};

struct SymmetryReport {
    bool pt_symmetric;
    double pt_error;
    bool pseudo_hermitian;
    std::vector<double> thetas;      // per admissible level (Morse)
    double pseudo_hermitian_error;   // max shift error over levels and grid
    std::vector<bool> unbroken_pt;   // per admissible level (PT hyperbolic)
};

// --------------------------------------------------------------------------
// Operations
// --------------------------------------------------------------------------

// Closed-form level energy: A^2-(A-alpha n)^2 (hyperbolic/Morse),
// -A^2+(A+alpha n)^2 (trig). Admissibility is a separate check.
double energy(const ModelSpec& spec, int n);

Complex potential(const ModelSpec& spec, double E, double x);
// Complex abscissae are only supported for the Morse family (the imaginary
// shift of the pseudo-hermiticity check).
Complex potential(const ModelSpec& spec, double E, Complex x);

// dV_E(x)/dE through the chain rule with the analytic dB/dE.
Complex dpotential_dE(const ModelSpec& spec, double E, double x);

// Level scan in ascending n including the first inadmissible levels with
// their reason tags; stops once the family's monotone constraint fails.
std::vector<BoundState> enumerate_levels(const ModelSpec& spec);
// The admissible subset of enumerate_levels.
std::vector<BoundState> admissible_levels(const ModelSpec& spec);

BoundState make_state(const ModelSpec& spec, int n);

Complex wavefunction(const ModelSpec& spec, const BoundState& state, double x);
Complex wavefunction(const ModelSpec& spec, const BoundState& state, Complex x);

// max over the grid of |conj(V_E(-x)) - V_E(x)|.
double pt_symmetry_error(const ModelSpec& spec, double E, std::span<const double> grid);

// theta = (2/alpha) arctan(Im B / Re B); requires Re B(E) != 0.
double pseudo_theta(const ModelSpec& spec, double E);

// max over the grid of |V_E(x + i theta) - conj(V_E(x))| (Morse only).
double pseudo_hermiticity_error(const ModelSpec& spec, double E, std::span<const double> grid);

// Signed margin |Im B(E_n)| - (A + alpha/2). The PT phase is broken exactly
// when the margin vanishes: the unbroken-PT inequality
//   |Im B| (2A + alpha) < (Im B)^2 + (A + alpha/2)^2
// rearranges to margin^2 > 0.
double pt_breaking_margin(const ModelSpec& spec, int n);

// True iff the inequality above holds strictly; requires Re B(E_n) = 0.
bool unbroken_pt_condition(const ModelSpec& spec, int n);

// Hyperbolic Scarf spec reproducing the sech^2 well with energy-dependent
// depth -lambda (1 + gamma E^nu): A = -alpha/2 + sqrt(alpha^2+4 lambda)/2,
// B(E) = i E^{nu/2} sqrt(gamma lambda).
ModelSpec yekken_spec(double lambda, double gamma, double nu, double alpha);

SymmetryReport symmetry_report(const ModelSpec& spec, std::span<const double> grid);

} // namespace edp::model

#endif
