#pragma once

#include "dstrat/bivar_poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dstrat {

// f(x, -y): the curve reflected in the real axis.
BivarPoly conj_transform(const BivarPoly& f);

struct InversionResult {
    BivarPoly poly;
    // Power of x^2+y^2 kept after clearing denominators: poly = rho^tau * f(x/rho, y/rho).
    int tau = 0;
};

// Numerator of f under (x, y) -> (x, y) / (x^2 + y^2), with every factor of
// x^2 + y^2 divided out. Requires a nonzero polynomial.
InversionResult inv_transform(const BivarPoly& f);

enum class CurveTransform { Conj, Inv, InvConj };

struct InvarianceResult {
    bool invariant = false;
    // transform(f) == scale * f when invariant.
    Rational scale = 0;
};

InvarianceResult is_invariant(const BivarPoly& f, CurveTransform t);

// Product of f with its images under the three nontrivial group elements,
// reduced by x^2 + y^2; invariant under both conj and inv with scale 1.
BivarPoly orbit_polynomial(const BivarPoly& f);

enum class StandardCurve { VerticalAxis, RealAxis, UnitCircle, NonStandard };

std::string to_string(StandardCurve c);

// Sign of a homogeneous form sampled over all directions.
enum class DirectionalSign { Positive, Negative, Zero, Changes };

std::string to_string(DirectionalSign s);

struct CurveClassification {
    StandardCurve label = StandardCurve::NonStandard;
    bool conj_invariant = false;
    bool inv_invariant = false;
    // Lowest-degree form near 0 and highest-degree form near infinity.
    DirectionalSign sign_near_zero = DirectionalSign::Zero;
    DirectionalSign sign_near_infinity = DirectionalSign::Zero;
    // 0 and infinity are not strictly on the same side of the curve.
    bool separates_zero_and_infinity = false;
    // Irreducibility over R is assumed, not checked.
    bool irreducibility_checked = false;
};

CurveClassification classify_standard(const BivarPoly& f);

// Coefficients of r^s, s = 0..deg f, of f(r cos phi, r sin phi).
std::vector<double> radial_coefficients(const BivarPoly& f, double phi);

enum class PalindromeKind { Palindromic, Antipalindromic, Neither };

std::string to_string(PalindromeKind k);

// Entries with |c| <= 1e-12 * max|c| are trimmed from both ends, then the list is
// compared with its reversal at relative tolerance 1e-9. Throws on an all-zero list.
PalindromeKind palindrome_test(const std::vector<double>& coeffs);

// sum_{i<=n/2} sum_{j<=i/2} a_ij x^(i-2j) rho^j (1 + rho^(n/2 - i)) for even n.
// Throws when n is odd, an index is out of range, the result is zero, or the
// result fails its own invariance check (which happens when rho divides it).
BivarPoly palindromic_family(const std::map<std::pair<int, int>, Rational>& a, int n);

}  // namespace dstrat
