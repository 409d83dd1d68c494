#pragma once

namespace greenwalk {

// Legendre complete elliptic integral of the first kind,
// K(k) = int_0^{pi/2} dphi / sqrt(1 - k^2 sin^2 phi), 0 <= k < 1,
// via the arithmetic-geometric mean.
double ellint_K(double k);

// Legendre complete elliptic integral of the third kind with the unsquared
// characteristic convention,
// Pi(n, k) = int_0^{pi/2} dphi / ((1 - n sin^2 phi) sqrt(1 - k^2 sin^2 phi)),
// n < 1, 0 <= k < 1, via Carlson symmetric forms.
double ellint_Pi(double nchar, double k);

// Carlson symmetric integrals (exposed for tests).
double carlson_rf(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rj(double x, double y, double z, double p);

// Auxiliary radicals of the all-index-two closed form. The stable products
// w3*w4 = (N^2 z^2)^2 and w5*w6 = ((N-1) z^2)^2 are used to avoid
// cancellation in w3 and w5 near z = 0.
struct EllipticAux {
    int N = 0;
    double z = 0.0;
    double w3 = 0.0, w4 = 0.0, w5 = 0.0, w6 = 0.0;
};

EllipticAux elliptic_aux(int N, double z);

// Green function of the walk on the two-factor all-index-two product,
// evaluated from its closed form; 0 <= z < 1.
double green22_eval(double z);

// Green function of the N-factor all-index-two product from the closed form
// with first- and third-kind elliptic integrals. Small z falls back to the
// 60-term series (the Pi-difference is a 0/0 limit as z -> 0).
double green2n2_eval(int N, double z);

} // namespace greenwalk
