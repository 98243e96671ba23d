#pragma once

namespace fnls {

// Smoothing exponent of the Strichartz estimate in L^{2p}_t L^inf_x:
// gamma_{alpha,p} for alpha > 1, ell_{alpha,p} = d - alpha/p for 0 < alpha < 1.
// p may be kInfinity.
double dispersion_exponents(double alpha, double p, int d);

// Slope of log(quotient) vs log N expected for annulus wavepackets.
double wavepacket_scaling_exponent(double alpha, double p, int d);

}  // namespace fnls
