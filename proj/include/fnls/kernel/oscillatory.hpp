#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fnls {

// I_{n,N}(x, t) = N^d int psi(|xi|) e^{i(N(x - 2 pi n).xi - N^alpha t |xi|^alpha)} d xi
// over the box [-2, 2]^d, d in {1, 2}. abs_tol < 0 selects 1e-8 N^d.
std::complex<double> oscillatory_block(const std::vector<int>& n, int N, double alpha,
                                       const std::vector<double>& x, double t, double abs_tol = -1.0);

// u and its k-th derivative (u' when k = 1).
struct Phase {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

struct Weight {
  std::function<double(double)> value;
  std::function<double(double)> derivative;
};

struct VanDerCorputResult {
  double lhs = 0.0;
  double bound = 0.0;
  bool pass = false;
};

// |int_a^b e^{i lambda u} psi| against c_k lambda^{-1/k} (|psi(b)| + int |psi'|),
// c_1 = 3 and c_k = 12k otherwise. Requires u^(k) >= 1 on [a, b], and u'
// monotone when k = 1; both are checked by sampling.
VanDerCorputResult van_der_corput_check(const Phase& phase, int k, double lambda, double a, double b,
                                        const Weight& psi);

}  // namespace fnls
