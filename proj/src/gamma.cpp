#include "bbgkz/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bbgkz {

namespace {

// B_2, B_4, ..., B_20
constexpr double kBernoulli[] = {1.0 / 6,         -1.0 / 30,       1.0 / 42,  -1.0 / 30,
                                 5.0 / 66,        -691.0 / 2730,   7.0 / 6,   -3617.0 / 510,
                                 43867.0 / 798,   -174611.0 / 330};
constexpr double kShiftTarget = 20.0;

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

int shift_count(Complex z) { return z.real() >= kShiftTarget ? 0 : static_cast<int>(std::ceil(kShiftTarget - z.real())); }

} // namespace

Complex log_gamma(Complex z) {
  const int N = shift_count(z);
  Complex correction = 0;
  for (int k = 0; k < N; ++k) correction += std::log(z + double(k));
  Complex w = z + double(N);
  Complex s = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2 * std::numbers::pi);
  Complex wpow = w, w2 = w * w;
  for (int k = 1; k <= 10; ++k) {
    s += kBernoulli[k - 1] / (2.0 * k * (2 * k - 1) * wpow);
    wpow *= w2;
  }
  return s - correction;
}

Complex polygamma(int n, Complex z) {
  if (n < 0) throw std::invalid_argument("polygamma order must be nonnegative");
  const int N = shift_count(z);
  Complex w = z + double(N);
  Complex s;
  Complex correction = 0;
  if (n == 0) {
    for (int k = 0; k < N; ++k) correction += 1.0 / (z + double(k));
    s = std::log(w) - 0.5 / w;
    Complex w2 = w * w, wpow = w2;
    for (int k = 1; k <= 10; ++k) {
      s -= kBernoulli[k - 1] / (2.0 * k * wpow);
      wpow *= w2;
    }
    return s - correction;
  }
  const double sign = (n % 2 == 0) ? -1.0 : 1.0; // (-1)^{n+1}
  const double nf = factorial(n);
  for (int k = 0; k < N; ++k) correction += 1.0 / std::pow(z + double(k), n + 1);
  correction *= (n % 2 == 0 ? 1.0 : -1.0) * nf; // (-1)^n n!
  Complex wn = std::pow(w, n);
  s = factorial(n - 1) / wn + nf / (2.0 * wn * w);
  Complex w2 = w * w, wpow = wn * w2;
  for (int k = 1; k <= 10; ++k) {
    s += kBernoulli[k - 1] * std::exp(std::lgamma(2.0 * k + n) - std::lgamma(2.0 * k + 1)) / wpow;
    wpow *= w2;
  }
  return sign * s - correction;
}

std::vector<Complex> reciprocal_gamma_jet(Complex l, int order) {
  if (order < 1) throw std::invalid_argument("jet order must be positive");
  Complex z = l + 1.0;
  const int m0 = std::max(0, static_cast<int>(std::ceil(1.5 - z.real())));
  Complex w = z + double(m0);

  // 1/Gamma(w + eps) = exp(-log Gamma(w) - sum_{n>=1} psi^{(n-1)}(w) eps^n / n!)
  std::vector<Complex> g(order, 0.0);
  for (int n = 1; n < order; ++n) g[n] = -polygamma(n - 1, w) / factorial(n);
  std::vector<Complex> e(order, 0.0);
  e[0] = std::exp(-log_gamma(w));
  for (int n = 1; n < order; ++n) {
    Complex acc = 0;
    for (int k = 1; k <= n; ++k) acc += double(k) * g[k] * e[n - k];
    e[n] = acc / double(n);
  }

  // times prod_{j < m0} (z + j + eps)
  for (int j = 0; j < m0; ++j) {
    Complex a = z + double(j);
    for (int n = order - 1; n >= 0; --n) e[n] = a * e[n] + (n > 0 ? e[n - 1] : 0.0);
  }
  return e;
}

} // namespace bbgkz
