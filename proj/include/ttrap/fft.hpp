#ifndef TTRAP_FFT_HPP
#define TTRAP_FFT_HPP

#include <complex>
#include <stdexcept>
#include <vector>

namespace ttrap {

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 complex FFT with cached twiddles. Grids in this library
// are power-of-two by construction, so no mixed-radix machinery is needed.
// forward() leaves the result unscaled; inverse() applies the 1/n factor, so
// inverse(forward(x)) == x up to rounding.
class Fft {
public:
  explicit Fft(int n) : n_(n) {
    if (!is_power_of_two(n)) throw std::invalid_argument("Fft: size must be a power of two");
    bitrev_.resize(n_);
    int log2n = 0;
    while ((1 << log2n) < n_) ++log2n;
    for (int i = 0; i < n_; ++i) {
      int r = 0;
      for (int b = 0; b < log2n; ++b)
        if (i & (1 << b)) r |= 1 << (log2n - 1 - b);
      bitrev_[i] = r;
    }
    // twiddles for the largest stage; smaller stages stride through the table
    tw_.resize(n_ / 2);
    const double step = -2.0 * 3.141592653589793238462643383279502884 / n_;
    for (int k = 0; k < n_ / 2; ++k)
      tw_[k] = std::complex<double>(std::cos(step * k), std::sin(step * k));
  }

  int size() const { return n_; }

  void forward(std::complex<double>* x) const { transform(x, false); }

  void inverse(std::complex<double>* x) const {
    transform(x, true);
    const double s = 1.0 / n_;
    for (int i = 0; i < n_; ++i) x[i] *= s;
  }

private:
  void transform(std::complex<double>* x, bool conj_twiddles) const {
    for (int i = 0; i < n_; ++i) {
      const int j = bitrev_[i];
      if (j > i) std::swap(x[i], x[j]);
    }
    for (int len = 2; len <= n_; len <<= 1) {
      const int half = len >> 1;
      const int stride = n_ / len;
      for (int base = 0; base < n_; base += len) {
        for (int k = 0; k < half; ++k) {
          std::complex<double> w = tw_[k * stride];
          if (conj_twiddles) w = std::conj(w);
          const std::complex<double> t = w * x[base + k + half];
          const std::complex<double> u = x[base + k];
          x[base + k] = u + t;
          x[base + k + half] = u - t;
        }
      }
    }
  }

  int n_;
  std::vector<int> bitrev_;
  std::vector<std::complex<double>> tw_;
};

} // namespace ttrap

#endif
