#include "epsnc/oracles.hpp"

#include "epsnc/errors.hpp"
#include "epsnc/set_partition.hpp"

namespace epsnc::oracles {

mpz_class bell_number(int n) {
  if (n < 0) throw InvalidArgument("negative Bell index");
  std::vector<mpz_class> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

mpz_class catalan_number(int n) {
  if (n < 0) throw InvalidArgument("negative Catalan index");
  std::vector<mpz_class> c{1};
  for (int k = 0; k < n; ++k) {
    mpz_class next = 0;
    for (int i = 0; i <= k; ++i) next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - i)];
    c.push_back(next);
  }
  return c.back();
}

namespace {

mpz_class factorial(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Truncated power-series product, coefficients 0..degree.
std::vector<Rational> series_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, int degree) {
  std::vector<Rational> out(static_cast<std::size_t>(degree + 1), Rational(0));
  for (int i = 0; i <= degree && i < static_cast<int>(a.size()); ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= degree && j < static_cast<int>(b.size()); ++j) {
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

// [z^{n-s}] M(z)^s for s = 1..n, with M built from m_0 = 1, m_1..m_{n-1}.
std::vector<Rational> power_coefficients(const std::vector<Rational>& series, int n) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1), Rational(0));
  std::vector<Rational> power{Rational(1)};
  for (int s = 1; s <= n; ++s) {
    power = series_multiply(power, series, n);
    coeffs[static_cast<std::size_t>(s)] = power[static_cast<std::size_t>(n - s)];
  }
  return coeffs;
}

}  // namespace

std::vector<Rational> classical_cumulants(std::span<const Rational> moments) {
  const int size = static_cast<int>(moments.size());
  std::vector<Rational> out;
  for (int n = 1; n <= size; ++n) {
    Rational kappa(0);
    for (const auto& pi : enumerate_partitions(n, size)) {
      const int blocks = static_cast<int>(pi.block_count());
      Rational term(factorial(blocks - 1));
      if (blocks % 2 == 0) term = -term;
      for (Mask b : pi.masks()) term *= moments[static_cast<std::size_t>(std::popcount(b) - 1)];
      kappa += term;
    }
    out.push_back(kappa);
  }
  return out;
}

std::vector<Rational> free_cumulants(std::span<const Rational> moments) {
  const int size = static_cast<int>(moments.size());
  std::vector<Rational> out;
  for (int n = 1; n <= size; ++n) {
    std::vector<Rational> series{Rational(1)};
    for (int k = 1; k < n; ++k) series.push_back(moments[static_cast<std::size_t>(k - 1)]);
    const auto coeffs = power_coefficients(series, n);
    Rational kappa = moments[static_cast<std::size_t>(n - 1)];
    for (int s = 1; s < n; ++s) kappa -= out[static_cast<std::size_t>(s - 1)] * coeffs[static_cast<std::size_t>(s)];
    out.push_back(kappa);
  }
  return out;
}

std::vector<Rational> classical_moments(std::span<const Rational> cumulants) {
  const int size = static_cast<int>(cumulants.size());
  std::vector<Rational> m{Rational(1)};
  for (int n = 1; n <= size; ++n) {
    Rational total(0);
    for (int k = 1; k <= n; ++k) {
      total += Rational(binomial(n - 1, k - 1)) * cumulants[static_cast<std::size_t>(k - 1)] *
               m[static_cast<std::size_t>(n - k)];
    }
    m.push_back(total);
  }
  return {m.begin() + 1, m.end()};
}

std::vector<Rational> free_moments(std::span<const Rational> cumulants) {
  const int size = static_cast<int>(cumulants.size());
  std::vector<Rational> series{Rational(1)};
  for (int n = 1; n <= size; ++n) {
    const auto coeffs = power_coefficients(series, n);
    Rational total(0);
    for (int s = 1; s <= n; ++s) total += cumulants[static_cast<std::size_t>(s - 1)] * coeffs[static_cast<std::size_t>(s)];
    series.push_back(total);
  }
  return {series.begin() + 1, series.end()};
}

}  // namespace epsnc::oracles
