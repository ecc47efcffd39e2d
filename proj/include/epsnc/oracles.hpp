#pragma once

// Reference formulas for the two endpoint cases (all partitions, noncrossing
// partitions). Nothing here touches decorations or ε-matrices, so these serve
// as cross-checks on the ε machinery.

#include <gmpxx.h>

#include <span>
#include <vector>

#include "epsnc/rational.hpp"

namespace epsnc::oracles {

/// Bell numbers via the Bell triangle.
mpz_class bell_number(int n);
/// Catalan numbers via C_{k+1} = Σ C_i C_{k-i}.
mpz_class catalan_number(int n);

/// Classical cumulants from moments m_1..m_N (moments[k-1] = m_k), by Möbius
/// inversion over all set partitions: κ_n = Σ_π (-1)^{|π|-1} (|π|-1)! Π m_{|B|}.
std::vector<Rational> classical_cumulants(std::span<const Rational> moments);

/// Free cumulants from moments m_1..m_N using the functional relation
/// m_n = Σ_{s=1}^{n} κ_s [z^{n-s}] M(z)^s with M(z) = 1 + Σ m_k z^k.
std::vector<Rational> free_cumulants(std::span<const Rational> moments);

/// m_n = Σ_{k=1}^{n} C(n-1, k-1) κ_k m_{n-k}.
std::vector<Rational> classical_moments(std::span<const Rational> cumulants);

/// Inverse of free_cumulants.
std::vector<Rational> free_moments(std::span<const Rational> cumulants);

}  // namespace epsnc::oracles
