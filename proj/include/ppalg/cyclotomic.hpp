#pragma once

#include <string>
#include <vector>

#include "ppalg/rational.hpp"

namespace ppalg {

// Element of the cyclotomic field Q(zeta_m), stored on the power basis
// 1, zeta, ..., zeta^(phi(m)-1) of Q[x]/Phi_m(x).  The conductor m is part
// of the value; mixed-conductor arithmetic promotes both operands into
// Q(zeta_lcm) first.  No attempt is made to detect that a value happens to
// lie in a smaller field: conductors only ever grow.
class Cyclotomic {
public:
    Cyclotomic() : m_(1), coeffs_(1) {}
    Cyclotomic(const Rational& r) : m_(1), coeffs_{r} {}
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

    // zeta_m^k, any integer k (reduced mod m).
    static Cyclotomic zeta_power(int m, long k);
    static Cyclotomic zeta(int m) { return zeta_power(m, 1); }

    // Builds from explicit power-basis coefficients; size must be phi(m).
    static Cyclotomic from_coeffs(int m, std::vector<Rational> coeffs);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws not_rational when coefficients outside the rational line remain.
    Rational to_rational() const;

    // Image under the embedding Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^(M/m).
    // Requires m | M.
    Cyclotomic promoted(int target_conductor) const;

    // Complex conjugation, zeta -> zeta^(m-1).
    Cyclotomic conj() const;

    Cyclotomic pow(unsigned long e) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Human-readable form like "1/2 - 1/2*z12^2" (z = zeta_conductor).
    std::string str() const;

private:
    int m_;
    std::vector<Rational> coeffs_; // size phi(m_)
};

// phi(m), Euler's totient.
int euler_phi(int m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree.
std::vector<mpz_class> cyclotomic_polynomial(int m);

} // namespace ppalg
