#include "ppalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ppalg {

namespace {

constexpr int kMaxConductor = 4096;

// Dense integer polynomials, ascending degree, used only to build Phi_m.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact long division; requires b monic and b | a.
ZPoly divexact(ZPoly a, const ZPoly& b) {
    trim(a);
    if (a.empty()) return {};
    ZPoly q(a.size() - b.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        mpz_class c = a[i + b.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw error("internal: inexact polynomial division");
    return q;
}

std::mutex cache_mutex;

const ZPoly& cyclotomic_polynomial_locked(int m) {
    static std::map<int, ZPoly> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    ZPoly p(m + 1);
    p[0] = -1;
    p[m] = 1; // x^m - 1
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = divexact(std::move(p), cyclotomic_polynomial_locked(d));
    return cache.emplace(m, std::move(p)).first->second;
}

struct ConductorData {
    int phi;
    // rows[j - phi] = x^j reduced mod Phi_m, for phi <= j < rows_end.
    std::vector<std::vector<Rational>> rows;
    int rows_end;
};

const ConductorData& conductor_data(int m) {
    if (m < 1) throw validation_error("conductor must be positive");
    if (m > kMaxConductor) throw resource_limit("conductor " + std::to_string(m) + " too large");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::map<int, ConductorData> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    const ZPoly& phi_m = cyclotomic_polynomial_locked(m);
    ConductorData data;
    data.phi = static_cast<int>(phi_m.size()) - 1;
    data.rows_end = std::max(m, 2 * data.phi - 1);
    std::vector<Rational> prev(data.phi); // starts as x^(phi-1)
    if (data.phi >= 1) prev[data.phi - 1] = Rational(1);
    for (int j = data.phi; j < data.rows_end; ++j) {
        // next = x * prev mod Phi_m; Phi_m monic so x^phi = -(lower part).
        std::vector<Rational> next(data.phi);
        for (int k = 0; k + 1 < data.phi; ++k) next[k + 1] = prev[k];
        const Rational top = prev.empty() ? Rational(0) : prev[data.phi - 1];
        if (!top.is_zero())
            for (int k = 0; k < data.phi; ++k)
                next[k] -= top * Rational(mpz_class(phi_m[k]));
        data.rows.push_back(next);
        prev = std::move(next);
    }
    return cache.emplace(m, std::move(data)).first->second;
}

// Adds c * x^j (already reduced if j < phi) into acc over conductor m.
void add_power(std::vector<Rational>& acc, const ConductorData& cd, long j, const Rational& c) {
    if (c.is_zero()) return;
    if (j < cd.phi) {
        acc[j] += c;
        return;
    }
    const auto& row = cd.rows[j - cd.phi];
    for (int k = 0; k < cd.phi; ++k)
        if (!row[k].is_zero()) acc[k].add_mul(c, row[k]);
}

} // namespace

int euler_phi(int m) {
    return static_cast<int>(cyclotomic_polynomial(m).size()) - 1;
}

std::vector<mpz_class> cyclotomic_polynomial(int m) {
    if (m < 1) throw validation_error("conductor must be positive");
    if (m > kMaxConductor) throw resource_limit("conductor " + std::to_string(m) + " too large");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cyclotomic_polynomial_locked(m);
}

Cyclotomic Cyclotomic::zeta_power(int m, long k) {
    const ConductorData& cd = conductor_data(m);
    k %= m;
    if (k < 0) k += m;
    std::vector<Rational> coeffs(cd.phi);
    add_power(coeffs, cd, k, Rational(1));
    Cyclotomic z;
    z.m_ = m;
    z.coeffs_ = std::move(coeffs);
    return z;
}

Cyclotomic Cyclotomic::from_coeffs(int m, std::vector<Rational> coeffs) {
    const ConductorData& cd = conductor_data(m);
    if (static_cast<int>(coeffs.size()) != cd.phi)
        throw validation_error("cyclotomic coefficient vector has wrong length for conductor " +
                               std::to_string(m));
    Cyclotomic z;
    z.m_ = m;
    z.coeffs_ = std::move(coeffs);
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational())
        throw not_rational("cyclotomic value " + str() + " is not rational");
    return coeffs_[0];
}

Cyclotomic Cyclotomic::promoted(int target) const {
    if (target == m_) return *this;
    if (target % m_ != 0)
        throw validation_error("conductor " + std::to_string(m_) +
                               " does not divide promotion target " + std::to_string(target));
    const ConductorData& cd = conductor_data(target);
    const long step = target / m_;
    std::vector<Rational> coeffs(cd.phi);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        add_power(coeffs, cd, static_cast<long>(k) * step, coeffs_[k]);
    Cyclotomic z;
    z.m_ = target;
    z.coeffs_ = std::move(coeffs);
    return z;
}

Cyclotomic Cyclotomic::conj() const {
    const ConductorData& cd = conductor_data(m_);
    std::vector<Rational> coeffs(cd.phi);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        add_power(coeffs, cd, k == 0 ? 0 : m_ - static_cast<long>(k), coeffs_[k]);
    Cyclotomic z;
    z.m_ = m_;
    z.coeffs_ = std::move(coeffs);
    return z;
}

Cyclotomic Cyclotomic::pow(unsigned long e) const {
    Cyclotomic acc(Rational(1));
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (auto& c : z.coeffs_) c = -c;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    const int target = std::lcm(m_, o.m_);
    if (target != m_) *this = promoted(target);
    if (target != o.m_) return *this += o.promoted(target);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
    return *this += -o;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    const int target = std::lcm(m_, o.m_);
    if (target != m_) *this = promoted(target);
    if (target != o.m_) return *this *= o.promoted(target);
    const ConductorData& cd = conductor_data(m_);
    std::vector<Rational> conv(2 * cd.phi - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            conv[i + j].add_mul(coeffs_[i], o.coeffs_[j]);
    }
    std::vector<Rational> out(cd.phi);
    for (std::size_t j = 0; j < conv.size(); ++j)
        add_power(out, cd, static_cast<long>(j), conv[j]);
    coeffs_ = std::move(out);
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    const int target = std::lcm(a.m_, b.m_);
    if (target != a.m_) return a.promoted(target) == b;
    if (target != b.m_) return a == b.promoted(target);
    return a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational abs = c.sign() < 0 ? -c : c;
        if (k == 0) {
            os << abs.str();
        } else {
            if (!abs.is_one()) os << abs.str() << "*";
            os << "z" << m_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace ppalg
