#include "ppalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace ppalg {

Rational::Rational(long num, long den) {
    if (den == 0) throw division_by_zero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    if (v_.get_den() == 0) throw division_by_zero();
    v_.canonicalize();
}

namespace {

bool valid_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::parse(const std::string& text) {
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw validation_error("malformed rational literal: \"" + text + "\"");
    // mpz_set_str rejects an explicit leading '+'.
    if (num.front() == '+') num.erase(0, 1);
    if (den.front() == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw division_by_zero("division by zero in rational literal \"" + text + "\"");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer()) throw validation_error("rational " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p())
        throw resource_limit("integer " + str() + " does not fit in a machine word");
    return v_.get_num().get_si();
}

Rational Rational::inverse() const {
    if (is_zero()) throw division_by_zero();
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw division_by_zero();
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ppalg
