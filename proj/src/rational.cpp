#include "msip/rational.hpp"

#include <sstream>

namespace msip {

Int int_pow(const Int& base, const Int& exp) {
    if (exp < 0) throw InputError("int_pow: negative exponent");
    Int result = 1;
    Int b = base;
    Int e = exp;
    while (e > 0) {
        if ((e & 1) != 0) result *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return result;
}

Rational::Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw InputError("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    Int g = int_gcd(int_abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw InputError("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Int Rational::floor() const {
    if (den_ == 1) return num_;
    Int q = num_ / den_;  // truncates toward zero
    if (num_ < 0) q -= 1;
    return q;
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += "/";
        s += den_.str();
    }
    return s;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        return Rational(std::move(n), std::move(d));
    } catch (const std::exception&) {
        throw InputError("Rational: cannot parse '" + text + "'");
    }
}

RatVec to_rational(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const Int& x : v) r.emplace_back(x);
    return r;
}

std::string str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string str(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

const char* to_string(StructureCode code) {
    switch (code) {
        case StructureCode::NonzeroOutsideBlock: return "nonzero-outside-block";
        case StructureCode::ColumnOverlap: return "column-overlap";
        case StructureCode::ColumnUncovered: return "column-uncovered";
        case StructureCode::NonLaminarRows: return "non-laminar-rows";
        case StructureCode::NoRoot: return "no-root";
        case StructureCode::UnsupportedShape: return "unsupported-shape";
    }
    return "unknown";
}

}  // namespace msip
