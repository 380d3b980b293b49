#include "fareysum/fraction.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fareysum {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("fraction component exceeds 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

Fraction make(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    i128 a = num < 0 ? -num : num;
    i128 b = den;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Fraction(narrow(num), narrow(den));
}

}  // namespace

Fraction::Fraction(std::int64_t num) : num_(num), den_(1) {}

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) {
        throw std::domain_error("fraction with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::int64_t Fraction::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Fraction::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

Exact Fraction::to_exact() const {
    return exact_ratio(num_, den_);
}

std::string Fraction::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::parse(const std::string& text) {
    auto integer = [&](const std::string& part) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used == 0 || used != part.size()) {
            throw std::invalid_argument("not a fraction: '" + text + "'");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Fraction(integer(text));
    return Fraction(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Exact exact_ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("exact ratio with zero denominator");
    Exact x(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    x.canonicalize();
    return x;
}

std::string to_string(const Exact& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpz_class floor(const Exact& x) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

mpz_class ceil(const Exact& x) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

}  // namespace fareysum
