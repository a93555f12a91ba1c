#pragma once

/** @file rational.hpp
 *  Exact rational scalars backed by boost::multiprecision.
 *
 *  Serialized as "p/q", or "p" when q = 1.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dcat {

class Rational {
public:
    using value_type = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        v_ = value_type(n, d);
    }
    explicit Rational(value_type v) : v_(std::move(v)) {}

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text) {
        auto bad = [&] { return std::invalid_argument("malformed rational \"" + std::string(text) + "\""); };
        auto is_int = [](std::string_view s) {
            if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        auto slash = text.find('/');
        std::string_view num = text.substr(0, slash);
        if (!is_int(num)) throw bad();
        using boost::multiprecision::cpp_int;
        cpp_int p(std::string(num.front() == '+' ? num.substr(1) : num));
        if (slash == std::string_view::npos) return Rational(value_type(p));
        std::string_view den = text.substr(slash + 1);
        if (!is_int(den) || den.front() == '-' || den.front() == '+') throw bad();
        cpp_int q{std::string(den)};
        if (q == 0) throw bad();
        return Rational(value_type(p, q));
    }

    [[nodiscard]] std::string str() const {
        auto n = boost::multiprecision::numerator(v_);
        auto d = boost::multiprecision::denominator(v_);
        if (d == 1) return n.str();
        return n.str() + "/" + d.str();
    }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] const value_type& value() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(value_type(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (b.v_ < a.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    value_type v_;
};

}  // namespace dcat
