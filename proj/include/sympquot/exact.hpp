#pragma once
// Exact scalar arithmetic: arbitrary-precision integers and rationals,
// Gaussian integers and Gaussian rationals, and the four-element ring
// Z[i]/2. No floating point is used anywhere in this project.
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sq {

using Int = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator. Wraps a canonical-form
// boost rational; construction normalizes the sign so the underlying
// type never sees a negative denominator.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int &n) : v_(n) {}
    Rational(Int num, Int den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = Backend(num, den);
    }

    Int numerator() const { return boost::multiprecision::numerator(v_); }
    Int denominator() const { return boost::multiprecision::denominator(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational operator+(const Rational &o) const { return Rational(Backend(v_ + o.v_)); }
    Rational operator-(const Rational &o) const { return Rational(Backend(v_ - o.v_)); }
    Rational operator*(const Rational &o) const { return Rational(Backend(v_ * o.v_)); }
    Rational operator/(const Rational &o) const {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(Backend(v_ / o.v_));
    }
    Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
    Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
    Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
    Rational &operator/=(const Rational &o) { *this = *this / o; return *this; }

    bool operator==(const Rational &o) const { return v_ == o.v_; }
    bool operator!=(const Rational &o) const { return v_ != o.v_; }
    bool operator<(const Rational &o) const { return v_ < o.v_; }
    bool operator<=(const Rational &o) const { return v_ <= o.v_; }
    bool operator>(const Rational &o) const { return v_ > o.v_; }
    bool operator>=(const Rational &o) const { return v_ >= o.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    std::string str() const {
        Int d = denominator();
        if (d == 1)
            return numerator().str();
        return numerator().str() + "/" + d.str();
    }

  private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : v_(std::move(v)) {}
    Backend v_;
};

// Gaussian integer a + bi with arbitrary-precision parts.
struct GaussInt {
    Int re;
    Int im;

    GaussInt() : re(0), im(0) {}
    GaussInt(int r) : re(r), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt unit_i() { return GaussInt(Int(0), Int(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussInt conj() const { return GaussInt(re, -im); }
    // norm(a+bi) = a^2 + b^2, always non-negative.
    Int norm() const { return re * re + im * im; }

    GaussInt operator-() const { return GaussInt(-re, -im); }
    GaussInt operator+(const GaussInt &o) const { return GaussInt(re + o.re, im + o.im); }
    GaussInt operator-(const GaussInt &o) const { return GaussInt(re - o.re, im - o.im); }
    GaussInt operator*(const GaussInt &o) const {
        return GaussInt(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    bool operator==(const GaussInt &o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussInt &o) const { return !(*this == o); }

    std::string str() const {
        if (im == 0)
            return re.str();
        std::string i_part = (im == 1) ? "i" : (im == -1 ? "-i" : im.str() + "i");
        if (re == 0)
            return i_part;
        return re.str() + (im > 0 ? "+" : "") + i_part;
    }
};

// Element of the field extension Q(i): a + bi with rational parts.
struct GaussRational {
    Rational re;
    Rational im;

    GaussRational() = default;
    GaussRational(int r) : re(r), im(0) {}
    GaussRational(Rational r) : re(std::move(r)), im(0) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussRational(const GaussInt &g) : re(g.re), im(g.im) {}

    static GaussRational unit_i() { return GaussRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussRational conj() const { return GaussRational(re, -im); }
    Rational norm() const { return re * re + im * im; }

    GaussRational operator-() const { return GaussRational(-re, -im); }
    GaussRational operator+(const GaussRational &o) const {
        return GaussRational(re + o.re, im + o.im);
    }
    GaussRational operator-(const GaussRational &o) const {
        return GaussRational(re - o.re, im - o.im);
    }
    GaussRational operator*(const GaussRational &o) const {
        return GaussRational(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRational inv() const {
        if (is_zero())
            throw std::domain_error("GaussRational: inverse of zero");
        Rational n = norm();
        return GaussRational(re / n, -im / n);
    }
    GaussRational operator/(const GaussRational &o) const { return *this * o.inv(); }
    GaussRational &operator+=(const GaussRational &o) { *this = *this + o; return *this; }
    GaussRational &operator-=(const GaussRational &o) { *this = *this - o; return *this; }
    GaussRational &operator*=(const GaussRational &o) { *this = *this * o; return *this; }

    bool operator==(const GaussRational &o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRational &o) const { return !(*this == o); }

    std::string str() const {
        if (im.is_zero())
            return re.str();
        std::string i_part;
        if (im == Rational(1))
            i_part = "i";
        else if (im == Rational(-1))
            i_part = "-i";
        else
            i_part = im.str() + "*i";
        if (re.is_zero())
            return i_part;
        return re.str() + (im.sign() > 0 ? "+" : "") + i_part;
    }
};

// Element of Z[i]/2 = {0, 1, i, 1+i}, stored as two bits. This ring is
// not a field: (1+i)^2 = 0, and the annihilator of (1+i) is {0, 1+i}.
struct Z2iElem {
    std::uint8_t one_bit;
    std::uint8_t i_bit;

    Z2iElem() : one_bit(0), i_bit(0) {}
    Z2iElem(int one_part, int i_part)
        : one_bit(static_cast<std::uint8_t>(one_part & 1)),
          i_bit(static_cast<std::uint8_t>(i_part & 1)) {}

    static Z2iElem from_gauss(const GaussInt &g) {
        return Z2iElem(g.re % 2 != 0 ? 1 : 0, g.im % 2 != 0 ? 1 : 0);
    }

    bool is_zero() const { return one_bit == 0 && i_bit == 0; }

    Z2iElem operator+(const Z2iElem &o) const {
        return Z2iElem(one_bit ^ o.one_bit, i_bit ^ o.i_bit);
    }
    // (a+bi)(c+di) with i^2 = -1 = 1 mod 2.
    Z2iElem operator*(const Z2iElem &o) const {
        return Z2iElem((one_bit & o.one_bit) ^ (i_bit & o.i_bit),
                       (one_bit & o.i_bit) ^ (i_bit & o.one_bit));
    }
    bool operator==(const Z2iElem &o) const {
        return one_bit == o.one_bit && i_bit == o.i_bit;
    }
    bool operator!=(const Z2iElem &o) const { return !(*this == o); }

    // True when (1+i) * this = 0, i.e. this is 0 or 1+i.
    bool annihilated_by_one_plus_i() const { return one_bit == i_bit; }

    std::string str() const {
        static const char *names[4] = {"0", "1", "i", "1+i"};
        return names[(i_bit << 1) | one_bit];
    }
};

} // namespace sq
