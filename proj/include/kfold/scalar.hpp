#ifndef KFOLD_SCALAR_HPP_
#define KFOLD_SCALAR_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "kfold/error.hpp"

namespace kfold {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                           boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_square_free(std::int64_t d) {
    if (d < 0) return false;
    if (d <= 1) return true;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

/// Exact element of Q or Q(sqrt(d)): value is rat + surd*sqrt(d).
///
/// Representation is canonical: d is square-free, and d collapses to 0
/// whenever the surd part vanishes (including d = 1, where sqrt(d) is
/// rational). Two equal values always have identical representations.
/// Values with distinct nonzero discriminants do not interoperate.
class Scalar {
  public:
    Scalar() : rat_(0), surd_(0), disc_(0) {}
    Scalar(int v) : rat_(v), surd_(0), disc_(0) {}          // NOLINT(runtime/explicit)
    Scalar(long v) : rat_(v), surd_(0), disc_(0) {}         // NOLINT(runtime/explicit)
    Scalar(long long v) : rat_(v), surd_(0), disc_(0) {}    // NOLINT(runtime/explicit)
    Scalar(const Int& v) : rat_(v), surd_(0), disc_(0) {}   // NOLINT(runtime/explicit)
    Scalar(const Rat& v) : rat_(v), surd_(0), disc_(0) {}   // NOLINT(runtime/explicit)
    Scalar(const Int& num, const Int& den) : rat_(num, den), surd_(0), disc_(0) {
        if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    }

    Scalar(const Rat& rat, const Rat& surd, std::int64_t disc) : rat_(rat), surd_(surd), disc_(disc) {
        if (disc < 0 || !is_square_free(disc))
            throw Error(ErrorCode::InvalidArgument,
                        "discriminant must be a square-free non-negative integer, got " + std::to_string(disc));
        normalize();
    }

    static Scalar sqrt_of(std::int64_t d) { return Scalar(Rat(0), Rat(1), d); }

    const Rat& rational_part() const { return rat_; }
    const Rat& surd_part() const { return surd_; }
    std::int64_t discriminant() const { return disc_; }

    bool is_rational() const { return surd_ == 0; }
    bool is_integer() const { return surd_ == 0 && rat_den(rat_) == 1; }
    bool is_zero() const { return rat_ == 0 && surd_ == 0; }

    /// Exact sign of rat + surd*sqrt(d), decided by comparing rat^2 with d*surd^2.
    int sign() const {
        const int sr = rat_.sign();
        const int ss = surd_.sign();
        if (ss == 0) return sr;
        if (sr == 0) return ss;
        if (sr == ss) return sr;
        // Opposite signs: |rat| vs |surd|*sqrt(d) decides.
        const Rat lhs = rat_ * rat_;
        const Rat rhs = surd_ * surd_ * disc_;
        if (lhs == rhs) return 0;  // unreachable for square-free d >= 2, kept for safety
        return (lhs > rhs) ? sr : ss;
    }

    Scalar operator-() const { return Scalar(unchecked{}, -rat_, -surd_, disc_); }

    Scalar& operator+=(const Scalar& o) {
        const std::int64_t d = common_disc(*this, o);
        rat_ += o.rat_;
        surd_ += o.surd_;
        disc_ = d;
        normalize();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += (-o); }

    Scalar& operator*=(const Scalar& o) {
        const std::int64_t d = common_disc(*this, o);
        const Rat a = rat_ * o.rat_ + rat_mul_disc(surd_ * o.surd_, d);
        const Rat b = rat_ * o.surd_ + surd_ * o.rat_;
        rat_ = a;
        surd_ = b;
        disc_ = d;
        normalize();
        return *this;
    }

    Scalar inverse() const {
        if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
        if (surd_ == 0) return Scalar(Rat(1) / rat_);
        // 1/(a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - d b^2); the norm is
        // nonzero since sqrt(d) is irrational for square-free d >= 2.
        const Rat norm = rat_ * rat_ - rat_mul_disc(surd_ * surd_, disc_);
        return Scalar(unchecked{}, rat_ / norm, -surd_ / norm, disc_);
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.rat_ == b.rat_ && a.surd_ == b.surd_ && a.disc_ == b.disc_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Largest integer n with n <= value. Exact; a double approximation only
    /// seeds the search and is then corrected by exact comparisons.
    Int floor() const {
        if (surd_ == 0) {
            Int q = rat_num(rat_) / rat_den(rat_);
            if (rat_ < 0 && q * rat_den(rat_) != rat_num(rat_)) --q;
            return q;
        }
        double approx = to_double();
        if (!std::isfinite(approx)) approx = 0.0;
        Int n = approx < 0 ? Int(approx) - 1 : Int(approx);
        while (*this < Scalar(n)) --n;
        while (*this >= Scalar(n + 1)) ++n;
        return n;
    }
    Int ceil() const { return -((-*this).floor()); }

    double to_double() const {
        double v = rat_.convert_to<double>();
        if (surd_ != 0) v += surd_.convert_to<double>() * std::sqrt(static_cast<double>(disc_));
        return v;
    }

    /// Canonical text form, e.g. "3/4", "-2", "sqrt(2)", "1/2-3/4*sqrt(5)".
    std::string str() const {
        if (surd_ == 0) return rat_str(rat_);
        std::string out;
        if (rat_ != 0) out += rat_str(rat_);
        if (surd_ > 0 && rat_ != 0) out += "+";
        if (surd_ < 0) out += "-";
        const Rat ab = surd_ < 0 ? Rat(-surd_) : surd_;
        if (ab != 1) out += rat_str(ab) + "*";
        out += "sqrt(" + std::to_string(disc_) + ")";
        return out;
    }

    /// Parses the grammar used by instance files:
    ///   scalar := rational | surd | rational ('+'|'-') surd
    ///   rational := ['-'] int ['/' int]
    ///   surd := [rational '*'] 'sqrt(' int ')'
    /// Whitespace is allowed between tokens.
    static Scalar parse(std::string_view text);

  private:
    struct unchecked {};
    Scalar(unchecked, const Rat& rat, const Rat& surd, std::int64_t disc)
        : rat_(rat), surd_(surd), disc_(disc) {}

    static Rat rat_mul_disc(const Rat& r, std::int64_t d) { return r * Rat(d); }

    static std::int64_t common_disc(const Scalar& a, const Scalar& b) {
        if (a.disc_ == b.disc_) return a.disc_;
        if (a.disc_ == 0) return b.disc_;
        if (b.disc_ == 0) return a.disc_;
        throw Error(ErrorCode::MixedDiscriminants,
                    "cannot combine sqrt(" + std::to_string(a.disc_) + ") with sqrt(" +
                        std::to_string(b.disc_) + ")");
    }

    static std::string rat_str(const Rat& r) {
        std::string s = rat_num(r).str();
        if (rat_den(r) != 1) s += "/" + rat_den(r).str();
        return s;
    }

    void normalize() {
        if (disc_ == 1) {
            rat_ += surd_;
            surd_ = 0;
        }
        if (surd_ == 0) disc_ = 0;
        if (disc_ == 0) surd_ = 0;
    }

    Rat rat_;
    Rat surd_;
    std::int64_t disc_;
};

inline int scalar_sign(const Scalar& s) { return s.sign(); }
inline bool is_rational(const Scalar& s) { return s.is_rational(); }

namespace detail {

struct ScalarLexer {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        size_t digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
            ++digits;
        }
        if (digits == 0)
            throw Error(ErrorCode::ParseError,
                        "expected integer at offset " + std::to_string(start) + " in '" +
                            std::string(text) + "'");
        return Int(std::string(text.substr(start, pos - start)));
    }
    Rat rational() {
        Int num = integer();
        if (accept('/')) {
            Int den = integer();
            if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
            return Rat(num, den);
        }
        return Rat(num);
    }
};

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
    detail::ScalarLexer lx{text};
    auto parse_surd_disc = [&lx]() -> std::int64_t {
        if (!lx.accept('(')) throw Error(ErrorCode::ParseError, "expected '(' after sqrt in '" + std::string(lx.text) + "'");
        Int d = lx.integer();
        if (!lx.accept(')')) throw Error(ErrorCode::ParseError, "expected ')' in '" + std::string(lx.text) + "'");
        if (d < 0 || d > Int(std::numeric_limits<std::int64_t>::max()))
            throw Error(ErrorCode::ParseError, "discriminant out of range in '" + std::string(lx.text) + "'");
        return d.convert_to<std::int64_t>();
    };

    Rat rat = 0, surd = 0;
    std::int64_t disc = 0;
    if (lx.accept_word("sqrt")) {
        disc = parse_surd_disc();
        surd = 1;
    } else {
        Rat first = lx.rational();
        if (lx.accept('*')) {
            if (!lx.accept_word("sqrt"))
                throw Error(ErrorCode::ParseError, "expected sqrt after '*' in '" + std::string(lx.text) + "'");
            disc = parse_surd_disc();
            surd = first;
        } else if (lx.peek() == '+' || lx.peek() == '-') {
            bool neg = lx.accept('-');
            if (!neg) lx.accept('+');
            rat = first;
            if (lx.accept_word("sqrt")) {
                surd = 1;
            } else {
                surd = lx.rational();
                if (surd < 0)
                    throw Error(ErrorCode::ParseError, "sign must precede the surd term in '" + std::string(lx.text) + "'");
                if (!lx.accept('*') || !lx.accept_word("sqrt"))
                    throw Error(ErrorCode::ParseError, "expected '*sqrt(d)' in '" + std::string(lx.text) + "'");
            }
            disc = parse_surd_disc();
            if (neg) surd = -surd;
        } else {
            rat = first;
        }
    }
    if (!lx.eof())
        throw Error(ErrorCode::ParseError, "trailing characters in scalar '" + std::string(lx.text) + "'");
    if (!is_square_free(disc))
        throw Error(ErrorCode::ParseError, "discriminant " + std::to_string(disc) + " is not square-free");
    return Scalar(rat, surd, disc);
}

}  // namespace kfold

#endif  // KFOLD_SCALAR_HPP_
