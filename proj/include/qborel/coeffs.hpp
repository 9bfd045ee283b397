#pragma once

// Exact coefficient arithmetic: rationals and the rational function field Q(q).

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qborel {

using Rat = mpq_class;

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& lead() const { return coeffs_.back(); }
    const Rat& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    /// Number of vanishing low-order coefficients (0 for the zero polynomial).
    int low_order() const;

    Poly shifted(int k) const;   // multiply by q^k, k >= 0
    Poly unshifted(int k) const; // divide by q^k, requires low_order() >= k
    Poly monic() const;
    Poly scaled(const Rat& c) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    /// Quotient and remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
    /// Monic gcd (zero if both inputs are zero).
    static Poly gcd(Poly a, Poly b);
    static Poly exact_div(const Poly& a, const Poly& b);

    Rat evaluate(const Rat& x) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

/// Element of Q(q) in canonical form q^e * N(q) / D(q) with N(0) != 0,
/// D(0) != 0, D monic and gcd(N, D) = 1. Zero is N = 0, e = 0, D = 1.
/// Canonical form makes equality structural.
class QRat {
public:
    QRat() : den_(Poly::constant(1)) {}
    QRat(long n); // NOLINT(google-explicit-constructor)
    QRat(const Rat& r); // NOLINT(google-explicit-constructor)

    static QRat q_power(int k);
    static QRat from_parts(const Poly& num, const Poly& den, int shift = 0);
    static QRat parse(std::string_view text);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.is_one(); }
    bool is_rational_constant() const;
    Rat rational_value() const; // requires is_rational_constant()

    int shift() const { return shift_; }
    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    QRat inverse() const;
    QRat pow(int k) const;
    Rat evaluate(const Rat& q) const;
    std::string str() const;

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat operator-() const;
    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }

    friend bool operator==(const QRat&, const QRat&) = default;

private:
    void canonicalize();

    int shift_ = 0;
    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const QRat& x);

/// Balanced q-integer [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
QRat q_integer(int n, int d = 1);
QRat q_factorial(int n, int d = 1);
QRat q_binomial(int m, int k, int d = 1);

} // namespace qborel
