#include "qborel/coeffs.hpp"

#include "qborel/errors.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace qborel {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool Poly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

int Poly::low_order() const {
    int k = 0;
    while (k < static_cast<int>(coeffs_.size()) && sgn(coeffs_[static_cast<std::size_t>(k)]) == 0) ++k;
    return is_zero() ? 0 : k;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.assign(static_cast<std::size_t>(k), Rat(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

Poly Poly::unshifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

Poly Poly::monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(Rat(1) / lead());
}

Poly Poly::scaled(const Rat& c) const {
    if (sgn(c) == 0) return {};
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    const auto& big = a.coeffs_.size() >= b.coeffs_.size() ? a : b;
    const auto& small = a.coeffs_.size() >= b.coeffs_.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.coeffs_.size(); ++i) r.coeffs_[i] += small.coeffs_[i];
    r.trim();
    return r;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    rem = a;
    if (a.degree() < b.degree()) {
        quot = Poly();
        return;
    }
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rat inv_lead = Rat(1) / b.lead();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        Rat c = rem.lead() * inv_lead;
        q[static_cast<std::size_t>(shift)] = c;
        for (int i = 0; i <= b.degree(); ++i)
            rem.coeffs_[static_cast<std::size_t>(i + shift)] -= c * b.coeffs_[static_cast<std::size_t>(i)];
        rem.trim();
    }
    quot = Poly(std::move(q));
}

Poly Poly::gcd(Poly a, Poly b) {
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly quot, rem;
        divmod(a, b, quot, rem);
        a = std::move(b);
        b = rem.monic();
    }
    return a;
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly quot, rem;
    divmod(a, b, quot, rem);
    return quot;
}

Rat Poly::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// ---------------------------------------------------------------- QRat

QRat::QRat(long n) : num_(Poly::constant(Rat(n))), den_(Poly::constant(1)) {}

QRat::QRat(const Rat& r) : num_(Poly::constant(r)), den_(Poly::constant(1)) {}

QRat QRat::q_power(int k) {
    QRat r(1L);
    r.shift_ = k;
    return r;
}

QRat QRat::from_parts(const Poly& num, const Poly& den, int shift) {
    if (den.is_zero()) throw DivisionByZero("zero denominator");
    QRat r;
    r.shift_ = shift;
    r.num_ = num;
    r.den_ = den;
    r.canonicalize();
    return r;
}

void QRat::canonicalize() {
    if (num_.is_zero()) {
        shift_ = 0;
        den_ = Poly::constant(1);
        return;
    }
    const int ln = num_.low_order();
    const int ld = den_.low_order();
    num_ = num_.unshifted(ln);
    den_ = den_.unshifted(ld);
    shift_ += ln - ld;
    if (den_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Poly::exact_div(num_, g);
            den_ = Poly::exact_div(den_, g);
        }
    }
    if (den_.lead() != 1) {
        const Rat inv = Rat(1) / den_.lead();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool QRat::is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

bool QRat::is_rational_constant() const {
    return is_zero() || (shift_ == 0 && num_.degree() == 0 && den_.is_one());
}

Rat QRat::rational_value() const { return is_zero() ? Rat(0) : num_[0]; }

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int m = std::min(a.shift_, b.shift_);
    QRat r;
    r.shift_ = m;
    if (a.den_ == b.den_) {
        r.num_ = a.num_.shifted(a.shift_ - m) + b.num_.shifted(b.shift_ - m);
        r.den_ = a.den_;
    } else {
        r.num_ = (a.num_ * b.den_).shifted(a.shift_ - m) + (b.num_ * a.den_).shifted(b.shift_ - m);
        r.den_ = a.den_ * b.den_;
    }
    r.canonicalize();
    return r;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QRat r;
    r.shift_ = a.shift_ + b.shift_;
    if (a.den_.is_one() && b.den_.is_one()) {
        // Laurent fast path: constant terms multiply to a nonzero constant term.
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_;
        return r;
    }
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
    QRat r;
    r.shift_ = -shift_;
    r.num_ = den_;
    r.den_ = num_;
    const Rat inv = Rat(1) / r.den_.lead();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
    return r;
}

QRat operator/(const QRat& a, const QRat& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in Q(q)");
    return a * b.inverse();
}

QRat QRat::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QRat result(1L), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

Rat QRat::evaluate(const Rat& q) const {
    if (is_zero()) return 0;
    if (sgn(q) == 0) throw DivisionByZero("evaluation at q = 0");
    const Rat d = den_.evaluate(q);
    if (sgn(d) == 0) throw DivisionByZero("denominator vanishes at " + q.get_str());
    Rat p = 1;
    Rat base = shift_ >= 0 ? q : Rat(1) / q;
    for (int i = 0; i < std::abs(shift_); ++i) p *= base;
    return p * num_.evaluate(q) / d;
}

namespace {

std::string render_coeff(const Rat& c) { return c.get_str(); }

// Renders sum_i c_i q^(i + shift), highest exponent first.
std::string render_laurent(const Poly& p, int shift) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p[i];
        if (sgn(c) == 0) continue;
        const int e = i + shift;
        Rat mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << render_coeff(mag);
            continue;
        }
        if (mag != 1) os << render_coeff(mag) << '*';
        os << 'q';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    QRat parse_all() {
        QRat v = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    QRat expr() {
        QRat v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    QRat term() {
        QRat v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) v /= unary();
            else return v;
        }
    }
    QRat unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    QRat power() {
        QRat base = atom();
        if (eat('^')) {
            skip();
            bool neg = false;
            if (eat('-')) neg = true;
            else eat('+');
            skip();
            const long e = integer();
            base = base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }
    long integer() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer literal too long");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }
    QRat atom() {
        skip();
        if (eat('(')) {
            QRat v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('q')) return QRat::q_power(1);
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return QRat(Rat(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

QRat QRat::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string QRat::str() const {
    if (den_.is_one()) return render_laurent(num_, shift_);
    return "(" + render_laurent(num_, shift_) + ")/(" + render_laurent(den_, 0) + ")";
}

std::ostream& operator<<(std::ostream& os, const QRat& x) { return os << x.str(); }

// ---------------------------------------------------------------- q-calculus

QRat q_integer(int n, int d) {
    // sum_{k=0}^{n-1} q^{d(n-1-2k)}
    if (n <= 0) return {};
    std::vector<Rat> c(static_cast<std::size_t>(2 * d * (n - 1)) + 1);
    for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(2 * d * k)] = 1;
    return QRat::from_parts(Poly(std::move(c)), Poly::constant(1), -d * (n - 1));
}

QRat q_factorial(int n, int d) {
    QRat r(1L);
    for (int k = 2; k <= n; ++k) r *= q_integer(k, d);
    return r;
}

QRat q_binomial(int m, int k, int d) {
    if (k < 0 || k > m) return {};
    return q_factorial(m, d) / (q_factorial(k, d) * q_factorial(m - k, d));
}

} // namespace qborel
