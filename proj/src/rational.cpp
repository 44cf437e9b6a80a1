#include "hyperfrac/rational.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperfrac {

// ---------------------------------------------------------------------------
// BigInt
// ---------------------------------------------------------------------------

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) { sign_ = 0; return; }
    sign_ = v > 0 ? 1 : -1;
    std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                            : ~static_cast<std::uint64_t>(v) + 1;  // handles INT64_MIN
    limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    if (m >> 32) limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
}

int BigInt::compare_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = compare_mag(a, b);
    return a.sign_ >= 0 ? c : -c;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b, int sign) {
    BigInt r;
    r.sign_ = sign;
    const auto& x = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& y = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    r.limbs_.resize(x.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0u);
        r.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r.limbs_[x.size()] = static_cast<std::uint32_t>(carry);
    r.trim();
    return r;
}

// precondition: |a| >= |b|
BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b, int sign) {
    BigInt r;
    r.sign_ = sign;
    r.limbs_.resize(a.limbs_.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                         (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
        if (d < 0) { d += (std::int64_t{1} << 32); borrow = 1; } else { borrow = 0; }
        r.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    r.trim();
    return r;
}

std::uint64_t BigInt::mag_u64() const {
    std::uint64_t m = limbs_.empty() ? 0 : limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    return m;
}

BigInt BigInt::from_mag_u64(std::uint64_t m, int sign) {
    BigInt r;
    if (m == 0 || sign == 0) return r;
    r.sign_ = sign;
    r.limbs_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
    if (m >> 32) r.limbs_.push_back(static_cast<std::uint32_t>(m >> 32));
    return r;
}

std::size_t BigInt::trailing_zero_bits() const {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] == 0) { bits += 32; continue; }
        return bits + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
    }
    return bits;
}

void BigInt::shr_inplace(std::size_t bits) {
    if (is_zero() || bits == 0) return;
    const std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) { limbs_.clear(); sign_ = 0; return; }
    const std::size_t n = limbs_.size() - limb_shift;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
        std::uint64_t hi = 0;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            hi = static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        limbs_[i] = static_cast<std::uint32_t>((lo | hi) & 0xffffffffu);
    }
    limbs_.resize(n);
    trim();
}

void BigInt::shl1_inplace() {
    if (is_zero()) return;
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint32_t next = limbs_[i] >> 31;
        limbs_[i] = (limbs_[i] << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigInt::sub_mag_inplace(BigInt& x, const BigInt& y) {
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < x.limbs_.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(x.limbs_[i]) - borrow -
                         (i < y.limbs_.size() ? static_cast<std::int64_t>(y.limbs_[i]) : 0);
        if (d < 0) { d += (std::int64_t{1} << 32); borrow = 1; } else { borrow = 0; }
        x.limbs_[i] = static_cast<std::uint32_t>(d);
    }
    x.trim();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.fits_u64() && b.fits_u64()) {
        const std::uint64_t am = a.mag_u64(), bm = b.mag_u64();
        if (a.sign_ == b.sign_) {
            unsigned __int128 s = static_cast<unsigned __int128>(am) + bm;
            BigInt r;
            r.sign_ = a.sign_;
            while (s) {
                r.limbs_.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
                s >>= 32;
            }
            return r;
        }
        if (am == bm) return BigInt();
        return am > bm ? BigInt::from_mag_u64(am - bm, a.sign_)
                       : BigInt::from_mag_u64(bm - am, b.sign_);
    }
    if (a.sign_ == b.sign_) return BigInt::add_mag(a, b, a.sign_);
    int c = BigInt::compare_mag(a, b);
    if (c == 0) return BigInt();
    return c > 0 ? BigInt::sub_mag(a, b, a.sign_) : BigInt::sub_mag(b, a, b.sign_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    if (a.fits_u64() && b.fits_u64()) {
        unsigned __int128 p = static_cast<unsigned __int128>(a.mag_u64()) * b.mag_u64();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        while (p) {
            r.limbs_.push_back(static_cast<std::uint32_t>(p & 0xffffffffu));
            p >>= 32;
        }
        return r;
    }
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a.limbs_[i];
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] + carry + ai * b.limbs_[j];
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

std::size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    std::uint32_t top = limbs_.back();
    std::size_t bits = (limbs_.size() - 1) * 32;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

bool BigInt::test_bit(std::size_t i) const {
    std::size_t limb = i / 32, off = i % 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> off) & 1u;
}

bool BigInt::is_even() const {
    return limbs_.empty() || (limbs_[0] & 1u) == 0;
}

BigInt BigInt::shifted_left(std::size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(limbs_[i]) << bit_shift;
        r.limbs_[i + limb_shift] |= static_cast<std::uint32_t>(v & 0xffffffffu);
        r.limbs_[i + limb_shift + 1] |= static_cast<std::uint32_t>(v >> 32);
    }
    r.trim();
    return r;
}

BigInt BigInt::shifted_right(std::size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    std::size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < r.limbs_.size(); ++i) {
        std::uint64_t lo = limbs_[i + limb_shift] >> bit_shift;
        std::uint64_t hi = 0;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            hi = static_cast<std::uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        r.limbs_[i] = static_cast<std::uint32_t>((lo | hi) & 0xffffffffu);
    }
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& out_quot, BigInt& out_rem) {
    if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (a.is_zero()) { out_quot = BigInt(); out_rem = BigInt(); return; }
    if (compare_mag(a, b) < 0) { out_quot = BigInt(); out_rem = a; return; }

    if (a.fits_u64() && b.fits_u64()) {
        const std::uint64_t am = a.mag_u64(), bm = b.mag_u64();
        out_quot = from_mag_u64(am / bm, a.sign_ * b.sign_);
        out_rem = from_mag_u64(am % bm, a.sign_);
        return;
    }
    if (b.limbs_.size() == 1) {
        // single-limb fast path
        std::uint64_t d = b.limbs_[0];
        BigInt q;
        q.limbs_.assign(a.limbs_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a.limbs_[i];
            q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q.sign_ = 1;
        q.trim();
        out_quot = std::move(q);
        out_rem = BigInt(static_cast<std::int64_t>(rem));
    } else {
        // bit-by-bit long division, in place; adequate at this project's magnitudes
        BigInt bm = b.abs();
        BigInt rem, quot;
        rem.limbs_.reserve(bm.limbs_.size() + 1);
        quot.limbs_.assign(a.limbs_.size(), 0);
        for (std::size_t i = a.bit_length(); i-- > 0;) {
            rem.shl1_inplace();
            if (a.test_bit(i)) {
                if (rem.limbs_.empty()) { rem.limbs_.push_back(1u); rem.sign_ = 1; }
                else rem.limbs_[0] |= 1u;
            }
            if (!rem.limbs_.empty()) rem.sign_ = 1;
            if (compare_mag(rem, bm) >= 0) {
                sub_mag_inplace(rem, bm);
                quot.limbs_[i / 32] |= (1u << (i % 32));
            }
        }
        quot.sign_ = 1;
        quot.trim();
        out_quot = std::move(quot);
        out_rem = std::move(rem);
    }
    // truncated division sign rules
    if (!out_quot.is_zero()) out_quot.sign_ = a.sign_ * b.sign_;
    if (!out_rem.is_zero()) out_rem.sign_ = a.sign_;
}

BigInt BigInt::div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    if (a.fits_u64() && b.fits_u64())
        return from_mag_u64(std::gcd(a.mag_u64(), b.mag_u64()), 1);
    // binary gcd with bulk shifts, allocation-free inner loop
    BigInt x = a.abs(), y = b.abs();
    const std::size_t tzx = x.trailing_zero_bits(), tzy = y.trailing_zero_bits();
    const std::size_t shift = std::min(tzx, tzy);
    x.shr_inplace(tzx);
    y.shr_inplace(tzy);
    for (;;) {
        if (x.fits_u64() && y.fits_u64()) {
            BigInt g = from_mag_u64(std::gcd(x.mag_u64(), y.mag_u64()), 1);
            return g.shifted_left(shift);
        }
        if (compare_mag(x, y) > 0) x.limbs_.swap(y.limbs_);
        sub_mag_inplace(y, x);  // both odd, so y - x is even
        if (y.limbs_.empty()) { y.sign_ = 0; return x.shifted_left(shift); }
        y.shr_inplace(y.trailing_zero_bits());
    }
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1u) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

std::optional<std::int64_t> BigInt::to_int64() const {
    if (limbs_.size() > 2) return std::nullopt;
    std::uint64_t m = 0;
    if (limbs_.size() >= 1) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (sign_ >= 0) {
        if (m > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
        return static_cast<std::int64_t>(m);
    }
    if (m > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
    return -static_cast<std::int64_t>(m - 1) - 1;
}

BigInt BigInt::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') { neg = s[0] == '-'; i = 1; }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    const BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in '" + std::string(s) + "'");
        r = r * ten + BigInt(s[i] - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> groups;  // base 10^9, little-endian
    BigInt cur = abs();
    const BigInt billion(1000000000);
    while (!cur.is_zero()) {
        BigInt q, r;
        divmod(cur, billion, q, r);
        groups.push_back(r.is_zero() ? 0u : r.limbs_[0]);
        cur = std::move(q);
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(groups.back());
    char buf[16];
    for (std::size_t i = groups.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", groups[i]);
        s += buf;
    }
    return s;
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    std::size_t bl = bit_length();
    double v;
    int exp = 0;
    if (bl <= 64) {
        std::uint64_t m = limbs_[0];
        if (limbs_.size() > 1) m |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        v = static_cast<double>(m);
    } else {
        BigInt top = shifted_right(bl - 64);
        std::uint64_t m = top.limbs_[0];
        if (top.limbs_.size() > 1) m |= static_cast<std::uint64_t>(top.limbs_[1]) << 32;
        v = static_cast<double>(m);
        exp = static_cast<int>(bl - 64);
    }
    return std::ldexp(sign_ < 0 ? -v : v, exp);
}

BigInt BigInt::isqrt(const BigInt& a) {
    if (a.sign() < 0) throw std::invalid_argument("BigInt: isqrt of negative");
    if (a.is_zero()) return BigInt();
    std::size_t bl = a.bit_length();
    BigInt x = BigInt(1).shifted_left(bl / 2 + 1);  // x > sqrt(a)
    // Newton iteration x <- (x + a/x) / 2, monotone decreasing once above root
    while (true) {
        BigInt y = (x + div(a, x)).shifted_right(1);
        if (compare(y, x) >= 0) break;
        x = y;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

void Rational::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (den_.sign() < 0) { num_ = -num_; den_ = -den_; }
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    BigInt g = BigInt::gcd(num_, den_);
    if (g == BigInt(1)) return;
    std::size_t tz = g.trailing_zero_bits();
    if (g.bit_length() == tz + 1) {  // power of two: reduce by shifting
        num_ = num_.shifted_right(tz);
        den_ = den_.shifted_right(tz);
        return;
    }
    num_ = BigInt::div(num_, g);
    den_ = BigInt::div(den_, g);
}

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        return Rational(BigInt::from_decimal(s.substr(0, slash)),
                        BigInt::from_decimal(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos)
        return Rational(BigInt::from_decimal(s), BigInt(1));
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (frac.empty()) throw std::invalid_argument("Rational: trailing dot in '" + std::string(s) + "'");
    digits += frac;  // sign carries through the concatenated digit string
    BigInt n = BigInt::from_decimal(digits);
    BigInt d = BigInt::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return Rational(std::move(n), std::move(d));
}

Rational Rational::pow10(int e) {
    BigInt p = BigInt::pow(BigInt(10), static_cast<unsigned>(e < 0 ? -e : e));
    return e >= 0 ? Rational(p, BigInt(1)) : Rational(BigInt(1), p);
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
    if (a.num_.sign() != b.num_.sign())
        return a.num_.sign() < b.num_.sign() ? -1 : 1;
    if (a.num_.fits_u64() && b.num_.fits_u64() && a.den_.fits_u64() &&
        b.den_.fits_u64()) {
        const unsigned __int128 lhs =
            static_cast<unsigned __int128>(a.num_.mag_u64()) * b.den_.mag_u64();
        const unsigned __int128 rhs =
            static_cast<unsigned __int128>(b.num_.mag_u64()) * a.den_.mag_u64();
        if (lhs == rhs) return 0;
        const bool less = lhs < rhs;
        return (a.num_.sign() >= 0) == less ? -1 : 1;
    }
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_);
}

BigInt Rational::floor() const {
    BigInt q, r;
    BigInt::divmod(num_, den_, q, r);
    if (num_.sign() < 0 && !r.is_zero()) q = q - BigInt(1);
    return q;
}

Rational Rational::round_down_dyadic(unsigned frac_bits) const {
    BigInt scaled = Rational(num_.shifted_left(frac_bits), den_).floor();
    return Rational(std::move(scaled), BigInt(1).shifted_left(frac_bits));
}

std::optional<Rational> Rational::exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    BigInt rn = BigInt::isqrt(x.num_);
    if (!(rn * rn == x.num_)) return std::nullopt;
    BigInt rd = BigInt::isqrt(x.den_);
    if (!(rd * rd == x.den_)) return std::nullopt;
    return Rational(std::move(rn), std::move(rd));
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

std::string Rational::to_decimal_string(unsigned digits) const {
    BigInt scale = BigInt::pow(BigInt(10), digits);
    BigInt q = BigInt::div(num_.abs() * scale, den_);
    std::string s = q.to_decimal();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (sign() < 0) s.insert(0, "-");
    return s;
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

}  // namespace hyperfrac
