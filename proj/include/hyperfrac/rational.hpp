#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <optional>

namespace hyperfrac {

namespace detail {

/// Limb storage with a small inline buffer. Values up to 256 bits (the
/// overwhelming majority in this toolkit) never touch the heap.
class LimbVec {
public:
    static constexpr std::size_t kInline = 8;

    LimbVec() = default;
    LimbVec(const LimbVec& o) { assign_from(o); }
    LimbVec(LimbVec&& o) noexcept { steal_from(o); }
    LimbVec& operator=(const LimbVec& o) {
        if (this != &o) { release(); assign_from(o); }
        return *this;
    }
    LimbVec& operator=(LimbVec&& o) noexcept {
        if (this != &o) { release(); steal_from(o); }
        return *this;
    }
    ~LimbVec() { release(); }

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::uint32_t operator[](std::size_t i) const { return data()[i]; }
    std::uint32_t& operator[](std::size_t i) { return data()[i]; }
    std::uint32_t back() const { return data()[size_ - 1]; }

    void clear() { size_ = 0; }
    void pop_back() { --size_; }

    void push_back(std::uint32_t v) {
        if (size_ == cap_) grow(size_ + 1);
        data()[size_++] = v;
    }

    void resize(std::size_t n, std::uint32_t fill = 0) {
        if (n > cap_) grow(n);
        for (std::size_t i = size_; i < n; ++i) data()[i] = fill;
        size_ = n;
    }

    void assign(std::size_t n, std::uint32_t fill) {
        if (n > cap_) grow(n);
        for (std::size_t i = 0; i < n; ++i) data()[i] = fill;
        size_ = n;
    }

    void reserve(std::size_t n) {
        if (n > cap_) grow(n);
    }

    void swap(LimbVec& o) {
        LimbVec tmp(std::move(o));
        o = std::move(*this);
        *this = std::move(tmp);
    }

    bool operator==(const LimbVec& o) const {
        if (size_ != o.size_) return false;
        for (std::size_t i = 0; i < size_; ++i)
            if (data()[i] != o.data()[i]) return false;
        return true;
    }

private:
    std::uint32_t inline_[kInline];
    std::uint32_t* heap_ = nullptr;
    std::uint32_t size_ = 0;
    std::uint32_t cap_ = kInline;

    std::uint32_t* data() { return heap_ ? heap_ : inline_; }
    const std::uint32_t* data() const { return heap_ ? heap_ : inline_; }

    void grow(std::size_t need) {
        std::size_t ncap = cap_ * 2;
        if (ncap < need) ncap = need;
        auto* nd = new std::uint32_t[ncap];
        for (std::size_t i = 0; i < size_; ++i) nd[i] = data()[i];
        release();
        heap_ = nd;
        cap_ = static_cast<std::uint32_t>(ncap);
    }

    void release() {
        delete[] heap_;
        heap_ = nullptr;
        cap_ = kInline;
    }

    void assign_from(const LimbVec& o) {
        if (o.size_ > kInline) {
            heap_ = new std::uint32_t[o.size_];
            cap_ = o.size_;
        }
        size_ = o.size_;
        for (std::size_t i = 0; i < size_; ++i) data()[i] = o.data()[i];
    }

    void steal_from(LimbVec& o) {
        if (o.heap_) {
            heap_ = o.heap_;
            cap_ = o.cap_;
            size_ = o.size_;
            o.heap_ = nullptr;
            o.cap_ = kInline;
            o.size_ = 0;
        } else {
            size_ = o.size_;
            for (std::size_t i = 0; i < size_; ++i) inline_[i] = o.inline_[i];
            o.size_ = 0;
        }
    }
};

}  // namespace detail

/// Arbitrary-precision signed integer (sign-magnitude, base 2^32 limbs).
///
/// Only the operations the toolkit needs: ring arithmetic, comparisons,
/// truncated division, binary gcd, bit shifts, decimal conversion.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(std::int64_t v);

    static BigInt from_decimal(std::string_view digits);  // optional leading '-'

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// Truncated toward zero; rem has the dividend's sign.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quot, BigInt& rem);
    static BigInt div(const BigInt& a, const BigInt& b);

    static BigInt gcd(const BigInt& a, const BigInt& b);  // always >= 0
    static BigInt pow(const BigInt& base, unsigned exp);

    BigInt shifted_left(std::size_t bits) const;
    BigInt shifted_right(std::size_t bits) const;

    /// -1 / 0 / +1 as a < b, a == b, a > b.
    static int compare(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const { return compare(*this, o) == 0; }
    bool operator!=(const BigInt& o) const { return compare(*this, o) != 0; }
    bool operator<(const BigInt& o) const { return compare(*this, o) < 0; }
    bool operator<=(const BigInt& o) const { return compare(*this, o) <= 0; }
    bool operator>(const BigInt& o) const { return compare(*this, o) > 0; }
    bool operator>=(const BigInt& o) const { return compare(*this, o) >= 0; }

    std::size_t bit_length() const;  // 0 for zero
    bool test_bit(std::size_t i) const;
    bool is_even() const;
    std::size_t trailing_zero_bits() const;  // undefined for zero

    /// Fits in int64 (including sign)?
    std::optional<std::int64_t> to_int64() const;

    std::string to_decimal() const;
    double to_double() const;

    /// Integer square root of a nonnegative value: floor(sqrt(*this)).
    static BigInt isqrt(const BigInt& a);

private:
    friend class Rational;  // fast-path access in comparisons

    int sign_;                 // -1, 0, +1; 0 iff limbs_ empty
    detail::LimbVec limbs_;    // little-endian, no high zero limbs

    void trim();
    static int compare_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b, int sign);
    static BigInt sub_mag(const BigInt& a, const BigInt& b, int sign);  // |a| >= |b|

    // allocation-free helpers for the gcd/division hot loops
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t mag_u64() const;
    static BigInt from_mag_u64(std::uint64_t m, int sign);
    void shr_inplace(std::size_t bits);
    void shl1_inplace();
    static void sub_mag_inplace(BigInt& x, const BigInt& y);  // |x| >= |y|
};

/// Exact rational number. Canonical form: gcd(num, den) == 1, den > 0,
/// zero is 0/1. All theorem-verification arithmetic runs on these; doubles
/// appear only in rendering.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);
    Rational(BigInt n, BigInt d);

    /// Accepts "p/q", "p", and decimal strings like "-0.99" or "1.5".
    static Rational parse(std::string_view s);

    /// 10^e for any integer e (negative allowed).
    static Rational pow10(int e);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    static int compare(const Rational& a, const Rational& b);

    bool operator==(const Rational& o) const { return compare(*this, o) == 0; }
    bool operator!=(const Rational& o) const { return compare(*this, o) != 0; }
    bool operator<(const Rational& o) const { return compare(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return compare(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return compare(*this, o) > 0; }
    bool operator>=(const Rational& o) const { return compare(*this, o) >= 0; }

    /// floor(x * 2^frac_bits) / 2^frac_bits — dyadic round toward -inf.
    Rational round_down_dyadic(unsigned frac_bits) const;

    BigInt floor() const;

    /// Exact square root if the value is a perfect rational square.
    static std::optional<Rational> exact_sqrt(const Rational& x);

    /// Canonical "p" (den 1) or "p/q" form; parse() round-trips it.
    std::string to_string() const;

    /// Human-facing decimal, truncated toward zero after `digits` places.
    std::string to_decimal_string(unsigned digits) const;

    double to_double() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace hyperfrac
