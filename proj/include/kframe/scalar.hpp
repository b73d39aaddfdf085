#ifndef KFRAME_SCALAR_HPP
#define KFRAME_SCALAR_HPP

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include <kframe/error.hpp>

namespace kframe
{

using BigInt = boost::multiprecision::cpp_int;

/// One of the supported coefficient rings: Z, Q or Z/m (m >= 2).
class RingSpec
{
public:
    enum class Kind { Integers, Rationals, Mod };

    RingSpec() = default;

    static RingSpec integers() { return RingSpec(Kind::Integers, 0); }
    static RingSpec rationals() { return RingSpec(Kind::Rationals, 0); }
    static RingSpec mod(std::int64_t m)
    {
        if (m < 2) {
            throw InvalidModulus("modulus must be at least 2, got " + std::to_string(m));
        }
        return RingSpec(Kind::Mod, m);
    }

    Kind kind() const noexcept { return kind_; }
    std::int64_t modulus() const noexcept { return modulus_; }
    std::int64_t characteristic() const noexcept { return kind_ == Kind::Mod ? modulus_ : 0; }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::Integers:
            return "Z";
        case Kind::Rationals:
            return "Q";
        case Kind::Mod:
            break;
        }
        return "Z/" + std::to_string(modulus_);
    }

    friend bool operator==(const RingSpec &, const RingSpec &) = default;

private:
    RingSpec(Kind k, std::int64_t m) : kind_(k), modulus_(m) {}

    Kind kind_ = Kind::Integers;
    std::int64_t modulus_ = 0;
};

inline std::ostream &operator<<(std::ostream &os, const RingSpec &r) { return os << r.to_string(); }

/// Parses `Z | Q | Z/<m>`.
inline RingSpec ring_from_string(std::string_view s)
{
    if (s == "Z") {
        return RingSpec::integers();
    }
    if (s == "Q") {
        return RingSpec::rationals();
    }
    if (s.size() > 2 && s.substr(0, 2) == "Z/") {
        auto digits = s.substr(2);
        std::int64_t m = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ParseError("malformed modulus in ring '" + std::string(s) + "'", 2);
        }
        return RingSpec::mod(m);
    }
    throw ParseError("expected Z, Q or Z/<m>, got '" + std::string(s) + "'", 0);
}

namespace detail
{

inline BigInt floor_mod(const BigInt &a, const BigInt &m)
{
    BigInt r = a % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

// Returns (g, x) with a*x = g (mod b), g = gcd(a, b) >= 0.
inline std::pair<BigInt, BigInt> ext_gcd(BigInt a, BigInt b)
{
    BigInt x0 = 1, x1 = 0;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b;
        a = std::move(b);
        b = std::move(t);
        t = x0 - q * x1;
        x0 = std::move(x1);
        x1 = std::move(t);
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
    }
    return {a, x0};
}

} // namespace detail

/// An exact element of a RingSpec, kept in canonical form.
///
/// Integers and Z/m store den() == 1; Z/m values lie in [0, m). Rationals are
/// reduced with a positive denominator.
class Scalar
{
public:
    Scalar() = default;
    explicit Scalar(const RingSpec &ring) : ring_(ring) {}

    static Scalar from_integer(const RingSpec &ring, const BigInt &k)
    {
        Scalar s(ring);
        s.num_ = k;
        s.normalize();
        return s;
    }

    static Scalar from_integer(const RingSpec &ring, long long k) { return from_integer(ring, BigInt(k)); }

    /// num/den as an element of `ring`; throws NotInvertible when den is not a unit.
    static Scalar from_fraction(const RingSpec &ring, const BigInt &num, const BigInt &den)
    {
        if (den == 0) {
            throw NotInvertible("zero denominator");
        }
        if (ring.kind() == RingSpec::Kind::Rationals) {
            Scalar s(ring);
            s.num_ = num;
            s.den_ = den;
            s.normalize();
            return s;
        }
        return from_integer(ring, num) * from_integer(ring, den).inverse();
    }

    static Scalar one(const RingSpec &ring) { return from_integer(ring, 1); }

    const RingSpec &ring() const noexcept { return ring_; }
    const BigInt &num() const noexcept { return num_; }
    const BigInt &den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }

    Scalar &operator+=(const Scalar &o)
    {
        check_ring(o);
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }

    Scalar &operator-=(const Scalar &o)
    {
        check_ring(o);
        if (den_ == 1 && o.den_ == 1) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ *= o.den_;
        }
        normalize();
        return *this;
    }

    Scalar &operator*=(const Scalar &o)
    {
        check_ring(o);
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }

    Scalar operator-() const
    {
        Scalar s = *this;
        s.num_ = -s.num_;
        s.normalize();
        return s;
    }

    bool is_invertible() const
    {
        switch (ring_.kind()) {
        case RingSpec::Kind::Integers:
            return num_ == 1 || num_ == -1;
        case RingSpec::Kind::Rationals:
            return num_ != 0;
        case RingSpec::Kind::Mod:
            break;
        }
        return detail::ext_gcd(num_, BigInt(ring_.modulus())).first == 1;
    }

    Scalar inverse() const
    {
        if (!is_invertible()) {
            throw NotInvertible(to_string() + " is not invertible in " + ring_.to_string());
        }
        Scalar s(ring_);
        switch (ring_.kind()) {
        case RingSpec::Kind::Integers:
            s.num_ = num_;
            break;
        case RingSpec::Kind::Rationals:
            s.num_ = den_;
            s.den_ = num_;
            break;
        case RingSpec::Kind::Mod:
            s.num_ = detail::ext_gcd(num_, BigInt(ring_.modulus())).second;
            break;
        }
        s.normalize();
        return s;
    }

    std::string to_string() const
    {
        if (den_ == 1) {
            return num_.str();
        }
        return num_.str() + "/" + den_.str();
    }

    friend bool operator==(const Scalar &a, const Scalar &b)
    {
        return a.ring_ == b.ring_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void check_ring(const Scalar &o) const
    {
        if (!(ring_ == o.ring_)) {
            throw RingMismatch("ring mismatch: " + ring_.to_string() + " vs " + o.ring_.to_string());
        }
    }

    void normalize()
    {
        switch (ring_.kind()) {
        case RingSpec::Kind::Integers:
            break;
        case RingSpec::Kind::Mod:
            num_ = detail::floor_mod(num_, BigInt(ring_.modulus()));
            break;
        case RingSpec::Kind::Rationals: {
            if (den_ < 0) {
                num_ = -num_;
                den_ = -den_;
            }
            if (den_ != 1) {
                BigInt g = boost::multiprecision::gcd(num_, den_);
                if (g > 1) {
                    num_ /= g;
                    den_ /= g;
                }
            }
            if (num_ == 0) {
                den_ = 1;
            }
            break;
        }
        }
    }

    RingSpec ring_;
    BigInt num_ = 0;
    BigInt den_ = 1;
};

inline std::ostream &operator<<(std::ostream &os, const Scalar &s) { return os << s.to_string(); }

/// Parses an integer or `p/q` literal into `ring`.
inline Scalar parse_scalar(const RingSpec &ring, std::string_view text)
{
    auto parse_int = [&](std::string_view part, std::size_t offset) {
        std::size_t i = 0;
        if (!part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            throw ParseError("expected an integer in '" + std::string(text) + "'", offset);
        }
        for (std::size_t j = i; j < part.size(); ++j) {
            if (part[j] < '0' || part[j] > '9') {
                throw ParseError("unexpected character in '" + std::string(text) + "'", offset + j);
            }
        }
        std::string digits(part.substr(i));
        BigInt v(digits);
        return part[0] == '-' ? BigInt(-v) : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Scalar::from_integer(ring, parse_int(text, 0));
    }
    BigInt num = parse_int(text.substr(0, slash), 0);
    BigInt den = parse_int(text.substr(slash + 1), slash + 1);
    if (ring.kind() == RingSpec::Kind::Integers) {
        if (den == 0 || num % den != 0) {
            throw ParseError("non-integral value '" + std::string(text) + "' in Z", slash);
        }
        return Scalar::from_integer(ring, num / den);
    }
    return Scalar::from_fraction(ring, num, den);
}

} // namespace kframe

#endif
