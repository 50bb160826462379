#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dgcat {

// Exact coefficient. A modulus of 0 means characteristic zero; otherwise the
// value is kept reduced to an integer in [0, modulus). Mixing a plain value
// with a modular one reduces the plain operand first.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class value, std::uint32_t modulus = 0);

    static Scalar parse(std::string_view text);  // "p" or "p/q"

    const mpq_class& value() const { return value_; }
    std::uint32_t modulus() const { return modulus_; }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void unify(const Scalar& other);
    void reduce();

    mpq_class value_;
    std::uint32_t modulus_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

class CoefficientRing {
public:
    enum class Kind { Rationals, Integers, Modular };

    CoefficientRing() = default;
    static CoefficientRing rationals() { return CoefficientRing(Kind::Rationals, 0); }
    static CoefficientRing integers() { return CoefficientRing(Kind::Integers, 0); }
    static CoefficientRing modular(std::uint32_t prime);
    static CoefficientRing parse(std::string_view text);  // QQ, ZZ, ZZ/p

    Kind kind() const { return kind_; }
    std::uint32_t modulus() const { return modulus_; }

    // Converts a literal into the ring; throws NotInRing if it does not belong.
    Scalar element(const Scalar& literal) const;
    bool contains(const Scalar& s) const;
    bool is_unit(const Scalar& s) const;
    Scalar inverse(const Scalar& s) const;
    std::string str() const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::Rationals;
    std::uint32_t modulus_ = 0;
};

}  // namespace dgcat
