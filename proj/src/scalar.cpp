#include "dgcat/scalar.hpp"

#include <ostream>

#include "dgcat/error.hpp"

namespace dgcat {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

Scalar::Scalar(long value) : value_(value) {}

Scalar::Scalar(mpq_class value, std::uint32_t modulus) : value_(std::move(value)), modulus_(modulus)
{
    value_.canonicalize();
    reduce();
}

Scalar Scalar::parse(std::string_view text)
{
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw DgError(ErrorCode::SyntaxError, "malformed rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw DgError(ErrorCode::SyntaxError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(q);
}

void Scalar::reduce()
{
    if (modulus_ == 0) return;
    mpz_class p = modulus_;
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
        throw DgError(ErrorCode::NotInRing, "denominator of " + value_.get_str() + " is not invertible mod " + p.get_str());
    mpz_class r = (num * inv) % p;
    if (r < 0) r += p;
    value_ = mpq_class(r);
}

void Scalar::unify(const Scalar& other)
{
    if (other.modulus_ == modulus_ || other.modulus_ == 0) return;
    if (modulus_ != 0)
        throw DgError(ErrorCode::RingMismatch, "coefficients from Z/" + std::to_string(modulus_) + " and Z/" + std::to_string(other.modulus_));
    modulus_ = other.modulus_;
    reduce();
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.value_ = -r.value_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    unify(other);
    if (modulus_ != 0 && other.modulus_ == 0) {
        Scalar o(other.value_, modulus_);
        value_ += o.value_;
    } else {
        value_ += other.value_;
    }
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other)
{
    return *this += -other;
}

Scalar& Scalar::operator*=(const Scalar& other)
{
    unify(other);
    if (modulus_ != 0 && other.modulus_ == 0) {
        Scalar o(other.value_, modulus_);
        value_ *= o.value_;
    } else {
        value_ *= other.value_;
    }
    reduce();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.modulus_ == b.modulus_) return a.value_ == b.value_;
    if (a.modulus_ != 0 && b.modulus_ != 0) return false;
    std::uint32_t m = a.modulus_ ? a.modulus_ : b.modulus_;
    return Scalar(a.value_, m).value_ == Scalar(b.value_, m).value_;
}

std::string Scalar::str() const
{
    return value_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.str();
}

CoefficientRing CoefficientRing::modular(std::uint32_t prime)
{
    if (!is_prime(prime))
        throw DgError(ErrorCode::NotInRing, "modulus " + std::to_string(prime) + " is not prime");
    return CoefficientRing(Kind::Modular, prime);
}

CoefficientRing CoefficientRing::parse(std::string_view text)
{
    if (text == "QQ") return rationals();
    if (text == "ZZ") return integers();
    if (text.substr(0, 3) == "ZZ/") {
        std::string digits(text.substr(3));
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 10)
            return modular(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw DgError(ErrorCode::SyntaxError, "unknown coefficient ring '" + std::string(text) + "'");
}

Scalar CoefficientRing::element(const Scalar& literal) const
{
    switch (kind_) {
    case Kind::Rationals:
        if (literal.modulus() != 0) break;
        return literal;
    case Kind::Integers:
        if (literal.modulus() != 0 || !literal.is_integer()) break;
        return literal;
    case Kind::Modular:
        if (literal.modulus() != 0 && literal.modulus() != modulus_) break;
        return Scalar(literal.value(), modulus_);
    }
    throw DgError(ErrorCode::NotInRing, literal.str() + " is not an element of " + str());
}

bool CoefficientRing::contains(const Scalar& s) const
{
    switch (kind_) {
    case Kind::Rationals: return s.modulus() == 0;
    case Kind::Integers: return s.modulus() == 0 && s.is_integer();
    case Kind::Modular: return s.modulus() == modulus_ || (s.modulus() == 0 && s.is_integer() && s.value() >= 0 && s.value() < modulus_);
    }
    return false;
}

bool CoefficientRing::is_unit(const Scalar& s) const
{
    if (s.is_zero()) return false;
    if (kind_ == Kind::Integers) return s.value() == 1 || s.value() == -1;
    if (kind_ == Kind::Modular) return !element(s).is_zero();
    return true;
}

Scalar CoefficientRing::inverse(const Scalar& s) const
{
    if (!is_unit(s))
        throw DgError(ErrorCode::NotAUnit, s.str() + " is not a unit in " + str());
    if (kind_ == Kind::Modular) {
        Scalar e = element(s);
        mpz_class inv;
        mpz_class v = e.value().get_num();
        mpz_class p = modulus_;
        mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return Scalar(mpq_class(inv), modulus_);
    }
    return Scalar(mpq_class(1) / s.value());
}

std::string CoefficientRing::str() const
{
    switch (kind_) {
    case Kind::Rationals: return "QQ";
    case Kind::Integers: return "ZZ";
    case Kind::Modular: return "ZZ/" + std::to_string(modulus_);
    }
    return "QQ";
}

}  // namespace dgcat
