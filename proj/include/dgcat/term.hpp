#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dgcat/names.hpp"
#include "dgcat/scalar.hpp"

namespace dgcat {

// A path of generators in application order: {f, g} is g∘f. The empty word
// is the identity of the term's source.
using Word = std::vector<std::string>;

// Canonical order: shorter words first, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Homogeneous linear combination of parallel paths.
class Term {
public:
    using Support = std::map<Word, Scalar, WordLess>;

    Term() = default;
    Term(ObjectId source, ObjectId target, int degree);  // zero

    static Term zero(ObjectId source, ObjectId target, int degree) { return Term(std::move(source), std::move(target), degree); }
    static Term identity(const ObjectId& object, const Scalar& coefficient = 1);
    static Term path(ObjectId source, ObjectId target, int degree, Word word, const Scalar& coefficient = 1);

    const ObjectId& source() const { return source_; }
    const ObjectId& target() const { return target_; }
    int degree() const { return degree_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }
    Scalar coefficient(const Word& word) const;

    // Adds c·word; the word must be compatible with this term's endpoints.
    void add(const Word& word, const Scalar& c);

    Term& operator+=(const Term& other);
    Term& operator-=(const Term& other);
    Term& operator*=(const Scalar& c);
    Term operator-() const;

    friend Term operator+(Term a, const Term& b) { return a += b; }
    friend Term operator-(Term a, const Term& b) { return a -= b; }
    friend Term operator*(const Scalar& c, Term t) { return t *= c; }
    friend Term operator*(Term t, const Scalar& c) { return t *= c; }

    // Zero terms compare equal regardless of degree.
    friend bool operator==(const Term& a, const Term& b);

private:
    void check_parallel(const Term& other) const;

    ObjectId source_;
    ObjectId target_;
    int degree_ = 0;
    Support support_;
};

// g∘f.
Term compose(const Term& g, const Term& f);
Term compose(std::initializer_list<const Term*> outer_to_inner);

std::string format_word(const Word& word, const ObjectId& source);
std::string to_string(const Term& term);
std::ostream& operator<<(std::ostream& os, const Term& term);

}  // namespace dgcat
