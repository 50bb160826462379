#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dgcat/names.hpp"
#include "dgcat/scalar.hpp"
#include "dgcat/term.hpp"

namespace dgcat {

struct Generator {
    std::string name;
    ObjectId source;
    ObjectId target;
    int degree = 0;
    Term differential;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Records that names = {g', ĝ, ǧ, ḡ} were adjoined to invert `morphism`:
// dg' = 0, dĝ = 1 - g'g, dǧ = 1 - gg', dḡ = gĝ - ǧg.
struct LocalizedInverse {
    Term morphism;
    std::array<std::string, 4> names;

    friend bool operator==(const LocalizedInverse&, const LocalizedInverse&) = default;
};

// Semifree dg category given by objects and ordered generators.
class DgCategory {
public:
    // Builds the index only; see make_presentation for validation.
    DgCategory(std::vector<ObjectId> objects, std::vector<Generator> generators,
               CoefficientRing ring = CoefficientRing::rationals(), std::vector<LocalizedInverse> localized = {});

    const std::vector<ObjectId>& objects() const { return objects_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::vector<LocalizedInverse>& localized() const { return localized_; }
    const CoefficientRing& ring() const { return ring_; }

    bool has_object(const ObjectId& object) const;
    const Generator* find(std::string_view name) const;
    const Generator& generator(std::string_view name) const;  // throws UnknownGenerator
    std::size_t index_of(std::string_view name) const;
    bool has_generator(std::string_view name) const { return find(name) != nullptr; }

    Term gen(std::string_view name, const Scalar& coefficient = 1) const;
    Term id(const ObjectId& object) const;

    friend bool operator==(const DgCategory& a, const DgCategory& b);

private:
    std::vector<ObjectId> objects_;
    std::vector<Generator> generators_;
    CoefficientRing ring_;
    std::vector<LocalizedInverse> localized_;
    std::unordered_map<std::string, std::size_t> index_;
    std::map<ObjectId, std::size_t> object_index_;
};

using CategoryPtr = std::shared_ptr<const DgCategory>;

bool same_category(const CategoryPtr& a, const CategoryPtr& b);

// Validates names, endpoints, semifree order, degrees, coefficients and d² = 0.
CategoryPtr make_presentation(std::vector<ObjectId> objects, std::vector<Generator> generators,
                              CoefficientRing ring = CoefficientRing::rationals(),
                              std::vector<LocalizedInverse> localized = {});

// Checks that every letter exists, consecutive letters compose, the endpoints
// match and the degree is the sum of the letter degrees.
void validate_term(const DgCategory& cat, const Term& term);

// Rewrites every coefficient as an element of `ring`; throws NotInRing.
Term coerce(const Term& term, const CoefficientRing& ring);

// d(g∘f) = dg∘f + (-1)^{|g|} g∘df, extended linearly.
Term diff(const DgCategory& cat, const Term& term);
Term diff_generator(const DgCategory& cat, std::string_view name);

int word_degree(const DgCategory& cat, const Word& word);

struct DSquaredFailure {
    std::string generator;
    Term residual;
};

struct DSquaredReport {
    std::vector<DSquaredFailure> failures;
    bool passed() const { return failures.empty(); }
};

DSquaredReport check_d_squared(const DgCategory& cat);

// Finite slice of hom(source, target) in one degree: paths of length at most
// max_length, and the matrix of d into the next degree. A column is flagged
// when its differential leaves the truncation.
struct HomTruncation {
    std::vector<Word> basis;
    std::vector<Word> target_basis;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> d_matrix;  // (row, column)
    std::vector<bool> escapes;
};

std::vector<Word> enumerate_paths(const DgCategory& cat, const ObjectId& source, const ObjectId& target, int degree,
                                  std::size_t max_length);
HomTruncation hom_truncation(const DgCategory& cat, const ObjectId& source, const ObjectId& target, int degree,
                             std::size_t max_length);

}  // namespace dgcat
