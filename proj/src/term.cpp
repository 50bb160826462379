#include "dgcat/term.hpp"

#include <ostream>

#include "dgcat/error.hpp"

namespace dgcat {

Term::Term(ObjectId source, ObjectId target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree)
{
}

Term Term::identity(const ObjectId& object, const Scalar& coefficient)
{
    Term t(object, object, 0);
    t.add({}, coefficient);
    return t;
}

Term Term::path(ObjectId source, ObjectId target, int degree, Word word, const Scalar& coefficient)
{
    if (word.empty() && source != target)
        throw DgError(ErrorCode::EndpointMismatch, "identity path from " + source.str() + " to " + target.str());
    Term t(std::move(source), std::move(target), degree);
    t.add(word, coefficient);
    return t;
}

Scalar Term::coefficient(const Word& word) const
{
    auto it = support_.find(word);
    return it == support_.end() ? Scalar(0) : it->second;
}

void Term::add(const Word& word, const Scalar& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = support_.try_emplace(word, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) support_.erase(it);
    }
}

void Term::check_parallel(const Term& other) const
{
    if (source_ != other.source_ || target_ != other.target_)
        throw DgError(ErrorCode::EndpointMismatch, "adding terms " + source_.str() + "->" + target_.str() + " and " +
                                                       other.source_.str() + "->" + other.target_.str());
    if (!is_zero() && !other.is_zero() && degree_ != other.degree_)
        throw DgError(ErrorCode::DegreeMismatch, "adding terms of degrees " + std::to_string(degree_) + " and " + std::to_string(other.degree_));
}

Term& Term::operator+=(const Term& other)
{
    check_parallel(other);
    if (is_zero()) degree_ = other.degree_;
    for (const auto& [w, c] : other.support_) add(w, c);
    return *this;
}

Term& Term::operator-=(const Term& other)
{
    check_parallel(other);
    if (is_zero()) degree_ = other.degree_;
    for (const auto& [w, c] : other.support_) add(w, -c);
    return *this;
}

Term& Term::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        support_.clear();
        return *this;
    }
    for (auto it = support_.begin(); it != support_.end();) {
        it->second *= c;
        if (it->second.is_zero())
            it = support_.erase(it);
        else
            ++it;
    }
    return *this;
}

Term Term::operator-() const
{
    Term r = *this;
    r *= Scalar(-1);
    return r;
}

bool operator==(const Term& a, const Term& b)
{
    if (a.source_ != b.source_ || a.target_ != b.target_) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.support_ == b.support_;
}

Term compose(const Term& g, const Term& f)
{
    if (f.target() != g.source())
        throw DgError(ErrorCode::EndpointMismatch, "cannot compose " + g.source().str() + "->" + g.target().str() + " after " +
                                                       f.source().str() + "->" + f.target().str());
    Term r(f.source(), g.target(), f.degree() + g.degree());
    for (const auto& [wf, cf] : f.support()) {
        for (const auto& [wg, cg] : g.support()) {
            Word w;
            w.reserve(wf.size() + wg.size());
            w.insert(w.end(), wf.begin(), wf.end());
            w.insert(w.end(), wg.begin(), wg.end());
            r.add(w, cf * cg);
        }
    }
    return r;
}

Term compose(std::initializer_list<const Term*> outer_to_inner)
{
    auto it = std::rbegin(outer_to_inner);
    Term acc = **it;
    for (++it; it != std::rend(outer_to_inner); ++it) acc = compose(**it, acc);
    return acc;
}

std::string format_word(const Word& word, const ObjectId& source)
{
    if (word.empty()) return "id(" + quoted(source.str()) + ")";
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += quoted(*it);
    }
    return out;
}

std::string to_string(const Term& term)
{
    if (term.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : term.support()) {
        bool negative = c.modulus() == 0 && sgn(c.value()) < 0;
        std::string coeff = negative && !first ? (-c).str() : c.str();
        if (!first) out += negative ? " - " : " + ";
        out += coeff + "*" + format_word(w, term.source());
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& term)
{
    return os << to_string(term);
}

}  // namespace dgcat
