#include "dgcat/names.hpp"

#include <array>
#include <cctype>
#include <ostream>

namespace dgcat {

namespace {

constexpr std::array<std::string_view, 14> keywords = {
    "category", "object", "gen", "deg", "d", "localize", "localized", "as",
    "functor", "span", "spanmap", "id", "over", "left",
};

bool balanced_outer_parens(std::string_view s)
{
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && i + 1 < s.size()) return false;
    }
    return depth == 0;
}

}  // namespace

bool is_plain_identifier(std::string_view name)
{
    if (name.empty()) return false;
    auto c0 = static_cast<unsigned char>(name[0]);
    if (!std::isalpha(c0) && c0 != '_') return false;
    for (char ch : name) {
        auto c = static_cast<unsigned char>(ch);
        if (!std::isalnum(c) && c != '_') return false;
    }
    return true;
}

std::string atomic_name(std::string_view name)
{
    if (is_plain_identifier(name)) return std::string(name);
    return "(" + std::string(name) + ")";
}

std::string tagged_name(std::string_view name, int tag)
{
    return atomic_name(name) + "^" + std::to_string(tag);
}

std::string derived_name(std::string_view prefix, std::string_view name)
{
    return std::string(prefix) + "." + atomic_name(name);
}

bool needs_quoting(std::string_view name)
{
    if (!is_plain_identifier(name)) return true;
    for (auto kw : keywords)
        if (kw == name) return true;
    return name == "right" || name == "middle";
}

std::string quoted(std::string_view name)
{
    if (!needs_quoting(name)) return std::string(name);
    return "`" + std::string(name) + "`";
}

ObjectId::ObjectId(std::string name) : name_(std::move(name)) {}

ObjectId ObjectId::tagged(const ObjectId& base, int tag)
{
    return ObjectId(tagged_name(base.name_, tag));
}

std::optional<int> ObjectId::copy_tag() const
{
    auto caret = name_.rfind('^');
    if (caret == std::string::npos || caret + 1 == name_.size()) return std::nullopt;
    std::string digits = name_.substr(caret + 1);
    if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) return std::nullopt;
    int tag = std::stoi(digits);
    std::string head = name_.substr(0, caret);
    std::string inner = balanced_outer_parens(head) ? head.substr(1, head.size() - 2) : head;
    if (tagged_name(inner, tag) != name_) return std::nullopt;
    return tag;
}

std::string ObjectId::base() const
{
    if (!copy_tag()) return name_;
    std::string head = name_.substr(0, name_.rfind('^'));
    return balanced_outer_parens(head) ? head.substr(1, head.size() - 2) : head;
}

std::ostream& operator<<(std::ostream& os, const ObjectId& id)
{
    return os << id.str();
}

}  // namespace dgcat
