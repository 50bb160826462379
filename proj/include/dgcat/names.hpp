#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace dgcat {

// Naming scheme for constructed generators and objects:
//   tagged_name("f", 2)        -> "f^2"        copy r of f in a coproduct
//   derived_name("t", "f")     -> "t.f"        t-generator attached to f
//   composite names are parenthesized before decoration, so
//   tagged_name("t.A", 1) -> "(t.A)^1" and derived_name("t", "A^1") -> "t.(A^1)".
namespace prefix {
inline constexpr std::string_view t = "t";
inline constexpr std::string_view t_prime = "t'";
inline constexpr std::string_view t_hat = "th";
inline constexpr std::string_view t_check = "tc";
inline constexpr std::string_view t_bar = "tb";
inline constexpr std::string_view inv = "inv";
inline constexpr std::string_view inv_hat = "ih";
inline constexpr std::string_view inv_check = "ic";
inline constexpr std::string_view inv_bar = "ib";
}  // namespace prefix

bool is_plain_identifier(std::string_view name);
std::string atomic_name(std::string_view name);
std::string tagged_name(std::string_view name, int tag);
std::string derived_name(std::string_view prefix, std::string_view name);

// Whether the DSL needs backticks around this name.
bool needs_quoting(std::string_view name);
std::string quoted(std::string_view name);

class ObjectId {
public:
    ObjectId() = default;
    ObjectId(std::string name);  // NOLINT(google-explicit-constructor)
    ObjectId(const char* name) : ObjectId(std::string(name)) {}  // NOLINT

    static ObjectId tagged(const ObjectId& base, int tag);

    const std::string& str() const { return name_; }
    // Copy index if this object is a coproduct copy, with the untagged base.
    std::optional<int> copy_tag() const;
    std::string base() const;

    friend bool operator==(const ObjectId&, const ObjectId&) = default;
    friend auto operator<=>(const ObjectId&, const ObjectId&) = default;

private:
    std::string name_;
};

std::ostream& operator<<(std::ostream& os, const ObjectId& id);

}  // namespace dgcat

template <>
struct std::hash<dgcat::ObjectId> {
    std::size_t operator()(const dgcat::ObjectId& id) const noexcept { return std::hash<std::string>()(id.str()); }
};
