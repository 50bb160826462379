#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgcat/category.hpp"
#include "dgcat/error.hpp"
#include "dgcat/functor.hpp"
#include "dgcat/hocolim.hpp"

namespace dgcat {

// Named entities of one kind, kept in declaration order.
template <typename T>
class NamedList {
public:
    struct Entry {
        std::string name;
        T value;
        std::optional<SourcePosition> position;
    };

    const std::vector<Entry>& entries() const { return entries_; }
    bool contains(std::string_view name) const { return find(name) != nullptr; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    const T* find(std::string_view name) const
    {
        for (const auto& e : entries_)
            if (e.name == name) return &e.value;
        return nullptr;
    }
    const Entry* find_entry(std::string_view name) const
    {
        for (const auto& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }
    void add(std::string name, T value, std::optional<SourcePosition> position = std::nullopt)
    {
        if (contains(name)) {
            DgError err(ErrorCode::DuplicateName, "name " + name + " is already defined", name);
            if (position) err.at(*position);
            throw err;
        }
        entries_.push_back({std::move(name), std::move(value), position});
    }

private:
    std::vector<Entry> entries_;
};

struct Workspace {
    NamedList<CategoryPtr> categories;
    NamedList<DgFunctor> functors;
    NamedList<Span> spans;
    NamedList<SpanMorphism> span_morphisms;

    const CategoryPtr& category(std::string_view name) const;
    const DgFunctor& functor(std::string_view name) const;
    const Span& span(std::string_view name) const;
    const SpanMorphism& span_morphism(std::string_view name) const;

    // Name under which a category is stored: the same object first, then a
    // structurally equal one.
    std::optional<std::string> name_of(const CategoryPtr& cat) const;
    std::optional<std::string> name_of(const DgFunctor& f) const;
    std::optional<std::string> name_of(const Span& x) const;

    // Adds everything from `other`; a name defined in both is an error.
    void merge(const Workspace& other);
};

Workspace parse(std::string_view text);

// Parses one expression against `cat`. The endpoints are needed only to give
// `0` a type; without them a zero expression is rejected.
struct TermType {
    ObjectId source;
    ObjectId target;
    int degree = 0;
};
Term parse_term(const DgCategory& cat, std::string_view text, const std::optional<TermType>& expected = std::nullopt);

// Canonical text. Functors, spans and span maps refer to categories and
// functors by their names in the workspace.
std::string serialize(const Workspace& ws);
std::string serialize_category(std::string_view name, const DgCategory& cat);
std::string serialize_term(const Term& term);

}  // namespace dgcat
