#pragma once

#include <doctest.h>

#include <string>

#include "dgcat/category.hpp"
#include "dgcat/error.hpp"

namespace dgcat::test {

// One object, no generators.
inline CategoryPtr point(const ObjectId& object = "K")
{
    return make_presentation({object}, {});
}

// One object L and a closed loop z of degree 1-n.
inline CategoryPtr loop_category(int n, const std::string& var = "z", const ObjectId& object = "L")
{
    return make_presentation({object}, {{var, object, object, 1 - n, {}}});
}

template <typename F>
ErrorCode error_code_of(F&& f)
{
    try {
        f();
    } catch (const DgError& e) {
        return e.code();
    }
    FAIL("expected a DgError");
    return ErrorCode::SyntaxError;
}

}  // namespace dgcat::test

#define CHECK_ERROR(expr, code) CHECK(::dgcat::test::error_code_of([&] { (void)(expr); }) == (code))
