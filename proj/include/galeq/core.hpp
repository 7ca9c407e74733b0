#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74's mixed rational/integer == recurses forever once C++20 adds
// reversed candidates. Exact non-template overloads win overload resolution.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace galeq {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Index of an embedding F -> C inside a CMFieldModel.
struct Emb {
    std::size_t index = 0;
    auto operator<=>(const Emb&) const = default;
};

enum class ErrorCode {
    invalid_cm_type,
    invalid_model,
    unreachable_point,
    ill_posed_model,
    precondition,
    not_algebraic,
    not_dominant,
    degenerate_input,
    wrong_side,
    namespace_mismatch,
    overflow,
    parse_error,
    invariant_violation,
    invalid_argument,
};

const char* to_string(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

inline Rational half(Int k) { return Rational(k, 2); }

/// "p/q", or just "p" for integers.
std::string format(const Rational& r);
std::string format(const std::vector<Rational>& v);
std::string format(const std::vector<Int>& v);

/// floor of a rational
Int floor(const Rational& r);
bool is_integer(const Rational& r);

// Overflow-checked integer arithmetic; throws ErrorCode::overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace galeq
