#include "galeq/core.hpp"

#include <sstream>

namespace galeq {

const char* to_string(ErrorCode c)
{
    switch (c) {
    case ErrorCode::invalid_cm_type: return "invalid_cm_type";
    case ErrorCode::invalid_model: return "invalid_model";
    case ErrorCode::unreachable_point: return "unreachable_point";
    case ErrorCode::ill_posed_model: return "ill_posed_model";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::not_algebraic: return "not_algebraic";
    case ErrorCode::not_dominant: return "not_dominant";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::wrong_side: return "wrong_side";
    case ErrorCode::namespace_mismatch: return "namespace_mismatch";
    case ErrorCode::overflow: return "overflow";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::invariant_violation: return "invariant_violation";
    case ErrorCode::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

std::string format(const Rational& r)
{
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1)
        os << '/' << r.denominator();
    return os.str();
}

template <class T>
static std::string format_list(const std::vector<T>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        if constexpr (std::is_same_v<T, Rational>)
            s += format(v[i]);
        else
            s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string format(const std::vector<Rational>& v) { return format_list(v); }
std::string format(const std::vector<Int>& v) { return format_list(v); }

Int floor(const Rational& r)
{
    Int q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0)
        --q;
    return q;
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

Int checked_add(Int a, Int b)
{
    Int out;
    if (__builtin_add_overflow(a, b, &out))
        raise(ErrorCode::overflow, "integer overflow in addition");
    return out;
}

Int checked_mul(Int a, Int b)
{
    Int out;
    if (__builtin_mul_overflow(a, b, &out))
        raise(ErrorCode::overflow, "integer overflow in multiplication");
    return out;
}

}  // namespace galeq
