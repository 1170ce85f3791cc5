#include "zonelab/rational.hpp"

#include <cctype>
#include <ostream>

namespace zonelab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SingularTriple: return "SingularTriple";
        case ErrorCode::ParallelPlanes: return "ParallelPlanes";
        case ErrorCode::ParallelLines: return "ParallelLines";
        case ErrorCode::NotGeneralPosition: return "NotGeneralPosition";
        case ErrorCode::BoxTooSmall: return "BoxTooSmall";
        case ErrorCode::BoxGenericityViolation: return "BoxGenericityViolation";
        case ErrorCode::DegenerateQuery: return "DegenerateQuery";
        case ErrorCode::DegenerateInstance: return "DegenerateInstance";
        case ErrorCode::UnknownPlane: return "UnknownPlane";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::GenerationExhausted: return "GenerationExhausted";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::AssertionFailure: return "AssertionFailure";
    }
    return "UnknownError";
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && rest.front() == '-') {
        negative = true;
        rest.remove_prefix(1);
    }
    std::string_view num_part = rest;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num_part = rest.substr(0, slash);
        den_part = rest.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw Error(ErrorCode::ParseError,
                    "bad rational literal '" + std::string(text) + "'");
    }
    BigInt num(std::string(num_part), 10);
    BigInt den = has_den ? BigInt(std::string(den_part), 10) : BigInt(1);
    if (den == 0) {
        throw Error(ErrorCode::ParseError,
                    "zero denominator in '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace zonelab
