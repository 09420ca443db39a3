#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "bondcover/errors.hpp"

namespace bondc {

// Vertex weights are exact rationals: the solver repeatedly subtracts layer
// weights and must decide "weight reached zero" without rounding.
using Weight = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "5", "2.5" or "7/12" into an exact rational.  Negative values are
// rejected (weights are non-negative).
inline Weight parse_weight(const std::string& text, int line = 0, int column = 0) {
    if (text.empty()) throw ParseError("empty weight", line, column);
    const auto bad = [&](const std::string& msg) { return ParseError(msg + ": '" + text + "'", line, column); };
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos) {
            const BigInt num(text.substr(0, slash));
            const BigInt den(text.substr(slash + 1));
            if (den <= 0) throw bad("non-positive denominator");
            if (num < 0) throw bad("negative weight");
            return Weight(num, den);
        }
        const auto dot = text.find('.');
        if (dot != std::string::npos) {
            const std::string whole = text.substr(0, dot);
            const std::string frac = text.substr(dot + 1);
            if (frac.empty()) throw bad("malformed decimal");
            BigInt num(whole.empty() ? "0" : whole);
            if (num < 0 || whole.find('-') != std::string::npos) throw bad("negative weight");
            BigInt den = 1;
            for (char ch : frac) {
                if (ch < '0' || ch > '9') throw bad("malformed decimal");
                num = num * 10 + (ch - '0');
                den *= 10;
            }
            return Weight(num, den);
        }
        const BigInt num(text);
        if (num < 0) throw bad("negative weight");
        return Weight(num);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw bad("malformed weight");
    }
}

// Canonical text form: integer when the denominator is 1, else "p/q".
inline std::string format_weight(const Weight& w) {
    if (denominator(w) == 1) return numerator(w).str();
    return numerator(w).str() + "/" + denominator(w).str();
}

inline double weight_to_double(const Weight& w) { return w.convert_to<double>(); }

}  // namespace bondc
